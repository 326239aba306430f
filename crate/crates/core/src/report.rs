//! Serializable records of computed bases.
//!
//! One report captures the admissible monomials of one (t, n) instance,
//! either for the full degree or for a single weight-vector block, further
//! restricted to the zero part (some exponent zero), the positive part
//! (all exponents positive), or neither. Reports carry a content digest so
//! cache hits can be verified.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::{parse_weight_vector, Monomial, WeightVector};

/// Which slice of the degree a report covers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scope {
    Full,
    WeightBlock(WeightVector),
}

impl Scope {
    /// Token used in cache paths and in the JSON form: `full` or `w4-3-2-1-1`.
    pub fn token(&self) -> String {
        match self {
            Scope::Full => "full".to_string(),
            Scope::WeightBlock(w) => {
                let parts: Vec<String> =
                    w.entries().iter().map(|e| e.to_string()).collect();
                format!("w{}", parts.join("-"))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Scope> {
        if s == "full" {
            return Ok(Scope::Full);
        }
        let body = s
            .strip_prefix('w')
            .ok_or_else(|| Error::Parse(format!("bad scope token `{s}`")))?;
        Ok(Scope::WeightBlock(parse_weight_vector(
            &body.replace('-', ","),
        )?))
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl Serialize for Scope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.token())
    }
}

impl<'de> Deserialize<'de> for Scope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scope::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Restriction by zero exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    All,
    Zero,
    Positive,
}

impl Part {
    pub fn token(&self) -> &'static str {
        match self {
            Part::All => "all",
            Part::Zero => "zero",
            Part::Positive => "positive",
        }
    }

    pub fn parse(s: &str) -> Result<Part> {
        match s {
            "all" => Ok(Part::All),
            "zero" => Ok(Part::Zero),
            "positive" => Ok(Part::Positive),
            _ => Err(Error::Parse(format!("bad part token `{s}`"))),
        }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        match self {
            Part::All => true,
            Part::Zero => m.has_zero_exponent(),
            Part::Positive => m.is_positive(),
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// The admissible monomials of one (t, n, scope, part) computation, sorted
/// descending under the monomial order, plus provenance metadata.
#[derive(Clone, Serialize, Deserialize)]
pub struct BasisReport {
    pub t: u32,
    pub n: u64,
    pub scope: Scope,
    pub part: Part,
    pub strategy: String,
    pub dim: u64,
    pub admissibles: Vec<Monomial>,
    pub digest: String,
    pub engine_version: String,
    /// Wall-clock build time; in-memory metadata only, not persisted.
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl BasisReport {
    pub fn new(
        t: u32,
        n: u64,
        scope: Scope,
        part: Part,
        strategy: String,
        admissibles: Vec<Monomial>,
        elapsed_ms: u64,
    ) -> Self {
        let mut r = BasisReport {
            t,
            n,
            scope,
            part,
            strategy,
            dim: admissibles.len() as u64,
            admissibles,
            digest: String::new(),
            engine_version: crate::ENGINE_VERSION.to_string(),
            elapsed_ms,
        };
        r.digest = r.compute_digest();
        r
    }

    /// Digest over the mathematical content (not the strategy or version),
    /// so reports produced by different strategies compare equal.
    pub fn compute_digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.t.to_le_bytes());
        h.update(self.n.to_le_bytes());
        h.update(self.scope.token().as_bytes());
        h.update(self.part.token().as_bytes());
        h.update(self.dim.to_le_bytes());
        for m in &self.admissibles {
            for &e in m.exponents() {
                h.update(e.to_le_bytes());
            }
            h.update([0xff]);
        }
        format!("{:x}", h.finalize())
    }

    pub fn digest_ok(&self) -> bool {
        self.dim == self.admissibles.len() as u64 && self.digest == self.compute_digest()
    }

    /// Restrict to a part, producing a fresh report.
    pub fn restricted(&self, part: Part) -> BasisReport {
        BasisReport::new(
            self.t,
            self.n,
            self.scope.clone(),
            part,
            self.strategy.clone(),
            self.admissibles
                .iter()
                .filter(|m| part.admits(m))
                .cloned()
                .collect(),
            self.elapsed_ms,
        )
    }
}

impl fmt::Debug for BasisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BasisReport(t={}, n={}, scope={}, part={}, dim={})",
            self.t, self.n, self.scope, self.part, self.dim
        )
    }
}
