//! Homogeneous polynomials over F2 and the action of the Steenrod squares.
//!
//! `Sq^i` acts on a monomial through the Cartan formula: sum over all
//! compositions i = i_1 + .. + i_t of the product of binomial parities
//! C(a_j, i_j), contributing the monomial with exponents a_j + i_j. A factor
//! survives exactly when i_j is a bitwise submask of a_j, so the enumeration
//! walks submasks and prunes dead branches early.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{cmp_same_degree, enumerate_monomials, parse_monomial, Monomial};

/// A homogeneous polynomial: a set of monomials of one arity and degree,
/// with symmetric-difference addition (coefficients live in F2).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: u32,
    degree: u64,
    terms: HashSet<Monomial>,
}

impl Polynomial {
    pub fn zero(arity: u32, degree: u64) -> Self {
        Polynomial {
            arity,
            degree,
            terms: HashSet::new(),
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero(m.arity(), m.degree());
        p.terms.insert(m);
        p
    }

    pub fn from_terms(arity: u32, degree: u64, terms: Vec<Monomial>) -> Result<Self> {
        let mut p = Polynomial::zero(arity, degree);
        for m in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch(m.arity(), arity));
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch(m.degree(), degree));
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Flip the coefficient of a term.
    pub fn toggle(&mut self, m: Monomial) {
        debug_assert_eq!(m.arity(), self.arity);
        debug_assert_eq!(m.degree(), self.degree);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Symmetric difference of term sets.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(m.clone());
        }
        Ok(out)
    }

    /// Terms in descending monomial order.
    pub fn sorted_terms(&self) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self.terms.iter().cloned().collect();
        v.sort_by(|a, b| cmp_same_degree(b, a));
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// The largest term, if any.
    pub fn leading_term(&self) -> Option<Monomial> {
        self.terms
            .iter()
            .max_by(|a, b| cmp_same_degree(a, b))
            .cloned()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse ` + `-separated monomials; `0` is the zero polynomial of the stated
/// arity and degree. Homogeneity is enforced.
pub fn parse_polynomial(s: &str, arity: u32, degree: u64) -> Result<Polynomial> {
    let s = s.trim();
    if s == "0" {
        return Ok(Polynomial::zero(arity, degree));
    }
    let mut p = Polynomial::zero(arity, degree);
    for part in s.split('+') {
        let m = parse_monomial(part, arity)?;
        if m.degree() != degree {
            return Err(Error::DegreeMismatch(m.degree(), degree));
        }
        p.toggle(m);
    }
    Ok(p)
}

/// Visit the exponent vector of every term of `Sq^i` applied to the monomial
/// with the given exponents. Distinct compositions give distinct terms, so no
/// cancellation happens within a single source monomial.
pub(crate) fn for_each_sq_term<F: FnMut(&[u32])>(i: u64, exps: &[u32], mut f: F) {
    let total: u64 = exps.iter().map(|&a| a as u64).sum();
    if i > total {
        return; // instability: Sq^i vanishes above the degree
    }
    let mut suffix_sums = vec![0u64; exps.len() + 1];
    for j in (0..exps.len()).rev() {
        suffix_sums[j] = suffix_sums[j + 1] + exps[j] as u64;
    }
    let mut out = exps.to_vec();
    rec_sq(i, exps, &suffix_sums, 0, &mut out, &mut f);
}

fn rec_sq<F: FnMut(&[u32])>(
    rem: u64,
    exps: &[u32],
    suffix: &[u64],
    j: usize,
    out: &mut Vec<u32>,
    f: &mut F,
) {
    if j == exps.len() {
        if rem == 0 {
            f(out);
        }
        return;
    }
    if rem > suffix[j] {
        return; // not enough room in the remaining variables
    }
    let a = exps[j];
    // i_j must be a submask of a_j (Lucas) and at most rem.
    let mut s = a;
    loop {
        if (s as u64) <= rem {
            out[j] = a + s;
            rec_sq(rem - s as u64, exps, suffix, j + 1, out, f);
            out[j] = a;
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & a;
    }
}

/// `Sq^i` on a single monomial.
pub fn sq_monomial(i: u64, m: &Monomial) -> Polynomial {
    let mut p = Polynomial::zero(m.arity(), m.degree() + i);
    for_each_sq_term(i, m.exponents(), |e| {
        p.toggle(Monomial::new(e.to_vec()));
    });
    p
}

/// Additive extension of `Sq^i` to polynomials. `Sq^0` is the identity and
/// the result is homogeneous of degree `deg(f) + i`.
pub fn sq(i: u64, f: &Polynomial) -> Polynomial {
    let mut p = Polynomial::zero(f.arity(), f.degree() + i);
    for m in f.terms() {
        for_each_sq_term(i, m.exponents(), |e| {
            p.toggle(Monomial::new(e.to_vec()));
        });
    }
    p
}

/// Which squares generate the spanning set of the hit subspace.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SqMode {
    /// Every `Sq^i`, 1 <= i <= n.
    AllSquares,
    /// Only `Sq^(2^k)`; spans the same subspace since every square
    /// decomposes through them.
    #[default]
    GeneratorSquares,
}

impl SqMode {
    /// The i values used in degree n, ascending.
    pub fn squares(self, n: u64) -> Vec<u64> {
        match self {
            SqMode::AllSquares => (1..=n).collect(),
            SqMode::GeneratorSquares => {
                let mut v = Vec::new();
                let mut i = 1u64;
                while i <= n {
                    v.push(i);
                    i <<= 1;
                }
                v
            }
        }
    }
}

/// A spanning set of the hit subspace of `(P_t)_n`: the nonzero polynomials
/// `Sq^i(m)` with m a monomial of degree n - i, ordered by (i, source index).
pub fn hit_spanning_set(t: u32, n: u64, mode: SqMode) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in mode.squares(n) {
        for m in enumerate_monomials(t, n - i) {
            let p = sq_monomial(i, &m);
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out
}
