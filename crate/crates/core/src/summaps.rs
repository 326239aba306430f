//! Maps between arities: the variable-inserting inclusions, the psi lifts
//! with their four-condition existence test, the Phi operators built from
//! them, the lifted generator sets, the E/F/C partition of the top weight
//! block, and the two conjecture checkers.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith::{alpha_bit, u_set};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::monomial::{cmp_same_degree, Monomial, WeightVector};

/// A pair (l, L) with 1 <= l < l_1 < .. < l_r <= t; L may be empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairLL {
    pub l: usize,
    pub tail: Vec<usize>,
}

impl PairLL {
    pub fn new(l: usize, tail: Vec<usize>, t: u32) -> Result<PairLL> {
        if l < 1 {
            return Err(Error::Precondition("l must be at least 1".into()));
        }
        let mut prev = l;
        for &v in &tail {
            if v <= prev {
                return Err(Error::Precondition(format!(
                    "indices must increase strictly: {v} after {prev}"
                )));
            }
            prev = v;
        }
        if prev > t as usize {
            return Err(Error::Precondition(format!(
                "index {prev} exceeds the arity {t}"
            )));
        }
        Ok(PairLL { l, tail })
    }

    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }
}

/// Every pair (l, L) of the target arity t, l ascending, tails in
/// lexicographic order.
pub fn enumerate_pairs(t: u32) -> Vec<PairLL> {
    let mut out = Vec::new();
    for l in 1..=t as usize {
        let avail: Vec<usize> = (l + 1..=t as usize).collect();
        for mask in 0u32..(1 << avail.len()) {
            let tail: Vec<usize> = avail
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(PairLL { l, tail });
        }
    }
    out
}

/// Insert a zero exponent at position l (1-indexed), pushing the variables
/// x_l..x_(t-1) up to x_(l+1)..x_t.
pub fn q_map(l: usize, t: u32, x: &Monomial) -> Result<Monomial> {
    if x.arity() + 1 != t {
        return Err(Error::ArityMismatch(x.arity() + 1, t));
    }
    if l < 1 || l > t as usize {
        return Err(Error::IndexOutOfRange(format!("l = {l} with t = {t}")));
    }
    let mut exps = Vec::with_capacity(t as usize);
    exps.extend_from_slice(&x.exponents()[..l - 1]);
    exps.push(0);
    exps.extend_from_slice(&x.exponents()[l - 1..]);
    Ok(Monomial::new(exps))
}

/// The monomial x_(L,u) of arity t: variable l_u carries exponent
/// 2^(r-1) + .. + 2^(r-u), and each later l_d carries 2^(r-d).
/// For an empty L this is the constant monomial.
pub fn x_lu(tail: &[usize], u: usize, t: u32) -> Monomial {
    let r = tail.len();
    let mut exps = vec![0u32; t as usize];
    if r == 0 {
        return Monomial::new(exps);
    }
    assert!((1..=r).contains(&u), "u must lie in 1..=r");
    let high: u32 = (1..=u).map(|d| 1u32 << (r - d)).sum();
    exps[tail[u - 1] - 1] = high;
    for d in u + 1..=r {
        exps[tail[d - 1] - 1] = 1 << (r - d);
    }
    Monomial::new(exps)
}

/// The u values satisfying the four-condition existence test for psi on x,
/// ascending. Empty when psi(x) = 0.
pub fn psi_valid_us(pair: &PairLL, x: &Monomial) -> Vec<usize> {
    let r = pair.len();
    let exps = x.exponents();
    let a = |li: usize| exps[li - 2] as u64; // a_(l_u - 1), exponents 1-indexed
    let pow = 1u64 << r;
    let mut out = Vec::new();
    'us: for u in 1..=r {
        // Chain: a_(l_1 - 1) + 1 = .. = a_(l_(u-1) - 1) + 1 = 2^r.
        for d in 1..u {
            if a(pair.tail[d - 1]) + 1 != pow {
                continue 'us;
            }
        }
        // a_(l_u - 1) + 1 > 2^r.
        if a(pair.tail[u - 1]) < pow {
            continue;
        }
        // Bits r-1 .. r-u of a_(l_u - 1) are all set.
        for d in 1..=u {
            if alpha_bit(a(pair.tail[u - 1]), (r - d) as u32) != 1 {
                continue 'us;
            }
        }
        // Bit r-d of a_(l_d - 1) is set for d = u+1 .. r.
        for d in u + 1..=r {
            if alpha_bit(a(pair.tail[d - 1]), (r - d) as u32) != 1 {
                continue 'us;
            }
        }
        out.push(u);
    }
    out
}

/// Sum's lift psi_(l,L): P_(t-1) -> P_t on monomials. With an empty L this
/// is the inclusion q_(l,t). Otherwise, if some u passes the existence test
/// (the smallest is used), the image is x_l^(2^r - 1) q_(l,t)(x) / x_(L,u);
/// the division is exact by construction and asserted. None encodes zero.
pub fn psi(pair: &PairLL, t: u32, x: &Monomial) -> Result<Option<Monomial>> {
    if x.arity() + 1 != t {
        return Err(Error::ArityMismatch(x.arity() + 1, t));
    }
    if pair.is_empty() {
        return Ok(Some(q_map(pair.l, t, x)?));
    }
    let us = psi_valid_us(pair, x);
    let Some(&u) = us.first() else {
        return Ok(None);
    };
    let r = pair.len();
    let mut lifted = q_map(pair.l, t, x)?;
    let mut exps = lifted.exponents().to_vec();
    exps[pair.l - 1] += (1u32 << r) - 1;
    lifted = Monomial::new(exps);
    let divisor = x_lu(&pair.tail, u, t);
    let quotient = lifted.div_exact(&divisor);
    match quotient {
        Some(q) => Ok(Some(q)),
        None => panic!(
            "psi division was not exact for {x} under (l={}, L={:?}); this is a bug",
            pair.l, pair.tail
        ),
    }
}

/// Union of the q-map images over every insertion position: the lifted set
/// whose members all carry a zero exponent.
pub fn phi_zero(t: u32, source: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen = HashSet::new();
    for x in source {
        for l in 1..=t as usize {
            seen.insert(q_map(l, t, x)?);
        }
    }
    Ok(sorted_desc(seen))
}

/// Union of the nonzero psi images with every exponent positive, over all
/// pairs with a nonempty L.
pub fn phi_positive(t: u32, source: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen = HashSet::new();
    for pair in enumerate_pairs(t) {
        if pair.is_empty() {
            continue;
        }
        for x in source {
            if let Some(y) = psi(&pair, t, x)? {
                if y.is_positive() {
                    seen.insert(y);
                }
            }
        }
    }
    Ok(sorted_desc(seen))
}

/// phi_zero and phi_positive together.
pub fn phi_star(t: u32, source: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = phi_zero(t, source)?.into_iter().collect();
    seen.extend(phi_positive(t, source)?);
    Ok(sorted_desc(seen))
}

fn sorted_desc(set: HashSet<Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = set.into_iter().collect();
    v.sort_by(|a, b| cmp_same_degree(b, a));
    v
}

/// The lifted generator set: for every rho in U(t,n) with rho >= 1, insert
/// the exponent 2^rho - 1 at each position over the positive part of the
/// arity-(t-1) basis one degree block down. For (5, 42) this is the union
/// of the four classical sets built with 2^rho - 1 in {1, 3, 7, 31}.
pub fn mothebe_uys_sets(engine: &Engine, t: u32, n: u64) -> Result<Vec<Monomial>> {
    if t < 2 {
        return Err(Error::Precondition("needs at least two variables".into()));
    }
    let mut seen = HashSet::new();
    for rho in u_set(t, n) {
        if rho == 0 {
            continue;
        }
        let d = (1u64 << rho) - 1;
        let lower = engine.admissible_basis(t - 1, n - d)?;
        for x in lower.admissibles.iter().filter(|m| m.is_positive()) {
            for l in 1..=t as usize {
                let mut lifted = q_map(l, t, x)?;
                let mut exps = lifted.exponents().to_vec();
                exps[l - 1] += d as u32;
                lifted = Monomial::new(exps);
                seen.insert(lifted);
            }
        }
    }
    Ok(sorted_desc(seen))
}

/// The set C(t, n): for each rho in U(t, n), insert the exponent 2^rho - 1
/// at every position over the full arity-(t-1) admissible basis in degree
/// n - (2^rho - 1). The rho = 0 inclusion is the printed-formula variant;
/// both variants are reported by the conjecture checker.
pub fn c_set(engine: &Engine, t: u32, n: u64, include_rho_zero: bool) -> Result<Vec<Monomial>> {
    if t < 2 {
        return Err(Error::Precondition("needs at least two variables".into()));
    }
    let mut seen = HashSet::new();
    for rho in u_set(t, n) {
        if rho == 0 && !include_rho_zero {
            continue;
        }
        let d = (1u64 << rho) - 1;
        let lower = engine.admissible_basis(t - 1, n - d)?;
        for x in &lower.admissibles {
            for l in 1..=t as usize {
                let mut lifted = q_map(l, t, x)?;
                let mut exps = lifted.exponents().to_vec();
                exps[l - 1] += d as u32;
                lifted = Monomial::new(exps);
                seen.insert(lifted);
            }
        }
    }
    Ok(sorted_desc(seen))
}

/// The E / F / C partition of the positive part of the top weight block.
#[derive(Clone, Debug)]
pub struct EfcPartition {
    pub t: u32,
    pub n: u64,
    pub omega: WeightVector,
    pub e: Vec<Monomial>,
    pub f: Vec<Monomial>,
    pub c: Vec<Monomial>,
    pub block_positive_dim: u64,
    /// Lifted monomials that failed to be admissible, by construction
    /// violations of the containment theorems.
    pub violations: Vec<Monomial>,
}

/// Build C from the lifted generator sets, E from the positive psi images of
/// the full lower-arity basis minus C, and F as the remaining admissibles of
/// the positive part of the minimal-spike weight block.
pub fn efc_partition(engine: &Engine, t: u32, n: u64) -> Result<EfcPartition> {
    if t < 2 {
        return Err(Error::Precondition("needs at least two variables".into()));
    }
    let omega = crate::monomial::minimal_spike(t, n)
        .ok_or_else(|| Error::Precondition(format!("no minimal spike for t={t}, n={n}")))?
        .weight_vector();

    let block = engine.weight_block_basis(t, n, &omega)?;
    let block_positive: Vec<Monomial> = block
        .admissibles
        .iter()
        .filter(|m| m.is_positive())
        .cloned()
        .collect();
    let block_set: HashSet<&Monomial> = block_positive.iter().collect();

    let lower = engine.admissible_basis(t - 1, n)?;
    let sources: Vec<Monomial> = lower
        .admissibles
        .iter()
        .filter(|m| m.weight_vector() == omega)
        .cloned()
        .collect();

    let c = mothebe_uys_sets(engine, t, n)?;
    let c_set: HashSet<&Monomial> = c.iter().collect();

    let phi_pos = phi_positive(t, &sources)?;
    let e: Vec<Monomial> = phi_pos
        .into_iter()
        .filter(|m| !c_set.contains(m))
        .collect();

    // The containment theorems promise E and C land inside the positive
    // block; anything that does not is reported, never filtered away.
    let mut violations = Vec::new();
    for m in e.iter().chain(&c) {
        if !block_set.contains(m) {
            violations.push(m.clone());
        }
    }
    violations.sort_by(|a, b| cmp_same_degree(b, a));

    let ec: HashSet<&Monomial> = e.iter().chain(&c).collect();
    let f: Vec<Monomial> = block_positive
        .iter()
        .filter(|m| !ec.contains(*m))
        .cloned()
        .collect();

    Ok(EfcPartition {
        t,
        n,
        omega,
        e,
        f,
        c,
        block_positive_dim: block_positive.len() as u64,
        violations,
    })
}

/// Serializable verdict of a conjecture check.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub conjecture: String,
    pub t: u32,
    pub n: u64,
    pub omega: Option<WeightVector>,
    pub holds: bool,
    pub violations: Vec<Monomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_met: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// First conjecture: every nonzero psi image of an admissible monomial is
/// admissible one arity up, and Phi_* respects each weight block.
pub fn conjecture_gts_check(engine: &Engine, t: u32, n: u64) -> Result<Verdict> {
    if t < 2 {
        return Err(Error::Precondition("needs at least two variables".into()));
    }
    let lower = engine.admissible_basis(t - 1, n)?;
    let upper = engine.instance(t, n)?;
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    let mut multi_u = 0usize;
    let mut ambiguous = 0usize;

    for pair in enumerate_pairs(t) {
        if pair.is_empty() {
            continue;
        }
        for x in &lower.admissibles {
            let us = psi_valid_us(&pair, x);
            if us.len() > 1 {
                multi_u += 1;
                // The image is only well defined if every valid u agrees.
                let mut images = HashSet::new();
                for &u in &us {
                    let mut lifted = q_map(pair.l, t, x)?;
                    let mut exps = lifted.exponents().to_vec();
                    exps[pair.l - 1] += (1u32 << pair.len()) - 1;
                    lifted = Monomial::new(exps);
                    if let Some(q) = lifted.div_exact(&x_lu(&pair.tail, u, t)) {
                        images.insert(q);
                    }
                }
                if images.len() > 1 {
                    ambiguous += 1;
                }
            }
            if let Some(y) = psi(&pair, t, x)? {
                if !upper.is_admissible(&y) {
                    violations.push(y);
                }
            }
        }
    }

    // Per-weight containment of Phi_* images.
    let mut blockwise_ok = true;
    let phi = phi_star(t, &lower.admissibles)?;
    for y in &phi {
        if !upper.is_admissible(y) {
            blockwise_ok = false;
            if !violations.contains(y) {
                violations.push(y.clone());
            }
        }
    }
    if multi_u > 0 {
        notes.push(format!("{multi_u} inputs had several valid u values"));
    }
    if ambiguous > 0 {
        notes.push(format!(
            "{ambiguous} inputs had distinct quotients across valid u values"
        ));
    }

    let holds = violations.is_empty() && blockwise_ok;
    violations.sort_by(|a, b| cmp_same_degree(b, a));
    Ok(Verdict {
        conjecture: "gtS".into(),
        t,
        n,
        omega: None,
        holds,
        violations,
        variant: None,
        hypothesis_met: None,
        notes,
    })
}

/// Second conjecture, per weight block: when the maximal psi-supporting
/// length over the block's sources equals |U(t, n)|, the union of the
/// Phi_* images and the block slice of C(t, n) should equal the block's
/// admissibles. Checked under both rho variants of C(t, n).
pub fn conjecture_gtp_check(
    engine: &Engine,
    t: u32,
    n: u64,
    omega: &WeightVector,
    include_rho_zero: bool,
) -> Result<Verdict> {
    if t < 2 {
        return Err(Error::Precondition("needs at least two variables".into()));
    }
    let lower = engine.admissible_basis(t - 1, n)?;
    let source: Vec<Monomial> = lower
        .admissibles
        .iter()
        .filter(|m| m.weight_vector() == *omega)
        .cloned()
        .collect();

    let u_count = u_set(t, n).len();
    let mut hypothesis_met = !source.is_empty();
    for x in &source {
        let mut best = 0usize;
        for pair in enumerate_pairs(t) {
            if psi(&pair, t, x)?.is_some() {
                best = best.max(pair.len());
            }
        }
        if best != u_count {
            hypothesis_met = false;
        }
    }

    let block = engine.weight_block_basis(t, n, omega)?;
    let block_set: HashSet<&Monomial> = block.admissibles.iter().collect();

    let mut union: HashSet<Monomial> = phi_star(t, &source)?
        .into_iter()
        .filter(|m| m.weight_vector() == *omega)
        .collect();
    union.extend(
        c_set(engine, t, n, include_rho_zero)?
            .into_iter()
            .filter(|m| m.weight_vector() == *omega),
    );

    // Violations in either direction of the asserted set equality.
    let mut violations: Vec<Monomial> = Vec::new();
    for m in &union {
        if !block_set.contains(m) {
            violations.push(m.clone());
        }
    }
    for m in &block.admissibles {
        if !union.contains(m) {
            violations.push(m.clone());
        }
    }
    violations.sort_by(|a, b| cmp_same_degree(b, a));

    let holds = violations.is_empty();
    Ok(Verdict {
        conjecture: "gtP".into(),
        t,
        n,
        omega: Some(omega.clone()),
        holds,
        violations,
        variant: Some(if include_rho_zero {
            "rho>=0".into()
        } else {
            "rho>=1".into()
        }),
        hypothesis_met: Some(hypothesis_met),
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{EngineConfig, Strategy};

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn engine() -> Engine {
        Engine::new(EngineConfig {
            strategy: Strategy::Monolithic,
            ..EngineConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn q_map_examples() {
        let x = m(&[12, 6, 9]);
        assert_eq!(q_map(1, 4, &x).unwrap(), m(&[0, 12, 6, 9]));
        assert_eq!(q_map(4, 4, &x).unwrap(), m(&[12, 6, 9, 0]));
        assert_eq!(
            q_map(2, 4, &x).unwrap().weight_vector(),
            x.weight_vector(),
            "inserting a zero exponent preserves the weight"
        );
        assert!(q_map(5, 4, &x).is_err());
        assert!(q_map(1, 3, &x).is_err());
    }

    #[test]
    fn x_lu_examples() {
        assert_eq!(x_lu(&[2, 3, 4], 1, 4), m(&[0, 4, 2, 1]));
        assert_eq!(x_lu(&[], 1, 4), Monomial::one(4));
        assert_eq!(x_lu(&[2, 3], 2, 3), m(&[0, 0, 3]));
        // Degree is always 2^r - 1.
        for (tail, t) in [(vec![2usize, 4], 5u32), (vec![3, 4, 5], 5)] {
            for u in 1..=tail.len() {
                assert_eq!(
                    x_lu(&tail, u, t).degree(),
                    (1u64 << tail.len()) - 1,
                    "tail {tail:?}, u = {u}"
                );
            }
        }
    }

    #[test]
    fn psi_paper_example() {
        // psi_(1,(2,3,4)) (x1^12 x2^6 x3^9) = x1^7 x2^8 x3^4 x4^8.
        let pair = PairLL::new(1, vec![2, 3, 4], 4).unwrap();
        let x = m(&[12, 6, 9]);
        let y = psi(&pair, 4, &x).unwrap().unwrap();
        assert_eq!(y, m(&[7, 8, 4, 8]));
        assert_eq!(y.degree(), x.degree());
        assert_eq!(y.weight_vector(), x.weight_vector());
        assert_eq!(psi_valid_us(&pair, &x), vec![1]);
    }

    #[test]
    fn psi_with_empty_tail_is_q() {
        let x = m(&[3, 5, 1]);
        for l in 1..=4usize {
            let pair = PairLL::new(l, vec![], 4).unwrap();
            assert_eq!(psi(&pair, 4, &x).unwrap().unwrap(), q_map(l, 4, &x).unwrap());
        }
    }

    #[test]
    fn psi_non_commutation_witness() {
        use crate::steenrod::{sq, Polynomial};
        let pair = PairLL::new(1, vec![2, 3, 4], 4).unwrap();
        let x = m(&[12, 6, 9]);
        let psi_x = psi(&pair, 4, &x).unwrap().unwrap();
        // Sq^2 after psi:
        let lhs = sq(2, &Polynomial::from_monomial(psi_x));
        assert_eq!(lhs, Polynomial::from_monomial(m(&[9, 8, 4, 8])));
        // psi after Sq^2: Sq^2(x) has terms x1^14 x2^6 x3^9, x1^12 x2^6 x3^11(..);
        // the image of any single term cannot equal x1^9 x2^8 x3^4 x4^8, and on
        // the paper's representative term the image differs:
        let sq_x_term = m(&[14, 6, 9]);
        let rhs = psi(&pair, 4, &sq_x_term).unwrap();
        assert_ne!(rhs, Some(m(&[9, 8, 4, 8])));
    }

    #[test]
    fn psi_preserves_weight_and_degree_randomly() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(1234);
        let mut nonzero = 0usize;
        for _ in 0..10_000 {
            let t = rng.gen_range(2..=5u32);
            let arity = t - 1;
            let exps: Vec<u32> = (0..arity).map(|_| rng.gen_range(0..64)).collect();
            let x = Monomial::new(exps);
            let pairs = enumerate_pairs(t);
            let pair = &pairs[rng.gen_range(0..pairs.len())];
            if let Some(y) = psi(pair, t, &x).unwrap() {
                nonzero += 1;
                assert_eq!(y.degree(), x.degree(), "pair {pair:?} on {x}");
                assert_eq!(y.weight_vector(), x.weight_vector());
            }
        }
        assert!(nonzero > 1000, "sampling produced too few nonzero images");
    }

    #[test]
    fn pair_enumeration_counts() {
        // Sum over l of 2^(t-l) pairs.
        for t in 1..=5u32 {
            let expected: usize = (1..=t).map(|l| 1usize << (t - l)).sum();
            assert_eq!(enumerate_pairs(t).len(), expected);
        }
        assert!(PairLL::new(2, vec![2], 4).is_err());
        assert!(PairLL::new(1, vec![3, 2], 4).is_err());
        assert!(PairLL::new(1, vec![5], 4).is_err());
    }

    #[test]
    fn phi_zero_counts() {
        assert!(phi_zero(3, &[]).unwrap().is_empty());
        let c = [m(&[1, 2]), m(&[2, 1])];
        let lifted = phi_zero(3, &c).unwrap();
        assert!(lifted.len() <= 3 * c.len());
        assert!(lifted.iter().all(|m| m.has_zero_exponent()));
        // Positive sources with distinct images: exactly t * |C|.
        assert_eq!(lifted.len(), 6);
    }

    #[test]
    fn phi_positive_outputs_are_positive() {
        let c = [m(&[3, 5, 1]), m(&[6, 2, 1])];
        for y in phi_positive(4, &c).unwrap() {
            assert!(y.is_positive());
            assert_eq!(y.degree(), 9);
        }
        assert!(phi_positive(4, &[]).unwrap().is_empty());
    }

    #[test]
    fn mothebe_uys_small_case() {
        // Lifts of lower-arity admissibles stay admissible: spot-check t = 3.
        let e = engine();
        for n in [4u64, 7, 10] {
            let lifted = mothebe_uys_sets(&e, 3, n).unwrap();
            let inst = e.instance(3, n).unwrap();
            for y in &lifted {
                assert!(inst.is_admissible(y), "lifted {y} not admissible at n={n}");
            }
        }
    }

    #[test]
    fn phi_zero_reproduces_the_zero_part() {
        let e = engine();
        let mut cases: Vec<(u32, u64)> = (0..=12).map(|n| (3u32, n)).collect();
        cases.push((4, 19));
        for (t, n) in cases {
            let lower = e.admissible_basis(t - 1, n).unwrap();
            let lifted = phi_zero(t, &lower.admissibles).unwrap();
            let full = e.admissible_basis(t, n).unwrap();
            let (zero, _) = e.split_parts(&full).unwrap();
            assert_eq!(
                lifted, zero.admissibles,
                "zero part mismatch at t={t}, n={n}"
            );
        }
    }

    #[test]
    fn conjecture_gts_small_cases() {
        let e = engine();
        // Empty lower basis holds vacuously: mu(5) = 3 > 2 vars.
        let v = conjecture_gts_check(&e, 3, 5).unwrap();
        assert!(v.holds);
        assert!(v.violations.is_empty());
        // Recorded verdicts for small three-variable degrees.
        for n in 1..=8u64 {
            let v = conjecture_gts_check(&e, 3, n).unwrap();
            assert!(v.holds, "gtS recorded a violation at t=3, n={n}: {v:?}");
        }
    }

    #[test]
    fn verdict_serialization_schema() {
        let e = engine();
        let v = conjecture_gts_check(&e, 2, 2).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["conjecture"], "gtS");
        assert!(json["holds"].is_boolean());
        assert!(json["violations"].is_array());
        let w = crate::monomial::parse_weight_vector("2,1").unwrap();
        let v = conjecture_gtp_check(&e, 2, 4, &w, false).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["conjecture"], "gtP");
        assert_eq!(json["variant"], "rho>=1");
        assert_eq!(json["omega"], serde_json::json!([2, 1]));
    }
}
