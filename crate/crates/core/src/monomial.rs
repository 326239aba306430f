//! Monomials, exponent vectors, weight vectors, the linear order on a fixed
//! degree, and spike machinery.
//!
//! A monomial in `P_t = F2[x_1..x_t]` is its exponent vector `(a_1, .., a_t)`.
//! Its weight vector has i-th entry the number of variables whose exponent has
//! bit i-1 set; monomials of one degree are compared first by weight vector
//! (left-lex), then by exponent vector (left-lex).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::alpha_bit;
use crate::error::{Error, Result};

/// A monomial of `P_t`, stored as its exponent vector. The arity is the
/// length of the vector; the degree is the sum of the entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "arity must be at least 1");
        Monomial { exps }
    }

    /// The constant monomial 1 in t variables.
    pub fn one(t: u32) -> Self {
        Monomial::new(vec![0; t as usize])
    }

    pub fn arity(&self) -> u32 {
        self.exps.len() as u32
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&a| a as u64).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of x_j, 1-indexed.
    pub fn exponent(&self, j: usize) -> u32 {
        self.exps[j - 1]
    }

    pub fn has_zero_exponent(&self) -> bool {
        self.exps.contains(&0)
    }

    /// All exponents strictly positive.
    pub fn is_positive(&self) -> bool {
        !self.has_zero_exponent()
    }

    /// Entry i of the weight vector counts the variables whose exponent has
    /// bit i-1 set.
    pub fn weight_vector(&self) -> WeightVector {
        let max = self.exps.iter().copied().max().unwrap_or(0);
        let levels = 32 - max.leading_zeros();
        let mut entries = Vec::with_capacity(levels as usize);
        for i in 0..levels {
            let count = self
                .exps
                .iter()
                .map(|&a| alpha_bit(a as u64, i) as u16)
                .sum();
            entries.push(count);
        }
        WeightVector::new(entries)
    }

    /// Every exponent of the form 2^beta - 1 (zero allowed).
    pub fn is_spike(&self) -> bool {
        self.exps.iter().all(|&a| (a as u64 + 1).is_power_of_two())
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        ))
    }

    /// Exact componentwise quotient; None when some exponent would go negative.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if self.arity() != other.arity() {
            return None;
        }
        let mut out = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            out.push(a.checked_sub(b)?);
        }
        Some(Monomial::new(out))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if wrote {
                write!(f, " ")?;
            }
            if a == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, a)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Monomials serialize as their exponent arrays.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let exps = Vec::<u32>::deserialize(d)?;
        if exps.is_empty() {
            return Err(serde::de::Error::custom("empty exponent vector"));
        }
        Ok(Monomial::new(exps))
    }
}

/// `x1^31 x2^7 x3^3 x4` with the given arity; `1` for the constant monomial.
pub fn parse_monomial(s: &str, arity: u32) -> Result<Monomial> {
    let s = s.trim();
    let mut exps = vec![0u32; arity as usize];
    if s == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in s.split_whitespace() {
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("expected variable factor, got `{factor}`")))?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e),
            None => (rest, "1"),
        };
        let var: usize = var
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
        let exp: u32 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
        if var == 0 || var > arity as usize {
            return Err(Error::Parse(format!(
                "variable x{var} out of range 1..={arity}"
            )));
        }
        exps[var - 1] += exp;
    }
    Ok(Monomial::new(exps))
}

/// A finitely supported weight vector, stored with no trailing zeros.
///
/// The derived `Ord` on the normalized entry list coincides with left-lex
/// comparison padded with zeros: a proper prefix is smaller, and otherwise
/// the first differing entry decides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    entries: Vec<u16>,
}

impl WeightVector {
    pub fn new(mut entries: Vec<u16>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeightVector { entries }
    }

    pub fn empty() -> Self {
        WeightVector { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    /// Entry i (1-indexed), zero beyond the stored length.
    pub fn entry(&self, i: usize) -> u16 {
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// deg(omega) = sum of 2^(i-1) * omega_i.
    pub fn degree(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &w)| (w as u64) << i)
            .sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(WeightVector::new(Vec::<u16>::deserialize(d)?))
    }
}

/// `4,3,2,1,1` or `(4,3,2,1,1)`.
pub fn parse_weight_vector(s: &str) -> Result<WeightVector> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(WeightVector::empty());
    }
    let entries = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u16>()
                .map_err(|_| Error::Parse(format!("bad weight entry `{p}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(entries))
}

/// Total order on monomials of one degree: weight vector left-lex first, then
/// exponent vector left-lex. Only meaningful for equal arity and degree; use
/// [`compare`] for the checked version.
pub fn cmp_same_degree(x: &Monomial, y: &Monomial) -> Ordering {
    x.weight_vector()
        .cmp(&y.weight_vector())
        .then_with(|| x.exponents().cmp(y.exponents()))
}

/// Checked comparison; mismatched arity or degree is a contract violation.
pub fn compare(x: &Monomial, y: &Monomial) -> Result<Ordering> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch(x.arity(), y.arity()));
    }
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    Ok(cmp_same_degree(x, y))
}

/// All normalized weight vectors of degree n with entries at most t,
/// sorted descending.
pub fn weights_of_degree(t: u32, n: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_weights(t, n, &mut prefix, &mut out);
    out.sort();
    out.reverse();
    out
}

fn collect_weights(t: u32, n: u64, prefix: &mut Vec<u16>, out: &mut Vec<WeightVector>) {
    if n == 0 {
        out.push(WeightVector::new(prefix.clone()));
        return;
    }
    // The next entry must match the parity of the remaining degree.
    let start = (n & 1) as u16;
    let mut w = start;
    while w as u64 <= n && w as u32 <= t {
        prefix.push(w);
        collect_weights(t, (n - w as u64) / 2, prefix, out);
        prefix.pop();
        w += 2;
    }
}

/// All monomials of arity t with weight vector exactly omega, sorted
/// descending by exponent vector. The count is the product of C(t, omega_i).
pub fn monomials_of_weight(t: u32, omega: &WeightVector) -> Vec<Monomial> {
    if omega.entries().iter().any(|&w| w as u32 > t) {
        return Vec::new();
    }
    let mut exps = vec![0u32; t as usize];
    let mut out = Vec::new();
    fill_levels(t, omega.entries(), 0, &mut exps, &mut out);
    out.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    out
}

// For each bit level i choose the omega_i-subset of variables whose exponent
// has that bit set; recurse over levels.
fn fill_levels(t: u32, levels: &[u16], i: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == levels.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    let k = levels[i] as usize;
    if k == 0 {
        fill_levels(t, levels, i + 1, exps, out);
        return;
    }
    let t = t as usize;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        for &j in &subset {
            exps[j] |= 1 << i;
        }
        fill_levels(t as u32, levels, i + 1, exps, out);
        for &j in &subset {
            exps[j] &= !(1u32 << i);
        }
        // Advance to the next k-subset of 0..t in lexicographic order.
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if subset[pos] < t - (k - pos) {
                subset[pos] += 1;
                for q in pos + 1..k {
                    subset[q] = subset[q - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All monomials of degree n in t variables, sorted descending under the
/// monomial order. The position in this list is the canonical column index.
pub fn enumerate_monomials(t: u32, n: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for omega in weights_of_degree(t, n) {
        out.extend(monomials_of_weight(t, &omega));
    }
    out
}

/// Visit every monomial of degree n in t variables in descending
/// exponent-lex order (not the monomial order). Cheaper than materializing
/// the list when a single pass suffices.
pub fn for_each_monomial<F: FnMut(&[u32])>(t: u32, n: u64, mut f: F) {
    let mut exps = vec![0u32; t as usize];
    rec_monomials(&mut exps, 0, n, &mut f);
}

fn rec_monomials<F: FnMut(&[u32])>(exps: &mut Vec<u32>, j: usize, rem: u64, f: &mut F) {
    if j + 1 == exps.len() {
        exps[j] = rem as u32;
        f(exps);
        exps[j] = 0;
        return;
    }
    let mut a = rem;
    loop {
        exps[j] = a as u32;
        rec_monomials(exps, j + 1, rem - a, f);
        if a == 0 {
            break;
        }
        a -= 1;
    }
    exps[j] = 0;
}

/// The minimal spike of `(P_t)_n`: the spike with mu(n) nonzero exponents
/// whose beta pattern descends strictly except possibly at the last two
/// entries. Absent when mu(n) > t.
pub fn minimal_spike(t: u32, n: u64) -> Option<Monomial> {
    assert!(t >= 1 && n >= 1);
    let r = crate::arith::mu(n);
    if r > t {
        return None;
    }
    let mut prefix = Vec::new();
    let mut found = None;
    let cap = 64 - n.leading_zeros();
    search_spike_betas(n, r as usize, cap, &mut prefix, &mut found);
    let betas = found?;
    let mut exps = vec![0u32; t as usize];
    for (j, &b) in betas.iter().enumerate() {
        exps[j] = u32::try_from((1u64 << b) - 1).expect("spike exponent fits in u32");
    }
    Some(Monomial::new(exps))
}

// Beta tuples of length r, entries >= 1, strictly descending except that the
// last two entries may be equal, with sum of (2^beta - 1) equal to n.
fn search_spike_betas(
    n: u64,
    r: usize,
    cap: u32,
    prefix: &mut Vec<u32>,
    found: &mut Option<Vec<u32>>,
) {
    if found.is_some() {
        return;
    }
    if prefix.len() == r {
        if n == 0 {
            *found = Some(prefix.clone());
        }
        return;
    }
    let remaining = (r - prefix.len()) as u64;
    if n < remaining {
        return;
    }
    for b in (1..=cap).rev() {
        let val = (1u64 << b) - 1;
        if val > n {
            continue;
        }
        // Loose upper bound: every later entry contributes at most val.
        if val * remaining < n {
            break;
        }
        // Strict descent unless the next position is the last one.
        let next_cap = if prefix.len() + 2 == r { b } else { b - 1 };
        prefix.push(b);
        search_spike_betas(n - val, r, next_cap, prefix, found);
        prefix.pop();
        if found.is_some() {
            return;
        }
    }
}

/// The spike of arity t with the given weakly decreasing weight vector
/// (omega_1 <= t); absent otherwise. Variable j receives exponent
/// 2^(c_j) - 1 where c_j counts the entries of omega that are >= j.
pub fn spike_for_weight(t: u32, omega: &WeightVector) -> Option<Monomial> {
    if !omega.is_weakly_decreasing() {
        return None;
    }
    if omega.entry(1) as u32 > t {
        return None;
    }
    let mut exps = vec![0u32; t as usize];
    for (j, e) in exps.iter_mut().enumerate() {
        let c = omega
            .entries()
            .iter()
            .filter(|&&w| w as usize > j)
            .count() as u32;
        *e = (1u32 << c) - 1;
    }
    Some(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mu;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn w(entries: &[u16]) -> WeightVector {
        WeightVector::new(entries.to_vec())
    }

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn weight_vector_examples() {
        assert_eq!(m(&[12, 6, 9]).weight_vector(), w(&[1, 1, 2, 2]));
        assert_eq!(m(&[31, 7, 3, 1, 0]).weight_vector(), w(&[4, 3, 2, 1, 1]));
        assert_eq!(m(&[0, 0, 0]).weight_vector(), WeightVector::empty());
    }

    #[test]
    fn weight_degree_identity() {
        // deg(omega(x)) = deg(x), sampled over a grid of exponent vectors.
        for a in 0..14u32 {
            for b in 0..14u32 {
                for c in 0..14u32 {
                    let x = m(&[a, b, c]);
                    assert_eq!(x.weight_vector().degree(), x.degree());
                }
            }
        }
    }

    #[test]
    fn weight_order_is_left_lex() {
        assert!(w(&[2]) > w(&[1, 5]));
        assert!(w(&[1]) < w(&[1, 2]));
        assert!(w(&[4, 3, 2, 3]) > w(&[4, 3, 2, 1, 1]));
        assert!(w(&[4, 3, 4, 2]) > w(&[4, 3, 2, 3]));
        assert_eq!(w(&[1, 0, 0]), w(&[1]));
    }

    #[test]
    fn compare_examples() {
        let x = m(&[1, 3]);
        let y = m(&[3, 1]);
        assert_eq!(compare(&x, &x).unwrap(), Ordering::Equal);
        // Equal weight vectors (2,1); exponent vector decides.
        assert_eq!(compare(&x, &y).unwrap(), Ordering::Less);
        // omega = (0,2) < (2,1) left-lex.
        assert_eq!(compare(&m(&[2, 2]), &y).unwrap(), Ordering::Less);
        assert!(compare(&m(&[1, 0]), &m(&[1, 1])).is_err());
        assert!(compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn order_is_total_on_small_degrees() {
        for t in 1..=3u32 {
            for n in 0..=12u64 {
                let all = enumerate_monomials(t, n);
                // Strictly descending, hence antisymmetric and trichotomous.
                for pair in all.windows(2) {
                    assert_eq!(cmp_same_degree(&pair[0], &pair[1]), Ordering::Greater);
                }
                // Transitivity on a grid of triples.
                for i in 0..all.len() {
                    for j in i + 1..all.len() {
                        for k in j + 1..all.len() {
                            assert_eq!(cmp_same_degree(&all[i], &all[k]), Ordering::Greater);
                            let _ = (i, j, k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_monomials(1, 5), vec![m(&[5])]);
        assert_eq!(enumerate_monomials(4, 19).len(), 1540);
        for t in 1..=4u32 {
            for n in 0..=10u64 {
                assert_eq!(
                    enumerate_monomials(t, n).len() as u64,
                    binomial(n + t as u64 - 1, t as u64 - 1),
                    "t = {t}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn enumerate_count_5_42() {
        assert_eq!(enumerate_monomials(5, 42).len(), 163_185);
    }

    #[test]
    fn for_each_agrees_with_enumerate() {
        for t in 1..=4u32 {
            for n in 0..=8u64 {
                let mut seen = Vec::new();
                for_each_monomial(t, n, |e| seen.push(Monomial::new(e.to_vec())));
                let mut listed = enumerate_monomials(t, n);
                listed.sort_by(|a, b| a.exponents().cmp(b.exponents()));
                seen.sort_by(|a, b| a.exponents().cmp(b.exponents()));
                assert_eq!(seen, listed);
            }
        }
    }

    #[test]
    fn spike_examples() {
        assert!(m(&[31, 7, 3, 1, 0]).is_spike());
        assert!(!m(&[2]).is_spike());
        assert!(m(&[0, 0]).is_spike());
    }

    #[test]
    fn minimal_spike_examples() {
        assert_eq!(minimal_spike(5, 42).unwrap(), m(&[31, 7, 3, 1, 0]));
        assert_eq!(minimal_spike(5, 19).unwrap(), m(&[15, 3, 1, 0, 0]));
        assert_eq!(minimal_spike(1, 2), None);
        assert_eq!(minimal_spike(2, 6).unwrap(), m(&[3, 3]));
        assert_eq!(minimal_spike(5, 89).unwrap(), m(&[63, 15, 7, 3, 1]));
    }

    #[test]
    fn minimal_spike_absent_iff_mu_exceeds_arity() {
        for t in 1..=5u32 {
            for n in 1..=64u64 {
                let spike = minimal_spike(t, n);
                assert_eq!(spike.is_none(), mu(n) > t, "t = {t}, n = {n}");
                if let Some(z) = spike {
                    assert!(z.is_spike());
                    assert_eq!(z.degree(), n);
                    let nonzero = z.exponents().iter().filter(|&&a| a > 0).count() as u32;
                    assert_eq!(nonzero, mu(n));
                }
            }
        }
    }

    #[test]
    fn spikes_have_weakly_decreasing_weight() {
        // Every spike of (P_t)_n for t <= 5, n <= 64.
        for t in 1..=5u32 {
            for n in 0..=64u64 {
                for x in enumerate_monomials(t, n) {
                    if x.is_spike() {
                        assert!(
                            x.weight_vector().is_weakly_decreasing(),
                            "spike {x} of degree {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spike_for_weight_examples() {
        assert_eq!(
            spike_for_weight(5, &w(&[4, 3, 2, 1, 1])).unwrap(),
            m(&[31, 7, 3, 1, 0])
        );
        assert_eq!(spike_for_weight(5, &w(&[3, 2, 3])), None);
        assert_eq!(spike_for_weight(2, &w(&[2, 2])).unwrap(), m(&[3, 3]));
    }

    #[test]
    fn spike_for_weight_roundtrip() {
        // weight_vector(spike_for_weight(omega)) = omega for weakly
        // decreasing omega with omega_1 <= t and degree <= 64.
        for t in 1..=5u32 {
            for n in 0..=64u64 {
                for omega in weights_of_degree(t, n) {
                    if omega.is_weakly_decreasing() {
                        let z = spike_for_weight(t, &omega).expect("spike must exist");
                        assert_eq!(z.weight_vector(), omega, "t = {t}, n = {n}");
                        assert!(z.is_spike());
                    }
                }
            }
        }
    }

    #[test]
    fn block_enumeration_partitions_degree() {
        for t in 1..=4u32 {
            for n in 0..=12u64 {
                let total: usize = weights_of_degree(t, n)
                    .iter()
                    .map(|om| monomials_of_weight(t, om).len())
                    .sum();
                assert_eq!(total, enumerate_monomials(t, n).len());
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let x = m(&[31, 7, 3, 1, 0]);
        assert_eq!(x.to_string(), "x1^31 x2^7 x3^3 x4");
        assert_eq!(parse_monomial("x1^31 x2^7 x3^3 x4", 5).unwrap(), x);
        assert_eq!(parse_monomial("1", 3).unwrap(), Monomial::one(3));
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert!(parse_monomial("x9", 3).is_err());
        assert!(parse_monomial("y2", 3).is_err());

        let om = w(&[4, 3, 2, 1, 1]);
        assert_eq!(om.to_string(), "(4,3,2,1,1)");
        assert_eq!(parse_weight_vector("4,3,2,1,1").unwrap(), om);
        assert_eq!(parse_weight_vector("(4,3,2,1,1)").unwrap(), om);
    }
}
