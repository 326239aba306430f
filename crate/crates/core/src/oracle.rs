//! Naive reference implementations used only to cross-validate the engine.
//!
//! Everything here recomputes from first principles with textbook methods:
//! binomial parity from the Pascal triangle, the Steenrod action by the
//! one-variable Cartan recursion, the monomial order by direct bit counting,
//! and elimination on plain bool matrices. Nothing in this module calls the
//! packed-bit kernel, the composition-based square, or the engine.

use std::cmp::Ordering;

/// C(a, i) mod 2 from the Pascal triangle.
pub fn binom_parity_pascal(a: usize, i: usize) -> bool {
    if i > a {
        return false;
    }
    let mut row = vec![true];
    for _ in 0..a {
        let mut next = vec![true];
        for w in row.windows(2) {
            next.push(w[0] ^ w[1]);
        }
        next.push(true);
        row = next;
    }
    row[i]
}

/// Terms of Sq^i on a monomial by the Cartan recursion over the first
/// variable, with cancellation handled by symmetric difference.
pub fn sq_terms_naive(i: usize, exps: &[u32]) -> Vec<Vec<u32>> {
    fn rec(i: usize, exps: &[u32]) -> Vec<Vec<u32>> {
        if exps.is_empty() {
            return if i == 0 { vec![vec![]] } else { vec![] };
        }
        let a = exps[0] as usize;
        let mut out = Vec::new();
        for k in 0..=i {
            if !binom_parity_pascal(a, k) {
                continue;
            }
            for rest in rec(i - k, &exps[1..]) {
                let mut term = Vec::with_capacity(exps.len());
                term.push((a + k) as u32);
                term.extend(rest);
                out.push(term);
            }
        }
        out
    }
    let mut terms = rec(i, exps);
    terms.sort();
    // XOR semantics: paired duplicates cancel.
    let mut result: Vec<Vec<u32>> = Vec::new();
    for term in terms {
        if result.last() == Some(&term) {
            result.pop();
        } else {
            result.push(term);
        }
    }
    result
}

/// Weight vector by direct bit counting, no trailing-zero trimming needed
/// for comparison purposes.
pub fn weight_naive(exps: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; 32];
    for &a in exps {
        for (bit, slot) in out.iter_mut().enumerate() {
            if a >> bit & 1 == 1 {
                *slot += 1;
            }
        }
    }
    out
}

/// The monomial order: weight vectors left-lex, then exponent vectors
/// left-lex.
pub fn cmp_naive(a: &[u32], b: &[u32]) -> Ordering {
    let wa = weight_naive(a);
    let wb = weight_naive(b);
    for (x, y) in wa.iter().zip(&wb) {
        if x != y {
            return x.cmp(y);
        }
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// All exponent vectors of degree n in t variables, descending.
pub fn enumerate_naive(t: u32, n: u64) -> Vec<Vec<u32>> {
    fn rec(t: usize, n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if t == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            rec(t - 1, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(t as usize, n as u32, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| cmp_naive(b, a));
    out
}

/// Admissible monomials of (t, n) by dense bool-matrix elimination over the
/// spanning set of every positive square, exponent vectors descending.
pub fn admissible_basis_naive(t: u32, n: u64) -> Vec<Vec<u32>> {
    let columns = enumerate_naive(t, n);
    let index_of = |exps: &[u32]| -> usize {
        columns
            .iter()
            .position(|c| c.as_slice() == exps)
            .expect("term of the right degree")
    };

    let mut rows: Vec<Vec<bool>> = Vec::new();
    for i in 1..=n as usize {
        for src in enumerate_naive(t, n - i as u64) {
            let terms = sq_terms_naive(i, &src);
            if terms.is_empty() {
                continue;
            }
            let mut row = vec![false; columns.len()];
            for term in terms {
                row[index_of(&term)] ^= true;
            }
            if row.iter().any(|&b| b) {
                rows.push(row);
            }
        }
    }

    // Textbook forward elimination recording the leading columns.
    let width = columns.len();
    let mut leads = vec![false; width];
    let mut pivots: Vec<Vec<bool>> = Vec::new();
    let mut pivot_lead: Vec<usize> = Vec::new();
    for mut row in rows {
        while let Some(lead) = row.iter().position(|&b| b) {
            if let Some(p) = pivot_lead.iter().position(|&l| l == lead) {
                let pivot = pivots[p].clone();
                for (r, p) in row.iter_mut().zip(&pivot) {
                    *r ^= p;
                }
            } else {
                leads[lead] = true;
                pivots.push(row.clone());
                pivot_lead.push(lead);
                break;
            }
        }
    }

    columns
        .into_iter()
        .enumerate()
        .filter(|(c, _)| !leads[*c])
        .map(|(_, m)| m)
        .collect()
}
