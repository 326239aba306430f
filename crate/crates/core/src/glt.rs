//! The GL_t action on the cohit space and its invariant subspace.
//!
//! GL_t(F2) acts on polynomials by linear substitution of variables; the
//! action descends to the quotient by the hit subspace. Matrices of the
//! standard generators (adjacent transpositions plus one transvection) are
//! computed in the admissible basis by substituting into each basis monomial
//! and reducing; the invariant subspace is the joint kernel of M_g + I.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::gf2::{echelonize, nullspace, BitRow};
use crate::monomial::Monomial;
use crate::steenrod::Polynomial;

/// A generator of GL_t(F2) acting on variables (1-indexed).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// x_i <-> x_j.
    Swap(usize, usize),
    /// x_target -> x_target + x_add, other variables fixed.
    Transvection { target: usize, add: usize },
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::Swap(i, j) => write!(f, "swap({i},{j})"),
            Generator::Transvection { target, add } => {
                write!(f, "x{target} -> x{target}+x{add}")
            }
        }
    }
}

impl Generator {
    fn validate(&self, t: u32) -> Result<()> {
        let (a, b) = match *self {
            Generator::Swap(i, j) => (i, j),
            Generator::Transvection { target, add } => (target, add),
        };
        if a == b || a < 1 || b < 1 || a > t as usize || b > t as usize {
            return Err(Error::Precondition(format!(
                "generator {self} is invalid for arity {t}"
            )));
        }
        Ok(())
    }
}

/// Standard generating set: adjacent transpositions and, for t >= 2, the
/// single transvection x_1 -> x_1 + x_2. Empty for t = 1.
pub fn generating_set(t: u32) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..t as usize {
        out.push(Generator::Swap(i, i + 1));
    }
    if t >= 2 {
        out.push(Generator::Transvection { target: 1, add: 2 });
    }
    out
}

/// Substitute a generator into a monomial and expand over F2. Swaps permute
/// exponents; a transvection expands (x_i + x_j)^a by binomial parity.
pub fn substitute(g: &Generator, x: &Monomial) -> Result<Polynomial> {
    let t = x.arity();
    g.validate(t)?;
    match *g {
        Generator::Swap(i, j) => {
            let mut exps = x.exponents().to_vec();
            exps.swap(i - 1, j - 1);
            Ok(Polynomial::from_monomial(Monomial::new(exps)))
        }
        Generator::Transvection { target, add } => {
            let a = x.exponents()[target - 1];
            let mut out = Polynomial::zero(t, x.degree());
            // (x_target + x_add)^a: k runs over submasks of a (odd C(a,k)).
            let mut k = a;
            loop {
                let mut exps = x.exponents().to_vec();
                exps[target - 1] = k;
                exps[add - 1] += a - k;
                out.toggle(Monomial::new(exps));
                if k == 0 {
                    break;
                }
                k = (k - 1) & a;
            }
            Ok(out)
        }
    }
}

/// Matrix of a generator on the cohit space in the admissible basis: row c
/// holds the coordinates of the reduced substitution of basis monomial c.
#[derive(Clone)]
pub struct ActionMatrix {
    pub generator: Generator,
    pub t: u32,
    pub n: u64,
    pub rows: Vec<BitRow>,
}

impl ActionMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(c, row)| row.count_ones() == 1 && row.get(c))
    }

    /// Composite action: first self, then other.
    pub fn compose(&self, other: &ActionMatrix) -> ActionMatrix {
        let dim = self.dim();
        assert_eq!(dim, other.dim());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitRow::zero(dim.max(1));
                for j in row.iter_set_cols() {
                    acc.xor_assign(&other.rows[j]);
                }
                acc
            })
            .collect();
        ActionMatrix {
            generator: self.generator,
            t: self.t,
            n: self.n,
            rows,
        }
    }

    pub fn transpose(&self) -> Vec<BitRow> {
        let dim = self.dim();
        let mut out = vec![BitRow::zero(dim.max(1)); dim];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_set_cols() {
                out[j].set(i, true);
            }
        }
        out
    }

    /// Invertibility via the rank of the row span.
    pub fn is_invertible(&self) -> bool {
        let dim = self.dim();
        echelonize(dim.max(1), self.rows.to_vec())
            .map(|e| e.rank() == dim)
            .unwrap_or(false)
    }
}

/// Build the action matrix of one generator on `(QP_t)_n`.
pub fn action_matrix(engine: &Engine, g: Generator, t: u32, n: u64) -> Result<ActionMatrix> {
    g.validate(t)?;
    let inst = engine.instance(t, n)?;
    let admissibles = inst.admissibles();
    let rows = admissibles
        .par_iter()
        .map(|a| {
            let image = substitute(&g, a)?;
            inst.reduce_to_coords(&image)
        })
        .collect::<Result<Vec<BitRow>>>()?;
    Ok(ActionMatrix {
        generator: g,
        t,
        n,
        rows,
    })
}

/// A basis of the GL_t-invariant subspace in admissible coordinates.
#[derive(Clone)]
pub struct InvariantBasis {
    pub t: u32,
    pub n: u64,
    pub vectors: Vec<BitRow>,
    pub admissibles: Vec<Monomial>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// JSON: coordinate vectors as 0/1 arrays plus the basis monomial list.
    pub fn to_json(&self) -> serde_json::Value {
        let vectors: Vec<Vec<u8>> = self
            .vectors
            .iter()
            .map(|v| {
                (0..self.admissibles.len())
                    .map(|c| u8::from(v.get(c)))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "t": self.t,
            "n": self.n,
            "dim": self.dim(),
            "admissibles": self.admissibles,
            "vectors": vectors,
        })
    }

    /// Pretty form of one invariant as a sum of admissible classes.
    pub fn describe(&self, idx: usize) -> String {
        let mut s = String::new();
        for (k, c) in self.vectors[idx].iter_set_cols().enumerate() {
            if k > 0 {
                let _ = write!(s, " + ");
            }
            let _ = write!(s, "[{}]", self.admissibles[c]);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Joint kernel of (M_g + I) over the configured generating set. For t = 1
/// the group is trivial and the whole space is invariant.
pub fn invariant_subspace(engine: &Engine, t: u32, n: u64) -> Result<InvariantBasis> {
    invariant_subspace_for(engine, t, n, &generating_set(t))
}

/// Same, for an explicit generating set (used to cross-check independence
/// of the choice).
pub fn invariant_subspace_for(
    engine: &Engine,
    t: u32,
    n: u64,
    generators: &[Generator],
) -> Result<InvariantBasis> {
    let inst = engine.instance(t, n)?;
    let admissibles = inst.admissibles();
    let dim = admissibles.len();
    let mut stacked: Vec<BitRow> = Vec::new();
    for &g in generators {
        let m = action_matrix(engine, g, t, n)?;
        // Fixed vectors of the induced action: (M^T + I) v = 0.
        let mut mt = m.transpose();
        for (i, row) in mt.iter_mut().enumerate() {
            row.toggle(i);
        }
        stacked.extend(mt);
    }
    let vectors = nullspace(dim.max(1), stacked)?;
    // nullspace of an empty stack over dim columns is the full space; that
    // matches the trivial group. For dim = 0 there are no vectors at all.
    let vectors = if dim == 0 { Vec::new() } else { vectors };
    Ok(InvariantBasis {
        t,
        n,
        vectors,
        admissibles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{EngineConfig, Strategy};
    use crate::steenrod::sq;

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
    fn substitute_examples() {
        let swap = Generator::Swap(1, 2);
        assert_eq!(
            substitute(&swap, &m(&[3, 1])).unwrap(),
            Polynomial::from_monomial(m(&[1, 3]))
        );
        let tv = Generator::Transvection { target: 1, add: 2 };
        // Frobenius: (x1+x2)^2 = x1^2 + x2^2.
        let sq2 = substitute(&tv, &m(&[2, 0])).unwrap();
        assert_eq!(
            sq2,
            Polynomial::from_terms(2, 2, vec![m(&[2, 0]), m(&[0, 2])]).unwrap()
        );
        // x1 x2 -> x1 x2 + x2^2.
        let mix = substitute(&tv, &m(&[1, 1])).unwrap();
        assert_eq!(
            mix,
            Polynomial::from_terms(2, 2, vec![m(&[1, 1]), m(&[0, 2])]).unwrap()
        );
        assert!(substitute(&Generator::Swap(1, 1), &m(&[1, 1])).is_err());
        assert!(substitute(&Generator::Swap(1, 3), &m(&[1, 1])).is_err());
    }

    #[test]
    fn generator_matrices_are_involutions() {
        let e = engine();
        for n in 1..=12u64 {
            for g in generating_set(3) {
                let mat = action_matrix(&e, g, 3, n).unwrap();
                assert!(mat.is_invertible(), "{g} at n={n}");
                assert!(mat.compose(&mat).is_identity(), "{g} squared at n={n}");
            }
        }
    }

    #[test]
    fn braid_relation() {
        let e = engine();
        for n in 1..=10u64 {
            let s1 = action_matrix(&e, Generator::Swap(1, 2), 3, n).unwrap();
            let s2 = action_matrix(&e, Generator::Swap(2, 3), 3, n).unwrap();
            let lhs = s1.compose(&s2).compose(&s1);
            let rhs = s2.compose(&s1).compose(&s2);
            for (a, b) in lhs.rows.iter().zip(&rhs.rows) {
                assert_eq!(a, b, "braid relation at n={n}");
            }
        }
    }

    #[test]
    fn hit_vectors_map_to_hit_vectors() {
        let e = engine();
        for t in 2..=4u32 {
            let degrees: Vec<u64> = if t == 4 { vec![10, 19] } else { vec![6, 9, 12] };
            for n in degrees {
                let inst = e.instance(t, n).unwrap();
                for g in generating_set(t) {
                    // Sample hit vectors Sq^i(m).
                    for i in [1u64, 2] {
                        let mut count = 0;
                        for src in crate::monomial::enumerate_monomials(t, n - i) {
                            if count > 10 {
                                break;
                            }
                            let h = sq(i, &Polynomial::from_monomial(src));
                            if h.is_zero() {
                                continue;
                            }
                            count += 1;
                            let mut image = Polynomial::zero(t, n);
                            for term in h.terms() {
                                image = image
                                    .add(&substitute(&g, term).unwrap())
                                    .unwrap();
                            }
                            assert!(
                                inst.reduce(&image).unwrap().is_zero(),
                                "hit vector escaped the hit space under {g}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invariants_trivial_group() {
        let e = engine();
        for n in [1u64, 3, 7] {
            let inv = invariant_subspace(&e, 1, n).unwrap();
            let dim_qp = e.admissible_basis(1, n).unwrap().dim;
            assert_eq!(inv.dim() as u64, dim_qp, "GL_1 fixes everything");
        }
    }

    #[test]
    fn invariants_two_variables_degree_two() {
        let e = engine();
        let inv = invariant_subspace(&e, 2, 2).unwrap();
        assert_eq!(inv.dim(), 1);
        assert_eq!(inv.describe(0), "[x1 x2]");
    }

    #[test]
    fn invariant_dim_independent_of_generating_set() {
        let e = engine();
        for t in 2..=3u32 {
            for n in 1..=8u64 {
                let standard = invariant_subspace(&e, t, n).unwrap().dim();
                // All transpositions plus a different transvection.
                let mut alt = Vec::new();
                for i in 1..=t as usize {
                    for j in i + 1..=t as usize {
                        alt.push(Generator::Swap(i, j));
                    }
                }
                alt.push(Generator::Transvection { target: 2, add: 1 });
                let other = invariant_subspace_for(&e, t, n, &alt).unwrap().dim();
                assert_eq!(standard, other, "t={t}, n={n}");
            }
        }
    }

    #[test]
    fn action_well_defined_across_spanning_modes() {
        use crate::steenrod::SqMode;
        let gen_mode = Engine::new(EngineConfig {
            strategy: Strategy::Monolithic,
            sq_mode: SqMode::GeneratorSquares,
            ..EngineConfig::default()
        })
        .unwrap();
        let all_mode = Engine::new(EngineConfig {
            strategy: Strategy::Monolithic,
            sq_mode: SqMode::AllSquares,
            ..EngineConfig::default()
        })
        .unwrap();
        for n in 1..=8u64 {
            for g in generating_set(3) {
                let a = action_matrix(&gen_mode, g, 3, n).unwrap();
                let b = action_matrix(&all_mode, g, 3, n).unwrap();
                for (x, y) in a.rows.iter().zip(&b.rows) {
                    assert_eq!(x, y, "{g} at n={n}");
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let e = engine();
        let inv = invariant_subspace(&e, 2, 2).unwrap();
        let v = inv.to_json();
        assert_eq!(v["dim"], 1);
        assert_eq!(v["vectors"][0], serde_json::json!([1]));
        assert_eq!(v["admissibles"][0], serde_json::json!([1, 1]));
    }
}
