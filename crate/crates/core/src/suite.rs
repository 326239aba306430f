//! The paper verification suite: every headline number and property in one
//! runnable list, shared by the CLI and the acceptance tests.

use std::time::Instant;

use crate::arith::{mu, predict_dim_inductive};
use crate::engine::{singer_hit_test, Engine, EngineConfig, Strategy};
use crate::error::Result;
use crate::monomial::{enumerate_monomials, parse_weight_vector, Monomial, WeightVector};
use crate::steenrod::{sq, Polynomial};
use crate::summaps::{conjecture_gts_check, efc_partition, psi, PairLL};

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: usize,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl CriterionOutcome {
    fn record(
        id: usize,
        description: &str,
        expected: impl Into<String>,
        computed: impl Into<String>,
        pass: bool,
        start: Instant,
    ) -> Self {
        CriterionOutcome {
            id,
            description: description.to_string(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

fn engine_with(base: &EngineConfig, strategy: Strategy) -> Result<Engine> {
    Engine::new(EngineConfig {
        strategy,
        ..base.clone()
    })
}

/// Run the whole list. The base configuration supplies cache directory,
/// thread count and memory ceiling; each criterion pins its own strategy.
pub fn paper_suite(base: &EngineConfig) -> Result<Vec<CriterionOutcome>> {
    let mut out = Vec::new();
    let mono = engine_with(base, Strategy::Monolithic)?;
    let strat = engine_with(base, Strategy::Stratified)?;

    // 1: dim(QP_4)_19 = dim(QP_4)_42 = 140, linked by the Kameko map.
    {
        let start = Instant::now();
        let d19 = mono.admissible_basis(4, 19)?.dim;
        let d42 = mono.admissible_basis(4, 42)?.dim;
        let kameko = mono.kameko_check(4, 19)?;
        let pass = d19 == 140 && d42 == 140 && kameko.dims_equal && kameko.bijective;
        out.push(CriterionOutcome::record(
            1,
            "dim(QP_4)_19 and dim(QP_4)_42, Kameko-linked",
            "140 and 140, bijective",
            format!("{d19} and {d42}, bijective={}", kameko.bijective),
            pass,
            start,
        ));
    }

    // 2: dim(QP_5)_42 = 2520 under the stratified strategy.
    let report_5_42 = {
        let start = Instant::now();
        let r = strat.admissible_basis(5, 42)?;
        out.push(CriterionOutcome::record(
            2,
            "dim(QP_5)_42, stratified",
            "2520",
            r.dim.to_string(),
            r.dim == 2520,
            start,
        ));
        r
    };

    // 3: zero part 700, positive top block 1820, the two other named
    // weight blocks empty.
    {
        let start = Instant::now();
        let (zero, positive) = strat.split_parts(&report_5_42)?;
        let w2 = strat
            .weight_block_basis(5, 42, &parse_weight_vector("4,3,2,3")?)?
            .dim;
        let w3 = strat
            .weight_block_basis(5, 42, &parse_weight_vector("4,3,4,2")?)?
            .dim;
        let top = strat
            .weight_block_basis(5, 42, &parse_weight_vector("4,3,2,1,1")?)?;
        let top_positive = top
            .admissibles
            .iter()
            .filter(|m| m.is_positive())
            .count() as u64;
        let pass = zero.dim == 700 && positive.dim == 1820 && w2 == 0 && w3 == 0
            && top_positive == 1820;
        out.push(CriterionOutcome::record(
            3,
            "(5,42) zero part, positive top block, empty blocks",
            "700 / 1820 / 0 / 0",
            format!("{} / {top_positive} / {w2} / {w3}", zero.dim),
            pass,
            start,
        ));
    }

    // 4: the E/F/C partition of the positive top block.
    {
        let start = Instant::now();
        let efc = efc_partition(&strat, 5, 42)?;
        let total = efc.e.len() + efc.f.len() + efc.c.len();
        let pass = efc.e.len() == 542
            && efc.f.len() == 248
            && efc.c.len() == 1030
            && total == 1820
            && efc.block_positive_dim == 1820
            && efc.violations.is_empty();
        out.push(CriterionOutcome::record(
            4,
            "E/F/C partition of the positive block",
            "|E|=542 |F|=248 |C|=1030 total=1820, disjoint cover",
            format!(
                "|E|={} |F|={} |C|={} total={total}, violations={}",
                efc.e.len(),
                efc.f.len(),
                efc.c.len(),
                efc.violations.len()
            ),
            pass,
            start,
        ));
    }

    // 5: first conjecture at t = 5, degree 42.
    {
        let start = Instant::now();
        let verdict = conjecture_gts_check(&strat, 5, 42)?;
        out.push(CriterionOutcome::record(
            5,
            "psi images of (P_4)_42 admissibles are (P_5)_42 admissible",
            "holds",
            if verdict.holds {
                "holds".to_string()
            } else {
                format!("{} violations", verdict.violations.len())
            },
            verdict.holds,
            start,
        ));
    }

    // 6: the GL_5-invariant subspace in degree 42 is zero.
    {
        let start = Instant::now();
        let inv = crate::glt::invariant_subspace(&strat, 5, 42)?;
        out.push(CriterionOutcome::record(
            6,
            "dim (QP_5)_42^GL_5",
            "0",
            inv.dim().to_string(),
            inv.dim() == 0,
            start,
        ));
    }

    // 7: the inductive prediction one arity up.
    {
        let start = Instant::now();
        let predicted = predict_dim_inductive(6, 2520);
        out.push(CriterionOutcome::record(
            7,
            "(2^6 - 1) * 2520",
            "158760",
            predicted.to_string(),
            predicted == 158760,
            start,
        ));
    }

    // 8: vanishing whenever mu(n) > t, for t <= 3, n <= 40.
    {
        let start = Instant::now();
        let mut failures = Vec::new();
        let mut checked = 0;
        for t in 1..=3u32 {
            for n in 1..=40u64 {
                if mu(n) > t {
                    checked += 1;
                    let dim = strat.admissible_basis(t, n)?.dim;
                    if dim != 0 {
                        failures.push(format!("(t={t}, n={n}) -> {dim}"));
                    }
                }
            }
        }
        out.push(CriterionOutcome::record(
            8,
            "vanishing for mu(n) > t, t <= 3, n <= 40",
            format!("{checked} cases all zero"),
            if failures.is_empty() {
                format!("{checked} cases all zero")
            } else {
                failures.join(", ")
            },
            failures.is_empty(),
            start,
        ));
    }

    // 9: both strategies against the naive dense oracle, t <= 3, n <= 14.
    {
        let start = Instant::now();
        let mut mismatches = Vec::new();
        for t in 1..=3u32 {
            for n in 0..=14u64 {
                let expected: Vec<Monomial> = crate::oracle::admissible_basis_naive(t, n)
                    .into_iter()
                    .map(Monomial::new)
                    .collect();
                for engine in [&mono, &strat] {
                    let got = engine.admissible_basis(t, n)?;
                    if got.admissibles != expected {
                        mismatches.push(format!("(t={t}, n={n})"));
                    }
                }
            }
        }
        out.push(CriterionOutcome::record(
            9,
            "oracle equivalence, t <= 3, n <= 14, both strategies",
            "monomial-for-monomial equality",
            if mismatches.is_empty() {
                "monomial-for-monomial equality".to_string()
            } else {
                mismatches.join(", ")
            },
            mismatches.is_empty(),
            start,
        ));
    }

    // 10: spike admissibility, filter soundness, and the psi examples.
    {
        let start = Instant::now();
        let mut problems = Vec::new();

        // Spikes are admissible in every instance computed here.
        for (t, n) in [(4u32, 19u64), (4, 42), (5, 19), (5, 42)] {
            let inst = strat.instance(t, n)?;
            for z in spikes_of_degree(t, n) {
                if !inst.is_admissible(&z) {
                    problems.push(format!("spike {z} missing at (t={t}, n={n})"));
                }
            }
        }

        // Singer filter soundness: certified-hit monomials reduce to zero.
        for t in 2..=4u32 {
            for n in 1..=if t == 4 { 20 } else { 14 } {
                if mu(n) > t {
                    continue;
                }
                let inst = mono.instance(t, n)?;
                for x in enumerate_monomials(t, n) {
                    if singer_hit_test(&x)?
                        && !inst.reduce(&Polynomial::from_monomial(x.clone()))?.is_zero()
                    {
                        problems.push(format!("singer-certified {x} not hit at (t={t}, n={n})"));
                    }
                }
            }
        }

        // Kameko filter soundness on liftable shapes: w = x_1..x_t, r = 1.
        for t in 2..=3u32 {
            for lower_n in 1..=7u64 {
                let upper_n = 2 * lower_n + t as u64;
                let inst_upper = mono.instance(t, upper_n)?;
                let w = Monomial::new(vec![1; t as usize]);
                for z in enumerate_monomials(t, lower_n) {
                    let lifted = Monomial::new(
                        z.exponents().iter().map(|&a| 2 * a + 1).collect(),
                    );
                    if mono.kameko_inadmissible_test(&lifted, &w, &z, 1)?
                        && inst_upper.is_admissible(&lifted)
                    {
                        problems.push(format!("kameko-filtered {lifted} is in the basis"));
                    }
                }
            }
        }

        // The psi example and its non-commutation witness, bit-exact.
        let pair = PairLL::new(1, vec![2, 3, 4], 4)?;
        let x = Monomial::new(vec![12, 6, 9]);
        let image = psi(&pair, 4, &x)?;
        if image != Some(Monomial::new(vec![7, 8, 4, 8])) {
            problems.push("psi example mismatch".to_string());
        }
        let witness = sq(
            2,
            &Polynomial::from_monomial(Monomial::new(vec![7, 8, 4, 8])),
        );
        if witness != Polynomial::from_monomial(Monomial::new(vec![9, 8, 4, 8])) {
            problems.push("Sq^2 witness mismatch".to_string());
        }

        out.push(CriterionOutcome::record(
            10,
            "spike admissibility, filter soundness, psi examples",
            "no violations",
            if problems.is_empty() {
                "no violations".to_string()
            } else {
                problems.join("; ")
            },
            problems.is_empty(),
            start,
        ));
    }

    // 11: rederive the (5,19) weight-vector shortlist from the computed
    // basis. The mu-compatible stratum (omega_1 = 3) must be exactly the
    // published list; the all-odd spike stratum (omega_1 = 5) also occurs
    // and is reported alongside.
    {
        let start = Instant::now();
        let inst = mono.instance(5, 19)?;
        let mut occurring: Vec<WeightVector> = inst
            .blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| !inst.block_admissible_list(*i).is_empty())
            .map(|(_, b)| b.weight.clone())
            .collect();
        occurring.sort();
        let stratum: Vec<String> = occurring
            .iter()
            .filter(|w| w.entry(1) == 3)
            .map(|w| w.to_string())
            .collect();
        let extras: Vec<String> = occurring
            .iter()
            .filter(|w| w.entry(1) != 3)
            .map(|w| w.to_string())
            .collect();
        let expected = ["(3,2,1,1)", "(3,2,3)", "(3,4,2)"];
        let pass = stratum == expected;
        out.push(CriterionOutcome::record(
            11,
            "(5,19) weight shortlist from the computed basis",
            "omega_1=3 stratum exactly {(3,2,1,1),(3,2,3),(3,4,2)}",
            format!(
                "stratum {{{}}}; further occurring weights {{{}}}",
                stratum.join(","),
                extras.join(",")
            ),
            pass,
            start,
        ));
    }

    Ok(out)
}

/// All spikes of one degree.
fn spikes_of_degree(t: u32, n: u64) -> Vec<Monomial> {
    fn rec(t: usize, n: u64, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if t == 0 {
            if n == 0 {
                out.push(Monomial::new(prefix.clone()));
            }
            return;
        }
        let mut b = 0u32;
        loop {
            let val = (1u64 << b) - 1;
            if val > n {
                break;
            }
            prefix.push(val as u32);
            rec(t - 1, n - val, prefix, out);
            prefix.pop();
            b += 1;
        }
    }
    let mut out = Vec::new();
    rec(t as usize, n, &mut Vec::new(), &mut out);
    out
}

/// Render outcomes as an aligned pass/fail table.
pub fn render_table(outcomes: &[CriterionOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        s.push_str(&format!(
            "[{}] criterion {:>2}: {} | expected {} | computed {} | {} ms\n",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.description,
            o.expected,
            o.computed,
            o.elapsed_ms,
        ));
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    s.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    s
}
