//! The hit engine: admissible monomial bases of `(QP_t)_n`, weight-block
//! bases, the zero/positive split, the Kameko map, and the hit-test criteria.
//!
//! A monomial is inadmissible exactly when it is the largest monomial of some
//! element of the hit subspace, so after echelonizing a spanning set of that
//! subspace under the descending monomial column order, the admissible
//! monomials are the non-leading columns.
//!
//! Two strategies are cross-checked. The monolithic strategy eliminates over
//! every monomial of the degree. The stratified strategy exploits the weight
//! filtration: every monomial whose weight vector is smaller than that of the
//! minimal spike is hit, so whole low-weight blocks are certified without
//! elimination and the columns are restricted to the blocks at or above the
//! minimal-spike weight. Forward elimination never reads a column from a
//! lower block, so the leading columns inside the retained blocks, and hence
//! the admissible monomials, agree with the monolithic run.

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::{binomial, mu};
use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::gf2::{projected_bytes, BitRow, Staircase};
use crate::monomial::{
    minimal_spike, monomials_of_weight, weights_of_degree, Monomial, WeightVector,
};
use crate::report::{BasisReport, Part, Scope};
use crate::steenrod::{for_each_sq_term, Polynomial, SqMode};

/// Monolithic projections beyond this are considered heavy; the auto
/// strategy switches to stratified and the CLI demands confirmation.
pub const HEAVY_BYTES: u128 = 256 << 20;

pub const DEFAULT_MEM_LIMIT: u64 = 12 << 30;
pub const MIN_MEM_LIMIT: u64 = 64 << 20;

const INSERT_CHUNK: usize = 2048;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Monolithic,
    Stratified,
}

impl Strategy {
    pub fn token(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Monolithic => "monolithic",
            Strategy::Stratified => "stratified",
        }
    }

    pub fn parse(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "monolithic" => Ok(Strategy::Monolithic),
            "stratified" => Ok(Strategy::Stratified),
            _ => Err(Error::Parse(format!("bad strategy `{s}`"))),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.token())
    }
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub strategy: Strategy,
    /// Ceiling on projected echelon storage, in bytes.
    pub mem_limit: u64,
    /// 0 means the global rayon default.
    pub threads: usize,
    pub sq_mode: SqMode,
    pub cache_dir: Option<PathBuf>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            strategy: Strategy::Auto,
            mem_limit: DEFAULT_MEM_LIMIT,
            threads: 0,
            sq_mode: SqMode::GeneratorSquares,
            cache_dir: None,
        }
    }
}

/// One occurring weight vector of the degree, with its block size. Blocks
/// below the stratified cutoff carry `eliminated: false`: their quotient is
/// zero by the minimal-spike hit criterion and they were never enumerated.
#[derive(Clone, Debug)]
pub struct BlockData {
    pub weight: WeightVector,
    pub size: u64,
    pub eliminated: bool,
}

/// A fully built (t, n) computation: retained columns, the echelon staircase
/// of the hit subspace over them, and the admissible monomials per block.
pub struct Instance {
    pub t: u32,
    pub n: u64,
    pub strategy_used: Strategy,
    pub cutoff: Option<WeightVector>,
    pub blocks: Vec<BlockData>,
    columns: Vec<Monomial>,
    col_of: HashMap<Vec<u32>, u32>,
    staircase: Staircase,
    block_admissibles: Vec<Vec<Monomial>>,
    admissible_set: HashSet<Monomial>,
    adm_index: Vec<u32>,
    pub elapsed_ms: u64,
}

impl Instance {
    pub fn dim(&self) -> u64 {
        self.block_admissibles.iter().map(|b| b.len() as u64).sum()
    }

    /// Admissible monomials in canonical descending order.
    pub fn admissibles(&self) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim() as usize);
        for b in &self.block_admissibles {
            out.extend(b.iter().cloned());
        }
        out
    }

    pub fn is_admissible(&self, m: &Monomial) -> bool {
        self.admissible_set.contains(m)
    }

    pub fn block_admissible_list(&self, idx: usize) -> &[Monomial] {
        &self.block_admissibles[idx]
    }

    pub fn retained_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn staircase_bytes(&self) -> u64 {
        self.staircase.storage_bytes()
    }

    /// Canonical representative modulo the hit subspace: supported on
    /// admissible monomials only; zero exactly for hit polynomials.
    /// Terms in dropped low-weight blocks are hit and vanish.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.arity() != self.t {
            return Err(Error::ArityMismatch(f.arity(), self.t));
        }
        if !f.is_zero() && f.degree() != self.n {
            return Err(Error::DegreeMismatch(f.degree(), self.n));
        }
        let mut v = self.to_bitrow(f);
        self.staircase.reduce_in_place(&mut v);
        let mut out = Polynomial::zero(self.t, self.n);
        for c in v.iter_set_cols() {
            out.toggle(self.columns[c].clone());
        }
        Ok(out)
    }

    fn to_bitrow(&self, f: &Polynomial) -> BitRow {
        let mut v = BitRow::zero(self.columns.len().max(1));
        for m in f.terms() {
            if let Some(&c) = self.col_of.get(m.exponents()) {
                v.toggle(c as usize);
            } else {
                // Not retained: its weight is below the cutoff, hence hit.
                debug_assert!(
                    self.cutoff
                        .as_ref()
                        .is_some_and(|c| m.weight_vector() < *c),
                    "term {m} missing from the column table"
                );
            }
        }
        v
    }

    /// Coordinates of the canonical representative on the admissible basis,
    /// in the descending admissible order.
    pub fn reduce_to_coords(&self, f: &Polynomial) -> Result<BitRow> {
        if f.arity() != self.t {
            return Err(Error::ArityMismatch(f.arity(), self.t));
        }
        let mut v = self.to_bitrow(f);
        self.staircase.reduce_in_place(&mut v);
        let dim = self.dim() as usize;
        let mut coords = BitRow::zero(dim.max(1));
        for c in v.iter_set_cols() {
            debug_assert!(!self.staircase.is_leading(c));
            coords.set(self.adm_index[c] as usize, true);
        }
        Ok(coords)
    }
}

/// Computes and memoizes basis instances and serves reports, consulting the
/// on-disk cache when one is configured.
pub struct Engine {
    cfg: EngineConfig,
    cache: Option<Cache>,
    pool: Option<rayon::ThreadPool>,
    instances: Mutex<HashMap<(u32, u64), Arc<Instance>>>,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Result<Engine> {
        if cfg.mem_limit < MIN_MEM_LIMIT {
            return Err(Error::Precondition(format!(
                "memory ceiling must be at least {MIN_MEM_LIMIT} bytes"
            )));
        }
        let cache = cfg.cache_dir.as_ref().map(Cache::new);
        let pool = if cfg.threads > 0 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cfg.threads)
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Engine {
            cfg,
            cache,
            pool,
            instances: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_defaults() -> Engine {
        Engine::new(EngineConfig::default()).expect("default config is valid")
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(p) => p.install(f),
            None => f(),
        }
    }

    /// Resolve the auto strategy for a given instance size.
    pub fn resolve_strategy(&self, t: u32, n: u64) -> Strategy {
        match self.cfg.strategy {
            Strategy::Monolithic => Strategy::Monolithic,
            Strategy::Stratified => Strategy::Stratified,
            Strategy::Auto => {
                let projected = Self::projected_monolithic_bytes(t, n);
                if projected > HEAVY_BYTES || projected > (self.cfg.mem_limit / 2) as u128 {
                    Strategy::Stratified
                } else {
                    Strategy::Monolithic
                }
            }
        }
    }

    /// Projected monolithic echelon storage, for heavy-run gating.
    pub fn projected_monolithic_bytes(t: u32, n: u64) -> u128 {
        projected_bytes(binomial(n + t as u64 - 1, t as u64 - 1) as usize)
    }

    /// The fully built instance for (t, n), computing it if needed.
    pub fn instance(&self, t: u32, n: u64) -> Result<Arc<Instance>> {
        if t < 1 {
            return Err(Error::Precondition("arity must be at least 1".into()));
        }
        if let Some(inst) = self.instances.lock().unwrap().get(&(t, n)) {
            return Ok(inst.clone());
        }
        let strategy = self.resolve_strategy(t, n);
        let inst = Arc::new(self.run(|| {
            build_instance(t, n, strategy, self.cfg.sq_mode, self.cfg.mem_limit)
        })?);
        self.instances.lock().unwrap().insert((t, n), inst.clone());
        Ok(inst)
    }

    /// Drop a memoized instance (the report cache is unaffected).
    pub fn evict(&self, t: u32, n: u64) {
        self.instances.lock().unwrap().remove(&(t, n));
    }

    /// The admissible-basis report for the full degree.
    pub fn admissible_basis(&self, t: u32, n: u64) -> Result<Arc<BasisReport>> {
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.load(t, n, &Scope::Full, Part::All) {
                return Ok(Arc::new(hit));
            }
        }
        let inst = self.instance(t, n)?;
        let report = BasisReport::new(
            t,
            n,
            Scope::Full,
            Part::All,
            inst.strategy_used.token().to_string(),
            inst.admissibles(),
            inst.elapsed_ms,
        );
        if let Some(cache) = &self.cache {
            cache.store(&report)?;
        }
        Ok(Arc::new(report))
    }

    /// Partition a full/all report into its zero and positive parts.
    pub fn split_parts(&self, report: &BasisReport) -> Result<(BasisReport, BasisReport)> {
        if report.scope != Scope::Full || report.part != Part::All {
            return Err(Error::Precondition(
                "split_parts needs a full/all report".into(),
            ));
        }
        let zero = report.restricted(Part::Zero);
        let positive = report.restricted(Part::Positive);
        debug_assert_eq!(zero.dim + positive.dim, report.dim);
        if let Some(cache) = &self.cache {
            cache.store(&zero)?;
            cache.store(&positive)?;
        }
        Ok((zero, positive))
    }

    /// Basis of one weight block: the admissible monomials of weight exactly
    /// omega. Requires deg(omega) = n.
    pub fn weight_block_basis(
        &self,
        t: u32,
        n: u64,
        omega: &WeightVector,
    ) -> Result<Arc<BasisReport>> {
        if omega.degree() != n {
            return Err(Error::Precondition(format!(
                "deg{omega} = {} but n = {n}",
                omega.degree()
            )));
        }
        let scope = Scope::WeightBlock(omega.clone());
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.load(t, n, &scope, Part::All) {
                return Ok(Arc::new(hit));
            }
        }
        let inst = self.instance(t, n)?;
        let admissibles = match inst.blocks.iter().position(|b| b.weight == *omega) {
            None => Vec::new(),
            Some(idx) => inst.block_admissibles[idx].clone(),
        };
        let report = BasisReport::new(
            t,
            n,
            scope,
            Part::All,
            inst.strategy_used.token().to_string(),
            admissibles,
            inst.elapsed_ms,
        );
        if let Some(cache) = &self.cache {
            cache.store(&report)?;
        }
        Ok(Arc::new(report))
    }

    /// Sum of block dimensions against the full dimension, plus the partition
    /// property of the block admissible sets.
    pub fn block_decomposition_check(&self, t: u32, n: u64) -> Result<BlockDecomposition> {
        let inst = self.instance(t, n)?;
        let blocks: Vec<(WeightVector, u64)> = inst
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.weight.clone(), inst.block_admissibles[i].len() as u64))
            .collect();
        let total: u64 = blocks.iter().map(|(_, d)| d).sum();
        let mut holds = total == inst.dim();
        // Each block's admissibles carry exactly the block weight, so the
        // blocks partition the full admissible set.
        for (i, b) in inst.blocks.iter().enumerate() {
            for m in &inst.block_admissibles[i] {
                if m.weight_vector() != b.weight {
                    holds = false;
                }
            }
        }
        Ok(BlockDecomposition {
            holds,
            total_dim: inst.dim(),
            blocks,
        })
    }

    /// Canonical representative modulo the hit subspace.
    pub fn reduce_polynomial(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.is_zero() {
            return Ok(f.clone());
        }
        let inst = self.instance(f.arity(), f.degree())?;
        inst.reduce(f)
    }

    /// Both sides of the Kameko map: dimensions at 2n + t and n, and whether
    /// the induced map on admissible classes is a bijection.
    pub fn kameko_check(&self, t: u32, n: u64) -> Result<KamekoVerdict> {
        let upper_degree = 2 * n + t as u64;
        let upper = self.instance(t, upper_degree)?;
        let lower = self.instance(t, n)?;
        let dim_upper = upper.dim();
        let dim_lower = lower.dim();

        // Matrix of the induced map in the admissible bases.
        let mut rows = Vec::new();
        for a in upper.admissibles() {
            let image = kameko_down(&Polynomial::from_monomial(a))?;
            rows.push(lower.reduce_to_coords(&image)?);
        }
        let width = (dim_lower as usize).max(1);
        let rank = crate::gf2::echelonize(width, rows)?.rank() as u64;
        Ok(KamekoVerdict {
            t,
            n_lower: n,
            n_upper: upper_degree,
            mu_upper: mu(upper_degree),
            iso_expected: mu(upper_degree) == t,
            dim_upper,
            dim_lower,
            dims_equal: dim_upper == dim_lower,
            bijective: dim_upper == dim_lower && rank == dim_lower,
        })
    }

    /// Kameko's inadmissibility criterion as a certified filter: with
    /// x = w * z^(2^r) and omega_i(w) = 0 for every i > r, inadmissibility of
    /// z at its own degree certifies inadmissibility of x. Returns false
    /// (no conclusion) when z is admissible.
    pub fn kameko_inadmissible_test(
        &self,
        x: &Monomial,
        w: &Monomial,
        z: &Monomial,
        r: u32,
    ) -> Result<bool> {
        if r == 0 {
            return Err(Error::Precondition("r must be positive".into()));
        }
        if x.arity() != w.arity() || x.arity() != z.arity() {
            return Err(Error::ArityMismatch(x.arity(), w.arity().max(z.arity())));
        }
        let pow = 1u64
            .checked_shl(r)
            .ok_or_else(|| Error::InvalidFactorization("2^r overflows".into()))?;
        for j in 1..=x.arity() as usize {
            let expected = w.exponent(j) as u64 + z.exponent(j) as u64 * pow;
            if x.exponent(j) as u64 != expected {
                return Err(Error::InvalidFactorization(format!(
                    "x != w * z^(2^{r}) at variable x{j}"
                )));
            }
        }
        if w.weight_vector().len() > r as usize {
            return Err(Error::InvalidFactorization(format!(
                "omega_i(w) must vanish for every i > {r}"
            )));
        }
        let inst = self.instance(z.arity(), z.degree())?;
        Ok(!inst.is_admissible(z))
    }
}

/// Outcome of a Kameko-map comparison between degrees 2n + t and n.
#[derive(Clone, Debug)]
pub struct KamekoVerdict {
    pub t: u32,
    pub n_lower: u64,
    pub n_upper: u64,
    pub mu_upper: u32,
    pub iso_expected: bool,
    pub dim_upper: u64,
    pub dim_lower: u64,
    pub dims_equal: bool,
    pub bijective: bool,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub holds: bool,
    pub total_dim: u64,
    pub blocks: Vec<(WeightVector, u64)>,
}

/// Monomial-wise Kameko map: a term equal to x_1..x_t * g^2 (all exponents
/// odd) maps to g, anything else to zero; extended additively. The input
/// degree must have the shape 2n + t.
pub fn kameko_down(f: &Polynomial) -> Result<Polynomial> {
    let t = f.arity();
    let d = f.degree();
    if d < t as u64 || !(d - t as u64).is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "degree {d} is not of the form 2n + {t}"
        )));
    }
    let n = (d - t as u64) / 2;
    let mut out = Polynomial::zero(t, n);
    for m in f.terms() {
        if m.exponents().iter().all(|&a| a % 2 == 1) {
            out.toggle(Monomial::new(
                m.exponents().iter().map(|&a| (a - 1) / 2).collect(),
            ));
        }
    }
    Ok(out)
}

/// Singer's hit criterion: with mu(deg x) <= arity, a weight vector strictly
/// below the minimal spike's certifies that x is hit. `false` means no
/// conclusion.
pub fn singer_hit_test(x: &Monomial) -> Result<bool> {
    let t = x.arity();
    let n = x.degree();
    if n == 0 {
        return Ok(false);
    }
    if mu(n) > t {
        return Err(Error::Precondition(format!(
            "mu({n}) = {} exceeds the arity {t}",
            mu(n)
        )));
    }
    let z = minimal_spike(t, n).ok_or_else(|| {
        Error::Precondition(format!("no minimal spike in arity {t}, degree {n}"))
    })?;
    Ok(x.weight_vector() < z.weight_vector())
}

fn block_size(t: u32, omega: &WeightVector) -> u64 {
    omega
        .entries()
        .iter()
        .map(|&w| binomial(t as u64, w as u64))
        .product()
}

fn build_instance(
    t: u32,
    n: u64,
    strategy: Strategy,
    sq_mode: SqMode,
    mem_limit: u64,
) -> Result<Instance> {
    let start = Instant::now();
    debug_assert_ne!(strategy, Strategy::Auto);

    let cutoff = if strategy == Strategy::Stratified && n >= 1 && mu(n) <= t {
        minimal_spike(t, n).map(|z| z.weight_vector())
    } else {
        None
    };

    let mut blocks = Vec::new();
    let mut columns: Vec<Monomial> = Vec::new();
    let mut block_bounds: Vec<(usize, usize)> = Vec::new();
    for weight in weights_of_degree(t, n) {
        let size = block_size(t, &weight);
        if size == 0 {
            continue;
        }
        let retained = cutoff.as_ref().is_none_or(|c| weight >= *c);
        if retained {
            let monos = monomials_of_weight(t, &weight);
            debug_assert_eq!(monos.len() as u64, size);
            let startc = columns.len();
            columns.extend(monos);
            block_bounds.push((startc, columns.len()));
        } else {
            block_bounds.push((0, 0));
        }
        blocks.push(BlockData {
            weight,
            size,
            eliminated: retained,
        });
    }

    let width = columns.len();
    let projected = projected_bytes(width);
    if projected > mem_limit as u128 {
        return Err(Error::MemoryCeiling {
            required: projected,
            limit: mem_limit,
        });
    }

    let mut col_of: HashMap<Vec<u32>, u32> = HashMap::with_capacity(width);
    for (c, m) in columns.iter().enumerate() {
        col_of.insert(m.exponents().to_vec(), c as u32);
    }

    // Spanning-set elimination: rows are Sq^i of every monomial of degree
    // n - i, truncated to the retained columns. Truncation only drops terms
    // in certified-hit blocks, and forward elimination on the retained
    // columns never reads the dropped ones.
    let mut staircase = Staircase::new(width.max(1));
    if width > 0 {
        let mut buffer: Vec<Vec<u32>> = Vec::with_capacity(INSERT_CHUNK);
        for i in sq_mode.squares(n) {
            let src_deg = n - i;
            crate::monomial::for_each_monomial(t, src_deg, |exps| {
                buffer.push(exps.to_vec());
                if buffer.len() == INSERT_CHUNK {
                    flush_rows(i, &buffer, width, &col_of, &mut staircase);
                    buffer.clear();
                }
            });
            flush_rows(i, &buffer, width, &col_of, &mut staircase);
            buffer.clear();
        }
    }

    // Non-leading retained columns are the admissible monomials.
    let mut block_admissibles = Vec::with_capacity(blocks.len());
    let mut admissible_set = HashSet::new();
    for (bi, block) in blocks.iter().enumerate() {
        let mut adm = Vec::new();
        if block.eliminated {
            let (s, e) = block_bounds[bi];
            for (c, column) in columns.iter().enumerate().take(e).skip(s) {
                if !staircase.is_leading(c) {
                    adm.push(column.clone());
                    admissible_set.insert(column.clone());
                }
            }
        }
        block_admissibles.push(adm);
    }

    // Admissible coordinate index per column.
    let mut adm_index = vec![u32::MAX; width];
    let mut next = 0u32;
    for (c, idx) in adm_index.iter_mut().enumerate() {
        if !staircase.is_leading(c) {
            *idx = next;
            next += 1;
        }
    }

    Ok(Instance {
        t,
        n,
        strategy_used: strategy,
        cutoff,
        blocks,
        columns,
        col_of,
        staircase,
        block_admissibles,
        admissible_set,
        adm_index,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn flush_rows(
    i: u64,
    sources: &[Vec<u32>],
    width: usize,
    col_of: &HashMap<Vec<u32>, u32>,
    staircase: &mut Staircase,
) {
    let rows: Vec<Option<BitRow>> = sources
        .par_iter()
        .map(|src| {
            let mut row = BitRow::zero(width);
            let mut hits = 0usize;
            for_each_sq_term(i, src, |e| {
                if let Some(&c) = col_of.get(e) {
                    row.toggle(c as usize);
                    hits += 1;
                }
            });
            (hits > 0).then_some(row)
        })
        .collect();
    for row in rows.into_iter().flatten() {
        staircase.insert(row);
    }
}
