//! Packed-bit exact linear algebra over F2.
//!
//! Rows are bit vectors over a fixed column count; column c of an instance
//! corresponds to monomial index c of the ambient descending monomial list,
//! so the first set bit of a row is its largest monomial.
//!
//! Two structures are provided: [`EchelonBasis`], a fully reduced row-echelon
//! basis with canonical membership reduction, and [`Staircase`], a
//! forward-only variant whose rows keep their tails unreduced. Both produce
//! the same leading-column set and the same canonical representatives; the
//! staircase avoids the quadratic back-elimination cost on large instances.

use crate::error::{Error, Result};

const NO_PIVOT: u32 = u32::MAX;

/// A packed row of bits over `width` columns. Bits at positions >= width
/// stay zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    width: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zero(width: usize) -> Self {
        BitRow {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn from_cols<I: IntoIterator<Item = usize>>(width: usize, cols: I) -> Self {
        let mut row = BitRow::zero(width);
        for c in cols {
            row.toggle(c);
        }
        row
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, col: usize) -> bool {
        debug_assert!(col < self.width);
        (self.words[col >> 6] >> (col & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, col: usize, value: bool) {
        debug_assert!(col < self.width);
        if value {
            self.words[col >> 6] |= 1 << (col & 63);
        } else {
            self.words[col >> 6] &= !(1 << (col & 63));
        }
    }

    #[inline]
    pub fn toggle(&mut self, col: usize) {
        debug_assert!(col < self.width);
        self.words[col >> 6] ^= 1 << (col & 63);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Lowest set column, i.e. the largest monomial of the row.
    pub fn first_set(&self) -> Option<usize> {
        self.first_set_from(0)
    }

    /// Lowest set column at position >= col.
    pub fn first_set_from(&self, col: usize) -> Option<usize> {
        if col >= self.width {
            return None;
        }
        let mut w = col >> 6;
        let masked = self.words[w] & (!0u64 << (col & 63));
        if masked != 0 {
            return Some((w << 6) + masked.trailing_zeros() as usize);
        }
        w += 1;
        while w < self.words.len() {
            if self.words[w] != 0 {
                return Some((w << 6) + self.words[w].trailing_zeros() as usize);
            }
            w += 1;
        }
        None
    }

    pub fn iter_set_cols(&self) -> SetColIter<'_> {
        SetColIter {
            row: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl std::fmt::Debug for BitRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitRow[")?;
        for (i, c) in self.iter_set_cols().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]/{}", self.width)
    }
}

pub struct SetColIter<'a> {
    row: &'a BitRow,
    word: usize,
    bits: u64,
}

impl Iterator for SetColIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some((self.word << 6) + tz);
            }
            self.word += 1;
            if self.word >= self.row.words.len() {
                return None;
            }
            self.bits = self.row.words[self.word];
        }
    }
}

/// Fully reduced row-echelon basis of a subspace: each row's first set bit is
/// its leading column, leading columns are distinct, and no row has a set bit
/// at another row's leading column.
#[derive(Clone)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<BitRow>,
    pivot: Vec<u32>, // column -> index into rows, NO_PIVOT if free
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            rows: Vec::new(),
            pivot: vec![NO_PIVOT; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in increasing leading-column order.
    pub fn rows(&self) -> Vec<&BitRow> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.rows[i].first_set());
        idx.into_iter().map(|i| &self.rows[i]).collect()
    }

    /// Sorted leading columns.
    pub fn leading_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.width)
            .filter(|&c| self.pivot[c] != NO_PIVOT)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_leading(&self, col: usize) -> bool {
        self.pivot[col] != NO_PIVOT
    }

    /// Canonical representative of v modulo the span: no set bit at any
    /// leading column. reduce(v) = 0 exactly when v lies in the span.
    pub fn reduce(&self, v: &BitRow) -> Result<BitRow> {
        if v.width() != self.width {
            return Err(Error::WidthMismatch(v.width(), self.width));
        }
        let mut w = v.clone();
        self.reduce_in_place(&mut w);
        Ok(w)
    }

    fn reduce_in_place(&self, w: &mut BitRow) {
        let mut pos = w.first_set();
        while let Some(p) = pos {
            if self.pivot[p] != NO_PIVOT {
                w.xor_assign(&self.rows[self.pivot[p] as usize]);
                pos = w.first_set_from(p);
            } else {
                pos = w.first_set_from(p + 1);
            }
        }
    }

    /// Insert v if independent of the span. Returns whether it was accepted.
    pub fn insert(&mut self, v: BitRow) -> Result<bool> {
        if v.width() != self.width {
            return Err(Error::WidthMismatch(v.width(), self.width));
        }
        let mut r = v;
        self.reduce_in_place(&mut r);
        let lead = match r.first_set() {
            None => return Ok(false),
            Some(l) => l,
        };
        // Back-eliminate the new leading column from every existing row.
        for row in &mut self.rows {
            if row.get(lead) {
                row.xor_assign(&r);
            }
        }
        self.pivot[lead] = self.rows.len() as u32;
        self.rows.push(r);
        Ok(true)
    }
}

/// Reduced row-echelon form of the span of the given rows.
pub fn echelonize(width: usize, rows: impl IntoIterator<Item = BitRow>) -> Result<EchelonBasis> {
    let mut basis = EchelonBasis::new(width);
    for row in rows {
        basis.insert(row)?;
    }
    Ok(basis)
}

/// Basis of the right kernel { v : Mv = 0 } of the matrix with the given
/// rows, one basis vector per non-leading column of the row space.
pub fn nullspace(width: usize, rows: impl IntoIterator<Item = BitRow>) -> Result<Vec<BitRow>> {
    let basis = echelonize(width, rows)?;
    let mut out = Vec::new();
    for free in 0..width {
        if basis.is_leading(free) {
            continue;
        }
        let mut v = BitRow::zero(width);
        v.set(free, true);
        for row in basis.rows() {
            let lead = row.first_set().expect("echelon rows are nonzero");
            if row.get(free) {
                v.set(lead, true);
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Projected storage for a full echelon basis over `cols` columns, in bytes.
/// Used by the memory ceiling guard.
pub fn projected_bytes(cols: usize) -> u128 {
    (cols as u128) * (cols as u128) / 8
}

/// Forward-only echelon structure for streaming elimination. Rows keep
/// whatever tail bits they had when inserted (no back-elimination), which
/// leaves leading columns and canonical representatives unchanged but makes
/// insertion linear instead of quadratic. Rows store only the words from
/// their leading column onward.
pub struct Staircase {
    width: usize,
    rows: Vec<StairRow>,
    pivot: Vec<u32>,
}

struct StairRow {
    offset: usize, // first stored word
    words: Vec<u64>,
}

impl StairRow {
    fn from_bitrow(r: &BitRow, lead: usize) -> Self {
        let offset = lead >> 6;
        StairRow {
            offset,
            words: r.words()[offset..].to_vec(),
        }
    }

    #[inline]
    fn xor_into(&self, words: &mut [u64]) {
        for (i, w) in self.words.iter().enumerate() {
            words[self.offset + i] ^= w;
        }
    }

    #[inline]
    fn get(&self, col: usize) -> bool {
        let w = col >> 6;
        if w < self.offset {
            return false;
        }
        (self.words[w - self.offset] >> (col & 63)) & 1 == 1
    }
}

impl Staircase {
    pub fn new(width: usize) -> Self {
        Staircase {
            width,
            rows: Vec::new(),
            pivot: vec![NO_PIVOT; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_leading(&self, col: usize) -> bool {
        self.pivot[col] != NO_PIVOT
    }

    pub fn leading_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.width)
            .filter(|&c| self.pivot[c] != NO_PIVOT)
            .collect();
        v.sort_unstable();
        v
    }

    /// Bytes held by the stored rows.
    pub fn storage_bytes(&self) -> u64 {
        self.rows.iter().map(|r| 8 * r.words.len() as u64).sum()
    }

    /// Forward-reduce v in place: afterwards no set bit sits at a leading
    /// column. This is the canonical representative modulo the span.
    pub fn reduce_in_place(&self, v: &mut BitRow) {
        debug_assert_eq!(v.width(), self.width);
        let mut pos = v.first_set();
        while let Some(p) = pos {
            if self.pivot[p] != NO_PIVOT {
                self.rows[self.pivot[p] as usize].xor_into(&mut v.words);
                pos = v.first_set_from(p);
            } else {
                pos = v.first_set_from(p + 1);
            }
        }
    }

    /// Reduce and, if nonzero, adopt the remainder as a new pivot row.
    /// Returns the new leading column when accepted.
    pub fn insert(&mut self, mut v: BitRow) -> Option<usize> {
        debug_assert_eq!(v.width(), self.width);
        self.reduce_in_place(&mut v);
        let lead = v.first_set()?;
        self.pivot[lead] = self.rows.len() as u32;
        self.rows.push(StairRow::from_bitrow(&v, lead));
        Some(lead)
    }

    /// Entry at (pivot row of column `lead`, column `col`).
    pub fn pivot_row_get(&self, lead: usize, col: usize) -> bool {
        let idx = self.pivot[lead];
        debug_assert_ne!(idx, NO_PIVOT);
        self.rows[idx as usize].get(col)
    }
}
