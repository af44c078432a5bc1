//! Skew shapes, coinversion-free fillings and the specialized non-symmetric Macdonald
//! polynomial `E_{lambda/mu}(x; q, 0)` as a generating function over them.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use itertools::Itertools;

use crate::base::{Composition, Partition, QPoly};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, SymPoly};

/// A skew shape `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn nrows(&self) -> usize {
        self.outer.len()
    }

    pub fn ncols(&self) -> usize {
        self.outer.first()
    }

    /// Absolute (0-based) columns occupied in row `i`.
    pub fn row_range(&self, i: usize) -> Range<usize> {
        self.inner.get(i)..self.outer.get(i)
    }

    /// Rows occupied in column `j`; always a contiguous interval.
    pub fn column_rows(&self, j: usize) -> Range<usize> {
        let count = |p: &Partition| p.parts().iter().take_while(|&&x| x > j).count();
        count(&self.inner)..count(&self.outer)
    }

    /// Number of cells in each column.
    pub fn column_heights(&self) -> Vec<usize> {
        (0..self.ncols()).map(|j| self.column_rows(j).len()).collect()
    }

    pub fn max_column_height(&self) -> usize {
        self.column_heights().into_iter().max().unwrap_or(0)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        self.row_range(i).contains(&j)
    }

    /// All cells `(row, column)`, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.nrows()).flat_map(|i| self.row_range(i).map(move |j| (i, j))).collect()
    }

    /// `outer' / inner'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// `n*outer / n*inner`: every column repeated `n` times.
    pub fn scale(&self, n: usize) -> SkewShape {
        SkewShape {
            outer: self.outer.scale(n),
            inner: self.inner.scale(n),
        }
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `4,2,1/2,1`, or a bare partition for a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// The inversion-triple test for `a` at `(i, j-1)`, `b` at `(i, j)` and `c` below `b` in
/// column `j`. Equal values are broken by role, `a` biggest, then `c`, then `b`; a missing
/// `a` is bigger than everything.
pub(crate) fn is_inversion_triple(a: Option<u32>, b: u32, c: u32) -> bool {
    let kb = (b, 1u8);
    let kc = (c, 2u8);
    match a {
        None => kc < kb,
        Some(a) => {
            let ka = (a, 3u8);
            (ka < kc && kc < kb) || (kc < kb && kb < ka) || (kb < ka && ka < kc)
        }
    }
}

/// All orderings (top to bottom) of `set` in a column occupying `rows`, compatible with the
/// previous column `prev` occupying `prev_rows`.
pub(crate) fn arrange_column(prev: &[u32], prev_rows: Range<usize>, set: &[u32], rows: Range<usize>) -> Vec<Vec<u32>> {
    let left: Vec<Option<u32>> = rows
        .clone()
        .map(|i| prev_rows.contains(&i).then(|| prev[i - prev_rows.start]))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(set.len());
    let mut used = vec![false; set.len()];
    fn rec(left: &[Option<u32>], set: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == set.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..set.len() {
            if used[k] {
                continue;
            }
            let c = set[k];
            if !cur.iter().zip(left).all(|(&b, &a)| is_inversion_triple(a, b, c)) {
                continue;
            }
            used[k] = true;
            cur.push(c);
            rec(left, set, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
    rec(&left, set, &mut used, &mut cur, &mut out);
    out
}

/// The greedy arrangement: each row takes the largest unused value not exceeding its left
/// neighbour (or the largest unused value when there is none).
fn greedy_column(prev: &[u32], prev_rows: Range<usize>, set: &[u32], rows: Range<usize>) -> Vec<u32> {
    let mut pool: Vec<u32> = set.to_vec();
    pool.sort_unstable();
    rows.map(|i| {
        let left = if prev_rows.contains(&i) { prev[i - prev_rows.start] } else { u32::MAX };
        let k = pool.iter().rposition(|&v| v <= left).unwrap_or(pool.len() - 1);
        pool.remove(k)
    })
    .collect()
}

/// `q`-weight contributed by descents in column `j` given the arrangement of column `j-1`.
fn column_maj(shape: &SkewShape, j: usize, prev: &[u32], prev_rows: &Range<usize>, col: &[u32], rows: &Range<usize>) -> usize {
    rows.clone()
        .zip(col)
        .filter(|(i, &b)| prev_rows.contains(i) && prev[i - prev_rows.start] < b)
        .map(|(i, _)| shape.outer.get(i) - j)
        .sum()
}

/// A filling of the cells of a skew shape with positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    /// Row `i` holds the values of columns `inner_i..outer_i`.
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.nrows() {
            return Err(Error::InvalidFilling(format!("{} rows for shape {shape}", rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_range(i).len() {
                return Err(Error::InvalidFilling(format!("row {} has {} entries, shape {shape} needs {}", i + 1, r.len(), shape.row_range(i).len())));
            }
            if r.contains(&0) {
                return Err(Error::InvalidFilling("entries must be positive".into()));
            }
        }
        Ok(Filling { shape, rows })
    }

    /// Build from column arrangements (each top to bottom).
    pub fn from_columns(shape: SkewShape, columns: &[Vec<u32>]) -> Result<Self> {
        let heights = shape.column_heights();
        if columns.len() != heights.len() || columns.iter().zip(&heights).any(|(c, &h)| c.len() != h) {
            return Err(Error::InvalidFilling(format!("column lengths do not match shape {shape}")));
        }
        let mut rows: Vec<Vec<u32>> = (0..shape.nrows()).map(|i| Vec::with_capacity(shape.row_range(i).len())).collect();
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in shape.column_rows(j).zip(col) {
                rows[i].push(v);
            }
        }
        Filling::new(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The value in row `i`, absolute column `j` (both 0-based), if that cell is in the shape.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        let r = self.shape.row_range(i);
        r.contains(&j).then(|| self.rows[i][j - r.start])
    }

    /// Column `j` top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.shape.column_rows(j).map(|i| self.get(i, j).expect("cell in shape")).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.shape.ncols()).map(|j| self.column(j)).collect()
    }

    /// Each column's entries sorted increasingly.
    pub fn column_sets(&self) -> Vec<Vec<u32>> {
        self.columns()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Coinversion-free: distinct column entries and every triple an inversion triple.
    pub fn is_cof(&self) -> bool {
        (0..self.shape.ncols()).all(|j| {
            let col = self.column(j);
            if !col.iter().all_unique() {
                return false;
            }
            let rows = self.shape.column_rows(j);
            rows.clone().enumerate().all(|(p, i)| {
                let a = j.checked_sub(1).and_then(|jl| self.get(i, jl));
                col[p + 1..].iter().all(|&c| is_inversion_triple(a, col[p], c))
            })
        })
    }

    /// Cells `(row, column)` whose left neighbour is in the shape and strictly smaller.
    pub fn descents(&self) -> Vec<(usize, usize)> {
        self.shape
            .cells()
            .into_iter()
            .filter(|&(i, j)| j > 0 && matches!((self.get(i, j - 1), self.get(i, j)), (Some(a), Some(b)) if a < b))
            .collect()
    }

    /// Sum over descents of `leg + 1`.
    pub fn maj(&self) -> usize {
        self.descents().into_iter().map(|(i, j)| self.shape.outer.get(i) - j).sum()
    }

    /// `weight[v-1]` = number of entries equal to `v`, up to the largest entry.
    pub fn weight(&self) -> Composition {
        self.weight_padded(self.max_entry() as usize)
    }

    /// The weight as a vector of length at least `m`.
    pub fn weight_padded(&self, m: usize) -> Composition {
        let mut w = vec![0; m.max(self.max_entry() as usize)];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        Composition::new(w)
    }

    /// The straight-shape filling that puts `big - i` in every inner cell of row `i` (1-based).
    pub fn extended(&self, big: u32) -> Filling {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![big - (i as u32 + 1); self.shape.inner.get(i)];
                row.extend_from_slice(r);
                row
            })
            .collect();
        Filling {
            shape: SkewShape::straight(self.shape.outer.clone()),
            rows,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"outer": self.shape.outer, "inner": self.shape.inner, "rows": self.rows})
    }
}

impl fmt::Display for Filling {
    /// Rows separated by `/`, inner cells shown as `.`; entries are concatenated when all are
    /// single digits and space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() >= 10;
        let text: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let toks = std::iter::repeat_n(".".to_string(), self.shape.inner.get(i)).chain(r.iter().map(u32::to_string));
                if wide {
                    toks.collect::<Vec<_>>().join(" ")
                } else {
                    toks.collect::<String>()
                }
            })
            .collect();
        write!(f, "{}", text.join("/"))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling({self})")
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// `..213/331/22/14`; the shape is read off the rows, leading dots marking inner cells.
    fn from_str(s: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row in s.trim().split('/') {
            let toks: Vec<String> = if row.contains([' ', ',']) {
                row.split([' ', ',']).filter(|t| !t.is_empty()).map(str::to_string).collect()
            } else {
                row.chars().map(String::from).collect()
            };
            let dots = toks.iter().take_while(|t| *t == ".").count();
            let vals = toks[dots..]
                .iter()
                .map(|t| match t.parse::<u32>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(Error::Parse(format!("bad filling entry {t:?} in {s:?}"))),
                })
                .collect::<Result<Vec<u32>>>()?;
            outer.push(toks.len());
            inner.push(dots);
            rows.push(vals);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Filling::new(shape, rows)
    }
}

/// The unique coinversion-free filling with the given column sets, built greedily and then
/// validated.
pub fn from_column_sets(shape: &SkewShape, sets: &[Vec<u32>]) -> Result<Filling> {
    let heights = shape.column_heights();
    if sets.len() != heights.len() {
        return Err(Error::InvalidFilling(format!("{} column sets for {} columns", sets.len(), heights.len())));
    }
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(sets.len());
    for (j, set) in sets.iter().enumerate() {
        if set.len() != heights[j] || !set.iter().all_unique() || set.contains(&0) {
            return Err(Error::InvalidFilling(format!("column {} needs {} distinct positive values, got {set:?}", j + 1, heights[j])));
        }
        let (prev, prev_rows) = match j {
            0 => (&[][..], 0..0),
            _ => (&cols[j - 1][..], shape.column_rows(j - 1)),
        };
        cols.push(greedy_column(prev, prev_rows, set, shape.column_rows(j)));
    }
    let f = Filling::from_columns(shape.clone(), &cols)?;
    if !f.is_cof() {
        return Err(Error::NoValidFilling(format!("column sets {sets:?} on {shape}")));
    }
    Ok(f)
}

struct Frame {
    started: bool,
    subset: usize,
    arrangements: Vec<Vec<u32>>,
    idx: usize,
}

/// Depth-first enumeration of coinversion-free fillings, column by column, in lexicographic
/// order of the sequence of column sets.
pub struct CofIter {
    shape: SkewShape,
    rows: Vec<Range<usize>>,
    subsets: Vec<Vec<Vec<u32>>>,
    content: Option<Vec<usize>>,
    used: Vec<usize>,
    stack: Vec<Frame>,
    primed: bool,
    done: bool,
}

impl CofIter {
    fn new(shape: &SkewShape, m: usize, content: Option<Vec<usize>>) -> Self {
        let rows: Vec<Range<usize>> = (0..shape.ncols()).map(|j| shape.column_rows(j)).collect();
        let mut by_height: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
        let subsets = rows
            .iter()
            .map(|r| {
                by_height
                    .entry(r.len())
                    .or_insert_with(|| (1..=m as u32).combinations(r.len()).collect())
                    .clone()
            })
            .collect();
        let done = content.as_ref().is_some_and(|c| c.iter().sum::<usize>() != shape.size());
        CofIter {
            shape: shape.clone(),
            rows,
            subsets,
            used: vec![0; m],
            content,
            stack: Vec::new(),
            primed: false,
            done,
        }
    }

    fn fits(&self, set: &[u32]) -> bool {
        match &self.content {
            None => true,
            Some(c) => set.iter().all(|&v| self.used[v as usize - 1] < c[v as usize - 1]),
        }
    }

    fn account(&mut self, k: usize, sign: bool) {
        if self.content.is_none() {
            return;
        }
        let f = &self.stack[k];
        for &v in &self.subsets[k][f.subset] {
            let u = &mut self.used[v as usize - 1];
            if sign {
                *u += 1;
            } else {
                *u -= 1;
            }
        }
    }

    /// Move column `k` to its next arrangement given the current column `k-1`.
    fn step(&mut self, k: usize) -> bool {
        if self.stack[k].started {
            self.stack[k].idx += 1;
            if self.stack[k].idx < self.stack[k].arrangements.len() {
                return true;
            }
            self.account(k, false);
            self.stack[k].subset += 1;
        } else {
            self.stack[k].started = true;
        }
        let (prev, prev_rows): (&[u32], Range<usize>) = match k {
            0 => (&[], 0..0),
            _ => {
                let f = &self.stack[k - 1];
                (&f.arrangements[f.idx], self.rows[k - 1].clone())
            }
        };
        let prev = prev.to_vec();
        while self.stack[k].subset < self.subsets[k].len() {
            let set = &self.subsets[k][self.stack[k].subset];
            if self.fits(set) {
                let arr = arrange_column(&prev, prev_rows.clone(), set, self.rows[k].clone());
                if !arr.is_empty() {
                    self.stack[k].arrangements = arr;
                    self.stack[k].idx = 0;
                    self.account(k, true);
                    return true;
                }
            }
            self.stack[k].subset += 1;
        }
        false
    }

    fn search(&mut self, mut advance: bool) -> bool {
        let ncols = self.rows.len();
        loop {
            if advance {
                let Some(k) = self.stack.len().checked_sub(1) else {
                    return false;
                };
                if self.step(k) {
                    advance = false;
                } else {
                    self.stack.pop();
                    continue;
                }
            }
            if self.stack.len() == ncols {
                return true;
            }
            self.stack.push(Frame {
                started: false,
                subset: 0,
                arrangements: Vec::new(),
                idx: 0,
            });
            let k = self.stack.len() - 1;
            if !self.step(k) {
                self.stack.pop();
                advance = true;
            }
        }
    }
}

impl Iterator for CofIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let advance = std::mem::replace(&mut self.primed, true);
        if !self.search(advance) {
            self.done = true;
            return None;
        }
        let cols: Vec<Vec<u32>> = self.stack.iter().map(|f| f.arrangements[f.idx].clone()).collect();
        Some(Filling::from_columns(self.shape.clone(), &cols).expect("columns match shape"))
    }
}

/// All coinversion-free fillings of `shape` with entries in `1..=m`.
pub fn enumerate_cof(shape: &SkewShape, m: usize) -> CofIter {
    CofIter::new(shape, m, None)
}

/// Coinversion-free fillings of `shape` with the given content.
pub fn enumerate_cof_content(shape: &SkewShape, content: &Composition) -> CofIter {
    CofIter::new(shape, content.len(), Some(content.parts().to_vec()))
}

/// `E_{shape}(x_1..x_m; q, 0)` in the monomial basis, by a transfer over columns that keeps
/// only weights which can still end weakly decreasing.
pub fn macdonald_e(shape: &SkewShape, m: usize) -> SymPoly {
    let ncols = shape.ncols();
    let heights = shape.column_heights();
    let mut remaining: usize = heights.iter().sum();
    // arrangement of the previous column -> weight -> polynomial
    let mut states: HashMap<Vec<u32>, HashMap<Vec<u16>, QPoly>> = HashMap::new();
    states.entry(Vec::new()).or_default().insert(vec![0; m], QPoly::one());
    let mut subsets_cache: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
    for (j, &height) in heights.iter().enumerate() {
        let rows = shape.column_rows(j);
        let prev_rows = if j == 0 { 0..0 } else { shape.column_rows(j - 1) };
        remaining -= height;
        let cols_left = ncols - j - 1;
        let subsets = subsets_cache
            .entry(rows.len())
            .or_insert_with(|| (1..=m as u32).combinations(rows.len()).collect())
            .clone();
        let mut next: HashMap<Vec<u32>, HashMap<Vec<u16>, QPoly>> = HashMap::new();
        for (prev, weights) in &states {
            for set in &subsets {
                for col in arrange_column(prev, prev_rows.clone(), set, rows.clone()) {
                    let shift = column_maj(shape, j, prev, &prev_rows, &col, &rows);
                    let bucket = next.entry(col.clone()).or_default();
                    for (w, poly) in weights {
                        let mut w2 = w.clone();
                        for &v in set {
                            w2[v as usize - 1] += 1;
                        }
                        if !can_end_decreasing(&w2, remaining, cols_left) {
                            continue;
                        }
                        *bucket.entry(w2).or_default() += &poly.shift(shift);
                    }
                }
            }
        }
        next.retain(|_, w| !w.is_empty());
        states = next;
    }
    let mut out = SymPoly::zero(m, Basis::Monomial);
    for weights in states.values() {
        for (w, poly) in weights {
            let key = Partition::new(w.iter().map(|&x| x as usize).collect()).expect("pruned to partitions");
            out = &out + &SymPoly::from_terms(m, Basis::Monomial, [(key, poly.clone())]);
        }
    }
    out
}

/// Whether a partial weight can still be completed to a weakly decreasing vector using
/// `remaining` more cells spread over `cols_left` columns (each adding a value at most once).
fn can_end_decreasing(w: &[u16], remaining: usize, cols_left: usize) -> bool {
    let mut need = 0usize;
    let mut suffix_max = 0u16;
    for &x in w.iter().rev() {
        suffix_max = suffix_max.max(x);
        let gap = (suffix_max - x) as usize;
        if gap > cols_left {
            return false;
        }
        need += gap;
    }
    need <= remaining
}

/// `E_{shape}(x_1..x_m; q, 0)` by literal enumeration of all fillings, with the symmetry of
/// the result checked rather than assumed.
pub fn macdonald_e_enumerated(shape: &SkewShape, m: usize) -> Result<SymPoly> {
    let mut map: HashMap<Vec<usize>, QPoly> = HashMap::new();
    for f in enumerate_cof(shape, m) {
        *map.entry(f.weight_padded(m).parts().to_vec()).or_default() += QPoly::monomial(1, f.maj());
    }
    SymPoly::from_exponent_map(m, &map)
}
