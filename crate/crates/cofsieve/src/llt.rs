//! Vertical-strip LLT polynomials and their relation to `E_{lambda'/mu'}(x; q, 0)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::base::{Composition, Partition, QPoly};
use crate::error::{Error, Result};
use crate::fillings::{macdonald_e, SkewShape};
use crate::rsk_charge::schur_expansion_via_charge;
use crate::symfunc::{Basis, SymPoly};

/// A tuple of single-column skew shapes `1^a / 1^b`, stored as `(a, b)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VStripTuple(Vec<(usize, usize)>);

/// A cell of a strip: its strip index, 1-based row and content `1 - row`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StripCell {
    pub strip: usize,
    pub row: usize,
    pub content: i64,
}

/// Content `column - row` of the cell in row `row` of a single column.
pub fn content_of_cell(row: usize) -> i64 {
    1 - row as i64
}

impl VStripTuple {
    pub fn new(strips: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = strips.iter().find(|(a, b)| a < b) {
            return Err(Error::InvalidSkewShape(format!("strip 1^{a}/1^{b} has a < b")));
        }
        Ok(VStripTuple(strips))
    }

    pub fn strips(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|(a, b)| a - b).sum()
    }

    /// Cells strip by strip, bottom to top within a strip.
    pub fn cells(&self) -> Vec<StripCell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(strip, &(a, b))| (b + 1..=a).map(move |row| StripCell { strip, row, content: content_of_cell(row) }))
            .collect()
    }
}

impl fmt::Display for VStripTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("{a}/{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for VStripTuple {
    type Err = Error;

    /// `3/0,3/1,2/1,3/0`: strips `1^3`, `1^3/1`, `1^2/1`, `1^3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad strip tuple {s:?}"));
        let strips = s
            .split(',')
            .map(|t| {
                let (a, b) = t.trim().split_once('/').unwrap_or((t.trim(), "0"));
                Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strips)
    }
}

/// Does `u` (strip `i`) with a larger entry than `v` (strip `j`) form an inversion?
fn is_inversion_pair(u: &StripCell, v: &StripCell) -> bool {
    (u.strip < v.strip && u.content == v.content) || (u.strip > v.strip && u.content == v.content - 1)
}

/// Inversions of a tuple filling given as one bottom-to-top value list per strip.
pub fn inv_count(tuple: &VStripTuple, values: &[Vec<u32>]) -> Result<usize> {
    let cells = tuple.cells();
    let flat: Vec<u32> = values.concat();
    let shape_ok = values.len() == tuple.0.len() && values.iter().zip(&tuple.0).all(|(v, &(a, b))| v.len() == a - b);
    if !shape_ok || values.iter().any(|v| v.windows(2).any(|w| w[0] >= w[1])) {
        return Err(Error::InvalidFilling(format!("{values:?} does not fill {tuple} with increasing columns")));
    }
    Ok((0..cells.len())
        .flat_map(|x| (0..cells.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| flat[x] > flat[y] && is_inversion_pair(&cells[x], &cells[y]))
        .count())
}

/// Backtracking over tuple fillings, one cell at a time in [`VStripTuple::cells`] order.
struct Search<'a> {
    cells: Vec<StripCell>,
    /// For each cell, earlier cells it is related to, with the direction that counts: `true`
    /// when the earlier cell must be the larger one.
    related: Vec<Vec<(usize, bool)>>,
    max_value: u32,
    remaining: Option<&'a mut Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(tuple: &VStripTuple, max_value: u32, remaining: Option<&'a mut Vec<usize>>) -> Self {
        let cells = tuple.cells();
        let related = (0..cells.len())
            .map(|x| {
                (0..x)
                    .filter_map(|y| {
                        if is_inversion_pair(&cells[y], &cells[x]) {
                            Some((y, true))
                        } else if is_inversion_pair(&cells[x], &cells[y]) {
                            Some((y, false))
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        Search { cells, related, max_value, remaining }
    }

    fn added_inversions(&self, x: usize, v: u32, placed: &[u32]) -> usize {
        self.related[x].iter().filter(|&&(y, earlier_big)| if earlier_big { placed[y] > v } else { v > placed[y] }).count()
    }

    fn lower_bound(&self, x: usize, placed: &[u32]) -> u32 {
        match x.checked_sub(1) {
            Some(p) if self.cells[p].strip == self.cells[x].strip => placed[p] + 1,
            _ => 1,
        }
    }

    /// Visit every complete filling with its inversion count.
    fn for_each(&mut self, placed: &mut Vec<u32>, inv: usize, visit: &mut impl FnMut(&[u32], usize)) {
        let x = placed.len();
        if x == self.cells.len() {
            visit(placed, inv);
            return;
        }
        for v in self.lower_bound(x, placed)..=self.max_value {
            if let Some(rem) = self.remaining.as_deref_mut() {
                if rem[v as usize - 1] == 0 {
                    continue;
                }
                rem[v as usize - 1] -= 1;
            }
            let add = self.added_inversions(x, v, placed);
            placed.push(v);
            self.for_each(placed, inv + add, visit);
            placed.pop();
            if let Some(rem) = self.remaining.as_deref_mut() {
                rem[v as usize - 1] += 1;
            }
        }
    }

    /// Smallest inversion count, pruning partial fillings that cannot improve on the best.
    fn minimum(&self, placed: &mut Vec<u32>, inv: usize, best: &mut usize) {
        if inv >= *best {
            return;
        }
        let x = placed.len();
        if x == self.cells.len() {
            *best = inv;
            return;
        }
        for v in self.lower_bound(x, placed)..=self.max_value {
            let add = self.added_inversions(x, v, placed);
            placed.push(v);
            self.minimum(placed, inv + add, best);
            placed.pop();
        }
    }
}

/// `sum q^{inv(T)}` over tuple fillings of content `nu` (a weak composition).
pub fn llt_coefficient(tuple: &VStripTuple, nu: &Composition) -> QPoly {
    if nu.size() != tuple.size() {
        return QPoly::zero();
    }
    let mut remaining = nu.parts().to_vec();
    let mut counts: Vec<u64> = Vec::new();
    let mut search = Search::new(tuple, nu.len() as u32, Some(&mut remaining));
    search.for_each(&mut Vec::new(), 0, &mut |_, inv| {
        if counts.len() <= inv {
            counts.resize(inv + 1, 0);
        }
        counts[inv] += 1;
    });
    QPoly::from_coeffs(counts.into_iter().map(Into::into).collect())
}

/// `LLT_nu(x; q)` in `m` variables, monomial basis, from the dominant coefficients.
pub fn llt_poly(tuple: &VStripTuple, m: usize) -> SymPoly {
    let n = tuple.size();
    let terms: Vec<(Partition, QPoly)> = Partition::bounded(n, n, m)
        .into_par_iter()
        .map(|mu| {
            let c = llt_coefficient(tuple, &mu.clone().into());
            (mu, c)
        })
        .collect();
    SymPoly::from_terms(m, Basis::Monomial, terms)
}

/// `LLT_nu(x; q)` from every tuple filling with entries at most `m`; symmetry is checked when
/// the monomials are collected.
pub fn llt_poly_enumerated(tuple: &VStripTuple, m: usize) -> Result<SymPoly> {
    let mut map: HashMap<Vec<usize>, QPoly> = HashMap::new();
    let mut search = Search::new(tuple, m as u32, None);
    search.for_each(&mut Vec::new(), 0, &mut |placed, inv| {
        let mut exps = vec![0; m];
        for &v in placed {
            exps[v as usize - 1] += 1;
        }
        *map.entry(exps).or_default() += QPoly::monomial(1, inv);
    });
    SymPoly::from_exponent_map(m, &map)
}

/// The fewest inversions of any tuple filling. Entries up to the number of cells suffice: packing
/// entries order-preservingly keeps every comparison.
pub fn mininv(tuple: &VStripTuple) -> usize {
    let search = Search::new(tuple, tuple.size().max(1) as u32, None);
    let mut best = usize::MAX;
    search.minimum(&mut Vec::new(), 0, &mut best);
    if best == usize::MAX {
        0
    } else {
        best
    }
}

/// Strips `1^{lambda_j} / 1^{mu_j}` for each row `j`, and `alpha_j = lambda_j - mu_j`.
pub fn strips_from_skew(shape: &SkewShape) -> Result<(VStripTuple, Composition)> {
    if let Some(j) = shape.column_heights().iter().position(|&h| h > 2) {
        return Err(Error::ColumnTooTall(j + 1));
    }
    let rows = 0..shape.nrows();
    let strips = rows.clone().map(|j| (shape.outer().get(j), shape.inner().get(j))).collect();
    let alpha = Composition::new(rows.map(|j| shape.outer().get(j) - shape.inner().get(j)).collect());
    Ok((VStripTuple(strips), alpha))
}

#[derive(Clone, Debug)]
pub struct LltReport {
    pub strips: VStripTuple,
    pub mininv: usize,
    /// `E_{lambda'/mu'}` in the Schur basis.
    pub e_schur: SymPoly,
    /// `LLT_nu` in the Schur basis.
    pub llt_schur: SymPoly,
    /// `q^{-mininv} LLT_nu = E_{lambda'/mu'}`, compared as monomial expansions.
    pub e_matches: bool,
    /// `LLT_nu = q^{mininv}` times the charge expansion of `E_{lambda'/mu'}`.
    pub charge_matches: bool,
}

impl LltReport {
    pub fn passed(&self) -> bool {
        self.e_matches && self.charge_matches
    }
}

/// Compare `E_{lambda'/mu'}` (from fillings) with `q^{-mininv} LLT_nu` and with the charge
/// expansion.
pub fn verify_llt_theorem(shape: &SkewShape, m: usize) -> Result<LltReport> {
    let (strips, _) = strips_from_skew(shape)?;
    let low = mininv(&strips);
    let conj = shape.conjugate();
    let e = macdonald_e(&conj, m);
    let llt = llt_poly(&strips, m);
    let shift = |p: &SymPoly| p.map_coeffs(|c| c.shift(low));
    let e_matches = shift(&e) == llt;
    let charge = schur_expansion_via_charge(&conj).with_nvars(m);
    let llt_schur = llt.to_schur();
    let charge_matches = shift(&charge) == llt_schur;
    Ok(LltReport { strips, mininv: low, e_schur: e.to_schur(), llt_schur, e_matches, charge_matches })
}
