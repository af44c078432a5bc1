//! Crystal operators on words, on coinversion-free fillings (through the crystal biword) and on
//! recording tableaux, the derived involutions, and crystal graphs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::fillings::{enumerate_cof, from_column_sets, macdonald_e, Filling, SkewShape};
use crate::rsk_charge::{rsk, BurgeWord};
use crate::symfunc::{Basis, SymPoly};
use crate::tableau::{ssyt_bounded, Tableau};
use crate::QPoly;

/// Positions of unmatched `i` (closing brackets) and unmatched `i+1` (opening brackets).
fn unmatched(i: u32, w: &[u32]) -> (Vec<usize>, Vec<usize>) {
    let mut open = Vec::new();
    let mut close = Vec::new();
    for (p, &x) in w.iter().enumerate() {
        if x == i + 1 {
            open.push(p);
        } else if x == i && open.pop().is_none() {
            close.push(p);
        }
    }
    (close, open)
}

/// Raising operator: the leftmost unmatched `i+1` becomes `i`.
pub fn word_e(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (_, open) = unmatched(i, w);
    let p = *open.first()?;
    let mut out = w.to_vec();
    out[p] = i;
    Some(out)
}

/// Lowering operator: the rightmost unmatched `i` becomes `i+1`.
pub fn word_f(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (close, _) = unmatched(i, w);
    let p = *close.last()?;
    let mut out = w.to_vec();
    out[p] = i + 1;
    Some(out)
}

/// The biletters of a filling sorted decreasingly by column and then by value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalBiword {
    values: Vec<u32>,
    columns: Vec<u32>,
}

impl CrystalBiword {
    pub fn from_filling(f: &Filling) -> Self {
        let mut pairs: Vec<(u32, u32)> = (0..f.shape().ncols())
            .flat_map(|j| f.column(j).into_iter().map(move |v| (j as u32 + 1, v)))
            .collect();
        pairs.sort_by(|a, b| b.cmp(a));
        let (columns, values) = pairs.into_iter().unzip();
        CrystalBiword { values, columns }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// The same biletters in Burge order.
    pub fn to_burge(&self) -> BurgeWord {
        BurgeWord::from_biletters(self.values.iter().copied().zip(self.columns.iter().copied()).collect())
            .expect("distinct biletters")
    }

    fn column_sets(&self, ncols: usize) -> Vec<Vec<u32>> {
        let mut sets = vec![Vec::new(); ncols];
        for (&v, &c) in self.values.iter().zip(&self.columns) {
            sets[c as usize - 1].push(v);
        }
        for s in &mut sets {
            s.sort_unstable();
        }
        sets
    }
}

impl fmt::Display for CrystalBiword {
    /// Values on the first line, columns on the second.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.values.iter().chain(&self.columns).any(|&x| x >= 10);
        let line = |r: &[u32]| -> String {
            let t = r.iter().map(u32::to_string);
            if wide {
                t.collect::<Vec<_>>().join(" ")
            } else {
                t.collect()
            }
        };
        write!(f, "{}\n{}", line(&self.values), line(&self.columns))
    }
}

fn apply_on_filling(f: &Filling, op: impl Fn(&[u32]) -> Option<Vec<u32>>) -> Result<Option<Filling>> {
    let mut cb = CrystalBiword::from_filling(f);
    let Some(values) = op(&cb.values) else {
        return Ok(None);
    };
    cb.values = values;
    from_column_sets(f.shape(), &cb.column_sets(f.shape().ncols())).map(Some)
}

/// `e_i` on a coinversion-free filling: raise the value letters of the crystal biword and
/// rebuild the filling from the new column sets.
pub fn cof_e(i: u32, f: &Filling) -> Result<Option<Filling>> {
    apply_on_filling(f, |w| word_e(i, w))
}

/// `f_i` on a coinversion-free filling.
pub fn cof_f(i: u32, f: &Filling) -> Result<Option<Filling>> {
    apply_on_filling(f, |w| word_f(i, w))
}

/// The involution exchanging the multiplicities of `i` and `i+1`.
pub fn s_involution(i: u32, f: &Filling) -> Result<Filling> {
    let w = f.weight_padded(i as usize + 1);
    let (a, b) = (w.get(i as usize - 1), w.get(i as usize));
    let mut cur = f.clone();
    let op: fn(u32, &Filling) -> Result<Option<Filling>> = if a < b { cof_e } else { cof_f };
    for _ in 0..a.abs_diff(b) {
        cur = op(i, &cur)?.ok_or_else(|| Error::InvalidFilling(format!("crystal string of {f} ended early")))?;
    }
    Ok(cur)
}

fn tableau_op(t: &Tableau, op: impl Fn(&[u32]) -> Option<Vec<u32>>) -> Option<Tableau> {
    let word = op(&t.reading_word())?;
    let mut it = word.into_iter();
    let mut rows: Vec<Vec<u32>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    for row in rows.iter_mut().rev() {
        for x in row.iter_mut() {
            *x = it.next().expect("same length");
        }
    }
    Some(Tableau::from_rows_unchecked(rows, t.is_transposed()).expect("same shape"))
}

/// `e_i` on a semistandard tableau through its reading word.
pub fn tableau_e(i: u32, t: &Tableau) -> Option<Tableau> {
    tableau_op(t, |w| word_e(i, w))
}

/// `f_i` on a semistandard tableau through its reading word.
pub fn tableau_f(i: u32, t: &Tableau) -> Option<Tableau> {
    tableau_op(t, |w| word_f(i, w))
}

/// `e_i` on a recording tableau: act on `Q^t` and transpose back.
pub fn q_tableau_e(i: u32, q: &Tableau) -> Option<Tableau> {
    tableau_e(i, &q.transpose()).map(|t| t.transpose())
}

/// The crystal graph with edges `F -> f_i(F)`.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub nodes: Vec<Filling>,
    pub edges: Vec<(usize, usize, u32)>,
}

/// Build the crystal graph on `COF(shape, m)`.
pub fn crystal_graph(shape: &SkewShape, m: usize) -> Result<CrystalGraph> {
    let nodes: Vec<Filling> = enumerate_cof(shape, m).collect();
    let index: HashMap<&Filling, usize> = nodes.iter().enumerate().map(|(k, f)| (f, k)).collect();
    let mut edges = Vec::new();
    for (u, f) in nodes.iter().enumerate() {
        for i in 1..m as u32 {
            if let Some(g) = cof_f(i, f)? {
                let v = *index.get(&g).ok_or_else(|| Error::InvalidFilling(format!("{g} is not coinversion-free")))?;
                edges.push((u, v, i));
            }
        }
    }
    Ok(CrystalGraph { nodes, edges })
}

impl CrystalGraph {
    /// Connected components as sorted lists of node indices, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &(u, v, _) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        groups.into_values().collect()
    }

    /// Nodes with no incoming edge.
    pub fn highest_weights(&self) -> Vec<usize> {
        let targets: BTreeSet<usize> = self.edges.iter().map(|e| e.1).collect();
        (0..self.nodes.len()).filter(|x| !targets.contains(x)).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, f) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{f}\"];\n"));
        }
        for (u, v, i) in &self.edges {
            out.push_str(&format!("  n{u} -> n{v} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<String> = self.nodes.iter().map(Filling::to_string).collect();
        let edges: Vec<serde_json::Value> = self.edges.iter().map(|(u, v, i)| serde_json::json!([u, v, i])).collect();
        serde_json::json!({"nodes": nodes, "edges": edges})
    }
}

/// Outcome of the exhaustive crystal checks on one shape.
#[derive(Clone, Debug, Default)]
pub struct CrystalReport {
    /// Operator applications examined.
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CrystalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn multiset_diff_ok(f: &Filling, g: &Filling, i: u32) -> bool {
    f.rows().iter().flatten().zip(g.rows().iter().flatten()).all(|(&a, &b)| a == b || ((a == i || a == i + 1) && (b == i || b == i + 1)))
}

/// For every filling and every `e_i` that applies: the image is coinversion-free, keeps maj,
/// only touches entries `i` and `i+1`, keeps the insertion tableau, and moves the recording
/// tableau by `e_i` on its transpose.
pub fn rsk_equivariance_check(shape: &SkewShape, m: usize) -> CrystalReport {
    let mut report = CrystalReport::default();
    for f in enumerate_cof(shape, m) {
        let (p, q) = rsk(&BurgeWord::from_filling(&f));
        for i in 1..m as u32 {
            let g = match cof_e(i, &f) {
                Ok(g) => g,
                Err(e) => {
                    report.violations.push(format!("e_{i}({f}): {e}"));
                    continue;
                }
            };
            let q_image = q_tableau_e(i, &q);
            report.checked += 1;
            let Some(g) = g else {
                if q_image.is_some() {
                    report.violations.push(format!("e_{i}({f}) undefined but defined on its recording tableau"));
                }
                continue;
            };
            if !g.is_cof() {
                report.violations.push(format!("e_{i}({f}) = {g} is not coinversion-free"));
            }
            if g.maj() != f.maj() {
                report.violations.push(format!("e_{i}({f}) = {g} changes maj"));
            }
            if !multiset_diff_ok(&f, &g, i) {
                report.violations.push(format!("e_{i}({f}) = {g} changes entries other than {i}, {}", i + 1));
            }
            let (p2, q2) = rsk(&BurgeWord::from_filling(&g));
            if p2 != p {
                report.violations.push(format!("e_{i}({f}) changes the insertion tableau"));
            }
            if q_image.as_ref() != Some(&q2) {
                report.violations.push(format!("e_{i}({f}): recording tableau {q2} differs from e_{i}({q})"));
            }
            if cof_f(i, &g).ok().flatten().as_ref() != Some(&f) {
                report.violations.push(format!("f_{i} does not undo e_{i} on {f}"));
            }
        }
    }
    report
}

/// Per-component structure of the crystal graph: a unique highest weight, constant maj,
/// constant insertion tableau, a single Schur polynomial as character, and recording tableaux
/// filling out the whole tableau crystal of that shape. The `q^maj`-weighted characters must
/// add up to `E_{shape}(x; q, 0)`.
pub fn component_check(shape: &SkewShape, m: usize) -> Result<CrystalReport> {
    let graph = crystal_graph(shape, m)?;
    let mut report = CrystalReport::default();
    let highest: BTreeSet<usize> = graph.highest_weights().into_iter().collect();
    let mut total = SymPoly::zero(m, Basis::Schur);
    for comp in graph.components() {
        report.checked += 1;
        let heads: Vec<usize> = comp.iter().copied().filter(|x| highest.contains(x)).collect();
        let head = &graph.nodes[comp[0]];
        if heads.len() != 1 {
            report.violations.push(format!("component of {head} has {} highest weights", heads.len()));
            continue;
        }
        let top = &graph.nodes[heads[0]];
        let majs: BTreeSet<usize> = comp.iter().map(|&x| graph.nodes[x].maj()).collect();
        if majs.len() != 1 {
            report.violations.push(format!("component of {top} mixes maj values {majs:?}"));
        }
        let mut weights: HashMap<Vec<usize>, QPoly> = HashMap::new();
        let mut ps = BTreeSet::new();
        let mut qts = BTreeSet::new();
        for &x in &comp {
            let f = &graph.nodes[x];
            *weights.entry(f.weight_padded(m).parts().to_vec()).or_default() += QPoly::one();
            let (p, q) = rsk(&BurgeWord::from_filling(f));
            ps.insert(p.to_string());
            qts.insert(q.transpose().to_string());
        }
        if ps.len() != 1 {
            report.violations.push(format!("component of {top} has {} insertion tableaux", ps.len()));
        }
        let character = match SymPoly::from_exponent_map(m, &weights) {
            Ok(c) => c.to_schur(),
            Err(e) => {
                report.violations.push(format!("component of {top}: {e}"));
                continue;
            }
        };
        let lead = top.weight_padded(m).sorted();
        if character != SymPoly::basis_element(&lead, m, Basis::Schur) {
            report.violations.push(format!("component of {top} has character {character}"));
        }
        let (_, q) = rsk(&BurgeWord::from_filling(top));
        let expected = ssyt_bounded(q.transpose().shape(), m).len();
        if qts.len() != comp.len() || comp.len() != expected {
            report.violations.push(format!("component of {top}: {} vertices, {} recording tableaux, {expected} tableaux of the shape", comp.len(), qts.len()));
        }
        total = &total + &SymPoly::basis_element(&lead, m, Basis::Schur).scale(&QPoly::monomial(1, top.maj()));
    }
    if total != macdonald_e(shape, m).to_schur() {
        report.violations.push(format!("component characters sum to {total}"));
    }
    Ok(report)
}
