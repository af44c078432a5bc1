//! Cyclic actions on coinversion-free fillings and mechanical verification of cyclic sieving.
//!
//! A triple `(X, C_n, f)` sieves when, for every `d`, the number of elements fixed by `g^d`
//! equals `f(xi^d)` for a primitive `n`-th root `xi`. Fixed points are always counted by
//! enumeration; `f` is always evaluated exactly modulo a cyclotomic polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::base::cyclotomic::{eval_at_unity, CyclotomicValue};
use crate::base::qanalog::binomial;
use crate::base::{Composition, Partition, QPoly};
use crate::error::{Error, Result};
use crate::fillings::{enumerate_cof, enumerate_cof_content, from_column_sets, macdonald_e, Filling, SkewShape};
use crate::symfunc::Specialization;

/// Above this many candidate fillings the block engine replaces literal enumeration.
pub const EXHAUSTIVE_LIMIT: f64 = (1u64 << 18) as f64;

/// Check that the columns split into blocks of `n` columns of equal height.
pub fn check_divisible(shape: &SkewShape, n: usize) -> Result<()> {
    let heights = shape.column_heights();
    if n == 0 || heights.len() % n != 0 || heights.chunks(n).any(|b| b.iter().any(|&h| h != b[0])) {
        return Err(Error::ShapeNotDivisible(n));
    }
    Ok(())
}

fn rotate_blocks<T: Clone>(items: &[T], n: usize) -> Vec<T> {
    items
        .chunks(n)
        .flat_map(|block| {
            let mut b = block.to_vec();
            b.rotate_right(1);
            b
        })
        .collect()
}

/// Rotate the column sets of every block of `n` columns one step to the right and rebuild.
pub fn phi(f: &Filling, n: usize) -> Result<Filling> {
    check_divisible(f.shape(), n)?;
    from_column_sets(f.shape(), &rotate_blocks(&f.column_sets(), n))
}

/// A permutation of `1..=m`, stored by images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let ok = v >= 1 && (v as usize) <= images.len() && !seen[v as usize - 1];
            if !ok {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation(images))
    }

    /// Cycle notation such as `(1234)(56)` or `(1,2,10)` acting on `1..=m`.
    pub fn from_cycles(s: &str, m: usize) -> Result<Self> {
        let bad = || Error::NotAPermutation(s.to_string());
        let mut images: Vec<u32> = (1..=m as u32).collect();
        let mut seen = vec![false; m];
        let body = s.trim();
        if body.is_empty() || body == "()" {
            return Ok(Permutation(images));
        }
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        for cycle in body.split(")(") {
            let letters: Vec<u32> = if cycle.contains([',', ' ']) {
                cycle.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().map_err(|_| bad())).try_collect()?
            } else {
                cycle.chars().map(|c| c.to_digit(10).ok_or_else(bad)).try_collect()?
            };
            for (k, &a) in letters.iter().enumerate() {
                if a == 0 || a as usize > m || seen[a as usize - 1] {
                    return Err(bad());
                }
                seen[a as usize - 1] = true;
                images[a as usize - 1] = letters[(k + 1) % letters.len()];
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.0[v as usize - 1]
    }

    /// Cycle lengths, longest first, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.0[p] as usize - 1;
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::from_unsorted(&lengths)
    }

    pub fn order(&self) -> usize {
        self.cycle_type().parts().iter().fold(1, |acc, &l| acc.lcm(&l))
    }

    /// Every cycle has length `order`, except for at most one fixed point.
    pub fn is_nearly_free(&self) -> bool {
        let n = self.order();
        let ct = self.cycle_type();
        n == 1 || (ct.parts().iter().all(|&l| l == n || l == 1) && ct.mult_count(1) <= 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.len() >= 10;
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start + 1 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push((p + 1).to_string());
                p = self.0[p] as usize - 1;
            }
            write!(f, "({})", cycle.join(if wide { "," } else { "" }))?;
            any = true;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Relabel every entry by `sigma` and rebuild from the relabelled column sets.
pub fn sigma_action(f: &Filling, sigma: &Permutation) -> Result<Filling> {
    if f.max_entry() as usize > sigma.degree() {
        return Err(Error::InvalidFilling(format!("entry {} exceeds the permuted alphabet", f.max_entry())));
    }
    let sets: Vec<Vec<u32>> = f
        .column_sets()
        .iter()
        .map(|s| s.iter().map(|&v| sigma.apply(v)).sorted_unstable().collect())
        .collect();
    from_column_sets(f.shape(), &sets)
}

/// The cyclic action of a sieving triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// Block rotation of columns; the group is `C_n`.
    Phi { n: usize },
    /// Relabelling of values; the group is generated by `sigma`.
    Sigma(Permutation),
}

/// The set, the group action and the candidate polynomial.
#[derive(Clone, Debug)]
pub struct CspTriple {
    pub shape: SkewShape,
    pub m: usize,
    pub content: Option<Composition>,
    pub action: Action,
    pub poly: QPoly,
}

impl CspTriple {
    /// The order of the cyclic group.
    pub fn order(&self) -> usize {
        match &self.action {
            Action::Phi { n } => *n,
            Action::Sigma(s) => s.order(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "shape": self.shape.to_string(),
            "m": self.m,
            "content": self.content.as_ref().map(|c| c.parts().to_vec()),
            "poly": self.poly.to_string(),
            "n": self.order(),
        });
        match &self.action {
            Action::Phi { .. } => v["action"] = "phi".into(),
            Action::Sigma(s) => {
                v["action"] = "sigma".into();
                v["sigma"] = s.to_string().into();
            }
        }
        v
    }
}

/// Which fixed-point counter to use for the column rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`] candidates, blockwise above.
    #[default]
    Auto,
    /// Enumerate the fillings and apply `phi`.
    Exhaustive,
    /// Enumerate per-block tuples of column sets and combine blocks.
    Blockwise,
}

fn candidate_count(shape: &SkewShape, m: usize) -> f64 {
    shape
        .column_heights()
        .iter()
        .map(|&h| binomial(m, h).to_string().parse::<f64>().unwrap_or(f64::INFINITY))
        .product()
}

fn elements(shape: &SkewShape, m: usize, content: Option<&Composition>) -> Vec<Filling> {
    match content {
        Some(c) => enumerate_cof_content(shape, c).collect(),
        None => enumerate_cof(shape, m).collect(),
    }
}

/// Lengths of the cycles of a map on `0..len` given by images.
fn cycle_lengths(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = images[p];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

/// Images of `xs` under `act`, as indices into `xs`.
fn image_indices(xs: &[Filling], act: impl Fn(&Filling) -> Result<Filling> + Sync) -> Result<Vec<usize>> {
    let index: HashMap<&Filling, usize> = xs.iter().enumerate().map(|(i, f)| (f, i)).collect();
    xs.par_iter()
        .map(|f| {
            let g = act(f)?;
            index
                .get(&g)
                .copied()
                .ok_or_else(|| Error::InvalidFilling(format!("image {g} of {f} left the set")))
        })
        .collect()
}

/// `#{x : g^d x = x}` for `d = 1..=n` from the cycle structure of `g`.
fn fixed_from_cycles(cycles: &[usize], n: usize) -> Vec<BigInt> {
    (1..=n).map(|d| BigInt::from(cycles.iter().filter(|&&c| d % c == 0).sum::<usize>())).collect()
}

/// Fixed-point counts of `phi^d`, `d = 1..=n`, on `COF(shape, m)` or its content slice.
pub fn fixed_point_counts(shape: &SkewShape, n: usize, m: usize, content: Option<&Composition>, engine: Engine) -> Result<Vec<BigInt>> {
    check_divisible(shape, n)?;
    let m = content.map_or(m, Composition::len);
    let blockwise = match engine {
        Engine::Auto => candidate_count(shape, m) > EXHAUSTIVE_LIMIT,
        Engine::Exhaustive => false,
        Engine::Blockwise => true,
    };
    if blockwise {
        return Ok(blockwise_counts(shape, n, m, content));
    }
    let xs = elements(shape, m, content);
    let images = image_indices(&xs, |f| phi(f, n))?;
    Ok(fixed_from_cycles(&cycle_lengths(&images), n))
}

type Weight = Vec<u16>;

/// For one block of `n` columns of height `h`: for each `d`, the weights of the `n`-tuples of
/// `h`-subsets fixed by rotating `d` steps, with multiplicity.
fn block_histograms(h: usize, n: usize, m: usize) -> Vec<HashMap<Weight, u64>> {
    let subsets: Vec<Vec<usize>> = (0..m).combinations(h).collect();
    let mut out = vec![HashMap::new(); n];
    for tuple in std::iter::repeat_n(0..subsets.len(), n).multi_cartesian_product() {
        let period = (1..=n).find(|&p| n % p == 0 && (0..n).all(|k| tuple[k] == tuple[(k + p) % n])).expect("n is a period");
        let mut w = vec![0u16; m];
        for &s in &tuple {
            for &v in &subsets[s] {
                w[v] += 1;
            }
        }
        for d in (1..=n).filter(|d| d % period == 0) {
            *out[d - 1].entry(w.clone()).or_insert(0) += 1;
        }
    }
    out
}

fn blockwise_counts(shape: &SkewShape, n: usize, m: usize, content: Option<&Composition>) -> Vec<BigInt> {
    let heights: Vec<usize> = shape.column_heights().chunks(n).map(|b| b[0]).collect();
    let mut cache: HashMap<usize, Vec<HashMap<Weight, u64>>> = HashMap::new();
    for &h in &heights {
        cache.entry(h).or_insert_with(|| block_histograms(h, n, m));
    }
    let target: Option<Weight> = content.map(|c| c.parts().iter().map(|&x| x as u16).collect());
    (1..=n)
        .into_par_iter()
        .map(|d| {
            let mut acc: HashMap<Weight, BigInt> = HashMap::from([(vec![0u16; m], BigInt::from(1))]);
            for h in &heights {
                let mut next: HashMap<Weight, BigInt> = HashMap::new();
                for (w, c) in &acc {
                    for (bw, bc) in &cache[h][d - 1] {
                        let sum: Weight = w.iter().zip(bw).map(|(a, b)| a + b).collect();
                        if target.as_ref().is_some_and(|t| sum.iter().zip(t).any(|(a, b)| a > b)) {
                            continue;
                        }
                        *next.entry(sum).or_default() += c * bc;
                    }
                }
                acc = next;
            }
            match &target {
                Some(t) => acc.remove(t).unwrap_or_default(),
                None => acc.into_values().sum(),
            }
        })
        .collect()
}

/// Orbits of `phi`, each listed from its least element (in enumeration order) along the action;
/// orbits are ordered by their representatives.
pub fn orbits(shape: &SkewShape, n: usize, m: usize, content: Option<&Composition>) -> Result<Vec<Vec<Filling>>> {
    check_divisible(shape, n)?;
    let m = content.map_or(m, Composition::len);
    let xs = elements(shape, m, content);
    let images = image_indices(&xs, |f| phi(f, n))?;
    let mut seen = vec![false; xs.len()];
    let mut out = Vec::new();
    for start in 0..xs.len() {
        let mut orbit = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            orbit.push(xs[p].clone());
            p = images[p];
        }
        if !orbit.is_empty() {
            out.push(orbit);
        }
    }
    Ok(out)
}

/// One value of `d` in a sieving check.
#[derive(Clone, Debug)]
pub struct CspCheck {
    pub d: usize,
    pub fixed: BigInt,
    pub f_at_root: CyclotomicValue,
    pub ok: bool,
}

/// `f_{n/d}(1)` against `f_n` at a primitive `d`-th root, for `d | n`.
#[derive(Clone, Debug)]
pub struct LyndonCheck {
    pub d: usize,
    pub lhs: BigInt,
    pub rhs: CyclotomicValue,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The hypotheses of the sieving statement do not hold for this action.
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CspReport {
    pub triple: CspTriple,
    pub checks: Vec<CspCheck>,
    pub lyndon: Vec<LyndonCheck>,
    pub verdict: Verdict,
    /// A non-integer value of `f` at a root of unity, when the action is not nearly free.
    pub witness: Option<String>,
}

fn number_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => v.into(),
        Err(_) => x.to_string().into(),
    }
}

fn cyclo_json(v: &CyclotomicValue) -> serde_json::Value {
    v.as_integer().map_or_else(|| v.to_string().into(), |x| number_json(&x))
}

impl CspReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn fixed_counts(&self) -> Vec<BigInt> {
        self.checks.iter().map(|c| c.fixed.clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|c| serde_json::json!({"d": c.d, "fixed": number_json(&c.fixed), "f_at_root": cyclo_json(&c.f_at_root), "ok": c.ok}))
            .collect();
        let lyndon: Vec<_> = self
            .lyndon
            .iter()
            .map(|c| serde_json::json!({"d": c.d, "lhs": number_json(&c.lhs), "rhs": cyclo_json(&c.rhs), "ok": c.ok}))
            .collect();
        serde_json::json!({
            "triple": self.triple.to_json(),
            "checks": checks,
            "lyndon": lyndon,
            "pass": self.passed(),
            "verdict": self.verdict.to_string(),
            "witness": self.witness,
        })
    }

    fn finish(mut self) -> Self {
        let all_ok = self.checks.iter().all(|c| c.ok) && self.lyndon.iter().all(|c| c.ok);
        if self.verdict != Verdict::NotApplicable {
            self.verdict = if all_ok { Verdict::Pass } else { Verdict::Fail };
        }
        self
    }
}

impl fmt::Display for CspReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.triple;
        write!(f, "shape {}  m={}", t.shape, t.m)?;
        if let Some(c) = &t.content {
            write!(f, "  content {c}")?;
        }
        match &t.action {
            Action::Phi { n } => writeln!(f, "  phi n={n}")?,
            Action::Sigma(s) => writeln!(f, "  sigma={s} order {}", s.order())?,
        }
        writeln!(f, "f(q) = {}", t.poly)?;
        for c in &self.checks {
            writeln!(f, "d={}  fixed={}  f(root^d)={}  {}", c.d, c.fixed, c.f_at_root, if c.ok { "ok" } else { "MISMATCH" })?;
        }
        for c in &self.lyndon {
            writeln!(f, "lyndon d={}  f_(n/d)(1)={}  f_n(root_d)={}  {}", c.d, c.lhs, c.rhs, if c.ok { "ok" } else { "MISMATCH" })?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        write!(f, "{}", self.verdict)
    }
}

fn compare(poly: &QPoly, fixed: Vec<BigInt>) -> Vec<CspCheck> {
    let n = fixed.len();
    fixed
        .into_iter()
        .enumerate()
        .map(|(k, fixed)| {
            let d = k + 1;
            let f_at_root = eval_at_unity(poly, n / n.gcd(&d));
            let ok = f_at_root.as_integer().as_ref() == Some(&fixed);
            CspCheck { d, fixed, f_at_root, ok }
        })
        .collect()
}

/// Count fixed points of every power of the action and compare with `f` at the matching roots.
pub fn verify_csp(t: &CspTriple) -> Result<CspReport> {
    verify_csp_with(t, Engine::Auto)
}

pub fn verify_csp_with(t: &CspTriple, engine: Engine) -> Result<CspReport> {
    let fixed = match &t.action {
        Action::Phi { n } => fixed_point_counts(&t.shape, *n, t.m, t.content.as_ref(), engine)?,
        Action::Sigma(sigma) => {
            let xs = elements(&t.shape, t.m, t.content.as_ref());
            let images = image_indices(&xs, |f| sigma_action(f, sigma))?;
            fixed_from_cycles(&cycle_lengths(&images), sigma.order())
        }
    };
    let report = CspReport { triple: t.clone(), checks: compare(&t.poly, fixed), lyndon: Vec::new(), verdict: Verdict::Pass, witness: None };
    Ok(report.finish())
}

fn count_poly(shape: &SkewShape, m: usize) -> Result<QPoly> {
    macdonald_e(shape, m).principal_spec(Specialization::Ones)
}

/// `E_{n lambda/n mu}(1^m; q, 0)` sieves `COF(n lambda/n mu, m)` under `phi`, and the family in
/// `n` is Lyndon-like.
pub fn macdonald_csp_suite(base: &SkewShape, n: usize, m: usize) -> Result<CspReport> {
    if n == 0 {
        return Err(Error::ShapeNotDivisible(0));
    }
    let shape = base.scale(n);
    let poly = count_poly(&shape, m)?;
    let triple = CspTriple { shape, m, content: None, action: Action::Phi { n }, poly };
    let mut report = verify_csp(&triple)?;
    for d in (1..=n).filter(|d| n % d == 0) {
        let lhs = count_poly(&base.scale(n / d), m)?.eval_one();
        let rhs = eval_at_unity(&triple.poly, d);
        let ok = rhs.as_integer().as_ref() == Some(&lhs);
        report.lyndon.push(LyndonCheck { d, lhs, rhs, ok });
    }
    Ok(report.finish())
}

/// `[m_nu] E_{n lambda}(x; q, 0)` sieves the fillings of content `nu` under `phi`.
pub fn refined_csp_suite(base: &SkewShape, n: usize, nu: &Composition) -> Result<CspReport> {
    if n == 0 {
        return Err(Error::ShapeNotDivisible(0));
    }
    let shape = base.scale(n);
    if nu.size() != shape.size() {
        return Err(Error::SizeMismatch(nu.size(), shape.size()));
    }
    let poly = macdonald_e(&shape, nu.len()).coeff_monomial(nu);
    let triple = CspTriple { shape, m: nu.len(), content: Some(nu.clone()), action: Action::Phi { n }, poly };
    verify_csp(&triple)
}

/// [`refined_csp_suite`] for every weak composition of `|n base|` with `len` parts, sharing one
/// computation of `E`.
pub fn refined_csp_family(base: &SkewShape, n: usize, len: usize) -> Result<Vec<CspReport>> {
    if n == 0 {
        return Err(Error::ShapeNotDivisible(0));
    }
    let shape = base.scale(n);
    let e = macdonald_e(&shape, len);
    Composition::all(shape.size(), len)
        .into_par_iter()
        .map(|nu| {
            let poly = e.coeff_monomial(&nu);
            let triple = CspTriple { shape: shape.clone(), m: len, content: Some(nu), action: Action::Phi { n }, poly };
            verify_csp(&triple)
        })
        .collect()
}

/// Relabelling by `sigma` with `f = E(x; 1, 0)` at `x_i = q^{i-1}`. When `sigma` is not
/// nearly free the report is NOT-APPLICABLE and carries a non-integer value of `f` if one exists.
pub fn sigma_csp_suite(shape: &SkewShape, sigma: &Permutation) -> Result<CspReport> {
    let m = sigma.degree();
    let at_one = macdonald_e(shape, m).map_coeffs(|c| QPoly::constant(c.eval_one()));
    let poly = at_one.principal_spec(Specialization::Powers)?;
    let triple = CspTriple { shape: shape.clone(), m, content: None, action: Action::Sigma(sigma.clone()), poly };
    let mut report = verify_csp(&triple)?;
    if !sigma.is_nearly_free() {
        report.verdict = Verdict::NotApplicable;
        report.witness = report
            .checks
            .iter()
            .find(|c| c.f_at_root.as_integer().is_none())
            .map(|c| format!("f at root^{} = {}", c.d, c.f_at_root));
    }
    Ok(report.finish())
}

/// `j -> d * m_j(mu')`: the exponent of `C(m, j)` in `E_{n mu}(1^m; xi^d, 0)` for `d | n`.
pub fn unity_exponents(mu: &Partition, d: usize) -> BTreeMap<usize, usize> {
    let conj = mu.conjugate();
    conj.parts().iter().dedup().map(|&j| (j, d * conj.mult_count(j))).collect()
}

/// `E_{n mu}(1^m; xi^d, 0) = prod_j C(m, j)^{g * m_j(mu')}` with `g = gcd(n, d)`.
pub fn unity_formula(mu: &Partition, n: usize, d: usize, m: usize) -> BigInt {
    unity_exponents(mu, n.gcd(&d)).iter().map(|(&j, &e)| num_traits::pow(binomial(m, j), e)).product()
}

/// A 0/1 matrix; row `i` is the value `i + 1`, column `j` a column of a filling.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl BinaryMatrix {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("matrix rows have different lengths".into()));
        }
        Ok(BinaryMatrix { rows: rows.len(), cols, entries: rows.concat() })
    }

    /// `M(i, j) = 1` iff column `j` of `f` contains `i + 1`.
    pub fn from_filling(f: &Filling, m: usize) -> Self {
        let cols = f.shape().ncols();
        let mut entries = vec![false; m * cols];
        for (j, col) in f.columns().iter().enumerate() {
            for &v in col {
                entries[(v as usize - 1) * cols + j] = true;
            }
        }
        BinaryMatrix { rows: m, cols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.cols + j]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.iter().filter(|&&b| b).count()).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).filter(|&i| self.get(i, j)).count()).collect()
    }

    /// Rotate every block of `n` columns one step to the right.
    pub fn rotate_blocks(&self, n: usize) -> Self {
        let order = rotate_blocks(&(0..self.cols).collect::<Vec<_>>(), n);
        let entries = (0..self.rows).flat_map(|i| order.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
        BinaryMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// The filling of `shape` whose column `j` holds `{i + 1 : M(i, j) = 1}`.
    pub fn to_filling(&self, shape: &SkewShape) -> Result<Filling> {
        if self.column_sums() != shape.column_heights() {
            return Err(Error::ContentMismatch(format!("column sums {:?} differ from column heights {:?}", self.column_sums(), shape.column_heights())));
        }
        let sets: Vec<Vec<u32>> = (0..self.cols).map(|j| (0..self.rows).filter(|&i| self.get(i, j)).map(|i| i as u32 + 1).collect()).collect();
        from_column_sets(shape, &sets)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.entries.chunks(self.cols.max(1)).map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>()).join("/");
        f.write_str(&text)
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("bad matrix entry {c:?}"))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .try_collect()?;
        Self::new(rows)
    }
}

/// Build `shape`'s filling from a matrix.
pub fn matrix_bijection(m: &BinaryMatrix, shape: &SkewShape) -> Result<Filling> {
    m.to_filling(shape)
}

/// Over every 0/1 matrix with column sums the column heights and row sums `nu`: the filling of
/// the rotated matrix is `phi` of the filling, and the matrix round-trips. Returns the number of
/// matrices checked, or the first failing matrix.
pub fn matrix_equivariance_check(shape: &SkewShape, n: usize, nu: &Composition) -> Result<std::result::Result<usize, BinaryMatrix>> {
    check_divisible(shape, n)?;
    let m = nu.len();
    let columns: Vec<Vec<Vec<usize>>> = shape.column_heights().iter().map(|&h| (0..m).combinations(h).collect()).collect();
    let mut checked = 0;
    for choice in columns.into_iter().multi_cartesian_product() {
        let mut rows = vec![vec![false; choice.len()]; m];
        for (j, set) in choice.iter().enumerate() {
            for &i in set {
                rows[i][j] = true;
            }
        }
        let matrix = BinaryMatrix::new(rows)?;
        if matrix.row_sums() != nu.parts() {
            continue;
        }
        let f = matrix.to_filling(shape)?;
        let ok = matrix.rotate_blocks(n).to_filling(shape)? == phi(&f, n)? && BinaryMatrix::from_filling(&f, m) == matrix;
        if !ok {
            return Ok(Err(matrix));
        }
        checked += 1;
    }
    Ok(Ok(checked))
}
