//! Symmetric polynomials in finitely many variables with coefficients in `Z[q]`, stored in the
//! monomial or the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::base::{Composition, Partition, QPoly};
use crate::error::{Error, Result};
use crate::tableau::kostka_number;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" | "m" => Ok(Basis::Monomial),
            "schur" | "s" => Ok(Basis::Schur),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// How to specialize the variables in [`SymPoly::principal_spec`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    /// `x_i = 1`.
    Ones,
    /// `x_i = q^(i-1)`; the coefficients must be constants.
    Powers,
}

/// A symmetric polynomial in `x_1..x_m`. Keys with more than `m` parts are never stored since
/// both `m_lambda` and `s_lambda` vanish in `m` variables when `l(lambda) > m`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymPoly {
    pub fn zero(nvars: usize, basis: Basis) -> Self {
        SymPoly {
            nvars,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QPoly)>>(nvars: usize, basis: Basis, terms: I) -> Self {
        let mut out = Self::zero(nvars, basis);
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    /// The basis element `m_lambda` or `s_lambda` with coefficient 1.
    pub fn basis_element(lambda: &Partition, nvars: usize, basis: Basis) -> Self {
        Self::from_terms(nvars, basis, [(lambda.clone(), QPoly::one())])
    }

    /// The Schur polynomial `s_lambda(x_1..x_m)` expanded in the monomial basis; the
    /// coefficient of `m_nu` is the Kostka number.
    pub fn schur(lambda: &Partition, nvars: usize) -> Self {
        Self::basis_element(lambda, nvars, Basis::Schur).to_monomial()
    }

    /// `e_j` in the monomial basis.
    pub fn elementary(j: usize, nvars: usize) -> Self {
        Self::basis_element(&Partition::rectangle(1, j), nvars, Basis::Monomial)
    }

    /// `h_k` in the monomial basis.
    pub fn complete(k: usize, nvars: usize) -> Self {
        Self::from_terms(nvars, Basis::Monomial, Partition::all(k).into_iter().map(|p| (p, QPoly::one())))
    }

    /// `p_k` in the monomial basis.
    pub fn power_sum(k: usize, nvars: usize) -> Self {
        Self::basis_element(&Partition::rectangle(k, 1), nvars, Basis::Monomial)
    }

    /// Build a monomial-basis polynomial from exponent vectors, verifying that every monomial
    /// orbit carries a constant coefficient.
    pub fn from_exponent_map(nvars: usize, map: &HashMap<Vec<usize>, QPoly>) -> Result<Self> {
        let mut orbit: HashMap<Partition, (QPoly, usize)> = HashMap::new();
        for (exp, c) in map {
            if c.is_zero() {
                continue;
            }
            if exp.len() > nvars && exp[nvars..].iter().any(|&e| e > 0) {
                return Err(Error::NonSymmetricInput(format!("exponent vector {exp:?} uses more than {nvars} variables")));
            }
            let key = Partition::from_unsorted(exp);
            match orbit.get_mut(&key) {
                Some((c0, n)) => {
                    if c0 != c {
                        return Err(Error::NonSymmetricInput(format!("coefficients {c0:#} and {c:#} in the orbit of m[{key}]")));
                    }
                    *n += 1;
                }
                None => {
                    orbit.insert(key, (c.clone(), 1));
                }
            }
        }
        for (key, (_, n)) in &orbit {
            let full = orbit_size(key, nvars);
            if BigInt::from(*n) != full {
                return Err(Error::NonSymmetricInput(format!("orbit of m[{key}] has {n} of {full} monomials")));
            }
        }
        Ok(Self::from_terms(nvars, Basis::Monomial, orbit.into_iter().map(|(k, (c, _))| (k, c))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of keys.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    /// The stored coefficient of the basis element indexed by `key` (zero when absent).
    pub fn coefficient(&self, key: &Partition) -> QPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// `[m_nu] f` for a monomial-basis polynomial; a weak composition is sorted first, which
    /// is harmless by symmetry.
    pub fn coeff_monomial(&self, nu: &Composition) -> QPoly {
        let key = nu.sorted();
        match self.basis {
            Basis::Monomial => self.coefficient(&key),
            Basis::Schur => self.to_monomial().coefficient(&key),
        }
    }

    /// The common degree of all keys, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    fn add_term(&mut self, key: Partition, c: &QPoly) {
        if key.len() > self.nvars || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Multiply every coefficient by a polynomial in `q`.
    pub fn scale(&self, c: &QPoly) -> Self {
        Self::from_terms(self.nvars, self.basis, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Apply a map to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> Self {
        Self::from_terms(self.nvars, self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    /// Reinterpret in a different number of variables. Shrinking drops keys that become zero;
    /// growing is only meaningful when the Schur expansion is already complete.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        Self::from_terms(nvars, self.basis, self.terms.clone())
    }

    /// Convert to the given basis.
    pub fn in_basis(&self, basis: Basis) -> Self {
        match basis {
            Basis::Monomial => self.to_monomial(),
            Basis::Schur => self.to_schur(),
        }
    }

    /// Expand in the monomial basis.
    pub fn to_monomial(&self) -> Self {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let mut out = Self::zero(self.nvars, Basis::Monomial);
        for (lam, c) in &self.terms {
            for nu in Partition::bounded(lam.size(), lam.first(), self.nvars) {
                if !lam.dominates(&nu) {
                    continue;
                }
                let k = kostka_number(lam, nu.parts());
                if k > 0 {
                    out.add_term(nu, &c.scale(&BigInt::from(k)));
                }
            }
        }
        out
    }

    /// Expand in the Schur basis by unitriangular elimination in decreasing lexicographic order.
    pub fn to_schur(&self) -> Self {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut rem = self.terms.clone();
        let mut out = Self::zero(self.nvars, Basis::Schur);
        while let Some((lam, c)) = rem.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            out.add_term(lam.clone(), &c);
            for nu in Partition::bounded(lam.size(), lam.first(), self.nvars) {
                if !lam.dominates(&nu) {
                    continue;
                }
                let k = kostka_number(&lam, nu.parts());
                if k == 0 {
                    continue;
                }
                let entry = rem.entry(nu).or_default();
                *entry -= &c.scale(&BigInt::from(k));
            }
            rem.retain(|_, v| !v.is_zero());
        }
        out
    }

    /// `omega(s_lambda) = s_lambda'`; the result is in the Schur basis.
    pub fn omega_on_schur(&self) -> Self {
        let s = self.to_schur();
        Self::from_terms(self.nvars, Basis::Schur, s.terms.iter().map(|(k, v)| (k.conjugate(), v.clone())))
    }

    /// `p_k[f] = f(x_1^k, x_2^k, ...)`, returned in the monomial basis.
    pub fn plethysm_pk(&self, k: usize) -> Self {
        assert!(k >= 1);
        let m = self.to_monomial();
        Self::from_terms(self.nvars, Basis::Monomial, m.terms.iter().map(|(key, v)| (key.scale(k), v.clone())))
    }

    /// Principal specialization to a polynomial in `q`.
    pub fn principal_spec(&self, mode: Specialization) -> Result<QPoly> {
        let m = self.to_monomial();
        let mut out = QPoly::zero();
        for (key, c) in &m.terms {
            match mode {
                Specialization::Ones => out += &c.scale(&orbit_size(key, self.nvars)),
                Specialization::Powers => {
                    let c = c.as_constant().ok_or(Error::MixedParameters)?;
                    let mut padded = key.parts().to_vec();
                    padded.resize(self.nvars, 0);
                    let mut spec = QPoly::zero();
                    for perm in distinct_permutations(&padded) {
                        let e: usize = perm.iter().enumerate().map(|(i, a)| i * a).sum();
                        spec += QPoly::monomial(1, e);
                    }
                    out += &spec.scale(&c);
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| serde_json::json!({"key": k, "coeff": c}))
            .collect();
        serde_json::json!({"m": self.nvars, "basis": self.basis, "terms": terms})
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Term {
            key: Partition,
            coeff: QPoly,
        }
        #[derive(serde::Deserialize)]
        struct Repr {
            m: usize,
            basis: Basis,
            terms: Vec<Term>,
        }
        let r: Repr = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self::from_terms(r.m, r.basis, r.terms.into_iter().map(|t| (t.key, t.coeff))))
    }
}

/// Number of distinct permutations of `key` padded with zeros to length `nvars`.
fn orbit_size(key: &Partition, nvars: usize) -> BigInt {
    if key.len() > nvars {
        return BigInt::from(0);
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in key.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.insert(0, nvars - key.len());
    let mut out: BigInt = (1..=nvars).map(BigInt::from).product();
    for c in counts.values() {
        let f: BigInt = (1..=*c).map(BigInt::from).product();
        out /= f;
    }
    out
}

/// Distinct permutations of a multiset, in lexicographic order.
pub(crate) fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `m_lambda * m_mu` in `nvars` variables as a map from partitions to multiplicities.
fn monomial_product(lambda: &Partition, mu: &Partition, nvars: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if lambda.len() > nvars || mu.len() > nvars {
        return out;
    }
    let mut a = lambda.parts().to_vec();
    a.resize(nvars, 0);
    let mut pool: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..nvars {
        *pool.entry(mu.get(i)).or_default() += 1;
    }
    let mut sum = vec![0; nvars];
    fn rec(i: usize, a: &[usize], pool: &mut BTreeMap<usize, usize>, sum: &mut Vec<usize>, out: &mut BTreeMap<Partition, u64>) {
        if i == a.len() {
            *out.entry(Partition::from_unsorted(sum)).or_default() += 1;
            return;
        }
        let keys: Vec<usize> = pool.iter().filter(|(_, &n)| n > 0).map(|(&k, _)| k).collect();
        for b in keys {
            let s = a[i] + b;
            if i > 0 && s > sum[i - 1] {
                continue;
            }
            *pool.get_mut(&b).expect("pool") -= 1;
            sum[i] = s;
            rec(i + 1, a, pool, sum, out);
            *pool.get_mut(&b).expect("pool") += 1;
        }
    }
    for perm in distinct_permutations(&a) {
        rec(0, &perm, &mut pool, &mut sum, &mut out);
    }
    out
}

impl Add<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let rhs = rhs.in_basis(self.basis);
        let mut out = self.clone();
        out.nvars = self.nvars.min(rhs.nvars);
        out.terms.retain(|k, _| k.len() <= out.nvars);
        for (k, c) in rhs.terms {
            out.add_term(k, &c);
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Sub<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

/// Products are computed in the monomial basis and returned in the basis of the left factor.
impl Mul<&SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let nvars = self.nvars.min(rhs.nvars);
        let a = self.to_monomial();
        let b = rhs.to_monomial();
        let mut out = SymPoly::zero(nvars, Basis::Monomial);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let c = ca * cb;
                for (key, mult) in monomial_product(ka, kb, nvars) {
                    out.add_term(key, &c.scale(&BigInt::from(mult)));
                }
            }
        }
        out.in_basis(self.basis)
    }
}

impl fmt::Display for SymPoly {
    /// Terms in decreasing lexicographic order of keys, e.g. `s[2,1] + q*s[1,1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (key, c)) in self.terms.iter().rev().enumerate() {
            let single = c.term_count() == 1;
            let negative = single && c.coeffs().iter().any(|x| x.is_negative());
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !(single && mag.as_constant().is_some_and(|x| x.is_one())) {
                if single {
                    write!(f, "{mag:#}*")?;
                } else {
                    write!(f, "({mag:#})*")?;
                }
            }
            write!(f, "{}[{key}]", self.basis.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly(m={}, {self})", self.nvars)
    }
}

/// Check `p_k[omega f] = (-1)^((k+1)n) omega(p_k[f])` for a homogeneous `f` of degree `n`.
/// Both sides are computed in `k*n` variables (enough for the identity to hold in the ring of
/// symmetric functions); `f` must be given with at least `n` variables so its Schur expansion
/// is complete.
pub fn pleth_omega_check(k: usize, f: &SymPoly) -> Result<bool> {
    let n = match f.degree() {
        Some(n) => n,
        None if f.is_zero() => return Ok(true),
        None => return Err(Error::NonSymmetricInput("pleth_omega_check needs a homogeneous input".into())),
    };
    if f.nvars() < n {
        return Err(Error::NotEnoughVariables { needed: n, got: f.nvars() });
    }
    let big = (k * n).max(f.nvars()).max(1);
    let fs = f.to_schur().with_nvars(big);
    let lhs = fs.omega_on_schur().plethysm_pk(k).to_schur();
    let mut rhs = fs.plethysm_pk(k).to_schur().omega_on_schur();
    if ((k + 1) * n) % 2 == 1 {
        rhs = -&rhs;
    }
    Ok(lhs == rhs)
}
