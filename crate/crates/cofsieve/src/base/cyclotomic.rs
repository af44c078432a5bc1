//! Cyclotomic polynomials and exact evaluation of integer polynomials at roots of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use super::qanalog::{binomial, q_binomial};
use super::qpoly::QPoly;

/// The `e`-th cyclotomic polynomial, computed as `(q^e - 1) / prod_{d | e, d < e} Phi_d`.
pub fn cyclotomic(e: usize) -> QPoly {
    assert!(e >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<usize, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache").get(&e) {
        return p.clone();
    }
    let mut num = QPoly::monomial(1, e) - QPoly::one();
    for d in (1..e).filter(|d| e % d == 0) {
        let (quo, rem) = num.div_rem_monic(&cyclotomic(d));
        debug_assert!(rem.is_zero());
        num = quo;
    }
    cache.lock().expect("cyclotomic cache").insert(e, num.clone());
    num
}

/// The value of a polynomial at a primitive `order`-th root of unity, as a canonical residue
/// modulo `Phi_order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    order: usize,
    residue: QPoly,
}

impl CyclotomicValue {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue(&self) -> &QPoly {
        &self.residue
    }

    /// The integer value when the residue is a constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.residue.as_constant()
    }

    /// For order 4 the residue `a + b*q` is the Gaussian integer `a + b*i`.
    pub fn as_gaussian(&self) -> Option<(BigInt, BigInt)> {
        (self.order == 4).then(|| (self.residue.coeff(0), self.residue.coeff(1)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        eval_at_unity(&(&self.residue + &other.residue), self.order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        eval_at_unity(&(&self.residue * &other.residue), self.order)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_integer() {
            return write!(f, "{c}");
        }
        if let Some((a, b)) = self.as_gaussian() {
            return write!(f, "{}", gaussian_text(&a, &b));
        }
        write!(f, "{:#} mod Phi_{}", self.residue, self.order)
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicValue({self})")
    }
}

fn gaussian_text(a: &BigInt, b: &BigInt) -> String {
    let imag = match b.to_string().as_str() {
        "1" => "i".to_string(),
        "-1" => "-i".to_string(),
        s => format!("{s}i"),
    };
    if a == &BigInt::from(0) {
        imag
    } else if imag.starts_with('-') {
        format!("{a}{imag}")
    } else {
        format!("{a}+{imag}")
    }
}

/// Reduce `f` modulo `Phi_e`: the exact value of `f` at a primitive `e`-th root of unity.
pub fn eval_at_unity(f: &QPoly, e: usize) -> CyclotomicValue {
    let (_, residue) = f.div_rem_monic(&cyclotomic(e));
    CyclotomicValue { order: e, residue }
}

/// Check the q-Lucas congruence `[n k]_q = C(n1, k1) [n0 k0]_q  (mod Phi_d)`.
pub fn q_lucas_check(n: usize, k: usize, d: usize) -> bool {
    assert!(d >= 1);
    let (n1, n0) = n.div_rem(&d);
    let (k1, k0) = k.div_rem(&d);
    let lhs = eval_at_unity(&q_binomial(n as i64, k as i64), d);
    let rhs = eval_at_unity(
        &q_binomial(n0 as i64, k0 as i64).scale(&binomial(n1, k1)),
        d,
    );
    lhs == rhs
}
