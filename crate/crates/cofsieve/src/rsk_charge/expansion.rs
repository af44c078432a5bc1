use itertools::Itertools;
use num_bigint::BigInt;

use super::charge::postfix_charge;
use crate::base::qanalog::q_factorial;
use crate::base::{Partition, QPoly};
use crate::fillings::{macdonald_e, SkewShape};
use crate::symfunc::{Basis, SymPoly};
use crate::tableau::{kostka_number, ssyt_with_content};

/// `K^nu_{shape}(q)`: the charge generating function (with postfix `inner'`) over semistandard
/// tableaux of shape `nu` whose content is the column heights of `shape`.
pub fn kq_coefficient(shape: &SkewShape, nu: &Partition) -> QPoly {
    let alpha = shape.column_heights();
    let postfix = shape.inner().conjugate();
    ssyt_with_content(nu, &alpha)
        .iter()
        .map(|t| QPoly::monomial(1, postfix_charge(&postfix, &t.reading_word()).expect("content plus postfix is the outer conjugate")))
        .sum()
}

/// `E_{shape}(x; q, 0) = sum_nu K^nu_{shape}(q) s_{nu'}`, in `|shape|` variables.
pub fn schur_expansion_via_charge(shape: &SkewShape) -> SymPoly {
    let n = shape.size();
    SymPoly::from_terms(n, Basis::Schur, Partition::all(n).into_iter().map(|nu| (nu.conjugate(), kq_coefficient(shape, &nu))))
}

/// One row of [`lr_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrRow {
    pub nu: Partition,
    pub coefficient: QPoly,
    /// `c^{outer}_{inner, nu'}` from multiplying Schur polynomials.
    pub lr_coefficient: BigInt,
    /// `K_{nu, alpha}` with `alpha` the column heights.
    pub kostka: u64,
}

impl LrRow {
    pub fn at_zero_ok(&self) -> bool {
        self.coefficient.coeff(0) == self.lr_coefficient
    }

    pub fn at_one_ok(&self) -> bool {
        self.coefficient.eval_one() == BigInt::from(self.kostka)
    }
}

/// For every `nu`, the constant term of `K^nu` against a Littlewood-Richardson coefficient and
/// its value at `q = 1` against a Kostka number.
pub fn lr_checks(shape: &SkewShape) -> Vec<LrRow> {
    let n = shape.size();
    let vars = shape.outer().size().max(1);
    let alpha = shape.column_heights();
    let s_inner = SymPoly::basis_element(shape.inner(), vars, Basis::Schur);
    Partition::all(n)
        .into_iter()
        .map(|nu| {
            let s_nu = SymPoly::basis_element(&nu.conjugate(), vars, Basis::Schur);
            let product = (&s_inner * &s_nu).to_schur();
            LrRow {
                coefficient: kq_coefficient(shape, &nu),
                lr_coefficient: product.coefficient(shape.outer()).coeff(0),
                kostka: kostka_number(&nu, &alpha),
                nu,
            }
        })
        .collect()
}

/// `E_lambda * E_mu` as the single skew polynomial on `(lambda + c, mu) / c^r` with
/// `c = mu_1` and `r = l(lambda)`.
pub fn product_check(lambda: &Partition, mu: &Partition) -> bool {
    let m = (lambda.size() + mu.size()).max(1);
    let c = mu.first();
    let r = lambda.len();
    let outer: Vec<usize> = lambda.parts().iter().map(|p| p + c).chain(mu.parts().iter().copied()).collect();
    let shape = SkewShape::new(Partition::new(outer).expect("stacked shape"), Partition::rectangle(c, r)).expect("rectangle inside");
    let lhs = (&macdonald_e(&lambda.clone().into(), m) * &macdonald_e(&mu.clone().into(), m)).to_schur();
    lhs == schur_expansion_via_charge(&shape).with_nvars(m)
}

/// Postfix charge with `mu'` is Mahonian in the refined sense: summing `q^{charge_{mu'}}` over
/// `S_n` gives `n! prod_i [lambda_i - mu_i]_q! / (lambda_i - mu_i)!` where `lambda'` adds one
/// to each of the first `n` parts of `mu'`.
pub fn mahonian_check(mu: &Partition, n: usize) -> bool {
    let mu_c = mu.conjugate();
    let lhs: QPoly = (1..=n as u32)
        .permutations(n)
        .map(|sigma| QPoly::monomial(1, postfix_charge(&mu_c, &sigma).expect("content is a partition")))
        .sum();
    let lambda_c: Vec<usize> = (0..n.max(mu_c.len())).map(|i| mu_c.get(i) + usize::from(i < n)).collect();
    let lambda = Partition::new(lambda_c).expect("padded conjugate plus a column").conjugate();
    let gaps: Vec<usize> = (0..lambda.len()).map(|i| lambda.get(i) - mu.get(i)).collect();
    let fact = |k: usize| (1..=k).map(BigInt::from).product::<BigInt>();
    let scalar = gaps.iter().fold(fact(n), |acc, &a| acc / fact(a));
    let rhs = gaps.iter().fold(QPoly::constant(scalar), |acc, &a| &acc * &q_factorial(a));
    lhs == rhs
}
