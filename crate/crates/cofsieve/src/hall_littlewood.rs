//! Kostka-Foulkes polynomials, transformed Hall-Littlewood polynomials and their relation to
//! `E_lambda(x; q, 0)`, including factorizations at roots of unity.

use crate::base::cyclotomic::eval_at_unity;
use crate::base::{Composition, Partition, QPoly};
use crate::error::{Error, Result};
use crate::fillings::macdonald_e;
use crate::rsk_charge::charge_tableau;
use crate::symfunc::{Basis, SymPoly};
use crate::tableau::{kostka_number, ssyt_with_content};

/// `K_{lambda mu}(q)`: the charge generating function of `SSYT(lambda, mu)`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(ssyt_with_content(lambda, mu.parts())
        .iter()
        .map(|t| QPoly::monomial(1, charge_tableau(t).expect("partition content")))
        .sum())
}

/// `K_{lambda nu}(q)` for a weak composition `nu`, through its sorting.
pub fn kostka_foulkes_content(lambda: &Partition, nu: &Composition) -> Result<QPoly> {
    kostka_foulkes(lambda, &nu.sorted())
}

/// `Q'_mu = sum_lambda K_{lambda mu}(q) s_lambda` in `m` variables.
pub fn transformed_hl(mu: &Partition, m: usize) -> SymPoly {
    let terms = Partition::all(mu.size())
        .into_iter()
        .filter(|lambda| lambda.len() <= m)
        .map(|lambda| {
            let k = kostka_foulkes(&lambda, mu).expect("same size");
            (lambda, k)
        });
    SymPoly::from_terms(m, Basis::Schur, terms)
}

/// `omega Q'_{lambda'}` in `m` variables; omega is applied before truncating.
pub fn omega_hl(lambda: &Partition, m: usize) -> SymPoly {
    transformed_hl(&lambda.conjugate(), lambda.size().max(1)).omega_on_schur().with_nvars(m)
}

/// `E_lambda(x; q, 0) = omega Q'_{lambda'}(x; q)`.
pub fn verify_e_as_hl(lambda: &Partition, m: usize) -> bool {
    macdonald_e(&lambda.clone().into(), m).to_schur() == omega_hl(lambda, m)
}

/// `sum_mu K_{mu nu}(1) K_{mu' lambda'}(q)`.
pub fn refined_coefficient(lambda: &Partition, nu: &Composition) -> Result<QPoly> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    let lambda_c = lambda.conjugate();
    let mut total = QPoly::zero();
    for mu in Partition::all(lambda.size()) {
        let k = kostka_number(&mu, nu.parts());
        if k > 0 {
            total += &kostka_foulkes(&mu.conjugate(), &lambda_c)?.scale(&k.into());
        }
    }
    Ok(total)
}

/// The coefficient of `m_nu` in `E_lambda` against [`refined_coefficient`].
pub fn refined_coefficient_check(lambda: &Partition, nu: &Composition) -> Result<bool> {
    let direct = macdonald_e(&lambda.clone().into(), nu.len().max(1)).coeff_monomial(nu);
    Ok(direct == refined_coefficient(lambda, nu)?)
}

/// Monomial expansion with every coefficient reduced modulo `Phi_d`.
fn reduce(f: &SymPoly, d: usize) -> SymPoly {
    f.to_monomial().map_coeffs(|c| eval_at_unity(c, d).residue().clone())
}

fn product_mod(a: &SymPoly, b: &SymPoly, d: usize) -> SymPoly {
    reduce(&(a * b), d)
}

/// `Q'_lambda(x; xi_d) = Q'_{tilde lambda}(x; xi_d) prod_j Q'_{(j^d)}(x; xi_d)^{m'_j}` where
/// `m_j(lambda) = d m'_j + r_j` and `tilde lambda` has `r_j` parts equal to `j`.
pub fn hl_root_factorization_check(lambda: &Partition, d: usize, m: usize) -> bool {
    assert!(d >= 1);
    let lhs = reduce(&transformed_hl(lambda, m), d);
    let mut rest = Vec::new();
    let mut rhs = SymPoly::basis_element(&Partition::empty(), m, Basis::Monomial);
    for j in lambda.parts().iter().copied().collect::<std::collections::BTreeSet<_>>() {
        let mult = lambda.mult_count(j);
        rest.extend(std::iter::repeat_n(j, mult % d));
        let block = transformed_hl(&Partition::new(vec![j; d]).expect("rectangle"), m);
        for _ in 0..mult / d {
            rhs = product_mod(&rhs, &block, d);
        }
    }
    let tilde = Partition::from_unsorted(&rest);
    rhs = product_mod(&rhs, &transformed_hl(&tilde, m), d);
    lhs == rhs
}

/// `Q'_{(k^n)}(x; xi_n) = (-1)^{k(n-1)} p_n[h_k]`.
pub fn hl_rect_check(k: usize, n: usize, m: usize) -> bool {
    let lhs = reduce(&transformed_hl(&Partition::new(vec![k; n]).expect("rectangle"), m), n);
    let sign = if k * (n - 1) % 2 == 0 { 1 } else { -1 };
    let rhs = SymPoly::complete(k, m).plethysm_pk(n).scale(&QPoly::constant(sign));
    lhs == reduce(&rhs, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(kostka_foulkes(&part(&[4, 2, 1]), &part(&[3, 2, 1, 1])).unwrap().to_string(), "q + 2*q^2 + q^3");
        assert_eq!(kostka_foulkes(&part(&[3, 1]), &part(&[3, 1])).unwrap(), QPoly::one());
        assert_eq!(kostka_foulkes(&part(&[2]), &part(&[1, 1])).unwrap(), QPoly::q());
        assert!(matches!(kostka_foulkes(&part(&[2]), &part(&[1])), Err(Error::SizeMismatch(2, 1))));
    }

    #[test]
    fn specialize_to_kostka_numbers() {
        for n in 1..=6 {
            for lambda in Partition::all(n) {
                for mu in Partition::all(n) {
                    let k = kostka_foulkes(&lambda, &mu).unwrap();
                    assert_eq!(k.eval_one(), kostka_number(&lambda, mu.parts()).into());
                    assert!(k.has_nonnegative_coeffs());
                }
            }
        }
    }

    #[test]
    fn small_hl() {
        assert_eq!(transformed_hl(&part(&[1, 1]), 3).to_string(), "q*s[2] + s[1,1]");
        assert_eq!(transformed_hl(&part(&[3]), 3).to_string(), "s[3]");
        assert_eq!(omega_hl(&part(&[2, 1]), 3).to_string(), "s[2,1] + q*s[1,1,1]");
    }

    #[test]
    fn e_as_hl() {
        for n in 1..=4 {
            for lambda in Partition::all(n) {
                assert!(verify_e_as_hl(&lambda, n), "{lambda}");
            }
        }
    }

    #[test]
    fn refined() {
        let c = refined_coefficient(&part(&[8, 4]), &Composition::new(vec![8, 2, 2])).unwrap();
        let direct = macdonald_e(&part(&[8, 4]).into(), 3).coeff_monomial(&Composition::new(vec![8, 2, 2]));
        assert_eq!(c, direct);
        assert_eq!(c.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(refined_coefficient(&part(&[3]), &Composition::new(vec![3])).unwrap(), QPoly::one());
        for nu in Composition::all(3, 3) {
            assert!(refined_coefficient_check(&part(&[2, 1]), &nu).unwrap());
        }
    }

    #[test]
    fn roots_of_unity() {
        assert!(hl_rect_check(1, 2, 3));
        assert!(hl_rect_check(2, 2, 3));
        assert!(hl_root_factorization_check(&part(&[2, 2, 1]), 2, 4));
        assert!(hl_root_factorization_check(&part(&[2, 1]), 1, 3));
    }
}
