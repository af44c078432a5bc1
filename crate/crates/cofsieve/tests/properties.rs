use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use cofsieve::base::{binomial, cyclotomic, eval_at_unity, q_binomial};
use cofsieve::crystal::{word_e, word_f};
use cofsieve::csp::orbits;
use cofsieve::fillings::{enumerate_cof, from_column_sets, macdonald_e};
use cofsieve::hall_littlewood::kostka_foulkes;
use cofsieve::llt::{llt_poly, llt_poly_enumerated, mininv, VStripTuple};
use cofsieve::rsk_charge::{charge_tableau, charge_word, rsk, rsk_inverse, schur_expansion_via_charge, BurgeWord};
use cofsieve::symfunc::Specialization;
use cofsieve::tableau::{kostka_number, ssyt_bounded};
use cofsieve::{Basis, Partition, QPoly, SkewShape, SymPoly};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Partition::from_unsorted(&v))
}

fn nonempty_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Partition::from_unsorted(&v))
}

/// A skew shape `outer/inner` with `inner` cut down cell-wise from `outer`.
fn skew(max_part: usize, max_len: usize) -> impl Strategy<Value = SkewShape> {
    (nonempty_partition(max_part, max_len), prop::collection::vec(0..=max_part, max_len)).prop_map(|(outer, cut)| {
        let mut inner: Vec<usize> = (0..outer.len()).map(|i| cut[i].min(outer.get(i))).collect();
        for i in 1..inner.len() {
            inner[i] = inner[i].min(inner[i - 1]);
        }
        SkewShape::new(outer, Partition::from_unsorted(&inner)).unwrap()
    })
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 0..=max_deg + 1).prop_map(|c| QPoly::from_i64s(&c))
}

/// A word whose content is a partition: `counts[v]` copies of `v + 1`, shuffled.
fn partition_content_word() -> impl Strategy<Value = Vec<u32>> {
    nonempty_partition(3, 4)
        .prop_flat_map(|p| {
            let letters: Vec<u32> = (0..p.len()).flat_map(|i| std::iter::repeat_n(i as u32 + 1, p.get(i))).collect();
            Just(letters).prop_shuffle()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(8, 8)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let weighted: usize = (1..=p.first()).map(|j| j * p.mult_count(j)).sum();
        prop_assert_eq!(weighted, p.size());
    }

    #[test]
    fn evaluation_at_unity_is_multiplicative(f in qpoly(30), g in qpoly(30), e in 1usize..=24) {
        let lhs = eval_at_unity(&(&f * &g), e);
        prop_assert_eq!(lhs, eval_at_unity(&f, e).mul(&eval_at_unity(&g, e)));
    }

    #[test]
    fn q_binomial_at_one(n in 0usize..=15, k in 0usize..=15) {
        prop_assert_eq!(q_binomial(n as i64, k as i64).eval_one(), binomial(n, k));
    }

    #[test]
    fn schur_round_trip(p in nonempty_partition(4, 4), c in qpoly(3), m in 1usize..=6) {
        prop_assume!(p.size() <= 8);
        let s = SymPoly::from_terms(m, Basis::Schur, [(p.clone(), c)]);
        prop_assert_eq!(s.to_monomial().to_schur(), s);
    }

    #[test]
    fn schur_at_ones_counts_tableaux(p in nonempty_partition(4, 4), m in 1usize..=4) {
        prop_assume!(p.size() <= 8);
        let count = SymPoly::schur(&p, m).principal_spec(Specialization::Ones).unwrap();
        prop_assert_eq!(count, QPoly::constant(ssyt_bounded(&p, m).len() as u64));
    }

    #[test]
    fn plethysm_is_multiplicative(a in 1usize..=3, b in 1usize..=3, k in 1usize..=3) {
        let m = 4;
        let (ea, eb) = (SymPoly::elementary(a, m), SymPoly::elementary(b, m));
        let lhs = (&ea * &eb).plethysm_pk(k);
        prop_assert_eq!(lhs, &ea.plethysm_pk(k) * &eb.plethysm_pk(k));
    }

    #[test]
    fn omega_is_an_involution(p in nonempty_partition(3, 3), c in qpoly(2)) {
        let s = SymPoly::from_terms(p.size(), Basis::Schur, [(p, c)]);
        prop_assert_eq!(s.omega_on_schur().omega_on_schur(), s);
    }

    #[test]
    fn column_sets_rebuild_a_cof_filling(outer in nonempty_partition(4, 4), m in 4usize..=5, seeds in prop::collection::vec(any::<u64>(), 4)) {
        let shape = SkewShape::straight(outer);
        // one random h-subset of [m] per column, from the seeds
        let sets: Vec<Vec<u32>> = shape.column_heights().iter().enumerate().map(|(j, &h)| {
            let mut pool: Vec<u32> = (1..=m as u32).collect();
            let mut s = seeds[j % seeds.len()].wrapping_add(j as u64);
            let mut pick = Vec::new();
            for _ in 0..h {
                let k = (s % pool.len() as u64) as usize;
                pick.push(pool.remove(k));
                s /= 7;
            }
            pick.sort_unstable();
            pick
        }).collect();
        let f = from_column_sets(&shape, &sets).unwrap();
        prop_assert!(f.is_cof());
        prop_assert_eq!(f.column_sets(), sets);
    }

    #[test]
    fn extension_keeps_maj(shape in skew(3, 3), pick in any::<prop::sample::Index>()) {
        let all: Vec<_> = enumerate_cof(&shape, 3).collect();
        prop_assume!(!all.is_empty());
        let f = pick.get(&all);
        let e = f.extended(50);
        prop_assert!(e.is_cof());
        prop_assert_eq!(e.maj(), f.maj());
    }

    #[test]
    fn rsk_round_trip_and_contents(pairs in prop::collection::btree_set((1u32..=6, 1u32..=6), 0..=12)) {
        let w = BurgeWord::from_biletters(pairs.into_iter().collect()).unwrap();
        let (p, q) = rsk(&w);
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), w.clone());
        let content = |letters: &[u32]| {
            let mut c = vec![0usize; letters.iter().copied().max().unwrap_or(0) as usize];
            for &v in letters { c[v as usize - 1] += 1; }
            c
        };
        prop_assert_eq!(p.content(), content(w.bottom()));
        prop_assert_eq!(q.content(), content(w.top()));
    }

    #[test]
    fn charge_is_constant_on_knuth_classes(w in partition_content_word()) {
        let positions: Vec<u32> = (1..=w.len() as u32).collect();
        let (p, _) = rsk(&BurgeWord::new(positions, w.clone()).unwrap());
        prop_assert_eq!(charge_word(&w).unwrap(), charge_tableau(&p).unwrap());
    }

    #[test]
    fn raising_and_lowering_are_inverse(w in prop::collection::vec(1u32..=3, 0..=10), i in 1u32..=2) {
        if let Some(e) = word_e(i, &w) {
            prop_assert_eq!(word_f(i, &e), Some(w.clone()));
        }
        if let Some(f) = word_f(i, &w) {
            prop_assert_eq!(word_e(i, &f), Some(w.clone()));
        }
    }

    #[test]
    fn orbits_partition_the_set(base in nonempty_partition(2, 2), n in 1usize..=3, m in 1usize..=3) {
        let shape = SkewShape::straight(base).scale(n);
        let all = orbits(&shape, n, m, None).unwrap();
        let total: usize = all.iter().map(Vec::len).sum();
        prop_assert_eq!(total, enumerate_cof(&shape, m).count());
        prop_assert!(all.iter().all(|o| n % o.len() == 0));
        let distinct: BTreeSet<String> = all.iter().flatten().map(|f| f.to_string()).collect();
        prop_assert_eq!(distinct.len(), total);
    }

    #[test]
    fn llt_is_symmetric_and_starts_at_mininv(strips in prop::collection::vec((0usize..=3, 0usize..=2), 1..=3), m in 1usize..=4) {
        let strips: Vec<(usize, usize)> = strips.into_iter().map(|(a, b)| (a.max(b), b.min(a))).collect();
        let t = VStripTuple::new(strips).unwrap();
        prop_assume!(t.size() <= 6);
        let poly = llt_poly(&t, m);
        prop_assert_eq!(llt_poly_enumerated(&t, m).unwrap(), poly.clone());
        if m >= t.size() && t.size() > 0 {
            let low = poly.terms().filter_map(|(_, c)| c.low_degree()).min().unwrap();
            prop_assert_eq!(low, mininv(&t));
        }
    }

    #[test]
    fn kostka_foulkes_at_one(p in nonempty_partition(4, 4), pick in any::<prop::sample::Index>()) {
        prop_assume!(p.size() <= 7);
        let all = Partition::all(p.size());
        let mu = pick.get(&all);
        let k = kostka_foulkes(&p, mu).unwrap();
        prop_assert_eq!(k.eval_one(), BigInt::from(kostka_number(&p, mu.parts())));
        prop_assert!(k.has_nonnegative_coeffs());
        prop_assert_eq!(kostka_foulkes(&p, &p).unwrap(), QPoly::one());
    }
}

#[test]
fn cyclotomic_products() {
    for e in 1..=40usize {
        let product = (1..=e).filter(|d| e % d == 0).fold(QPoly::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(product, &QPoly::monomial(1, e) - &QPoly::one(), "e={e}");
    }
}

#[test]
fn cof_count_is_a_product_of_binomials() {
    for size in 1..=8 {
        for p in Partition::all(size) {
            for m in 1..=6 {
                let shape = SkewShape::straight(p.clone());
                let expected: BigInt = p.conjugate().parts().iter().map(|&h| binomial(m, h)).product();
                let count = if m.pow(size as u32) > 300_000 { continue } else { enumerate_cof(&shape, m).count() };
                assert_eq!(BigInt::from(count), expected, "{p} m={m}");
            }
        }
    }
}

#[test]
fn e_at_q_one_is_elementary() {
    for size in 1..=6 {
        for lambda in Partition::all(size) {
            let m = size;
            let e = macdonald_e(&SkewShape::straight(lambda.conjugate()), m).map_coeffs(|c| QPoly::constant(c.eval_one()));
            let product = lambda.parts().iter().fold(SymPoly::basis_element(&Partition::empty(), m, Basis::Monomial), |acc, &j| &acc * &SymPoly::elementary(j, m));
            assert_eq!(e, product.to_monomial(), "lambda={lambda}");
        }
    }
}

#[test]
fn charge_expansion_matches_fillings() {
    for size in 1..=7 {
        for outer in Partition::all(size) {
            for inner in outer.subpartitions() {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                if shape.size() == 0 || shape.size() > 5 {
                    continue;
                }
                assert_eq!(macdonald_e(&shape, shape.size()).to_schur(), schur_expansion_via_charge(&shape), "{shape}");
            }
        }
    }
}
