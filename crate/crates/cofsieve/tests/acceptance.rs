//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_DISCREPANCIES` print FAIL like any other, but do not turn the exit
//! status nonzero; if one of them starts passing the suite fails so the list stays honest.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use cofsieve::base::{eval_at_unity, q_lucas_check};
use cofsieve::crystal::{component_check, rsk_equivariance_check, s_involution};
use cofsieve::csp::{
    fixed_point_counts, macdonald_csp_suite, matrix_equivariance_check, orbits, refined_csp_family, sigma_csp_suite, unity_exponents,
    unity_formula, Engine, Permutation, Verdict,
};
use cofsieve::fillings::{enumerate_cof, enumerate_cof_content, macdonald_e};
use cofsieve::hall_littlewood::{hl_rect_check, hl_root_factorization_check, kostka_foulkes, refined_coefficient, refined_coefficient_check, verify_e_as_hl};
use cofsieve::llt::{inv_count, llt_poly, mininv, strips_from_skew, verify_llt_theorem, VStripTuple};
use cofsieve::rsk_charge::{
    charge_perm, charge_tableau, charge_word, kq_coefficient, mahonian_check, postfix_charge, rsk, rsk_inverse, rsk_steps, schur_expansion_via_charge,
    standard_subwords, BurgeWord,
};
use cofsieve::symfunc::pleth_omega_check;
use cofsieve::tableau::ssyt_with_content;
use cofsieve::{Basis, Composition, Filling, Partition, QPoly, SkewShape, SymPoly};

type Outcome = Result<String, String>;

/// Criterion 3 prints `f(q) = 1+q+q^2+q^3+q^4+q^6` for `[m_{822}] E_{84}`; the fillings give
/// `1+q+2q^2+q^3+q^4`, which the Hall-Littlewood route confirms independently.
const KNOWN_DISCREPANCIES: &[u8] = &[3];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// `"3221"` -> (3,2,2,1); single-digit parts only.
fn digits(s: &str) -> Partition {
    part(&s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect::<Vec<_>>())
}

fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

fn qp(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn schur_terms(nvars: usize, terms: &[(&str, &str)]) -> SymPoly {
    SymPoly::from_terms(nvars, Basis::Schur, terms.iter().map(|(p, c)| (digits(p), qp(c))))
}

fn partitions_up_to(k: usize) -> Vec<Partition> {
    (1..=k).flat_map(Partition::all).collect()
}

fn all_skew(max_outer: usize, cells: std::ops::RangeInclusive<usize>) -> Vec<SkewShape> {
    (1..=max_outer)
        .flat_map(Partition::all)
        .flat_map(|outer| {
            outer
                .subpartitions()
                .into_iter()
                .filter(|inner| cells.contains(&(outer.size() - inner.size())))
                .map(|inner| SkewShape::new(outer.clone(), inner).unwrap())
                .collect::<Vec<_>>()
        })
        .collect()
}

fn c1_specialized_fillings() -> Outcome {
    let sh = shape("2,1");
    let e = macdonald_e(&sh, 3);
    let expected = SymPoly::from_terms(3, Basis::Monomial, [(digits("111"), qp("2+q")), (digits("21"), QPoly::one())]);
    ensure(e == expected, || format!("E_21 = {e}"))?;
    // the figure: filling, monomial exponents, power of q
    let figure = [
        ("21/1", [2, 1, 0], 0),
        ("22/1", [1, 2, 0], 0),
        ("23/1", [1, 1, 1], 1),
        ("31/1", [2, 0, 1], 0),
        ("32/1", [1, 1, 1], 0),
        ("33/1", [1, 0, 2], 0),
        ("31/2", [1, 1, 1], 0),
        ("32/2", [0, 2, 1], 0),
        ("33/2", [0, 1, 2], 0),
    ];
    let all: Vec<Filling> = enumerate_cof(&sh, 3).collect();
    ensure(all.len() == 9, || format!("{} fillings", all.len()))?;
    for (text, weight, maj) in figure {
        let f = all.iter().find(|f| f.to_string() == text).ok_or_else(|| format!("{text} missing"))?;
        ensure(f.weight_padded(3).parts() == weight && f.maj() == maj, || format!("{text}: weight {:?}, maj {}", f.weight_padded(3), f.maj()))?;
    }
    Ok(format!("{e}; 9 fillings"))
}

fn c2_descents() -> Outcome {
    let f: Filling = "765427/44475/332/257/1".parse().map_err(|e| format!("{e}"))?;
    ensure(f.is_cof(), || "not coinversion-free".into())?;
    let des = f.descents();
    ensure(des == [(0, 5), (1, 3), (3, 1), (3, 2)], || format!("descents {des:?}"))?;
    let contributions: Vec<usize> = des.iter().map(|&(i, j)| f.shape().outer().get(i) - j).collect();
    ensure(contributions == [1, 2, 2, 1], || format!("leg+1 {contributions:?}"))?;
    ensure(f.maj() == 6, || format!("maj {}", f.maj()))?;
    ensure(f.weight().parts() == [1, 3, 2, 4, 3, 1, 4], || format!("weight {:?}", f.weight()))?;
    Ok("maj 1+2+2+1 = 6, weight (1,3,2,4,3,1,4)".into())
}

fn c3_orbit_example() -> Outcome {
    let sh = shape("8,4");
    let nu = Composition::new(vec![8, 2, 2]);
    let elements: BTreeSet<String> = enumerate_cof_content(&sh, &nu).map(|f| f.to_string()).collect();
    let figure: BTreeSet<String> =
        ["33221111/1111", "21111111/1332", "22111111/1133", "32211111/1113", "32111111/1132", "21111111/1323"].map(String::from).into();
    ensure(elements == figure, || format!("elements {elements:?}"))?;
    let mut sizes: Vec<usize> = orbits(&sh, 4, 3, Some(&nu)).map_err(|e| e.to_string())?.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    ensure(sizes == [2, 4], || format!("orbit sizes {sizes:?}"))?;
    let fixed = fixed_point_counts(&sh, 4, 3, Some(&nu), Engine::Exhaustive).map_err(|e| e.to_string())?;
    ensure(fixed == [0, 2, 0, 6].map(BigInt::from), || format!("fixed {fixed:?}"))?;

    let f = macdonald_e(&sh, 3).coeff_monomial(&nu);
    let values = |p: &QPoly| [eval_at_unity(p, 4).as_integer(), eval_at_unity(p, 2).as_integer(), Some(p.eval_one())];
    let want = [0, 2, 6].map(|v| Some(BigInt::from(v)));
    ensure(values(&f) == want, || format!("f(xi), f(xi^2), f(1) = {:?}", values(&f)))?;
    let printed = qp("1+q+q^2+q^3+q^4+q^6");
    let via_hl = refined_coefficient(&part(&[8, 4]), &nu).map_err(|e| e.to_string())?;
    ensure(f == printed, || {
        format!(
            "f(q) = {f} from the fillings (Hall-Littlewood route: {via_hl}), printed {printed}; \
             6 elements, orbits {{4,2}}, fixed (0,2,0,6), f(xi)=0, f(xi^2)=2, f(1)=6 all hold"
        )
    })?;
    Ok(format!("f(q) = {f}"))
}

fn c4_main_csp() -> Outcome {
    let cases: Vec<(Partition, usize, usize)> = partitions_up_to(4)
        .into_iter()
        .flat_map(|l| (1..=4).flat_map(move |n| (1..=4).map({
            let l = l.clone();
            move |m| (l.clone(), n, m)
        })))
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(l, n, m)| match macdonald_csp_suite(&l.clone().into(), *n, *m) {
            Ok(r) if r.passed() && r.lyndon.len() == (1..=*n).filter(|d| n % d == 0).count() => None,
            Ok(r) => Some(format!("lambda={l} n={n} m={m}: {r}")),
            Err(e) => Some(format!("lambda={l} n={n} m={m}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} (lambda, n, m) triples, Lyndon checks for every d | n", cases.len()))
}

fn c5_refined_csp() -> Outcome {
    let cases: Vec<(Partition, usize)> = partitions_up_to(4).into_iter().flat_map(|l| (1..=4).map(move |n| (l.clone(), n))).collect();
    let results: Vec<Result<usize, String>> = cases
        .par_iter()
        .map(|(l, n)| {
            let reports = refined_csp_family(&l.clone().into(), *n, 4).map_err(|e| format!("lambda={l} n={n}: {e}"))?;
            match reports.iter().find(|r| !r.passed()) {
                None => Ok(reports.len()),
                Some(r) => Err(format!("lambda={l} n={n}: {r}")),
            }
        })
        .collect();
    let mut contents = 0;
    for r in results {
        contents += r?;
    }
    let eq = matrix_equivariance_check(&shape("8,4"), 4, &Composition::new(vec![8, 2, 2])).map_err(|e| e.to_string())?;
    ensure(eq == Ok(6), || format!("matrix bijection not equivariant: {eq:?}"))?;
    Ok(format!("{contents} (lambda, n, content) cases; matrix bijection commutes with phi on all 6 fillings"))
}

fn c6_skew_csp() -> Outcome {
    let cases: Vec<(SkewShape, usize, usize)> = all_skew(4, 1..=4)
        .into_iter()
        .flat_map(|s| (1..=3).flat_map(move |n| (1..=4).map({
            let s = s.clone();
            move |m| (s.clone(), n, m)
        })))
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(s, n, m)| match macdonald_csp_suite(s, *n, *m) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("{s} n={n} m={m}: {r}")),
            Err(e) => Some(format!("{s} n={n} m={m}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} (shape, n, m) triples", cases.len()))
}

fn c7_schur_table() -> Outcome {
    let rows: [(&str, &[(&str, &str)]); 11] = [
        ("1", &[("1", "1")]),
        ("2", &[("2", "1"), ("11", "q")]),
        ("1,1", &[("11", "1")]),
        ("2,1/1", &[("2", "1"), ("11", "1")]),
        ("3", &[("3", "1"), ("21", "q+q^2"), ("111", "q^3")]),
        ("2,1", &[("21", "1"), ("111", "q")]),
        ("1,1,1", &[("111", "1")]),
        ("2,2/1", &[("21", "1"), ("111", "q")]),
        ("3,1/1", &[("3", "1"), ("21", "1+q"), ("111", "q")]),
        ("2,1,1/1", &[("21", "1"), ("111", "1")]),
        ("3,2,1/2,1", &[("3", "1"), ("21", "2"), ("111", "1")]),
    ];
    for (s, terms) in rows {
        let sh = shape(s);
        let expected = schur_terms(sh.size(), terms);
        let direct = macdonald_e(&sh, sh.size()).to_schur();
        let charge = schur_expansion_via_charge(&sh);
        ensure(direct == expected, || format!("{s}: fillings give {direct}"))?;
        ensure(charge == expected, || format!("{s}: charge gives {charge}"))?;
    }
    Ok("11 rows, fillings and charge agree".into())
}

fn c8_maj_is_postfix_charge() -> Outcome {
    let shapes = all_skew(6, 1..=6);
    let counts: Vec<Result<usize, String>> = shapes
        .par_iter()
        .map(|s| {
            let postfix = s.inner().conjugate();
            let mut n = 0;
            for f in enumerate_cof(s, 4) {
                let c = postfix_charge(&postfix, BurgeWord::from_filling(&f).bottom()).map_err(|e| format!("{f}: {e}"))?;
                if c != f.maj() {
                    return Err(format!("{f}: maj {} but charge {c}", f.maj()));
                }
                n += 1;
            }
            Ok(n)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c?;
    }
    Ok(format!("{} shapes, {total} fillings with entries <= 4", shapes.len()))
}

fn letters(s: &str) -> Vec<u32> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

fn c9_appendix() -> Outcome {
    let c = charge_perm(&letters("198423765")).map_err(|e| e.to_string())?;
    ensure(c == 20, || format!("charge(198423765) = {c}"))?;
    let w = letters("21123543411223");
    let subs = standard_subwords(&w).map_err(|e| e.to_string())?;
    ensure(subs == ["25413", "2431", "132", "12"].map(letters), || format!("subwords {subs:?}"))?;
    let charges: Vec<usize> = subs.iter().map(|s| charge_perm(s).unwrap()).collect();
    ensure(charges == [3, 2, 2, 1], || format!("subword charges {charges:?}"))?;
    ensure(charge_word(&w) == Ok(8), || "total charge differs from 8".into())?;

    let k = kostka_foulkes(&digits("421"), &digits("3211")).map_err(|e| e.to_string())?;
    ensure(k == qp("q+2*q^2+q^3"), || format!("K = {k}"))?;
    let tableaux = ssyt_with_content(&digits("421"), &[3, 2, 1, 1]);
    let found: BTreeMap<String, usize> = tableaux.iter().map(|t| (t.to_string(), charge_tableau(t).unwrap())).collect();
    let displayed = BTreeMap::from([("1114/22/3", 1), ("1113/22/4", 2), ("1112/24/3", 2), ("1112/23/4", 3)].map(|(t, c)| (t.to_string(), c)));
    ensure(found == displayed, || format!("tableaux and charges {found:?}"))?;
    let pc = postfix_charge(&digits("21"), &letters("12231233")).map_err(|e| e.to_string())?;
    ensure(pc == 2, || format!("charge_21(12231233) = {pc}"))?;
    Ok("charge 20; subwords 3+2+2+1 = 8; K = q+2q^2+q^3 from charges 1,2,2,3; postfix charge 2".into())
}

fn c10_rsk() -> Outcome {
    let w: BurgeWord = "11224555\n41325431".parse().map_err(|e| format!("{e}"))?;
    let steps = rsk_steps(&w);
    let ps: Vec<String> = steps.iter().map(|(p, _)| p.to_string()).collect();
    let qs: Vec<String> = steps.iter().map(|(_, q)| q.to_string()).collect();
    ensure(ps == ["4", "1/4", "13/4", "12/3/4", "125/3/4", "124/35/4", "123/34/45", "113/24/35/4"], || format!("P steps {ps:?}"))?;
    ensure(qs == ["1", "1/1", "12/1", "12/1/2", "124/1/2", "124/15/2", "124/15/25", "124/15/25/5"], || format!("Q steps {qs:?}"))?;
    let (p, q) = rsk(&w);
    ensure(rsk_inverse(&p, &q).as_ref() == Ok(&w), || "table word does not round-trip".into())?;

    let f: Filling = "..213/331/22/14".parse().map_err(|e| format!("{e}"))?;
    let b = BurgeWord::from_filling(&f);
    ensure(b.to_string() == "1112223334\n4313215212", || format!("biword {b}"))?;
    let (p, q) = rsk(&b);
    ensure(p.to_string() == "1112/225/33/4" && q.to_string() == "1234/123/13/2", || format!("P = {p}, Q = {q}"))?;
    ensure(rsk_inverse(&p, &q).as_ref() == Ok(&b), || "biword does not round-trip".into())?;
    Ok("8 insertion steps; biword P = 1112/225/33/4, Q = 1234/123/13/2".into())
}

fn c11_crystal() -> Outcome {
    let shapes: Vec<SkewShape> = all_skew(8, 1..=5);
    let results: Vec<(usize, Vec<String>)> = shapes
        .par_iter()
        .map(|s| {
            let r = rsk_equivariance_check(s, 4);
            (r.checked, r.violations.into_iter().map(|v| format!("{s}: {v}")).collect())
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).take(5).collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let comp = component_check(&shape("3,2/1"), 3).map_err(|e| e.to_string())?;
    ensure(comp.passed(), || comp.violations.join("; "))?;
    Ok(format!("{} shapes, {checked} raising-operator applications; {} components on (3,2)/(1)", shapes.len(), comp.checked))
}

fn c12_involutions() -> Outcome {
    let mut checked = 0;
    for s in ["2,1", "2,2"] {
        for f in enumerate_cof(&shape(s), 3) {
            let s1 = |g: &Filling| s_involution(1, g).map_err(|e| e.to_string());
            let s2 = |g: &Filling| s_involution(2, g).map_err(|e| e.to_string());
            for (i, g) in [(1usize, s1(&f)?), (2, s2(&f)?)] {
                let back = s_involution(i as u32, &g).map_err(|e| e.to_string())?;
                ensure(back == f, || format!("s_{i} is not an involution on {f}"))?;
                let (w, v) = (f.weight_padded(3), g.weight_padded(3));
                let fixed = if i == 1 { 2 } else { 0 };
                ensure(w.get(i - 1) == v.get(i) && w.get(i) == v.get(i - 1) && w.get(fixed) == v.get(fixed), || format!("s_{i}({f}) = {g} weight"))?;
                ensure(g.is_cof() && g.maj() == f.maj(), || format!("s_{i}({f}) = {g}"))?;
            }
            let left = s1(&s2(&s1(&f)?)?)?;
            let right = s2(&s1(&s2(&f)?)?)?;
            ensure(left == right, || format!("braid relation fails on {f}: {left} vs {right}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} fillings"))
}

/// Skew shapes with at most `max_cells` cells, no column longer than 2, no empty row and first
/// row at most `max_cells`, built row by row.
fn two_row_column_shapes(max_cells: usize) -> Vec<SkewShape> {
    fn grow(outer: &mut Vec<usize>, inner: &mut Vec<usize>, cells: usize, max_cells: usize, out: &mut Vec<SkewShape>) {
        if cells > 0 {
            out.push(SkewShape::new(Partition::new(outer.clone()).unwrap(), Partition::new(inner.clone()).unwrap()).unwrap());
        }
        let r = outer.len();
        let top = outer.last().copied().unwrap_or(max_cells);
        for a in 1..=top {
            let inner_cap = inner.last().copied().unwrap_or(max_cells).min(a - 1);
            // rows r-2 and r may not share a column
            if r >= 2 && a > inner[r - 2] {
                continue;
            }
            for b in 0..=inner_cap {
                if cells + a - b > max_cells {
                    continue;
                }
                outer.push(a);
                inner.push(b);
                grow(outer, inner, cells + a - b, max_cells, out);
                outer.pop();
                inner.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), &mut Vec::new(), 0, max_cells, &mut out);
    out
}

fn c13_llt() -> Outcome {
    let t: VStripTuple = "3/0,3/1,2/1,3/0".parse().map_err(|e| format!("{e}"))?;
    let inv = inv_count(&t, &[vec![1, 2, 4], vec![3, 6], vec![5], vec![2, 4, 5]]).map_err(|e| e.to_string())?;
    ensure(inv == 8, || format!("example filling has {inv} inversions"))?;
    let low = mininv(&t);
    ensure(low == 7, || format!("mininv {low}"))?;
    let printed = schur_terms(
        9,
        &[
            ("333", "q^8"),
            ("432", "q^7"),
            ("3222", "q^9+q^10+q^11"),
            ("3321", "q^8+2*q^9+q^10"),
            ("4221", "q^8+q^9"),
            ("4311", "q^8"),
            ("22221", "q^10+q^11+q^12+q^13"),
            ("32211", "q^9+3*q^10+2*q^11+q^12"),
            ("33111", "q^9+q^10+q^11"),
            ("42111", "q^9+q^10"),
            ("222111", "2*q^11+2*q^12+q^13+q^14"),
            ("321111", "q^10+2*q^11+2*q^12+q^13"),
            ("411111", "q^11"),
            ("2211111", "q^12+2*q^13+q^14+q^15"),
            ("3111111", "q^12+q^13+q^14"),
            ("21111111", "q^14+q^15+q^16"),
            ("111111111", "q^17"),
        ],
    );
    let llt = llt_poly(&t, 9).to_schur();
    ensure(llt == printed, || format!("LLT = {llt}"))?;

    let sh = shape("4,4,3,1/3,1");
    let (strips, alpha) = strips_from_skew(&sh).map_err(|e| e.to_string())?;
    ensure(strips.to_string() == "4/3,4/1,3/0,1/0" && alpha.parts() == [1, 3, 3, 1], || format!("strips {strips}, alpha {alpha:?}"))?;
    let report = verify_llt_theorem(&sh, 8).map_err(|e| e.to_string())?;
    let printed_e = schur_terms(
        8,
        &[
            ("332", "1"),
            ("422", "1"),
            ("2222", "1+q^2"),
            ("3221", "2+2*q"),
            ("3311", "1"),
            ("4211", "1"),
            ("22211", "3*q+q^2"),
            ("32111", "4*q"),
            ("41111", "q"),
            ("221111", "4*q^2"),
            ("311111", "3*q^2"),
            ("2111111", "3*q^3"),
            ("11111111", "q^4"),
        ],
    );
    ensure(report.e_schur == printed_e, || format!("E = {}", report.e_schur))?;
    ensure(report.mininv == 1 && report.passed(), || format!("mininv {}, theorem holds: {}", report.mininv, report.passed()))?;
    let conj = sh.conjugate();
    let tableaux: BTreeMap<String, usize> = ssyt_with_content(&digits("431"), alpha.parts())
        .iter()
        .map(|t| (t.to_string(), postfix_charge(&digits("31"), &t.reading_word()).unwrap()))
        .collect();
    let displayed = BTreeMap::from([("1222/333/4", 1), ("1223/233/4", 0), ("1223/234/3", 0), ("1224/233/3", 1)].map(|(t, c)| (t.to_string(), c)));
    ensure(tableaux == displayed, || format!("tableaux for s_3221: {tableaux:?}"))?;
    ensure(kq_coefficient(&conj, &digits("431")) == qp("2+2*q"), || "coefficient of s_3221 via charge".into())?;

    let shapes = two_row_column_shapes(7);
    let bad: Vec<String> = shapes
        .par_iter()
        .filter_map(|s| match verify_llt_theorem(s, s.size()) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("{s}: e {} charge {}", r.e_matches, r.charge_matches)),
            Err(e) => Some(format!("{s}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("mininv 7 with 17 printed Schur terms; 4431/31 gives q^-1 LLT; sweep over {} shapes", shapes.len()))
}

fn c14_hall_littlewood() -> Outcome {
    let bad: Vec<String> = partitions_up_to(6).par_iter().filter(|l| !verify_e_as_hl(l, l.size())).map(|l| l.to_string()).collect();
    ensure(bad.is_empty(), || format!("E != omega Q' for {}", bad.join(" ")))?;
    let cases: Vec<(Partition, Composition)> =
        partitions_up_to(5).into_iter().flat_map(|l| Composition::all(l.size(), l.size()).into_iter().map(move |nu| (l.clone(), nu))).collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter(|(l, nu)| refined_coefficient_check(l, nu) != Ok(true))
        .map(|(l, nu)| format!("{l} {nu:?}"))
        .collect();
    ensure(bad.is_empty(), || format!("coefficient formula fails for {}", bad.join(", ")))?;
    Ok(format!("E = omega Q' for {} partitions; coefficient formula for {} (lambda, nu) pairs", partitions_up_to(6).len(), cases.len()))
}

fn c15_unity_formula() -> Outcome {
    let mut checked = 0;
    for mu in partitions_up_to(3) {
        for n in 1..=4 {
            for m in 1..=4 {
                let fixed = fixed_point_counts(&mu.scale(n).into(), n, m, None, Engine::Auto).map_err(|e| e.to_string())?;
                for d in (1..=n).filter(|d| n % d == 0) {
                    let formula = unity_formula(&mu, n, d, m);
                    ensure(formula == fixed[d - 1], || format!("mu={mu} n={n} d={d} m={m}: formula {formula}, fixed {}", fixed[d - 1]))?;
                    checked += 1;
                }
            }
        }
    }
    let exps = unity_exponents(&digits("885322"), 4);
    let displayed = BTreeMap::from([(2, 3 * 4), (3, 2 * 4), (4, 4), (6, 2 * 4)]);
    ensure(exps == displayed, || format!("exponents {exps:?}"))?;
    Ok(format!("{checked} (mu, n, d, m) cases; (C(m,2)^3 C(m,3)^2 C(m,4) C(m,6)^2)^4"))
}

fn c16_mahonian() -> Outcome {
    let mut mus = vec![Partition::empty()];
    mus.extend(partitions_up_to(4));
    let mut checked = 0;
    for mu in &mus {
        for n in 1..=5 {
            ensure(mahonian_check(mu, n), || format!("mu={mu} n={n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (mu, n) pairs"))
}

fn c17_hl_roots() -> Outcome {
    for k in 1..=3 {
        for n in 1..=3 {
            for m in 1..=4 {
                ensure(hl_rect_check(k, n, m), || format!("rectangle k={k} n={n} m={m}"))?;
            }
        }
    }
    let cases: Vec<(Partition, usize, usize)> =
        partitions_up_to(5).into_iter().flat_map(|l| (1..=3).flat_map(move |d| (1..=4).map({
            let l = l.clone();
            move |m| (l.clone(), d, m)
        })))
        .collect();
    let bad: Vec<String> = cases.par_iter().filter(|(l, d, m)| !hl_root_factorization_check(l, *d, *m)).map(|(l, d, m)| format!("{l} d={d} m={m}")).collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let h2 = SymPoly::complete(2, 2);
    let s21 = SymPoly::schur(&digits("21"), 3);
    for k in 1..=3 {
        for (name, f) in [("h2", &h2), ("s21", &s21)] {
            ensure(pleth_omega_check(k, f) == Ok(true), || format!("plethysm and omega, k={k} on {name}"))?;
        }
    }
    Ok(format!("36 rectangle cases, {} factorization cases, 6 plethysm cases", cases.len()))
}

fn c18_lucas_and_sigma() -> Outcome {
    for n in 0..=12 {
        for k in 0..=12 {
            for d in 1..=12 {
                ensure(q_lucas_check(n, k, d), || format!("q-Lucas n={n} k={k} d={d}"))?;
            }
        }
    }
    let positive = [("1", "(123)", 3), ("2,1", "(123)(456)", 7), ("2", "(12)", 3), ("2,2", "(12)(34)", 4), ("2,1", "(1234)", 4), ("1,1,1", "(1234)", 4)];
    for (s, sigma, m) in positive {
        let perm = Permutation::from_cycles(sigma, m).map_err(|e| e.to_string())?;
        let r = sigma_csp_suite(&shape(s), &perm).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, || format!("{s} under {sigma} in S_{m}: {r}"))?;
    }
    let four = Permutation::from_cycles("(1234)", 6).map_err(|e| e.to_string())?;
    let r = sigma_csp_suite(&shape("1"), &four).map_err(|e| e.to_string())?;
    ensure(r.triple.poly == QPoly::from_i64s(&[1; 6]), || format!("f = {}", r.triple.poly))?;
    ensure(r.verdict == Verdict::NotApplicable && r.witness.as_deref() == Some("f at root^1 = 1+i"), || format!("{r}"))?;
    // A single column of height 2 under an involution: f = q [4 2]_q gives f(-1) = -2 against
    // 2 fixed fillings, so the stray q-power matters even for nearly free actions.
    let inv = sigma_csp_suite(&shape("1,1"), &Permutation::from_cycles("(12)(34)", 4).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let d1 = &inv.checks[0];
    ensure(inv.verdict == Verdict::Fail && d1.fixed == BigInt::from(2) && d1.f_at_root.as_integer() == Some(BigInt::from(-2)), || format!("{inv}"))?;
    Ok("q-Lucas for 2028 triples; 6 nearly free relabellings sieve; (1234) on [6] reports f(i) = 1+i; \
        (1,1) under (12)(34) does not sieve (f(-1) = -2, 2 fixed)"
        .into())
}

type Criterion = (u8, &'static str, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    (1, "E_21 in three variables and its nine fillings", c1_specialized_fillings),
    (2, "descents, maj and weight of the example filling", c2_descents),
    (3, "orbits of COF((8,4), content (8,2,2))", c3_orbit_example),
    (4, "cyclic sieving on COF(n lambda, m) with the Lyndon-like family", c4_main_csp),
    (5, "content-refined cyclic sieving and the matrix bijection", c5_refined_csp),
    (6, "cyclic sieving on skew shapes", c6_skew_csp),
    (7, "Schur expansions of small skew shapes by both routes", c7_schur_table),
    (8, "maj equals postfix charge of the column word", c8_maj_is_postfix_charge),
    (9, "charge and Kostka-Foulkes fixtures", c9_appendix),
    (10, "RSK insertion steps and the biword example", c10_rsk),
    (11, "crystal operators commute with RSK; component structure", c11_crystal),
    (12, "reflection involutions and braid relations", c12_involutions),
    (13, "vertical-strip LLT polynomials", c13_llt),
    (14, "E as omega of transformed Hall-Littlewood polynomials", c14_hall_littlewood),
    (15, "E_{n mu}(1^m) at roots of unity", c15_unity_formula),
    (16, "Mahonian distribution of postfix charge", c16_mahonian),
    (17, "Hall-Littlewood polynomials at roots of unity; plethysm and omega", c17_hl_roots),
    (18, "q-Lucas and relabelling actions", c18_lucas_and_sigma),
];

fn main() -> ExitCode {
    let only: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = 0;
    let start = Instant::now();
    for &(id, title, run) in CRITERIA.iter().filter(|c| only.is_none_or(|o| o == c.0)) {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        let known = KNOWN_DISCREPANCIES.contains(&id);
        match outcome {
            Ok(detail) => {
                println!("PASS  {id:>2}  {title} ({secs:.2}s): {detail}");
                if known {
                    println!("      criterion {id} is listed as a known discrepancy but passed; update the list");
                    unexpected += 1;
                }
            }
            Err(why) => {
                let tag = if known { " [known discrepancy]" } else { "" };
                println!("FAIL  {id:>2}  {title} ({secs:.2}s){tag}: {why}");
                unexpected += usize::from(!known);
            }
        }
    }
    println!("acceptance: {unexpected} unexpected outcome(s) in {:.1}s", start.elapsed().as_secs_f64());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
