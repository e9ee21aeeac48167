use std::collections::BTreeSet;

use kronsnp::kronecker::monomial_support;
use kronsnp::lr::LrTable;
use kronsnp::partition::{compositions, partitions, partitions_bounded};
use kronsnp::polytopes::{
    build_P, build_P_pair, build_script_P, feasibility_region_convex_check, find_half_integer_point,
    find_integer_point, fourier_motzkin_feasible, integer_points, lp_feasible, q, q_frac, simplex_feasible,
    simplex_point, LinearSystem, RationalPoint, Q,
};
use kronsnp::{part, Composition, Error, Partition};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn point_of(v: &[u32]) -> RationalPoint {
    RationalPoint(v.iter().map(|&x| q(x as i64)).collect())
}

/// Tuples `(α^1, …, α^k)` with `|α^i| = a_i`, `ℓ(α^i) ≤ ell`, flattened and padded.
fn tuples(a: &Composition, ell: usize) -> Vec<(Vec<Partition>, Vec<u32>)> {
    let mut acc: Vec<(Vec<Partition>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
    for &ai in &a.0 {
        let ps = partitions_bounded(ai, ell, ai);
        acc = acc
            .into_iter()
            .flat_map(|(t, f)| {
                ps.iter().map(move |p| {
                    let mut t = t.clone();
                    let mut f = f.clone();
                    f.extend(p.padded(ell));
                    t.push(p.clone());
                    (t, f)
                })
            })
            .collect();
    }
    acc
}

#[test]
fn p_integer_points_are_multi_lr_tuples() {
    let mut table = LrTable::new();
    let mut cases = 0;
    for n in 0..=8u32 {
        for mu in partitions_bounded(n, 2, n) {
            if mu.is_empty() {
                continue;
            }
            for k in 1..=3 {
                for a in compositions(n, k) {
                    let sys = build_P(&mu, &a).unwrap();
                    let got: BTreeSet<RationalPoint> = integer_points(&sys).unwrap().into_iter().collect();
                    let want: BTreeSet<RationalPoint> = tuples(&a, mu.len())
                        .into_iter()
                        .filter(|(t, _)| !table.multi(&mu, t).is_zero())
                        .map(|(_, f)| point_of(&f))
                        .collect();
                    assert_eq!(got, want, "{mu} {:?}", a.0);
                    assert!(!got.is_empty());
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 300);
}

#[test]
fn p_small_cases() {
    let sys = build_P(&part![3], &Composition(vec![1, 1, 1])).unwrap();
    assert_eq!(integer_points(&sys).unwrap(), vec![point_of(&[1, 1, 1])]);
    assert_eq!(find_integer_point(&sys).unwrap(), Some(point_of(&[1, 1, 1])));
    for n in 1..=7 {
        for mu in partitions(n) {
            if mu.len() > 8 {
                continue;
            }
            let sys = build_P(&mu, &Composition(vec![n])).unwrap();
            assert_eq!(integer_points(&sys).unwrap(), vec![point_of(mu.parts())], "{mu}");
        }
    }
    assert!(matches!(build_P(&part![2, 1], &Composition(vec![2])), Err(Error::SizeMismatch(_))));
    assert!(matches!(build_P(&part![3, 3, 3], &Composition(vec![3, 3, 3])), Err(Error::BudgetExceeded(_))));
}

#[test]
fn trivial_feasibility() {
    let s = LinearSystem::new(["x"]);
    assert!(lp_feasible(&s));
    let mut s = LinearSystem::new(["x"]);
    s.add_le(ints(&[0]), q(-1));
    assert!(!lp_feasible(&s));
    assert_eq!(find_integer_point(&s).unwrap_or(None), None);
    let mut s = LinearSystem::new(["x", "y"]);
    s.add_le(ints(&[1, 0]), q(3));
    assert!(find_integer_point(&s).is_err());
}

#[test]
fn script_p_examples() {
    let (mu, nu, a) = (part![7, 6], part![5, 4, 4], Composition(vec![5, 4, 4]));
    let sys = build_script_P(&mu, &nu, &a).unwrap();
    assert!(lp_feasible(&sys));
    let p = find_integer_point(&sys).unwrap().unwrap();
    assert!(sys.contains(&p.0));
    assert!(monomial_support(&mu, &nu, 3).unwrap().contains(&a.0));
    assert!(matches!(build_script_P(&mu, &part![5, 4, 3], &a), Err(Error::SizeMismatch(_))));
    assert!(matches!(build_script_P(&part![5, 5], &part![6, 2, 2], &Composition(vec![4, 3, 3])), Err(Error::Precondition(_))));
}

#[test]
fn script_p_degenerate_exponent() {
    for n in 2..=12u32 {
        for mu in partitions_bounded(n, 2, n) {
            for nu in partitions_bounded(n, 3, n) {
                if nu.first() >= mu.first() {
                    continue;
                }
                let sys = build_script_P(&mu, &nu, &Composition(vec![n, 0, 0])).unwrap();
                let lo = [q(n as i64) - q(nu.part(2) as i64), q(n as i64) - q(mu.part(2) as i64), q_frac(n as i64, 2)]
                    .into_iter()
                    .max()
                    .unwrap();
                let hi = q(n.min(nu.first()) as i64);
                let pt = find_integer_point(&sys).unwrap();
                if let Some(p) = &pt {
                    assert!(p.0[1].is_zero() && p.0[2].is_zero());
                    assert!(lo <= p.0[0] && p.0[0] <= hi);
                }
                if lo > hi {
                    assert!(!lp_feasible(&sys), "{mu} {nu}");
                }
                assert_eq!(pt.is_some(), monomial_support(&mu, &nu, 3).unwrap().contains(&[n, 0, 0]), "{mu} {nu}");
            }
        }
    }
}

fn brute_lattice(sys: &LinearSystem, boxes: &[u32]) -> Option<RationalPoint> {
    for x in 0..=boxes[0] {
        for y in 0..=boxes[1] {
            for z in 0..=boxes[2] {
                let p = point_of(&[x, y, z]);
                if sys.contains(&p.0) {
                    return Some(p);
                }
            }
        }
    }
    None
}

#[test]
fn script_p_sweep() {
    let mut odd_vertices = 0;
    let mut systems = 0;
    for n in 2..=12u32 {
        for mu in partitions_bounded(n, 2, n) {
            for nu in partitions_bounded(n, 3, n) {
                if nu.first() >= mu.first() {
                    continue;
                }
                let support = monomial_support(&mu, &nu, 3).unwrap();
                for a in compositions(n, 3) {
                    let sys = build_script_P(&mu, &nu, &a).unwrap();
                    let feasible = lp_feasible(&sys);
                    let point = find_integer_point(&sys).unwrap();
                    assert_eq!(feasible, point.is_some(), "{mu} {nu} {:?}", a.0);
                    assert_eq!(point, brute_lattice(&sys, &a.0), "{mu} {nu} {:?}", a.0);
                    assert_eq!(point.is_some(), support.contains(&a.0), "{mu} {nu} {:?}", a.0);
                    assert_eq!(feasible, simplex_feasible(&sys));
                    if let Some(v) = simplex_point(&sys) {
                        assert!(sys.contains(&v.0));
                        let half = find_half_integer_point(&sys).unwrap().unwrap();
                        assert!(half.is_half_integral() && sys.contains(&half.0));
                        if !v.is_half_integral() {
                            odd_vertices += 1;
                        }
                    }
                    systems += 1;
                }
            }
        }
    }
    assert!(systems > 5000);
    assert!(odd_vertices > 0);
}

#[test]
fn half_integer_search_on_fractional_vertices() {
    let mut s = LinearSystem::new(["x", "y", "z"]);
    for v in 0..3 {
        s.restrict(v, Some(q(0)), Some(q(2)));
    }
    s.add_eq(ints(&[3, 0, 0]), q(2));
    assert_eq!(simplex_point(&s).unwrap().0[0], q_frac(2, 3));
    assert_eq!(find_half_integer_point(&s).unwrap(), None);
    assert!(lp_feasible(&s));

    let mut t = LinearSystem::new(["x", "y", "z"]);
    for v in 0..3 {
        t.restrict(v, Some(q(0)), Some(q(3)));
    }
    t.add_ge(ints(&[4, 0, 0]), q(3));
    t.add_le(ints(&[1, 0, 0]), q(1));
    t.add_ge(ints(&[0, 3, 0]), q(1));
    t.add_le(ints(&[0, 1, 0]), q(1));
    let h = find_half_integer_point(&t).unwrap().unwrap();
    assert_eq!(h, RationalPoint(vec![q(1), q_frac(1, 2), q(0)]));
    assert_eq!(find_integer_point(&t).unwrap(), Some(point_of(&[1, 1, 0])));
}

#[test]
fn convex_combinations_stay_feasible() {
    let (mu, nu) = (part![7, 6], part![5, 4, 4]);
    let a = Composition(vec![5, 4, 4]);
    assert!(feasibility_region_convex_check(&mu, &nu, &[a.clone(), a.clone()]).unwrap());
    for n in 4..=10u32 {
        for mu in partitions_bounded(n, 2, n) {
            for nu in partitions_bounded(n, 3, n) {
                if nu.first() >= mu.first() {
                    continue;
                }
                let good: Vec<Composition> = compositions(n, 3)
                    .into_iter()
                    .filter(|a| lp_feasible(&build_script_P(&mu, &nu, a).unwrap()))
                    .collect();
                for (i, x) in good.iter().enumerate() {
                    for y in &good[i + 1..] {
                        if x.0.iter().zip(&y.0).all(|(s, t)| (s + t) % 2 == 0) {
                            let mid = Composition(x.0.iter().zip(&y.0).map(|(s, t)| (s + t) / 2).collect());
                            assert!(lp_feasible(&build_script_P(&mu, &nu, &mid).unwrap()), "{mu} {nu} {:?}", mid.0);
                        }
                    }
                }
            }
        }
    }
    let bad = Composition(vec![13, 0, 0]);
    assert!(feasibility_region_convex_check(&mu, &nu, &[bad]).is_err());
}

#[test]
fn pair_polytope_matches_support() {
    let (mu, nu) = (part![4, 2], part![3, 2, 1]);
    let support = monomial_support(&mu, &nu, 3).unwrap();
    for a in compositions(6, 3) {
        let sys = build_P_pair(&mu, &nu, &a, 2).unwrap();
        assert_eq!(find_integer_point(&sys).unwrap().is_some(), support.contains(&a.0), "{:?}", a.0);
    }
}

#[test]
fn json_roundtrip() {
    let sys = build_script_P(&part![7, 6], &part![5, 4, 4], &Composition(vec![5, 4, 4])).unwrap();
    let back = LinearSystem::from_json(&sys.to_json()).unwrap();
    assert_eq!(back, sys);
    assert!(sys.to_lp().starts_with("Minimize"));
    let v = sys.to_json();
    assert_eq!(v["vars"], serde_json::json!(["x", "y", "z"]));
    assert!(v["le"][0]["rhs"].as_str().unwrap().contains('/'));
    assert!(LinearSystem::from_json(&serde_json::json!({"vars": ["x"], "eq": [], "le": [{"coeffs": ["1/0"], "rhs": "1"}]})).is_err());
}

fn system_strategy() -> impl Strategy<Value = LinearSystem> {
    (1usize..=3, proptest::collection::vec((proptest::collection::vec(-3i64..=3, 3), -6i64..=6), 1..7)).prop_map(
        |(dim, rows)| {
            let names: Vec<String> = (0..dim).map(|i| format!("v{i}")).collect();
            let mut s = LinearSystem::new(names);
            for (c, b) in rows {
                s.add_le(ints(&c[..dim]), q(b));
            }
            s
        },
    )
}

proptest! {
    #[test]
    fn fourier_motzkin_agrees_with_simplex(s in system_strategy()) {
        let fm = fourier_motzkin_feasible(&s);
        prop_assert_eq!(fm, simplex_feasible(&s));
        prop_assert_eq!(fm, lp_feasible(&s));
        if let Some(p) = simplex_point(&s) {
            prop_assert!(fm && s.contains(&p.0));
        }
    }

    #[test]
    fn feasibility_ignores_row_order_and_scale(s in system_strategy(), f in proptest::collection::vec((1i64..=5, 1i64..=4), 1..4)) {
        let factors: Vec<Q> = f.iter().map(|&(n, d)| q_frac(n, d)).collect();
        prop_assert!(factors.iter().all(|x| x.is_positive()));
        let t = s.rescaled(&factors);
        prop_assert_eq!(lp_feasible(&s), lp_feasible(&t));
        prop_assert_eq!(simplex_feasible(&s), simplex_feasible(&t));
    }

    #[test]
    fn integer_search_matches_enumeration(s in system_strategy()) {
        let mut b = s.clone();
        for v in 0..b.dim() {
            b.restrict(v, Some(q(-2)), Some(q(3)));
        }
        let dim = b.dim();
        let mut brute = None;
        let range: Vec<i64> = (-2..=3).collect();
        let mut idx = vec![0usize; dim];
        'outer: loop {
            let x: Vec<Q> = idx.iter().map(|&i| q(range[i])).collect();
            if b.contains(&x) {
                brute = Some(RationalPoint(x));
                break;
            }
            let mut p = dim;
            loop {
                if p == 0 {
                    break 'outer;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < range.len() {
                    break;
                }
                idx[p] = 0;
            }
        }
        prop_assert_eq!(find_integer_point(&b).unwrap(), brute);
    }
}
