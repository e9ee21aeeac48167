use std::collections::BTreeSet;

use kronsnp::horn::{
    compare_with_table, d_set, horn_positive, kron_necessary_general, kron_necessary_general_explicit,
    kron_necessary_general_lr, kron_necessary_two_row, lr_consistent_triples, mlr_consistent_triples, rho,
    two_row_inequalities, two_row_j_sets, HornFixture, LrTriple, MlrTriple,
};
use kronsnp::lr::lr_coeff;
use kronsnp::oracle::KroneckerOracle;
use kronsnp::partition::{partitions, partitions_bounded};
use kronsnp::verify::HORN_R6_JSON;
use kronsnp::{part, Error, Partition};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn subsets(r: usize, s: usize) -> Vec<Vec<usize>> {
    (0u32..1 << r)
        .filter(|m| m.count_ones() as usize == s)
        .map(|m| (1..=r).filter(|&i| m & (1 << (i - 1)) != 0).collect())
        .collect()
}

#[test]
fn rho_values() {
    assert!(rho(&[1, 2, 3]).is_empty());
    assert!(rho(&[]).is_empty());
    assert_eq!(rho(&[2]), part![1]);
    assert_eq!(rho(&[3, 5, 6]), part![3, 3, 2]);
}

#[test]
fn small_triple_lists() {
    let t1 = lr_consistent_triples(1).unwrap();
    assert_eq!(t1.len(), 1);
    assert_eq!((t1[0].i.clone(), t1[0].j.clone(), t1[0].k.clone()), (vec![1], vec![1], vec![1]));
    let t2 = lr_consistent_triples(2).unwrap();
    assert_eq!(t2.len(), 4);
    assert!(t2.contains(&LrTriple { r: 2, i: vec![2], j: vec![1], k: vec![2] }));
    assert!(matches!(lr_consistent_triples(9), Err(Error::BudgetExceeded(_))));
}

/// Every triple of equal-size subsets, filtered by the LR coefficient alone.
#[test]
fn triples_match_brute_force() {
    for r in 1..=5 {
        let mut want = BTreeSet::new();
        for s in 1..=r {
            let subs = subsets(r, s);
            for i in &subs {
                for j in &subs {
                    for k in &subs {
                        if lr_coeff(&rho(i), &rho(j), &rho(k)).is_one() {
                            want.insert((i.clone(), j.clone(), k.clone()));
                        }
                    }
                }
            }
        }
        let got: BTreeSet<_> =
            lr_consistent_triples(r).unwrap().iter().map(|t| (t.i.clone(), t.j.clone(), t.k.clone())).collect();
        assert_eq!(got, want, "r={r}");
    }
}

#[test]
fn triples_are_swap_closed() {
    for r in 1..=6 {
        let ts = lr_consistent_triples(r).unwrap();
        let set: BTreeSet<&LrTriple> = ts.iter().collect();
        for t in ts.iter() {
            assert!(t.is_consistent());
            assert!(set.contains(&t.swapped()), "{:?}", t.to_json());
        }
    }
}

#[test]
fn six_matches_table() {
    let f = HornFixture::parse(HORN_R6_JSON).unwrap();
    assert_eq!(f.r, 6);
    let c = compare_with_table(&f).unwrap();
    assert!(c.equal(), "{c:?}");
    assert_eq!(c.generated, c.listed);
    assert!(matches!(HornFixture::parse(r#"{"r":2,"triples":[[[1],[3],[1]]]}"#), Err(Error::Fixture(_))));
}

#[test]
fn horn_examples() {
    assert!(horn_positive(&[6, 4, 3], &[3, 1], &[4, 3, 2]).unwrap());
    assert!(horn_positive(&[3, 2], &[3, 2], &[]).unwrap());
    assert!(!horn_positive(&[2, 2], &[3], &[1]).unwrap());
    assert!(!horn_positive(&[2, 2], &[2], &[1]).unwrap());
}

#[test]
fn horn_matches_lr() {
    for n in 0..=9u32 {
        let ls = partitions_bounded(n, 5, n);
        for l in &ls {
            for m in 0..=n {
                for mu in partitions_bounded(m, 5, m) {
                    for nu in partitions_bounded(n - m, 5, n - m) {
                        let want = !lr_coeff(l, &mu, &nu).is_zero();
                        assert_eq!(horn_positive(l.parts(), mu.parts(), nu.parts()).unwrap(), want, "{l} {mu} {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn mlr_triples() {
    let one = mlr_consistent_triples(1, 1).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].triple.i, vec![1]);
    for (ell, k) in [(1, 2), (2, 1), (2, 2), (1, 3), (3, 2), (2, 3), (4, 2)] {
        let got: BTreeSet<LrTriple> = mlr_consistent_triples(ell, k).unwrap().into_iter().map(|m| m.triple).collect();
        let want: BTreeSet<LrTriple> = lr_consistent_triples(ell * k)
            .unwrap()
            .iter()
            .filter(|t| MlrTriple::satisfies_block_condition(t, ell, k))
            .cloned()
            .collect();
        assert_eq!(got, want, "ell={ell} k={k}");
        for t in &got {
            assert!(t.is_consistent());
        }
    }
    let blocks = d_set(&[1, 2, 4, 5], 2);
    assert_eq!(blocks, vec![(1, 1), (1, 2), (2, 2), (3, 1)]);
}

#[test]
fn general_condition_is_necessary_but_not_sufficient() {
    let mut zero_but_true = 0;
    for n in 1..=8u32 {
        let mut o = KroneckerOracle::new(n);
        let ps = partitions(n);
        for l in &ps {
            for m in &ps {
                for v in &ps {
                    let g = o.coeff(l, m, v).unwrap();
                    let check = kron_necessary_general(l, m, v).unwrap();
                    assert_eq!(check, kron_necessary_general_lr(l, m, v).unwrap(), "{l} {m} {v}");
                    if !g.is_zero() {
                        assert!(check, "{l} {m} {v}");
                    } else if check {
                        zero_but_true += 1;
                    }
                }
            }
        }
    }
    assert!(zero_but_true > 0);
    let q = part![1, 1];
    assert!(KroneckerOracle::new(2).coeff(&q, &q, &q).unwrap().is_zero());
    assert!(kron_necessary_general(&q, &q, &q).unwrap());
}

#[test]
fn general_condition_examples() {
    for n in 1..=7 {
        for m in partitions(n) {
            assert!(kron_necessary_general(&Partition::row(n), &m, &m).unwrap());
            assert!(kron_necessary_general_explicit(&Partition::row(n), &m, &m).unwrap());
        }
    }
    assert!(!kron_necessary_general(&Partition::row(4), &part![3, 1], &part![2, 2]).unwrap());
    assert!(matches!(kron_necessary_general(&part![2], &part![2, 1], &part![3]), Err(Error::SizeMismatch(_))));
}

#[test]
fn two_row_j_forms() {
    assert_eq!(two_row_j_sets(0, 1), vec![vec![2]]);
    assert_eq!(two_row_j_sets(2, 0), vec![vec![1, 2]]);
    assert_eq!(two_row_j_sets(1, 2), vec![vec![1, 3, 4], vec![1, 2, 5]]);
}

#[test]
fn two_row_consequences() {
    for n in 1..=12u32 {
        for l in partitions_bounded(n, 4, n) {
            for mu in partitions_bounded(n, 2, n).into_iter().filter(|p| p.len() == 2) {
                for nu in partitions_bounded(n, 4, n) {
                    if !kron_necessary_two_row(&l, &mu, &nu).unwrap() {
                        continue;
                    }
                    assert!(l.first() / 2 <= mu.first().min(nu.first()), "{l} {mu} {nu}");
                    assert!(
                        l.first() <= mu.first().min(nu.first()) + mu.part(2).min(nu.part(2)),
                        "{l} {mu} {nu}"
                    );
                }
            }
        }
    }
    let ineqs = two_row_inequalities(&part![3, 1], &part![2, 2], &part![3, 1]);
    assert!(ineqs.iter().any(|q| q.b == vec![1] && q.a.is_empty() && q.c.is_empty() && q.j == vec![2] && q.bound == 1));
}

#[test]
fn two_row_condition_is_necessary() {
    let mut cases = 0;
    for n in 2..=10u32 {
        let mut o = KroneckerOracle::new(n);
        let ps = partitions(n);
        for mu in partitions_bounded(n, 2, n).into_iter().filter(|p| p.len() == 2) {
            for l in &ps {
                for v in &ps {
                    if !o.coeff(l, &mu, v).unwrap().is_zero() {
                        assert!(kron_necessary_two_row(l, &mu, v).unwrap(), "{l} {mu} {v}");
                        assert!(kron_necessary_two_row(&mu, l, v).unwrap(), "{mu} {l} {v}");
                        cases += 1;
                    }
                }
            }
        }
    }
    assert!(cases > 1000);
    assert!(matches!(
        kron_necessary_two_row(&part![3], &part![1, 1, 1], &part![3]),
        Err(Error::Precondition(_))
    ));
}

proptest! {
    #[test]
    fn horn_is_symmetric_in_mu_nu(mu in partitions_strategy(5), nu in partitions_strategy(5), seed in 0usize..1000) {
        let n = mu.size() + nu.size();
        let ls = partitions_bounded(n, 6, n);
        let l = &ls[seed % ls.len()];
        prop_assert_eq!(
            horn_positive(l.parts(), mu.parts(), nu.parts()).unwrap(),
            horn_positive(l.parts(), nu.parts(), mu.parts()).unwrap()
        );
    }
}

fn partitions_strategy(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}
