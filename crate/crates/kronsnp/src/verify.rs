//! Reproducible verification suites over the library's numeric claims.
//!
//! Each suite returns a list of named checks with a JSON detail record.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::horn::{
    compare_with_table, horn_positive, kron_necessary_general, kron_necessary_general_explicit,
    kron_necessary_general_lr, kron_necessary_two_row, lr_consistent_triples, HornFixture,
};
use crate::kostka::KostkaTable;
use crate::kronecker::{monomial_coeff_kostka, monomial_coeff_multilr_with, monomial_support};
use crate::lr::{lr_coeff, LrTable};
use crate::oracle::{dominance_maximal_terms, kron_coeff_oracle, kron_product, KroneckerOracle};
use crate::part;
use crate::partition::{compositions, partitions, partitions_bounded, Composition, Partition};
use crate::plethysm::{plethysm, plethysm_full, plethysm_max_monomial};
use crate::polytopes::{build_script_P, find_integer_point, lp_feasible, q_frac, script_p_regime};
use crate::rosas::{
    dvir_max_first_row, rosas_kron_tworow_pair, rosas_kron_tworow_triple, rosas_phi, rosas_sigma, two_row_h_positive,
};
use crate::snp::{
    doubling_gap, limit_convexity_check, schur_absorption_level, schur_support, snp_check_kron,
    snp_positivity_consequence, snp_verdict, PartitionCombo,
};

pub const PAPER_VALUES_JSON: &str = include_str!("../fixtures/paper_values.json");
pub const HORN_R6_JSON: &str = include_str!("../fixtures/horn_r6.json");

pub const SUITES: [&str; 8] =
    ["paper-values", "horn-appendix", "snp-theorems", "int-point", "rosas-sweep", "limit", "positivity", "plethysm"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Check { name: name.into(), passed, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        SuiteReport { suite: suite.to_string(), passed: checks.iter().all(|c| c.passed), checks }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Sweep bounds; `None` picks each check's default.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub n: Option<u32>,
    pub k: Option<usize>,
    pub p: Option<u32>,
    pub fixture: Option<String>,
    pub time_limit: Option<Duration>,
}

/// Wall-clock guard for long sweeps.
#[derive(Clone, Copy, Debug)]
pub struct Clock {
    start: Instant,
    limit: Option<Duration>,
}

impl Clock {
    pub fn new(limit: Option<Duration>) -> Self {
        Clock { start: Instant::now(), limit }
    }

    pub fn unlimited() -> Self {
        Clock::new(None)
    }

    pub fn tick(&self, what: &str) -> Result<()> {
        match self.limit {
            Some(l) if self.start.elapsed() > l => {
                Err(Error::BudgetExceeded(format!("{what} exceeded {} s", l.as_secs_f64())))
            }
            _ => Ok(()),
        }
    }
}

/// The numeric data shipped with the crate: three products, one plethysm and
/// the doubling lists.
#[derive(Clone, Debug)]
pub struct PaperValues {
    pub products: Vec<(Partition, Partition, SchurExpansion)>,
    pub plethysm: Vec<(Partition, Partition, SchurExpansion)>,
    pub doubling: Vec<(Partition, Partition, Vec<Partition>)>,
}

impl PaperValues {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        let part_of = |x: &Value| -> Result<Partition> {
            serde_json::from_value(x.clone()).map_err(|e| Error::Fixture(format!("{x}: {e}")))
        };
        let list = |key: &str| -> Result<Vec<Value>> {
            v.get(key).and_then(Value::as_array).cloned().ok_or_else(|| Error::Fixture(format!("missing {key}")))
        };
        let mut out = PaperValues { products: Vec::new(), plethysm: Vec::new(), doubling: Vec::new() };
        for e in list("products")? {
            out.products.push((part_of(&e["lambda"])?, part_of(&e["mu"])?, SchurExpansion::from_json(&e["expansion"])?));
        }
        for e in list("plethysm")? {
            out.plethysm.push((part_of(&e["outer"])?, part_of(&e["inner"])?, SchurExpansion::from_json(&e["expansion"])?));
        }
        for e in list("doubling")? {
            let nus = e["nu"].as_array().ok_or_else(|| Error::Fixture("doubling entry without nu".into()))?;
            out.doubling.push((part_of(&e["lambda"])?, part_of(&e["mu"])?, nus.iter().map(part_of).collect::<Result<_>>()?));
        }
        Ok(out)
    }

    pub fn embedded() -> Self {
        PaperValues::parse(PAPER_VALUES_JSON).expect("embedded fixture parses")
    }

    fn product(&self, lambda: &Partition, mu: &Partition) -> Result<&SchurExpansion> {
        self.products
            .iter()
            .find(|(l, m, _)| l == lambda && m == mu)
            .map(|(_, _, e)| e)
            .ok_or_else(|| Error::Fixture(format!("no product {lambda} * {mu} in fixture")))
    }
}

fn strs(ps: &[Partition]) -> Vec<String> {
    ps.iter().map(Partition::to_string).collect()
}

fn eq_check(name: &str, got: &BigUint, want: u32) -> Check {
    Check::new(name, *got == BigUint::from(want), json!({"expected": want, "got": got.to_string()}))
}

fn count_check(name: &str, total: usize, failures: Vec<String>) -> Check {
    let shown: Vec<String> = failures.iter().take(20).cloned().collect();
    Check::new(name, failures.is_empty(), json!({"cases": total, "failures": failures.len(), "examples": shown}))
}

/// Isolated coefficients: Rosas example, LR example, small two-row triples, σ values.
pub fn exact_values() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let (b, g, a) = (part![7, 6], part![8, 5], part![5, 4, 3, 1]);
    out.push(eq_check("g((7,6),(8,5),(5,4,3,1)) via oracle", &kron_coeff_oracle(&b, &g, &a)?, 2));
    out.push(eq_check("g((7,6),(8,5),(5,4,3,1)) via two-row pair formula", &rosas_kron_tworow_pair(&b, &g, &a)?, 2));
    out.push(eq_check("c^(6,4,3)_(3,1),(4,3,2)", &lr_coeff(&part![6, 4, 3], &part![3, 1], &part![4, 3, 2]), 2));
    for (p, want) in [(part![1, 1], 0u32), (part![2, 2], 1)] {
        out.push(eq_check(&format!("g({p},{p},{p}) via oracle"), &kron_coeff_oracle(&p, &p, &p)?, want));
        out.push(eq_check(&format!("g({p},{p},{p}) via two-row formula"), &rosas_kron_tworow_triple(&p, &p, &p)?, want));
    }
    for (h, want) in [(1i64, 2i64), (-1, 0)] {
        let s = rosas_sigma(2, 2, h);
        out.push(Check::new(format!("sigma_2,2({h})"), s == want.into(), json!({"expected": want, "got": s.to_string()})));
    }
    for (c, want) in [(6i64, 2i64), (9, 0)] {
        let v = rosas_phi(4, 1, c, 1, 5, 7);
        out.push(Check::new(
            format!("phi(4,1,{c},1)(5,7)"),
            v == want.into(),
            json!({"expected": want, "got": v.to_string()}),
        ));
    }
    out.push(Check::new(
        "<s(7,6)*s(8,5), h(12,1)> > 0 and <s(7,6)*s(8,5), h(13)> = 0",
        two_row_h_positive(&b, &g, &part![12, 1])? && !two_row_h_positive(&b, &g, &part![13])?,
        Value::Null,
    ));
    Ok(out)
}

fn expansion_check(name: &str, got: &SchurExpansion, want: &SchurExpansion) -> Check {
    let mut diff = Vec::new();
    for (p, c) in got.iter() {
        if want.coeff(p) != *c {
            diff.push(format!("{p}: computed {c}, listed {}", want.coeff(p)));
        }
    }
    for (p, c) in want.iter() {
        if !got.contains(p) {
            diff.push(format!("{p}: computed 0, listed {c}"));
        }
    }
    Check::new(name, diff.is_empty(), json!({"terms": got.len(), "listed_terms": want.len(), "differences": diff}))
}

/// Full products against the shipped lists, with their dominance-maximal terms.
pub fn expansions(fx: &PaperValues) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let cases = [
        (part![5, 4, 4], part![7, 6], Some(vec![part![9, 3, 1], part![8, 5]])),
        (part![6, 6], part![8, 2, 1, 1], Some(vec![part![8, 3, 1], part![7, 5]])),
        (part![8, 8], part![5, 3, 1, 1, 1, 1, 1, 1, 1, 1], None),
    ];
    for (l, m, maxima) in cases {
        let got = kron_product(&l, &m)?;
        out.push(expansion_check(&format!("s{l} * s{m}"), &got, fx.product(&l, &m)?));
        if let Some(want) = maxima {
            let mut have = dominance_maximal_terms(&got);
            let mut want = want;
            have.sort();
            want.sort();
            out.push(Check::new(
                format!("dominance-maximal terms of s{l} * s{m}"),
                have == want,
                json!({"expected": strs(&want), "got": strs(&have)}),
            ));
        }
    }
    let (l, m) = (part![8, 8], part![5, 3, 1, 1, 1, 1, 1, 1, 1, 1]);
    let e = kron_product(&l, &m)?;
    for (nu, want) in [(part![7, 3, 2, 2, 2], 1u32), (part![5, 5, 2, 2, 2], 1), (part![6, 4, 2, 2, 2], 0)] {
        out.push(eq_check(&format!("g({l},{m},{nu})"), &e.coeff(&nu), want));
    }
    Ok(out)
}

/// Each listed `ν` has `g(λ,μ,ν) = 0` and `g(2λ,2μ,2ν) > 0`.
pub fn doubling_listed(fx: &PaperValues, clock: &Clock) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (l, m, nus) in &fx.doubling {
        let base = kron_product(l, m)?;
        let mut o = KroneckerOracle::new(2 * l.size());
        let mut bad = Vec::new();
        for nu in nus {
            clock.tick("doubling")?;
            let doubled = o.coeff(&l.scale(2), &m.scale(2), &nu.scale(2))?;
            if base.contains(nu) || doubled.is_zero() {
                bad.push(format!("{nu}: g = {}, doubled g = {doubled}", base.coeff(nu)));
            }
        }
        out.push(Check::new(
            format!("listed nu for {l}, {m} vanish at p=1 and are positive at p=2"),
            bad.is_empty(),
            json!({"listed": strs(nus), "failures": bad}),
        ));
    }
    Ok(out)
}

/// The full set `{ν : g(2λ,2μ,2ν) > 0, g(λ,μ,ν) = 0}` against the listed set.
pub fn doubling_exact(fx: &PaperValues, clock: &Clock) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (l, m, nus) in &fx.doubling {
        clock.tick("doubling")?;
        let got = doubling_gap(l, m)?;
        let mut listed = nus.clone();
        listed.sort();
        let mut sorted = got.clone();
        sorted.sort();
        let extra: Vec<Partition> = got.iter().filter(|p| !nus.contains(p)).cloned().collect();
        let absent: Vec<Partition> = nus.iter().filter(|p| !got.contains(p)).cloned().collect();
        out.push(Check::new(
            format!("doubling set for {l}, {m} equals the listed set"),
            sorted == listed,
            json!({"computed": strs(&got), "listed": strs(nus), "not_listed": strs(&extra), "not_computed": strs(&absent)}),
        ));
    }
    Ok(out)
}

pub fn horn_fixture(text: &str) -> Result<Vec<Check>> {
    let fx = HornFixture::parse(text)?;
    let c = compare_with_table(&fx)?;
    let raw = lr_consistent_triples(fx.r)?.len();
    Ok(vec![Check::new(
        format!("LR-consistent triples for r={} equal the table", fx.r),
        c.equal(),
        json!({
            "generated_triples": raw,
            "generated_classes": c.generated,
            "listed_classes": c.listed,
            "only_generated": c.only_generated.len(),
            "only_listed": c.only_listed.len(),
        }),
    )])
}

/// Horn's inequalities against LR coefficients for `ℓ ≤ max_len`, `|λ| ≤ n_max`.
pub fn horn_lr_sweep(n_max: u32, max_len: usize, clock: &Clock) -> Result<Check> {
    let mut table = LrTable::new();
    let mut total = 0usize;
    let mut bad = Vec::new();
    for n in 0..=n_max {
        for lam in partitions_bounded(n, max_len, n) {
            clock.tick("horn sweep")?;
            for s in 0..=n {
                let mus = partitions_bounded(s, max_len, s);
                let nus = partitions_bounded(n - s, max_len, n - s);
                for mu in &mus {
                    for nu in &nus {
                        total += 1;
                        let lr = !table.lr(&lam, mu, nu).is_zero();
                        let h = horn_positive(lam.parts(), mu.parts(), nu.parts())?;
                        if lr != h {
                            bad.push(format!("{lam} / {mu}, {nu}: lr {lr}, horn {h}"));
                        }
                    }
                }
            }
        }
    }
    Ok(count_check(&format!("horn_positive iff c > 0, length <= {max_len}, |lambda| <= {n_max}"), total, bad))
}

fn horn_small_cases() -> Result<Check> {
    let t = lr_consistent_triples(2)?;
    let shown: Vec<String> = t.iter().map(|x| format!("{:?},{:?},{:?}", x.i, x.j, x.k)).collect();
    Ok(Check::new("r=2 triples", t.len() == 4, json!({"triples": shown})))
}

fn schur_polytope_sweep(n_max: u32, k_max: usize, clock: &Clock) -> Result<Check> {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for lam in partitions(n) {
            for k in 1..=k_max {
                clock.tick("schur polytope sweep")?;
                total += 1;
                if !snp_verdict(&schur_support(&lam, k)).saturated {
                    bad.push(format!("{lam}, k={k}"));
                }
            }
        }
    }
    Ok(count_check(&format!("Schur polynomials saturated, |lambda| <= {n_max}, k <= {k_max}"), total, bad))
}

/// `ℓ(λ) ≤ 2`, `ℓ(μ) ≤ 3`, `μ_1 ≥ λ_1`: saturated in every `k ≤ k_max`.
pub fn two_three_row_sweep(n_max: u32, k_max: usize, clock: &Clock) -> Result<Check> {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for lam in partitions_bounded(n, 2, n) {
            for mu in partitions_bounded(n, 3, n) {
                if mu.first() < lam.first() {
                    continue;
                }
                for k in 1..=k_max {
                    clock.tick("two/three-row sweep")?;
                    total += 1;
                    let r = snp_check_kron(&lam, &mu, k)?;
                    if !r.saturated {
                        bad.push(format!("{lam}, {mu}, k={k}: missing {:?}", r.missing));
                    }
                }
            }
        }
    }
    Ok(count_check(&format!("s_lambda * s_mu saturated for l(lambda)<=2, l(mu)<=3, mu_1>=lambda_1, n <= {n_max}, k <= {k_max}"), total, bad))
}

/// `ℓ(λ) ≤ 3`, `ℓ(μ) ≤ 2`, three variables.
pub fn three_variable_sweep(n_max: u32, clock: &Clock) -> Result<Check> {
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for lam in partitions_bounded(n, 3, n) {
            for mu in partitions_bounded(n, 2, n) {
                clock.tick("three-variable sweep")?;
                total += 1;
                let r = snp_check_kron(&lam, &mu, 3)?;
                if !r.saturated {
                    bad.push(format!("{lam}, {mu}: missing {:?}", r.missing));
                }
            }
        }
    }
    Ok(count_check(&format!("s_lambda * s_mu saturated in 3 variables for l(lambda)<=3, l(mu)<=2, n <= {n_max}"), total, bad))
}

/// Multi-LR monomial coefficients equal the Kostka side, for all weak compositions.
pub fn monomial_route_sweep(n_max: u32, k_max: usize, clock: &Clock) -> Result<Check> {
    let mut table = LrTable::new();
    let mut kostka = KostkaTable::new();
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        let ps = partitions(n);
        let mut oracle = KroneckerOracle::new(n);
        for (i, mu) in ps.iter().enumerate() {
            for nu in &ps[i..] {
                clock.tick("monomial sweep")?;
                let e = oracle.product(mu, nu)?;
                for k in 1..=k_max {
                    let support = monomial_support_from(&e, k);
                    for a in compositions(n, k) {
                        total += 1;
                        let lr = monomial_coeff_multilr_with(&mut table, mu, nu, &a)?;
                        let ko = monomial_coeff_kostka(&e, &a, &mut kostka);
                        if lr != ko || lr.is_zero() == support.contains(&a.0) {
                            bad.push(format!("{mu}, {nu}, {:?}: multi-LR {lr}, Kostka {ko}", a.0));
                        }
                    }
                }
            }
        }
    }
    Ok(count_check(&format!("monomial coefficients by multi-LR equal the Kostka side, n <= {n_max}, k <= {k_max}"), total, bad))
}

fn monomial_support_from(e: &SchurExpansion, k: usize) -> crate::kronecker::MonomialSupport {
    crate::kronecker::MonomialSupport::from_schur(e, k)
}

/// Over the three-variable polytope regime: rational feasibility, integer
/// feasibility and positivity of the monomial coefficient coincide.
pub fn int_point_sweep(n_max: u32, clock: &Clock) -> Result<Vec<Check>> {
    let mut total = 0;
    let mut non_integral_vertex = 0;
    let mut bad_int = Vec::new();
    let mut bad_oracle = Vec::new();
    for n in 1..=n_max {
        let mut oracle = KroneckerOracle::new(n);
        for mu in partitions_bounded(n, 2, n) {
            for nu in partitions_bounded(n, 3, n) {
                if nu.first() >= mu.first() {
                    continue;
                }
                clock.tick("integer point sweep")?;
                let support = monomial_support_from(&oracle.product(&mu, &nu)?, 3);
                for a in compositions(n, 3) {
                    if script_p_regime(&mu, &nu, &a).is_err() {
                        continue;
                    }
                    total += 1;
                    let sys = build_script_P(&mu, &nu, &a)?;
                    let rational = lp_feasible(&sys);
                    let integral = find_integer_point(&sys)?;
                    if let Some(p) = crate::polytopes::simplex_point(&sys) {
                        if !p.is_integral() {
                            non_integral_vertex += 1;
                        }
                    }
                    if rational != integral.is_some() {
                        bad_int.push(format!("{mu}, {nu}, {:?}: rational {rational}", a.0));
                    }
                    if integral.is_some() != support.contains(&a.0) {
                        bad_oracle.push(format!("{mu}, {nu}, {:?}", a.0));
                    }
                }
            }
        }
    }
    let mut c = count_check(&format!("rational feasibility iff integer point, n <= {n_max}"), total, bad_int);
    c.detail["non_integral_simplex_vertices"] = json!(non_integral_vertex);
    Ok(vec![c, count_check(&format!("integer point iff positive monomial coefficient, n <= {n_max}"), total, bad_oracle)])
}

/// Closed forms for two-row shapes against the character oracle.
pub fn rosas_sweep(n_max: u32, clock: &Clock) -> Result<Vec<Check>> {
    let mut kostka = KostkaTable::new();
    let (mut t_total, mut p_total, mut h_total, mut d_total) = (0, 0, 0, 0);
    let (mut t_bad, mut p_bad, mut h_bad, mut d_bad) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for n in 1..=n_max {
        let mut o = KroneckerOracle::new(n);
        let two = partitions_bounded(n, 2, n);
        let four = partitions_bounded(n, 4, n);
        for a in &two {
            for b in &two {
                for c in &two {
                    clock.tick("two-row sweep")?;
                    t_total += 1;
                    let (f, g) = (rosas_kron_tworow_triple(a, b, c)?, o.coeff(a, b, c)?);
                    if f != g {
                        t_bad.push(format!("{a}, {b}, {c}: formula {f}, oracle {g}"));
                    }
                }
            }
        }
        for b in &two {
            for g in &two {
                if g.part(2) > b.part(2) {
                    continue;
                }
                for a in &four {
                    clock.tick("two-row pair sweep")?;
                    p_total += 1;
                    let (f, w) = (rosas_kron_tworow_pair(b, g, a)?, o.coeff(b, g, a)?);
                    if f != w {
                        p_bad.push(format!("{b}, {g}, {a}: formula {f}, oracle {w}"));
                    }
                }
                let e = o.product(b, g)?;
                for l in &two {
                    h_total += 1;
                    let direct = !monomial_coeff_kostka(&e, &Composition(l.parts().to_vec()), &mut kostka).is_zero();
                    if two_row_h_positive(b, g, l)? != direct {
                        h_bad.push(format!("{b}, {g}, h{l}"));
                    }
                }
            }
        }
        if n <= 12 {
            for mu in &two {
                for nu in partitions_bounded(n, 3, n) {
                    if mu.first() > nu.first() {
                        continue;
                    }
                    d_total += 1;
                    let top = dvir_max_first_row(mu, &nu)?;
                    let e = o.product(mu, &nu)?;
                    let maxima = dominance_maximal_terms(&e);
                    let want = Partition::new(vec![top, n - top])?;
                    let first = e.support().map(Partition::first).max().unwrap_or(0);
                    if first != top || maxima != vec![want] {
                        d_bad.push(format!("{mu}, {nu}: first row {first}, maxima {:?}", strs(&maxima)));
                    }
                }
            }
        }
    }
    Ok(vec![
        count_check(&format!("two-row triple formula equals oracle, n <= {n_max}"), t_total, t_bad),
        count_check(&format!("two-row pair formula equals oracle, n <= {n_max}"), p_total, p_bad),
        count_check(&format!("h-positivity criterion, n <= {n_max}"), h_total, h_bad),
        count_check(&format!("largest first row and unique maximal term, n <= {}", n_max.min(12)), d_total, d_bad),
    ])
}

/// Necessary conditions hold on every positive triple; the two engines of
/// the general condition agree everywhere for `n ≤ engines_n`.
pub fn positivity_sweep(n_max: u32, engines_n: u32, clock: &Clock) -> Result<Vec<Check>> {
    let (mut g_total, mut t_total, mut e_total) = (0, 0, 0);
    let (mut g_bad, mut t_bad, mut e_bad) = (Vec::new(), Vec::new(), Vec::new());
    for n in 1..=n_max {
        let ps = partitions(n);
        let mut o = KroneckerOracle::new(n);
        for lam in &ps {
            for mu in &ps {
                clock.tick("positivity sweep")?;
                let e = o.product(lam, mu)?;
                for (nu, _) in e.iter() {
                    g_total += 1;
                    if !kron_necessary_general(lam, mu, nu)? {
                        g_bad.push(format!("{lam}, {mu}, {nu}"));
                    }
                    if mu.len() == 2 {
                        t_total += 1;
                        if !kron_necessary_two_row(lam, mu, nu)? {
                            t_bad.push(format!("{lam}, {mu}, {nu}"));
                        }
                    }
                }
                if n <= engines_n {
                    for nu in &ps {
                        if mu.len().min(nu.len()) * lam.len() > crate::horn::DEFAULT_HORN_CAP {
                            continue;
                        }
                        e_total += 1;
                        let (a, b) = (
                            kron_necessary_general_explicit(lam, mu, nu)?,
                            kron_necessary_general_lr(lam, mu, nu)?,
                        );
                        if a != b {
                            e_bad.push(format!("{lam}, {mu}, {nu}: triples {a}, LR {b}"));
                        }
                    }
                }
            }
        }
    }
    Ok(vec![
        count_check(&format!("general necessary condition on positive triples, n <= {n_max}"), g_total, g_bad),
        count_check(&format!("two-row necessary condition on positive triples, n <= {n_max}"), t_total, t_bad),
        count_check(&format!("triple system and LR search agree, n <= {engines_n}"), e_total, e_bad),
    ])
}

/// Midpoint example, doubling absorption and the finite convexity check.
pub fn limit_checks(fx: &PaperValues, p_max: u32, clock: &Clock) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let (l, m) = (part![8, 8], part![5, 3, 1, 1, 1, 1, 1, 1, 1, 1]);
    let (alpha, beta, mid) = (part![7, 3, 2, 2, 2], part![5, 5, 2, 2, 2], part![6, 4, 2, 2, 2]);
    let e = kron_product(&l, &m)?;
    out.push(Check::new(
        "endpoints (7,3,2,2,2), (5,5,2,2,2) are terms and the midpoint is not",
        e.contains(&alpha) && e.contains(&beta) && !e.contains(&mid),
        json!({"alpha": e.coeff(&alpha).to_string(), "beta": e.coeff(&beta).to_string(), "midpoint": e.coeff(&mid).to_string()}),
    ));
    clock.tick("limit")?;
    let level = schur_absorption_level(&l, &m, &mid, p_max.max(2))?;
    out.push(Check::new("midpoint is a term at p=2", level == Some(2), json!({"first_level": level})));
    let mono = monomial_support(&l, &m, 5)?;
    out.push(Check::new(
        "midpoint monomial is present at p=1 through the dominating term (7,3,2,2,2)",
        mono.contains(mid.parts()) && alpha.dominates(&mid),
        Value::Null,
    ));
    let combo = PartitionCombo { weights: vec![q_frac(1, 2), q_frac(1, 2)], parts: vec![alpha, beta] };
    out.push(Check::new("positivity consequence for the midpoint", snp_positivity_consequence(&l, &m, &[combo])?, Value::Null));
    for (l, m, nus) in &fx.doubling {
        let mut bad = Vec::new();
        for nu in nus {
            clock.tick("limit")?;
            let lv = schur_absorption_level(l, m, nu, p_max.max(2))?;
            if lv != Some(2) {
                bad.push(format!("{nu}: first level {lv:?}"));
            }
        }
        out.push(Check::new(format!("listed nu for {l}, {m} absorbed at p=2"), bad.is_empty(), json!({"failures": bad})));
    }
    clock.tick("limit")?;
    let r = limit_convexity_check(&part![4, 4], &part![2, 2, 2, 2], 4, p_max)?;
    out.push(Check::new(
        format!("(4,4), (2,2,2,2), k=4: combinations absorbed by p <= {p_max}"),
        r.all_absorbed() && !r.absorbed_later.is_empty(),
        json!({"checked": r.checked, "absorbed_later": r.absorbed_later.len(), "not_absorbed": r.not_absorbed.len()}),
    ));
    let r = limit_convexity_check(&part![2, 1], &part![2, 1], 3, 1)?;
    out.push(Check::new("p_max=1 check on a full simplex", r.all_absorbed(), json!({"checked": r.checked})));
    Ok(out)
}

/// Plethysm expansion, the `(m)[(2)]` formula and the largest-monomial rule.
pub fn plethysm_checks(fx: &PaperValues, max_degree: u32, clock: &Clock) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (outer, inner, want) in &fx.plethysm {
        let got = plethysm_full(outer, inner)?;
        out.push(expansion_check(&format!("s{outer}[s{inner}]"), &got, want));
        let maxima = dominance_maximal_terms(&got);
        if *outer == part![1, 1, 1] && *inner == part![2, 1] {
            let mut want = vec![part![6, 1, 1, 1], part![5, 3, 1]];
            want.sort();
            let mut have = maxima.clone();
            have.sort();
            out.push(Check::new(
                "maximal terms of s(1,1,1)[s(2,1)] are (6,1,1,1) and (5,3,1)",
                have == want,
                json!({"got": strs(&have)}),
            ));
        }
    }
    let mut bad = Vec::new();
    for m in 1..=5u32 {
        let got = plethysm_full(&Partition::row(m), &part![2])?;
        let mut want = SchurExpansion::new(2 * m);
        for mu in partitions(m) {
            want.insert(mu.scale(2), BigUint::one());
        }
        if got != want {
            bad.push(format!("m={m}: {got}"));
        }
    }
    out.push(count_check("s(m)[s(2)] is the sum of s(2mu), m <= 5", 5, bad));
    let (mut total, mut bad) = (0, Vec::new());
    for m in 0..=8u32 {
        for mu in partitions(m) {
            total += 1;
            let got = plethysm_full(&part![1], &mu)?;
            let mut want = SchurExpansion::new(m);
            want.insert(mu.clone(), BigUint::one());
            if got != want {
                bad.push(format!("{mu}: {got}"));
            }
        }
    }
    out.push(count_check("s(1)[s(mu)] = s(mu), |mu| <= 8", total, bad));
    let mut total = 0;
    let mut bad = Vec::new();
    for a in 1..=max_degree {
        for b in 1..=max_degree / a {
            for lam in partitions(a) {
                for mu in partitions(b) {
                    clock.tick("plethysm sweep")?;
                    total += 1;
                    let nu = plethysm_max_monomial(&lam, &mu)?;
                    let nu = Partition::new(nu.0)?;
                    let r = plethysm(&lam, &mu, nu.len())?;
                    if nu.size() != a * b || r.expansion.coeff(&nu).is_zero() {
                        bad.push(format!("{lam}[{mu}]: {nu}"));
                    }
                }
            }
        }
    }
    out.push(count_check(&format!("largest monomial is a term, |lambda||mu| <= {max_degree}"), total, bad));
    Ok(out)
}

/// Default time budget per suite.
pub fn default_time_limit(suite: &str) -> Duration {
    let mins = match suite {
        "paper-values" | "limit" | "rosas-sweep" | "plethysm" => 5,
        "snp-theorems" => 30,
        _ => 10,
    };
    Duration::from_secs(60 * mins)
}

pub fn run_suite(suite: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let clock = Clock::new(Some(opts.time_limit.unwrap_or_else(|| default_time_limit(suite))));
    let fx = || -> Result<PaperValues> { PaperValues::parse(PAPER_VALUES_JSON) };
    let checks = match suite {
        "paper-values" => {
            let fx = fx()?;
            let mut c = exact_values()?;
            c.extend(expansions(&fx)?);
            c.extend(doubling_listed(&fx, &clock)?);
            c
        }
        "horn-appendix" => {
            let text = match &opts.fixture {
                Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Fixture(format!("{path}: {e}")))?,
                None => HORN_R6_JSON.to_string(),
            };
            let mut c = horn_fixture(&text)?;
            c.push(horn_small_cases()?);
            c.push(horn_lr_sweep(opts.n.unwrap_or(12), 6, &clock)?);
            c
        }
        "snp-theorems" => {
            let k = opts.k.unwrap_or(4);
            vec![
                schur_polytope_sweep(opts.n.unwrap_or(10), k, &clock)?,
                two_three_row_sweep(opts.n.unwrap_or(12), k, &clock)?,
                three_variable_sweep(opts.n.unwrap_or(14), &clock)?,
                monomial_route_sweep(opts.n.unwrap_or(10), opts.k.unwrap_or(3), &clock)?,
            ]
        }
        "int-point" => int_point_sweep(opts.n.unwrap_or(14), &clock)?,
        "rosas-sweep" => rosas_sweep(opts.n.unwrap_or(16), &clock)?,
        "limit" => limit_checks(&fx()?, opts.p.unwrap_or(2), &clock)?,
        "positivity" => {
            let n = opts.n.unwrap_or(10);
            positivity_sweep(n, n.min(8), &clock)?
        }
        "plethysm" => plethysm_checks(&fx()?, opts.n.unwrap_or(12), &clock)?,
        other => return Err(Error::Parse(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteReport::new(suite, checks))
}
