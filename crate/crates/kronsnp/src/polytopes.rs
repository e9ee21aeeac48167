//! Exact rational linear systems, feasibility, lattice-point search and the
//! polytopes controlling monomials of Kronecker products.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::horn::{d_set, lr_consistent_triples, lr_consistent_triples_uncapped, DEFAULT_HORN_CAP};
use crate::partition::{Composition, Partition};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn q_str(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n.trim().parse().map_err(|_| bad())?, d))
        }
        None => Ok(Q::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// `coeffs · x (≤ or =) rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

impl Row {
    fn eval(&self, x: &[Q]) -> Q {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    fn scaled(&self, t: &Q) -> Row {
        Row { coeffs: self.coeffs.iter().map(|a| a * t).collect(), rhs: &self.rhs * t }
    }

    fn negated(&self) -> Row {
        self.scaled(&q(-1))
    }
}

/// Exact H-representation: equalities, `≤` rows and optional per-variable boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    vars: Vec<String>,
    eq: Vec<Row>,
    le: Vec<Row>,
    lower: Vec<Option<Q>>,
    upper: Vec<Option<Q>>,
}

/// A point with exact rational coordinates, in a system's variable order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalPoint(pub Vec<Q>);

impl RationalPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn is_half_integral(&self) -> bool {
        self.0.iter().all(|x| (x * q(2)).is_integer())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|x| q_str(x).into()).collect())
    }
}

impl LinearSystem {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let n = vars.len();
        LinearSystem { vars, eq: Vec::new(), le: Vec::new(), lower: vec![None; n], upper: vec![None; n] }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn equalities(&self) -> &[Row] {
        &self.eq
    }

    pub fn inequalities(&self) -> &[Row] {
        &self.le
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn check_row(&self, coeffs: &[Q]) {
        assert_eq!(coeffs.len(), self.vars.len(), "row length does not match the variable list");
    }

    pub fn add_le(&mut self, coeffs: Vec<Q>, rhs: Q) {
        self.check_row(&coeffs);
        self.le.push(Row { coeffs, rhs });
    }

    pub fn add_ge(&mut self, coeffs: Vec<Q>, rhs: Q) {
        self.add_le(coeffs.into_iter().map(|a| -a).collect(), -rhs);
    }

    pub fn add_eq(&mut self, coeffs: Vec<Q>, rhs: Q) {
        self.check_row(&coeffs);
        self.eq.push(Row { coeffs, rhs });
    }

    /// Intersects the box of variable `v` with `[lo, hi]`.
    pub fn restrict(&mut self, v: usize, lo: Option<Q>, hi: Option<Q>) {
        if let Some(lo) = lo {
            let cur = self.lower[v].take();
            self.lower[v] = Some(match cur {
                Some(c) if c > lo => c,
                _ => lo,
            });
        }
        if let Some(hi) = hi {
            let cur = self.upper[v].take();
            self.upper[v] = Some(match cur {
                Some(c) if c < hi => c,
                _ => hi,
            });
        }
    }

    pub fn bounds(&self, v: usize) -> (Option<&Q>, Option<&Q>) {
        (self.lower[v].as_ref(), self.upper[v].as_ref())
    }

    /// Rows of both systems and the intersection of their boxes; variable lists must agree.
    pub fn intersect(&self, other: &LinearSystem) -> Result<LinearSystem> {
        if self.vars != other.vars {
            return Err(Error::Precondition("systems have different variables".into()));
        }
        let mut s = self.clone();
        s.eq.extend(other.eq.iter().cloned());
        s.le.extend(other.le.iter().cloned());
        for v in 0..s.dim() {
            s.restrict(v, other.lower[v].clone(), other.upper[v].clone());
        }
        Ok(s)
    }

    /// Copy with the row order reversed and every row scaled by the given positive factors.
    pub fn rescaled(&self, factors: &[Q]) -> LinearSystem {
        let mut s = self.clone();
        let f = |i: usize| factors.get(i % factors.len().max(1)).cloned().unwrap_or_else(Q::one);
        s.le = self.le.iter().enumerate().map(|(i, r)| r.scaled(&f(i))).rev().collect();
        s.eq = self.eq.iter().enumerate().map(|(i, r)| r.scaled(&f(i))).rev().collect();
        s
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        x.len() == self.dim()
            && self.eq.iter().all(|r| r.eval(x) == r.rhs)
            && self.le.iter().all(|r| r.eval(x) <= r.rhs)
            && (0..self.dim()).all(|v| {
                self.lower[v].as_ref().map_or(true, |l| &x[v] >= l) && self.upper[v].as_ref().map_or(true, |u| &x[v] <= u)
            })
    }

    /// All constraints, boxes included, as `≤` rows.
    pub fn all_le_rows(&self) -> Vec<Row> {
        let n = self.dim();
        let mut rows = self.le.clone();
        for r in &self.eq {
            rows.push(r.clone());
            rows.push(r.negated());
        }
        for v in 0..n {
            let unit = |s: i64| {
                let mut c = vec![Q::zero(); n];
                c[v] = q(s);
                c
            };
            if let Some(l) = &self.lower[v] {
                rows.push(Row { coeffs: unit(-1), rhs: -l.clone() });
            }
            if let Some(u) = &self.upper[v] {
                rows.push(Row { coeffs: unit(1), rhs: u.clone() });
            }
        }
        rows
    }

    /// `{"vars":[…],"eq":[…],"le":[…],"bounds":[…]}` with rationals as `"p/q"`.
    pub fn to_json(&self) -> serde_json::Value {
        let row = |r: &Row| {
            serde_json::json!({
                "coeffs": r.coeffs.iter().map(q_str).collect::<Vec<_>>(),
                "rhs": q_str(&r.rhs),
            })
        };
        let opt = |x: &Option<Q>| x.as_ref().map(q_str);
        serde_json::json!({
            "vars": self.vars,
            "eq": self.eq.iter().map(row).collect::<Vec<_>>(),
            "le": self.le.iter().map(row).collect::<Vec<_>>(),
            "bounds": (0..self.dim()).map(|v| serde_json::json!([opt(&self.lower[v]), opt(&self.upper[v])])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("linear system: {what}"));
        let vars: Vec<String> = serde_json::from_value(v["vars"].clone()).map_err(|_| bad("vars"))?;
        let mut s = LinearSystem::new(vars);
        let dim = s.dim();
        let rows = |key: &str| -> Result<Vec<Row>> {
            let mut out = Vec::new();
            for r in v[key].as_array().ok_or_else(|| bad(key))? {
                let coeffs = r["coeffs"]
                    .as_array()
                    .ok_or_else(|| bad("coeffs"))?
                    .iter()
                    .map(|c| parse_q(c.as_str().unwrap_or("?")))
                    .collect::<Result<Vec<_>>>()?;
                if coeffs.len() != dim {
                    return Err(bad("row length"));
                }
                out.push(Row { coeffs, rhs: parse_q(r["rhs"].as_str().ok_or_else(|| bad("rhs"))?)? });
            }
            Ok(out)
        };
        s.eq = rows("eq")?;
        s.le = rows("le")?;
        if let Some(b) = v.get("bounds").and_then(|b| b.as_array()) {
            for (i, pair) in b.iter().enumerate().take(s.dim()) {
                let side = |j: usize| -> Result<Option<Q>> {
                    match pair.get(j).and_then(|x| x.as_str()) {
                        Some(t) => parse_q(t).map(Some),
                        None => Ok(None),
                    }
                };
                s.lower[i] = side(0)?;
                s.upper[i] = side(1)?;
            }
        }
        Ok(s)
    }

    /// CPLEX LP text with a zero objective; each row is scaled to integer coefficients.
    pub fn to_lp(&self) -> String {
        let integral = |r: &Row| -> (Vec<BigInt>, BigInt) {
            let l = r.coeffs.iter().chain(std::iter::once(&r.rhs)).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let s = Q::from_integer(l);
            let c = r.coeffs.iter().map(|x| (x * &s).to_integer()).collect();
            (c, (&r.rhs * &s).to_integer())
        };
        let lhs = |c: &[BigInt]| {
            let mut t = String::new();
            for (a, v) in c.iter().zip(&self.vars) {
                if a.is_zero() {
                    continue;
                }
                let sign = if a.is_negative() { "-" } else { "+" };
                let _ = write!(t, " {sign} {} {v}", a.abs());
            }
            if t.is_empty() {
                t = format!(" 0 {}", self.vars.first().map(String::as_str).unwrap_or("x"));
            }
            t
        };
        let mut out = String::from("Minimize\n obj: 0\nSubject To\n");
        for (i, r) in self.eq.iter().enumerate() {
            let (c, b) = integral(r);
            let _ = writeln!(out, " e{}:{} = {b}", i + 1, lhs(&c));
        }
        for (i, r) in self.le.iter().enumerate() {
            let (c, b) = integral(r);
            let _ = writeln!(out, " c{}:{} <= {b}", i + 1, lhs(&c));
        }
        out.push_str("Bounds\n");
        for (v, name) in self.vars.iter().enumerate() {
            let dec = |x: &Q| {
                let s = q_str(x);
                if x.is_integer() { x.numer().to_string() } else { s }
            };
            match (&self.lower[v], &self.upper[v]) {
                (Some(l), Some(u)) => {
                    let _ = writeln!(out, " {} <= {name} <= {}", dec(l), dec(u));
                }
                (Some(l), None) => {
                    let _ = writeln!(out, " {name} >= {}", dec(l));
                }
                (None, Some(u)) => {
                    let _ = writeln!(out, " -inf <= {name} <= {}", dec(u));
                }
                (None, None) => {
                    let _ = writeln!(out, " {name} free");
                }
            }
        }
        out.push_str("End\n");
        out
    }
}

/// Integer row `coeffs · x ≤ rhs` with coprime entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct IntRow {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

impl IntRow {
    fn from_row(r: &Row) -> IntRow {
        let l = r.coeffs.iter().chain(std::iter::once(&r.rhs)).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let s = Q::from_integer(l);
        IntRow {
            coeffs: r.coeffs.iter().map(|x| (x * &s).to_integer()).collect(),
            rhs: (&r.rhs * &s).to_integer(),
        }
        .primitive()
    }

    fn primitive(mut self) -> IntRow {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            self.rhs = self.rhs.signum();
            return self;
        }
        let g = g.gcd(&self.rhs);
        if !g.is_one() {
            for c in self.coeffs.iter_mut() {
                *c /= &g;
            }
            self.rhs /= &g;
        }
        self
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Keeps the tightest right-hand side per coefficient vector, dropping `0 ≤ c` rows with `c ≥ 0`.
fn dedupe_int(rows: Vec<IntRow>) -> Vec<IntRow> {
    let mut best: std::collections::BTreeMap<Vec<BigInt>, BigInt> = std::collections::BTreeMap::new();
    for r in rows {
        if r.is_trivial() && !r.rhs.is_negative() {
            continue;
        }
        match best.get_mut(&r.coeffs) {
            Some(b) if *b <= r.rhs => {}
            Some(b) => *b = r.rhs,
            None => {
                best.insert(r.coeffs, r.rhs);
            }
        }
    }
    best.into_iter().map(|(coeffs, rhs)| IntRow { coeffs, rhs }).collect()
}

/// Feasibility by Fourier–Motzkin elimination, removing at each step the
/// variable that creates the fewest new rows.
pub fn fourier_motzkin_feasible(sys: &LinearSystem) -> bool {
    let n = sys.dim();
    let mut rows: Vec<IntRow> = dedupe_int(sys.all_le_rows().iter().map(IntRow::from_row).collect());
    let mut left: Vec<usize> = (0..n).collect();
    loop {
        if rows.iter().any(|r| r.is_trivial() && r.rhs.is_negative()) {
            return false;
        }
        if left.is_empty() {
            return true;
        }
        let cost = |v: usize| {
            let p = rows.iter().filter(|r| r.coeffs[v].is_positive()).count();
            let m = rows.iter().filter(|r| r.coeffs[v].is_negative()).count();
            p * m
        };
        let (at, &v) = left.iter().enumerate().min_by_key(|(_, &v)| cost(v)).expect("nonempty");
        left.swap_remove(at);
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut keep: Vec<IntRow> = Vec::new();
        for r in rows {
            if r.coeffs[v].is_positive() {
                pos.push(r);
            } else if r.coeffs[v].is_negative() {
                neg.push(r);
            } else {
                keep.push(r);
            }
        }
        for p in &pos {
            for m in &neg {
                let (a, b) = (&p.coeffs[v], -&m.coeffs[v]);
                let coeffs: Vec<BigInt> = p.coeffs.iter().zip(&m.coeffs).map(|(x, y)| x * &b + y * a).collect();
                let rhs = &p.rhs * &b + &m.rhs * a;
                keep.push(IntRow { coeffs, rhs }.primitive());
            }
        }
        rows = dedupe_int(keep);
    }
}

/// A feasible point found by the two-phase simplex method (phase one only)
/// with Bland's rule, in exact arithmetic.
pub fn simplex_point(sys: &LinearSystem) -> Option<RationalPoint> {
    let n = sys.dim();
    // x_v = offset_v + sign_v * p_v (− q_v when free)
    let mut cols: Vec<(usize, Q)> = Vec::new();
    let mut offset = vec![Q::zero(); n];
    let mut extra_rows: Vec<Row> = Vec::new();
    let mut var_cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); n];
    for v in 0..n {
        match (&sys.lower[v], &sys.upper[v]) {
            (Some(l), u) => {
                offset[v] = l.clone();
                var_cols[v].push((cols.len(), q(1)));
                cols.push((v, q(1)));
                if let Some(u) = u {
                    if u < l {
                        return None;
                    }
                    extra_rows.push(Row { coeffs: unit(n, v), rhs: u.clone() });
                }
            }
            (None, Some(u)) => {
                offset[v] = u.clone();
                var_cols[v].push((cols.len(), q(-1)));
                cols.push((v, q(-1)));
            }
            (None, None) => {
                var_cols[v].push((cols.len(), q(1)));
                cols.push((v, q(1)));
                var_cols[v].push((cols.len(), q(-1)));
                cols.push((v, q(-1)));
            }
        }
    }
    let ns = cols.len();
    let translate = |r: &Row| -> (Vec<Q>, Q) {
        let mut c = vec![Q::zero(); ns];
        let mut rhs = r.rhs.clone();
        for v in 0..n {
            if r.coeffs[v].is_zero() {
                continue;
            }
            rhs -= &r.coeffs[v] * &offset[v];
            for (col, s) in &var_cols[v] {
                c[*col] += &r.coeffs[v] * s;
            }
        }
        (c, rhs)
    };
    let mut le: Vec<(Vec<Q>, Q)> = sys.le.iter().map(translate).collect();
    for r in &extra_rows {
        // upper bound rows are stated on x_v, translate shifts by the lower bound
        le.push(translate(r));
    }
    let eq: Vec<(Vec<Q>, Q)> = sys.eq.iter().map(translate).collect();
    let m = le.len() + eq.len();
    let n_slack = le.len();
    let mut n_art = 0;
    for (_, b) in &le {
        if b.is_negative() {
            n_art += 1;
        }
    }
    n_art += eq.len();
    let width = ns + n_slack + n_art;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    let mut rhs: Vec<Q> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut art = ns + n_slack;
    for (i, (c, b)) in le.iter().enumerate() {
        let mut row = vec![Q::zero(); width];
        row[..ns].clone_from_slice(c);
        row[ns + i] = q(1);
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            row[art] = q(1);
            basis.push(art);
            art += 1;
            rhs.push(-b.clone());
        } else {
            basis.push(ns + i);
            rhs.push(b.clone());
        }
        t.push(row);
    }
    for (c, b) in &eq {
        let mut row = vec![Q::zero(); width];
        row[..ns].clone_from_slice(c);
        let mut b = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            b = -b;
        }
        row[art] = q(1);
        basis.push(art);
        art += 1;
        rhs.push(b);
        t.push(row);
    }
    let first_art = ns + n_slack;
    let mut obj = vec![Q::zero(); width];
    let mut obj_rhs = Q::zero();
    for j in first_art..width {
        obj[j] = q(1);
    }
    for r in 0..m {
        if basis[r] >= first_art {
            for j in 0..width {
                let d = t[r][j].clone();
                if !d.is_zero() {
                    obj[j] -= d;
                }
            }
            obj_rhs -= &rhs[r];
        }
    }
    loop {
        let Some(e) = (0..width).find(|&j| obj[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for r in 0..m {
            if t[r][e].is_positive() {
                let ratio = &rhs[r] / &t[r][e];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(l) = leave else { break };
        let piv = t[l][e].clone();
        for x in t[l].iter_mut() {
            *x /= &piv;
        }
        rhs[l] /= &piv;
        let prow = t[l].clone();
        let prhs = rhs[l].clone();
        for r in 0..m {
            if r != l && !t[r][e].is_zero() {
                let f = t[r][e].clone();
                for j in 0..width {
                    if !prow[j].is_zero() {
                        let d = &f * &prow[j];
                        t[r][j] -= d;
                    }
                }
                rhs[r] -= &f * &prhs;
            }
        }
        if !obj[e].is_zero() {
            let f = obj[e].clone();
            for j in 0..width {
                if !prow[j].is_zero() {
                    obj[j] -= &f * &prow[j];
                }
            }
            obj_rhs -= &f * &prhs;
        }
        basis[l] = e;
    }
    if !obj_rhs.is_zero() {
        return None;
    }
    let mut val = vec![Q::zero(); ns];
    for r in 0..m {
        if basis[r] < ns {
            val[basis[r]] = rhs[r].clone();
        }
    }
    let mut x = offset;
    for (col, (v, s)) in cols.iter().enumerate() {
        x[*v] += s * &val[col];
    }
    debug_assert!(sys.contains(&x));
    Some(RationalPoint(x))
}

fn unit(n: usize, v: usize) -> Vec<Q> {
    let mut c = vec![Q::zero(); n];
    c[v] = q(1);
    c
}

pub fn simplex_feasible(sys: &LinearSystem) -> bool {
    simplex_point(sys).is_some()
}

/// Exact feasibility: Fourier–Motzkin up to six variables, simplex above.
pub fn lp_feasible(sys: &LinearSystem) -> bool {
    if sys.dim() <= 6 {
        fourier_motzkin_feasible(sys)
    } else {
        simplex_feasible(sys)
    }
}

fn finite_boxes(sys: &LinearSystem) -> Result<Vec<(Q, Q)>> {
    (0..sys.dim())
        .map(|v| match (&sys.lower[v], &sys.upper[v]) {
            (Some(l), Some(u)) => Ok((l.clone(), u.clone())),
            _ => Err(Error::Precondition(format!("variable {} has no finite box", sys.vars[v]))),
        })
        .collect()
}

/// Depth-first lattice search on `(1/denom)ℤ^n` with interval propagation,
/// visiting points in lexicographic order.
struct LatticeSearch<'a> {
    rows: Vec<Row>,
    sys: &'a LinearSystem,
    boxes: Vec<(Q, Q)>,
    denom: BigInt,
    limit: usize,
    found: Vec<RationalPoint>,
}

impl LatticeSearch<'_> {
    fn interval(&self, v: usize, x: &[Q]) -> Option<(BigInt, BigInt)> {
        let (mut lo, mut hi) = self.boxes[v].clone();
        for r in &self.rows {
            let a = &r.coeffs[v];
            if a.is_zero() {
                continue;
            }
            // a x_v ≤ rhs − Σ_{u<v} a_u x_u − Σ_{u>v} min over the box of a_u x_u
            let mut slack = r.rhs.clone();
            for u in 0..self.boxes.len() {
                if u == v || r.coeffs[u].is_zero() {
                    continue;
                }
                let c = &r.coeffs[u];
                if u < v {
                    slack -= c * &x[u];
                } else if c.is_positive() {
                    slack -= c * &self.boxes[u].0;
                } else {
                    slack -= c * &self.boxes[u].1;
                }
            }
            let b = slack / a;
            if a.is_positive() {
                if b < hi {
                    hi = b;
                }
            } else if b > lo {
                lo = b;
            }
        }
        let d = Q::from_integer(self.denom.clone());
        let lo = (lo * &d).ceil().to_integer();
        let hi = (hi * &d).floor().to_integer();
        (lo <= hi).then_some((lo, hi))
    }

    fn rec(&mut self, v: usize, x: &mut Vec<Q>) -> bool {
        if v == x.len() {
            if self.sys.contains(x) {
                self.found.push(RationalPoint(x.clone()));
                return self.found.len() >= self.limit;
            }
            return false;
        }
        let Some((lo, hi)) = self.interval(v, x) else { return false };
        let mut t = lo;
        while t <= hi {
            x[v] = Q::new(t.clone(), self.denom.clone());
            if self.rec(v + 1, x) {
                return true;
            }
            t += 1;
        }
        x[v] = Q::zero();
        false
    }
}

fn lattice_points(sys: &LinearSystem, denom: i64, limit: usize) -> Result<Vec<RationalPoint>> {
    let boxes = finite_boxes(sys)?;
    if boxes.iter().any(|(l, u)| l > u) {
        return Ok(Vec::new());
    }
    let mut rows = sys.le.clone();
    for r in &sys.eq {
        rows.push(r.clone());
        rows.push(r.negated());
    }
    let mut s = LatticeSearch { rows, sys, boxes, denom: BigInt::from(denom), limit, found: Vec::new() };
    let mut x = vec![Q::zero(); sys.dim()];
    s.rec(0, &mut x);
    Ok(s.found)
}

/// Lexicographically smallest integral point; every variable needs a finite box.
pub fn find_integer_point(sys: &LinearSystem) -> Result<Option<RationalPoint>> {
    Ok(lattice_points(sys, 1, 1)?.into_iter().next())
}

/// Lexicographically smallest point in `(½ℤ)^n`.
pub fn find_half_integer_point(sys: &LinearSystem) -> Result<Option<RationalPoint>> {
    Ok(lattice_points(sys, 2, 1)?.into_iter().next())
}

/// Every integral point, in lexicographic order.
pub fn integer_points(sys: &LinearSystem) -> Result<Vec<RationalPoint>> {
    lattice_points(sys, 1, usize::MAX)
}

fn alpha_name(i: usize, j: usize) -> String {
    format!("alpha{i}_{j}")
}

/// `P(μ; a)` with `ℓ = ℓ(μ)`.
#[allow(non_snake_case)]
pub fn build_P(mu: &Partition, a: &Composition) -> Result<LinearSystem> {
    build_P_with(mu, a, mu.len(), DEFAULT_HORN_CAP)
}

/// `P(μ; a)` over `α^i` of length at most `ell`, where `ℓ(μ) ≤ ell·k`, with Horn triples of
/// `[ℓk]` generated up to `cap`.
#[allow(non_snake_case)]
pub fn build_P_with(mu: &Partition, a: &Composition, ell: usize, cap: usize) -> Result<LinearSystem> {
    let n = mu.size();
    if a.size() != n {
        return Err(Error::SizeMismatch(format!("|{mu}| = {n} but the composition {:?} has size {}", a.0, a.size())));
    }
    let k = a.0.len();
    if ell * k < mu.len() {
        return Err(Error::Precondition(format!("ℓk = {} is below ℓ({mu})", ell * k)));
    }
    let r = ell * k;
    let triples = if r <= DEFAULT_HORN_CAP {
        lr_consistent_triples(r)?
    } else if r <= cap {
        lr_consistent_triples_uncapped(r)
    } else {
        return Err(Error::BudgetExceeded(format!(
            "ℓk = {r} exceeds the Horn cap {cap}; raise the cap to build this system"
        )));
    };
    let names: Vec<String> = (1..=k).flat_map(|i| (1..=ell).map(move |j| alpha_name(i, j))).collect();
    let idx = |i: usize, j: usize| (i - 1) * ell + (j - 1);
    let mut sys = LinearSystem::new(names);
    let dim = r;
    for i in 1..=k {
        let mut c = vec![Q::zero(); dim];
        for j in 1..=ell {
            c[idx(i, j)] = q(1);
            sys.restrict(idx(i, j), Some(q(0)), Some(q(a.0[i - 1] as i64)));
        }
        sys.add_eq(c, q(a.0[i - 1] as i64));
        for j in 1..ell {
            let mut c = vec![Q::zero(); dim];
            c[idx(i, j + 1)] = q(1);
            c[idx(i, j)] = q(-1);
            sys.add_le(c, q(0));
        }
    }
    let n = n as i64;
    let k_i = k as i64;
    let mut seen = BTreeSet::new();
    for t in triples.iter() {
        let mut c = vec![Q::zero(); dim];
        let mut rhs: i64 = t.j.iter().map(|&j| mu.part(j) as i64).sum();
        for (i, j) in d_set(&t.i, ell) {
            c[idx(i, j)] += q(1);
            rhs -= n * (k_i - i as i64);
        }
        for (d, _) in d_set(&t.k, ell) {
            rhs += n * (k_i - d as i64);
        }
        if seen.insert((c.clone(), rhs)) {
            sys.add_le(c, q(rhs));
        }
    }
    Ok(sys)
}

/// `P(μ; a) ∩ P(ν; a)` over `α^i` of length at most `ell`.
#[allow(non_snake_case)]
pub fn build_P_pair(mu: &Partition, nu: &Partition, a: &Composition, ell: usize) -> Result<LinearSystem> {
    build_P_with(mu, a, ell, DEFAULT_HORN_CAP)?.intersect(&build_P_with(nu, a, ell, DEFAULT_HORN_CAP)?)
}

/// Which requirement of [`build_script_P`] failed.
pub fn script_p_regime(mu: &Partition, nu: &Partition, a: &Composition) -> Result<()> {
    let n = mu.size();
    if nu.size() != n || a.size() != n {
        return Err(Error::SizeMismatch(format!("{mu}, {nu}, {:?}", a.0)));
    }
    if mu.len() > 2 || nu.len() > 3 || a.0.len() != 3 {
        return Err(Error::Precondition(format!(
            "need ℓ({mu}) ≤ 2, ℓ({nu}) ≤ 3 and three exponents, got {}",
            a.0.len()
        )));
    }
    if nu.first() >= mu.first() {
        return Err(Error::Precondition(format!("need ν_1 < μ_1, got ν = {nu}, μ = {mu}")));
    }
    Ok(())
}

/// The three-variable polytope in `x = α^1_1, y = α^2_1, z = α^3_1` for
/// two-row `μ`, three-row `ν` with `ν_1 < μ_1`.
#[allow(non_snake_case)]
pub fn build_script_P(mu: &Partition, nu: &Partition, a: &Composition) -> Result<LinearSystem> {
    script_p_regime(mu, nu, a)?;
    let (m1, m2) = (q(mu.part(1) as i64), q(mu.part(2) as i64));
    let (n1, n2, n3) = (q(nu.part(1) as i64), q(nu.part(2) as i64), q(nu.part(3) as i64));
    let av: Vec<Q> = a.0.iter().map(|&x| q(x as i64)).collect();
    let mut sys = LinearSystem::new(["x", "y", "z"]);
    let e = |c: [i64; 3]| c.iter().map(|&x| q(x)).collect::<Vec<Q>>();
    let units = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for i in 0..3 {
        // (1)–(3)
        let ai = &av[i];
        for lo in [ai - &n2, ai - &m2, ai / q(2)] {
            sys.add_ge(e(units[i]), lo);
        }
        sys.add_le(e(units[i]), ai.clone());
        sys.add_le(e(units[i]), n1.clone());
        sys.restrict(i, Some(q(0)), Some(ai.clone()));
    }
    // (4)–(6)
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut c = [0; 3];
        c[i] = 1;
        c[j] = 1;
        sys.add_ge(e(c), n3.clone());
        sys.add_ge(e(c), &av[i] + &av[j] - &n1);
    }
    // (7)
    sys.add_ge(e([1, 1, 1]), m1);
    // (8)–(10)
    let low = if n2 > m2 { n2.clone() } else { m2.clone() };
    for (i, c) in [[-1, 1, 1], [1, -1, 1], [1, 1, -1]].into_iter().enumerate() {
        sys.add_ge(e(c), &low - &av[i]);
        sys.add_le(e(c), &n1 + &n2 - &av[i]);
    }
    Ok(sys)
}

/// Checks `𝒫(μ,ν,c) ≠ ∅` for every integral convex combination `c` of the
/// samples with weights in `(1/d)ℤ`, `d ≤ 4`.
pub fn feasibility_region_convex_check(mu: &Partition, nu: &Partition, samples: &[Composition]) -> Result<bool> {
    for s in samples {
        if !lp_feasible(&build_script_P(mu, nu, s)?) {
            return Err(Error::Precondition(format!("sample {:?} gives an empty polytope", s.0)));
        }
    }
    for d in 1..=4u32 {
        for w in crate::partition::compositions(d, samples.len()) {
            let mut c = [0u32; 3];
            let mut ok = true;
            for i in 0..3 {
                let num: u32 = samples.iter().zip(&w.0).map(|(s, &t)| s.0[i] * t).sum();
                if num % d != 0 {
                    ok = false;
                    break;
                }
                c[i] = num / d;
            }
            if ok && !lp_feasible(&build_script_P(mu, nu, &Composition(c.to_vec()))?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn trivial_systems() {
        let s = LinearSystem::new(["x"]);
        assert!(lp_feasible(&s) && simplex_feasible(&s));
        let mut s = LinearSystem::new(["x"]);
        s.add_le(vec![q(0)], q(-1));
        assert!(!lp_feasible(&s) && !simplex_feasible(&s));
    }

    #[test]
    fn fm_and_simplex_agree() {
        let mut s = LinearSystem::new(["x", "y"]);
        s.add_ge(vec![q(1), q(1)], q(3));
        s.add_le(vec![q(1), q(-1)], q(0));
        s.add_le(vec![q(2), q(0)], q(3));
        assert!(fourier_motzkin_feasible(&s));
        let p = simplex_point(&s).unwrap();
        assert!(s.contains(&p.0));
        s.add_le(vec![q(0), q(1)], q_frac(3, 2));
        assert!(fourier_motzkin_feasible(&s) && simplex_feasible(&s));
        s.add_le(vec![q(1), q(0)], q(1));
        assert!(!fourier_motzkin_feasible(&s) && !simplex_feasible(&s));
    }

    #[test]
    fn half_integer_search() {
        let mut s = LinearSystem::new(["x"]);
        s.restrict(0, Some(q_frac(1, 3)), Some(q_frac(2, 3)));
        assert!(lp_feasible(&s));
        assert_eq!(find_integer_point(&s).unwrap(), None);
        assert_eq!(find_half_integer_point(&s).unwrap(), Some(RationalPoint(vec![q_frac(1, 2)])));
        assert!(find_integer_point(&LinearSystem::new(["x"])).is_err());
    }

    #[test]
    fn p_three_ones() {
        let sys = build_P(&part![3], &Composition(vec![1, 1, 1])).unwrap();
        let pts = integer_points(&sys).unwrap();
        assert_eq!(pts, vec![RationalPoint(vec![q(1), q(1), q(1)])]);
        let sys = build_P(&part![2, 1], &Composition(vec![3])).unwrap();
        assert_eq!(integer_points(&sys).unwrap(), vec![RationalPoint(vec![q(2), q(1)])]);
    }

    #[test]
    fn script_p_example() {
        let sys = build_script_P(&part![7, 6], &part![5, 4, 4], &Composition(vec![5, 4, 4])).unwrap();
        assert!(lp_feasible(&sys));
        assert!(find_integer_point(&sys).unwrap().is_some());
        assert!(matches!(
            build_script_P(&part![7, 6], &part![5, 4, 4], &Composition(vec![5, 4])),
            Err(Error::SizeMismatch(_))
        ));
        assert!(matches!(
            build_script_P(&part![4, 3], &part![5, 1, 1], &Composition(vec![3, 2, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn json_and_lp() {
        let sys = build_script_P(&part![7, 6], &part![5, 4, 4], &Composition(vec![5, 4, 4])).unwrap();
        let j = sys.to_json();
        assert_eq!(j["le"][2]["rhs"], "-5/2");
        assert_eq!(LinearSystem::from_json(&j).unwrap(), sys);
        let lp = sys.to_lp();
        assert!(lp.contains(" c3: - 2 x <= -5") && lp.contains(" 0 <= x <= 5"));
    }
}
