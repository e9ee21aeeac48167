//! Python bindings for `kronsnp`. Partitions cross the boundary as sequences of ints.

use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyTuple};
use serde_json::Value;

use kronsnp::character::character as chi;
use kronsnp::horn::{
    horn_positive as horn, kron_necessary_general as general, kron_necessary_two_row as two_row,
    lr_consistent_triples as triples,
};
use kronsnp::kostka::kostka as kostka_number;
use kronsnp::kronecker::{monomial_coeff_multilr as multilr_coeff, monomial_support as support};
use kronsnp::lr::{lr_coeff as lr, multi_lr as mlr, MultiLrInstance};
use kronsnp::oracle::{dominance_maximal_terms, kron_coeff_oracle, kron_product as product};
use kronsnp::plethysm::{plethysm_full, plethysm_max_monomial as max_monomial};
use kronsnp::polytopes::{build_script_P, find_integer_point, lp_feasible};
use kronsnp::rosas::{rosas_kron_tworow_pair, rosas_kron_tworow_triple};
use kronsnp::snp::{schur_support, snp_check_kron as snp_kron, snp_verdict};
use kronsnp::verify::{run_suite, VerifyOptions};
use kronsnp::{Composition, Error, SchurExpansion};

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(m) => PyTimeoutError::new_err(m),
        Error::Fixture(m) => PyRuntimeError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn part(v: Vec<u32>) -> PyResult<kronsnp::Partition> {
    kronsnp::Partition::new(v).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let items = a.iter().map(|x| json_to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, json_to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn expansion_to_py<'py>(py: Python<'py>, e: &SchurExpansion) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (p, c) in e.iter() {
        d.set_item(PyTuple::new(py, p.parts())?, c.clone())?;
    }
    Ok(d)
}

/// Integer partition with weakly decreasing positive parts.
#[pyclass(name = "Partition", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(kronsnp::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        Ok(PyPartition(part(parts)?))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyPartition).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.0.parts().to_vec()
    }

    fn size(&self) -> u32 {
        self.0.size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn dominates(&self, other: &PyPartition) -> bool {
        self.0.dominates(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// `g(λ, μ, ν)` from the character table.
#[pyfunction]
fn kron_coeff(py: Python<'_>, lam: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<Py<PyAny>> {
    let g = kron_coeff_oracle(&part(lam)?, &part(mu)?, &part(nu)?).map_err(err)?;
    Ok(g.into_pyobject(py)?.into_any().unbind())
}

/// `s_λ ∗ s_μ` as `{parts: coefficient}`.
#[pyfunction]
fn kron_product<'py>(py: Python<'py>, lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    let e = product(&part(lam)?, &part(mu)?).map_err(err)?;
    expansion_to_py(py, &e)
}

/// Dominance-maximal terms of `s_λ ∗ s_μ`.
#[pyfunction]
fn kron_maximal_terms(lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
    let e = product(&part(lam)?, &part(mu)?).map_err(err)?;
    Ok(dominance_maximal_terms(&e).into_iter().map(|p| p.into_parts()).collect())
}

#[pyfunction]
fn lr_coeff(py: Python<'_>, lam: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<Py<PyAny>> {
    Ok(lr(&part(lam)?, &part(mu)?, &part(nu)?).into_pyobject(py)?.into_any().unbind())
}

#[pyfunction]
fn multi_lr(py: Python<'_>, target: Vec<u32>, factors: Vec<Vec<u32>>) -> PyResult<Py<PyAny>> {
    let inst = MultiLrInstance { target: part(target)?, factors: factors.into_iter().map(part).collect::<PyResult<_>>()? };
    Ok(mlr(&inst).into_pyobject(py)?.into_any().unbind())
}

#[pyfunction]
fn kostka(py: Python<'_>, lam: Vec<u32>, weight: Vec<u32>) -> PyResult<Py<PyAny>> {
    Ok(kostka_number(&part(lam)?, &weight).into_pyobject(py)?.into_any().unbind())
}

#[pyfunction]
fn character(py: Python<'_>, lam: Vec<u32>, rho: Vec<u32>) -> PyResult<Py<PyAny>> {
    Ok(chi(&part(lam)?, &part(rho)?).map_err(err)?.into_pyobject(py)?.into_any().unbind())
}

/// All exponent vectors, in decreasing order, of `s_λ ∗ s_μ` in `k` variables.
#[pyfunction]
fn monomial_support(lam: Vec<u32>, mu: Vec<u32>, k: usize) -> PyResult<Vec<Vec<u32>>> {
    let s = support(&part(lam)?, &part(mu)?, k).map_err(err)?;
    let mut pts = s.expanded();
    pts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(pts)
}

#[pyfunction]
fn monomial_coeff(py: Python<'_>, mu: Vec<u32>, nu: Vec<u32>, a: Vec<u32>) -> PyResult<Py<PyAny>> {
    let c = multilr_coeff(&part(mu)?, &part(nu)?, &Composition(a)).map_err(err)?;
    Ok(c.into_pyobject(py)?.into_any().unbind())
}

/// Saturation report for `s_λ ∗ s_μ` in `k` variables.
#[pyfunction]
fn snp_check_kron<'py>(py: Python<'py>, lam: Vec<u32>, mu: Vec<u32>, k: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = snp_kron(&part(lam)?, &part(mu)?, k).map_err(err)?;
    json_to_py(py, &r.to_json())
}

#[pyfunction]
fn schur_is_saturated(lam: Vec<u32>, k: usize) -> PyResult<bool> {
    Ok(snp_verdict(&schur_support(&part(lam)?, k)).saturated)
}

#[pyfunction]
fn horn_positive(lam: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<bool> {
    horn(&lam, &mu, &nu).map_err(err)
}

/// LR-consistent triples `(I, J, K)` over `[r]`.
#[pyfunction]
fn lr_consistent_triples(r: usize) -> PyResult<Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>> {
    Ok(triples(r).map_err(err)?.iter().map(|t| (t.i.clone(), t.j.clone(), t.k.clone())).collect())
}

#[pyfunction]
fn kron_necessary_general(lam: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<bool> {
    general(&part(lam)?, &part(mu)?, &part(nu)?).map_err(err)
}

#[pyfunction]
fn kron_necessary_two_row(lam: Vec<u32>, mu: Vec<u32>, nu: Vec<u32>) -> PyResult<bool> {
    two_row(&part(lam)?, &part(mu)?, &part(nu)?).map_err(err)
}

/// Two-row closed forms: the triple formula when all three have two rows, else the pair formula.
#[pyfunction]
fn rosas(py: Python<'_>, beta: Vec<u32>, gamma: Vec<u32>, alpha: Vec<u32>) -> PyResult<Py<PyAny>> {
    let (b, g, a) = (part(beta)?, part(gamma)?, part(alpha)?);
    let v = if a.len() <= 2 && b.len() <= 2 && g.len() <= 2 {
        rosas_kron_tworow_triple(&a, &b, &g)
    } else if b.part(2) >= g.part(2) {
        rosas_kron_tworow_pair(&b, &g, &a)
    } else {
        rosas_kron_tworow_pair(&g, &b, &a)
    }
    .map_err(err)?;
    Ok(v.into_pyobject(py)?.into_any().unbind())
}

/// Whether the three-variable polytope is nonempty, with its least integer point.
#[pyfunction]
fn polytope(mu: Vec<u32>, nu: Vec<u32>, a: Vec<u32>) -> PyResult<(bool, Option<Vec<String>>)> {
    let sys = build_script_P(&part(mu)?, &part(nu)?, &Composition(a)).map_err(err)?;
    let pt = find_integer_point(&sys).map_err(err)?;
    Ok((lp_feasible(&sys), pt.map(|p| p.0.iter().map(|x| x.to_string()).collect())))
}

/// `s_λ[s_μ]` as `{parts: coefficient}`.
#[pyfunction]
fn plethysm<'py>(py: Python<'py>, lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Bound<'py, PyDict>> {
    let e = plethysm_full(&part(lam)?, &part(mu)?).map_err(err)?;
    expansion_to_py(py, &e)
}

#[pyfunction]
fn plethysm_max_monomial(lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(max_monomial(&part(lam)?, &part(mu)?).map_err(err)?.0)
}

/// Runs a verification suite and returns its report.
#[pyfunction]
#[pyo3(signature = (suite, n=None, k=None, p=None))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    n: Option<u32>,
    k: Option<usize>,
    p: Option<u32>,
) -> PyResult<Bound<'py, PyAny>> {
    let opts = VerifyOptions { n, k, p, ..Default::default() };
    let r = run_suite(suite, &opts).map_err(err)?;
    json_to_py(py, &r.to_json())
}

#[pymodule]
fn kronsnp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(kron_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(kron_product, m)?)?;
    m.add_function(wrap_pyfunction!(kron_maximal_terms, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(multi_lr, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_support, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(snp_check_kron, m)?)?;
    m.add_function(wrap_pyfunction!(schur_is_saturated, m)?)?;
    m.add_function(wrap_pyfunction!(horn_positive, m)?)?;
    m.add_function(wrap_pyfunction!(lr_consistent_triples, m)?)?;
    m.add_function(wrap_pyfunction!(kron_necessary_general, m)?)?;
    m.add_function(wrap_pyfunction!(kron_necessary_two_row, m)?)?;
    m.add_function(wrap_pyfunction!(rosas, m)?)?;
    m.add_function(wrap_pyfunction!(polytope, m)?)?;
    m.add_function(wrap_pyfunction!(plethysm, m)?)?;
    m.add_function(wrap_pyfunction!(plethysm_max_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
