//! Python bindings: catalog varieties, point scans, fibers, sections and the ledger.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use keyvariety_core::algebra::{parse_point, parse_poly, SmallPrime};
use keyvariety_core::catalog::{build_case, rank_locus, CaseId, VarietySpec};
use keyvariety_core::cli::{parse_config_str, run_with_threads};
use keyvariety_core::incidence::{fiber_over, FiberCase};
use keyvariety_core::invariants::{self, ScanOptions};
use keyvariety_core::numerology::{shipped_ledger, verify_ledger as verify};
use keyvariety_core::sections::{cut as cut_spec, SectionSpec};

create_exception!(keyvariety, KeyvarietyError, PyValueError);

fn err(e: keyvariety_core::Error) -> PyErr {
    KeyvarietyError::new_err(e.to_string())
}

fn prime(p: u64) -> PyResult<SmallPrime> {
    SmallPrime::new(p).map_err(err)
}

/// A projective variety from the catalog, possibly cut by linear forms.
#[pyclass(module = "keyvariety", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Variety {
    spec: VarietySpec,
}

#[pymethods]
impl Variety {
    #[new]
    fn new(case: &str) -> PyResult<Self> {
        Ok(Variety { spec: build_case(CaseId::parse(case).map_err(err)?) })
    }

    #[getter]
    fn case_id(&self) -> String {
        self.spec.case_id.clone()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.spec.vars.to_vec()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.spec.ambient_dim
    }

    #[getter]
    fn expected_dim(&self) -> usize {
        self.spec.expected_dim
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.spec.generators.iter().map(|g| g.to_string()).collect()
    }

    /// Declared planes as `(name, contained)` pairs.
    #[getter]
    fn planes(&self) -> Vec<(String, bool)> {
        self.spec.planes.iter().map(|p| (p.name.clone(), p.contained)).collect()
    }

    fn dump(&self) -> String {
        self.spec.dump()
    }

    #[pyo3(signature = (p, budget = None))]
    fn count_points(&self, py: Python<'_>, p: u64, budget: Option<u64>) -> PyResult<u64> {
        let p = prime(p)?;
        let mut opts = ScanOptions { sample_cap: 0, ..ScanOptions::default() };
        if let Some(b) = budget {
            opts.budget = b;
        }
        let spec = &self.spec;
        py.detach(|| invariants::count_points(spec, p, &opts)).map(|r| r.matched).map_err(err)
    }

    /// Floor-rule estimate per prime plus the consensus, `None` when the primes disagree.
    #[pyo3(signature = (primes = vec![2, 3]))]
    fn estimate_dimension(&self, py: Python<'_>, primes: Vec<u64>) -> PyResult<(Option<usize>, BTreeMap<u64, u64>)> {
        let primes = primes.into_iter().map(prime).collect::<PyResult<Vec<_>>>()?;
        let spec = &self.spec;
        let opts = ScanOptions { sample_cap: 0, ..ScanOptions::default() };
        let est = py.detach(|| invariants::estimate_dimension(spec, &primes, &opts)).map_err(err)?;
        Ok((est.estimated_dim.filter(|_| est.consistent), est.counts))
    }

    /// Returns `(points, singular, rank_locus_matches)`; the last is `None` without a rank locus.
    fn singular_scan(&self, py: Python<'_>, p: u64) -> PyResult<(u64, u64, Option<bool>)> {
        let p = prime(p)?;
        let locus = CaseId::parse(&self.spec.case_id).ok().and_then(rank_locus);
        let spec = &self.spec;
        let r = py
            .detach(|| invariants::singular_scan(spec, locus.as_ref(), p, &ScanOptions::default()))
            .map_err(err)?;
        Ok((r.total_on_variety, r.jacobian_singular, locus.map(|_| r.sets_equal)))
    }

    #[pyo3(signature = (forms, contains = Vec::new()))]
    fn cut(&self, forms: Vec<String>, contains: Vec<String>) -> PyResult<Variety> {
        let forms = forms.iter().map(|f| parse_poly(f, &self.spec.vars)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let spec = cut_spec(&self.spec, &SectionSpec::pinned(forms, contains)).map_err(err)?;
        Ok(Variety { spec })
    }

    /// Cuts by `count` seeded forms, independent mod `p`, vanishing on the named planes.
    #[pyo3(signature = (count, seed, p, contains = Vec::new()))]
    fn seeded_cut(&self, count: usize, seed: u64, p: u64, contains: Vec<String>) -> PyResult<Variety> {
        let names: Vec<&str> = contains.iter().map(String::as_str).collect();
        let section = SectionSpec::seeded(&self.spec, count, seed, prime(p)?, &names).map_err(err)?;
        Ok(Variety { spec: cut_spec(&self.spec, &section).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Variety({:?}, dim={}, P^{})", self.spec.case_id, self.spec.expected_dim, self.spec.ambient_dim)
    }
}

#[pyfunction]
fn cases() -> Vec<&'static str> {
    CaseId::ALL.iter().map(|c| c.as_str()).collect()
}

/// Fiber of the incidence resolution over a target point `a:b:...`; returns `(count, shape)`.
#[pyfunction]
fn fiber(py: Python<'_>, case: &str, p: u64, point: &str) -> PyResult<(u64, String)> {
    let p = prime(p)?;
    let fc = FiberCase::for_case(CaseId::parse(case).map_err(err)?).map_err(err)?;
    let t = parse_point(point, p).map_err(err)?;
    let r = py.detach(|| fiber_over(fc, &t, p)).map_err(err)?;
    Ok((r.fiber_count, r.shape.to_string()))
}

/// Checks the shipped identity ledger; maps `case/section` to whether it holds.
#[pyfunction]
#[pyo3(signature = (case = None))]
fn verify_ledger(case: Option<&str>) -> PyResult<BTreeMap<String, bool>> {
    let out = verify(&shipped_ledger(), case).map_err(err)?;
    Ok(out.iter().map(|s| (format!("{}/{}", s.case, s.name), s.holds())).collect())
}

/// Runs a config given as text and returns the canonical JSON report.
#[pyfunction]
#[pyo3(signature = (config, threads = 1))]
fn run(py: Python<'_>, config: &str, threads: usize) -> PyResult<String> {
    let cfg = parse_config_str(config).map_err(err)?;
    py.detach(|| run_with_threads(&cfg, threads)).map(|r| r.to_canonical_string()).map_err(err)
}

#[pyfunction]
fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    invariants::gaussian_binomial(n, k, q)
}

#[pymodule]
fn keyvariety(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("KeyvarietyError", m.py().get_type::<KeyvarietyError>())?;
    m.add_class::<Variety>()?;
    m.add_function(wrap_pyfunction!(cases, m)?)?;
    m.add_function(wrap_pyfunction!(fiber, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ledger, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(gaussian_binomial, m)?)?;
    Ok(())
}
