//! Python bindings: the `gessel_py` extension module.
//!
//! Exposes exact polynomials, the generating families, gamma tables, the
//! verification suites and the permutation statistics. All coefficients
//! cross the boundary as Python ints (arbitrary precision).

use std::str::FromStr;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use gessel_core::exactpoly::Polynomial as CorePolynomial;
use gessel_core::gammalab::{self, BasisSpec};
use gessel_core::genpoly::{self, FamilyKind, Method, PolyFamily, Tau};
use gessel_core::permstat::{InversionSequence, Permutation, SignedPermutation};
use gessel_core::verify::{self, SuiteOptions, SuiteSelector};

fn value_error<E: std::fmt::Display>(err: E) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// A sparse multivariate polynomial with exact integer coefficients.
#[pyclass(frozen)]
#[derive(Clone, PartialEq, Eq)]
struct Polynomial {
    inner: CorePolynomial,
}

#[pymethods]
impl Polynomial {
    /// Variable names in canonical order.
    fn vars(&self) -> Vec<String> {
        self.inner.vars().names().to_vec()
    }

    /// Terms as (exponent_vector, coefficient) pairs in lexicographic
    /// exponent order.
    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.inner
            .terms()
            .map(|(e, c)| (e.to_vec(), c.clone()))
            .collect()
    }

    /// Coefficient of the given exponent vector (0 when absent).
    fn coeff(&self, exponents: Vec<u32>) -> PyResult<BigInt> {
        self.inner.coeff(&exponents).map_err(value_error)
    }

    /// Value at all variables = 1 (the total coefficient mass).
    fn eval_ones(&self) -> BigInt {
        self.inner.eval_ones()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    /// Serializes to the JSON wire format.
    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    /// Parses the JSON wire format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Polynomial> {
        CorePolynomial::from_json_str(text)
            .map(|inner| Polynomial { inner })
            .map_err(value_error)
    }

    fn __add__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        self.inner
            .try_add(&other.inner)
            .map(|inner| Polynomial { inner })
            .map_err(value_error)
    }

    fn __sub__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        self.inner
            .try_sub(&other.inner)
            .map(|inner| Polynomial { inner })
            .map_err(value_error)
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        self.inner
            .try_mul(&other.inner)
            .map(|inner| Polynomial { inner })
            .map_err(value_error)
    }

    fn __eq__(&self, other: &Polynomial) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

/// Generates one polynomial family member.
///
/// family: eulerian, eulerian-homog, two-sided, two-sided-homog,
/// two-sided-tau, type-B, type-B-tau, reversal-homog, cyclic, invseq.
/// method: "brute" or "rec" (defaults to rec when the family has a
/// recurrence). tau: permutation word for the tau families.
#[pyfunction]
#[pyo3(signature = (family, n, method=None, tau=None, workers=1))]
fn gen(
    family: &str,
    n: u32,
    method: Option<&str>,
    tau: Option<&str>,
    workers: usize,
) -> PyResult<Polynomial> {
    let kind = FamilyKind::from_str(family).map_err(value_error)?;
    let method = match method {
        Some(text) => Method::from_str(text).map_err(value_error)?,
        None if kind.has_rec() => Method::Rec,
        None => Method::Brute,
    };
    let tau = match tau {
        None => None,
        Some(text) if matches!(kind, FamilyKind::TypeBTau) => Some(Tau::Signed(
            SignedPermutation::from_str(text).map_err(value_error)?,
        )),
        Some(text) => Some(Tau::Unsigned(
            Permutation::from_str(text).map_err(value_error)?,
        )),
    };
    let family = PolyFamily::new(kind, n, tau).map_err(value_error)?;
    genpoly::generate(&family, method, workers.max(1))
        .map(|inner| Polynomial { inner })
        .map_err(value_error)
}

/// One (n, i, j, gamma) tuple of the triangle; j is None for the
/// univariate flavor.
type GammaEntry = (u32, u32, Option<u32>, BigInt);

/// The gamma coefficient triangle for n = 1..=n_max as a list of
/// (n, i, j, gamma) tuples; j is None for the univariate flavor.
#[pyfunction]
#[pyo3(signature = (n_max, method="rec", flavor="bivariate"))]
fn gamma_table(n_max: u32, method: &str, flavor: &str) -> PyResult<Vec<GammaEntry>> {
    let mut out = Vec::new();
    match (flavor, method) {
        ("bivariate", "rec") => {
            for row in gammalab::gamma_bivariate_rec(n_max).map_err(value_error)? {
                for (&(i, j), value) in &row.entries {
                    out.push((row.n, i, Some(j), value.clone()));
                }
            }
        }
        ("bivariate", "expand") => {
            for n in 1..=n_max {
                let poly = genpoly::rec_four_variable(n).map_err(value_error)?;
                let entries = gammalab::expand_gamma(&poly, &BasisSpec::type_a_four_variable(n))
                    .map_err(value_error)?;
                for (&(i, j), value) in &entries {
                    out.push((n, i, Some(j), value.clone()));
                }
            }
        }
        ("univariate", "rec") => {
            for row in gammalab::gamma_univariate_rec(n_max) {
                for (&i, value) in &row.entries {
                    out.push((row.n, i, None, value.clone()));
                }
            }
        }
        ("univariate", "expand") => {
            for n in 1..=n_max {
                let poly = genpoly::rec_eulerian_homog(n).map_err(value_error)?;
                let entries = gammalab::expand_gamma_univariate(&poly, n).map_err(value_error)?;
                for (&i, value) in &entries {
                    out.push((n, i, None, value.clone()));
                }
            }
        }
        _ => {
            return Err(PyValueError::new_err(
                "flavor must be bivariate or univariate; method must be rec or expand",
            ))
        }
    }
    Ok(out)
}

/// Runs verification checks and returns the reports as a JSON array
/// string. selector: "all", "theorems", "conjectures" or a single check
/// name such as "check_invseq".
#[pyfunction]
#[pyo3(signature = (selector="all", max_n=None, workers=1))]
fn run_checks(selector: &str, max_n: Option<u32>, workers: usize) -> PyResult<String> {
    let sel = match selector {
        "all" => SuiteSelector::All,
        "theorems" => SuiteSelector::Theorems,
        "conjectures" => SuiteSelector::Conjectures,
        name => SuiteSelector::Single(name.to_string()),
    };
    let reports = verify::run_suite(
        &sel,
        &SuiteOptions {
            max_n,
            workers: workers.max(1),
        },
    )
    .map_err(value_error)?;
    Ok(verify::reports_to_json(&reports))
}

/// Descent count of a permutation word ("3142" or "10,3,1,...").
#[pyfunction]
fn des(word: &str) -> PyResult<u32> {
    Ok(Permutation::from_str(word).map_err(value_error)?.des())
}

/// Descent count of the inverse permutation.
#[pyfunction]
fn ides(word: &str) -> PyResult<u32> {
    Ok(Permutation::from_str(word).map_err(value_error)?.ides())
}

/// Cyclic descent count.
#[pyfunction]
fn cdes(word: &str) -> PyResult<u32> {
    Ok(Permutation::from_str(word).map_err(value_error)?.cdes())
}

/// Type B descent count of a signed word like "-2,1".
#[pyfunction]
fn des_b(word: &str) -> PyResult<u32> {
    Ok(SignedPermutation::from_str(word)
        .map_err(value_error)?
        .des_b())
}

/// The inversion sequence of a permutation word.
#[pyfunction]
fn inversion_sequence(word: &str) -> PyResult<Vec<u32>> {
    Ok(Permutation::from_str(word)
        .map_err(value_error)?
        .to_inversion_sequence()
        .entries()
        .to_vec())
}

/// (ascents, distinct entries) of an inversion sequence.
#[pyfunction]
fn invseq_stats(entries: Vec<u32>) -> PyResult<(u32, u32)> {
    let seq = InversionSequence::new(entries).map_err(value_error)?;
    Ok((seq.asc_i(), seq.dst()))
}

#[pymodule]
fn gessel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(gen, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    m.add_function(wrap_pyfunction!(des, m)?)?;
    m.add_function(wrap_pyfunction!(ides, m)?)?;
    m.add_function(wrap_pyfunction!(cdes, m)?)?;
    m.add_function(wrap_pyfunction!(des_b, m)?)?;
    m.add_function(wrap_pyfunction!(inversion_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(invseq_stats, m)?)?;
    Ok(())
}
