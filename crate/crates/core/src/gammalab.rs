//! The Gessel gamma basis.
//!
//! Bivariate basis elements are `(st)^i (s+t)^j (1+st)^(m-2i-j)`, the
//! four-variable ones `(stxy)^i (st+xy)^j (tx+sy)^(m-2i-j)`, both over the
//! index region `i >= i_min`, `j >= 0`, `2i + j <= m`. Expansion of a
//! polynomial in a basis is an exact linear solve over all monomial
//! constraints; rank problems and non-membership surface as errors, never
//! as silently adjusted output.
//!
//! Gamma entries are plain integers that may be negative: nonnegativity is
//! the conjecture under test, so it is only ever a reported finding.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactpoly::{solve_exact_linear, Polynomial, SolveError, VarSet};
use crate::genpoly::{self, GenError};
use crate::report::{CheckClass, VerificationReport};

/// Brute-force cross-check limit inside [`check_gessel`].
pub const GESSEL_ORACLE_LIMIT: u32 = 8;

#[derive(Debug, Error)]
pub enum GammaError {
    #[error("index (i={i}, j={j}) outside the basis region (i >= {i_min}, 2i + j <= {m})")]
    IndexOutOfRegion { i: u32, j: u32, i_min: u32, m: u32 },
    #[error("polynomial is not in the span of the basis")]
    NotInSpan,
    #[error("basis elements are linearly dependent over the constraint system")]
    BasisDependent,
    #[error("expansion coefficient gamma({i},{j}) = {value} is not an integer")]
    NonIntegerCoefficient { i: u32, j: u32, value: String },
    #[error("expected polynomial over [{expected}], got [{got}]")]
    WrongVariables { expected: String, got: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Gen(#[from] GenError),
}

/// Which pair basis a [`BasisSpec`] describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisFlavor {
    Bivariate,
    FourVariable,
}

/// A gamma basis: flavor, top exponent `m`, and the smallest allowed `i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisSpec {
    pub flavor: BasisFlavor,
    pub m: u32,
    pub i_min: u32,
}

impl BasisSpec {
    /// The bivariate basis for the two-sided polynomial of size `n`
    /// (`m = n + 1`, `i >= 1`).
    pub fn type_a_bivariate(n: u32) -> Self {
        BasisSpec {
            flavor: BasisFlavor::Bivariate,
            m: n + 1,
            i_min: 1,
        }
    }

    /// The four-variable basis for the homogenized two-sided polynomial of
    /// size `n` (`m = n + 1`, `i >= 1`).
    pub fn type_a_four_variable(n: u32) -> Self {
        BasisSpec {
            flavor: BasisFlavor::FourVariable,
            m: n + 1,
            i_min: 1,
        }
    }

    /// Experimental basis for the type B polynomial of size `n`
    /// (`m = n`, `i >= 0`). The basis shape is not settled by any known
    /// result; expansion failures are findings, not bugs.
    pub fn type_b_experimental(n: u32) -> Self {
        BasisSpec {
            flavor: BasisFlavor::Bivariate,
            m: n,
            i_min: 0,
        }
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        i >= self.i_min && 2 * i + j <= self.m
    }

    /// Index region in (i, j) lexicographic order.
    pub fn region(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        let mut i = self.i_min;
        while 2 * i <= self.m {
            for j in 0..=(self.m - 2 * i) {
                out.push((i, j));
            }
            i += 1;
        }
        out
    }

    fn vars(&self) -> VarSet {
        match self.flavor {
            BasisFlavor::Bivariate => VarSet::st(),
            BasisFlavor::FourVariable => VarSet::stxy(),
        }
    }
}

/// The fully expanded basis element for indices `(i, j)`.
pub fn basis_element(spec: &BasisSpec, i: u32, j: u32) -> Result<Polynomial, GammaError> {
    if !spec.contains(i, j) {
        return Err(GammaError::IndexOutOfRegion {
            i,
            j,
            i_min: spec.i_min,
            m: spec.m,
        });
    }
    let k = spec.m - 2 * i - j;
    let vars = spec.vars();
    let (base, mid, top) = match spec.flavor {
        BasisFlavor::Bivariate => (
            // st, s + t, 1 + st
            Polynomial::monomial(vars.clone(), &[1, 1], 1).expect("length"),
            Polynomial::from_terms(vars.clone(), [(vec![1, 0], 1), (vec![0, 1], 1)])
                .expect("length"),
            Polynomial::from_terms(vars.clone(), [(vec![0, 0], 1), (vec![1, 1], 1)])
                .expect("length"),
        ),
        BasisFlavor::FourVariable => (
            // stxy, st + xy, tx + sy
            Polynomial::monomial(vars.clone(), &[1, 1, 1, 1], 1).expect("length"),
            Polynomial::from_terms(vars.clone(), [(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], 1)])
                .expect("length"),
            Polynomial::from_terms(vars.clone(), [(vec![0, 1, 1, 0], 1), (vec![1, 0, 0, 1], 1)])
                .expect("length"),
        ),
    };
    Ok(&(&base.pow(i) * &mid.pow(j)) * &top.pow(k))
}

/// Expands `p` exactly in the basis, returning the coefficient of each
/// region index with nonzero value. The solve covers every monomial
/// constraint; the result is re-verified by expansion before returning.
pub fn expand_gamma(
    p: &Polynomial,
    spec: &BasisSpec,
) -> Result<BTreeMap<(u32, u32), BigInt>, GammaError> {
    let expected = spec.vars();
    if *p.vars() != expected {
        return Err(GammaError::WrongVariables {
            expected: expected.names().join(","),
            got: p.vars().names().join(","),
        });
    }
    let region = spec.region();
    let basis: Vec<Polynomial> = region
        .iter()
        .map(|&(i, j)| basis_element(spec, i, j))
        .collect::<Result<_, _>>()?;

    let mut monomials: BTreeSet<Vec<u32>> = BTreeSet::new();
    for b in &basis {
        monomials.extend(b.terms().map(|(e, _)| e.to_vec()));
    }
    monomials.extend(p.terms().map(|(e, _)| e.to_vec()));

    let mut matrix = Vec::with_capacity(monomials.len());
    let mut rhs = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        let row: Vec<BigInt> = basis
            .iter()
            .map(|b| b.coeff(mono).expect("monomial length matches"))
            .collect();
        matrix.push(row);
        rhs.push(p.coeff(mono).expect("monomial length matches"));
    }

    let solution = solve_exact_linear(&matrix, &rhs).map_err(|e| match e {
        SolveError::Inconsistent => GammaError::NotInSpan,
        SolveError::RankDeficient => GammaError::BasisDependent,
        SolveError::Shape(msg) => GammaError::Internal(msg),
    })?;

    let mut entries = BTreeMap::new();
    for (&(i, j), value) in region.iter().zip(solution.entries()) {
        if !value.is_integer() {
            return Err(GammaError::NonIntegerCoefficient {
                i,
                j,
                value: value.to_string(),
            });
        }
        let value = value.to_integer();
        if !value.is_zero() {
            entries.insert((i, j), value);
        }
    }

    // Residual re-verification by expansion.
    let mut rebuilt = Polynomial::zero(p.vars().clone());
    for (&(i, j), value) in &entries {
        rebuilt = &rebuilt + &basis_element(spec, i, j)?.scale(value.clone());
    }
    if rebuilt != *p {
        return Err(GammaError::Internal(
            "expansion residual is nonzero after re-verification".to_string(),
        ));
    }
    Ok(entries)
}

/// Expands a homogeneous polynomial in `(t, y)` in the univariate gamma
/// basis `(ty)^i (t+y)^(n+1-2i)`, `1 <= i <= (n+1)/2`.
pub fn expand_gamma_univariate(
    p: &Polynomial,
    n: u32,
) -> Result<BTreeMap<u32, BigInt>, GammaError> {
    let expected = VarSet::ty();
    if *p.vars() != expected {
        return Err(GammaError::WrongVariables {
            expected: expected.names().join(","),
            got: p.vars().names().join(","),
        });
    }
    let m = n + 1;
    let ty = Polynomial::monomial(expected.clone(), &[1, 1], 1).expect("length");
    let t_plus_y = Polynomial::from_terms(expected.clone(), [(vec![1, 0], 1), (vec![0, 1], 1)])
        .expect("length");
    let indices: Vec<u32> = (1..=m / 2).collect();
    let basis: Vec<Polynomial> = indices
        .iter()
        .map(|&i| &ty.pow(i) * &t_plus_y.pow(m - 2 * i))
        .collect();

    let mut monomials: BTreeSet<Vec<u32>> = BTreeSet::new();
    for b in &basis {
        monomials.extend(b.terms().map(|(e, _)| e.to_vec()));
    }
    monomials.extend(p.terms().map(|(e, _)| e.to_vec()));

    let mut matrix = Vec::with_capacity(monomials.len());
    let mut rhs = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        matrix.push(
            basis
                .iter()
                .map(|b| b.coeff(mono).expect("length"))
                .collect::<Vec<_>>(),
        );
        rhs.push(p.coeff(mono).expect("length"));
    }
    let solution = solve_exact_linear(&matrix, &rhs).map_err(|e| match e {
        SolveError::Inconsistent => GammaError::NotInSpan,
        SolveError::RankDeficient => GammaError::BasisDependent,
        SolveError::Shape(msg) => GammaError::Internal(msg),
    })?;

    let mut entries = BTreeMap::new();
    for (&i, value) in indices.iter().zip(solution.entries()) {
        if !value.is_integer() {
            return Err(GammaError::NonIntegerCoefficient {
                i,
                j: 0,
                value: value.to_string(),
            });
        }
        let value = value.to_integer();
        if !value.is_zero() {
            entries.insert(i, value);
        }
    }
    Ok(entries)
}

// ---------------------------------------------------------------------------
// Gamma tables
// ---------------------------------------------------------------------------

/// One row of the bivariate gamma triangle: `(i, j) -> gamma(n,i,j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaRow {
    pub n: u32,
    pub entries: BTreeMap<(u32, u32), BigInt>,
}

/// One row of the univariate gamma triangle: `i -> gamma(n,i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaRowUni {
    pub n: u32,
    pub entries: BTreeMap<u32, BigInt>,
}

/// Univariate gamma recurrence:
/// `gamma(n+1,i) = i gamma(n,i) + 2(n+3-2i) gamma(n,i-1)`, from
/// `gamma(1,1) = 1`. Rows for `n = 1..=n_max`.
pub fn gamma_univariate_rec(n_max: u32) -> Vec<GammaRowUni> {
    let mut rows: Vec<GammaRowUni> = Vec::with_capacity(n_max as usize);
    let mut current: BTreeMap<u32, BigInt> = BTreeMap::new();
    current.insert(1, BigInt::from(1));
    rows.push(GammaRowUni {
        n: 1,
        entries: current.clone(),
    });
    for n in 1..n_max {
        let get = |m: &BTreeMap<u32, BigInt>, i: i64| -> BigInt {
            if i < 1 {
                BigInt::zero()
            } else {
                m.get(&(i as u32)).cloned().unwrap_or_else(BigInt::zero)
            }
        };
        let mut next = BTreeMap::new();
        for i in 1..=((n + 2) / 2) as i64 {
            let value = get(&current, i) * BigInt::from(i)
                + get(&current, i - 1) * BigInt::from(2 * (n as i64 + 3 - 2 * i));
            if !value.is_zero() {
                next.insert(i as u32, value);
            }
        }
        rows.push(GammaRowUni {
            n: n + 1,
            entries: next.clone(),
        });
        current = next;
    }
    rows
}

/// Bivariate gamma recurrence (the six-term one), iterating only over the
/// valid region with out-of-region values treated as 0 and exact division
/// by `n + 1` at every step. Rows for `n = 1..=n_max`.
pub fn gamma_bivariate_rec(n_max: u32) -> Result<Vec<GammaRow>, GammaError> {
    let mut rows: Vec<GammaRow> = Vec::with_capacity(n_max as usize);
    let mut current: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    current.insert((1, 0), BigInt::from(1));
    rows.push(GammaRow {
        n: 1,
        entries: current.clone(),
    });
    for n in 1..n_max {
        let get = |m: &BTreeMap<(u32, u32), BigInt>, i: i64, j: i64| -> BigInt {
            if i < 1 || j < 0 {
                BigInt::zero()
            } else {
                m.get(&(i as u32, j as u32))
                    .cloned()
                    .unwrap_or_else(BigInt::zero)
            }
        };
        let spec_next = BasisSpec::type_a_four_variable(n + 1);
        let mut next = BTreeMap::new();
        let ni = n as i64;
        for &(iu, ju) in &spec_next.region() {
            let (i, j) = (iu as i64, ju as i64);
            let mut value = get(&current, i, j - 1) * BigInt::from(ni + i * (ni + 2 - i - j));
            value += get(&current, i, j) * BigInt::from(i * (i + j) - ni);
            value += get(&current, i - 1, j - 1)
                * BigInt::from((ni + 4 - 2 * i - j) * (ni + 3 - 2 * i - j));
            value +=
                get(&current, i - 1, j) * BigInt::from((ni + 2 * i + j) * (ni + 3 - 2 * i - j));
            value += get(&current, i - 1, j + 1) * BigInt::from((j + 1) * (2 * ni + 2 - j));
            value += get(&current, i - 1, j + 2) * BigInt::from((j + 1) * (j + 2));
            if value.is_zero() {
                continue;
            }
            use num_integer::Integer;
            let (q, r) = value.div_rem(&BigInt::from(n + 1));
            if !r.is_zero() {
                return Err(GammaError::Internal(format!(
                    "gamma recurrence: gamma({},{},{}) numerator {} not divisible by {}",
                    n + 1,
                    iu,
                    ju,
                    value,
                    n + 1
                )));
            }
            next.insert((iu, ju), q);
        }
        rows.push(GammaRow {
            n: n + 1,
            entries: next.clone(),
        });
        current = next;
    }
    Ok(rows)
}

fn render_gamma_entries(entries: &BTreeMap<(u32, u32), BigInt>) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|(&(i, j), v)| format!("({i},{j}):{v}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Expands the size-`n` homogenized two-sided polynomial in the gamma basis
/// and reports whether every coefficient is a nonnegative integer. The
/// polynomial comes from the recurrence, cross-checked against brute force
/// for `n <= GESSEL_ORACLE_LIMIT`. Conjecture-class: a failure is a
/// finding, and the report always carries the full table.
pub fn check_gessel(n: u32, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    let fail = |params: BTreeMap<String, String>, witness: String| {
        VerificationReport::fail("check_gessel", CheckClass::Conjecture, params, witness)
    };

    let poly = match genpoly::rec_four_variable(n) {
        Ok(p) => p,
        Err(e) => {
            return fail(params, format!("recurrence failed: {e}")).with_elapsed(start.elapsed())
        }
    };
    if n <= GESSEL_ORACLE_LIMIT {
        match genpoly::brute_two_sided_homog(n, workers) {
            Ok(oracle) if oracle == poly => {}
            Ok(_) => {
                return fail(
                    params,
                    "recurrence output disagrees with brute-force enumeration".to_string(),
                )
                .with_elapsed(start.elapsed())
            }
            Err(e) => {
                return fail(params, format!("brute-force oracle failed: {e}"))
                    .with_elapsed(start.elapsed())
            }
        }
        params.insert("oracle".to_string(), "brute".to_string());
    }

    let spec = BasisSpec::type_a_four_variable(n);
    match expand_gamma(&poly, &spec) {
        Ok(entries) => {
            params.insert("gamma".to_string(), render_gamma_entries(&entries));
            let negative = entries.iter().find(|(_, v)| v.is_negative());
            match negative {
                None => VerificationReport::pass("check_gessel", CheckClass::Conjecture, params)
                    .with_elapsed(start.elapsed()),
                Some((&(i, j), value)) => {
                    fail(params, format!("gamma({n},{i},{j}) = {value} is negative"))
                        .with_elapsed(start.elapsed())
                }
            }
        }
        Err(e @ (GammaError::NotInSpan | GammaError::NonIntegerCoefficient { .. })) => {
            fail(params, e.to_string()).with_elapsed(start.elapsed())
        }
        Err(e) => fail(params, format!("expansion error: {e}")).with_elapsed(start.elapsed()),
    }
}

// ---------------------------------------------------------------------------
// Operator identities on basis elements
// ---------------------------------------------------------------------------

fn scaled_basis(m: u32, i: u32, j: u32, coeff: i64) -> Result<Polynomial, GammaError> {
    if coeff == 0 {
        return Ok(Polynomial::zero(VarSet::stxy()));
    }
    let spec = BasisSpec {
        flavor: BasisFlavor::FourVariable,
        m,
        i_min: 0,
    };
    Ok(basis_element(&spec, i, j)?.scale(coeff))
}

/// Checks the three closed-form operator actions on the basis element
/// `B(n,i,j)`: the multiplication part, the (s,t)/(x,y) derivative pair
/// and the (s,y)/(t,x) derivative pair, plus their assembled sum against
/// a direct application of the degree-`n` operator. A mismatch is a fail
/// report, not an error.
pub fn verify_operator_identities(n: u32, i: u32, j: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("i".to_string(), i.to_string());
    params.insert("j".to_string(), j.to_string());

    match operator_identity_mismatch(n, i, j) {
        Ok(None) => {
            VerificationReport::pass("verify_operator_identities", CheckClass::Theorem, params)
                .with_elapsed(start.elapsed())
        }
        Ok(Some(witness)) => VerificationReport::fail(
            "verify_operator_identities",
            CheckClass::Theorem,
            params,
            witness,
        )
        .with_elapsed(start.elapsed()),
        Err(e) => VerificationReport::fail(
            "verify_operator_identities",
            CheckClass::Theorem,
            params,
            format!("setup error: {e}"),
        )
        .with_elapsed(start.elapsed()),
    }
}

/// Returns a description of the first failing identity at `(n, i, j)`, or
/// `None` when all four hold.
pub fn operator_identity_mismatch(n: u32, i: u32, j: u32) -> Result<Option<String>, GammaError> {
    let spec = BasisSpec::type_a_four_variable(n);
    let b = basis_element(&spec, i, j)?;
    let vars = b.vars().clone();
    let (ni, ii, ji) = (n as i64, i as i64, j as i64);
    let m_next = n + 2;

    let s = Polynomial::var(vars.clone(), "s").expect("var");
    let t = Polynomial::var(vars.clone(), "t").expect("var");
    let x = Polynomial::var(vars.clone(), "x").expect("var");
    let y = Polynomial::var(vars.clone(), "y").expect("var");
    let stxy = &(&s * &t) * &(&x * &y);

    // Multiplication part: n(s-x)(t-y) B(n,i,j) = n(B(n+1,i,j+1) - B(n+1,i,j)).
    let lhs_m = (&(&s - &x) * &(&t - &y))
        .scale(n)
        .try_mul(&b)
        .expect("vars");
    let rhs_m = &scaled_basis(m_next, i, j + 1, ni)? - &scaled_basis(m_next, i, j, ni)?;
    if lhs_m != rhs_m {
        return Ok(Some(format!(
            "multiplication identity fails at (n,i,j)=({n},{i},{j})"
        )));
    }

    // stxy (d2/dsdt + d2/dxdy) B = i(n+1-i-j) B(n+1,i,j+1)
    //   + j(2n+3-j) B(n+1,i+1,j-1) + (n+1-2i-j)(n-2i-j) B(n+1,i+1,j+1).
    let d1 = &b.partial("s").expect("var").partial("t").expect("var")
        + &b.partial("x").expect("var").partial("y").expect("var");
    let lhs_d1 = &stxy * &d1;
    let mut rhs_d1 = scaled_basis(m_next, i, j + 1, ii * (ni + 1 - ii - ji))?;
    if j >= 1 {
        rhs_d1 = &rhs_d1 + &scaled_basis(m_next, i + 1, j - 1, ji * (2 * ni + 3 - ji))?;
    }
    rhs_d1 = &rhs_d1
        + &scaled_basis(
            m_next,
            i + 1,
            j + 1,
            (ni + 1 - 2 * ii - ji) * (ni - 2 * ii - ji),
        )?;
    if lhs_d1 != rhs_d1 {
        return Ok(Some(format!(
            "first derivative identity fails at (n,i,j)=({n},{i},{j})"
        )));
    }

    // stxy (d2/dsdy + d2/dtdx) B = i(i+j) B(n+1,i,j)
    //   + j(j-1) B(n+1,i+1,j-2) + (n+1-2i-j)(n+2+2i+j) B(n+1,i+1,j).
    let d2 = &b.partial("s").expect("var").partial("y").expect("var")
        + &b.partial("t").expect("var").partial("x").expect("var");
    let lhs_d2 = &stxy * &d2;
    let mut rhs_d2 = scaled_basis(m_next, i, j, ii * (ii + ji))?;
    if j >= 2 {
        rhs_d2 = &rhs_d2 + &scaled_basis(m_next, i + 1, j - 2, ji * (ji - 1))?;
    }
    rhs_d2 = &rhs_d2
        + &scaled_basis(
            m_next,
            i + 1,
            j,
            (ni + 1 - 2 * ii - ji) * (ni + 2 + 2 * ii + ji),
        )?;
    if lhs_d2 != rhs_d2 {
        return Ok(Some(format!(
            "second derivative identity fails at (n,i,j)=({n},{i},{j})"
        )));
    }

    // Assembled operator action.
    let lhs_t = genpoly::apply_t_n(&b, n)?;
    let mut rhs_t = scaled_basis(m_next, i, j + 1, ni + ii * (ni + 1 - ii - ji))?;
    rhs_t = &rhs_t + &scaled_basis(m_next, i, j, ii * (ii + ji) - ni)?;
    rhs_t = &rhs_t
        + &scaled_basis(
            m_next,
            i + 1,
            j + 1,
            (ni + 1 - 2 * ii - ji) * (ni - 2 * ii - ji),
        )?;
    rhs_t = &rhs_t
        + &scaled_basis(
            m_next,
            i + 1,
            j,
            (ni + 2 + 2 * ii + ji) * (ni + 1 - 2 * ii - ji),
        )?;
    if j >= 1 {
        rhs_t = &rhs_t + &scaled_basis(m_next, i + 1, j - 1, ji * (2 * ni + 3 - ji))?;
    }
    if j >= 2 {
        rhs_t = &rhs_t + &scaled_basis(m_next, i + 1, j - 2, ji * (ji - 1))?;
    }
    if lhs_t != rhs_t {
        return Ok(Some(format!(
            "assembled operator sum fails at (n,i,j)=({n},{i},{j})"
        )));
    }
    Ok(None)
}

/// Runs [`verify_operator_identities`] over the whole index region of `n`,
/// aggregated into one report.
pub fn verify_operator_identities_region(n: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("region".to_string(), "full".to_string());
    let spec = BasisSpec::type_a_four_variable(n);
    for (i, j) in spec.region() {
        match operator_identity_mismatch(n, i, j) {
            Ok(None) => {}
            Ok(Some(witness)) => {
                return VerificationReport::fail(
                    "verify_operator_identities",
                    CheckClass::Theorem,
                    params,
                    witness,
                )
                .with_elapsed(start.elapsed())
            }
            Err(e) => {
                return VerificationReport::fail(
                    "verify_operator_identities",
                    CheckClass::Theorem,
                    params,
                    format!("setup error at (i,j)=({i},{j}): {e}"),
                )
                .with_elapsed(start.elapsed())
            }
        }
    }
    VerificationReport::pass("verify_operator_identities", CheckClass::Theorem, params)
        .with_elapsed(start.elapsed())
}

/// Attempts the experimental type B expansion of `B_n(s,t)` in the
/// bivariate basis with `m = n`, `i_min = 0`. `NotInSpan` is an expected
/// possible outcome, surfaced as a value.
pub fn expand_gamma_typeb(n: u32) -> Result<BTreeMap<(u32, u32), BigInt>, GammaError> {
    let poly = genpoly::rec_type_b(n)?;
    expand_gamma(&poly, &BasisSpec::type_b_experimental(n))
}

// ---------------------------------------------------------------------------
// Table serialization
// ---------------------------------------------------------------------------

/// CSV with header `n,i,j,gamma`, one row per nonzero entry, sorted.
pub fn gamma_rows_to_csv(rows: &[GammaRow]) -> String {
    let mut out = String::from("n,i,j,gamma\n");
    for row in rows {
        for (&(i, j), value) in &row.entries {
            out.push_str(&format!("{},{},{},{}\n", row.n, i, j, value));
        }
    }
    out
}

/// CSV with header `n,i,j,gamma` and an empty `j` column.
pub fn gamma_rows_uni_to_csv(rows: &[GammaRowUni]) -> String {
    let mut out = String::from("n,i,j,gamma\n");
    for row in rows {
        for (&i, value) in &row.entries {
            out.push_str(&format!("{},{},,{}\n", row.n, i, value));
        }
    }
    out
}

/// JSON array of `{"n", "i", "j", "gamma"}` objects (gamma as a decimal
/// string, matching the polynomial coefficient contract).
pub fn gamma_rows_to_json(rows: &[GammaRow]) -> String {
    let values: Vec<serde_json::Value> = rows
        .iter()
        .flat_map(|row| {
            row.entries.iter().map(move |(&(i, j), value)| {
                serde_json::json!({
                    "n": row.n,
                    "i": i,
                    "j": j,
                    "gamma": value.to_string(),
                })
            })
        })
        .collect();
    serde_json::to_string_pretty(&values).expect("serialization cannot fail")
}

/// JSON array for univariate rows; `j` is null.
pub fn gamma_rows_uni_to_json(rows: &[GammaRowUni]) -> String {
    let values: Vec<serde_json::Value> = rows
        .iter()
        .flat_map(|row| {
            row.entries.iter().map(move |(&i, value)| {
                serde_json::json!({
                    "n": row.n,
                    "i": i,
                    "j": serde_json::Value::Null,
                    "gamma": value.to_string(),
                })
            })
        })
        .collect();
    serde_json::to_string_pretty(&values).expect("serialization cannot fail")
}
