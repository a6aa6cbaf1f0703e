//! Executable checks for the identities the crate computes.
//!
//! Every check produces a [`VerificationReport`]. Theorem-class failures
//! signal an implementation bug; conjecture-class failures are findings and
//! carry full state in the report. All comparisons are exact equality of
//! polynomials; there are no tolerances anywhere.

use std::collections::BTreeMap;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactpoly::{binomial, Polynomial};
use crate::genpoly::{
    brute_cyclic, brute_invseq, brute_two_sided, brute_two_sided_tau, brute_type_b,
    rec_four_variable, rec_reversal, rec_two_sided,
};
use crate::permstat::{enumerate_bn, enumerate_sn, Permutation, SignedPermutation};

pub use crate::gammalab::{
    check_gessel, verify_operator_identities, verify_operator_identities_region,
};
pub use crate::report::{reports_to_json, CheckClass, Outcome, VerificationReport};

/// Default truncation bounds for the series checks: comfortably beyond the
/// polynomial degree.
pub fn default_series_bound(n: u32) -> u32 {
    n + 4
}

fn params_n(n: u32) -> BTreeMap<String, String> {
    BTreeMap::from([("n".to_string(), n.to_string())])
}

/// Coefficient of `s^i t^j` in `P(s,t) / ((1-s)(1-t))^(n+1)`, exactly.
fn series_coeff(p: &Polynomial, n: u32, i: u32, j: u32) -> BigInt {
    let n = i64::from(n);
    let (i, j) = (i64::from(i), i64::from(j));
    let mut acc = BigInt::zero();
    for (e, c) in p.terms() {
        let (a, b) = (i64::from(e[0]), i64::from(e[1]));
        if a <= i && b <= j {
            acc += c * binomial(i - a + n, n) * binomial(j - b + n, n);
        }
    }
    acc
}

/// Compares the expansion of `P / ((1-s)(1-t))^(n+1)` against an expected
/// coefficient function over the truncation box, returning the first
/// mismatch.
fn series_mismatch<F>(p: &Polynomial, n: u32, imax: u32, jmax: u32, expected: F) -> Option<String>
where
    F: Fn(u32, u32) -> BigInt,
{
    for i in 0..=imax {
        for j in 0..=jmax {
            let want = expected(i, j);
            let got = series_coeff(p, n, i, j);
            if want != got {
                return Some(format!(
                    "coefficient of s^{i} t^{j}: series gives {got}, binomial gives {want}"
                ));
            }
        }
    }
    None
}

/// Series identity for the two-sided polynomial:
/// the coefficient of `s^i t^j` in `A_n(s,t)/((1-s)(1-t))^(n+1)` equals
/// `binomial(ij + n - 1, n)`.
pub fn check_crs(n: u32, imax: u32, jmax: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    params.insert("imax".to_string(), imax.to_string());
    params.insert("jmax".to_string(), jmax.to_string());
    let poly = match rec_two_sided(n) {
        Ok(p) => p,
        Err(e) => {
            return VerificationReport::fail(
                "check_crs",
                CheckClass::Theorem,
                params,
                format!("generation failed: {e}"),
            )
            .with_elapsed(start.elapsed())
        }
    };
    let ni = i64::from(n);
    match series_mismatch(&poly, n, imax, jmax, |i, j| {
        binomial(i64::from(i) * i64::from(j) + ni - 1, ni)
    }) {
        None => VerificationReport::pass("check_crs", CheckClass::Theorem, params)
            .with_elapsed(start.elapsed()),
        Some(witness) => {
            VerificationReport::fail("check_crs", CheckClass::Theorem, params, witness)
                .with_elapsed(start.elapsed())
        }
    }
}

/// Series identity for the tau-twisted two-sided polynomial, with
/// `k - 1 = des(tau)`: the coefficient of `s^i t^j` in the expansion
/// equals `binomial(ij + n - k, n)`.
///
/// The polynomial on the series side is the shifted summation
/// `sum s^(des(p)+1) t^(des(p^-1 tau)+1)`; at `tau = identity` (`k = 1`)
/// this is exactly the polynomial of [`check_crs`], which pins the
/// normalization once and for all.
pub fn check_crs_tau(n: u32, tau: &Permutation, imax: u32, jmax: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    params.insert("tau".to_string(), tau.to_string());
    params.insert("imax".to_string(), imax.to_string());
    params.insert("jmax".to_string(), jmax.to_string());
    let poly = match brute_two_sided_tau(n, tau, 1) {
        Ok(p) => p,
        Err(e) => {
            return VerificationReport::fail(
                "check_crs_tau",
                CheckClass::Theorem,
                params,
                format!("generation failed: {e}"),
            )
            .with_elapsed(start.elapsed())
        }
    };
    let ni = i64::from(n);
    let k = i64::from(tau.des()) + 1;
    match series_mismatch(&poly, n, imax, jmax, |i, j| {
        binomial(i64::from(i) * i64::from(j) + ni - k, ni)
    }) {
        None => VerificationReport::pass("check_crs_tau", CheckClass::Theorem, params)
            .with_elapsed(start.elapsed()),
        Some(witness) => {
            VerificationReport::fail("check_crs_tau", CheckClass::Theorem, params, witness)
                .with_elapsed(start.elapsed())
        }
    }
}

/// [`check_crs_tau`] over every tau in `S_n`, aggregated.
pub fn check_crs_tau_all(n: u32, imax: u32, jmax: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    params.insert("taus".to_string(), "all".to_string());
    for tau in enumerate_sn(n).expect("n validated by caller") {
        let report = check_crs_tau(n, &tau, imax, jmax);
        if !report.is_pass() {
            return VerificationReport::fail(
                "check_crs_tau",
                CheckClass::Theorem,
                params,
                format!(
                    "tau = {tau}: {}",
                    report.witness.unwrap_or_else(|| "unknown".to_string())
                ),
            )
            .with_elapsed(start.elapsed());
        }
    }
    VerificationReport::pass("check_crs_tau", CheckClass::Theorem, params)
        .with_elapsed(start.elapsed())
}

/// Type B series identity, with `k - 1 = des_B(tau)`: the coefficient of
/// `s^i t^j` in `B_n^(k)(s,t)/((1-s)(1-t))^(n+1)` equals
/// `binomial(2ij + i + j + 1 + n - k, n)`.
pub fn check_type_b_series(
    n: u32,
    tau: &SignedPermutation,
    imax: u32,
    jmax: u32,
) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    params.insert("tau".to_string(), tau.to_string());
    params.insert("imax".to_string(), imax.to_string());
    params.insert("jmax".to_string(), jmax.to_string());
    let poly = match brute_type_b(n, tau, 1) {
        Ok(p) => p,
        Err(e) => {
            return VerificationReport::fail(
                "check_typeB_series",
                CheckClass::Theorem,
                params,
                format!("generation failed: {e}"),
            )
            .with_elapsed(start.elapsed())
        }
    };
    let ni = i64::from(n);
    let k = i64::from(tau.des_b()) + 1;
    match series_mismatch(&poly, n, imax, jmax, |i, j| {
        let (i, j) = (i64::from(i), i64::from(j));
        binomial(2 * i * j + i + j + 1 + ni - k, ni)
    }) {
        None => VerificationReport::pass("check_typeB_series", CheckClass::Theorem, params)
            .with_elapsed(start.elapsed()),
        Some(witness) => {
            VerificationReport::fail("check_typeB_series", CheckClass::Theorem, params, witness)
                .with_elapsed(start.elapsed())
        }
    }
}

/// [`check_type_b_series`] over every tau in `B_n`, aggregated.
pub fn check_type_b_series_all(n: u32, imax: u32, jmax: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    params.insert("taus".to_string(), "all".to_string());
    for tau in enumerate_bn(n).expect("n validated by caller") {
        let report = check_type_b_series(n, &tau, imax, jmax);
        if !report.is_pass() {
            return VerificationReport::fail(
                "check_typeB_series",
                CheckClass::Theorem,
                params,
                format!(
                    "tau = {tau}: {}",
                    report.witness.unwrap_or_else(|| "unknown".to_string())
                ),
            )
            .with_elapsed(start.elapsed());
        }
    }
    VerificationReport::pass("check_typeB_series", CheckClass::Theorem, params)
        .with_elapsed(start.elapsed())
}

/// Cyclic refinement: `(n+1) A_n(s,t)` equals the distribution of
/// `(cdes(p^-1), cdes(p))` over `S_{n+1}`.
pub fn check_cyclic(n: u32, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let params = params_n(n);
    let run = || -> Result<Option<String>, String> {
        let lhs = brute_two_sided(n, workers)
            .map_err(|e| e.to_string())?
            .scale(n + 1);
        let rhs = brute_cyclic(n + 1, workers).map_err(|e| e.to_string())?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!(
                "(n+1) A_n != cyclic distribution over S_(n+1): {lhs} vs {rhs}"
            )))
        }
    };
    finish_report("check_cyclic", CheckClass::Theorem, params, run(), start)
}

/// Rotation invariance: right-multiplying by the cyclic rotation preserves
/// the pair `(cdes, cdes of the inverse)` for every permutation.
pub fn check_rotation_lemma(n: u32) -> VerificationReport {
    let start = Instant::now();
    let params = params_n(n);
    let run = || -> Result<Option<String>, String> {
        for p in enumerate_sn(n).map_err(|e| e.to_string())? {
            let rotated = p.cyclic_rotate().map_err(|e| e.to_string())?;
            let before = (p.cdes(), p.inverse().cdes());
            let after = (rotated.cdes(), rotated.inverse().cdes());
            if before != after {
                return Ok(Some(format!(
                    "pi = {p}: (cdes, icdes) changes {before:?} -> {after:?} under rotation"
                )));
            }
        }
        Ok(None)
    };
    finish_report(
        "check_rotation_lemma",
        CheckClass::Theorem,
        params,
        run(),
        start,
    )
}

/// Tau independence (conjecture): the tau-twisted distribution depends only
/// on `des(tau)`. Groups all tau by descent count and compares within each
/// group; the group at `des(tau) = 0` must be the two-sided polynomial
/// itself.
pub fn check_tau_independence(n: u32, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let params = params_n(n);
    let run = || -> Result<Option<String>, String> {
        let mut by_des: BTreeMap<u32, (Permutation, Polynomial)> = BTreeMap::new();
        for tau in enumerate_sn(n).map_err(|e| e.to_string())? {
            let poly = brute_two_sided_tau(n, &tau, workers).map_err(|e| e.to_string())?;
            match by_des.get(&tau.des()) {
                None => {
                    by_des.insert(tau.des(), (tau.clone(), poly));
                }
                Some((first, reference)) => {
                    if *reference != poly {
                        return Ok(Some(format!(
                            "des = {}: tau = {} and tau = {} give different distributions",
                            tau.des(),
                            first,
                            tau
                        )));
                    }
                }
            }
        }
        let identity_group = &by_des
            .get(&0)
            .expect("identity permutation always present")
            .1;
        let two_sided = brute_two_sided(n, workers).map_err(|e| e.to_string())?;
        if *identity_group != two_sided {
            return Ok(Some(
                "des(tau) = 0 group does not reproduce the two-sided polynomial".to_string(),
            ));
        }
        Ok(None)
    };
    finish_report(
        "check_tau_independence",
        CheckClass::Conjecture,
        params,
        run(),
        start,
    )
}

/// Inversion-sequence model (conjecture): the `(dst, asc_I + 1)`
/// distribution over `I_n` equals the two-sided polynomial. Also checks the
/// (not at all obvious) `s <-> t` symmetry of the inversion-sequence side.
pub fn check_invseq(n: u32, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let params = params_n(n);
    let run = || -> Result<Option<String>, String> {
        let inv = brute_invseq(n, workers).map_err(|e| e.to_string())?;
        let two_sided = brute_two_sided(n, workers).map_err(|e| e.to_string())?;
        if inv != two_sided {
            return Ok(Some(format!(
                "distributions differ: invseq {inv} vs two-sided {two_sided}"
            )));
        }
        let swapped = inv
            .permute_vars(&[("s", "t"), ("t", "s")])
            .map_err(|e| e.to_string())?;
        if swapped != inv {
            return Ok(Some(
                "inversion-sequence polynomial is not symmetric in s, t".to_string(),
            ));
        }
        Ok(None)
    };
    finish_report("check_invseq", CheckClass::Conjecture, params, run(), start)
}

const KLEIN_SWAPS: [[(&str, &str); 4]; 3] = [
    [("s", "t"), ("t", "s"), ("x", "y"), ("y", "x")],
    [("s", "x"), ("x", "s"), ("t", "y"), ("y", "t")],
    [("s", "y"), ("y", "s"), ("t", "x"), ("x", "t")],
];

fn first_moved_monomial(p: &Polynomial, image: &Polynomial) -> String {
    for (e, c) in p.terms() {
        let other = image.coeff(e).expect("same varset");
        if other != *c {
            return format!("coefficient of {e:?} is {c} vs {other}");
        }
    }
    "polynomials differ".to_string()
}

/// Klein-group invariance of the homogenized two-sided polynomial, plus the
/// sharpness assertion that for `n >= 4` it is not symmetric under the
/// single swaps `s <-> t` or `s <-> x`. The demonstrating monomial goes
/// into the report parameters.
pub fn check_klein(n: u32) -> VerificationReport {
    let start = Instant::now();
    let mut params = params_n(n);
    let poly = match rec_four_variable(n) {
        Ok(p) => p,
        Err(e) => {
            return VerificationReport::fail(
                "check_klein",
                CheckClass::Theorem,
                params,
                format!("generation failed: {e}"),
            )
            .with_elapsed(start.elapsed())
        }
    };
    for swap in KLEIN_SWAPS {
        let image = poly.permute_vars(&swap).expect("valid swap");
        if image != poly {
            let names: Vec<String> = swap.iter().map(|(a, b)| format!("{a}<->{b}")).collect();
            return VerificationReport::fail(
                "check_klein",
                CheckClass::Theorem,
                params,
                format!(
                    "not invariant under {}: {}",
                    names.join(", "),
                    first_moved_monomial(&poly, &image)
                ),
            )
            .with_elapsed(start.elapsed());
        }
    }
    if n >= 4 {
        for swap in [[("s", "t"), ("t", "s")], [("s", "x"), ("x", "s")]] {
            let image = poly.permute_vars(&swap).expect("valid swap");
            if image == poly {
                return VerificationReport::fail(
                    "check_klein",
                    CheckClass::Theorem,
                    params,
                    format!(
                        "unexpectedly symmetric under the single swap {}<->{}",
                        swap[0].0, swap[0].1
                    ),
                )
                .with_elapsed(start.elapsed());
            }
            params.insert(
                format!("asymmetry_{}{}", swap[0].0, swap[0].1),
                first_moved_monomial(&poly, &image),
            );
        }
    }
    VerificationReport::pass("check_klein", CheckClass::Theorem, params)
        .with_elapsed(start.elapsed())
}

/// Reversal identity: the reversal-family recurrence output equals the main
/// four-variable polynomial with `t <-> y` swapped.
pub fn check_reversal(n: u32) -> VerificationReport {
    let start = Instant::now();
    let params = params_n(n);
    let run = || -> Result<Option<String>, String> {
        let reversal = rec_reversal(n).map_err(|e| e.to_string())?;
        let swapped = rec_four_variable(n)
            .map_err(|e| e.to_string())?
            .permute_vars(&[("t", "y"), ("y", "t")])
            .map_err(|e| e.to_string())?;
        if reversal == swapped {
            Ok(None)
        } else {
            Ok(Some(
                "reversal recurrence does not match t <-> y swap of the main family".to_string(),
            ))
        }
    };
    finish_report("check_reversal", CheckClass::Theorem, params, run(), start)
}

fn finish_report(
    check: &str,
    class: CheckClass,
    params: BTreeMap<String, String>,
    result: Result<Option<String>, String>,
    start: Instant,
) -> VerificationReport {
    let report = match result {
        Ok(None) => VerificationReport::pass(check, class, params),
        Ok(Some(witness)) => VerificationReport::fail(check, class, params, witness),
        Err(message) => VerificationReport::fail(check, class, params, message),
    };
    report.with_elapsed(start.elapsed())
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

/// Which checks to run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SuiteSelector {
    All,
    Theorems,
    Conjectures,
    Single(String),
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Cap applied to each check's default size range (never raises it for
    /// suites; sets the range for a single named check).
    pub max_n: Option<u32>,
    pub workers: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            workers: 1,
        }
    }
}

struct CheckSpec {
    name: &'static str,
    class: CheckClass,
    min_n: u32,
    default_max_n: u32,
    run: fn(u32, usize) -> VerificationReport,
}

/// The check registry, sorted by name. Default bounds are the desk-scale
/// exhaustive ranges.
const CHECKS: [CheckSpec; 11] = [
    CheckSpec {
        name: "check_crs",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 6,
        run: |n, _| check_crs(n, default_series_bound(n), default_series_bound(n)),
    },
    CheckSpec {
        name: "check_crs_tau",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 5,
        run: |n, _| check_crs_tau_all(n, default_series_bound(n), default_series_bound(n)),
    },
    CheckSpec {
        name: "check_cyclic",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 6,
        run: |n, workers| check_cyclic(n, workers),
    },
    CheckSpec {
        name: "check_gessel",
        class: CheckClass::Conjecture,
        min_n: 1,
        default_max_n: 12,
        run: |n, workers| check_gessel(n, workers),
    },
    CheckSpec {
        name: "check_invseq",
        class: CheckClass::Conjecture,
        min_n: 1,
        default_max_n: 9,
        run: |n, workers| check_invseq(n, workers),
    },
    CheckSpec {
        name: "check_klein",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 9,
        run: |n, _| check_klein(n),
    },
    CheckSpec {
        name: "check_reversal",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 7,
        run: |n, _| check_reversal(n),
    },
    CheckSpec {
        name: "check_rotation_lemma",
        class: CheckClass::Theorem,
        min_n: 2,
        default_max_n: 7,
        run: |n, _| check_rotation_lemma(n),
    },
    CheckSpec {
        name: "check_tau_independence",
        class: CheckClass::Conjecture,
        min_n: 1,
        default_max_n: 6,
        run: |n, workers| check_tau_independence(n, workers),
    },
    CheckSpec {
        name: "check_typeB_series",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 4,
        run: |n, _| check_type_b_series_all(n, default_series_bound(n), default_series_bound(n)),
    },
    CheckSpec {
        name: "verify_operator_identities",
        class: CheckClass::Theorem,
        min_n: 1,
        default_max_n: 8,
        run: |n, _| verify_operator_identities_region(n),
    },
];

/// The names the suite runner accepts for single-check runs.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Runs the selected checks over their size ranges. Instances execute in
/// parallel across `workers` threads (each instance then enumerating
/// single-threaded); reports come back in the deterministic planning order
/// (check name, then n).
pub fn run_suite(
    selector: &SuiteSelector,
    opts: &SuiteOptions,
) -> Result<Vec<VerificationReport>, String> {
    let selected: Vec<&CheckSpec> = match selector {
        SuiteSelector::All => CHECKS.iter().collect(),
        SuiteSelector::Theorems => CHECKS
            .iter()
            .filter(|c| c.class == CheckClass::Theorem)
            .collect(),
        SuiteSelector::Conjectures => CHECKS
            .iter()
            .filter(|c| c.class == CheckClass::Conjecture)
            .collect(),
        SuiteSelector::Single(name) => {
            let found = CHECKS.iter().find(|c| c.name == name);
            match found {
                Some(spec) => vec![spec],
                None => {
                    return Err(format!(
                        "unknown check `{name}`; valid checks: {}",
                        check_names().join(", ")
                    ))
                }
            }
        }
    };

    // Plan all instances up front in deterministic order.
    enum Planned {
        Run {
            spec_idx: usize,
            n: u32,
            workers: usize,
        },
        Skip {
            spec_idx: usize,
            max_n: u32,
        },
    }
    let mut plan: Vec<Planned> = Vec::new();
    let instance_workers = if opts.workers > 1 {
        1
    } else {
        opts.workers.max(1)
    };
    for spec in &selected {
        let spec_idx = CHECKS
            .iter()
            .position(|c| c.name == spec.name)
            .expect("registry entry");
        let max_n = opts.max_n.unwrap_or(spec.default_max_n).min(
            if matches!(selector, SuiteSelector::Single(_)) {
                opts.max_n.unwrap_or(spec.default_max_n)
            } else {
                spec.default_max_n
            },
        );
        if max_n < spec.min_n {
            plan.push(Planned::Skip { spec_idx, max_n });
            continue;
        }
        for n in spec.min_n..=max_n {
            plan.push(Planned::Run {
                spec_idx,
                n,
                workers: instance_workers,
            });
        }
    }

    let jobs: Vec<(usize, &Planned)> = plan.iter().enumerate().collect();
    let results: Mutex<Vec<Option<VerificationReport>>> = Mutex::new(vec![None; plan.len()]);
    let next_job = std::sync::atomic::AtomicUsize::new(0);

    let execute = |planned: &Planned| -> VerificationReport {
        match planned {
            Planned::Run {
                spec_idx,
                n,
                workers,
            } => (CHECKS[*spec_idx].run)(*n, *workers),
            Planned::Skip { spec_idx, max_n } => {
                let spec = &CHECKS[*spec_idx];
                let mut params = BTreeMap::new();
                params.insert("max_n".to_string(), max_n.to_string());
                params.insert("min_n".to_string(), spec.min_n.to_string());
                VerificationReport::skipped(spec.name, spec.class, params)
            }
        }
    };

    let pool = opts.workers.max(1).min(plan.len().max(1));
    if pool <= 1 {
        let mut out = Vec::with_capacity(plan.len());
        for planned in &plan {
            out.push(execute(planned));
        }
        return Ok(out);
    }

    std::thread::scope(|scope| {
        for _ in 0..pool {
            scope.spawn(|| loop {
                let idx = next_job.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if idx >= jobs.len() {
                    break;
                }
                let (slot, planned) = jobs[idx];
                let report = execute(planned);
                results.lock().unwrap()[slot] = Some(report);
            });
        }
    });

    Ok(results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect())
}

/// True when a theorem-class check failed (the nonzero-exit condition).
pub fn any_theorem_failure(reports: &[VerificationReport]) -> bool {
    reports
        .iter()
        .any(|r| r.class == CheckClass::Theorem && r.outcome == Outcome::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crs_small_cases() {
        for n in 1..=4 {
            let report = check_crs(n, default_series_bound(n), default_series_bound(n));
            assert!(report.is_pass(), "n = {n}: {:?}", report.witness);
        }
        // n = 1: the coefficient of s^i t^j is exactly i*j.
        let a1 = rec_two_sided(1).unwrap();
        for i in 0..=5u32 {
            for j in 0..=5u32 {
                assert_eq!(
                    series_coeff(&a1, 1, i, j),
                    BigInt::from(u64::from(i) * u64::from(j))
                );
            }
        }
    }

    #[test]
    fn crs_tau_small_cases() {
        // Identity tau reduces to the plain series identity.
        let id = Permutation::identity(3);
        assert!(check_crs_tau(3, &id, 7, 7).is_pass());
        // Reversal tau, k = 3.
        let rev = Permutation::reversal(3);
        assert!(check_crs_tau(3, &rev, 6, 6).is_pass());
        assert!(check_crs_tau_all(3, 7, 7).is_pass());
    }

    #[test]
    fn type_b_series_small_cases() {
        assert!(check_type_b_series(1, &SignedPermutation::identity(1), 5, 5).is_pass());
        assert!(check_type_b_series(2, &SignedPermutation::identity(2), 5, 5).is_pass());
        let all_neg = SignedPermutation::new(vec![-1, -2, -3]).unwrap();
        assert_eq!(all_neg.des_b(), 3);
        assert!(check_type_b_series(3, &all_neg, 5, 5).is_pass());
        assert!(check_type_b_series_all(2, 6, 6).is_pass());
    }

    #[test]
    fn cyclic_small_cases() {
        for n in 1..=4 {
            let report = check_cyclic(n, 1);
            assert!(report.is_pass(), "n = {n}: {:?}", report.witness);
        }
    }

    #[test]
    fn rotation_lemma_small_cases() {
        for n in 2..=5 {
            assert!(check_rotation_lemma(n).is_pass());
        }
        let orbit_start = Permutation::identity(5);
        let mut element = orbit_start.clone();
        for _ in 0..5 {
            assert_eq!(element.cdes(), 1);
            element = element.cyclic_rotate().unwrap();
        }
        assert_eq!(element, orbit_start);
    }

    #[test]
    fn tau_independence_small_cases() {
        for n in 1..=4 {
            let report = check_tau_independence(n, 1);
            assert!(report.is_pass(), "n = {n}: {:?}", report.witness);
            assert_eq!(report.class, CheckClass::Conjecture);
        }
    }

    #[test]
    fn invseq_small_cases() {
        for n in 1..=5 {
            let report = check_invseq(n, 1);
            assert!(report.is_pass(), "n = {n}: {:?}", report.witness);
        }
    }

    #[test]
    fn klein_small_cases() {
        for n in 1..=5 {
            let report = check_klein(n);
            assert!(report.is_pass(), "n = {n}: {:?}", report.witness);
        }
        // n >= 4 records the asymmetry demonstrations.
        let report = check_klein(4);
        assert!(report.params.contains_key("asymmetry_st"));
        assert!(report.params.contains_key("asymmetry_sx"));
    }

    #[test]
    fn reversal_small_cases() {
        for n in 1..=5 {
            assert!(check_reversal(n).is_pass());
        }
    }

    #[test]
    fn suite_selectors_and_order() {
        let opts = SuiteOptions {
            max_n: Some(2),
            workers: 1,
        };
        let reports = run_suite(&SuiteSelector::All, &opts).unwrap();
        // Deterministic order: sorted by check name, then n.
        let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(!any_theorem_failure(&reports));

        let theorems = run_suite(&SuiteSelector::Theorems, &opts).unwrap();
        assert!(theorems.iter().all(|r| r.class == CheckClass::Theorem));
        let conjectures = run_suite(&SuiteSelector::Conjectures, &opts).unwrap();
        assert!(conjectures
            .iter()
            .all(|r| r.class == CheckClass::Conjecture));

        let single = run_suite(
            &SuiteSelector::Single("check_invseq".to_string()),
            &SuiteOptions {
                max_n: Some(3),
                workers: 1,
            },
        )
        .unwrap();
        assert_eq!(single.len(), 3);
        assert!(single.iter().all(|r| r.check == "check_invseq"));

        assert!(run_suite(&SuiteSelector::Single("nope".to_string()), &opts).is_err());
    }

    #[test]
    fn suite_parallel_matches_sequential() {
        let sequential = run_suite(
            &SuiteSelector::Theorems,
            &SuiteOptions {
                max_n: Some(3),
                workers: 1,
            },
        )
        .unwrap();
        let parallel = run_suite(
            &SuiteSelector::Theorems,
            &SuiteOptions {
                max_n: Some(3),
                workers: 4,
            },
        )
        .unwrap();
        let strip = |reports: &[VerificationReport]| -> Vec<(String, String, String)> {
            reports
                .iter()
                .map(|r| {
                    (
                        r.check.clone(),
                        format!("{:?}", r.params),
                        r.outcome.as_str().to_string(),
                    )
                })
                .collect()
        };
        assert_eq!(strip(&sequential), strip(&parallel));
    }

    #[test]
    fn skipped_when_below_min() {
        let reports = run_suite(
            &SuiteSelector::Single("check_rotation_lemma".to_string()),
            &SuiteOptions {
                max_n: Some(1),
                workers: 1,
            },
        )
        .unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].outcome, Outcome::Skipped);
    }
}
