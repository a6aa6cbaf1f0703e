//! Acceptance suite: one test per criterion, each printing a PASS line and
//! enforcing its stated runtime bound. All comparisons are exact integer
//! arithmetic, tolerance zero.
//!
//! Run with `cargo test -p gessel-cli --test acceptance` (add
//! `-- --nocapture` to see the per-criterion lines).

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use gessel_core::gammalab::{self, BasisSpec};
use gessel_core::genpoly::{self, dehomogenize_xy};
use gessel_core::permstat::{bn_order, sn_order, SignedPermutation};
use gessel_core::verify::{self, SuiteOptions, SuiteSelector};

fn pass_line(criterion: u32, elapsed: Duration, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: PASS ({} ms) {detail}",
        elapsed.as_millis()
    );
}

fn gamma(pairs: &[((u32, u32), i64)]) -> BTreeMap<(u32, u32), BigInt> {
    pairs
        .iter()
        .map(|&((i, j), v)| ((i, j), BigInt::from(v)))
        .collect()
}

/// Criterion 1: the gamma expansions of the homogenized two-sided
/// polynomials for n = 1..=5 reproduce the five displayed tables exactly.
/// Runtime < 1 s.
#[test]
fn criterion_1_example_list_reproduction() {
    let start = Instant::now();
    let expected = [
        gamma(&[((1, 0), 1)]),
        gamma(&[((1, 1), 1)]),
        gamma(&[((1, 2), 1), ((2, 0), 2)]),
        gamma(&[((1, 3), 1), ((2, 1), 7), ((2, 0), 1)]),
        gamma(&[((1, 4), 1), ((2, 2), 16), ((2, 1), 6), ((3, 0), 16)]),
    ];
    for (idx, want) in expected.iter().enumerate() {
        let n = idx as u32 + 1;
        let poly = genpoly::rec_four_variable(n).unwrap();
        let got = gammalab::expand_gamma(&poly, &BasisSpec::type_a_four_variable(n)).unwrap();
        assert_eq!(got, *want, "n = {n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass_line(
        1,
        elapsed,
        "gamma tables for n = 1..=5 match the example list",
    );
}

/// Criterion 2: recurrence and brute force agree for the two-sided family,
/// both bivariate and dehomogenized four-variable, n <= 8 single-threaded
/// (< 10 s); n = 9 with 4 workers (< 60 s).
#[test]
fn criterion_2_oracle_equivalence_type_a() {
    let start = Instant::now();
    for n in 1..=8 {
        let brute = genpoly::brute_two_sided(n, 1).unwrap();
        assert_eq!(genpoly::rec_two_sided(n).unwrap(), brute, "rec n = {n}");
        assert_eq!(
            dehomogenize_xy(&genpoly::rec_four_variable(n).unwrap()).unwrap(),
            brute,
            "four-variable n = {n}"
        );
    }
    let single_threaded = start.elapsed();
    assert!(
        single_threaded < Duration::from_secs(10),
        "n <= 8 took {single_threaded:?}"
    );

    let start_nine = Instant::now();
    let brute = genpoly::brute_two_sided(9, 4).unwrap();
    assert_eq!(genpoly::rec_two_sided(9).unwrap(), brute);
    assert_eq!(
        dehomogenize_xy(&genpoly::rec_four_variable(9).unwrap()).unwrap(),
        brute
    );
    let nine = start_nine.elapsed();
    assert!(nine < Duration::from_secs(60), "n = 9 took {nine:?}");
    pass_line(
        2,
        start.elapsed(),
        "rec = brute for n <= 8 single-threaded and n = 9 on 4 workers",
    );
}

/// Criterion 3: type B recurrence equals brute force over the
/// hyperoctahedral group for n <= 5 (< 5 s) and n = 6 (46080 elements,
/// < 30 s).
#[test]
fn criterion_3_oracle_equivalence_type_b() {
    let start = Instant::now();
    for n in 1..=5 {
        assert_eq!(
            genpoly::rec_type_b(n).unwrap(),
            genpoly::brute_type_b(n, &SignedPermutation::identity(n), 1).unwrap(),
            "n = {n}"
        );
    }
    let five = start.elapsed();
    assert!(five < Duration::from_secs(5), "n <= 5 took {five:?}");

    let start_six = Instant::now();
    assert_eq!(bn_order(6), 46080);
    assert_eq!(
        genpoly::rec_type_b(6).unwrap(),
        genpoly::brute_type_b(6, &SignedPermutation::identity(6), 1).unwrap()
    );
    let six = start_six.elapsed();
    assert!(six < Duration::from_secs(30), "n = 6 took {six:?}");
    pass_line(3, start.elapsed(), "type B rec = brute for n <= 6");
}

/// Criterion 4: the gamma coefficient recurrence agrees with the exact
/// expansion for n <= 10, and its row sums reproduce the univariate table.
/// Runtime < 5 s.
#[test]
fn criterion_4_gamma_recurrence_consistency() {
    let start = Instant::now();
    let rows = gammalab::gamma_bivariate_rec(10).unwrap();
    let uni = gammalab::gamma_univariate_rec(10);
    for (row, urow) in rows.iter().zip(&uni) {
        let n = row.n;
        let expansion = gammalab::expand_gamma(
            &genpoly::rec_four_variable(n).unwrap(),
            &BasisSpec::type_a_four_variable(n),
        )
        .unwrap();
        assert_eq!(expansion, row.entries, "expansion n = {n}");

        let mut sums: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (&(i, _), value) in &row.entries {
            *sums.entry(i).or_insert_with(|| BigInt::from(0)) += value;
        }
        sums.retain(|_, v| *v != BigInt::from(0));
        assert_eq!(sums, urow.entries, "row sums n = {n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass_line(
        4,
        elapsed,
        "recurrence = expansion and row sums match, n <= 10",
    );
}

/// Criterion 5: the nonnegativity experiment reports "all nonnegative
/// integers" for every n <= 12 from recurrence-generated polynomials.
/// Conjecture-class. Runtime < 30 s.
#[test]
fn criterion_5_gessel_experiment() {
    let start = Instant::now();
    for n in 1..=12 {
        let report = gammalab::check_gessel(n, 1);
        assert_eq!(report.class, verify::CheckClass::Conjecture);
        assert!(
            report.is_pass(),
            "n = {n}: {}",
            report.witness.unwrap_or_default()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass_line(5, elapsed, "gamma nonnegativity confirmed for n <= 12");
}

/// Criterion 6: the theorem-class suite passes exhaustively at its default
/// desk-scale bounds: check_crs (n <= 6), check_crs_tau (n <= 5, all tau),
/// check_typeB_series (n <= 4, all tau), check_cyclic (n <= 6),
/// check_rotation_lemma (n <= 7), check_klein (n <= 9), check_reversal
/// (n <= 7), verify_operator_identities (full region, n <= 8). Total
/// < 5 min on 4 workers.
#[test]
fn criterion_6_theorem_suite() {
    let start = Instant::now();
    let reports = verify::run_suite(
        &SuiteSelector::Theorems,
        &SuiteOptions {
            max_n: None,
            workers: 4,
        },
    )
    .unwrap();
    let expected_counts: &[(&str, usize)] = &[
        ("check_crs", 6),
        ("check_crs_tau", 5),
        ("check_cyclic", 6),
        ("check_klein", 9),
        ("check_reversal", 7),
        ("check_rotation_lemma", 6), // n = 2..=7
        ("check_typeB_series", 4),
        ("verify_operator_identities", 8),
    ];
    for (name, count) in expected_counts {
        let matching: Vec<_> = reports.iter().filter(|r| r.check == *name).collect();
        assert_eq!(matching.len(), *count, "{name}");
        for report in matching {
            assert!(
                report.is_pass(),
                "{name} {:?}: {}",
                report.params,
                report.witness.clone().unwrap_or_default()
            );
        }
    }
    assert!(!verify::any_theorem_failure(&reports));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    pass_line(6, elapsed, "all theorem-class checks pass exhaustively");
}

/// Criterion 7: conjecture-class exhaustive confirmations.
/// check_tau_independence (n <= 6) and check_invseq (n <= 9, < 60 s),
/// reported with the conjecture label.
#[test]
fn criterion_7_conjecture_confirmations() {
    let start = Instant::now();
    for n in 1..=6 {
        let report = verify::check_tau_independence(n, 1);
        assert!(report.is_pass(), "tau independence n = {n}");
        assert_eq!(report.to_json_value()["params"]["class"], "conjecture");
    }
    let invseq_start = Instant::now();
    for n in 1..=9 {
        let report = verify::check_invseq(n, 2);
        assert!(report.is_pass(), "invseq n = {n}");
        assert_eq!(report.to_json_value()["params"]["class"], "conjecture");
    }
    let invseq_elapsed = invseq_start.elapsed();
    assert!(
        invseq_elapsed < Duration::from_secs(60),
        "invseq took {invseq_elapsed:?}"
    );
    pass_line(
        7,
        start.elapsed(),
        "tau independence (n <= 6) and inversion-sequence model (n <= 9) confirmed",
    );
}

/// Criterion 8: every generated family evaluates to its set cardinality at
/// all variables 1 (n! or 2^n n!), n up to each family's cap: brute
/// families to the enumeration caps (S_n, I_n <= 11; B_n <= 8), recurrence
/// families to n = 40.
#[test]
fn criterion_8_normalization() {
    let start = Instant::now();
    for n in 1..=11u32 {
        let mass = BigInt::from(sn_order(n));
        assert_eq!(genpoly::brute_eulerian(n, 4).unwrap().eval_ones(), mass);
        assert_eq!(
            genpoly::brute_eulerian_homog(n, 4).unwrap().eval_ones(),
            mass
        );
        assert_eq!(genpoly::brute_two_sided(n, 4).unwrap().eval_ones(), mass);
        assert_eq!(
            genpoly::brute_two_sided_homog(n, 4).unwrap().eval_ones(),
            mass
        );
        assert_eq!(genpoly::brute_invseq(n, 4).unwrap().eval_ones(), mass);
        assert_eq!(
            genpoly::brute_two_sided_tau(n, &gessel_core::permstat::Permutation::reversal(n), 4)
                .unwrap()
                .eval_ones(),
            mass
        );
        assert_eq!(
            genpoly::brute_reversal_homog(n, 4).unwrap().eval_ones(),
            mass
        );
        if n >= 2 {
            assert_eq!(genpoly::brute_cyclic(n, 4).unwrap().eval_ones(), mass);
        }
    }
    for n in 1..=8u32 {
        let mass = BigInt::from(bn_order(n));
        assert_eq!(
            genpoly::brute_type_b(n, &SignedPermutation::identity(n), 4)
                .unwrap()
                .eval_ones(),
            mass,
            "type B n = {n}"
        );
        let twisted = SignedPermutation::new((1..=n as i32).map(|v| -v).collect()).unwrap();
        assert_eq!(
            genpoly::brute_type_b(n, &twisted, 4).unwrap().eval_ones(),
            mass,
            "type B tau n = {n}"
        );
    }
    // Recurrence families to the rec cap: mass n! (or 2^n n!) without
    // enumeration, using exact big-integer factorials.
    let mut factorial = BigInt::from(1);
    let mut two_pow = BigInt::from(2);
    for n in 1..=40u32 {
        factorial *= n;
        assert_eq!(genpoly::rec_eulerian(n).unwrap().eval_ones(), factorial);
        assert_eq!(genpoly::rec_two_sided(n).unwrap().eval_ones(), factorial);
        assert_eq!(
            genpoly::rec_four_variable(n).unwrap().eval_ones(),
            factorial
        );
        assert_eq!(genpoly::rec_reversal(n).unwrap().eval_ones(), factorial);
        assert_eq!(
            genpoly::rec_type_b(n).unwrap().eval_ones(),
            &factorial * &two_pow,
            "type B n = {n}"
        );
        two_pow *= 2;
    }
    pass_line(
        8,
        start.elapsed(),
        "all families normalize to their group orders",
    );
}

/// Criterion 9: gen and gamma outputs are byte-identical for --workers 1
/// vs --workers 8 on three representative commands.
#[test]
fn criterion_9_worker_determinism() {
    let start = Instant::now();
    let commands: [&[&str]; 3] = [
        &["gen", "two-sided", "--n", "8", "--method", "brute"],
        &["gen", "invseq", "--n", "8", "--format", "csv"],
        &[
            "gamma", "--n-max", "8", "--method", "expand", "--format", "csv",
        ],
    ];
    for args in commands {
        let run = |workers: &str| {
            let output = Command::new(env!("CARGO_BIN_EXE_gessel"))
                .args(args)
                .args(["--workers", workers])
                .output()
                .expect("binary runs");
            assert!(output.status.success(), "{args:?}");
            output.stdout
        };
        assert_eq!(run("1"), run("8"), "{args:?}");
    }
    pass_line(
        9,
        start.elapsed(),
        "byte-identical outputs for workers 1 vs 8",
    );
}
