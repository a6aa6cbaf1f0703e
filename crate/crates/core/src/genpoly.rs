//! Generating polynomial families.
//!
//! Every family can be produced by brute-force enumeration over the
//! underlying combinatorial set; the families with a known recurrence are
//! also produced by that recurrence, independently, so the two paths can
//! verify each other.
//!
//! Exponent conventions (frozen, also the serialization contract):
//!
//! | family          | term for one object                          |
//! |-----------------|----------------------------------------------|
//! | eulerian        | `t^(des+1)`                                  |
//! | eulerian-homog  | `t^(des+1) y^(asc+1)`                        |
//! | two-sided       | `s^(ides+1) t^(des+1)`                       |
//! | two-sided-homog | `s^(ides+1) t^(des+1) x^(iasc+1) y^(asc+1)`  |
//! | two-sided-tau   | `s^(des(p)+1) t^(des(p^-1 tau)+1)`           |
//! | type-B          | `s^(des_B(p)) t^(des_B(p^-1))`               |
//! | type-B-tau      | `s^(des_B(p)) t^(des_B(p^-1 tau))`           |
//! | reversal-homog  | homogenization of two-sided-tau at tau = w0  |
//! | cyclic          | `s^(cdes(p^-1)) t^(cdes(p))`                 |
//! | invseq          | `s^(dst(e)) t^(asc_I(e)+1)`                  |
//!
//! The recurrences all produce `n * (result)`; the division is performed
//! exactly and non-divisibility is a loud internal error, never silent.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactpoly::{PolyError, Polynomial, VarSet};
use crate::permstat::{
    bn_for_each, bn_order, in_for_each, sn_for_each, sn_order, split_range, PermError, Permutation,
    SignedPermutation,
};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("method {method} is not available for family {family}")]
    MethodUnavailable { family: String, method: Method },
    #[error("family {family} requires n in {min}..={max}, got {n}")]
    SizeOutOfRange {
        family: String,
        n: u32,
        min: u32,
        max: u32,
    },
    #[error("family {family} does not take a tau parameter")]
    UnexpectedTau { family: String },
    #[error("family {family} requires a tau parameter")]
    MissingTau { family: String },
    #[error("tau has size {got}, expected {expected}")]
    TauSizeMismatch { got: u32, expected: u32 },
    #[error("tau must be {expected} for family {family}")]
    TauKindMismatch {
        family: String,
        expected: &'static str,
    },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl From<PolyError> for GenError {
    fn from(err: PolyError) -> Self {
        // Polynomial errors inside a recurrence mean the algebra is wrong.
        GenError::Internal(err.to_string())
    }
}

fn div_exact_by_n(p: Polynomial, n: u32, context: &str) -> Result<Polynomial, GenError> {
    p.div_exact(n)
        .map_err(|e| GenError::Internal(format!("{context}: {e}")))
}

// ---------------------------------------------------------------------------
// PolyFamily
// ---------------------------------------------------------------------------

/// The polynomial families the crate knows how to generate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Eulerian,
    EulerianHomog,
    TwoSided,
    TwoSidedHomog,
    TwoSidedTau,
    TypeB,
    TypeBTau,
    ReversalHomog,
    Cyclic,
    InvSeq,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::Eulerian,
        FamilyKind::EulerianHomog,
        FamilyKind::TwoSided,
        FamilyKind::TwoSidedHomog,
        FamilyKind::TwoSidedTau,
        FamilyKind::TypeB,
        FamilyKind::TypeBTau,
        FamilyKind::ReversalHomog,
        FamilyKind::Cyclic,
        FamilyKind::InvSeq,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Eulerian => "eulerian",
            FamilyKind::EulerianHomog => "eulerian-homog",
            FamilyKind::TwoSided => "two-sided",
            FamilyKind::TwoSidedHomog => "two-sided-homog",
            FamilyKind::TwoSidedTau => "two-sided-tau",
            FamilyKind::TypeB => "type-B",
            FamilyKind::TypeBTau => "type-B-tau",
            FamilyKind::ReversalHomog => "reversal-homog",
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::InvSeq => "invseq",
        }
    }

    /// Whether the family has a recurrence fast path.
    pub fn has_rec(&self) -> bool {
        !matches!(
            self,
            FamilyKind::TwoSidedTau
                | FamilyKind::TypeBTau
                | FamilyKind::Cyclic
                | FamilyKind::InvSeq
        )
    }

    /// Whether the family takes a tau parameter.
    pub fn takes_tau(&self) -> bool {
        matches!(self, FamilyKind::TwoSidedTau | FamilyKind::TypeBTau)
    }

    /// Smallest legal n.
    pub fn min_n(&self) -> u32 {
        if matches!(self, FamilyKind::Cyclic) {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == text)
            .ok_or_else(|| {
                let names: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.as_str()).collect();
                format!(
                    "unknown family `{text}` (expected one of: {})",
                    names.join(", ")
                )
            })
    }
}

/// A tau parameter: a plain or signed permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tau {
    Unsigned(Permutation),
    Signed(SignedPermutation),
}

/// One member of a polynomial family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyFamily {
    pub kind: FamilyKind,
    pub n: u32,
    pub tau: Option<Tau>,
}

impl PolyFamily {
    pub fn new(kind: FamilyKind, n: u32, tau: Option<Tau>) -> Result<Self, GenError> {
        if n < kind.min_n() {
            return Err(GenError::SizeOutOfRange {
                family: kind.to_string(),
                n,
                min: kind.min_n(),
                max: u32::MAX,
            });
        }
        match (&tau, kind.takes_tau()) {
            (Some(_), false) => {
                return Err(GenError::UnexpectedTau {
                    family: kind.to_string(),
                })
            }
            (None, true) => {
                return Err(GenError::MissingTau {
                    family: kind.to_string(),
                })
            }
            _ => {}
        }
        if let Some(tau) = &tau {
            let (size, signed) = match tau {
                Tau::Unsigned(p) => (p.n(), false),
                Tau::Signed(p) => (p.n(), true),
            };
            if size != n {
                return Err(GenError::TauSizeMismatch {
                    got: size,
                    expected: n,
                });
            }
            let expect_signed = matches!(kind, FamilyKind::TypeBTau);
            if signed != expect_signed {
                return Err(GenError::TauKindMismatch {
                    family: kind.to_string(),
                    expected: if expect_signed {
                        "a signed permutation"
                    } else {
                        "a plain permutation"
                    },
                });
            }
        }
        Ok(PolyFamily { kind, n, tau })
    }
}

/// Generation method.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Brute,
    Rec,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Rec => "rec",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        match text {
            "brute" => Ok(Method::Brute),
            "rec" => Ok(Method::Rec),
            other => Err(format!("unknown method `{other}` (expected brute or rec)")),
        }
    }
}

/// Generates one family member with the given method.
pub fn generate(
    family: &PolyFamily,
    method: Method,
    workers: usize,
) -> Result<Polynomial, GenError> {
    let n = family.n;
    match (family.kind, method) {
        (FamilyKind::Eulerian, Method::Brute) => brute_eulerian(n, workers),
        (FamilyKind::Eulerian, Method::Rec) => rec_eulerian(n),
        (FamilyKind::EulerianHomog, Method::Brute) => brute_eulerian_homog(n, workers),
        (FamilyKind::EulerianHomog, Method::Rec) => rec_eulerian_homog(n),
        (FamilyKind::TwoSided, Method::Brute) => brute_two_sided(n, workers),
        (FamilyKind::TwoSided, Method::Rec) => rec_two_sided(n),
        (FamilyKind::TwoSidedHomog, Method::Brute) => brute_two_sided_homog(n, workers),
        (FamilyKind::TwoSidedHomog, Method::Rec) => rec_four_variable(n),
        (FamilyKind::TwoSidedTau, Method::Brute) => {
            let Some(Tau::Unsigned(tau)) = &family.tau else {
                unreachable!("validated at construction");
            };
            brute_two_sided_tau(n, tau, workers)
        }
        (FamilyKind::TypeB, Method::Brute) => {
            brute_type_b(n, &SignedPermutation::identity(n), workers)
        }
        (FamilyKind::TypeB, Method::Rec) => rec_type_b(n),
        (FamilyKind::TypeBTau, Method::Brute) => {
            let Some(Tau::Signed(tau)) = &family.tau else {
                unreachable!("validated at construction");
            };
            brute_type_b(n, tau, workers)
        }
        (FamilyKind::ReversalHomog, Method::Brute) => brute_reversal_homog(n, workers),
        (FamilyKind::ReversalHomog, Method::Rec) => rec_reversal(n),
        (FamilyKind::Cyclic, Method::Brute) => brute_cyclic(n, workers),
        (FamilyKind::InvSeq, Method::Brute) => brute_invseq(n, workers),
        (kind, Method::Rec) => Err(GenError::MethodUnavailable {
            family: kind.to_string(),
            method,
        }),
    }
}

// ---------------------------------------------------------------------------
// Brute-force enumeration
// ---------------------------------------------------------------------------

/// Accumulates `u64` counts over a `(dim + 1) x (dim + 1)` grid by walking
/// chunks of `0..total` in parallel and merging the per-worker grids.
/// The merge is an elementwise sum, so the result does not depend on the
/// worker count.
fn parallel_pair_counts<F>(total: u64, dim: usize, workers: usize, count_chunk: F) -> Vec<u64>
where
    F: Fn(u64, u64, &mut [u64]) + Sync,
{
    let side = dim + 1;
    let chunks = split_range(total, workers);
    if chunks.len() == 1 {
        let mut grid = vec![0u64; side * side];
        count_chunk(0, total, &mut grid);
        return grid;
    }
    let grids: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|&(lo, hi)| {
                let count_chunk = &count_chunk;
                scope.spawn(move || {
                    let mut grid = vec![0u64; side * side];
                    count_chunk(lo, hi, &mut grid);
                    grid
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut merged = vec![0u64; side * side];
    for grid in grids {
        for (m, g) in merged.iter_mut().zip(grid) {
            *m += g;
        }
    }
    merged
}

fn grid_to_poly<F>(grid: &[u64], side: usize, vars: VarSet, exps_of: F) -> Polynomial
where
    F: Fn(u32, u32) -> Vec<u32>,
{
    let terms = grid
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(idx, &c)| {
            let i = (idx / side) as u32;
            let j = (idx % side) as u32;
            (exps_of(i, j), BigInt::from(c))
        });
    Polynomial::from_terms(vars, terms).expect("exponent vectors constructed to length")
}

fn check_n(kind: FamilyKind, n: u32, max: u32) -> Result<(), GenError> {
    if n < kind.min_n() || n > max {
        return Err(GenError::SizeOutOfRange {
            family: kind.to_string(),
            n,
            min: kind.min_n(),
            max,
        });
    }
    Ok(())
}

/// `sum over S_n of s^(ides+1) t^(des+1)` by enumeration.
pub fn brute_two_sided(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TwoSided, n, crate::permstat::MAX_SN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            grid[p.ides() as usize * side + p.des() as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::st(), |i, d| {
        vec![i + 1, d + 1]
    }))
}

/// `sum over S_n of s^(ides+1) t^(des+1) x^(iasc+1) y^(asc+1)`.
pub fn brute_two_sided_homog(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TwoSidedHomog, n, crate::permstat::MAX_SN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            grid[p.ides() as usize * side + p.des() as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::stxy(), |i, d| {
        vec![i + 1, d + 1, n - i, n - d]
    }))
}

/// `sum over S_n of t^(des+1)`.
pub fn brute_eulerian(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::Eulerian, n, crate::permstat::MAX_SN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            grid[p.des() as usize * side] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::t(), |d, _| vec![d + 1]))
}

/// `sum over S_n of t^(des+1) y^(asc+1)`.
pub fn brute_eulerian_homog(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::EulerianHomog, n, crate::permstat::MAX_SN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            grid[p.des() as usize * side] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::ty(), |d, _| {
        vec![d + 1, n - d]
    }))
}

/// `sum over S_n of s^(des(p)+1) t^(des(p^-1 tau)+1)`.
pub fn brute_two_sided_tau(
    n: u32,
    tau: &Permutation,
    workers: usize,
) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TwoSidedTau, n, crate::permstat::MAX_SN)?;
    if tau.n() != n {
        return Err(GenError::TauSizeMismatch {
            got: tau.n(),
            expected: n,
        });
    }
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            let d1 = p.des();
            let d2 = p.inverse().compose(tau).expect("sizes match").des();
            grid[d1 as usize * side + d2 as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::st(), |a, b| {
        vec![a + 1, b + 1]
    }))
}

/// `sum over B_n of s^(des_B(p)) t^(des_B(p^-1 tau))`.
pub fn brute_type_b(
    n: u32,
    tau: &SignedPermutation,
    workers: usize,
) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TypeB, n, crate::permstat::MAX_BN)?;
    if tau.n() != n {
        return Err(GenError::TauSizeMismatch {
            got: tau.n(),
            expected: n,
        });
    }
    let side = n as usize + 2;
    let grid = parallel_pair_counts(bn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        bn_for_each(n, lo, hi, |p| {
            let d1 = p.des_b();
            let d2 = p.inverse().compose(tau).expect("sizes match").des_b();
            grid[d1 as usize * side + d2 as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::st(), |a, b| vec![a, b]))
}

/// `sum over S_n of s^(cdes(p^-1)) t^(cdes(p))`, n >= 2.
pub fn brute_cyclic(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::Cyclic, n, crate::permstat::MAX_SN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        sn_for_each(n, lo, hi, |p| {
            grid[p.inverse().cdes() as usize * side + p.cdes() as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::st(), |a, b| vec![a, b]))
}

/// `sum over I_n of s^(dst(e)) t^(asc_I(e)+1)`.
pub fn brute_invseq(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::InvSeq, n, crate::permstat::MAX_IN)?;
    let side = n as usize + 2;
    let grid = parallel_pair_counts(sn_order(n), n as usize + 1, workers, |lo, hi, grid| {
        in_for_each(n, lo, hi, |e| {
            grid[e.dst() as usize * side + e.asc_i() as usize] += 1;
        })
        .expect("chunk bounds are valid");
    });
    Ok(grid_to_poly(&grid, side, VarSet::st(), |d, a| {
        vec![d, a + 1]
    }))
}

/// Brute-force reversal family: the two-sided tau distribution at
/// `tau = n(n-1)...1`, homogenized to four variables at degree `n + 1`.
pub fn brute_reversal_homog(n: u32, workers: usize) -> Result<Polynomial, GenError> {
    let bivariate = brute_two_sided_tau(n, &Permutation::reversal(n), workers)?;
    let mut lifted = Polynomial::zero(VarSet::stxy());
    for (e, c) in bivariate.terms() {
        let term =
            Polynomial::monomial(VarSet::stxy(), &[e[0], e[1], 0, 0], c.clone()).expect("length 4");
        lifted = &lifted + &term;
    }
    Ok(lifted.homogenize(&[("s", "x"), ("t", "y")], n + 1)?)
}

// ---------------------------------------------------------------------------
// Recurrences
// ---------------------------------------------------------------------------

/// Classical Eulerian recurrence:
/// `A_n(t) = n t A_{n-1}(t) + t(1-t) dA_{n-1}/dt`, `A_1(t) = t`.
pub fn rec_eulerian(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::Eulerian, n, u32::MAX)?;
    let vars = VarSet::t();
    let t = Polynomial::var(vars, "t")?;
    let t_one_minus_t = &t - &t.pow(2);
    let mut a = t.clone();
    for k in 2..=n {
        let nt = t.scale(k);
        a = &(&nt * &a) + &(&t_one_minus_t * &a.partial("t")?);
    }
    Ok(a)
}

/// Homogenized Eulerian recurrence:
/// `A_n(t;y) = ty (d/dt + d/dy) A_{n-1}(t;y)`, `A_1(t;y) = ty`.
pub fn rec_eulerian_homog(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::EulerianHomog, n, u32::MAX)?;
    let vars = VarSet::ty();
    let ty = Polynomial::monomial(vars.clone(), &[1, 1], 1)?;
    let mut a = ty.clone();
    for _ in 2..=n {
        a = &ty * &(&a.partial("t")? + &a.partial("y")?);
    }
    Ok(a)
}

/// Bivariate two-sided recurrence (Carlitz–Roselle–Scoville form):
///
/// `n A_n = (n^2 st + (n-1)(1-s)(1-t)) A_{n-1} + n st(1-s) dA/ds
///          + n st(1-t) dA/dt + st(1-s)(1-t) d^2 A/(ds dt)`,
///
/// with `A_1(s,t) = st`. The right side is always divisible by `n`; the
/// division is checked.
pub fn rec_two_sided(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TwoSided, n, u32::MAX)?;
    let vars = VarSet::st();
    let s = Polynomial::var(vars.clone(), "s")?;
    let t = Polynomial::var(vars.clone(), "t")?;
    let one = Polynomial::one(vars.clone());
    let st = &s * &t;
    let one_minus_s = &one - &s;
    let one_minus_t = &one - &t;
    let mut a = st.clone();
    for k in 2..=n {
        let ds = a.partial("s")?;
        let dt = a.partial("t")?;
        let dst = ds.partial("t")?;
        let coef0 = &st.scale(k as u64 * k as u64) + &(&one_minus_s * &one_minus_t).scale(k - 1);
        let mut rhs = &coef0 * &a;
        rhs = &rhs + &(&st.scale(k) * &(&one_minus_s * &ds));
        rhs = &rhs + &(&st.scale(k) * &(&one_minus_t * &dt));
        rhs = &rhs + &(&(&st * &one_minus_s) * &(&one_minus_t * &dst));
        a = div_exact_by_n(rhs, k, "two-sided recurrence")?;
    }
    Ok(a)
}

/// The homogeneous Eulerian operator
/// `T_n = n(s-x)(t-y) + stxy (d/ds + d/dx)(d/dt + d/dy)`.
pub fn apply_t_n(p: &Polynomial, n: u32) -> Result<Polynomial, GenError> {
    let vars = p.vars().clone();
    let s = Polynomial::var(vars.clone(), "s")?;
    let t = Polynomial::var(vars.clone(), "t")?;
    let x = Polynomial::var(vars.clone(), "x")?;
    let y = Polynomial::var(vars.clone(), "y")?;
    let stxy = &(&s * &t) * &(&x * &y);
    let multiplier = (&(&s - &x) * &(&t - &y)).scale(n);
    let inner = &p.partial("t")? + &p.partial("y")?;
    let second = &inner.partial("s")? + &inner.partial("x")?;
    Ok(&(&multiplier * p) + &(&stxy * &second))
}

/// Four-variable recurrence: `n A_n = T_{n-1}[A_{n-1}]` with
/// `A_1(s,t;x,y) = stxy`. Homogeneous of degree `2n + 2`.
pub fn rec_four_variable(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TwoSidedHomog, n, u32::MAX)?;
    let mut a = Polynomial::monomial(VarSet::stxy(), &[1, 1, 1, 1], 1)?;
    for k in 2..=n {
        let rhs = apply_t_n(&a, k - 1)?;
        a = div_exact_by_n(rhs, k, "four-variable recurrence")?;
    }
    Ok(a)
}

/// Type B two-sided recurrence:
///
/// `n B_n = (2n^2 st - n st + n) B_{n-1}
///          + (2n st(1-s) + s(1-s)(1-t)) dB/ds
///          + (2n st(1-t) + t(1-s)(1-t)) dB/dt
///          + 2 st(1-s)(1-t) d^2 B/(ds dt)`,
///
/// with `B_1(s,t) = 1 + st`.
pub fn rec_type_b(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::TypeB, n, u32::MAX)?;
    let vars = VarSet::st();
    let s = Polynomial::var(vars.clone(), "s")?;
    let t = Polynomial::var(vars.clone(), "t")?;
    let one = Polynomial::one(vars.clone());
    let st = &s * &t;
    let one_minus_s = &one - &s;
    let one_minus_t = &one - &t;
    let mut b = &one + &st;
    for k in 2..=n {
        let ds = b.partial("s")?;
        let dt = b.partial("t")?;
        let dst = ds.partial("t")?;
        let k64 = k as u64;
        let coef0 = &(&st.scale(2 * k64 * k64) - &st.scale(k)) + &one.scale(k);
        let coef_s = &(&st * &one_minus_s).scale(2 * k64) + &(&(&s * &one_minus_s) * &one_minus_t);
        let coef_t = &(&st * &one_minus_t).scale(2 * k64) + &(&(&t * &one_minus_s) * &one_minus_t);
        let coef_st = (&(&st * &one_minus_s) * &one_minus_t).scale(2);
        let rhs = &(&(&coef0 * &b) + &(&coef_s * &ds)) + &(&(&coef_t * &dt) + &(&coef_st * &dst));
        b = div_exact_by_n(rhs, k, "type B recurrence")?;
    }
    Ok(b)
}

/// Reversal-family recurrence: same as the four-variable one but with the
/// multiplier sign flipped to `(x-s)(t-y)`; base `stxy`.
pub fn rec_reversal(n: u32) -> Result<Polynomial, GenError> {
    check_n(FamilyKind::ReversalHomog, n, u32::MAX)?;
    let vars = VarSet::stxy();
    let s = Polynomial::var(vars.clone(), "s")?;
    let t = Polynomial::var(vars.clone(), "t")?;
    let x = Polynomial::var(vars.clone(), "x")?;
    let y = Polynomial::var(vars.clone(), "y")?;
    let stxy = &(&s * &t) * &(&x * &y);
    let mut a = stxy.clone();
    for k in 2..=n {
        let multiplier = (&(&x - &s) * &(&t - &y)).scale(k - 1);
        let inner = &a.partial("t")? + &a.partial("y")?;
        let second = &inner.partial("s")? + &inner.partial("x")?;
        let rhs = &(&multiplier * &a) + &(&stxy * &second);
        a = div_exact_by_n(rhs, k, "reversal recurrence")?;
    }
    Ok(a)
}

/// Dehomogenizes a four-variable polynomial at `x = y = 1` down to `(s, t)`.
pub fn dehomogenize_xy(p: &Polynomial) -> Result<Polynomial, GenError> {
    Ok(p.substitute("x", 1)?
        .substitute("y", 1)?
        .drop_vars(&["x", "y"])?)
}
