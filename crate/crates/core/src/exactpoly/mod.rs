//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! A [`Polynomial`] is a map from exponent vectors to nonzero
//! arbitrary-precision integers over a fixed ordered [`VarSet`]. All
//! arithmetic is exact; zero coefficients are never stored. Term iteration
//! is lexicographic on exponent vectors, so printing and serialization are
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

mod solve;

pub use solve::{binomial, solve_exact_linear, Rational, RationalVector, SolveError};

/// Errors from polynomial construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable sets differ: [{0}] vs [{1}]")]
    VarSetMismatch(String, String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("variable map is not a bijection of the variable set")]
    NotABijection,
    #[error("degree {degree} too small: `{var}` appears with exponent {exponent}")]
    DegreeTooSmall {
        var: String,
        exponent: u32,
        degree: u32,
    },
    #[error("polynomial already involves homogenizing variable `{0}`")]
    HomogenizingVarInUse(String),
    #[error("variable `{0}` still appears with a nonzero exponent")]
    VariableInUse(String),
    #[error("coefficient {coefficient} of {monomial} is not divisible by {divisor}")]
    NotDivisible {
        monomial: String,
        coefficient: String,
        divisor: String,
    },
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

/// An ordered set of distinct variable names.
///
/// The order is fixed at construction; exponent vectors are always read
/// against it. The canonical order used throughout the crate is
/// `s, t, x, y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarSet { names })
    }

    /// The single variable `t`.
    pub fn t() -> Self {
        VarSet::new(["t"]).unwrap()
    }

    /// The pair `t, y` (homogenized Eulerian polynomials).
    pub fn ty() -> Self {
        VarSet::new(["t", "y"]).unwrap()
    }

    /// The pair `s, t` (two-sided polynomials).
    pub fn st() -> Self {
        VarSet::new(["s", "t"]).unwrap()
    }

    /// The quadruple `s, t, x, y` (homogenized two-sided polynomials).
    pub fn stxy() -> Self {
        VarSet::new(["s", "t", "x", "y"]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    fn joined(&self) -> String {
        self.names.join(",")
    }
}

/// A sparse multivariate polynomial with exact integer coefficients.
///
/// Invariants: every stored coefficient is nonzero and every exponent vector
/// has length `vars.len()`. Two polynomials are equal iff their variable
/// sets and term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    /// The zero polynomial (empty term map).
    pub fn zero(vars: VarSet) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant<C: Into<BigInt>>(vars: VarSet, c: C) -> Self {
        let c = c.into();
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The constant 1.
    pub fn one(vars: VarSet) -> Self {
        Polynomial::constant(vars, 1)
    }

    /// The monomial equal to a single variable.
    pub fn var(vars: VarSet, name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Polynomial::zero(vars);
        p.terms.insert(exps, BigInt::one());
        Ok(p)
    }

    /// A single term `c * prod(v_k^{e_k})`.
    pub fn monomial<C: Into<BigInt>>(vars: VarSet, exps: &[u32], c: C) -> Result<Self, PolyError> {
        if exps.len() != vars.len() {
            return Err(PolyError::ExponentLength {
                got: exps.len(),
                expected: vars.len(),
            });
        }
        let c = c.into();
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        Ok(p)
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs.
    /// Repeated exponent vectors are summed; zero results are dropped.
    pub fn from_terms<I, C>(vars: VarSet, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero(vars);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(PolyError::ExponentLength {
                    got: exps.len(),
                    expected: p.vars.len(),
                });
            }
            p.add_term(exps, c.into());
        }
        Ok(p)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarSetMismatch(
                self.vars.joined(),
                other.vars.joined(),
            ));
        }
        Ok(())
    }

    /// Term-wise sum. Errors if the variable sets differ.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Term-wise difference. Errors if the variable sets differ.
    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Distributive exact product. Errors if the variable sets differ.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_vars(other)?;
        let mut out = Polynomial::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exact power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.vars.clone());
        for _ in 0..k {
            out = out.try_mul(self).expect("same variable set");
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Polynomial {
        let c = c.into();
        let mut out = Polynomial::zero(self.vars.clone());
        if c.is_zero() {
            return out;
        }
        for (e, coeff) in &self.terms {
            out.terms.insert(e.clone(), coeff * &c);
        }
        out
    }

    /// Divides every coefficient by `d`, requiring exactness.
    pub fn div_exact<C: Into<BigInt>>(&self, d: C) -> Result<Polynomial, PolyError> {
        let d = d.into();
        assert!(!d.is_zero(), "division by zero");
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            use num_integer::Integer;
            let (q, r) = c.div_rem(&d);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible {
                    monomial: self.monomial_string(e),
                    coefficient: c.to_string(),
                    divisor: d.to_string(),
                });
            }
            out.terms.insert(e.clone(), q);
        }
        Ok(out)
    }

    /// Exact formal partial derivative with respect to `name`.
    pub fn partial(&self, name: &str) -> Result<Polynomial, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[idx] -= 1;
            out.terms.insert(exps, c * BigInt::from(e[idx]));
        }
        Ok(out)
    }

    /// The stored coefficient of the exponent vector `exps`, or 0.
    pub fn coeff(&self, exps: &[u32]) -> Result<BigInt, PolyError> {
        if exps.len() != self.vars.len() {
            return Err(PolyError::ExponentLength {
                got: exps.len(),
                expected: self.vars.len(),
            });
        }
        Ok(self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Applies a permutation of the variable set, given as `(from, to)`
    /// pairs; variables not mentioned stay fixed. The exponent carried by
    /// `from` moves to `to`.
    pub fn permute_vars(&self, map: &[(&str, &str)]) -> Result<Polynomial, PolyError> {
        let k = self.vars.len();
        let mut target: Vec<Option<usize>> = vec![None; k];
        for (from, to) in map {
            let fi = self
                .vars
                .index_of(from)
                .ok_or_else(|| PolyError::UnknownVariable(from.to_string()))?;
            let ti = self
                .vars
                .index_of(to)
                .ok_or_else(|| PolyError::UnknownVariable(to.to_string()))?;
            if target[fi].is_some() {
                return Err(PolyError::NotABijection);
            }
            target[fi] = Some(ti);
        }
        for (fi, slot) in target.iter_mut().enumerate() {
            if slot.is_none() {
                *slot = Some(fi);
            }
        }
        let mut seen = vec![false; k];
        for &ti in target.iter().flatten() {
            if seen[ti] {
                return Err(PolyError::NotABijection);
            }
            seen[ti] = true;
        }
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; k];
            for (fi, &exp) in e.iter().enumerate() {
                exps[target[fi].unwrap()] = exp;
            }
            out.terms.insert(exps, c.clone());
        }
        Ok(out)
    }

    /// Homogenizes with respect to `(var, hvar)` pairs at degree `d`:
    /// the result is `prod(hvar^d) * P(var/hvar, ...)`. `P` must not
    /// already involve any `hvar`, and `d` must be at least the degree of
    /// `P` in each `var`.
    pub fn homogenize(&self, pairs: &[(&str, &str)], d: u32) -> Result<Polynomial, PolyError> {
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (var, hvar) in pairs {
            let vi = self
                .vars
                .index_of(var)
                .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
            let hi = self
                .vars
                .index_of(hvar)
                .ok_or_else(|| PolyError::UnknownVariable(hvar.to_string()))?;
            idx_pairs.push((vi, hi));
        }
        for e in self.terms.keys() {
            for &(vi, hi) in &idx_pairs {
                if e[hi] != 0 {
                    return Err(PolyError::HomogenizingVarInUse(
                        self.vars.names()[hi].clone(),
                    ));
                }
                if e[vi] > d {
                    return Err(PolyError::DegreeTooSmall {
                        var: self.vars.names()[vi].clone(),
                        exponent: e[vi],
                        degree: d,
                    });
                }
            }
        }
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            for &(vi, hi) in &idx_pairs {
                exps[hi] = d - e[vi];
            }
            out.terms.insert(exps, c.clone());
        }
        Ok(out)
    }

    /// Substitutes an integer constant for a variable.
    pub fn substitute<C: Into<BigInt>>(
        &self,
        name: &str,
        value: C,
    ) -> Result<Polynomial, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let value = value.into();
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps[idx] = 0;
            out.add_term(exps, c * value.pow(e[idx]));
        }
        Ok(out)
    }

    /// Removes variables that no longer occur (all exponents zero),
    /// shrinking the variable set. Errors if a listed variable still
    /// carries a nonzero exponent somewhere.
    pub fn drop_vars(&self, names: &[&str]) -> Result<Polynomial, PolyError> {
        let mut drop_idx = Vec::with_capacity(names.len());
        for name in names {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            drop_idx.push(idx);
        }
        for e in self.terms.keys() {
            for &idx in &drop_idx {
                if e[idx] != 0 {
                    return Err(PolyError::VariableInUse(self.vars.names()[idx].clone()));
                }
            }
        }
        let kept: Vec<usize> = (0..self.vars.len())
            .filter(|i| !drop_idx.contains(i))
            .collect();
        let vars = VarSet::new(kept.iter().map(|&i| self.vars.names()[i].clone()))?;
        let mut out = Polynomial::zero(vars);
        for (e, c) in &self.terms {
            let exps: Vec<u32> = kept.iter().map(|&i| e[i]).collect();
            out.terms.insert(exps, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at 1 for every variable (the sum of all coefficients).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The largest exponent of `name` in any term.
    pub fn degree_in(&self, name: &str) -> Result<u32, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.terms.keys().map(|e| e[idx]).max().unwrap_or(0))
    }

    /// If every term has the same total degree, returns it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn monomial_string(&self, exps: &[u32]) -> String {
        let factors: Vec<String> = exps
            .iter()
            .zip(self.vars.names())
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Serializes to the wire format
    /// `{"vars": [...], "terms": [{"e": [...], "c": "decimal"}, ...]}`
    /// with terms in lexicographic exponent order.
    pub fn to_json_string(&self) -> String {
        let doc = PolyJson {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.clone(),
                    c: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("polynomial serialization cannot fail")
    }

    /// Parses the wire format produced by [`Polynomial::to_json_string`].
    pub fn from_json_str(json: &str) -> Result<Polynomial, PolyError> {
        let doc: PolyJson =
            serde_json::from_str(json).map_err(|e| PolyError::Json(e.to_string()))?;
        let vars = VarSet::new(doc.vars)?;
        let mut p = Polynomial::zero(vars);
        for term in doc.terms {
            if term.e.len() != p.vars.len() {
                return Err(PolyError::ExponentLength {
                    got: term.e.len(),
                    expected: p.vars.len(),
                });
            }
            let c: BigInt = term
                .c
                .parse()
                .map_err(|_| PolyError::Json(format!("bad coefficient `{}`", term.c)))?;
            p.add_term(term.e, c);
        }
        Ok(p)
    }

    /// Renders as comma-separated CSV rows, one term per line: the exponent
    /// of each variable followed by the coefficient. Includes a header.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.vars.names().join(","));
        out.push_str(",coeff\n");
        for (e, c) in &self.terms {
            for exp in e {
                out.push_str(&exp.to_string());
                out.push(',');
            }
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    #[cfg(test)]
    fn assert_normalized(&self) {
        for (e, c) in &self.terms {
            assert_eq!(e.len(), self.vars.len());
            assert!(!c.is_zero());
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: String,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono = self.monomial_string(e);
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    /// Panics if the variable sets differ; use [`Polynomial::try_add`] to
    /// get an error instead.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("polynomial addition: variable sets differ")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("polynomial subtraction: variable sets differ")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("polynomial multiplication: variable sets differ")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}
