//! Permutations, signed permutations and inversion sequences, with the
//! descent statistics built on them.
//!
//! Words use one-line notation with 1-based values. Statistics are computed
//! on the fly and never cached. Enumeration is rank-addressable: any
//! contiguous slice of the lexicographic order can be walked independently,
//! which is what makes deterministic parallel splits possible.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest `n` for which `n!` fits in `u64` rank arithmetic.
pub const MAX_SN: u32 = 20;
/// Largest `n` for which `2^n * n!` fits in `u64` rank arithmetic.
pub const MAX_BN: u32 = 16;
/// Largest `n` for inversion-sequence enumeration (|I_n| = n!).
pub const MAX_IN: u32 = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("word is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("word is not a signed permutation of 1..={0}")]
    NotASignedPermutation(usize),
    #[error("inversion sequence entry e_{position} = {value} exceeds {max}")]
    InvalidInversionEntry {
        position: usize,
        value: u32,
        max: u32,
    },
    #[error("size {n} out of range {min}..={max}")]
    SizeOutOfRange { n: u32, min: u32, max: u32 },
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("rank {rank} out of range for {what} of size {n}")]
    RankOutOfRange {
        rank: u64,
        what: &'static str,
        n: u32,
    },
    #[error("cannot parse `{0}` as a permutation word")]
    Parse(String),
}

/// `n!` for `n <= MAX_SN`.
pub fn factorial(n: u32) -> u64 {
    assert!(n <= MAX_SN, "factorial overflow");
    (2..=n as u64).product()
}

/// `|S_n| = n!`.
pub fn sn_order(n: u32) -> u64 {
    factorial(n)
}

/// `|B_n| = 2^n * n!` for `n <= MAX_BN`.
pub fn bn_order(n: u32) -> u64 {
    assert!(n <= MAX_BN, "hyperoctahedral order overflow");
    factorial(n) << n
}

fn parse_word(text: &str) -> Result<Vec<i64>, PermError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(PermError::Parse(text.to_string()));
    }
    let parse_err = || PermError::Parse(text.to_string());
    if text.contains(',') {
        text.split(',')
            .map(|part| part.trim().parse::<i64>().map_err(|_| parse_err()))
            .collect()
    } else {
        text.chars()
            .map(|ch| ch.to_digit(10).map(i64::from).ok_or_else(parse_err))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        if n == 0 {
            return Err(PermError::NotAPermutation(n));
        }
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The decreasing word `n (n-1) ... 1`.
    pub fn reversal(n: u32) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Number of descents: positions `i` with `word[i] > word[i+1]`.
    pub fn des(&self) -> u32 {
        self.word.windows(2).filter(|w| w[0] > w[1]).count() as u32
    }

    /// Number of ascents, `n - 1 - des`.
    pub fn asc(&self) -> u32 {
        self.n() - 1 - self.des()
    }

    /// Group inverse.
    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Descents of the inverse.
    pub fn ides(&self) -> u32 {
        self.inverse().des()
    }

    /// Ascents of the inverse.
    pub fn iasc(&self) -> u32 {
        self.n() - 1 - self.ides()
    }

    /// Cyclic descents: `des` plus one if the last entry exceeds the first.
    pub fn cdes(&self) -> u32 {
        let wrap = self.word[self.word.len() - 1] > self.word[0];
        self.des() + u32::from(wrap)
    }

    /// Composition `(self * other)_i = self[other_i]` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.word.len() != other.word.len() {
            return Err(PermError::SizeMismatch(self.word.len(), other.word.len()));
        }
        Ok(Permutation {
            word: other
                .word
                .iter()
                .map(|&v| self.word[v as usize - 1])
                .collect(),
        })
    }

    /// Right-multiplies by the cyclic rotation `23...n1`, shifting positions.
    pub fn cyclic_rotate(&self) -> Result<Permutation, PermError> {
        if self.n() < 2 {
            return Err(PermError::SizeOutOfRange {
                n: self.n(),
                min: 2,
                max: MAX_SN,
            });
        }
        let mut word = self.word.clone();
        word.rotate_left(1);
        Ok(Permutation { word })
    }

    /// The inversion sequence `e_j = |{i < j : word[i] > word[j]}|`.
    pub fn to_inversion_sequence(&self) -> InversionSequence {
        let entries = self
            .word
            .iter()
            .enumerate()
            .map(|(j, &v)| self.word[..j].iter().filter(|&&u| u > v).count() as u32)
            .collect();
        InversionSequence { entries }
    }

    /// Unranks the `rank`-th permutation of size `n` in lexicographic order
    /// (factorial number system).
    pub fn from_rank(n: u32, rank: u64) -> Result<Permutation, PermError> {
        if !(1..=MAX_SN).contains(&n) {
            return Err(PermError::SizeOutOfRange {
                n,
                min: 1,
                max: MAX_SN,
            });
        }
        if rank >= factorial(n) {
            return Err(PermError::RankOutOfRange {
                rank,
                what: "permutation",
                n,
            });
        }
        let mut remaining: Vec<u32> = (1..=n).collect();
        let mut word = Vec::with_capacity(n as usize);
        let mut rank = rank;
        for pos in 0..n {
            let base = factorial(n - 1 - pos);
            let digit = (rank / base) as usize;
            rank %= base;
            word.push(remaining.remove(digit));
        }
        Ok(Permutation { word })
    }

    /// Advances to the lexicographic successor in place. Returns false
    /// (leaving the word untouched) at the last permutation.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    /// Comma-free digit string for `n <= 9`, comma-separated beyond.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(text: &str) -> Result<Self, PermError> {
        let values = parse_word(text)?;
        let word: Vec<u32> = values
            .iter()
            .map(|&v| u32::try_from(v).map_err(|_| PermError::Parse(text.to_string())))
            .collect::<Result<_, _>>()?;
        Permutation::new(word)
    }
}

// ---------------------------------------------------------------------------
// SignedPermutation
// ---------------------------------------------------------------------------

/// A signed permutation: the magnitudes form a permutation of `{1, ..., n}`
/// and each entry carries a sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    word: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n];
        if n == 0 {
            return Err(PermError::NotASignedPermutation(n));
        }
        for &v in &word {
            let m = v.unsigned_abs() as usize;
            if m == 0 || m > n || seen[m - 1] {
                return Err(PermError::NotASignedPermutation(n));
            }
            seen[m - 1] = true;
        }
        Ok(SignedPermutation { word })
    }

    pub fn identity(n: u32) -> Self {
        SignedPermutation {
            word: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Type B descents: positions `i = 0..n-1` with `w_i > w_{i+1}`, where
    /// `w_0 := 0`.
    pub fn des_b(&self) -> u32 {
        let mut prev = 0i32;
        let mut count = 0;
        for &v in &self.word {
            if prev > v {
                count += 1;
            }
            prev = v;
        }
        count
    }

    /// Group inverse in the hyperoctahedral group: if `i -> v` then
    /// `|v| -> sign(v) * i`.
    pub fn inverse(&self) -> SignedPermutation {
        let mut word = vec![0i32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            let pos = v.unsigned_abs() as usize - 1;
            word[pos] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPermutation { word }
    }

    /// Composition `(self∘other)_i = self(other_i)` with
    /// `self(-k) = -self(k)`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation, PermError> {
        if self.word.len() != other.word.len() {
            return Err(PermError::SizeMismatch(self.word.len(), other.word.len()));
        }
        let word = other
            .word
            .iter()
            .map(|&v| {
                let image = self.word[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -image
                } else {
                    image
                }
            })
            .collect();
        Ok(SignedPermutation { word })
    }

    /// Unranks within `[0, 2^n * n!)`: the high part selects the underlying
    /// permutation, the low `n` bits the signs (bit `i` set means position
    /// `i + 1` is negative).
    pub fn from_rank(n: u32, rank: u64) -> Result<SignedPermutation, PermError> {
        if !(1..=MAX_BN).contains(&n) {
            return Err(PermError::SizeOutOfRange {
                n,
                min: 1,
                max: MAX_BN,
            });
        }
        if rank >= bn_order(n) {
            return Err(PermError::RankOutOfRange {
                rank,
                what: "signed permutation",
                n,
            });
        }
        let mask = rank & ((1u64 << n) - 1);
        let perm = Permutation::from_rank(n, rank >> n)?;
        let word = perm
            .word()
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if mask >> i & 1 == 1 {
                    -(v as i32)
                } else {
                    v as i32
                }
            })
            .collect();
        Ok(SignedPermutation { word })
    }

    /// Advances to the rank successor in place; false at the last element.
    pub fn next_lex(&mut self) -> bool {
        // Increment the sign mask; on wrap-around advance the magnitudes.
        for v in self.word.iter_mut() {
            if *v > 0 {
                *v = -*v;
                return true;
            }
            *v = -*v;
        }
        let mut perm = Permutation {
            word: self.word.iter().map(|&v| v as u32).collect(),
        };
        if !perm.next_lex() {
            return false;
        }
        self.word = perm.word.iter().map(|&v| v as i32).collect();
        true
    }
}

impl fmt::Display for SignedPermutation {
    /// Always comma-separated; negative entries carry a leading minus.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;

    fn from_str(text: &str) -> Result<Self, PermError> {
        let values = parse_word(text)?;
        let word: Vec<i32> = values
            .iter()
            .map(|&v| i32::try_from(v).map_err(|_| PermError::Parse(text.to_string())))
            .collect::<Result<_, _>>()?;
        SignedPermutation::new(word)
    }
}

// ---------------------------------------------------------------------------
// InversionSequence
// ---------------------------------------------------------------------------

/// An inversion sequence: `0 <= e_i <= i - 1` for every position (1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct InversionSequence {
    entries: Vec<u32>,
}

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self, PermError> {
        if entries.is_empty() {
            return Err(PermError::InvalidInversionEntry {
                position: 0,
                value: 0,
                max: 0,
            });
        }
        for (i, &e) in entries.iter().enumerate() {
            if e > i as u32 {
                return Err(PermError::InvalidInversionEntry {
                    position: i + 1,
                    value: e,
                    max: i as u32,
                });
            }
        }
        Ok(InversionSequence { entries })
    }

    pub fn n(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Ascents: positions `i` with `e_i < e_{i+1}`.
    pub fn asc_i(&self) -> u32 {
        self.entries.windows(2).filter(|w| w[0] < w[1]).count() as u32
    }

    /// Number of distinct values.
    pub fn dst(&self) -> u32 {
        let mut seen = vec![false; self.entries.len()];
        let mut count = 0;
        for &e in &self.entries {
            if !seen[e as usize] {
                seen[e as usize] = true;
                count += 1;
            }
        }
        count
    }

    /// Unranks in the mixed-radix order where position `i` (1-based) is a
    /// digit of radix `i`, most significant digit last.
    pub fn from_rank(n: u32, rank: u64) -> Result<InversionSequence, PermError> {
        if !(1..=MAX_IN).contains(&n) {
            return Err(PermError::SizeOutOfRange {
                n,
                min: 1,
                max: MAX_IN,
            });
        }
        if rank >= factorial(n) {
            return Err(PermError::RankOutOfRange {
                rank,
                what: "inversion sequence",
                n,
            });
        }
        let mut entries = Vec::with_capacity(n as usize);
        let mut rank = rank;
        for radix in 1..=n as u64 {
            entries.push((rank % radix) as u32);
            rank /= radix;
        }
        Ok(InversionSequence { entries })
    }

    /// Odometer step through the mixed-radix order; false on wrap.
    pub fn next_lex(&mut self) -> bool {
        for (i, e) in self.entries.iter_mut().enumerate() {
            if *e < i as u32 {
                *e += 1;
                return true;
            }
            *e = 0;
        }
        false
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Walks ranks `lo..hi` of `S_n`, calling `f` on each permutation.
pub fn sn_for_each<F: FnMut(&Permutation)>(
    n: u32,
    lo: u64,
    hi: u64,
    mut f: F,
) -> Result<(), PermError> {
    if lo >= hi {
        return Ok(());
    }
    let mut perm = Permutation::from_rank(n, lo)?;
    if hi > sn_order(n) {
        return Err(PermError::RankOutOfRange {
            rank: hi,
            what: "permutation",
            n,
        });
    }
    for _ in lo..hi - 1 {
        f(&perm);
        perm.next_lex();
    }
    f(&perm);
    Ok(())
}

/// Walks ranks `lo..hi` of `B_n`, calling `f` on each signed permutation.
pub fn bn_for_each<F: FnMut(&SignedPermutation)>(
    n: u32,
    lo: u64,
    hi: u64,
    mut f: F,
) -> Result<(), PermError> {
    if lo >= hi {
        return Ok(());
    }
    let mut sp = SignedPermutation::from_rank(n, lo)?;
    if hi > bn_order(n) {
        return Err(PermError::RankOutOfRange {
            rank: hi,
            what: "signed permutation",
            n,
        });
    }
    for _ in lo..hi - 1 {
        f(&sp);
        sp.next_lex();
    }
    f(&sp);
    Ok(())
}

/// Walks ranks `lo..hi` of `I_n`, calling `f` on each inversion sequence.
pub fn in_for_each<F: FnMut(&InversionSequence)>(
    n: u32,
    lo: u64,
    hi: u64,
    mut f: F,
) -> Result<(), PermError> {
    if lo >= hi {
        return Ok(());
    }
    let mut seq = InversionSequence::from_rank(n, lo)?;
    if hi > factorial(n) {
        return Err(PermError::RankOutOfRange {
            rank: hi,
            what: "inversion sequence",
            n,
        });
    }
    for _ in lo..hi - 1 {
        f(&seq);
        seq.next_lex();
    }
    f(&seq);
    Ok(())
}

/// Iterator over all of `S_n` in lexicographic order.
pub fn enumerate_sn(n: u32) -> Result<impl Iterator<Item = Permutation>, PermError> {
    let first = Permutation::from_rank(n, 0)?;
    let total = sn_order(n);
    Ok(LexIter {
        state: first,
        remaining: total,
        step: Permutation::next_lex,
    })
}

/// Iterator over all of `B_n` in rank order.
pub fn enumerate_bn(n: u32) -> Result<impl Iterator<Item = SignedPermutation>, PermError> {
    let first = SignedPermutation::from_rank(n, 0)?;
    let total = bn_order(n);
    Ok(LexIter {
        state: first,
        remaining: total,
        step: SignedPermutation::next_lex,
    })
}

/// Iterator over all of `I_n` in mixed-radix order.
pub fn enumerate_in(n: u32) -> Result<impl Iterator<Item = InversionSequence>, PermError> {
    let first = InversionSequence::from_rank(n, 0)?;
    let total = factorial(n);
    Ok(LexIter {
        state: first,
        remaining: total,
        step: InversionSequence::next_lex,
    })
}

struct LexIter<T> {
    state: T,
    remaining: u64,
    step: fn(&mut T) -> bool,
}

impl<T: Clone> Iterator for LexIter<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let item = self.state.clone();
        if self.remaining > 0 {
            (self.step)(&mut self.state);
        }
        Some(item)
    }
}

/// Splits `0..total` into `workers` near-even contiguous chunks.
pub fn split_range(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let workers = workers.max(1) as u64;
    let base = total / workers;
    let extra = total % workers;
    let mut chunks = Vec::with_capacity(workers as usize);
    let mut lo = 0;
    for k in 0..workers {
        let size = base + u64::from(k < extra);
        chunks.push((lo, lo + size));
        lo += size;
    }
    chunks
}
