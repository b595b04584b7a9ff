//! Cycle types of permutations in S_n: canonical representation, exact
//! conjugacy-class sizes, parity, membership predicates, and enumeration of
//! all types of a given degree.

use std::fmt;

use num_bigint::BigUint;

use crate::combin::factorial;
use crate::error::{Error, Result};

/// Degree ceiling for full cycle-type enumeration. p(60) = 966467 partitions
/// is the practical limit for the type-level cover checks.
pub const DEFAULT_DEGREE_CEILING: u32 = 60;

/// Parity of a permutation class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// The cycle type of a permutation of degree `n`: a multiset of cycle
/// lengths with multiplicities summing to `n`.
///
/// Canonical form: lengths strictly increasing, multiplicities >= 1, and
/// fixed points stored explicitly as length-1 parts, so that
/// `sum(length * multiplicity) == degree` always holds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    degree: u32,
    parts: Vec<(u32, u32)>, // (length, multiplicity), strictly increasing in length
}

impl CycleType {
    /// Build from explicit (length, multiplicity) parts. The parts must be
    /// canonical: strictly increasing lengths, positive multiplicities,
    /// weights summing to `degree`.
    pub fn new(degree: u32, parts: Vec<(u32, u32)>) -> Result<Self> {
        let mut sum = 0u64;
        let mut prev = 0u32;
        for &(len, mult) in &parts {
            if len == 0 || mult == 0 {
                return Err(Error::domain("CycleType::new", "zero length or multiplicity"));
            }
            if len <= prev {
                return Err(Error::domain(
                    "CycleType::new",
                    format!("lengths not strictly increasing at {len}"),
                ));
            }
            prev = len;
            sum += len as u64 * mult as u64;
        }
        if sum != degree as u64 {
            return Err(Error::domain(
                "CycleType::new",
                format!("weights sum to {sum}, expected degree {degree}"),
            ));
        }
        Ok(CycleType { degree, parts })
    }

    /// Build from a list of cycle lengths (any order, repeats allowed).
    /// Lengths summing to less than `degree` are padded with fixed points;
    /// summing to more is an error.
    pub fn from_cycles(degree: u32, lengths: &[u32]) -> Result<Self> {
        let mut sorted: Vec<u32> = lengths.to_vec();
        sorted.sort_unstable();
        if sorted.first().is_some_and(|&l| l == 0) {
            return Err(Error::domain("CycleType::from_cycles", "zero-length cycle"));
        }
        let sum: u64 = sorted.iter().map(|&l| l as u64).sum();
        if sum > degree as u64 {
            return Err(Error::domain(
                "CycleType::from_cycles",
                format!("cycle lengths sum to {sum} > degree {degree}"),
            ));
        }
        let fixed = degree as u64 - sum;
        let mut parts: Vec<(u32, u32)> = Vec::new();
        if fixed > 0 {
            parts.push((1, fixed as u32));
        }
        for &len in &sorted {
            match parts.last_mut() {
                Some((l, m)) if *l == len => *m += 1,
                _ => parts.push((len, 1)),
            }
        }
        CycleType::new(degree, parts)
    }

    /// The identity class (1^n).
    pub fn identity(degree: u32) -> Self {
        CycleType {
            degree,
            parts: vec![(1, degree)],
        }
    }

    /// The class of n-cycles.
    pub fn full_cycle(degree: u32) -> Self {
        CycleType {
            degree,
            parts: vec![(degree, 1)],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// (length, multiplicity) parts in increasing length order.
    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// Total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> u32 {
        self.parts.iter().map(|&(_, m)| m).sum()
    }

    /// Exact size of the conjugacy class in S_n:
    /// n! / prod(length^mult * mult!).
    pub fn class_size(&self) -> BigUint {
        let mut denom = BigUint::from(1u32);
        for &(len, mult) in &self.parts {
            denom *= BigUint::from(len).pow(mult) * factorial(mult);
        }
        factorial(self.degree) / denom
    }

    /// Even iff permutations of this type lie in A_n. A cycle of length l
    /// contributes l - 1 transpositions.
    pub fn parity(&self) -> Parity {
        let transpositions: u64 = self
            .parts
            .iter()
            .map(|&(len, mult)| (len as u64 - 1) * mult as u64)
            .sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Structural predicates used by the type-level cover analyses.
    pub fn properties(&self) -> TypeProperties {
        let has_fixed_point = self.parts.first().is_some_and(|&(l, _)| l == 1);
        let is_full_cycle = self.parts == [(self.degree, 1)];
        let min_non_fixed_length = self
            .parts
            .iter()
            .map(|&(l, _)| l)
            .find(|&l| l > 1);
        TypeProperties {
            has_fixed_point,
            is_full_cycle,
            min_non_fixed_length,
            subset_sums: SubsetSums::of_type(self),
        }
    }

    /// True iff every cycle length is even.
    pub fn all_lengths_even(&self) -> bool {
        self.parts.iter().all(|&(l, _)| l % 2 == 0)
    }

    /// The type on n/2 points obtained by halving every cycle length.
    /// Defined only when every length is even.
    pub fn halved(&self) -> Option<CycleType> {
        if !self.all_lengths_even() {
            return None;
        }
        let parts = self.parts.iter().map(|&(l, m)| (l / 2, m)).collect();
        Some(CycleType {
            degree: self.degree / 2,
            parts,
        })
    }

    /// Parse the external `len^mult` comma-separated form, e.g. `1^2,3,7,8`.
    /// Fixed points may be omitted; they are reconstructed from `degree`.
    pub fn parse(spec: &str, degree: u32) -> Result<Self> {
        let mut lengths = Vec::new();
        for token in spec.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (len_s, mult_s) = match token.split_once('^') {
                Some((l, m)) => (l, m),
                None => (token, "1"),
            };
            let len: u32 = len_s.trim().parse().map_err(|e| Error::Parse {
                what: "cycle type",
                input: spec.to_string(),
                detail: format!("bad length `{len_s}`: {e}"),
            })?;
            let mult: u32 = mult_s.trim().parse().map_err(|e| Error::Parse {
                what: "cycle type",
                input: spec.to_string(),
                detail: format!("bad multiplicity `{mult_s}`: {e}"),
            })?;
            for _ in 0..mult {
                lengths.push(len);
            }
        }
        CycleType::from_cycles(degree, &lengths).map_err(|e| Error::Parse {
            what: "cycle type",
            input: spec.to_string(),
            detail: e.to_string(),
        })
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(len, mult) in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "{len}")?;
            } else {
                write!(f, "{len}^{mult}")?;
            }
        }
        Ok(())
    }
}

/// Predicates of a cycle type relevant to subgroup membership.
#[derive(Debug, Clone)]
pub struct TypeProperties {
    /// Some cycle has length 1.
    pub has_fixed_point: bool,
    /// The type is a single n-cycle.
    pub is_full_cycle: bool,
    /// Smallest length > 1, if the type is not the identity.
    pub min_non_fixed_length: Option<u32>,
    /// All achievable sums of sub-multisets of the cycle lengths.
    pub subset_sums: SubsetSums,
}

/// Bitset of achievable sub-multiset sums of the cycle lengths of a type.
/// Sum k is achievable iff some union of whole cycles has total support k,
/// which decides membership in set and partition stabilizers.
#[derive(Debug, Clone)]
pub struct SubsetSums {
    words: Vec<u64>,
    max: u32,
}

impl SubsetSums {
    fn of_type(t: &CycleType) -> Self {
        let n = t.degree;
        let mut words = vec![0u64; (n as usize + 64) / 64];
        words[0] = 1; // empty sub-multiset
        for &(len, mult) in &t.parts {
            for _ in 0..mult {
                // self |= self << len
                let shifted = shift_left(&words, len as usize, n as usize);
                for (w, s) in words.iter_mut().zip(shifted) {
                    *w |= s;
                }
            }
        }
        SubsetSums { words, max: n }
    }

    pub fn contains(&self, sum: u32) -> bool {
        if sum > self.max {
            return false;
        }
        let i = sum as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// All achievable sums in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..=self.max).filter(|&s| self.contains(s))
    }
}

fn shift_left(words: &[u64], by: usize, max_bit: usize) -> Vec<u64> {
    let word_shift = by / 64;
    let bit_shift = by % 64;
    let mut out = vec![0u64; words.len()];
    for i in (0..words.len()).rev() {
        if i >= word_shift {
            let mut v = words[i - word_shift] << bit_shift;
            if bit_shift > 0 && i > word_shift {
                v |= words[i - word_shift - 1] >> (64 - bit_shift);
            }
            out[i] = v;
        }
    }
    // mask bits above max_bit
    let top = max_bit % 64;
    let top_word = max_bit / 64;
    if top_word < out.len() && top < 63 {
        out[top_word] &= (1u64 << (top + 1)) - 1;
    }
    for w in out.iter_mut().skip(top_word + 1) {
        *w = 0;
    }
    out
}

/// Iterator over every cycle type of degree `n`, each exactly once, in
/// lexicographic order of the ascending cycle-length lists.
pub fn all_types(n: u32) -> Result<AllTypes> {
    all_types_with_ceiling(n, DEFAULT_DEGREE_CEILING)
}

/// As [`all_types`] with an explicit degree ceiling.
pub fn all_types_with_ceiling(n: u32, ceiling: u32) -> Result<AllTypes> {
    if n == 0 {
        return Err(Error::domain("all_types", "degree must be positive"));
    }
    if n > ceiling {
        return Err(Error::ResourceLimit {
            what: "cycle-type enumeration degree",
            requested: n as u64,
            ceiling: ceiling as u64,
        });
    }
    Ok(AllTypes::new(n))
}

/// Ascending-composition partition enumerator (Kelleher's accelAsc),
/// yielding partitions of n as ascending length lists.
pub struct AllTypes {
    n: u32,
    a: Vec<u32>,
    k: usize,
    y: u32,
    x: u32,
    state: AccelState,
}

enum AccelState {
    Outer,
    Inner,
    Done,
}

impl AllTypes {
    fn new(n: u32) -> Self {
        let mut a = vec![0u32; n as usize + 1];
        let k = 1usize;
        let y = n - 1;
        a[0] = 0;
        AllTypes {
            n,
            a,
            k,
            y,
            x: 0,
            state: AccelState::Outer,
        }
    }

    fn emit(&self, upto: usize) -> CycleType {
        let mut parts: Vec<(u32, u32)> = Vec::new();
        for &len in &self.a[..upto] {
            match parts.last_mut() {
                Some((l, m)) if *l == len => *m += 1,
                _ => parts.push((len, 1)),
            }
        }
        CycleType {
            degree: self.n,
            parts,
        }
    }
}

impl Iterator for AllTypes {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        loop {
            match self.state {
                AccelState::Done => return None,
                AccelState::Outer => {
                    if self.k == 0 {
                        self.state = AccelState::Done;
                        return None;
                    }
                    self.x = self.a[self.k - 1] + 1;
                    self.k -= 1;
                    while 2 * self.x <= self.y {
                        self.a[self.k] = self.x;
                        self.y -= self.x;
                        self.k += 1;
                    }
                    self.state = AccelState::Inner;
                }
                AccelState::Inner => {
                    let l = self.k + 1;
                    if self.x <= self.y {
                        self.a[self.k] = self.x;
                        self.a[l] = self.y;
                        let t = self.emit(l + 1);
                        self.x += 1;
                        self.y -= 1;
                        return Some(t);
                    }
                    self.y += self.x - 1;
                    self.a[self.k] = self.y + 1;
                    let t = self.emit(self.k + 1);
                    self.state = AccelState::Outer;
                    return Some(t);
                }
            }
        }
    }
}
