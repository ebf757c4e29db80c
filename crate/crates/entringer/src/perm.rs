//! Permutation words, alternation, enumeration, and the two statistics
//! `inv` and `occ_31_2`.
//!
//! Words are stored one-based: a [`Permutation`] of length `n` holds each of
//! the values `1..=n` exactly once. The text form is space-separated
//! (`"2 1 5 3 4"`); on input only, an all-digit form (`"21534"`) is accepted
//! when every value is a single digit.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by permutation construction, parsing, and the word-surgery
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// The empty word is not a permutation of any `[n]`.
    #[error("word is empty")]
    Empty,
    /// A value fell outside `1..=n`.
    #[error("value {0} out of range 1..={1}")]
    OutOfRange(u32, usize),
    /// A value appeared more than once.
    #[error("value {0} appears more than once")]
    Duplicate(u32),
    /// The word failed the down-up test; the payload is the one-based index
    /// of the first offending adjacent pair.
    #[error("word does not alternate at position {0}")]
    NotAlternating(usize),
    /// An operation referred to a value the word does not contain.
    #[error("value {0} is not present")]
    MissingValue(u32),
    /// A label sequence had the wrong length for the word it was applied to.
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    /// A label sequence was not strictly increasing.
    #[error("labels must be strictly increasing")]
    LabelsNotIncreasing,
    /// A requested first letter was outside `1..=n`.
    #[error("first letter {k} outside 1..={n}")]
    FirstOutOfRange { k: u32, n: usize },
    /// A token could not be read as a positive integer.
    #[error("cannot parse {0:?} as a value")]
    Parse(String),
}

/// A permutation of `{1, ..., n}`, stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` uses each of `1..=n` exactly once and wraps it.
    pub fn new(word: Vec<u32>) -> Result<Self, PermError> {
        let n = word.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(PermError::OutOfRange(v, n));
            }
            if seen[v as usize] {
                return Err(PermError::Duplicate(v));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    /// Length `n` of the word.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false: the empty word is rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The word as a slice, one-based values at zero-based positions.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Number of inversions: pairs `i < j` with `w_i > w_j`.
    ///
    /// # Examples
    ///
    /// ```
    /// use entringer::perm::Permutation;
    /// let p: Permutation = "7 4 8 5 9 1 6 2 3".parse().unwrap();
    /// assert_eq!(p.inv(), 23);
    /// ```
    pub fn inv(&self) -> u64 {
        inv_of(&self.word)
    }

    /// Number of vincular 31-2 occurrences: descents `w_i > w_{i+1}`
    /// together with a later position `j > i + 1` whose value lies strictly
    /// between, `w_{i+1} < w_j < w_i`.
    ///
    /// # Examples
    ///
    /// ```
    /// use entringer::perm::Permutation;
    /// let p: Permutation = "4 1 5 2 3".parse().unwrap();
    /// assert_eq!(p.occ_31_2(), 3);
    /// ```
    pub fn occ_31_2(&self) -> u64 {
        occ_31_2_of(&self.word)
    }

    /// Removes the values in `drop` and renames the survivors by rank,
    /// yielding a permutation of `[n - |drop|]`.
    ///
    /// Every dropped value must be present, and at least one value must
    /// survive.
    ///
    /// # Examples
    ///
    /// ```
    /// use std::collections::BTreeSet;
    /// use entringer::perm::Permutation;
    /// let p: Permutation = "2 1 5 3 4".parse().unwrap();
    /// let drop: BTreeSet<u32> = [1, 2].into_iter().collect();
    /// assert_eq!(p.delete_and_standardize(&drop).unwrap().to_string(), "3 1 2");
    /// ```
    pub fn delete_and_standardize(&self, drop: &BTreeSet<u32>) -> Result<Permutation, PermError> {
        let n = self.word.len();
        for &d in drop {
            if d == 0 || d as usize > n {
                return Err(PermError::MissingValue(d));
            }
        }
        if drop.len() == n {
            return Err(PermError::Empty);
        }
        // Rank map: survivor value -> its rank among survivors.
        let mut rank = vec![0u32; n + 1];
        let mut next = 0u32;
        for v in 1..=n as u32 {
            if !drop.contains(&v) {
                next += 1;
                rank[v as usize] = next;
            }
        }
        let word = self
            .word
            .iter()
            .filter(|v| !drop.contains(v))
            .map(|&v| rank[v as usize])
            .collect();
        Ok(Permutation { word })
    }

    /// Rewrites the word through a strictly increasing label sequence: the
    /// i-th smallest value becomes `labels[i - 1]`. The result is a word
    /// over the label set, not in general a permutation of an interval.
    ///
    /// # Examples
    ///
    /// ```
    /// use entringer::perm::Permutation;
    /// let p: Permutation = "3 1 2".parse().unwrap();
    /// assert_eq!(p.unstandardize(&[3, 4, 5]).unwrap(), vec![5, 3, 4]);
    /// ```
    pub fn unstandardize(&self, labels: &[u32]) -> Result<Vec<u32>, PermError> {
        let n = self.word.len();
        if labels.len() != n {
            return Err(PermError::LabelCount {
                expected: n,
                got: labels.len(),
            });
        }
        if !labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(PermError::LabelsNotIncreasing);
        }
        Ok(self.word.iter().map(|&v| labels[v as usize - 1]).collect())
    }

    /// Exchanges the positions of values `a` and `b` (a transposition in
    /// value space). `a == b` returns the word unchanged.
    pub fn swap_values(&self, a: u32, b: u32) -> Result<Permutation, PermError> {
        let n = self.word.len();
        for v in [a, b] {
            if v == 0 || v as usize > n {
                return Err(PermError::MissingValue(v));
            }
        }
        let mut word = self.word.clone();
        if a != b {
            let ia = word.iter().position(|&v| v == a).expect("value present");
            let ib = word.iter().position(|&v| v == b).expect("value present");
            word.swap(ia, ib);
        }
        Ok(Permutation { word })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses the space-separated form; a lone all-digit token of length at
    /// least two is read digit by digit (so `"21534"` and `"2 1 5 3 4"`
    /// agree). Words needing a value above 9 must use the spaced form.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(PermError::Empty);
        }
        let word: Vec<u32> =
            if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit()) {
                tokens[0].bytes().map(|b| u32::from(b - b'0')).collect()
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<u32>().map_err(|_| PermError::Parse((*t).to_string())))
                    .collect::<Result<_, _>>()?
            };
        Permutation::new(word)
    }
}

/// Renames the distinct values of an arbitrary word by rank, producing a
/// permutation of `[len]`. This is the inverse of
/// [`Permutation::unstandardize`] on matching label sets.
pub fn standardize(word: &[u32]) -> Result<Permutation, PermError> {
    if word.is_empty() {
        return Err(PermError::Empty);
    }
    let mut sorted: Vec<u32> = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        let dup = sorted.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
        return Err(PermError::Duplicate(dup));
    }
    let ranked = word
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
        .collect();
    Ok(Permutation { word: ranked })
}

/// Inversion count of a raw word slice; see [`Permutation::inv`].
pub(crate) fn inv_of(w: &[u32]) -> u64 {
    let mut count = 0u64;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Vincular 31-2 count of a raw word slice; see [`Permutation::occ_31_2`].
pub(crate) fn occ_31_2_of(w: &[u32]) -> u64 {
    let mut count = 0u64;
    for i in 0..w.len().saturating_sub(1) {
        if w[i] > w[i + 1] {
            for j in i + 2..w.len() {
                if w[i + 1] < w[j] && w[j] < w[i] {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Down-up test on an arbitrary word of distinct values: true iff
/// `w_1 > w_2 < w_3 > w_4 < ...`. A single letter alternates vacuously.
pub(crate) fn alternates(word: &[u32]) -> bool {
    word.windows(2).enumerate().all(|(i, w)| {
        if i % 2 == 0 {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Position (one-based) of the first adjacent pair violating the down-up
/// pattern, if any.
fn first_violation(word: &[u32]) -> Option<usize> {
    word.windows(2).enumerate().find_map(|(i, w)| {
        let ok = if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] };
        if ok {
            None
        } else {
            Some(i + 1)
        }
    })
}

/// Whether `word` is an alternating permutation. Errors if `word` is not a
/// permutation of `[len]` at all.
///
/// # Examples
///
/// ```
/// use entringer::perm::is_alternating;
/// assert!(is_alternating(&[2, 1, 5, 3, 4]).unwrap());
/// assert!(!is_alternating(&[1, 2, 3]).unwrap());
/// assert!(is_alternating(&[1, 1]).is_err());
/// ```
pub fn is_alternating(word: &[u32]) -> Result<bool, PermError> {
    let p = Permutation::new(word.to_vec())?;
    Ok(alternates(p.word()))
}

/// An alternating (down-up) permutation: `w_1 > w_2 < w_3 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternatingPermutation {
    inner: Permutation,
}

impl AlternatingPermutation {
    /// Checks the down-up pattern and wraps the permutation.
    pub fn new(p: Permutation) -> Result<Self, PermError> {
        match first_violation(p.word()) {
            None => Ok(AlternatingPermutation { inner: p }),
            Some(pos) => Err(PermError::NotAlternating(pos)),
        }
    }

    /// Convenience: validate a raw word in one step.
    pub fn from_word(word: Vec<u32>) -> Result<Self, PermError> {
        AlternatingPermutation::new(Permutation::new(word)?)
    }

    /// The first letter `w_1` — the class index `k` of `A(n, k)`.
    pub fn first(&self) -> u32 {
        self.inner.word()[0]
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.inner.len()
    }

    /// Always false; see [`Permutation::is_empty`].
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The underlying word.
    pub fn word(&self) -> &[u32] {
        self.inner.word()
    }

    /// Borrow the underlying permutation.
    pub fn as_permutation(&self) -> &Permutation {
        &self.inner
    }

    /// Unwrap into the underlying permutation.
    pub fn into_permutation(self) -> Permutation {
        self.inner
    }
}

impl From<AlternatingPermutation> for Permutation {
    fn from(p: AlternatingPermutation) -> Permutation {
        p.inner
    }
}

impl fmt::Display for AlternatingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

impl FromStr for AlternatingPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        AlternatingPermutation::new(s.parse()?)
    }
}

/// Backtracking generator: calls `f` once per alternating permutation of
/// `[n]` whose word starts with `prefix`, in lexicographic order.
fn extend_alternating(n: usize, word: &mut Vec<u32>, used: &mut [bool], f: &mut impl FnMut(&[u32])) {
    if word.len() == n {
        f(word);
        return;
    }
    let i = word.len();
    for v in 1..=n as u32 {
        if used[v as usize] {
            continue;
        }
        if i > 0 {
            let prev = word[i - 1];
            // The pair at zero-based positions (i-1, i) must descend when
            // i-1 is even and ascend when it is odd.
            let ok = if (i - 1).is_multiple_of(2) { prev > v } else { prev < v };
            if !ok {
                continue;
            }
        }
        used[v as usize] = true;
        word.push(v);
        extend_alternating(n, word, used, f);
        word.pop();
        used[v as usize] = false;
    }
}

/// Visits every alternating permutation of `[n]` in lexicographic order
/// without materializing the list — the right tool for counting or
/// streaming at depths where the full list would be wasteful. The visited
/// slice is only valid for the duration of the call.
pub fn for_each_alternating(n: usize, mut f: impl FnMut(&[u32])) {
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend_alternating(n, &mut word, &mut used, &mut f);
}

/// All alternating permutations of `[n]`, in lexicographic order.
///
/// # Examples
///
/// ```
/// use entringer::perm::enumerate_alternating;
/// let a3 = enumerate_alternating(3).unwrap();
/// let words: Vec<String> = a3.iter().map(|p| p.to_string()).collect();
/// assert_eq!(words, ["2 1 3", "3 1 2"]);
/// ```
pub fn enumerate_alternating(n: usize) -> Result<Vec<AlternatingPermutation>, PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    let mut out = Vec::new();
    for_each_alternating(n, |w| {
        out.push(AlternatingPermutation {
            inner: Permutation { word: w.to_vec() },
        });
    });
    Ok(out)
}

/// The class `A(n, k)`: alternating permutations of `[n]` with first letter
/// `k`, in lexicographic order. Empty when no such word exists (for
/// instance `k = 1` with `n >= 2`).
pub fn enumerate_alternating_with_first(
    n: usize,
    k: u32,
) -> Result<Vec<AlternatingPermutation>, PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    if k == 0 || k as usize > n {
        return Err(PermError::FirstOutOfRange { k, n });
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    word.push(k);
    used[k as usize] = true;
    extend_alternating(n, &mut word, &mut used, &mut |w| {
        out.push(AlternatingPermutation {
            inner: Permutation { word: w.to_vec() },
        });
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_rejects_bad_words() {
        assert_eq!(Permutation::new(vec![]), Err(PermError::Empty));
        assert_eq!(Permutation::new(vec![1, 1]), Err(PermError::Duplicate(1)));
        assert_eq!(Permutation::new(vec![2, 3]), Err(PermError::OutOfRange(3, 2)));
        assert_eq!(Permutation::new(vec![0, 1]), Err(PermError::OutOfRange(0, 2)));
        assert!(Permutation::new(vec![2, 1]).is_ok());
    }

    #[test]
    fn alternation_check() {
        assert!(is_alternating(&[2, 1, 5, 3, 4]).unwrap());
        assert!(is_alternating(&[1]).unwrap());
        assert!(!is_alternating(&[1, 2, 3]).unwrap());
        assert!(!is_alternating(&[3, 2, 1]).unwrap());
        assert_eq!(is_alternating(&[1, 1]), Err(PermError::Duplicate(1)));
        assert_eq!(
            "1 2 3".parse::<AlternatingPermutation>(),
            Err(PermError::NotAlternating(1))
        );
        assert_eq!(
            "3 2 1".parse::<AlternatingPermutation>(),
            Err(PermError::NotAlternating(2))
        );
    }

    #[test]
    fn parse_accepts_both_text_forms() {
        assert_eq!(perm("21534"), perm("2 1 5 3 4"));
        assert_eq!(perm("1").word(), &[1]);
        // Ten or more letters force the spaced form; the compact read of a
        // ten-digit string cannot be a permutation and errors out.
        assert!("10 9 12 11 14 1 13 2 4 3 6 5 8 7".parse::<Permutation>().is_ok());
        assert!("1085932467".parse::<Permutation>().is_err());
        assert_eq!(
            "2 x 1".parse::<Permutation>(),
            Err(PermError::Parse("x".to_string()))
        );
        assert_eq!("".parse::<Permutation>(), Err(PermError::Empty));
    }

    #[test]
    fn display_is_spaced() {
        assert_eq!(perm("21534").to_string(), "2 1 5 3 4");
        assert_eq!(perm("1").to_string(), "1");
    }

    #[test]
    fn inv_known_values() {
        assert_eq!(perm("1").inv(), 0);
        assert_eq!(perm("2143").inv(), 2);
        assert_eq!(perm("3142").inv(), 3);
        assert_eq!(perm("3241").inv(), 4);
        assert_eq!(perm("4132").inv(), 4);
        assert_eq!(perm("4231").inv(), 5);
        assert_eq!(perm("748591623").inv(), 23);
    }

    #[test]
    fn occ_31_2_known_values() {
        assert_eq!(perm("1").occ_31_2(), 0);
        assert_eq!(perm("213").occ_31_2(), 0);
        assert_eq!(perm("2143").occ_31_2(), 0);
        assert_eq!(perm("3142").occ_31_2(), 1);
        assert_eq!(perm("3241").occ_31_2(), 0);
        assert_eq!(perm("4132").occ_31_2(), 2);
        assert_eq!(perm("4231").occ_31_2(), 1);
        assert_eq!(perm("41523").occ_31_2(), 3);
        assert_eq!(perm("748591623").occ_31_2(), 7);
    }

    #[test]
    fn occ_is_bounded_by_inv_exhaustively() {
        for n in 1..=8 {
            for p in enumerate_alternating(n).unwrap() {
                assert!(p.as_permutation().occ_31_2() <= p.as_permutation().inv());
            }
        }
    }

    #[test]
    fn delete_and_standardize_examples() {
        let drop: BTreeSet<u32> = [1, 2].into_iter().collect();
        assert_eq!(perm("21534").delete_and_standardize(&drop).unwrap(), perm("312"));

        let none: BTreeSet<u32> = BTreeSet::new();
        assert_eq!(perm("21534").delete_and_standardize(&none).unwrap(), perm("21534"));

        let drop67: BTreeSet<u32> = [6, 7].into_iter().collect();
        assert_eq!(
            perm("748591623").delete_and_standardize(&drop67).unwrap(),
            perm("4657123")
        );

        let absent: BTreeSet<u32> = [9].into_iter().collect();
        assert_eq!(
            perm("21").delete_and_standardize(&absent),
            Err(PermError::MissingValue(9))
        );
        let all: BTreeSet<u32> = [1, 2].into_iter().collect();
        assert_eq!(perm("21").delete_and_standardize(&all), Err(PermError::Empty));
    }

    #[test]
    fn unstandardize_examples() {
        assert_eq!(perm("312").unstandardize(&[3, 4, 5]).unwrap(), vec![5, 3, 4]);
        assert_eq!(perm("21").unstandardize(&[1, 3]).unwrap(), vec![3, 1]);
        assert_eq!(perm("21534").unstandardize(&[1, 2, 3, 4, 5]).unwrap(), vec![2, 1, 5, 3, 4]);
        assert_eq!(
            perm("21").unstandardize(&[1]),
            Err(PermError::LabelCount { expected: 2, got: 1 })
        );
        assert_eq!(perm("21").unstandardize(&[3, 1]), Err(PermError::LabelsNotIncreasing));
    }

    #[test]
    fn standardize_inverts_unstandardize() {
        let w = perm("312").unstandardize(&[3, 4, 5]).unwrap();
        assert_eq!(standardize(&w).unwrap(), perm("312"));
        assert_eq!(standardize(&[5, 3]).unwrap(), perm("21"));
        assert_eq!(standardize(&[2, 2]), Err(PermError::Duplicate(2)));
    }

    #[test]
    fn swap_values_examples() {
        assert_eq!(perm("41523").swap_values(3, 4).unwrap(), perm("31524"));
        assert_eq!(perm("21").swap_values(1, 2).unwrap(), perm("12"));
        assert_eq!(perm("21534").swap_values(3, 3).unwrap(), perm("21534"));
        assert_eq!(perm("21").swap_values(1, 7), Err(PermError::MissingValue(7)));
    }

    #[test]
    fn enumeration_small_cases_exact() {
        let a1: Vec<String> = enumerate_alternating(1).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(a1, ["1"]);
        let a3: Vec<String> = enumerate_alternating(3).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(a3, ["2 1 3", "3 1 2"]);
        let a4: Vec<String> = enumerate_alternating(4).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(a4, ["2 1 4 3", "3 1 4 2", "3 2 4 1", "4 1 3 2", "4 2 3 1"]);
        assert_eq!(enumerate_alternating(0), Err(PermError::Empty));
    }

    #[test]
    fn enumeration_counts_match_euler_numbers() {
        let expected = [1usize, 1, 2, 5, 16, 61, 272, 1385];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_alternating(i + 1).unwrap().len(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn enumeration_count_n10() {
        let mut count = 0u64;
        for_each_alternating(10, |_| count += 1);
        assert_eq!(count, 50521);
    }

    #[test]
    fn enumeration_agrees_with_brute_force_filter() {
        use itertools::Itertools;
        for n in 1..=6usize {
            let brute: Vec<Vec<u32>> = (1..=n as u32)
                .permutations(n)
                .filter(|w| alternates(w))
                .collect();
            let fast: Vec<Vec<u32>> = enumerate_alternating(n)
                .unwrap()
                .iter()
                .map(|p| p.word().to_vec())
                .collect();
            let brute_sorted: std::collections::BTreeSet<_> = brute.into_iter().collect();
            let fast_set: std::collections::BTreeSet<_> = fast.iter().cloned().collect();
            assert_eq!(brute_sorted, fast_set, "n={n}");
            assert_eq!(fast_set.len(), fast.len(), "duplicates at n={n}");
        }
    }

    #[test]
    fn enumeration_with_first_examples() {
        let a43: Vec<String> = enumerate_alternating_with_first(4, 3)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(a43, ["3 1 4 2", "3 2 4 1"]);
        let a52: Vec<String> = enumerate_alternating_with_first(5, 2)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(a52, ["2 1 4 3 5", "2 1 5 3 4"]);
        assert!(enumerate_alternating_with_first(4, 1).unwrap().is_empty());
        assert_eq!(
            enumerate_alternating_with_first(1, 1)
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["1"]
        );
        assert_eq!(
            enumerate_alternating_with_first(4, 5),
            Err(PermError::FirstOutOfRange { k: 5, n: 4 })
        );
    }

    #[test]
    fn classes_partition_the_family() {
        for n in 1..=7usize {
            let whole = enumerate_alternating(n).unwrap().len();
            let by_class: usize = (1..=n as u32)
                .map(|k| enumerate_alternating_with_first(n, k).unwrap().len())
                .sum();
            assert_eq!(whole, by_class, "n={n}");
            if n >= 2 {
                assert!(enumerate_alternating_with_first(n, 1).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn first_letter_matches_class() {
        for n in 1..=6usize {
            for k in 1..=n as u32 {
                for p in enumerate_alternating_with_first(n, k).unwrap() {
                    assert_eq!(p.first(), k);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn swap_values_is_an_involution(n in 1usize..9, seed in any::<u64>()) {
            let all = enumerate_alternating(n).unwrap();
            let p = all[(seed as usize) % all.len()].as_permutation().clone();
            let a = (seed % n as u64) as u32 + 1;
            let b = (seed / 7 % n as u64) as u32 + 1;
            let back = p.swap_values(a, b).unwrap().swap_values(a, b).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn parse_display_round_trip(n in 1usize..9, seed in any::<u64>()) {
            let all = enumerate_alternating(n).unwrap();
            let p = all[(seed as usize) % all.len()].as_permutation().clone();
            let back: Permutation = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn standardize_round_trips_through_labels(
            raw in proptest::collection::vec(1u32..500, 1..40),
            rot in 0usize..40,
        ) {
            let mut labels: Vec<u32> = raw.clone();
            labels.sort_unstable();
            labels.dedup();
            // An arbitrary ordering of the label set, via rotation.
            let mut word = labels.clone();
            word.rotate_left(rot % labels.len());
            let p = standardize(&word).unwrap();
            prop_assert_eq!(p.unstandardize(&labels).unwrap(), word);
        }
    }
}
