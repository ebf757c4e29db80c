//! The chain-leaf bijection `phi` between alternating permutations and
//! 0-1-2 increasing trees, refined by first letter: `phi` carries the class
//! `A(n, k)` (first letter `k`) onto the class `T(n, k)` (main-chain leaf
//! `k`), and [`phi_inverse`] undoes it exactly.
//!
//! Both directions are recursions on the first letter resp. the chain leaf
//! `k`, implemented as an explicit descent that records one step per level
//! followed by an unwind that applies the tree (resp. word) rewrites. The
//! descent's case-(b) chain shrinks `k` by 1 with `n` fixed, so the number
//! of steps can reach order `n^2`; the iterative form keeps deep inputs
//! (tens of thousands of letters) off the call stack.
//!
//! Forward, with `k` the first letter and `n >= 3`:
//!
//! * case (a), second letter `k - 1`: strip the leading `k, k-1`,
//!   standardize, recurse; on unwind, relabel the smaller tree onto
//!   `{1..k-2, k+1..n}`, find the smallest main-chain vertex `m > k`, and
//!   splice `k - 1` onto `m`'s chain edge with `k` as its other child;
//! * case (b), second letter below `k - 1`: exchange the values `k - 1` and
//!   `k`, recurse; on unwind either rebuild around the two siblings
//!   (case b1, when `k` sits next to the chain leaf `k - 1`) or simply
//!   exchange the labels `k - 1` and `k` (case b2).
//!
//! The inverse reads the same three shapes off the tree — its cases A1, A2,
//! B pair with a, b1, b2 — using two [`SentinelVertex`] values: `m`, the
//! other child of `k - 1`, and `s`, the sibling of `k - 1`, where a missing
//! vertex counts as larger than every real one.

use std::fmt;

use crate::perm::{alternates, AlternatingPermutation, Permutation};
use crate::tree::IncreasingTree;

/// A vertex reference that may be absent; the absent value compares
/// strictly greater than every label (it stands for "no such vertex" in
/// smallest-candidate arguments).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SentinelVertex {
    /// A present vertex label.
    Label(u32),
    /// No such vertex; greater than every `Label`.
    Absent,
}

impl SentinelVertex {
    /// The label, if present.
    pub fn label(self) -> Option<u32> {
        match self {
            SentinelVertex::Label(v) => Some(v),
            SentinelVertex::Absent => None,
        }
    }

    /// Whether the vertex is absent.
    pub fn is_absent(self) -> bool {
        self == SentinelVertex::Absent
    }
}

impl From<Option<u32>> for SentinelVertex {
    fn from(v: Option<u32>) -> Self {
        match v {
            Some(v) => SentinelVertex::Label(v),
            None => SentinelVertex::Absent,
        }
    }
}

/// Case taken at one level of the forward recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForwardCase {
    /// `n <= 2`: the unique word maps to the unique tree.
    Base,
    /// Case (a): strip `k, k-1`, later splice them into the chain.
    CaseA,
    /// Case (b), sibling collision: rebuild around `k - 1` and `k`.
    CaseB1,
    /// Case (b), plain label exchange of `k - 1` and `k`.
    CaseB2,
}

impl fmt::Display for ForwardCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ForwardCase::Base => "base",
            ForwardCase::CaseA => "a",
            ForwardCase::CaseB1 => "b1",
            ForwardCase::CaseB2 => "b2",
        };
        f.write_str(s)
    }
}

/// Case taken at one level of the inverse recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseCase {
    /// `n <= 2`.
    Base,
    /// `k - 1` is the parent of `k`, `m` finite and `m < s`: delete the
    /// pair and reattach `m`. Pairs with the forward case (a).
    CaseA1,
    /// `k - 1` is the parent of `k`, `m` absent or `m > s`: undo the
    /// sibling rebuild. Pairs with the forward case (b1).
    CaseA2,
    /// `k - 1` is not the parent of `k`: exchange the labels. Pairs with
    /// the forward case (b2).
    CaseB,
}

impl fmt::Display for InverseCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InverseCase::Base => "base",
            InverseCase::CaseA1 => "a1",
            InverseCase::CaseA2 => "a2",
            InverseCase::CaseB => "b",
        };
        f.write_str(s)
    }
}

/// The top-level branch the forward map would take, without refining case
/// (b) into b1/b2 (that distinction only appears once the subtree is
/// built).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForwardDispatch {
    /// `n <= 2`.
    Base,
    /// Second letter is `k - 1`.
    CaseA,
    /// Second letter is below `k - 1`.
    CaseB,
}

impl fmt::Display for ForwardDispatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ForwardDispatch::Base => "base",
            ForwardDispatch::CaseA => "a",
            ForwardDispatch::CaseB => "b",
        };
        f.write_str(s)
    }
}

/// One recorded recursion level: the case taken at size `n` with letter /
/// leaf `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep<C> {
    /// The case tag.
    pub case: C,
    /// Word length / vertex count at this level.
    pub n: usize,
    /// First letter resp. chain leaf at this level.
    pub k: u32,
}

impl<C: fmt::Display> fmt::Display for TraceStep<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.case, self.n, self.k)
    }
}

/// The full list of recursion levels, outermost first, ending with the base
/// case. `A`-family steps shrink `n` by 2; `B`-family steps shrink `k` by 1
/// with `n` fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseTrace<C> {
    /// Steps in descent order; the last is always the base case.
    pub steps: Vec<TraceStep<C>>,
}

impl<C> CaseTrace<C> {
    /// Number of recursion levels, base included.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Always false: even `n = 1` records its base step.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<C: fmt::Display> fmt::Display for CaseTrace<C> {
    /// One `(case, n, k)` line per level.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// The top-level case the forward map takes on `pi`.
///
/// # Examples
///
/// ```
/// use entringer::bijection::{classify_forward, ForwardDispatch};
/// let p = "2 1 5 3 4".parse().unwrap();
/// assert_eq!(classify_forward(&p), ForwardDispatch::CaseA);
/// let q = "7 4 8 5 9 1 6 2 3".parse().unwrap();
/// assert_eq!(classify_forward(&q), ForwardDispatch::CaseB);
/// ```
pub fn classify_forward(pi: &AlternatingPermutation) -> ForwardDispatch {
    if pi.len() <= 2 {
        ForwardDispatch::Base
    } else if pi.word()[1] == pi.first() - 1 {
        ForwardDispatch::CaseA
    } else {
        ForwardDispatch::CaseB
    }
}

/// The sentinels of the inverse's case (A) at leaf `k`: `m` is the other
/// child of `k - 1` (besides `k`), `s` the sibling of `k - 1`.
fn case_a_sentinels(t: &IncreasingTree, k: u32) -> (SentinelVertex, SentinelVertex) {
    let a = k - 1;
    let m = t.children(a).iter().copied().find(|&c| c != k);
    let s = match t.parent(a) {
        None => None,
        Some(j) => t.children(j).iter().copied().find(|&c| c != a),
    };
    debug_assert!(m.is_none() || s.is_none() || m != s);
    (m.into(), s.into())
}

/// The case the inverse map takes on `t`.
///
/// # Examples
///
/// ```
/// use entringer::bijection::{classify_inverse, InverseCase};
/// let t = "0 1 1 3 4".parse().unwrap();
/// assert_eq!(classify_inverse(&t), InverseCase::CaseA1);
/// ```
pub fn classify_inverse(t: &IncreasingTree) -> InverseCase {
    if t.vertex_count() <= 2 {
        return InverseCase::Base;
    }
    let k = t.chain_leaf();
    if t.parent(k) == Some(k - 1) {
        let (m, s) = case_a_sentinels(t, k);
        // A1 needs m finite; only then is the m-versus-s comparison
        // consulted (absent compares greater than everything).
        if !m.is_absent() && m < s {
            InverseCase::CaseA1
        } else {
            InverseCase::CaseA2
        }
    } else {
        InverseCase::CaseB
    }
}

/// Family recorded during the forward descent; case (b) is refined into
/// b1/b2 only on unwind, once the subtree is available.
#[derive(Debug, Clone, Copy)]
enum Family {
    A,
    B,
}

/// Full intermediate-state checks are only worth their cost at desk scale;
/// deep conversions keep O(1) spot checks per step.
const DEBUG_CHECK_LIMIT: usize = 64;

fn debug_validate_tree(tree: &IncreasingTree, expect_leaf: u32) {
    if cfg!(debug_assertions) && tree.vertex_count() <= DEBUG_CHECK_LIMIT {
        debug_assert_eq!(tree.check_invariants(), Ok(()));
        debug_assert_eq!(tree.chain_leaf(), expect_leaf);
    }
}

fn debug_validate_word(word: &[u32]) {
    if cfg!(debug_assertions) && word.len() <= DEBUG_CHECK_LIMIT {
        debug_assert!(alternates(word));
    }
}

/// Rebuilds the value-to-position index of `word`.
fn reindex(word: &[u32], pos: &mut Vec<usize>) {
    pos.clear();
    pos.resize(word.len() + 1, usize::MAX);
    for (i, &v) in word.iter().enumerate() {
        pos[v as usize] = i;
    }
}

/// The forward map: the tree of `pi`'s class, together with the case taken
/// at every recursion level.
///
/// # Examples
///
/// ```
/// use entringer::bijection::phi;
/// let p = "2 1 5 3 4".parse().unwrap();
/// let (tree, trace) = phi(&p);
/// assert_eq!(tree.to_string(), "0 1 1 3 4");
/// assert_eq!(tree.chain_leaf(), 2);
/// assert_eq!(trace.steps.len(), 4);
/// ```
pub fn phi(pi: &AlternatingPermutation) -> (IncreasingTree, CaseTrace<ForwardCase>) {
    let mut word: Vec<u32> = pi.word().to_vec();
    let mut pos: Vec<usize> = Vec::new();
    reindex(&word, &mut pos);
    let mut pending: Vec<(usize, u32, Family)> = Vec::new();

    // Descent: reduce to the one- or two-letter word, recording one step
    // per level.
    loop {
        let n = word.len();
        if n <= 2 {
            break;
        }
        let k = word[0];
        if word[1] == k - 1 {
            pending.push((n, k, Family::A));
            // Drop the leading k, k-1 and standardize: survivors above k
            // slide down by two.
            word = word[2..]
                .iter()
                .map(|&v| if v > k { v - 2 } else { v })
                .collect();
            reindex(&word, &mut pos);
        } else {
            pending.push((n, k, Family::B));
            let (ia, ib) = (pos[k as usize - 1], pos[k as usize]);
            word.swap(ia, ib);
            pos.swap(k as usize - 1, k as usize);
        }
        debug_validate_word(&word);
    }

    // Base tree, then unwind the recorded steps innermost-first.
    let mut tree = if word.len() == 1 {
        IncreasingTree::trivial()
    } else {
        IncreasingTree::from_parent_array_unchecked(vec![0, 1])
    };
    let mut steps = vec![TraceStep {
        case: ForwardCase::Base,
        n: word.len(),
        k: word[0],
    }];
    for &(n, k, family) in pending.iter().rev() {
        let case = match family {
            Family::A => {
                tree = unwind_case_a(&tree, n, k);
                ForwardCase::CaseA
            }
            Family::B => unwind_case_b(&mut tree, k),
        };
        debug_validate_tree(&tree, k);
        steps.push(TraceStep { case, n, k });
    }
    steps.reverse();

    debug_assert_eq!(tree.vertex_count(), pi.len());
    (tree, CaseTrace { steps })
}

/// Case-(a) unwind: grow the tree of the stripped word back to `[n]` by
/// splicing `k - 1` (with new leaf child `k`) into the main chain just
/// above `m`, the smallest chain vertex exceeding `k`.
fn unwind_case_a(small: &IncreasingTree, n: usize, k: u32) -> IncreasingTree {
    let labels: Vec<u32> = (1..=k - 2).chain(k + 1..=n as u32).collect();
    let lab = small.relabel(&labels).expect("label set fits the smaller tree");
    let m = lab
        .main_chain()
        .vertices()
        .iter()
        .copied()
        .find(|&v| v > k)
        .expect("the chain leaf exceeds k, so some chain vertex does");
    let j = lab.parent(m);
    // m is the relabeled root exactly when k = 2 (then the label set starts
    // above k and the root itself already exceeds it); in that case k-1 = 1
    // becomes the new root.
    debug_assert_eq!(j.is_none(), k == 2);

    let mut parents = vec![0u32; n];
    for (c, p) in lab.parent_entries() {
        parents[c as usize - 1] = p;
    }
    parents[m as usize - 1] = k - 1;
    parents[k as usize - 1] = k - 1;
    if let Some(j) = j {
        parents[(k - 1) as usize - 1] = j;
    }
    IncreasingTree::from_parent_array(&parents).expect("chain splice keeps the tree valid")
}

/// Case-(b) unwind on the tree of the exchanged word (chain leaf `k - 1`):
/// either `k` sits right next to the leaf and the pair is rebuilt (b1), or
/// the two labels are simply exchanged (b2).
fn unwind_case_b(tree: &mut IncreasingTree, k: u32) -> ForwardCase {
    let a = k - 1;
    if tree.parent(k).is_some() && tree.parent(k) == tree.parent(a) {
        // b1: j keeps k-1 and inherits k's smaller subtree; k-1 takes k
        // (now a leaf) and k's larger subtree.
        let j = tree.parent(a).expect("sibling pair is below the root");
        let kids: Vec<u32> = tree.children(k).to_vec();
        debug_assert!(tree.children(a).is_empty(), "chain leaf must be a leaf");
        tree.set_parent_unchecked(k, a);
        if let Some(&c1) = kids.first() {
            tree.set_parent_unchecked(c1, j);
        }
        if let Some(&c2) = kids.get(1) {
            tree.set_parent_unchecked(c2, a);
        }
        ForwardCase::CaseB1
    } else {
        swap_adjacent_labels(tree, k);
        ForwardCase::CaseB2
    }
}

/// Exchanges the labels `k - 1` and `k`. Requires the two vertices to be
/// non-adjacent (they always are here: the chain leaf among them has no
/// children, and parents are smaller than children), which makes the
/// exchange safe for the increasing condition since no label lies strictly
/// between them.
fn swap_adjacent_labels(tree: &mut IncreasingTree, k: u32) {
    let a = k - 1;
    debug_assert!(tree.parent(k) != Some(a), "labels to exchange must be non-adjacent");
    let pa = tree.parent(a).expect("k-1 is not the root in a label exchange");
    let pb = tree.parent(k).expect("k is never the root");
    let ca: Vec<u32> = tree.children(a).to_vec();
    let cb: Vec<u32> = tree.children(k).to_vec();
    for &c in &ca {
        tree.set_parent_unchecked(c, k);
    }
    for &c in &cb {
        tree.set_parent_unchecked(c, a);
    }
    tree.set_parent_unchecked(a, pb);
    tree.set_parent_unchecked(k, pa);
}

/// The inverse map: the alternating permutation of `t`'s class, together
/// with the case taken at every recursion level.
///
/// # Examples
///
/// ```
/// use entringer::bijection::phi_inverse;
/// let t = "0 1 1 3 4".parse().unwrap();
/// let (pi, _) = phi_inverse(&t);
/// assert_eq!(pi.to_string(), "2 1 5 3 4");
/// ```
pub fn phi_inverse(t: &IncreasingTree) -> (AlternatingPermutation, CaseTrace<InverseCase>) {
    let mut tree = t.clone();
    let mut pending: Vec<(usize, u32, InverseCase)> = Vec::new();

    // Descent: shrink the tree to one or two vertices.
    loop {
        let n = tree.vertex_count();
        if n <= 2 {
            break;
        }
        let k = tree.chain_leaf();
        debug_assert!(k >= 2, "a chain leaf of a nontrivial tree exceeds 1");
        if tree.parent(k) == Some(k - 1) {
            let (m, s) = case_a_sentinels(&tree, k);
            if !m.is_absent() && m < s {
                pending.push((n, k, InverseCase::CaseA1));
                tree = descend_case_a1(&tree, k, m.label().expect("checked finite"));
                debug_validate_tree(&tree, tree.chain_leaf());
                continue;
            }
            pending.push((n, k, InverseCase::CaseA2));
            descend_case_a2(&mut tree, k);
        } else {
            pending.push((n, k, InverseCase::CaseB));
            swap_adjacent_labels(&mut tree, k);
        }
        debug_validate_tree(&tree, k - 1);
    }

    // Base word, then unwind the recorded steps innermost-first.
    let mut word: Vec<u32> = if tree.vertex_count() == 1 { vec![1] } else { vec![2, 1] };
    let mut pos: Vec<usize> = Vec::new();
    reindex(&word, &mut pos);
    let mut steps = vec![TraceStep {
        case: InverseCase::Base,
        n: word.len(),
        k: word[0],
    }];
    for &(n, k, case) in pending.iter().rev() {
        match case {
            InverseCase::CaseA1 => {
                let labels: Vec<u32> = (1..=k - 2).chain(k + 1..=n as u32).collect();
                let small = Permutation::new(word).expect("unwound word is a permutation");
                let mut next = Vec::with_capacity(n);
                next.push(k);
                next.push(k - 1);
                next.extend(small.unstandardize(&labels).expect("label count matches"));
                word = next;
                reindex(&word, &mut pos);
            }
            InverseCase::CaseA2 | InverseCase::CaseB => {
                let (ia, ib) = (pos[k as usize - 1], pos[k as usize]);
                word.swap(ia, ib);
                pos.swap(k as usize - 1, k as usize);
            }
            InverseCase::Base => unreachable!("base is recorded once, outside pending"),
        }
        debug_assert_eq!(word[0], k);
        debug_validate_word(&word);
        steps.push(TraceStep { case, n, k });
    }
    steps.reverse();

    let pi = AlternatingPermutation::from_word(word).expect("inverse output alternates");
    debug_assert_eq!(pi.len(), t.vertex_count());
    (pi, CaseTrace { steps })
}

/// Inverse case A1: delete `k - 1` and `k`, hang `m` where `k - 1` was (it
/// becomes the root if `k - 1` was), and standardize onto `[n - 2]`.
fn descend_case_a1(tree: &IncreasingTree, k: u32, m: u32) -> IncreasingTree {
    let n = tree.vertex_count();
    let j = tree.parent(k - 1);
    debug_assert_eq!(j.is_none(), k == 2);
    let shift = |v: u32| if v <= k - 2 { v } else { v - 2 };
    let mut parents = vec![0u32; n - 2];
    for v in 1..=n as u32 {
        if v == k - 1 || v == k {
            continue;
        }
        let p = if v == m {
            j.unwrap_or(0)
        } else {
            tree.parent(v).unwrap_or(0)
        };
        parents[shift(v) as usize - 1] = if p == 0 { 0 } else { shift(p) };
    }
    IncreasingTree::from_parent_array(&parents).expect("pair deletion keeps the tree valid")
}

/// Inverse case A2: undo the sibling rebuild — `j` gets children
/// `{k-1, k}`, `k - 1` becomes a leaf, and `k` adopts the former sibling
/// `s` and former co-child `m` (whichever exist).
fn descend_case_a2(tree: &mut IncreasingTree, k: u32) {
    let a = k - 1;
    let j = tree
        .parent(a)
        .expect("with n >= 3, case A2 never sees k-1 at the root");
    let m = tree.children(a).iter().copied().find(|&c| c != k);
    let s = tree.children(j).iter().copied().find(|&c| c != a);
    debug_assert!(tree.children(k).is_empty(), "chain leaf must be a leaf");
    if let Some(s) = s {
        tree.set_parent_unchecked(s, k);
    }
    if let Some(m) = m {
        tree.set_parent_unchecked(m, k);
    }
    tree.set_parent_unchecked(k, j);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_alternating, enumerate_alternating_with_first};
    use crate::tree::{enumerate_trees, enumerate_trees_with_leaf};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn pi(s: &str) -> AlternatingPermutation {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> IncreasingTree {
        s.parse().unwrap()
    }

    /// The twelve (word, tree) columns of the worked example chain, from
    /// the single letter up to 748591623.
    const GOLDEN_CHAIN: [(&str, &str); 12] = [
        ("1", "0"),
        ("213", "0 1 1"),
        ("312", "0 1 2"),
        ("21534", "0 1 1 3 4"),
        ("31524", "0 1 2 1 4"),
        ("41523", "0 1 1 2 3"),
        ("51423", "0 1 1 3 2"),
        ("5471623", "0 1 1 2 4 3 4"),
        ("6471523", "0 1 1 2 3 4 4"),
        ("548691723", "0 1 1 2 4 4 3 6 6"),
        ("648591723", "0 1 1 2 4 5 3 4 5"),
        ("748591623", "0 1 1 2 4 3 5 4 5"),
    ];

    #[test]
    fn sentinel_ordering() {
        use SentinelVertex::{Absent, Label};
        assert!(Label(3) < Absent);
        assert!(Label(2) < Label(5));
        assert!(!(Absent < Absent));
        assert_eq!(Absent, Absent);
        assert_eq!(SentinelVertex::from(Some(4)), Label(4));
        assert_eq!(SentinelVertex::from(None), Absent);
        assert!(Absent.is_absent());
        assert_eq!(Label(7).label(), Some(7));
    }

    #[test]
    fn phi_base_cases() {
        assert_eq!(phi(&pi("1")).0.to_string(), "0");
        assert_eq!(phi(&pi("21")).0.to_string(), "0 1");
        assert_eq!(phi(&pi("1")).1.steps, vec![TraceStep { case: ForwardCase::Base, n: 1, k: 1 }]);
        assert_eq!(phi(&pi("21")).1.steps, vec![TraceStep { case: ForwardCase::Base, n: 2, k: 2 }]);
    }

    #[test]
    fn phi_matches_golden_chain() {
        for (word, expected) in GOLDEN_CHAIN {
            let (t, _) = phi(&pi(word));
            assert_eq!(t.to_string(), expected, "phi({word})");
            assert_eq!(t.chain_leaf(), pi(word).first(), "leaf of phi({word})");
        }
    }

    #[test]
    fn phi_inverse_matches_golden_chain() {
        for (word, t) in GOLDEN_CHAIN {
            let (p, _) = phi_inverse(&tree(t));
            assert_eq!(p, pi(word), "phi_inverse({t})");
        }
    }

    #[test]
    fn phi_matches_golden_table_n4() {
        let table = [
            ("2143", "0 1 1 3"),
            ("3142", "0 1 2 1"),
            ("3241", "0 1 2 2"),
            ("4132", "0 1 1 2"),
            ("4231", "0 1 2 3"),
        ];
        for (word, expected) in table {
            let (t, _) = phi(&pi(word));
            assert_eq!(t.to_string(), expected, "phi({word})");
            let (back, _) = phi_inverse(&t);
            assert_eq!(back, pi(word));
        }
    }

    #[test]
    fn forward_trace_on_deep_golden_word() {
        use ForwardCase::*;
        let (_, trace) = phi(&pi("748591623"));
        let expected: Vec<(ForwardCase, usize, u32)> = vec![
            (CaseB2, 9, 7),
            (CaseB1, 9, 6),
            (CaseA, 9, 5),
            (CaseB2, 7, 6),
            (CaseA, 7, 5),
            (CaseB2, 5, 5),
            (CaseB2, 5, 4),
            (CaseB1, 5, 3),
            (CaseA, 5, 2),
            (CaseB1, 3, 3),
            (CaseA, 3, 2),
            (Base, 1, 1),
        ];
        let got: Vec<(ForwardCase, usize, u32)> =
            trace.steps.iter().map(|s| (s.case, s.n, s.k)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn inverse_trace_pairs_with_forward() {
        // Tag pairing: a <-> A1, b1 <-> A2, b2 <-> B, at identical (n, k).
        for n in 1..=7 {
            for p in enumerate_alternating(n).unwrap() {
                let (t, fwd) = phi(&p);
                let (back, inv) = phi_inverse(&t);
                assert_eq!(back, p);
                assert_eq!(fwd.steps.len(), inv.steps.len());
                for (f, i) in fwd.steps.iter().zip(inv.steps.iter()) {
                    assert_eq!((f.n, f.k), (i.n, i.k));
                    let expected = match f.case {
                        ForwardCase::Base => InverseCase::Base,
                        ForwardCase::CaseA => InverseCase::CaseA1,
                        ForwardCase::CaseB1 => InverseCase::CaseA2,
                        ForwardCase::CaseB2 => InverseCase::CaseB,
                    };
                    assert_eq!(i.case, expected, "word {p}");
                }
            }
        }
    }

    #[test]
    fn trace_shape_invariants() {
        // Last tag is base; A-family steps drop n by 2; B-family steps drop
        // k by 1 at fixed n.
        for n in 1..=7 {
            for p in enumerate_alternating(n).unwrap() {
                let (_, trace) = phi(&p);
                let steps = &trace.steps;
                assert_eq!(steps.last().unwrap().case, ForwardCase::Base);
                assert_eq!((steps[0].n, steps[0].k), (p.len(), p.first()));
                for w in steps.windows(2) {
                    match w[0].case {
                        ForwardCase::CaseA => {
                            assert_eq!(w[1].n, w[0].n - 2);
                        }
                        ForwardCase::CaseB1 | ForwardCase::CaseB2 => {
                            assert_eq!(w[1].n, w[0].n);
                            assert_eq!(w[1].k, w[0].k - 1);
                        }
                        ForwardCase::Base => panic!("base before the end"),
                    }
                }
            }
        }
    }

    #[test]
    fn round_trip_both_directions_small() {
        for n in 1..=8 {
            for p in enumerate_alternating(n).unwrap() {
                let (t, _) = phi(&p);
                assert_eq!(t.chain_leaf(), p.first(), "refinement at {p}");
                let (back, _) = phi_inverse(&t);
                assert_eq!(back, p, "round trip at {p}");
            }
            for t in enumerate_trees(n).unwrap() {
                let (p, _) = phi_inverse(&t);
                assert_eq!(p.first(), t.chain_leaf());
                let (back, _) = phi(&p);
                assert_eq!(back, t, "round trip at {t}");
            }
        }
    }

    #[test]
    fn image_equals_leaf_class() {
        for n in 1..=7 {
            for k in 1..=n as u32 {
                let image: BTreeSet<String> = enumerate_alternating_with_first(n, k)
                    .unwrap()
                    .iter()
                    .map(|p| phi(p).0.to_string())
                    .collect();
                let class: BTreeSet<String> = enumerate_trees_with_leaf(n, k)
                    .unwrap()
                    .iter()
                    .map(|t| t.to_string())
                    .collect();
                assert_eq!(image, class, "(n, k) = ({n}, {k})");
                assert_eq!(
                    image.len(),
                    enumerate_alternating_with_first(n, k).unwrap().len(),
                    "phi must not collide on A({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_forward(&pi("21534")), ForwardDispatch::CaseA);
        assert_eq!(classify_forward(&pi("748591623")), ForwardDispatch::CaseB);
        assert_eq!(classify_forward(&pi("1")), ForwardDispatch::Base);
        assert_eq!(classify_forward(&pi("21")), ForwardDispatch::Base);

        assert_eq!(classify_inverse(&tree("0 1 1 3 4")), InverseCase::CaseA1);
        // Path tree: m and s both absent — dispatches to A2.
        assert_eq!(classify_inverse(&tree("0 1 2")), InverseCase::CaseA2);
        assert_eq!(classify_inverse(&tree("0 1 1 2 3")), InverseCase::CaseB);
        assert_eq!(classify_inverse(&tree("0")), InverseCase::Base);
        assert_eq!(classify_inverse(&tree("0 1")), InverseCase::Base);
    }

    #[test]
    fn classify_agrees_with_executed_trace() {
        for n in 1..=7 {
            for p in enumerate_alternating(n).unwrap() {
                let (t, fwd) = phi(&p);
                let first = fwd.steps[0].case;
                let dispatch = classify_forward(&p);
                match dispatch {
                    ForwardDispatch::Base => assert_eq!(first, ForwardCase::Base),
                    ForwardDispatch::CaseA => assert_eq!(first, ForwardCase::CaseA),
                    ForwardDispatch::CaseB => {
                        assert!(matches!(first, ForwardCase::CaseB1 | ForwardCase::CaseB2))
                    }
                }
                let (_, inv) = phi_inverse(&t);
                assert_eq!(classify_inverse(&t), inv.steps[0].case);
            }
        }
    }

    #[test]
    fn trace_display_format() {
        let (_, trace) = phi(&pi("21534"));
        assert_eq!(
            trace.to_string(),
            "(a, 5, 2)\n(b1, 3, 3)\n(a, 3, 2)\n(base, 1, 1)\n"
        );
    }

    /// A maximal-first-letter zigzag `n 1 n-1 2 n-2 3 ...` — drives the
    /// longest case-(b) chains.
    fn deep_zigzag(n: u32) -> AlternatingPermutation {
        let mut word = Vec::with_capacity(n as usize);
        let (mut lo, mut hi) = (1u32, n);
        while word.len() < n as usize {
            word.push(hi);
            hi -= 1;
            if word.len() < n as usize {
                word.push(lo);
                lo += 1;
            }
        }
        AlternatingPermutation::from_word(word).unwrap()
    }

    #[test]
    fn deep_input_round_trips_without_stack_growth() {
        let p = deep_zigzag(600);
        let (t, trace) = phi(&p);
        assert_eq!(t.chain_leaf(), 600);
        assert_eq!(trace.steps.last().unwrap().case, ForwardCase::Base);
        let (back, _) = phi_inverse(&t);
        assert_eq!(back, p);
    }

    #[test]
    #[ignore = "release-scale stress; run with --release -- --ignored"]
    fn very_deep_input_round_trips() {
        let p = deep_zigzag(10_000);
        let (t, _) = phi(&p);
        assert_eq!(t.chain_leaf(), 10_000);
        let (back, _) = phi_inverse(&t);
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 1usize..9, seed in any::<u64>()) {
            let all = enumerate_alternating(n).unwrap();
            let p = all[(seed as usize) % all.len()].clone();
            let (t, _) = phi(&p);
            prop_assert_eq!(t.chain_leaf(), p.first());
            let (back, _) = phi_inverse(&t);
            prop_assert_eq!(back, p);
        }
    }
}
