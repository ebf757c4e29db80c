//! 0-1-2 increasing trees: validation, main chains, enumeration,
//! relabeling, and text / DOT output.
//!
//! The canonical form is [`IncreasingTree`]: vertices `1..=n`, root 1, every
//! parent smaller than its child, at most two children per vertex. Its text
//! form is the parent array — `n` space-separated entries where position `v`
//! holds the parent of `v` and the root holds `0` (so `"0 1 1 3 4"` is the
//! tree 1-2, 1-3, 3-4, 4-5).
//!
//! [`LabeledTree`] is the same shape over an arbitrary strictly increasing
//! label set (the smallest label is the root). It arises from
//! [`IncreasingTree::relabel`] and can be pushed back to canonical form with
//! [`LabeledTree::standardize`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by tree validation, parsing, and relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    /// A tree must have at least one vertex.
    #[error("tree has no vertices")]
    Empty,
    /// Vertex 1 is always the root and cannot be assigned a parent.
    #[error("vertex 1 is the root and cannot have a parent")]
    RootHasParent,
    /// The parent map must cover exactly the vertices `2..=n`; this vertex
    /// has no entry.
    #[error("vertex {0} is missing a parent entry")]
    MissingParent(u32),
    /// Vertex labels are positive; 0 is not a vertex.
    #[error("vertex label 0 is invalid")]
    InvalidVertex,
    /// Increasing condition violated: a parent must be smaller than its
    /// child.
    #[error("vertex {child} has parent {parent}, but parents must be smaller")]
    ParentNotSmaller { child: u32, parent: u32 },
    /// Branching bound violated: at most two children per vertex.
    #[error("vertex {0} has more than two children")]
    TooManyChildren(u32),
    /// A vertex's parent chain does not reach the root (its parent entry
    /// names no vertex of the tree).
    #[error("vertex {child} has parent {parent} outside the tree")]
    Disconnected { child: u32, parent: u32 },
    /// A token could not be read as a parent entry.
    #[error("cannot parse {0:?} as a parent entry")]
    Parse(String),
    /// A label sequence had the wrong length for the tree it was applied to.
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    /// A label sequence was not strictly increasing.
    #[error("labels must be strictly increasing")]
    LabelsNotIncreasing,
}

/// The main chain of a tree: the path from the root that always steps to
/// the smallest child, ending at a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainChain {
    path: Vec<u32>,
}

impl MainChain {
    /// Vertices along the chain, root first.
    pub fn vertices(&self) -> &[u32] {
        &self.path
    }

    /// The chain's endpoint — the leaf that classifies the tree.
    pub fn leaf(&self) -> u32 {
        *self.path.last().expect("chain is never empty")
    }

    /// Number of vertices on the chain.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    /// Always false: every tree has a root, so every chain has a vertex.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether `(parent, child)` is one of the chain's edges.
    pub fn has_edge(&self, parent: u32, child: u32) -> bool {
        self.path.windows(2).any(|w| w[0] == parent && w[1] == child)
    }
}

/// A 0-1-2 increasing tree on `{1, ..., n}` with root 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTree {
    /// `parents[v - 1]` is the parent of vertex `v`, with 0 at the root.
    parents: Vec<u32>,
    /// `children[v - 1]` lists the children of `v` in ascending order.
    children: Vec<Vec<u32>>,
}

impl IncreasingTree {
    /// The one-vertex tree.
    pub fn trivial() -> Self {
        IncreasingTree {
            parents: vec![0],
            children: vec![vec![]],
        }
    }

    /// Builds and validates a tree from its parent array (position `v`
    /// holds the parent of `v`, 0 for the root).
    ///
    /// # Examples
    ///
    /// ```
    /// use entringer::tree::IncreasingTree;
    /// let t = IncreasingTree::from_parent_array(&[0, 1, 1, 3, 4]).unwrap();
    /// assert_eq!(t.vertex_count(), 5);
    /// assert_eq!(t.children(3), &[4]);
    /// ```
    pub fn from_parent_array(parents: &[u32]) -> Result<Self, TreeError> {
        let n = parents.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if parents[0] != 0 {
            return Err(TreeError::RootHasParent);
        }
        let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
        for v in 2..=n as u32 {
            let p = parents[v as usize - 1];
            if p >= v {
                return Err(TreeError::ParentNotSmaller { child: v, parent: p });
            }
            if p == 0 {
                // A second root: this vertex never reaches vertex 1.
                return Err(TreeError::Disconnected { child: v, parent: p });
            }
            children[p as usize - 1].push(v);
            if children[p as usize - 1].len() > 2 {
                return Err(TreeError::TooManyChildren(p));
            }
        }
        Ok(IncreasingTree {
            parents: parents.to_vec(),
            children,
        })
    }

    /// Builds and validates a tree from a parent map over `2..=n` (`n` is
    /// inferred from the largest key; the empty map is the one-vertex tree).
    pub fn from_parent_map(parent_of: &BTreeMap<u32, u32>) -> Result<Self, TreeError> {
        if parent_of.contains_key(&0) {
            return Err(TreeError::InvalidVertex);
        }
        if parent_of.contains_key(&1) {
            return Err(TreeError::RootHasParent);
        }
        let n = parent_of.keys().next_back().map_or(1, |&v| v as usize);
        let mut parents = vec![0u32; n];
        for v in 2..=n as u32 {
            match parent_of.get(&v) {
                None => return Err(TreeError::MissingParent(v)),
                Some(&p) => parents[v as usize - 1] = p,
            }
        }
        IncreasingTree::from_parent_array(&parents)
    }

    /// Internal constructor for trees that are valid by construction.
    pub(crate) fn from_parent_array_unchecked(parents: Vec<u32>) -> Self {
        let mut children: Vec<Vec<u32>> = vec![Vec::new(); parents.len()];
        for (i, &p) in parents.iter().enumerate() {
            if p != 0 {
                children[p as usize - 1].push(i as u32 + 1);
            }
        }
        let t = IncreasingTree { parents, children };
        debug_assert_eq!(t.check_invariants(), Ok(()));
        t
    }

    /// Full invariant re-check; used in debug assertions after surgeries.
    pub(crate) fn check_invariants(&self) -> Result<(), TreeError> {
        let rebuilt = IncreasingTree::from_parent_array(&self.parents)?;
        if rebuilt.children != self.children {
            // Children lists out of sync with the parent array.
            return Err(TreeError::Disconnected { child: 0, parent: 0 });
        }
        Ok(())
    }

    /// Number of vertices `n`.
    pub fn vertex_count(&self) -> usize {
        self.parents.len()
    }

    /// The parent array (position `v` holds the parent of `v`, 0 at root).
    pub fn parent_array(&self) -> &[u32] {
        &self.parents
    }

    /// The parent map over `2..=n`.
    pub fn parent_map(&self) -> BTreeMap<u32, u32> {
        self.parents
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &p)| (i as u32 + 1, p))
            .collect()
    }

    /// Parent of `v`, or `None` at the root. Panics if `v` is not a vertex.
    pub fn parent(&self, v: u32) -> Option<u32> {
        assert!(v >= 1 && v as usize <= self.parents.len(), "vertex {v} out of range");
        match self.parents[v as usize - 1] {
            0 => None,
            p => Some(p),
        }
    }

    /// Children of `v` in ascending order. Panics if `v` is not a vertex.
    pub fn children(&self, v: u32) -> &[u32] {
        assert!(v >= 1 && v as usize <= self.parents.len(), "vertex {v} out of range");
        &self.children[v as usize - 1]
    }

    /// Re-hangs `v` under `new_parent`, keeping both children lists sorted.
    /// No invariant checks: callers restore validity by the end of their
    /// surgery and assert it there.
    pub(crate) fn set_parent_unchecked(&mut self, v: u32, new_parent: u32) {
        debug_assert!(new_parent >= 1);
        let old = self.parents[v as usize - 1];
        if old != 0 {
            let list = &mut self.children[old as usize - 1];
            let at = list.iter().position(|&w| w == v).expect("child listed");
            list.remove(at);
        }
        self.parents[v as usize - 1] = new_parent;
        let list = &mut self.children[new_parent as usize - 1];
        let at = list.partition_point(|&w| w < v);
        list.insert(at, v);
    }

    /// The main chain: from the root, repeatedly step to the smallest
    /// child.
    ///
    /// # Examples
    ///
    /// ```
    /// use entringer::tree::IncreasingTree;
    /// let t: IncreasingTree = "0 1 1 2 4 3 5 4 5".parse().unwrap();
    /// assert_eq!(t.main_chain().vertices(), &[1, 2, 4, 5, 7]);
    /// assert_eq!(t.chain_leaf(), 7);
    /// ```
    pub fn main_chain(&self) -> MainChain {
        let mut path = Vec::new();
        let mut v = 1u32;
        loop {
            path.push(v);
            match self.children[v as usize - 1].first() {
                None => break,
                Some(&c) => v = c,
            }
        }
        MainChain { path }
    }

    /// The endpoint of the main chain — the statistic `p(T)`.
    pub fn chain_leaf(&self) -> u32 {
        self.main_chain().leaf()
    }

    /// Copies the tree onto a strictly increasing label set of the same
    /// size: the i-th vertex becomes `labels[i - 1]`.
    pub fn relabel(&self, labels: &[u32]) -> Result<LabeledTree, TreeError> {
        let n = self.parents.len();
        if labels.len() != n {
            return Err(TreeError::LabelCount {
                expected: n,
                got: labels.len(),
            });
        }
        if labels.contains(&0) {
            return Err(TreeError::InvalidVertex);
        }
        if !labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(TreeError::LabelsNotIncreasing);
        }
        let mut parent = BTreeMap::new();
        let mut children: BTreeMap<u32, Vec<u32>> = labels.iter().map(|&l| (l, Vec::new())).collect();
        for v in 2..=n as u32 {
            let p = self.parents[v as usize - 1];
            let (lv, lp) = (labels[v as usize - 1], labels[p as usize - 1]);
            parent.insert(lv, lp);
            children.get_mut(&lp).expect("label present").push(lv);
        }
        let t = LabeledTree {
            labels: labels.to_vec(),
            parent,
            children,
        };
        debug_assert_eq!(t.check_invariants(), Ok(()));
        Ok(t)
    }

    /// GraphViz form: one node line per vertex and one `v -> w` line per
    /// edge, sorted by `(v, w)`, with main-chain edges set in bold.
    pub fn to_dot(&self) -> String {
        let chain = self.main_chain();
        let mut out = String::from("digraph {\n");
        for v in 1..=self.parents.len() as u32 {
            out.push_str(&format!("    {v};\n"));
        }
        for v in 1..=self.parents.len() as u32 {
            for &w in self.children(v) {
                if chain.has_edge(v, w) {
                    out.push_str(&format!("    {v} -> {w} [style=bold];\n"));
                } else {
                    out.push_str(&format!("    {v} -> {w};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for IncreasingTree {
    /// The parent-array text form, e.g. `"0 1 1 3 4"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parents {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IncreasingTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(TreeError::Empty);
        }
        let parents: Vec<u32> = tokens
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| TreeError::Parse((*t).to_string())))
            .collect::<Result<_, _>>()?;
        IncreasingTree::from_parent_array(&parents)
    }
}

/// A 0-1-2 increasing tree over an arbitrary strictly increasing label set;
/// the smallest label is the root. Produced by [`IncreasingTree::relabel`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    /// The label set, strictly increasing.
    labels: Vec<u32>,
    /// Parent of every non-root label.
    parent: BTreeMap<u32, u32>,
    /// Children of every label, ascending (empty lists included).
    children: BTreeMap<u32, Vec<u32>>,
}

impl LabeledTree {
    /// The label set, ascending.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// The root — always the smallest label.
    pub fn root(&self) -> u32 {
        self.labels[0]
    }

    /// Parent of `v`, or `None` at the root. Panics if `v` is not a label.
    pub fn parent(&self, v: u32) -> Option<u32> {
        assert!(self.children.contains_key(&v), "label {v} not in tree");
        self.parent.get(&v).copied()
    }

    /// Children of `v` in ascending order. Panics if `v` is not a label.
    pub fn children(&self, v: u32) -> &[u32] {
        self.children
            .get(&v)
            .unwrap_or_else(|| panic!("label {v} not in tree"))
    }

    /// Iterates over `(child, parent)` pairs, child ascending.
    pub fn parent_entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parent.iter().map(|(&c, &p)| (c, p))
    }

    /// The main chain: from the root, repeatedly step to the smallest
    /// child.
    pub fn main_chain(&self) -> MainChain {
        let mut path = Vec::new();
        let mut v = self.root();
        loop {
            path.push(v);
            match self.children[&v].first() {
                None => break,
                Some(&c) => v = c,
            }
        }
        MainChain { path }
    }

    /// The endpoint of the main chain.
    pub fn chain_leaf(&self) -> u32 {
        self.main_chain().leaf()
    }

    /// Renames labels by rank back onto `{1, ..., n}`; inverse of
    /// [`IncreasingTree::relabel`] on the same label set.
    pub fn standardize(&self) -> IncreasingTree {
        let rank: BTreeMap<u32, u32> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32 + 1))
            .collect();
        let mut parents = vec![0u32; self.labels.len()];
        for (&c, &p) in &self.parent {
            parents[rank[&c] as usize - 1] = rank[&p];
        }
        IncreasingTree::from_parent_array_unchecked(parents)
    }

    /// Full invariant re-check; used in debug assertions.
    pub(crate) fn check_invariants(&self) -> Result<(), TreeError> {
        if self.labels.is_empty() {
            return Err(TreeError::Empty);
        }
        if self.labels.contains(&0) {
            return Err(TreeError::InvalidVertex);
        }
        if !self.labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(TreeError::LabelsNotIncreasing);
        }
        let root = self.labels[0];
        if self.parent.contains_key(&root) {
            return Err(TreeError::RootHasParent);
        }
        for &l in &self.labels[1..] {
            match self.parent.get(&l) {
                None => return Err(TreeError::MissingParent(l)),
                Some(&p) => {
                    if p >= l {
                        return Err(TreeError::ParentNotSmaller { child: l, parent: p });
                    }
                    if !self.children.contains_key(&p) {
                        return Err(TreeError::Disconnected { child: l, parent: p });
                    }
                }
            }
        }
        for (&v, kids) in &self.children {
            if kids.len() > 2 {
                return Err(TreeError::TooManyChildren(v));
            }
            if !kids.windows(2).all(|w| w[0] < w[1]) {
                return Err(TreeError::LabelsNotIncreasing);
            }
            for &c in kids {
                if self.parent.get(&c) != Some(&v) {
                    return Err(TreeError::Disconnected { child: c, parent: v });
                }
            }
        }
        if self.children.len() != self.labels.len() || self.parent.len() + 1 != self.labels.len() {
            return Err(TreeError::MissingParent(0));
        }
        Ok(())
    }
}

/// Backtracking generator over all 0-1-2 increasing trees on `[n]` in
/// lexicographic parent-array order: vertex `next` is attached, in
/// ascending order, under every earlier vertex that still has room.
fn extend_trees(
    n: usize,
    parents: &mut Vec<u32>,
    kids: &mut Vec<Vec<u32>>,
    f: &mut impl FnMut(&[u32], &[Vec<u32>]),
) {
    let next = parents.len() as u32 + 1;
    if next as usize > n {
        f(parents, kids);
        return;
    }
    for v in 1..next {
        if kids[v as usize - 1].len() < 2 {
            parents.push(v);
            kids[v as usize - 1].push(next);
            kids.push(Vec::new());
            extend_trees(n, parents, kids, f);
            kids.pop();
            kids[v as usize - 1].pop();
            parents.pop();
        }
    }
}

/// Visits every tree on `[n]` in lexicographic parent-array order, handing
/// the visitor the parent array and the chain leaf, without materializing
/// the list — the right tool for counting or streaming at depths where the
/// full list would be wasteful. The visited slice is only valid for the
/// duration of the call. (Children are appended in increasing vertex
/// order, so each child list is ascending and the chain walk just follows
/// first entries.)
pub fn for_each_tree(n: usize, mut f: impl FnMut(&[u32], u32)) {
    let mut parents = vec![0u32];
    let mut kids: Vec<Vec<u32>> = vec![Vec::new()];
    extend_trees(n, &mut parents, &mut kids, &mut |ps, ks| {
        let mut v = 1u32;
        while let Some(&c) = ks[v as usize - 1].first() {
            v = c;
        }
        f(ps, v);
    });
}

/// All 0-1-2 increasing trees on `[n]`, in lexicographic parent-array
/// order.
///
/// # Examples
///
/// ```
/// use entringer::tree::enumerate_trees;
/// let t3: Vec<String> = enumerate_trees(3).unwrap().iter().map(|t| t.to_string()).collect();
/// assert_eq!(t3, ["0 1 1", "0 1 2"]);
/// ```
pub fn enumerate_trees(n: usize) -> Result<Vec<IncreasingTree>, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let mut out = Vec::new();
    for_each_tree(n, |parents, _| {
        out.push(IncreasingTree::from_parent_array_unchecked(parents.to_vec()));
    });
    Ok(out)
}

/// The class `T(n, k)`: trees on `[n]` whose main chain ends at leaf `k`,
/// in lexicographic parent-array order.
pub fn enumerate_trees_with_leaf(n: usize, k: u32) -> Result<Vec<IncreasingTree>, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    if k == 0 || k as usize > n {
        return Err(TreeError::InvalidVertex);
    }
    let mut out = Vec::new();
    for_each_tree(n, |parents, leaf| {
        if leaf == k {
            out.push(IncreasingTree::from_parent_array_unchecked(parents.to_vec()));
        }
    });
    Ok(out)
}
