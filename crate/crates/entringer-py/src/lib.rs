//! Python bindings: alternating words travel as lists of ints, trees as a
//! small `Tree` class built from a parent array, and counts as Python
//! ints of any size.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use entringer::bijection::{self, CaseTrace};
use entringer::perm::{self, AlternatingPermutation, Permutation};
use entringer::poly;
use entringer::tree::{self, IncreasingTree};

/// A 0-1-2 increasing tree, wrapped for Python.
#[pyclass(frozen, eq, name = "Tree", module = "entringer_py")]
#[derive(PartialEq)]
struct Tree {
    inner: IncreasingTree,
}

#[pymethods]
impl Tree {
    /// Build a tree from its parent array (entry v is the parent of
    /// vertex v, with 0 marking the root).
    #[new]
    fn new(parents: Vec<u32>) -> PyResult<Self> {
        let inner =
            IncreasingTree::from_parent_array(&parents).map_err(|e| value_error(e.to_string()))?;
        Ok(Tree { inner })
    }

    /// The parent array.
    fn parent_array(&self) -> Vec<u32> {
        self.inner.parent_array().to_vec()
    }

    /// Number of vertices.
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    /// The main chain, root first: always step to the smallest child.
    fn main_chain(&self) -> Vec<u32> {
        self.inner.main_chain().vertices().to_vec()
    }

    /// The leaf ending the main chain.
    fn chain_leaf(&self) -> u32 {
        self.inner.chain_leaf()
    }

    /// The tree in DOT format, main-chain edges bold.
    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree([{}])", self
            .inner
            .parent_array()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(", "))
    }
}

fn value_error(msg: String) -> PyErr {
    PyValueError::new_err(msg)
}

fn parse_word(word: Vec<u32>) -> PyResult<AlternatingPermutation> {
    AlternatingPermutation::from_word(word).map_err(|e| value_error(e.to_string()))
}

fn trace_rows<C: std::fmt::Display>(trace: &CaseTrace<C>) -> Vec<(String, usize, u32)> {
    trace
        .steps
        .iter()
        .map(|s| (s.case.to_string(), s.n, s.k))
        .collect()
}

/// Map an alternating word to its tree.
#[pyfunction]
fn phi(word: Vec<u32>) -> PyResult<Tree> {
    let (inner, _) = bijection::phi(&parse_word(word)?);
    Ok(Tree { inner })
}

/// The case taken at each level of the forward map's descent, as
/// (case, n, k) rows.
#[pyfunction]
fn phi_trace(word: Vec<u32>) -> PyResult<Vec<(String, usize, u32)>> {
    let (_, trace) = bijection::phi(&parse_word(word)?);
    Ok(trace_rows(&trace))
}

/// Map a tree back to its alternating word.
#[pyfunction]
fn phi_inverse(tree: &Tree) -> Vec<u32> {
    let (word, _) = bijection::phi_inverse(&tree.inner);
    word.word().to_vec()
}

/// The case taken at each level of the inverse map's descent, as
/// (case, n, k) rows.
#[pyfunction]
fn phi_inverse_trace(tree: &Tree) -> Vec<(String, usize, u32)> {
    let (_, trace) = bijection::phi_inverse(&tree.inner);
    trace_rows(&trace)
}

/// Number of inversions of a permutation.
#[pyfunction]
fn inv(word: Vec<u32>) -> PyResult<u64> {
    let p = Permutation::new(word).map_err(|e| value_error(e.to_string()))?;
    Ok(p.inv())
}

/// Number of vincular 31-2 occurrences of a permutation.
#[pyfunction]
fn occ_31_2(word: Vec<u32>) -> PyResult<u64> {
    let p = Permutation::new(word).map_err(|e| value_error(e.to_string()))?;
    Ok(p.occ_31_2())
}

/// Whether a permutation alternates down-up.
#[pyfunction]
fn is_alternating(word: Vec<u32>) -> PyResult<bool> {
    perm::is_alternating(&word).map_err(|e| value_error(e.to_string()))
}

/// All alternating words of length n, optionally restricted to first
/// letter k, in lexicographic order.
#[pyfunction]
#[pyo3(signature = (n, k = None))]
fn enumerate_alternating(n: usize, k: Option<u32>) -> PyResult<Vec<Vec<u32>>> {
    let words = match k {
        None => perm::enumerate_alternating(n),
        Some(k) => perm::enumerate_alternating_with_first(n, k),
    }
    .map_err(|e| value_error(e.to_string()))?;
    Ok(words.into_iter().map(|w| w.word().to_vec()).collect())
}

/// All trees on n vertices, optionally restricted to chain leaf k, in
/// lexicographic parent-array order.
#[pyfunction]
#[pyo3(signature = (n, k = None))]
fn enumerate_trees(n: usize, k: Option<u32>) -> PyResult<Vec<Tree>> {
    let trees = match k {
        None => tree::enumerate_trees(n),
        Some(k) => tree::enumerate_trees_with_leaf(n, k),
    }
    .map_err(|e| value_error(e.to_string()))?;
    Ok(trees.into_iter().map(|inner| Tree { inner }).collect())
}

/// The count triangle as a list of rows, row n listing the counts for
/// k = 1..=n; built by the recurrence, so any depth is fine.
#[pyfunction]
fn entringer_triangle(n_max: usize) -> PyResult<Vec<Vec<BigUint>>> {
    if n_max < 1 {
        return Err(value_error("tables start at n = 1".to_string()));
    }
    let table = poly::entringer_table_by_recurrence(n_max);
    Ok((1..=n_max).map(|n| table.row(n).to_vec()).collect())
}

/// The class polynomial of (n, k) as a dict mapping (q-exponent,
/// p-exponent) to coefficient.
#[pyfunction]
fn class_polynomial(n: usize, k: u32) -> PyResult<BTreeMap<(u32, u32), BigUint>> {
    let f = poly::a_poly_direct(n, k).map_err(|e| value_error(e.to_string()))?;
    Ok(f.terms().map(|(e, c)| (e, c.clone())).collect())
}

#[pymodule]
fn entringer_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tree>()?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_trace, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse_trace, m)?)?;
    m.add_function(wrap_pyfunction!(inv, m)?)?;
    m.add_function(wrap_pyfunction!(occ_31_2, m)?)?;
    m.add_function(wrap_pyfunction!(is_alternating, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_alternating, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(entringer_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(class_polynomial, m)?)?;
    Ok(())
}
