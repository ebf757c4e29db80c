//! Entringer count tables and the bivariate `(q, p)` refinement of the
//! alternating-permutation classes, with recurrence and identity checks.
//!
//! * `a_{n,k}` counts alternating words of length `n` with first letter
//!   `k`; `t_{n,k}` counts trees on `[n]` with chain leaf `k`. Both satisfy
//!   the same recurrence
//!   `a_{n,k} = a_{n,k-1} + sum_{i=k+1}^{n} a_{n-2,i-2}` with seeds
//!   `a_{1,1} = a_{2,2} = 1` and `a_{n,1} = 0` for `n >= 2`.
//! * The refinement `a_{n,k}(q, p) = sum q^inv p^occ_31_2` over `A(n, k)`
//!   satisfies
//!   `a_{n,k}(q,p) = q p a_{n,k-1}(q,p) + q^{2k-3} sum_{i=k+1}^{n} a_{n-2,i-2}(q,p)`
//!   for `n >= 3` (at `n = 2` the right side degenerates to zero while the
//!   left is `q`, so the shipped check starts at `n = 3`).
//! * The tree counts also satisfy the boustrophedon (zigzag-triangle) rule
//!   `t_{n,k} = t_{n,k-1} + t_{n-1,n-k+1}`.
//!
//! Counts are exact arbitrary-precision integers; tables are built by
//! direct enumeration up to [`ENUMERATION_CAP`] and by the recurrence
//! beyond it, and the two constructions are compared on their overlap.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::perm::{self, PermError};
use crate::tree;

/// Largest `n` whose families are walked object by object when building
/// tables; rows beyond it come from the recurrence alone. At this depth a
/// family has a few million members — comfortably enumerable, with the next
/// sizes growing an order of magnitude per step.
pub const ENUMERATION_CAP: usize = 12;

/// A polynomial in `q` and `p` with nonnegative integer coefficients,
/// stored sparsely as `(q-exponent, p-exponent) -> coefficient`. Zero
/// coefficients are never stored, so equality is term-set equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl BivariatePoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        BivariatePoly::monomial(0, 0, BigUint::from(1u32))
    }

    /// The single term `coeff * q^qexp * p^pexp` (zero coefficient gives
    /// the zero polynomial).
    pub fn monomial(qexp: u32, pexp: u32, coeff: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != BigUint::ZERO {
            terms.insert((qexp, pexp), coeff);
        }
        BivariatePoly { terms }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term-wise sum.
    pub fn add(&self, g: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        out.add_assign(g);
        out
    }

    /// In-place term-wise sum.
    pub fn add_assign(&mut self, g: &BivariatePoly) {
        for (&e, c) in &g.terms {
            *self.terms.entry(e).or_insert_with(|| BigUint::ZERO) += c;
        }
    }

    /// Adds a single occurrence `q^qexp p^pexp` (used when tallying one
    /// object at a time).
    pub fn bump(&mut self, qexp: u32, pexp: u32) {
        *self.terms.entry((qexp, pexp)).or_insert_with(|| BigUint::ZERO) += 1u32;
    }

    /// Multiplication by the monomial `q^qexp p^pexp` (an exponent shift).
    pub fn mul_monomial(&self, qexp: u32, pexp: u32) -> BivariatePoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((i + qexp, j + pexp), c.clone()))
            .collect();
        BivariatePoly { terms }
    }

    /// Coefficient of `q^qexp p^pexp` (zero when absent).
    pub fn coefficient(&self, qexp: u32, pexp: u32) -> BigUint {
        self.terms.get(&(qexp, pexp)).cloned().unwrap_or(BigUint::ZERO)
    }

    /// Iterates the stored terms in `(q-exponent, p-exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigUint)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// The evaluation at `q = p = 1`, i.e. the number of objects tallied.
    pub fn coefficient_sum(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// The smallest exponent pair on which this and `g` differ, with both
    /// coefficients — `None` when equal. Drives counterexample reporting.
    pub fn first_difference(&self, g: &BivariatePoly) -> Option<((u32, u32), BigUint, BigUint)> {
        let keys: std::collections::BTreeSet<(u32, u32)> =
            self.terms.keys().chain(g.terms.keys()).copied().collect();
        for e in keys {
            let (a, b) = (self.coefficient(e.0, e.1), g.coefficient(e.0, e.1));
            if a != b {
                return Some((e, a, b));
            }
        }
        None
    }
}

impl fmt::Display for BivariatePoly {
    /// Human form, terms in exponent order: `q^4 p^2 + q^5 p`; the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let unit_coeff = *c == BigUint::from(1u32);
            if !unit_coeff || (i == 0 && j == 0) {
                write!(f, "{c}")?;
                if i != 0 || j != 0 {
                    f.write_str(" ")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
            if i != 0 && j != 0 {
                f.write_str(" ")?;
            }
            match j {
                0 => {}
                1 => f.write_str("p")?,
                _ => write!(f, "p^{j}")?,
            }
        }
        Ok(())
    }
}

/// A triangle of exact counts, rows `n = 1..=n_max`, columns `k = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    /// Largest row index `n`.
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// The entry at `(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: u32) -> BigUint {
        if n == 0 || n > self.rows.len() || k == 0 || k as usize > n {
            return BigUint::ZERO;
        }
        self.rows[n - 1][k as usize - 1].clone()
    }

    /// Row `n` as a slice over `k = 1..=n`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    /// Row sums, index `n - 1` — the family sizes.
    pub fn row_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Aligned triangle, one `n: v_1 ... v_n` line per row.
    pub fn to_aligned_text(&self) -> String {
        let label_width = self.rows.len().to_string().len();
        let cell_width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:>label_width$}:", i + 1));
            for v in row {
                out.push_str(&format!(" {:>cell_width$}", v.to_string()));
            }
            out.push('\n');
        }
        out
    }

    /// Machine form: one `n k value` line per entry, sorted by `(n, k)`.
    pub fn to_machine_text(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.push_str(&format!("{} {} {v}\n", i + 1, j + 1));
            }
        }
        out
    }
}

/// A triangle of class polynomials, rows `n = 1..=n_max`, columns
/// `k = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTable {
    cells: Vec<Vec<BivariatePoly>>,
}

impl PolyTable {
    /// Largest row index `n`.
    pub fn n_max(&self) -> usize {
        self.cells.len()
    }

    /// The cell at `(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: u32) -> BivariatePoly {
        if n == 0 || n > self.cells.len() || k == 0 || k as usize > n {
            return BivariatePoly::zero();
        }
        self.cells[n - 1][k as usize - 1].clone()
    }

    /// Machine form: one `n k i j coeff` line per stored term (`i` the
    /// `q`-exponent, `j` the `p`-exponent), sorted by `(n, k, i, j)`.
    pub fn to_machine_text(&self) -> String {
        let mut out = String::new();
        for (ni, row) in self.cells.iter().enumerate() {
            for (ki, cell) in row.iter().enumerate() {
                for ((i, j), c) in cell.terms() {
                    out.push_str(&format!("{} {} {i} {j} {c}\n", ni + 1, ki + 1));
                }
            }
        }
        out
    }
}

/// The `a`-triangle by direct enumeration: walks every alternating word of
/// each length up to `n_max` and tallies first letters.
pub fn entringer_table_by_enumeration(n_max: usize) -> CountTable {
    assert!(n_max >= 1, "tables start at n = 1");
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = vec![BigUint::ZERO; n];
        perm::for_each_alternating(n, |w| {
            row[w[0] as usize - 1] += 1u32;
        });
        rows.push(row);
    }
    CountTable { rows }
}

/// The `t`-triangle by direct enumeration: walks every tree on `[n]` up to
/// `n_max` and tallies chain leaves.
pub fn chain_leaf_table_by_enumeration(n_max: usize) -> CountTable {
    assert!(n_max >= 1, "tables start at n = 1");
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = vec![BigUint::ZERO; n];
        tree::for_each_tree(n, |_, leaf| {
            row[leaf as usize - 1] += 1u32;
        });
        rows.push(row);
    }
    CountTable { rows }
}

/// The shared recurrence, efficiently via suffix sums of the `n - 2` row:
/// `a_{n,k} = a_{n,k-1} + sum_{j=k-1}^{n-2} a_{n-2,j}` after the index
/// shift, with seeds `a_{1,1} = a_{2,2} = 1` and first columns zero.
pub fn entringer_table_by_recurrence(n_max: usize) -> CountTable {
    assert!(n_max >= 1, "tables start at n = 1");
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
    if n_max >= 2 {
        rows.push(vec![BigUint::ZERO, BigUint::from(1u32)]);
    }
    for n in 3..=n_max {
        let prev2 = &rows[n - 3];
        // suffix[j - 1] = sum of a_{n-2, j'} for j' >= j.
        let mut suffix = vec![BigUint::ZERO; n - 1];
        let mut acc = BigUint::ZERO;
        for j in (1..=n - 2).rev() {
            acc += &prev2[j - 1];
            suffix[j - 1] = acc.clone();
        }
        let mut row = vec![BigUint::ZERO; n];
        for k in 2..=n {
            // The inner sum over i = k+1..=n of a_{n-2, i-2} is the suffix
            // from j = k - 1.
            let tail = if k - 1 <= n - 2 {
                suffix[k - 2].clone()
            } else {
                BigUint::ZERO
            };
            row[k - 1] = row[k - 2].clone() + tail;
        }
        rows.push(row);
    }
    CountTable { rows }
}

/// Both count triangles up to `n_max`: rows up to [`ENUMERATION_CAP`] by
/// direct enumeration, rows beyond it from the recurrence; the recurrence
/// is always computed alongside and must agree with every enumerated cell.
pub fn count_tables(n_max: usize) -> (CountTable, CountTable) {
    assert!(n_max >= 1, "tables start at n = 1");
    let enum_to = n_max.min(ENUMERATION_CAP);
    let a_enum = entringer_table_by_enumeration(enum_to);
    let t_enum = chain_leaf_table_by_enumeration(enum_to);
    let rec = entringer_table_by_recurrence(n_max);
    for n in 1..=enum_to {
        for k in 1..=n as u32 {
            assert_eq!(
                a_enum.get(n, k),
                rec.get(n, k),
                "letter counts disagree with the recurrence at ({n}, {k})"
            );
            assert_eq!(
                t_enum.get(n, k),
                rec.get(n, k),
                "leaf counts disagree with the recurrence at ({n}, {k})"
            );
        }
    }
    let extend = |mut base: CountTable| -> CountTable {
        for n in enum_to + 1..=n_max {
            base.rows.push(rec.rows[n - 1].clone());
        }
        base
    };
    (extend(a_enum), extend(t_enum))
}

/// The class polynomial `a_{n,k}(q, p) = sum q^inv p^occ_31_2` over
/// `A(n, k)`, by direct enumeration.
///
/// # Examples
///
/// ```
/// use entringer::poly::{a_poly_direct, BivariatePoly};
/// use num_bigint::BigUint;
/// // Two words start with 3 at length 4: 3142 (inv 3, stat 1) and
/// // 3241 (inv 4, stat 0).
/// let expected = BivariatePoly::monomial(3, 1, BigUint::from(1u32))
///     .add(&BivariatePoly::monomial(4, 0, BigUint::from(1u32)));
/// assert_eq!(a_poly_direct(4, 3).unwrap(), expected);
/// ```
pub fn a_poly_direct(n: usize, k: u32) -> Result<BivariatePoly, PermError> {
    if n == 0 {
        return Err(PermError::Empty);
    }
    if k == 0 || k as usize > n {
        return Err(PermError::FirstOutOfRange { k, n });
    }
    let mut out = BivariatePoly::zero();
    perm::for_each_alternating(n, |w| {
        if w[0] == k {
            out.bump(perm::inv_of(w) as u32, perm::occ_31_2_of(w) as u32);
        }
    });
    Ok(out)
}

/// The full polynomial triangle up to `n_max`, one family walk per row.
pub fn poly_table(n_max: usize) -> PolyTable {
    assert!(n_max >= 1, "tables start at n = 1");
    let mut cells = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = vec![BivariatePoly::zero(); n];
        perm::for_each_alternating(n, |w| {
            row[w[0] as usize - 1].bump(perm::inv_of(w) as u32, perm::occ_31_2_of(w) as u32);
        });
        cells.push(row);
    }
    PolyTable { cells }
}

/// Outcome of one `(n, k)` instance of a recurrence or identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    /// Row.
    pub n: usize,
    /// Column.
    pub k: u32,
    /// Whether the two sides agreed.
    pub ok: bool,
    /// On failure, a human-readable first point of disagreement.
    pub detail: Option<String>,
}

/// Checks the bivariate recurrence
/// `a_{n,k}(q,p) = q p a_{n,k-1}(q,p) + q^{2k-3} sum_{i=k+1}^{n} a_{n-2,i-2}(q,p)`
/// on every cell with `3 <= n <= n_max`, `2 <= k <= n`, against directly
/// enumerated polynomials. Reports one entry per cell; `n_max < 3` yields
/// an empty (vacuously passing) report.
pub fn a_poly_recurrence_check(n_max: usize) -> Vec<CellReport> {
    let table = poly_table(n_max.max(1));
    let mut reports = Vec::new();
    for n in 3..=n_max {
        for k in 2..=n as u32 {
            let lhs = table.get(n, k);
            let mut tail = BivariatePoly::zero();
            for i in k + 1..=n as u32 {
                tail.add_assign(&table.get(n - 2, i - 2));
            }
            let rhs = table
                .get(n, k - 1)
                .mul_monomial(1, 1)
                .add(&tail.mul_monomial(2 * k - 3, 0));
            let detail = lhs.first_difference(&rhs).map(|((i, j), a, b)| {
                format!("at ({n}, {k}): coefficient of q^{i} p^{j} is {a} directly but {b} via the recurrence")
            });
            reports.push(CellReport { n, k, ok: detail.is_none(), detail });
        }
    }
    reports
}

/// Checks the count recurrence
/// `x_{n,k} = x_{n,k-1} + sum_{i=k+1}^{n} x_{n-2,i-2}` on every cell with
/// `3 <= n <= n_max` of a given triangle.
pub(crate) fn count_recurrence_check_on(table: &CountTable, n_max: usize) -> Vec<CellReport> {
    let mut reports = Vec::new();
    for n in 3..=n_max.min(table.n_max()) {
        for k in 2..=n as u32 {
            let lhs = table.get(n, k);
            let mut rhs = table.get(n, k - 1);
            for i in k + 1..=n as u32 {
                rhs += table.get(n - 2, i - 2);
            }
            let ok = lhs == rhs;
            let detail =
                (!ok).then(|| format!("at ({n}, {k}): {lhs} on the left, {rhs} from the recurrence"));
            reports.push(CellReport { n, k, ok, detail });
        }
    }
    reports
}

/// Checks the boustrophedon rule `t_{n,k} = t_{n,k-1} + t_{n-1,n-k+1}`
/// (out-of-range entries read as zero) on every cell with
/// `2 <= k <= n <= n_max`, against the directly enumerated leaf triangle.
pub fn boustrophedon_identity_check(n_max: usize) -> Vec<CellReport> {
    let table = chain_leaf_table_by_enumeration(n_max.max(1));
    boustrophedon_identity_check_on(&table, n_max)
}

/// The boustrophedon rule against a caller-supplied triangle; split out so
/// the failure reporting is testable against corrupted data.
pub(crate) fn boustrophedon_identity_check_on(table: &CountTable, n_max: usize) -> Vec<CellReport> {
    let mut reports = Vec::new();
    for n in 2..=n_max.min(table.n_max()) {
        for k in 2..=n as u32 {
            let lhs = table.get(n, k);
            let rhs = table.get(n, k - 1) + table.get(n - 1, (n as u32) - k + 1);
            let ok = lhs == rhs;
            let detail = (!ok).then(|| {
                format!(
                    "at ({n}, {k}): {lhs} on the left, {rhs} from t({n},{}) + t({},{})",
                    k - 1,
                    n - 1,
                    (n as u32) - k + 1
                )
            });
            reports.push(CellReport { n, k, ok, detail });
        }
    }
    reports
}
