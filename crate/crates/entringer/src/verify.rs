//! Batch verification: replays every desk-scale guarantee the library
//! makes — round trips, the leaf refinement, equinumerosity, both
//! recurrences, the boustrophedon identity, and the frozen worked
//! examples — and reports per-section pass/fail tallies.
//!
//! Everything here is exhaustive over its stated range, not sampled, so a
//! passing report is a proof for those sizes. The ranges are chosen to
//! finish in seconds; [`VerifyConfig`] widens or narrows them.

use std::collections::BTreeSet;
use std::fmt;

use crate::bijection::{classify_forward, phi, phi_inverse, ForwardDispatch};
use crate::fixtures::{self, GoldenColumn};
use crate::perm::{self, AlternatingPermutation};
use crate::poly::{
    self, a_poly_direct, boustrophedon_identity_check, chain_leaf_table_by_enumeration,
    entringer_table_by_enumeration, entringer_table_by_recurrence, BivariatePoly, ENUMERATION_CAP,
};
use crate::tree::{self, IncreasingTree};

/// Ranges for each verification section: the largest `n` it sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Round trips in both directions, every object of every size up to
    /// this.
    pub roundtrip_n: usize,
    /// First letter vs. chain leaf, every object up to this.
    pub refinement_n: usize,
    /// Class-by-class size comparison (and frozen totals) up to this.
    pub equinumerosity_n: usize,
    /// Count-table cross-checks up to this (enumeration stops at
    /// [`ENUMERATION_CAP`]; the recurrence continues alone beyond it).
    pub counts_n: usize,
    /// Bivariate recurrence on enumerated class polynomials up to this.
    pub poly_n: usize,
    /// Boustrophedon identity on enumerated leaf counts up to this.
    pub identity_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            roundtrip_n: 10,
            refinement_n: 10,
            equinumerosity_n: 10,
            counts_n: 12,
            poly_n: 9,
            identity_n: 10,
        }
    }
}

/// Tally for one verification section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySection {
    /// What the section verifies.
    pub name: String,
    /// The range it swept, e.g. `n <= 10`.
    pub range: String,
    /// Checks that held.
    pub passed: u64,
    /// Checks that did not.
    pub failed: u64,
    /// Description of the first failing check, if any.
    pub first_failure: Option<String>,
}

impl VerifySection {
    fn new(name: &str, range: String) -> Self {
        VerifySection {
            name: name.to_string(),
            range,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    /// Whether every check in the section held.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Total checks run.
    pub fn checks(&self) -> u64 {
        self.passed + self.failed
    }
}

impl fmt::Display for VerifySection {
    /// One status line: `ok   round trips (n <= 10): 120434 checks`, or on
    /// failure the failed/total split and the first counterexample.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok   {} ({}): {} checks", self.name, self.range, self.passed)
        } else {
            write!(
                f,
                "FAIL {} ({}): {} of {} checks failed; first: {}",
                self.name,
                self.range,
                self.failed,
                self.checks(),
                self.first_failure.as_deref().unwrap_or("(unrecorded)")
            )
        }
    }
}

/// The full verification outcome, one [`VerifySection`] per guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Sections in execution order.
    pub sections: Vec<VerifySection>,
}

impl VerifyReport {
    /// Whether every section passed.
    pub fn all_passed(&self) -> bool {
        self.sections.iter().all(VerifySection::ok)
    }

    /// Total checks across all sections.
    pub fn total_checks(&self) -> u64 {
        self.sections.iter().map(VerifySection::checks).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sections {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Runs every section at the configured ranges.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        sections: vec![
            roundtrip_section(cfg.roundtrip_n),
            refinement_section(cfg.refinement_n),
            equinumerosity_section(cfg.equinumerosity_n),
            counts_section(cfg.counts_n),
            poly_section(cfg.poly_n),
            identity_section(cfg.identity_n),
            golden_section(),
        ],
    }
}

/// Both round trips, exhaustively: word -> tree -> the same word, and
/// tree -> word -> the same tree, for every object of every size up to
/// `n_max`.
pub fn roundtrip_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("round trips", format!("n <= {n_max}"));
    for n in 1..=n_max {
        perm::for_each_alternating(n, |w| {
            let pi = AlternatingPermutation::from_word(w.to_vec())
                .expect("enumerated words alternate");
            let (t, _) = phi(&pi);
            let (back, _) = phi_inverse(&t);
            s.check(back.word() == w, || {
                format!("word {pi} came back as {back} via {t}")
            });
        });
        tree::for_each_tree(n, |parents, _| {
            let t = IncreasingTree::from_parent_array(parents)
                .expect("enumerated parent arrays are valid");
            let (w, _) = phi_inverse(&t);
            let (back, _) = phi(&w);
            s.check(back.parent_array() == parents, || {
                format!("tree {t} came back as {back} via {w}")
            });
        });
    }
    s
}

/// The refinement, exhaustively: the image tree's chain leaf is the word's
/// first letter, and the preimage word's first letter is the tree's chain
/// leaf, for every object up to `n_max`.
pub fn refinement_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("leaf refinement", format!("n <= {n_max}"));
    for n in 1..=n_max {
        perm::for_each_alternating(n, |w| {
            let pi = AlternatingPermutation::from_word(w.to_vec())
                .expect("enumerated words alternate");
            let (t, _) = phi(&pi);
            s.check(t.chain_leaf() == pi.first(), || {
                format!("word {pi} starts with {} but its tree's chain ends at {}", pi.first(), t.chain_leaf())
            });
        });
        tree::for_each_tree(n, |parents, leaf| {
            let t = IncreasingTree::from_parent_array(parents)
                .expect("enumerated parent arrays are valid");
            let (w, _) = phi_inverse(&t);
            s.check(w.first() == leaf, || {
                format!("tree {t} has chain leaf {leaf} but its word {w} starts with {}", w.first())
            });
        });
    }
    s
}

/// Class sizes, exhaustively: for each `n <= n_max` and each `k`, the
/// number of words with first letter `k` equals the number of trees with
/// chain leaf `k`; for `n <= 10` the totals also equal the frozen family
/// sizes.
pub fn equinumerosity_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("equinumerosity", format!("n <= {n_max}"));
    for n in 1..=n_max {
        let mut by_letter = vec![0u64; n];
        perm::for_each_alternating(n, |w| by_letter[w[0] as usize - 1] += 1);
        let mut by_leaf = vec![0u64; n];
        tree::for_each_tree(n, |_, leaf| by_leaf[leaf as usize - 1] += 1);
        for k in 1..=n {
            s.check(by_letter[k - 1] == by_leaf[k - 1], || {
                format!(
                    "at ({n}, {k}): {} words but {} trees",
                    by_letter[k - 1],
                    by_leaf[k - 1]
                )
            });
        }
        if n <= fixtures::EULER.len() {
            let total: u64 = by_letter.iter().sum();
            s.check(total == fixtures::EULER[n - 1], || {
                format!(
                    "family size at n = {n} is {total}, expected {}",
                    fixtures::EULER[n - 1]
                )
            });
        }
    }
    s
}

/// Count tables three ways: letter enumeration, leaf enumeration, and the
/// recurrence, compared cell by cell over the enumerable range; the
/// recurrence table is additionally re-checked against its own defining
/// rule on every cell up to `n_max`.
pub fn counts_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("count recurrence", format!("n <= {n_max}"));
    let enum_to = n_max.min(ENUMERATION_CAP);
    let by_letter = entringer_table_by_enumeration(enum_to.max(1));
    let by_leaf = chain_leaf_table_by_enumeration(enum_to.max(1));
    let rec = entringer_table_by_recurrence(n_max.max(1));
    for n in 1..=enum_to {
        for k in 1..=n as u32 {
            s.check(by_letter.get(n, k) == rec.get(n, k), || {
                format!(
                    "letter count at ({n}, {k}) is {} but the recurrence gives {}",
                    by_letter.get(n, k),
                    rec.get(n, k)
                )
            });
            s.check(by_leaf.get(n, k) == rec.get(n, k), || {
                format!(
                    "leaf count at ({n}, {k}) is {} but the recurrence gives {}",
                    by_leaf.get(n, k),
                    rec.get(n, k)
                )
            });
        }
    }
    for r in poly::count_recurrence_check_on(&rec, n_max) {
        s.check(r.ok, || r.detail.clone().unwrap_or_default());
    }
    s
}

/// The bivariate recurrence on enumerated class polynomials, every cell
/// with `3 <= n <= n_max`.
pub fn poly_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("bivariate recurrence", format!("3 <= n <= {n_max}"));
    for r in poly::a_poly_recurrence_check(n_max) {
        s.check(r.ok, || r.detail.clone().unwrap_or_default());
    }
    s
}

/// The boustrophedon identity on enumerated leaf counts, every cell with
/// `2 <= k <= n <= n_max`.
pub fn identity_section(n_max: usize) -> VerifySection {
    let mut s = VerifySection::new("boustrophedon identity", format!("n <= {n_max}"));
    for r in boustrophedon_identity_check(n_max) {
        s.check(r.ok, || r.detail.clone().unwrap_or_default());
    }
    s
}

/// The frozen worked examples: statistics, image trees, round trips, the
/// descent chain replayed step by step, and the recurrence tie-down of the
/// length-four inversion counts.
pub fn golden_section() -> VerifySection {
    golden_section_with(&fixtures::CHAIN, &fixtures::TABLE_N4, &fixtures::DESCENT_WORDS)
}

/// [`golden_section`] against caller-supplied data, so the harness's own
/// failure detection is testable.
pub(crate) fn golden_section_with(
    chain: &[GoldenColumn],
    table: &[GoldenColumn],
    descent: &[&str],
) -> VerifySection {
    let mut s = VerifySection::new("worked examples", "fixed data".to_string());
    for col in chain.iter().chain(table) {
        let pi: AlternatingPermutation = match col.word.parse() {
            Ok(p) => p,
            Err(e) => {
                s.check(false, || format!("word {} does not parse: {e}", col.word));
                continue;
            }
        };
        let t: IncreasingTree = match col.tree.parse() {
            Ok(t) => t,
            Err(e) => {
                s.check(false, || format!("tree {} does not parse: {e}", col.tree));
                continue;
            }
        };
        s.check(pi.first() == col.first, || {
            format!("word {pi} starts with {}, recorded {}", pi.first(), col.first)
        });
        s.check(pi.as_permutation().inv() == col.inv, || {
            format!(
                "word {pi} has {} inversions, recorded {}",
                pi.as_permutation().inv(),
                col.inv
            )
        });
        s.check(pi.as_permutation().occ_31_2() == col.stat, || {
            format!(
                "word {pi} has {} vincular occurrences, recorded {}",
                pi.as_permutation().occ_31_2(),
                col.stat
            )
        });
        s.check(t.chain_leaf() == col.leaf, || {
            format!("tree {t} has chain leaf {}, recorded {}", t.chain_leaf(), col.leaf)
        });
        let (image, _) = phi(&pi);
        s.check(image == t, || format!("word {pi} maps to {image}, recorded {t}"));
        let (back, _) = phi_inverse(&t);
        s.check(back.word() == pi.word(), || {
            format!("tree {t} maps back to {back}, recorded {pi}")
        });
    }

    // The chain lists the same words as the descent sequence, in reverse.
    s.check(
        chain.len() == descent.len()
            && chain
                .iter()
                .rev()
                .zip(descent)
                .all(|(c, d)| c.word == *d),
        || "chain and descent word lists disagree".to_string(),
    );

    // Replay the descent: each word must reduce to the next by one
    // top-level step — strip-and-standardize when the second letter is
    // k - 1, otherwise swap the values k - 1 and k.
    for pair in descent.windows(2) {
        let (here, next) = (pair[0], pair[1]);
        let pi: AlternatingPermutation = match here.parse() {
            Ok(p) => p,
            Err(e) => {
                s.check(false, || format!("descent word {here} does not parse: {e}"));
                continue;
            }
        };
        let k = pi.first();
        let reduced = match classify_forward(&pi) {
            ForwardDispatch::Base => None,
            ForwardDispatch::CaseA => {
                let drop: BTreeSet<u32> = [k - 1, k].into_iter().collect();
                Some(
                    pi.as_permutation()
                        .delete_and_standardize(&drop)
                        .expect("descent words are longer than two"),
                )
            }
            ForwardDispatch::CaseB => Some(
                pi.as_permutation()
                    .swap_values(k - 1, k)
                    .expect("descent words contain k - 1 and k"),
            ),
        };
        match reduced {
            Some(r) => s.check(
                next.parse::<AlternatingPermutation>()
                    .map(|expect| r.word() == expect.word())
                    .unwrap_or(false),
                || format!("descent from {here} produced {r}, recorded {next}"),
            ),
            None => s.check(false, || {
                format!("descent from {here} stopped early at a base word")
            }),
        }
    }
    if let Some(last) = descent.last() {
        s.check(
            last.parse::<AlternatingPermutation>()
                .map(|p| matches!(classify_forward(&p), ForwardDispatch::Base))
                .unwrap_or(false),
            || format!("descent ends at {last}, which is not a base word"),
        );
    }

    // The length-four inversion counts are pinned by the bivariate
    // recurrence: with the recorded statistics, column 3 must equal
    // q p a(4,2) + q^3 a(2,2) and column 4 must equal q p a(4,3).
    let col_poly = |first: u32| -> BivariatePoly {
        let mut f = BivariatePoly::zero();
        for col in table.iter().filter(|c| c.first == first) {
            f.bump(col.inv as u32, col.stat as u32);
        }
        f
    };
    let (a42, a43, a44) = (col_poly(2), col_poly(3), col_poly(4));
    let a22 = a_poly_direct(2, 2).expect("length two is enumerable");
    let rhs43 = a42.mul_monomial(1, 1).add(&a22.mul_monomial(3, 0));
    s.check(a43 == rhs43, || {
        format!("recorded (4, 3) polynomial is {a43}, the recurrence needs {rhs43}")
    });
    let rhs44 = a43.mul_monomial(1, 1);
    s.check(a44 == rhs44, || {
        format!("recorded (4, 4) polynomial is {a44}, the recurrence needs {rhs44}")
    });
    s
}
