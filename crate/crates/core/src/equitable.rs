//! Balancing arrays, equitable partitions, and the constructions that find
//! the successful partition of a word.
//!
//! A letter `v` sitting in block `b` fills the `v` columns
//! `b, b-1, …, b-v+1` of the balancing array, wrapping from column 0 to
//! column `m-1`. A column is equitably filled when it holds `⌊|u|/m⌋` cells,
//! plus one for the columns `1..=|u|_m`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::sweep::{inverse_presweep, InverseOutcome, PresweepFailure};
use crate::{Error, ModWord, PartitionedWord, Result};

/// How a column's fill compares with its equitable target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fill {
    /// Fewer cells than the target.
    Less,
    /// Exactly the target.
    Equitable,
    /// More cells than the target.
    More,
}

/// Fill count and target of one balancing-array column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnStatus {
    /// Column index `j`.
    pub column: usize,
    /// Filled cells in the column.
    pub count: usize,
    /// Equitable count for the column.
    pub target: usize,
    /// `count` compared with `target`.
    pub fill: Fill,
}

/// The `N × m` grid of cells filled by each letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancingArray {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl BalancingArray {
    /// Number of rows (letters).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns (the modulus).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether row `i` fills column `j`.
    pub fn filled(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.cols + j]
    }

    /// Filled cells in column `j`.
    pub fn column_count(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.filled(i, j)).count()
    }

    /// Text grid, one line per row, columns `m-1 … 0` from left to right.
    /// Uses `■`/`·`, or `#`/`.` when `ascii` is set.
    pub fn render(&self, ascii: bool) -> String {
        let (on, off) = if ascii { ('#', '.') } else { ('■', '·') };
        let mut out = String::new();
        for i in 0..self.rows {
            for j in (0..self.cols).rev() {
                out.push(if self.filled(i, j) { on } else { off });
                if j > 0 {
                    out.push(' ');
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the balancing array of `p`.
pub fn balancing_array(p: &PartitionedWord) -> BalancingArray {
    let m = p.modulus();
    let n = p.len();
    let mut cells = alloc::vec![false; n * m];
    for (i, (&v, b)) in p.word().letters().iter().zip(p.block_vector()).enumerate() {
        for step in 0..v {
            cells[i * m + (b + m - step) % m] = true;
        }
    }
    BalancingArray {
        rows: n,
        cols: m,
        cells,
    }
}

/// Equitable target for every column of a partition of `u`.
pub fn column_targets(u: &ModWord) -> Vec<usize> {
    let m = u.modulus();
    let base = u.sum() / m;
    let extra = u.residue();
    (0..m)
        .map(|j| if j >= 1 && j <= extra { base + 1 } else { base })
        .collect()
}

/// Filled-cell count of every column.
pub fn column_counts(p: &PartitionedWord) -> Vec<usize> {
    let m = p.modulus();
    let mut counts = alloc::vec![0; m];
    for k in 0..m {
        for &v in p.block(k) {
            add_fill(&mut counts, k, v, true);
        }
    }
    counts
}

// Adds or removes the cyclic run of columns covered by letter `v` in block `b`.
pub(crate) fn add_fill(counts: &mut [usize], b: usize, v: usize, add: bool) {
    let m = counts.len();
    for step in 0..v {
        let j = (b + m - step) % m;
        if add {
            counts[j] += 1;
        } else {
            counts[j] -= 1;
        }
    }
}

fn classify(count: usize, target: usize) -> Fill {
    match count.cmp(&target) {
        core::cmp::Ordering::Less => Fill::Less,
        core::cmp::Ordering::Equal => Fill::Equitable,
        core::cmp::Ordering::Greater => Fill::More,
    }
}

/// Status of column `j`.
///
/// # Panics
///
/// If `j >= m`.
pub fn column_status(p: &PartitionedWord, j: usize) -> ColumnStatus {
    column_statuses(p).swap_remove(j)
}

/// Status of every column, indexed by column.
pub fn column_statuses(p: &PartitionedWord) -> Vec<ColumnStatus> {
    let counts = column_counts(p);
    let targets = column_targets(p.word());
    counts
        .into_iter()
        .zip(targets)
        .enumerate()
        .map(|(column, (count, target))| ColumnStatus {
            column,
            count,
            target,
            fill: classify(count, target),
        })
        .collect()
}

/// Whether every column is equitably filled.
pub fn is_equitable(p: &PartitionedWord) -> bool {
    column_counts(p) == column_targets(p.word())
}

/// Whether the inverse presweep succeeds on `p`.
pub fn is_successful(p: &PartitionedWord) -> bool {
    inverse_presweep(p).is_success()
}

/// One letter moved across a divider by the rightmost or leftmost
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    /// The column that triggered the move.
    pub column: usize,
    /// Position of the moved letter.
    pub position: usize,
    /// Block the letter left.
    pub from: usize,
    /// Block the letter entered.
    pub to: usize,
}

pub(crate) fn step_bound(p: &PartitionedWord) -> usize {
    let m = p.modulus();
    p.len() * m * m + m + 1
}

/// The rightmost equitable partition of `u`.
pub fn rightmost(u: &ModWord) -> Result<PartitionedWord> {
    rightmost_trace(u).map(|(p, _)| p)
}

/// The rightmost equitable partition of `u` with the list of moves.
///
/// Starts with every letter in block 0. While some column is short, takes the
/// lowest-indexed short column `j` and moves the first letter of block `j-1`
/// to the end of block `j`. Column 0 stays over-full until the partition is
/// equitable; that is checked on every iteration.
pub fn rightmost_trace(u: &ModWord) -> Result<(PartitionedWord, Vec<Move>)> {
    let m = u.modulus();
    let mut p = PartitionedWord::all_in_block(u.clone(), 0)?;
    let targets = column_targets(u);
    let mut counts = column_counts(&p);
    let mut moves = Vec::new();
    let bound = step_bound(&p);
    loop {
        let Some(j) = (0..m).find(|&j| counts[j] < targets[j]) else {
            if counts != targets {
                return Err(Error::InvariantViolation(alloc::format!(
                    "rightmost: no short column but {p} is not equitable"
                )));
            }
            return Ok((p, moves));
        };
        if counts[0] <= targets[0] {
            return Err(Error::InvariantViolation(alloc::format!(
                "rightmost: column 0 not over-full at {p}"
            )));
        }
        if j == 0 || p.sizes()[j - 1] == 0 {
            return Err(Error::InvariantViolation(alloc::format!(
                "rightmost: illegal move into column {j} at {p}"
            )));
        }
        if moves.len() >= bound {
            return Err(Error::InvariantViolation(alloc::format!(
                "rightmost: exceeded {bound} moves on {u}"
            )));
        }
        let position = p.block_range(j - 1).start;
        let v = u.letters()[position];
        add_fill(&mut counts, j - 1, v, false);
        add_fill(&mut counts, j, v, true);
        let sizes = p.sizes_mut();
        sizes[j - 1] -= 1;
        sizes[j] += 1;
        moves.push(Move {
            column: j,
            position,
            from: j - 1,
            to: j,
        });
    }
}

/// One round of the successful-partition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    /// Partition at the start of the round.
    pub partition: PartitionedWord,
    /// Where the inverse presweep stopped on it.
    pub failure: PresweepFailure,
}

/// Converges from any equitable partition to the successful partition of the
/// same word.
pub fn successful_from(p: &PartitionedWord) -> Result<PartitionedWord> {
    successful_from_trace(p).map(|(q, _)| q)
}

/// [`successful_from`] together with every round that failed. Each round
/// shifts the letters the inverse presweep did not visit one block to the
/// right; the visited letters stay put.
pub fn successful_from_trace(p: &PartitionedWord) -> Result<(PartitionedWord, Vec<Round>)> {
    if !is_equitable(p) {
        return Err(Error::NotEquitable);
    }
    let bound = step_bound(p);
    let mut current = p.clone();
    let mut rounds = Vec::new();
    loop {
        let failure = match inverse_presweep(&current) {
            InverseOutcome::Succeeded(_) => return Ok((current, rounds)),
            InverseOutcome::Failed(f) => f,
        };
        let lengths = failure.suffix_lengths().to_vec();
        if lengths[0] != 0 || lengths.iter().all(|&t| t == 0) {
            return Err(Error::InvariantViolation(alloc::format!(
                "successful: residue {} of {current} is not a left block-suffix",
                failure.residue()
            )));
        }
        if rounds.len() >= bound {
            return Err(Error::InvariantViolation(alloc::format!(
                "successful: exceeded {bound} rounds from {p}"
            )));
        }
        let next = shift_suffix(&current, &lengths);
        rounds.push(Round {
            partition: core::mem::replace(&mut current, next),
            failure,
        });
        if !is_equitable(&current) {
            return Err(Error::InvariantViolation(alloc::format!(
                "successful: shifting produced non-equitable {current}"
            )));
        }
    }
}

// Moves the last `lengths[k]` letters of each block `k >= 1` to the front of
// block `k-1`. Callers guarantee `lengths[0] == 0` and `lengths[k] <= size`.
pub(crate) fn shift_suffix(p: &PartitionedWord, lengths: &[usize]) -> PartitionedWord {
    let mut q = p.clone();
    let sizes = q.sizes_mut();
    for k in 1..lengths.len() {
        sizes[k] -= lengths[k];
        sizes[k - 1] += lengths[k];
    }
    q
}

/// The `m` children of a successful partition in the tree of successful
/// partitions: child `i` prepends letter `i` to block `(i + |u|_m) mod m`.
pub fn succ_tree_children(p: &PartitionedWord) -> Result<Vec<PartitionedWord>> {
    if !is_successful(p) {
        return Err(Error::NotSuccessful);
    }
    let m = p.modulus();
    let r = p.word().residue();
    Ok((0..m)
        .map(|i| {
            let k = (i + r) % m;
            let at = p.block_range(k).start;
            let mut letters = p.word().letters().to_vec();
            letters.insert(at, i);
            let mut sizes = p.sizes().to_vec();
            sizes[k] += 1;
            let word = ModWord::new(m, letters).expect("letter i < m");
            PartitionedWord::new(word, sizes).expect("one letter, one size")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(m: usize, s: &str) -> ModWord {
        ModWord::parse(m, s).unwrap()
    }

    fn p(m: usize, s: &str) -> PartitionedWord {
        PartitionedWord::parse(m, s).unwrap()
    }

    #[test]
    fn balancing_array_wraps_downward() {
        let arr = balancing_array(&p(5, "13|31|4|2|1"));
        // row 5: letter 4 in block 2 fills 2, 1, 0, 4
        let row5: Vec<usize> = (0..5).filter(|&j| arr.filled(4, j)).collect();
        assert_eq!(row5, vec![0, 1, 2, 4]);
        assert_eq!(
            arr.render(true),
            "# . . . .\n# # # . .\n. # # # .\n. # . . .\n# . # # #\n. . . # #\n. . . . #\n"
        );
        let right = balancing_array(&p(5, "1|33|·|1|421"));
        assert_eq!(right.render(false).lines().nth(4), Some("■ ■ ■ · ■"));
        let zero = balancing_array(&p(3, "0||"));
        assert!((0..3).all(|j| !zero.filled(0, j)));
    }

    #[test]
    fn column_status_examples() {
        let q = p(5, "13|31|4|2|1");
        for j in 0..5 {
            let s = column_status(&q, j);
            assert_eq!((s.count, s.target, s.fill), (3, 3, Fill::Equitable));
        }
        let start = PartitionedWord::all_in_block(w(5, "1331421"), 0).unwrap();
        let s0 = column_status(&start, 0);
        assert_eq!((s0.count, s0.fill), (7, Fill::More));
        let empty = p(3, "||");
        assert!(column_statuses(&empty)
            .iter()
            .all(|s| s.target == 0 && s.fill == Fill::Equitable));
    }

    #[test]
    fn equitability() {
        assert!(is_equitable(&p(5, "1|33|·|1|421")));
        assert!(!is_equitable(&p(5, "1|33|14|·|21")));
        assert_eq!(column_status(&p(5, "1|33|14|·|21"), 3).count, 2);
        assert!(is_equitable(&p(3, "||000")));
    }

    #[test]
    fn targets_sum_to_total() {
        let u = w(4, "3213");
        assert_eq!(column_targets(&u), vec![2, 3, 2, 2]);
        assert_eq!(column_targets(&u).iter().sum::<usize>(), u.sum());
    }

    #[test]
    fn rightmost_examples() {
        let (top, moves) = rightmost_trace(&w(5, "1331421")).unwrap();
        assert_eq!(top.dotted().to_string(), "1|33|·|1|421");
        assert_eq!(moves.len(), 11);
        let (trivial, none) = rightmost_trace(&w(3, "000")).unwrap();
        assert_eq!(trivial.to_string(), "||000");
        assert!(none.is_empty());
    }

    #[test]
    fn successful_from_examples() {
        let (top, rounds) = successful_from_trace(&p(5, "13|31|4|2|1")).unwrap();
        assert_eq!(top.to_string(), "1|33||1|421");
        assert_eq!(rounds.len(), 2);
        assert_eq!(rounds[1].partition.to_string(), "1|33|1|4|21");
        let (same, none) = successful_from_trace(&top).unwrap();
        assert_eq!(same, top);
        assert!(none.is_empty());
        assert_eq!(
            successful_from(&p(5, "1|33|14|·|21")),
            Err(Error::NotEquitable)
        );
    }

    #[test]
    fn successful_examples() {
        assert!(is_successful(&p(5, "1|33|·|1|421")));
        assert!(!is_successful(&p(5, "13|31|4|2|1")));
        assert!(is_successful(&p(4, "|||")));
    }

    #[test]
    fn tree_children() {
        let kids = succ_tree_children(&p(3, "||")).unwrap();
        let shown: Vec<_> = kids.iter().map(|k| k.dotted().to_string()).collect();
        assert_eq!(shown, vec!["·|·|0", "·|1|·", "2|·|·"]);
        assert!(kids.iter().all(|k| is_successful(k) && is_equitable(k)));
        let single = succ_tree_children(&p(1, "")).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_string(), "0");
        assert_eq!(
            succ_tree_children(&p(5, "13|31|4|2|1")),
            Err(Error::NotSuccessful)
        );
    }
}
