//! The distributive lattice of equitable partitions of a word.
//!
//! Partitions are ordered by moving letters rightward: `p ≤ q` when every
//! letter sits in a block of index at least as large in `p` as in `q`. The
//! leftmost equitable partition is the bottom, the rightmost is the top, and
//! every cover shifts one minimal left balanced block-suffix one block right.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::equitable::{
    add_fill, column_counts, column_targets, is_equitable, rightmost, shift_suffix, step_bound,
    Move,
};
use crate::{Error, ModWord, PartitionedWord, Result};

/// Per-block suffix lengths selecting a block-suffix of a host partition;
/// `lengths()[k]` letters are taken from the end of block `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuffixVector {
    lengths: Vec<usize>,
}

impl SuffixVector {
    /// Wraps per-block lengths, indexed by block.
    pub fn new(lengths: Vec<usize>) -> Self {
        Self { lengths }
    }

    /// Lengths indexed by block.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Total number of selected letters.
    pub fn total(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// True when nothing is selected.
    pub fn is_empty(&self) -> bool {
        self.lengths.iter().all(|&t| t == 0)
    }

    /// Componentwise minimum.
    pub fn intersection(&self, other: &Self) -> Self {
        Self::new(
            self.lengths
                .iter()
                .zip(&other.lengths)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(
            self.lengths
                .iter()
                .zip(&other.lengths)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Whether this suffix vector fits inside `host`'s blocks.
    pub fn fits(&self, host: &PartitionedWord) -> bool {
        self.lengths.len() == host.modulus()
            && self.lengths.iter().zip(host.sizes()).all(|(&t, &s)| t <= s)
    }

    /// Positions of the selected letters in `host`, in word order.
    pub fn positions(&self, host: &PartitionedWord) -> Vec<usize> {
        (0..host.modulus())
            .rev()
            .flat_map(|k| {
                let r = host.block_range(k);
                r.end - self.lengths[k]..r.end
            })
            .collect()
    }

    /// Balanced: the selected letters sum to 0 mod `m` and fill every column
    /// of the balancing array equally often.
    pub fn is_balanced(&self, host: &PartitionedWord) -> bool {
        if !self.fits(host) {
            return false;
        }
        let m = host.modulus();
        let mut counts = alloc::vec![0; m];
        let mut sum = 0;
        for k in 0..m {
            let block = host.block(k);
            for &v in &block[block.len() - self.lengths[k]..] {
                sum += v;
                add_fill(&mut counts, k, v, true);
            }
        }
        sum % m == 0 && counts.iter().all(|&c| c == sum / m)
    }

    /// Left: nothing selected from block 0.
    pub fn is_left(&self) -> bool {
        self.lengths.first().is_none_or(|&t| t == 0)
    }
}

/// Every nonempty left balanced block-suffix of `p`, found by enumerating all
/// suffix-length vectors with nothing taken from block 0.
pub fn left_bbs_all(p: &PartitionedWord) -> Vec<SuffixVector> {
    let m = p.modulus();
    let sizes = p.sizes();
    let mut out = Vec::new();
    let mut lengths = alloc::vec![0usize; m];
    loop {
        // odometer over blocks 1..m
        let mut k = 1;
        while k < m && lengths[k] == sizes[k] {
            lengths[k] = 0;
            k += 1;
        }
        if k >= m {
            break;
        }
        lengths[k] += 1;
        let s = SuffixVector::new(lengths.clone());
        if s.is_balanced(p) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.total(), s.lengths.clone()));
    out
}

/// The left balanced block-suffixes whose intersection with every other one
/// is either empty or themselves.
pub fn minimal_left_bbs(p: &PartitionedWord) -> Vec<SuffixVector> {
    let all = left_bbs_all(p);
    all.iter()
        .filter(|s| {
            all.iter().all(|t| {
                let meet = s.intersection(t);
                meet.is_empty() || meet == **s
            })
        })
        .cloned()
        .collect()
}

/// Moves the letters of a left balanced block-suffix one block to the right.
pub fn shift_right(p: &PartitionedWord, s: &SuffixVector) -> Result<PartitionedWord> {
    if !s.fits(p) {
        return Err(Error::BadSuffix("lengths exceed the host blocks".into()));
    }
    if s.is_empty() {
        return Err(Error::BadSuffix("empty block-suffix".into()));
    }
    if !s.is_left() {
        return Err(Error::BadSuffix("takes letters from block 0".into()));
    }
    if !s.is_balanced(p) {
        return Err(Error::BadSuffix("not balanced".into()));
    }
    Ok(shift_suffix(p, s.lengths()))
}

/// Upper covers of an equitable partition.
pub fn covers(p: &PartitionedWord) -> Result<Vec<PartitionedWord>> {
    if !is_equitable(p) {
        return Err(Error::NotEquitable);
    }
    Ok(minimal_left_bbs(p)
        .iter()
        .map(|s| shift_suffix(p, s.lengths()))
        .collect())
}

/// The leftmost equitable partition of `u`.
pub fn leftmost(u: &ModWord) -> Result<PartitionedWord> {
    leftmost_trace(u).map(|(p, _)| p)
}

/// The leftmost equitable partition with its moves.
///
/// Starts with every letter in block `m-1`. While some column is over-full,
/// takes the highest-indexed such column `j` and moves the last letter of
/// block `j` to the front of block `j-1`. Column 0 is never over-full.
pub fn leftmost_trace(u: &ModWord) -> Result<(PartitionedWord, Vec<Move>)> {
    let m = u.modulus();
    let mut p = PartitionedWord::all_in_block(u.clone(), m - 1)?;
    let targets = column_targets(u);
    let mut counts = column_counts(&p);
    let mut moves = Vec::new();
    let bound = step_bound(&p);
    loop {
        if counts[0] > targets[0] {
            return Err(Error::InvariantViolation(alloc::format!(
                "leftmost: column 0 over-full at {p}"
            )));
        }
        let Some(j) = (0..m).rev().find(|&j| counts[j] > targets[j]) else {
            if counts != targets {
                return Err(Error::InvariantViolation(alloc::format!(
                    "leftmost: no over-full column but {p} is not equitable"
                )));
            }
            return Ok((p, moves));
        };
        if p.sizes()[j] == 0 {
            return Err(Error::InvariantViolation(alloc::format!(
                "leftmost: block {j} empty at {p}"
            )));
        }
        if moves.len() >= bound {
            return Err(Error::InvariantViolation(alloc::format!(
                "leftmost: exceeded {bound} moves on {u}"
            )));
        }
        let position = p.block_range(j).end - 1;
        let v = u.letters()[position];
        add_fill(&mut counts, j, v, false);
        add_fill(&mut counts, j - 1, v, true);
        let sizes = p.sizes_mut();
        sizes[j] -= 1;
        sizes[j - 1] += 1;
        moves.push(Move {
            column: j,
            position,
            from: j,
            to: j - 1,
        });
    }
}

/// Whether `p ≤ q`: no letter of `q` sits further left than in `p`.
pub fn precedes(p: &PartitionedWord, q: &PartitionedWord) -> bool {
    p.word() == q.word()
        && p.block_vector()
            .iter()
            .zip(q.block_vector())
            .all(|(&a, b)| a >= b)
}

fn combine(
    p: &PartitionedWord,
    q: &PartitionedWord,
    pick: fn(usize, usize) -> usize,
) -> Result<PartitionedWord> {
    if p.word() != q.word() {
        return Err(Error::MismatchedWords);
    }
    if !is_equitable(p) || !is_equitable(q) {
        return Err(Error::NotEquitable);
    }
    let blocks: Vec<usize> = p
        .block_vector()
        .into_iter()
        .zip(q.block_vector())
        .map(|(a, b)| pick(a, b))
        .collect();
    PartitionedWord::from_block_vector(p.word().clone(), &blocks)
}

/// Least upper bound: the componentwise minimum of block indices.
pub fn join(p: &PartitionedWord, q: &PartitionedWord) -> Result<PartitionedWord> {
    combine(p, q, core::cmp::min)
}

/// Greatest lower bound: the componentwise maximum of block indices.
pub fn meet(p: &PartitionedWord, q: &PartitionedWord) -> Result<PartitionedWord> {
    combine(p, q, core::cmp::max)
}

/// All equitable partitions of a word with their cover relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqLattice {
    word: ModWord,
    nodes: Vec<PartitionedWord>,
    covers: Vec<(usize, usize)>,
    bottom: usize,
    top: usize,
}

impl EqLattice {
    /// The word being partitioned.
    pub fn word(&self) -> &ModWord {
        &self.word
    }

    /// Nodes, sorted lexicographically by block vector.
    pub fn nodes(&self) -> &[PartitionedWord] {
        &self.nodes
    }

    /// Cover pairs `(lower, upper)` as node indices, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of the leftmost partition.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Index of the rightmost partition.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false: the lattice has at least one node.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of a node, if present.
    pub fn index_of(&self, p: &PartitionedWord) -> Option<usize> {
        let key = p.block_vector();
        self.nodes
            .binary_search_by(|n| n.block_vector().cmp(&key))
            .ok()
    }

    /// Whether node `a` lies below or at node `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        precedes(&self.nodes[a], &self.nodes[b])
    }

    /// Whether every two nodes are comparable.
    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (a + 1..self.len()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Graphviz rendering: one box per node labelled in pipe notation, edges
    /// from lower to upper cover, drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph equitable_partitions {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (i, node) in self.nodes.iter().enumerate() {
            let mut attrs = String::new();
            if i == self.bottom {
                attrs.push_str(", peripheries=2");
            }
            if i == self.top {
                attrs.push_str(", style=bold");
            }
            let _ = writeln!(out, "  n{i} [label=\"{}\"{attrs}];", node.dotted());
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  n{lo} -> n{hi};");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the lattice by closing the leftmost partition under [`covers`].
pub fn enumerate_lattice(u: &ModWord) -> Result<EqLattice> {
    let bottom = leftmost(u)?;
    let top = rightmost(u)?;
    let mut seen: BTreeMap<Vec<usize>, PartitionedWord> = BTreeMap::new();
    let mut edges: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(bottom.block_vector(), bottom.clone());
    queue.push_back(bottom.clone());
    while let Some(p) = queue.pop_front() {
        let key = p.block_vector();
        for q in covers(&p)? {
            let qkey = q.block_vector();
            edges.push((key.clone(), qkey.clone()));
            if let alloc::collections::btree_map::Entry::Vacant(slot) = seen.entry(qkey) {
                slot.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let keys: Vec<Vec<usize>> = seen.keys().cloned().collect();
    let index = |k: &Vec<usize>| keys.binary_search(k).expect("every edge end was seen");
    let mut covers: Vec<(usize, usize)> = edges.iter().map(|(a, b)| (index(a), index(b))).collect();
    covers.sort_unstable();
    covers.dedup();
    let bottom_idx = index(&bottom.block_vector());
    let top_idx = keys.binary_search(&top.block_vector()).map_err(|_| {
        Error::InvariantViolation(alloc::format!(
            "rightmost partition {top} not reachable from leftmost {bottom}"
        ))
    })?;
    Ok(EqLattice {
        word: u.clone(),
        nodes: seen.into_values().collect(),
        covers,
        bottom: bottom_idx,
        top: top_idx,
    })
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

    fn rows(host: &PartitionedWord, s: &SuffixVector) -> Vec<usize> {
        s.positions(host).into_iter().map(|i| i + 1).collect()
    }

    #[test]
    fn three_left_balanced_suffixes_of_leftmost() {
        let host = p(5, "13|31|4|2|1");
        let all = left_bbs_all(&host);
        let shown: Vec<Vec<usize>> = all.iter().map(|s| rows(&host, s)).collect();
        assert_eq!(shown, vec![vec![4, 5], vec![2, 6], vec![2, 4, 5, 6]]);
        let minimal: Vec<Vec<usize>> = minimal_left_bbs(&host)
            .iter()
            .map(|s| rows(&host, s))
            .collect();
        assert_eq!(minimal, vec![vec![4, 5], vec![2, 6]]);
    }

    #[test]
    fn rightmost_has_no_left_suffix() {
        assert!(left_bbs_all(&p(5, "1|33|·|1|421")).is_empty());
        assert!(minimal_left_bbs(&p(5, "1|33|·|1|421")).is_empty());
    }

    #[test]
    fn single_letter_suffixes() {
        assert_eq!(left_bbs_all(&p(3, "|0|")).len(), 1);
        assert!(left_bbs_all(&p(3, "||0")).is_empty());
        assert!(left_bbs_all(&p(3, "|1|")).is_empty());
    }

    #[test]
    fn middle_node_has_single_cover() {
        let host = p(5, "1|33|1|4|21");
        let minimal = minimal_left_bbs(&host);
        assert_eq!(minimal.len(), 1);
        assert_eq!(
            shift_right(&host, &minimal[0]).unwrap().to_string(),
            "1|33||1|421"
        );
    }

    #[test]
    fn shifting_examples() {
        let host = p(5, "13|31|4|2|1");
        let wavy = SuffixVector::new(vec![0, 1, 0, 0, 1]);
        assert_eq!(
            shift_right(&host, &wavy).unwrap().to_string(),
            "1|331|4||21"
        );
        let under = SuffixVector::new(vec![0, 0, 1, 1, 0]);
        assert_eq!(
            shift_right(&host, &under).unwrap().to_string(),
            "13|3|1|42|1"
        );
        assert!(shift_right(&host, &SuffixVector::new(vec![0; 5])).is_err());
        assert!(shift_right(&host, &SuffixVector::new(vec![1, 0, 0, 0, 0])).is_err());
        assert!(shift_right(&host, &SuffixVector::new(vec![0, 0, 0, 0, 3])).is_err());
        assert!(shift_right(&host, &SuffixVector::new(vec![0, 0, 1, 0, 0])).is_err());
    }

    #[test]
    fn cover_examples() {
        let up: Vec<_> = covers(&p(5, "13|31|4|2|1"))
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(up, vec!["13|3|1|42|1", "1|331|4||21"]);
        assert!(covers(&p(5, "1|33|·|1|421")).unwrap().is_empty());
        assert_eq!(covers(&p(5, "1|33|14|·|21")), Err(Error::NotEquitable));
    }

    #[test]
    fn leftmost_example() {
        let (bottom, moves) = leftmost_trace(&w(5, "1331421")).unwrap();
        assert_eq!(bottom.to_string(), "13|31|4|2|1");
        let letters: Vec<usize> = moves.iter().map(|mv| mv.position + 1).collect();
        assert_eq!(letters, vec![7, 6, 5, 4, 7, 6, 5, 3, 7, 6, 7]);
    }

    #[test]
    fn lattice_of_worked_example() {
        let lat = enumerate_lattice(&w(5, "1331421")).unwrap();
        assert_eq!(lat.len(), 5);
        assert_eq!(lat.covers().len(), 5);
        assert_eq!(lat.nodes()[lat.bottom()].to_string(), "13|31|4|2|1");
        assert_eq!(lat.nodes()[lat.top()].to_string(), "1|33||1|421");
        assert!(!lat.is_chain());
        let dot = lat.to_dot();
        assert_eq!(dot.matches(" -> ").count(), 5);
        assert_eq!(dot.matches("[label=").count(), 5);
        assert_eq!(dot, enumerate_lattice(&w(5, "1331421")).unwrap().to_dot());
    }

    #[test]
    fn trivial_lattice() {
        let lat = enumerate_lattice(&w(3, "")).unwrap();
        assert_eq!(lat.len(), 1);
        assert!(lat.covers().is_empty());
        assert!(lat.is_chain());
        assert_eq!(lat.to_dot().matches(" -> ").count(), 0);
    }

    #[test]
    fn zero_letters_fill_nothing() {
        // any placement of the dividers is equitable
        let lat = enumerate_lattice(&w(3, "000")).unwrap();
        assert_eq!(lat.len(), 10);
        assert_eq!(lat.nodes()[lat.top()].to_string(), "||000");
        assert_eq!(lat.nodes()[lat.bottom()].to_string(), "000||");
        assert!(!lat.is_chain());
    }

    #[test]
    fn join_and_meet() {
        let a = p(5, "1|331|4||21");
        let b = p(5, "13|3|1|42|1");
        assert_eq!(join(&a, &b).unwrap().to_string(), "1|33|1|4|21");
        assert_eq!(meet(&a, &b).unwrap().to_string(), "13|31|4|2|1");
        assert_eq!(join(&a, &a).unwrap(), a);
        assert_eq!(meet(&b, &b).unwrap(), b);
        assert_eq!(join(&a, &p(5, "1|33|1|4|12")), Err(Error::MismatchedWords));
    }
}
