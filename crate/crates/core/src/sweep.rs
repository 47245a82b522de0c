//! The modular sweep pipeline: presweep, forget, sweep, and their inverses.

use alloc::vec::Vec;

use crate::equitable::rightmost;
use crate::{Error, ModWord, PartitionedWord, Result};

/// Sorts `w` into blocks by modular level: block `k` receives, read right to
/// left, every letter whose level is `k`.
pub fn presweep(w: &ModWord) -> PartitionedWord {
    let m = w.modulus();
    let levels = w.levels();
    let mut buckets: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
    for (j, &level) in levels.levels().iter().enumerate().rev() {
        buckets[level as usize].push(w.letters()[j]);
    }
    let sizes: Vec<usize> = buckets.iter().map(Vec::len).collect();
    let letters: Vec<usize> = buckets.into_iter().rev().flatten().collect();
    let word = ModWord::new(m, letters).expect("letters come from a valid word");
    PartitionedWord::new(word, sizes).expect("buckets cover the word")
}

/// Drops the block structure.
pub fn forget(p: &PartitionedWord) -> ModWord {
    p.word().clone()
}

/// The modular sweep map, `forget ∘ presweep`.
pub fn sweep_mod(w: &ModWord) -> ModWord {
    forget(&presweep(w))
}

/// What the inverse presweep leaves behind when it gets stuck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresweepFailure {
    residue: PartitionedWord,
    residue_positions: Vec<usize>,
    visited: Vec<(usize, usize)>,
}

impl PresweepFailure {
    /// The unvisited letters, kept in their blocks. Each block of the residue
    /// is a suffix of the corresponding input block.
    pub fn residue(&self) -> &PartitionedWord {
        &self.residue
    }

    /// Positions (in the input) of the residue letters, in order.
    pub fn residue_positions(&self) -> &[usize] {
        &self.residue_positions
    }

    /// `(position, level)` of each visited letter in visit order. The level is
    /// the block the letter was taken from.
    pub fn visited(&self) -> &[(usize, usize)] {
        &self.visited
    }

    /// Residue size per block, `suffix_lengths()[k]` for block `k`.
    pub fn suffix_lengths(&self) -> &[usize] {
        self.residue.sizes()
    }
}

/// Result of running the inverse presweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseOutcome {
    /// Every letter was visited; the recovered word.
    Succeeded(ModWord),
    /// The walk reached an empty block.
    Failed(PresweepFailure),
}

impl InverseOutcome {
    /// True on success.
    pub fn is_success(&self) -> bool {
        matches!(self, InverseOutcome::Succeeded(_))
    }

    /// The recovered word, if any.
    pub fn success(self) -> Option<ModWord> {
        match self {
            InverseOutcome::Succeeded(w) => Some(w),
            InverseOutcome::Failed(_) => None,
        }
    }
}

/// One row of the inverse presweep trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseState {
    /// Positions removed so far, in removal order.
    pub removed: Vec<usize>,
    /// Current level: the block the next letter is taken from.
    pub level: usize,
    /// Suffix of the recovered word built so far.
    pub word: Vec<usize>,
}

/// Inverse of [`presweep`]. Starting from level `|u|_m`, repeatedly takes the
/// first unvisited letter of the block named by the current level and
/// subtracts it from the level. Fails if that block is exhausted first.
pub fn inverse_presweep(p: &PartitionedWord) -> InverseOutcome {
    run_inverse(p, None)
}

/// [`inverse_presweep`] recording the state before the first step and after
/// every step.
pub fn inverse_presweep_trace(p: &PartitionedWord) -> (InverseOutcome, Vec<InverseState>) {
    let mut states = Vec::new();
    let outcome = run_inverse(p, Some(&mut states));
    (outcome, states)
}

fn run_inverse(p: &PartitionedWord, mut trace: Option<&mut Vec<InverseState>>) -> InverseOutcome {
    let m = p.modulus();
    let n = p.len();
    let letters = p.word().letters();
    let starts: Vec<usize> = (0..m).map(|k| p.block_range(k).start).collect();
    let mut taken = alloc::vec![0usize; m];
    let mut level = p.word().residue();
    // recovered letters, last letter first
    let mut reversed = Vec::with_capacity(n);
    let mut visited = Vec::with_capacity(n);

    let mut record = |visited: &[(usize, usize)], reversed: &[usize], level: usize| {
        if let Some(states) = trace.as_deref_mut() {
            states.push(InverseState {
                removed: visited.iter().map(|&(i, _)| i).collect(),
                level,
                word: reversed.iter().rev().copied().collect(),
            });
        }
    };
    record(&visited, &reversed, level);

    for _ in 0..n {
        if taken[level] == p.sizes()[level] {
            let sizes: Vec<usize> = (0..m).map(|k| p.sizes()[k] - taken[k]).collect();
            let mut residue_positions = Vec::new();
            let mut residue_letters = Vec::new();
            for k in (0..m).rev() {
                let rest = starts[k] + taken[k]..starts[k] + p.sizes()[k];
                residue_positions.extend(rest.clone());
                residue_letters.extend_from_slice(&letters[rest]);
            }
            let word = ModWord::new(m, residue_letters).expect("subword of a valid word");
            return InverseOutcome::Failed(PresweepFailure {
                residue: PartitionedWord::new(word, sizes).expect("sizes match residue"),
                residue_positions,
                visited,
            });
        }
        let pos = starts[level] + taken[level];
        taken[level] += 1;
        let letter = letters[pos];
        visited.push((pos, level));
        reversed.push(letter);
        level = (level + m - letter) % m;
        record(&visited, &reversed, level);
    }
    reversed.reverse();
    InverseOutcome::Succeeded(ModWord::new(m, reversed).expect("permutation of a valid word"))
}

/// Inverse of the modular sweep map: the inverse presweep of the rightmost
/// equitable partition of `u`.
pub fn unsweep_mod(u: &ModWord) -> Result<ModWord> {
    let top = rightmost(u)?;
    match inverse_presweep(&top) {
        InverseOutcome::Succeeded(w) => Ok(w),
        InverseOutcome::Failed(_) => Err(Error::InvariantViolation(alloc::format!(
            "inverse presweep failed on the rightmost partition {top} of {u}"
        ))),
    }
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
    fn presweep_examples() {
        assert_eq!(presweep(&w(5, "3113214")).to_string(), "1|33||1|421");
        assert_eq!(presweep(&w(3, "000")).to_string(), "||000");
        assert_eq!(presweep(&w(4, "2")).to_string(), "|2||");
        assert_eq!(presweep(&w(4, "")).to_string(), "|||");
    }

    #[test]
    fn forget_and_sweep() {
        assert_eq!(forget(&p(5, "1|33|·|1|421")).to_string(), "1331421");
        assert_eq!(forget(&p(5, "13|31|4|2|1")).to_string(), "1331421");
        assert!(forget(&p(3, "||")).is_empty());
        assert_eq!(sweep_mod(&w(5, "3113214")).to_string(), "1331421");
        assert_eq!(sweep_mod(&w(3, "000")).to_string(), "000");
        // levels (0, 1): block 1 takes the 1, block 0 the 0
        assert_eq!(sweep_mod(&w(2, "01")).to_string(), "10");
    }

    #[test]
    fn inverse_presweep_recovers_worked_example() {
        let out = inverse_presweep(&p(5, "1|33|·|1|421"));
        assert_eq!(out, InverseOutcome::Succeeded(w(5, "3113214")));
        assert_eq!(
            inverse_presweep(&p(3, "||")),
            InverseOutcome::Succeeded(w(3, ""))
        );
    }

    #[test]
    fn inverse_presweep_failure_keeps_residue() {
        let InverseOutcome::Failed(fail) = inverse_presweep(&p(5, "13|31|4|2|1")) else {
            panic!("expected failure");
        };
        assert_eq!(fail.residue().dotted().to_string(), "3|1|4|2|·");
        let order: Vec<usize> = fail.visited().iter().map(|&(i, _)| i + 1).collect();
        assert_eq!(order, vec![7, 1, 3]);
        assert_eq!(fail.residue_positions(), &[1, 3, 4, 5]);
        assert_eq!(fail.suffix_lengths(), &[0, 1, 1, 1, 1]);
    }

    #[test]
    fn trace_starts_before_first_step() {
        let (_, states) = inverse_presweep_trace(&p(5, "1|33|·|1|421"));
        assert_eq!(states.len(), 8);
        assert_eq!(states[0].level, 0);
        assert!(states[0].word.is_empty());
        assert_eq!(states[7].word, vec![3, 1, 1, 3, 2, 1, 4]);
    }

    #[test]
    fn unsweep_examples() {
        assert_eq!(
            unsweep_mod(&w(5, "1331421")).unwrap().to_string(),
            "3113214"
        );
        assert_eq!(unsweep_mod(&w(3, "000")).unwrap().to_string(), "000");
        assert_eq!(unsweep_mod(&w(3, "")).unwrap().to_string(), "");
    }
}
