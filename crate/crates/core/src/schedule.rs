//! Task scheduling in terms of partitioned words.
//!
//! A day has `m` hours. Task `i` takes `lengths[i]` hours and starts at hour
//! `starts[i]` in `1..=m`; tasks start in index order, so `starts` is
//! nondecreasing. A task starting at hour `h` sits in block `m - h`, and its
//! working hours are the columns it fills in the balancing array.

use alloc::vec::Vec;

use crate::equitable::{is_equitable, rightmost};
use crate::lattice::enumerate_lattice;
use crate::sweep::inverse_presweep_trace;
use crate::{Error, ModWord, PartitionedWord, Result};

/// Start hours for a list of tasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schedule {
    hours: usize,
    lengths: Vec<usize>,
    starts: Vec<usize>,
}

impl Schedule {
    /// Checks that every length is below `hours` and the starts are
    /// nondecreasing hours in `1..=hours`.
    pub fn new(hours: usize, lengths: Vec<usize>, starts: Vec<usize>) -> Result<Self> {
        check_lengths(hours, &lengths)?;
        if starts.len() != lengths.len() {
            return Err(Error::BadSchedule(alloc::format!(
                "{} starts for {} tasks",
                starts.len(),
                lengths.len()
            )));
        }
        if let Some(&h) = starts.iter().find(|&&h| h == 0 || h > hours) {
            return Err(Error::BadSchedule(alloc::format!(
                "start hour {h} outside 1..={hours}"
            )));
        }
        if starts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadSchedule(
                "start hours must be nondecreasing".into(),
            ));
        }
        Ok(Self {
            hours,
            lengths,
            starts,
        })
    }

    /// Number of hours `m`.
    pub fn hours(&self) -> usize {
        self.hours
    }

    /// Task lengths.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Start hours.
    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    /// The partitioned word with task `i` in block `m - starts[i]`.
    pub fn to_partition(&self) -> PartitionedWord {
        let word = ModWord::new(self.hours, self.lengths.clone()).expect("lengths checked");
        let blocks: Vec<usize> = self.starts.iter().map(|&h| self.hours - h).collect();
        PartitionedWord::from_block_vector(word, &blocks).expect("starts checked")
    }

    /// The schedule that starts the task of letter `i` at hour `m - block`.
    pub fn from_partition(p: &PartitionedWord) -> Self {
        let m = p.modulus();
        Self {
            hours: m,
            lengths: p.word().letters().to_vec(),
            starts: p.block_vector().into_iter().map(|b| m - b).collect(),
        }
    }

    /// Whether every hour carries its equitable workload.
    pub fn is_equitable(&self) -> bool {
        is_equitable(&self.to_partition())
    }
}

fn check_lengths(hours: usize, lengths: &[usize]) -> Result<()> {
    if hours == 0 {
        return Err(Error::ZeroModulus);
    }
    if let Some(&l) = lengths.iter().find(|&&l| l >= hours) {
        return Err(Error::BadSchedule(alloc::format!(
            "task length {l} does not fit in {hours} hours"
        )));
    }
    Ok(())
}

fn word(hours: usize, lengths: &[usize]) -> Result<ModWord> {
    check_lengths(hours, lengths)?;
    ModWord::new(hours, lengths.to_vec())
}

/// The successful schedule: every task starts as late as any equitable
/// schedule allows.
pub fn schedule_latest(hours: usize, lengths: &[usize]) -> Result<Schedule> {
    Ok(Schedule::from_partition(&rightmost(&word(
        hours, lengths,
    )?)?))
}

/// Every equitable schedule, earliest first. A schedule appears after all
/// schedules it dominates.
pub fn schedule_all(hours: usize, lengths: &[usize]) -> Result<Vec<Schedule>> {
    let lattice = enumerate_lattice(&word(hours, lengths)?)?;
    let mut out: Vec<Schedule> = lattice
        .nodes()
        .iter()
        .map(Schedule::from_partition)
        .collect();
    out.sort_by(|a, b| {
        let sa: usize = a.starts.iter().sum();
        let sb: usize = b.starts.iter().sum();
        sa.cmp(&sb).then_with(|| a.starts.cmp(&b.starts))
    });
    Ok(out)
}

/// What the inspector sees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inspection {
    /// True when every task is watched exactly once.
    pub successful: bool,
    /// Indices of the tasks watched, in the order the inspector sees them.
    pub watch: Vec<usize>,
}

/// Runs the inspector over an equitable schedule. The inspector watches the
/// tasks in the reverse of the inverse presweep's visit order.
pub fn inspector_check(s: &Schedule) -> Result<Inspection> {
    let p = s.to_partition();
    if !is_equitable(&p) {
        return Err(Error::NotEquitable);
    }
    let (outcome, states) = inverse_presweep_trace(&p);
    let mut watch = states.last().map(|s| s.removed.clone()).unwrap_or_default();
    watch.reverse();
    Ok(Inspection {
        successful: outcome.is_success(),
        watch,
    })
}
