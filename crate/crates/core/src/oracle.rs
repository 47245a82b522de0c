//! Brute-force reference implementations and exhaustive verification.
//!
//! The helpers here are written from the definitions alone and share nothing
//! with the modules they check beyond the word types. Each `verify_*`
//! function walks a finite family of instances and records, per claim,
//! whether it held and the first counterexample if it did not.
//! Counterexamples use the same text formats the command line accepts.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::equitable::{rightmost, successful_from};
use crate::general::{
    dyck_words, lift, modulus_bound, sweep_int, unsweep_int, unzeta, zeta, zeta_direct, Content,
    DyckParams, IntWord,
};
use crate::lattice::{covers, enumerate_lattice, join, left_bbs_all, leftmost, meet};
use crate::sweep::{inverse_presweep, sweep_mod, unsweep_mod, InverseOutcome};
use crate::{Error, ModWord, PartitionedWord, Result};

/// Limits on how much an exhaustive run may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Most words a single run may visit.
    pub words: u128,
    /// Most partitioned words enumerated for a single word.
    pub partitions: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            words: 1_000_000,
            partitions: 1_000_000,
        }
    }
}

/// Outcome of one claim over a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Short name of the claim.
    pub name: String,
    /// Instances on which the claim was tested.
    pub tested: u64,
    /// Instances on which it failed.
    pub failures: u64,
    /// The first failing instance.
    pub counterexample: Option<String>,
}

impl Check {
    /// No failures.
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Result of an exhaustive run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// What was checked, e.g. `m=3 N=5`.
    pub instance: String,
    /// Claims in the order first recorded.
    pub checks: Vec<Check>,
    /// Words visited.
    pub words: u64,
    /// Partitioned words visited.
    pub partitions: u64,
}

impl VerifyReport {
    /// An empty report.
    pub fn new(instance: impl Into<String>) -> Self {
        Self {
            instance: instance.into(),
            checks: Vec::new(),
            words: 0,
            partitions: 0,
        }
    }

    /// True when no claim failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Number of failing claims.
    pub fn failed_checks(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    /// Looks a claim up by name.
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Records one test of `name`. The counterexample is built only on the
    /// first failure.
    pub fn record(&mut self, name: &str, ok: bool, counterexample: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(Check {
                    name: name.to_string(),
                    tested: 0,
                    failures: 0,
                    counterexample: None,
                });
                self.checks.len() - 1
            }
        };
        let check = &mut self.checks[idx];
        check.tested += 1;
        if !ok {
            check.failures += 1;
            if check.counterexample.is_none() {
                check.counterexample = Some(counterexample());
            }
        }
    }

    /// Combines a report over a later shard into this one. Counts add up and
    /// the earliest counterexample wins, so merging is associative.
    pub fn merge(mut self, other: VerifyReport) -> Self {
        for c in other.checks {
            match self.checks.iter_mut().find(|d| d.name == c.name) {
                Some(d) => {
                    d.tested += c.tested;
                    d.failures += c.failures;
                    if d.counterexample.is_none() {
                        d.counterexample = c.counterexample;
                    }
                }
                None => self.checks.push(c),
            }
        }
        self.words += other.words;
        self.partitions += other.partitions;
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} words, {} partitions",
            self.instance, self.words, self.partitions
        )?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            write!(
                f,
                "  {:<width$}  {:>4}  {}/{}",
                c.name,
                status,
                c.tested - c.failures,
                c.tested
            )?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn pow(m: usize, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(m as u128))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Number of words of length `n` over `m` letters.
pub fn word_count(m: usize, n: usize) -> u128 {
    pow(m, n)
}

/// Number of ways to split a word of length `n` into `m` blocks.
pub fn partition_count(m: usize, n: usize) -> u128 {
    if m == 0 {
        return 0;
    }
    binomial((n + m - 1) as u128, (m - 1) as u128)
}

/// The `index`-th word of length `n` in lexicographic order.
pub fn nth_word(m: usize, n: usize, mut index: u128) -> ModWord {
    let mut letters = alloc::vec![0usize; n];
    for slot in letters.iter_mut().rev() {
        *slot = (index % m as u128) as usize;
        index /= m as u128;
    }
    ModWord::new(m, letters).expect("digits are below m")
}

/// Checks `m^n` against the budget and returns it.
pub fn check_word_budget(m: usize, n: usize, budget: &Budget) -> Result<u128> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let needed = word_count(m, n);
    if needed > budget.words {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.words,
        });
    }
    Ok(needed)
}

/// Sweep by sorting positions on `(level descending, position descending)`.
pub fn naive_sweep(w: &ModWord) -> ModWord {
    let m = w.modulus();
    let mut level = 0;
    let mut keyed: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &a) in w.letters().iter().enumerate() {
        level = (level + a) % m;
        keyed.push((level, i, a));
    }
    keyed.sort_by(|x, y| y.0.cmp(&x.0).then(y.1.cmp(&x.1)));
    ModWord::new(m, keyed.into_iter().map(|(_, _, a)| a).collect()).expect("same letters")
}

/// Equitability straight from the definition: lay out the balancing array
/// and count each column.
pub fn naive_is_equitable(p: &PartitionedWord) -> bool {
    let m = p.modulus();
    let blocks = p.block_vector();
    let mut grid: Vec<Vec<bool>> = Vec::new();
    for (&v, &b) in p.word().letters().iter().zip(&blocks) {
        let mut row = alloc::vec![false; m];
        let mut col = b;
        for _ in 0..v {
            row[col] = true;
            col = if col == 0 { m - 1 } else { col - 1 };
        }
        grid.push(row);
    }
    let total: usize = p.word().letters().iter().sum();
    (0..m).all(|j| {
        let filled = grid.iter().filter(|row| row[j]).count();
        let want = total / m + usize::from(j != 0 && j <= total % m);
        filled == want
    })
}

/// Inverse presweep on queues: returns the recovered word or `None`.
pub fn naive_unpresweep(p: &PartitionedWord) -> Option<ModWord> {
    let m = p.modulus();
    let mut queues: Vec<VecDeque<usize>> = (0..m)
        .map(|k| p.block(k).iter().copied().collect())
        .collect();
    let mut level = p.word().letters().iter().sum::<usize>() % m;
    let mut out = VecDeque::new();
    while out.len() < p.len() {
        let a = queues[level].pop_front()?;
        out.push_front(a);
        level = (level + m * a - a) % m;
    }
    Some(ModWord::new(m, out.into_iter().collect()).expect("same letters"))
}

/// Every equitable partition of `u`, found by trying every placement of the
/// `m-1` dividers. Sorted by block vector.
pub fn brute_equitable(u: &ModWord) -> Vec<PartitionedWord> {
    let m = u.modulus();
    let n = u.len();
    let mut out = Vec::new();
    let mut sizes = alloc::vec![0usize; m];
    compositions(n, &mut sizes, 0, &mut |sizes| {
        let p = PartitionedWord::new(u.clone(), sizes.to_vec()).expect("sizes sum to n");
        if naive_is_equitable(&p) {
            out.push(p);
        }
    });
    out.sort_by_key(|p| p.block_vector());
    out
}

/// Like [`brute_equitable`] but refuses words with too many partitions.
pub fn brute_equitable_budgeted(u: &ModWord, budget: &Budget) -> Result<Vec<PartitionedWord>> {
    let needed = partition_count(u.modulus(), u.len());
    if needed > budget.partitions {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.partitions,
        });
    }
    Ok(brute_equitable(u))
}

fn compositions(left: usize, sizes: &mut [usize], k: usize, emit: &mut impl FnMut(&[usize])) {
    if k + 1 == sizes.len() {
        sizes[k] = left;
        emit(sizes);
        return;
    }
    for s in 0..=left {
        sizes[k] = s;
        compositions(left - s, sizes, k + 1, emit);
    }
}

fn below(p: &[usize], q: &[usize]) -> bool {
    p.iter().zip(q).all(|(a, b)| a >= b)
}

fn pick(p: &[usize], q: &[usize], f: fn(usize, usize) -> usize) -> Vec<usize> {
    p.iter().zip(q).map(|(&a, &b)| f(a, b)).collect()
}

fn blocks_text(u: &ModWord, blocks: &[usize]) -> String {
    PartitionedWord::from_block_vector(u.clone(), blocks)
        .map(|p| p.dotted().to_string())
        .unwrap_or_else(|_| alloc::format!("{blocks:?}"))
}

/// Checks that the modular sweep is a bijection on all words of length `n`.
pub fn verify_sweep_bijective(m: usize, n: usize, budget: &Budget) -> Result<VerifyReport> {
    let total = check_word_budget(m, n, budget)?;
    let mut report = verify_sweep_bijective_range(m, n, 0..total)?;
    check_sweep_injective(m, n, &mut report);
    Ok(report)
}

/// Counts the distinct images of all words of length `n` and records
/// whether there are `m^n` of them.
pub fn check_sweep_injective(m: usize, n: usize, report: &mut VerifyReport) {
    let total = word_count(m, n);
    let images: BTreeSet<Vec<usize>> = (0..total)
        .map(|i| sweep_mod(&nth_word(m, n, i)).letters().to_vec())
        .collect();
    report.record("sweep is injective", images.len() as u128 == total, || {
        alloc::format!("m={m} N={n}: only {} distinct images", images.len())
    });
}

/// [`verify_sweep_bijective`] on the words with lexicographic index in
/// `range`, without the global injectivity count.
pub fn verify_sweep_bijective_range(
    m: usize,
    n: usize,
    range: Range<u128>,
) -> Result<VerifyReport> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut report = VerifyReport::new(alloc::format!("m={m} N={n}"));
    for i in range {
        let w = nth_word(m, n, i);
        report.words += 1;
        let u = sweep_mod(&w);
        report.record("sweep matches naive sort", u == naive_sweep(&w), || {
            alloc::format!("m={m} w={w}")
        });
        let back = unsweep_mod(&u);
        report.record("unsweep inverts sweep", back.as_ref() == Ok(&w), || {
            alloc::format!("m={m} w={w}")
        });
        // every word is an image, so sweeping the preimage of w must give w
        let pre = unsweep_mod(&w);
        report.record(
            "sweep inverts unsweep",
            pre.as_ref().map(sweep_mod).as_ref() == Ok(&w),
            || alloc::format!("m={m} u={w}"),
        );
    }
    Ok(report)
}

/// Checks every structural claim about equitable partitions on all words of
/// length `n`.
pub fn verify_theorems(m: usize, n: usize, budget: &Budget) -> Result<VerifyReport> {
    let total = check_word_budget(m, n, budget)?;
    verify_theorems_range(m, n, 0..total, budget)
}

/// [`verify_theorems`] on the words with lexicographic index in `range`.
pub fn verify_theorems_range(
    m: usize,
    n: usize,
    range: Range<u128>,
    budget: &Budget,
) -> Result<VerifyReport> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let needed = partition_count(m, n);
    if needed > budget.partitions {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.partitions,
        });
    }
    let mut report = VerifyReport::new(alloc::format!("m={m} N={n}"));
    for i in range {
        theorems_for_word(&nth_word(m, n, i), &mut report);
    }
    Ok(report)
}

fn theorems_for_word(u: &ModWord, report: &mut VerifyReport) {
    let m = u.modulus();
    let eq = brute_equitable(u);
    report.words += 1;
    report.partitions += partition_count(m, u.len()) as u64;
    let vecs: Vec<Vec<usize>> = eq.iter().map(PartitionedWord::block_vector).collect();
    let set: BTreeSet<&Vec<usize>> = vecs.iter().collect();
    let ctx = |what: &str| alloc::format!("m={m} u={u}{what}");

    let successful: Vec<&PartitionedWord> = eq
        .iter()
        .filter(|p| naive_unpresweep(p).is_some())
        .collect();
    report.record(
        "exactly one successful partition",
        successful.len() == 1,
        || ctx(&alloc::format!(" ({} successful)", successful.len())),
    );

    let top = match rightmost(u) {
        Ok(t) => t,
        Err(e) => {
            report.record("rightmost terminates", false, || {
                ctx(&alloc::format!(": {e}"))
            });
            return;
        }
    };
    let bottom = match leftmost(u) {
        Ok(b) => b,
        Err(e) => {
            report.record("leftmost terminates", false, || {
                ctx(&alloc::format!(": {e}"))
            });
            return;
        }
    };
    report.record(
        "successful = rightmost",
        successful.first() == Some(&&top),
        || ctx(&alloc::format!(" rightmost={}", top.dotted())),
    );
    report.record(
        "successful unpresweeps to unsweep",
        naive_unpresweep(&top).as_ref() == unsweep_mod(u).ok().as_ref(),
        || ctx(""),
    );

    let top_v = top.block_vector();
    let bottom_v = bottom.block_vector();
    let extreme = set.contains(&top_v)
        && set.contains(&bottom_v)
        && vecs.iter().all(|q| below(&bottom_v, q) && below(q, &top_v));
    report.record("leftmost and rightmost are extreme", extreme, || {
        ctx(&alloc::format!(
            " leftmost={} rightmost={}",
            bottom.dotted(),
            top.dotted()
        ))
    });

    for p in &eq {
        report.record(
            "successful_from converges",
            successful_from(p).as_ref() == Ok(&top),
            || ctx(&alloc::format!(" from={}", p.dotted())),
        );
    }

    match enumerate_lattice(u) {
        Ok(lat) => {
            let nodes: Vec<Vec<usize>> = lat.nodes().iter().map(|p| p.block_vector()).collect();
            report.record(
                "lattice nodes = brute force",
                nodes == vecs
                    && lat.nodes()[lat.bottom()] == bottom
                    && lat.nodes()[lat.top()] == top,
                || {
                    ctx(&alloc::format!(
                        " ({} nodes, {} brute)",
                        nodes.len(),
                        vecs.len()
                    ))
                },
            );
        }
        Err(e) => report.record("lattice nodes = brute force", false, || {
            ctx(&alloc::format!(": {e}"))
        }),
    }

    for (a, p) in vecs.iter().enumerate() {
        for (b, q) in vecs.iter().enumerate().skip(a) {
            let lo = pick(p, q, core::cmp::max);
            let hi = pick(p, q, core::cmp::min);
            report.record(
                "closed under meet and join",
                set.contains(&lo) && set.contains(&hi),
                || {
                    ctx(&alloc::format!(
                        " p={} q={}",
                        eq[a].dotted(),
                        eq[b].dotted()
                    ))
                },
            );
            let ours = (meet(&eq[a], &eq[b]), join(&eq[a], &eq[b]));
            report.record(
                "meet and join are componentwise",
                matches!(&ours, (Ok(x), Ok(y)) if x.block_vector() == lo && y.block_vector() == hi),
                || {
                    ctx(&alloc::format!(
                        " p={} q={}",
                        eq[a].dotted(),
                        eq[b].dotted()
                    ))
                },
            );
        }
    }

    let meet_v = |x: &[usize], y: &[usize]| pick(x, y, core::cmp::max);
    let join_v = |x: &[usize], y: &[usize]| pick(x, y, core::cmp::min);
    for x in &vecs {
        for y in &vecs {
            for z in &vecs {
                let lhs = meet_v(x, &join_v(y, z));
                let rhs = join_v(&meet_v(x, y), &meet_v(x, z));
                report.record("distributive", lhs == rhs, || {
                    ctx(&alloc::format!(
                        " x={} y={} z={}",
                        blocks_text(u, x),
                        blocks_text(u, y),
                        blocks_text(u, z)
                    ))
                });
            }
        }
    }

    for (a, p) in eq.iter().enumerate() {
        let mut by_order: Vec<Vec<usize>> = vecs
            .iter()
            .filter(|q| {
                *q != &vecs[a]
                    && below(&vecs[a], q)
                    && !vecs
                        .iter()
                        .any(|r| r != &vecs[a] && r != *q && below(&vecs[a], r) && below(r, q))
            })
            .cloned()
            .collect();
        by_order.sort();
        let mut by_bbs: Vec<Vec<usize>> = covers(p)
            .map(|cs| cs.iter().map(PartitionedWord::block_vector).collect())
            .unwrap_or_default();
        by_bbs.sort();
        report.record(
            "covers are minimal left BBS shifts",
            by_order == by_bbs,
            || ctx(&alloc::format!(" p={}", p.dotted())),
        );

        if let InverseOutcome::Failed(fail) = inverse_presweep(p) {
            let union = left_bbs_all(p)
                .into_iter()
                .fold(alloc::vec![0usize; m], |acc, s| {
                    pick(&acc, s.lengths(), core::cmp::max)
                });
            report.record(
                "residue is the largest left BBS",
                fail.suffix_lengths() == union.as_slice(),
                || ctx(&alloc::format!(" p={}", p.dotted())),
            );
        }
    }

    report.record(
        "rightmost has no left BBS",
        left_bbs_all(&top).is_empty(),
        || ctx(&alloc::format!(" rightmost={}", top.dotted())),
    );
}

/// Integer sweep by sorting positions on their levels in the prescribed
/// order, computed without the modular machinery.
pub fn naive_sweep_int(w: &IntWord) -> Vec<i64> {
    let mut level = 0i64;
    let mut keyed: Vec<((bool, i64), usize, i64)> = Vec::new();
    for (i, &a) in w.letters().iter().enumerate() {
        level += a;
        // negatives before nonnegatives; within each, larger levels first
        keyed.push(((level >= 0, -level), i, a));
    }
    keyed.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    keyed.into_iter().map(|(_, _, a)| a).collect()
}

/// Checks the integer sweep against the modulus lift on every word of a
/// content.
pub fn verify_general_sweep(content: &Content, budget: &Budget) -> Result<VerifyReport> {
    let needed = multinomial(content);
    if needed > budget.words {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.words,
        });
    }
    let m = modulus_bound(content);
    let mut report = VerifyReport::new(alloc::format!("content {content} m={m}"));
    let mut images = BTreeSet::new();
    for w in content.words() {
        report.words += 1;
        let u = sweep_int(&w);
        images.insert(u.letters().to_vec());
        report.record(
            "sweep matches naive sort",
            u.letters() == naive_sweep_int(&w),
            || alloc::format!("--content {content} {w}"),
        );
        let lifted = lift(&w, m).map(|x| sweep_mod(&x));
        let reduced = lift(&u, m);
        report.record(
            "sweep agrees with the modulus lift",
            lifted.is_ok() && lifted == reduced,
            || alloc::format!("--content {content} {w}"),
        );
        report.record(
            "unsweep inverts sweep",
            unsweep_int(&u).as_ref() == Ok(&w),
            || alloc::format!("--content {content} {w}"),
        );
    }
    report.record(
        "sweep is injective",
        images.len() as u64 == report.words,
        || alloc::format!("--content {content}"),
    );
    Ok(report)
}

fn multinomial(c: &Content) -> u128 {
    let mut left = c.len() as u128;
    let mut acc = 1u128;
    for &(_, e) in c.parts() {
        acc = acc.saturating_mul(binomial(left, e as u128));
        left -= e as u128;
    }
    acc
}

fn naive_is_dyck(letters: &[i64]) -> bool {
    let mut level = 0;
    letters.iter().all(|&a| {
        level += a;
        level >= 0
    })
}

/// The Dyck words of `D_{a,b}` found by filtering every word of the content.
pub fn brute_dyck(p: &DyckParams) -> Vec<IntWord> {
    p.content()
        .words()
        .into_iter()
        .filter(|w| naive_is_dyck(w.letters()))
        .collect()
}

/// The lifted word whose lattice collapses to a chain in the coprime case.
pub fn chain_witness(w: &IntWord) -> Result<ModWord> {
    let m = modulus_bound(w.content());
    lift(&sweep_int(w), m)
}

/// Checks the zeta map on each `D_{a,b}`.
pub fn verify_zeta(params: &[DyckParams], budget: &Budget) -> Result<VerifyReport> {
    let name = params
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = VerifyReport::new(alloc::format!("D_(a,b) for {name}"));
    for p in params {
        let needed = multinomial(&p.content());
        if needed > budget.words {
            return Err(Error::BudgetExceeded {
                needed,
                budget: budget.words,
            });
        }
        zeta_for(p, &mut report);
    }
    Ok(report)
}

fn zeta_for(p: &DyckParams, report: &mut VerifyReport) {
    let (a, b) = (p.a(), p.b());
    let ctx = |w: &IntWord| alloc::format!("-a {a} -b {b} {w}");
    let brute = brute_dyck(p);
    let set = dyck_words(p);
    report.record("enumeration matches brute force", brute == set, || {
        alloc::format!(
            "-a {a} -b {b}: {} by backtracking, {} by filter",
            set.len(),
            brute.len()
        )
    });

    let mut images: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for w in &set {
        report.words += 1;
        let z = zeta(w, p);
        let zd = zeta_direct(w, p);
        report.record("zeta = direct zeta", z.is_ok() && z == zd, || ctx(w));
        let Ok(z) = z else { continue };
        report.record("zeta maps into D", naive_is_dyck(z.letters()), || ctx(w));
        *images.entry(z.letters().to_vec()).or_default() += 1;
        report.record(
            "unzeta inverts zeta",
            unzeta(&z, p).as_ref() == Ok(w),
            || ctx(w),
        );
        report.record(
            "sweep preserves Dyck words",
            naive_is_dyck(sweep_int(w).letters()),
            || ctx(w),
        );
        if p.is_coprime() {
            let chain = chain_witness(w)
                .and_then(|u| enumerate_lattice(&u))
                .map(|l| l.is_chain());
            report.record("coprime lattices are chains", chain == Ok(true), || ctx(w));
        }
    }
    let targets: BTreeSet<Vec<i64>> = set.iter().map(|w| w.letters().to_vec()).collect();
    let onto = images.len() == set.len()
        && images.values().all(|&c| c == 1)
        && images.keys().all(|k| targets.contains(k));
    report.record("zeta is a bijection of D", onto, || {
        alloc::format!(
            "-a {a} -b {b}: {} images of {} words",
            images.len(),
            set.len()
        )
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_census_of_the_worked_example() {
        let u = ModWord::parse(5, "1331421").unwrap();
        let eq = brute_equitable(&u);
        assert_eq!(eq.len(), 5);
        assert_eq!(
            brute_equitable(&ModWord::parse(3, "000").unwrap()).len(),
            10
        );
        assert_eq!(brute_equitable(&ModWord::parse(3, "").unwrap()).len(), 1);
    }

    #[test]
    fn naive_helpers() {
        let w = ModWord::parse(5, "3113214").unwrap();
        assert_eq!(naive_sweep(&w).to_string(), "1331421");
        let p = PartitionedWord::parse(5, "1|33||1|421").unwrap();
        assert_eq!(naive_unpresweep(&p), Some(w));
        assert!(naive_is_equitable(&p));
        assert!(naive_unpresweep(&PartitionedWord::parse(5, "13|31|4|2|1").unwrap()).is_none());
    }

    #[test]
    fn counts_and_indexing() {
        assert_eq!(partition_count(5, 7), 330);
        assert_eq!(partition_count(1, 4), 1);
        assert_eq!(word_count(3, 4), 81);
        assert_eq!(nth_word(3, 3, 5).letters(), &[0, 1, 2]);
        assert_eq!(multinomial(&Content::parse("1:3,-1:3").unwrap()), 20);
    }

    #[test]
    fn small_runs_pass() {
        let b = Budget::default();
        let r = verify_sweep_bijective(3, 4, &b).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.words, 81);
        assert!(verify_sweep_bijective(1, 3, &b).unwrap().passed());
        let t = verify_theorems(2, 2, &b).unwrap();
        assert!(t.passed(), "{t}");
        assert_eq!(t.words, 4);
    }

    #[test]
    fn budget_is_enforced() {
        let b = Budget {
            words: 10,
            partitions: 10,
        };
        assert!(matches!(
            verify_sweep_bijective(3, 3, &b),
            Err(Error::BudgetExceeded {
                needed: 27,
                budget: 10
            })
        ));
    }

    #[test]
    fn merging_keeps_first_counterexample() {
        let mut a = VerifyReport::new("x");
        a.record("c", false, || "first".into());
        let mut b = VerifyReport::new("x");
        b.record("c", false, || "second".into());
        b.record("d", true, String::new);
        let ab = a.merge(b);
        let c = ab.check("c").unwrap();
        assert_eq!((c.tested, c.failures), (2, 2));
        assert_eq!(c.counterexample.as_deref(), Some("first"));
        assert!(ab.check("d").unwrap().passed());
        assert_eq!(ab.failed_checks(), 1);
    }
}
