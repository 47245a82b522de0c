//! The sweep map on integer words, its inverse by lifting to a large enough
//! modulus, and the zeta map on rational Dyck words.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::sweep::unsweep_mod;
use crate::{Error, LevelSequence, ModWord, Result};

/// Letter values and their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    // sorted by letter value
    parts: Vec<(i64, usize)>,
}

impl Content {
    /// Builds a content from `(letter, multiplicity)` pairs. Letters must be
    /// distinct and multiplicities positive.
    pub fn new(parts: Vec<(i64, usize)>) -> Result<Self> {
        let mut parts = parts;
        parts.sort_unstable();
        if parts.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::WrongContent("letter values must be distinct".into()));
        }
        if parts.iter().any(|&(_, e)| e == 0) {
            return Err(Error::WrongContent(
                "multiplicities must be positive".into(),
            ));
        }
        Ok(Self { parts })
    }

    /// The content of a given sequence of letters.
    pub fn of(letters: &[i64]) -> Self {
        let mut counts = BTreeMap::new();
        for &l in letters {
            *counts.entry(l).or_insert(0usize) += 1;
        }
        Self {
            parts: counts.into_iter().collect(),
        }
    }

    /// Parses `value:multiplicity` pairs joined by commas, e.g. `3:2,-2:3`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::new(Vec::new());
        }
        let parts = text
            .split(',')
            .map(|pair| {
                let (v, e) = pair.split_once(':').ok_or_else(|| {
                    Error::Parse(alloc::format!("'{pair}' is not value:multiplicity"))
                })?;
                let v = v
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(alloc::format!("bad letter '{v}'")))?;
                let e = e
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad multiplicity '{e}'")))?;
                Ok((v, e))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// `(letter, multiplicity)` pairs sorted by letter.
    pub fn parts(&self) -> &[(i64, usize)] {
        &self.parts
    }

    /// Total number of letters `N`.
    pub fn len(&self) -> usize {
        self.parts.iter().map(|&(_, e)| e).sum()
    }

    /// True when there are no letters.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all letters.
    pub fn total(&self) -> i64 {
        self.parts.iter().map(|&(a, e)| a * e as i64).sum()
    }

    /// The content with every letter negated.
    pub fn negated(&self) -> Self {
        let mut parts: Vec<_> = self.parts.iter().map(|&(a, e)| (-a, e)).collect();
        parts.sort_unstable();
        Self { parts }
    }

    /// Every word of this content, in lexicographic order.
    pub fn words(&self) -> Vec<IntWord> {
        let mut out = Vec::new();
        let mut remaining: Vec<usize> = self.parts.iter().map(|&(_, e)| e).collect();
        let mut current = Vec::with_capacity(self.len());
        self.arrange(&mut remaining, &mut current, &mut |letters| {
            out.push(IntWord {
                content: self.clone(),
                letters: letters.to_vec(),
            })
        });
        out
    }

    fn arrange(
        &self,
        remaining: &mut [usize],
        current: &mut Vec<i64>,
        emit: &mut impl FnMut(&[i64]),
    ) {
        if current.len() == self.len() {
            emit(current);
            return;
        }
        for idx in 0..self.parts.len() {
            if remaining[idx] > 0 {
                remaining[idx] -= 1;
                current.push(self.parts[idx].0);
                self.arrange(remaining, current, emit);
                current.pop();
                remaining[idx] += 1;
            }
        }
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, e)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}:{e}")?;
        }
        Ok(())
    }
}

/// A word over the integers whose letters realize a declared content.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntWord {
    content: Content,
    letters: Vec<i64>,
}

impl IntWord {
    /// Builds a word, checking that its letters realize `content`.
    pub fn new(content: Content, letters: Vec<i64>) -> Result<Self> {
        let actual = Content::of(&letters);
        if actual != content {
            return Err(Error::WrongContent(alloc::format!(
                "letters have content {actual}, expected {content}"
            )));
        }
        Ok(Self { content, letters })
    }

    /// A word whose content is read off its letters.
    pub fn from_letters(letters: Vec<i64>) -> Self {
        Self {
            content: Content::of(&letters),
            letters,
        }
    }

    /// Parses comma-separated signed integers.
    pub fn parse(content: &Content, text: &str) -> Result<Self> {
        Self::new(content.clone(), parse_ints(text)?)
    }

    /// The content.
    pub fn content(&self) -> &Content {
        &self.content
    }

    /// The letters.
    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Integer levels: running sums of the letters.
    pub fn levels(&self) -> LevelSequence {
        LevelSequence::integer(&self.letters)
    }

    /// Letters in reverse order.
    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self {
            content: self.content.clone(),
            letters,
        }
    }

    /// Every letter negated.
    pub fn negated(&self) -> Self {
        Self {
            content: self.content.negated(),
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    fn with_letters(&self, letters: Vec<i64>) -> Self {
        Self {
            content: self.content.clone(),
            letters,
        }
    }
}

impl fmt::Display for IntWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated signed integers; the empty string is the empty
/// sequence.
pub fn parse_ints(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(alloc::format!("'{s}' is not an integer")))
        })
        .collect()
}

/// Parameters of the rational Dyck words `D_{a,b}`: `-b` copies of `a > 0`
/// and `a` copies of `b < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckParams {
    a: i64,
    b: i64,
}

impl DyckParams {
    /// Checks `a > 0 > b`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a <= 0 || b >= 0 {
            return Err(Error::WrongContent(alloc::format!(
                "need a > 0 > b, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// The up-step letter `a`.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// The down-step letter `b`.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// Content `{a: -b, b: a}`; its letters sum to zero.
    pub fn content(&self) -> Content {
        Content::new(alloc::vec![
            (self.a, (-self.b) as usize),
            (self.b, self.a as usize)
        ])
        .expect("a and b differ in sign")
    }

    /// Whether `gcd(a, -b) = 1`.
    pub fn is_coprime(&self) -> bool {
        gcd(self.a.unsigned_abs(), self.b.unsigned_abs()) == 1
    }
}

impl fmt::Display for DyckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The sweep map on integer words. Letters are listed by level: negative
/// levels `-1, -2, …` first, then nonnegative levels from the highest down
/// to 0; letters sharing a level are read right to left.
pub fn sweep_int(w: &IntWord) -> IntWord {
    let levels = w.levels();
    let mut by_level: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for (j, &level) in levels.levels().iter().enumerate().rev() {
        by_level.entry(level).or_default().push(w.letters[j]);
    }
    let negatives = by_level.range(..0).rev();
    let nonnegatives = by_level.range(0..).rev();
    let letters = negatives
        .chain(nonnegatives)
        .flat_map(|(_, ls)| ls.iter().copied())
        .collect();
    w.with_letters(letters)
}

/// Smallest modulus exceeding `Σ e_j |a_j|`. Above it distinct letters and
/// distinct levels of any word of the content stay distinct mod `m`.
pub fn modulus_bound(c: &Content) -> usize {
    1 + c
        .parts()
        .iter()
        .map(|&(a, e)| e * a.unsigned_abs() as usize)
        .sum::<usize>()
}

/// Reduces every letter mod `m`.
pub fn lift(w: &IntWord, m: usize) -> Result<ModWord> {
    let letters = w
        .letters
        .iter()
        .map(|&l| l.rem_euclid(m as i64) as usize)
        .collect();
    ModWord::new(m, letters)
}

/// Maps residues back to the letters of `content` they represent.
pub fn project(residues: &ModWord, content: &Content) -> Result<IntWord> {
    let m = residues.modulus() as i64;
    let letters = residues
        .letters()
        .iter()
        .map(|&r| {
            let mut hits = content
                .parts()
                .iter()
                .filter(|&&(a, _)| a.rem_euclid(m) == r as i64);
            match (hits.next(), hits.next()) {
                (Some(&(a, _)), None) => Ok(a),
                _ => Err(Error::InvariantViolation(alloc::format!(
                    "residue {r} mod {m} does not name a unique letter of {content}"
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntWord::new(content.clone(), letters)
        .map_err(|e| Error::InvariantViolation(alloc::format!("projection changed content: {e}")))
}

/// Inverse of [`sweep_int`], computed by the modular inverse at
/// [`modulus_bound`].
pub fn unsweep_int(u: &IntWord) -> Result<IntWord> {
    let m = modulus_bound(&u.content);
    let lifted = lift(u, m)?;
    project(&unsweep_mod(&lifted)?, &u.content)
}

/// Whether every level is nonnegative.
pub fn is_dyck(w: &IntWord) -> bool {
    w.levels().levels().iter().all(|&l| l >= 0)
}

fn check_dyck(w: &IntWord, p: &DyckParams) -> Result<()> {
    if w.content != p.content() {
        return Err(Error::WrongContent(alloc::format!(
            "{w} does not have the content {} of D{p}",
            p.content()
        )));
    }
    if !is_dyck(w) {
        return Err(Error::NotDyck);
    }
    Ok(())
}

/// The zeta map on `D_{a,b}`: `ζ(w) = -(rev ∘ sweep ∘ rev)(-w)`.
pub fn zeta(w: &IntWord, p: &DyckParams) -> Result<IntWord> {
    check_dyck(w, p)?;
    Ok(sweep_int(&w.negated().reversed()).reversed().negated())
}

/// The zeta map read directly off `w`: letters are grouped by the level at
/// which their step starts, taking levels `0, 1, 2, …` and then any negative
/// levels from the lowest up to `-1`, left to right within a level.
pub fn zeta_direct(w: &IntWord, p: &DyckParams) -> Result<IntWord> {
    check_dyck(w, p)?;
    let mut by_level: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    let mut start = 0;
    for &l in &w.letters {
        by_level.entry(start).or_default().push(l);
        start += l;
    }
    let letters = by_level
        .range(0..)
        .chain(by_level.range(..0))
        .flat_map(|(_, ls)| ls.iter().copied())
        .collect();
    Ok(w.with_letters(letters))
}

/// Inverse of [`zeta`]: `-(rev ∘ unsweep ∘ rev)(-u)`.
pub fn unzeta(u: &IntWord, p: &DyckParams) -> Result<IntWord> {
    check_dyck(u, p)?;
    Ok(unsweep_int(&u.negated().reversed())?.reversed().negated())
}

/// All Dyck words of a content, by backtracking on nonnegative prefix sums.
pub fn dyck_words_of(content: &Content) -> Vec<IntWord> {
    fn go(
        parts: &[(i64, usize)],
        remaining: &mut [usize],
        level: i64,
        current: &mut Vec<i64>,
        n: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for idx in 0..parts.len() {
            let a = parts[idx].0;
            if remaining[idx] > 0 && level + a >= 0 {
                remaining[idx] -= 1;
                current.push(a);
                go(parts, remaining, level + a, current, n, out);
                current.pop();
                remaining[idx] += 1;
            }
        }
    }
    let mut remaining: Vec<usize> = content.parts().iter().map(|&(_, e)| e).collect();
    let mut raw = Vec::new();
    go(
        content.parts(),
        &mut remaining,
        0,
        &mut Vec::new(),
        content.len(),
        &mut raw,
    );
    raw.into_iter()
        .map(|letters| IntWord {
            content: content.clone(),
            letters,
        })
        .collect()
}

/// All words of `D_{a,b}`.
pub fn dyck_words(p: &DyckParams) -> Vec<IntWord> {
    dyck_words_of(&p.content())
}

/// Renders integer letters joined by commas.
pub fn int_list(letters: &[i64]) -> String {
    letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn content(s: &str) -> Content {
        Content::parse(s).unwrap()
    }

    fn iw(c: &str, s: &str) -> IntWord {
        IntWord::parse(&content(c), s).unwrap()
    }

    #[test]
    fn content_parsing() {
        let c = content("3:2,-2:3");
        assert_eq!(c.parts(), &[(-2, 3), (3, 2)]);
        assert_eq!(c.len(), 5);
        assert_eq!(c.total(), 0);
        assert_eq!(c.to_string(), "-2:3,3:2");
        assert!(Content::parse("1:2,1:3").is_err());
        assert!(Content::parse("1:0").is_err());
        assert!(Content::parse("1-2").is_err());
        assert!(IntWord::parse(&c, "3,3,-2").is_err());
    }

    #[test]
    fn sweep_int_examples() {
        let w = iw("3:2,-2:3", "3,-2,3,-2,-2");
        assert_eq!(w.levels().levels(), &[3, 1, 4, 2, 0]);
        assert_eq!(sweep_int(&w).letters(), &[3, 3, -2, -2, -2]);
        let z = iw("0:3", "0,0,0");
        assert_eq!(sweep_int(&z).letters(), &[0, 0, 0]);
        // negative levels come first, -1 before -2
        let neg = IntWord::from_letters(vec![-1, -1, 2]);
        assert_eq!(sweep_int(&neg).letters(), &[-1, -1, 2]);
    }

    #[test]
    fn modulus_bounds() {
        assert_eq!(modulus_bound(&content("3:2,-2:3")), 13);
        assert_eq!(modulus_bound(&content("0:4")), 1);
        assert_eq!(modulus_bound(&content("1:5")), 6);
    }

    #[test]
    fn unsweep_int_examples() {
        let u = iw("3:2,-2:3", "3,3,-2,-2,-2");
        assert_eq!(unsweep_int(&u).unwrap().letters(), &[3, -2, 3, -2, -2]);
        let z = iw("0:3", "0,0,0");
        assert_eq!(unsweep_int(&z).unwrap(), z);
    }

    #[test]
    fn dyck_checks() {
        assert!(is_dyck(&iw("3:2,-2:3", "3,-2,3,-2,-2")));
        assert!(!is_dyck(&iw("3:2,-2:3", "3,-2,-2,3,-2")));
        assert!(is_dyck(&IntWord::from_letters(vec![])));
    }

    #[test]
    fn zeta_swaps_the_two_words_of_d_3_2() {
        let p = DyckParams::new(3, -2).unwrap();
        let a = iw("3:2,-2:3", "3,-2,3,-2,-2");
        let b = iw("3:2,-2:3", "3,3,-2,-2,-2");
        assert_eq!(zeta(&a, &p).unwrap(), b);
        assert_eq!(zeta(&b, &p).unwrap(), a);
        assert_eq!(zeta_direct(&a, &p).unwrap(), b);
        assert_eq!(unzeta(&b, &p).unwrap(), a);
        assert_eq!(dyck_words(&p), vec![a, b]);
    }

    #[test]
    fn zeta_rejects_bad_input() {
        let p = DyckParams::new(3, -2).unwrap();
        assert_eq!(
            zeta(&iw("3:2,-2:3", "3,-2,-2,3,-2"), &p),
            Err(Error::NotDyck)
        );
        assert!(matches!(
            zeta(&IntWord::from_letters(vec![1, -1]), &p),
            Err(Error::WrongContent(_))
        ));
        assert!(DyckParams::new(-1, 2).is_err());
    }

    #[test]
    fn smallest_dyck_set() {
        let p = DyckParams::new(1, -1).unwrap();
        let only = IntWord::from_letters(vec![1, -1]);
        assert_eq!(dyck_words(&p), vec![only.clone()]);
        assert_eq!(zeta(&only, &p).unwrap(), only);
        assert_eq!(zeta_direct(&only, &p).unwrap(), only);
    }

    #[test]
    fn direct_zeta_ties_off_the_coprime_case() {
        let p = DyckParams::new(2, -2).unwrap();
        let w = IntWord::from_letters(vec![2, 2, -2, -2]);
        // start levels 0,2,4,2: the two steps at level 2 are read left to right
        assert_eq!(zeta_direct(&w, &p).unwrap().letters(), &[2, 2, -2, -2]);
        assert_eq!(zeta(&w, &p).unwrap().letters(), &[2, -2, 2, -2]);
    }

    #[test]
    fn word_enumeration_counts() {
        assert_eq!(content("1:3,-1:3").words().len(), 20);
        assert_eq!(content("2:2,-1:4").words().len(), 15);
    }
}
