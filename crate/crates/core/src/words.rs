//! Words over `{0, …, m-1}`, partitioned words, and their levels.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::{Error, Result};

/// A word over the alphabet `{0, …, m-1}` together with its modulus `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModWord {
    modulus: usize,
    letters: Vec<usize>,
}

impl ModWord {
    /// Builds a word, checking every letter against the modulus.
    pub fn new(modulus: usize, letters: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l >= modulus) {
            return Err(Error::LetterOutOfRange { letter, modulus });
        }
        Ok(Self { modulus, letters })
    }

    /// The empty word.
    pub fn empty(modulus: usize) -> Result<Self> {
        Self::new(modulus, Vec::new())
    }

    /// Parses the canonical text form: base-10 letters joined by commas, or,
    /// when `modulus <= 10`, a bare digit string such as `3113214`.
    pub fn parse(modulus: usize, text: &str) -> Result<Self> {
        Self::new(modulus, parse_letters(modulus, text)?)
    }

    /// The modulus `m`.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The letters in order.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Word length `N`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter sum `|u|`.
    pub fn sum(&self) -> usize {
        self.letters.iter().sum()
    }

    /// Letter sum reduced mod `m`, written `|u|_m`.
    pub fn residue(&self) -> usize {
        self.sum() % self.modulus
    }

    /// Modular levels: the running letter sums reduced mod `m`.
    pub fn levels(&self) -> LevelSequence {
        let mut level = 0;
        let levels = self
            .letters
            .iter()
            .map(|&w| {
                level = (level + w) % self.modulus;
                level as i64
            })
            .collect();
        LevelSequence {
            levels,
            modular: true,
        }
    }
}

impl fmt::Display for ModWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.modulus, &self.letters)
    }
}

/// Running level sums attached to each letter position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSequence {
    levels: Vec<i64>,
    modular: bool,
}

impl LevelSequence {
    /// Plain integer prefix sums of `letters`.
    pub fn integer(letters: &[i64]) -> Self {
        let mut level = 0;
        let levels = letters
            .iter()
            .map(|&w| {
                level += w;
                level
            })
            .collect();
        Self {
            levels,
            modular: false,
        }
    }

    /// The levels `ℓ_1, …, ℓ_N`.
    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    /// Whether the entries are residues mod `m` rather than plain integers.
    pub fn is_modular(&self) -> bool {
        self.modular
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    /// True when there are no letters.
    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// A word cut into `m` consecutive blocks, indexed `m-1, …, 0` from left to
/// right. Blocks may be empty.
///
/// Only the block sizes are stored; since blocks are consecutive, moving a
/// letter across an adjacent divider is a change of two sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedWord {
    word: ModWord,
    // sizes[k] is the size of block k.
    sizes: Vec<usize>,
}

impl PartitionedWord {
    /// Builds a partitioned word from per-block sizes, `sizes[k]` being the
    /// size of block `k`.
    pub fn new(word: ModWord, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != word.modulus() {
            return Err(Error::BadBlockSizes(alloc::format!(
                "expected {} blocks, got {}",
                word.modulus(),
                sizes.len()
            )));
        }
        let total: usize = sizes.iter().sum();
        if total != word.len() {
            return Err(Error::BadBlockSizes(alloc::format!(
                "sizes sum to {total}, word has {} letters",
                word.len()
            )));
        }
        Ok(Self { word, sizes })
    }

    /// Every letter in block `k`.
    pub fn all_in_block(word: ModWord, k: usize) -> Result<Self> {
        let m = word.modulus();
        if k >= m {
            return Err(Error::BadBlockVector(alloc::format!(
                "block {k} does not exist for modulus {m}"
            )));
        }
        let mut sizes = alloc::vec![0; m];
        sizes[k] = word.len();
        Ok(Self { word, sizes })
    }

    /// Rebuilds a partition from the block index of every letter. The vector
    /// must be nonincreasing with entries in `0..m`.
    pub fn from_block_vector(word: ModWord, blocks: &[usize]) -> Result<Self> {
        let m = word.modulus();
        if blocks.len() != word.len() {
            return Err(Error::BadBlockVector(alloc::format!(
                "length {} does not match word length {}",
                blocks.len(),
                word.len()
            )));
        }
        if let Some(&k) = blocks.iter().find(|&&k| k >= m) {
            return Err(Error::BadBlockVector(alloc::format!(
                "block {k} does not exist for modulus {m}"
            )));
        }
        if blocks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadBlockVector(
                "block indices must be nonincreasing".to_string(),
            ));
        }
        let mut sizes = alloc::vec![0; m];
        for &k in blocks {
            sizes[k] += 1;
        }
        Ok(Self { word, sizes })
    }

    /// Parses pipe notation such as `1|33||1|421`. An empty block may also be
    /// written `·` or `∅`.
    pub fn parse(modulus: usize, text: &str) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let pieces: Vec<&str> = text.trim().split('|').collect();
        if pieces.len() != modulus {
            return Err(Error::Parse(alloc::format!(
                "expected {modulus} blocks separated by '|', found {}",
                pieces.len()
            )));
        }
        let mut letters = Vec::new();
        let mut sizes = alloc::vec![0; modulus];
        for (pos, piece) in pieces.iter().enumerate() {
            let piece = piece.trim();
            let block = if piece == "·" || piece == "∅" {
                Vec::new()
            } else {
                parse_letters(modulus, piece)?
            };
            sizes[modulus - 1 - pos] = block.len();
            letters.extend(block);
        }
        Self::new(ModWord::new(modulus, letters)?, sizes)
    }

    /// The underlying word.
    pub fn word(&self) -> &ModWord {
        &self.word
    }

    /// The modulus, which is also the number of blocks.
    pub fn modulus(&self) -> usize {
        self.word.modulus
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// True when there are no letters.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Block sizes, `sizes()[k]` being the size of block `k`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Positions occupied by block `k`.
    pub fn block_range(&self, k: usize) -> Range<usize> {
        let start: usize = self.sizes[k + 1..].iter().sum();
        start..start + self.sizes[k]
    }

    /// Letters of block `k`.
    pub fn block(&self, k: usize) -> &[usize] {
        &self.word.letters[self.block_range(k)]
    }

    /// Block index of the letter at 0-based position `i`.
    pub fn block_of(&self, i: usize) -> Result<usize> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut end = 0;
        for k in (0..self.modulus()).rev() {
            end += self.sizes[k];
            if i < end {
                return Ok(k);
            }
        }
        unreachable!("block sizes cover the word")
    }

    /// Block index of every letter, in letter order. Always nonincreasing.
    pub fn block_vector(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for k in (0..self.modulus()).rev() {
            out.extend(core::iter::repeat_n(k, self.sizes[k]));
        }
        out
    }

    /// Wraps the partition for display with `·` marking empty blocks.
    pub fn dotted(&self) -> Dotted<'_> {
        Dotted(self)
    }

    pub(crate) fn sizes_mut(&mut self) -> &mut [usize] {
        &mut self.sizes
    }

    fn write_blocks(&self, f: &mut fmt::Formatter<'_>, empty: &str) -> fmt::Result {
        for k in (0..self.modulus()).rev() {
            let block = self.block(k);
            if block.is_empty() {
                f.write_str(empty)?;
            } else {
                write_letters(f, self.modulus(), block)?;
            }
            if k > 0 {
                f.write_str("|")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for PartitionedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_blocks(f, "")
    }
}

/// Display adapter returned by [`PartitionedWord::dotted`].
pub struct Dotted<'a>(&'a PartitionedWord);

impl fmt::Display for Dotted<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_blocks(f, "·")
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, modulus: usize, letters: &[usize]) -> fmt::Result {
    if modulus <= 10 {
        for l in letters {
            write!(f, "{l}")?;
        }
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
    }
    Ok(())
}

fn parse_letters(modulus: usize, text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let parse_one = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(alloc::format!("'{s}' is not a letter")))
    };
    if text.contains(',') {
        text.split(',').map(parse_one).collect()
    } else if modulus <= 10 {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(alloc::format!("'{c}' is not a digit")))
            })
            .collect()
    } else {
        Ok(alloc::vec![parse_one(text)?])
    }
}

/// Renders letters in the canonical comma form regardless of modulus.
pub fn comma_joined(letters: &[usize]) -> String {
    let mut out = String::new();
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&l.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(m: usize, s: &str) -> ModWord {
        ModWord::parse(m, s).unwrap()
    }

    #[test]
    fn levels_of_worked_example() {
        assert_eq!(w(5, "3113214").levels().levels(), &[3, 4, 0, 3, 0, 1, 0]);
        assert_eq!(w(3, "000").levels().levels(), &[0, 0, 0]);
        assert_eq!(w(5, "1331421").levels().levels(), &[1, 4, 2, 3, 2, 4, 0]);
        assert!(w(4, "").levels().is_empty());
    }

    #[test]
    fn rejects_letters_outside_alphabet() {
        assert_eq!(
            ModWord::new(3, vec![0, 3]),
            Err(Error::LetterOutOfRange {
                letter: 3,
                modulus: 3
            })
        );
        assert_eq!(ModWord::new(0, vec![]), Err(Error::ZeroModulus));
        assert!(ModWord::parse(5, "12a").is_err());
    }

    #[test]
    fn wide_alphabets_use_commas() {
        let word = w(13, "3,10,12");
        assert_eq!(word.letters(), &[3, 10, 12]);
        assert_eq!(word.to_string(), "3,10,12");
        assert_eq!(w(13, "11").letters(), &[11]);
    }

    #[test]
    fn block_lookup() {
        let p = PartitionedWord::parse(5, "13|31|4|2|1").unwrap();
        assert_eq!(p.block_of(1), Ok(4));
        assert_eq!(p.block_vector(), vec![4, 4, 3, 3, 2, 1, 0]);
        let q = PartitionedWord::parse(5, "1|33|·|1|421").unwrap();
        assert_eq!(q.block_of(4), Ok(0));
        assert_eq!(q.block_vector(), vec![4, 3, 3, 1, 0, 0, 0]);
        assert_eq!(q.block(2), &[] as &[usize]);
        assert_eq!(q.block(0), &[4, 2, 1]);
        assert_eq!(
            q.block_of(7),
            Err(Error::IndexOutOfRange { index: 7, len: 7 })
        );
        let single = PartitionedWord::parse(3, "||120").unwrap();
        assert!((0..3).all(|i| single.block_of(i) == Ok(0)));
    }

    #[test]
    fn from_block_vector_examples() {
        let u = w(5, "1331421");
        let p = PartitionedWord::from_block_vector(u.clone(), &[4, 3, 3, 2, 1, 0, 0]).unwrap();
        assert_eq!(p.to_string(), "1|33|1|4|21");
        let q = PartitionedWord::from_block_vector(u.clone(), &[4, 4, 3, 3, 2, 1, 0]).unwrap();
        assert_eq!(q.to_string(), "13|31|4|2|1");
        let e = PartitionedWord::from_block_vector(w(4, ""), &[]).unwrap();
        assert_eq!(e.to_string(), "|||");
        assert_eq!(e.block_vector(), Vec::<usize>::new());
        assert!(PartitionedWord::from_block_vector(u.clone(), &[3, 4, 3, 2, 1, 0, 0]).is_err());
        assert!(PartitionedWord::from_block_vector(u.clone(), &[5, 4, 3, 2, 1, 0, 0]).is_err());
        assert!(PartitionedWord::from_block_vector(u, &[4, 3]).is_err());
    }

    #[test]
    fn pipe_notation() {
        let p = PartitionedWord::parse(5, "1|33||1|421").unwrap();
        assert_eq!(p, PartitionedWord::parse(5, "1|33|·|1|421").unwrap());
        assert_eq!(p.to_string(), "1|33||1|421");
        assert_eq!(p.dotted().to_string(), "1|33|·|1|421");
        assert!(PartitionedWord::parse(5, "1|33|1|421").is_err());
        let wide = PartitionedWord::parse(12, "11,3|||||||||||0").unwrap();
        assert_eq!(wide.block(11), &[11, 3]);
        assert_eq!(wide.to_string(), "11,3|||||||||||0");
    }

    #[test]
    fn sizes_must_cover_word() {
        assert!(PartitionedWord::new(w(3, "12"), vec![1, 0, 0]).is_err());
        assert!(PartitionedWord::new(w(3, "12"), vec![1, 1]).is_err());
    }
}
