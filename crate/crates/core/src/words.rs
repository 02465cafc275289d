//! Elements of the rank-2 free group `F(a, b)`.
//!
//! Words are stored freely reduced. The text syntax uses `a`, `b` for the
//! generators and `A`, `B` for their inverses; the identity prints as `1`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

/// A generator raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: Generator, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub const fn inv(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }

    /// Position in the order `a < A < b < B`.
    fn rank(self) -> u8 {
        match (self.generator, self.inverse) {
            (Generator::A, false) => 0,
            (Generator::A, true) => 1,
            (Generator::B, false) => 2,
            (Generator::B, true) => 3,
        }
    }

    pub fn as_char(self) -> char {
        match (self.generator, self.inverse) {
            (Generator::A, false) => 'a',
            (Generator::A, true) => 'A',
            (Generator::B, false) => 'b',
            (Generator::B, true) => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(Self::new(Generator::A, false)),
            'A' => Some(Self::new(Generator::A, true)),
            'b' => Some(Self::new(Generator::B, false)),
            'B' => Some(Self::new(Generator::B, true)),
            _ => None,
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error(
        "invalid character {found:?} at position {position} (expected a, b, A, B or the literal 1)"
    )]
    InvalidCharacter { position: usize, found: char },
    #[error("empty word text (use 1 for the identity)")]
    Empty,
}

/// A freely reduced word in `a`, `b` and their inverses.
///
/// Ordering is shortlex under `a < A < b < B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self {
            letters: alloc::vec![Letter::new(g, false)],
        }
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Free product `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `self^n`, with negative `n` meaning powers of the inverse.
    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclically_reduced_core(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0usize, l.len());
        while j >= i + 2 && l[i].cancels(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    /// Canonical representative of the conjugacy class: cyclically reduce,
    /// then take the least rotation under `a < A < b < B`.
    pub fn cyclic_reduce(&self) -> Word {
        let core = self.cyclically_reduced_core();
        let n = core.len();
        if n <= 1 {
            return core;
        }
        let l = &core.letters;
        let best = (0..n)
            .min_by(|&r, &s| {
                l[r..]
                    .iter()
                    .chain(&l[..r])
                    .cmp(l[s..].iter().chain(&l[..s]))
            })
            .unwrap_or(0);
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&l[best..]);
        letters.extend_from_slice(&l[..best]);
        Word { letters }
    }

    /// Rotation by `k` letters; callers are expected to pass cyclically
    /// reduced words so the result stays reduced.
    pub(crate) fn rotate(&self, k: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    pub(crate) fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses word text; surrounding whitespace is ignored.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(WordError::Empty);
    }
    if trimmed == "1" {
        return Ok(Word::identity());
    }
    let offset = text.len() - text.trim_start().len();
    let mut letters = Vec::with_capacity(trimmed.len());
    for (i, c) in trimmed.char_indices() {
        match Letter::from_char(c) {
            Some(l) => letters.push(l),
            None => {
                return Err(WordError::InvalidCharacter {
                    position: offset + i,
                    found: c,
                })
            }
        }
    }
    Ok(Word::from_letters(letters))
}

/// Parses a comma-separated word tuple such as `a,b,ab,aB`.
pub fn parse_word_tuple(text: &str) -> Result<Vec<Word>, WordError> {
    text.split(',').map(parse_word).collect()
}

/// Parses the word-list format: one word per line, `#` starts a comment,
/// blank lines are skipped.
pub fn parse_word_list(text: &str) -> Result<Vec<Word>, (usize, WordError)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if content.trim().is_empty() {
            continue;
        }
        out.push(parse_word(content).map_err(|e| (lineno + 1, e))?);
    }
    Ok(out)
}

/// Uniformly random letters of length `len`, freely reduced afterwards.
pub fn random_word<R: rand::Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    const ALL: [Letter; 4] = [
        Letter::new(Generator::A, false),
        Letter::new(Generator::A, true),
        Letter::new(Generator::B, false),
        Letter::new(Generator::B, true),
    ];
    Word::from_letters((0..len).map(|_| ALL[rng.gen_range(0..4)]))
}

/// Random reduced word of exactly `len` letters (no cancellation).
pub fn random_reduced_word<R: rand::Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = if rng.gen_bool(0.5) {
            Generator::A
        } else {
            Generator::B
        };
        let l = Letter::new(g, rng.gen_bool(0.5));
        if letters.last().is_some_and(|&last| last.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word { letters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("aB").to_string(), "aB");
        assert_eq!(w("abB").to_string(), "a");
        assert!(w("1").is_identity());
        assert_eq!(w("aA").to_string(), "1");
    }

    #[test]
    fn parse_error_reports_position() {
        assert_eq!(
            parse_word("abxb"),
            Err(WordError::InvalidCharacter {
                position: 2,
                found: 'x'
            })
        );
        assert_eq!(parse_word(""), Err(WordError::Empty));
        assert!(matches!(
            parse_word("a1"),
            Err(WordError::InvalidCharacter { position: 1, .. })
        ));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("ab").concat(&w("B")), w("a"));
        assert_eq!(w("a").concat(&w("1")), w("a"));
        assert_eq!(w("aB").concat(&w("ba")), w("aa"));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("ab").invert().to_string(), "BA");
        assert_eq!(w("1").invert().to_string(), "1");
        assert_eq!(w("aaB").invert().to_string(), "bAA");
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("Aba").cyclic_reduce().to_string(), "b");
        assert_eq!(w("ba").cyclic_reduce().to_string(), "ab");
        assert_eq!(w("ab").cyclic_reduce().to_string(), "ab");
        assert_eq!(w("aA").cyclic_reduce().to_string(), "1");
        assert_eq!(w("BaBAb").cyclic_reduce().to_string(), "B");
        assert_eq!(w("bAba").cyclic_reduce().to_string(), "abAb");
    }

    #[test]
    fn letter_order() {
        let mut v: Vec<Letter> = "BbAa"
            .chars()
            .map(|c| Letter::from_char(c).unwrap())
            .collect();
        v.sort();
        let s: String = v.iter().map(|l| l.as_char()).collect();
        assert_eq!(s, "aAbB");
    }

    #[test]
    fn word_list_skips_comments() {
        let text = "# header\na\n\n  aB  # trailing\nbb\n";
        let list = parse_word_list(text).unwrap();
        assert_eq!(list, alloc::vec![w("a"), w("aB"), w("bb")]);
        assert_eq!(parse_word_list("a\nq\n").unwrap_err().0, 2);
    }

    #[test]
    fn pow_and_tuple() {
        assert_eq!(w("ab").pow(2), w("abab"));
        assert_eq!(w("ab").pow(-1), w("BA"));
        assert_eq!(
            parse_word_tuple("a,b,1").unwrap(),
            alloc::vec![w("a"), w("b"), Word::identity()]
        );
    }
}
