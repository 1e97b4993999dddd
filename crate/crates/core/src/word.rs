//! Braid words: letters `σ_i^{±1}` over a fixed strand count.
//!
//! Two text formats are supported. `alpha` writes `σ_1, σ_2, ...` as
//! `a, b, ...` and their inverses as `A, B, ...` (generators 1..=25).
//! `intlist` writes whitespace-separated nonzero integers, `k` for `σ_k`
//! and `-k` for `σ_k^{-1}`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

/// Largest generator index expressible in the alpha format.
pub const ALPHA_MAX_INDEX: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A signed generator `σ_i^{±1}`, stored as a nonzero integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i32")]
pub struct Letter(i32);

impl TryFrom<i64> for Letter {
    type Error = BraidError;

    fn try_from(value: i64) -> Result<Self> {
        Letter::from_int(value)
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> i32 {
        l.0
    }
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        let index = i32::try_from(index).expect("generator index overflow");
        Letter(index * sign.as_i32())
    }

    pub fn pos(index: usize) -> Self {
        Letter::new(index, Sign::Positive)
    }

    pub fn neg(index: usize) -> Self {
        Letter::new(index, Sign::Negative)
    }

    pub fn from_int(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(BraidError::ZeroIndex);
        }
        if value.unsigned_abs() > i32::MAX as u64 {
            return Err(BraidError::InvalidToken(value.to_string()));
        }
        Ok(Letter(value as i32))
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn sign(self) -> Sign {
        if self.0 > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn to_int(self) -> i32 {
        self.0
    }

    fn to_alpha(self) -> Result<char> {
        let index = self.index();
        if index > ALPHA_MAX_INDEX {
            return Err(BraidError::AlphaOverflow(index));
        }
        let base = if self.is_positive() { b'a' } else { b'A' };
        Ok((base + (index - 1) as u8) as char)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_alpha() {
            Ok(c) => write!(f, "{c}"),
            Err(_) => write!(f, "{}", self.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Alpha,
    IntList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "alpha" => Ok(Format::Alpha),
            "intlist" => Ok(Format::IntList),
            other => Err(format!("unknown word format {other:?} (expected alpha or intlist)")),
        }
    }
}

/// An `n`-strand braid word. Every letter index is below `n`.
///
/// Serializes as `{"n": 4, "letters": [1, -2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

#[derive(Deserialize)]
struct RawWord {
    n: usize,
    letters: Vec<Letter>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.n, raw.letters)
    }
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= n) {
            return Err(BraidError::IndexOutOfRange { index: bad.index(), n });
        }
        Ok(BraidWord { n, letters })
    }

    /// Caller guarantees every letter index is below `n` and `n >= 2`.
    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(n >= 2 && letters.iter().all(|l| l.index() < n));
        BraidWord { n, letters }
    }

    pub fn empty(n: usize) -> Result<Self> {
        BraidWord::new(n, Vec::new())
    }

    pub fn from_ints(n: usize, ints: &[i64]) -> Result<Self> {
        let letters = ints.iter().map(|&v| Letter::from_int(v)).collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }

    /// Parse `text` in the given format. Without an explicit strand count the
    /// word lives in `B_{max index + 1}` (at least `B_2`).
    pub fn parse(text: &str, format: Format, n: Option<usize>) -> Result<Self> {
        let letters = match format {
            Format::Alpha => parse_alpha(text)?,
            Format::IntList => parse_intlist(text)?,
        };
        let n = match n {
            Some(n) => n,
            None => letters.iter().map(|l| l.index() + 1).max().unwrap_or(2).max(2),
        };
        BraidWord::new(n, letters)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Alpha => self.letters.iter().map(|l| l.to_alpha()).collect(),
            Format::IntList => Ok(self
                .letters
                .iter()
                .map(|l| l.to_int().to_string())
                .collect::<Vec<_>>()
                .join(" ")),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| !l.is_positive())
    }

    /// `w^{-1}`: reversed order with every letter inverted.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { n: self.n, letters }
    }

    /// Image under the flip automorphism `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> BraidWord {
        let n = self.n;
        let letters = self.letters.iter().map(|l| Letter::new(n - l.index(), l.sign())).collect();
        BraidWord { n, letters }
    }

    /// The letters in reverse order, signs untouched. This is not a braid
    /// operation on its own; left redressing is defined through it.
    pub fn reversed(&self) -> BraidWord {
        let letters = self.letters.iter().rev().copied().collect();
        BraidWord { n: self.n, letters }
    }

    /// Delete `x x^{-1}` patterns until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    /// View the word in `B_{to}` for `to >= n`.
    pub fn embed(&self, to: usize) -> Result<BraidWord> {
        if to < self.n {
            return Err(BraidError::InvalidEmbedding { from: self.n, to });
        }
        Ok(BraidWord { n: to, letters: self.letters.clone() })
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.index() >= self.n {
            return Err(BraidError::IndexOutOfRange { index: letter.index(), n: self.n });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Exponent sum of each generator, indexed `0..n-1` for `σ_1..σ_{n-1}`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.n - 1];
        for l in &self.letters {
            sums[l.index() - 1] += i64::from(l.sign().as_i32());
        }
        sums
    }
}

/// Embed both words into the larger strand count.
pub fn common_embedding(a: &BraidWord, b: &BraidWord) -> (BraidWord, BraidWord) {
    let n = a.n().max(b.n());
    (a.embed(n).expect("n is an upper bound"), b.embed(n).expect("n is an upper bound"))
}

impl fmt::Display for BraidWord {
    /// Alpha when every index fits, intlist otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.render(Format::Alpha) {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str(&self.render(Format::IntList).expect("intlist never fails")),
        }
    }
}

fn parse_alpha(text: &str) -> Result<Vec<Letter>> {
    let mut letters = Vec::with_capacity(text.len());
    for (offset, ch) in text.char_indices() {
        // `.` separates factors in written normal forms; whitespace is ignored.
        if ch.is_whitespace() || ch == '.' {
            continue;
        }
        let letter = match ch {
            'a'..='y' => Letter::pos((ch as u8 - b'a') as usize + 1),
            'A'..='Y' => Letter::neg((ch as u8 - b'A') as usize + 1),
            _ => return Err(BraidError::InvalidChar { ch, offset }),
        };
        letters.push(letter);
    }
    Ok(letters)
}

fn parse_intlist(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|tok| {
            let v: i64 = tok.parse().map_err(|_| BraidError::InvalidToken(tok.to_string()))?;
            Letter::from_int(v)
        })
        .collect()
}
