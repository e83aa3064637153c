//! Letters and words over the Artin, band and descending-cycle alphabets.
//!
//! A word carries its strand count `n`. Letters are stored one per generator
//! occurrence; exponents from the text syntax are expanded on parsing and
//! folded back when printing.

use std::fmt;
use std::str::FromStr;

use crate::error::WordError;

/// Largest strand count accepted anywhere in the crate.
pub const MAX_STRANDS: usize = 32;

/// One generator occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `sigma_i`, `1 <= i < n`.
    Sigma { i: u8, inv: bool },
    /// Band generator `a_{p,q}`, `p < q`.
    Band { p: u8, q: u8, inv: bool },
    /// `d_{p,q} = sigma_p ... sigma_{q-1}`, `p < q`.
    Desc { p: u8, q: u8, inv: bool },
}

impl Letter {
    pub fn sigma(i: usize) -> Letter {
        Letter::Sigma { i: i as u8, inv: false }
    }

    pub fn a(p: usize, q: usize) -> Letter {
        debug_assert!(p < q);
        Letter::Band { p: p as u8, q: q as u8, inv: false }
    }

    pub fn d(p: usize, q: usize) -> Letter {
        debug_assert!(p < q);
        Letter::Desc { p: p as u8, q: q as u8, inv: false }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Sigma { i, inv } => Letter::Sigma { i, inv: !inv },
            Letter::Band { p, q, inv } => Letter::Band { p, q, inv: !inv },
            Letter::Desc { p, q, inv } => Letter::Desc { p, q, inv: !inv },
        }
    }

    pub fn is_inverse(self) -> bool {
        match self {
            Letter::Sigma { inv, .. } | Letter::Band { inv, .. } | Letter::Desc { inv, .. } => inv,
        }
    }

    /// Strand pair `(p, q)` spanned by the letter.
    pub fn span(self) -> (usize, usize) {
        match self {
            Letter::Sigma { i, .. } => (i as usize, i as usize + 1),
            Letter::Band { p, q, .. } | Letter::Desc { p, q, .. } => (p as usize, q as usize),
        }
    }

    /// Positive band letter `a_{p,q}` as its indices.
    pub fn as_positive_band(self) -> Option<(usize, usize)> {
        match self {
            Letter::Band { p, q, inv: false } => Some((p as usize, q as usize)),
            _ => None,
        }
    }

    /// Length of the Artin translation.
    pub fn sigma_len(self) -> usize {
        let (p, q) = self.span();
        match self {
            Letter::Sigma { .. } => 1,
            Letter::Band { .. } => 2 * (q - p) - 1,
            Letter::Desc { .. } => q - p,
        }
    }

    /// Appends the Artin translation of the letter to `out`.
    pub fn push_sigma(self, out: &mut Vec<Letter>) {
        let (p, q) = self.span();
        let inv = self.is_inverse();
        let start = out.len();
        match self {
            Letter::Sigma { .. } => out.push(Letter::sigma(p)),
            Letter::Band { .. } => {
                out.extend((p..q).map(Letter::sigma));
                out.extend((p..q - 1).rev().map(|i| Letter::sigma(i).inverse()));
            }
            Letter::Desc { .. } => out.extend((p..q).map(Letter::sigma)),
        }
        if inv {
            out[start..].reverse();
            for l in &mut out[start..] {
                *l = l.inverse();
            }
        }
    }

    fn check(self, n: usize) -> bool {
        let (p, q) = self.span();
        p >= 1 && p < q && q <= n
    }

    /// Image under `phi_n^k`, or `None` when the letter has no image.
    ///
    /// Artin letters are read as the band letters `a_{i,i+1}`. Band letters rotate
    /// modulo `n`; `d_{1,n}` is fixed and other `d` letters shift while they stay
    /// inside `1..=n`.
    pub fn phi(self, n: usize, k: i64) -> Option<Letter> {
        let (p, q) = self.span();
        let inv = self.is_inverse();
        match self {
            Letter::Sigma { .. } | Letter::Band { .. } => {
                let (x, y) = (rotate_index(p, n, k), rotate_index(q, n, k));
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                Some(Letter::Band { p: x as u8, q: y as u8, inv })
            }
            Letter::Desc { .. } => {
                if p == 1 && q == n {
                    return Some(self);
                }
                let (x, y) = (p as i64 + k, q as i64 + k);
                (x >= 1 && y <= n as i64).then_some(Letter::Desc { p: x as u8, q: y as u8, inv })
            }
        }
    }
}

/// `i` shifted by `k` modulo `n`, in `1..=n`.
pub fn rotate_index(i: usize, n: usize, k: i64) -> usize {
    ((i as i64 - 1 + k).rem_euclid(n as i64) + 1) as usize
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_token(f, *self, 1)
    }
}

fn write_token(f: &mut impl fmt::Write, l: Letter, count: usize) -> fmt::Result {
    match l {
        Letter::Sigma { i, .. } => write!(f, "s{i}")?,
        Letter::Band { p, q, .. } => write!(f, "a{p}.{q}")?,
        Letter::Desc { p, q, .. } => write!(f, "d{p}.{q}")?,
    }
    match (l.is_inverse(), count) {
        (false, 1) => Ok(()),
        (false, c) => write!(f, "^{c}"),
        (true, c) => write!(f, "^-{c}"),
    }
}

/// Which generators a word uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Empty,
    Sigma,
    Band,
    Desc,
    /// Band and descending-cycle letters together.
    BandDesc,
    /// Artin letters mixed with the others.
    Mixed,
}

/// Sign pattern of the highest Artin generator in a word's translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaClass {
    /// `sigma_i` occurs and `sigma_i^-1` does not, `i` maximal.
    Positive(usize),
    Negative(usize),
    Trivial,
    /// Both signs of the highest generator occur.
    Mixed(usize),
}

impl SigmaClass {
    /// `+i`, `-i` or `0`; `None` for mixed words.
    pub fn sign(self) -> Option<i64> {
        match self {
            SigmaClass::Positive(i) => Some(i as i64),
            SigmaClass::Negative(i) => Some(-(i as i64)),
            SigmaClass::Trivial => Some(0),
            SigmaClass::Mixed(_) => None,
        }
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaClass::Positive(i) => write!(f, "sigma{i}-positive"),
            SigmaClass::Negative(i) => write!(f, "sigma{i}-negative"),
            SigmaClass::Trivial => f.write_str("trivial"),
            SigmaClass::Mixed(i) => write!(f, "sigma{i}-mixed"),
        }
    }
}

/// A braid word on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(n: usize) -> Word {
        Word { n, letters: Vec::new() }
    }

    /// Builds a word after checking every letter exists on `n` strands.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Word, WordError> {
        check_strands(n)?;
        if let Some(l) = letters.iter().find(|l| !l.check(n)) {
            return Err(WordError::OutOfRange { token: l.to_string(), n });
        }
        Ok(Word { n, letters })
    }

    /// Builds a word whose letters are known to be valid.
    pub(crate) fn from_letters(n: usize, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.iter().all(|l| l.check(n)), "invalid letter for n = {n}");
        Word { n, letters }
    }

    /// Parses the whitespace separated token syntax, for example `s1^-2 a1.3 d2.4^3`.
    pub fn parse(text: &str, n: usize) -> Result<Word, WordError> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (letter, exp) = parse_token(token)?;
            if !letter.check(n) {
                return Err(WordError::OutOfRange { token: token.to_string(), n });
            }
            let letter = if exp < 0 { letter.inverse() } else { letter };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word { n, letters })
    }

    pub fn strands(&self) -> usize {
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

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn push(&mut self, l: Letter) {
        debug_assert!(l.check(self.n));
        self.letters.push(l);
    }

    pub fn extend_from(&mut self, other: &Word) {
        debug_assert!(other.n <= self.n);
        self.letters.extend_from_slice(&other.letters);
    }

    /// Concatenation; the result lives on the larger strand count.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n.max(other.n), letters }
    }

    /// Same letters viewed on `m >= n` strands.
    pub fn widen(&self, m: usize) -> Word {
        debug_assert!(m >= self.n);
        Word { n: m, letters: self.letters.clone() }
    }

    /// Same letters viewed on `m` strands, checking they exist there.
    pub fn with_strands(&self, m: usize) -> Result<Word, WordError> {
        Word::new(m, self.letters.clone())
    }

    pub fn inverse(&self) -> Word {
        Word { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn alphabet(&self) -> Alphabet {
        let (mut s, mut a, mut d) = (false, false, false);
        for l in &self.letters {
            match l {
                Letter::Sigma { .. } => s = true,
                Letter::Band { .. } => a = true,
                Letter::Desc { .. } => d = true,
            }
        }
        match (s, a, d) {
            (false, false, false) => Alphabet::Empty,
            (true, false, false) => Alphabet::Sigma,
            (false, true, false) => Alphabet::Band,
            (false, false, true) => Alphabet::Desc,
            (false, true, true) => Alphabet::BandDesc,
            _ => Alphabet::Mixed,
        }
    }

    /// True when every letter is a positive band letter.
    pub fn is_positive_band_word(&self) -> bool {
        self.letters.iter().all(|l| l.as_positive_band().is_some())
    }

    /// Artin translation: `a_{p,q}` and `d_{p,q}` expand to their defining words.
    pub fn to_sigma(&self) -> Word {
        let mut out = Vec::with_capacity(self.sigma_len());
        for l in &self.letters {
            l.push_sigma(&mut out);
        }
        Word { n: self.n, letters: out }
    }

    /// Classifies the Artin translation by its highest generator. No reduction is applied.
    pub fn classify_sigma(&self) -> SigmaClass {
        let sigma = self.to_sigma();
        let Some(top) = sigma.letters.iter().map(|l| l.span().0).max() else {
            return SigmaClass::Trivial;
        };
        let (mut pos, mut neg) = (false, false);
        for l in sigma.letters.iter().filter(|l| l.span().0 == top) {
            if l.is_inverse() {
                neg = true;
            } else {
                pos = true;
            }
        }
        match (pos, neg) {
            (true, false) => SigmaClass::Positive(top),
            (false, true) => SigmaClass::Negative(top),
            _ => SigmaClass::Mixed(top),
        }
    }

    /// Length of the Artin translation.
    pub fn sigma_len(&self) -> usize {
        self.letters.iter().map(|l| l.sigma_len()).sum()
    }

    /// Letterwise image under `phi_n^k`; signs are kept.
    pub fn phi(&self, k: i64) -> Result<Word, WordError> {
        let letters = self
            .letters
            .iter()
            .map(|l| l.phi(self.n, k).ok_or_else(|| WordError::NotRotatable { letter: l.to_string(), n: self.n }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word { n: self.n, letters })
    }

    /// Cancels adjacent `x x^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { n: self.n, letters: out }
    }

    /// Prints one token per letter, without folding runs into exponents.
    pub fn expanded(&self) -> String {
        let mut s = String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write_token(&mut s, *l, 1);
        }
        s
    }
}

impl fmt::Display for Word {
    /// Folds maximal runs of a repeated letter into one exponent token.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in self.letters.chunk_by(|x, y| x == y) {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write_token(f, run[0], run.len())?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<(), WordError> {
    if (2..=MAX_STRANDS).contains(&n) {
        Ok(())
    } else {
        Err(WordError::StrandCount(n))
    }
}

fn parse_token(token: &str) -> Result<(Letter, i64), WordError> {
    let syntax = |reason| WordError::Syntax { token: token.to_string(), reason };
    let (body, exp) = match token.split_once('^') {
        Some((body, e)) => (body, i64::from_str(e).map_err(|_| syntax("bad exponent"))?),
        None => (token, 1),
    };
    let mut chars = body.chars();
    let kind = chars.next().ok_or_else(|| syntax("empty letter"))?;
    let rest = chars.as_str();
    let index = |s: &str| -> Result<u8, WordError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("bad index"));
        }
        s.parse::<u8>().map_err(|_| syntax("index too large"))
    };
    let pair = |s: &str| -> Result<(u8, u8), WordError> {
        let (p, q) = s.split_once('.').ok_or_else(|| syntax("expected `<p>.<q>`"))?;
        Ok((index(p)?, index(q)?))
    };
    let letter = match kind {
        's' => Letter::Sigma { i: index(rest)?, inv: false },
        'a' => {
            let (p, q) = pair(rest)?;
            Letter::Band { p, q, inv: false }
        }
        'd' => {
            let (p, q) = pair(rest)?;
            if p == q {
                // d_{p,p} is the empty word.
                return Ok((Letter::Desc { p: 1, q: 2, inv: false }, 0));
            }
            Letter::Desc { p, q, inv: false }
        }
        _ => return Err(syntax("unknown generator")),
    };
    Ok((letter, exp))
}
