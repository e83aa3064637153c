//! Rotating normal form.
//!
//! A positive braid `beta` of `B_n^{+*}` is written `phi_n^{b-1}(beta_b) ... phi_n(beta_2) beta_1`
//! with every `beta_k` in `B_{n-1}^{+*}` chosen as large as possible from the right
//! (its splitting). Normalizing each entry recursively gives the rotating normal
//! word. A general braid is `delta_n^-t w` with `w` normal and `t` minimal.

use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{DualBraid, Simple};
use crate::words::{rotate_index, Letter, Word};

/// The entries `(w_b, ..., w_1)` of a splitting, each a normal word on `n - 1` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    n: usize,
    /// `entries[k - 1]` is `w_k`.
    entries: Vec<Word>,
}

impl Splitting {
    pub fn new(n: usize, entries: Vec<Word>) -> Splitting {
        debug_assert!(entries.iter().all(|w| w.strands() == n - 1));
        Splitting { n, entries }
    }

    /// Strand count of the braid being split.
    pub fn strands(&self) -> usize {
        self.n
    }

    /// Number of entries `b`.
    pub fn breadth(&self) -> usize {
        self.entries.len()
    }

    /// Entry `w_k`, `1 <= k <= b`.
    pub fn entry(&self, k: usize) -> &Word {
        &self.entries[k - 1]
    }

    /// Entries `w_1, ..., w_b`.
    pub fn entries(&self) -> &[Word] {
        &self.entries
    }

    /// The splitting `(w_m, ..., w_1)` made of the first `m` entries.
    pub fn truncated(&self, m: usize) -> Splitting {
        Splitting { n: self.n, entries: self.entries[..m].to_vec() }
    }

    /// The word `phi_n^{b-1}(w_b) ... phi_n(w_2) w_1`.
    pub fn compose(&self) -> Word {
        let mut out = Word::empty(self.n);
        for (k, w) in self.entries.iter().enumerate().rev() {
            out.extend_from(&w.widen(self.n).phi(k as i64).expect("band letters always rotate"));
        }
        out
    }
}

impl fmt::Display for Splitting {
    /// `w4=a2.3 ; w3=a2.3 ; w2= ; w1=a2.3 a1.2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.entries.iter().enumerate().rev() {
            write!(f, "w{}={}", k + 1, w.expanded())?;
            if k > 0 {
                f.write_str(" ; ")?;
            }
        }
        Ok(())
    }
}

/// Strand avoided by `phi_n^k(B_{n-1})`.
fn avoided_strand(n: usize, k: usize) -> usize {
    rotate_index(n, n, k as i64)
}

/// Splitting of a positive braid on `n >= 3` strands, entries as braids on `n - 1` strands.
pub fn phi_splitting(beta: &DualBraid) -> Vec<DualBraid> {
    let n = beta.strands();
    assert!(n >= 3, "splittings need at least three strands");
    let mut rest = beta.clone();
    let mut entries = Vec::new();
    let mut empty_run = 0;
    while !rest.is_identity() {
        let k = entries.len();
        let avoid = avoided_strand(n, k);
        let strands: Vec<usize> = (1..=n).filter(|&i| i != avoid).collect();
        let tail = rest.strip_parabolic(&strands);
        empty_run = if tail.is_empty() { empty_run + 1 } else { 0 };
        assert!(empty_run < 3, "three consecutive trivial tails in a nontrivial braid");
        let mut entry = DualBraid::identity(n - 1);
        for g in tail {
            let g = g.phi(-(k as i64));
            for (p, q) in g.atoms() {
                entry.mul_simple(&Simple::atom(n - 1, p, q));
            }
        }
        entries.push(entry);
    }
    entries
}

/// Rotating normal word of a positive braid.
pub fn rnf_positive(beta: &DualBraid) -> Word {
    let n = beta.strands();
    if n == 2 {
        return Word::from_letters(2, vec![Letter::a(1, 2); beta.len()]);
    }
    splitting_of(beta).compose()
}

/// Splitting of a positive braid with every entry in rotating normal form.
pub fn splitting_of(beta: &DualBraid) -> Splitting {
    let n = beta.strands();
    Splitting::new(n, phi_splitting(beta).iter().map(rnf_positive).collect())
}

/// Rotating normal word of a positive word.
pub fn rnf_positive_word(w: &Word) -> Result<Word> {
    Ok(rnf_positive(&DualBraid::from_word(w)?))
}

/// Reads the splitting back off a rotating normal word, scanning from the right.
pub fn read_splitting(w: &Word) -> Result<Splitting> {
    let n = w.strands();
    if n < 3 {
        return Err(Error::Precondition("splittings need at least three strands".into()));
    }
    if !w.is_positive_band_word() {
        return Err(Error::Precondition(format!("`{w}` is not a positive band word")));
    }
    let letters = w.letters();
    let mut end = letters.len();
    let mut entries = Vec::new();
    let mut empty_run = 0;
    while end > 0 {
        let k = entries.len();
        let avoid = avoided_strand(n, k);
        let mut start = end;
        while start > 0 {
            let (p, q) = letters[start - 1].span();
            if p == avoid || q == avoid {
                break;
            }
            start -= 1;
        }
        empty_run = if start == end { empty_run + 1 } else { 0 };
        if empty_run == 3 {
            return Err(Error::Precondition(format!("`{w}` is not a rotating normal word")));
        }
        let segment = Word::from_letters(n, letters[start..end].to_vec()).phi(-(k as i64))?;
        entries.push(Word::new(n - 1, segment.into_letters())?);
        end = start;
    }
    Ok(Splitting::new(n, entries))
}

/// `theta_{i,n} = phi_n^{i+1}(delta_{n-1})`, a positive word equal to `delta_n sigma_i^-1`.
pub fn theta(i: usize, n: usize) -> Word {
    let d = Word::from_letters(n, (1..n - 1).map(|j| Letter::a(j, j + 1)).collect());
    d.phi(i as i64 + 1).expect("band letters always rotate")
}

/// Rotating normal form `delta_n^-t w` of an arbitrary braid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotNF {
    /// The exponent `t >= 0`.
    pub depth: u64,
    /// The normal positive word `w`.
    pub word: Word,
}

impl RotNF {
    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    /// `t + |w|`.
    pub fn n_length(&self) -> usize {
        self.depth as usize + self.word.len()
    }

    /// The word `d_{1,n}^-t w`.
    pub fn to_word(&self) -> Word {
        let n = self.strands();
        let mut letters = vec![Letter::d(1, n).inverse(); self.depth as usize];
        letters.extend_from_slice(self.word.letters());
        Word::from_letters(n, letters)
    }
}

impl fmt::Display for RotNF {
    /// `d1.4^-1 | a1.2 a1.4 a2.3 a1.2`; the prefix is omitted when `t = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.depth > 0 {
            write!(f, "d1.{}^-{} ", self.strands(), self.depth)?;
        }
        write!(f, "| {}", self.word.expanded())
    }
}

/// Rotating normal form of any word.
///
/// Each inverse letter `x^-1` is rewritten `delta_n^-1 (delta_n x^-1)`, the
/// `delta_n^-1` are pushed to the front, and the largest power of `delta_n`
/// dividing the positive remainder cancels against them.
pub fn rnf_general(w: &Word) -> RotNF {
    let n = w.strands();
    let c = w.letters().iter().filter(|l| l.is_inverse()).count() as u64;
    let mut v = DualBraid::identity(n);
    let mut seen = 0u64;
    for &l in w.letters() {
        let (p, q) = l.span();
        let simple = match l {
            Letter::Desc { .. } => Simple::block(n, p..=q),
            _ => Simple::atom(n, p, q),
        };
        let simple = if l.is_inverse() {
            seen += 1;
            simple.left_complement()
        } else {
            simple
        };
        v.mul_simple(&simple.phi((c - seen) as i64));
    }
    let s = v.inf();
    let (depth, positive) = if s >= c { (0, v.left_divide_delta(c)) } else { (c - s, v.left_divide_delta(s)) };
    RotNF { depth, word: rnf_positive(&positive) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    fn split(s: &str, n: usize) -> Vec<String> {
        let b = DualBraid::from_word(&w(s, n)).unwrap();
        splitting_of(&b).entries().iter().rev().map(|e| e.to_string()).collect()
    }

    #[test]
    fn delta3_squared() {
        assert_eq!(split("a1.2 a2.3 a1.2 a2.3", 3), ["a1.2", "a1.2", "", "a1.2^2"]);
        assert_eq!(rnf_positive_word(&w("a1.2 a2.3 a1.2 a2.3", 3)).unwrap().expanded(), "a1.2 a1.3 a1.2 a1.2");
    }

    #[test]
    fn delta4_squared() {
        let d2 = w("a1.2 a2.3 a3.4 a1.2 a2.3 a3.4", 4);
        assert_eq!(split("a1.2 a2.3 a3.4 a1.2 a2.3 a3.4", 4), ["a2.3", "a2.3", "", "a1.2 a1.3 a1.2^2"]);
        assert_eq!(rnf_positive_word(&d2).unwrap().expanded(), "a1.2 a1.4 a1.2 a1.3 a1.2 a1.2");
    }

    #[test]
    fn single_atoms() {
        assert_eq!(split("a1.5", 5), ["a3.4", "", ""]);
        assert_eq!(split("a3.5", 5), ["a2.4", ""]);
        assert_eq!(split("a2.4", 5), ["a2.4"]);
    }

    #[test]
    fn theta_words() {
        assert_eq!(theta(3, 4).to_string(), "a1.2 a2.3");
        assert_eq!(theta(1, 3).to_string(), "a1.3");
        assert_eq!(theta(1, 4).to_string(), "a3.4 a1.4");
    }

    #[test]
    fn general_form_of_inverse_generator() {
        let r = rnf_general(&w("s1^-1", 3));
        assert_eq!(r.to_string(), "d1.3^-1 | a1.3");
        let r = rnf_general(&w("s1^-3", 2));
        assert_eq!(r.to_string(), "d1.2^-3 | ");
        assert_eq!(rnf_general(&w("s1 s1^-1", 2)).to_string(), "| ");
    }

    #[test]
    fn read_splitting_inverts_compose() {
        let word = rnf_positive_word(&w("a1.2 a2.3 a3.4 a1.2 a2.3 a3.4", 4)).unwrap();
        let s = read_splitting(&word).unwrap();
        assert_eq!(s.to_string(), "w4=a2.3 ; w3=a2.3 ; w2= ; w1=a1.2 a1.3 a1.2 a1.2");
        assert_eq!(s.compose(), word);
    }
}
