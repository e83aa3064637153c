//! Sigma-definite representatives and the order they induce.
//!
//! Starting from the rotating normal form `delta_n^-t w` with splitting
//! `(w_b, ..., w_1)`, three regimes arise. For `t = 0` or `w` empty the form is
//! already definite. For `t > b - 2` the powers of `delta_n^-1` are spread
//! between the entries, giving a `sigma_{n-1}`-negative word. Otherwise the
//! negative part is pushed through the entries by reversing, which gives a
//! `sigma_{n-1}`-positive word or reduces the problem to `n - 1` strands.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::reversing::{dangerous_times_ladder, push_through_splitting, DangerousWord};
use crate::rotating::{read_splitting, rnf_general, RotNF, Splitting};
use crate::words::{Letter, SigmaClass, Word};

/// Which construction produced a level of the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// The rotating normal form itself.
    Rotating,
    /// Powers of `delta_n^-1` spread between the entries.
    Spread,
    /// Reversing through the entries, with the sub-case `1..=4`.
    Reversed(u8),
}

impl CaseTag {
    /// Every tag, in the order they are tried.
    pub const ALL: [CaseTag; 6] = [
        CaseTag::Rotating,
        CaseTag::Spread,
        CaseTag::Reversed(1),
        CaseTag::Reversed(2),
        CaseTag::Reversed(3),
        CaseTag::Reversed(4),
    ];
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Rotating => f.write_str("6.6"),
            CaseTag::Spread => f.write_str("6.8"),
            CaseTag::Reversed(k) => write!(f, "6.10/{k}"),
        }
    }
}

/// A sigma-definite word equivalent to the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaDefinite {
    /// The word on band and `d` letters.
    pub word: Word,
    /// Classification of its Artin translation, never mixed.
    pub class: SigmaClass,
    /// Rotating normal form of the input.
    pub rnf: RotNF,
    /// `(strand count, case)` for each level of the construction, outermost first.
    pub cases: Vec<(usize, CaseTag)>,
}

impl SigmaDefinite {
    /// The Artin translation of [`SigmaDefinite::word`].
    pub fn sigma(&self) -> Word {
        self.word.to_sigma()
    }

    /// `+i`, `-i` or `0`.
    pub fn sign(&self) -> i64 {
        self.class.sign().expect("never mixed")
    }

    /// `6.10/4 > 6.8`
    pub fn case_trace(&self) -> String {
        self.cases.iter().map(|(_, c)| c.to_string()).collect::<Vec<_>>().join(" > ")
    }
}

/// Sigma-definite representative of the braid of `w`.
pub fn nf(w: &Word) -> Result<SigmaDefinite> {
    let rnf = rnf_general(w);
    let mut cases = Vec::new();
    let word = nf_of_rnf(&rnf, &mut cases)?.widen(w.strands());
    let class = word.classify_sigma();
    if matches!(class, SigmaClass::Mixed(_)) {
        return Err(Error::Invariant(format!("`{word}` is not sigma-definite")));
    }
    if word.len() > 3 * rnf.n_length() {
        return Err(Error::Invariant(format!("`{word}` is longer than 3 |beta|_n = {}", 3 * rnf.n_length())));
    }
    Ok(SigmaDefinite { word, class, rnf, cases })
}

/// Artin translation of [`nf`].
pub fn nf_sigma(w: &Word) -> Result<Word> {
    Ok(nf(w)?.sigma())
}

/// `+i` for a sigma_i-positive braid, `-i` for a sigma_i-negative one, `0` for the identity.
pub fn sign(w: &Word) -> Result<i64> {
    Ok(nf(w)?.sign())
}

/// Compares two braids: `w1 < w2` when `w1^-1 w2` is sigma-positive.
pub fn compare(w1: &Word, w2: &Word) -> Result<Ordering> {
    let n = w1.strands().max(w2.strands());
    let s = sign(&w1.widen(n).inverse().concat(&w2.widen(n)))?;
    Ok(0.cmp(&s))
}

fn delta_inv(n: usize, e: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(Letter::d(1, n).inverse(), e)
}

fn nf_of_rnf(rnf: &RotNF, cases: &mut Vec<(usize, CaseTag)>) -> Result<Word> {
    let n = rnf.strands();
    let t = rnf.depth as usize;
    if t == 0 || rnf.word.is_empty() || n == 2 {
        cases.push((n, CaseTag::Rotating));
        return Ok(rnf.to_word());
    }
    let s = read_splitting(&rnf.word)?;
    let b = s.breadth();
    if t + 2 > b {
        cases.push((n, CaseTag::Spread));
        return Ok(spread(&s, t));
    }
    reversed(&s, t, cases)
}

/// `d_{1,n}^{-t+b-1} w_b d_{1,n}^-1 ... w_2 d_{1,n}^-1 w_1`.
fn spread(s: &Splitting, t: usize) -> Word {
    let n = s.strands();
    let b = s.breadth();
    let mut out = Word::from_letters(n, delta_inv(n, t + 1 - b).collect());
    for k in (1..=b).rev() {
        out.extend_from(&s.entry(k).widen(n));
        if k > 1 {
            out.push(Letter::d(1, n).inverse());
        }
    }
    out
}

/// `phi_n^k` of a word whose letters all rotate.
fn rot(w: &Word, n: usize, k: i64) -> Result<Word> {
    Ok(w.widen(n).phi(k)?)
}

fn reversed(s: &Splitting, t: usize, cases: &mut Vec<(usize, CaseTag)>) -> Result<Word> {
    let n = s.strands();
    let b = s.breadth();
    let top = Letter::a(n - 2, n - 1);
    let pivot = s.entry(t + 2);
    let (x, y) = pivot
        .last()
        .and_then(Letter::as_positive_band)
        .ok_or_else(|| Error::Invariant(format!("entry w{} = `{pivot}` is empty", t + 2)))?;
    if y != n - 1 {
        return Err(Error::Invariant(format!("entry w{} = `{pivot}` does not end with a_{{.,{}}}", t + 2, n - 1)));
    }
    let p = x + 1;
    let mut v = Word::empty(n);
    for k in (t + 3..=b).rev() {
        v.extend_from(&rot(s.entry(k), n, (k - 1 - t) as i64)?);
    }
    let head = Word::from_letters(n - 1, pivot.letters()[..pivot.len() - 1].to_vec());
    v.extend_from(&rot(&head, n, 1)?);
    v.push(Letter::d(1, p).inverse());
    let u = if x + 3 <= n { DangerousWord::new(n - 1, vec![x])? } else { DangerousWord::empty(n - 1) };
    let head = s.truncated(t + 2);

    if !s.entry(2).is_empty() {
        cases.push((n, CaseTag::Reversed(1)));
        let pushed = push_through_splitting(&u, &head, 3)?;
        let wall = dangerous_times_ladder(&pushed.dangerous.rotate_up(), s.entry(2))?.wall;
        let mut out = v.concat(&pushed.word);
        out.extend_from(&rot(wall.word(), n, 1)?);
        out.extend_from(&s.entry(1).widen(n));
        return Ok(out);
    }
    let is_top = |k: usize| s.entry(k).len() == 1 && s.entry(k).last() == Some(top);
    if let Some(k) = (3..=t + 1).find(|&k| !is_top(k)) {
        cases.push((n, CaseTag::Reversed(2)));
        let pushed = push_through_splitting(&u, &head, k + 1)?;
        let wall = dangerous_times_ladder(&pushed.dangerous.rotate_up(), s.entry(k))?.wall;
        let letters = wall.word().letters();
        if letters.last() != Some(&Letter::d(n - 2, n - 1)) {
            return Err(Error::Invariant(format!("wall `{}` does not end with d{}.{}", wall.word(), n - 2, n - 1)));
        }
        let body = Word::from_letters(n, letters[..letters.len() - 1].to_vec());
        let mut out = v.concat(&pushed.word);
        out.extend_from(&rot(&body, n, 1)?);
        for l in delta_inv(n - 1, k - 2) {
            out.push(l);
        }
        out.extend_from(&s.entry(1).widen(n));
        return Ok(out);
    }
    if v.len() != 1 || v.last() != Some(Letter::d(1, n - 1).inverse()) {
        cases.push((n, CaseTag::Reversed(3)));
        let mut out = v;
        for l in delta_inv(n - 1, t - 1) {
            out.push(l);
        }
        out.extend_from(&s.entry(1).widen(n));
        return Ok(out);
    }
    cases.push((n, CaseTag::Reversed(4)));
    let mut lower = Word::from_letters(n - 1, delta_inv(n - 1, t).collect());
    lower.extend_from(s.entry(1));
    let inner = rnf_general(&lower);
    Ok(nf_of_rnf(&inner, cases)?.widen(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{equivalent, is_trivial};

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn worked_example() {
        let r = nf(&w("s1 s3^-2 s2 s3", 4)).unwrap();
        assert_eq!(r.rnf.to_string(), "d1.4^-1 | a1.2 a1.4 a2.3 a1.2");
        assert_eq!(r.word.expanded(), "a1.4 d1.3^-1 a2.3 a1.2");
        assert_eq!(r.sigma().expanded(), "s1 s2 s3 s2^-1 s1^-1 s2^-1 s1^-1 s2 s1");
        assert_eq!(r.sign(), 3);
        assert_eq!(r.cases, [(4, CaseTag::Reversed(3))]);
        assert_eq!(r.case_trace(), "6.10/3");
    }

    #[test]
    fn easy_regimes() {
        let r = nf(&w("s1^-3", 2)).unwrap();
        assert_eq!((r.word.to_string(), r.sign()), ("d1.2^-3".to_string(), -1));
        let r = nf(&w("a1.2 a2.3 a1.2", 3)).unwrap();
        assert_eq!(r.cases, [(3, CaseTag::Rotating)]);
        assert_eq!(r.sign(), 2);
        let r = nf(&w("d1.4^-2", 4)).unwrap();
        assert_eq!((r.word.to_string(), r.sign()), ("d1.4^-2".to_string(), -3));
        let r = nf(&w("s1^-1", 3)).unwrap();
        assert_eq!(r.cases[0], (3, CaseTag::Reversed(4)));
        assert!(equivalent(&r.word, &w("s1^-1", 3)));
        assert_eq!(r.sign(), -1);
        assert_eq!(nf(&Word::empty(4)).unwrap().sign(), 0);
        assert_eq!(sign(&w("s1 s1^-1", 2)).unwrap(), 0);
    }

    #[test]
    fn small_words_are_represented() {
        let letters = ["s1", "s2", "s3", "s1^-1", "s2^-1", "s3^-1"];
        let mut seen = std::collections::BTreeSet::new();
        for a in letters {
            for b in letters {
                for c in letters {
                    for d in ["", "s2", "s3^-1"] {
                        let x = w(&format!("{a} {b} {c} {d}"), 4);
                        let r = nf(&x).unwrap();
                        assert!(equivalent(&x, &r.word), "{x} -> {}", r.word);
                        assert_eq!(r.sign() == 0, is_trivial(&x), "{x}");
                        assert_eq!(sign(&x.inverse()).unwrap(), -r.sign(), "{x}");
                        seen.extend(r.cases.iter().map(|c| c.1));
                    }
                }
            }
        }
        assert!(seen.len() >= 4, "{seen:?}");
    }

    #[test]
    fn strand_count_does_not_matter() {
        for s in ["s1 s2^-1 s1", "s2^-2 s1 s2", "s1^-1 s2 s1^-1 s2"] {
            let x = w(s, 3);
            assert_eq!(nf(&x).unwrap().word.letters(), nf(&x.widen(4)).unwrap().word.letters(), "{s}");
        }
    }

    #[test]
    fn ordering() {
        let (e, s1) = (Word::empty(3), w("s1", 3));
        assert_eq!(compare(&e, &s1).unwrap(), Ordering::Less);
        assert_eq!(compare(&s1, &e).unwrap(), Ordering::Greater);
        assert_eq!(compare(&s1, &w("s2 s1 s2^-1 s2 s1^-1 s2^-1 s1", 3)).unwrap(), Ordering::Equal);
        assert_eq!(compare(&w("s2", 3), &w("s1", 3)).unwrap(), Ordering::Greater);
    }
}
