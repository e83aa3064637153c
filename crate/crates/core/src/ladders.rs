//! Barriers and ladders.
//!
//! An `a_{p,n}`-ladder is a normal word of `B_{n-1}^{+*}` that splits as
//! `w_0 x_1 w_1 ... x_h w_h` where each bar `x_k = a_{r,f(k)}` is an
//! `a_{f(k-1),n}`-barrier, the rungs `p = f(0) < f(1) < ... < f(h) = n - 1`
//! rise strictly, and the segments contain no barrier for their own rung.
//! Entries of a splitting are ladders for the rotated last letter of the entry
//! to their left; [`verify_splitting_ladders`] checks this on concrete splittings.

use std::fmt;

use crate::error::{Error, Result};
use crate::rotating::Splitting;
use crate::words::{Letter, Word};

/// True when `a_{r,s}` is an `a_{p,n}`-barrier.
pub fn is_barrier(r: usize, s: usize, p: usize, n: usize) -> bool {
    r < p && p < s && s < n
}

/// A decomposition `w_0 x_1 w_1 ... x_h w_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderDecomposition {
    pub n: usize,
    /// Segments `w_0, ..., w_h`.
    pub segments: Vec<Word>,
    /// Bars `x_1, ..., x_h`.
    pub bars: Vec<Letter>,
    /// Rungs `f(0) = p, ..., f(h) = n - 1`.
    pub rungs: Vec<usize>,
    /// Last letter `a_{q-1,n-1}` of the word.
    pub lent_on: Letter,
}

impl LadderDecomposition {
    pub fn base(&self) -> usize {
        self.rungs[0]
    }

    pub fn height(&self) -> usize {
        self.bars.len()
    }

    /// Concatenates the pieces back into the word.
    pub fn reconstruct(&self) -> Word {
        let mut out = self.segments[0].clone();
        for (x, w) in self.bars.iter().zip(&self.segments[1..]) {
            out.push(*x);
            out.extend_from(w);
        }
        out
    }
}

/// Greedy ladder decomposition of `w` as an `a_{p,n}`-ladder.
///
/// `w` must be a nonempty positive band word over strands `1..n-1` ending with
/// some `a_{.,n-1}`. Each segment is the longest prefix of what remains that
/// holds no barrier for the current rung.
pub fn decompose(w: &Word, p: usize, n: usize) -> Result<LadderDecomposition> {
    let lent_on = w.last().ok_or_else(|| Error::Ladder("empty word".into()))?;
    if !w.is_positive_band_word() || w.letters().iter().any(|l| l.span().1 >= n) {
        return Err(Error::Ladder(format!("`{w}` is not a positive band word on {} strands", n - 1)));
    }
    if lent_on.span().1 != n - 1 {
        return Err(Error::Ladder(format!("`{w}` does not end with a letter a_{{.,{}}}", n - 1)));
    }
    if p == 0 || p >= n {
        return Err(Error::Ladder(format!("base {p} out of range")));
    }
    let letters = w.letters();
    let mut f = p;
    let mut rungs = vec![p];
    let mut bars = Vec::new();
    let mut segments = Vec::new();
    let mut start = 0;
    for (i, l) in letters.iter().enumerate() {
        if f == n - 1 {
            break;
        }
        let (r, s) = l.span();
        if is_barrier(r, s, f, n) {
            segments.push(Word::from_letters(w.strands(), letters[start..i].to_vec()));
            bars.push(*l);
            rungs.push(s);
            f = s;
            start = i + 1;
        }
    }
    if f != n - 1 {
        return Err(Error::Ladder(format!("`{w}` stops at rung {f} below {}", n - 1)));
    }
    segments.push(Word::from_letters(w.strands(), letters[start..].to_vec()));
    Ok(LadderDecomposition { n, segments, bars, rungs, lent_on })
}

/// One checked clause of [`verify_splitting_ladders`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseCheck {
    pub k: usize,
    pub clause: &'static str,
    pub ok: bool,
    pub detail: String,
}

/// Outcome of [`verify_splitting_ladders`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LadderReport {
    pub checks: Vec<ClauseCheck>,
}

impl LadderReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }

    fn push(&mut self, k: usize, clause: &'static str, ok: bool, detail: String) {
        self.checks.push(ClauseCheck { k, clause, ok, detail });
    }
}

impl fmt::Display for LadderReport {
    /// One line per `(k, clause, pass/fail)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.ok { "pass" } else { "FAIL" };
            writeln!(f, "k={} {} {} {}", c.k, c.clause, status, c.detail)?;
        }
        Ok(())
    }
}

/// Checks the structure that every splitting of a positive braid must have.
///
/// * `last-letter`: a nonempty `w_k`, `k >= 2`, ends with `a_{.,n-1}`.
/// * `nonempty`: `w_k` is nonempty for `k >= 3`.
/// * `penultimate`: if `w_k = w a_{n-2,n-1}`, `k >= 2`, with `w` nonempty, then `w` ends with `a_{.,n-1}`.
/// * `ladder`: for `2 <= k < b`, `w_k` is an `a_{p,n}`-ladder where `a_{p-1,n-1}` ends `w_{k+1}`.
/// * `short-entry`: for `2 <= k < b`, if `w_k` is empty or `a_{n-2,n-1}` then `w_{k+1}` ends with `a_{n-2,n-1}`.
pub fn verify_splitting_ladders(s: &Splitting) -> LadderReport {
    let n = s.strands();
    let b = s.breadth();
    let top = Letter::a(n - 2, n - 1);
    let mut report = LadderReport::default();
    for k in 2..=b {
        let w = s.entry(k);
        if let Some(last) = w.last() {
            report.push(k, "last-letter", last.span().1 == n - 1, format!("last letter {last}"));
        }
        if k >= 3 {
            report.push(k, "nonempty", !w.is_empty(), String::new());
        }
        if w.len() >= 2 && w.last() == Some(top) {
            let prev = w.letters()[w.len() - 2];
            report.push(k, "penultimate", prev.span().1 == n - 1, format!("letter before last {prev}"));
        }
    }
    for k in 2..b {
        let w = s.entry(k);
        let Some(next_last) = s.entry(k + 1).last() else {
            report.push(k, "ladder", false, format!("w{} is empty", k + 1));
            continue;
        };
        let p = next_last.span().0 + 1;
        if w.is_empty() {
            report.push(k, "ladder", p == n - 1, format!("empty entry against base {p}"));
        } else {
            match decompose(w, p, n) {
                Ok(d) => report.push(k, "ladder", true, format!("base {p}, height {}", d.height())),
                Err(e) => report.push(k, "ladder", false, e.to_string()),
            }
        }
        if w.is_empty() || (w.len() == 1 && w.last() == Some(top)) {
            report.push(k, "short-entry", next_last == top, format!("w{} ends with {next_last}", k + 1));
        }
    }
    report
}
