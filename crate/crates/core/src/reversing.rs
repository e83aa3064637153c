//! Reversing negative `d_{.,n-1}` letters to the right, dangerous words and walls.
//!
//! The three rules, for `p <= n - 2`:
//!
//! * `d_{p,n-1}^-1 a_{r,s} -> R_p(a_{r,s}) d_{p,n-1}^-1` when `s <= p` or `p <= r`;
//! * `d_{p,n-1}^-1 a_{r,s} -> d_{r,n-1} d_{p-1,n-2}^-1 d_{r,s-1}^-1 d_{s,n-1}^-1` when `r < p < s`;
//! * `d_{p,n-1}^-1 d_{r,n-1} -> d_{r,n-1} d_{p-1,n-2}^-1` when `r < p`.
//!
//! Here `s <= n - 1` throughout and `d_{n-1,n-1}` is the empty word. Reversing
//! a dangerous word against a ladder yields a wall, whose trailing dangerous
//! part is pushed into the next entry of a splitting.

use std::fmt;

use crate::error::{Error, Result};
use crate::rotating::Splitting;
use crate::words::{Letter, Word};

/// `d_{f(d),n-1}^-1 ... d_{f(1),n-1}^-1` with `f(d) >= ... >= f(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DangerousWord {
    n: usize,
    /// `f(d), ..., f(1)`, left to right.
    indices: Vec<usize>,
}

impl DangerousWord {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<DangerousWord> {
        if n < 2 {
            return Err(Error::Precondition(format!("dangerous words need at least two strands, got {n}")));
        }
        if indices.iter().any(|&f| f == 0 || f + 2 > n) {
            return Err(Error::Precondition(format!("dangerous indices {indices:?} leave 1..={}", n - 2)));
        }
        if indices.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("dangerous indices {indices:?} increase")));
        }
        Ok(DangerousWord { n, indices })
    }

    pub fn empty(n: usize) -> DangerousWord {
        DangerousWord { n, indices: Vec::new() }
    }

    /// Reads a word made of letters `d_{f,n-1}^-1` with non-increasing `f`.
    pub fn from_letters(n: usize, letters: &[Letter]) -> Result<DangerousWord> {
        let indices = letters
            .iter()
            .map(|l| match *l {
                Letter::Desc { p, q, inv: true } if q as usize + 1 == n => Ok(p as usize),
                other => Err(Error::Wall(format!("`{other}` is not a letter d_{{.,{}}}^-1", n - 1))),
            })
            .collect::<Result<Vec<_>>>()?;
        DangerousWord::new(n, indices)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `p = f(1)`; the empty word has base `n - 1`.
    pub fn base(&self) -> usize {
        self.indices.last().copied().unwrap_or(self.n - 1)
    }

    /// `q = f(d)`; the empty word has type `n - 1`.
    pub fn kind(&self) -> usize {
        self.indices.first().copied().unwrap_or(self.n - 1)
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = Letter> + DoubleEndedIterator + '_ {
        self.indices.iter().map(|&f| Letter::d(f, self.n - 1).inverse())
    }

    pub fn to_word(&self) -> Word {
        Word::from_letters(self.n, self.letters().collect())
    }

    /// Image under `phi_{n+1}`, a dangerous word on `n + 1` strands.
    pub fn rotate_up(&self) -> DangerousWord {
        DangerousWord { n: self.n + 1, indices: self.indices.iter().map(|f| f + 1).collect() }
    }
}

impl fmt::Display for DangerousWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_word(), f)
    }
}

/// Letters added by one reversing rule: the settled prefix and the letter that keeps moving.
struct Rewrite {
    settled: Vec<Letter>,
    moving: Option<Letter>,
}

/// `Some(p)` when `l` is `d_{p,n-1}^-1` with `p <= n - 2`, the letters the rules move.
fn moving_index(l: Letter, n: usize) -> Option<usize> {
    match l {
        Letter::Desc { p, q, inv: true } if q as usize + 1 == n && (p as usize) + 2 <= n => Some(p as usize),
        _ => None,
    }
}

/// The rule with left-hand side `d_{p,n-1}^-1 y`, if any.
fn rule(n: usize, p: usize, y: Letter) -> Option<Rewrite> {
    let top = n - 1;
    let moving = Letter::d(p, top).inverse();
    match y {
        Letter::Band { p: r, q: s, inv: false } if (s as usize) <= top => {
            let (r, s) = (r as usize, s as usize);
            if s <= p || p <= r {
                let image = if s == p {
                    Letter::a(r, top)
                } else if s < p {
                    y
                } else if r == p {
                    Letter::a(s - 1, top)
                } else {
                    Letter::a(r - 1, s - 1)
                };
                Some(Rewrite { settled: vec![image], moving: Some(moving) })
            } else {
                let settled =
                    vec![Letter::d(r, top), Letter::d(p - 1, top - 1).inverse(), Letter::d(r, s - 1).inverse()];
                let moving = (s < top).then(|| Letter::d(s, top).inverse());
                Some(Rewrite { settled, moving })
            }
        }
        Letter::Desc { p: r, q, inv: false } if q as usize == top && (r as usize) < p => {
            Some(Rewrite { settled: vec![y, Letter::d(p - 1, top - 1).inverse()], moving: None })
        }
        _ => None,
    }
}

/// One rewrite `lhs -> rhs` applied at letter position `pos` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseStep {
    pub pos: usize,
    pub lhs: [Letter; 2],
    pub rhs: Vec<Letter>,
}

impl fmt::Display for ReverseStep {
    /// `<pos> <lhs> -> <rhs>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} ->", self.pos, self.lhs[0], self.lhs[1])?;
        for l in &self.rhs {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

fn rewrite_step(pos: usize, x: Letter, y: Letter, rw: &Rewrite) -> ReverseStep {
    let mut rhs = rw.settled.clone();
    rhs.extend(rw.moving);
    ReverseStep { pos, lhs: [x, y], rhs }
}

/// Positions `i` such that a rule applies to letters `i, i + 1`.
pub fn applicable_positions(w: &Word) -> Vec<usize> {
    let n = w.strands();
    w.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| moving_index(pair[0], n).is_some_and(|p| rule(n, p, pair[1]).is_some()))
        .map(|(i, _)| i)
        .collect()
}

/// Applies the rule at position `pos`, if one applies there.
pub fn reverse_at(w: &Word, pos: usize) -> Option<(Word, ReverseStep)> {
    let n = w.strands();
    let letters = w.letters();
    let (x, y) = (*letters.get(pos)?, *letters.get(pos + 1)?);
    let rw = rule(n, moving_index(x, n)?, y)?;
    let step = rewrite_step(pos, x, y, &rw);
    let mut out = letters[..pos].to_vec();
    out.extend_from_slice(&step.rhs);
    out.extend_from_slice(&letters[pos + 2..]);
    Some((Word::from_letters(n, out), step))
}

/// Rewrites the rightmost subword that matches a rule, or returns `None`.
pub fn reverse_step(w: &Word) -> Option<(Word, ReverseStep)> {
    let pos = *applicable_positions(w).last()?;
    reverse_at(w, pos)
}

/// Rightmost-first reversing on a word kept as a stack whose top is its first letter.
struct Reverser<'a> {
    n: usize,
    /// The word processed so far, last letter at the bottom.
    stack: Vec<Letter>,
    steps: usize,
    budget: usize,
    trace: Option<&'a mut Vec<ReverseStep>>,
}

impl<'a> Reverser<'a> {
    fn new(n: usize, budget: usize, trace: Option<&'a mut Vec<ReverseStep>>) -> Reverser<'a> {
        Reverser { n, stack: Vec::new(), steps: 0, budget, trace }
    }

    /// Prepends `x`, with `offset` letters still to its left, and reverses until stuck.
    ///
    /// Only the moving letter can start a new match, so the letters it settles
    /// behind it are final until the next letter arrives from the left.
    fn prepend(&mut self, x: Letter, offset: usize) -> Result<()> {
        let Some(mut p) = moving_index(x, self.n) else {
            self.stack.push(x);
            return Ok(());
        };
        let mut moving = Some(x);
        let mut settled: Vec<Letter> = Vec::new();
        while let (Some(m), Some(&y)) = (moving, self.stack.last()) {
            let Some(rw) = rule(self.n, p, y) else { break };
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::ReversingBudget { budget: self.budget });
            }
            if let Some(trace) = self.trace.as_deref_mut() {
                trace.push(rewrite_step(offset + settled.len(), m, y, &rw));
            }
            self.stack.pop();
            settled.extend_from_slice(&rw.settled);
            moving = rw.moving;
            if let Some(m) = moving {
                p = moving_index(m, self.n).expect("rules only emit movable letters");
            }
        }
        self.stack.extend(moving);
        self.stack.extend(settled.into_iter().rev());
        Ok(())
    }

    fn word(&self) -> Word {
        Word::from_letters(self.n, self.stack.iter().rev().copied().collect())
    }
}

/// Result of [`reverse_all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reversed {
    pub word: Word,
    /// Number of rules applied.
    pub steps: usize,
}

fn default_budget(len: usize) -> usize {
    4 * len * len
}

/// Reverses to a fixpoint, always rewriting the rightmost match.
pub fn reverse_all(w: &Word) -> Result<Reversed> {
    reverse_with(w, None)
}

/// [`reverse_all`], also recording every step.
pub fn reverse_all_traced(w: &Word) -> Result<(Reversed, Vec<ReverseStep>)> {
    let mut trace = Vec::new();
    let out = reverse_with(w, Some(&mut trace))?;
    Ok((out, trace))
}

fn reverse_with(w: &Word, trace: Option<&mut Vec<ReverseStep>>) -> Result<Reversed> {
    let mut rev = Reverser::new(w.strands(), default_budget(w.len()), trace);
    for (i, &l) in w.letters().iter().enumerate().rev() {
        rev.prepend(l, i)?;
    }
    Ok(Reversed { word: rev.word(), steps: rev.steps })
}

/// The three shapes of a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallKind {
    /// `F d_{r,n-1} M d_{q-1,n-1} D` with `r < p`.
    High,
    /// `F d_{q-1,n-1} D` with `q - 1 < p` and `D` of type below `p`.
    Low,
    /// `F d_{q-1,n-1} D` for `p = n - 1`.
    Top,
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallKind::High => "high",
            WallKind::Low => "low",
            WallKind::Top => "top",
        })
    }
}

/// A word together with its decomposition as a wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub kind: WallKind,
    /// The `p` of an `a_{p,n}`-wall.
    pub base: usize,
    word: Word,
    /// `F` is `word[..f_end]`.
    f_end: usize,
    /// Position of `d_{q-1,n-1}`.
    sep: usize,
}

impl Wall {
    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `F(w)`.
    pub fn f_part(&self) -> &[Letter] {
        &self.word.letters()[..self.f_end]
    }

    /// `d_{r,n-1}` of a high wall.
    pub fn high_letter(&self) -> Option<Letter> {
        (self.kind == WallKind::High).then(|| self.word.letters()[self.f_end])
    }

    /// The middle word between `d_{r,n-1}` and `d_{q-1,n-1}` of a high wall.
    pub fn middle(&self) -> Option<&[Letter]> {
        (self.kind == WallKind::High).then(|| &self.word.letters()[self.f_end + 1..self.sep])
    }

    /// Everything before `d_{q-1,n-1}`.
    pub fn before_separator(&self) -> &[Letter] {
        &self.word.letters()[..self.sep]
    }

    /// `d_{q-1,n-1}`.
    pub fn separator(&self) -> Letter {
        self.word.letters()[self.sep]
    }

    /// `a_{q-1,n-1}`, the letter the wall is lent on.
    pub fn lent_on(&self) -> Letter {
        let (x, y) = self.separator().span();
        Letter::a(x, y)
    }

    /// `D(w)`, a dangerous word on `n - 1` strands.
    pub fn d_part(&self) -> DangerousWord {
        DangerousWord::from_letters(self.strands() - 1, &self.word.letters()[self.sep + 1..])
            .expect("checked by recognize_wall")
    }
}

impl fmt::Display for Wall {
    /// `F · d_{r,n-1} · M · d_{q-1,n-1} · D` with empty pieces shown as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.strands();
        let piece = |ls: &[Letter]| {
            if ls.is_empty() {
                "e".to_string()
            } else {
                Word::from_letters(n, ls.to_vec()).expanded()
            }
        };
        let letters = self.word.letters();
        write!(f, "{} wall: {}", self.kind, piece(self.f_part()))?;
        if let (Some(h), Some(m)) = (self.high_letter(), self.middle()) {
            write!(f, " . {h} . {}", piece(m))?;
        }
        write!(f, " . {} . {}", self.separator(), piece(&letters[self.sep + 1..]))
    }
}

/// Checks that `w` is an `a_{p,n}`-wall and extracts its pieces.
pub fn recognize_wall(w: &Word, p: usize) -> Result<Wall> {
    let n = w.strands();
    if n < 3 || p == 0 || p >= n {
        return Err(Error::Wall(format!("base {p} on {n} strands")));
    }
    let letters = w.letters();
    if let Some(l) = letters.iter().find(|l| l.span().1 >= n || matches!(l, Letter::Sigma { .. })) {
        return Err(Error::Wall(format!("letter `{l}` is not an ad-letter on {} strands", n - 1)));
    }
    let is_low_negative = |l: &Letter| matches!(*l, Letter::Desc { q, inv: true, .. } if q as usize + 2 == n);
    let sep = letters.len() - letters.iter().rev().take_while(|l| is_low_negative(l)).count();
    let Some(sep) = sep.checked_sub(1) else {
        return Err(Error::Wall("no letter d_{q-1,n-1}".into()));
    };
    let base = match letters[sep] {
        Letter::Desc { p, q, inv: false } if q as usize + 1 == n => p as usize,
        other => return Err(Error::Wall(format!("`{other}` stands where d_{{q-1,{}}} belongs", n - 1))),
    };
    let d = DangerousWord::from_letters(n - 1, &letters[sep + 1..])?;
    if d.base() != base {
        return Err(Error::Wall(format!("dangerous suffix `{d}` does not have base {base}")));
    }
    let f_end = letters.iter().take_while(|l| l.as_positive_band().is_some()).count().min(sep);
    let kind = if f_end == sep {
        if p == n - 1 {
            WallKind::Top
        } else if base < p && d.kind() < p {
            WallKind::Low
        } else {
            return Err(Error::Wall(format!("low wall with q-1 = {base} and type {} against base {p}", d.kind())));
        }
    } else {
        match letters[f_end] {
            Letter::Desc { p: r, q, inv: false } if q as usize + 1 == n && (r as usize) < p => {}
            other => {
                return Err(Error::Wall(format!("`{other}` follows F where d_{{r,{}}} with r < {p} belongs", n - 1)))
            }
        }
        let middle = Word::from_letters(n, letters[f_end + 1..sep].to_vec()).to_sigma();
        if let Some(l) = middle.letters().iter().find(|l| l.span().0 == n - 2 && l.is_inverse()) {
            return Err(Error::Wall(format!("middle contains {l}")));
        }
        WallKind::High
    };
    Ok(Wall { kind, base: p, word: w.clone(), f_end, sep })
}

/// A wall equivalent to `u w`, with the number of reversing steps used.
#[derive(Clone, Debug)]
pub struct WallProduct {
    pub wall: Wall,
    pub steps: usize,
}

/// Turns the product of a dangerous word and a ladder into a wall.
///
/// `w` is a nonempty positive band word on strands `1..n-1` ending with
/// `a_{q-1,n-1}`; it should be an `a_{p,n}`-ladder for `p` the base of `u`.
/// The letters of `u` are reversed through `w` from right to left; after the
/// first one a trailing `a_{q-1,n-1}` is split into `d_{q-1,n-1} d_{q-1,n-2}^-1`.
pub fn dangerous_times_ladder(u: &DangerousWord, w: &Word) -> Result<WallProduct> {
    let n = u.strands();
    if n < 3 {
        return Err(Error::Precondition("walls need at least three strands".into()));
    }
    let lent_on = w.last().ok_or_else(|| Error::Precondition("empty ladder".into()))?;
    if !w.is_positive_band_word() || w.letters().iter().any(|l| l.span().1 >= n) {
        return Err(Error::Precondition(format!("`{w}` is not a positive band word on {} strands", n - 1)));
    }
    if lent_on.span().1 != n - 1 {
        return Err(Error::Precondition(format!("`{w}` does not end with a letter a_{{.,{}}}", n - 1)));
    }
    let w = w.widen(n);
    let mut rev = Reverser::new(n, default_budget(u.len() + w.len()), None);
    for &l in w.letters().iter().rev() {
        rev.prepend(l, 0)?;
    }
    if u.is_empty() {
        split_last(&mut rev.stack, n);
    }
    for (k, l) in u.letters().enumerate().rev() {
        rev.prepend(l, k)?;
        if k + 1 == u.len() {
            split_last(&mut rev.stack, n);
        }
    }
    let out = rev.word();
    if let Some(pos) = out.letters().iter().position(|&l| moving_index(l, n).is_some()) {
        return Err(Error::Wall(format!("reversing of `{}` `{w}` is stuck at position {pos} in `{out}`", u)));
    }
    let wall = recognize_wall(&out, u.kind())?;
    let (du, dw) = (u.len(), w.len());
    if wall.d_part().len() > du + 1 {
        return Err(Error::Invariant(format!("|D| = {} exceeds |u| + 1 = {}", wall.d_part().len(), du + 1)));
    }
    if wall.len() + 1 > 3 * dw + du {
        return Err(Error::Invariant(format!(
            "wall length {} exceeds 3|w| + |u| - 1 = {}",
            wall.len(),
            3 * dw + du - 1
        )));
    }
    if rev.steps > du * dw {
        return Err(Error::Invariant(format!("{} reversing steps exceed |u||w| = {}", rev.steps, du * dw)));
    }
    Ok(WallProduct { wall, steps: rev.steps })
}

/// Rewrites a trailing `a_{x,n-1}` as `d_{x,n-1} d_{x,n-2}^-1` (the stack bottom is the last letter).
fn split_last(stack: &mut Vec<Letter>, n: usize) {
    let Some((x, y)) = stack.first().and_then(|l| l.as_positive_band()) else { return };
    if y != n - 1 {
        return;
    }
    stack[0] = Letter::d(x, n - 1);
    if x + 2 < n {
        stack.insert(0, Letter::d(x, n - 2).inverse());
    }
}

/// Output of [`push_through_splitting`].
#[derive(Clone, Debug)]
pub struct PushThrough {
    /// `w' = w'_{b-1} ... w'_c` on `n` strands.
    pub word: Word,
    /// `u_c`, a dangerous word on `n - 1` strands.
    pub dangerous: DangerousWord,
    /// Reversing steps over all stages.
    pub steps: usize,
}

/// Pushes `u_b` through the entries `w_{b-1}, ..., w_c` of a splitting.
///
/// Each stage reverses `phi_n(u_k) w_{k-1}` into a wall `v' d_{p-1,n-1} u_{k-1}`
/// and emits `w'_{k-1} = phi_n(v') d_{1,p}^-1`, so that
/// `delta^{3-k} phi^{k-1}(u_k) phi^{k-2}(w_{k-1}) = w'_{k-1} delta^{4-k} phi^{k-2}(u_{k-1})`.
pub fn push_through_splitting(u_b: &DangerousWord, s: &Splitting, c: usize) -> Result<PushThrough> {
    let n = s.strands();
    let b = s.breadth();
    if b < 3 || c < 3 || c > b {
        return Err(Error::Precondition(format!("push-through needs 3 <= c = {c} <= b = {b}")));
    }
    if u_b.strands() + 1 != n {
        return Err(Error::Precondition(format!("dangerous word on {} strands for a splitting on {n}", u_b.strands())));
    }
    let mut word = Word::empty(n);
    let mut u = u_b.clone();
    let mut steps = 0;
    for k in (c + 1..=b).rev() {
        let entry = s.entry(k - 1);
        let product = dangerous_times_ladder(&u.rotate_up(), entry)?;
        steps += product.steps;
        let wall = product.wall;
        let p = wall.separator().span().0 + 1;
        let v = Word::from_letters(n, wall.before_separator().to_vec()).phi(1)?;
        word.extend_from(&v);
        word.push(Letter::d(1, p).inverse());
        u = wall.d_part();
    }
    let bound = 3 * (c..b).map(|k| s.entry(k).len()).sum::<usize>() + u_b.len() + c;
    if word.len() + u.len() + b > bound {
        return Err(Error::Invariant(format!("push-through word of length {} is too long", word.len())));
    }
    if u.len() > u_b.len() + b {
        return Err(Error::Invariant(format!("dangerous word grew to {}", u.len())));
    }
    Ok(PushThrough { word, dangerous: u, steps })
}
