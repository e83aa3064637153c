//! Garside structure of the dual braid monoid.
//!
//! Simple elements are the divisors of `delta_n = a_{1,2} a_{2,3} ... a_{n-1,n}`.
//! They correspond to noncrossing partitions of `1..=n`; the simple element of a
//! partition acts on each block `i_1 < ... < i_k` as the cycle
//! `i_k -> i_{k-1} -> ... -> i_1 -> i_k`. Left and right divisibility between
//! simple elements both reduce to refinement of partitions, so gcds are block
//! intersections.
//!
//! [`DualBraid`] stores an element of the monoid as its right-greedy normal form
//! `x_1 ... x_m delta^s`, which is canonical.

use std::fmt;

use crate::error::WordError;
use crate::words::{Letter, Word, MAX_STRANDS};

/// A simple element, stored as the permutation it induces (0-based positions).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simple {
    n: u8,
    perm: [u8; MAX_STRANDS],
}

impl Simple {
    pub fn identity(n: usize) -> Simple {
        let mut perm = [0; MAX_STRANDS];
        for (j, x) in perm.iter_mut().enumerate().take(n) {
            *x = j as u8;
        }
        Simple { n: n as u8, perm }
    }

    pub fn delta(n: usize) -> Simple {
        Simple::block(n, 1..=n)
    }

    /// The atom `a_{p,q}`.
    pub fn atom(n: usize, p: usize, q: usize) -> Simple {
        Simple::block(n, [p, q])
    }

    /// The atom `a_{p,q}`, checking `1 <= p < q <= n`.
    pub fn try_atom(n: usize, p: usize, q: usize) -> Result<Simple, WordError> {
        if (2..=MAX_STRANDS).contains(&n) && 1 <= p && p < q && q <= n {
            Ok(Simple::atom(n, p, q))
        } else {
            Err(WordError::OutOfRange { token: format!("a{p}.{q}"), n })
        }
    }

    /// Simple element whose only nontrivial block is the given set of strands (1-based).
    pub fn block(n: usize, strands: impl IntoIterator<Item = usize>) -> Simple {
        let mut s = Simple::identity(n);
        let mut b: Vec<usize> = strands.into_iter().map(|i| i - 1).collect();
        b.sort_unstable();
        for k in 0..b.len() {
            s.perm[b[k]] = b[(k + b.len() - 1) % b.len()] as u8;
        }
        s
    }

    fn from_labels(n: usize, label: &[u8]) -> Simple {
        let mut s = Simple::identity(n);
        // Each block maps its elements to the previous one in increasing order.
        let mut last_in_block = [u8::MAX; MAX_STRANDS];
        let mut first_in_block = [u8::MAX; MAX_STRANDS];
        for (j, &b) in label[..n].iter().enumerate() {
            let b = b as usize;
            if last_in_block[b] == u8::MAX {
                first_in_block[b] = j as u8;
            } else {
                s.perm[j] = last_in_block[b];
            }
            last_in_block[b] = j as u8;
        }
        for (j, &b) in label[..n].iter().enumerate() {
            let b = b as usize;
            if first_in_block[b] == j as u8 {
                s.perm[j] = last_in_block[b];
            }
        }
        s
    }

    pub fn strands(&self) -> usize {
        self.n as usize
    }

    fn n(&self) -> usize {
        self.n as usize
    }

    /// Block label of every strand: the smallest strand of its block (0-based).
    fn labels(&self) -> [u8; MAX_STRANDS] {
        let mut label = [u8::MAX; MAX_STRANDS];
        for j in 0..self.n() {
            if label[j] != u8::MAX {
                continue;
            }
            let mut k = j;
            loop {
                label[k] = j as u8;
                k = self.perm[k] as usize;
                if k == j {
                    break;
                }
            }
        }
        label
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|j| self.perm[j] as usize == j)
    }

    pub fn is_delta(&self) -> bool {
        *self == Simple::delta(self.n())
    }

    /// Number of atoms in any decomposition.
    pub fn len(&self) -> usize {
        let label = self.labels();
        let blocks = (0..self.n()).filter(|&j| label[j] as usize == j).count();
        self.n() - blocks
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// True when `a_{p,q}` divides this element (on either side).
    pub fn has_atom(&self, p: usize, q: usize) -> bool {
        let label = self.labels();
        label[p - 1] == label[q - 1]
    }

    /// Greatest common divisor: the common refinement of the two partitions.
    pub fn meet(&self, other: &Simple) -> Simple {
        let (la, lb) = (self.labels(), other.labels());
        let mut label = [0u8; MAX_STRANDS];
        for j in 0..self.n() {
            label[j] = (0..=j).find(|&i| la[i] == la[j] && lb[i] == lb[j]).unwrap() as u8;
        }
        Simple::from_labels(self.n(), &label)
    }

    /// Permutation product, `self` acting first.
    fn then(&self, other: &Simple) -> Simple {
        let mut s = *self;
        for j in 0..self.n() {
            s.perm[j] = other.perm[self.perm[j] as usize];
        }
        s
    }

    fn inv(&self) -> Simple {
        let mut s = *self;
        for j in 0..self.n() {
            s.perm[self.perm[j] as usize] = j as u8;
        }
        s
    }

    /// `delta self^-1`, the simple element `c` with `c self = delta`.
    pub fn left_complement(&self) -> Simple {
        Simple::delta(self.n()).then(&self.inv())
    }

    /// `self^-1 delta`, the simple element `c` with `self c = delta`.
    pub fn right_complement(&self) -> Simple {
        self.inv().then(&Simple::delta(self.n()))
    }

    /// `self g^-1` for a divisor `g`.
    pub fn strip_right(&self, g: &Simple) -> Simple {
        let s = self.then(&g.inv());
        debug_assert!(s.is_noncrossing(), "{g:?} does not right-divide {self:?}");
        s
    }

    /// `g^-1 self` for a divisor `g`.
    pub fn strip_left(&self, g: &Simple) -> Simple {
        let s = g.inv().then(self);
        debug_assert!(s.is_noncrossing(), "{g:?} does not left-divide {self:?}");
        s
    }

    /// Product of two simple elements whose product is known to be simple.
    pub fn mul(&self, other: &Simple) -> Simple {
        let s = self.then(other);
        debug_assert!(s.is_noncrossing(), "{self:?} {other:?} is not simple");
        s
    }

    /// Conjugate by `delta^k`; blocks are shifted by `k` modulo `n`.
    pub fn phi(&self, k: i64) -> Simple {
        let n = self.n() as i64;
        let mut s = *self;
        for j in 0..self.n() {
            let to = (j as i64 + k).rem_euclid(n) as usize;
            s.perm[to] = (self.perm[j] as i64 + k).rem_euclid(n) as u8;
        }
        s
    }

    /// Checks that the permutation is the descending-cycle permutation of a noncrossing partition.
    pub fn is_noncrossing(&self) -> bool {
        let n = self.n();
        let label = self.labels();
        if Simple::from_labels(n, &label) != *self {
            return false;
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if label[a] == label[c] && label[b] == label[d] && label[a] != label[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Blocks of size at least two, each in increasing order (1-based).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let label = self.labels();
        let mut out = Vec::new();
        for j in 0..self.n() {
            if label[j] as usize == j {
                let b: Vec<usize> = (j..self.n()).filter(|&i| label[i] as usize == j).map(|i| i + 1).collect();
                if b.len() > 1 {
                    out.push(b);
                }
            }
        }
        out
    }

    /// Decomposition `a_{i_1,i_2} a_{i_2,i_3} ...` per block.
    pub fn atoms(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len());
        for b in self.blocks() {
            out.extend(b.windows(2).map(|w| (w[0], w[1])));
        }
        out
    }
}

impl fmt::Debug for Simple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for b in self.blocks() {
            f.write_str("(")?;
            for (k, x) in b.iter().rev().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Element of the dual braid monoid in right-greedy normal form `x_1 ... x_m delta^s`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualBraid {
    n: usize,
    factors: Vec<Simple>,
    delta: u64,
}

impl DualBraid {
    pub fn identity(n: usize) -> DualBraid {
        DualBraid { n, factors: Vec::new(), delta: 0 }
    }

    pub fn delta_power(n: usize, k: u64) -> DualBraid {
        DualBraid { n, factors: Vec::new(), delta: k }
    }

    /// Element represented by a word of positive Artin, band or `d` letters.
    pub fn from_word(w: &Word) -> Result<DualBraid, WordError> {
        let n = w.strands();
        let mut b = DualBraid::identity(n);
        for &l in w.letters() {
            if l.is_inverse() {
                return Err(WordError::Syntax { token: l.to_string(), reason: "negative letter in a positive word" });
            }
            let (p, q) = l.span();
            match l {
                Letter::Desc { .. } => b.mul_simple(&Simple::block(n, p..=q)),
                _ => b.mul_simple(&Simple::atom(n, p, q)),
            }
        }
        Ok(b)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// Largest `s` with `delta^s` dividing the element.
    pub fn inf(&self) -> u64 {
        self.delta
    }

    /// Non-`delta` factors of the right-greedy normal form.
    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(Simple::len).sum::<usize>() + self.delta as usize * (self.n - 1)
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty() && self.delta == 0
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Right multiplication by a simple element.
    pub fn mul_simple(&mut self, y: &Simple) {
        if y.is_identity() {
            return;
        }
        let y = y.phi(self.delta as i64);
        self.factors.push(y);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !slide(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while self.factors.last().is_some_and(Simple::is_delta) {
            self.factors.pop();
            self.delta += 1;
        }
        let lead = self.factors.iter().take_while(|f| f.is_identity()).count();
        self.factors.drain(..lead);
        debug_assert!(self.is_normal(), "right-greedy pass left a non-normal form: {self:?}");
    }

    pub fn mul_atom(&mut self, p: usize, q: usize) {
        self.mul_simple(&Simple::atom(self.n, p, q));
    }

    fn is_normal(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_delta())
            && self.factors.windows(2).all(|w| {
                let (mut x, mut y) = (w[0], w[1]);
                !slide(&mut x, &mut y)
            })
    }

    /// Largest simple right divisor.
    pub fn last_simple(&self) -> Simple {
        match (self.delta, self.factors.last()) {
            (0, Some(x)) => *x,
            (0, None) => Simple::identity(self.n),
            _ => Simple::delta(self.n),
        }
    }

    pub fn right_divisible_by_atom(&self, p: usize, q: usize) -> bool {
        self.last_simple().has_atom(p, q)
    }

    /// Right division by a simple right divisor `g`.
    pub fn strip_simple(&mut self, g: &Simple) {
        if g.is_identity() {
            return;
        }
        if self.delta > 0 {
            self.delta -= 1;
            self.mul_simple(&g.left_complement());
        } else {
            let last = self.factors.pop().expect("divisor of the identity");
            self.mul_simple(&last.strip_right(g));
        }
    }

    /// Removes the largest right divisor generated by atoms inside `strands`
    /// (1-based) and returns it as the list of stripped simple elements, left to right.
    pub fn strip_parabolic(&mut self, strands: &[usize]) -> Vec<Simple> {
        let top = Simple::block(self.n, strands.iter().copied());
        let mut stripped = Vec::new();
        loop {
            let g = self.last_simple().meet(&top);
            if g.is_identity() {
                break;
            }
            self.strip_simple(&g);
            stripped.push(g);
        }
        stripped.reverse();
        stripped
    }

    /// Largest right divisor lying in `B_m^{+*}`, for `m < n`.
    pub fn tail(&self, m: usize) -> DualBraid {
        assert!(m < self.n);
        let strands: Vec<usize> = (1..=m).collect();
        let mut rest = self.clone();
        let mut tail = DualBraid::identity(self.n);
        for g in rest.strip_parabolic(&strands) {
            tail.mul_simple(&g);
        }
        tail
    }

    /// `(s, beta')` with `beta = delta^s beta'` and `s` maximal.
    pub fn delta_valuation(&self) -> (u64, DualBraid) {
        (self.delta, self.left_divide_delta(self.delta))
    }

    /// Image under `phi_n^k`.
    pub fn phi(&self, k: i64) -> DualBraid {
        DualBraid { n: self.n, factors: self.factors.iter().map(|f| f.phi(k)).collect(), delta: self.delta }
    }

    /// Left quotient by `delta^k`, for `k <= inf`.
    pub fn left_divide_delta(&self, k: u64) -> DualBraid {
        assert!(k <= self.delta);
        let mut b = self.phi(-(k as i64));
        b.delta -= k;
        b
    }

    /// Positive band word: the atoms of each factor, then `delta^s` as `a_{1,2} ... a_{n-1,n}`.
    pub fn to_a_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        for f in &self.factors {
            letters.extend(f.atoms().into_iter().map(|(p, q)| Letter::a(p, q)));
        }
        for _ in 0..self.delta {
            letters.extend((1..self.n).map(|i| Letter::a(i, i + 1)));
        }
        Word::from_letters(self.n, letters)
    }

    /// Left-greedy normal form `delta^s s_1 ... s_m`.
    pub fn left_greedy(&self) -> GreedyForm {
        let s = self.delta as i64;
        let mut factors: Vec<Simple> = self.factors.iter().map(|f| f.phi(-s)).collect();
        loop {
            let mut moved = false;
            for j in 1..factors.len() {
                let (left, right) = factors.split_at_mut(j);
                let (x, y) = (&mut left[j - 1], &mut right[0]);
                let g = x.right_complement().meet(y);
                if !g.is_identity() {
                    *x = x.mul(&g);
                    *y = y.strip_left(&g);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        let mut delta = self.delta;
        let lead = factors.iter().take_while(|f| f.is_delta()).count();
        delta += lead as u64;
        factors.drain(..lead);
        factors.retain(|f| !f.is_identity());
        GreedyForm { delta, factors }
    }
}

/// Makes the pair `(x, y)` right-greedy. Returns whether anything moved.
fn slide(x: &mut Simple, y: &mut Simple) -> bool {
    let g = x.meet(&y.left_complement());
    if g.is_identity() {
        return false;
    }
    *x = x.strip_right(&g);
    *y = g.mul(y);
    true
}

impl fmt::Debug for DualBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.factors)?;
        write!(f, " delta^{}", self.delta)
    }
}

/// Left-greedy normal form `delta^s s_1 ... s_m`, for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyForm {
    pub delta: u64,
    pub factors: Vec<Simple>,
}

impl fmt::Display for GreedyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta^{}", self.delta)?;
        for s in &self.factors {
            write!(f, " {s:?}")?;
        }
        Ok(())
    }
}

/// `delta`-valuation of a positive word.
pub fn delta_valuation(w: &Word) -> Result<u64, WordError> {
    Ok(DualBraid::from_word(w)?.inf())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn braid(s: &str, n: usize) -> DualBraid {
        DualBraid::from_word(&Word::parse(s, n).unwrap()).unwrap()
    }

    #[test]
    fn delta_is_an_n_cycle() {
        let d = Simple::delta(4);
        assert_eq!(d.len(), 3);
        assert_eq!(format!("{d:?}"), "(4 3 2 1)");
        assert_eq!(braid("a1.2 a2.3 a3.4", 4), DualBraid::delta_power(4, 1));
    }

    #[test]
    fn triangle_relations() {
        let x = braid("a1.2 a2.3", 3);
        assert_eq!(x, braid("a2.3 a1.3", 3));
        assert_eq!(x, braid("a1.3 a1.2", 3));
        assert_eq!(x.inf(), 1);
    }

    #[test]
    fn meet_of_crossing_atoms_is_trivial() {
        let x = Simple::atom(4, 1, 3);
        let y = Simple::atom(4, 2, 4);
        assert!(x.meet(&y).is_identity());
        assert!(Simple::block(5, [1, 3, 4]).meet(&Simple::block(5, [1, 4, 5])) == Simple::atom(5, 1, 4));
    }

    #[test]
    fn complements() {
        let a = Simple::atom(4, 2, 3);
        assert!(a.mul(&a.right_complement()).is_delta());
        assert!(a.left_complement().mul(&a).is_delta());
        assert_eq!(a.left_complement().len(), 2);
    }

    #[test]
    fn rotation_matches_word_rotation() {
        let w = Word::parse("a1.3 a2.4 a1.4 a3.4", 4).unwrap();
        assert_eq!(DualBraid::from_word(&w).unwrap().phi(1), DualBraid::from_word(&w.phi(1).unwrap()).unwrap());
    }

    #[test]
    fn a_word_round_trip() {
        let b = braid("a1.3 a2.4 a2.4 a1.2 a1.4 a1.2 a2.3 a3.4", 4);
        let w = b.to_a_word();
        assert_eq!(DualBraid::from_word(&w).unwrap(), b);
        assert!(oracle::equivalent(&w, &Word::parse("a1.3 a2.4 a2.4 a1.2 a1.4 a1.2 a2.3 a3.4", 4).unwrap()));
    }

    #[test]
    fn parabolic_tail() {
        // a_{1,2}^2 a_{1,3} a_{1,2}: the tail in B_2 is a_{1,2}.
        let mut b = braid("a1.2 a1.2 a1.3 a1.2", 3);
        let t = b.strip_parabolic(&[1, 2]);
        assert_eq!(t, vec![Simple::atom(3, 1, 2)]);
        assert_eq!(b, braid("a1.2 a1.2 a1.3", 3));
    }

    #[test]
    fn tails_and_divisibility() {
        let d2 = braid("a1.2 a2.3 a1.2 a2.3", 3);
        assert_eq!(d2.tail(2), braid("a1.2 a1.2", 3));
        assert!(d2.right_divisible_by_atom(1, 2));
        assert!(!braid("a1.2 a1.3", 3).right_divisible_by_atom(1, 2));
        assert!(!DualBraid::identity(3).right_divisible_by_atom(1, 2));
        assert_eq!(braid("a1.3", 4).tail(3), braid("a1.3", 4));
        assert!(braid("a1.3", 3).tail(2).is_identity());
        assert!(Simple::try_atom(3, 2, 1).is_err());
    }

    #[test]
    fn valuation_of_example_braid() {
        // v = a34 a23 a34 a12 a23 a23 a34 equals delta_4 a23 a12 a23 a24
        let (s, q) = braid("a3.4 a2.3 a3.4 a1.2 a2.3 a2.3 a3.4", 4).delta_valuation();
        assert_eq!(s, 1);
        assert_eq!(q, braid("a2.3 a1.2 a2.3 a2.4", 4));
        let (s, q) = braid("a1.2 a2.3 a3.4 a1.2 a2.3 a3.4", 4).delta_valuation();
        assert_eq!((s, q.is_identity()), (2, true));
    }

    #[test]
    fn left_greedy_of_delta_square() {
        let g = braid("a1.2 a2.3 a3.4 a1.2 a2.3 a3.4 a1.3", 4).left_greedy();
        assert_eq!(g.delta, 2);
        assert_eq!(g.factors, vec![Simple::atom(4, 1, 3)]);
    }
}
