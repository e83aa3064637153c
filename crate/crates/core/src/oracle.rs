//! Independent equivalence checks.
//!
//! [`ClassicalForm`] is the left normal form `Delta^k A_1 ... A_m` of the classical
//! Garside structure, with permutation braids as simple elements. It shares no
//! code with [`crate::garside`]. [`bfs_equivalent_small`] is a second, cruder
//! check that only applies braid relations to short words.

use std::collections::{HashSet, VecDeque};

use crate::words::{Letter, Word};

/// Permutation braid, stored as the final position of the strand starting at each position.
type Perm = Vec<u8>;

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn half_twist(n: usize) -> Perm {
    (0..n as u8).rev().collect()
}

fn is_identity(a: &Perm) -> bool {
    a.iter().enumerate().all(|(j, &x)| j == x as usize)
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (j, &x) in a.iter().enumerate() {
        inv[x as usize] = j as u8;
    }
    inv
}

/// `i` (0-based) is a first letter of `a`.
fn starts_with(a: &Perm, i: usize) -> bool {
    a[i] > a[i + 1]
}

/// `i` (0-based) is a last letter of `a`.
fn ends_with(a: &Perm, i: usize) -> bool {
    let inv = inverse(a);
    inv[i] > inv[i + 1]
}

/// `Delta^-1 a Delta`.
fn flip(a: &Perm) -> Perm {
    let n = a.len();
    (0..n).map(|j| (n - 1 - a[n - 1 - j] as usize) as u8).collect()
}

/// Makes the pair `(a, b)` left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let inv_a = inverse(a);
        let Some(i) = (0..n - 1).find(|&i| starts_with(b, i) && inv_a[i] < inv_a[i + 1]) else {
            return moved;
        };
        // a <- a s_i, b <- s_i b
        for x in a.iter_mut() {
            if *x as usize == i {
                *x += 1;
            } else if *x as usize == i + 1 {
                *x -= 1;
            }
        }
        b.swap(i, i + 1);
        moved = true;
    }
}

/// Left normal form of a braid in the classical Garside structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalForm {
    n: usize,
    inf: i64,
    factors: Vec<Perm>,
}

impl ClassicalForm {
    pub fn identity(n: usize) -> ClassicalForm {
        ClassicalForm { n, inf: 0, factors: Vec::new() }
    }

    /// Normal form of any word; non-Artin letters are expanded first.
    pub fn of(word: &Word) -> ClassicalForm {
        let mut form = ClassicalForm::identity(word.strands());
        for l in word.to_sigma().letters() {
            form.push_sigma(*l);
        }
        form
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// Exponent of the leading `Delta`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    /// Number of non-`Delta` factors.
    pub fn canonical_len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    fn push_sigma(&mut self, l: Letter) {
        let Letter::Sigma { i, inv } = l else { unreachable!("expanded to Artin letters") };
        let i = i as usize - 1;
        if inv {
            // x sigma_i^-1 = Delta^-1 flip(x) (Delta sigma_i^-1)
            for f in &mut self.factors {
                *f = flip(f);
            }
            self.inf -= 1;
            let c = (0..self.n)
                .map(|j| {
                    let x = self.n - 1 - j;
                    (if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }) as u8
                })
                .collect();
            self.push_simple(c);
        } else {
            let mut s = identity(self.n);
            s.swap(i, i + 1);
            self.push_simple(s);
        }
    }

    fn push_simple(&mut self, x: Perm) {
        if is_identity(&x) {
            return;
        }
        self.factors.push(x);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let delta = half_twist(self.n);
        let lead = self.factors.iter().take_while(|f| **f == delta).count();
        self.factors.drain(..lead);
        self.inf += lead as i64;
        while self.factors.last().is_some_and(is_identity) {
            self.factors.pop();
        }
        debug_assert!(self.is_normal(), "oracle pass left a non-normal form");
    }

    fn is_normal(&self) -> bool {
        let delta = half_twist(self.n);
        self.factors.iter().all(|f| !is_identity(f) && *f != delta)
            && self.factors.windows(2).all(|w| (0..self.n - 1).all(|i| !starts_with(&w[1], i) || ends_with(&w[0], i)))
    }
}

/// True when the two words represent the same braid.
pub fn equivalent(u: &Word, v: &Word) -> bool {
    let n = u.strands().max(v.strands());
    ClassicalForm::of(&u.widen(n)) == ClassicalForm::of(&v.widen(n))
}

/// True when the word represents the identity braid.
pub fn is_trivial(w: &Word) -> bool {
    ClassicalForm::of(w).is_identity()
}

/// Checks equivalence by exploring length non-increasing rewrites of `u^-1 v`.
///
/// Returns `Some(true)` when the empty word is reached, `Some(false)` when the
/// permutations or exponent sums differ, and `None` when the search gives up.
pub fn bfs_equivalent_small(u: &Word, v: &Word, budget: usize) -> Option<bool> {
    let n = u.strands().max(v.strands());
    let start: Vec<(u8, bool)> = u
        .inverse()
        .concat(v)
        .to_sigma()
        .free_reduce()
        .letters()
        .iter()
        .map(|l| match *l {
            Letter::Sigma { i, inv } => (i, inv),
            _ => unreachable!(),
        })
        .collect();
    let exponent: i64 = start.iter().map(|&(_, inv)| if inv { -1 } else { 1 }).sum();
    let mut perm: Vec<usize> = (0..n).collect();
    for &(i, _) in &start {
        perm.swap(i as usize - 1, i as usize);
    }
    if exponent != 0 || perm.iter().enumerate().any(|(j, &x)| j != x) {
        return Some(false);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        if w.is_empty() {
            return Some(true);
        }
        for next in rewrites(&w) {
            if seen.len() >= budget {
                return None;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    None
}

type Gen = (u8, bool);

fn rewrites(w: &[Gen]) -> Vec<Vec<Gen>> {
    let mut out = Vec::new();
    for k in 0..w.len() {
        if k + 1 < w.len() {
            let (x, y) = (w[k], w[k + 1]);
            if x.0 == y.0 && x.1 != y.1 {
                let mut v = w[..k].to_vec();
                v.extend_from_slice(&w[k + 2..]);
                out.push(v);
            }
            if x.0.abs_diff(y.0) >= 2 {
                let mut v = w.to_vec();
                v.swap(k, k + 1);
                out.push(v);
            }
        }
        if k + 2 < w.len() {
            if let Some(t) = triple(w[k], w[k + 1], w[k + 2]) {
                let mut v = w.to_vec();
                v[k..k + 3].copy_from_slice(&t);
                out.push(v);
            }
        }
    }
    out
}

/// Length three relations between adjacent generators.
fn triple(x: Gen, y: Gen, z: Gen) -> Option<[Gen; 3]> {
    let (i, j) = (x.0, y.0);
    if i.abs_diff(j) != 1 || z.0 != i {
        return None;
    }
    let g = |k: u8, inv: bool| (k, inv);
    Some(match (x.1, y.1, z.1) {
        // s_i s_j s_i = s_j s_i s_j and its inverse
        (false, false, false) => [g(j, false), g(i, false), g(j, false)],
        (true, true, true) => [g(j, true), g(i, true), g(j, true)],
        // s_i s_j s_i^-1 = s_j^-1 s_i s_j
        (false, false, true) => [g(j, true), g(i, false), g(j, false)],
        // s_i s_j^-1 s_i^-1 = s_j^-1 s_i^-1 s_j
        (false, true, true) => [g(j, true), g(i, true), g(j, false)],
        // s_i^-1 s_j s_i = s_j s_i s_j^-1
        (true, false, false) => [g(j, false), g(i, false), g(j, true)],
        // s_i^-1 s_j^-1 s_i = s_j s_i^-1 s_j^-1
        (true, true, false) => [g(j, false), g(i, true), g(j, true)],
        _ => return None,
    })
}
