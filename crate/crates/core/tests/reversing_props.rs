mod common;

use common::band_word;
use dualbraid::garside::DualBraid;
use dualbraid::oracle::equivalent;
use dualbraid::reversing::{
    applicable_positions, dangerous_times_ladder, push_through_splitting, reverse_all, reverse_all_traced, reverse_at,
    DangerousWord,
};
use dualbraid::rotating::{splitting_of, Splitting};
use dualbraid::{Letter, Word};
use proptest::prelude::*;

/// A dangerous prefix followed by a positive band word on `n - 1` strands.
fn reversible(n: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    let indices = prop::collection::vec(1..=n - 2, 0..4);
    (indices, band_word(n - 1, maxlen)).prop_map(move |(mut idx, w)| {
        idx.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = DangerousWord::new(n, idx).unwrap().to_word();
        out.extend_from(&w.widen(n));
        out
    })
}

/// Interleaved moving letters `d_{p,n-1}^-1` and positive band letters on `n - 1` strands.
fn interleaved(n: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    let letter = prop_oneof![
        (1..=n - 2).prop_map(move |p| Letter::d(p, n - 1).inverse()),
        (1..n - 1).prop_flat_map(move |p| (Just(p), p + 1..=n - 1)).prop_map(|(p, q)| Letter::a(p, q)),
    ];
    prop::collection::vec(letter, 0..=maxlen).prop_map(move |v| Word::new(n, v).unwrap())
}

/// A splitting of breadth at least 3 and a dangerous word for its top entry.
fn splitting_and_dangerous(n: usize) -> impl Strategy<Value = (Splitting, DangerousWord)> {
    (band_word(n, 30), prop::collection::vec(any::<prop::sample::Index>(), 0..3)).prop_filter_map(
        "breadth below 3",
        move |(w, picks)| {
            let s = splitting_of(&DualBraid::from_word(&w).unwrap());
            if s.breadth() < 3 {
                return None;
            }
            let x = s.entry(s.breadth()).last()?.span().0;
            if x + 3 > n {
                return Some((s, DangerousWord::empty(n - 1)));
            }
            let mut idx: Vec<usize> = picks.iter().map(|i| x + i.index(n - 2 - x)).collect();
            idx.sort_unstable_by(|a, b| b.cmp(a));
            idx.push(x);
            Some((s, DangerousWord::new(n - 1, idx).unwrap()))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn any_order_reaches_the_same_word(
        w in (4usize..=7).prop_flat_map(|n| reversible(n, 12)),
        choices in prop::collection::vec(any::<prop::sample::Index>(), 200),
    ) {
        let fixed = reverse_all(&w).unwrap();
        let mut cur = w.clone();
        let mut steps = 0;
        loop {
            let positions = applicable_positions(&cur);
            if positions.is_empty() {
                break;
            }
            let pos = positions[choices[steps % choices.len()].index(positions.len())];
            cur = reverse_at(&cur, pos).unwrap().0;
            steps += 1;
        }
        prop_assert_eq!(cur, fixed.word);
        prop_assert_eq!(steps, fixed.steps);
    }

    #[test]
    fn every_step_is_an_equivalence(w in (4usize..=6).prop_flat_map(|n| interleaved(n, 10))) {
        let n = w.strands();
        let (r, trace) = reverse_all_traced(&w).unwrap();
        prop_assert!(applicable_positions(&r.word).is_empty());
        prop_assert!(equivalent(&w, &r.word));
        for step in trace {
            prop_assert!(equivalent(&Word::new(n, step.lhs.to_vec()).unwrap(), &Word::new(n, step.rhs.clone()).unwrap()));
        }
    }

    #[test]
    fn dangerous_words_times_ladders_are_walls((s, u) in (4usize..=7).prop_flat_map(splitting_and_dangerous)) {
        let n = s.strands();
        let ladder = s.entry(s.breadth() - 1);
        prop_assume!(!ladder.is_empty());
        let rotated = u.rotate_up();
        let product = dangerous_times_ladder(&rotated, ladder).unwrap();
        let lhs = rotated.to_word().concat(&ladder.widen(n));
        prop_assert!(equivalent(&lhs, product.wall.word()));
        prop_assert!(product.wall.d_part().len() <= rotated.len() + 1);
        prop_assert!(product.steps <= rotated.len() * ladder.len());
    }

    #[test]
    fn push_through_stays_within_bounds((s, u) in (4usize..=7).prop_flat_map(splitting_and_dangerous)) {
        let b = s.breadth();
        let out = push_through_splitting(&u, &s, 3).unwrap();
        let entries: usize = (3..b).map(|k| s.entry(k).len()).sum();
        prop_assert!(out.word.len() + out.dangerous.len() + b <= 3 * entries + u.len() + 3);
        prop_assert!(out.dangerous.len() <= u.len() + b);
    }
}
