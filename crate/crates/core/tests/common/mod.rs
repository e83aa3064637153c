#![allow(dead_code)]

use dualbraid::{Letter, Word};
use proptest::prelude::*;

/// Signed Artin word on `n` strands.
pub fn sigma_word(n: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..n, any::<bool>()), 0..=maxlen).prop_map(move |v| {
        let letters = v.into_iter().map(|(i, inv)| if inv { Letter::sigma(i).inverse() } else { Letter::sigma(i) });
        Word::new(n, letters.collect()).unwrap()
    })
}

/// Signed Artin word on a random strand count in `lo..=hi`.
pub fn any_sigma_word(lo: usize, hi: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    (lo..=hi).prop_flat_map(move |n| sigma_word(n, maxlen))
}

fn band(n: usize) -> impl Strategy<Value = Letter> {
    (1..n).prop_flat_map(move |p| (Just(p), p + 1..=n)).prop_map(|(p, q)| Letter::a(p, q))
}

/// Positive band word on `n` strands.
pub fn band_word(n: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(band(n), 0..=maxlen).prop_map(move |v| Word::new(n, v).unwrap())
}

/// Positive band word on a random strand count in `lo..=hi`.
pub fn any_band_word(lo: usize, hi: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    (lo..=hi).prop_flat_map(move |n| band_word(n, maxlen))
}

/// Word mixing band and `d` letters of both signs on `n` strands.
pub fn ad_word(n: usize, maxlen: usize) -> impl Strategy<Value = Word> {
    let letter = (1..n, any::<bool>(), any::<bool>())
        .prop_flat_map(move |(p, d, inv)| (Just(p), p + 1..=n, Just(d), Just(inv)))
        .prop_map(|(p, q, d, inv)| {
            let l = if d { Letter::d(p, q) } else { Letter::a(p, q) };
            if inv {
                l.inverse()
            } else {
                l
            }
        });
    prop::collection::vec(letter, 0..=maxlen).prop_map(move |v| Word::new(n, v).unwrap())
}
