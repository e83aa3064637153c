mod common;

use common::{any_band_word, any_sigma_word};
use dualbraid::garside::DualBraid;
use dualbraid::oracle::equivalent;
use dualbraid::rotating::{read_splitting, rnf_general, rnf_positive_word, splitting_of};
use dualbraid::{Letter, Word};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rnf_represents_the_input(w in any_sigma_word(2, 6, 25)) {
        let r = rnf_general(&w);
        prop_assert!(equivalent(&w, &r.to_word()));
        prop_assert!(r.word.is_positive_band_word());
        prop_assert!(r.n_length() <= (w.strands() - 1) * w.sigma_len());
    }

    #[test]
    fn rnf_depends_only_on_the_braid(w in any_sigma_word(2, 6, 20), pos in any::<prop::sample::Index>(), i in 1usize..6) {
        let n = w.strands();
        let i = 1 + (i - 1) % (n - 1);
        let mut letters = w.letters().to_vec();
        let k = pos.index(letters.len() + 1);
        letters.splice(k..k, [Letter::sigma(i).inverse(), Letter::sigma(i)]);
        let padded = Word::new(n, letters).unwrap();
        let r = rnf_general(&w);
        prop_assert_eq!(rnf_general(&padded), r.clone());
        prop_assert_eq!(rnf_general(&r.to_word()), r);
    }

    #[test]
    fn depth_is_minimal(w in any_sigma_word(2, 6, 20)) {
        let r = rnf_general(&w);
        if r.depth > 0 {
            prop_assert_eq!(DualBraid::from_word(&r.word).unwrap().inf(), 0);
        }
    }

    #[test]
    fn splittings_read_back(w in any_band_word(3, 7, 25)) {
        let beta = DualBraid::from_word(&w).unwrap();
        let s = splitting_of(&beta);
        let normal = rnf_positive_word(&w).unwrap();
        prop_assert_eq!(s.compose(), normal.clone());
        prop_assert_eq!(read_splitting(&normal).unwrap(), s.clone());
        for e in s.entries() {
            prop_assert_eq!(&rnf_positive_word(e).unwrap(), e);
        }
        if s.breadth() > 0 {
            prop_assert!(!s.entry(s.breadth()).is_empty());
        }
    }

    #[test]
    fn rotation_preserves_the_braid(w in any_band_word(3, 6, 15), k in 0i64..6) {
        let lhs = rnf_positive_word(&w.phi(k).unwrap()).unwrap();
        let rhs = rnf_positive_word(&w).unwrap().phi(k).unwrap();
        prop_assert_eq!(DualBraid::from_word(&lhs).unwrap(), DualBraid::from_word(&rhs).unwrap());
        prop_assert_eq!(rnf_positive_word(&rhs).unwrap(), lhs);
    }
}
