mod common;

use std::cmp::Ordering;

use common::{any_sigma_word, sigma_word};
use dualbraid::oracle::{equivalent, is_trivial};
use dualbraid::sigmadef::{compare, nf, sign};
use dualbraid::{Letter, SigmaClass, Word};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nf_is_a_definite_representative(w in any_sigma_word(2, 6, 30)) {
        let r = nf(&w).unwrap();
        prop_assert!(equivalent(&w, &r.word));
        prop_assert!(!matches!(r.sigma().classify_sigma(), SigmaClass::Mixed(_)));
        prop_assert_eq!(r.sign() == 0, is_trivial(&w));
        prop_assert!(r.word.len() <= 3 * r.rnf.n_length());
    }

    #[test]
    fn nf_depends_only_on_the_braid(w in any_sigma_word(2, 6, 20), pos in any::<prop::sample::Index>(), i in 1usize..6) {
        let n = w.strands();
        let i = 1 + (i - 1) % (n - 1);
        let mut letters = w.letters().to_vec();
        let k = pos.index(letters.len() + 1);
        letters.splice(k..k, [Letter::sigma(i), Letter::sigma(i).inverse()]);
        let padded = Word::new(n, letters).unwrap();
        prop_assert_eq!(nf(&padded).unwrap().word, nf(&w).unwrap().word);
    }

    #[test]
    fn definite_words_keep_their_sign(w in any_sigma_word(2, 6, 20)) {
        if let Some(s) = w.classify_sigma().sign() {
            prop_assert_eq!(sign(&w).unwrap(), s);
        }
    }

    #[test]
    fn sign_is_antisymmetric(w in any_sigma_word(2, 6, 25)) {
        prop_assert_eq!(sign(&w.inverse()).unwrap(), -sign(&w).unwrap());
    }

    #[test]
    fn sign_ignores_extra_strands(w in any_sigma_word(2, 5, 20), extra in 1usize..3) {
        prop_assert_eq!(sign(&w.widen(w.strands() + extra)).unwrap(), sign(&w).unwrap());
    }

    #[test]
    fn compare_is_an_order(
        (a, b, c) in (2usize..=5).prop_flat_map(|n| (sigma_word(n, 10), sigma_word(n, 10), sigma_word(n, 10))),
    ) {
        let ab = compare(&a, &b).unwrap();
        prop_assert_eq!(compare(&b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, equivalent(&a, &b));
        let bc = compare(&b, &c).unwrap();
        if ab == bc {
            prop_assert_eq!(compare(&a, &c).unwrap(), ab);
        }
        // The order is invariant under left multiplication.
        prop_assert_eq!(compare(&c.concat(&a), &c.concat(&b)).unwrap(), ab);
    }
}
