use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use lmod_core::homology::{block_form, eval_psi, eval_psi_mod};
use lmod_core::rewrite::{Direction, RewriteRule};
use lmod_core::sl2::{gcd_sl2, sl2_decompose, Sl2Gen, Sl2Word};
use lmod_core::word::{Syllable, Symbol, TwistWord};
use lmod_core::ExactMat3;

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        Just(Symbol::A),
        Just(Symbol::B),
        Just(Symbol::C),
        Just(Symbol::I)
    ]
}

fn syllables(max_len: usize) -> impl Strategy<Value = Vec<Syllable>> {
    prop::collection::vec(
        (symbol(), prop_oneof![-4i64..=-1, 1i64..=4]).prop_map(|(s, e)| Syllable::new(s, e)),
        0..max_len,
    )
}

fn word() -> impl Strategy<Value = TwistWord> {
    syllables(12).prop_map(TwistWord::from_syllables)
}

fn sl2_word() -> impl Strategy<Value = Sl2Word> {
    prop::collection::vec(
        (
            prop_oneof![Just(Sl2Gen::SA), Just(Sl2Gen::SB)],
            prop_oneof![-6i64..=-1, 1i64..=6],
        ),
        0..16,
    )
    .prop_map(Sl2Word::from_syllables)
}

proptest! {
    #[test]
    fn free_reduction_is_idempotent(raw in syllables(16)) {
        let w = TwistWord::from_syllables(raw);
        prop_assert_eq!(TwistWord::from_syllables(w.syllables().to_vec()), w.clone());
        for pair in w.syllables().windows(2) {
            prop_assert_ne!(pair[0].symbol, pair[1].symbol);
        }
        prop_assert!(w.syllables().iter().all(|s| s.exp != 0));
    }

    #[test]
    fn multiplication_is_associative(x in word(), y in word(), z in word()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_empty());
    }

    #[test]
    fn display_parses_back(w in word()) {
        let back: TwistWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn psi_is_a_homomorphism(x in word(), y in word()) {
        prop_assert_eq!(eval_psi(&x.mul(&y)), &eval_psi(&x) * &eval_psi(&y));
        prop_assert!((&eval_psi(&x.inverse()) * &eval_psi(&x)).is_identity());
    }

    #[test]
    fn exact_inverse(w in word()) {
        let m = eval_psi(&w);
        prop_assert!((&m.inverse().unwrap() * &m).is_identity());
        prop_assert_eq!(m.inverse().unwrap(), eval_psi(&w.inverse()));
    }

    #[test]
    fn images_have_block_shape(w in word()) {
        let m = eval_psi(&w);
        let f = block_form(&m).unwrap();
        prop_assert_eq!(f.to_matrix(), m);
    }

    #[test]
    fn reduction_commutes_with_evaluation(w in word(), k in 2u32..=12) {
        prop_assert_eq!(eval_psi_mod(&w, k).unwrap(), eval_psi(&w).reduce_mod(k));
    }

    #[test]
    fn matrix_text_round_trips(w in word()) {
        let m = eval_psi(&w);
        let rows = m.rows();
        let text = rows
            .iter()
            .flat_map(|r| r.iter().map(|x| x.to_string()))
            .collect::<Vec<_>>()
            .join(", ");
        prop_assert_eq!(text.parse::<ExactMat3>().unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rewriting_preserves_psi(
        u in word(),
        v in word(),
        rule_idx in 0usize..5,
        backward in any::<bool>(),
    ) {
        let rule = &RewriteRule::all()[rule_idx];
        let dir = if backward { Direction::Backward } else { Direction::Forward };
        let (pattern, _) = rule.oriented(dir);
        let w = u.mul(pattern).mul(&v);
        let before = eval_psi(&w);
        if w.unit_len() == u.unit_len() + pattern.unit_len() + v.unit_len()
            && u.syllables().last().map(|s| s.symbol) != pattern.syllables().first().map(|s| s.symbol)
        {
            prop_assert!(rule.matches_at(&w, u.unit_len(), dir));
        }
        for pos in rule.match_positions(&w, dir) {
            let after = rule.apply(&w, pos, dir).unwrap();
            prop_assert_eq!(eval_psi(&after), before.clone());
        }
    }

    #[test]
    fn sl2_round_trip(w in sl2_word()) {
        let m = w.eval();
        let d = sl2_decompose(&m).unwrap();
        prop_assert_eq!(d.eval(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn gcd_sl2_fuzz(m in -1_000_000i64..=1_000_000, n in -1_000_000i64..=1_000_000) {
        let (bm, bn) = (BigInt::from(m), BigInt::from(n));
        let (ell, a) = gcd_sl2(&bm, &bn);
        prop_assert_eq!(&ell, &bm.gcd(&bn));
        prop_assert!(a.is_sl2());
        prop_assert_eq!(a.apply_row(&[bm, bn]), [BigInt::from(0), ell]);
    }
}
