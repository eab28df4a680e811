use num_rational::Rational64;
use proptest::prelude::*;

use unipotent_bc::block::{principal_block_members, UnipCharLabel};
use unipotent_bc::decomp::{cut_to_block, duality, hc_induce, hc_restrict};
use unipotent_bc::dl::{almost_character, family_of, mn_value, SignedCycleType};
use unipotent_bc::fock::{kashiwara_e, kashiwara_f, series_charge, Residue};
use unipotent_bc::symbol::{compare_keys, ChargedSymbol, Dominance};
use unipotent_bc::{Bipartition, BlockContext, Partition, Regime, VirtualCharacter};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = Bipartition> {
    (partition(4, 3), partition(4, 3)).prop_map(|(a, b)| Bipartition::new(a, b))
}

fn cycle_type(m: u32) -> impl Strategy<Value = SignedCycleType> {
    // Split m into cycle lengths and give each a sign.
    prop::collection::vec((1..=m.max(1), any::<bool>()), 0..=m as usize).prop_map(move |cs| {
        let mut left = m;
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (k, s) in cs {
            let k = k.min(left);
            if k == 0 {
                break;
            }
            left -= k;
            if s {
                pos.push(k)
            } else {
                neg.push(k)
            }
        }
        pos.extend(std::iter::repeat_n(1, left as usize));
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType::new(Partition::new(pos).unwrap(), Partition::new(neg).unwrap())
    })
}

proptest! {
    #[test]
    fn star_is_an_involution(bp in bipartition()) {
        prop_assert_eq!(bp.star().star(), bp);
    }

    #[test]
    fn sign_twist((bp, w) in bipartition().prop_flat_map(|bp| {
        let m = bp.size();
        (Just(bp), cycle_type(m))
    })) {
        prop_assert_eq!(mn_value(&bp.star(), &w), w.sign() * mn_value(&bp, &w));
    }

    #[test]
    fn crystal_operators_are_inverse(bp in bipartition(), d in 2u32..7, t in 0u32..3, i in 0i64..7) {
        let s = series_charge(t, d);
        let r = Residue::new(i, d);
        if let Some(up) = kashiwara_f(&bp, s, r) {
            prop_assert_eq!(kashiwara_e(&up, s, r), Some(bp.clone()));
        }
        if let Some(down) = kashiwara_e(&bp, s, r) {
            prop_assert_eq!(kashiwara_f(&down, s, r), Some(bp));
        }
    }

    #[test]
    fn cohooks_can_be_removed_again(bp in bipartition(), t in 0u32..3, e in 1u32..5) {
        let sym = ChargedSymbol::of(bp, t);
        for bigger in sym.add_cohooks(e) {
            prop_assert!(bigger.d_cohooks(e).contains(&sym));
        }
    }

    #[test]
    fn dominance_is_antisymmetric(a in bipartition(), b in bipartition(), t in 0u32..3) {
        let ka = ChargedSymbol::of(a, t).family_key();
        let kb = ChargedSymbol::of(b, t).family_key();
        let flipped = match compare_keys(&kb, &ka) {
            Dominance::Greater => Dominance::Less,
            Dominance::Less => Dominance::Greater,
            d => d,
        };
        prop_assert_eq!(compare_keys(&ka, &kb), flipped);
    }

    #[test]
    fn almost_characters_have_norm_one(bp in bipartition()) {
        let v = almost_character(&bp);
        let norm: Rational64 = v.terms().map(|(_, c)| c * c).sum();
        prop_assert_eq!(norm, Rational64::from_integer(1));
    }

    #[test]
    fn family_members_share_the_key(bp in bipartition(), t in 0u32..3) {
        let l = UnipCharLabel::new(t, bp);
        let fam = family_of(&l);
        prop_assert!(fam.index_of(&l).is_some());
        prop_assert_eq!(fam.len(), 1usize << (2 * fam.a));
        for m in &fam.members {
            prop_assert_eq!(m.family_key(), l.family_key());
        }
    }

    // Frobenius reciprocity for Harish-Chandra induction on basis characters.
    #[test]
    fn induction_is_adjoint_to_restriction(b in bipartition(), k in any::<prop::sample::Index>(), t in 0u32..2) {
        let boxes = b.removable_boxes();
        prop_assume!(!boxes.is_empty());
        let a = b.remove_box(boxes[k.index(boxes.len())]);
        let x = VirtualCharacter::from_label(UnipCharLabel::new(t, a));
        let y = VirtualCharacter::from_label(UnipCharLabel::new(t, b));
        let pair = |u: &VirtualCharacter, v: &VirtualCharacter| -> Rational64 {
            u.terms().map(|(l, c)| c * v.coeff(l)).sum()
        };
        prop_assert_eq!(pair(&hc_induce(&x), &y), pair(&x, &hc_restrict(&y)));
    }

    #[test]
    fn virtual_character_arithmetic(a in bipartition(), b in bipartition(), x in -5i64..5, y in -5i64..5) {
        let u = VirtualCharacter::from_terms([(UnipCharLabel::new(0, a.clone()), x)]);
        let v = VirtualCharacter::from_terms([(UnipCharLabel::new(1, b), y), (UnipCharLabel::new(0, a), 1)]);
        prop_assert_eq!((u.clone() + v.clone()) - v.clone(), u.clone());
        prop_assert_eq!(duality(&duality(&v)), v);
    }
}

#[test]
fn cut_to_block_is_idempotent() {
    for n in 2..5 {
        let ctx = BlockContext::new(n, Regime::Generic);
        let mut v = VirtualCharacter::zero();
        for (k, l) in principal_block_members(n).unwrap().into_iter().enumerate() {
            v.add_term(l, Rational64::from_integer(k as i64 - 3));
        }
        v.add_term(
            UnipCharLabel::new(0, "1.-".parse().unwrap()),
            Rational64::from_integer(1),
        );
        let once = cut_to_block(&v, &ctx).unwrap();
        assert_eq!(cut_to_block(&once, &ctx).unwrap(), once);
    }
}
