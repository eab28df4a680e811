//! Checks against values computed by independent means: counting formulas, the
//! hook-length formula, class sizes from the group itself, and the principal
//! series of the trivial Deligne–Lusztig character.

use num_rational::Rational64;
use unipotent_bc::block::{labels_of_rank, principal_block_members};
use unipotent_bc::dl::{class_sizes, dl_character_full, mn_value, Element, SignedCycleType};
use unipotent_bc::partition::bipartitions_of;

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// Irreducible characters of G(d,1,2) are d-multipartitions of 2.
#[test]
fn block_size_matches_complex_reflection_group() {
    for n in 2..15u32 {
        let d = 2 * n;
        let multipartitions = 2 * d + d * (d - 1) / 2;
        assert_eq!(
            principal_block_members(n).unwrap().len() as u32,
            multipartitions
        );
    }
}

#[test]
fn identity_values_are_dimensions() {
    for m in 0..8u32 {
        let id = SignedCycleType::parse(&vec!["1"; m as usize].join(","), "").unwrap();
        for bp in bipartitions_of(m) {
            let a = bp.first.size() as u128;
            let dim = binomial(m as u128, a) * bp.first.dimension() * bp.second.dimension();
            assert_eq!(mn_value(&bp, &id) as u128, dim, "{bp}");
        }
    }
}

#[test]
fn column_orthogonality() {
    for m in 1..=3u32 {
        let sizes = class_sizes(m as usize);
        let order: usize = sizes.values().sum();
        let bps = bipartitions_of(m);
        for a in &bps {
            for b in &bps {
                let s: i64 = sizes
                    .iter()
                    .map(|(w, &c)| c as i64 * mn_value(a, w) * mn_value(b, w))
                    .sum();
                let want = if a == b { order as i64 } else { 0 };
                assert_eq!(s, want, "{a} {b}");
            }
        }
    }
}

// R_1 is the permutation character on the flag variety: each principal-series
// character appears with the degree of its Weyl group character, nothing else does.
#[test]
fn trivial_torus_gives_principal_series() {
    for m in 1..7u32 {
        let id = SignedCycleType::parse(&vec!["1"; m as usize].join(","), "").unwrap();
        let r1 = dl_character_full(&id);
        for l in labels_of_rank(m) {
            let want = if l.t == 0 { mn_value(&l.bp, &id) } else { 0 };
            assert_eq!(r1.coeff(&l), Rational64::from_integer(want), "{l}");
        }
    }
}

// Orthogonality of Deligne–Lusztig characters: (1/|W|) Σ_w <R_w, R_w> = number of
// principal series characters, since the almost characters are orthonormal.
#[test]
fn average_norm_of_deligne_lusztig_characters() {
    for m in 1..=3u32 {
        let sizes = class_sizes(m as usize);
        let order: i64 = sizes.values().map(|&c| c as i64).sum();
        let mut total = Rational64::from_integer(0);
        for (w, &c) in &sizes {
            let r = dl_character_full(w);
            let norm: Rational64 = r.terms().map(|(_, x)| x * x).sum();
            total += norm * Rational64::from_integer(c as i64);
        }
        assert_eq!(
            total / Rational64::from_integer(order),
            Rational64::from_integer(bipartitions_of(m).len() as i64)
        );
    }
}

#[test]
fn coxeter_square_class() {
    for n in 2..8u32 {
        assert_eq!(
            Element::C2.cycle_type(n),
            SignedCycleType::negative(&[n, n])
        );
    }
}

#[test]
fn labels_of_rank_count_unipotent_characters() {
    // Known totals for Sp_{2m}: 1, 2, 6, 12, 25, 46.
    let want = [1, 2, 6, 12, 25, 46];
    for (m, &w) in want.iter().enumerate() {
        assert_eq!(labels_of_rank(m as u32).len(), w, "m={m}");
    }
}
