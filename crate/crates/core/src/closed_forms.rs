//! Closed formulas for the principal Φ₂ₙ-block, parametrized by `n`: hook tables,
//! families, almost characters, Deligne–Lusztig characters and the Uₖ.
//!
//! Everything here is reference data. The rest of the crate computes the same
//! objects from first principles and the tests compare.

use num_rational::Rational64;

use crate::block::UnipCharLabel;
use crate::character::VirtualCharacter;
use crate::decomp::lab;
use crate::partition::Bipartition;

type B = [(i64, i64)];

fn ps(a: &B, b: &B) -> UnipCharLabel {
    lab(0, a, b)
}

fn b2(a: &B, b: &B) -> UnipCharLabel {
    lab(1, a, b)
}

fn b6(a: &B, b: &B) -> UnipCharLabel {
    lab(2, a, b)
}

fn bp(a: &B, b: &B) -> Bipartition {
    ps(a, b).bp
}

fn vc(terms: Vec<(UnipCharLabel, i64)>) -> VirtualCharacter {
    VirtualCharacter::from_terms(terms)
}

fn half(terms: Vec<(UnipCharLabel, i64)>) -> VirtualCharacter {
    vc(terms).scale(Rational64::new(1, 2))
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One row of a hook table: removing a single hook of the given length from `bp`
/// leaves `core`, with sign exponent `h` (leg length, plus one in the second
/// component).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookRow {
    pub bp: Bipartition,
    pub h: i64,
    pub core: Bipartition,
    pub core_value: i64,
    pub value: i64,
}

fn row(bp: Bipartition, h: i64, core: &Bipartition, core_value: i64, value: i64) -> HookRow {
    HookRow {
        bp,
        h,
        core: core.clone(),
        core_value,
        value,
    }
}

/// Bipartitions with a `(2n−1)`-hook whose family meets the block, with their
/// values at `vₙ`.
pub fn vn_hook_table(n: u32) -> Vec<HookRow> {
    let n = n as i64;
    let m = 2 * n;
    let c1 = bp(&[(1, 1)], &[]);
    let c2 = bp(&[], &[(1, 1)]);
    let e = sgn(n - 1);
    vec![
        row(bp(&[(m, 1)], &[]), 0, &c1, 1, 1),
        row(bp(&[(n, 1), (2, 1), (1, n - 2)], &[]), n - 1, &c1, 1, e),
        row(bp(&[(1, m)], &[]), m - 2, &c1, 1, 1),
        row(
            bp(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]),
            n - 2 + 1,
            &c1,
            1,
            e,
        ),
        row(bp(&[(1, 1)], &[(1, m - 1)]), m - 2 + 1, &c1, 1, -1),
        row(bp(&[], &[(1, m)]), m - 2 + 1, &c2, -1, 1),
        row(
            bp(&[], &[(n, 1), (2, 1), (1, n - 2)]),
            n - 1 + 1,
            &c2,
            -1,
            e,
        ),
        row(bp(&[], &[(m, 1)]), 1, &c2, -1, 1),
        row(bp(&[(n - 1, 1), (1, n)], &[(1, 1)]), n, &c2, -1, e),
        row(bp(&[(m - 1, 1)], &[(1, 1)]), 0, &c2, -1, -1),
    ]
}

/// Bipartitions with `(2n−2)`-core `2.` or `1².`, with their values at `wₙ`.
pub fn wn_hook_table(n: u32) -> Vec<HookRow> {
    let n = n as i64;
    let m = 2 * n;
    let c2 = bp(&[(2, 1)], &[]);
    let c11 = bp(&[(1, 2)], &[]);
    let mut out = vec![row(bp(&[(m, 1)], &[]), 0, &c2, 1, 1)];
    for i in 3..=m - 3 {
        out.push(row(
            bp(&[(i, 1), (3, 1), (1, m - i - 3)], &[]),
            m - i - 2,
            &c2,
            1,
            sgn(i),
        ));
    }
    out.push(row(bp(&[(2, 1), (1, m - 2)], &[]), m - 3, &c2, 1, -1));
    for j in 1..=m - 2 {
        out.push(row(
            bp(&[(2, 1)], &[(j, 1), (1, m - 2 - j)]),
            m - 2 - j + 1,
            &c2,
            1,
            sgn(j - 1),
        ));
    }
    out.push(row(bp(&[(1, m)], &[]), m - 3, &c11, -1, 1));
    for k in 2..=m - 4 {
        out.push(row(
            bp(&[(k, 1), (2, 2), (1, m - k - 4)], &[]),
            m - k - 2,
            &c11,
            -1,
            sgn(k - 1),
        ));
    }
    out.push(row(bp(&[(m - 1, 1), (1, 1)], &[]), 0, &c11, -1, -1));
    for l in 1..=m - 2 {
        out.push(row(
            bp(&[(1, 2)], &[(l, 1), (1, m - 2 - l)]),
            m - 2 - l + 1,
            &c11,
            -1,
            sgn(l),
        ));
    }
    out
}

/// The four-element families occurring in `bR_{vₙ}`, special member first.
pub fn vn_families(n: u32) -> Vec<(Bipartition, Vec<UnipCharLabel>)> {
    let n = n as i64;
    let m = 2 * n;
    let f1 = vec![
        ps(&[(n, 1)], &[(2, 1), (1, n - 2)]),
        ps(&[(n, 1), (2, 1), (1, n - 2)], &[]),
        ps(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]),
        b2(&[(1, n - 2)], &[(n - 1, 1), (1, 1)]),
    ];
    let f2 = vec![
        ps(&[(1, 1)], &[(1, m - 1)]),
        ps(&[(1, m)], &[]),
        ps(&[], &[(2, 1), (1, m - 2)]),
        b2(&[(1, m - 2)], &[]),
    ];
    let f3 = vec![
        ps(&[(n - 1, 1), (1, 1)], &[(1, n)]),
        ps(&[], &[(n, 1), (2, 1), (1, n - 2)]),
        ps(&[(n - 1, 1), (1, n)], &[(1, 1)]),
        b2(&[(2, 1), (1, n - 2)], &[(n - 2, 1)]),
    ];
    let f4 = vec![
        ps(&[(m - 1, 1)], &[(1, 1)]),
        ps(&[], &[(m, 1)]),
        ps(&[(m - 1, 1), (1, 1)], &[]),
        b2(&[], &[(m - 2, 1)]),
    ];
    vec![
        (bp(&[(n, 1), (2, 1), (1, n - 2)], &[]), f1.clone()),
        (bp(&[(1, m)], &[]), f2.clone()),
        (bp(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]), f1),
        (bp(&[(1, 1)], &[(1, m - 1)]), f2),
        (bp(&[], &[(n, 1), (2, 1), (1, n - 2)]), f3.clone()),
        (bp(&[], &[(m, 1)]), f4.clone()),
        (bp(&[(n - 1, 1), (1, n)], &[(1, 1)]), f3),
        (bp(&[(m - 1, 1)], &[(1, 1)]), f4),
    ]
}

/// The four-element families occurring in `bR_{wₙ}`, up to duality.
pub fn wn_families(n: u32) -> Vec<(Bipartition, Vec<UnipCharLabel>)> {
    let n = n as i64;
    let m = 2 * n;
    let g1 = vec![
        ps(&[(n, 1)], &[(3, 1), (1, n - 3)]),
        ps(&[(n, 1), (3, 1), (1, n - 3)], &[]),
        ps(&[(2, 1)], &[(n + 1, 1), (1, n - 3)]),
        b2(&[(1, n - 3)], &[(n - 1, 1), (2, 1)]),
    ];
    let g2 = vec![
        ps(&[(2, 1)], &[(1, m - 2)]),
        ps(&[], &[(3, 1), (1, m - 3)]),
        ps(&[(2, 1), (1, m - 2)], &[]),
        b2(&[(1, m - 3)], &[(1, 1)]),
    ];
    let g3 = vec![
        ps(&[(1, 1)], &[(1, m - 1)]),
        ps(&[(1, m)], &[]),
        ps(&[], &[(2, 1), (1, m - 2)]),
        b2(&[(1, m - 2)], &[]),
    ];
    let g4 = vec![
        ps(&[(m - 1, 1)], &[(1, 1)]),
        ps(&[], &[(m, 1)]),
        ps(&[(m - 1, 1), (1, 1)], &[]),
        b2(&[], &[(m - 2, 1)]),
    ];
    vec![
        (bp(&[(n, 1), (3, 1), (1, n - 3)], &[]), g1.clone()),
        (bp(&[(2, 1), (1, m - 2)], &[]), g2.clone()),
        (bp(&[(2, 1)], &[(n + 1, 1), (1, n - 3)]), g1),
        (bp(&[(2, 1)], &[(1, m - 2)]), g2),
        (bp(&[(1, m)], &[]), g3),
        (bp(&[(m - 1, 1), (1, 1)], &[]), g4),
    ]
}

/// Almost characters cut to the block, for the bipartitions of the `vₙ` table.
pub fn vn_almost_characters(n: u32) -> Vec<(Bipartition, VirtualCharacter)> {
    let n = n as i64;
    let m = 2 * n;
    let a = ps(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]);
    let a2 = b2(&[(1, n - 2)], &[(n - 1, 1), (1, 1)]);
    let s = ps(&[(1, m)], &[]);
    let t = ps(&[], &[(2, 1), (1, m - 2)]);
    let c = ps(&[(n - 1, 1), (1, n)], &[(1, 1)]);
    let c2 = b2(&[(2, 1), (1, n - 2)], &[(n - 2, 1)]);
    let d = ps(&[], &[(m, 1)]);
    let d2 = ps(&[(m - 1, 1), (1, 1)], &[]);
    vec![
        (
            bp(&[(n, 1), (2, 1), (1, n - 2)], &[]),
            half(vec![(a.clone(), -1), (a2.clone(), -1)]),
        ),
        (
            bp(&[(1, m)], &[]),
            half(vec![(s.clone(), 1), (t.clone(), -1)]),
        ),
        (
            bp(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]),
            half(vec![(a, 1), (a2, -1)]),
        ),
        (bp(&[(1, 1)], &[(1, m - 1)]), half(vec![(s, 1), (t, 1)])),
        (
            bp(&[], &[(n, 1), (2, 1), (1, n - 2)]),
            half(vec![(c.clone(), -1), (c2.clone(), -1)]),
        ),
        (
            bp(&[], &[(m, 1)]),
            half(vec![(d.clone(), 1), (d2.clone(), -1)]),
        ),
        (
            bp(&[(n - 1, 1), (1, n)], &[(1, 1)]),
            half(vec![(c, 1), (c2, -1)]),
        ),
        (bp(&[(m - 1, 1)], &[(1, 1)]), half(vec![(d2, 1), (d, 1)])),
    ]
}

/// Almost characters cut to the block, for the bipartitions of the `wₙ` table.
pub fn wn_almost_characters(n: u32) -> Vec<(Bipartition, VirtualCharacter)> {
    let n = n as i64;
    let m = 2 * n;
    let a = ps(&[(2, 1)], &[(n + 1, 1), (1, n - 3)]);
    let a2 = b2(&[(1, n - 3)], &[(n - 1, 1), (2, 1)]);
    let b = ps(&[(2, 1), (1, m - 2)], &[]);
    let b3 = ps(&[], &[(3, 1), (1, m - 3)]);
    vec![
        (
            bp(&[(n, 1), (3, 1), (1, n - 3)], &[]),
            half(vec![(a.clone(), -1), (a2.clone(), -1)]),
        ),
        (
            bp(&[(2, 1), (1, m - 2)], &[]),
            half(vec![(b.clone(), 1), (b3.clone(), -1)]),
        ),
        (
            bp(&[(2, 1)], &[(n + 1, 1), (1, n - 3)]),
            half(vec![(a, 1), (a2, -1)]),
        ),
        (bp(&[(2, 1)], &[(1, m - 2)]), half(vec![(b, 1), (b3, 1)])),
        (
            bp(&[(1, m)], &[]),
            half(vec![
                (ps(&[(1, m)], &[]), 1),
                (ps(&[], &[(2, 1), (1, m - 2)]), -1),
            ]),
        ),
        (
            bp(&[(m - 1, 1), (1, 1)], &[]),
            half(vec![
                (ps(&[(m - 1, 1), (1, 1)], &[]), 1),
                (ps(&[], &[(m, 1)]), -1),
            ]),
        ),
    ]
}

/// The two almost characters from the sixteen-element family.
pub fn sixteen_family_almost_characters(n: u32) -> Vec<(Bipartition, VirtualCharacter)> {
    let n = n as i64;
    let terms = |s: i64| {
        vec![
            (ps(&[(1, 2)], &[(n, 1), (1, n - 2)]), 1),
            (ps(&[(n - 1, 1), (1, n - 1)], &[(2, 1)]), 1),
            (b2(&[(2, 1), (1, n - 3)], &[(n - 2, 1), (1, 1)]), s),
            (b6(&[(n - 3, 1)], &[(1, n - 3)]), s),
        ]
    };
    vec![
        (
            bp(&[(n - 1, 1), (2, 2), (1, n - 3)], &[]),
            vc(terms(1)).scale(Rational64::new(-1, 4)),
        ),
        (
            bp(&[(1, 2)], &[(n, 1), (1, n - 2)]),
            vc(terms(-1)).scale(Rational64::new(1, 4)),
        ),
    ]
}

/// `bR_c` for the Coxeter element.
pub fn coxeter_dl(n: u32) -> VirtualCharacter {
    let n = n as i64;
    vc(vec![
        (ps(&[(2 * n, 1)], &[]), 1),
        (ps(&[], &[(1, 2 * n)]), 1),
        (b2(&[(1, n - 1)], &[(n - 1, 1)]), sgn(n - 1)),
    ])
}

/// `bR_{vₙ}`.
pub fn vn_dl(n: u32) -> VirtualCharacter {
    let n = n as i64;
    let m = 2 * n;
    vc(vec![
        (ps(&[(m, 1)], &[]), 1),
        (ps(&[], &[(1, m)]), 1),
        (ps(&[(m - 1, 1), (1, 1)], &[]), -1),
        (ps(&[], &[(2, 1), (1, m - 2)]), -1),
        (b2(&[(1, n - 2)], &[(n - 1, 1), (1, 1)]), sgn(n)),
        (b2(&[(2, 1), (1, n - 2)], &[(n - 2, 1)]), sgn(n)),
    ])
}

/// `bR_{wₙ}`.
pub fn wn_dl(n: u32) -> VirtualCharacter {
    let n = n as i64;
    let m = 2 * n;
    let e = sgn(n - 1);
    vc(vec![
        (ps(&[(m, 1)], &[]), 1),
        (ps(&[(m - 1, 1), (1, 1)], &[]), -1),
        (ps(&[(m - 2, 1), (1, 2)], &[]), 1),
        (ps(&[(1, m)], &[]), 1),
        (ps(&[], &[(1, m)]), 1),
        (ps(&[], &[(2, 1), (1, m - 2)]), -1),
        (ps(&[], &[(3, 1), (1, m - 3)]), 1),
        (ps(&[], &[(m, 1)]), 1),
        (b2(&[(1, n - 3)], &[(n - 1, 1), (2, 1)]), e),
        (b2(&[(2, 2), (1, n - 3)], &[(n - 3, 1)]), e),
        (b2(&[(2, 1), (1, n - 3)], &[(n - 2, 1), (1, 1)]), e),
        (b6(&[(n - 3, 1)], &[(1, n - 3)]), e),
    ])
}

/// Known coefficients of `bR_{c²}`: `(label, coefficient)`.
pub fn c2_coefficients(n: u32) -> Vec<(UnipCharLabel, i64)> {
    let n = n as i64;
    let m = 2 * n;
    vec![
        (b2(&[(2, n - 1)], &[]), -2),
        (ps(&[], &[(1, m)]), 1),
        (b6(&[], &[(2, n - 3)]), -2),
        (ps(&[(1, m)], &[]), 1),
    ]
}

/// The induced virtual character whose block part is `Uₖ`, before cutting.
pub fn u_source(k: u32, n: u32) -> VirtualCharacter {
    let n = n as i64;
    let m = 2 * n;
    match k {
        1 => vc((1..m)
            .map(|i| (ps(&[(i, 1), (1, m - i - 1)], &[]), sgn(i - 1)))
            .collect()),
        2 => vc((2..n)
            .map(|j| (ps(&[(n - j, 1), (1, n)], &[(1, j - 1)]), sgn(j + n)))
            .collect()),
        3 => vc((0..=n - 2)
            .map(|k| (b2(&[(2, k), (1, n - k - 1)], &[(n - k - 2, 1)]), sgn(k + n)))
            .collect()),
        5 => vc(vec![(ps(&[(m - 1, 1)], &[]), 1)]),
        6 => vc(vec![
            (b2(&[(1, n - 1)], &[(n - 2, 1)]), 1),
            (b2(&[(1, n - 2)], &[(n - 1, 1)]), 1),
        ]),
        7 => vc(vec![(ps(&[(m - 2, 1), (1, 1)], &[]), 1)]),
        8 => vc((1..=n)
            .map(|j| (ps(&[(1, j)], &[(n + 1 - j, 1), (1, n - 2)]), sgn(j + n)))
            .collect()),
        9 => vc(vec![
            (b2(&[(1, n - 3)], &[(n - 1, 1), (1, 1)]), 1),
            (b2(&[(1, n - 2)], &[(n - 2, 1), (1, 1)]), 1),
            (b2(&[(2, 1), (1, n - 2)], &[(n - 3, 1)]), 1),
            (b2(&[(1, n - 2)], &[(n - 1, 1)]), -2),
            (b2(&[(1, n - 1)], &[(n - 2, 1)]), -1),
        ]),
        10 => vc((0..=n - 4)
            .map(|r| (b6(&[(n - r - 4, 1)], &[(2, r), (1, n - r - 3)]), sgn(r + n)))
            .collect()),
        _ => panic!("U{k} is not induced from a corank-one Levi"),
    }
}

/// Right-hand side of the closed formula for `Uₖ`, `k = 1…10`.
pub fn u_closed_form(k: u32, n: u32) -> VirtualCharacter {
    let n = n as i64;
    let m = 2 * n;
    match k {
        1 => vc(vec![
            (ps(&[(1, m)], &[]), 1),
            (ps(&[(m, 1)], &[]), 1),
            (ps(&[(n - 1, 1), (1, n)], &[(1, 1)]), sgn(n)),
        ]),
        2 => vc(vec![
            (ps(&[(n - 1, 1), (1, n)], &[(1, 1)]), sgn(n)),
            (ps(&[(1, n + 1)], &[(1, n - 1)]), -1),
        ]),
        3 => vc(vec![
            (b2(&[(1, n - 1)], &[(n - 1, 1)]), sgn(n)),
            (b2(&[(2, n - 1)], &[]), 1),
        ]),
        4 => vc(vec![
            (ps(&[(1, m)], &[]), 1),
            (ps(&[], &[(1, m)]), 1),
            (ps(&[(1, n + 1)], &[(1, n - 1)]), 1),
        ]),
        5 => vc(vec![
            (ps(&[(m, 1)], &[]), 1),
            (ps(&[(m - 1, 1), (1, 1)], &[]), 1),
        ]),
        6 => vc(vec![
            (b2(&[(1, n - 1)], &[(n - 1, 1)]), 2),
            (b2(&[(2, 1), (1, n - 2)], &[(n - 2, 1)]), 1),
            (b2(&[(1, n - 2)], &[(n - 1, 1), (1, 1)]), 1),
        ]),
        7 => vc(vec![
            (ps(&[(m - 1, 1), (1, 1)], &[]), 1),
            (ps(&[(m - 2, 1), (1, 2)], &[]), 1),
        ]),
        8 => vc(vec![
            (ps(&[(1, 1)], &[(n + 1, 1), (1, n - 2)]), sgn(n + 1)),
            (ps(&[(1, n + 1)], &[(1, n - 1)]), 1),
        ]),
        9 => vc(vec![
            (b2(&[(1, n - 3)], &[(n - 1, 1), (2, 1)]), 1),
            (b2(&[(2, 1), (1, n - 3)], &[(n - 2, 1), (1, 1)]), 1),
            (b2(&[(2, 2), (1, n - 3)], &[(n - 3, 1)]), 1),
            (b2(&[(1, n - 1)], &[(n - 1, 1)]), -3),
        ]),
        10 => vc(vec![
            (b6(&[(n - 3, 1)], &[(1, n - 3)]), sgn(n)),
            (b6(&[], &[(2, n - 3)]), 1),
        ]),
        _ => panic!("no U{k}"),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::dl::{
        almost_character, cut_to_principal_block, dl_character, family_of, mn_value, Element,
    };
    use crate::partition::{bipartitions_of, Component};

    fn check_hook_rows(rows: &[HookRow], hook: u32, w: &crate::dl::SignedCycleType) {
        for r in rows {
            let hits: Vec<_> =
                r.bp.rim_hooks_with_legs(hook)
                    .into_iter()
                    .filter(|(core, _, _)| *core == r.core)
                    .collect();
            assert_eq!(hits.len(), 1, "{}", r.bp);
            let (_, comp, leg) = &hits[0];
            assert_eq!(
                *leg as i64 + i64::from(*comp == Component::Second),
                r.h,
                "{}",
                r.bp
            );
            assert_eq!(sgn(r.h) * r.core_value, r.value, "{}", r.bp);
            assert_eq!(mn_value(&r.bp, w), r.value, "{}", r.bp);
        }
    }

    // Every bipartition with a non-zero value whose almost character meets the
    // block must be listed, possibly up to `λ ↦ λ*`.
    fn check_complete(rows: &[HookRow], w: &crate::dl::SignedCycleType, n: u32, up_to_star: bool) {
        let mut listed: BTreeSet<_> = rows.iter().map(|r| r.bp.clone()).collect();
        if up_to_star {
            listed.extend(rows.iter().map(|r| r.bp.star()));
        }
        for bp in bipartitions_of(2 * n) {
            if mn_value(&bp, w) == 0 {
                continue;
            }
            let cut = cut_to_principal_block(&almost_character(&bp), n).unwrap();
            if !cut.is_zero() {
                assert!(listed.contains(&bp), "{bp} missing at n={n}");
            }
        }
    }

    #[test]
    fn vn_hooks() {
        for n in 3..8 {
            let w = Element::Vn.cycle_type(n);
            let rows = vn_hook_table(n);
            check_hook_rows(&rows, 2 * n - 1, &w);
            check_complete(&rows, &w, n, false);
        }
    }

    #[test]
    fn wn_hooks() {
        for n in 3..8 {
            let w = Element::Wn.cycle_type(n);
            let rows = wn_hook_table(n);
            check_hook_rows(&rows, 2 * n - 2, &w);
            check_complete(&rows, &w, n, true);
        }
    }

    #[test]
    fn families() {
        for n in 3..8 {
            for (bp, members) in vn_families(n).into_iter().chain(wn_families(n)) {
                let fam = family_of(&UnipCharLabel::new(0, bp.clone()));
                assert_eq!(fam.special(), &members[0], "{bp}");
                let got: BTreeSet<_> = fam.members.iter().cloned().collect();
                let want: BTreeSet<_> = members.into_iter().collect();
                assert_eq!(got, want, "{bp}");
            }
        }
    }

    #[test]
    fn almost_characters() {
        for n in 4..8 {
            let rows = vn_almost_characters(n)
                .into_iter()
                .chain(wn_almost_characters(n))
                .chain(sixteen_family_almost_characters(n));
            for (bp, want) in rows {
                let got = cut_to_principal_block(&almost_character(&bp), n).unwrap();
                assert_eq!(got, want, "{bp} at n={n}");
            }
        }
    }

    #[test]
    fn deligne_lusztig() {
        for n in 3..8 {
            assert_eq!(
                dl_character(&Element::C.cycle_type(n), n).unwrap(),
                coxeter_dl(n),
                "c, n={n}"
            );
            assert_eq!(
                dl_character(&Element::Vn.cycle_type(n), n).unwrap(),
                vn_dl(n),
                "vn, n={n}"
            );
            assert_eq!(
                dl_character(&Element::Wn.cycle_type(n), n).unwrap(),
                wn_dl(n),
                "wn, n={n}"
            );
            let c2 = dl_character(&Element::C2.cycle_type(n), n).unwrap();
            for (l, c) in c2_coefficients(n) {
                assert_eq!(c2.coeff(&l), Rational64::from_integer(c), "{l} at n={n}");
            }
        }
    }
}
