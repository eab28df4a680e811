//! Charged symbols: defect, rank, d-hooks and d-co-hooks, families and dominance.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{charged_content, Bipartition, Charge, Component, Partition, YoungBox};

/// The charge σ_t: `(t, −1−t)` for even `t`, `(−1−t, t)` for odd `t`.
pub fn sigma(t: u32) -> Charge {
    let t = t as i64;
    if t % 2 == 0 {
        Charge::new(t, -1 - t)
    } else {
        Charge::new(-1 - t, t)
    }
}

/// Recovers `t ≥ 0` from a charge of the form σ_t.
pub fn sigma_index(c: Charge) -> Option<u32> {
    if c.s1 + c.s2 != -1 {
        return None;
    }
    let t = if c.s1 >= 0 { c.s1 } else { c.s2 };
    if t < 0 {
        return None;
    }
    (sigma(t as u32) == c).then_some(t as u32)
}

/// A bipartition together with a charge; its rows are the two charged β-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChargedSymbol {
    pub bp: Bipartition,
    pub charge: Charge,
}

/// Result of comparing two symbols in the dominance order on families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dominance {
    /// The first symbol is strictly dominated by the second.
    Less,
    Equiv,
    /// The first symbol strictly dominates the second.
    Greater,
    Incomparable,
}

impl ChargedSymbol {
    pub fn new(bp: Bipartition, charge: Charge) -> Self {
        ChargedSymbol { bp, charge }
    }

    /// The symbol of `bp` in the series `t`, with charge σ_t.
    pub fn of(bp: Bipartition, t: u32) -> Self {
        ChargedSymbol {
            bp,
            charge: sigma(t),
        }
    }

    /// Builds a symbol from two truncated rows. Each row is strictly decreasing and
    /// every integer below its last entry is understood to belong to it.
    pub fn from_rows(top: &[i64], bottom: &[i64]) -> Self {
        let (p1, s1) = Partition::from_beta_list(top);
        let (p2, s2) = Partition::from_beta_list(bottom);
        ChargedSymbol {
            bp: Bipartition::new(p1, p2),
            charge: Charge::new(s1, s2),
        }
    }

    pub fn defect(&self) -> i64 {
        self.charge.s1 - self.charge.s2
    }

    /// The series parameter when the charge is some σ_t.
    pub fn series(&self) -> Option<u32> {
        sigma_index(self.charge)
    }

    pub fn rank(&self) -> Result<u32> {
        let t = self
            .series()
            .ok_or(Error::NotSigmaCharge(self.charge.s1, self.charge.s2))?;
        Ok(self.bp.size() + t * (t + 1))
    }

    /// A floor at or below which both rows contain every integer.
    pub fn floor(&self) -> i64 {
        (self.charge.s1 - self.bp.first.len() as i64)
            .min(self.charge.s2 - self.bp.second.len() as i64)
    }

    pub fn top_row(&self, floor: i64) -> Vec<i64> {
        self.bp.first.beta_above(self.charge.s1, floor)
    }

    pub fn bottom_row(&self, floor: i64) -> Vec<i64> {
        self.bp.second.beta_above(self.charge.s2, floor)
    }

    pub fn top_contains(&self, z: i64) -> bool {
        row_contains(&self.bp.first, self.charge.s1, z)
    }

    pub fn bottom_contains(&self, z: i64) -> bool {
        row_contains(&self.bp.second, self.charge.s2, z)
    }

    /// Removals of a single d-hook `(x, x+d)` within one row.
    pub fn d_hooks(&self, d: u32) -> Vec<ChargedSymbol> {
        self.bp
            .rim_hooks_with_legs(d)
            .into_iter()
            .map(|(bp, _, _)| ChargedSymbol::new(bp, self.charge))
            .collect()
    }

    pub fn d_core(&self, d: u32) -> ChargedSymbol {
        let mut cur = self.clone();
        while let Some(next) = cur.d_hooks(d).into_iter().next() {
            cur = next;
        }
        cur
    }

    /// Removals of a single d-co-hook: `x+d` leaves one row, `x` joins the other,
    /// then the rows are exchanged.
    pub fn d_cohooks(&self, d: u32) -> Vec<ChargedSymbol> {
        let d = d as i64;
        let floor = self.floor() - d - 1;
        let x = self.top_row(floor);
        let y = self.bottom_row(floor);
        let mut out = Vec::new();
        for &e in &x {
            let z = e - d;
            if z >= floor && !y.contains(&z) {
                let new_x: Vec<i64> = x.iter().copied().filter(|&v| v != e).collect();
                let new_y = insert_desc(&y, z);
                out.push(ChargedSymbol::from_rows(&new_y, &new_x));
            }
        }
        for &e in &y {
            let z = e - d;
            if z >= floor && !x.contains(&z) {
                let new_y: Vec<i64> = y.iter().copied().filter(|&v| v != e).collect();
                let new_x = insert_desc(&x, z);
                out.push(ChargedSymbol::from_rows(&new_y, &new_x));
            }
        }
        out
    }

    /// Additions of a single d-co-hook; the inverse of [`ChargedSymbol::d_cohooks`].
    pub fn add_cohooks(&self, d: u32) -> Vec<ChargedSymbol> {
        let d = d as i64;
        let floor = self.floor() - d - 1;
        let a = self.top_row(floor);
        let b = self.bottom_row(floor);
        let mut out = Vec::new();
        // (A, B) came from (X, Y) = (B ∪ {x+d}, A ∖ {x}) or (X, Y) = (B ∖ {x}, A ∪ {x+d}).
        for &x in &a {
            if !row_contains_list(&b, x + d) {
                let new_top = insert_desc(&b, x + d);
                let new_bottom: Vec<i64> = a.iter().copied().filter(|&v| v != x).collect();
                out.push(ChargedSymbol::from_rows(&new_top, &new_bottom));
            }
        }
        for &x in &b {
            if !row_contains_list(&a, x + d) {
                let new_top: Vec<i64> = b.iter().copied().filter(|&v| v != x).collect();
                let new_bottom = insert_desc(&a, x + d);
                out.push(ChargedSymbol::from_rows(&new_top, &new_bottom));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn d_cocore(&self, d: u32) -> ChargedSymbol {
        let mut cur = self.clone();
        while let Some(next) = cur.d_cohooks(d).into_iter().next() {
            cur = next;
        }
        cur
    }

    /// Number of d-co-hooks removed on the way to the co-core.
    pub fn cohook_weight(&self, d: u32) -> u32 {
        let mut cur = self.clone();
        let mut w = 0;
        while let Some(next) = cur.d_cohooks(d).into_iter().next() {
            cur = next;
            w += 1;
        }
        w
    }

    pub fn family_key(&self) -> FamilyKey {
        let floor = self.floor();
        let mut counts: BTreeMap<i64, u8> = BTreeMap::new();
        for z in self
            .top_row(floor)
            .into_iter()
            .chain(self.bottom_row(floor))
        {
            *counts.entry(z).or_default() += 1;
        }
        let mut base = floor;
        while counts.get(&(base + 1)) == Some(&2) {
            base += 1;
        }
        let mut entries: Vec<i64> = counts
            .iter()
            .filter(|(&z, _)| z > base)
            .flat_map(|(&z, &c)| std::iter::repeat_n(z, c as usize))
            .collect();
        entries.reverse();
        FamilyKey { base, entries }
    }

    /// Two-row rendering with aligned columns, truncated where both rows run out.
    pub fn render(&self) -> String {
        let key = self.family_key();
        let floor = key.base;
        let x = self.top_row(floor);
        let y = self.bottom_row(floor);
        let mut cols: Vec<i64> = x.iter().chain(y.iter()).copied().collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        cols.dedup();
        let width = cols.iter().map(|c| c.to_string().len()).max().unwrap_or(1);
        let line = |row: &[i64]| {
            let cells: Vec<String> = cols
                .iter()
                .map(|c| {
                    if row.contains(c) {
                        format!("{c:>width$}")
                    } else {
                        " ".repeat(width)
                    }
                })
                .collect();
            format!("{} …", cells.join(" "))
        };
        format!("{}\n{}", line(&x), line(&y))
    }
}

impl fmt::Display for ChargedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.bp, self.charge)
    }
}

fn row_contains(p: &Partition, s: i64, z: i64) -> bool {
    if z <= s - p.len() as i64 {
        return true;
    }
    p.beta_above(s, z).contains(&z)
}

fn row_contains_list(row: &[i64], z: i64) -> bool {
    z < *row.last().expect("nonempty row") || row.contains(&z)
}

fn insert_desc(row: &[i64], z: i64) -> Vec<i64> {
    let mut v = row.to_vec();
    v.push(z);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// The multiset `X ∪ Y` of a symbol, stored as the finite part above the level
/// `base`, where every integer `≤ base` occurs twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyKey {
    pub base: i64,
    /// Entries above `base`, descending, with multiplicity at most two.
    pub entries: Vec<i64>,
}

impl FamilyKey {
    /// All multiset elements `>= floor`, descending. Requires `floor <= base + 1`.
    pub fn expanded(&self, floor: i64) -> Vec<i64> {
        let mut v = self.entries.clone();
        let mut z = self.base;
        while z >= floor {
            v.push(z);
            v.push(z);
            z -= 1;
        }
        v
    }

    /// Entries occurring once, ascending.
    pub fn singles(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .entries
            .iter()
            .copied()
            .filter(|z| self.entries.iter().filter(|w| *w == z).count() == 1)
            .collect();
        v.sort_unstable();
        v
    }

    /// Entries occurring twice (above `base`), descending, listed once each.
    pub fn doubles(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .entries
            .iter()
            .copied()
            .filter(|z| self.entries.iter().filter(|w| *w == z).count() == 2)
            .collect();
        v.dedup();
        v
    }

    /// Partial sums of the expansion down to `floor`.
    pub fn partial_sums(&self, floor: i64) -> Vec<i64> {
        self.expanded(floor)
            .iter()
            .scan(0i64, |acc, &z| {
                *acc += z;
                Some(*acc)
            })
            .collect()
    }
}

/// Dominance of the families of two symbols, by partial sums of the sorted multisets.
pub fn dominates(a: &ChargedSymbol, b: &ChargedSymbol) -> Dominance {
    compare_keys(&a.family_key(), &b.family_key())
}

pub fn compare_keys(ka: &FamilyKey, kb: &FamilyKey) -> Dominance {
    if ka == kb {
        return Dominance::Equiv;
    }
    let floor = ka.base.min(kb.base);
    let pa = ka.partial_sums(floor);
    let pb = kb.partial_sums(floor);
    if pa.len() != pb.len() || pa.last() != pb.last() {
        return Dominance::Incomparable;
    }
    let ge = pa.iter().zip(&pb).all(|(x, y)| x >= y);
    let le = pa.iter().zip(&pb).all(|(x, y)| x <= y);
    match (ge, le) {
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (true, true) => Dominance::Equiv,
        (false, false) => Dominance::Incomparable,
    }
}

/// Dunkl–Griffeth order `a ⪯ₛ b`: for every threshold α and j ∈ {1,2}, `b` has at
/// least as many boxes with value `coˢ − j·d/2 > α`, or `= α` in components `≤ j`,
/// as `a` does.
pub fn dg_leq(a: &Bipartition, b: &Bipartition, s: Charge, d: u32) -> bool {
    // Work with doubled values so d/2 stays integral.
    let values = |bp: &Bipartition| -> Vec<(i64, u8)> {
        let mut v = Vec::new();
        for comp in [Component::First, Component::Second] {
            let p = bp.component(comp);
            let j: u8 = if comp == Component::First { 1 } else { 2 };
            for r in 1..=p.len() {
                for c in 1..=p.part(r) {
                    let co = charged_content(YoungBox::new(r as u32, c, comp), s);
                    v.push((2 * co - j as i64 * d as i64, j));
                }
            }
        }
        v
    };
    let va = values(a);
    let vb = values(b);
    let count = |vals: &[(i64, u8)], alpha: i64, j: u8| {
        vals.iter()
            .filter(|&&(v, jb)| v > alpha || (v == alpha && jb <= j))
            .count()
    };
    let mut thresholds: Vec<i64> = va.iter().chain(vb.iter()).map(|&(v, _)| v).collect();
    let min = thresholds.iter().copied().min().unwrap_or(0);
    thresholds.push(min - 1);
    thresholds.sort_unstable();
    thresholds.dedup();
    thresholds
        .iter()
        .all(|&alpha| (1..=2).all(|j| count(&va, alpha, j) <= count(&vb, alpha, j)))
}

/// All symbols obtained from the trivial rank-0 symbol by adding `k` co-hooks of
/// length `e`.
pub fn add_cohooks_repeatedly(e: u32, k: u32) -> Vec<ChargedSymbol> {
    let mut cur = vec![ChargedSymbol::of(Bipartition::empty(), 0)];
    for _ in 0..k {
        let mut next: Vec<ChargedSymbol> = cur.iter().flat_map(|s| s.add_cohooks(e)).collect();
        next.sort();
        next.dedup();
        cur = next;
    }
    cur
}
