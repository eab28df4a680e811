//! Partitions, bipartitions, Young diagram boxes, rim hooks and β-sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from `(part, multiplicity)` blocks, so `[(2, 3), (1, 2)]` is 2³1².
    ///
    /// Blocks with zero multiplicity or zero part are skipped; a negative part with
    /// positive multiplicity is an error.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(p, m) in blocks {
            if m < 0 {
                return Err(Error::InvalidPartition(format!(
                    "negative multiplicity {m}"
                )));
            }
            if m == 0 || p == 0 {
                continue;
            }
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative part {p}")));
            }
            parts.extend(std::iter::repeat_n(p as u32, m as usize));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-indexed, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// First `count` entries of the charged β-set `{λᵢ + s − i + 1}`.
    pub fn beta_set(&self, s: i64, count: usize) -> Result<Vec<i64>> {
        if count < self.len() {
            return Err(Error::TruncationLosesParts {
                count,
                parts: self.len(),
            });
        }
        Ok((1..=count)
            .map(|i| self.part(i) as i64 + s - i as i64 + 1)
            .collect())
    }

    /// Entries of the charged β-set that are `>= floor`, descending.
    pub fn beta_above(&self, s: i64, floor: i64) -> Vec<i64> {
        let count = (s - floor + 1).max(self.len() as i64) as usize;
        let mut v = self.beta_set(s, count).expect("count covers parts");
        v.retain(|&x| x >= floor);
        v
    }

    /// Inverse of a truncated β-set: `list` is strictly decreasing and every integer
    /// below its last entry is understood to be present. Returns `(partition, charge)`.
    pub fn from_beta_list(list: &[i64]) -> (Partition, i64) {
        assert!(!list.is_empty(), "beta list must be nonempty");
        debug_assert!(list.windows(2).all(|w| w[0] > w[1]));
        let s = list[list.len() - 1] + list.len() as i64 - 1;
        let parts: Vec<u32> = list
            .iter()
            .enumerate()
            .map(|(k, &x)| (x - s + k as i64) as u32)
            .collect();
        (Partition::new(parts).expect("β-list yields a partition"), s)
    }

    /// Boxes that can be added, as (row, column), 1-indexed, top to bottom.
    pub fn addable(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let here = self.part(r);
            if r == 1 || self.part(r - 1) > here {
                out.push((r as u32, here + 1));
            }
        }
        out
    }

    /// Boxes that can be removed, as (row, column), top to bottom.
    pub fn removable(&self) -> Vec<(u32, u32)> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| (r as u32, self.part(r)))
            .collect()
    }

    pub fn with_box_added(&self, row: u32) -> Partition {
        let mut parts = self.parts.clone();
        let r = row as usize;
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Partition::new(parts).expect("addable box")
    }

    pub fn with_box_removed(&self, row: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts[row as usize - 1] -= 1;
        Partition::new(parts).expect("removable box")
    }

    /// All rim hooks of length `k`, as (partition with hook removed, leg length).
    pub fn rim_hooks(&self, k: u32) -> Vec<(Partition, u32)> {
        let k = k as i64;
        let count = self.len() + k as usize;
        let beta = self.beta_set(0, count).expect("count covers parts");
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - k;
            if beta.contains(&target) || target < beta[count - 1] {
                continue;
            }
            let leg = beta.iter().filter(|&&x| x > target && x < b).count() as u32;
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let (p, s) = Partition::from_beta_list(&next);
            debug_assert_eq!(s, 0);
            out.push((p, leg));
        }
        out
    }

    /// The `d`-core, obtained by stripping `d`-rim-hooks until none remain.
    pub fn core(&self, d: u32) -> Partition {
        let mut p = self.clone();
        while let Some((q, _)) = p.rim_hooks(d).into_iter().next() {
            p = q;
        }
        p
    }

    /// Hook-length formula for the number of standard tableaux.
    pub fn dimension(&self) -> u128 {
        let t = self.transpose();
        let mut num: u128 = 1;
        for k in 1..=self.size() as u128 {
            num *= k;
        }
        let mut den: u128 = 1;
        for r in 1..=self.len() {
            for c in 1..=self.part(r) as usize {
                let arm = self.part(r) as usize - c;
                let leg = t.part(c) as usize - r;
                den *= (arm + leg + 1) as u128;
            }
        }
        num / den
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `m`, in reverse lexicographic order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// Which of the two partitions a box lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    First,
    Second,
}

/// A box `(x, y, j)` of a Young bidiagram: row, column, component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungBox {
    pub row: u32,
    pub col: u32,
    pub comp: Component,
}

impl YoungBox {
    pub fn new(row: u32, col: u32, comp: Component) -> Self {
        YoungBox { row, col, comp }
    }
}

impl fmt::Display for YoungBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = match self.comp {
            Component::First => 1,
            Component::Second => 2,
        };
        write!(f, "({},{},{})", self.row, self.col, j)
    }
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Charge {
    pub s1: i64,
    pub s2: i64,
}

impl Charge {
    pub fn new(s1: i64, s2: i64) -> Self {
        Charge { s1, s2 }
    }

    pub fn get(&self, comp: Component) -> i64 {
        match comp {
            Component::First => self.s1,
            Component::Second => self.s2,
        }
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s1, self.s2)
    }
}

/// `y − x + s_j`.
pub fn charged_content(b: YoungBox, s: Charge) -> i64 {
    b.col as i64 - b.row as i64 + s.get(b.comp)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// Shorthand used by tests and closed forms; panics on invalid parts.
    pub fn from_parts(first: &[u32], second: &[u32]) -> Self {
        Bipartition {
            first: Partition::new(first.to_vec()).expect("valid partition"),
            second: Partition::new(second.to_vec()).expect("valid partition"),
        }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn component(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    /// `(λ¹.λ²) ↦ ((λ²)ᵗ.(λ¹)ᵗ)`.
    pub fn star(&self) -> Bipartition {
        Bipartition {
            first: self.second.transpose(),
            second: self.first.transpose(),
        }
    }

    pub fn contains(&self, b: YoungBox) -> bool {
        let p = self.component(b.comp);
        b.row >= 1 && b.col >= 1 && b.col <= p.part(b.row as usize)
    }

    pub fn addable_boxes(&self) -> Vec<YoungBox> {
        let mut out = Vec::new();
        for comp in [Component::First, Component::Second] {
            for (r, c) in self.component(comp).addable() {
                out.push(YoungBox::new(r, c, comp));
            }
        }
        out
    }

    pub fn removable_boxes(&self) -> Vec<YoungBox> {
        let mut out = Vec::new();
        for comp in [Component::First, Component::Second] {
            for (r, c) in self.component(comp).removable() {
                out.push(YoungBox::new(r, c, comp));
            }
        }
        out
    }

    pub fn add_box(&self, b: YoungBox) -> Bipartition {
        let mut out = self.clone();
        match b.comp {
            Component::First => out.first = self.first.with_box_added(b.row),
            Component::Second => out.second = self.second.with_box_added(b.row),
        }
        out
    }

    pub fn remove_box(&self, b: YoungBox) -> Bipartition {
        let mut out = self.clone();
        match b.comp {
            Component::First => out.first = self.first.with_box_removed(b.row),
            Component::Second => out.second = self.second.with_box_removed(b.row),
        }
        out
    }

    /// Every bipartition obtained by adding a single box.
    pub fn add_box_all(&self) -> Vec<Bipartition> {
        self.addable_boxes()
            .into_iter()
            .map(|b| self.add_box(b))
            .collect()
    }

    /// One entry per `k`-hook of either component, with sign `(−1)^{leg}`, times an
    /// extra `−1` when the hook lies in the second component.
    pub fn hooks_of_length(&self, k: u32) -> Vec<(Bipartition, i64)> {
        self.rim_hooks_with_legs(k)
            .into_iter()
            .map(|(bp, comp, leg)| {
                let h = leg as i64 + i64::from(comp == Component::Second);
                (bp, if h % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    /// Every `k`-rim-hook removal as (result, component, leg length).
    pub fn rim_hooks_with_legs(&self, k: u32) -> Vec<(Bipartition, Component, u32)> {
        let mut out = Vec::new();
        for (p, leg) in self.first.rim_hooks(k) {
            out.push((
                Bipartition::new(p, self.second.clone()),
                Component::First,
                leg,
            ));
        }
        for (p, leg) in self.second.rim_hooks(k) {
            out.push((
                Bipartition::new(self.first.clone(), p),
                Component::Second,
                leg,
            ));
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let pieces: Vec<&str> = s.trim().split('.').collect();
        if pieces.len() != 2 {
            return Err(Error::Parse(format!("{s:?}: expected exactly one '.'")));
        }
        Ok(Bipartition {
            first: pieces[0].parse()?,
            second: pieces[1].parse()?,
        })
    }
}

/// All bipartitions of `m`.
pub fn bipartitions_of(m: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=m).rev() {
        let firsts = partitions_of(a);
        let seconds = partitions_of(m - a);
        for p in &firsts {
            for q in &seconds {
                out.push(Bipartition::new(p.clone(), q.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(
            Partition::empty().beta_set(0, 4).unwrap(),
            vec![0, -1, -2, -3]
        );
        assert_eq!(
            p(&[3, 1, 1]).beta_set(0, 5).unwrap(),
            vec![3, 0, -1, -3, -4]
        );
        assert_eq!(p(&[2]).beta_set(-1, 3).unwrap(), vec![1, -2, -3]);
        assert!(p(&[1, 1, 1]).beta_set(0, 2).is_err());
    }

    #[test]
    fn beta_list_round_trip() {
        for m in 0..8 {
            for q in partitions_of(m) {
                for s in -3..4 {
                    let list = q.beta_set(s, q.len() + 2).unwrap();
                    assert_eq!(Partition::from_beta_list(&list), (q.clone(), s));
                }
            }
        }
    }

    #[test]
    fn content_examples() {
        let s = Charge::new(0, -1);
        assert_eq!(charged_content(YoungBox::new(1, 1, Component::First), s), 0);
        let s = Charge::new(1, 0);
        assert_eq!(
            charged_content(YoungBox::new(6, 2, Component::Second), s),
            -4
        );
        assert_eq!(
            charged_content(YoungBox::new(1, 5, Component::Second), s),
            4
        );
    }

    #[test]
    fn hook_examples() {
        for n in 2..6u32 {
            let bp = Bipartition::from_parts(&[2 * n], &[]);
            assert_eq!(
                bp.hooks_of_length(2 * n - 1),
                vec![(Bipartition::from_parts(&[1], &[]), 1)]
            );
            let col = vec![1; 2 * n as usize - 1];
            let bp = Bipartition::from_parts(&[1], &col);
            assert_eq!(
                bp.hooks_of_length(2 * n - 1),
                vec![(Bipartition::from_parts(&[1], &[]), -1)]
            );
        }
        assert!(Bipartition::from_parts(&[1], &[1])
            .hooks_of_length(3)
            .is_empty());
    }

    #[test]
    fn transpose_and_star() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        let bp = Bipartition::from_parts(&[6], &[]);
        assert_eq!(bp.star(), Bipartition::from_parts(&[], &[1, 1, 1, 1, 1, 1]));
        let bp = Bipartition::from_parts(&[1], &[1, 1, 1, 1, 1]);
        assert_eq!(bp.star(), Bipartition::from_parts(&[5], &[1]));
    }

    #[test]
    fn add_box_examples() {
        let e = Bipartition::empty();
        assert_eq!(
            e.add_box_all(),
            vec![
                Bipartition::from_parts(&[1], &[]),
                Bipartition::from_parts(&[], &[1])
            ]
        );
        let one = Bipartition::from_parts(&[1], &[]);
        assert_eq!(
            one.add_box_all(),
            vec![
                Bipartition::from_parts(&[2], &[]),
                Bipartition::from_parts(&[1, 1], &[]),
                Bipartition::from_parts(&[1], &[1]),
            ]
        );
    }

    #[test]
    fn text_round_trip() {
        for s in ["3,1,1.2", "-.1,1", "-.-", "10,2.-"] {
            let bp: Bipartition = s.parse().unwrap();
            assert_eq!(bp.to_string(), s);
        }
        assert!("3,1".parse::<Bipartition>().is_err());
        assert!("1,3.-".parse::<Bipartition>().is_err());
    }

    #[test]
    fn json_shape() {
        let bp = Bipartition::from_parts(&[3, 1], &[2]);
        let js = serde_json::to_string(&bp).unwrap();
        assert_eq!(js, r#"{"first":[3,1],"second":[2]}"#);
        assert!(serde_json::from_str::<Bipartition>(r#"{"first":[1,3],"second":[]}"#).is_err());
    }

    #[test]
    fn counts() {
        let p_counts = [1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (m, &c) in p_counts.iter().enumerate() {
            assert_eq!(partitions_of(m as u32).len(), c);
        }
        assert_eq!(bipartitions_of(3).len(), 10);
        assert_eq!(p(&[3, 2]).dimension(), 5);
    }
}
