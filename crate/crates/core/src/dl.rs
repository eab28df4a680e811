//! Weyl group characters of type B, families and Fourier matrices, almost
//! characters and Deligne–Lusztig characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::block::{principal_block_members, UnipCharLabel};
use crate::character::VirtualCharacter;
use crate::error::{Error, Result};
use crate::partition::{bipartitions_of, partitions_of, Bipartition, Partition};
use crate::symbol::{ChargedSymbol, FamilyKey};

/// Conjugacy class of the hyperoctahedral group: positive and negative cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub pos: Partition,
    pub neg: Partition,
}

impl SignedCycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedCycleType { pos, neg }
    }

    pub fn negative(neg: &[u32]) -> Self {
        let mut v = neg.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType {
            pos: Partition::empty(),
            neg: Partition::new(v).expect("cycle lengths"),
        }
    }

    pub fn rank(&self) -> u32 {
        self.pos.size() + self.neg.size()
    }

    /// `(−1)^{ℓ(w)}`: a positive k-cycle contributes `(−1)^{k−1}`, a negative one `(−1)^k`.
    pub fn sign(&self) -> i64 {
        let exp: u32 = self.pos.parts().iter().map(|k| k - 1).sum::<u32>() + self.neg.size();
        if exp.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every signed cycle type of rank `m`.
    pub fn all(m: u32) -> Vec<SignedCycleType> {
        let mut out = Vec::new();
        for a in 0..=m {
            for p in partitions_of(a) {
                for q in partitions_of(m - a) {
                    out.push(SignedCycleType::new(p.clone(), q));
                }
            }
        }
        out
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `(pos; neg)` with `-` for an empty side, e.g. `(-; 7,1)`.
        write!(f, "({}; {})", self.pos, self.neg)
    }
}

fn parse_lengths(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Partition::empty());
    }
    let mut v = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if v.contains(&0) {
        return Err(Error::Parse("cycle lengths must be positive".into()));
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v)
}

impl SignedCycleType {
    /// Parses comma-separated positive and negative cycle lengths.
    pub fn parse(pos: &str, neg: &str) -> Result<Self> {
        Ok(SignedCycleType {
            pos: parse_lengths(pos)?,
            neg: parse_lengths(neg)?,
        })
    }
}

/// A signed permutation of `{±1, …, ±m}`, stored as the images of `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm(pub Vec<i64>);

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        SignedPerm((1..=m as i64).collect())
    }

    /// Generator `s_1` changes the sign of 1; `s_i` for `i ≥ 2` swaps `i−1` and `i`.
    pub fn generator(i: usize, m: usize) -> Self {
        let mut v = SignedPerm::identity(m).0;
        if i == 1 {
            v[0] = -1;
        } else {
            v.swap(i - 2, i - 1);
        }
        SignedPerm(v)
    }

    pub fn apply(&self, x: i64) -> i64 {
        let y = self.0[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm(
            (1..=self.0.len() as i64)
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        )
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut v = vec![0; self.0.len()];
        for (k, &y) in self.0.iter().enumerate() {
            let x = k as i64 + 1;
            v[y.unsigned_abs() as usize - 1] = if y < 0 { -x } else { x };
        }
        SignedPerm(v)
    }

    /// Product `s_{i_1} s_{i_2} ⋯` of generators.
    pub fn from_word(word: &[usize], m: usize) -> Self {
        word.iter().fold(SignedPerm::identity(m), |acc, &i| {
            acc.compose(&SignedPerm::generator(i, m))
        })
    }

    pub fn cycle_type(&self) -> SignedCycleType {
        let m = self.0.len();
        let mut seen = vec![false; m];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut negs = 0;
            let mut x = start as i64;
            loop {
                seen[x as usize - 1] = true;
                let y = self.0[x as usize - 1];
                len += 1;
                if y < 0 {
                    negs += 1;
                }
                x = y.abs();
                if x == start as i64 {
                    break;
                }
            }
            if negs % 2 == 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType::new(Partition::new(pos).unwrap(), Partition::new(neg).unwrap())
    }

    /// Every element of the hyperoctahedral group of rank `m`.
    pub fn all(m: usize) -> Vec<SignedPerm> {
        fn perms(m: usize) -> Vec<Vec<i64>> {
            if m == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(m - 1) {
                for k in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(k, m as i64);
                    out.push(q);
                }
            }
            out
        }
        let mut out = Vec::new();
        for p in perms(m) {
            for mask in 0..(1u32 << m) {
                let v = p
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if mask >> k & 1 == 1 { -x } else { x })
                    .collect();
                out.push(SignedPerm(v));
            }
        }
        out
    }
}

/// The Weyl group elements used for Deligne–Lusztig characters in rank `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Element {
    /// Coxeter element `s₁s₂⋯s₂ₙ`.
    C,
    /// Its square.
    C2,
    /// `s₁s₂ c`.
    Vn,
    /// `s₁s₂s₃s₂ c`.
    Wn,
}

impl Element {
    pub fn word(&self, n: u32) -> Vec<usize> {
        let c: Vec<usize> = (1..=2 * n as usize).collect();
        match self {
            Element::C => c,
            Element::C2 => c.iter().chain(c.iter()).copied().collect(),
            Element::Vn => [1, 2].iter().chain(c.iter()).copied().collect(),
            Element::Wn => [1, 2, 3, 2].iter().chain(c.iter()).copied().collect(),
        }
    }

    pub fn perm(&self, n: u32) -> SignedPerm {
        SignedPerm::from_word(&self.word(n), 2 * n as usize)
    }

    pub fn cycle_type(&self, n: u32) -> SignedCycleType {
        self.perm(n).cycle_type()
    }
}

impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(Element::C),
            "c2" => Ok(Element::C2),
            "vn" => Ok(Element::Vn),
            "wn" => Ok(Element::Wn),
            _ => Err(Error::Parse(format!("unknown element {s:?}"))),
        }
    }
}

/// Murnaghan–Nakayama evaluation with a per-evaluator memo.
#[derive(Default)]
pub struct MnEvaluator {
    memo: HashMap<(Bipartition, Vec<i64>), i64>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        MnEvaluator::default()
    }

    /// `χ_bp(w)` for the irreducible character of `W(B_m)` labelled by `bp`.
    pub fn value(&mut self, bp: &Bipartition, w: &SignedCycleType) -> i64 {
        if bp.size() != w.rank() {
            return 0;
        }
        // Negative cycles are encoded as negative lengths and stripped first.
        let mut cycles: Vec<i64> = w.neg.parts().iter().map(|&k| -(k as i64)).collect();
        cycles.sort_unstable();
        cycles.extend(w.pos.parts().iter().map(|&k| k as i64));
        self.eval(bp, &cycles)
    }

    fn eval(&mut self, bp: &Bipartition, cycles: &[i64]) -> i64 {
        if cycles.is_empty() {
            return i64::from(bp.size() == 0);
        }
        let key = (bp.clone(), cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = cycles[0];
        let rest = &cycles[1..];
        let mut total = 0;
        if k < 0 {
            for (next, sign) in bp.hooks_of_length(k.unsigned_abs() as u32) {
                total += sign * self.eval(&next, rest);
            }
        } else {
            for (next, _, leg) in bp.rim_hooks_with_legs(k as u32) {
                let sign = if leg % 2 == 0 { 1 } else { -1 };
                total += sign * self.eval(&next, rest);
            }
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_value(bp: &Bipartition, w: &SignedCycleType) -> i64 {
    MnEvaluator::new().value(bp, w)
}

fn symmetric_char(lambda: &Partition, cycle_type: &[usize]) -> i64 {
    let k = lambda.size() as usize;
    let sign = if cycle_type.iter().map(|c| c - 1).sum::<usize>() % 2 == 0 {
        1
    } else {
        -1
    };
    let fixed = cycle_type.iter().filter(|&&c| c == 1).count() as i64;
    match (k, lambda.parts()) {
        (0, _) | (1, _) => 1,
        (_, [p]) if *p as usize == k => 1,
        (_, ps) if ps.len() == k => sign,
        (3, [2, 1]) => fixed - 1,
        _ => panic!("symmetric group character {lambda} not tabulated"),
    }
}

fn perm_cycle_type(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Character value computed inside the group itself, by inducing
/// `χ_α ⊗ (χ_β · ε′)` from `W(B_a) × W(B_b)`, where `ε′` is −1 on each sign change of
/// the second factor. Only ranks up to 3 are supported.
pub fn brute_force_char_value(bp: &Bipartition, w: &SignedPerm) -> Result<i64> {
    let m = w.0.len();
    if m > 3 {
        return Err(Error::InvalidArgument(format!(
            "rank {m} > 3 is refused by the brute-force oracle"
        )));
    }
    if bp.size() as usize != m {
        return Err(Error::InvalidArgument(
            "bipartition size differs from rank".into(),
        ));
    }
    let a = bp.first.size() as usize;
    let b = m - a;
    let psi = |h: &SignedPerm| -> Option<i64> {
        let mut first = Vec::new();
        let mut second = Vec::new();
        let mut negs_second = 0;
        for x in 1..=m {
            let y = h.0[x - 1];
            let (yx, yneg) = (y.unsigned_abs() as usize, y < 0);
            if (x <= a) != (yx <= a) {
                return None;
            }
            if x <= a {
                first.push(yx - 1);
            } else {
                second.push(yx - a - 1);
                if yneg {
                    negs_second += 1;
                }
            }
        }
        let ca = symmetric_char(&bp.first, &perm_cycle_type(&first));
        let cb = symmetric_char(&bp.second, &perm_cycle_type(&second));
        let eps = if negs_second % 2 == 0 { 1 } else { -1 };
        Some(ca * cb * eps)
    };
    let group = SignedPerm::all(m);
    let mut total = 0i64;
    for g in &group {
        let conj = g.compose(w).compose(&g.inverse());
        if let Some(v) = psi(&conj) {
            total += v;
        }
    }
    let h_order = (factorial(a) << a) * (factorial(b) << b);
    debug_assert_eq!(total % h_order as i64, 0);
    Ok(total / h_order as i64)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Class sizes of the hyperoctahedral group of rank `m`, by enumeration.
pub fn class_sizes(m: usize) -> BTreeMap<SignedCycleType, usize> {
    let mut out = BTreeMap::new();
    for g in SignedPerm::all(m) {
        *out.entry(g.cycle_type()).or_insert(0) += 1;
    }
    out
}

/// A family of unipotent characters: every σ-charged symbol with a given multiset of
/// entries. Members are indexed by which singles sit in the top row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub key: FamilyKey,
    /// Special member first, then by label.
    pub members: Vec<UnipCharLabel>,
    /// For each member, the bitmask over `singles` of entries lying in the top row.
    pub masks: Vec<u64>,
    /// Entries occurring once, ascending.
    pub singles: Vec<i64>,
    /// The family has `4^a` members.
    pub a: u32,
}

impl Family {
    pub fn special(&self) -> &UnipCharLabel {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, l: &UnipCharLabel) -> Option<usize> {
        self.members.iter().position(|m| m == l)
    }

    fn special_mask(&self) -> u64 {
        (0..self.singles.len()).step_by(2).map(|k| 1u64 << k).sum()
    }

    /// `{Λ, Λ′} = 2^{−a} (−1)^{|T♯ ∩ T′♯|}`, where `T♯` is the symmetric difference of the
    /// top-row singles with those of the special member.
    pub fn fourier(&self, i: usize, j: usize) -> Rational64 {
        let s = self.special_mask();
        let overlap = ((self.masks[i] ^ s) & (self.masks[j] ^ s)).count_ones();
        let sign = if overlap.is_multiple_of(2) { 1 } else { -1 };
        Rational64::new(sign, 1i64 << self.a)
    }

    pub fn fourier_block(&self) -> FourierBlock {
        let k = self.len();
        let matrix = (0..k)
            .map(|i| (0..k).map(|j| self.fourier(i, j)).collect())
            .collect();
        FourierBlock {
            family: self.clone(),
            matrix,
        }
    }
}

pub fn family_from_key(key: &FamilyKey) -> Family {
    let singles = key.singles();
    let doubles = key.doubles();
    let z = singles.len();
    assert!(
        z % 2 == 1,
        "σ-charged families have an odd number of singles"
    );
    let a = (z / 2) as u32;
    let mut found: Vec<(UnipCharLabel, u64)> = Vec::new();
    for mask in 0..(1u64 << z) {
        let count = mask.count_ones();
        if count % 2 != (a + 1) % 2 {
            continue;
        }
        let mut top: Vec<i64> = doubles.clone();
        let mut bottom: Vec<i64> = doubles.clone();
        for (k, &s) in singles.iter().enumerate() {
            if mask >> k & 1 == 1 {
                top.push(s);
            } else {
                bottom.push(s);
            }
        }
        top.push(key.base);
        bottom.push(key.base);
        top.sort_unstable_by(|a, b| b.cmp(a));
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        let sym = ChargedSymbol::from_rows(&top, &bottom);
        if let Some(l) = UnipCharLabel::from_symbol(&sym) {
            found.push((l, mask));
        }
    }
    let special: u64 = (0..z).step_by(2).map(|k| 1u64 << k).sum();
    found.sort_by(|x, y| (x.1 != special).cmp(&(y.1 != special)).then(x.0.cmp(&y.0)));
    Family {
        key: key.clone(),
        members: found.iter().map(|x| x.0.clone()).collect(),
        masks: found.iter().map(|x| x.1).collect(),
        singles,
        a,
    }
}

pub fn family_of(label: &UnipCharLabel) -> Family {
    family_from_key(&label.family_key())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierBlock {
    pub family: Family,
    pub matrix: Vec<Vec<Rational64>>,
}

impl FourierBlock {
    pub fn is_symmetric(&self) -> bool {
        let k = self.matrix.len();
        (0..k).all(|i| (0..k).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// `M · M = I` (the matrix is symmetric, so this is also orthogonality).
    pub fn is_involution(&self) -> bool {
        let k = self.matrix.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                let s: Rational64 = (0..k).map(|l| self.matrix[i][l] * self.matrix[l][j]).sum();
                s == if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            })
        })
    }
}

/// Caches families by key.
#[derive(Default)]
pub struct FamilyCache {
    map: HashMap<FamilyKey, Family>,
}

impl FamilyCache {
    pub fn get(&mut self, label: &UnipCharLabel) -> &Family {
        let key = label.family_key();
        self.map
            .entry(key.clone())
            .or_insert_with(|| family_from_key(&key))
    }
}

/// `R_χ` for the Weyl group character `χ_bp`: the Fourier row of the principal-series
/// symbol of `bp` across its family.
pub fn almost_character(bp: &Bipartition) -> VirtualCharacter {
    almost_character_cached(bp, &mut FamilyCache::default())
}

fn almost_character_cached(bp: &Bipartition, cache: &mut FamilyCache) -> VirtualCharacter {
    let label = UnipCharLabel::new(0, bp.clone());
    let fam = cache.get(&label);
    let i = fam.index_of(&label).expect("label lies in its own family");
    let mut v = VirtualCharacter::zero();
    for (j, m) in fam.members.iter().enumerate() {
        v.add_term(m.clone(), fam.fourier(i, j));
    }
    v
}

/// `R_w = Σ_λ χ_λ(w) R_{χ_λ}` over all bipartitions of the rank of `w`.
pub fn dl_character_full(w: &SignedCycleType) -> VirtualCharacter {
    let mut mn = MnEvaluator::new();
    let mut cache = FamilyCache::default();
    let mut out = VirtualCharacter::zero();
    for bp in bipartitions_of(w.rank()) {
        let x = mn.value(&bp, w);
        if x != 0 {
            out += &almost_character_cached(&bp, &mut cache).scale(Rational64::from_integer(x));
        }
    }
    out
}

/// `R_w` restricted to the principal Φ₂ₙ-block, with integrality checked.
pub fn dl_character(w: &SignedCycleType, n: u32) -> Result<VirtualCharacter> {
    if w.rank() != 2 * n {
        return Err(Error::InvalidArgument(format!(
            "element of rank {} is not in rank {}",
            w.rank(),
            2 * n
        )));
    }
    let full = dl_character_full(w);
    if !full.is_integral() {
        return Err(Error::Verification(format!(
            "non-integral Deligne–Lusztig character at {w}: {full}"
        )));
    }
    cut_to_principal_block(&full, n)
}

pub fn cut_to_principal_block(v: &VirtualCharacter, n: u32) -> Result<VirtualCharacter> {
    let members: std::collections::HashSet<UnipCharLabel> =
        principal_block_members(n)?.into_iter().collect();
    Ok(v.restrict(|l| members.contains(l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn element_classes() {
        for n in 2..7 {
            let m = 2 * n;
            assert_eq!(Element::C.cycle_type(n), SignedCycleType::negative(&[m]));
            assert_eq!(
                Element::C2.cycle_type(n),
                SignedCycleType::negative(&[n, n])
            );
            assert_eq!(
                Element::Vn.cycle_type(n),
                SignedCycleType::negative(&[m - 1, 1])
            );
            assert_eq!(
                Element::Wn.cycle_type(n),
                SignedCycleType::negative(&[m - 2, 2])
            );
        }
    }

    #[test]
    fn small_values() {
        let s1s2 = SignedCycleType::negative(&[2]);
        assert_eq!(mn_value(&bp("2.-"), &s1s2), 1);
        assert_eq!(mn_value(&bp("1,1.-"), &s1s2), -1);
        assert_eq!(mn_value(&bp("1.1"), &s1s2), 0);
        let s1 = SignedCycleType::negative(&[1]);
        assert_eq!(mn_value(&bp("-.1"), &s1), -1);
        assert_eq!(mn_value(&bp("6.-"), &SignedCycleType::negative(&[5, 1])), 1);
        assert_eq!(
            mn_value(&bp("1.1,1,1,1,1"), &SignedCycleType::negative(&[5, 1])),
            -1
        );
        assert_eq!(
            mn_value(&bp("2,1,1,1,1.-"), &SignedCycleType::negative(&[4, 2])),
            -1
        );
    }

    #[test]
    fn identity_gives_dimension() {
        for m in 0..7u32 {
            let id = SignedCycleType::new(
                Partition::new(vec![1; m as usize]).unwrap(),
                Partition::empty(),
            );
            for b in bipartitions_of(m) {
                let binom = (0..b.first.size() as u128)
                    .fold(1u128, |acc, k| acc * (m as u128 - k) / (k + 1));
                let dim = binom * b.first.dimension() * b.second.dimension();
                assert_eq!(mn_value(&b, &id) as u128, dim, "{b}");
            }
        }
    }

    #[test]
    fn oracle_agrees() {
        for m in 1..=3usize {
            let group = SignedPerm::all(m);
            for b in bipartitions_of(m as u32) {
                for g in group.iter().step_by(3) {
                    assert_eq!(
                        brute_force_char_value(&b, g).unwrap(),
                        mn_value(&b, &g.cycle_type())
                    );
                }
            }
        }
        assert!(brute_force_char_value(&bp("4.-"), &SignedPerm::identity(4)).is_err());
    }

    #[test]
    fn paper_family_of_four() {
        for n in 3..7i64 {
            let l = UnipCharLabel::blocks(0, &[(n, 1), (2, 1), (1, n - 2)], &[]).unwrap();
            let fam = family_of(&l);
            let want: Vec<UnipCharLabel> = vec![
                UnipCharLabel::blocks(0, &[(n, 1)], &[(2, 1), (1, n - 2)]).unwrap(),
                UnipCharLabel::blocks(0, &[(n, 1), (2, 1), (1, n - 2)], &[]).unwrap(),
                UnipCharLabel::blocks(0, &[(1, 1)], &[(n + 1, 1), (1, n - 2)]).unwrap(),
                UnipCharLabel::blocks(1, &[(1, n - 2)], &[(n - 1, 1), (1, 1)]).unwrap(),
            ];
            assert_eq!(fam.special(), &want[0]);
            let mut got = fam.members.clone();
            got.sort();
            let mut want = want;
            want.sort();
            assert_eq!(got, want);
            let fb = fam.fourier_block();
            assert!(fb.is_symmetric() && fb.is_involution());
        }
        assert_eq!(family_of(&"0:6.-".parse().unwrap()).len(), 1);
    }

    #[test]
    fn sixteen_family() {
        for n in 3..7i64 {
            let l = UnipCharLabel::blocks(0, &[(n - 1, 1), (2, 2), (1, n - 3)], &[]).unwrap();
            let fam = family_of(&l);
            assert_eq!(fam.len(), 16);
            assert!(fam.fourier_block().is_involution());
            let row = fam.index_of(fam.special()).unwrap();
            assert!((0..16).all(|j| fam.fourier(row, j) > Rational64::zero()));
        }
    }
}
