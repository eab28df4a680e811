//! Unipotent character labels, ℓ-blocks, and the principal Φ₂ₙ-block.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{bipartitions_of, Bipartition, Partition};
use crate::symbol::{ChargedSymbol, FamilyKey};

/// `[λ¹.λ²]` in the Harish-Chandra series above the cuspidal unipotent character
/// of `B_{t²+t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnipCharLabel {
    pub t: u32,
    pub bp: Bipartition,
}

impl UnipCharLabel {
    pub fn new(t: u32, bp: Bipartition) -> Self {
        UnipCharLabel { t, bp }
    }

    /// Principal-series label from blocks, e.g. `ps(&[(2, 1), (1, 3)], &[(4, 1)])`.
    pub fn blocks(t: u32, first: &[(i64, i64)], second: &[(i64, i64)]) -> Result<Self> {
        Ok(UnipCharLabel {
            t,
            bp: Bipartition::new(
                Partition::from_blocks(first)?,
                Partition::from_blocks(second)?,
            ),
        })
    }

    pub fn rank(&self) -> u32 {
        self.bp.size() + self.t * (self.t + 1)
    }

    pub fn symbol(&self) -> ChargedSymbol {
        ChargedSymbol::of(self.bp.clone(), self.t)
    }

    pub fn from_symbol(sym: &ChargedSymbol) -> Option<Self> {
        sym.series().map(|t| UnipCharLabel::new(t, sym.bp.clone()))
    }

    pub fn family_key(&self) -> FamilyKey {
        self.symbol().family_key()
    }

    /// Series name: `B0`, `B2`, `B6`, ….
    pub fn series_name(&self) -> String {
        format!("B{}", self.t * (self.t + 1))
    }
}

impl fmt::Display for UnipCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.t, self.bp)
    }
}

impl FromStr for UnipCharLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((t, bp)) => Ok(UnipCharLabel {
                t: t.trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))?,
                bp: bp.parse()?,
            }),
            None => Ok(UnipCharLabel {
                t: 0,
                bp: s.parse()?,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// Blocks given by d-cores.
    Linear,
    /// Blocks given by e-co-cores.
    Unitary,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockId {
    pub kind: BlockKind,
    pub core: ChargedSymbol,
    pub weight: u32,
}

/// The block containing `label`: the `d`-core for [`BlockKind::Linear`], the
/// `d`-co-core for [`BlockKind::Unitary`] (pass `e` as `d`), with the number of
/// hooks removed as weight.
pub fn block_of(label: &UnipCharLabel, d: u32, kind: BlockKind) -> BlockId {
    let sym = label.symbol();
    let (core, weight) = match kind {
        BlockKind::Linear => {
            let core = sym.d_core(d);
            let weight = (sym.bp.size() - core.bp.size()) / d;
            (core, weight)
        }
        BlockKind::Unitary => (sym.d_cocore(d), sym.cohook_weight(d)),
    };
    BlockId { kind, core, weight }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `Φ₂ₙ(q)_ℓ > 4n`: both unknown entries equal 2.
    LargeEll,
    /// Nothing is assumed about the ℓ-part of `Φ₂ₙ(q)`.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockContext {
    pub n: u32,
    pub d: u32,
    pub regime: Regime,
}

impl BlockContext {
    pub fn new(n: u32, regime: Regime) -> Self {
        BlockContext {
            n,
            d: 2 * n,
            regime,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

fn mobius(mut m: u64) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

/// `Φ_m(q)` as an exact integer.
pub fn cyclotomic_value(m: u64, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in (1..=m).filter(|d| m.is_multiple_of(*d)) {
        let factor = q.pow(d as u32) - BigInt::one();
        match mobius(m / d) {
            1 => num *= factor,
            -1 => den *= factor,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// Classifies `(q, ℓ)` for the principal Φ₂ₙ-block: the order of `q` modulo `ℓ`
/// must be `2n`; the regime depends on whether `Φ₂ₙ(q)_ℓ > 4n`.
pub fn regime_of(q: u64, ell: u64, n: u32) -> Result<BlockContext> {
    if q.is_multiple_of(2) || !is_prime_power(q) {
        return Err(Error::InvalidArgument(format!(
            "q = {q} must be an odd prime power"
        )));
    }
    if ell.is_multiple_of(2) || !is_prime(ell) {
        return Err(Error::InvalidArgument(format!(
            "ell = {ell} must be an odd prime"
        )));
    }
    if q.is_multiple_of(ell) {
        return Err(Error::InvalidArgument(format!(
            "ell = {ell} divides q = {q}"
        )));
    }
    let mut order = 1u64;
    let mut x = q % ell;
    while x != 1 {
        x = x * (q % ell) % ell;
        order += 1;
    }
    if order != 2 * n as u64 {
        return Err(Error::NotPrincipalConfiguration(format!(
            "order of {q} mod {ell} is {order}, not {}",
            2 * n
        )));
    }
    let mut phi = cyclotomic_value(2 * n as u64, q);
    let ell_big = BigInt::from(ell);
    let mut part = BigInt::one();
    while (&phi % &ell_big).is_zero() {
        phi /= &ell_big;
        part *= &ell_big;
    }
    let regime = if part > BigInt::from(4 * n) {
        Regime::LargeEll
    } else {
        Regime::Generic
    };
    Ok(BlockContext::new(n, regime))
}

fn label(t: u32, first: &[(i64, i64)], second: &[(i64, i64)]) -> UnipCharLabel {
    UnipCharLabel::blocks(t, first, second).expect("well-formed block member")
}

/// Members of the principal series in the principal Φ₂ₙ-block.
pub fn principal_series_members(n: u32) -> Vec<UnipCharLabel> {
    let n = n as i64;
    let mut out = Vec::new();
    for j in 0..=n {
        for i in 1..n {
            out.push(label(
                0,
                &[(n - i, 1), (1, j)],
                &[(n - j + 1, 1), (1, i - 1)],
            ));
        }
    }
    for j in 0..2 * n {
        out.push(label(0, &[(2 * n - j, 1), (1, j)], &[]));
    }
    for i in 1..=2 * n {
        out.push(label(0, &[], &[(2 * n - i + 1, 1), (1, i - 1)]));
    }
    out
}

/// Members of the `B₂`-series.
pub fn b2_series_members(n: u32) -> Vec<UnipCharLabel> {
    let n = n as i64;
    let mut out = Vec::new();
    for j in 0..=n {
        for i in 0..j {
            out.push(label(
                1,
                &[(2, i), (1, j - i - 1)],
                &[(n - i - 1, 1), (n - j, 1)],
            ));
        }
    }
    out
}

/// Members of the `B₆`-series.
pub fn b6_series_members(n: u32) -> Vec<UnipCharLabel> {
    let n = n as i64;
    let mut out = Vec::new();
    for j in 1..n {
        for i in 1..j {
            out.push(label(
                2,
                &[(n - i - 2, 1), (n - j - 1, 1)],
                &[(2, i - 1), (1, j - i - 1)],
            ));
        }
    }
    out
}

/// Linear extension of dominance: larger partial-sum vectors first, then by `t`
/// and bipartition.
pub fn canonical_cmp(a: &UnipCharLabel, b: &UnipCharLabel) -> Ordering {
    let ka = a.family_key();
    let kb = b.family_key();
    let floor = ka.base.min(kb.base);
    let pa = ka.partial_sums(floor);
    let pb = kb.partial_sums(floor);
    pb.cmp(&pa).then(a.t.cmp(&b.t)).then(a.bp.cmp(&b.bp))
}

/// The `2n² + 3n` unipotent characters of the principal Φ₂ₙ-block in canonical order.
pub fn principal_block_members(n: u32) -> Result<Vec<UnipCharLabel>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} must be at least 2"
        )));
    }
    let mut out = principal_series_members(n);
    out.extend(b2_series_members(n));
    out.extend(b6_series_members(n));
    out.sort_by(canonical_cmp);
    Ok(out)
}

/// All labels of rank `m`, over every series that fits.
pub fn labels_of_rank(m: u32) -> Vec<UnipCharLabel> {
    let mut out = Vec::new();
    let mut t = 0;
    while t * (t + 1) <= m {
        for bp in bipartitions_of(m - t * (t + 1)) {
            out.push(UnipCharLabel::new(t, bp));
        }
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for n in 2..12u32 {
            let m = principal_block_members(n).unwrap();
            assert_eq!(m.len() as u32, 2 * n * n + 3 * n);
            assert_eq!(principal_series_members(n).len() as u32, n * n - 1 + 4 * n);
            assert_eq!(b2_series_members(n).len() as u32, n * (n + 1) / 2);
            assert_eq!(b6_series_members(n).len() as u32, (n - 1) * (n - 2) / 2);
            let mut sorted = m.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), m.len());
        }
        assert!(principal_block_members(1).is_err());
        assert!(principal_block_members(3)
            .unwrap()
            .contains(&"2:-.-".parse().unwrap()));
    }

    #[test]
    fn members_lie_in_block() {
        let triv = ChargedSymbol::of(Bipartition::empty(), 0);
        for n in 2..6u32 {
            for l in principal_block_members(n).unwrap() {
                assert_eq!(l.rank(), 2 * n);
                let b = block_of(&l, n, BlockKind::Unitary);
                assert_eq!(b.core, triv, "{l}");
                assert_eq!(b.weight, 2);
            }
        }
    }

    #[test]
    fn brute_force_classification() {
        let triv = ChargedSymbol::of(Bipartition::empty(), 0);
        for n in 2..6u32 {
            let mut brute: Vec<UnipCharLabel> = labels_of_rank(2 * n)
                .into_iter()
                .filter(|l| l.symbol().d_cocore(n) == triv)
                .collect();
            brute.sort();
            let mut listed = principal_block_members(n).unwrap();
            listed.sort();
            assert_eq!(brute, listed);
        }
    }

    #[test]
    fn regime_examples() {
        let ctx = regime_of(3, 5, 2).unwrap();
        assert_eq!(ctx.regime, Regime::Generic);
        assert!(matches!(
            regime_of(3, 41, 2),
            Err(Error::NotPrincipalConfiguration(_))
        ));
        assert!(regime_of(2, 5, 2).is_err());
        assert_eq!(cyclotomic_value(4, 3), BigInt::from(10));
        assert_eq!(cyclotomic_value(6, 2), BigInt::from(3));
        // 3 has order 4 mod 41? 3^4 = 81 = −1 mod 41, so order 8: n = 4 works.
        assert!(regime_of(3, 41, 4).is_ok());
    }

    #[test]
    fn label_text() {
        let l: UnipCharLabel = "1:2,2,2.-".parse().unwrap();
        assert_eq!(l.t, 1);
        assert_eq!(l.to_string(), "1:2,2,2.-");
        assert_eq!(l.rank(), 8);
        let js = serde_json::to_string(&l).unwrap();
        assert_eq!(js, r#"{"t":1,"bp":{"first":[2,2,2],"second":[]}}"#);
    }
}
