//! Level-2 Fock space: box-adding operators, i-words and Kashiwara crystal operators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::block::UnipCharLabel;
use crate::partition::{
    bipartitions_of, charged_content, Bipartition, Charge, Component, YoungBox,
};
use crate::symbol::{sigma, ChargedSymbol};

/// An element of ℤ/d.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    /// Normalizes any integer, including negative ones, into `0..d`.
    pub fn new(i: i64, d: u32) -> Self {
        assert!(d >= 1, "modulus must be positive");
        Residue {
            value: i.rem_euclid(d as i64) as u32,
            modulus: d,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn matches(&self, content: i64) -> bool {
        content.rem_euclid(self.modulus as i64) == self.value as i64
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The charge `σ_t + (0, d/2)` used for the series `t` at even `d`.
pub fn series_charge(t: u32, d: u32) -> Charge {
    let s = sigma(t);
    Charge::new(s.s1, s.s2 + d as i64 / 2)
}

/// Sparse vector in the level-2 Fock space of a fixed charge and modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    pub charge: Charge,
    pub d: u32,
    coeffs: BTreeMap<Bipartition, Rational64>,
}

impl FockVector {
    pub fn zero(charge: Charge, d: u32) -> Self {
        FockVector {
            charge,
            d,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(bp: Bipartition, charge: Charge, d: u32) -> Self {
        let mut v = FockVector::zero(charge, d);
        v.add_term(bp, Rational64::from_integer(1));
        v
    }

    pub fn add_term(&mut self, bp: Bipartition, c: Rational64) {
        let e = self.coeffs.entry(bp).or_insert_with(Rational64::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, bp: &Bipartition) -> Rational64 {
        self.coeffs
            .get(bp)
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &Rational64)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Bipartition> {
        self.coeffs.keys().cloned().collect()
    }
}

/// `f_i`: add every addable box of residue `i`, linearly.
pub fn linear_f(i: Residue, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.charge, v.d);
    for (bp, c) in v.terms() {
        for b in bp.addable_boxes() {
            if i.matches(charged_content(b, v.charge)) {
                out.add_term(bp.add_box(b), *c);
            }
        }
    }
    out
}

/// `e_i`: remove every removable box of residue `i`, linearly.
pub fn linear_e(i: Residue, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.charge, v.d);
    for (bp, c) in v.terms() {
        for b in bp.removable_boxes() {
            if i.matches(charged_content(b, v.charge)) {
                out.add_term(bp.remove_box(b), *c);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Ordered addable (+) and removable (−) boxes of one residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IWord<P> {
    pub letters: Vec<(P, Sign)>,
}

impl<P: Clone> IWord<P> {
    /// Cancels adjacent `(−, +)` pairs until the word has the form `(+)^a (−)^b`.
    pub fn reduced(&self) -> Vec<(P, Sign)> {
        let mut stack: Vec<(P, Sign)> = Vec::new();
        for (p, s) in &self.letters {
            if *s == Sign::Plus && matches!(stack.last(), Some((_, Sign::Minus))) {
                stack.pop();
            } else {
                stack.push((p.clone(), *s));
            }
        }
        stack
    }

    /// Position of the good addable box: the rightmost `+` of the reduced word.
    pub fn good_addable(&self) -> Option<P> {
        self.reduced()
            .into_iter()
            .filter(|(_, s)| *s == Sign::Plus)
            .last()
            .map(|(p, _)| p)
    }

    /// Position of the good removable box: the leftmost `−` of the reduced word.
    pub fn good_removable(&self) -> Option<P> {
        self.reduced()
            .into_iter()
            .find(|(_, s)| *s == Sign::Minus)
            .map(|(p, _)| p)
    }

    pub fn signs(&self) -> String {
        self.letters
            .iter()
            .map(|(_, s)| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The i-word of a bipartition: boxes of residue `i` by increasing content, a box of
/// the second component coming first on equal content.
pub fn i_word(bp: &Bipartition, s: Charge, i: Residue) -> IWord<YoungBox> {
    let mut letters: Vec<(i64, u8, YoungBox, Sign)> = Vec::new();
    let tie = |b: &YoungBox| if b.comp == Component::Second { 0u8 } else { 1 };
    for b in bp.addable_boxes() {
        let c = charged_content(b, s);
        if i.matches(c) {
            letters.push((c, tie(&b), b, Sign::Plus));
        }
    }
    for b in bp.removable_boxes() {
        let c = charged_content(b, s);
        if i.matches(c) {
            letters.push((c, tie(&b), b, Sign::Minus));
        }
    }
    letters.sort_by_key(|(c, t, _, _)| (*c, *t));
    IWord {
        letters: letters.into_iter().map(|(_, _, b, s)| (b, s)).collect(),
    }
}

pub fn kashiwara_f(bp: &Bipartition, s: Charge, i: Residue) -> Option<Bipartition> {
    i_word(bp, s, i).good_addable().map(|b| bp.add_box(b))
}

pub fn kashiwara_e(bp: &Bipartition, s: Charge, i: Residue) -> Option<Bipartition> {
    i_word(bp, s, i).good_removable().map(|b| bp.remove_box(b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `f̃_i`, adding a box.
    Up,
    /// `ẽ_i`, removing a box.
    Down,
}

/// Position of an i-box in a symbol: the integer `x` in row X or `y` in row Y such
/// that the box moves `x` to `x+1` (addable) or `x+1` to `x` (removable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolSlot {
    pub comp: Component,
    pub pos: i64,
}

/// The i-word of a symbol with σ_t charge at even `d`. Entries of X carry residue
/// `x`, entries of Y carry residue `y + d/2`.
pub fn symbol_i_word(sym: &ChargedSymbol, i: Residue) -> IWord<SymbolSlot> {
    let half = i.modulus() as i64 / 2;
    let floor = sym.floor() - 1;
    let x = sym.top_row(floor);
    let y = sym.bottom_row(floor);
    let mut letters: Vec<(i64, u8, SymbolSlot, Sign)> = Vec::new();
    for (row, comp, shift, tie) in [
        (&x, Component::First, 0, 1u8),
        (&y, Component::Second, half, 0u8),
    ] {
        let top = row[0] + 1;
        let has = |z: i64| z < floor || row.contains(&z);
        for pos in floor..=top {
            let key = pos + shift;
            if !i.matches(key) {
                continue;
            }
            let slot = SymbolSlot { comp, pos };
            if has(pos) && !has(pos + 1) {
                letters.push((key, tie, slot, Sign::Plus));
            } else if !has(pos) && has(pos + 1) {
                letters.push((key, tie, slot, Sign::Minus));
            }
        }
    }
    letters.sort_by_key(|(c, t, _, _)| (*c, *t));
    IWord {
        letters: letters.into_iter().map(|(_, _, p, s)| (p, s)).collect(),
    }
}

/// `f̃_i` or `ẽ_i` computed directly on the rows of a symbol.
pub fn kashiwara_on_symbol(
    sym: &ChargedSymbol,
    i: Residue,
    dir: Direction,
) -> Option<ChargedSymbol> {
    let word = symbol_i_word(sym, i);
    let slot = match dir {
        Direction::Up => word.good_addable()?,
        Direction::Down => word.good_removable()?,
    };
    let floor = sym.floor() - 1;
    let mut x = sym.top_row(floor);
    let mut y = sym.bottom_row(floor);
    let row = if slot.comp == Component::First {
        &mut x
    } else {
        &mut y
    };
    let (from, to) = match dir {
        Direction::Up => (slot.pos, slot.pos + 1),
        Direction::Down => (slot.pos + 1, slot.pos),
    };
    for z in row.iter_mut() {
        if *z == from {
            *z = to;
        }
    }
    Some(ChargedSymbol::from_rows(&x, &y))
}

/// Applies `ẽ_i` greedily, trying residues `0, 1, …, d−1` at each step, until every
/// `ẽ_i` vanishes. Returns the terminal vertex and the residues used.
pub fn crystal_source(bp: &Bipartition, s: Charge, d: u32) -> (Bipartition, Vec<Residue>) {
    let mut cur = bp.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 0..d {
            let r = Residue::new(i as i64, d);
            if let Some(next) = kashiwara_e(&cur, s, r) {
                cur = next;
                path.push(r);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// True when every `ẽ_i` kills `bp`.
pub fn is_highest_weight(bp: &Bipartition, s: Charge, d: u32) -> bool {
    (0..d).all(|i| kashiwara_e(bp, s, Residue::new(i as i64, d)).is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub i: u32,
}

/// Vertices are labels of bounded rank; an edge `λ →ᵢ μ` means `μ = f̃ᵢ λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub d: u32,
    pub nodes: Vec<UnipCharLabel>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  v{k} [label=\"{n}\"];\n"));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                e.from, e.to, e.i
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes,
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "from": self.nodes[e.from],
                "to": self.nodes[e.to],
                "i": e.i,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.to == v).count()
    }
}

/// Crystal graph on all labels of the given series with rank at most `max_rank`.
pub fn branching_graph(d: u32, series: &[u32], max_rank: u32) -> CrystalGraph {
    let mut nodes = Vec::new();
    for &t in series {
        let base = t * (t + 1);
        if base > max_rank {
            continue;
        }
        for m in 0..=(max_rank - base) {
            for bp in bipartitions_of(m) {
                nodes.push(UnipCharLabel::new(t, bp));
            }
        }
    }
    let index: HashMap<UnipCharLabel, usize> = nodes
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, v)| (v, k))
        .collect();
    let mut edges = Vec::new();
    for (k, v) in nodes.iter().enumerate() {
        let s = series_charge(v.t, d);
        for i in 0..d {
            if let Some(next) = kashiwara_f(&v.bp, s, Residue::new(i as i64, d)) {
                if let Some(&to) = index.get(&UnipCharLabel::new(v.t, next)) {
                    edges.push(CrystalEdge { from: k, to, i });
                }
            }
        }
    }
    CrystalGraph { d, nodes, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn example() -> Bipartition {
        bp("4,2,1,1,1,1.4,4,3,2,2,1,1,1")
    }

    #[test]
    fn residue_normalizes() {
        assert_eq!(Residue::new(-1, 4).value(), 3);
        assert_eq!(Residue::new(9, 4).value(), 1);
    }

    #[test]
    fn worked_word() {
        let w = i_word(&example(), Charge::new(1, 0), Residue::new(0, 4));
        assert_eq!(w.signs(), "+ + - - + + -");
        let boxes: Vec<String> = w.letters.iter().map(|(b, _)| b.to_string()).collect();
        assert_eq!(
            boxes,
            ["(9,1,2)", "(6,2,2)", "(6,1,1)", "(3,3,2)", "(3,2,1)", "(1,5,2)", "(1,4,1)"]
        );
        let red: Vec<String> = w.reduced().iter().map(|(b, s)| format!("{s}{b}")).collect();
        assert_eq!(red, ["+(9,1,2)", "+(6,2,2)", "-(1,4,1)"]);
    }

    #[test]
    fn worked_operators() {
        let s = Charge::new(1, 0);
        let i = Residue::new(0, 4);
        assert_eq!(
            kashiwara_f(&example(), s, i),
            Some(bp("4,2,1,1,1,1.4,4,3,2,2,2,1,1"))
        );
        assert_eq!(
            kashiwara_e(&example(), s, i),
            Some(bp("3,2,1,1,1,1.4,4,3,2,2,1,1,1"))
        );
    }

    #[test]
    fn worked_symbol() {
        let sym = ChargedSymbol::of(bp("3,1,1.2"), 0);
        let i = Residue::new(3, 6);
        let w = symbol_i_word(&sym, i);
        assert_eq!(w.signs(), "+ - +");
        assert_eq!(w.reduced().len(), 1);
        assert_eq!(kashiwara_on_symbol(&sym, i, Direction::Down), None);
        let up = kashiwara_on_symbol(&sym, i, Direction::Up).unwrap();
        assert_eq!(up.top_row(-5), vec![3, 0, -1, -2, -4, -5]);
        assert_eq!(up.charge, sym.charge);
    }

    #[test]
    fn linear_f_on_empty() {
        let s = Charge::new(0, -1);
        let v = FockVector::basis(Bipartition::empty(), s, 3);
        let f = linear_f(Residue::new(0, 3), &v);
        assert_eq!(f.support(), vec![bp("1.-")]);
        assert!(linear_f(Residue::new(0, 3), &FockVector::zero(s, 3)).is_zero());
    }

    #[test]
    fn source_examples() {
        for n in 2..5u32 {
            let d = 2 * n;
            let ones = vec![1; d as usize];
            let top = Bipartition::from_parts(&ones, &[]);
            assert_eq!(crystal_source(&top, series_charge(0, d), d).0, top);
            let twos = vec![2; n as usize - 1];
            let b2 = Bipartition::from_parts(&twos, &[]);
            assert_eq!(crystal_source(&b2, series_charge(1, d), d).0, b2);
        }
        let (src, path) = crystal_source(&Bipartition::empty(), Charge::new(0, 3), 4);
        assert_eq!(src, Bipartition::empty());
        assert!(path.is_empty());
    }

    #[test]
    fn tiny_graph() {
        let g = branching_graph(4, &[0], 0);
        assert_eq!(g.nodes.len(), 1);
        assert!(g.edges.is_empty());
        assert!(g.to_dot().starts_with("digraph"));
    }
}
