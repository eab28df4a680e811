//! Acceptance checks, one per numbered criterion, grouped into suites.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Rational64;

use crate::block::{
    b2_series_members, b6_series_members, principal_block_members, principal_series_members,
    BlockContext, Regime, UnipCharLabel,
};
use crate::closed_forms::{
    c2_coefficients, coxeter_dl, sixteen_family_almost_characters, vn_almost_characters, vn_dl,
    vn_hook_table, wn_almost_characters, wn_dl, wn_hook_table, HookRow,
};
use crate::cuspidal::{gamma_beta_report, u_combination};
use crate::decomp::{
    beta_head, decomposition_matrix, gamma_head, sign_char, steinberg, zero_lemma_cases, Entry,
    ParamName,
};
use crate::dl::{
    almost_character, brute_force_char_value, cut_to_principal_block, dl_character,
    dl_character_full, family_of, mn_value, Element, SignedCycleType, SignedPerm,
};
use crate::error::{Error, Result};
use crate::fock::{
    i_word, kashiwara_e, kashiwara_f, kashiwara_on_symbol, series_charge, symbol_i_word, Direction,
    Residue,
};
use crate::partition::{bipartitions_of, partitions_of, Bipartition, Charge, Component};
use crate::symbol::{dg_leq, dominates, sigma, ChargedSymbol, Dominance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Crystal,
    Mn,
    Tables,
    Matrix,
}

impl Suite {
    pub fn criteria(&self) -> Vec<u32> {
        match self {
            Suite::All => (1..=10).collect(),
            Suite::Crystal => vec![3, 4],
            Suite::Mn => vec![5],
            Suite::Tables => vec![1, 2, 6, 7],
            Suite::Matrix => vec![8, 9, 10],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "crystal" => Ok(Suite::Crystal),
            "mn" => Ok(Suite::Mn),
            "tables" => Ok(Suite::Tables),
            "matrix" => Ok(Suite::Matrix),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub fn criterion_name(id: u32) -> &'static str {
    match id {
        1 => "block census",
        2 => "co-hook construction",
        3 => "crystal fidelity",
        4 => "order comparison",
        5 => "Murnaghan-Nakayama",
        6 => "almost characters",
        7 => "Deligne-Lusztig decompositions",
        8 => "U-identities",
        9 => "zero-lemma replays",
        10 => "decomposition matrix",
        _ => "unknown",
    }
}

/// Inclusive range `lo..=hi`, with `hi` lowered to `n_max` when given.
fn ns(lo: u32, hi: u32, n_max: Option<u32>) -> std::ops::RangeInclusive<u32> {
    lo..=n_max.map_or(hi, |m| m.min(hi))
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<()> {
    let t = start.elapsed();
    if t > limit {
        return Err(fail(format!("{what} took {t:.2?}, limit {limit:?}")));
    }
    Ok(())
}

fn block_census(n_max: Option<u32>) -> Result<String> {
    let start = Instant::now();
    let range = ns(2, 20, n_max);
    for n in range.clone() {
        let total = principal_block_members(n)?.len() as u32;
        let counts = [
            principal_series_members(n).len() as u32,
            b2_series_members(n).len() as u32,
            b6_series_members(n).len() as u32,
        ];
        let want = [n * n - 1 + 4 * n, n * (n + 1) / 2, (n - 1) * (n - 2) / 2];
        if total != 2 * n * n + 3 * n || counts != want {
            return Err(fail(format!(
                "n={n}: {total} members, series {counts:?}, expected {want:?}"
            )));
        }
    }
    within(start, Duration::from_secs(1), "census")?;
    Ok(format!("n = {}..{}", range.start(), range.end()))
}

fn cohook_construction(n_max: Option<u32>) -> Result<String> {
    let range = ns(2, 10, n_max);
    for n in range.clone() {
        let triv = ChargedSymbol::of(Bipartition::empty(), 0);
        let mut syms: BTreeSet<ChargedSymbol> = BTreeSet::new();
        for a in triv.add_cohooks(n) {
            syms.extend(a.add_cohooks(n));
        }
        let defects: BTreeSet<i64> = syms.iter().map(|s| s.defect()).collect();
        if !defects.iter().all(|d| [1, -3, 5].contains(d)) {
            return Err(fail(format!("n={n}: defects {defects:?}")));
        }
        let got: HashSet<UnipCharLabel> = syms
            .iter()
            .map(|s| {
                UnipCharLabel::from_symbol(s)
                    .ok_or_else(|| fail(format!("n={n}: {s:?} has no σ-charge")))
            })
            .collect::<Result<_>>()?;
        let want: HashSet<UnipCharLabel> = principal_block_members(n)?.into_iter().collect();
        if got != want {
            return Err(fail(format!(
                "n={n}: {} symbols, {} block members",
                got.len(),
                want.len()
            )));
        }
    }
    Ok(format!("n = {}..{}", range.start(), range.end()))
}

fn crystal_fidelity() -> Result<String> {
    let ex: Bipartition = "4,2,1,1,1,1.4,4,3,2,2,1,1,1".parse()?;
    let s = Charge::new(1, 0);
    let i0 = Residue::new(0, 4);
    let w = i_word(&ex, s, i0);
    if w.signs() != "+ + - - + + -" {
        return Err(fail(format!(
            "0-word of the first example is {}",
            w.signs()
        )));
    }
    let f = kashiwara_f(&ex, s, i0);
    let e = kashiwara_e(&ex, s, i0);
    if f != Some("4,2,1,1,1,1.4,4,3,2,2,2,1,1".parse()?)
        || e != Some("3,2,1,1,1,1.4,4,3,2,2,1,1,1".parse()?)
    {
        return Err(fail(format!("f0 = {f:?}, e0 = {e:?} on the first example")));
    }
    let sym = ChargedSymbol::of("3,1,1.2".parse()?, 0);
    let i3 = Residue::new(3, 6);
    if symbol_i_word(&sym, i3).signs() != "+ - +" {
        return Err(fail("3-word of the symbol example"));
    }
    if kashiwara_on_symbol(&sym, i3, Direction::Down).is_some() {
        return Err(fail("e3 does not vanish on the symbol example"));
    }
    let up = kashiwara_on_symbol(&sym, i3, Direction::Up)
        .ok_or_else(|| fail("f3 vanishes on the symbol example"))?;
    if up.top_row(-5) != [3, 0, -1, -2, -4, -5] || up.bottom_row(-5) != sym.bottom_row(-5) {
        return Err(fail(format!("f3 of the symbol example is {}", up.render())));
    }

    let mut pairs = 0usize;
    for d in [2u32, 3, 4, 6] {
        for t in 0..=2u32 {
            let charge = if d % 2 == 0 {
                series_charge(t, d)
            } else {
                sigma(t)
            };
            for m in 0..=6 {
                for bp in bipartitions_of(m) {
                    for i in 0..d {
                        let r = Residue::new(i as i64, d);
                        if let Some(up) = kashiwara_f(&bp, charge, r) {
                            pairs += 1;
                            if kashiwara_e(&up, charge, r).as_ref() != Some(&bp) {
                                return Err(fail(format!(
                                    "e{i} f{i} {bp} != {bp} at d={d}, t={t}"
                                )));
                            }
                        }
                        if let Some(down) = kashiwara_e(&bp, charge, r) {
                            if kashiwara_f(&down, charge, r).as_ref() != Some(&bp) {
                                return Err(fail(format!(
                                    "f{i} e{i} {bp} != {bp} at d={d}, t={t}"
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("worked examples and {pairs} inverse pairs"))
}

fn order_comparison() -> Result<String> {
    let start = Instant::now();
    let mut checked = 0usize;
    for d in [2u32, 4, 6] {
        for t in 0..=3u32 {
            let s = series_charge(t, d);
            for m in 0..=6 {
                let bps = bipartitions_of(m);
                let syms: Vec<ChargedSymbol> = bps
                    .iter()
                    .map(|b| ChargedSymbol::of(b.clone(), t))
                    .collect();
                for (a, sa) in bps.iter().zip(&syms) {
                    for (b, sb) in bps.iter().zip(&syms) {
                        if !dg_leq(a, b, s, d) {
                            continue;
                        }
                        checked += 1;
                        let dom = dominates(sa, sb);
                        if !matches!(dom, Dominance::Less | Dominance::Equiv) {
                            return Err(fail(format!(
                                "{a} ⪯ {b} at d={d}, t={t}, but symbols compare {dom:?}"
                            )));
                        }
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(30), "order comparison")?;
    Ok(format!("{checked} comparable pairs, no counterexample"))
}

fn check_hook_rows(rows: &[HookRow], hook: u32, w: &SignedCycleType) -> Result<()> {
    for r in rows {
        let hits: Vec<_> =
            r.bp.rim_hooks_with_legs(hook)
                .into_iter()
                .filter(|(core, _, _)| *core == r.core)
                .collect();
        let [(_, comp, leg)] = hits.as_slice() else {
            return Err(fail(format!(
                "{}: {} hooks with core {}",
                r.bp,
                hits.len(),
                r.core
            )));
        };
        let h = *leg as i64 + i64::from(*comp == Component::Second);
        let sign = if h % 2 == 0 { 1 } else { -1 };
        let v = mn_value(&r.bp, w);
        if h != r.h || sign * r.core_value != r.value || v != r.value {
            return Err(fail(format!(
                "{}: h = {h}, value {v}; table h = {}, value {}",
                r.bp, r.h, r.value
            )));
        }
    }
    Ok(())
}

fn murnaghan_nakayama(n_max: Option<u32>) -> Result<String> {
    let mut pairs = 0;
    for m in 2..=3u32 {
        for bp in bipartitions_of(m) {
            for g in SignedPerm::all(m as usize) {
                let bf = brute_force_char_value(&bp, &g)?;
                let mn = mn_value(&bp, &g.cycle_type());
                if bf != mn {
                    return Err(fail(format!(
                        "χ_{bp} at {}: oracle {bf}, recursion {mn}",
                        g.cycle_type()
                    )));
                }
                pairs += 1;
            }
        }
    }
    let range = ns(3, 8, n_max);
    for n in range.clone() {
        check_hook_rows(&vn_hook_table(n), 2 * n - 1, &Element::Vn.cycle_type(n))
            .map_err(|e| fail(format!("vn table, n={n}: {e}")))?;
        check_hook_rows(&wn_hook_table(n), 2 * n - 2, &Element::Wn.cycle_type(n))
            .map_err(|e| fail(format!("wn table, n={n}: {e}")))?;
    }
    Ok(format!(
        "{pairs} group elements against the oracle; tables for n = {}..{}",
        range.start(),
        range.end()
    ))
}

fn almost_characters(n_max: Option<u32>) -> Result<String> {
    let range = ns(3, 8, n_max);
    let mut rows = 0;
    for n in range.clone() {
        let all = vn_almost_characters(n)
            .into_iter()
            .chain(wn_almost_characters(n))
            .chain(sixteen_family_almost_characters(n));
        for (bp, want) in all {
            let got = cut_to_principal_block(&almost_character(&bp), n)?;
            if got != want {
                return Err(fail(format!("n={n}, {bp}: computed {got}, table {want}")));
            }
            rows += 1;
        }
        let mut seen = HashSet::new();
        for l in principal_block_members(n)? {
            let fam = family_of(&l);
            if !seen.insert(fam.key.clone()) {
                continue;
            }
            let fb = fam.fourier_block();
            if !fb.is_symmetric() || !fb.is_involution() {
                return Err(fail(format!(
                    "Fourier block of the family of {l} is not an orthogonal involution"
                )));
            }
        }
    }
    Ok(format!(
        "{rows} rows for n = {}..{}; Fourier blocks are orthogonal involutions",
        range.start(),
        range.end()
    ))
}

fn deligne_lusztig(n_max: Option<u32>) -> Result<String> {
    let range = ns(3, 8, n_max);
    for n in range.clone() {
        for (e, want) in [
            (Element::C, coxeter_dl(n)),
            (Element::Vn, vn_dl(n)),
            (Element::Wn, wn_dl(n)),
        ] {
            let got = dl_character(&e.cycle_type(n), n)?;
            if got != want {
                return Err(fail(format!(
                    "n={n}, {e:?}: computed {got}, closed form {want}"
                )));
            }
        }
        let c2 = dl_character(&Element::C2.cycle_type(n), n)?;
        for (l, c) in c2_coefficients(n) {
            if c2.coeff(&l) != Rational64::from_integer(c) {
                return Err(fail(format!(
                    "n={n}: <R_c2, {l}> = {}, expected {c}",
                    c2.coeff(&l)
                )));
            }
        }
    }
    let mut classes = 0;
    for m in (2..=12).step_by(2) {
        for p in partitions_of(m) {
            let w = SignedCycleType::negative(p.parts());
            let full = dl_character_full(&w);
            if !full.is_integral() {
                return Err(fail(format!("R_w is not integral at {w}")));
            }
            classes += 1;
        }
    }
    Ok(format!(
        "n = {}..{}; {classes} negative classes integral",
        range.start(),
        range.end()
    ))
}

fn u_identities(n_max: Option<u32>) -> Result<String> {
    let range = ns(4, 8, n_max);
    for n in range.clone() {
        let u: Vec<_> = (1..=10)
            .map(|k| u_combination(k, n))
            .collect::<Result<_>>()?;
        let lhs = u[0].clone() - u[1].clone() - u[3].clone();
        let want = crate::character::VirtualCharacter::from_terms([
            (crate::decomp::lab(0, &[(2 * n as i64, 1)], &[]), 1),
            (steinberg(n), -1),
        ]);
        if lhs != want {
            return Err(fail(format!("n={n}: U1 - U2 - U4 = {lhs}")));
        }
    }
    Ok(format!(
        "U1..U10 for n = {}..{}",
        range.start(),
        range.end()
    ))
}

fn zero_lemma(n_max: Option<u32>) -> Result<String> {
    let range = ns(3, 8, n_max);
    let mut errors = Vec::new();
    for n in range.clone() {
        for case in zero_lemma_cases(n) {
            match case.verify(n) {
                Ok(_) => {}
                Err(Error::Verification(m)) => errors.push(m),
                Err(e) => errors.push(e.to_string()),
            }
        }
    }
    if errors.is_empty() {
        Ok(format!(
            "five instances for n = {}..{}",
            range.start(),
            range.end()
        ))
    } else {
        Err(fail(errors.join("; ")))
    }
}

fn matrix(n_max: Option<u32>) -> Result<String> {
    let range = ns(3, 10, n_max);
    for n in range.clone() {
        let start = Instant::now();
        let large = decomposition_matrix(&BlockContext::new(n, Regime::LargeEll))?;
        let pos = |l: &UnipCharLabel| {
            large
                .order
                .iter()
                .position(|x| x == l)
                .expect("block member")
        };
        let mut twos = Vec::new();
        for r in 0..large.size() {
            for c in 0..large.size() {
                match large.entry(r, c) {
                    Entry::Int(0 | 1) => {}
                    Entry::Int(2) => twos.push((r, c)),
                    e => return Err(fail(format!("n={n}: entry {e:?} at ({r}, {c})"))),
                }
            }
        }
        let cusp = [
            (pos(&steinberg(n)), pos(&gamma_head(n))),
            (pos(&sign_char(n)), pos(&beta_head(n))),
        ];
        let mut want_twos = cusp.to_vec();
        want_twos.sort();
        if twos != want_twos {
            return Err(fail(format!(
                "n={n}: entries equal to 2 at {twos:?}, expected {want_twos:?}"
            )));
        }
        let generic = decomposition_matrix(&BlockContext::new(n, Regime::Generic))?;
        let mut params: Vec<(usize, usize, ParamName)> = generic
            .params()
            .into_iter()
            .map(|(r, c, p)| (r, c, p.name))
            .collect();
        params.sort_by_key(|&(r, c, _)| (r, c));
        let mut want = vec![
            (cusp[0].0, cusp[0].1, ParamName::Gamma),
            (cusp[1].0, cusp[1].1, ParamName::Beta),
        ];
        want.sort_by_key(|&(r, c, _)| (r, c));
        if params != want {
            return Err(fail(format!(
                "n={n}: symbolic entries at {params:?}, expected {want:?}"
            )));
        }
        if n >= 4 {
            let rep = gamma_beta_report(n, Regime::LargeEll)?;
            if rep.gamma.value() != Some(2) || rep.beta.value() != Some(2) {
                return Err(fail(format!("n={n}: γ = {}, β = {}", rep.gamma, rep.beta)));
            }
        }
        within(start, Duration::from_secs(5), &format!("matrix at n={n}"))?;
    }
    Ok(format!(
        "n = {}..{}; γ = β = 2 re-derived",
        range.start(),
        range.end()
    ))
}

pub fn run_criterion(id: u32, n_max: Option<u32>) -> CriterionResult {
    let start = Instant::now();
    let out = match id {
        1 => block_census(n_max),
        2 => cohook_construction(n_max),
        3 => crystal_fidelity(),
        4 => order_comparison(),
        5 => murnaghan_nakayama(n_max),
        6 => almost_characters(n_max),
        7 => deligne_lusztig(n_max),
        8 => u_identities(n_max),
        9 => zero_lemma(n_max),
        10 => matrix(n_max),
        _ => Err(Error::InvalidArgument(format!("no criterion {id}"))),
    };
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    CriterionResult {
        id,
        name: criterion_name(id),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_suite(suite: Suite, n_max: Option<u32>) -> Vec<CriterionResult> {
    suite
        .criteria()
        .into_iter()
        .map(|id| run_criterion(id, n_max))
        .collect()
}

pub fn render_table(results: &[CriterionResult]) -> String {
    let mut s = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{status} {:>2} {:<32} {:>9.2?}  {}",
            r.id, r.name, r.elapsed, r.detail
        );
    }
    s
}
