//! The cuspidal columns: induced combinations `Uₖ`, coordinates of Deligne–Lusztig
//! characters in the PIM basis, and the bounds on γ and β.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::Rational64;
use serde_json::json;

use crate::block::{BlockContext, Regime, UnipCharLabel};
use crate::character::VirtualCharacter;
use crate::closed_forms::{c2_coefficients, coxeter_dl, u_closed_form, u_source, vn_dl, wn_dl};
use crate::decomp::{
    beta_head, cut_to_block, decomposition_matrix, duality, gamma_head, hc_induce, sign_char,
    steinberg, typea_steinberg_induction, DecompositionMatrix, ParamName,
};
use crate::dl::{dl_character, Element};
use crate::error::{Error, Result};

/// `Uₖ` computed by induction and cut to the block.
pub fn u_induced(k: u32, n: u32) -> Result<VirtualCharacter> {
    let ctx = BlockContext::new(n, Regime::Generic);
    let full = match k {
        4 => typea_steinberg_induction(n),
        1..=10 => hc_induce(&u_source(k, n)),
        _ => return Err(Error::InvalidArgument(format!("no U{k}"))),
    };
    cut_to_block(&full, &ctx)
}

/// `Uₖ`, checked against its closed form.
pub fn u_combination(k: u32, n: u32) -> Result<VirtualCharacter> {
    if n < 2 || ((k == 9 || k == 10) && n < 3) {
        return Err(Error::InvalidArgument(format!(
            "U{k} needs a larger n than {n}"
        )));
    }
    let got = u_induced(k, n)?;
    let want = u_closed_form(k, n);
    if got != want {
        return Err(Error::Verification(format!(
            "U{k} at n={n}: induced {got}, closed form {want}, difference {}",
            got.clone() - want.clone()
        )));
    }
    Ok(got)
}

/// `c + g·γ + b·β`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Affine {
    pub c: i64,
    pub gamma: i64,
    pub beta: i64,
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine {
            c,
            gamma: 0,
            beta: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Affine::default()
    }

    pub fn is_constant(&self) -> bool {
        self.gamma == 0 && self.beta == 0
    }

    pub fn eval(&self, gamma: i64, beta: i64) -> i64 {
        self.c + self.gamma * gamma + self.beta * beta
    }
}

impl Add for Affine {
    type Output = Affine;
    fn add(self, o: Affine) -> Affine {
        Affine {
            c: self.c + o.c,
            gamma: self.gamma + o.gamma,
            beta: self.beta + o.beta,
        }
    }
}

impl Sub for Affine {
    type Output = Affine;
    fn sub(self, o: Affine) -> Affine {
        Affine {
            c: self.c - o.c,
            gamma: self.gamma - o.gamma,
            beta: self.beta - o.beta,
        }
    }
}

impl Mul<Affine> for i64 {
    type Output = Affine;
    fn mul(self, a: Affine) -> Affine {
        Affine {
            c: self * a.c,
            gamma: self * a.gamma,
            beta: self * a.beta,
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.c != 0 || self.is_constant() {
            parts.push(self.c.to_string());
        }
        for (k, name) in [(self.gamma, "γ"), (self.beta, "β")] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                -1 => parts.push(format!("-{name}")),
                _ => parts.push(format!("{k}{name}")),
            }
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

fn param_affine(name: ParamName, times: i64) -> Affine {
    match name {
        ParamName::Gamma => Affine {
            c: 0,
            gamma: times,
            beta: 0,
        },
        ParamName::Beta => Affine {
            c: 0,
            gamma: 0,
            beta: times,
        },
    }
}

/// Coordinates of an integral virtual character of the block in the basis of PIM
/// columns of a GENERIC matrix, as affine functions of γ and β.
pub fn pim_coordinates(
    x: &VirtualCharacter,
    m: &DecompositionMatrix,
) -> Result<BTreeMap<UnipCharLabel, Affine>> {
    let mut rem: BTreeMap<UnipCharLabel, Affine> = BTreeMap::new();
    for (l, c) in x.terms() {
        if !c.is_integer() {
            return Err(Error::Verification(format!(
                "non-integral coefficient {c} at {l}"
            )));
        }
        rem.insert(l.clone(), Affine::constant(c.to_integer()));
    }
    let mut out = BTreeMap::new();
    for (head, col) in m.order.iter().zip(&m.columns) {
        let a = rem.get(head).copied().unwrap_or_default();
        if a.is_zero() {
            continue;
        }
        out.insert(head.clone(), a);
        for (l, c) in col.entries.terms() {
            let e = rem.entry(l.clone()).or_default();
            *e = *e - c.to_integer() * a;
        }
        if let Some((l, p)) = &col.symbolic {
            if !a.is_constant() {
                return Err(Error::SymbolicArithmetic(format!("{a} times {}", p.name)));
            }
            let e = rem.entry(l.clone()).or_default();
            *e = *e - param_affine(p.name, a.c);
        }
    }
    rem.retain(|_, a| !a.is_zero());
    if !rem.is_empty() {
        return Err(Error::Verification(format!(
            "{x} is not in the span of the block's PIMs"
        )));
    }
    Ok(out)
}

/// The four PIMs with cuspidal head.
pub fn cuspidal_heads(n: u32) -> Vec<UnipCharLabel> {
    let mut out = vec![steinberg(n), sign_char(n), gamma_head(n)];
    if n >= 3 {
        out.push(beta_head(n));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: i64,
    pub upper: i64,
}

impl Interval {
    pub fn value(&self) -> Option<i64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "[{}, {}]", self.lower, self.upper),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GammaBetaReport {
    pub n: u32,
    pub regime: Regime,
    pub gamma: Interval,
    pub beta: Interval,
    /// Coordinate of `R_c` on `Ψ_{[.1^{2n}]}`.
    pub coxeter_steinberg_coordinate: Affine,
    /// Coordinate of `R_{wₙ}` on `Ψ_{[1^{2n}.]}`.
    pub wn_sign_coordinate: Affine,
    /// `bR_{wₙ}` minus its combination of the `Uₖ`.
    pub wn_residual: VirtualCharacter,
    /// Whether the variant with `-U₃` and `3[.1^{2n}]` holds.
    pub wn_displayed_holds: bool,
    /// One line per verified step.
    pub log: Vec<String>,
}

impl GammaBetaReport {
    pub fn to_json(&self) -> serde_json::Value {
        let iv = |i: &Interval| json!({"lower": i.lower, "upper": i.upper, "value": i.value()});
        json!({
            "n": self.n,
            "regime": format!("{:?}", self.regime),
            "gamma": iv(&self.gamma),
            "beta": iv(&self.beta),
            "coxeter_steinberg_coordinate": self.coxeter_steinberg_coordinate.to_string(),
            "wn_sign_coordinate": self.wn_sign_coordinate.to_string(),
            "wn_residual": self.wn_residual.to_json(),
            "wn_displayed_holds": self.wn_displayed_holds,
            "log": self.log,
        })
    }
}

fn lin(terms: &[(i64, &VirtualCharacter)]) -> VirtualCharacter {
    let mut out = VirtualCharacter::zero();
    for (c, v) in terms {
        out += &v.scale(Rational64::from_integer(*c));
    }
    out
}

fn expect_eq(what: &str, got: &VirtualCharacter, want: &VirtualCharacter) -> Result<()> {
    if got != want {
        return Err(Error::Verification(format!(
            "{what}: computed {got}, expected {want}, difference {}",
            got.clone() - want.clone()
        )));
    }
    Ok(())
}

fn coordinate(coords: &BTreeMap<UnipCharLabel, Affine>, l: &UnipCharLabel) -> Affine {
    coords.get(l).copied().unwrap_or_default()
}

/// Upper bound on a parameter from `coordinate ≥ 0`, where the coordinate is
/// `c − p` in that parameter alone.
fn upper_from(a: Affine, name: ParamName) -> Result<i64> {
    let (k, other) = match name {
        ParamName::Gamma => (a.gamma, a.beta),
        ParamName::Beta => (a.beta, a.gamma),
    };
    if k != -1 || other != 0 {
        return Err(Error::Verification(format!(
            "coordinate {a} is not of the form c - {name}"
        )));
    }
    Ok(a.c)
}

/// Re-derives the bounds on γ and β from Deligne–Lusztig characters.
pub fn gamma_beta_report(n: u32, regime: Regime) -> Result<GammaBetaReport> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "n = {n}: every Uₖ needs n ≥ 4"
        )));
    }
    let ctx = BlockContext::new(n, Regime::Generic);
    let mat = decomposition_matrix(&ctx)?;
    let mut log = Vec::new();

    let u: Vec<VirtualCharacter> = (1..=10)
        .map(|k| u_combination(k, n))
        .collect::<Result<_>>()?;
    log.push(format!("U1..U10 agree with their closed forms at n={n}"));
    let du1 = cut_to_block(&duality(&u[0]), &ctx)?;
    let du5 = cut_to_block(&duality(&u[4]), &ctx)?;
    let du7 = cut_to_block(&duality(&u[6]), &ctx)?;
    let heads = cuspidal_heads(n);
    for (name, v) in (1..=10).map(|k| (format!("U{k}"), &u[k - 1])).chain([
        ("D(U1)".to_string(), &du1),
        ("D(U5)".to_string(), &du5),
        ("D(U7)".to_string(), &du7),
    ]) {
        let coords = pim_coordinates(v, &mat)?;
        for h in &heads {
            let a = coordinate(&coords, h);
            if !a.is_zero() {
                return Err(Error::Verification(format!(
                    "{name} has coordinate {a} on the cuspidal PIM {h}"
                )));
            }
        }
    }
    log.push("no Uₖ or D(Uₖ) involves a cuspidal PIM".into());

    let u1234 = lin(&[(1, &u[0]), (-1, &u[1]), (-1, &u[2]), (-1, &u[3])]);
    let st = steinberg(n);
    let sg = sign_char(n);
    let gh = gamma_head(n);
    let bh = beta_head(n);

    // Upper bound on γ from R_c.
    let rc = dl_character(&Element::C.cycle_type(n), n)?;
    expect_eq("bR_c", &rc, &coxeter_dl(n))?;
    let res_c = rc.clone() - u1234.clone();
    let want_c = VirtualCharacter::from_terms([(gh.clone(), 1), (st.clone(), 2)]);
    expect_eq("bR_c - (U1-U2-U3-U4)", &res_c, &want_c)?;
    let coords_c = pim_coordinates(&rc, &mat)?;
    let cst = coordinate(&coords_c, &st);
    let gamma_upper = upper_from(cst, ParamName::Gamma)?;
    log.push(format!(
        "coordinate of R_c on Psi[{st}] is {cst}, so γ ≤ {gamma_upper}"
    ));

    // Lower bounds from R_{c²}.
    let rc2 = dl_character(&Element::C2.cycle_type(n), n)?;
    for (l, c) in c2_coefficients(n) {
        let got = rc2.coeff(&l);
        if got != Rational64::from_integer(c) {
            return Err(Error::Verification(format!(
                "<bR_c2, {l}> = {got}, expected {c}"
            )));
        }
    }
    let pair = |head: &UnipCharLabel, row: &UnipCharLabel| -> (i64, i64) {
        (rc2.coeff(head).to_integer(), rc2.coeff(row).to_integer())
    };
    let (g0, g1) = pair(&gh, &st);
    let (b0, b1) = pair(&bh, &sg);
    // <R_{c²}, Ψ> = g0 + g1·γ ≥ 0 in the large-ℓ regime.
    let lower_from = |c0: i64, c1: i64| -> Result<i64> {
        if c1 <= 0 {
            return Err(Error::Verification(format!(
                "<R_c2, Psi> = {c0} + {c1}·p gives no lower bound"
            )));
        }
        Ok((-c0 + c1 - 1).div_euclid(c1).max(0))
    };
    let gamma_lower = match regime {
        Regime::LargeEll => lower_from(g0, g1)?,
        Regime::Generic => 0,
    };
    log.push(format!("<R_c2, Psi[{gh}]> = {g0} + {g1}γ"));

    // R_{vₙ} identity.
    let rv = dl_character(&Element::Vn.cycle_type(n), n)?;
    expect_eq("bR_vn", &rv, &vn_dl(n))?;
    let sign_n = if n.is_multiple_of(2) { 1 } else { -1 };
    let comb_v = lin(&[(2, &u1234), (-1, &u[4]), (-1, &du5), (sign_n, &u[5])]);
    let want_v = VirtualCharacter::from_terms([(gh.clone(), 2), (st.clone(), 4)]);
    expect_eq("bR_vn - combination", &(rv.clone() - comb_v), &want_v)?;
    log.push("bR_vn = 2(U1-U2-U3-U4) - U5 - D(U5) + (-1)^n U6 + 2[B2 cusp] + 4[St]".into());

    // R_{wₙ} and the bound on β.
    let rw = dl_character(&Element::Wn.cycle_type(n), n)?;
    expect_eq("bR_wn", &rw, &wn_dl(n))?;
    let comb_w = |u3: i64| {
        lin(&[
            (3, &u[0]),
            (-3, &u[1]),
            (u3, &u[2]),
            (-4, &u[3]),
            (-2, &u[4]),
            (1, &u[6]),
            (1, &u[7]),
            (1, &du1),
            (-2, &du5),
            (1, &du7),
            (-sign_n, &u[8]),
            (-1, &u[9]),
        ])
    };
    // As displayed, with -U3 and 3[St]. The identity only holds with -3U3 and 6[St].
    let displayed = VirtualCharacter::from_terms([
        (bh.clone(), 1),
        (gh.clone(), 3),
        (sg.clone(), 2),
        (st.clone(), 3),
    ]);
    let wn_displayed_holds = rw.clone() - comb_w(-1) == displayed;
    let wn_residual = rw.clone() - comb_w(-3);
    let want_w = VirtualCharacter::from_terms([
        (bh.clone(), 1),
        (gh.clone(), 3),
        (sg.clone(), 2),
        (st.clone(), 6),
    ]);
    expect_eq("bR_wn - combination", &wn_residual, &want_w)?;
    log.push("bR_wn = 3U1 - 3U2 - 3U3 - 4U4 - 2U5 + U7 + U8 + D(U1) - 2D(U5) + D(U7) + (-1)^(n-1) U9 - U10 + [B6 cusp] + 3[B2 cusp] + 2[sgn] + 6[St]".into());
    if !wn_displayed_holds {
        log.push("the form with -U3 and 3[St] does not hold".into());
    }
    let coords_w = pim_coordinates(&rw, &mat)?;
    for h in [&st, &gh] {
        let a = coordinate(&coords_w, h);
        log.push(format!("coordinate of R_wn on Psi[{h}] is {a}"));
    }
    let wsg = coordinate(&coords_w, &sg);
    // With γ fixed in the large-ℓ regime the coordinate becomes c − β.
    let wsg_eff = match regime {
        Regime::LargeEll if gamma_lower == gamma_upper => Affine {
            c: wsg.c + wsg.gamma * gamma_upper,
            gamma: 0,
            beta: wsg.beta,
        },
        _ => wsg,
    };
    let beta_upper = upper_from(wsg_eff, ParamName::Beta)?;
    log.push(format!(
        "coordinate of R_wn on Psi[{sg}] is {wsg}, so β ≤ {beta_upper}"
    ));
    let beta_lower = match regime {
        Regime::LargeEll => lower_from(b0, b1)?,
        Regime::Generic => 0,
    };
    log.push(format!("<R_c2, Psi[{bh}]> = {b0} + {b1}β"));

    Ok(GammaBetaReport {
        n,
        regime,
        gamma: Interval {
            lower: gamma_lower,
            upper: gamma_upper,
        },
        beta: Interval {
            lower: beta_lower,
            upper: beta_upper,
        },
        coxeter_steinberg_coordinate: cst,
        wn_sign_coordinate: wsg,
        wn_residual,
        wn_displayed_holds,
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_identities() {
        for n in 4..7 {
            for k in 1..=10 {
                u_combination(k, n).unwrap();
            }
            let u = |k| u_combination(k, n).unwrap();
            let lhs = u(1) - u(2) - u(4);
            let want = VirtualCharacter::from_terms([
                (crate::decomp::lab(0, &[(2 * n as i64, 1)], &[]), 1),
                (steinberg(n), -1),
            ]);
            assert_eq!(lhs, want);
        }
    }

    #[test]
    fn affine_display() {
        assert_eq!(
            Affine {
                c: 2,
                gamma: -1,
                beta: 0
            }
            .to_string(),
            "2 - γ"
        );
        assert_eq!(Affine::constant(0).to_string(), "0");
        assert_eq!(
            Affine {
                c: 0,
                gamma: 0,
                beta: 3
            }
            .to_string(),
            "3β"
        );
    }

    #[test]
    fn coordinates_of_columns() {
        let ctx = BlockContext::new(4, Regime::Generic);
        let mat = decomposition_matrix(&ctx).unwrap();
        let col = &mat.columns[5];
        let coords = pim_coordinates(&col.entries, &mat);
        if col.symbolic.is_none() {
            let coords = coords.unwrap();
            assert_eq!(coords.len(), 1);
            assert_eq!(coords[&col.head], Affine::constant(1));
        }
    }

    #[test]
    fn report_n4() {
        let r = gamma_beta_report(4, Regime::LargeEll).unwrap();
        assert_eq!(r.gamma.value(), Some(2), "{:#?}", r.log);
        assert_eq!(r.beta.value(), Some(2), "{:#?}", r.log);
        let g = gamma_beta_report(4, Regime::Generic).unwrap();
        assert_eq!(g.gamma, Interval { lower: 0, upper: 2 });
        assert_eq!(g.beta, Interval { lower: 0, upper: 2 });
        assert!(!g.wn_displayed_holds);
    }
}
