//! Virtual characters: sparse rational combinations of unipotent characters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde_json::json;

use crate::block::UnipCharLabel;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualCharacter {
    coeffs: BTreeMap<UnipCharLabel, Rational64>,
}

impl VirtualCharacter {
    pub fn zero() -> Self {
        VirtualCharacter::default()
    }

    pub fn from_label(l: UnipCharLabel) -> Self {
        let mut v = VirtualCharacter::zero();
        v.add_term(l, Rational64::one());
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (UnipCharLabel, i64)>>(terms: I) -> Self {
        let mut v = VirtualCharacter::zero();
        for (l, c) in terms {
            v.add_term(l, Rational64::from_integer(c));
        }
        v
    }

    pub fn add_term(&mut self, l: UnipCharLabel, c: Rational64) {
        if c.is_zero() {
            return;
        }
        let e = self
            .coeffs
            .entry(l.clone())
            .or_insert_with(Rational64::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn coeff(&self, l: &UnipCharLabel) -> Rational64 {
        self.coeffs.get(l).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UnipCharLabel, &Rational64)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<UnipCharLabel> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: Rational64) -> Self {
        let mut out = VirtualCharacter::zero();
        for (l, v) in self.terms() {
            out.add_term(l.clone(), *v * c);
        }
        out
    }

    /// Keeps only the terms whose label satisfies `keep`.
    pub fn restrict<F: Fn(&UnipCharLabel) -> bool>(&self, keep: F) -> Self {
        VirtualCharacter {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), *c))
                .collect(),
        }
    }

    /// `[{t, bp, coeff}]`, with integral coefficients as numbers and others as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms()
            .map(|(l, c)| {
                let coeff = if c.is_integer() {
                    json!(c.to_integer())
                } else {
                    json!(c.to_string())
                };
                json!({"t": l.t, "bp": l.bp, "coeff": coeff})
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            let neg = *c < Rational64::zero();
            let abs = if neg { -*c } else { *c };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "[{l}]")?;
        }
        Ok(())
    }
}

impl AddAssign<&VirtualCharacter> for VirtualCharacter {
    fn add_assign(&mut self, rhs: &VirtualCharacter) {
        for (l, c) in rhs.terms() {
            self.add_term(l.clone(), *c);
        }
    }
}

impl SubAssign<&VirtualCharacter> for VirtualCharacter {
    fn sub_assign(&mut self, rhs: &VirtualCharacter) {
        for (l, c) in rhs.terms() {
            self.add_term(l.clone(), -*c);
        }
    }
}

impl Add for VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(mut self, rhs: VirtualCharacter) -> VirtualCharacter {
        self += &rhs;
        self
    }
}

impl Sub for VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(mut self, rhs: VirtualCharacter) -> VirtualCharacter {
        self -= &rhs;
        self
    }
}

impl Neg for VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        self.scale(-Rational64::one())
    }
}

impl Mul<VirtualCharacter> for i64 {
    type Output = VirtualCharacter;
    fn mul(self, rhs: VirtualCharacter) -> VirtualCharacter {
        rhs.scale(Rational64::from_integer(self))
    }
}

impl Mul<VirtualCharacter> for Rational64 {
    type Output = VirtualCharacter;
    fn mul(self, rhs: VirtualCharacter) -> VirtualCharacter {
        rhs.scale(self)
    }
}
