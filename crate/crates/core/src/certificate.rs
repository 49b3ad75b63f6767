//! Finite-search soundness: positivity certificates for integer polynomials
//! on shifted orthants, and the quadratic Diophantine exclusions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Integer polynomial in two variables `x`, `y`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), i64>,
}

impl Poly2 {
    pub fn constant(c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c);
        p
    }

    pub fn x() -> Self {
        let mut p = Self::default();
        p.add_term(1, 0, 1);
        p
    }

    pub fn y() -> Self {
        let mut p = Self::default();
        p.add_term(0, 1, 1);
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&(i, j));
        }
    }

    fn pow(base: &Poly2, k: u32) -> Poly2 {
        (0..k).fold(Poly2::constant(1), |acc, _| &acc * base)
    }

    /// Substitutes `x ↦ sx`, `y ↦ sy`.
    pub fn compose(&self, sx: &Poly2, sy: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for (&(i, j), &c) in &self.terms {
            out = &out + &(&(&Poly2::pow(sx, i) * &Poly2::pow(sy, j)) * &Poly2::constant(c));
        }
        out
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// Every coefficient nonnegative and the constant term positive, so the
    /// polynomial is positive on `x, y ≥ 0`.
    pub fn positive_on_orthant(&self) -> bool {
        self.terms.get(&(0, 0)).is_some_and(|&c| c > 0) && self.terms.values().all(|&c| c >= 0)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (&(i, j), &c) in self.terms.iter().rev() {
            let mut mono = String::new();
            if i > 0 {
                mono.push_str(if i == 1 { "s" } else { "s^" });
                if i > 1 {
                    mono.push_str(&i.to_string());
                }
            }
            if j > 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push('t');
                if j > 1 {
                    mono.push('^');
                    mono.push_str(&j.to_string());
                }
            }
            let term = match (mono.is_empty(), c) {
                (true, _) => c.to_string(),
                (false, 1) => mono,
                (false, -1) => format!("-{mono}"),
                (false, _) => format!("{c}*{mono}"),
            };
            parts.push(term);
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for (&(i, j), &c) in &self.terms {
            for (&(k, l), &d) in &rhs.terms {
                out.add_term(i + k, j + l, c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: Poly2) -> Poly2 { (&self).$method(&rhs) }
        }
        impl $tr<i64> for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: i64) -> Poly2 { (&self).$method(&Poly2::constant(rhs)) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Proof that a scan missed nothing: the slack polynomial `f(x, y)` (positive
/// exactly when a parameter pair is excluded) stays positive on the region
/// `x ≥ x0, y ≥ y0`, shown by shifting to `x = x0 + s, y = y0 + t` and
/// checking all coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanCertificate {
    pub claim: String,
    pub region: String,
    pub shifted: String,
    pub holds: bool,
}

impl ScanCertificate {
    pub fn orthant(claim: impl Into<String>, slack: &Poly2, x0: i64, y0: i64) -> Self {
        let shifted = slack.compose(&(Poly2::x() + x0), &(Poly2::y() + y0));
        Self {
            claim: claim.into(),
            region: format!("x >= {x0}, y >= {y0}"),
            holds: shifted.positive_on_orthant(),
            shifted: shifted.to_string(),
        }
    }

    pub fn require(self) -> Result<Self> {
        if self.holds {
            Ok(self)
        } else {
            Err(Error::Certificate(format!(
                "{} on {}: {}",
                self.claim, self.region, self.shifted
            )))
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{} for {}; shifted slack {} has nonnegative coefficients",
            self.claim, self.region, self.shifted
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiophantineConstraint {
    #[serde(rename = "N2_PLUS_N_EQ_4")]
    N2PlusNEq4,
    #[serde(rename = "N2_MINUS_N_EQ_4")]
    N2MinusNEq4,
    #[serde(rename = "N2_EQ_5")]
    N2Eq5,
}

impl DiophantineConstraint {
    /// `(c2, c1, c0, target)` for `c2 n² + c1 n + c0 = target`.
    fn coefficients(self) -> (i64, i64, i64, i64) {
        match self {
            DiophantineConstraint::N2PlusNEq4 => (1, 1, 0, 4),
            DiophantineConstraint::N2MinusNEq4 => (1, -1, 0, 4),
            DiophantineConstraint::N2Eq5 => (1, 0, 0, 5),
        }
    }

    pub fn eval(self, n: i64) -> i64 {
        let (c2, c1, c0, _) = self.coefficients();
        c2 * n * n + c1 * n + c0
    }

    pub fn target(self) -> i64 {
        self.coefficients().3
    }
}

impl fmt::Display for DiophantineConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiophantineConstraint::N2PlusNEq4 => "n^2 + n = 4",
            DiophantineConstraint::N2MinusNEq4 => "n^2 - n = 4",
            DiophantineConstraint::N2Eq5 => "n^2 = 5",
        })
    }
}

/// `f(n₀) > target` at the first such `n₀`, and the forward difference
/// `f(n+1) − f(n)`, which is increasing in `n`, is already positive at `n₀`;
/// hence `f(n) > target` for every `n ≥ n₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneCertificate {
    pub last_below: i64,
    pub value_below: i64,
    pub first_above: i64,
    pub value_above: i64,
    pub forward_difference: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiophantineResult {
    pub constraint: DiophantineConstraint,
    pub bound: i64,
    pub solutions: Vec<i64>,
    pub certificate: MonotoneCertificate,
}

/// Positive integer solutions `n ≤ bound` of the constraint, with a
/// certificate that none exist beyond the first value above the target.
pub fn diophantine_empty(constraint: DiophantineConstraint, bound: i64) -> Result<DiophantineResult> {
    if bound < 1 {
        return Err(Error::InvalidArgument(format!("bound must be >= 1, got {bound}")));
    }
    let target = constraint.target();
    let solutions: Vec<i64> = (1..=bound).filter(|&n| constraint.eval(n) == target).collect();

    let (c2, c1, _, _) = constraint.coefficients();
    let first_above = (1..)
        .find(|&n| constraint.eval(n) > target)
        .expect("leading coefficient is positive");
    let forward_difference = c2 * (2 * first_above + 1) + c1;
    if forward_difference <= 0 || c2 <= 0 {
        return Err(Error::Certificate(format!(
            "{constraint} is not increasing from n = {first_above}"
        )));
    }
    Ok(DiophantineResult {
        constraint,
        bound,
        solutions,
        certificate: MonotoneCertificate {
            last_below: first_above - 1,
            value_below: constraint.eval(first_above - 1),
            first_above,
            value_above: constraint.eval(first_above),
            forward_difference,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taylor_shift() {
        // (x - 3)^2 shifted by x = 3 + s is s^2.
        let p = (Poly2::x() - 3) * (Poly2::x() - 3);
        let shifted = p.compose(&(Poly2::x() + 3), &Poly2::y());
        assert_eq!(shifted, Poly2::x() * Poly2::x());
        assert!(!shifted.positive_on_orthant());
        assert_eq!(p.eval(5, 0), 4);
    }

    #[test]
    fn certificate_for_cubic_slack() {
        // (a+1)(b+1)(a+b+2) - 12 - 4b > 0 for a >= 3.
        let (a, b) = (Poly2::x(), Poly2::y());
        let slack = (a.clone() + 1) * (b.clone() + 1) * (a + b.clone() + 2) - 12 - b * 4;
        assert!(ScanCertificate::orthant("c", &slack, 3, 0).holds);
        assert!(!ScanCertificate::orthant("c", &slack, 1, 0).holds);
    }

    #[test]
    fn diophantine_examples() {
        for c in [
            DiophantineConstraint::N2PlusNEq4,
            DiophantineConstraint::N2MinusNEq4,
            DiophantineConstraint::N2Eq5,
        ] {
            let r = diophantine_empty(c, 1_000_000).unwrap();
            assert!(r.solutions.is_empty(), "{c}");
            assert!(r.certificate.value_below < c.target());
            assert!(r.certificate.value_above > c.target());
        }
        let r = diophantine_empty(DiophantineConstraint::N2Eq5, 10).unwrap();
        assert_eq!((r.certificate.last_below, r.certificate.first_above), (2, 3));
        assert!(diophantine_empty(DiophantineConstraint::N2Eq5, 0).is_err());
    }
}
