//! Weight diagrams of irreducible representations.
//!
//! Multiplicities come from two independent routes: the Freudenthal recursion
//! ([`freudenthal_diagram`]) and the Weyl character formula evaluated as an
//! exact Laurent-polynomial quotient ([`character_polynomial`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::weight::{positive_roots, signed_weyl_orbit, weyl_orbit, GroupType, Weight};

/// Whether the real representation is a real form of the complex irreducible
/// or its realification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Reality {
    #[serde(rename = "REAL_FORM")]
    RealForm,
    #[serde(rename = "COMPLEX_TYPE")]
    ComplexType,
}

impl Reality {
    pub fn real_dim(self, complex_dim: u64) -> u64 {
        match self {
            Reality::RealForm => complex_dim,
            Reality::ComplexType => 2 * complex_dim,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepDescriptor {
    pub group: GroupType,
    pub highest_weight: Weight,
    pub reality: Reality,
}

impl IrrepDescriptor {
    pub fn new(group: GroupType, highest_weight: Weight, reality: Reality) -> Result<Self> {
        group.check_weight(&highest_weight)?;
        if !group.is_dominant(&highest_weight) {
            return Err(Error::NotDominant(highest_weight.to_string()));
        }
        if group.has_central_circle && reality != Reality::ComplexType {
            return Err(Error::InvalidArgument(
                "a group with a central circle acts with complex type".into(),
            ));
        }
        Ok(Self {
            group,
            highest_weight,
            reality,
        })
    }

    /// `π_{a,b}` of `SU(3)`; the self-dual `π_{a,a}` is taken as its real form.
    pub fn su3(a: i64, b: i64) -> Result<Self> {
        let reality = if a == b {
            Reality::RealForm
        } else {
            Reality::ComplexType
        };
        Self::new(GroupType::su3(), Weight::semisimple(vec![a, b]), reality)
    }

    /// `π_{a,b}` of `SU(3)` twisted by a nontrivial character of the central
    /// circle. Only the charge being nonzero matters for fixed spaces, so the
    /// charge is fixed at 1.
    pub fn u3(a: i64, b: i64) -> Result<Self> {
        Self::new(
            GroupType::u3(),
            Weight::new(vec![a, b], 1),
            Reality::ComplexType,
        )
    }

    /// `ℂ ⊗ ℂ^m ⊗ ℂ^n` of `U(1) × SU(2) × SU(2)` (uncharged drops the circle).
    pub fn tensor(m: i64, n: i64, charged: bool) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidArgument(format!(
                "tensor factors must be positive, got ({m},{n})"
            )));
        }
        Self::new(
            GroupType::su2_su2(charged),
            Weight::new(vec![m - 1, n - 1], i64::from(charged)),
            Reality::ComplexType,
        )
    }
}

impl fmt::Display for IrrepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.group, self.highest_weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDiagram {
    pub rep: IrrepDescriptor,
    pub entries: BTreeMap<Weight, u64>,
    pub complex_dim: u64,
    pub real_dim: u64,
}

impl WeightDiagram {
    fn from_entries(rep: IrrepDescriptor, entries: BTreeMap<Weight, u64>) -> Self {
        let complex_dim = entries.values().sum();
        let real_dim = rep.reality.real_dim(complex_dim);
        Self {
            rep,
            entries,
            complex_dim,
            real_dim,
        }
    }

    pub fn group(&self) -> &GroupType {
        &self.rep.group
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    /// The multiplicity at the zero weight of the semisimple part, keeping the
    /// central charge of the diagram.
    pub fn zero_weight_multiplicity(&self) -> u64 {
        let charge = self.rep.highest_weight.central_charge;
        let zero = Weight::new(vec![0; self.group().semisimple_rank()], charge);
        self.multiplicity(&zero)
    }

    pub fn is_weyl_invariant(&self) -> bool {
        let g = self.group();
        self.entries.iter().all(|(mu, &m)| {
            weyl_orbit(g, mu)
                .iter()
                .all(|nu| self.multiplicity(nu) == m)
        })
    }
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("weyl dimension"))
}

/// Complex dimension `Π_{α>0} (Λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(rep: &IrrepDescriptor) -> Result<u64> {
    let g = &rep.group;
    let hw = Weight::semisimple(rep.highest_weight.coords.clone());
    if !g.is_dominant(&hw) {
        return Err(Error::NotDominant(hw.to_string()));
    }
    let rho = g.rho();
    let shifted = hw.plus(&rho);
    let (mut num, mut den) = (1i128, 1i128);
    for alpha in positive_roots(g) {
        num = checked_mul(num, i128::from(g.scaled_form(&shifted, &alpha)))?;
        den = checked_mul(den, i128::from(g.scaled_form(&rho, &alpha)))?;
    }
    if num % den != 0 {
        return Err(Error::InvalidArgument("weyl dimension is not integral".into()));
    }
    u64::try_from(num / den).map_err(|_| Error::Overflow("weyl dimension"))
}

/// The saturated weight set below the highest weight: every `μ` whose
/// dominant conjugate `ν` satisfies `Λ − ν ∈ Q⁺`. Weights of an irreducible
/// module are connected to the top by simple-root steps, so a descending
/// search from `Λ` reaches all of them.
fn saturated_weights(g: &GroupType, hw: &Weight) -> BTreeMap<Weight, i64> {
    let below = |mu: &Weight| -> Option<i64> {
        let nu = g.dominant_conjugate(mu);
        let c = g.root_coordinates(&hw.minus(&nu))?;
        c.iter().all(|&x| x >= 0).then_some(())?;
        g.root_coordinates(&hw.minus(mu)).map(|d| d.iter().sum())
    };
    let simple = g.simple_roots();
    let mut heights = BTreeMap::new();
    let mut stack = vec![hw.clone()];
    heights.insert(hw.clone(), 0);
    while let Some(mu) = stack.pop() {
        for alpha in &simple {
            let next = mu.minus(alpha);
            if heights.contains_key(&next) {
                continue;
            }
            if let Some(h) = below(&next) {
                heights.insert(next.clone(), h);
                stack.push(next);
            }
        }
    }
    heights
}

pub fn freudenthal_diagram(rep: &IrrepDescriptor) -> Result<WeightDiagram> {
    let g = &rep.group;
    let hw = Weight::semisimple(rep.highest_weight.coords.clone());
    if !g.is_dominant(&hw) {
        return Err(Error::NotDominant(hw.to_string()));
    }
    let rho = g.rho();
    let roots = positive_roots(g);
    let top = g.scaled_form(&hw.plus(&rho), &hw.plus(&rho));

    let heights = saturated_weights(g, &hw);
    let mut order: Vec<(&Weight, i64)> = heights.iter().map(|(w, &h)| (w, h)).collect();
    order.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(a.0)));

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, _) in order {
        if *mu == hw {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let shifted = mu.plus(&rho);
        let denominator = top - g.scaled_form(&shifted, &shifted);
        if denominator <= 0 {
            return Err(Error::Freudenthal {
                weight: mu.to_string(),
                reason: format!("nonpositive denominator {denominator}"),
            });
        }
        let mut numerator: i64 = 0;
        for alpha in &roots {
            let mut k = 1;
            loop {
                let up = mu.plus(&alpha.scaled(k));
                let Some(&m) = mult.get(&up) else { break };
                let term = m
                    .checked_mul(g.scaled_form(&up, alpha))
                    .and_then(|t| t.checked_mul(2))
                    .ok_or(Error::Overflow("freudenthal recursion"))?;
                numerator = numerator
                    .checked_add(term)
                    .ok_or(Error::Overflow("freudenthal recursion"))?;
                k += 1;
            }
        }
        if numerator % denominator != 0 {
            return Err(Error::Freudenthal {
                weight: mu.to_string(),
                reason: format!("{numerator} not divisible by {denominator}"),
            });
        }
        let m = numerator / denominator;
        if m <= 0 {
            return Err(Error::Freudenthal {
                weight: mu.to_string(),
                reason: format!("multiplicity {m} inside the saturated set"),
            });
        }
        mult.insert(mu.clone(), m);
    }

    let charge = rep.highest_weight.central_charge;
    let entries = mult
        .into_iter()
        .map(|(mu, m)| (Weight::new(mu.coords, charge), m as u64))
        .collect();
    Ok(WeightDiagram::from_entries(rep.clone(), entries))
}

/// The character as a Laurent polynomial, `χ = A(Λ+ρ) / A(ρ)` with
/// `A(ρ) = x^ρ Π_{α>0} (1 − x^{−α})`, divided out factor by factor.
pub fn character_polynomial(rep: &IrrepDescriptor) -> Result<LaurentPolynomial> {
    let g = &rep.group;
    let hw = Weight::semisimple(rep.highest_weight.coords.clone());
    if !g.is_dominant(&hw) {
        return Err(Error::NotDominant(hw.to_string()));
    }
    let rho = g.rho();
    let mut numerator = LaurentPolynomial::new();
    for (mu, sign) in signed_weyl_orbit(g, &hw.plus(&rho))? {
        numerator.add_term(mu, sign);
    }
    let height = |mu: &Weight| g.scaled_form(mu, &rho);
    let mut quotient = numerator;
    for alpha in positive_roots(g) {
        quotient = quotient.divide_by_binomial(&alpha, height)?;
    }
    let charge = Weight::new(vec![0; g.semisimple_rank()], rep.highest_weight.central_charge);
    Ok(quotient.shift(&rho.negated()).shift(&charge))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShellKind {
    #[serde(rename = "HEXAGON")]
    Hexagon,
    #[serde(rename = "TRIANGLE")]
    Triangle,
    #[serde(rename = "POINT")]
    Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shell {
    pub kind: ShellKind,
    pub index: u32,
    pub multiplicity: u64,
    pub weight_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellDecomposition {
    pub a: u32,
    pub b: u32,
    pub shells: Vec<Shell>,
}

impl ShellDecomposition {
    pub fn complex_dim(&self) -> u64 {
        self.shells
            .iter()
            .map(|s| s.multiplicity * s.weight_count)
            .sum()
    }
}

/// Concentric shells of the `SU(3)` diagram of `π_{a,b}`: hexagons `H_i`
/// with sides `(a−i, b−i)` and multiplicity `i+1`, then triangles of side
/// `a−b−3j` with multiplicity `b+1`. A side-zero triangle is a single point.
pub fn su3_shells(a: i64, b: i64) -> Result<ShellDecomposition> {
    if a < 0 || b < 0 {
        return Err(Error::InvalidArgument(format!(
            "negative highest weight ({a},{b})"
        )));
    }
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    let mut shells = Vec::new();
    for i in 0..b {
        shells.push(Shell {
            kind: ShellKind::Hexagon,
            index: i as u32,
            multiplicity: (i + 1) as u64,
            weight_count: (3 * ((a - i) + (b - i))) as u64,
        });
    }
    let mut side = a - b;
    let mut j = 0;
    while side >= 0 {
        let (kind, count) = if side == 0 {
            (ShellKind::Point, 1)
        } else {
            (ShellKind::Triangle, 3 * side)
        };
        shells.push(Shell {
            kind,
            index: j,
            multiplicity: (b + 1) as u64,
            weight_count: count as u64,
        });
        side -= 3;
        j += 1;
    }
    Ok(ShellDecomposition {
        a: a as u32,
        b: b as u32,
        shells,
    })
}

/// Weights `(j, k)` with `j ∈ {m−1, m−3, …, 1−m}` and `k` likewise for `n`,
/// each of multiplicity one.
pub fn tensor_rep_diagram(m: i64, n: i64, charged: bool) -> Result<WeightDiagram> {
    let rep = IrrepDescriptor::tensor(m, n, charged)?;
    let charge = i64::from(charged);
    let mut entries = BTreeMap::new();
    for j in (0..m).map(|t| m - 1 - 2 * t) {
        for k in (0..n).map(|t| n - 1 - 2 * t) {
            entries.insert(Weight::new(vec![j, k], charge), 1);
        }
    }
    Ok(WeightDiagram::from_entries(rep, entries))
}

/// All weights of the diagram lie in `Λ − Q⁺`.
pub fn below_highest_weight(diagram: &WeightDiagram) -> bool {
    let g = diagram.group();
    let hw = &diagram.rep.highest_weight;
    diagram.entries.keys().all(|mu| {
        g.root_coordinates(&hw.minus(mu))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    })
}

pub fn is_negation_symmetric(diagram: &WeightDiagram) -> bool {
    let weights: BTreeSet<&Weight> = diagram.entries.keys().collect();
    diagram
        .entries
        .iter()
        .all(|(mu, &m)| weights.contains(&mu.negated()) && diagram.multiplicity(&mu.negated()) == m)
}
