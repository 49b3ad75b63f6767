//! Weight-lattice arithmetic for products of `A1` and `A2` factors with an
//! optional central circle.
//!
//! Weights are stored in the fundamental-weight basis of each simple factor,
//! concatenated in factor order. The central circle, when present, carries a
//! separate integer charge that the Weyl group never touches.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Every root has squared length 2 under the invariant form; multiplying by
/// this scale makes the form integral on weights of `A1` (denominator 2) and
/// `A2` (denominator 3) simultaneously.
pub const FORM_SCALE: i64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleFactor {
    A1,
    A2,
}

impl SimpleFactor {
    pub fn rank(self) -> usize {
        match self {
            SimpleFactor::A1 => 1,
            SimpleFactor::A2 => 2,
        }
    }

    pub fn dim(self) -> u32 {
        match self {
            SimpleFactor::A1 => 3,
            SimpleFactor::A2 => 8,
        }
    }

    pub fn weyl_order(self) -> u64 {
        match self {
            SimpleFactor::A1 => 2,
            SimpleFactor::A2 => 6,
        }
    }

    /// Scaled inverse Cartan matrix: `FORM_SCALE * (λ_i, λ_j)`.
    fn scaled_fundamental_form(self) -> &'static [&'static [i64]] {
        match self {
            SimpleFactor::A1 => &[&[3]],
            SimpleFactor::A2 => &[&[4, 2], &[2, 4]],
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleFactor::A1 => f.write_str("A1"),
            SimpleFactor::A2 => f.write_str("A2"),
        }
    }
}

pub fn cartan_matrix(factor: SimpleFactor) -> Vec<Vec<i64>> {
    match factor {
        SimpleFactor::A1 => vec![vec![2]],
        SimpleFactor::A2 => vec![vec![2, -1], vec![-1, 2]],
    }
}

/// A compact connected group up to covering: ordered simple factors plus an
/// optional central circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub simple_factors: Vec<SimpleFactor>,
    pub has_central_circle: bool,
}

impl GroupType {
    pub fn new(simple_factors: Vec<SimpleFactor>, has_central_circle: bool) -> Self {
        Self {
            simple_factors,
            has_central_circle,
        }
    }

    pub fn su2() -> Self {
        Self::new(vec![SimpleFactor::A1], false)
    }

    pub fn su3() -> Self {
        Self::new(vec![SimpleFactor::A2], false)
    }

    pub fn u3() -> Self {
        Self::new(vec![SimpleFactor::A2], true)
    }

    pub fn su2_su2(charged: bool) -> Self {
        Self::new(vec![SimpleFactor::A1, SimpleFactor::A1], charged)
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_factors.iter().map(|f| f.rank()).sum()
    }

    /// Rank including the central circle.
    pub fn rank(&self) -> usize {
        self.semisimple_rank() + usize::from(self.has_central_circle)
    }

    pub fn total_group_dim(&self) -> u32 {
        self.simple_factors.iter().map(|f| f.dim()).sum::<u32>() + u32::from(self.has_central_circle)
    }

    pub fn weyl_group_order(&self) -> u64 {
        self.simple_factors.iter().map(|f| f.weyl_order()).product()
    }

    /// `(factor, offset)` pairs locating each factor inside a coordinate vector.
    pub fn factor_offsets(&self) -> Vec<(SimpleFactor, usize)> {
        let mut offset = 0;
        self.simple_factors
            .iter()
            .map(|&f| {
                let entry = (f, offset);
                offset += f.rank();
                entry
            })
            .collect()
    }

    /// Simple roots in fundamental-weight coordinates (rows of the Cartan matrix).
    pub fn simple_roots(&self) -> Vec<Weight> {
        let n = self.semisimple_rank();
        let mut roots = Vec::with_capacity(n);
        for (factor, offset) in self.factor_offsets() {
            for row in cartan_matrix(factor) {
                let mut coords = vec![0; n];
                coords[offset..offset + row.len()].copy_from_slice(&row);
                roots.push(Weight::new(coords, 0));
            }
        }
        roots
    }

    /// Half the sum of positive roots: all fundamental coordinates equal to 1.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.semisimple_rank()], 0)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(vec![0; self.semisimple_rank()], 0)
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        let n = self.semisimple_rank();
        if mu.coords.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: mu.coords.len(),
            });
        }
        if !self.has_central_circle && mu.central_charge != 0 {
            return Err(Error::InvalidArgument(format!(
                "weight {mu} carries a central charge but the group has no central circle"
            )));
        }
        Ok(())
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        mu.coords.iter().all(|&c| c >= 0)
    }

    /// `s_i(μ) = μ − ⟨μ, α_i∨⟩ α_i`.
    pub fn simple_reflection(&self, index: usize, mu: &Weight) -> Weight {
        let roots = self.simple_roots();
        let k = mu.coords[index];
        let mut out = mu.clone();
        for (c, r) in out.coords.iter_mut().zip(&roots[index].coords) {
            *c -= k * r;
        }
        out
    }

    /// Repeatedly reflects negative coordinates away until the weight is dominant.
    pub fn dominant_conjugate(&self, mu: &Weight) -> Weight {
        let mut cur = mu.clone();
        while let Some(i) = cur.coords.iter().position(|&c| c < 0) {
            cur = self.simple_reflection(i, &cur);
        }
        cur
    }

    /// Coordinates of a semisimple weight difference in the simple-root basis,
    /// or `None` when it does not lie in the root lattice.
    pub fn root_coordinates(&self, diff: &Weight) -> Option<Vec<i64>> {
        let mut out = vec![0; self.semisimple_rank()];
        for (factor, off) in self.factor_offsets() {
            match factor {
                SimpleFactor::A1 => {
                    let d = diff.coords[off];
                    if d.is_odd() {
                        return None;
                    }
                    out[off] = d / 2;
                }
                SimpleFactor::A2 => {
                    let (p, q) = (diff.coords[off], diff.coords[off + 1]);
                    let (x, y) = (2 * p + q, p + 2 * q);
                    if x % 3 != 0 || y % 3 != 0 {
                        return None;
                    }
                    out[off] = x / 3;
                    out[off + 1] = y / 3;
                }
            }
        }
        Some(out)
    }

    /// The invariant form on the semisimple part, scaled by [`FORM_SCALE`].
    pub fn scaled_form(&self, x: &Weight, y: &Weight) -> i64 {
        let mut total = 0;
        for (factor, off) in self.factor_offsets() {
            let g = factor.scaled_fundamental_form();
            for (i, row) in g.iter().enumerate() {
                for (j, &gij) in row.iter().enumerate() {
                    total += x.coords[off + i] * gij * y.coords[off + j];
                }
            }
        }
        total
    }

    /// Weight coordinates followed by the central charge when the group has a
    /// circle; this is the vector paired against torus directions.
    pub fn torus_vector(&self, mu: &Weight) -> Vec<i64> {
        let mut v = mu.coords.clone();
        if self.has_central_circle {
            v.push(mu.central_charge);
        }
        v
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.has_central_circle {
            parts.push("T1".to_string());
        }
        parts.extend(self.simple_factors.iter().map(|x| x.to_string()));
        f.write_str(&parts.join("x"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
    pub central_charge: i64,
}

impl Weight {
    pub fn new(coords: Vec<i64>, central_charge: i64) -> Self {
        Self {
            coords,
            central_charge,
        }
    }

    pub fn semisimple(coords: Vec<i64>) -> Self {
        Self::new(coords, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.central_charge == 0 && self.coords.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Weight::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            self.central_charge + other.central_charge,
        )
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Weight::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
            self.central_charge - other.central_charge,
        )
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight::new(
            self.coords.iter().map(|c| c * k).collect(),
            self.central_charge * k,
        )
    }

    pub fn negated(&self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        if self.central_charge != 0 {
            write!(f, "({}|{})", body.join(","), self.central_charge)
        } else {
            write!(f, "({})", body.join(","))
        }
    }
}

/// A primitive, sign-normalized integer vector: the Lie algebra line of a
/// circle subgroup, written in the simple-coroot basis (plus the central
/// generator last, when present).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RationalDirection {
    numerators: Vec<i64>,
}

impl RationalDirection {
    pub fn new(raw: Vec<i64>) -> Result<Self> {
        let g = raw.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            return Err(Error::InvalidArgument("direction must be nonzero".into()));
        }
        let first = raw.iter().copied().find(|&x| x != 0).unwrap_or(1);
        let sign = first.signum();
        Ok(Self {
            numerators: raw.into_iter().map(|x| sign * x / g).collect(),
        })
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.numerators.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for RationalDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.numerators.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// `⟨μ, α_i∨⟩` for the `index`-th simple coroot, counted across all factors.
pub fn pairing(group: &GroupType, mu: &Weight, coroot_index: usize) -> Result<i64> {
    group.check_weight(mu)?;
    let rank = group.semisimple_rank();
    if coroot_index >= rank {
        return Err(Error::IndexOutOfRange {
            index: coroot_index,
            rank,
        });
    }
    Ok(mu.coords[coroot_index])
}

pub fn positive_roots(group: &GroupType) -> Vec<Weight> {
    let n = group.semisimple_rank();
    let mut roots = Vec::new();
    for (factor, off) in group.factor_offsets() {
        let local: &[&[i64]] = match factor {
            SimpleFactor::A1 => &[&[2]],
            SimpleFactor::A2 => &[&[2, -1], &[-1, 2], &[1, 1]],
        };
        for r in local {
            let mut coords = vec![0; n];
            coords[off..off + r.len()].copy_from_slice(r);
            roots.push(Weight::semisimple(coords));
        }
    }
    roots
}

pub fn weyl_orbit(group: &GroupType, mu: &Weight) -> BTreeSet<Weight> {
    let rank = group.semisimple_rank();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([mu.clone()]);
    seen.insert(mu.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 0..rank {
            let next = group.simple_reflection(i, &cur);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Orbit of a regular weight paired with `det(w)` for the unique Weyl element
/// `w` reaching it. The action on a regular orbit is free, so the parity of
/// any reflection path is the sign of that element.
pub fn signed_weyl_orbit(group: &GroupType, regular: &Weight) -> Result<Vec<(Weight, i64)>> {
    if regular.coords.contains(&0) || !group.is_dominant(regular) {
        return Err(Error::InvalidArgument(format!(
            "{regular} is not strictly dominant"
        )));
    }
    let rank = group.semisimple_rank();
    let mut signs = std::collections::BTreeMap::new();
    let mut queue = VecDeque::from([regular.clone()]);
    signs.insert(regular.clone(), 1i64);
    while let Some(cur) = queue.pop_front() {
        let s = signs[&cur];
        for i in 0..rank {
            let next = group.simple_reflection(i, &cur);
            match signs.get(&next) {
                Some(&t) if t != -s => {
                    return Err(Error::InvalidArgument(
                        "inconsistent reflection parity".into(),
                    ))
                }
                Some(_) => {}
                None => {
                    signs.insert(next.clone(), -s);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(signs.into_iter().collect())
}

/// Exponents of an `A2` weight against `diag(t1, t2, t3)` of the defining
/// torus. The fundamental weights map to `λ1 ↦ e1`, `λ2 ↦ e1 + e2`; the
/// representative with third entry zero is the one carried by the polynomial
/// `GL(3)` model of the representation.
pub fn to_e_coords(mu: &Weight) -> Result<[i64; 3]> {
    if mu.coords.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: mu.coords.len(),
        });
    }
    let (p, q) = (mu.coords[0], mu.coords[1]);
    Ok([p + q, q, 0])
}

pub fn from_e_coords(e: [i64; 3]) -> Weight {
    Weight::semisimple(vec![e[0] - e[1], e[1] - e[2]])
}
