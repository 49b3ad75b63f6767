//! Dimensions of fixed-point subspaces: circle subgroups of a maximal torus,
//! finite-order torus elements, and the involutions of `ℂ^m ⊗ ℂ^n`.
//!
//! Circle directions and torus elements are written in the simple-coroot
//! basis (the central generator last, when the group has one), so the pairing
//! with a weight is the plain dot product against
//! [`GroupType::torus_vector`]. `SU(3)` elements may instead be given as
//! diagonal matrices `diag(ζ^{d1}, ζ^{d2}, ζ^{d3})`, paired through
//! [`to_e_coords`].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CyclotomicRing;
use crate::error::{Error, Result};
use crate::irrep::{character_polynomial, IrrepDescriptor, Reality, WeightDiagram};
use crate::weight::{to_e_coords, GroupType, RationalDirection, SimpleFactor, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "PAPER_BOUND")]
    PaperBound,
    #[serde(rename = "EXACT")]
    Exact,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::PaperBound => "PAPER_BOUND",
            Mode::Exact => "EXACT",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSpaceResult {
    pub real_dim: u64,
    pub complex_dim: u64,
    pub witness: Option<RationalDirection>,
    pub mode: Mode,
}

fn pairing_vector(group: &GroupType, mu: &Weight) -> Vec<i64> {
    group.torus_vector(mu)
}

pub fn annihilator_fixed_dim(
    diagram: &WeightDiagram,
    dir: &RationalDirection,
) -> Result<FixedSpaceResult> {
    let g = diagram.group();
    if dir.len() != g.rank() {
        return Err(Error::DimensionMismatch {
            expected: g.rank(),
            actual: dir.len(),
        });
    }
    let complex_dim = diagram
        .entries
        .iter()
        .filter(|(mu, _)| dir.dot(&pairing_vector(g, mu)) == 0)
        .map(|(_, &m)| m)
        .sum();
    Ok(FixedSpaceResult {
        real_dim: diagram.rep.reality.real_dim(complex_dim),
        complex_dim,
        witness: Some(dir.clone()),
        mode: Mode::Exact,
    })
}

/// Three times the shell estimate `2b(b+1) + (4/3)(b+1)(a−b)` for the
/// realification of `π_{a,b}`, `a > b`. Kept in thirds so it stays integral.
pub fn su3_shell_estimate_thirds(a: i64, b: i64) -> i64 {
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    6 * b * (b + 1) + 4 * (b + 1) * (a - b)
}

/// Literal count of two weights per shell: `Σ_shell min(2, #weights) · mult`,
/// realified. This is the line-through-origin bound the shell estimate above
/// approximates; the two differ by one triangle's worth.
pub fn su3_shell_line_count(a: i64, b: i64) -> Result<u64> {
    let shells = crate::irrep::su3_shells(a, b)?;
    let complex: u64 = shells
        .shells
        .iter()
        .map(|s| s.weight_count.min(2) * s.multiplicity)
        .sum();
    let reality = if a == b {
        Reality::RealForm
    } else {
        Reality::ComplexType
    };
    Ok(reality.real_dim(complex))
}

/// The written upper bound on `dim V^{G_p}` for the families in scope.
///
/// * Rank-3 groups with a central circle: two weight spaces of maximal
///   multiplicity, realified.
/// * `SU(3)`, `π_{a,b}` with `a ≠ b`: the shell estimate, rounded down.
/// * `SU(3)`, real form of `π_{a,a}`: `(a+1)²`.
///
/// The bound never exceeds the ambient real dimension.
pub fn paper_circle_bound(diagram: &WeightDiagram) -> Result<u64> {
    let g = diagram.group();
    if g.rank() < 2 {
        return Err(Error::InvalidArgument("group rank must be at least 2".into()));
    }
    let bound = if g.has_central_circle && g.rank() == 3 {
        diagram.rep.reality.real_dim(2 * diagram.max_multiplicity())
    } else if !g.has_central_circle && g.simple_factors == [SimpleFactor::A2] {
        let (a, b) = (
            diagram.rep.highest_weight.coords[0],
            diagram.rep.highest_weight.coords[1],
        );
        match diagram.rep.reality {
            Reality::RealForm if a == b => ((a + 1) * (a + 1)) as u64,
            Reality::ComplexType if a != b => (su3_shell_estimate_thirds(a, b) / 3) as u64,
            _ => return Err(Error::NoPaperBound(diagram.rep.to_string())),
        }
    } else {
        return Err(Error::NoPaperBound(diagram.rep.to_string()));
    };
    Ok(bound.min(diagram.real_dim))
}

fn normal_of(vectors: &[&[i64]], rank: usize) -> Option<Vec<i64>> {
    let n = match (rank, vectors) {
        (2, [v]) => vec![v[1], -v[0]],
        (3, [u, v]) => vec![
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ],
        _ => return None,
    };
    n.iter().any(|&x| x != 0).then_some(n)
}

/// Candidate circle directions: normals of hyperplanes spanned by weights,
/// plus hyperplanes through a single weight line, plus a coordinate
/// hyperplane when every weight is zero. A maximizing hyperplane can always
/// be rotated onto one of these without losing weights.
fn candidate_directions(diagram: &WeightDiagram) -> Result<BTreeSet<RationalDirection>> {
    let g = diagram.group();
    let rank = g.rank();
    if !(2..=3).contains(&rank) {
        return Err(Error::InvalidArgument(format!(
            "exhaustive circle search supports rank 2 or 3, got {rank}"
        )));
    }
    let vectors: Vec<Vec<i64>> = diagram
        .entries
        .keys()
        .map(|mu| pairing_vector(g, mu))
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let mut out = BTreeSet::new();
    match rank {
        2 => {
            for v in &vectors {
                if let Some(n) = normal_of(&[v], 2) {
                    out.insert(RationalDirection::new(n)?);
                }
            }
        }
        _ => {
            for (i, u) in vectors.iter().enumerate() {
                for v in &vectors[i + 1..] {
                    if let Some(n) = normal_of(&[u, v], 3) {
                        out.insert(RationalDirection::new(n)?);
                    }
                }
                for k in 0..3 {
                    let mut e = vec![0; 3];
                    e[k] = 1;
                    if let Some(n) = normal_of(&[u, &e], 3) {
                        out.insert(RationalDirection::new(n)?);
                        break;
                    }
                }
            }
        }
    }
    if out.is_empty() {
        let mut e = vec![0; rank];
        e[0] = 1;
        out.insert(RationalDirection::new(e)?);
    }
    Ok(out)
}

/// Largest `dim V^{S¹}` over circle subgroups of the maximal torus.
///
/// `Mode::PaperBound` returns [`paper_circle_bound`]; `Mode::Exact` searches
/// every candidate hyperplane and reports the maximizing direction
/// (lexicographically smallest on ties).
pub fn max_circle_fixed_dim(diagram: &WeightDiagram, mode: Mode) -> Result<FixedSpaceResult> {
    if diagram.group().rank() < 2 {
        return Err(Error::InvalidArgument("group rank must be at least 2".into()));
    }
    match mode {
        Mode::PaperBound => {
            let real_dim = paper_circle_bound(diagram)?;
            Ok(FixedSpaceResult {
                real_dim,
                complex_dim: match diagram.rep.reality {
                    Reality::RealForm => real_dim,
                    Reality::ComplexType => real_dim / 2,
                },
                witness: None,
                mode,
            })
        }
        Mode::Exact => {
            let mut best: Option<FixedSpaceResult> = None;
            for dir in candidate_directions(diagram)? {
                let r = annihilator_fixed_dim(diagram, &dir)?;
                if best.as_ref().is_none_or(|b| r.real_dim > b.real_dim) {
                    best = Some(r);
                }
            }
            Ok(best.expect("candidate set is never empty"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TorusCoords {
    /// Simple-coroot basis plus the central generator.
    Coroot,
    /// Diagonal entries of an `SU(3)` matrix.
    Diagonal,
}

/// `exp(2πi · direction / order)`, entries reduced mod `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusElement {
    direction: Vec<i64>,
    order: u64,
    coords: TorusCoords,
}

impl TorusElement {
    fn build(direction: Vec<i64>, order: u64, coords: TorusCoords) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        let n = order as i64;
        Ok(Self {
            direction: direction.into_iter().map(|d| d.rem_euclid(n)).collect(),
            order,
            coords,
        })
    }

    pub fn coroot(direction: Vec<i64>, order: u64) -> Result<Self> {
        Self::build(direction, order, TorusCoords::Coroot)
    }

    /// `diag(ζ_N^{d1}, ζ_N^{d2}, ζ_N^{d3})`.
    pub fn diagonal(exponents: [i64; 3], order: u64) -> Result<Self> {
        Self::build(exponents.to_vec(), order, TorusCoords::Diagonal)
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            direction: vec![0; rank],
            order: 1,
            coords: TorusCoords::Coroot,
        }
    }

    pub fn direction(&self) -> &[i64] {
        &self.direction
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent `e` with `μ(h) = ζ_N^e`, reduced mod `N`.
    pub fn exponent(&self, group: &GroupType, mu: &Weight) -> Result<i64> {
        let raw = match self.coords {
            TorusCoords::Coroot => {
                let v = group.torus_vector(mu);
                if v.len() != self.direction.len() {
                    return Err(Error::DimensionMismatch {
                        expected: v.len(),
                        actual: self.direction.len(),
                    });
                }
                v.iter().zip(&self.direction).map(|(a, b)| a * b).sum::<i64>()
            }
            TorusCoords::Diagonal => {
                if group.simple_factors != [SimpleFactor::A2] || group.has_central_circle {
                    return Err(Error::InvalidArgument(
                        "diagonal torus elements apply to SU(3) only".into(),
                    ));
                }
                let e = to_e_coords(mu)?;
                e.iter().zip(&self.direction).map(|(a, b)| a * b).sum::<i64>()
            }
        };
        Ok(raw.rem_euclid(self.order as i64))
    }
}

/// Complex dimension of each `ζ_N^e`-eigenspace, `e = 0..N`.
pub fn eigenspace_dims(diagram: &WeightDiagram, h: &TorusElement) -> Result<Vec<u64>> {
    let mut dims = vec![0u64; h.order as usize];
    for (mu, &m) in &diagram.entries {
        dims[h.exponent(diagram.group(), mu)? as usize] += m;
    }
    Ok(dims)
}

/// `dim V^h`: weights with `⟨μ, direction⟩ ≡ 0 (mod N)`. For the real form of
/// `π_{a,a}` the real fixed dimension equals the complex one of `(V^c)^h`.
pub fn element_fixed_dim(diagram: &WeightDiagram, h: &TorusElement) -> Result<FixedSpaceResult> {
    let complex_dim = eigenspace_dims(diagram, h)?[0];
    Ok(FixedSpaceResult {
        real_dim: diagram.rep.reality.real_dim(complex_dim),
        complex_dim,
        witness: None,
        mode: Mode::Exact,
    })
}

/// Independent route to the complex fixed dimension: the average of
/// `χ(h^j)` over the cyclic group `⟨h⟩`, with `χ` taken from the Weyl
/// character formula and each value kept exactly in `ℤ[ζ_N]`.
pub fn element_fixed_dim_oracle(rep: &IrrepDescriptor, h: &TorusElement) -> Result<u64> {
    let chi = character_polynomial(rep)?;
    let ring = CyclotomicRing::new(h.order);
    let mut total = ring.zero();
    let exponents: Vec<(i64, i64)> = chi
        .terms()
        .iter()
        .map(|(mu, &c)| Ok((h.exponent(&rep.group, mu)?, c)))
        .collect::<Result<_>>()?;
    for j in 0..h.order as i64 {
        let mut value = ring.zero();
        for &(e, c) in &exponents {
            value.add_power(j * e, c);
        }
        total.add_assign(&value);
    }
    let sum = ring
        .to_integer(&total)
        .ok_or_else(|| Error::NonIntegral(format!("{:?}", ring.reduce(&total))))?;
    let n = h.order as i64;
    if sum % n != 0 || sum < 0 {
        return Err(Error::NonIntegral(format!("{sum} / {n}")));
    }
    Ok((sum / n) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Involution {
    /// Swap of the two tensor factors (`m = n`).
    #[serde(rename = "SWAP")]
    Swap,
    /// Swap composed with complex conjugation (`m = n`).
    #[serde(rename = "SWAP_CONJ")]
    SwapConj,
    /// Complex conjugation over the real form `ℝ^m ⊗ ℝ^n`.
    #[serde(rename = "CONJ")]
    Conj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionKind {
    pub kind: Involution,
    pub sign: Sign,
}

impl InvolutionKind {
    pub fn new(kind: Involution, sign: Sign) -> Self {
        Self { kind, sign }
    }
}

/// Real dimension of the fixed space of `±w` on the realification of
/// `ℂ^m ⊗ ℂ^n` (real dimension `2mn`).
pub fn involution_fixed_dim(m: i64, n: i64, kind: InvolutionKind) -> Result<u64> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "tensor factors must be positive, got ({m},{n})"
        )));
    }
    let dim = match kind.kind {
        Involution::Swap | Involution::SwapConj if m != n => {
            return Err(Error::InvalidArgument(format!(
                "swapping factors needs m = n, got ({m},{n})"
            )))
        }
        Involution::Swap => match kind.sign {
            Sign::Plus => n * (n + 1),
            Sign::Minus => n * (n - 1),
        },
        Involution::SwapConj => n * n,
        Involution::Conj => m * n,
    };
    Ok(dim as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::{freudenthal_diagram, tensor_rep_diagram};

    fn dir(v: &[i64]) -> RationalDirection {
        RationalDirection::new(v.to_vec()).unwrap()
    }

    #[test]
    fn annihilator_examples() {
        let d = tensor_rep_diagram(2, 2, true).unwrap();
        // Charge never vanishes, so a direction with nonzero central part
        // and nothing else annihilates no weight.
        assert_eq!(annihilator_fixed_dim(&d, &dir(&[0, 0, 1])).unwrap().real_dim, 0);
        // j = k: weights (1,1) and (-1,-1).
        let r = annihilator_fixed_dim(&d, &dir(&[1, -1, 0])).unwrap();
        assert_eq!(r.real_dim, 4);
        assert!(annihilator_fixed_dim(&d, &dir(&[1, -1])).is_err());

        // Adjoint of SU(3), direction annihilating the line of α1 = (2,-1).
        let adj = freudenthal_diagram(&IrrepDescriptor::su3(1, 1).unwrap()).unwrap();
        let r = annihilator_fixed_dim(&adj, &dir(&[1, 2])).unwrap();
        assert_eq!(r.complex_dim, 4);
        assert_eq!(r.real_dim, 4);
    }

    #[test]
    fn paper_bounds() {
        let d = tensor_rep_diagram(2, 2, true).unwrap();
        assert_eq!(max_circle_fixed_dim(&d, Mode::PaperBound).unwrap().real_dim, 4);
        let u = freudenthal_diagram(&IrrepDescriptor::u3(1, 0).unwrap()).unwrap();
        assert_eq!(max_circle_fixed_dim(&u, Mode::PaperBound).unwrap().real_dim, 4);
        let u = freudenthal_diagram(&IrrepDescriptor::u3(3, 1).unwrap()).unwrap();
        assert_eq!(max_circle_fixed_dim(&u, Mode::PaperBound).unwrap().real_dim, 8);
        let s = freudenthal_diagram(&IrrepDescriptor::su3(2, 2).unwrap()).unwrap();
        assert_eq!(max_circle_fixed_dim(&s, Mode::PaperBound).unwrap().real_dim, 9);
        // 2b(b+1) + 4/3 (b+1)(a-b) at (4,1) = 4 + 8 = 12.
        let s = freudenthal_diagram(&IrrepDescriptor::su3(4, 1).unwrap()).unwrap();
        assert_eq!(max_circle_fixed_dim(&s, Mode::PaperBound).unwrap().real_dim, 12);
        let small = freudenthal_diagram(
            &IrrepDescriptor::new(GroupType::su2(), Weight::semisimple(vec![2]), Reality::ComplexType)
                .unwrap(),
        )
        .unwrap();
        assert!(max_circle_fixed_dim(&small, Mode::Exact).is_err());
    }

    /// Brute force over every primitive direction with entries in [-6, 6].
    fn grid_max(d: &WeightDiagram) -> u64 {
        let rank = d.group().rank();
        let range: Vec<i64> = (-6..=6).collect();
        let mut best = 0;
        let mut stack = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == rank {
                if let Ok(dir) = RationalDirection::new(prefix) {
                    best = best.max(annihilator_fixed_dim(d, &dir).unwrap().real_dim);
                }
                continue;
            }
            for &x in &range {
                let mut p = prefix.clone();
                p.push(x);
                stack.push(p);
            }
        }
        best
    }

    #[test]
    fn exact_search_matches_direction_grid() {
        let diagrams = [
            tensor_rep_diagram(3, 3, true).unwrap(),
            tensor_rep_diagram(2, 3, true).unwrap(),
            freudenthal_diagram(&IrrepDescriptor::u3(1, 1).unwrap()).unwrap(),
            freudenthal_diagram(&IrrepDescriptor::u3(2, 0).unwrap()).unwrap(),
            freudenthal_diagram(&IrrepDescriptor::su3(2, 0).unwrap()).unwrap(),
            freudenthal_diagram(&IrrepDescriptor::su3(2, 2).unwrap()).unwrap(),
        ];
        for d in &diagrams {
            let exact = max_circle_fixed_dim(d, Mode::Exact).unwrap();
            assert_eq!(exact.real_dim, grid_max(d), "{}", d.rep);
            let witness = exact.witness.clone().unwrap();
            assert_eq!(annihilator_fixed_dim(d, &witness).unwrap().real_dim, exact.real_dim);
        }
    }

    #[test]
    fn exact_exceeds_two_weight_bound_on_collinear_triples() {
        let d = tensor_rep_diagram(3, 3, true).unwrap();
        let exact = max_circle_fixed_dim(&d, Mode::Exact).unwrap();
        let paper = max_circle_fixed_dim(&d, Mode::PaperBound).unwrap();
        assert_eq!(exact.real_dim, 6);
        assert_eq!(paper.real_dim, 4);
    }

    #[test]
    fn element_examples() {
        let adj_rep = IrrepDescriptor::su3(1, 1).unwrap();
        let adj = freudenthal_diagram(&adj_rep).unwrap();
        let id = TorusElement::identity(2);
        assert_eq!(element_fixed_dim(&adj, &id).unwrap().real_dim, 8);

        // diag(θ, −θ, −θ) with θ = ζ6², −θ = ζ6⁵.
        let h = TorusElement::diagonal([2, 5, 5], 6).unwrap();
        assert_eq!(element_fixed_dim(&adj, &h).unwrap().real_dim, 4);
        assert_eq!(element_fixed_dim_oracle(&adj_rep, &h).unwrap(), 4);

        let rep = IrrepDescriptor::su3(2, 2).unwrap();
        let d = freudenthal_diagram(&rep).unwrap();
        let fixed = element_fixed_dim(&d, &h).unwrap().real_dim;
        assert!(fixed >= 9);
        assert_eq!(element_fixed_dim_oracle(&rep, &h).unwrap(), fixed);

        let def = IrrepDescriptor::su3(1, 0).unwrap();
        let h2 = TorusElement::diagonal([0, 1, 1], 2).unwrap();
        assert_eq!(element_fixed_dim_oracle(&def, &h2).unwrap(), 1);
        let trivial = IrrepDescriptor::su3(0, 0).unwrap();
        assert_eq!(element_fixed_dim_oracle(&trivial, &h).unwrap(), 1);
        assert!(TorusElement::diagonal([1, 1, 1], 0).is_err());
    }

    #[test]
    fn element_paths_agree_for_real_forms() {
        let h = TorusElement::diagonal([2, 5, 5], 6).unwrap();
        for a in 0..=6 {
            let rep = IrrepDescriptor::su3(a, a).unwrap();
            let d = freudenthal_diagram(&rep).unwrap();
            assert_eq!(
                element_fixed_dim(&d, &h).unwrap().complex_dim,
                element_fixed_dim_oracle(&rep, &h).unwrap()
            );
        }
    }

    #[test]
    fn coroot_elements_on_charged_groups() {
        let d = tensor_rep_diagram(2, 3, true).unwrap();
        let h = TorusElement::coroot(vec![1, 1, 0], 2).unwrap();
        let dims = eigenspace_dims(&d, &h).unwrap();
        assert_eq!(dims.iter().sum::<u64>(), d.complex_dim);
        assert_eq!(
            element_fixed_dim(&d, &h).unwrap().complex_dim,
            element_fixed_dim_oracle(&d.rep, &h).unwrap()
        );
    }

    #[test]
    fn involution_closed_forms() {
        let swap = |s| InvolutionKind::new(Involution::Swap, s);
        assert_eq!(involution_fixed_dim(2, 2, swap(Sign::Plus)).unwrap(), 6);
        assert_eq!(involution_fixed_dim(2, 2, swap(Sign::Minus)).unwrap(), 2);
        assert_eq!(
            involution_fixed_dim(3, 3, InvolutionKind::new(Involution::SwapConj, Sign::Plus)).unwrap(),
            9
        );
        assert_eq!(
            involution_fixed_dim(2, 3, InvolutionKind::new(Involution::Conj, Sign::Minus)).unwrap(),
            6
        );
        assert!(involution_fixed_dim(2, 3, swap(Sign::Plus)).is_err());
        assert!(involution_fixed_dim(0, 0, swap(Sign::Plus)).is_err());
    }

    #[test]
    fn shell_estimate_versus_line_count() {
        // (3,0): one triangle of 9 and a point; two weights per shell gives
        // 3 complex, while the estimate gives 4/3 * 3 = 4 real.
        assert_eq!(su3_shell_estimate_thirds(3, 0), 12);
        assert_eq!(su3_shell_line_count(3, 0).unwrap(), 6);
        assert_eq!(su3_shell_line_count(2, 2).unwrap(), 9);
    }
}
