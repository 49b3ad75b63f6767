//! Exact arithmetic in `ℤ[ζ_N]`, represented as integer polynomials reduced
//! modulo the cyclotomic polynomial `Φ_N`.

/// Dense integer polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Remainder and quotient on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("nonzero divisor");
        assert_eq!(divisor.0[d], 1, "divisor must be monic");
        let mut rem = self.0.clone();
        let mut quot = vec![0; rem.len().saturating_sub(d).max(1)];
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            quot[shift] = lead;
            for (i, &c) in divisor.0.iter().enumerate() {
                rem[shift + i] -= lead * c;
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }
}

/// `Φ_n = (x^n − 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    let mut acc = IntPoly::new(p);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = acc.div_rem_monic(&cyclotomic_polynomial(d));
            debug_assert!(r.coeffs().is_empty());
            acc = q;
        }
    }
    acc
}

/// `ℤ[ζ_N]` with its modulus precomputed.
#[derive(Debug, Clone)]
pub struct CyclotomicRing {
    order: u64,
    phi: IntPoly,
}

impl CyclotomicRing {
    pub fn new(order: u64) -> Self {
        Self {
            order,
            phi: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> CyclotomicInt {
        CyclotomicInt {
            order: self.order,
            counts: vec![0; self.order as usize],
        }
    }

    /// Canonical representative in `ℤ[x] / Φ_N`.
    pub fn reduce(&self, z: &CyclotomicInt) -> IntPoly {
        assert_eq!(z.order, self.order);
        IntPoly::new(z.counts.clone()).div_rem_monic(&self.phi).1
    }

    /// The rational integer `z` equals, if it is one.
    pub fn to_integer(&self, z: &CyclotomicInt) -> Option<i64> {
        match self.reduce(z).coeffs() {
            [] => Some(0),
            [c] => Some(*c),
            _ => None,
        }
    }
}

/// An element `Σ c_e ζ_N^e` kept as its exponent-count vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    order: u64,
    counts: Vec<i64>,
}

impl CyclotomicInt {
    pub fn add_power(&mut self, exponent: i64, coefficient: i64) {
        let e = exponent.rem_euclid(self.order as i64) as usize;
        self.counts[e] += coefficient;
    }

    pub fn add_assign(&mut self, other: &CyclotomicInt) {
        assert_eq!(self.order, other.order);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}
