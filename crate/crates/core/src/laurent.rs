//! Sparse Laurent polynomials keyed by weights, with exact division by
//! binomials `1 − x^{−α}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Weight, i64>,
}

impl LaurentPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: Weight, coefficient: i64) -> Self {
        let mut p = Self::new();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn add_term(&mut self, exponent: Weight, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Weight, i64> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn shift(&self, by: &Weight) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, &c)| (k.plus(by), c)).collect(),
        }
    }

    /// Exact quotient by `1 − x^{−root}`, using `height` as a linear order
    /// with `height(root) > 0`. Fails when the division leaves a remainder.
    pub fn divide_by_binomial(&self, root: &Weight, height: impl Fn(&Weight) -> i64) -> Result<Self> {
        let step = height(root);
        if step <= 0 {
            return Err(Error::InvalidArgument("root height must be positive".into()));
        }
        let Some(min_height) = self.terms.keys().map(&height).min() else {
            return Ok(Self::new());
        };
        // Quotient monomials all sit at height >= min_height + step.
        let floor = min_height + step;
        let mut rest: BTreeMap<(i64, Weight), i64> = self
            .terms
            .iter()
            .map(|(k, &c)| ((height(k), k.clone()), c))
            .collect();
        let mut quotient = Self::new();
        while let Some(((h, mu), c)) = rest.pop_last() {
            if h < floor {
                return Err(Error::InexactDivision);
            }
            let lower = mu.minus(root);
            let key = (h - step, lower);
            let entry = rest.entry(key.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                rest.remove(&key);
            }
            quotient.add_term(mu, c);
        }
        Ok(quotient)
    }
}
