//! Homogeneous polynomials over an abstract coefficient ring.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::{add_assign, Ring};

/// A homogeneous polynomial with coefficients in `R`.
///
/// Terms are stored in canonical monomial order and never hold a zero
/// coefficient. The zero polynomial keeps whatever degree tag it was built
/// with; arithmetic treats it as compatible with every degree.
#[derive(Clone, PartialEq, Debug)]
pub struct HomPoly<R> {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> HomPoly<R> {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomPoly { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: R) -> Self {
        let mut p = HomPoly::zero(m.nvars(), m.degree());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, R)>,
    ) -> Result<Self> {
        let mut p = HomPoly::zero(nvars, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch(degree, m.degree()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, R)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&R> {
        self.terms.get(m)
    }

    /// Adds `c * m`; the caller guarantees `m` has this polynomial's degree
    /// unless the polynomial is zero.
    pub fn add_term(&mut self, m: Monomial, c: R) {
        if self.terms.is_empty() {
            self.degree = m.degree();
        }
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                add_assign(cur, c);
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn remove_term(&mut self, m: &Monomial) -> Option<R> {
        self.terms.remove(m)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.is_zero() || other.is_zero() || self.degree == other.degree {
            Ok(())
        } else {
            Err(Error::DegreeMismatch(self.degree, other.degree))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(&R::one(), other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(&(-R::one()), other);
        Ok(out)
    }

    /// `self += c * other`, checking degrees.
    pub fn add_scaled(&mut self, c: &R, other: &Self) -> Result<()> {
        self.compatible(other)?;
        self.add_scaled_unchecked(c, other);
        Ok(())
    }

    pub(crate) fn add_scaled_unchecked(&mut self, c: &R, other: &Self) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (m, v) in &other.terms {
            let term = if unit { v.clone() } else { c.clone() * v.clone() };
            self.add_term(m.clone(), term);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = HomPoly::zero(self.nvars, self.degree);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(m.clone(), c.clone() * v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        HomPoly {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), -v.clone())).collect(),
        }
    }

    /// `X^beta * self`.
    pub fn monomial_multiply(&self, beta: &Monomial) -> Self {
        HomPoly {
            nvars: self.nvars,
            degree: self.degree + beta.degree(),
            terms: self.terms.iter().map(|(m, v)| (m.mul(beta), v.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> HomPoly<S> {
        let mut out = HomPoly::zero(self.nvars, self.degree);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }
}
