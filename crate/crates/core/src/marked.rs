//! Marked polynomials, J-sets and the degree-`m` multiples `W_m` / `V_m`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::HomPoly;
use crate::scalar::Ring;

/// A marked polynomial `head - tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedPoly<R> {
    pub head: Monomial,
    pub tail: HomPoly<R>,
}

impl<R: Ring> MarkedPoly<R> {
    pub fn new(head: Monomial, tail: HomPoly<R>) -> Self {
        MarkedPoly { head, tail }
    }

    /// `head - tail` as an ordinary polynomial.
    pub fn full(&self) -> HomPoly<R> {
        let mut p = self.tail.neg();
        p.add_term(self.head.clone(), R::one());
        p
    }
}

/// One marked polynomial per minimal generator of `J`, with tails supported
/// on `N(J)` in the degree of the head. `polys[i]` has head `basis()[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct JSet<R> {
    ideal: MonomialIdeal,
    polys: Vec<MarkedPoly<R>>,
}

impl<R: Ring> JSet<R> {
    /// Checks the J-set conditions; strong stability is not required.
    pub fn new(ideal: MonomialIdeal, polys: Vec<MarkedPoly<R>>) -> Result<Self> {
        let mut slots: Vec<Option<MarkedPoly<R>>> = vec![None; ideal.basis().len()];
        for p in polys {
            let i = ideal
                .index_in_basis(&p.head)
                .ok_or_else(|| Error::UnknownHead(p.head.clone()))?;
            if slots[i].is_some() {
                return Err(Error::DuplicateHead(p.head));
            }
            for m in p.tail.support() {
                if m.degree() != p.head.degree() {
                    return Err(Error::TailDegree { head: p.head.clone(), monomial: m.clone() });
                }
                if ideal.contains(m) {
                    return Err(Error::TailInIdeal { head: p.head.clone(), monomial: m.clone() });
                }
            }
            slots[i] = Some(p);
        }
        let mut out = Vec::with_capacity(slots.len());
        for (i, s) in slots.into_iter().enumerate() {
            out.push(s.ok_or_else(|| Error::MissingHead(ideal.basis()[i].clone()))?);
        }
        Ok(JSet { ideal, polys: out })
    }

    /// `J` itself: every tail zero.
    pub fn monomial(ideal: MonomialIdeal) -> Self {
        let polys = ideal
            .basis()
            .iter()
            .map(|b| MarkedPoly::new(b.clone(), HomPoly::zero(ideal.nvars(), b.degree())))
            .collect();
        JSet { ideal, polys }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn polys(&self) -> &[MarkedPoly<R>] {
        &self.polys
    }

    pub fn poly(&self, index: usize) -> &MarkedPoly<R> {
        &self.polys[index]
    }

    pub fn poly_for(&self, head: &Monomial) -> Option<&MarkedPoly<R>> {
        self.ideal.index_in_basis(head).map(|i| &self.polys[i])
    }

    pub fn generators(&self) -> Vec<HomPoly<R>> {
        self.polys.iter().map(MarkedPoly::full).collect()
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> JSet<S> {
        JSet {
            ideal: self.ideal.clone(),
            polys: self
                .polys
                .iter()
                .map(|p| MarkedPoly::new(p.head.clone(), p.tail.map_coeffs(&mut f)))
                .collect(),
        }
    }

    /// Every element of `W_beta`: the pairs `X^delta f_alpha` with head `beta`.
    pub fn w_elements(&self, beta: &Monomial) -> Vec<WElem> {
        self.ideal
            .basis()
            .iter()
            .enumerate()
            .filter_map(|(i, a)| beta.div(a).map(|delta| WElem { delta, base: i }))
            .collect()
    }

    /// The minimum of `W_beta`: the unique element with `delta = 1` or
    /// `max_var(delta) <= min_var(alpha)`.
    pub fn min_of_w(&self, beta: &Monomial) -> Result<WElem> {
        let mut found = None;
        for w in self.w_elements(beta) {
            if w.is_minimal_shape(&self.ideal) {
                debug_assert!(found.is_none(), "two minimal elements over {beta}");
                found = Some(w);
            }
        }
        found.ok_or_else(|| Error::NotInIdeal(beta.clone()))
    }

    /// `V_m`: one minimal multiple per monomial of `J_m`, in canonical order
    /// of heads.
    pub fn v_m(&self, m: u32) -> Result<Vec<WElem>> {
        self.ideal.require_strongly_stable()?;
        let (jm, _) = self.ideal.degree_slice(m);
        jm.iter().map(|b| self.min_of_w(b)).collect()
    }

    /// `X^delta f_alpha` as a marked polynomial.
    pub fn multiple(&self, w: &WElem) -> MarkedPoly<R> {
        let base = &self.polys[w.base];
        MarkedPoly::new(base.head.mul(&w.delta), base.tail.monomial_multiply(&w.delta))
    }
}

/// `X^delta f_alpha`, with `f_alpha` the `base`-th marked polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WElem {
    pub delta: Monomial,
    pub base: usize,
}

impl WElem {
    pub fn head(&self, ideal: &MonomialIdeal) -> Monomial {
        ideal.basis()[self.base].mul(&self.delta)
    }

    pub fn alpha<'a>(&self, ideal: &'a MonomialIdeal) -> &'a Monomial {
        &ideal.basis()[self.base]
    }

    /// `delta = 1` or `max_var(delta) <= min_var(alpha)`.
    pub fn is_minimal_shape(&self, ideal: &MonomialIdeal) -> bool {
        match (self.delta.max_var(), self.alpha(ideal).min_var()) {
            (None, _) => true,
            (Some(d), Some(a)) => d <= a,
            (Some(_), None) => false,
        }
    }

    /// The order on `W_m`: `self > other` iff the first non-zero entry of
    /// `other.delta - self.delta`, reading from `X_0` upwards, is positive.
    pub fn w_cmp(&self, other: &WElem) -> Ordering {
        for (a, b) in self.delta.exps().iter().zip(other.delta.exps()) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{q, Vars};
    use crate::Rational;

    fn xyz() -> Vars {
        Vars::default_for(3)
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        let v = xyz();
        MonomialIdeal::new(3, gens.iter().map(|g| v.parse_monomial(g).unwrap()))
    }

    fn marked(head: &str, tail: &str) -> MarkedPoly<Rational> {
        let v = xyz();
        MarkedPoly::new(v.parse_monomial(head).unwrap(), v.parse_poly(tail).unwrap())
    }

    #[test]
    fn validate_xy_z2_set() {
        let j = ideal(&["x*y", "z^2"]);
        let g = JSet::new(j.clone(), vec![marked("x*y", "-y*z"), marked("z^2", "-x*z")]).unwrap();
        assert_eq!(g.polys().len(), 2);
        let full = g.poly_for(&xyz().parse_monomial("x*y").unwrap()).unwrap().full();
        assert_eq!(full, xyz().parse_poly("x*y + y*z").unwrap());
        assert!(JSet::<Rational>::new(j.clone(), JSet::monomial(j.clone()).polys().to_vec()).is_ok());
    }

    #[test]
    fn validate_errors() {
        let v = xyz();
        let j = ideal(&["x*y", "z^2"]);
        let e = JSet::new(j.clone(), vec![marked("x*y", "z^2"), marked("z^2", "0")]).unwrap_err();
        assert_eq!(
            e,
            Error::TailInIdeal {
                head: v.parse_monomial("x*y").unwrap(),
                monomial: v.parse_monomial("z^2").unwrap()
            }
        );
        assert!(e.render(&v).contains("tail monomial z^2"));
        let e = JSet::new(j.clone(), vec![marked("x*y", "0")]).unwrap_err();
        assert_eq!(e, Error::MissingHead(v.parse_monomial("z^2").unwrap()));
        let e = JSet::new(j.clone(), vec![marked("x*y", "0"), marked("x*y", "0")]).unwrap_err();
        assert!(matches!(e, Error::DuplicateHead(_)));
        let e = JSet::new(j.clone(), vec![marked("x*y", "x^3"), marked("z^2", "0")]).unwrap_err();
        assert!(matches!(e, Error::TailDegree { .. }));
        let e = JSet::new(j, vec![marked("x^2", "0")]).unwrap_err();
        assert!(matches!(e, Error::UnknownHead(_)));
    }

    #[test]
    fn min_of_w_picks_minimal_shape() {
        let v = xyz();
        let j = ideal(&["x^2", "x*y", "x*z", "y^2"]);
        let g = JSet::<Rational>::monomial(j.clone());
        let beta = v.parse_monomial("x*y^2*z").unwrap();
        let w = g.min_of_w(&beta).unwrap();
        assert_eq!(v.monomial(&w.delta), "y*z");
        assert_eq!(v.monomial(w.alpha(&j)), "x*y");
        // the order agrees with the shape criterion
        let all = g.w_elements(&beta);
        assert_eq!(all.len(), 3);
        let min = all.iter().min_by(|a, b| a.w_cmp(b)).unwrap();
        assert_eq!(min, &w);
        // degree-3 head x^2y: y*f_{x^2} is minimal
        let w = g.min_of_w(&v.parse_monomial("x^2*y").unwrap()).unwrap();
        assert_eq!((v.monomial(&w.delta).as_str(), v.monomial(w.alpha(&j)).as_str()), ("y", "x^2"));
        assert!(g.min_of_w(&v.parse_monomial("z^3").unwrap()).is_err());
    }

    #[test]
    fn v_m_counts() {
        let j = ideal(&["x^2", "x*y", "x*z", "y^2"]);
        let g = JSet::<Rational>::monomial(j.clone());
        for m in 0..6 {
            assert_eq!(g.v_m(m).unwrap().len(), j.dim_in_degree(m));
        }
        assert!(g.v_m(1).unwrap().is_empty());
    }

    #[test]
    fn multiple_shifts_tail() {
        let j = ideal(&["x*y", "z^2"]);
        let g = JSet::new(j.clone(), vec![marked("x*y", "-y*z"), marked("z^2", "-x*z")]).unwrap();
        let w = WElem { delta: xyz().parse_monomial("z").unwrap(), base: 0 };
        let mp = g.multiple(&w);
        assert_eq!(xyz().monomial(&mp.head), "x*y*z");
        assert_eq!(mp.tail, xyz().parse_poly("-y*z^2").unwrap());
        let _ = q(1);
    }
}
