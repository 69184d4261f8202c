//! S-polynomials and the Buchberger-like test for J-bases.
//!
//! A pair is *special* when one of its two lcm-multiples is the minimal
//! element of `W` over the lcm. Reducing only special S-polynomials with
//! G** decides membership in the stratum; `m0` is the largest degree of a
//! special pair.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::marked::{JSet, MarkedPoly, WElem};
use crate::monomial::Monomial;
use crate::poly::HomPoly;
use crate::reduce::Reducer;
use crate::scalar::Ring;

/// `X^beta f_alpha - X^beta' f_alpha'` with both multiples headed by the lcm.
pub fn s_polynomial<R: Ring>(f: &MarkedPoly<R>, g: &MarkedPoly<R>) -> Result<HomPoly<R>> {
    if f.head == g.head {
        return Err(Error::IdenticalHeads(f.head.clone()));
    }
    let lcm = f.head.lcm(&g.head);
    let bf = lcm.div(&f.head).expect("lcm is a multiple");
    let bg = lcm.div(&g.head).expect("lcm is a multiple");
    // (lcm - bf*tail_f) - (lcm - bg*tail_g)
    let mut s = g.tail.monomial_multiply(&bg);
    s.add_scaled(&(-R::one()), &f.tail.monomial_multiply(&bf))?;
    HomPoly::from_terms(s.nvars(), lcm.degree(), s.into_terms())
}

/// A pair of generators with their lcm multipliers. `first` is the minimal
/// side when the pair is special.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SPair {
    pub first: WElem,
    pub second: WElem,
    pub lcm: Monomial,
    pub special: bool,
}

impl SPair {
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }

    /// `X^delta f_first - X^delta' f_second`.
    pub fn polynomial<R: Ring>(&self, jset: &JSet<R>) -> HomPoly<R> {
        let a = jset.multiple(&self.first);
        let b = jset.multiple(&self.second);
        let mut s = b.tail;
        s.add_scaled_unchecked(&(-R::one()), &a.tail);
        HomPoly::from_terms(s.nvars(), self.lcm.degree(), s.into_terms()).expect("homogeneous")
    }
}

/// Every pair of distinct generators in canonical order, with the special
/// ones flagged, and `m0` (the maximal generator degree when no pair is
/// special).
pub fn special_pairs<R: Ring>(jset: &JSet<R>) -> Result<(Vec<SPair>, u32)> {
    let ideal = jset.ideal();
    ideal.require_strongly_stable()?;
    let basis = ideal.basis();
    let mut pairs = Vec::new();
    for i in 0..basis.len() {
        for k in i + 1..basis.len() {
            let lcm = basis[i].lcm(&basis[k]);
            let wi = WElem { delta: lcm.div(&basis[i]).unwrap(), base: i };
            let wk = WElem { delta: lcm.div(&basis[k]).unwrap(), base: k };
            let (first, second, special) = if wi.is_minimal_shape(ideal) {
                (wi, wk, true)
            } else if wk.is_minimal_shape(ideal) {
                (wk, wi, true)
            } else {
                (wi, wk, false)
            };
            pairs.push(SPair { first, second, lcm, special });
        }
    }
    let m0 = pairs
        .iter()
        .filter(|p| p.special)
        .map(SPair::degree)
        .max()
        .or_else(|| ideal.max_degree())
        .unwrap_or(0);
    Ok((pairs, m0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    Special,
    All,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairRemainder<R> {
    pub pair: SPair,
    pub remainder: HomPoly<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport<R> {
    pub verdict: bool,
    pub m0: u32,
    pub remainders: Vec<PairRemainder<R>>,
}

/// G**-remainders of the selected S-polynomials, in canonical pair order.
pub fn pair_remainders<R: Ring>(
    reducer: &Reducer<'_, R>,
    mode: PairMode,
) -> Result<(Vec<PairRemainder<R>>, u32)> {
    let jset = reducer.jset();
    let (pairs, m0) = special_pairs(jset)?;
    let selected: Vec<SPair> =
        pairs.into_iter().filter(|p| mode == PairMode::All || p.special).collect();
    // build the per-degree tables up front so workers only read them
    let mut degrees: Vec<u32> = selected.iter().map(SPair::degree).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        reducer.table(d)?;
    }
    let out: Result<Vec<PairRemainder<R>>> = selected
        .into_par_iter()
        .map(|pair| {
            let s = pair.polynomial(jset);
            let remainder = reducer.gstarstar(&s)?;
            Ok(PairRemainder { pair, remainder })
        })
        .collect();
    Ok((out?, m0))
}

/// Decides whether `jset` is a J-basis.
pub fn is_j_basis<R: Ring>(jset: &JSet<R>) -> Result<CriterionReport<R>> {
    is_j_basis_with(jset, PairMode::Special)
}

pub fn is_j_basis_with<R: Ring>(jset: &JSet<R>, mode: PairMode) -> Result<CriterionReport<R>> {
    let reducer = Reducer::new(jset)?;
    let (remainders, m0) = pair_remainders(&reducer, mode)?;
    let verdict = remainders.iter().all(|r| r.remainder.is_zero());
    Ok(CriterionReport { verdict, m0, remainders })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::text::Vars;
    use crate::Rational;

    fn v() -> Vars {
        Vars::default_for(3)
    }

    fn mp(head: &str, tail: &str) -> MarkedPoly<Rational> {
        MarkedPoly::new(v().parse_monomial(head).unwrap(), v().parse_poly(tail).unwrap())
    }

    #[test]
    fn coprime_heads_zero_tails() {
        let s = s_polynomial(&mp("x^2", "0"), &mp("y^3", "0")).unwrap();
        assert!(s.is_zero());
        assert!(s_polynomial(&mp("x^2", "0"), &mp("x^2", "0")).is_err());
    }

    #[test]
    fn s_polynomial_of_two_quadrics() {
        // g1 = xy + x^2 - yz, g2 = z^2 + y^2 - xz
        let g1 = mp("x*y", "-x^2 + y*z");
        let g2 = mp("z^2", "-y^2 + x*z");
        let s = s_polynomial(&g1, &g2).unwrap();
        let want = v().parse_poly("x^2*z^2 - y*z^3 - x*y^3 + x^2*y*z").unwrap();
        assert_eq!(s, want);
    }

    #[test]
    fn required_pairs_of_four_quadrics() {
        let j = MonomialIdeal::new(
            3,
            ["x^2", "x*y", "x*z", "y^2"].iter().map(|s| v().parse_monomial(s).unwrap()),
        );
        let g = JSet::<Rational>::monomial(j.clone());
        let (pairs, m0) = special_pairs(&g).unwrap();
        let name = |p: &SPair| {
            let mut hs = [v().monomial(p.first.alpha(&j)), v().monomial(p.second.alpha(&j))];
            hs.sort();
            format!("{},{}", hs[0], hs[1])
        };
        let special: Vec<String> = pairs.iter().filter(|p| p.special).map(name).collect();
        for want in ["x*y,x^2", "x*z,x^2", "x^2,y^2", "x*y,x*z", "x*y,y^2"] {
            assert!(special.contains(&want.to_string()), "{want} missing from {special:?}");
        }
        let xz_y2 = pairs.iter().find(|p| name(p) == "x*z,y^2").unwrap();
        assert!(!xz_y2.special);
        // y^2 * f_{x^2} has minimal shape, so the lcm x^2*y^2 counts
        assert_eq!(m0, 4);
    }

    #[test]
    fn single_generator() {
        let j = MonomialIdeal::new(3, [v().parse_monomial("x^2").unwrap()]);
        let g = JSet::<Rational>::monomial(j);
        let (pairs, m0) = special_pairs(&g).unwrap();
        assert!(pairs.is_empty());
        assert_eq!(m0, 2);
        assert!(is_j_basis(&g).unwrap().verdict);
    }

    #[test]
    fn monomial_jset_is_basis() {
        let j = MonomialIdeal::new(
            3,
            ["x^2", "x*y", "x*z", "y^2"].iter().map(|s| v().parse_monomial(s).unwrap()),
        );
        let r = is_j_basis(&JSet::<Rational>::monomial(j)).unwrap();
        assert!(r.verdict);
        assert!(r.remainders.iter().all(|p| p.remainder.is_zero()));
    }
}
