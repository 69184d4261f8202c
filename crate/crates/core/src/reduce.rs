//! Reduction relations driven by a J-set.
//!
//! * [`g_reduce`]: unrestricted rewriting with a pluggable [`Chooser`]; may
//!   loop, which is detected and reported.
//! * [`Reducer::gstar`]: the recursive-by-degree reduction. A monomial of
//!   `J` outside `B_J` is split as `X_i * X^delta` with `X_i` its smallest
//!   variable and rewritten through the normal form of `X^delta`.
//! * [`Reducer::gstarstar`]: rewriting only with the minimal multiples
//!   `V_m`. Normal forms of all monomials of `J_m` are computed once per
//!   degree and substituted in a single pass.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::marked::{JSet, WElem};
use crate::monomial::Monomial;
use crate::poly::HomPoly;
use crate::scalar::Ring;

/// Picks, at each step of a G-reduction, a monomial of `J` in the current
/// polynomial together with a rule `X^delta f_alpha` whose head is that
/// monomial. Returning `None` means nothing is reducible.
pub trait Chooser<R> {
    fn choose(&mut self, current: &HomPoly<R>, jset: &JSet<R>) -> Option<WElem>;
}

/// First reducible monomial in canonical order, rewritten by the first
/// generator (canonical order) dividing it.
#[derive(Clone, Copy, Debug, Default)]
pub struct CanonicalChooser;

impl<R: Ring> Chooser<R> for CanonicalChooser {
    fn choose(&mut self, current: &HomPoly<R>, jset: &JSet<R>) -> Option<WElem> {
        current.support().find_map(|m| jset.w_elements(m).into_iter().next())
    }
}

/// Uses one preferred rule as late as possible: monomials the preferred
/// head does not divide are rewritten first (canonically); once every
/// reducible monomial is a multiple of the preferred head, the first of
/// them is rewritten with the preferred rule.
#[derive(Clone, Debug)]
pub struct PreferRuleChooser {
    pub head: Monomial,
}

impl<R: Ring> Chooser<R> for PreferRuleChooser {
    fn choose(&mut self, current: &HomPoly<R>, jset: &JSet<R>) -> Option<WElem> {
        let base = jset.ideal().index_in_basis(&self.head)?;
        let reducible: Vec<&Monomial> =
            current.support().filter(|m| jset.ideal().contains(m)).collect();
        for m in &reducible {
            if !self.head.divides(m) {
                return jset.w_elements(m).into_iter().next();
            }
        }
        let m = reducible.first()?;
        Some(WElem { delta: m.div(&self.head)?, base })
    }
}

impl<R, F> Chooser<R> for F
where
    F: FnMut(&HomPoly<R>, &JSet<R>) -> Option<WElem>,
{
    fn choose(&mut self, current: &HomPoly<R>, jset: &JSet<R>) -> Option<WElem> {
        self(current, jset)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStatus {
    NormalForm,
    /// The polynomial after the last step equals the one at `start`.
    CycleDetected { start: usize },
    StepCapExceeded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep<R> {
    /// The monomial `X^(delta+alpha)` that was rewritten.
    pub rewritten: Monomial,
    pub rule: WElem,
    /// Coefficient of the rewritten monomial; the step subtracts
    /// `coefficient * X^delta f_alpha`.
    pub coefficient: R,
    pub result: HomPoly<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace<R> {
    pub start: HomPoly<R>,
    pub steps: Vec<TraceStep<R>>,
    pub status: TraceStatus,
}

impl<R: Ring> ReductionTrace<R> {
    pub fn last(&self) -> &HomPoly<R> {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    /// `start`, then the result of every step.
    pub fn polys(&self) -> Vec<&HomPoly<R>> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.result)).collect()
    }
}

fn rewrite<R: Ring>(current: &HomPoly<R>, jset: &JSet<R>, rule: &WElem) -> (Monomial, R, HomPoly<R>) {
    let mp = jset.multiple(rule);
    let c = current.coeff(&mp.head).cloned().unwrap_or_else(R::zero);
    let mut next = current.clone();
    next.remove_term(&mp.head);
    next.add_scaled_unchecked(&c, &mp.tail);
    (mp.head, c, next)
}

/// A G-reduction of `h`, stopped at a normal form, at the first repeated
/// polynomial, or after `step_cap` steps.
pub fn g_reduce<R: Ring>(
    h: &HomPoly<R>,
    jset: &JSet<R>,
    chooser: &mut impl Chooser<R>,
    step_cap: usize,
) -> ReductionTrace<R> {
    let mut trace = ReductionTrace { start: h.clone(), steps: Vec::new(), status: TraceStatus::NormalForm };
    let mut seen: Vec<HomPoly<R>> = vec![h.clone()];
    loop {
        let current = trace.last().clone();
        let Some(rule) = chooser.choose(&current, jset) else {
            trace.status = TraceStatus::NormalForm;
            return trace;
        };
        if trace.steps.len() >= step_cap {
            trace.status = TraceStatus::StepCapExceeded;
            return trace;
        }
        let (rewritten, coefficient, result) = rewrite(&current, jset, &rule);
        let repeat = seen.iter().position(|p| *p == result);
        seen.push(result.clone());
        trace.steps.push(TraceStep { rewritten, rule, coefficient, result });
        if let Some(start) = repeat {
            trace.status = TraceStatus::CycleDetected { start };
            return trace;
        }
    }
}

/// Normal forms of every monomial of `J_m` under G**-reduction.
#[derive(Clone, Debug)]
pub struct NfTable<R> {
    pub degree: u32,
    pub forms: HashMap<Monomial, HomPoly<R>>,
}

/// G*- and G**-reduction for a J-set over a strongly stable ideal, with
/// per-J-set memoization of monomial normal forms.
pub struct Reducer<'a, R> {
    jset: &'a JSet<R>,
    star: Mutex<HashMap<Monomial, HomPoly<R>>>,
    tables: Mutex<HashMap<u32, Arc<NfTable<R>>>>,
}

impl<'a, R: Ring> Reducer<'a, R> {
    /// Refuses ideals that are not strongly stable.
    pub fn new(jset: &'a JSet<R>) -> Result<Self> {
        jset.ideal().require_strongly_stable()?;
        Ok(Reducer { jset, star: Mutex::new(HashMap::new()), tables: Mutex::new(HashMap::new()) })
    }

    pub fn jset(&self) -> &JSet<R> {
        self.jset
    }

    /// G*-reduction of `h` to a polynomial supported on `N(J)`.
    pub fn gstar(&self, h: &HomPoly<R>) -> Result<HomPoly<R>> {
        let mut out = HomPoly::zero(h.nvars(), h.degree());
        let mut active = Vec::new();
        for (m, c) in h.terms() {
            if self.jset.ideal().contains(m) {
                let nf = self.star_monomial(m, &mut active)?;
                out.add_scaled_unchecked(c, &nf);
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    fn star_monomial(&self, beta: &Monomial, active: &mut Vec<Monomial>) -> Result<HomPoly<R>> {
        if let Some(nf) = self.star.lock().unwrap().get(beta) {
            return Ok(nf.clone());
        }
        if active.contains(beta) {
            return Err(Error::ReductionLoop(beta.clone()));
        }
        active.push(beta.clone());
        let raw = match self.jset.poly_for(beta) {
            Some(f) => f.tail.clone(),
            None => {
                let i = beta.min_var().expect("1 is never in a proper ideal");
                let delta = beta.div_var(i).expect("min_var divides");
                if !self.jset.ideal().contains(&delta) {
                    return Err(Error::NotInIdeal(delta));
                }
                let g0 = self.star_monomial(&delta, active)?;
                g0.monomial_multiply(&Monomial::var(beta.nvars(), i))
            }
        };
        let mut nf = HomPoly::zero(beta.nvars(), beta.degree());
        for (m, c) in raw.terms() {
            if self.jset.ideal().contains(m) {
                let sub = self.star_monomial(m, active)?;
                nf.add_scaled_unchecked(c, &sub);
            } else {
                nf.add_term(m.clone(), c.clone());
            }
        }
        active.pop();
        self.star.lock().unwrap().insert(beta.clone(), nf.clone());
        Ok(nf)
    }

    /// The G**-normal forms of all monomials of `J_m`.
    pub fn table(&self, m: u32) -> Result<Arc<NfTable<R>>> {
        if let Some(t) = self.tables.lock().unwrap().get(&m) {
            return Ok(t.clone());
        }
        let (jm, _) = self.jset.ideal().degree_slice(m);
        let mut forms: HashMap<Monomial, HomPoly<R>> = HashMap::with_capacity(jm.len());
        let mut active = Vec::new();
        for eta in &jm {
            self.fill_form(eta, &mut forms, &mut active)?;
        }
        let table = Arc::new(NfTable { degree: m, forms });
        self.tables.lock().unwrap().insert(m, table.clone());
        Ok(table)
    }

    fn fill_form(
        &self,
        eta: &Monomial,
        forms: &mut HashMap<Monomial, HomPoly<R>>,
        active: &mut Vec<Monomial>,
    ) -> Result<()> {
        if forms.contains_key(eta) {
            return Ok(());
        }
        if active.contains(eta) {
            return Err(Error::ReductionLoop(eta.clone()));
        }
        active.push(eta.clone());
        let w = self.jset.min_of_w(eta)?;
        let base = self.jset.poly(w.base);
        let mut nf = HomPoly::zero(eta.nvars(), eta.degree());
        for (gamma, c) in base.tail.terms() {
            let t = gamma.mul(&w.delta);
            if self.jset.ideal().contains(&t) {
                self.fill_form(&t, forms, active)?;
                nf.add_scaled_unchecked(c, &forms[&t]);
            } else {
                nf.add_term(t, c.clone());
            }
        }
        active.pop();
        forms.insert(eta.clone(), nf);
        Ok(())
    }

    /// G**-reduction of `h` to a polynomial supported on `N(J)`.
    pub fn gstarstar(&self, h: &HomPoly<R>) -> Result<HomPoly<R>> {
        let ideal = self.jset.ideal();
        if !h.support().any(|m| ideal.contains(m)) {
            return Ok(h.clone());
        }
        let table = self.table(h.degree())?;
        let mut out = HomPoly::zero(h.nvars(), h.degree());
        for (m, c) in h.terms() {
            match table.forms.get(m) {
                Some(nf) => out.add_scaled_unchecked(c, nf),
                None => out.add_term(m.clone(), c.clone()),
            }
        }
        Ok(out)
    }

    /// G**-reduction one monomial at a time. `pick` selects which reducible
    /// monomial (by position among the reducible ones, in canonical order)
    /// is rewritten next; the step cap is generous and derived from the
    /// number of monomials of the degree.
    pub fn gstarstar_stepwise(
        &self,
        h: &HomPoly<R>,
        mut pick: impl FnMut(usize) -> usize,
    ) -> Result<ReductionTrace<R>> {
        let ideal = self.jset.ideal();
        let n_mon = Monomial::all_of_degree(h.nvars(), h.degree()).len();
        let cap = 64 * n_mon * n_mon + 64;
        let mut trace = ReductionTrace { start: h.clone(), steps: Vec::new(), status: TraceStatus::NormalForm };
        loop {
            let current = trace.last().clone();
            let reducible: Vec<&Monomial> = current.support().filter(|m| ideal.contains(m)).collect();
            if reducible.is_empty() {
                return Ok(trace);
            }
            if trace.steps.len() >= cap {
                return Err(Error::StepCap(cap));
            }
            let k = pick(reducible.len()) % reducible.len();
            let rule = self.jset.min_of_w(reducible[k])?;
            let (rewritten, coefficient, result) = rewrite(&current, self.jset, &rule);
            trace.steps.push(TraceStep { rewritten, rule, coefficient, result });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::marked::MarkedPoly;
    use crate::text::Vars;
    use crate::Rational;

    fn v() -> Vars {
        Vars::default_for(3)
    }

    fn jset(gens: &[(&str, &str)]) -> JSet<Rational> {
        let v = v();
        let heads: Vec<Monomial> = gens.iter().map(|g| v.parse_monomial(g.0).unwrap()).collect();
        let ideal = MonomialIdeal::new(3, heads.clone());
        let polys = gens
            .iter()
            .zip(heads)
            .map(|(g, h)| MarkedPoly::new(h, v.parse_poly(g.1).unwrap()))
            .collect();
        JSet::new(ideal, polys).unwrap()
    }

    #[test]
    fn unstable_heads_loop() {
        let g = jset(&[("x*y", "-y*z"), ("z^2", "-x*z")]);
        let h = v().parse_poly("x*y*z").unwrap();
        let t = g_reduce(&h, &g, &mut CanonicalChooser, 10);
        assert_eq!(t.status, TraceStatus::CycleDetected { start: 0 });
        let seq: Vec<String> = t.polys().iter().map(|p| v().poly(p)).collect();
        assert_eq!(seq, vec!["x*y*z", "-y*z^2", "x*y*z"]);
    }

    #[test]
    fn already_reduced() {
        let g = jset(&[("x*y", "-y*z"), ("z^2", "-x*z")]);
        let h = v().parse_poly("x^2 + y*z").unwrap();
        let t = g_reduce(&h, &g, &mut CanonicalChooser, 10);
        assert_eq!(t.status, TraceStatus::NormalForm);
        assert!(t.steps.is_empty());
    }

    #[test]
    fn step_cap() {
        let g = jset(&[("x*y", "-y*z"), ("z^2", "-x*z")]);
        let h = v().parse_poly("x*y*z").unwrap();
        let t = g_reduce(&h, &g, &mut CanonicalChooser, 1);
        assert_eq!(t.status, TraceStatus::StepCapExceeded);
    }

    #[test]
    fn refuses_unstable() {
        let g = jset(&[("x*y", "-y*z"), ("z^2", "-x*z")]);
        assert!(matches!(Reducer::new(&g), Err(Error::NotStronglyStable { .. })));
    }

    #[test]
    fn basis_head_reduces_to_tail() {
        let g = jset(&[("x^2", "x*z - 2*y*z"), ("x*y", "3*z^2"), ("y^2", "0")]);
        assert!(g.ideal().is_strongly_stable());
        let r = Reducer::new(&g).unwrap();
        let h = v().parse_poly("x*y").unwrap();
        assert_eq!(v().poly(&r.gstar(&h).unwrap()), "3*z^2");
        assert_eq!(v().poly(&r.gstarstar(&h).unwrap()), "3*z^2");
        let n = v().parse_poly("x*z + z^2").unwrap();
        assert_eq!(r.gstar(&n).unwrap(), n);
        assert_eq!(r.gstarstar(&n).unwrap(), n);
    }
}
