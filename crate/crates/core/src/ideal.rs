//! Monomial ideals, strong stability and degree slices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{BorelOrder, Monomial};

/// A monomial ideal given by its minimal monomial basis `B_J`, kept in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    basis: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; the basis is minimalized.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let mut basis: Vec<Monomial> = Vec::new();
        // canonical order is degree-ascending, so divisors come first
        for g in all {
            assert_eq!(g.nvars(), nvars, "monomial with wrong number of variables");
            if !basis.iter().any(|b| b.divides(&g)) {
                basis.push(g);
            }
        }
        MonomialIdeal { nvars, basis }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.basis.iter().any(|b| b.divides(m))
    }

    pub fn is_basis_element(&self, m: &Monomial) -> bool {
        self.basis.binary_search(m).is_ok()
    }

    pub fn index_in_basis(&self, m: &Monomial) -> Option<usize> {
        self.basis.binary_search(m).ok()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.basis.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.basis.iter().map(Monomial::degree).max()
    }

    /// First up move of a generator that leaves the ideal, if any.
    pub fn stability_witness(&self) -> Option<(Monomial, Monomial)> {
        for b in &self.basis {
            for u in b.elementary_moves_up() {
                if !self.contains(&u) {
                    return Some((b.clone(), u));
                }
            }
        }
        None
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.stability_witness().is_none()
    }

    pub fn require_strongly_stable(&self) -> Result<()> {
        match self.stability_witness() {
            None => Ok(()),
            Some((from, to)) => Err(Error::NotStronglyStable { from, to }),
        }
    }

    /// `(J_m, N(J)_m)`, both in canonical order.
    pub fn degree_slice(&self, m: u32) -> (Vec<Monomial>, Vec<Monomial>) {
        Monomial::all_of_degree(self.nvars, m)
            .into_iter()
            .partition(|x| self.contains(x))
    }

    /// `dim_k J_m`.
    pub fn dim_in_degree(&self, m: u32) -> usize {
        Monomial::all_of_degree(self.nvars, m)
            .iter()
            .filter(|x| self.contains(x))
            .count()
    }

    /// Minimal basis of the ideal generated by the members of degree `>= m`.
    pub fn truncate_at(&self, m: u32) -> MonomialIdeal {
        let mut gens = Vec::new();
        for b in &self.basis {
            let d = b.degree();
            if d >= m {
                gens.push(b.clone());
            } else {
                for t in Monomial::all_of_degree(self.nvars, m - d) {
                    gens.push(b.mul(&t));
                }
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }
}

/// The smallest strongly stable ideal containing `gens`.
pub fn borel_closure(nvars: usize, gens: &[Monomial]) -> MonomialIdeal {
    let order = BorelOrder::new();
    let mut all = BTreeSet::new();
    for g in gens {
        all.extend(order.up_set(g).iter().cloned());
    }
    MonomialIdeal::new(nvars, all)
}
