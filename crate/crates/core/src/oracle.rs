//! Direct linear-algebra checks, independent of any reduction relation.
//!
//! `I_m` is spanned by all degree-`m` monomial multiples of the generators;
//! everything here is a rank computation on that spanning set.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ideal::MonomialIdeal;
use crate::linalg::{bareiss_echelon, integer_row, primitive, rank};
use crate::monomial::Monomial;
use crate::poly::HomPoly;
use crate::{QPoly, Rational};

/// Coefficient rows of every degree-`m` multiple of `gens` over `columns`.
fn multiples_matrix(gens: &[QPoly], nvars: usize, m: u32, columns: &[Monomial]) -> Vec<Vec<Rational>> {
    let index: std::collections::HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() || g.degree() > m {
            continue;
        }
        for t in Monomial::all_of_degree(nvars, m - g.degree()) {
            let mut row = vec![Rational::zero(); columns.len()];
            for (mono, c) in g.terms() {
                row[index[&mono.mul(&t)]] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `dim_k I_m` for the ideal generated by the homogeneous `gens`.
pub fn hilbert_oracle(gens: &[QPoly], nvars: usize, m: u32) -> usize {
    let cols = Monomial::all_of_degree(nvars, m);
    rank(&multiples_matrix(gens, nvars, m, &cols))
}

/// Outcome of checking `P_m = I_m (+) span N(J)_m` degree by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub verdict: bool,
    /// First failing degree, if any.
    pub degree: Option<u32>,
    pub dim_i: Option<usize>,
    pub dim_j: Option<usize>,
    /// A non-zero element of `I_m` supported on `N(J)_m` at the failing
    /// degree, in primitive integer form.
    pub witness: Option<QPoly>,
    /// `dim (I_m ∩ span N(J)_m)` at the failing degree.
    pub intersection_dim: Option<usize>,
}

/// Checks `dim I_m = dim J_m` and `I_m ∩ span N(J)_m = 0` for all
/// `m <= m_max`. `J` need not be strongly stable.
pub fn bst_membership_oracle(gens: &[QPoly], ideal: &MonomialIdeal, m_max: u32) -> OracleReport {
    let nvars = ideal.nvars();
    for m in 0..=m_max {
        let (jm, nm) = ideal.degree_slice(m);
        let cols: Vec<Monomial> = jm.iter().chain(&nm).cloned().collect();
        let rows: Vec<Vec<BigInt>> =
            multiples_matrix(gens, nvars, m, &cols).iter().map(|r| integer_row(r)).collect();
        let (echelon, pivots) = bareiss_echelon(rows);
        let dim_i = pivots.len();
        let dim_j = jm.len();
        let free_rows: Vec<usize> = (0..pivots.len()).filter(|&k| pivots[k] >= jm.len()).collect();
        if dim_i != dim_j || !free_rows.is_empty() {
            let witness = free_rows.first().map(|&k| {
                let v = primitive(&echelon[k]);
                let mut p = HomPoly::zero(nvars, m);
                for (c, mono) in v.into_iter().zip(&cols) {
                    p.add_term(mono.clone(), Rational::from_integer(c));
                }
                p
            });
            return OracleReport {
                verdict: false,
                degree: Some(m),
                dim_i: Some(dim_i),
                dim_j: Some(dim_j),
                witness,
                intersection_dim: Some(free_rows.len()),
            };
        }
    }
    OracleReport {
        verdict: true,
        degree: None,
        dim_i: None,
        dim_j: None,
        witness: None,
        intersection_dim: None,
    }
}
