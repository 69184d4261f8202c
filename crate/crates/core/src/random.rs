//! Seeded random instances for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ideal::{borel_closure, MonomialIdeal};
use crate::marked::{JSet, MarkedPoly};
use crate::monomial::Monomial;
use crate::poly::HomPoly;
use crate::scalar::Field;
use crate::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const SMALL: [i64; 4] = [-2, -1, 1, 2];

pub fn small_coefficient(rng: &mut impl Rng) -> Rational {
    Rational::from_i64(*SMALL.choose(rng).unwrap())
}

/// The Borel closure of one to three random monomials of degree
/// `1..=max_degree`; never the unit ideal.
pub fn strongly_stable_ideal(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=3);
    let gens: Vec<Monomial> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            let all = Monomial::all_of_degree(nvars, d);
            all.choose(rng).unwrap().clone()
        })
        .collect();
    borel_closure(nvars, &gens)
}

/// Each admissible tail monomial is used with probability `density`, with a
/// coefficient drawn from `{-2, -1, 1, 2}`.
pub fn sparse_jset(rng: &mut impl Rng, ideal: &MonomialIdeal, density: f64) -> JSet<Rational> {
    let polys = ideal
        .basis()
        .iter()
        .map(|head| {
            let (_, n) = ideal.degree_slice(head.degree());
            let mut tail = HomPoly::zero(ideal.nvars(), head.degree());
            for g in n {
                if rng.gen_bool(density) {
                    tail.add_term(g, small_coefficient(rng));
                }
            }
            MarkedPoly::new(head.clone(), tail)
        })
        .collect();
    JSet::new(ideal.clone(), polys).expect("tails are drawn from N(J)")
}

/// A random homogeneous polynomial of degree `m` with at most `terms` terms.
pub fn polynomial(rng: &mut impl Rng, nvars: usize, m: u32, terms: usize) -> HomPoly<Rational> {
    let all = Monomial::all_of_degree(nvars, m);
    let mut p = HomPoly::zero(nvars, m);
    for _ in 0..terms {
        p.add_term(all.choose(rng).unwrap().clone(), small_coefficient(rng));
    }
    p
}

/// A random instance `(J, G)`: `J` strongly stable in `nvars` variables
/// with generators of degree at most `max_degree`.
pub fn instance(rng: &mut impl Rng, nvars: usize, max_degree: u32, density: f64) -> JSet<Rational> {
    let ideal = strongly_stable_ideal(rng, nvars, max_degree);
    sparse_jset(rng, &ideal, density)
}
