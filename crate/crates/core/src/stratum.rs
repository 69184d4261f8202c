//! The stratum of a strongly stable ideal as an affine scheme.
//!
//! Every tail coefficient of the generic marked set is a variable
//! `C_{alpha gamma}`; the stratum is cut out by the `X`-coefficients of the
//! G**-remainders of its special S-polynomials, or equivalently by the
//! bordered minors of the matrices `A_m`.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::criterion::{pair_remainders, PairMode};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{determinant, rank};
use crate::marked::{JSet, MarkedPoly, WElem};
use crate::monomial::{LambdaDegree, Monomial, TermOrder};
use crate::param::{CPoly, PowerProduct};
use crate::poly::HomPoly;
use crate::reduce::Reducer;
use crate::{ParamJSet, ParamPoly, QJSet, Rational};

/// The coefficient variable `C_{alpha gamma}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CVar {
    pub index: u32,
    /// Position of `alpha` in `B_J`.
    pub head: usize,
    /// Position of `gamma` in `N(J)_{|alpha|}`.
    pub slot: usize,
    pub alpha: Monomial,
    pub gamma: Monomial,
    pub lambda: LambdaDegree,
}

impl CVar {
    /// `c[i][j]`.
    pub fn name(&self) -> String {
        format!("c[{}][{}]", self.head, self.slot)
    }
}

/// The marked set with one variable per tail position.
#[derive(Clone, Debug)]
pub struct GenericMarkedSet {
    pub cvars: Vec<CVar>,
    pub jset: ParamJSet,
}

impl GenericMarkedSet {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_strongly_stable()?;
        let mut cvars = Vec::new();
        let mut polys = Vec::new();
        for (head, alpha) in ideal.basis().iter().enumerate() {
            let (_, n) = ideal.degree_slice(alpha.degree());
            let mut tail = HomPoly::zero(ideal.nvars(), alpha.degree());
            for (slot, gamma) in n.into_iter().enumerate() {
                let index = cvars.len() as u32;
                tail.add_term(gamma.clone(), CPoly::var(index));
                cvars.push(CVar {
                    index,
                    head,
                    slot,
                    lambda: LambdaDegree::difference(alpha, &gamma),
                    alpha: alpha.clone(),
                    gamma,
                });
            }
            polys.push(MarkedPoly::new(alpha.clone(), tail));
        }
        let jset = JSet::new(ideal.clone(), polys)?;
        Ok(GenericMarkedSet { cvars, jset })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        self.jset.ideal()
    }

    /// Number of coefficient variables.
    pub fn n(&self) -> usize {
        self.cvars.len()
    }

    pub fn name(&self, v: u32) -> String {
        self.cvars[v as usize].name()
    }

    pub fn lambda_of(&self, pp: &PowerProduct) -> LambdaDegree {
        let mut out = LambdaDegree::zero(self.ideal().nvars());
        for &(v, e) in pp.pairs() {
            out = &out + &self.cvars[v as usize].lambda.scaled(e as i64);
        }
        out
    }

    /// The common lambda-degree of all terms, or `None` when the terms
    /// disagree. The zero polynomial has degree zero.
    pub fn lambda_degree(&self, p: &ParamPoly) -> Option<LambdaDegree> {
        let mut it = p.terms().iter().map(|(pp, _)| self.lambda_of(pp));
        let first = match it.next() {
            Some(l) => l,
            None => return Some(LambdaDegree::zero(self.ideal().nvars())),
        };
        it.all(|l| l == first).then_some(first)
    }

    pub fn is_lambda_homogeneous(&self, p: &ParamPoly) -> bool {
        self.lambda_degree(p).is_some()
    }

    /// A weight vector `w` on the variables `X_0..X_n` (small nonnegative
    /// integers) making `w . lambda(C)` nonnegative for as many coefficient
    /// variables as possible, and then zero for as few as possible.
    pub fn weight_vector(&self) -> Vec<i64> {
        let n = self.ideal().nvars();
        let bound: i64 = if n <= 4 { 4 } else { 1 };
        let mut best: Option<((usize, usize), Vec<i64>)> = None;
        let mut w = vec![0i64; n];
        loop {
            let mut neg = 0;
            let mut zero = 0;
            for c in &self.cvars {
                let d: i64 = c.lambda.0.iter().zip(&w).map(|(l, x)| l * x).sum();
                if d < 0 {
                    neg += 1;
                } else if d == 0 {
                    zero += 1;
                }
            }
            if best.as_ref().is_none_or(|(score, _)| (neg, zero) < *score) {
                best = Some(((neg, zero), w.clone()));
            }
            // next vector in [0, bound]^n
            let Some(i) = (0..n).find(|&i| w[i] < bound) else { break };
            w[i] += 1;
            for x in &mut w[..i] {
                *x = 0;
            }
        }
        best.map(|(_, w)| w).unwrap_or_default()
    }

    /// `w . lambda` for each coefficient variable, with `w` from
    /// [`Self::weight_vector`].
    pub fn weights(&self) -> Vec<i64> {
        let w = self.weight_vector();
        self.cvars.iter().map(|c| c.lambda.0.iter().zip(&w).map(|(l, x)| l * x).sum()).collect()
    }

    /// The rational J-set obtained by setting `C = c`.
    pub fn specialize(&self, c: &[Rational]) -> Result<QJSet> {
        if c.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), got: c.len() });
        }
        Ok(self.jset.map_coeffs(|p| p.eval(c)))
    }

    /// The point with `C_{alpha gamma} = value` for the listed pairs and 0
    /// elsewhere.
    pub fn point(&self, entries: &[(Monomial, Monomial, Rational)]) -> Result<Vec<Rational>> {
        let mut c = vec![Rational::zero(); self.n()];
        for (alpha, gamma, value) in entries {
            let v = self
                .cvars
                .iter()
                .find(|cv| &cv.alpha == alpha && &cv.gamma == gamma)
                .ok_or_else(|| Error::NotInIdeal(alpha.clone()))?;
            c[v.index as usize] = value.clone();
        }
        Ok(c)
    }
}

/// Where a generator of the stratum ideal came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    /// Coefficient of `monomial` in the remainder of `S(f_first, f_second)`.
    Reduction { first: WElem, second: WElem, monomial: Monomial },
    /// Determinant of the given rows and columns of `A_degree`.
    Minor { degree: u32, rows: Vec<WElem>, cols: Vec<Monomial> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub poly: ParamPoly,
    pub provenance: Provenance,
}

/// Generators in `Q[C]` over an ambient set of coefficient variables.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumIdeal {
    /// Ambient variables; `0..N` unless some were killed or eliminated.
    pub vars: Vec<u32>,
    pub generators: Vec<Generator>,
}

impl StratumIdeal {
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn polys(&self) -> impl Iterator<Item = &ParamPoly> {
        self.generators.iter().map(|g| &g.poly)
    }
}

/// Collects the `X`-coefficients of the G**-remainders of S-polynomials:
/// special pairs give the ideal used as the definition, all pairs the
/// larger generating set.
pub fn stratum_ideal_reduction(gset: &GenericMarkedSet, mode: PairMode) -> Result<StratumIdeal> {
    let reducer = Reducer::new(&gset.jset)?;
    let (remainders, _) = pair_remainders(&reducer, mode)?;
    let mut generators = Vec::new();
    for r in remainders {
        for (mono, coeff) in r.remainder.terms() {
            generators.push(Generator {
                poly: coeff.clone(),
                provenance: Provenance::Reduction {
                    first: r.pair.first.clone(),
                    second: r.pair.second.clone(),
                    monomial: mono.clone(),
                },
            });
        }
    }
    Ok(StratumIdeal { vars: (0..gset.n() as u32).collect(), generators })
}

/// The matrix `A_m`: rows are all `X^beta F_alpha` of degree `m`, columns
/// the degree-`m` monomials.
///
/// The first `minimal` rows are `V_m`, sorted so that together with the
/// first `minimal` columns (the monomials of `J_m`, in matching order) they
/// form a unit upper-triangular block. Remaining columns are `N(J)_m`.
#[derive(Clone, Debug)]
pub struct ReductionMatrix {
    pub m: u32,
    pub rows: Vec<WElem>,
    pub minimal: usize,
    pub cols: Vec<Monomial>,
    pub entries: Vec<Vec<ParamPoly>>,
}

impl ReductionMatrix {
    pub fn build(gset: &GenericMarkedSet, m: u32) -> Result<Self> {
        let ideal = gset.ideal();
        let mut minimal_rows = gset.jset.v_m(m)?;
        // descending in the W order, ties canonically by head
        minimal_rows.sort_by(|a, b| b.w_cmp(a).then_with(|| a.head(ideal).cmp(&b.head(ideal))));
        let minimal_set: HashSet<WElem> = minimal_rows.iter().cloned().collect();
        let mut others = Vec::new();
        for (i, alpha) in ideal.basis().iter().enumerate() {
            if alpha.degree() > m {
                continue;
            }
            for delta in Monomial::all_of_degree(ideal.nvars(), m - alpha.degree()) {
                let w = WElem { delta, base: i };
                if !minimal_set.contains(&w) {
                    others.push(w);
                }
            }
        }
        others.sort_by(|a, b| a.head(ideal).cmp(&b.head(ideal)).then(a.base.cmp(&b.base)));
        let (_, nm) = ideal.degree_slice(m);
        let cols: Vec<Monomial> =
            minimal_rows.iter().map(|w| w.head(ideal)).chain(nm.iter().cloned()).collect();
        let col_index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let minimal = minimal_rows.len();
        let rows: Vec<WElem> = minimal_rows.into_iter().chain(others).collect();
        let mut entries = vec![vec![ParamPoly::zero(); cols.len()]; rows.len()];
        for (r, w) in rows.iter().enumerate() {
            let full = gset.jset.multiple(w).full();
            for (mono, c) in full.terms() {
                entries[r][col_index[mono]] = c.clone();
            }
        }
        Ok(ReductionMatrix { m, rows, minimal, cols, entries })
    }

    /// Checks the unit upper-triangular shape of the leading block.
    pub fn leading_block_is_unit_triangular(&self) -> bool {
        (0..self.minimal).all(|i| {
            self.entries[i][i].is_one() && (0..i).all(|j| self.entries[i][j].is_zero())
        })
    }

    /// The `(minimal+1)`-square submatrix bordering the leading block with
    /// `row` and `col`.
    pub fn bordered(&self, row: usize, col: usize) -> Vec<Vec<ParamPoly>> {
        let pick_rows: Vec<usize> = (0..self.minimal).chain([row]).collect();
        let pick_cols: Vec<usize> = (0..self.minimal).chain([col]).collect();
        self.submatrix(&pick_rows, &pick_cols)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<ParamPoly>> {
        rows.iter().map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect()).collect()
    }
}

/// Upper bound on the number of minors the all-minors mode will evaluate.
pub const MAX_MINORS: usize = 20_000;
/// Largest leading block for which determinants are expanded.
pub const MAX_BLOCK: usize = 16;

/// Minors of order `dim J_m + 1` of `A_m` for each listed degree. With
/// `bordered_only`, only those containing the unit-triangular block.
pub fn stratum_ideal_minors(
    gset: &GenericMarkedSet,
    degrees: &[u32],
    bordered_only: bool,
) -> Result<StratumIdeal> {
    let mut generators = Vec::new();
    for &m in degrees {
        let a = ReductionMatrix::build(gset, m)?;
        let order = a.minimal + 1;
        if a.minimal >= MAX_BLOCK {
            return Err(Error::SizeGuard(format!("leading block of order {} at degree {m}", a.minimal)));
        }
        if order > a.rows.len() || order > a.cols.len() {
            continue;
        }
        let mut push = |rows: Vec<usize>, cols: Vec<usize>, det: ParamPoly| {
            if !det.is_zero() {
                generators.push(Generator {
                    poly: det,
                    provenance: Provenance::Minor {
                        degree: m,
                        rows: rows.iter().map(|&r| a.rows[r].clone()).collect(),
                        cols: cols.iter().map(|&c| a.cols[c].clone()).collect(),
                    },
                });
            }
        };
        if bordered_only {
            for r in a.minimal..a.rows.len() {
                for c in a.minimal..a.cols.len() {
                    let det = determinant(&a.bordered(r, c));
                    push((0..a.minimal).chain([r]).collect(), (0..a.minimal).chain([c]).collect(), det);
                }
            }
        } else {
            let count = binomial(a.rows.len(), order).saturating_mul(binomial(a.cols.len(), order));
            if count > MAX_MINORS {
                return Err(Error::SizeGuard(format!("{count} minors of order {order} at degree {m}")));
            }
            for rows in subsets(a.rows.len(), order) {
                for cols in subsets(a.cols.len(), order) {
                    let det = determinant(&a.submatrix(&rows, &cols));
                    push(rows.clone(), cols.clone(), det);
                }
            }
        }
    }
    Ok(StratumIdeal { vars: (0..gset.n() as u32).collect(), generators })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Outcome of comparing G**-remainders of the rows of `A_m` with bordered
/// minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderedCheck {
    pub holds: bool,
    /// Number of (row, column) pairs compared.
    pub compared: usize,
}

/// For every non-minimal row of `A_m` and every `N(J)_m` column, the
/// coefficient of that column in the G**-remainder of the row must equal
/// the bordered determinant up to sign.
pub fn bordered_determinant_check(gset: &GenericMarkedSet, m: u32) -> Result<BorderedCheck> {
    let a = ReductionMatrix::build(gset, m)?;
    if a.minimal >= MAX_BLOCK {
        return Err(Error::SizeGuard(format!("leading block of order {} at degree {m}", a.minimal)));
    }
    let reducer = Reducer::new(&gset.jset)?;
    let mut holds = true;
    let mut compared = 0;
    for r in a.minimal..a.rows.len() {
        let row_poly = gset.jset.multiple(&a.rows[r]).full();
        let rem = reducer.gstarstar(&row_poly)?;
        for c in a.minimal..a.cols.len() {
            let coeff = rem.coeff(&a.cols[c]).cloned().unwrap_or_else(ParamPoly::zero);
            let det = determinant(&a.bordered(r, c));
            compared += 1;
            if det != coeff && det != -coeff.clone() {
                holds = false;
            }
        }
    }
    Ok(BorderedCheck { holds, compared })
}

/// The section by `C_{alpha gamma} = 0` for every `X^alpha < X^gamma` in
/// `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub killed: Vec<u32>,
    pub ideal: StratumIdeal,
}

pub fn groebner_section(gset: &GenericMarkedSet, s: &StratumIdeal, order: TermOrder) -> Section {
    let killed: Vec<u32> = s
        .vars
        .iter()
        .copied()
        .filter(|&v| {
            let cv = &gset.cvars[v as usize];
            order.cmp(&cv.alpha, &cv.gamma) == std::cmp::Ordering::Less
        })
        .collect();
    let kill: BTreeSet<u32> = killed.iter().copied().collect();
    let generators = s
        .generators
        .iter()
        .filter_map(|g| {
            let p = g.poly.kill_vars(&kill);
            (!p.is_zero()).then(|| Generator { poly: p, provenance: g.provenance.clone() })
        })
        .collect();
    let vars = s.vars.iter().copied().filter(|v| !kill.contains(v)).collect();
    Section { killed, ideal: StratumIdeal { vars, generators } }
}

/// Ambient dimension minus the rank of the linear parts of the generators.
pub fn tangent_dim_at_origin<'a>(vars: &[u32], gens: impl IntoIterator<Item = &'a ParamPoly>) -> usize {
    let col: HashMap<u32, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rows: Vec<Vec<Rational>> = gens
        .into_iter()
        .filter_map(|g| {
            let lin = g.linear_part();
            if lin.is_empty() {
                return None;
            }
            let mut row = vec![Rational::zero(); vars.len()];
            for (v, c) in lin {
                row[col[&v]] = c;
            }
            Some(row)
        })
        .collect();
    vars.len() - if rows.is_empty() { 0 } else { rank(&rows) }
}

/// One elimination step `C_var := value`.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution {
    pub var: u32,
    pub value: ParamPoly,
}

/// Result of eliminating variables that occur linearly and alone.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub kept: Vec<u32>,
    pub generators: Vec<ParamPoly>,
    pub substitutions: Vec<Substitution>,
    /// False when elimination stopped on the work budget.
    pub complete: bool,
}

impl Embedding {
    /// Fills eliminated coordinates of `point` (indexed by variable) from
    /// the kept ones; every recorded value involves kept variables only.
    pub fn extend(&self, point: &mut [Rational]) {
        for s in &self.substitutions {
            point[s.var as usize] = s.value.eval(point);
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.generators.iter().map(CPoly::total_degree).collect();
        d.sort_unstable();
        d
    }
}

/// `u` if `p = u*C_v + (terms free of C_v)`.
fn lonely_linear_coefficient(p: &ParamPoly, v: u32) -> Option<Rational> {
    let mut coeff = None;
    for (pp, c) in p.terms() {
        let e = pp.exponent(v);
        if e == 0 {
            continue;
        }
        if e == 1 && pp.degree() == 1 {
            coeff = Some(c.clone());
        } else {
            return None;
        }
    }
    coeff
}

/// Scales so the highest stored term has coefficient one; used to drop
/// generators that are scalar multiples of each other.
fn normalized(p: &ParamPoly) -> ParamPoly {
    match p.terms().last() {
        Some((_, c)) => p.scale(&(Rational::one() / c.clone())),
        None => p.clone(),
    }
}

fn dedup(gens: Vec<ParamPoly>) -> Vec<ParamPoly> {
    let mut seen: Vec<ParamPoly> = Vec::new();
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let key = normalized(&g);
        if !seen.contains(&key) {
            seen.push(key);
            out.push(g);
        }
    }
    out
}

/// Work limit for [`minimal_embedding`]: elimination stops once the active
/// generators together hold more than `max_terms` terms.
#[derive(Clone, Copy, Debug)]
pub struct EmbeddingBudget {
    pub max_terms: usize,
}

impl Default for EmbeddingBudget {
    fn default() -> Self {
        EmbeddingBudget { max_terms: 20_000 }
    }
}

fn total_terms(gens: &[ParamPoly]) -> usize {
    gens.iter().map(CPoly::len).sum()
}

/// Eliminates variables that occur linearly and alone in some generator.
///
/// Generators enter in tiers of increasing total degree. Within the active
/// generators, every one with a lonely linear term `u*C_i` offers the value
/// `C_i = -(rest)/u`; the offer with the fewest terms wins (ties: lowest
/// variable, then earliest generator). The value is substituted into the
/// active generators and earlier values and the generator dropped. When no
/// offer is left the next tier enters, with all values applied.
///
/// If the budget is exceeded, elimination stops; the remaining tiers are
/// still brought in so the result cuts out the same zero set, and the
/// embedding is marked incomplete.
pub fn minimal_embedding(s: &StratumIdeal, budget: EmbeddingBudget) -> Embedding {
    let mut raw = dedup(s.polys().cloned().collect());
    raw.sort_by_key(|g| (g.total_degree(), g.len()));
    let mut values: HashMap<u32, ParamPoly> = HashMap::new();
    let mut order: Vec<u32> = Vec::new();
    let mut active: Vec<ParamPoly> = Vec::new();
    let mut complete = true;
    let mut next = 0;
    while next < raw.len() {
        let tier = raw[next].total_degree();
        while next < raw.len() && raw[next].total_degree() == tier {
            active.push(raw[next].substitute_all(&values));
            next += 1;
        }
        active = dedup(active);
        while complete {
            if total_terms(&active) > budget.max_terms {
                complete = false;
                break;
            }
            let mut best: Option<(usize, u32, usize, Rational)> = None;
            for (gi, g) in active.iter().enumerate() {
                for (v, _) in g.linear_part() {
                    if let Some(u) = lonely_linear_coefficient(g, v) {
                        if best.as_ref().is_none_or(|b| (g.len(), v) < (b.0, b.1)) {
                            best = Some((g.len(), v, gi, u));
                        }
                    }
                }
            }
            let Some((_, v, gi, u)) = best else { break };
            let g = active.remove(gi);
            let value = (g - CPoly::var(v).scale(&u)).scale(&(-(Rational::one() / u)));
            let single: HashMap<u32, ParamPoly> = [(v, value.clone())].into();
            active = dedup(active.iter().map(|h| h.substitute_all(&single)).collect());
            for val in values.values_mut() {
                if val.degree_in(v) > 0 {
                    *val = val.substitute_all(&single);
                }
            }
            values.insert(v, value);
            order.push(v);
        }
    }
    let kept = s.vars.iter().copied().filter(|v| !values.contains_key(v)).collect();
    let substitutions =
        order.into_iter().map(|v| Substitution { var: v, value: values.remove(&v).unwrap() }).collect();
    Embedding { kept, generators: active, substitutions, complete }
}

/// True when every generator vanishes at `c` (a full vector of length `N`).
pub fn is_point_on_stratum(gset: &GenericMarkedSet, s: &StratumIdeal, c: &[Rational]) -> Result<bool> {
    if c.len() != gset.n() {
        return Err(Error::LengthMismatch { expected: gset.n(), got: c.len() });
    }
    Ok(s.polys().all(|g| g.eval(c).is_zero()))
}
