//! Limits of critical values and points over the strata of a perturbed
//! semi-algebraic set `S_e = {x : |f_i(x)| ≤ e_i}`, the genericity check for
//! the perturbation, and the real emptiness test built on them.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, eliminate, is_trivial, shape_position_solve, univariate_eliminant, Eliminant,
    Quotient, ShapeOptions, ShapeResult,
};
use crate::polyring::{combinations, maximal_minors, MPoly, MonomialOrder, Rational, Ring};
use crate::univariate::{
    isolate_real_roots, squarefree_part, IsolatingInterval, SturmSequence, UPoly,
};

/// A stratum: index set `I` (0-based) and one sign per index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumSpec {
    pub indices: Vec<usize>,
    pub signs: Vec<i8>,
}

impl StratumSpec {
    pub fn new(indices: Vec<usize>, signs: Vec<i8>) -> Self {
        assert_eq!(indices.len(), signs.len());
        StratumSpec { indices, signs }
    }

    pub fn positive(indices: Vec<usize>) -> Self {
        let signs = vec![1; indices.len()];
        StratumSpec { indices, signs }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Perturbation vector; every component is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    e: Vec<Rational>,
}

impl Perturbation {
    pub fn new(e: Vec<Rational>) -> Result<Self> {
        if e.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParams(
                "perturbation components must be nonzero".into(),
            ));
        }
        Ok(Perturbation { e })
    }

    pub fn from_ints(e: &[i64]) -> Result<Self> {
        Self::new(
            e.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn components(&self) -> &[Rational] {
        &self.e
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// Lagrange multipliers `λ_i` as extra variables.
    Lambda,
    /// Rank condition through Jacobian minors, saturated by the regular locus.
    Minors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaMode {
    Full,
    /// One sign pattern (`σ ≡ +1`) per index set.
    Ignore,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CritConfig {
    pub formulation: Formulation,
    pub sigma: SigmaMode,
    pub coeff_bound: u32,
    pub retry_budget: u32,
}

impl Default for CritConfig {
    fn default() -> Self {
        CritConfig {
            formulation: Formulation::Minors,
            sigma: SigmaMode::Ignore,
            coeff_bound: 99,
            retry_budget: 5,
        }
    }
}

/// Finite set `Z` of candidate limit critical values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalValueSet {
    /// Squarefree, monic.
    pub eliminant: UPoly,
    pub roots: Vec<IsolatingInterval>,
}

impl CriticalValueSet {
    pub fn degree(&self) -> usize {
        self.eliminant.degree().unwrap_or(0)
    }
}

/// Uniform integers in `[-bound, bound]`, redrawn while zero if `nonzero`.
pub(crate) fn random_ints<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    bound: u32,
    nonzero: bool,
) -> Vec<Rational> {
    let b = bound.max(1) as i64;
    (0..count)
        .map(|_| loop {
            let v = rng.gen_range(-b..=b);
            if !nonzero || v != 0 {
                break Rational::from_integer(BigInt::from(v));
            }
        })
        .collect()
}

/// Index sets of size `lo..=hi` with their sign patterns.
pub fn strata(s: usize, lo: usize, hi: usize, sigma: SigmaMode) -> Vec<StratumSpec> {
    let mut out = Vec::new();
    for k in lo..=hi.min(s) {
        for idx in combinations(s, k) {
            // a single index has no proportionality equation, so its sign is irrelevant
            if sigma == SigmaMode::Ignore || k <= 1 {
                out.push(StratumSpec::positive(idx));
            } else {
                push_sign_patterns(&mut out, idx);
            }
        }
    }
    out
}

fn push_sign_patterns(out: &mut Vec<StratumSpec>, idx: Vec<usize>) {
    let k = idx.len();
    for mask in 0..(1u32 << k) {
        let signs = (0..k)
            .map(|b| if mask >> b & 1 == 1 { -1 } else { 1 })
            .collect();
        out.push(StratumSpec::new(idx.clone(), signs));
    }
}

fn signed_e(stratum: &StratumSpec, e: &Perturbation, k: usize) -> Rational {
    let v = &e.components()[stratum.indices[k]];
    if stratum.signs[k] < 0 {
        -v
    } else {
        v.clone()
    }
}

fn jacobian_rows(fs: &[MPoly], indices: &[usize]) -> Vec<Vec<MPoly>> {
    indices.iter().map(|&i| fs[i].gradient()).collect()
}

/// Genericity check for `e`: every stratum of the perturbed set must be
/// smooth of the expected codimension and transverse to the others.
pub fn check_whitney_stratification(fs: &[MPoly], e: &Perturbation) -> bool {
    let ring = match fs.first() {
        Some(f) => f.ring().clone(),
        None => return true,
    };
    let n = ring.nvars();
    // every face f_i = ±e_i of the box is a stratum, singletons included
    let mut faces = Vec::new();
    for k in 1..=(n + 1).min(fs.len()) {
        for idx in combinations(fs.len(), k) {
            push_sign_patterns(&mut faces, idx);
        }
    }
    for st in faces {
        let mut j: Vec<MPoly> = (0..st.len())
            .map(|k| &fs[st.indices[k]] - &MPoly::constant(&ring, signed_e(&st, e, k)))
            .collect();
        if st.len() <= n {
            j.extend(maximal_minors(&ring, &jacobian_rows(fs, &st.indices)));
        }
        if !is_trivial(&j) {
            return false;
        }
    }
    true
}

fn proportionality(fs: &[MPoly], st: &StratumSpec, e: &Perturbation) -> Vec<MPoly> {
    let mut out = Vec::new();
    for a in 0..st.len() {
        for b in a + 1..st.len() {
            let fa = fs[st.indices[a]].scale(&signed_e(st, e, b));
            let fb = fs[st.indices[b]].scale(&signed_e(st, e, a));
            let p = &fa - &fb;
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out
}

/// Lagrange system of `h` on the stratum, in the ring `x₁…x_n, λ_i (i ∈ I)`.
pub fn critical_points_ideal(
    fs: &[MPoly],
    h: &MPoly,
    stratum: &StratumSpec,
    e: &Perturbation,
) -> (Arc<Ring>, Vec<MPoly>) {
    let ring = h.ring().clone();
    let n = ring.nvars();
    let names: Vec<String> = (0..stratum.len())
        .map(|k| format!("lambda{}", k + 1))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ext = ring.extended(&name_refs);
    let grads: Vec<Vec<MPoly>> = jacobian_rows(fs, &stratum.indices);
    let gh = h.gradient();
    let mut gens = Vec::new();
    for j in 0..n {
        let mut eq = -&gh[j].extend_to(&ext);
        for (k, g) in grads.iter().enumerate() {
            eq = &eq + &(&MPoly::var(&ext, n + k) * &g[j].extend_to(&ext));
        }
        if !eq.is_zero() {
            gens.push(eq);
        }
    }
    gens.extend(
        proportionality(fs, stratum, e)
            .iter()
            .map(|p| p.extend_to(&ext)),
    );
    (ext, gens)
}

/// Rank-condition system of `h` on the stratum, in the ring `x₁…x_n, y`,
/// where `y` inverts a random combination of the maximal minors of the
/// stratum's Jacobian. `None` if that Jacobian has no nonzero maximal minor.
pub fn minors_ideal<R: Rng + ?Sized>(
    fs: &[MPoly],
    h: &MPoly,
    stratum: &StratumSpec,
    e: &Perturbation,
    coeff_bound: u32,
    rng: &mut R,
) -> Option<(Arc<Ring>, Vec<MPoly>)> {
    let ring = h.ring().clone();
    let n = ring.nvars();
    let jac = jacobian_rows(fs, &stratum.indices);
    let mut rows = vec![h.gradient()];
    rows.extend(jac.iter().cloned());
    let mut gens: Vec<MPoly> = maximal_minors(&ring, &rows);
    gens.extend(proportionality(fs, stratum, e));
    if stratum.is_empty() {
        return Some((ring, gens));
    }
    let minors = maximal_minors(&ring, &jac);
    if minors.is_empty() {
        return None;
    }
    let weights = random_ints(rng, minors.len(), coeff_bound, true);
    let mut g = MPoly::zero(&ring);
    for (m, w) in minors.iter().zip(&weights) {
        g = &g + &m.scale(w);
    }
    if g.is_zero() {
        g = minors[0].clone();
    }
    let y_name = ring.fresh_name("y");
    let ext = ring.extended(&[y_name.as_str()]);
    let mut out: Vec<MPoly> = gens.iter().map(|p| p.extend_to(&ext)).collect();
    let sat = &MPoly::one(&ext) - &(&MPoly::var(&ext, n) * &g.extend_to(&ext));
    out.push(sat);
    Some((ext, out))
}

/// Ideal `J` of limits of critical points on one stratum, in the ring of `fs`:
/// the auxiliary variables are eliminated and all `f_i` are added. The
/// elimination must precede adding `f_i`, since the limits may lie where the
/// saturating minor vanishes.
pub fn limit_critical_points_stratum<R: Rng + ?Sized>(
    fs: &[MPoly],
    h: &MPoly,
    stratum: &StratumSpec,
    e: &Perturbation,
    config: &CritConfig,
    rng: &mut R,
) -> Vec<MPoly> {
    let ring = h.ring().clone();
    let n = ring.nvars();
    let system = match config.formulation {
        Formulation::Lambda => Some(critical_points_ideal(fs, h, stratum, e)),
        Formulation::Minors => minors_ideal(fs, h, stratum, e, config.coeff_bound, rng),
    };
    let (ext, gens) = match system {
        Some(s) => s,
        None => return vec![MPoly::one(&ring)],
    };
    let mut j: Vec<MPoly> = if ext.nvars() == n || gens.is_empty() {
        gens
    } else {
        let aux: Vec<usize> = (n..ext.nvars()).collect();
        eliminate(&gens, &aux)
            .iter()
            .map(|p| p.truncate_to(&ring))
            .collect()
    };
    j.extend(fs.iter().cloned());
    j
}

/// Ideals `J` for every stratum with `|I| ≤ n`, in canonical stratum order.
pub fn limit_critical_points<R: Rng + ?Sized>(
    fs: &[MPoly],
    h: &MPoly,
    e: &Perturbation,
    config: &CritConfig,
    rng: &mut R,
) -> Vec<(StratumSpec, Vec<MPoly>)> {
    let n = h.nvars();
    strata(fs.len(), 0, n, config.sigma)
        .into_iter()
        .map(|st| {
            let j = limit_critical_points_stratum(fs, h, &st, e, config, rng);
            (st, j)
        })
        .collect()
}

/// Generator of `(J + ⟨h − t⟩) ∩ ℚ[t]`.
fn value_eliminant(j: &[MPoly], h: &MPoly) -> Eliminant {
    let ring = h.ring();
    let gb = buchberger(j, &MonomialOrder::Grevlex);
    if gb.is_unit() {
        return Eliminant::Poly(UPoly::one());
    }
    if let Some(q) = Quotient::new(&gb) {
        return Eliminant::Poly(q.minimal_polynomial(h));
    }
    let t_name = ring.fresh_name("t");
    let ext = ring.extended(&[t_name.as_str()]);
    let n = ring.nvars();
    let mut gens: Vec<MPoly> = gb.generators.iter().map(|p| p.extend_to(&ext)).collect();
    gens.push(&h.extend_to(&ext) - &MPoly::var(&ext, n));
    univariate_eliminant(&gens, n)
}

/// Candidate set `Z ⊇ lim_{r→0}` of critical values of `h` on the strata of
/// `S_{re}`.
pub fn limit_critical_values<R: Rng + ?Sized>(
    fs: &[MPoly],
    h: &MPoly,
    e: &Perturbation,
    config: &CritConfig,
    rng: &mut R,
) -> Result<CriticalValueSet> {
    let mut acc = UPoly::one();
    for (st, j) in limit_critical_points(fs, h, e, config, rng) {
        match value_eliminant(&j, h) {
            Eliminant::Zero => {
                return Err(Error::GenericityFailure(format!(
                    "elimination ideal is zero on stratum {:?}",
                    st.indices
                )))
            }
            Eliminant::Poly(p) => {
                if !p.is_constant() {
                    acc = &acc * &squarefree_part(&p)?;
                }
            }
        }
    }
    let eliminant = squarefree_part(&acc)?;
    if fs.len() == 1 {
        if let Some(d) = fs[0].total_degree().filter(|&d| d > 0) {
            let bound = (d as usize).saturating_pow(h.nvars() as u32);
            let degree = eliminant.degree().unwrap_or(0);
            if degree > bound {
                return Err(Error::DegreeBoundViolated { degree, bound });
            }
        }
    }
    let roots = isolate_real_roots(&eliminant)?;
    Ok(CriticalValueSet { eliminant, roots })
}

/// Outcome of the emptiness test with bookkeeping for the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptinessReport {
    pub empty: bool,
    /// Largest eliminant degree among the solved point systems.
    pub max_eliminant_degree: usize,
    /// Fresh draws needed after the first attempt.
    pub retries: u32,
}

fn univariate_emptiness(fs: &[MPoly]) -> Result<EmptinessReport> {
    let mut g = UPoly::zero();
    for f in fs {
        g = g.gcd(&UPoly::from_mpoly(f, 0)?);
    }
    let g = squarefree_part(&g)?;
    let roots = SturmSequence::new(&g).total_real_roots();
    Ok(EmptinessReport {
        empty: roots == 0,
        max_eliminant_degree: g.degree().unwrap_or(0),
        retries: 0,
    })
}

enum Attempt {
    Decided { nonempty: bool, degree: usize },
    Retry,
}

fn emptiness_attempt<R: Rng + ?Sized>(
    fs: &[MPoly],
    config: &CritConfig,
    rng: &mut R,
) -> Result<Attempt> {
    let ring = fs[0].ring().clone();
    let n = ring.nvars();
    let p = random_ints(rng, n, config.coeff_bound, false);
    let e = Perturbation::new(random_ints(rng, fs.len(), config.coeff_bound, true))?;
    let h = squared_distance(&ring, &p);
    let mut degree = 0;
    let opts = ShapeOptions {
        retries: config.retry_budget,
        coeff_bound: config.coeff_bound,
    };
    for (_, j) in limit_critical_points(fs, &h, &e, config, rng) {
        match shape_position_solve(&j, rng, opts) {
            ShapeResult::Solved(sol) => {
                degree = degree.max(sol.eliminant.degree().unwrap_or(0));
                if sol.eliminant.is_constant() {
                    continue;
                }
                if SturmSequence::new(&sol.eliminant).total_real_roots() > 0 {
                    return Ok(Attempt::Decided {
                        nonempty: true,
                        degree,
                    });
                }
            }
            ShapeResult::NotZeroDimensional | ShapeResult::RetryExhausted => {
                return Ok(Attempt::Retry)
            }
        }
    }
    Ok(Attempt::Decided {
        nonempty: false,
        degree,
    })
}

/// `Σ (x_i − p_i)²`.
pub fn squared_distance(ring: &Arc<Ring>, p: &[Rational]) -> MPoly {
    let mut h = MPoly::zero(ring);
    for (i, pi) in p.iter().enumerate() {
        let d = &MPoly::var(ring, i) - &MPoly::constant(ring, pi.clone());
        h = &h + &(&d * &d);
    }
    h
}

/// Emptiness of `{f = 0}` over ℝ with the trace bookkeeping.
pub fn real_emptiness_report<R: Rng + ?Sized>(
    fs: &[MPoly],
    config: &CritConfig,
    rng: &mut R,
) -> Result<EmptinessReport> {
    let fs: Vec<MPoly> = fs.iter().filter(|f| !f.is_zero()).cloned().collect();
    let trivial = |empty| EmptinessReport {
        empty,
        max_eliminant_degree: 0,
        retries: 0,
    };
    if fs.is_empty() {
        return Ok(trivial(false));
    }
    if fs.iter().any(MPoly::is_constant) {
        return Ok(trivial(true));
    }
    if fs[0].nvars() == 1 {
        return univariate_emptiness(&fs);
    }
    if is_trivial(&fs) {
        return Ok(trivial(true));
    }
    let budget = config.retry_budget.max(1);
    for attempt in 0..budget {
        if let Attempt::Decided { nonempty, degree } = emptiness_attempt(&fs, config, rng)? {
            return Ok(EmptinessReport {
                empty: !nonempty,
                max_eliminant_degree: degree,
                retries: attempt,
            });
        }
    }
    Err(Error::GenericityExhausted(format!(
        "emptiness test found no zero-dimensional critical point system in {budget} attempts"
    )))
}

/// True iff `{f_1 = … = f_s = 0} ∩ ℝⁿ` is empty.
pub fn real_emptiness<R: Rng + ?Sized>(
    fs: &[MPoly],
    config: &CritConfig,
    rng: &mut R,
) -> Result<bool> {
    real_emptiness_report(fs, config, rng).map(|r| r.empty)
}

/// `Σ c_i x_i`.
pub fn linear_form(ring: &Arc<Ring>, coeffs: &[Rational]) -> MPoly {
    MPoly::linear(ring, coeffs, Rational::zero())
}

/// Whether `u` has a real root (nonzero `u`).
pub fn has_real_root(u: &UPoly) -> bool {
    !u.is_constant() && SturmSequence::new(u).total_real_roots() > 0
}

impl CriticalValueSet {
    /// `Z = ∅` as a set.
    pub fn empty() -> Self {
        CriticalValueSet {
            eliminant: UPoly::one(),
            roots: Vec::new(),
        }
    }

    pub fn contains_exactly(&self, value: &Rational) -> bool {
        self.eliminant.eval(value).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, ratio};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xy() -> (Arc<Ring>, MPoly, MPoly) {
        let r = Ring::new(["x", "y"]);
        (r.clone(), MPoly::var(&r, 0), MPoly::var(&r, 1))
    }

    fn k(r: &Arc<Ring>, v: i64) -> MPoly {
        MPoly::constant(r, rat(v))
    }

    fn circle() -> (Arc<Ring>, MPoly) {
        let (r, x, y) = xy();
        let f = &(&x.pow(2) + &y.pow(2)) - &k(&r, 1);
        (r, f)
    }

    fn configs() -> [CritConfig; 2] {
        [
            CritConfig::default(),
            CritConfig {
                formulation: Formulation::Lambda,
                sigma: SigmaMode::Full,
                ..CritConfig::default()
            },
        ]
    }

    #[test]
    fn whitney_examples() {
        let (_, f) = circle();
        let half = Perturbation::new(vec![ratio(1, 2)]).unwrap();
        assert!(check_whitney_stratification(
            std::slice::from_ref(&f),
            &half
        ));

        let r = Ring::new(["x"]);
        let x = MPoly::var(&r, 0);
        let e = Perturbation::from_ints(&[1, 1]).unwrap();
        assert!(!check_whitney_stratification(&[x.clone(), x.clone()], &e));
        let e = Perturbation::from_ints(&[1]).unwrap();
        assert!(check_whitney_stratification(&[x.pow(2)], &e));
    }

    #[test]
    fn whitney_circle_random_e() {
        let (_, f) = circle();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let e = Perturbation::new(random_ints(&mut rng, 1, 99, true)).unwrap();
            let critical = e.components()[0] == rat(1) || e.components()[0] == rat(-1);
            assert_eq!(
                check_whitney_stratification(std::slice::from_ref(&f), &e),
                !critical
            );
        }
        // f = -1 is the singular point of the level sets
        for bad in [-1, 1] {
            let e = Perturbation::from_ints(&[bad]).unwrap();
            assert!(!check_whitney_stratification(std::slice::from_ref(&f), &e));
        }
    }

    #[test]
    fn critical_points_ideal_examples() {
        let (r, x, _) = xy();
        let (_, f) = circle();
        let e = Perturbation::new(vec![ratio(1, 2)]).unwrap();
        let (ext, gens) = critical_points_ideal(
            std::slice::from_ref(&f),
            &x,
            &StratumSpec::positive(vec![0]),
            &e,
        );
        assert_eq!(ext.nvars(), 3);
        let lam = MPoly::var(&ext, 2);
        let xe = MPoly::var(&ext, 0);
        let ye = MPoly::var(&ext, 1);
        let expect = vec![
            &(&lam * &xe).scale(&rat(2)) - &MPoly::one(&ext),
            (&lam * &ye).scale(&rat(2)),
        ];
        assert_eq!(gens, expect);

        let (_, gens) = critical_points_ideal(
            std::slice::from_ref(&f),
            &x,
            &StratumSpec::positive(vec![]),
            &e,
        );
        assert!(is_trivial(&gens));

        let f2 = x.clone();
        let e12 = Perturbation::from_ints(&[1, 2]).unwrap();
        let (ext, gens) = critical_points_ideal(
            &[f.clone(), f2.clone()],
            &x,
            &StratumSpec::positive(vec![0, 1]),
            &e12,
        );
        let prop = (&f.scale(&rat(2)) - &f2).extend_to(&ext);
        assert_eq!(gens.last(), Some(&prop));
        let _ = r;
    }

    #[test]
    fn limit_values_examples() {
        let (r, x, y) = xy();
        let e = Perturbation::new(vec![ratio(1, 2)]).unwrap();
        for cfg in configs() {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let (_, f) = circle();
            let z = limit_critical_values(&[f], &x, &e, &cfg, &mut rng).unwrap();
            assert_eq!(z.eliminant, UPoly::from_ints(&[-1, 0, 1]));
            assert_eq!(z.roots.len(), 2);

            let g = &(&x.pow(2) + &y.pow(2)) + &k(&r, 1);
            let z = limit_critical_values(&[g], &x, &e, &cfg, &mut rng).unwrap();
            assert_eq!(z.eliminant, UPoly::from_ints(&[1, 0, 1]));
            assert!(z.roots.is_empty());

            let r1 = Ring::new(["x"]);
            let x1 = MPoly::var(&r1, 0);
            let one = Perturbation::from_ints(&[1]).unwrap();
            let z = limit_critical_values(std::slice::from_ref(&x1), &x1, &one, &cfg, &mut rng)
                .unwrap();
            assert_eq!(z.eliminant, UPoly::identity());
        }
    }

    #[test]
    fn circle_linear_form_values() {
        let (r, _) = circle();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (_, f) = circle();
        for _ in 0..5 {
            let ab = random_ints(&mut rng, 2, 20, true);
            let h = linear_form(&r, &ab);
            let e = Perturbation::new(random_ints(&mut rng, 1, 99, true)).unwrap();
            let z = limit_critical_values(
                std::slice::from_ref(&f),
                &h,
                &e,
                &CritConfig::default(),
                &mut rng,
            )
            .unwrap();
            // critical values of ax+by on the circle are ±√(a²+b²)
            let norm = &ab[0] * &ab[0] + &ab[1] * &ab[1];
            let target = UPoly::new(vec![-norm, rat(0), rat(1)]);
            assert!(target.rem(&z.eliminant).is_zero());
            assert_eq!(z.roots.len(), 2);
        }
    }

    #[test]
    fn formulations_agree_on_real_roots() {
        let (r, x, y) = xy();
        let cases = [
            &(&x.pow(2) + &y.pow(2)) - &k(&r, 1),
            &x * &y,
            &(&x.pow(3) - &y.pow(2)) + &(&x * &y),
        ];
        let h = &x.scale(&rat(3)) - &y.scale(&rat(7));
        let e = Perturbation::from_ints(&[5]).unwrap();
        for f in cases {
            let mut counts = Vec::new();
            for cfg in configs() {
                let mut rng = ChaCha8Rng::seed_from_u64(2);
                let z = limit_critical_values(std::slice::from_ref(&f), &h, &e, &cfg, &mut rng)
                    .unwrap();
                counts.push(z.roots.len());
            }
            assert_eq!(counts[0], counts[1], "{f}");
        }
    }

    #[test]
    fn emptiness_examples() {
        let (r, x, y) = xy();
        let base = &x.pow(2) + &y.pow(2);
        for cfg in configs() {
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            assert!(real_emptiness(&[&base + &k(&r, 1)], &cfg, &mut rng).unwrap());
            assert!(!real_emptiness(&[&base - &k(&r, 1)], &cfg, &mut rng).unwrap());
            assert!(!real_emptiness(std::slice::from_ref(&base), &cfg, &mut rng).unwrap());
            assert!(!real_emptiness(&[&x * &y], &cfg, &mut rng).unwrap());
        }
    }

    #[test]
    fn strata_enumeration() {
        assert_eq!(strata(2, 0, 2, SigmaMode::Ignore).len(), 4);
        // {}, {1}, {2}, {1,2} × 4 signs
        assert_eq!(strata(2, 0, 2, SigmaMode::Full).len(), 7);
        assert!(Perturbation::from_ints(&[1, 0]).is_err());
    }
}
