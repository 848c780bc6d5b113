//! Recursive real-dimension drivers: the proper case (fibers of a generic
//! linear projection), the general case (fibers of a squared distance) and
//! the Las Vegas variant (certified perturbation, coordinate projections).
//!
//! Every node owns a ChaCha8 stream seeded from its parent, and child seeds
//! are drawn before any child runs, so results do not depend on scheduling.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::critvals::{
    check_whitney_stratification, limit_critical_values, random_ints, real_emptiness_report,
    squared_distance, CritConfig, CriticalValueSet, Formulation, Perturbation, SigmaMode,
};
use crate::error::{Error, Result};
use crate::polyring::{MPoly, Rational};
use crate::univariate::sample_points;

/// Source of all generic choices of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngConfig {
    pub seed: u64,
    pub coeff_bound: u32,
    pub retry_budget: u32,
}

impl Default for RngConfig {
    fn default() -> Self {
        RngConfig {
            seed: 0,
            coeff_bound: 99,
            retry_budget: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DriverOptions {
    pub rng: RngConfig,
    pub formulation: Formulation,
    pub sigma: SigmaMode,
    /// Fiber recursions run on the rayon pool; disables the short-circuit.
    pub parallel: bool,
}

impl Default for DriverOptions {
    fn default() -> Self {
        DriverOptions {
            rng: RngConfig::default(),
            formulation: Formulation::Minors,
            sigma: SigmaMode::Ignore,
            parallel: false,
        }
    }
}

impl DriverOptions {
    pub fn with_seed(seed: u64) -> Self {
        DriverOptions {
            rng: RngConfig {
                seed,
                ..RngConfig::default()
            },
            ..DriverOptions::default()
        }
    }

    fn crit(&self) -> CritConfig {
        CritConfig {
            formulation: self.formulation,
            sigma: self.sigma,
            coeff_bound: self.rng.coeff_bound,
            retry_budget: self.rng.retry_budget,
        }
    }
}

/// Statistics of all nodes at one recursion depth.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DepthStats {
    /// Maximum over nodes of `#real roots of Z + 1`.
    pub fiber_count: usize,
    /// Maximum degree of the eliminants solved at this depth.
    pub max_eliminant_degree: usize,
    /// Total fresh draws after genericity failures.
    pub retries: u32,
    /// Fibers not visited because the answer was already maximal.
    pub skipped_fibers: usize,
}

impl DepthStats {
    fn merge(&mut self, other: &DepthStats) {
        self.fiber_count = self.fiber_count.max(other.fiber_count);
        self.max_eliminant_degree = self.max_eliminant_degree.max(other.max_eliminant_degree);
        self.retries += other.retries;
        self.skipped_fibers += other.skipped_fibers;
    }
}

/// Per-depth statistics; depth 0 is the top-level call. Only nodes that
/// compute a set `Z` own an entry; the emptiness-only leaves are charged to
/// their parent's depth.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RecursionTrace {
    pub depths: Vec<DepthStats>,
}

impl RecursionTrace {
    fn merge_child(&mut self, child: &NodeOutcome) {
        match &child.trace {
            ChildTrace::Leaf(stats) => self.depths[0].merge(stats),
            ChildTrace::Inner(t) => {
                for (k, s) in t.depths.iter().enumerate() {
                    if self.depths.len() <= k + 1 {
                        self.depths.push(DepthStats::default());
                    }
                    self.depths[k + 1].merge(s);
                }
            }
        }
    }

    pub fn fibers_per_depth(&self) -> Vec<usize> {
        self.depths.iter().map(|d| d.fiber_count).collect()
    }

    pub fn max_eliminant_degree(&self) -> Vec<usize> {
        self.depths.iter().map(|d| d.max_eliminant_degree).collect()
    }

    pub fn retries(&self) -> Vec<u32> {
        self.depths.iter().map(|d| d.retries).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimResult {
    /// `-1` for the empty set.
    pub dim: i32,
    pub trace: RecursionTrace,
}

enum ChildTrace {
    Leaf(DepthStats),
    Inner(RecursionTrace),
}

struct NodeOutcome {
    dim: i32,
    trace: ChildTrace,
}

impl NodeOutcome {
    fn leaf(dim: i32, max_eliminant_degree: usize, retries: u32) -> Self {
        NodeOutcome {
            dim,
            trace: ChildTrace::Leaf(DepthStats {
                max_eliminant_degree,
                retries,
                ..DepthStats::default()
            }),
        }
    }

    fn into_result(self) -> DimResult {
        let trace = match self.trace {
            // no Z was computed, so no depth was reached
            ChildTrace::Leaf(_) => RecursionTrace::default(),
            ChildTrace::Inner(t) => t,
        };
        DimResult {
            dim: self.dim,
            trace,
        }
    }
}

/// Integers uniform in `[-coeff_bound, coeff_bound]`; nonzero on request.
pub fn random_generic_vector<R: Rng + ?Sized>(
    count: usize,
    nonzero: bool,
    config: &RngConfig,
    rng: &mut R,
) -> Vec<Rational> {
    random_ints(rng, count, config.coeff_bound, nonzero)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Driver {
    Proper,
    General,
    LasVegas,
}

/// Result of the common prefix of every node.
enum Prelude {
    Done(NodeOutcome),
    Continue {
        fs: Vec<MPoly>,
        degree: usize,
        retries: u32,
    },
}

fn prelude(fs: &[MPoly], opts: &DriverOptions, rng: &mut ChaCha8Rng) -> Result<Prelude> {
    let n = fs.first().ok_or(Error::EmptySystem)?.nvars() as i32;
    let fs: Vec<MPoly> = fs.iter().filter(|f| !f.is_zero()).cloned().collect();
    if fs.is_empty() {
        return Ok(Prelude::Done(NodeOutcome::leaf(n, 0, 0)));
    }
    let em = real_emptiness_report(&fs, &opts.crit(), rng)?;
    if em.empty {
        return Ok(Prelude::Done(NodeOutcome::leaf(
            -1,
            em.max_eliminant_degree,
            em.retries,
        )));
    }
    if n == 1 {
        return Ok(Prelude::Done(NodeOutcome::leaf(
            0,
            em.max_eliminant_degree,
            em.retries,
        )));
    }
    Ok(Prelude::Continue {
        fs,
        degree: em.max_eliminant_degree,
        retries: em.retries,
    })
}

/// One projection at a node: its candidate values and fiber systems.
struct Projection {
    z: CriticalValueSet,
    fibers: Vec<Vec<MPoly>>,
}

fn fibers_linear(
    fs: &[MPoly],
    var: usize,
    q: &MPoly,
    z: &CriticalValueSet,
) -> Result<Vec<Vec<MPoly>>> {
    let ring = q.ring();
    sample_points(&z.roots)
        .samples
        .iter()
        .map(|t| {
            let shift = q + &MPoly::constant(ring, t.clone());
            fs.iter()
                .map(|f| f.substitute_and_drop(var, &shift))
                .collect()
        })
        .collect()
}

fn draw_perturbation(s: usize, opts: &DriverOptions, rng: &mut ChaCha8Rng) -> Perturbation {
    Perturbation::new(random_generic_vector(s, true, &opts.rng, rng)).expect("nonzero draw")
}

fn projections(
    driver: Driver,
    fs: &[MPoly],
    opts: &DriverOptions,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<Projection>, u32)> {
    let ring = fs[0].ring().clone();
    let n = ring.nvars();
    let crit = opts.crit();
    let budget = opts.rng.retry_budget.max(1);
    let mut retries = 0;
    for _ in 0..budget {
        let e = draw_perturbation(fs.len(), opts, rng);
        let attempt: Result<Vec<Projection>> = match driver {
            Driver::Proper => {
                let mut c = random_generic_vector(n - 1, false, &opts.rng, rng);
                c.push(Rational::zero());
                let q = MPoly::linear(&ring, &c, Rational::zero());
                let h = &MPoly::var(&ring, n - 1) - &q;
                limit_critical_values(fs, &h, &e, &crit, rng).and_then(|z| {
                    let fibers = fibers_linear(fs, n - 1, &q, &z)?;
                    Ok(vec![Projection { z, fibers }])
                })
            }
            Driver::General => {
                let p = random_generic_vector(n, false, &opts.rng, rng);
                let h = squared_distance(&ring, &p);
                limit_critical_values(fs, &h, &e, &crit, rng).and_then(|z| {
                    if z.roots.is_empty() {
                        return Err(Error::GenericityFailure(
                            "distance function has no candidate value on a nonempty set".into(),
                        ));
                    }
                    let fibers = sample_points(&z.roots)
                        .samples
                        .iter()
                        .map(|t| {
                            let mut sys = fs.to_vec();
                            sys.push(&h - &MPoly::constant(&ring, t.clone()));
                            sys
                        })
                        .collect();
                    Ok(vec![Projection { z, fibers }])
                })
            }
            Driver::LasVegas => {
                if !check_whitney_stratification(fs, &e) {
                    Err(Error::GenericityFailure(
                        "perturbation is not generic".into(),
                    ))
                } else {
                    (0..n)
                        .map(|i| {
                            let h = MPoly::var(&ring, i);
                            let z = limit_critical_values(fs, &h, &e, &crit, rng)?;
                            let zero = MPoly::zero(&ring);
                            let fibers = fibers_linear(fs, i, &zero, &z)?;
                            Ok(Projection { z, fibers })
                        })
                        .collect()
                }
            }
        };
        match attempt {
            Ok(p) => return Ok((p, retries)),
            Err(err) if err.is_genericity_failure() => retries += 1,
            Err(err) => return Err(err),
        }
    }
    Err(Error::GenericityExhausted(format!(
        "no generic choice found in {budget} attempts"
    )))
}

fn node(driver: Driver, fs: &[MPoly], opts: &DriverOptions, seed: u64) -> Result<NodeOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (fs, em_degree, em_retries) = match prelude(fs, opts, &mut rng)? {
        Prelude::Done(out) => return Ok(out),
        Prelude::Continue {
            fs,
            degree,
            retries,
        } => (fs, degree, retries),
    };
    let n = fs[0].nvars() as i32;
    let (projs, retries) = projections(driver, &fs, opts, &mut rng)?;
    let child_driver = match driver {
        Driver::General => Driver::Proper,
        d => d,
    };
    let mut stats = DepthStats {
        fiber_count: 0,
        max_eliminant_degree: em_degree,
        retries: em_retries + retries,
        skipped_fibers: 0,
    };
    for p in &projs {
        stats.fiber_count = stats.fiber_count.max(p.z.roots.len() + 1);
        stats.max_eliminant_degree = stats.max_eliminant_degree.max(p.z.degree());
    }
    let systems: Vec<&Vec<MPoly>> = projs.iter().flat_map(|p| p.fibers.iter()).collect();
    let seeds: Vec<u64> = systems.iter().map(|_| rng.gen()).collect();
    let mut trace = RecursionTrace {
        depths: vec![stats],
    };
    // a nonzero polynomial vanishes on a set of dimension at most n − 1
    let ceiling = n - 1;
    let mut dim = -1;
    if opts.parallel {
        let children: Vec<Result<NodeOutcome>> = systems
            .par_iter()
            .zip(seeds.par_iter())
            .map(|(sys, &s)| node(child_driver, sys, opts, s))
            .collect();
        for child in children {
            let child = child?;
            dim = dim.max(child.dim + 1);
            trace.merge_child(&child);
        }
    } else {
        for (k, (sys, &s)) in systems.iter().zip(seeds.iter()).enumerate() {
            let child = node(child_driver, sys, opts, s)?;
            dim = dim.max(child.dim + 1);
            trace.merge_child(&child);
            if dim >= ceiling {
                trace.depths[0].skipped_fibers += systems.len() - k - 1;
                break;
            }
        }
    }
    Ok(NodeOutcome {
        dim,
        trace: ChildTrace::Inner(trace),
    })
}

fn run(driver: Driver, fs: &[MPoly], opts: &DriverOptions) -> Result<DimResult> {
    if fs.is_empty() {
        return Err(Error::EmptySystem);
    }
    let ring = fs[0].ring();
    if fs.iter().any(|f| f.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    node(driver, fs, opts, opts.rng.seed).map(NodeOutcome::into_result)
}

/// Real dimension of `{f = 0}` when `x ↦ (f_1(x), …, f_s(x))` is proper.
pub fn dim_proper(fs: &[MPoly], opts: &DriverOptions) -> Result<DimResult> {
    run(Driver::Proper, fs, opts)
}

/// Real dimension of `{f = 0}`; no precondition.
pub fn dimension(fs: &[MPoly], opts: &DriverOptions) -> Result<DimResult> {
    run(Driver::General, fs, opts)
}

/// Real dimension of `{f = 0}` for proper maps with a certified perturbation
/// and all coordinate projections.
pub fn dim_las_vegas(fs: &[MPoly], opts: &DriverOptions) -> Result<DimResult> {
    run(Driver::LasVegas, fs, opts)
}

/// `Σ f_i²`, the single equation with the same real zero set.
pub fn sum_of_squares(fs: &[MPoly]) -> Option<MPoly> {
    let ring = fs.first()?.ring();
    let mut acc = MPoly::zero(ring);
    for f in fs {
        acc = &acc + &(f * f);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, Ring};
    use std::sync::Arc;

    fn vars(names: &[&str]) -> (Arc<Ring>, Vec<MPoly>) {
        let r = Ring::new(names.iter().copied());
        let v = (0..names.len()).map(|i| MPoly::var(&r, i)).collect();
        (r, v)
    }

    fn k(r: &Arc<Ring>, v: i64) -> MPoly {
        MPoly::constant(r, rat(v))
    }

    #[test]
    fn proper_examples() {
        let (r, v) = vars(&["x", "y"]);
        let circle = &(&v[0].pow(2) + &v[1].pow(2)) - &k(&r, 1);
        let opts = DriverOptions::with_seed(1);
        assert_eq!(dim_proper(&[circle], &opts).unwrap().dim, 1);
        let (r, v) = vars(&["x", "y", "z"]);
        let sphere = &(&(&v[0].pow(2) + &v[1].pow(2)) + &v[2].pow(2)) - &k(&r, 1);
        assert_eq!(dim_proper(&[sphere], &opts).unwrap().dim, 2);
    }

    #[test]
    fn general_examples() {
        let (r, v) = vars(&["x", "y"]);
        let opts = DriverOptions::with_seed(2);
        assert_eq!(dimension(&[&v[0] * &v[1]], &opts).unwrap().dim, 1);
        let sq = &v[0].pow(2) + &v[1].pow(2);
        assert_eq!(dimension(std::slice::from_ref(&sq), &opts).unwrap().dim, 0);
        assert_eq!(dimension(&[&sq + &k(&r, 1)], &opts).unwrap().dim, -1);
        let (_, v) = vars(&["x", "y", "z"]);
        let umbrella = &v[0].pow(2) - &(&v[1].pow(2) * &v[2]);
        assert_eq!(dimension(&[umbrella], &opts).unwrap().dim, 2);
    }

    #[test]
    fn las_vegas_examples() {
        let (r, v) = vars(&["x", "y"]);
        let opts = DriverOptions::with_seed(3);
        let sq = &v[0].pow(2) + &v[1].pow(2);
        assert_eq!(dim_las_vegas(&[&sq - &k(&r, 1)], &opts).unwrap().dim, 1);
        assert_eq!(dim_las_vegas(&[&sq + &k(&r, 1)], &opts).unwrap().dim, -1);
        let point = &v[0].pow(2) + &(&v[1] - &k(&r, 1)).pow(2);
        assert_eq!(dim_las_vegas(&[point], &opts).unwrap().dim, 0);
    }

    #[test]
    fn random_vector_contract() {
        let cfg = RngConfig::default();
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        let va = random_generic_vector(3, false, &cfg, &mut a);
        assert_eq!(va, random_generic_vector(3, false, &cfg, &mut b));
        assert_ne!(va, random_generic_vector(3, false, &cfg, &mut a));
        let nz = random_generic_vector(
            50,
            true,
            &RngConfig {
                coeff_bound: 1,
                ..cfg
            },
            &mut a,
        );
        assert!(nz.iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn deterministic_trace() {
        let (r, v) = vars(&["x", "y"]);
        let circle = &(&v[0].pow(2) + &v[1].pow(2)) - &k(&r, 1);
        let opts = DriverOptions::with_seed(42);
        let a = dimension(std::slice::from_ref(&circle), &opts).unwrap();
        let b = dimension(&[circle], &opts).unwrap();
        assert_eq!(a, b);
        assert!(!a.trace.depths.is_empty());
        assert!(a.trace.depths.len() <= 2);
    }

    #[test]
    fn parallel_matches_dimension() {
        let (_, v) = vars(&["x", "y"]);
        let mut opts = DriverOptions::with_seed(8);
        let seq = dimension(&[&v[0] * &v[1]], &opts).unwrap().dim;
        opts.parallel = true;
        assert_eq!(dimension(&[&v[0] * &v[1]], &opts).unwrap().dim, seq);
    }
}
