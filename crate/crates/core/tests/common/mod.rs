//! Instances and independent helpers shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use realdim::cli::parse_problem;
use realdim::polyring::{rat, Monomial};
use realdim::{MPoly, Rational, Ring};

/// A named system with its known real dimension.
pub struct Case {
    pub name: &'static str,
    pub fs: Vec<MPoly>,
    pub dim: i32,
    /// The map `x ↦ f(x)` is proper, so every driver applies.
    pub compact: bool,
}

fn system(text: &str) -> Vec<MPoly> {
    parse_problem(text).expect("valid test problem").polynomials
}

/// The canonical suite with hand-derived dimensions.
pub fn canonical() -> Vec<Case> {
    vec![
        Case {
            name: "circle",
            fs: system("vars: x y\nf: x^2 + y^2 - 1"),
            dim: 1,
            compact: true,
        },
        Case {
            name: "sphere",
            fs: system("vars: x y z\nf: x^2 + y^2 + z^2 - 1"),
            dim: 2,
            compact: true,
        },
        Case {
            name: "origin",
            fs: system("vars: x y\nf: x^2 + y^2"),
            dim: 0,
            compact: true,
        },
        Case {
            name: "empty",
            fs: system("vars: x y\nf: x^2 + y^2 + 1"),
            dim: -1,
            compact: true,
        },
        Case {
            name: "cross",
            fs: system("vars: x y\nf: x*y"),
            dim: 1,
            compact: false,
        },
        Case {
            name: "umbrella",
            fs: system("vars: x y z\nf: x^2 - y^2*z"),
            dim: 2,
            compact: false,
        },
        Case {
            name: "circle-in-plane",
            fs: system("vars: x y z\nf1: x^2 + y^2 - 1\nf2: z"),
            dim: 1,
            compact: true,
        },
    ]
}

/// Bivariate polynomials with dimensions derived by hand.
pub fn bivariate_corpus() -> Vec<(&'static str, i32)> {
    vec![
        ("x^2 + y^2 - 1", 1),
        ("x^2 + y^2", 0),
        ("x^2 + y^2 + 1", -1),
        ("x*y", 1),
        ("x^2 + (y - 1)^2", 0),
        ("y^2 - x^3", 1),
        ("y^2 - x^2 - x^3", 1),
        ("(x^2 - 2)^2 + y^2", 0),
        ("(x^2 - 2)^2 + (y^2 - 3)^2", 0),
        ("x^4 + y^4 + 1", -1),
        ("(x^2 + y^2)^2 - (x^2 - y^2)", 1),
        ("x^2*y^2 + (x - 1)^2", 0),
        ("(x^2 + y^2 - 1)^2", 1),
        ("(x - y)^2", 1),
        ("x^2 + 1", -1),
    ]
}

pub fn bivariate(expr: &str) -> MPoly {
    system(&format!("vars: x y\nf: {expr}")).remove(0)
}

/// Dense polynomial in two variables of total degree ≤ `deg`.
pub fn random_bivariate<R: Rng>(rng: &mut R, deg: u16, bound: i64) -> MPoly {
    let r = Ring::new(["x", "y"]);
    let mut terms = Vec::new();
    for i in 0..=deg {
        for j in 0..=deg - i {
            terms.push((Monomial::new(&[i, j]), rat(rng.gen_range(-bound..=bound))));
        }
    }
    MPoly::from_terms(&r, terms)
}

/// Sum of products of random linear factors: often curves, isolated points
/// or empty sets, which uniform coefficients rarely produce.
pub fn random_structured_bivariate<R: Rng>(rng: &mut R) -> MPoly {
    let r = Ring::new(["x", "y"]);
    let x = MPoly::var(&r, 0);
    let y = MPoly::var(&r, 1);
    let lin = |rng: &mut R| {
        let a = rat(rng.gen_range(-3..=3));
        let b = rat(rng.gen_range(-3..=3));
        let c = rat(rng.gen_range(-3..=3));
        &(&x.scale(&a) + &y.scale(&b)) + &MPoly::constant(&r, c)
    };
    match rng.gen_range(0..3) {
        // sum of two squares: a point, a line or empty
        0 => {
            let (p, q) = (lin(rng), lin(rng));
            let shift = MPoly::constant(&r, rat(rng.gen_range(0..=1)));
            &(&p.pow(2) + &q.pow(2)) + &shift
        }
        // product of two quadrics in disguise: conic times line
        1 => {
            let conic = &(&lin(rng).pow(2) + &lin(rng).pow(2))
                - &MPoly::constant(&r, rat(rng.gen_range(-2..=2)));
            &conic * &lin(rng)
        }
        _ => {
            let p = &lin(rng) * &lin(rng);
            &p.pow(2) + &lin(rng).pow(2).scale(&rat(rng.gen_range(1..=3)))
        }
    }
}

/// `f(A x + b)` for an `n × n` integer matrix `a` and shift `b`.
pub fn affine_pullback(f: &MPoly, a: &[Vec<i64>], b: &[i64]) -> MPoly {
    let ring: Arc<Ring> = f.ring().clone();
    let n = ring.nvars();
    let images: Vec<MPoly> = (0..n)
        .map(|i| {
            let coeffs: Vec<Rational> = a[i].iter().map(|&c| rat(c)).collect();
            MPoly::linear(&ring, &coeffs, rat(b[i]))
        })
        .collect();
    let mut out = MPoly::zero(&ring);
    for (m, c) in f.terms() {
        let mut t = MPoly::constant(&ring, c.clone());
        for (i, img) in images.iter().enumerate() {
            t = &t * &img.pow(m.exponent(i) as u32);
        }
        out = &out + &t;
    }
    out
}

/// Random unimodular integer matrix: a product of elementary row operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let k = rng.gen_range(-2..=2);
        let row = a[j].clone();
        for (x, y) in a[i].iter_mut().zip(row) {
            *x += k * y;
        }
    }
    a
}
