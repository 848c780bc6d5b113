//! Independent dimension oracle for one polynomial in two variables, by a
//! cylindrical decomposition along the first variable.
//!
//! Above the open cells of the projection the number of real roots in `y` is
//! constant, so rational samples decide dimension one. Above each real
//! projection root `α` the fiber is counted exactly with a Sturm sequence
//! whose coefficients live in `ℚ[x]/(S)`, `S` the squarefree projection
//! polynomial; signs at `α` are decided by gcds with `S` and interval
//! refinement, so no case is left undecided.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{MPoly, Rational};
use crate::univariate::{
    isolate_real_roots, refine_interval, sample_points, squarefree_part, sturm_count,
    IsolatingInterval, SturmSequence, UPoly,
};

/// A sample abscissa and the number of real points above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSample {
    /// The sample itself, or the midpoint of the isolating interval of an
    /// irrational projection root.
    pub x_value: Rational,
    pub y_root_count: usize,
    pub on_projection_root: bool,
}

/// `Σ_j c_j(x) y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BiPoly {
    c: Vec<UPoly>,
}

impl BiPoly {
    fn new(mut c: Vec<UPoly>) -> Self {
        while c.last().is_some_and(UPoly::is_zero) {
            c.pop();
        }
        BiPoly { c }
    }

    fn from_mpoly(f: &MPoly, xv: usize, yv: usize) -> Self {
        let dy = f.degree_in(yv).unwrap_or(0) as usize;
        let dx = f.degree_in(xv).unwrap_or(0) as usize;
        let mut grid = vec![vec![Rational::zero(); dx + 1]; dy + 1];
        for (m, c) in f.terms() {
            grid[m.exponent(yv) as usize][m.exponent(xv) as usize] = c.clone();
        }
        BiPoly::new(grid.into_iter().map(UPoly::new).collect())
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.c.last().expect("nonzero")
    }

    fn transpose(&self) -> BiPoly {
        let dx = self.c.iter().filter_map(UPoly::degree).max().unwrap_or(0);
        let cols = (0..=dx)
            .map(|i| UPoly::new(self.c.iter().map(|cj| cj.coeff(i)).collect()))
            .collect();
        BiPoly::new(cols)
    }

    fn content(&self) -> UPoly {
        self.c.iter().fold(UPoly::zero(), |g, cj| g.gcd(cj))
    }

    fn div_scalar(&self, d: &UPoly) -> BiPoly {
        BiPoly::new(
            self.c
                .iter()
                .map(|cj| {
                    let (q, r) = cj.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn primitive(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.div_scalar(&self.content())
    }

    fn dy(&self) -> BiPoly {
        BiPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, cj)| cj.scale(&Rational::from_integer((j as i64).into())))
                .collect(),
        )
    }

    /// `lc(b)^(deg a − deg b + 1) · a mod b`.
    fn prem(&self, b: &BiPoly) -> BiPoly {
        let db = b.deg();
        let lb = b.lc();
        let mut r = self.c.clone();
        let steps = (self.deg() + 1).saturating_sub(db);
        for _ in 0..steps {
            if r.len() <= db {
                for cj in r.iter_mut() {
                    *cj = &*cj * lb;
                }
                continue;
            }
            let k = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for cj in r.iter_mut() {
                *cj = &*cj * lb;
            }
            for (j, bj) in b.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&lr * bj);
            }
            while r.last().is_some_and(UPoly::is_zero) {
                r.pop();
            }
        }
        BiPoly::new(r)
    }

    /// Exact quotient `self / b` in `ℚ[x][y]`, assuming `b` divides `self`.
    fn div_exact(&self, b: &BiPoly) -> BiPoly {
        let db = b.deg();
        let mut r = self.c.clone();
        let mut q = vec![UPoly::zero(); (self.deg() + 1).saturating_sub(db)];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let (t, rem) = r.last().unwrap().div_rem(b.lc());
            debug_assert!(rem.is_zero());
            for (j, bj) in b.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&t * bj);
            }
            q[k] = t;
            while r.last().is_some_and(UPoly::is_zero) {
                r.pop();
            }
        }
        BiPoly::new(q)
    }

    /// Gcd in `ℚ[x][y]` of two polynomials primitive in `y`.
    fn gcd(&self, other: &BiPoly) -> BiPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.deg() == 0 {
                return BiPoly::new(vec![UPoly::one()]);
            }
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    fn eval_x(&self, x: &Rational) -> UPoly {
        UPoly::new(self.c.iter().map(|cj| cj.eval(x)).collect())
    }
}

/// Bareiss fraction-free determinant over `ℚ[x]`.
fn determinant(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut sign = false;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return UPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.scale(&Rational::from_integer((-1).into()))
    } else {
        d
    }
}

/// `Res_y(a, b)` through the Sylvester matrix.
fn resultant_y(a: &BiPoly, b: &BiPoly) -> UPoly {
    let (m, n) = (a.deg(), b.deg());
    if m == 0 && n == 0 {
        return UPoly::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![UPoly::zero(); size];
        for (j, cj) in a.c.iter().rev().enumerate() {
            row[i + j] = cj.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UPoly::zero(); size];
        for (j, cj) in b.c.iter().rev().enumerate() {
            row[i + j] = cj.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

fn has_real_root(u: &UPoly) -> bool {
    !u.is_constant() && SturmSequence::new(u).total_real_roots() > 0
}

/// A real root `α` of a squarefree `S`, with exact sign evaluation of
/// polynomials at `α`.
struct AlgebraicRoot {
    s: UPoly,
    seq: SturmSequence,
    iv: IsolatingInterval,
}

impl AlgebraicRoot {
    fn sign_of(&mut self, g: &UPoly) -> i32 {
        if let Some(r) = &self.iv.exact {
            return g.sign_at(r);
        }
        let g = g.rem(&self.s);
        if g.is_zero() {
            return 0;
        }
        let h = self.s.gcd(&g);
        // the interval isolates α among the roots of S ⊇ roots of h
        if !h.is_constant() && sturm_count(&h, &self.iv.lo, &self.iv.hi) == Ok(1) {
            return 0;
        }
        let gs = squarefree_part(&g).expect("nonzero");
        loop {
            if let Some(r) = &self.iv.exact {
                return g.sign_at(r);
            }
            let lo_ok = !gs.eval(&self.iv.lo).is_zero();
            let hi_ok = !gs.eval(&self.iv.hi).is_zero();
            if lo_ok && hi_ok && sturm_count(&gs, &self.iv.lo, &self.iv.hi) == Ok(0) {
                return g.sign_at(&self.iv.lo);
            }
            refine_interval(&self.seq, &mut self.iv);
        }
    }

    /// Drops leading coefficients vanishing at `α`; returns the sign of the new
    /// leading coefficient (0 for the zero polynomial).
    fn trim(&mut self, p: BiPoly) -> (BiPoly, i32) {
        let mut c: Vec<UPoly> = p.c.iter().map(|cj| cj.rem(&self.s)).collect();
        while let Some(last) = c.last() {
            let sg = self.sign_of(last);
            if sg != 0 {
                let q = BiPoly::new(c);
                return (normalize_positive(q), sg);
            }
            c.pop();
        }
        (BiPoly::new(Vec::new()), 0)
    }

    /// Distinct real roots of `p(α, y)`.
    fn count_fiber_roots(&mut self, p: &BiPoly) -> usize {
        let (p0, s0) = self.trim(p.clone());
        if p0.deg() == 0 || s0 == 0 {
            return 0;
        }
        let (p1, s1) = self.trim(p0.dy());
        let mut seq = vec![(p0, s0), (p1, s1)];
        loop {
            let (a, _) = &seq[seq.len() - 2];
            let (b, sb) = &seq[seq.len() - 1];
            if b.deg() == 0 {
                break;
            }
            let delta = a.deg() + 1 - b.deg();
            let r = a.prem(b);
            // prem = lc(b)^δ · rem at α; keep only a positive multiple of −rem
            let flip = *sb < 0 && delta % 2 == 1;
            let r = if flip {
                r
            } else {
                BiPoly::new(
                    r.c.iter()
                        .map(|cj| cj.scale(&Rational::from_integer((-1).into())))
                        .collect(),
                )
            };
            let (r, sr) = self.trim(r);
            if sr == 0 {
                break;
            }
            seq.push((r, sr));
        }
        let at = |neg: bool| {
            let signs: Vec<i32> = seq
                .iter()
                .map(|(q, s)| if neg && q.deg() % 2 == 1 { -s } else { *s })
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        at(true) - at(false)
    }
}

/// Rescales by a positive rational so coefficients stay small.
fn normalize_positive(p: BiPoly) -> BiPoly {
    let mut m = Rational::zero();
    for cj in &p.c {
        for a in cj.coeffs() {
            if a.abs() > m {
                m = a.abs();
            }
        }
    }
    if m.is_zero() {
        return p;
    }
    let inv = m.recip();
    BiPoly::new(p.c.iter().map(|cj| cj.scale(&inv)).collect())
}

/// Reduced form of `f` after removing one-variable factors.
enum Prepared {
    /// A line `x = c` or `y = c` lies in the zero set.
    HasLine,
    Empty,
    Curve(BiPoly),
}

fn prepare(f: &BiPoly) -> Prepared {
    let cx = f.content();
    if has_real_root(&cx) {
        return Prepared::HasLine;
    }
    let f1 = f.div_scalar(&cx);
    let t = f1.transpose();
    let cy = t.content();
    if has_real_root(&cy) {
        return Prepared::HasLine;
    }
    let f2 = t.div_scalar(&cy).transpose();
    if f2.deg() == 0 {
        // constant in y and primitive: a nonzero constant
        return Prepared::Empty;
    }
    let g = f2.gcd(&f2.dy());
    let sq = if g.deg() == 0 { f2 } else { f2.div_exact(&g) };
    Prepared::Curve(sq)
}

fn cells_of(f: &BiPoly) -> Vec<CellSample> {
    let disc = resultant_y(f, &f.dy());
    let r = &disc * f.lc();
    let s = squarefree_part(&r).expect("squarefree part in y has nonzero discriminant");
    let roots = isolate_real_roots(&s).expect("nonzero");
    let plan = sample_points(&roots);
    let mut out = Vec::new();
    for x in &plan.samples {
        let fx = f.eval_x(x);
        out.push(CellSample {
            x_value: x.clone(),
            y_root_count: SturmSequence::new(&fx).total_real_roots(),
            on_projection_root: false,
        });
    }
    if s.is_constant() {
        return out;
    }
    let seq = SturmSequence::new(&s);
    for iv in roots {
        let mut alpha = AlgebraicRoot {
            s: s.clone(),
            seq: seq.clone(),
            iv,
        };
        let count = alpha.count_fiber_roots(f);
        out.push(CellSample {
            x_value: alpha
                .iv
                .exact
                .clone()
                .unwrap_or_else(|| alpha.iv.midpoint()),
            y_root_count: count,
            on_projection_root: true,
        });
    }
    out
}

/// Sample cells of the decomposition of `ℝ²` induced by `f` (after removing
/// one-variable factors). Empty when a vertical or horizontal line is part of
/// the zero set or the set is empty for trivial reasons.
pub fn projection_cells(f: &MPoly) -> Result<Vec<CellSample>> {
    if f.nvars() != 2 {
        return Err(Error::NotBivariate);
    }
    match prepare(&BiPoly::from_mpoly(f, 0, 1)) {
        Prepared::Curve(g) => Ok(cells_of(&g)),
        _ => Ok(Vec::new()),
    }
}

/// Real dimension of `{f = 0} ⊆ ℝ²` (`-1` when empty).
pub fn dim2d_oracle(f: &MPoly) -> Result<i32> {
    if f.nvars() != 2 {
        return Err(Error::NotBivariate);
    }
    if f.is_zero() {
        return Ok(2);
    }
    if f.is_constant() {
        return Ok(-1);
    }
    let g = match prepare(&BiPoly::from_mpoly(f, 0, 1)) {
        Prepared::HasLine => return Ok(1),
        Prepared::Empty => return Ok(-1),
        Prepared::Curve(g) => g,
    };
    let cells = cells_of(&g);
    if cells
        .iter()
        .any(|c| !c.on_projection_root && c.y_root_count > 0)
    {
        return Ok(1);
    }
    if cells.iter().any(|c| c.y_root_count > 0) {
        return Ok(0);
    }
    Ok(-1)
}
