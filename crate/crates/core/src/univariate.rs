//! Univariate rational polynomials, Sturm-sequence root isolation and the
//! choice of rational sample points between isolated roots.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{rat, MPoly, Monomial, Rational, Ring};

/// Dense univariate polynomial, coefficients from degree 0 upwards, without
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> UPoly {
        UPoly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn identity() -> UPoly {
        UPoly::from_ints(&[0, 1])
    }

    /// `t - a`.
    pub fn linear_root(a: &Rational) -> UPoly {
        UPoly::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at `x` (-1, 0, 1).
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign_of(&self.eval(x))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let lc_inv = d.leading_coeff().recip();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`. Runs a primitive remainder sequence over ℤ.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, mut b) = (self.to_primitive_ints(), other.to_primitive_ints());
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return UPoly::one();
            }
            let r = neg_prem_signed(&a, &b);
            a = b;
            b = r;
        }
        UPoly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    pub fn pow(&self, k: u32) -> UPoly {
        let mut r = UPoly::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Cauchy bound `1 + max |a_i / a_d|`: every complex root has modulus below it.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        let d = self.degree().unwrap_or(0);
        let m = self.coeffs[..d]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Primitive integer multiple with the same sign at every point.
    fn to_primitive_ints(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        primitive_ints(ints)
    }

    /// Reads a polynomial that involves at most the variable `var`.
    pub fn from_mpoly(p: &MPoly, var: usize) -> Result<UPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            if m.exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| i != var && e > 0)
            {
                return Err(Error::NotUnivariate);
            }
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Ok(UPoly::new(coeffs))
    }

    pub fn to_mpoly(&self, ring: &Arc<Ring>, var: usize) -> MPoly {
        let n = ring.nvars();
        MPoly::from_terms(
            ring,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0u16; n];
                e[var] = k as u16;
                (Monomial::new(&e), c.clone())
            }),
        )
    }
}

impl std::ops::Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl std::ops::Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl std::ops::Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::new(["t"]);
        write!(f, "{}", self.to_mpoly(&ring, 0))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self)
    }
}

pub(crate) fn sign_of(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn primitive_ints(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `u / gcd(u, u')`, monic.
pub fn squarefree_part(u: &UPoly) -> Result<UPoly> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if u.is_constant() {
        return Ok(UPoly::one());
    }
    let g = u.gcd(&u.derivative());
    Ok(u.div_rem(&g).0.monic())
}

/// Sign of `p(num/den)` for an integer polynomial and `den > 0`, evaluated
/// without fractions: `Σ a_i num^i den^(d-i)`.
fn int_sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> i32 {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    // Horner in num with den powers pushed onto lower coefficients
    for (i, c) in p.iter().enumerate().rev() {
        if i + 1 == p.len() {
            acc = c.clone();
        } else {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm sequence stored as primitive integer polynomials; positive rescaling
/// of its members leaves all sign counts unchanged.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(u: &UPoly) -> SturmSequence {
        let mut polys = Vec::new();
        if u.is_zero() {
            return SturmSequence { polys };
        }
        let p0 = u.to_primitive_ints();
        polys.push(p0.clone());
        let d = u.derivative();
        if d.is_zero() {
            return SturmSequence { polys };
        }
        polys.push(d.to_primitive_ints());
        loop {
            let n = polys.len();
            let r = neg_prem_signed(&polys[n - 2], &polys[n - 1]);
            if r.is_empty() {
                break;
            }
            polys.push(r);
        }
        SturmSequence { polys }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign of the first member (the input polynomial) at `x`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.polys
            .first()
            .map_or(0, |p| int_sign_at(p, x.numer(), x.denom()))
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        count_variations(
            self.polys
                .iter()
                .map(|p| int_sign_at(p, x.numer(), x.denom())),
        )
    }

    /// Sign variations at +∞ (`positive`) or −∞.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.polys.iter().map(|p| {
            let lc = p.last().map_or(0, |c| if c.is_negative() { -1 } else { 1 });
            if !positive && (p.len() - 1) % 2 == 1 {
                -lc
            } else {
                lc
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn total_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

fn count_variations<I: Iterator<Item = i32>>(signs: I) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `-c·rem(a, b)` for some positive constant `c`, as a primitive integer
/// polynomial.
fn neg_prem_signed(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    let mut steps = 0usize;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &lr * bc;
        }
        steps += 1;
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        r = primitive_ints_keep_sign(r);
    }
    // r = lb^steps · rem / (positive content); fix the sign of lb^steps, then negate
    let flip = lb.is_negative() && steps % 2 == 1;
    if !flip {
        for c in r.iter_mut() {
            *c = -c.clone();
        }
    }
    primitive_ints(r)
}

fn primitive_ints_keep_sign(v: Vec<BigInt>) -> Vec<BigInt> {
    // content is taken positive, so signs survive
    primitive_ints(v)
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
pub fn sturm_count(u: &UPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval);
    }
    for x in [lo, hi] {
        if u.eval(x).is_zero() {
            return Err(Error::EndpointIsRoot(x.to_string()));
        }
    }
    let seq = SturmSequence::new(u);
    Ok(seq.variations_at(lo) - seq.variations_at(hi))
}

/// A rational interval holding exactly one real root of a squarefree
/// polynomial. When `exact` is set, `lo == hi` is that root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

impl IsolatingInterval {
    pub fn exact(r: Rational) -> Self {
        IsolatingInterval {
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
        }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        IsolatingInterval {
            lo,
            hi,
            exact: None,
        }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Halves an isolating interval of a squarefree polynomial, keeping the root.
pub fn refine_interval(seq: &SturmSequence, iv: &mut IsolatingInterval) {
    if iv.exact.is_some() {
        return;
    }
    let mid = iv.midpoint();
    let s_mid = seq.sign_at(&mid);
    if s_mid == 0 {
        *iv = IsolatingInterval::exact(mid);
        return;
    }
    if seq.sign_at(&iv.lo) * s_mid < 0 {
        iv.hi = mid;
    } else {
        iv.lo = mid;
    }
}

/// One isolating interval per distinct real root, sorted and pairwise disjoint.
pub fn isolate_real_roots(u: &UPoly) -> Result<Vec<IsolatingInterval>> {
    let s = squarefree_part(u)?;
    if s.is_constant() {
        return Ok(Vec::new());
    }
    let seq = SturmSequence::new(&s);
    // a power of two keeps every bisection point dyadic
    let cb = s.cauchy_bound();
    let mut b = Rational::one();
    while b < cb {
        b *= rat(2);
    }
    let lo = -b.clone();
    let hi = b;
    let mut out = Vec::new();
    let vlo = seq.variations_at(&lo);
    let vhi = seq.variations_at(&hi);
    bisect(&seq, lo, hi, vlo, vhi, &mut out);
    separate(&seq, &mut out);
    Ok(out)
}

fn bisect(
    seq: &SturmSequence,
    lo: Rational,
    hi: Rational,
    vlo: usize,
    vhi: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    let count = vlo - vhi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(IsolatingInterval::open(lo, hi));
        return;
    }
    let mid = (&lo + &hi) / rat(2);
    if seq.sign_at(&mid) != 0 {
        let vmid = seq.variations_at(&mid);
        bisect(seq, lo, mid.clone(), vlo, vmid, out);
        bisect(seq, mid, hi, vmid, vhi, out);
        return;
    }
    // mid is a root: nudge by 1/2^k until the neighbourhood isolates it alone
    let mut delta = (&hi - &lo) / rat(4);
    loop {
        let a = &mid - &delta;
        let b = &mid + &delta;
        if seq.sign_at(&a) != 0 && seq.sign_at(&b) != 0 {
            let va = seq.variations_at(&a);
            let vb = seq.variations_at(&b);
            if va - vb == 1 {
                bisect(seq, lo, a, vlo, va, out);
                out.push(IsolatingInterval::exact(mid));
                bisect(seq, b, hi, vb, vhi, out);
                return;
            }
        }
        delta /= rat(2);
    }
}

/// Shrinks neighbours that share an endpoint until there is a gap.
fn separate(seq: &SturmSequence, ivs: &mut [IsolatingInterval]) {
    for i in 0..ivs.len().saturating_sub(1) {
        while ivs[i].hi >= ivs[i + 1].lo {
            if ivs[i].exact.is_none() {
                refine_interval(seq, &mut ivs[i]);
            } else {
                refine_interval(seq, &mut ivs[i + 1]);
            }
        }
    }
}

/// Roots with rational sample points interleaved: `s0 < I1 < s1 < … < IN < sN`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePlan {
    pub roots: Vec<IsolatingInterval>,
    pub samples: Vec<Rational>,
}

/// One rational sample per connected component of ℝ minus the roots.
pub fn sample_points(roots: &[IsolatingInterval]) -> SamplePlan {
    let samples = if roots.is_empty() {
        vec![Rational::zero()]
    } else {
        let mut s = Vec::with_capacity(roots.len() + 1);
        s.push(&roots[0].lo - Rational::one());
        for w in roots.windows(2) {
            debug_assert!(w[0].hi < w[1].lo, "isolating intervals must be disjoint");
            s.push((&w[0].hi + &w[1].lo) / rat(2));
        }
        s.push(&roots[roots.len() - 1].hi + Rational::one());
        s
    };
    SamplePlan {
        roots: roots.to_vec(),
        samples,
    }
}

/// The rational with the smallest denominator (then smallest magnitude) in
/// the open interval `(a, b)`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a < b);
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !b.is_positive() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    let next = &fl + Rational::one();
    if &next < b {
        return next;
    }
    // 0 <= a - fl < b - fl <= 1: invert the fractional parts
    let fa = a - &fl;
    let fb = b - &fl;
    let lo = fb.recip();
    let y = if fa.is_zero() {
        lo.floor() + Rational::one()
    } else {
        simplest_between(&lo, &fa.recip())
    };
    fl + y.recip()
}

/// Orders a rational against the root isolated by `iv` (refining as needed).
pub fn compare_with_root(
    seq: &SturmSequence,
    iv: &mut IsolatingInterval,
    x: &Rational,
) -> Ordering {
    loop {
        if let Some(r) = &iv.exact {
            return x.cmp(r);
        }
        if x <= &iv.lo {
            return Ordering::Less;
        }
        if x >= &iv.hi {
            return Ordering::Greater;
        }
        refine_interval(seq, iv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::ratio;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&ratio(-1, 2), &rat(3)), rat(0));
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(2, 3)), ratio(1, 2));
        assert_eq!(simplest_between(&ratio(3, 2), &rat(7)), rat(2));
        assert_eq!(simplest_between(&rat(2), &ratio(9, 4)), ratio(11, 5));
        assert_eq!(
            simplest_between(&ratio(-7, 3), &ratio(-9, 4)),
            ratio(-16, 7)
        );
        let a = ratio(314159, 100000);
        let b = ratio(314160, 100000);
        let x = simplest_between(&a, &b);
        assert!(a < x && x < b && x.denom() < &BigInt::from(1000));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&up(&[0, 0, 1])).unwrap(), up(&[0, 1]));
        let t2m1 = up(&[-1, 0, 1]);
        let u = &(&t2m1 * &t2m1) * &up(&[-2, 1]);
        assert_eq!(squarefree_part(&u).unwrap(), &t2m1 * &up(&[-2, 1]));
        assert_eq!(squarefree_part(&t2m1).unwrap(), t2m1);
        assert_eq!(squarefree_part(&UPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_count_examples() {
        let t2m1 = up(&[-1, 0, 1]);
        assert_eq!(sturm_count(&t2m1, &rat(-2), &rat(2)).unwrap(), 2);
        assert_eq!(sturm_count(&t2m1, &rat(0), &rat(2)).unwrap(), 1);
        assert_eq!(
            sturm_count(&up(&[1, 0, 1]), &rat(-10), &rat(10)).unwrap(),
            0
        );
        assert!(matches!(
            sturm_count(&t2m1, &rat(1), &rat(2)),
            Err(Error::EndpointIsRoot(_))
        ));
        assert_eq!(
            sturm_count(&t2m1, &rat(2), &rat(1)),
            Err(Error::InvalidInterval)
        );
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_real_roots(&up(&[-1, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat(-1)) && ivs[1].contains(&rat(1)));
        let u = &up(&[-2, 0, 1]) * &up(&[-3, 0, 1]);
        let ivs = isolate_real_roots(&u).unwrap();
        assert_eq!(ivs.len(), 4);
        for iv in &ivs {
            if iv.exact.is_none() {
                assert_eq!(sturm_count(&u, &iv.lo, &iv.hi).unwrap(), 1);
            }
        }
        assert!(isolate_real_roots(&up(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn exact_roots_found_at_bisection_midpoints() {
        // roots 0, 1, 2 with Cauchy bound 1 + 3 = 4: midpoint 0 is hit
        let u = &(&up(&[0, 1]) * &up(&[-1, 1])) * &up(&[-2, 1]);
        let ivs = isolate_real_roots(&u).unwrap();
        assert_eq!(ivs.len(), 3);
        assert_eq!(ivs[0].exact, Some(rat(0)));
        let plan = sample_points(&ivs);
        for s in &plan.samples {
            assert!(!u.eval(s).is_zero());
        }
    }

    #[test]
    fn sample_rule() {
        let roots = vec![
            IsolatingInterval::open(ratio(-3, 2), ratio(-1, 2)),
            IsolatingInterval::open(ratio(1, 2), ratio(3, 2)),
        ];
        assert_eq!(
            sample_points(&roots).samples,
            vec![ratio(-5, 2), rat(0), ratio(5, 2)]
        );
        assert_eq!(sample_points(&[]).samples, vec![rat(0)]);
        let one = vec![IsolatingInterval::open(rat(0), rat(1))];
        assert_eq!(sample_points(&one).samples, vec![rat(-1), rat(2)]);
    }

    #[test]
    fn division_and_gcd() {
        let a = &up(&[-1, 0, 1]) * &up(&[3, 1]);
        let (q, r) = a.div_rem(&up(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &up(&[-1, 1]), a);
        assert_eq!(a.gcd(&up(&[1, 1])), up(&[1, 1]));
        assert_eq!(up(&[1, 1]).compose(&up(&[0, 2])), up(&[1, 2]));
    }
}
