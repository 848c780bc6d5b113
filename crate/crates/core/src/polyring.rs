//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! An [`MPoly`] stores its terms in a map keyed by [`Monomial`]; the map's own
//! key order (lexicographic on the exponent vector) is only a canonical
//! storage order. Term orders used by the Gröbner engine are described by
//! [`MonomialOrder`] and applied on demand.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exact rational number; always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, if exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(divisor.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i mod 64` is set when variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    fn remove(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.remove(i);
        m
    }
}

/// A monomial order. Block orders compare the restriction of both monomials
/// to `first` under `first_order`, then the restriction to `second` under
/// `second_order`; the inner orders act only on the listed variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block {
        first: Vec<usize>,
        second: Vec<usize>,
        first_order: Box<MonomialOrder>,
        second_order: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for `elim` (grevlex inside both blocks): any monomial
    /// involving an eliminated variable beats every monomial free of them.
    pub fn elimination(nvars: usize, elim: &[usize]) -> MonomialOrder {
        let first: Vec<usize> = (0..nvars).filter(|i| elim.contains(i)).collect();
        let second: Vec<usize> = (0..nvars).filter(|i| !elim.contains(i)).collect();
        MonomialOrder::Block {
            first,
            second,
            first_order: Box::new(MonomialOrder::Grevlex),
            second_order: Box::new(MonomialOrder::Grevlex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..a.exps.len()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block {
                first,
                second,
                first_order,
                second_order,
            } => first_order
                .compare_on(a, b, first)
                .then_with(|| second_order.compare_on(a, b, second)),
        }
    }

    fn compare_on(&self, a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for &i in vars {
                    if a.exps[i] != b.exps[i] {
                        return a.exps[i].cmp(&b.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex => {
                let da: u32 = vars.iter().map(|&i| a.exps[i] as u32).sum();
                let db: u32 = vars.iter().map(|&i| b.exps[i] as u32).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &i in vars.iter().rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            // nested blocks carry their own variable lists
            MonomialOrder::Block { .. } => self.compare(a, b),
        }
    }
}

/// `monomial_compare` from the operation list.
pub fn monomial_compare(order: &MonomialOrder, m1: &Monomial, m2: &Monomial) -> Ordering {
    order.compare(m1, m2)
}

/// Ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(vars: I) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A name based on `base` that is not yet a variable of this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        name
    }

    /// This ring with extra variables appended (names made fresh if needed).
    pub fn extended(&self, extra: &[&str]) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        for base in extra {
            let mut name = base.to_string();
            while vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        Arc::new(Ring { vars })
    }

    pub fn without_var(&self, i: usize) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.remove(i);
        Arc::new(Ring { vars })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial over the rationals. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(ring: &Arc<Ring>) -> MPoly {
        MPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> MPoly {
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> MPoly {
        MPoly::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> MPoly {
        MPoly::monomial(ring, Monomial::var(ring.nvars(), i), Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> MPoly {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = MPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        ring: &Arc<Ring>,
        terms: I,
    ) -> MPoly {
        let mut p = MPoly::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ coeffs[i]·x_i + constant`.
    pub fn linear(ring: &Arc<Ring>, coeffs: &[Rational], constant: Rational) -> MPoly {
        let n = ring.nvars();
        let mut p = MPoly::constant(ring, constant);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(i) as u32).max()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &MPoly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_ring(other)?;
        let mut r = MPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the leading coefficient under `order`.
    pub fn make_monic(&self, order: &MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.nvars() {
            Err(Error::VariableOutOfRange {
                index: i,
                nvars: self.nvars(),
            })
        } else {
            Ok(())
        }
    }

    pub fn partial_derivative(&self, i: usize) -> Result<MPoly> {
        self.check_var(i)?;
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                r.add_term(m.with_exponent(i, e - 1), c * rat(e as i64));
            }
        }
        Ok(r)
    }

    pub fn gradient(&self) -> Vec<MPoly> {
        (0..self.nvars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Replaces `x_i` by `q`; `q` must not involve `x_i`. The result stays in
    /// this ring (use [`MPoly::drop_var`] to shrink it).
    pub fn substitute(&self, i: usize, q: &MPoly) -> Result<MPoly> {
        self.check_var(i)?;
        self.check_ring(q)?;
        if q.uses_var(i) {
            return Err(Error::SubstitutionInvolvesVariable(
                self.ring.var_name(i).to_string(),
            ));
        }
        let max_e = self.degree_in(i).unwrap_or(0);
        let mut powers = vec![MPoly::one(&self.ring)];
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * q;
            powers.push(next);
        }
        let mut r = MPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            let rest = m.with_exponent(i, 0);
            for (mq, cq) in &powers[e].terms {
                r.add_term(rest.mul(mq), c * cq);
            }
        }
        Ok(r)
    }

    /// The same polynomial in the ring without `x_i`; fails if `x_i` occurs.
    pub fn drop_var(&self, i: usize) -> Result<MPoly> {
        self.check_var(i)?;
        if self.uses_var(i) {
            return Err(Error::SubstitutionInvolvesVariable(
                self.ring.var_name(i).to_string(),
            ));
        }
        let ring = self.ring.without_var(i);
        Ok(MPoly {
            ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remove(i), c.clone()))
                .collect(),
        })
    }

    /// Substitutes `x_i ← q` and removes `x_i` from the ring.
    pub fn substitute_and_drop(&self, i: usize, q: &MPoly) -> Result<MPoly> {
        self.substitute(i, q)?.drop_var(i)
    }

    /// Moves this polynomial into `target`, sending variable `j` to `map[j]`.
    pub fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> MPoly {
        debug_assert_eq!(map.len(), self.nvars());
        let n = target.nvars();
        let mut r = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e: SmallVec<[u16; 12]> = SmallVec::from_elem(0, n);
            for (j, &x) in m.exps.iter().enumerate() {
                e[map[j]] += x;
            }
            r.add_term(Monomial { exps: e }, c.clone());
        }
        r
    }

    /// Embeds into a ring that extends this one by appended variables.
    pub fn extend_to(&self, target: &Arc<Ring>) -> MPoly {
        let map: Vec<usize> = (0..self.nvars()).collect();
        self.embed(target, &map)
    }

    /// Restricts to the first `target.nvars()` variables; the caller guarantees
    /// that the dropped trailing variables do not occur.
    pub fn truncate_to(&self, target: &Arc<Ring>) -> MPoly {
        let k = target.nvars();
        MPoly {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(m.exps[k..].iter().all(|&e| e == 0));
                    (Monomial::new(&m.exps[..k]), c.clone())
                })
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps.iter()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Multiplies by the lcm of the denominators and divides by the content,
    /// leaving a primitive integer polynomial with positive leading coefficient
    /// under the storage order.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            g = num_integer::gcd(g, v);
        }
        let lead_neg = self
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative());
        let mut factor = Rational::new(den, g);
        if lead_neg {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

/// `poly_arithmetic` from the operation list.
pub fn poly_arithmetic(a: &MPoly, b: &MPoly, op: ArithOp) -> Result<MPoly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

// Operator sugar; these panic on ring mismatch, the `try_*` methods do not.
impl std::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl std::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&rat(-1))
    }
}

/// Determinant by cofactor expansion; meant for the small Jacobian minors.
pub fn determinant(ring: &Arc<Ring>, m: &[Vec<MPoly>]) -> MPoly {
    let k = m.len();
    match k {
        0 => MPoly::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MPoly::zero(ring);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &determinant(ring, &sub);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// All `k×k` minors of a `k×n` matrix (one per choice of `k` columns).
pub fn maximal_minors(ring: &Arc<Ring>, rows: &[Vec<MPoly>]) -> Vec<MPoly> {
    let k = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if k == 0 {
        return vec![MPoly::one(ring)];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for cols in combinations(n, k) {
        let sub: Vec<Vec<MPoly>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        let d = determinant(ring, &sub);
        if !d.is_zero() {
            out.push(d);
        }
    }
    out
}

/// k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn fmt_rational_abs(c: &Rational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for MPoly {
    /// Terms in descending grevlex order, e.g. `2*x^2*y - 1/3*z + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.sorted_terms(&MonomialOrder::Grevlex);
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.ring.var_name(i).to_string()
                    } else {
                        format!("{}^{}", self.ring.var_name(i), e)
                    }
                })
                .collect();
            let abs_one = c.abs().is_one();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational_abs(c))?;
            } else if abs_one {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational_abs(c), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.ring.vars.join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Arc<Ring>, MPoly, MPoly) {
        let r = Ring::new(["x", "y"]);
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        (r, x, y)
    }

    fn c(r: &Arc<Ring>, v: i64) -> MPoly {
        MPoly::constant(r, rat(v))
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let (r, x, y) = xy();
        assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&rat(2)));
        let d = &(&x + &c(&r, 1)) * &(&x - &c(&r, 1));
        assert_eq!(d, &x.pow(2) - &c(&r, 1));
        assert_eq!((&x - &x).total_degree(), None);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let other = Ring::new(["x", "z"]);
        let z = MPoly::var(&other, 1);
        assert_eq!(x.try_add(&z), Err(Error::RingMismatch));
        assert_eq!(
            poly_arithmetic(&x, &z, ArithOp::Mul),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn derivatives() {
        let (r, x, y) = xy();
        let f = &(&x.pow(2) + &y.pow(2)) - &c(&r, 1);
        assert_eq!(f.partial_derivative(0).unwrap(), x.scale(&rat(2)));
        assert!(x.partial_derivative(1).unwrap().is_zero());
        assert!(matches!(
            x.partial_derivative(2),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn substitution_examples() {
        let (r, x, y) = xy();
        let f = &(&x.pow(2) + &y.pow(2)) - &c(&r, 1);
        assert_eq!(
            f.substitute(1, &MPoly::zero(&r)).unwrap(),
            &x.pow(2) - &c(&r, 1)
        );
        // y <- x/2 + 1/4 gives 5/4 x^2 + 1/4 x - 15/16
        let q = &x.scale(&ratio(1, 2)) + &MPoly::constant(&r, ratio(1, 4));
        let expect = MPoly::from_terms(
            &r,
            [
                (Monomial::new(&[2, 0]), ratio(5, 4)),
                (Monomial::new(&[1, 0]), ratio(1, 4)),
                (Monomial::new(&[0, 0]), ratio(-15, 16)),
            ],
        );
        assert_eq!(f.substitute(1, &q).unwrap(), expect);
        let xy = &x * &y;
        let sub = xy.substitute_and_drop(0, &c(&r, 3)).unwrap();
        assert_eq!(sub.ring().vars(), &["y".to_string()]);
        assert_eq!(sub.to_string(), "3*y");
        assert!(matches!(
            f.substitute(0, &x),
            Err(Error::SubstitutionInvolvesVariable(_))
        ));
    }

    #[test]
    fn evaluation() {
        let (r, x, y) = xy();
        let f = &(&x.pow(3) * &y) + &c(&r, 7);
        assert_eq!(f.evaluate(&[rat(0), rat(0)]).unwrap(), rat(7));
        assert_eq!(f.evaluate(&[rat(2), ratio(1, 2)]).unwrap(), rat(11));
        assert!(matches!(
            f.evaluate(&[rat(1)]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn order_examples() {
        let a = Monomial::new(&[2, 1]);
        let b = Monomial::new(&[1, 2]);
        assert_eq!(MonomialOrder::Grevlex.compare(&a, &b), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Lex.compare(&Monomial::new(&[1, 0]), &Monomial::new(&[0, 3])),
            Ordering::Greater
        );
        // variables (lambda, x): lambda vs x^5 under elimination of lambda
        let elim = MonomialOrder::elimination(2, &[0]);
        assert_eq!(
            elim.compare(&Monomial::new(&[1, 0]), &Monomial::new(&[0, 5])),
            Ordering::Greater
        );
        // grevlex tie-break: x*z vs y^2 in three variables
        assert_eq!(
            MonomialOrder::Grevlex.compare(&Monomial::new(&[1, 0, 1]), &Monomial::new(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn display_format() {
        let (r, x, y) = xy();
        let f = &(&x.pow(2).scale(&rat(2)) * &y) - &MPoly::constant(&r, ratio(1, 3));
        assert_eq!(f.to_string(), "2*x^2*y - 1/3");
        assert_eq!((&(-&x) + &y).to_string(), "-x + y");
    }

    #[test]
    fn minors_of_jacobian() {
        let (r, x, y) = xy();
        let rows = vec![vec![x.clone(), y.clone()], vec![c(&r, 1), c(&r, 2)]];
        assert_eq!(maximal_minors(&r, &rows), vec![&x.scale(&rat(2)) - &y]);
        assert!(maximal_minors(&r, &[vec![x.clone()], vec![y.clone()]]).is_empty());
        assert_eq!(combinations(4, 2).len(), 6);
    }
}
