//! Buchberger's algorithm over ℚ with elimination, univariate eliminants and
//! zero-dimensional solving in shape position.
//!
//! Internally polynomials are kept as primitive integer polynomials with terms
//! sorted under the active order, so reductions are fraction-free. Pairs are
//! selected by lowest sugar degree (ties broken by the smaller lcm under the
//! order) and filtered with the Gebauer–Möller installation of Buchberger's
//! coprime and chain criteria.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::polyring::{MPoly, Monomial, MonomialOrder, Rational, Ring};
use crate::univariate::UPoly;

/// Generators of an ideal together with the order they were computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<MPoly>,
    pub order: MonomialOrder,
    /// Set when `generators` is the reduced Gröbner basis for `order`.
    pub reduced_gb: bool,
}

impl IdealBasis {
    pub fn new(generators: Vec<MPoly>, order: MonomialOrder) -> Self {
        IdealBasis {
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            order,
            reduced_gb: false,
        }
    }

    /// The reduced basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_term(&self.order).map(|(m, _)| m.clone()))
            .collect()
    }

    /// For a Gröbner basis: every variable has a pure power among the
    /// leading monomials. The unit ideal counts as zero-dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        let lms = self.leading_monomials();
        let n = match self.generators.first() {
            Some(g) => g.nvars(),
            None => return false,
        };
        if self.is_unit() {
            return true;
        }
        (0..n).all(|i| {
            lms.iter().any(|m| {
                m.exponent(i) > 0
                    && m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| j == i || e == 0)
            })
        })
    }
}

#[derive(Clone, Debug)]
struct Term {
    m: Monomial,
    c: BigInt,
}

#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<Term>,
    sugar: u32,
    lm_mask: u64,
}

impl IPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].m
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].c
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn refresh_mask(&mut self) {
        self.lm_mask = self.terms.first().map_or(0, |t| t.m.support_mask());
    }
}

struct Engine<'a> {
    order: &'a MonomialOrder,
}

/// Gcd of the coefficients. Starts from the smallest one and reduces the
/// others modulo the running gcd, so every gcd call sees small operands.
fn content(terms: &[Term]) -> BigInt {
    let mut g = match terms.iter().min_by_key(|t| t.c.bits()) {
        Some(t) => t.c.abs(),
        None => return BigInt::zero(),
    };
    for t in terms {
        if g.is_one() {
            break;
        }
        let r = &t.c % &g;
        if !r.is_zero() {
            g = g.gcd(&r);
        }
    }
    g
}

impl<'a> Engine<'a> {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Integer multiple of `p`, primitive, with a positive leading coefficient.
    /// Returns the factor `k` with `result = k·p`.
    fn import(&self, p: &MPoly) -> (IPoly, Rational) {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                m: m.clone(),
                c: c.numer() * (&den / c.denom()),
            })
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.m, &a.m));
        let mut factor = Rational::from_integer(den);
        let g = content(&terms);
        if !g.is_zero() {
            let g = if terms[0].c.is_negative() { -g } else { g };
            for t in terms.iter_mut() {
                t.c /= &g;
            }
            factor /= Rational::from_integer(g);
        }
        let sugar = p.total_degree().unwrap_or(0);
        let mut ip = IPoly {
            terms,
            sugar,
            lm_mask: 0,
        };
        ip.refresh_mask();
        (ip, factor)
    }

    fn export(&self, p: &IPoly, ring: &Arc<Ring>, scale: &Rational) -> MPoly {
        MPoly::from_terms(
            ring,
            p.terms
                .iter()
                .map(|t| (t.m.clone(), Rational::from_integer(t.c.clone()) * scale)),
        )
    }

    /// `a·f − b·m·g` where the first terms of `f` and `m·g` cancel; both tails
    /// are merged in order.
    fn combine(&self, a: &BigInt, f: &[Term], b: &BigInt, m: &Monomial, g: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let a_one = a.is_one();
        while i < f.len() || j < g.len() {
            if j >= g.len() {
                out.push(Term {
                    m: f[i].m.clone(),
                    c: if a_one { f[i].c.clone() } else { &f[i].c * a },
                });
                i += 1;
                continue;
            }
            let gm = g[j].m.mul(m);
            if i >= f.len() {
                out.push(Term {
                    m: gm,
                    c: -(&g[j].c * b),
                });
                j += 1;
                continue;
            }
            match self.cmp(&f[i].m, &gm) {
                Ordering::Greater => {
                    out.push(Term {
                        m: f[i].m.clone(),
                        c: if a_one { f[i].c.clone() } else { &f[i].c * a },
                    });
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        m: gm,
                        c: -(&g[j].c * b),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if a_one { f[i].c.clone() } else { &f[i].c * a } - &g[j].c * b;
                    if !c.is_zero() {
                        out.push(Term { m: gm, c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    fn find_reducer<'b>(&self, m: &Monomial, basis: &[&'b IPoly]) -> Option<&'b IPoly> {
        let mask = m.support_mask();
        basis
            .iter()
            .find(|g| g.lm_mask & !mask == 0 && g.lm().divides(m))
            .copied()
    }

    /// Full reduction. Returns `r` and `k` with `r ≡ k·p` modulo the basis.
    fn reduce(&self, p: IPoly, basis: &[&IPoly], full: bool) -> (IPoly, Rational) {
        let mut terms = p.terms;
        let mut sugar = p.sugar;
        let mut mult = Rational::one();
        let mut pos = 0;
        let mut steps = 0u32;
        while pos < terms.len() {
            if !full && pos > 0 {
                break;
            }
            let reducer = self.find_reducer(&terms[pos].m, basis);
            let g = match reducer {
                None => {
                    pos += 1;
                    continue;
                }
                Some(g) => g,
            };
            let q = terms[pos].m.checked_div(g.lm()).expect("divisible");
            let c = &terms[pos].c;
            let d = c.gcd(g.lc());
            let a = g.lc() / &d;
            let b = c / &d;
            let mut next = Vec::with_capacity(terms.len() + g.terms.len());
            if a.is_one() {
                next.extend(terms.drain(..pos));
            } else {
                next.extend(terms[..pos].iter().map(|t| Term {
                    m: t.m.clone(),
                    c: &t.c * &a,
                }));
            }
            let tail_start = if a.is_one() { 1 } else { pos + 1 };
            next.extend(self.combine(&a, &terms[tail_start..], &b, &q, &g.terms[1..]));
            terms = next;
            mult *= Rational::from_integer(a);
            sugar = sugar.max(g.sugar + q.degree());
            steps += 1;
            if steps.is_multiple_of(8) {
                let g = content(&terms);
                if !g.is_zero() && !g.is_one() {
                    for t in terms.iter_mut() {
                        t.c /= &g;
                    }
                    mult /= Rational::from_integer(g);
                }
            }
        }
        if !terms.is_empty() {
            let mut g = content(&terms);
            if terms[0].c.is_negative() {
                g = -g;
            }
            for t in terms.iter_mut() {
                t.c /= &g;
            }
            mult /= Rational::from_integer(g);
        }
        let mut r = IPoly {
            terms,
            sugar,
            lm_mask: 0,
        };
        r.refresh_mask();
        (r, mult)
    }

    fn spoly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let l = f.lm().lcm(g.lm());
        let mf = l.checked_div(f.lm()).unwrap();
        let mg = l.checked_div(g.lm()).unwrap();
        let d = f.lc().gcd(g.lc());
        let a = g.lc() / &d;
        let b = f.lc() / &d;
        // a·mf·f − b·mg·g: scale f's tail by mf first
        let f_tail: Vec<Term> = f.terms[1..]
            .iter()
            .map(|t| Term {
                m: t.m.mul(&mf),
                c: t.c.clone(),
            })
            .collect();
        let terms = self.combine(&a, &f_tail, &b, &mg, &g.terms[1..]);
        let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
        let mut p = IPoly {
            terms,
            sugar,
            lm_mask: 0,
        };
        p.refresh_mask();
        p
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct GbState<'a> {
    engine: Engine<'a>,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> GbState<'a> {
    fn active_refs(&self) -> Vec<&IPoly> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let df = lcm.degree() - f.lm().degree();
        let dg = lcm.degree() - g.lm().degree();
        (f.sugar + df).max(g.sugar + dg)
    }

    /// Gebauer–Möller update after inserting `polys[h]`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lm_g = self.polys[g].lm();
                (g, lm_h.lcm(lm_g), lm_h.is_coprime(lm_g))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, coprime)) = cands.pop() {
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(_, l2, _)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1, coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(g, l, _)| Pair {
                i: g,
                j: h,
                sugar: self.pair_sugar(g, h, &l),
                lcm: l,
            })
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lm_h) != p.lcm
                && polys[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn insert(&mut self, p: IPoly) {
        self.polys.push(p);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.engine.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.compare(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of `⟨gens⟩` for `order`.
pub fn buchberger(gens: &[MPoly], order: &MonomialOrder) -> IdealBasis {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return IdealBasis {
                generators: Vec::new(),
                order: order.clone(),
                reduced_gb: true,
            }
        }
    };
    let engine = Engine { order };
    let unit = || IdealBasis {
        generators: vec![MPoly::one(&ring)],
        order: order.clone(),
        reduced_gb: true,
    };
    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.import(g).0)
        .collect();
    if inputs.iter().any(|p| p.lm().is_one()) {
        return unit();
    }
    // small leading monomials first
    inputs.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    let mut st = GbState {
        engine,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for p in inputs {
        let (r, _) = {
            let basis = st.active_refs();
            st.engine.reduce(p, &basis, true)
        };
        if r.is_zero() {
            continue;
        }
        if r.lm().is_one() {
            return unit();
        }
        st.insert(r);
    }
    while let Some(pair) = st.select_pair() {
        let s = st.engine.spoly(&st.polys[pair.i], &st.polys[pair.j]);
        if s.is_zero() {
            continue;
        }
        let (r, _) = {
            let basis = st.active_refs();
            st.engine.reduce(s, &basis, true)
        };
        if r.is_zero() {
            continue;
        }
        if r.lm().is_one() {
            return unit();
        }
        st.insert(r);
    }
    // inter-reduce the minimal basis
    let mut basis: Vec<IPoly> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    basis.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    for k in 0..basis.len() {
        let others: Vec<&IPoly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p)
            .collect();
        let (r, _) = st.engine.reduce(basis[k].clone(), &others, true);
        basis[k] = r;
    }
    let mut generators: Vec<MPoly> = basis
        .iter()
        .map(|p| {
            let lc = Rational::from_integer(p.lc().clone());
            st.engine.export(p, &ring, &lc.recip())
        })
        .collect();
    generators.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.compare(lb, la)
    });
    IdealBasis {
        generators,
        order: order.clone(),
        reduced_gb: true,
    }
}

/// Normal form of `p` with respect to `basis` (full division). Canonical
/// when the basis is a reduced Gröbner basis.
pub fn reduce(p: &MPoly, basis: &IdealBasis) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let engine = Engine {
        order: &basis.order,
    };
    let imported: Vec<IPoly> = basis
        .generators
        .iter()
        .map(|g| engine.import(g).0)
        .collect();
    let refs: Vec<&IPoly> = imported.iter().collect();
    let (ip, k0) = engine.import(p);
    let (r, k1) = engine.reduce(ip, &refs, true);
    // r = k1·(k0·p) mod I
    engine.export(&r, p.ring(), &(k0 * k1).recip())
}

/// Reusable reducer for many normal forms against one basis.
pub struct Reducer<'a> {
    engine: Engine<'a>,
    basis: Vec<IPoly>,
}

impl<'a> Reducer<'a> {
    pub fn new(basis: &'a IdealBasis) -> Self {
        let engine = Engine {
            order: &basis.order,
        };
        let basis = basis
            .generators
            .iter()
            .map(|g| engine.import(g).0)
            .collect();
        Reducer { engine, basis }
    }

    pub fn normal_form(&self, p: &MPoly) -> MPoly {
        if p.is_zero() {
            return p.clone();
        }
        let refs: Vec<&IPoly> = self.basis.iter().collect();
        let (ip, k0) = self.engine.import(p);
        let (r, k1) = self.engine.reduce(ip, &refs, true);
        self.engine.export(&r, p.ring(), &(k0 * k1).recip())
    }
}

/// True iff `1 ∈ ⟨gens⟩`.
pub fn is_trivial(gens: &[MPoly]) -> bool {
    buchberger(gens, &MonomialOrder::Grevlex).is_unit()
}

/// Generators of `⟨gens⟩ ∩ ℚ[remaining variables]` (still in the input ring).
pub fn eliminate(gens: &[MPoly], elim_vars: &[usize]) -> Vec<MPoly> {
    let n = match gens.first() {
        Some(g) => g.nvars(),
        None => return Vec::new(),
    };
    let order = MonomialOrder::elimination(n, elim_vars);
    buchberger(gens, &order)
        .generators
        .into_iter()
        .filter(|g| elim_vars.iter().all(|&v| !g.uses_var(v)))
        .collect()
}

/// Result of eliminating all variables but one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eliminant {
    /// Monic generator of the elimination ideal.
    Poly(UPoly),
    /// The elimination ideal is `{0}`.
    Zero,
}

/// Monic generator of `⟨gens⟩ ∩ ℚ[target]`.
pub fn univariate_eliminant(gens: &[MPoly], target: usize) -> Eliminant {
    let n = match gens.first() {
        Some(g) => g.nvars(),
        None => return Eliminant::Zero,
    };
    let others: Vec<usize> = (0..n).filter(|&i| i != target).collect();
    let order = MonomialOrder::elimination(n, &others);
    let gb = buchberger(gens, &order);
    gb.generators
        .iter()
        .find(|g| others.iter().all(|&v| !g.uses_var(v)))
        .map(|g| Eliminant::Poly(UPoly::from_mpoly(g, target).expect("univariate").monic()))
        .unwrap_or(Eliminant::Zero)
}

/// Finite-dimensional quotient `ℚ[x]/I` for a zero-dimensional reduced
/// Gröbner basis, with the standard monomials as a vector-space basis.
pub struct Quotient<'a> {
    gb: &'a IdealBasis,
    reducer: Reducer<'a>,
    ring: Arc<Ring>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<'a> Quotient<'a> {
    pub fn new(gb: &'a IdealBasis) -> Option<Self> {
        if !gb.reduced_gb || !gb.is_zero_dimensional() || gb.generators.is_empty() {
            return None;
        }
        let ring = gb.generators[0].ring().clone();
        let n = ring.nvars();
        let lms = gb.leading_monomials();
        let mut basis = Vec::new();
        let mut index = HashMap::new();
        if !gb.is_unit() {
            let mut stack = vec![Monomial::one(n)];
            while let Some(m) = stack.pop() {
                if index.contains_key(&m) || lms.iter().any(|l| l.divides(&m)) {
                    continue;
                }
                index.insert(m.clone(), basis.len());
                basis.push(m.clone());
                for i in 0..n {
                    stack.push(m.mul(&Monomial::var(n, i)));
                }
            }
        }
        Some(Quotient {
            gb,
            reducer: Reducer::new(gb),
            ring,
            basis,
            index,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal(&self) -> &IdealBasis {
        self.gb
    }

    /// Coordinates of the normal form of `p`.
    pub fn vector(&self, p: &MPoly) -> Vec<Rational> {
        let nf = self.reducer.normal_form(p);
        let mut v = vec![Rational::zero(); self.basis.len()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Sparse columns of multiplication by `elem`.
    fn multiplication_columns(&self, elem: &MPoly) -> Columns {
        self.basis
            .iter()
            .map(|b| {
                let prod = elem.mul_term(b, &Rational::one());
                self.vector(&prod)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect()
    }

    /// Krylov vectors `1, elem, elem², …` reduced modulo `ech`'s subspace
    /// until the first linear dependency.
    fn krylov_in(&self, cols: &Columns, mut ech: Echelon) -> (Echelon, UPoly) {
        let mut v = self.vector(&MPoly::one(&self.ring));
        loop {
            if let Some(dep) = ech.insert(v.clone()) {
                return (ech, UPoly::new(dep));
            }
            v = apply(cols, &v);
        }
    }

    fn krylov(&self, elem: &MPoly) -> (Echelon, UPoly) {
        let cols = self.multiplication_columns(elem);
        self.krylov_in(&cols, Echelon::new(self.dimension()))
    }

    /// Echelon basis of the nilradical of the quotient algebra, generated as
    /// an ideal by the squarefree parts of the coordinate minimal polynomials.
    /// `None` when the ideal is already radical.
    fn nilradical(&self, var_cols: &[Columns]) -> Option<Echelon> {
        let d = self.dimension();
        let one = self.vector(&MPoly::one(&self.ring));
        let mut queue = Vec::new();
        for cols in var_cols {
            let m = self.krylov_in(cols, Echelon::new(d)).1;
            let s = crate::univariate::squarefree_part(&m).expect("nonzero");
            if s.degree() == m.degree() {
                continue;
            }
            let mut v = vec![Rational::zero(); d];
            for c in s.coeffs().iter().rev() {
                v = apply(cols, &v);
                for (vi, oi) in v.iter_mut().zip(&one) {
                    *vi += c * oi;
                }
            }
            queue.push(v);
        }
        if queue.is_empty() {
            return None;
        }
        let mut ech = Echelon::new(d);
        while let Some(v) = queue.pop() {
            if let Some(row) = ech.insert_untracked(v) {
                queue.extend(var_cols.iter().map(|cols| apply(cols, &row)));
            }
        }
        Some(ech)
    }

    /// Minimal polynomial of `elem` in the quotient; it generates
    /// `(I + ⟨elem − t⟩) ∩ ℚ[t]`.
    pub fn minimal_polynomial(&self, elem: &MPoly) -> UPoly {
        if self.dimension() == 0 {
            return UPoly::one();
        }
        self.krylov(elem).1
    }
}

type Columns = Vec<Vec<(usize, Rational)>>;

fn apply(cols: &Columns, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (j, vj) in v.iter().enumerate() {
        if vj.is_zero() {
            continue;
        }
        for (i, c) in &cols[j] {
            out[*i] += vj * c;
        }
    }
    out
}

/// Incremental row echelon form remembering how each row was built from the
/// inserted vectors.
#[derive(Clone)]
struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    inserted: usize,
}

impl Echelon {
    fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    /// Reduces `v`, returning the residual and the combination of stored
    /// rows subtracted, expressed over the inserted vectors.
    fn reduce(&self, mut v: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
        let mut combo = vec![Rational::zero(); self.inserted + 1];
        for (pivot, row, rcombo) in &self.rows {
            let f = v[*pivot].clone();
            if f.is_zero() {
                continue;
            }
            for k in 0..self.dim {
                if !row[k].is_zero() {
                    v[k] -= &f * &row[k];
                }
            }
            for (k, c) in rcombo.iter().enumerate() {
                if !c.is_zero() {
                    combo[k] += &f * c;
                }
            }
        }
        (v, combo)
    }

    /// Adds the next vector; on dependency returns coefficients `c` with
    /// `Σ c_k v_k = 0` and `c_last = 1`.
    fn insert(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        let k = self.inserted;
        let (res, combo) = self.reduce(v);
        // res = v_k − Σ combo_j v_j
        let mut repr: Vec<Rational> = combo.iter().map(|c| -c).collect();
        repr.resize(k + 1, Rational::zero());
        repr[k] = Rational::one();
        match res.iter().position(|c| !c.is_zero()) {
            None => Some(repr),
            Some(p) => {
                let inv = res[p].recip();
                let row: Vec<Rational> = res.iter().map(|c| c * &inv).collect();
                let rc: Vec<Rational> = repr.iter().map(|c| c * &inv).collect();
                for r in self.rows.iter_mut() {
                    r.2.resize(k + 1, Rational::zero());
                }
                self.rows.push((p, row, rc));
                self.inserted += 1;
                None
            }
        }
    }

    /// Adds `v` to the background subspace without tracking it; returns the
    /// new row if `v` was independent.
    fn insert_untracked(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        debug_assert_eq!(self.inserted, 0);
        let (res, _) = self.reduce(v);
        let p = res.iter().position(|c| !c.is_zero())?;
        let inv = res[p].recip();
        let row: Vec<Rational> = res.iter().map(|c| c * &inv).collect();
        self.rows.push((p, row.clone(), vec![Rational::zero()]));
        Some(row)
    }

    /// Coefficients of `w` over the inserted vectors, if `w` lies in their span.
    fn solve(&self, w: Vec<Rational>) -> Option<Vec<Rational>> {
        let (res, combo) = self.reduce(w);
        if res.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut c = combo;
        c.truncate(self.inserted);
        Some(c)
    }
}

/// Zero-dimensional solution in shape position: every coordinate is a
/// polynomial in the separating form modulo the eliminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeSolution {
    pub separating_form: MPoly,
    pub eliminant: UPoly,
    pub coordinate_params: Vec<UPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeResult {
    Solved(ShapeSolution),
    NotZeroDimensional,
    RetryExhausted,
}

#[derive(Clone, Copy, Debug)]
pub struct ShapeOptions {
    pub retries: u32,
    pub coeff_bound: u32,
}

impl Default for ShapeOptions {
    fn default() -> Self {
        ShapeOptions {
            retries: 5,
            coeff_bound: 99,
        }
    }
}

/// Evaluates `p` at `x_i = vals[i]` modulo `modulus`.
pub fn eval_mod(p: &MPoly, vals: &[UPoly], modulus: &UPoly) -> UPoly {
    let n = p.nvars();
    let maxdeg: Vec<u32> = (0..n).map(|i| p.degree_in(i).unwrap_or(0)).collect();
    let powers: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            let mut v = vec![UPoly::one()];
            for k in 1..=maxdeg[i] as usize {
                let nx = (&v[k - 1] * &vals[i]).rem(modulus);
                v.push(nx);
            }
            v
        })
        .collect();
    let mut acc = UPoly::zero();
    for (m, c) in p.terms() {
        let mut t = UPoly::constant(c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = (&t * &powers[i][e as usize]).rem(modulus);
            }
        }
        acc = &acc + &t;
    }
    acc.rem(modulus)
}

fn lcm_of_denominators<'r, I: IntoIterator<Item = &'r Rational>>(it: I) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// `a·b mod m` for a monic integer modulus `m`.
fn mul_mod_monic(a: &[BigInt], b: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut p = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            p[i + j] += x * y;
        }
    }
    rem_monic(p, m)
}

fn rem_monic(mut p: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let d = m.len() - 1;
    while p.len() > d {
        let c = p.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = p.len() - d;
        for j in 0..d {
            p[k + j] -= &c * &m[j];
        }
    }
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact check that every generator vanishes at `x_i = params_i(u)` modulo
/// `q`. With `a = lc` of the integer form of `q`, the substitution `u = v/a`
/// makes the modulus monic over ℤ, so the test runs in integer arithmetic.
pub fn verify_parametrization(gens: &[MPoly], params: &[UPoly], q: &UPoly) -> bool {
    let d = match q.degree() {
        Some(0) | None => return true,
        Some(d) => d,
    };
    let qden = lcm_of_denominators(q.coeffs());
    let qi: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&qden / c.denom()))
        .collect();
    let a = qi[d].clone();
    let mut apow = vec![BigInt::one()];
    for k in 1..=d {
        apow.push(&apow[k - 1] * &a);
    }
    // a^{d−1}·q(v/a)
    let monic: Vec<BigInt> = (0..=d)
        .map(|k| {
            if k == d {
                BigInt::one()
            } else {
                &qi[k] * &apow[d - 1 - k]
            }
        })
        .collect();
    // params_i(v/a) = H_i(v) / den_i
    let scaled: Vec<(Vec<BigInt>, BigInt)> = params
        .iter()
        .map(|g| {
            let cs: Vec<Rational> = g
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c / Rational::from_integer(apow[k].clone()))
                .collect();
            let den = lcm_of_denominators(&cs);
            let h: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
            (rem_monic(h, &monic), den)
        })
        .collect();
    gens.iter().all(|f| {
        let n = f.nvars();
        let degs: Vec<u32> = (0..n).map(|i| f.degree_in(i).unwrap_or(0)).collect();
        let powers: Vec<Vec<Vec<BigInt>>> = (0..n)
            .map(|i| {
                let mut v = vec![vec![BigInt::one()]];
                for e in 1..=degs[i] as usize {
                    let next = mul_mod_monic(&v[e - 1], &scaled[i].0, &monic);
                    v.push(next);
                }
                v
            })
            .collect();
        let fden = lcm_of_denominators(f.terms().map(|(_, c)| c));
        let mut acc: Vec<BigInt> = Vec::new();
        for (m, c) in f.terms() {
            let mut scalar = c.numer() * (&fden / c.denom());
            let mut t = vec![BigInt::one()];
            for i in 0..n {
                let e = m.exponent(i) as u32;
                scalar *= num_traits::pow(scaled[i].1.clone(), (degs[i] - e) as usize);
                if e > 0 {
                    t = mul_mod_monic(&t, &powers[i][e as usize], &monic);
                }
            }
            if acc.len() < t.len() {
                acc.resize(t.len(), BigInt::zero());
            }
            for (k, x) in t.iter().enumerate() {
                acc[k] += x * &scalar;
            }
        }
        acc.iter().all(Zero::is_zero)
    })
}

/// Solves a zero-dimensional system through a random separating linear form.
pub fn shape_position_solve<R: Rng + ?Sized>(
    gens: &[MPoly],
    rng: &mut R,
    opts: ShapeOptions,
) -> ShapeResult {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return ShapeResult::NotZeroDimensional,
    };
    let n = ring.nvars();
    let gb = buchberger(gens, &MonomialOrder::Grevlex);
    if gb.is_unit() {
        return ShapeResult::Solved(ShapeSolution {
            separating_form: MPoly::zero(&ring),
            eliminant: UPoly::one(),
            coordinate_params: vec![UPoly::zero(); n],
        });
    }
    let q = match Quotient::new(&gb) {
        Some(q) => q,
        None => return ShapeResult::NotZeroDimensional,
    };
    let d = q.dimension();
    let var_cols: Vec<Columns> = (0..n)
        .map(|i| q.multiplication_columns(&MPoly::var(&ring, i)))
        .collect();
    let bound = opts.coeff_bound.max(1) as i64;
    // the nilradical is only computed once a form fails, since a squarefree
    // minimal polynomial of full degree already certifies radicality
    let mut nil: Option<Option<Echelon>> = None;
    let mut pending: Option<Vec<Rational>> = None;
    let mut attempts = 0;
    while attempts < opts.retries.max(1) {
        let coeffs = pending.take().unwrap_or_else(|| {
            (0..n)
                .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                .collect()
        });
        let mut cols: Columns = vec![Vec::new(); d];
        for (c, vc) in coeffs.iter().zip(&var_cols) {
            if c.is_zero() {
                continue;
            }
            for (col, src) in cols.iter_mut().zip(vc) {
                col.extend(src.iter().map(|(i, a)| (*i, a * c)));
            }
        }
        let start = match &nil {
            Some(Some(e)) => e.clone(),
            _ => Echelon::new(d),
        };
        let background = start.rows.len();
        let (ech, minpoly) = q.krylov_in(&cols, start);
        let full = minpoly.degree() == Some(d - background);
        let squarefree = crate::univariate::squarefree_part(&minpoly)
            .is_ok_and(|s| s.degree() == minpoly.degree());
        if !full || !squarefree {
            if nil.is_none() {
                let rad = q.nilradical(&var_cols);
                let changed = rad.is_some();
                nil = Some(rad);
                if changed {
                    pending = Some(coeffs);
                    continue;
                }
            }
            attempts += 1;
            continue;
        }
        let params: Option<Vec<UPoly>> = (0..n)
            .map(|i| ech.solve(q.vector(&MPoly::var(&ring, i))).map(UPoly::new))
            .collect();
        match params {
            Some(params) if verify_parametrization(gens, &params, &minpoly) => {
                return ShapeResult::Solved(ShapeSolution {
                    separating_form: MPoly::linear(&ring, &coeffs, Rational::zero()),
                    eliminant: minpoly,
                    coordinate_params: params,
                })
            }
            _ => attempts += 1,
        }
    }
    ShapeResult::RetryExhausted
}

/// Radical of a zero-dimensional ideal: adds the squarefree part of each
/// coordinate's minimal polynomial.
pub fn radical_zero_dim(gb: &IdealBasis) -> IdealBasis {
    let q = match Quotient::new(gb) {
        Some(q) if q.dimension() > 0 => q,
        _ => return gb.clone(),
    };
    let ring = q.ring.clone();
    let mut extra = Vec::new();
    for i in 0..ring.nvars() {
        let m = q.minimal_polynomial(&MPoly::var(&ring, i));
        let s = crate::univariate::squarefree_part(&m).expect("nonzero");
        if s.degree() < m.degree() {
            extra.push(s.to_mpoly(&ring, i));
        }
    }
    if extra.is_empty() {
        return gb.clone();
    }
    let mut gens = gb.generators.clone();
    gens.extend(extra);
    buchberger(&gens, &gb.order)
}
