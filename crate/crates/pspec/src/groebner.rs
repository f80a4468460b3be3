//! Gröbner bases over the rationals: Buchberger's algorithm with the product
//! and chain criteria, normal-form division, and the ideal operations built
//! on them (membership, properness, elimination, saturation).
//!
//! Reduced bases are unique for a given ideal and order, so every query here
//! is deterministic regardless of S-pair processing details. Membership and
//! properness answers over Q remain valid over any extension field, since a
//! Gröbner basis computed over Q stays one over the extension.

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::error::Error;
use crate::poly::{Coeff, Monomial, Poly};
use crate::Result;

// ---------------------------------------------------------------------------
// Monomial orders
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    /// Elimination order: variables flagged in `front` dominate the rest;
    /// graded reverse lex within each block.
    Block { front: Vec<bool> },
}

impl MonomialOrder {
    /// Block order making the variables in `drop` dominant.
    pub fn elimination(nvars: usize, drop: &[usize]) -> MonomialOrder {
        let mut front = vec![false; nvars];
        for &i in drop {
            assert!(i < nvars, "variable index out of range");
            front[i] = true;
        }
        MonomialOrder::Block { front }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a.exps(), b.exps()),
            MonomialOrder::GrLex => {
                let (da, db) = (a.total_degree(), b.total_degree());
                da.cmp(&db).then_with(|| lex_cmp(a.exps(), b.exps()))
            }
            MonomialOrder::GrevLex => grevlex_cmp(a.exps(), b.exps(), None),
            MonomialOrder::Block { front } => grevlex_cmp(a.exps(), b.exps(), Some((front, true)))
                .then_with(|| grevlex_cmp(a.exps(), b.exps(), Some((front, false)))),
        }
    }

    pub fn max<'p>(&self, p: &'p Poly) -> Option<(&'p Monomial, &'p Coeff)> {
        p.terms().max_by(|(m1, _), (m2, _)| self.cmp(m1, m2))
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Grevlex comparison, optionally restricted to the (non-)selected variables
/// of a mask: higher total degree wins, ties go to the smaller exponent in
/// the rightmost differing position.
fn grevlex_cmp(a: &[u32], b: &[u32], mask: Option<(&[bool], bool)>) -> Ordering {
    let selected = |i: usize| mask.is_none_or(|(m, want)| m[i] == want);
    let mut da = 0u64;
    let mut db = 0u64;
    for i in 0..a.len() {
        if selected(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if selected(i) && a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

/// Remainder of multivariate division of `f` by `divisors` under `order`:
/// no term of the result is divisible by any divisor's leading term, and
/// `f - result` lies in the ideal generated by the divisors.
pub fn normal_form(f: &Poly, divisors: &[Poly], order: &MonomialOrder) -> Poly {
    let leads: Vec<(usize, Monomial, Coeff)> = divisors
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| {
            let (m, c) = order.max(g).unwrap();
            (i, m.clone(), c.clone())
        })
        .collect();
    let mut p = f.clone();
    let mut rem = Poly::zero(f.nvars());
    'outer: while !p.is_zero() {
        let (pm, pc) = {
            let (m, c) = order.max(&p).unwrap();
            (m.clone(), c.clone())
        };
        for (i, gm, gc) in &leads {
            if gm.divides(&pm) {
                p = &p - &divisors[*i].mul_term(&pm.div(gm), &(&pc / gc));
                continue 'outer;
            }
        }
        let t = Poly::from_terms(f.nvars(), [(pm, pc)]);
        rem = &rem + &t;
        p = &p - &t;
    }
    rem
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

fn s_poly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (fm, fc) = order.max(f).unwrap();
    let (gm, gc) = order.max(g).unwrap();
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.div(fm), &(Coeff::new(1.into(), 1.into()) / fc));
    let b = g.mul_term(&lcm.div(gm), &(Coeff::new(1.into(), 1.into()) / gc));
    &a - &b
}

fn buchberger(gens: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    // integer-primitive generators keep coefficient growth in check
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(Poly::int_primitive).collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let lead = |p: &Poly| order.max(p).unwrap().0.clone();
    let mut leads: Vec<Monomial> = basis.iter().map(&lead).collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    while !pending.is_empty() {
        // normal selection: smallest lcm of leading monomials, ties by index
        let mut best = 0;
        let mut best_lcm = leads[pending[0].0].lcm(&leads[pending[0].1]);
        for (idx, &(i, j)) in pending.iter().enumerate().skip(1) {
            let l = leads[i].lcm(&leads[j]);
            if order.cmp(&l, &best_lcm) == Ordering::Less {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pending.swap_remove(best);
        // product criterion
        if leads[i].is_coprime_with(&leads[j]) {
            continue;
        }
        // chain criterion: some k divides the lcm and both mixed pairs are done
        let lcm_ij = leads[i].lcm(&leads[j]);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm_ij)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.int_primitive();
            let k = basis.len();
            leads.push(lead(&r));
            basis.push(r);
            for i in 0..k {
                pending.push((i, k));
            }
        }
    }
    reduce_basis(basis, order)
}

/// Minimize (no leading term divides another) and fully tail-reduce; the
/// result is the unique reduced basis, monic, sorted by leading monomial
/// descending.
fn reduce_basis(mut basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    basis.sort_by(|a, b| order.cmp(order.max(a).unwrap().0, order.max(b).unwrap().0));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let gm = order.max(&g).unwrap().0.clone();
        if !minimal.iter().any(|h| order.max(h).unwrap().0.divides(&gm)) {
            minimal.push(g);
        }
    }
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Poly> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
            let reduced = normal_form(&minimal[i], &others, order);
            if reduced != minimal[i] {
                minimal[i] = reduced.int_primitive();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Poly> = minimal
        .into_iter()
        .map(|g| {
            let lc = order.max(&g).unwrap().1.clone();
            g.scale(&(Coeff::new(1.into(), 1.into()) / lc))
        })
        .collect();
    out.sort_by(|a, b| order.cmp(order.max(b).unwrap().0, order.max(a).unwrap().0));
    out
}

// ---------------------------------------------------------------------------
// Ideal handles
// ---------------------------------------------------------------------------

/// An ideal given by generators, with its reduced Gröbner basis computed
/// lazily (once) under the chosen order. After the basis exists all queries
/// are read-only.
#[derive(Debug)]
pub struct IdealHandle {
    nvars: usize,
    gens: Vec<Poly>,
    order: MonomialOrder,
    gb: OnceLock<Vec<Poly>>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            nvars: self.nvars,
            gens: self.gens.clone(),
            order: self.order.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl IdealHandle {
    pub fn new(nvars: usize, gens: Vec<Poly>, order: MonomialOrder) -> IdealHandle {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "variable count mismatch");
        }
        IdealHandle { nvars, gens, order, gb: OnceLock::new() }
    }

    /// Generators under the default grevlex order.
    pub fn with_default_order(nvars: usize, gens: Vec<Poly>) -> IdealHandle {
        IdealHandle::new(nvars, gens, MonomialOrder::GrevLex)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The reduced Gröbner basis (empty for the zero ideal).
    pub fn groebner_basis(&self) -> &[Poly] {
        self.gb.get_or_init(|| buchberger(&self.gens, &self.order))
    }

    pub fn contains(&self, f: &Poly) -> bool {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        if f.is_zero() {
            return true;
        }
        let gb = self.groebner_basis();
        if gb.is_empty() {
            return false;
        }
        normal_form(f, gb, &self.order).is_zero()
    }

    /// True iff 1 does not lie in the ideal.
    pub fn is_proper(&self) -> bool {
        !self.groebner_basis().iter().any(Poly::is_constant)
    }

    /// Generators of the intersection with the subring omitting the dropped
    /// variables, via a block elimination order. The result lives in the same
    /// ambient ring; its generators simply do not mention the dropped
    /// variables.
    pub fn eliminate(&self, drop: &[usize]) -> Result<IdealHandle> {
        let mut flags = vec![false; self.nvars];
        for &i in drop {
            assert!(i < self.nvars, "variable index out of range");
            flags[i] = true;
        }
        if flags.iter().all(|&f| f) {
            return Err(Error::EliminateAll);
        }
        let order = MonomialOrder::Block { front: flags.clone() };
        let gb = buchberger(&self.gens, &order);
        let kept: Vec<Poly> = gb
            .into_iter()
            .filter(|g| g.terms().all(|(m, _)| m.exps().iter().enumerate().all(|(i, &e)| !flags[i] || e == 0)))
            .collect();
        Ok(IdealHandle::new(self.nvars, kept, self.order.clone()))
    }

    /// Saturation I : f^∞, computed as (I + (1 - y f)) ∩ Q\[x\] for a fresh
    /// variable y. Idempotent.
    pub fn saturate(&self, f: &Poly) -> Result<IdealHandle> {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        if f.is_zero() {
            return Err(Error::SaturateByZero);
        }
        let ext = self.nvars + 1;
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.extend_vars(ext)).collect();
        let y = Poly::var(ext, self.nvars);
        gens.push(&Poly::one(ext) - &(&y * &f.extend_vars(ext)));
        let order = MonomialOrder::elimination(ext, &[self.nvars]);
        let gb = buchberger(&gens, &order);
        let kept: Vec<Poly> = gb
            .into_iter()
            .filter(|g| g.degree_in(self.nvars) == 0)
            .map(|g| g.truncate_vars(self.nvars))
            .collect();
        Ok(IdealHandle::new(self.nvars, kept, self.order.clone()))
    }
}
