//! Shared fixtures for unit tests: the bundled four-variable structures and
//! small random-polynomial generators.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bracket::PoissonStructure;
use crate::poly::{coeff_int, Coeff, Monomial, Poly};

pub fn x(i: usize) -> Poly {
    Poly::var(4, i)
}

fn det() -> Poly {
    &(&x(0) * &x(3)) - &(&x(1) * &x(2))
}

fn one() -> Poly {
    Poly::one(4)
}

/// 2x2 quantum matrices: s1 = x1 x4 - x2 x3, t1 = 1, s2 = x2, t2 = x3.
pub fn qmat() -> PoissonStructure {
    PoissonStructure::build(4, vec![(det(), one()), (x(1), x(2))]).unwrap()
}

/// Elementary symmetric functions: s1 = e1, s2 = e2, t1 = t2 = 1.
pub fn symm() -> PoissonStructure {
    let e1 = &(&(&x(0) + &x(1)) + &x(2)) + &x(3);
    let mut e2 = Poly::zero(4);
    for i in 0..4 {
        for j in i + 1..4 {
            e2 = &e2 + &(&x(i) * &x(j));
        }
    }
    PoissonStructure::build(4, vec![(e1, one()), (e2, one())]).unwrap()
}

/// Determinant and product: s1 = x1 x4 - x2 x3, s2 = x2 x3, t1 = t2 = 1.
pub fn detprod() -> PoissonStructure {
    PoissonStructure::build(4, vec![(det(), one()), (&x(1) * &x(2), one())]).unwrap()
}

/// Overlapping linear pencils: s1 = x1+x2+x3+x4, t1 = 1, s2 = x1+x4, t2 = x2+x3.
pub fn sumratio() -> PoissonStructure {
    let s1 = &(&(&x(0) + &x(1)) + &x(2)) + &x(3);
    PoissonStructure::build(4, vec![(s1, one()), (&x(0) + &x(3), &x(1) + &x(2))]).unwrap()
}

pub fn all_structures() -> Vec<(&'static str, PoissonStructure)> {
    vec![("qmat", qmat()), ("symm", symm()), ("detprod", detprod()), ("sumratio", sumratio())]
}

pub fn rand_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    coeff_int(rng.gen_range(-4i64..=4))
}

pub fn rand_nonzero_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = Coeff::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into());
        if !num_traits::Zero::is_zero(&c) {
            return c;
        }
    }
}

pub fn rand_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Poly {
    let nterms = rng.gen_range(1..=4);
    let mut p = Poly::zero(nvars);
    for _ in 0..nterms {
        let mut exps = vec![0u32; nvars];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let c = coeff_int(rng.gen_range(-5i64..=5));
        p = &p + &Poly::from_terms(nvars, [(Monomial::from_exps(exps), c)]);
    }
    p
}
