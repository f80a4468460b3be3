//! Multivariate GCD over the rationals: recursive content/primitive-part
//! reduction down to a univariate subresultant PRS in the main variable.

use crate::error::Error;

use super::{Monomial, Poly};

/// Greatest common divisor, normalized so the canonical leading coefficient
/// is 1. Coprime inputs yield the constant 1.
pub fn gcd_poly(a: &Poly, b: &Poly) -> Result<Poly, Error> {
    assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdBothZero);
    }
    Ok(gcd_inner(a, b).monic())
}

fn gcd_inner(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }
    let v = a.max_var().unwrap().max(b.max_var().unwrap());
    let ua = to_univar(a, v);
    let ub = to_univar(b, v);
    let ca = gcd_list(&ua);
    let cb = gcd_list(&ub);
    let pa: Vec<Poly> = ua.iter().map(|c| c.div_exact(&ca).expect("content divides")).collect();
    let pb: Vec<Poly> = ub.iter().map(|c| c.div_exact(&cb).expect("content divides")).collect();
    let cont = gcd_inner(&ca, &cb);
    let pp = subresultant_prs(pa, pb, n);
    &cont * &from_univar(&pp, v, n)
}

/// GCD of a list; any constant running value collapses to 1 (constants are
/// units over the rationals).
fn gcd_list(polys: &[Poly]) -> Poly {
    let n = polys[0].nvars();
    let mut g = Poly::zero(n);
    for p in polys {
        if p.is_zero() {
            continue;
        }
        g = gcd_inner(&g, p);
        if g.is_constant() {
            return Poly::one(n);
        }
    }
    if g.is_zero() {
        Poly::one(n)
    } else {
        g
    }
}

// -- univariate view in a main variable, coefficients in the remaining ring --

fn to_univar(p: &Poly, v: usize) -> Vec<Poly> {
    let n = p.nvars();
    let deg = p.degree_in(v) as usize;
    let mut coeffs = vec![Poly::zero(n); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        let mut exps = m.exps().to_vec();
        exps[v] = 0;
        coeffs[e] = &coeffs[e] + &Poly::from_terms(n, [(Monomial::from_exps(exps), c.clone())]);
    }
    trim(&mut coeffs);
    coeffs
}

fn from_univar(coeffs: &[Poly], v: usize, nvars: usize) -> Poly {
    let mut acc = Poly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = Monomial::var(nvars, v).pow(e as u32);
        acc = &acc + &c.mul_term(&m, &num_traits::One::one());
    }
    acc
}

fn trim(coeffs: &mut Vec<Poly>) {
    while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
        coeffs.pop();
    }
}

fn deg(u: &[Poly]) -> usize {
    u.len() - 1
}

fn is_zero_uni(u: &[Poly]) -> bool {
    u.iter().all(Poly::is_zero)
}

fn scale_uni(u: &[Poly], f: &Poly) -> Vec<Poly> {
    u.iter().map(|c| c * f).collect()
}

fn sub_uni(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len().max(b.len());
    let nv = a[0].nvars();
    let zero = Poly::zero(nv);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

/// x^k * u
fn shift_uni(u: &[Poly], k: usize, nvars: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(nvars); k];
    out.extend_from_slice(u);
    out
}

/// Pseudo-remainder: lc(w)^(deg u - deg w + 1) * u modulo w.
fn pseudo_rem(u: &[Poly], w: &[Poly], nvars: usize) -> Vec<Poly> {
    let e = deg(w);
    let lw = w[e].clone();
    let mut r = u.to_vec();
    let mut steps = deg(u) as i64 - e as i64 + 1;
    while !is_zero_uni(&r) && deg(&r) >= e {
        let k = deg(&r) - e;
        let lr = r[deg(&r)].clone();
        r = sub_uni(&scale_uni(&r, &lw), &scale_uni(&shift_uni(w, k, nvars), &lr));
        steps -= 1;
    }
    // top up to the exact pseudo-remainder power
    for _ in 0..steps {
        r = scale_uni(&r, &lw);
    }
    r
}

/// Subresultant polynomial remainder sequence; returns the primitive gcd of
/// two v-primitive univariate polynomials (coefficients in the smaller ring).
fn subresultant_prs(a: Vec<Poly>, b: Vec<Poly>, nvars: usize) -> Vec<Poly> {
    let (mut u, mut w) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one(nvars);
    let mut h = Poly::one(nvars);
    loop {
        let delta = (deg(&u) - deg(&w)) as u32;
        let r = pseudo_rem(&u, &w, nvars);
        if is_zero_uni(&r) {
            break;
        }
        if deg(&r) == 0 {
            // v-free common divisor of primitive inputs must be trivial
            return vec![Poly::one(nvars)];
        }
        let div = &g * &h.pow(delta);
        u = w;
        w = r.iter().map(|c| c.div_exact(&div).expect("subresultant division is exact")).collect();
        g = u[deg(&u)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h-update is exact"),
        };
    }
    let content = gcd_list(&w);
    let mut pp: Vec<Poly> = w.iter().map(|c| c.div_exact(&content).expect("content divides")).collect();
    trim(&mut pp);
    pp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, default_var_names, fmt_poly};

    fn x(i: usize) -> Poly {
        Poly::var(2, i)
    }

    #[test]
    fn unit_argument() {
        let d = &(&Poly::var(4, 0) * &Poly::var(4, 3)) - &(&Poly::var(4, 1) * &Poly::var(4, 2));
        let g = gcd_poly(&d, &Poly::one(4)).unwrap();
        assert_eq!(g, Poly::one(4));
    }

    #[test]
    fn distinct_variables_are_coprime() {
        let g = gcd_poly(&Poly::var(4, 1), &Poly::var(4, 2)).unwrap();
        assert_eq!(g, Poly::one(4));
    }

    #[test]
    fn both_zero_is_an_error() {
        assert!(gcd_poly(&Poly::zero(2), &Poly::zero(2)).is_err());
    }

    /// Brute-force oracle: search degree-1 factors with small integer
    /// coefficients by exact division.
    fn linear_factors(p: &Poly) -> Vec<Poly> {
        let mut found = Vec::new();
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let cand = &(&x(0).scale(&coeff_int(a)) + &x(1).scale(&coeff_int(b)))
                        + &Poly::constant(2, coeff_int(c));
                    if p.div_exact(&cand).is_some() {
                        found.push(cand);
                    }
                }
            }
        }
        found
    }

    #[test]
    fn difference_and_square_share_one_factor() {
        // gcd(x1^2 - x2^2, x1^2 + 2 x1 x2 + x2^2) = x1 + x2
        let f = &x(0).pow(2) - &x(1).pow(2);
        let g = (&x(0) + &x(1)).pow(2);
        assert_eq!(fmt_poly(&g, &default_var_names(2)), "x1^2 + 2*x1*x2 + x2^2");
        let expected = &x(0) + &x(1);
        // oracle: x1+x2 divides both, x1-x2 divides only the first
        let ff = linear_factors(&f);
        assert!(ff.iter().any(|q| q == &expected));
        assert!(ff.iter().any(|q| q == &(&x(0) - &x(1))));
        let gf = linear_factors(&g);
        assert!(gf.iter().any(|q| q == &expected));
        assert!(!gf.iter().any(|q| q == &(&x(0) - &x(1))));
        assert_eq!(gcd_poly(&f, &g).unwrap(), expected);
    }

    #[test]
    fn gcd_divides_both_inputs() {
        // (x1+x2)(x1-x2) vs (x1+x2)^2 * x2
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        let q = &(&x(0) + &x(1)).pow(2) * &x(1);
        let g = gcd_poly(&p, &q).unwrap();
        assert_eq!(g, &x(0) + &x(1));
        assert!(p.div_exact(&g).is_some());
        assert!(q.div_exact(&g).is_some());
    }

    #[test]
    fn content_is_extracted() {
        // gcd(2 x1 x2, 4 x2^2) = x2 (monic)
        let p = (&x(0) * &x(1)).scale(&coeff_int(2));
        let q = x(1).pow(2).scale(&coeff_int(4));
        assert_eq!(gcd_poly(&p, &q).unwrap(), x(1));
    }

    #[test]
    fn zero_and_nonzero() {
        let p = (&x(0) + &x(1)).scale(&coeff_int(3));
        let g = gcd_poly(&p, &Poly::zero(2)).unwrap();
        assert_eq!(g, &x(0) + &x(1));
    }

    #[test]
    fn three_variable_gcd() {
        let n = 3;
        let a = &Poly::var(n, 0) + &Poly::var(n, 2);
        let b = &(&Poly::var(n, 1) * &Poly::var(n, 1)) - &Poly::one(n);
        let p = &a * &b;
        let q = &a * &(&Poly::var(n, 1) + &Poly::one(n));
        // common factor a, and b = (x2-1)(x2+1) shares (x2+1) with q
        let g = gcd_poly(&p, &q).unwrap();
        let expected = &a * &(&Poly::var(n, 1) + &Poly::one(n));
        assert_eq!(g, expected.monic());
    }
}
