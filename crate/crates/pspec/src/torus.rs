//! Scaling-torus actions x_i -> h_i x_i: semi-invariance of the structure
//! data, the weight product criterion for acting as a Poisson automorphism,
//! and membership in the group H of elements scaling every minor E_ij by
//! h_i h_j.

use num_traits::{One, Zero};

use crate::bracket::PoissonStructure;
use crate::error::Error;
use crate::poly::{Coeff, Poly};
use crate::Result;

/// A point of the n-torus: one nonzero scalar per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    components: Vec<Coeff>,
}

impl TorusElement {
    pub fn new(components: Vec<Coeff>) -> Result<TorusElement> {
        for (i, c) in components.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::Input(format!("torus component {} is zero", i + 1)));
            }
        }
        Ok(TorusElement { components })
    }

    pub fn identity(n: usize) -> TorusElement {
        TorusElement { components: vec![Coeff::one(); n] }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Coeff] {
        &self.components
    }

    pub fn component_product(&self) -> Coeff {
        self.components.iter().fold(Coeff::one(), |acc, c| acc * c)
    }

    pub fn compose(&self, other: &TorusElement) -> TorusElement {
        assert_eq!(self.len(), other.len());
        TorusElement {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a * b).collect(),
        }
    }
}

/// f(h_1 x_1, ..., h_n x_n): each monomial picks up the product of component
/// powers. A ring automorphism for every torus element.
pub fn act(h: &TorusElement, f: &Poly) -> Poly {
    assert_eq!(h.len(), f.nvars(), "torus element length mismatch");
    let terms = f.terms().map(|(m, c)| {
        let mut scaled = c.clone();
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                scaled *= num_traits::pow::pow(h.components[i].clone(), e as usize);
            }
        }
        (m.clone(), scaled)
    });
    Poly::from_terms(f.nvars(), terms.collect::<Vec<_>>())
}

/// Some(c) iff f = c * g as polynomials. Zero g forces zero f.
pub fn scalar_ratio(f: &Poly, g: &Poly) -> Option<Coeff> {
    if g.is_zero() {
        return if f.is_zero() { Some(Coeff::one()) } else { None };
    }
    let (m, gc) = g.leading().unwrap();
    let c = f.coeff_of(m) / gc;
    if f == &g.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// Semi-invariance data of a torus element against the structure pairs:
/// h.s_i = sigma_i s_i and h.t_i = tau_i t_i when these scalars exist. The
/// element lies in H' iff every pair is semi-invariant, and then it acts as a
/// Poisson automorphism iff rho = sigma_1 tau_1 ... sigma_{n-2} tau_{n-2}
/// equals the product h_1 ... h_n.
#[derive(Clone, Debug)]
pub struct WeightReport {
    pub sigma: Vec<Option<Coeff>>,
    pub tau: Vec<Option<Coeff>>,
    pub is_in_hprime: bool,
    /// h_1 h_2 ... h_n
    pub product: Coeff,
    /// sigma_1 tau_1 ... sigma_{n-2} tau_{n-2}, when in H'
    pub rho: Option<Coeff>,
    pub rho_criterion: Option<bool>,
}

pub fn weight_report(s: &PoissonStructure, h: &TorusElement) -> WeightReport {
    assert_eq!(h.len(), s.nvars(), "torus element length mismatch");
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    for (si, ti) in s.pairs() {
        sigma.push(scalar_ratio(&act(h, si), si));
        tau.push(scalar_ratio(&act(h, ti), ti));
    }
    let is_in_hprime = sigma.iter().chain(&tau).all(Option::is_some);
    let product = h.component_product();
    let rho = if is_in_hprime {
        let mut r = Coeff::one();
        for (sg, tu) in sigma.iter().zip(&tau) {
            r *= sg.as_ref().unwrap();
            r *= tu.as_ref().unwrap();
        }
        Some(r)
    } else {
        None
    };
    let rho_criterion = rho.as_ref().map(|r| *r == product);
    WeightReport { sigma, tau, is_in_hprime, product, rho, rho_criterion }
}

/// Direct check that h acts as a Poisson automorphism: h.{x_i, x_j} must
/// equal h_i h_j {x_i, x_j} for all pairs. Agrees with the rho criterion on
/// every element of H'.
pub fn poisson_auto_check(s: &PoissonStructure, h: &TorusElement) -> bool {
    assert_eq!(h.len(), s.nvars(), "torus element length mismatch");
    s.table_entries().all(|(i, j, entry)| {
        let weight = &h.components[i] * &h.components[j];
        act(h, entry) == entry.scale(&weight)
    })
}

/// Membership in H: every deleted-columns minor E_ij must be semi-invariant
/// of weight h_i h_j. Membership implies acting as a Poisson automorphism.
pub fn h_group_check(s: &PoissonStructure, h: &TorusElement) -> bool {
    assert_eq!(h.len(), s.nvars(), "torus element length mismatch");
    let e = s.e_matrix();
    for i in 0..s.nvars() {
        for j in i + 1..s.nvars() {
            let minor = e.minor_deleting_cols(i, j);
            let weight = &h.components[i] * &h.components[j];
            if act(h, &minor) != minor.scale(&weight) {
                return false;
            }
        }
    }
    true
}

/// Generator check for a substitution endomorphism x_i -> images\[i\]:
/// theta{x_i, x_j} = {theta x_i, theta x_j} (or the swapped right-hand side
/// for the anti variant). Covers signed-permutation symmetries.
pub fn substitution_poisson_check(s: &PoissonStructure, images: &[Poly], anti: bool) -> bool {
    assert_eq!(images.len(), s.nvars(), "one image per variable");
    s.table_entries().all(|(i, j, entry)| {
        let lhs = entry.substitute(images);
        let rhs = if anti {
            s.bracket(&images[j], &images[i])
        } else {
            s.bracket(&images[i], &images[j])
        };
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, coeff_ratio};
    use crate::testfix::{all_structures, qmat, rand_nonzero_coeff, symm, x};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h(vals: [i64; 4]) -> TorusElement {
        TorusElement::new(vals.into_iter().map(coeff_int).collect()).unwrap()
    }

    #[test]
    fn action_scales_monomials() {
        let t = h([2, 3, 4, 6]);
        let p = &x(0) * &x(3);
        assert_eq!(act(&t, &p), p.scale(&coeff_int(12)));
        let d = &(&x(0) * &x(3)) - &(&x(1) * &x(2));
        assert_eq!(act(&t, &d), d.scale(&coeff_int(12)));
        assert_eq!(act(&TorusElement::identity(4), &d), d);
    }

    #[test]
    fn zero_component_is_rejected() {
        assert!(TorusElement::new(vec![coeff_int(1), coeff_int(0)]).is_err());
    }

    #[test]
    fn qmat_weight_report() {
        let s = qmat();
        let r = weight_report(&s, &h([2, 3, 4, 6]));
        assert!(r.is_in_hprime);
        let sigma: Vec<Coeff> = r.sigma.iter().map(|c| c.clone().unwrap()).collect();
        let tau: Vec<Coeff> = r.tau.iter().map(|c| c.clone().unwrap()).collect();
        assert_eq!(sigma, vec![coeff_int(12), coeff_int(3)]);
        assert_eq!(tau, vec![coeff_int(1), coeff_int(4)]);
        assert_eq!(r.rho, Some(coeff_int(144)));
        assert_eq!(r.product, coeff_int(144));
        assert_eq!(r.rho_criterion, Some(true));
    }

    #[test]
    fn symm_diagonal_fails_the_criterion() {
        let s = symm();
        let r = weight_report(&s, &h([2, 2, 2, 2]));
        assert!(r.is_in_hprime);
        assert_eq!(r.rho, Some(coeff_int(8)));
        assert_eq!(r.product, coeff_int(16));
        assert_eq!(r.rho_criterion, Some(false));
        assert!(!poisson_auto_check(&s, &h([2, 2, 2, 2])));
    }

    #[test]
    fn non_semi_invariant_element() {
        let s = qmat();
        let r = weight_report(&s, &h([1, 1, 1, 2]));
        assert!(!r.is_in_hprime);
        assert!(r.sigma[0].is_none());
        assert!(r.rho.is_none());
    }

    #[test]
    fn poisson_auto_examples() {
        let s = qmat();
        assert!(poisson_auto_check(&s, &h([2, 3, 4, 6])));
        assert!(poisson_auto_check(&s, &TorusElement::identity(4)));
        assert!(poisson_auto_check(&symm(), &TorusElement::identity(4)));
    }

    #[test]
    fn h_group_examples() {
        let s = qmat();
        assert!(h_group_check(&s, &h([2, 3, 4, 6])));
        assert!(!h_group_check(&s, &h([2, 3, 4, 5])));
        assert!(h_group_check(&s, &TorusElement::identity(4)));
    }

    #[test]
    fn h_membership_implies_poisson_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for (_, s) in all_structures() {
            for _ in 0..20 {
                let t = TorusElement::new((0..4).map(|_| rand_nonzero_coeff(&mut rng)).collect()).unwrap();
                if h_group_check(&s, &t) {
                    assert!(poisson_auto_check(&s, &t));
                }
            }
        }
    }

    #[test]
    fn rho_criterion_matches_direct_check_on_hprime() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let s = qmat();
        for _ in 0..50 {
            // H' of the quantum matrices structure: h1 h4 = h2 h3
            let a = rand_nonzero_coeff(&mut rng);
            let b = rand_nonzero_coeff(&mut rng);
            let c = rand_nonzero_coeff(&mut rng);
            let d = &(&b * &c) / &a;
            let t = TorusElement::new(vec![a, b, c, d]).unwrap();
            let r = weight_report(&s, &t);
            assert!(r.is_in_hprime);
            assert_eq!(r.rho, Some(r.product.clone()));
            assert_eq!(r.rho_criterion, Some(poisson_auto_check(&s, &t)));
        }
        let sy = symm();
        for _ in 0..50 {
            let c = rand_nonzero_coeff(&mut rng);
            let t = TorusElement::new(vec![c.clone(), c.clone(), c.clone(), c]).unwrap();
            let r = weight_report(&sy, &t);
            assert!(r.is_in_hprime);
            assert_eq!(r.rho_criterion, Some(poisson_auto_check(&sy, &t)));
        }
    }

    #[test]
    fn action_is_functorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let f = &(&x(0) * &x(1)).scale(&coeff_ratio(3, 2)) + &x(3).pow(2);
        for _ in 0..10 {
            let a = TorusElement::new((0..4).map(|_| rand_nonzero_coeff(&mut rng)).collect()).unwrap();
            let b = TorusElement::new((0..4).map(|_| rand_nonzero_coeff(&mut rng)).collect()).unwrap();
            assert_eq!(act(&a, &act(&b, &f)), act(&a.compose(&b), &f));
        }
    }

    #[test]
    fn signed_permutations_preserve_the_symmetric_bracket() {
        let s = symm();
        // transposition (1 2) with a global sign
        let theta12 = vec![-&x(1), -&x(0), -&x(2), -&x(3)];
        assert!(substitution_poisson_check(&s, &theta12, false));
        // four-cycle (1 2 3 4) with a global sign
        let theta1234 = vec![-&x(1), -&x(2), -&x(3), -&x(0)];
        assert!(substitution_poisson_check(&s, &theta1234, false));
        // the unsigned odd permutation is an anti-automorphism instead
        let phi12 = vec![x(1), x(0), x(2), x(3)];
        assert!(!substitution_poisson_check(&s, &phi12, false));
        assert!(substitution_poisson_check(&s, &phi12, true));
    }
}
