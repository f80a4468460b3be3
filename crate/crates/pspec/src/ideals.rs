//! Decision procedures on ideals: Poisson and residually-null tests, gamma
//! membership data, pencil ideals, Poisson point classification, primitive
//! candidate analysis, and the smoothness criterion for fibers.

use num_traits::{One, Zero};

use crate::bracket::{jacobian_rank, PoissonStructure, RatFunc};
use crate::error::Error;
use crate::groebner::IdealHandle;
use crate::matrix::rational_rank;
use crate::poly::{Coeff, Poly};
use crate::Result;

// ---------------------------------------------------------------------------
// Poisson / residually null
// ---------------------------------------------------------------------------

/// An ideal is Poisson iff `{g, x_j}` lies in it for every generator g and
/// every variable x_j: hamiltonians are derivations, so closure on generators
/// against generators of the ring suffices.
pub fn is_poisson_ideal(s: &PoissonStructure, ideal: &IdealHandle) -> bool {
    assert_eq!(ideal.nvars(), s.nvars(), "variable count mismatch");
    ideal.gens().iter().all(|g| {
        (0..s.nvars()).all(|j| ideal.contains(&s.bracket(g, &Poly::var(s.nvars(), j))))
    })
}

/// The induced bracket on the quotient vanishes iff every generator bracket
/// `{x_i, x_j}` lies in the ideal.
pub fn is_residually_null(s: &PoissonStructure, ideal: &IdealHandle) -> bool {
    assert_eq!(ideal.nvars(), s.nvars(), "variable count mismatch");
    s.table_entries().all(|(_, _, entry)| ideal.contains(entry))
}

// ---------------------------------------------------------------------------
// Gamma data
// ---------------------------------------------------------------------------

/// Membership pattern of the (s_i, t_i) in an ideal: entry i is
/// (gamma_i, delta_i) with gamma_i = 0 iff s_i lies in the ideal and
/// delta_i = 0 iff t_i does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSequence {
    entries: Vec<(u8, u8)>,
}

impl GammaSequence {
    pub fn entries(&self) -> &[(u8, u8)] {
        &self.entries
    }

    /// Dense iff no entry is (0, 0).
    pub fn is_dense(&self) -> bool {
        self.entries.iter().all(|&e| e != (0, 0))
    }
}

#[derive(Clone, Debug)]
pub struct GammaData {
    pub gamma: GammaSequence,
    /// The s_i with gamma_i = 1 and t_i with delta_i = 1, in pair order.
    pub s_gamma: Vec<Poly>,
    /// v_i = s_i/t_i when delta_i = 1, else t_i/s_i; present only when dense.
    pub v_gamma: Option<Vec<RatFunc>>,
    /// Generators of the multiplicative set: same list as `s_gamma`.
    pub m_gamma_generators: Vec<Poly>,
}

pub fn gamma_of(s: &PoissonStructure, p: &IdealHandle) -> Result<GammaData> {
    assert_eq!(p.nvars(), s.nvars(), "variable count mismatch");
    if !p.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let mut entries = Vec::new();
    let mut s_gamma = Vec::new();
    for (si, ti) in s.pairs() {
        let gamma_i: u8 = if p.contains(si) { 0 } else { 1 };
        let delta_i: u8 = if p.contains(ti) { 0 } else { 1 };
        if gamma_i == 1 {
            s_gamma.push(si.clone());
        }
        if delta_i == 1 {
            s_gamma.push(ti.clone());
        }
        entries.push((gamma_i, delta_i));
    }
    let gamma = GammaSequence { entries };
    let v_gamma = if gamma.is_dense() {
        Some(
            s.pairs()
                .iter()
                .zip(gamma.entries())
                .map(|((si, ti), &(_, delta_i))| {
                    if delta_i == 1 {
                        RatFunc::new(si.clone(), ti.clone()).expect("t nonzero")
                    } else {
                        RatFunc::new(ti.clone(), si.clone()).expect("s nonzero when delta = 0 and dense")
                    }
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(GammaData { gamma, m_gamma_generators: s_gamma.clone(), s_gamma, v_gamma })
}

// ---------------------------------------------------------------------------
// Pencil ideals
// ---------------------------------------------------------------------------

/// Parameters (lambda_i, mu_i), never both zero, selecting the pencil
/// generators lambda_i s_i - mu_i t_i.
#[derive(Clone, Debug)]
pub struct PencilSpec {
    lambdas: Vec<Coeff>,
    mus: Vec<Coeff>,
}

impl PencilSpec {
    pub fn new(lambdas: Vec<Coeff>, mus: Vec<Coeff>) -> Result<PencilSpec> {
        assert_eq!(lambdas.len(), mus.len(), "parameter lists must have equal length");
        for (index, (l, m)) in lambdas.iter().zip(&mus).enumerate() {
            if l.is_zero() && m.is_zero() {
                return Err(Error::ZeroPencilPair { index: index + 1 });
            }
        }
        Ok(PencilSpec { lambdas, mus })
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn lambdas(&self) -> &[Coeff] {
        &self.lambdas
    }

    pub fn mus(&self) -> &[Coeff] {
        &self.mus
    }
}

pub fn pencil_generators(s: &PoissonStructure, spec: &PencilSpec) -> Vec<Poly> {
    assert_eq!(spec.len(), s.nvars() - 2, "one (lambda, mu) pair per structure pair");
    s.pairs()
        .iter()
        .zip(spec.lambdas().iter().zip(spec.mus()))
        .map(|((si, ti), (l, m))| &si.scale(l) - &ti.scale(m))
        .collect()
}

/// The ideal generated by the lambda_i s_i - mu_i t_i. Always a Poisson
/// ideal: each generator satisfies the same scaled-gradient identity as the
/// rows of E.
pub fn pencil_ideal(s: &PoissonStructure, spec: &PencilSpec) -> IdealHandle {
    IdealHandle::with_default_order(s.nvars(), pencil_generators(s, spec))
}

// ---------------------------------------------------------------------------
// Point classification
// ---------------------------------------------------------------------------

/// Verdicts for whether the maximal ideal at a point is Poisson. The three
/// conditions are evaluated in order: (1) some pair vanishes at p entirely;
/// else (2) the shifted generators g_i = t_i(p) s_i - s_i(p) t_i are
/// algebraically dependent; else (3) p is a singular point of the variety the
/// g_i cut out. Independently, `direct_verdict` records whether every
/// generator bracket vanishes at p; the two verdicts must agree.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    /// Smallest i (0-based) with s_i(p) = t_i(p) = 0, if any.
    pub condition1: Option<usize>,
    pub condition2: bool,
    /// Populated only when conditions 1 and 2 fail.
    pub condition3: Option<bool>,
    /// Rank of the gradient matrix of the g_i at p, when computed.
    pub gradient_rank: Option<usize>,
    pub direct_verdict: bool,
    pub final_verdict: bool,
}

pub fn classify_point(s: &PoissonStructure, point: &[Coeff]) -> ClassificationReport {
    assert_eq!(point.len(), s.nvars(), "point length mismatch");
    let direct_verdict = s.table_entries().all(|(_, _, entry)| entry.evaluate(point).is_zero());

    let values: Vec<(Coeff, Coeff)> =
        s.pairs().iter().map(|(si, ti)| (si.evaluate(point), ti.evaluate(point))).collect();
    let condition1 = values.iter().position(|(sv, tv)| sv.is_zero() && tv.is_zero());
    if let Some(i) = condition1 {
        return ClassificationReport {
            condition1: Some(i),
            condition2: false,
            condition3: None,
            gradient_rank: None,
            direct_verdict,
            final_verdict: true,
        };
    }

    // g_i = t_i(p) s_i - s_i(p) t_i vanishes at p; (t_i(p), s_i(p)) != (0, 0)
    let shifted: Vec<Poly> = s
        .pairs()
        .iter()
        .zip(&values)
        .map(|((si, ti), (sv, tv))| &si.scale(tv) - &ti.scale(sv))
        .collect();
    let expected = s.nvars() - 2;
    let symbolic_rank =
        jacobian_rank(&shifted.iter().map(|g| RatFunc::from_poly(g.clone())).collect::<Vec<_>>());
    if symbolic_rank < expected {
        return ClassificationReport {
            condition1: None,
            condition2: true,
            condition3: None,
            gradient_rank: None,
            direct_verdict,
            final_verdict: true,
        };
    }

    let rows: Vec<Vec<Coeff>> =
        shifted.iter().map(|g| g.gradient().iter().map(|d| d.evaluate(point)).collect()).collect();
    let rank = rational_rank(&rows);
    let singular = rank < expected;
    ClassificationReport {
        condition1: None,
        condition2: false,
        condition3: Some(singular),
        gradient_rank: Some(rank),
        direct_verdict,
        final_verdict: singular,
    }
}

// ---------------------------------------------------------------------------
// Primitive candidates
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CandidateReport {
    pub poisson: bool,
    pub residually_null: bool,
}

/// Checkable certificate conditions for Poisson-primitive candidates over a
/// pencil ideal. Primality and minimality of the candidate are never decided
/// here; callers must treat them as unchecked.
#[derive(Clone, Debug)]
pub struct PrimitiveReport {
    pub pencil_gens: Vec<Poly>,
    pub poisson: bool,
    pub residually_null: bool,
    pub candidate: Option<CandidateReport>,
}

impl PrimitiveReport {
    /// A residually null pencil ideal cannot be Poisson primitive.
    pub fn ruled_out(&self) -> bool {
        self.residually_null
    }
}

pub fn analyze_primitive_candidate(
    s: &PoissonStructure,
    spec: &PencilSpec,
    candidate: Option<&IdealHandle>,
) -> Result<PrimitiveReport> {
    let pencil = pencil_ideal(s, spec);
    if !pencil.is_proper() {
        return Err(Error::ImproperPencil);
    }
    let poisson = is_poisson_ideal(s, &pencil);
    let residually_null = is_residually_null(s, &pencil);
    let candidate = match candidate {
        None => None,
        Some(c) => {
            assert_eq!(c.nvars(), s.nvars(), "variable count mismatch");
            for g in pencil.gens() {
                if !c.contains(g) {
                    return Err(Error::CandidateMissesPencil {
                        generator: crate::poly::fmt_poly(g, s.var_names()),
                    });
                }
            }
            Some(CandidateReport {
                poisson: is_poisson_ideal(s, c),
                residually_null: is_residually_null(s, c),
            })
        }
    };
    Ok(PrimitiveReport { pencil_gens: pencil.gens().to_vec(), poisson, residually_null, candidate })
}

// ---------------------------------------------------------------------------
// Smoothness
// ---------------------------------------------------------------------------

/// For t_i = 1 and independent s_i: the fiber X = V(s_1 - mu_1, ...,
/// s_{n-2} - mu_{n-2}) is nonsingular iff the ideal J adding all maximal
/// minors of the Jacobian of the s_i is improper. 1 lies in J exactly when
/// the equations and minors have no common zero over the algebraic closure,
/// so deciding improperness over Q answers the complex question.
pub fn smoothness_check(s: &PoissonStructure, mus: &[Coeff]) -> Result<bool> {
    assert_eq!(mus.len(), s.nvars() - 2, "one mu per structure pair");
    for (index, (_, ti)) in s.pairs().iter().enumerate() {
        if !ti.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            return Err(Error::NonUnitT { index: index + 1 });
        }
    }
    let params = s.rational_parameters();
    let rank = jacobian_rank(&params);
    let expected = s.nvars() - 2;
    if rank < expected {
        return Err(Error::DependentParameters { rank, expected });
    }
    let mut gens: Vec<Poly> = s
        .pairs()
        .iter()
        .zip(mus)
        .map(|((si, _), mu)| si - &Poly::constant(s.nvars(), mu.clone()))
        .collect();
    let e = s.e_matrix();
    for i in 0..s.nvars() {
        for j in i + 1..s.nvars() {
            gens.push(e.minor_deleting_cols(i, j));
        }
    }
    let j_ideal = IdealHandle::with_default_order(s.nvars(), gens);
    Ok(!j_ideal.is_proper())
}
