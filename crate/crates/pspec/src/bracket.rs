//! Construction of the Poisson structure from the (s_i, t_i) data and the
//! bracket operations built on it.
//!
//! The structure stores the (n-2) x n matrix E whose i-th row is
//! t_i * grad(s_i) - s_i * grad(t_i) = t_i^2 * grad(s_i / t_i). Generator
//! brackets are signed maximal minors of E,
//!
//! ```text
//! {x_i, x_j} = (-1)^(i+j-1) * E_ij      (1-based i < j)
//! ```
//!
//! where E_ij deletes columns i and j, and general brackets extend this as a
//! biderivation. The n x n determinant route (rows grad f, grad g, rows of E)
//! is kept as an independent cross-check.

use std::fmt;

use num_traits::One;

use crate::error::Error;
use crate::matrix::PolyMatrix;
use crate::poly::{default_var_names, gcd_poly, Poly};
use crate::Result;

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// Quotient of polynomials kept in lowest terms, denominator monic under the
/// canonical order and never zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc { den: Poly::one(num.nvars()), num });
        }
        let g = gcd_poly(&num, &den).expect("nonzero inputs");
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading_coeff();
        let inv = num_rational::BigRational::one() / lc;
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let den = Poly::one(p.nvars());
        RatFunc { num: p, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// t^2 * grad(num/den) = den * grad(num) - num * grad(den), a polynomial row.
    pub fn scaled_gradient(&self) -> Vec<Poly> {
        (0..self.nvars())
            .map(|i| &(&self.den * &self.num.differentiate(i)) - &(&self.num * &self.den.differentiate(i)))
            .collect()
    }

    pub fn to_canonical_string(&self, names: &[String]) -> String {
        let num_s = crate::poly::fmt_poly(&self.num, names);
        if self.den.is_constant() {
            // den is monic, hence exactly 1
            return num_s;
        }
        let den_s = crate::poly::fmt_poly(&self.den, names);
        let wrap = |p: &Poly, s: String| if p.num_terms() > 1 { format!("({s})") } else { s };
        format!("{}/{}", wrap(&self.num, num_s), wrap(&self.den, den_s))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string(&default_var_names(self.nvars())))
    }
}

// ---------------------------------------------------------------------------
// Poisson structures
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct StructureData {
    pairs: Vec<(Poly, Poly)>,
    e: PolyMatrix,
}

/// A Poisson bracket on Q[x_1..x_n] determined by n-2 coprime pairs
/// (s_i, t_i). The full generator bracket table is computed eagerly at build
/// time; afterwards the structure is immutable and all reads are lock-free.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    nvars: usize,
    var_names: Vec<String>,
    data: Option<StructureData>,
    /// upper-triangular, row-major: entry for (i, j), i < j
    table: Vec<Poly>,
}

impl PoissonStructure {
    /// Build from pairs with default variable names x1..xn.
    pub fn build(nvars: usize, pairs: Vec<(Poly, Poly)>) -> Result<PoissonStructure> {
        Self::build_named(default_var_names(nvars), pairs)
    }

    pub fn build_named(var_names: Vec<String>, pairs: Vec<(Poly, Poly)>) -> Result<PoissonStructure> {
        let nvars = var_names.len();
        if nvars < 3 {
            return Err(Error::TooFewVariables(nvars));
        }
        if pairs.len() != nvars - 2 {
            return Err(Error::PairCount { nvars, expected: nvars - 2, got: pairs.len() });
        }
        for (index, (s, t)) in pairs.iter().enumerate() {
            assert_eq!(s.nvars(), nvars, "variable count mismatch in pair {index}");
            assert_eq!(t.nvars(), nvars, "variable count mismatch in pair {index}");
            if t.is_zero() {
                return Err(Error::ZeroT { index: index + 1 });
            }
            let g = gcd_poly(s, t).expect("t nonzero");
            if !g.is_constant() {
                return Err(Error::NotCoprime { index: index + 1, factor: crate::poly::fmt_poly(&g, &var_names) });
            }
        }
        let rows: Vec<Vec<Poly>> = pairs
            .iter()
            .map(|(s, t)| {
                (0..nvars)
                    .map(|j| &(t * &s.differentiate(j)) - &(s * &t.differentiate(j)))
                    .collect()
            })
            .collect();
        let e = PolyMatrix::from_rows(rows);
        let mut table = Vec::with_capacity(nvars * (nvars - 1) / 2);
        for i in 0..nvars {
            for j in i + 1..nvars {
                let minor = e.minor_deleting_cols(i, j);
                // (-1)^(i+j-1) with 1-based indices is (-1)^(i+j+1) 0-based
                let entry = if (i + j + 1) % 2 == 0 { minor } else { -&minor };
                table.push(entry);
            }
        }
        Ok(PoissonStructure { nvars, var_names, data: Some(StructureData { pairs, e }), table })
    }

    /// Test-only escape hatch: a structure given directly by an antisymmetric
    /// bracket table, bypassing the (s, t) construction entirely. Such a
    /// structure is unvalidated (the Jacobi identity may fail) and supports
    /// only the table-driven operations; `pairs`/`e_matrix` panic on it.
    pub fn raw_from_table(nvars: usize, entries: Vec<((usize, usize), Poly)>) -> PoissonStructure {
        assert!(nvars >= 2);
        let mut table = vec![Poly::zero(nvars); nvars * (nvars - 1) / 2];
        for ((i, j), p) in entries {
            assert!(i < j && j < nvars, "raw table wants entries with i < j < nvars");
            assert_eq!(p.nvars(), nvars);
            table[tri_index(nvars, i, j)] = p;
        }
        PoissonStructure { nvars, var_names: default_var_names(nvars), data: None, table }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// False only for raw-table test structures.
    pub fn is_validated(&self) -> bool {
        self.data.is_some()
    }

    pub fn pairs(&self) -> &[(Poly, Poly)] {
        &self.data.as_ref().expect("raw-table structure has no (s, t) pairs").pairs
    }

    pub fn e_matrix(&self) -> &PolyMatrix {
        &self.data.as_ref().expect("raw-table structure has no E matrix").e
    }

    /// The rational parameters f_i = s_i / t_i.
    pub fn rational_parameters(&self) -> Vec<RatFunc> {
        self.pairs()
            .iter()
            .map(|(s, t)| RatFunc::new(s.clone(), t.clone()).expect("t nonzero"))
            .collect()
    }

    /// {x_i, x_j}, read antisymmetrically from the cached table (0-based).
    pub fn generator_bracket(&self, i: usize, j: usize) -> Poly {
        assert!(i < self.nvars && j < self.nvars, "generator index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Poly::zero(self.nvars),
            std::cmp::Ordering::Less => self.table[tri_index(self.nvars, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.table[tri_index(self.nvars, j, i)],
        }
    }

    pub fn table_entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        let n = self.nvars;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, &self.table[tri_index(n, i, j)])))
    }

    pub fn table_is_zero(&self) -> bool {
        self.table.iter().all(Poly::is_zero)
    }

    /// {f, g} by biderivation extension of the generator table.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        assert_eq!(g.nvars(), self.nvars, "variable count mismatch");
        let df = f.gradient();
        let dg = g.gradient();
        let mut acc = Poly::zero(self.nvars);
        for (i, j, entry) in self.table_entries() {
            if entry.is_zero() {
                continue;
            }
            let coeff = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            if !coeff.is_zero() {
                acc = &acc + &(&coeff * entry);
            }
        }
        acc
    }

    /// {f, g} as det J, where J stacks grad f, grad g and the rows of E.
    /// Must equal [`Self::bracket`]; this is the self-consistency oracle.
    pub fn bracket_det_crosscheck(&self, f: &Poly, g: &Poly) -> Poly {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        assert_eq!(g.nvars(), self.nvars, "variable count mismatch");
        let e = self.e_matrix();
        let mut rows = vec![f.gradient(), g.gradient()];
        for r in 0..e.nrows() {
            rows.push(e.row(r).to_vec());
        }
        PolyMatrix::from_rows(rows).det()
    }

    /// Bracket on the rational function field, by the quotient rule:
    /// {p/q, r/w} = (q({p,r}w - r{p,w}) - p({q,r}w - r{q,w})) / (q^2 w^2).
    pub fn bracket_ratfunc(&self, lhs: &RatFunc, rhs: &RatFunc) -> RatFunc {
        let (p, q) = (lhs.num(), lhs.den());
        let (r, w) = (rhs.num(), rhs.den());
        let part1 = &(&self.bracket(p, r) * w) - &(r * &self.bracket(p, w));
        let part2 = &(&self.bracket(q, r) * w) - &(r * &self.bracket(q, w));
        let num = &(q * &part1) - &(p * &part2);
        let den = &(q * q) * &(w * w);
        RatFunc::new(num, den).expect("denominators nonzero")
    }

    /// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}. Zero for every structure built from
    /// (s, t) pairs; may be nonzero for raw-table structures.
    pub fn jacobiator(&self, f: &Poly, g: &Poly, h: &Poly) -> Poly {
        let a = self.bracket(f, &self.bracket(g, h));
        let b = self.bracket(g, &self.bracket(h, f));
        let c = self.bracket(h, &self.bracket(f, g));
        &(&a + &b) + &c
    }
}

fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

// ---------------------------------------------------------------------------
// Free-standing checks
// ---------------------------------------------------------------------------

/// Three-term Plücker combination M_ij M_kl - M_ik M_jl + M_jk M_il of
/// deleted-column minors of an (n-2) x n matrix. Identically zero for every
/// matrix; columns are 0-based and must be strictly increasing.
pub fn plucker_minors_check(m: &PolyMatrix, i: usize, j: usize, k: usize, l: usize) -> Poly {
    assert!(i < j && j < k && k < l && l < m.ncols(), "column indices must be strictly increasing");
    let m_ij = m.minor_deleting_cols(i, j);
    let m_kl = m.minor_deleting_cols(k, l);
    let m_ik = m.minor_deleting_cols(i, k);
    let m_jl = m.minor_deleting_cols(j, l);
    let m_jk = m.minor_deleting_cols(j, k);
    let m_il = m.minor_deleting_cols(i, l);
    &(&(&m_ij * &m_kl) - &(&m_ik * &m_jl)) + &(&m_jk * &m_il)
}

/// Rank over the rational-function field of the matrix whose rows are
/// t_i^2 grad(s_i/t_i); row scaling by the nonzero t_i^2 preserves rank, so
/// the inputs are algebraically dependent iff the rank is below their count
/// (the characteristic-zero Jacobian criterion).
pub fn jacobian_rank(fs: &[RatFunc]) -> usize {
    assert!(!fs.is_empty(), "empty sequence");
    let rows: Vec<Vec<Poly>> = fs.iter().map(RatFunc::scaled_gradient).collect();
    PolyMatrix::from_rows(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{coeff_int, coeff_ratio, Coeff};
    use crate::testfix::{detprod, qmat, rand_poly, sumratio, symm};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(i: usize) -> Poly {
        Poly::var(4, i)
    }

    fn table_strings(s: &PoissonStructure) -> Vec<String> {
        s.table_entries().map(|(_, _, p)| p.to_string()).collect()
    }

    #[test]
    fn qmat_e_matrix() {
        let s = qmat();
        let e = s.e_matrix();
        let expected = [
            ["x4", "-x3", "-x2", "x1"],
            ["0", "x3", "-x2", "0"],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                assert_eq!(&e.at(r, c).to_string(), want);
            }
        }
    }

    #[test]
    fn symm_e_matrix_row_one() {
        let s = symm();
        let e = s.e_matrix();
        for c in 0..4 {
            assert_eq!(e.at(0, c), &Poly::one(4));
        }
    }

    #[test]
    fn qmat_bracket_table() {
        let s = qmat();
        assert_eq!(
            table_strings(&s),
            vec!["x1*x2", "x1*x3", "2*x2*x3", "0", "x2*x4", "x3*x4"]
        );
    }

    #[test]
    fn symm_bracket_table() {
        let s = symm();
        assert_eq!(
            table_strings(&s),
            vec!["x3 - x4", "-x2 + x4", "x2 - x3", "x1 - x4", "-x1 + x3", "x1 - x2"]
        );
    }

    #[test]
    fn sumratio_bracket_table_is_multiples_of_s1() {
        let s = sumratio();
        let s1 = &(&(&x(0) + &x(1)) + &x(2)) + &x(3);
        let signs = [1i64, -1, 0, 0, 1, -1];
        for ((_, _, entry), sign) in s.table_entries().zip(signs) {
            assert_eq!(entry, &s1.scale(&coeff_int(sign)));
        }
    }

    #[test]
    fn coprimality_is_enforced() {
        let err = PoissonStructure::build(4, vec![(x(1), x(1)), (x(1), Poly::one(4))]);
        match err {
            Err(Error::NotCoprime { index: 1, .. }) => {}
            other => panic!("expected coprimality error, got {other:?}"),
        }
    }

    #[test]
    fn generator_bracket_is_antisymmetric() {
        let s = qmat();
        for i in 0..4 {
            assert!(s.generator_bracket(i, i).is_zero());
            for j in 0..4 {
                let lhs = s.generator_bracket(i, j);
                let rhs = -&s.generator_bracket(j, i);
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(s.generator_bracket(0, 3).to_string(), "2*x2*x3");
        assert!(s.generator_bracket(1, 2).is_zero());
        assert_eq!(symm().generator_bracket(0, 1).to_string(), "x3 - x4");
    }

    #[test]
    fn bracket_by_leibniz_expansion() {
        let s = qmat();
        // {x1, x2 x3} = x2 {x1, x3} + x3 {x1, x2} = 2 x1 x2 x3
        let lhs = s.bracket(&x(0), &(&x(1) * &x(2)));
        let expected = (&(&x(0) * &x(1)) * &x(2)).scale(&coeff_int(2));
        assert_eq!(lhs, expected);
        // the determinant s1 is Poisson central
        let d = &(&x(0) * &x(3)) - &(&x(1) * &x(2));
        assert!(s.bracket(&d, &x(1)).is_zero());
        for j in 0..4 {
            assert!(s.bracket(&d, &x(j)).is_zero());
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_leibniz_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let s = qmat();
        for _ in 0..25 {
            let f = rand_poly(&mut rng, 4, 3);
            let g = rand_poly(&mut rng, 4, 3);
            let h = rand_poly(&mut rng, 4, 2);
            assert!(s.bracket(&f, &f).is_zero());
            assert_eq!(s.bracket(&f, &g), -&s.bracket(&g, &f));
            let lhs = s.bracket(&f, &(&g * &h));
            let rhs = &(&g * &s.bracket(&f, &h)) + &(&h * &s.bracket(&f, &g));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn det_crosscheck_matches_known_entries() {
        let s = qmat();
        assert_eq!(s.bracket_det_crosscheck(&x(0), &x(3)).to_string(), "2*x2*x3");
        assert!(s.bracket_det_crosscheck(&x(1), &x(1)).is_zero());
        assert_eq!(symm().bracket_det_crosscheck(&x(2), &x(3)).to_string(), "x1 - x2");
    }

    #[test]
    fn det_crosscheck_agrees_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for s in [qmat(), symm(), detprod(), sumratio()] {
            for _ in 0..20 {
                let f = rand_poly(&mut rng, 4, 3);
                let g = rand_poly(&mut rng, 4, 3);
                assert_eq!(s.bracket(&f, &g), s.bracket_det_crosscheck(&f, &g));
            }
        }
    }

    #[test]
    fn ratfunc_brackets() {
        let s = qmat();
        // {x2/x3, x1} = 0
        let f = RatFunc::new(x(1), x(2)).unwrap();
        let g = RatFunc::from_poly(x(0));
        assert!(s.bracket_ratfunc(&f, &g).is_zero());
        // {F, constant} = 0
        let c = RatFunc::from_poly(Poly::constant(4, coeff_ratio(5, 3)));
        assert!(s.bracket_ratfunc(&f, &c).is_zero());
        // centrality of s1/t1
        let f1 = RatFunc::new(&(&x(0) * &x(3)) - &(&x(1) * &x(2)), Poly::one(4)).unwrap();
        assert!(s.bracket_ratfunc(&f1, &RatFunc::from_poly(x(3))).is_zero());
    }

    #[test]
    fn rational_parameters_are_central() {
        for s in [qmat(), symm(), detprod(), sumratio()] {
            for f in s.rational_parameters() {
                for j in 0..4 {
                    let b = s.bracket_ratfunc(&f, &RatFunc::from_poly(Poly::var(4, j)));
                    assert!(b.is_zero(), "parameter {f} not central against x{}", j + 1);
                }
            }
        }
    }

    #[test]
    fn jacobiator_vanishes_on_built_structures() {
        for s in [qmat(), symm(), detprod(), sumratio()] {
            for i in 0..4 {
                for j in i + 1..4 {
                    for k in j + 1..4 {
                        let jac = s.jacobiator(&x(i), &x(j), &x(k));
                        assert!(jac.is_zero(), "jacobiator({i},{j},{k}) != 0");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobiator_detects_a_non_poisson_raw_table() {
        // n=3, {x1,x2} = x2^2, {x1,x3} = 0, {x2,x3} = x1
        let e = |i: usize| Poly::var(3, i);
        let s = PoissonStructure::raw_from_table(
            3,
            vec![((0, 1), e(1).pow(2)), ((1, 2), e(0))],
        );
        assert!(!s.is_validated());
        let jac = s.jacobiator(&e(0), &e(1), &e(2));
        let expected = (&e(0) * &e(1)).scale(&coeff_int(-2));
        assert_eq!(jac, expected);
    }

    #[test]
    fn plucker_on_qmat_e_matrix() {
        let s = qmat();
        let e = s.e_matrix();
        assert_eq!(e.minor_deleting_cols(0, 1), &x(0) * &x(1));
        assert_eq!(e.minor_deleting_cols(1, 2), Poly::zero(4));
        assert!(plucker_minors_check(e, 0, 1, 2, 3).is_zero());
    }

    #[test]
    fn plucker_on_matrix_with_equal_rows() {
        let row: Vec<Poly> = (0..4).map(x).collect();
        let m = PolyMatrix::from_rows(vec![row.clone(), row]);
        assert!(plucker_minors_check(&m, 0, 1, 2, 3).is_zero());
    }

    #[test]
    fn plucker_on_random_rational_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            // 2x4 rational-entry matrices, constant polynomials
            let rows: Vec<Vec<Poly>> = (0..2)
                .map(|_| {
                    (0..4)
                        .map(|_| Poly::constant(4, Coeff::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())))
                        .collect()
                })
                .collect();
            let m = PolyMatrix::from_rows(rows);
            assert!(plucker_minors_check(&m, 0, 1, 2, 3).is_zero());
        }
        // and polynomial-entry 3x5 matrices
        for _ in 0..5 {
            let rows: Vec<Vec<Poly>> =
                (0..3).map(|_| (0..5).map(|_| rand_poly(&mut rng, 5, 2)).collect()).collect();
            let m = PolyMatrix::from_rows(rows);
            for (i, j, k, l) in [(0, 1, 2, 3), (0, 1, 2, 4), (0, 2, 3, 4), (1, 2, 3, 4)] {
                assert!(plucker_minors_check(&m, i, j, k, l).is_zero());
            }
        }
    }

    #[test]
    fn jacobian_rank_examples() {
        let s = qmat();
        assert_eq!(jacobian_rank(&s.rational_parameters()), 2);
        assert_eq!(jacobian_rank(&symm().rational_parameters()), 2);
        // (x1, x1^2) has proportional gradients
        let dep = vec![RatFunc::from_poly(x(0)), RatFunc::from_poly(x(0).pow(2))];
        assert_eq!(jacobian_rank(&dep), 1);
    }

    #[test]
    fn dependent_data_yields_zero_table() {
        let s = PoissonStructure::build(4, vec![(x(0), Poly::one(4)), (x(0).pow(2), Poly::one(4))]).unwrap();
        assert!(s.table_is_zero());
        assert_eq!(jacobian_rank(&s.rational_parameters()), 1);
    }

    #[test]
    fn e_rows_match_pencil_gradient_identity() {
        // lambda * (t grad s - s grad t) = t grad f - f grad t for f = lambda s - mu t
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for s in [qmat(), symm(), detprod(), sumratio()] {
            for (idx, (si, ti)) in s.pairs().iter().enumerate() {
                let lambda = coeff_int(rng.gen_range(1i64..=5));
                let mu = coeff_int(rng.gen_range(-5i64..=5));
                let f = &si.scale(&lambda) - &ti.scale(&mu);
                for j in 0..4 {
                    let lhs = s.e_matrix().at(idx, j).scale(&lambda);
                    let rhs = &(ti * &f.differentiate(j)) - &(&f * &ti.differentiate(j));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn n5_structure_identities() {
        // three unit-denominator pairs over five variables; the crosscheck
        // runs through the 5x5 fraction-free determinant
        let n = 5;
        let v = |i: usize| Poly::var(n, i);
        let one = Poly::one(n);
        let s = PoissonStructure::build(
            n,
            vec![(&v(0) * &v(1), one.clone()), (&v(2) + &v(3), one.clone()), (v(4), one)],
        )
        .unwrap();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    assert!(s.jacobiator(&v(i), &v(j), &v(k)).is_zero());
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for _ in 0..10 {
            let f = rand_poly(&mut rng, n, 2);
            let g = rand_poly(&mut rng, n, 2);
            assert_eq!(s.bracket(&f, &g), s.bracket_det_crosscheck(&f, &g));
        }
        for fi in s.rational_parameters() {
            for j in 0..n {
                assert!(s.bracket_ratfunc(&fi, &RatFunc::from_poly(v(j))).is_zero());
            }
        }
    }

    #[test]
    fn n3_structure_brackets() {
        // {f, g} = t^2 Jac(f, g, s/t) with s = x1 x2, t = x3
        let n = 3;
        let v = |i: usize| Poly::var(n, i);
        let s = PoissonStructure::build(n, vec![(&v(0) * &v(1), v(2))]).unwrap();
        // E row: t grad s - s grad t = (x2 x3, x1 x3, -x1 x2)
        let e = s.e_matrix();
        assert_eq!(e.at(0, 0), &(&v(1) * &v(2)));
        assert_eq!(e.at(0, 2), &-&(&v(0) * &v(1)));
        // {x1, x2} = +E_12 = -x1 x2 ... minor deleting cols 0,1 leaves column 3
        assert_eq!(s.generator_bracket(0, 1), -&(&v(0) * &v(1)));
        assert_eq!(s.generator_bracket(0, 2), -&(&v(0) * &v(2)));
        assert_eq!(s.generator_bracket(1, 2), &v(1) * &v(2));
        assert!(s.jacobiator(&v(0), &v(1), &v(2)).is_zero());
    }
}
