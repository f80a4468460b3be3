//! Dense matrices of polynomials: exact determinants (cofactor expansion for
//! small sizes, fraction-free Bareiss elimination above) and rank over the
//! rational-function field. Also a plain Gaussian rank for rational matrices.

use num_traits::Zero;

use crate::poly::{Coeff, Poly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    nvars: usize,
    nrows: usize,
    ncols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let ncols = rows[0].len();
        assert!(ncols > 0, "matrix needs at least one column");
        let nvars = rows[0][0].nvars();
        let mut data = Vec::with_capacity(rows.len() * ncols);
        let nrows = rows.len();
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            for p in row {
                assert_eq!(p.nvars(), nvars, "variable count mismatch");
                data.push(p);
            }
        }
        PolyMatrix { nvars, nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.ncols + c]
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    /// Submatrix keeping all rows, deleting columns `i` and `j` (0-based).
    pub fn delete_cols(&self, i: usize, j: usize) -> PolyMatrix {
        assert!(i != j && i < self.ncols && j < self.ncols, "bad column pair");
        let rows = (0..self.nrows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| *c != i && *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows)
    }

    /// Minor obtained by deleting columns `i` and `j` of an (n-2) x n matrix.
    pub fn minor_deleting_cols(&self, i: usize, j: usize) -> Poly {
        self.delete_cols(i, j).det()
    }

    pub fn det(&self) -> Poly {
        assert_eq!(self.nrows, self.ncols, "determinant of a non-square matrix");
        if self.nrows <= 4 {
            self.det_cofactor(&(0..self.nrows).collect::<Vec<_>>(), 0)
        } else {
            self.det_bareiss()
        }
    }

    fn det_cofactor(&self, cols: &[usize], row: usize) -> Poly {
        if cols.len() == 1 {
            return self.at(row, cols[0]).clone();
        }
        let mut acc = Poly::zero(self.nvars);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.at(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.det_cofactor(&rest, row + 1);
            let signed = if k % 2 == 0 { &acc + &(entry * &sub) } else { &acc - &(entry * &sub) };
            acc = signed;
        }
        acc
    }

    fn det_bareiss(&self) -> Poly {
        let k = self.nrows;
        let mut m: Vec<Vec<Poly>> = (0..k).map(|r| self.row(r).to_vec()).collect();
        let mut sign = false;
        let mut prev = Poly::one(self.nvars);
        for i in 0..k {
            if m[i][i].is_zero() {
                match (i + 1..k).find(|&r| !m[r][i].is_zero()) {
                    Some(r) => {
                        m.swap(i, r);
                        sign = !sign;
                    }
                    None => return Poly::zero(self.nvars),
                }
            }
            for r in i + 1..k {
                for c in i + 1..k {
                    let num = &(&m[i][i] * &m[r][c]) - &(&m[r][i] * &m[i][c]);
                    m[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                m[r][i] = Poly::zero(self.nvars);
            }
            prev = m[i][i].clone();
        }
        let d = m[k - 1][k - 1].clone();
        if sign {
            -&d
        } else {
            d
        }
    }

    /// Rank over the rational-function field, by fraction-free elimination.
    /// Row scalings by nonzero polynomials do not change the rank.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Poly>> = (0..self.nrows).map(|r| self.row(r).to_vec()).collect();
        let mut prev = Poly::one(self.nvars);
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.nrows {
                break;
            }
            let pivot = match (r..self.nrows).find(|&rr| !m[rr][c].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            m.swap(r, pivot);
            for rr in r + 1..self.nrows {
                for cc in c + 1..self.ncols {
                    let num = &(&m[r][c] * &m[rr][cc]) - &(&m[rr][c] * &m[r][cc]);
                    m[rr][cc] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                m[rr][c] = Poly::zero(self.nvars);
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }
}

/// Rank of a matrix of rationals, by ordinary Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Coeff>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Coeff>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let pivot = match (r..m.len()).find(|&rr| !m[rr][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(r, pivot);
        let pv = m[r][c].clone();
        for rr in r + 1..m.len() {
            if m[rr][c].is_zero() {
                continue;
            }
            let f = &m[rr][c] / &pv;
            for cc in c..ncols {
                let sub = &m[r][cc] * &f;
                m[rr][cc] = &m[rr][cc] - &sub;
            }
        }
        r += 1;
    }
    r
}
