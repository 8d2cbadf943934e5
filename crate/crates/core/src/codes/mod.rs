//! Cyclic and explicit linear codes, minimum-distance engines and the
//! extended self-dual check.

mod distance;
mod extended;

pub use distance::{
    min_distance, min_distance_with, weight_distribution, DistanceOptions, Engine, Method,
    WeightReport, DEFAULT_BUDGET, EXHAUSTIVE_LIMIT,
};
pub use extended::{extend_self_dual, ExtendedCode, SelfDualVerdict};

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};
use crate::poly::Poly;

/// A linear code given by explicit generator rows (not necessarily
/// independent rows are rejected at construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldRef,
    n: usize,
    rows: Vec<Vec<Elem>>,
}

impl LinearCode {
    /// `rows` must be linearly independent vectors of equal length.
    pub fn new(field: &FieldRef, rows: Vec<Vec<Elem>>) -> Result<LinearCode> {
        let n = rows.first().map_or(0, |r| r.len());
        if rows.is_empty() || n == 0 {
            return Err(Error::DegenerateCode("no generator rows".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        let code = LinearCode {
            field: field.clone(),
            n,
            rows,
        };
        if rank(field, code.rows.clone()) != code.rows.len() {
            return Err(Error::DegenerateCode("generator rows are dependent".into()));
        }
        Ok(code)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// `message * G`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.rows.len() {
            return Err(Error::LengthMismatch {
                expected: self.rows.len(),
                got: message.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.n];
        for (row, &m) in self.rows.iter().zip(message) {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }
}

/// Rank of a matrix over a field by Gaussian elimination.
pub fn rank(field: &FieldRef, mut m: Vec<Vec<Elem>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(m[r][c]);
        let pivot_row: Vec<Elem> = m[r].iter().map(|&x| field.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        m[r] = pivot_row;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// A cyclic code of length `n` with monic generator `g | x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    g: Poly,
    k: usize,
}

impl CyclicCode {
    pub fn new(g: Poly, n: usize) -> Result<CyclicCode> {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let modulus = Poly::x_n_minus_1(g.field(), n);
        if !modulus.divisible_by(&g)? {
            return Err(Error::NotADivisor(n));
        }
        let deg = g.degree().unwrap_or(0);
        if deg >= n {
            return Err(Error::DegenerateCode(format!(
                "generator x^{n} - 1 gives the zero code"
            )));
        }
        Ok(CyclicCode { n, k: n - deg, g })
    }

    pub fn field(&self) -> &FieldRef {
        self.g.field()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    /// `(x^n - 1) / g`.
    pub fn parity_check_poly(&self) -> Poly {
        Poly::x_n_minus_1(self.field(), self.n)
            .divmod(&self.g)
            .expect("generator divides x^n - 1")
            .0
    }

    /// Rows `x^i g(x)` for `i < k`, as length-`n` vectors.
    pub fn generator_matrix(&self) -> Vec<Vec<Elem>> {
        (0..self.k)
            .map(|i| {
                let mut row = vec![Elem::ZERO; self.n];
                for (j, &c) in self.g.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect()
    }

    pub fn to_linear(&self) -> LinearCode {
        LinearCode {
            field: self.field().clone(),
            n: self.n,
            rows: self.generator_matrix(),
        }
    }

    /// `m(x) g(x)` for a message of `k` symbols.
    pub fn encode(&self, message: &[Elem]) -> Result<Poly> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: message.len(),
            });
        }
        Poly::new(self.field(), message.to_vec()).mul(&self.g)
    }

    /// Membership test: `g` divides `c mod (x^n - 1)`.
    pub fn contains(&self, c: &Poly) -> Result<bool> {
        c.mod_xn_minus_1(self.n).divisible_by(&self.g)
    }

    /// Image under the multiplier that sends root exponents `i` to `u i mod n`.
    /// Codewords map by `c(x) -> c(x^v)` with `v = u^{-1} mod n`.
    pub fn multiplier_image(&self, u: u64) -> Result<CyclicCode> {
        let n = self.n as u64;
        let v = arith::mod_inverse(u % n, n).ok_or(Error::NotCoprime { a: u, b: n })?;
        let modulus = Poly::x_n_minus_1(self.field(), self.n);
        let g = self.g.compose_power(v as usize, self.n).gcd(&modulus)?;
        CyclicCode::new(g, self.n)
    }

    /// Cyclic shift of a codeword vector, used for closure checks.
    pub fn shift_vector(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; self.n];
        for (i, &c) in v.iter().enumerate() {
            out[(i + 1) % self.n] = c;
        }
        out
    }
}
