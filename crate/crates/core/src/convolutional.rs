//! Convolutional encoders built from cyclic codes of length `nm`.
//!
//! Row `i` of `G(D)` is the `n`-way polyphase split of `x^i g(x)`: entry `j`
//! collects the coefficients of `x^(an + j)` as a polynomial in `D^a`.

use serde::Serialize;

use crate::arith::binomial;
use crate::codes::{min_distance_with, CyclicCode, DistanceOptions, LinearCode, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};
use crate::poly::{Poly, SplittingField};

/// Largest number of `k x k` minors examined when verifying an encoder.
const MINOR_LIMIT: u128 = 2_000_000;

/// `c(x) = sum_i c_i(x^n) x^i`; returns `(c_0, ..., c_{n-1})`.
pub fn phi_n_split(c: &Poly, n: usize) -> Vec<Poly> {
    let f = c.field();
    let mut parts = vec![Vec::new(); n];
    for (e, &coef) in c.coeffs().iter().enumerate() {
        let part = &mut parts[e % n];
        let a = e / n;
        if part.len() <= a {
            part.resize(a + 1, Elem::ZERO);
        }
        part[a] = coef;
    }
    parts.into_iter().map(|p| Poly::new(f, p)).collect()
}

/// Inverse of [`phi_n_split`].
pub fn phi_n_join(parts: &[Poly]) -> Result<Poly> {
    let n = parts.len();
    let f = parts
        .first()
        .map(|p| p.field().clone())
        .ok_or(Error::LengthMismatch { expected: 1, got: 0 })?;
    let len = parts
        .iter()
        .map(|p| p.coeffs().len() * n)
        .max()
        .unwrap_or(0);
    let mut out = vec![Elem::ZERO; len];
    for (i, p) in parts.iter().enumerate() {
        if p.field() != &f {
            return Err(Error::FieldMismatch);
        }
        for (a, &c) in p.coeffs().iter().enumerate() {
            out[a * n + i] = c;
        }
    }
    Ok(Poly::new(&f, out))
}

/// A `k x n` matrix over `GF(q)[D]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldRef,
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(field: &FieldRef, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let n = rows.first().map_or(0, |r| r.len());
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row.iter().any(|p| p.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(PolyMatrix {
            field: field.clone(),
            rows,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    /// `max_j deg g_ij` for each row (0 for a zero row).
    pub fn row_degrees(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|row| row.iter().filter_map(|p| p.degree()).max().unwrap_or(0))
            .collect()
    }

    /// Determinant of the square submatrix on the given columns.
    pub fn minor(&self, cols: &[usize]) -> Poly {
        let m: Vec<Vec<Poly>> = self
            .rows
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        bareiss_det(&self.field, m)
    }

    /// Every `k x k` minor, columns in lexicographic order.
    pub fn minors(&self) -> Result<Vec<Poly>> {
        let (k, n) = (self.k(), self.n());
        if k > n {
            return Ok(Vec::new());
        }
        if binomial(n as u64, k as u64) > MINOR_LIMIT {
            return Err(Error::TooLarge(format!("{k} x {k} minors of a {k} x {n} matrix")));
        }
        let mut out = Vec::new();
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            out.push(self.minor(&cols));
            let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else {
                break;
            };
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
        }
        Ok(out)
    }
}

/// Fraction-free elimination over `F[D]`; every division is exact.
fn bareiss_det(field: &FieldRef, mut m: Vec<Vec<Poly>>) -> Poly {
    let k = m.len();
    if k == 0 {
        return Poly::one(field);
    }
    let mut prev = Poly::one(field);
    let mut negate = false;
    for l in 0..k {
        if m[l][l].is_zero() {
            let Some(p) = (l + 1..k).find(|&i| !m[i][l].is_zero()) else {
                return Poly::zero(field);
            };
            m.swap(l, p);
            negate = !negate;
        }
        for i in l + 1..k {
            for j in l + 1..k {
                let a = m[l][l].mul(&m[i][j]).expect("same field");
                let b = m[i][l].mul(&m[l][j]).expect("same field");
                let num = a.sub(&b).expect("same field");
                let (quot, rem) = num.divmod(&prev).expect("nonzero pivot");
                debug_assert!(rem.is_zero(), "Bareiss division is exact");
                m[i][j] = quot;
            }
        }
        prev = m[l][l].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if negate {
        det.scale(field.neg(Elem::ONE))
    } else {
        det
    }
}

/// Root counts of `g` in each `n`-equivalence class. The class of
/// `theta^e` is `e mod m`: the roots of `x^n - lambda^t` for `t = e mod m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootClassReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub counts: Vec<usize>,
    pub limit: usize,
    pub pass: bool,
}

pub fn check_root_classes(code: &CyclicCode, n: usize, k: usize) -> Result<RootClassReport> {
    let sf = SplittingField::new(code.field(), code.len())?;
    check_root_classes_in(&sf, code, n, k)
}

/// As [`check_root_classes`] with a given splitting field of order `nm`.
pub fn check_root_classes_in(
    sf: &SplittingField,
    code: &CyclicCode,
    n: usize,
    k: usize,
) -> Result<RootClassReport> {
    let len = code.len();
    if n == 0 || len % n != 0 {
        return Err(Error::LengthMismatch {
            expected: n,
            got: len,
        });
    }
    if sf.n() != len {
        return Err(Error::LengthMismatch {
            expected: len,
            got: sf.n(),
        });
    }
    let m = len / n;
    let mut counts = vec![0; m];
    for e in sf.root_exponents(code.generator())? {
        counts[e % m] += 1;
    }
    let limit = n.saturating_sub(k);
    let pass = k >= 1 && k <= n && counts.iter().all(|&c| c <= limit);
    Ok(RootClassReport {
        n,
        m,
        k,
        counts,
        limit,
        pass,
    })
}

/// Rows `phi_n(x^i g mod x^(nm) - 1)` for `i < k`, with their minimality and
/// basicness witnesses.
#[derive(Clone, Debug)]
pub struct ConvEncoder {
    pub source: CyclicCode,
    pub matrix: PolyMatrix,
    pub row_degrees: Vec<usize>,
    pub delta: usize,
    /// Largest degree among the `k x k` minors.
    pub max_minor_degree: usize,
    /// Monic gcd of the `k x k` minors.
    pub minors_gcd: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EncoderSummary {
    pub k: usize,
    pub n: usize,
    pub delta: usize,
    pub row_degrees: Vec<usize>,
    pub max_minor_degree: usize,
    pub minors_gcd: Vec<u64>,
    pub rows: Vec<Vec<Vec<u64>>>,
}

impl ConvEncoder {
    pub fn k(&self) -> usize {
        self.matrix.k()
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn summary(&self) -> EncoderSummary {
        EncoderSummary {
            k: self.k(),
            n: self.n(),
            delta: self.delta,
            row_degrees: self.row_degrees.clone(),
            max_minor_degree: self.max_minor_degree,
            minors_gcd: self.minors_gcd.reps(),
            rows: self
                .matrix
                .rows()
                .iter()
                .map(|row| row.iter().map(|p| p.reps()).collect())
                .collect(),
        }
    }
}

pub fn build_encoder(code: &CyclicCode, n: usize, k: usize) -> Result<ConvEncoder> {
    let sf = SplittingField::new(code.field(), code.len())?;
    build_encoder_in(&sf, code, n, k)
}

/// As [`build_encoder`] with a given splitting field of order `nm`.
pub fn build_encoder_in(
    sf: &SplittingField,
    code: &CyclicCode,
    n: usize,
    k: usize,
) -> Result<ConvEncoder> {
    let report = check_root_classes_in(sf, code, n, k)?;
    if !report.pass {
        let (class, &count) = report
            .counts
            .iter()
            .enumerate()
            .max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i)))
            .unwrap_or((0, &0));
        return Err(Error::RootClassViolation {
            class,
            count,
            limit: report.limit,
        });
    }
    let f = code.field();
    let len = code.len();
    let rows = (0..k)
        .map(|i| phi_n_split(&code.generator().shift(i).mod_xn_minus_1(len), n))
        .collect();
    let matrix = PolyMatrix::new(f, rows)?;
    let row_degrees = matrix.row_degrees();
    let delta = row_degrees.iter().sum();
    let minors = matrix.minors()?;
    let max_minor_degree = minors.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let mut minors_gcd = Poly::zero(f);
    for p in &minors {
        minors_gcd = minors_gcd.gcd(p)?;
    }
    if minors_gcd.degree() != Some(0) {
        return Err(Error::NotMinimalBasic(format!(
            "gcd of the {k} x {k} minors is {minors_gcd}"
        )));
    }
    if max_minor_degree != delta {
        return Err(Error::NotMinimalBasic(format!(
            "row degrees sum to {delta} but the largest minor has degree {max_minor_degree}"
        )));
    }
    Ok(ConvEncoder {
        source: code.clone(),
        matrix,
        row_degrees,
        delta,
        max_minor_degree,
        minors_gcd,
    })
}

/// `u(D) G(D)`.
pub fn encode_stream(enc: &ConvEncoder, u: &[Poly]) -> Result<Vec<Poly>> {
    if u.len() != enc.k() {
        return Err(Error::LengthMismatch {
            expected: enc.k(),
            got: u.len(),
        });
    }
    let f = enc.matrix.field();
    let mut out = vec![Poly::zero(f); enc.n()];
    for (ui, row) in u.iter().zip(enc.matrix.rows()) {
        if ui.is_zero() {
            continue;
        }
        for (o, g) in out.iter_mut().zip(row) {
            *o = o.add(&ui.mul(g)?)?;
        }
    }
    Ok(out)
}

/// Total number of nonzero coefficients.
pub fn stream_weight(v: &[Poly]) -> usize {
    v.iter().map(|p| p.weight()).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeDistanceReport {
    pub degree_bound: usize,
    pub upper_bound: usize,
    pub lower_bound: usize,
    pub exact: bool,
    /// A codeword of weight `upper_bound`, one polynomial per output.
    pub codeword: Vec<Vec<u64>>,
    pub enumeration_exact: bool,
}

/// Minimum stream weight over inputs with every `deg u_i <= bound`, with the
/// source code's minimum distance as lower bound.
pub fn free_distance_search(
    enc: &ConvEncoder,
    bound: usize,
    budget: u64,
) -> Result<FreeDistanceReport> {
    let lower = min_distance_with(
        &enc.source.to_linear(),
        &DistanceOptions {
            budget,
            ..DistanceOptions::default()
        },
    )?;
    free_distance_search_with_lower(enc, bound, budget, lower.proved_lower_bound)
}

/// As [`free_distance_search`] with a known lower bound on the source
/// distance.
pub fn free_distance_search_with_lower(
    enc: &ConvEncoder,
    bound: usize,
    budget: u64,
    lower_bound: usize,
) -> Result<FreeDistanceReport> {
    let f = enc.matrix.field();
    let (k, n) = (enc.k(), enc.n());
    let span = bound + 1 + enc.row_degrees.iter().max().copied().unwrap_or(0);
    // coordinate (time s, output j) sits at index s * n + j
    let mut rows = Vec::with_capacity(k * (bound + 1));
    for row in enc.matrix.rows() {
        for shift in 0..=bound {
            let mut v = vec![Elem::ZERO; span * n];
            for (j, p) in row.iter().enumerate() {
                for (s, &c) in p.coeffs().iter().enumerate() {
                    v[(s + shift) * n + j] = c;
                }
            }
            rows.push(v);
        }
    }
    let block = LinearCode::new(f, rows)?;
    let report = min_distance_with(
        &block,
        &DistanceOptions {
            budget,
            ..DistanceOptions::default()
        },
    )?;
    let mut cert = report.certificate.clone();
    cert.resize(span * n, Elem::ZERO);
    let codeword = (0..n)
        .map(|j| {
            Poly::new(f, (0..span).map(|s| cert[s * n + j]).collect()).reps()
        })
        .collect();
    Ok(FreeDistanceReport {
        degree_bound: bound,
        upper_bound: report.d,
        lower_bound,
        exact: report.exact && report.d == lower_bound,
        codeword,
        enumeration_exact: report.exact,
    })
}

/// Default input degree bound for the free-distance search.
pub const DEFAULT_DEGREE_BOUND: usize = 3;

/// Budget used when none is given.
pub const DEFAULT_SEARCH_BUDGET: u64 = DEFAULT_BUDGET;
