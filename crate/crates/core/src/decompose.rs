//! CRT decomposition of length-`nr` cyclic codes into `r` cyclic codes of
//! length `n` over the splitting field.
//!
//! With `theta` a primitive `nr`-th root, `lambda = theta^n`, `nbar` the
//! inverse of `n` mod `r` and `theta_t = lambda^(nbar t)`, a word `c(x)` maps
//! to components `c_t(x) = c(x theta_t) mod x^n - 1`; block `k` of its image
//! is `(1/r) sum_t c_t(x) lambda^(-tk)`, and the image is a coordinate
//! permutation of `c`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, mod_inverse};
use crate::codes::{min_distance, CyclicCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldDescriptor, FieldRef};
use crate::poly::{Poly, SplittingField};

/// Largest number of column subsets the extension-field fallback will try.
const SUBSET_LIMIT: u128 = 50_000_000;

#[derive(Clone, Debug)]
pub struct Decomposition {
    n: usize,
    r: usize,
    sf: SplittingField,
    lambda: Elem,
    nbar: usize,
    thetas: Vec<Elem>,
    r_inv: Elem,
}

/// Components and block image of one word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub components: Vec<Poly>,
    pub blocks: Vec<Vec<Elem>>,
}

impl PhiImage {
    pub fn weight(&self) -> usize {
        self.blocks
            .iter()
            .flatten()
            .filter(|e| !e.is_zero())
            .count()
    }
}

/// One component code `C_t = (g_t)`, `g_t = gcd(g(x theta_t), x^n - 1)`.
#[derive(Clone, Debug)]
pub struct ComponentCode {
    pub t: usize,
    /// Generator over the splitting field.
    pub generator: Poly,
    /// The same generator over the base field, when its coefficients lie there.
    pub base_generator: Option<Poly>,
    pub dimension: usize,
}

impl ComponentCode {
    pub fn is_zero(&self) -> bool {
        self.dimension == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub t: usize,
    pub generator: Vec<u64>,
    pub descends: bool,
    pub dimension: usize,
    pub distance: Option<usize>,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub n: usize,
    pub r: usize,
    pub field: FieldDescriptor,
    pub theta: Elem,
    pub components: Vec<ComponentSummary>,
    /// `min d(C_t)` over nonzero components, doubled when some `C_t = 0`.
    pub bound: usize,
    pub doubled: bool,
    /// All components coincide, so the bound is attained.
    pub attained: bool,
}

impl Decomposition {
    pub fn new(base: &FieldRef, n: usize, r: usize) -> Result<Decomposition> {
        check_params(base.q(), n, r)?;
        Self::from_splitting_field(SplittingField::new(base, n * r)?, n, r)
    }

    /// Reuses a splitting field of order `nr`, so that `theta` matches the
    /// one a code family was built with.
    pub fn from_splitting_field(sf: SplittingField, n: usize, r: usize) -> Result<Decomposition> {
        check_params(sf.base().q(), n, r)?;
        if sf.n() != n * r {
            return Err(Error::LengthMismatch {
                expected: n * r,
                got: sf.n(),
            });
        }
        let ext = sf.ext().clone();
        let lambda = sf.theta_pow(n as i64);
        let nbar = if r == 1 {
            0
        } else {
            mod_inverse(n as u64 % r as u64, r as u64).expect("n, r coprime") as usize
        };
        let thetas = (0..r)
            .map(|t| ext.pow(lambda, (nbar * t) as u64))
            .collect();
        let r_inv = ext.inv(ext.from_int(r as i64));
        Ok(Decomposition {
            n,
            r,
            sf,
            lambda,
            nbar,
            thetas,
            r_inv,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ext(&self) -> &FieldRef {
        self.sf.ext()
    }

    pub fn base(&self) -> &FieldRef {
        self.sf.base()
    }

    pub fn splitting_field(&self) -> &SplittingField {
        &self.sf
    }

    pub fn theta(&self) -> Elem {
        self.sf.theta()
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn nbar(&self) -> usize {
        self.nbar
    }

    /// `theta_t` for `t = 0..r`.
    pub fn thetas(&self) -> &[Elem] {
        &self.thetas
    }

    fn lift(&self, c: &Poly) -> Result<Poly> {
        if c.field() == self.ext() {
            Ok(c.clone())
        } else if c.field() == self.base() {
            c.embed(self.sf.embedding())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// `c_t(x) = c(x theta_t) mod x^n - 1` over the splitting field.
    pub fn components(&self, c: &Poly) -> Result<Vec<Poly>> {
        let ce = self.lift(&c.mod_xn_minus_1(self.n * self.r))?;
        Ok(self
            .thetas
            .iter()
            .map(|&th| ce.eval_scale(th, self.n))
            .collect())
    }

    /// Blocks `(1/r) sum_t c_t lambda^(-tk)` for `k = 0..r`, each of length `n`.
    pub fn blocks(&self, components: &[Poly]) -> Result<Vec<Vec<Elem>>> {
        let f = self.ext();
        self.check_tuple(components)?;
        let mut blocks = vec![vec![Elem::ZERO; self.n]; self.r];
        for (k, block) in blocks.iter_mut().enumerate() {
            for (t, ct) in components.iter().enumerate() {
                let w = f.mul(
                    self.r_inv,
                    f.pow_neg(self.lambda, ((t * k) % self.r) as u64),
                );
                for (z, &c) in ct.coeffs().iter().enumerate() {
                    block[z] = f.add(block[z], f.mul(c, w));
                }
            }
        }
        Ok(blocks)
    }

    pub fn phi_forward(&self, c: &Poly) -> Result<PhiImage> {
        let components = self.components(c)?;
        let blocks = self.blocks(&components)?;
        Ok(PhiImage { components, blocks })
    }

    /// The unique `c` of degree `< nr` with the given components:
    /// `c_{kn+z} = (1/r) sum_t c_{t,z} theta_t^-(kn+z)`.
    pub fn phi_inverse(&self, components: &[Poly]) -> Result<Poly> {
        let f = self.ext();
        self.check_tuple(components)?;
        let (n, r) = (self.n, self.r);
        let mut out = vec![Elem::ZERO; n * r];
        for (t, ct) in components.iter().enumerate() {
            for (z, &c) in ct.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for k in 0..r {
                    let idx = k * n + z;
                    let w = f.pow_neg(self.thetas[t], idx as u64);
                    out[idx] = f.add(out[idx], f.mul(c, w));
                }
            }
        }
        for x in out.iter_mut() {
            *x = f.mul(*x, self.r_inv);
        }
        Ok(Poly::new(f, out))
    }

    fn check_tuple(&self, components: &[Poly]) -> Result<()> {
        if components.len() != self.r {
            return Err(Error::LengthMismatch {
                expected: self.r,
                got: components.len(),
            });
        }
        for c in components {
            if c.field() != self.ext() {
                return Err(Error::FieldMismatch);
            }
            if c.degree().is_some_and(|d| d >= self.n) {
                return Err(Error::LengthMismatch {
                    expected: self.n,
                    got: c.degree().unwrap_or(0) + 1,
                });
            }
        }
        Ok(())
    }

    /// The component codes of a cyclic code of length `nr`.
    pub fn component_codes(&self, code: &CyclicCode) -> Result<Vec<ComponentCode>> {
        if code.len() != self.n * self.r {
            return Err(Error::LengthMismatch {
                expected: self.n * self.r,
                got: code.len(),
            });
        }
        let ge = self.lift(code.generator())?;
        let modulus = Poly::x_n_minus_1(self.ext(), self.n);
        self.thetas
            .iter()
            .enumerate()
            .map(|(t, &th)| {
                let gt = ge.eval_scale(th, self.n).gcd(&modulus)?;
                let dimension = self.n - gt.degree().unwrap_or(0);
                Ok(ComponentCode {
                    t,
                    base_generator: gt.descend(self.sf.embedding()),
                    generator: gt,
                    dimension,
                })
            })
            .collect()
    }

    /// Lower bound on `d(code)` from exact component distances.
    pub fn distance_lower_bound(&self, code: &CyclicCode, budget: u64) -> Result<LowerBound> {
        let comps = self.component_codes(code)?;
        let summaries = comps
            .par_iter()
            .map(|c| {
                let (distance, exact) = if c.is_zero() {
                    (None, true)
                } else {
                    let (d, exact) = component_distance(c, self.ext(), self.n, budget)?;
                    (Some(d), exact)
                };
                Ok(ComponentSummary {
                    t: c.t,
                    generator: c.generator.reps(),
                    descends: c.base_generator.is_some(),
                    dimension: c.dimension,
                    distance,
                    exact,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let min = summaries
            .iter()
            .filter_map(|s| s.distance)
            .min()
            .ok_or_else(|| Error::DegenerateCode("every component is zero".into()))?;
        let doubled = comps.iter().any(|c| c.is_zero());
        let attained = comps.windows(2).all(|w| w[0].generator == w[1].generator);
        Ok(LowerBound {
            n: self.n,
            r: self.r,
            field: self.ext().descriptor(),
            theta: self.theta(),
            components: summaries,
            bound: if doubled { 2 * min } else { min },
            doubled,
            attained,
        })
    }
}

fn check_params(q: u64, n: usize, r: usize) -> Result<()> {
    let (nn, rr) = (n as u64, r as u64);
    if n < 2 || r < 1 || gcd(nn * rr, q) != 1 || gcd(nn, rr) != 1 {
        return Err(Error::NonCoprimeParams { n: nn, r: rr, q });
    }
    Ok(())
}

/// Exact minimum distance of a nonzero component code: over the base field
/// when the generator descends (extension of scalars preserves distance),
/// otherwise by searching for the smallest column set whose complement
/// loses rank.
fn component_distance(
    c: &ComponentCode,
    ext: &FieldRef,
    n: usize,
    budget: u64,
) -> Result<(usize, bool)> {
    if let Some(g) = &c.base_generator {
        let report = min_distance(&CyclicCode::new(g.clone(), n)?, budget)?;
        return Ok((report.d, report.exact));
    }
    let code = CyclicCode::new(c.generator.clone(), n)?;
    Ok((distance_by_rank(ext, &code.generator_matrix(), n)?, true))
}

/// Smallest `|S|` such that the columns outside `S` have rank below `k`.
fn distance_by_rank(field: &FieldRef, rows: &[Vec<Elem>], n: usize) -> Result<usize> {
    let k = rows.len();
    let mut tried: u128 = 0;
    for s in 1..=n {
        tried += crate::arith::binomial(n as u64, s as u64);
        if tried > SUBSET_LIMIT {
            return Err(Error::TooLarge(format!(
                "component of length {n} over GF({})",
                field.q()
            )));
        }
        let mut subset: Vec<usize> = (0..s).collect();
        loop {
            let keep: Vec<Vec<Elem>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| !subset.contains(j))
                        .map(|(_, &e)| e)
                        .collect()
                })
                .collect();
            if crate::codes::rank(field, keep) < k {
                return Ok(s);
            }
            // next combination in lexicographic order
            let Some(i) = (0..s).rev().find(|&i| subset[i] < n - s + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..s {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    Ok(n)
}

/// Smallest integer `d` with `d >= (sqrt(8n + 1) - 1) / 2`, i.e. with
/// `d (d + 1) / 2 >= n`.
pub fn triangular_bound(n: usize) -> usize {
    (0..).find(|d| d * (d + 1) / 2 >= n).expect("unbounded search")
}

/// Reported lower bound for a sign-vector code: the component bound, raised
/// to `min(d_nq + 1, triangular_bound(n))` for non-constant sign vectors.
pub fn sign_vector_bound(component_bound: usize, d_nq: usize, constant: bool, n: usize) -> usize {
    if constant {
        component_bound
    } else {
        component_bound.max((d_nq + 1).min(triangular_bound(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_BUDGET;
    use crate::gf::make_field;

    fn gf4() -> FieldRef {
        crate::gf::field_of_order(4).unwrap()
    }

    #[test]
    fn structure() {
        let d = Decomposition::new(&gf4(), 5, 3).unwrap();
        let f = d.ext().clone();
        assert_eq!(f.element_order(d.lambda()).unwrap(), 3);
        for (t, &th) in d.thetas().iter().enumerate() {
            assert_eq!(f.pow(th, 5), f.pow(d.lambda(), t as u64));
        }
        let prod = Poly::product(
            &f,
            &(0..3)
                .map(|t| {
                    Poly::x_n_minus_1(&f, 5)
                        .add(&Poly::constant(&f, f.add(Elem::ONE, f.neg(f.pow(d.lambda(), t)))))
                        .unwrap()
                })
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(prod, Poly::x_n_minus_1(&f, 15));
    }

    #[test]
    fn unit_vectors() {
        let base = gf4();
        let d = Decomposition::new(&base, 5, 3).unwrap();
        let one = d.phi_forward(&Poly::one(&base)).unwrap();
        assert!(one.components.iter().all(|c| c.reps() == vec![1]));
        assert_eq!(one.blocks[0][0], Elem::ONE);
        assert_eq!(one.weight(), 1);
        let x5 = d.phi_forward(&Poly::monomial(&base, Elem::ONE, 5)).unwrap();
        assert_eq!(x5.blocks[1][0], Elem::ONE);
        assert_eq!(x5.weight(), 1);
        assert!(d.phi_inverse(&vec![Poly::zero(d.ext()); 3]).unwrap().is_zero());
    }

    #[test]
    fn round_trip_and_weight() {
        let base = gf4();
        let d = Decomposition::new(&base, 5, 3).unwrap();
        let c = Poly::from_reps(&base, &[1, 0, 2, 3, 0, 0, 1, 1, 0, 2, 0, 0, 3, 0, 1]).unwrap();
        let img = d.phi_forward(&c).unwrap();
        assert_eq!(img.weight(), c.weight());
        assert_eq!(
            d.phi_inverse(&img.components).unwrap(),
            c.embed(d.sf.embedding()).unwrap()
        );
    }

    #[test]
    fn whole_space_components() {
        let base = make_field(2, 1).unwrap();
        let d = Decomposition::new(&base, 7, 3).unwrap();
        let code = CyclicCode::new(Poly::one(&base), 21).unwrap();
        for c in d.component_codes(&code).unwrap() {
            assert_eq!(c.dimension, 7);
        }
    }

    #[test]
    fn zero_component_doubles() {
        // g = x^7 - 1 kills the t = 0 component of x^21 - 1
        let base = make_field(2, 1).unwrap();
        let d = Decomposition::new(&base, 7, 3).unwrap();
        let code = CyclicCode::new(Poly::x_n_minus_1(&base, 7), 21).unwrap();
        let lb = d.distance_lower_bound(&code, DEFAULT_BUDGET).unwrap();
        assert!(lb.doubled);
        assert_eq!(lb.bound, 2);
        let exact = min_distance(&code, DEFAULT_BUDGET).unwrap();
        assert!(exact.d >= lb.bound);
    }

    #[test]
    fn rank_fallback_matches_engine() {
        let f = make_field(2, 1).unwrap();
        let c = CyclicCode::new(Poly::from_reps(&f, &[1, 1, 0, 1]).unwrap(), 7).unwrap();
        assert_eq!(distance_by_rank(&f, &c.generator_matrix(), 7).unwrap(), 3);
    }

    #[test]
    fn triangular() {
        assert_eq!(triangular_bound(7), 4);
        assert_eq!(triangular_bound(6), 3);
        assert_eq!(triangular_bound(1), 1);
        assert_eq!(sign_vector_bound(3, 3, false, 7), 4);
        assert_eq!(sign_vector_bound(3, 3, true, 7), 3);
    }
}
