//! Dense univariate polynomials over a [`Field`](crate::gf::Field),
//! cyclotomic cosets and the splitting-field machinery used to build
//! generator polynomials from root-exponent sets.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Elem, Embedding, FieldRef, EXTENSION_CEILING};

/// Polynomial with coefficients low-to-high; trailing zeros are trimmed, so
/// the zero polynomial has an empty coefficient list.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly(q={}, {:?})", self.field.q(), self.reps())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if *c == Elem::ONE && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}x", coeff)?,
                _ => write!(f, "{}x^{}", coeff, i)?,
            }
        }
        Ok(())
    }
}

pub(crate) fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    std::sync::Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a polynomial from integer reps, rejecting out-of-range values.
    pub fn from_reps(field: &FieldRef, reps: &[u64]) -> Result<Poly> {
        let coeffs = reps
            .iter()
            .map(|&r| field.elem(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &FieldRef) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &FieldRef) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &FieldRef, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(field: &FieldRef, c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// `x^n - 1`
    pub fn x_n_minus_1(field: &FieldRef, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = field.neg(Elem::ONE);
        coeffs[n] = field.add(coeffs[n], Elem::ONE);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn reps(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^s`.
    pub fn shift(&self, s: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Elem::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, coeffs)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()))
    }

    /// Euclidean division: `(quotient, remainder)` with `deg r < deg b`.
    pub fn divmod(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.check(b)?;
        let db = b.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.field;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(b.lead());
        let mut q = vec![Elem::ZERO; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = f.mul(r[i], inv_lead);
            if c.is_zero() {
                continue;
            }
            q[i - db] = c;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = f.sub(r[k], f.mul(c, bc));
            }
        }
        r.truncate(db);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divmod(b)?.1)
    }

    /// True when `b` divides `self` exactly.
    pub fn divisible_by(&self, b: &Poly) -> Result<bool> {
        Ok(self.rem(b)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let g = self.gcd(other)?;
        Ok(self.divmod(&g)?.0.mul(other)?.monic())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Reduction modulo `x^n - 1` (exponents folded mod `n`).
    pub fn mod_xn_minus_1(&self, n: usize) -> Poly {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = f.add(out[i % n], c);
        }
        Poly::new(f, out)
    }

    /// `c(gamma x) mod (x^n - 1)`: coefficient `j` is the sum over `i = j (mod n)`
    /// of `c_i gamma^i`.
    pub fn eval_scale(&self, gamma: Elem, n: usize) -> Poly {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; n];
        let mut power = Elem::ONE;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i % n] = f.add(out[i % n], f.mul(c, power));
            }
            power = f.mul(power, gamma);
        }
        Poly::new(f, out)
    }

    /// `c(x^v) mod (x^n - 1)`.
    pub fn compose_power(&self, v: usize, n: usize) -> Poly {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = (i as u128 * v as u128 % n as u128) as usize;
            out[k] = f.add(out[k], c);
        }
        Poly::new(f, out)
    }

    /// Image under a field embedding.
    pub fn embed(&self, emb: &Embedding) -> Result<Poly> {
        if !same_field(&self.field, emb.base()) {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::new(
            emb.ext(),
            self.coeffs.iter().map(|&c| emb.embed(c)).collect(),
        ))
    }

    /// Preimage under an embedding when every coefficient lies in the base.
    pub fn descend(&self, emb: &Embedding) -> Option<Poly> {
        if !same_field(&self.field, emb.ext()) {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| emb.descend(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(emb.base(), coeffs))
    }

    /// Product of polynomials; the empty product is 1.
    pub fn product<'a>(field: &FieldRef, items: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        items
            .into_iter()
            .try_fold(Poly::one(field), |acc, p| acc.mul(p))
    }
}

/// Partition of `{0..n-1}` into orbits of `i -> q i (mod n)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CosetPartition {
    pub modulus: usize,
    pub base: u64,
    pub cosets: Vec<Vec<usize>>,
}

impl CosetPartition {
    /// Index of the coset containing `i mod modulus`.
    pub fn coset_of(&self, i: usize) -> usize {
        let i = i % self.modulus;
        self.cosets
            .iter()
            .position(|c| c.binary_search(&i).is_ok())
            .expect("cosets cover the residues")
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

/// Cyclotomic cosets of `q` modulo `n`, listed by smallest representative.
pub fn cyclotomic_cosets(q: u64, n: usize) -> Result<CosetPartition> {
    if n == 0 || arith::gcd(q, n as u64) != 1 {
        return Err(Error::NotCoprime { a: q, b: n as u64 });
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    let qm = (q % n as u64) as usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = i * qm % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition {
        modulus: n,
        base: q,
        cosets,
    })
}

/// The extension of a base field holding the canonical primitive `n`-th root
/// of unity `theta`, together with its powers.
#[derive(Clone, Debug)]
pub struct SplittingField {
    emb: Embedding,
    n: usize,
    theta: Elem,
    powers: Vec<Elem>,
    cosets: CosetPartition,
}

impl SplittingField {
    pub fn new(base: &FieldRef, n: usize) -> Result<SplittingField> {
        Self::with_theta_power(base, n, 1)
    }

    /// Uses `theta = theta_0^s` in place of the canonical root `theta_0`;
    /// `s` must be coprime to `n`.
    pub fn with_theta_power(base: &FieldRef, n: usize, s: u64) -> Result<SplittingField> {
        if crate::arith::gcd(s, n as u64) != 1 {
            return Err(crate::error::Error::NotCoprime { a: s, b: n as u64 });
        }
        let cosets = cyclotomic_cosets(base.q(), n)?;
        let degree = crate::gf::min_extension_degree(base.q(), n as u64)?;
        let emb = Embedding::new(base, degree)?;
        let ext = emb.ext().clone();
        let theta = ext.pow(ext.primitive_root_of_unity(n as u64)?, s);
        let mut powers = Vec::with_capacity(n);
        let mut acc = Elem::ONE;
        for _ in 0..n {
            powers.push(acc);
            acc = ext.mul(acc, theta);
        }
        Ok(SplittingField {
            emb,
            n,
            theta,
            powers,
            cosets,
        })
    }

    pub fn base(&self) -> &FieldRef {
        self.emb.base()
    }

    pub fn ext(&self) -> &FieldRef {
        self.emb.ext()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> Elem {
        self.theta
    }

    pub fn cosets(&self) -> &CosetPartition {
        &self.cosets
    }

    /// `theta^i` for any integer `i` (reduced mod `n`).
    pub fn theta_pow(&self, i: i64) -> Elem {
        self.powers[i.rem_euclid(self.n as i64) as usize]
    }

    /// `prod (x - theta^i)` over the given exponents, in the extension.
    pub fn ext_poly_from_exponents(&self, exps: impl IntoIterator<Item = usize>) -> Poly {
        let ext = self.ext();
        let mut coeffs = vec![Elem::ONE];
        for i in exps {
            let root = self.powers[i % self.n];
            let neg_root = ext.neg(root);
            // multiply in place by (x - root)
            coeffs.push(Elem::ZERO);
            for j in (0..coeffs.len()).rev() {
                let lower = if j > 0 { coeffs[j - 1] } else { Elem::ZERO };
                coeffs[j] = ext.add(lower, ext.mul(coeffs[j], neg_root));
            }
        }
        Poly::new(ext, coeffs)
    }

    /// `prod (x - theta^i)` descended to the base field, or `None` when some
    /// coefficient leaves the base field (the exponent set is not q-closed).
    pub fn poly_from_exponents(&self, exps: impl IntoIterator<Item = usize>) -> Option<Poly> {
        self.ext_poly_from_exponents(exps).descend(&self.emb)
    }

    /// Exponents `i` with `g(theta^i) = 0`, ascending. `g` must divide
    /// `x^n - 1` for the result to describe all of its roots.
    pub fn root_exponents(&self, g: &Poly) -> Result<Vec<usize>> {
        let ge = g.embed(&self.emb)?;
        let mut out: Vec<usize> = self
            .cosets
            .cosets
            .iter()
            .filter(|c| ge.eval(self.powers[c[0]]).is_zero())
            .flat_map(|c| c.iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Monic irreducible factors of `x^n - 1` over the base field, one per
    /// cyclotomic coset, ordered by coset representative.
    pub fn factors(&self) -> Vec<Poly> {
        self.cosets
            .cosets
            .iter()
            .map(|c| {
                self.poly_from_exponents(c.iter().copied())
                    .expect("coset products are q-closed")
            })
            .collect()
    }
}

/// Factorization of `x^n - 1` into minimal polynomials of `theta^i`, one
/// per cyclotomic coset, ordered by coset representative.
///
/// When the splitting field is within [`EXTENSION_CEILING`] `theta` is the
/// canonical root. Beyond it the factors come from equal-degree splitting
/// over the base field, and `theta` is the class of `x` modulo the
/// lexicographically smallest factor of the `n`-th cyclotomic polynomial.
pub fn factor_xn_minus_1(field: &FieldRef, n: usize) -> Result<Vec<Poly>> {
    let cosets = cyclotomic_cosets(field.q(), n)?;
    let degree = crate::gf::min_extension_degree(field.q(), n as u64)?;
    let fits = (field.q() as u128)
        .checked_pow(degree)
        .is_some_and(|size| size <= EXTENSION_CEILING as u128);
    if fits {
        return Ok(SplittingField::new(field, n)?.factors());
    }
    factor_by_splitting(field, n, &cosets)
}

fn factor_by_splitting(field: &FieldRef, n: usize, cosets: &CosetPartition) -> Result<Vec<Poly>> {
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut cyclotomic: Vec<(usize, Poly)> = Vec::new();
    for &d in &divisors {
        let mut phi = Poly::x_n_minus_1(field, d);
        for (e, p) in &cyclotomic {
            if d % e == 0 {
                phi = phi.divmod(p)?.0;
            }
        }
        cyclotomic.push((d, phi));
    }
    let mut pool: Vec<(usize, Poly)> = Vec::new();
    for (d, phi) in &cyclotomic {
        let e = arith::multiplicative_order(field.q(), *d as u64)? as usize;
        let mut parts = Vec::new();
        equal_degree_split(phi, e, &mut parts)?;
        pool.extend(parts.into_iter().map(|p| (*d, p)));
    }

    let mut top: Vec<&Poly> = pool.iter().filter(|(d, _)| *d == n).map(|(_, p)| p).collect();
    top.sort_by_key(|p| p.reps());
    let modulus = top[0].clone();
    let x = Poly::monomial(field, Elem::ONE, 1);
    let mut out = Vec::with_capacity(cosets.len());
    for coset in &cosets.cosets {
        let i = coset[0];
        let order = n / arith::gcd(i as u64, n as u64) as usize;
        let root = pow_mod(&x, i as u128, &modulus)?;
        let hit = pool
            .iter()
            .filter(|(d, _)| *d == order)
            .map(|(_, h)| h)
            .find(|h| eval_mod(h, &root, &modulus).is_ok_and(|v| v.is_zero()))
            .ok_or_else(|| Error::AssumptionViolated(format!("no factor vanishes at theta^{i}")))?;
        out.push(hit.clone());
    }
    Ok(out)
}

fn mul_mod(a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
    a.mul(b)?.rem(m)
}

fn pow_mod(a: &Poly, mut e: u128, m: &Poly) -> Result<Poly> {
    let mut base = a.rem(m)?;
    let mut acc = Poly::one(a.field()).rem(m)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, m)?;
        }
        base = mul_mod(&base, &base, m)?;
        e >>= 1;
    }
    Ok(acc)
}

fn eval_mod(h: &Poly, y: &Poly, m: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero(h.field());
    for &c in h.coeffs().iter().rev() {
        acc = mul_mod(&acc, y, m)?.add(&Poly::constant(h.field(), c))?;
    }
    acc.rem(m)
}

/// Splits a squarefree `f` whose irreducible factors all have degree `e`
/// (Cantor-Zassenhaus with a deterministic sequence of trial polynomials).
fn equal_degree_split(f: &Poly, e: usize, out: &mut Vec<Poly>) -> Result<()> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(());
    }
    if deg == e {
        out.push(f.monic());
        return Ok(());
    }
    let field = f.field();
    let q = field.q();
    let one = Poly::one(field);
    for j in q.. {
        let mut digits = Vec::new();
        let mut v = j;
        while v > 0 {
            digits.push(v % q);
            v /= q;
        }
        let a = Poly::from_reps(field, &digits)?.rem(f)?;
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^e - 1)/2) = (a^(1 + q + ... + q^(e-1)))^((q-1)/2)
            let mut norm = a.clone();
            let mut frob = a.clone();
            for _ in 1..e {
                frob = pow_mod(&frob, q as u128, f)?;
                norm = mul_mod(&norm, &frob, f)?;
            }
            pow_mod(&norm, ((q - 1) / 2) as u128, f)?.sub(&one)?
        } else {
            // absolute trace into GF(2)
            let bits = field.m() as usize * e;
            let mut term = a.clone();
            let mut trace = a.clone();
            for _ in 1..bits {
                term = mul_mod(&term, &term, f)?;
                trace = trace.add(&term)?;
            }
            trace
        };
        let g = f.gcd(&b)?;
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let h = f.divmod(&g)?.0;
            equal_degree_split(&g, e, out)?;
            equal_degree_split(&h, e, out)?;
            return Ok(());
        }
    }
    unreachable!("trial polynomials are unbounded")
}
