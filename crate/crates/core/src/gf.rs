//! Finite fields GF(p^m) with integer-coded elements.
//!
//! An element is stored as the integer whose base-`p` digits are the
//! coefficients of its representative polynomial (digit `i` is the
//! coefficient of `y^i`).  Fields up to 2^16 elements carry exp/log tables;
//! larger fields multiply on the fly.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Default ceiling on `p^m` for [`make_field`].
pub const DEFAULT_FIELD_CEILING: u64 = 1 << 20;

/// Ceiling used internally when a splitting field must host a root of unity
/// of large order (e.g. GF(2^33) for length 161).
pub const EXTENSION_CEILING: u64 = 1 << 48;

const TABLE_LIMIT: u64 = 1 << 16;

/// A field element, integer-coded in the polynomial basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn rep(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type FieldRef = Arc<Field>;

/// Serializable description of a field: `{p, m, modulus}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
    primitive: Elem,
    order_primes: Vec<u64>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Builds GF(p^m) with the default size ceiling.
pub fn make_field(p: u64, m: u32) -> Result<FieldRef> {
    make_field_with_ceiling(p, m, DEFAULT_FIELD_CEILING)
}

/// Builds GF(p^m); the modulus is the smallest monic irreducible of degree
/// `m` when its lower coefficients are read as a base-`p` integer.
/// Fields are cached, so repeated calls return the same `Arc`.
pub fn make_field_with_ceiling(p: u64, m: u32, ceiling: u64) -> Result<FieldRef> {
    if !arith::is_prime(p) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    let q = match p.checked_pow(m) {
        Some(q) if m >= 1 && q <= ceiling && q <= EXTENSION_CEILING => q,
        _ => return Err(Error::SizeExceeded { p, m, ceiling }),
    };
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), FieldRef>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&(p, m)) {
        return Ok(f.clone());
    }
    let field = Arc::new(Field::build(p, m, q));
    Ok(cache.lock().unwrap().entry((p, m)).or_insert(field).clone())
}

/// Builds GF(q) from its order.
pub fn field_of_order(q: u64) -> Result<FieldRef> {
    let (p, m) = arith::prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?;
    make_field(p, m)
}

/// Multiplicative order of `q` modulo `n`: the degree of the smallest
/// extension of GF(q) containing a primitive `n`-th root of unity.
pub fn min_extension_degree(q: u64, n: u64) -> Result<u32> {
    arith::multiplicative_order(q, n)
}

impl Field {
    fn build(p: u64, m: u32, q: u64) -> Field {
        let modulus = smallest_irreducible(p, m);
        let order_primes: Vec<u64> = arith::factor(q - 1).into_iter().map(|(l, _)| l).collect();
        let mut field = Field {
            p,
            m,
            q,
            modulus,
            tables: None,
            primitive: Elem::ONE,
            order_primes,
        };
        field.primitive = (1..q)
            .map(Elem)
            .find(|&a| field.has_full_order(a))
            .expect("every finite field has a primitive element");
        if q <= TABLE_LIMIT {
            let n = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * n.max(1)];
            let mut log = vec![0u32; q as usize];
            let mut acc = Elem::ONE;
            for i in 0..n {
                exp[i] = acc.0 as u32;
                exp[i + n] = acc.0 as u32;
                log[acc.0 as usize] = i as u32;
                acc = field.mul_slow(acc, field.primitive);
            }
            field.tables = Some(Tables { exp, log });
        }
        field
    }

    fn has_full_order(&self, a: Elem) -> bool {
        if a.is_zero() {
            return false;
        }
        if self.q == 2 {
            return a == Elem::ONE;
        }
        self.order_primes
            .iter()
            .all(|&l| self.pow_slow(a, (self.q - 1) / l) != Elem::ONE)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients low-to-high, including the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
        }
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The smallest-rep element of order `q - 1`.
    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    pub fn elem(&self, rep: u64) -> Result<Elem> {
        if rep < self.q {
            Ok(Elem(rep))
        } else {
            Err(Error::InvalidElement { rep, q: self.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    pub fn digits(&self, a: Elem) -> Vec<u64> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Elem {
        Elem(digits.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else if self.m == 1 {
            let s = a.0 + b.0;
            Elem(if s >= self.p { s - self.p } else { s })
        } else {
            let (mut x, mut y) = (a.0, b.0);
            let (mut out, mut place) = (0, 1);
            while x != 0 || y != 0 {
                out += ((x % self.p + y % self.p) % self.p) * place;
                x /= self.p;
                y /= self.p;
                place *= self.p;
            }
            Elem(out)
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 || a.is_zero() {
            a
        } else if self.m == 1 {
            Elem(self.p - a.0)
        } else {
            let (mut x, mut out, mut place) = (a.0, 0, 1);
            while x != 0 {
                out += ((self.p - x % self.p) % self.p) * place;
                x /= self.p;
                place *= self.p;
            }
            Elem(out)
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize] as u64)
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse. Panics on zero; see [`Field::try_inv`].
    pub fn inv(&self, a: Elem) -> Elem {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(match &self.tables {
            Some(t) => {
                let n = self.q as u32 - 1;
                let l = t.log[a.0 as usize];
                Elem(t.exp[((n - l) % n.max(1)) as usize] as u64)
            }
            None => self.pow_slow(a, self.q - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                let l = t.log[a.0 as usize] as u64;
                Elem(t.exp[((l as u128 * e as u128) % n as u128) as usize] as u64)
            }
            None => self.pow_slow(a, e),
        }
    }

    /// `a^(-e)` for nonzero `a`.
    pub fn pow_neg(&self, a: Elem, e: u64) -> Elem {
        self.pow(self.inv(a), e)
    }

    /// Smallest `t >= 1` with `a^t = 1`.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut order = self.q - 1;
        for &l in &self.order_primes {
            while order % l == 0 && self.pow(a, order / l) == Elem::ONE {
                order /= l;
            }
        }
        Ok(order)
    }

    /// True when `a` lies in the subfield of order `sub_q`, i.e. `a^sub_q = a`.
    pub fn is_in_subfield(&self, a: Elem, sub_q: u64) -> bool {
        self.pow(a, sub_q) == a
    }

    /// `gamma^((q-1)/n)` for the canonical primitive element `gamma`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Elem> {
        if n == 0 || (self.q - 1) % n != 0 {
            return Err(Error::OrderUnavailable { order: n, q: self.q });
        }
        Ok(self.pow(self.primitive, (self.q - 1) / n))
    }

    fn pow_slow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        if self.m == 1 {
            return Elem((a.0 as u128 * b.0 as u128 % self.p as u128) as u64);
        }
        if self.p == 2 {
            let m = self.m as usize;
            let mut prod: u128 = 0;
            let mut x = a.0;
            let mut shift = 0;
            while x != 0 {
                if x & 1 == 1 {
                    prod ^= (b.0 as u128) << shift;
                }
                x >>= 1;
                shift += 1;
            }
            let modbits: u128 = self
                .modulus
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &c)| acc | ((c as u128) << i));
            for i in (m..2 * m).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= modbits << (i - m);
                }
            }
            return Elem(prod as u64);
        }
        let p = self.p;
        let m = self.m as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..m {
                prod[i - m + j] = (prod[i - m + j] + (p - c) * self.modulus[j]) % p;
            }
            prod[i] = 0;
        }
        self.from_digits(&prod[..m])
    }
}

/// Embedding of a base field GF(q) into an extension GF(q^e).
#[derive(Clone, Debug)]
pub struct Embedding {
    base: FieldRef,
    ext: FieldRef,
    degree: u32,
    generator_image: Elem,
    images: Vec<Elem>,
    preimages: HashMap<u64, Elem>,
}

impl Embedding {
    /// Embeds `base` into GF(q^degree). The base generator maps to the
    /// smallest-rep root of the base modulus in the extension.
    pub fn new(base: &FieldRef, degree: u32) -> Result<Embedding> {
        if base.q() > TABLE_LIMIT {
            return Err(Error::TooLarge(format!(
                "embedding a base field of order {}",
                base.q()
            )));
        }
        let ext = if degree == 1 {
            base.clone()
        } else {
            make_field_with_ceiling(base.p(), base.m() * degree, EXTENSION_CEILING)?
        };
        let generator_image = if base.m() == 1 {
            Elem::ZERO
        } else if degree == 1 {
            Elem(base.p())
        } else {
            let step = (ext.q() - 1) / (base.q() - 1);
            let unit = ext.pow(ext.primitive_element(), step);
            let mut acc = Elem::ONE;
            let mut best: Option<Elem> = None;
            for _ in 0..base.q() - 1 {
                let val = base.modulus().iter().rev().fold(Elem::ZERO, |s, &c| {
                    ext.add(ext.mul(s, acc), ext.from_int(c as i64))
                });
                if val.is_zero() && best.map_or(true, |b| acc < b) {
                    best = Some(acc);
                }
                acc = ext.mul(acc, unit);
            }
            best.expect("base modulus splits in the extension")
        };
        let mut emb = Embedding {
            base: base.clone(),
            ext,
            degree,
            generator_image,
            images: Vec::new(),
            preimages: HashMap::new(),
        };
        emb.images = base.elements().map(|a| emb.embed_slow(a)).collect();
        emb.preimages = emb
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| (img.0, Elem(i as u64)))
            .collect();
        Ok(emb)
    }

    pub fn identity(field: &FieldRef) -> Embedding {
        Embedding::new(field, 1).expect("identity embedding")
    }

    fn embed_slow(&self, a: Elem) -> Elem {
        if self.base.m() == 1 {
            return a;
        }
        let ext = &self.ext;
        self.base
            .digits(a)
            .iter()
            .rev()
            .fold(Elem::ZERO, |s, &d| {
                ext.add(ext.mul(s, self.generator_image), ext.from_int(d as i64))
            })
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn ext(&self) -> &FieldRef {
        &self.ext
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Image of the base field's generator (the class of `y`).
    pub fn generator_image(&self) -> Elem {
        self.generator_image
    }

    pub fn embed(&self, a: Elem) -> Elem {
        self.images[a.0 as usize]
    }

    /// Preimage of `a`, if `a` lies in the embedded base field.
    pub fn descend(&self, a: Elem) -> Option<Elem> {
        if !self.ext.is_in_subfield(a, self.base.q()) {
            return None;
        }
        self.preimages.get(&a.0).copied()
    }
}

fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let count = p.pow(m);
    for code in 0..count {
        let mut f: Vec<u64> = (0..m)
            .scan(code, |v, _| {
                let d = *v % p;
                *v /= p;
                Some(d)
            })
            .collect();
        f.push(1);
        if fp::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Dense polynomials over a prime field, used only for modulus selection.
mod fp {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let inv_lead = crate::arith::mod_inverse(f[df], p).unwrap();
        while r.len() > df {
            let top = r.len() - 1;
            let c = r[top] * inv_lead % p;
            for j in 0..=df {
                r[top - df + j] = (r[top - df + j] + (p - c) * f[j]) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, f, p)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or test: `f` (monic) is irreducible iff `gcd(x^(p^i) - x, f) = 1`
    /// for all `i <= deg f / 2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let d = f.len() - 1;
        let mut h = rem(&[0, 1], f, p);
        for _ in 0..d / 2 {
            let mut acc = vec![1u64];
            let mut base = h.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, f, p);
                }
                base = mulmod(&base, &base, f, p);
                e >>= 1;
            }
            h = acc;
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            if gcd(f, &diff, p).len() > 1 {
                return false;
            }
        }
        true
    }
}
