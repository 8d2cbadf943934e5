//! Generator polynomials of the quadratic-residue based families: the
//! sign-vector family `C_eps` of length `nr` and Ding's three constructions
//! of length `n1 n2`.
//!
//! Every family fixes `theta` as the canonical primitive root of unity of
//! its length (see [`SplittingField`]); sign labels are relative to that
//! choice.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{self, gcd, jacobi2};
use crate::codes::CyclicCode;
use crate::error::{Error, Result};
use crate::gf::{field_of_order, Elem, FieldDescriptor, FieldRef};
use crate::poly::{cyclotomic_cosets, Poly, SplittingField};

pub use crate::arith::legendre;

/// A vector of signs `+1` / `-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<SignVector> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::NotInLambda(signs));
        }
        Ok(SignVector(signs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    /// `eps*u`: entry `t` becomes `eps_{t u mod r}`.
    pub fn star(&self, u: usize) -> SignVector {
        let r = self.0.len();
        SignVector((0..r).map(|t| self.0[t * u % r]).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// The field and root of unity a family's labels refer to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaSpec {
    pub order: usize,
    /// `theta` is the canonical root raised to this power.
    pub power: u64,
    pub field: FieldDescriptor,
    pub theta: Elem,
}

impl ThetaSpec {
    fn of(sf: &SplittingField, power: u64) -> ThetaSpec {
        ThetaSpec {
            order: sf.n(),
            power,
            field: sf.ext().descriptor(),
            theta: sf.theta(),
        }
    }
}

/// Sign vectors constant on every q-cyclotomic coset mod `r`, coset-major
/// (cosets by smallest member), `+1` before `-1`.
pub fn enumerate_lambda(q: u64, r: usize) -> Result<Vec<SignVector>> {
    if gcd(q, r as u64) != 1 {
        return Err(Error::NotCoprime { a: q, b: r as u64 });
    }
    let cosets = cyclotomic_cosets(q, r)?;
    let tau = cosets.len();
    let mut out = Vec::with_capacity(1 << tau);
    for bits in 0..(1u64 << tau) {
        let mut signs = vec![0i8; r];
        for (ci, coset) in cosets.cosets.iter().enumerate() {
            let minus = (bits >> (tau - 1 - ci)) & 1 == 1;
            for &j in coset {
                signs[j] = if minus { -1 } else { 1 };
            }
        }
        out.push(SignVector(signs));
    }
    Ok(out)
}

/// Membership in the closed set: `eps_j = eps_{qj mod r}` for all `j`.
pub fn in_lambda(q: u64, eps: &SignVector) -> bool {
    let r = eps.len();
    r > 0
        && eps.0.iter().all(|&s| s == 1 || s == -1)
        && (0..r).all(|j| eps.0[j] == eps.0[(q as usize % r) * j % r])
}

/// Orbits of the closed set under `eps -> -eps` and `eps -> eps*u` for
/// units `u` mod `r`, each orbit sorted and orbits ordered by first member
/// in enumeration order.
pub fn lambda_orbits(q: u64, r: usize) -> Result<Vec<Vec<SignVector>>> {
    let all = enumerate_lambda(q, r)?;
    let units: Vec<usize> = (1..r).filter(|&u| gcd(u as u64, r as u64) == 1).collect();
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for eps in &all {
        if seen.contains(eps) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut stack = vec![eps.clone()];
        while let Some(e) = stack.pop() {
            if !orbit.insert(e.clone()) {
                continue;
            }
            stack.push(e.negated());
            for &u in &units {
                stack.push(e.star(u));
            }
        }
        let ordered: Vec<SignVector> = all.iter().filter(|e| orbit.contains(*e)).cloned().collect();
        seen.extend(orbit);
        orbits.push(ordered);
    }
    Ok(orbits)
}

fn check_prime_length(n: u64) -> Result<()> {
    if n < 3 || !arith::is_prime(n) {
        return Err(Error::NotOddPrime(n));
    }
    Ok(())
}

fn check_residue(q: u64, n: u64) -> Result<()> {
    if legendre(q as i64, n)? != 1 {
        return Err(Error::QNotResidue { q, n });
    }
    Ok(())
}

/// Quadratic-residue code generator of prime length `n`: roots `theta_n^i`
/// with `(i|n) = eps`, `theta_n` the canonical primitive `n`-th root.
pub fn qr_generator(n: u64, q: u64, eps: i8) -> Result<Poly> {
    check_prime_length(n)?;
    let field = field_of_order(q)?;
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { a: n, b: q });
    }
    check_residue(q, n)?;
    let sf = SplittingField::new(&field, n as usize)?;
    let exps = (1..n).filter(|&i| legendre(i as i64, n) == Ok(eps));
    Ok(sf
        .poly_from_exponents(exps.map(|i| i as usize))
        .expect("residue classes are q-closed when q is a residue"))
}

/// The family `C_eps` of length `nr` for one parameter triple.
#[derive(Clone, Debug)]
pub struct CrFamily {
    q: u64,
    n: u64,
    r: u64,
    power: u64,
    sf: SplittingField,
}

impl CrFamily {
    /// Checks: `n` an odd prime, `(q|n) = 1`, `r >= 2`,
    /// `gcd(nr, q) = gcd(n, r) = 1`.
    pub fn new(q: u64, n: u64, r: u64) -> Result<CrFamily> {
        Self::with_theta_power(q, n, r, 1)
    }

    /// As [`CrFamily::new`] with `theta` replaced by `theta^s`.
    pub fn with_theta_power(q: u64, n: u64, r: u64, s: u64) -> Result<CrFamily> {
        let field = field_of_order(q)?;
        check_prime_length(n)?;
        if r < 2 {
            return Err(Error::AssumptionViolated(format!("r = {r} must be at least 2")));
        }
        if gcd(n * r, q) != 1 || gcd(n, r) != 1 {
            return Err(Error::NonCoprimeParams { n, r, q });
        }
        check_residue(q, n)?;
        let sf = SplittingField::with_theta_power(&field, (n * r) as usize, s)?;
        Ok(CrFamily {
            q,
            n,
            r,
            power: s,
            sf,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn field(&self) -> &FieldRef {
        self.sf.base()
    }

    pub fn splitting_field(&self) -> &SplittingField {
        &self.sf
    }

    pub fn theta_spec(&self) -> ThetaSpec {
        ThetaSpec::of(&self.sf, self.power)
    }

    pub fn lambda(&self) -> Vec<SignVector> {
        enumerate_lambda(self.q, self.r as usize).expect("q and r checked coprime")
    }

    /// Exponents `t + rj` (mod `nr`) with `(t + rj | n) = eps`.
    pub fn block_exponents(&self, t: u64, eps: i8) -> Vec<usize> {
        let (n, r) = (self.n, self.r);
        (1..=n)
            .map(|j| (t + r * j) % (n * r))
            .filter(|&e| legendre(e as i64, n) == Ok(eps))
            .map(|e| e as usize)
            .collect()
    }

    /// Root exponents of `g_eps`, ascending.
    pub fn root_exponents(&self, eps: &SignVector) -> Result<Vec<usize>> {
        if eps.len() != self.r as usize || !in_lambda(self.q, eps) {
            return Err(Error::NotInLambda(eps.0.clone()));
        }
        let mut exps: Vec<usize> = (0..self.r)
            .flat_map(|t| self.block_exponents(t, eps.0[t as usize]))
            .collect();
        exps.sort_unstable();
        Ok(exps)
    }

    pub fn code(&self, eps: &SignVector) -> Result<CyclicCode> {
        let exps = self.root_exponents(eps)?;
        let g = self
            .sf
            .poly_from_exponents(exps)
            .expect("closed sign vectors give base-field generators");
        CyclicCode::new(g, (self.n * self.r) as usize)
    }
}

/// Generator of `C_eps` for a single sign vector.
pub fn cr_generator(n: u64, r: u64, q: u64, eps: &SignVector) -> Result<CyclicCode> {
    CrFamily::new(q, n, r)?.code(eps)
}

/// Which of Ding's constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DingTag {
    #[serde(rename = "ding1")]
    One,
    #[serde(rename = "ding2")]
    Two,
    #[serde(rename = "ding3")]
    Three,
}

impl DingTag {
    pub fn from_number(tag: u8) -> Result<DingTag> {
        match tag {
            1 => Ok(DingTag::One),
            2 => Ok(DingTag::Two),
            3 => Ok(DingTag::Three),
            _ => Err(Error::AssumptionViolated(format!(
                "construction tag must be 1, 2 or 3, got {tag}"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            DingTag::One => 1,
            DingTag::Two => 2,
            DingTag::Three => 3,
        }
    }

    /// Sign changes `(a, b)` induced on `(eps1, eps2, eps3)` by the
    /// multipliers `a = find_multiplier(n1, n2, -1, 1)` and
    /// `b = find_multiplier(n1, n2, 1, -1)`.
    pub fn multiplier_actions(self) -> ([i8; 3], [i8; 3]) {
        match self {
            DingTag::One => ([-1, 1, -1], [-1, -1, 1]),
            DingTag::Two => ([-1, 1, -1], [1, -1, 1]),
            DingTag::Three => ([1, 1, -1], [-1, -1, 1]),
        }
    }

    /// The two equivalence classes `A1` (containing `(1,1,1)`) and `A2`.
    pub fn classes(self) -> [[SignVector; 4]; 2] {
        let a1: [[i8; 3]; 4] = match self {
            DingTag::One => [[1, 1, 1], [-1, -1, 1], [-1, 1, -1], [1, -1, -1]],
            DingTag::Two => [[1, 1, 1], [1, -1, 1], [-1, 1, -1], [-1, -1, -1]],
            DingTag::Three => [[1, 1, 1], [1, 1, -1], [-1, -1, 1], [-1, -1, -1]],
        };
        let a1 = a1.map(|e| SignVector(e.to_vec()));
        let a2: Vec<SignVector> = sign_triples()
            .into_iter()
            .filter(|e| !a1.contains(e))
            .collect();
        [a1, a2.try_into().expect("four triples outside A1")]
    }

    /// 1 or 2: the class of `eps`.
    pub fn class_of(self, eps: &SignVector) -> usize {
        if self.classes()[0].contains(eps) {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for DingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ding{}", self.number())
    }
}

/// All eight sign triples, `+1` before `-1`, first entry most significant.
pub fn sign_triples() -> Vec<SignVector> {
    (0..8u8)
        .map(|b| {
            SignVector(
                (0..3)
                    .map(|i| if (b >> (2 - i)) & 1 == 1 { -1 } else { 1 })
                    .collect(),
            )
        })
        .collect()
}

/// One of Ding's families of length `n1 n2`.
#[derive(Clone, Debug)]
pub struct DingFamily {
    tag: DingTag,
    q: u64,
    n1: u64,
    n2: u64,
    power: u64,
    sf: SplittingField,
}

impl DingFamily {
    /// Checks: `n1 != n2` odd primes, `(q|n1) = (q|n2) = 1`,
    /// `gcd(n1 n2, q) = 1`.
    pub fn new(tag: DingTag, n1: u64, n2: u64, q: u64) -> Result<DingFamily> {
        Self::with_theta_power(tag, n1, n2, q, 1)
    }

    /// As [`DingFamily::new`] with `theta` replaced by `theta^s`.
    pub fn with_theta_power(
        tag: DingTag,
        n1: u64,
        n2: u64,
        q: u64,
        s: u64,
    ) -> Result<DingFamily> {
        let field = field_of_order(q)?;
        check_prime_length(n1)?;
        check_prime_length(n2)?;
        if n1 == n2 {
            return Err(Error::AssumptionViolated(format!(
                "n1 and n2 must be distinct, both are {n1}"
            )));
        }
        if gcd(n1 * n2, q) != 1 {
            return Err(Error::NotCoprime { a: n1 * n2, b: q });
        }
        check_residue(q, n1)?;
        check_residue(q, n2)?;
        let sf = SplittingField::with_theta_power(&field, (n1 * n2) as usize, s)?;
        Ok(DingFamily {
            tag,
            q,
            n1,
            n2,
            power: s,
            sf,
        })
    }

    pub fn tag(&self) -> DingTag {
        self.tag
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    pub fn field(&self) -> &FieldRef {
        self.sf.base()
    }

    pub fn splitting_field(&self) -> &SplittingField {
        &self.sf
    }

    pub fn theta_spec(&self) -> ThetaSpec {
        ThetaSpec::of(&self.sf, self.power)
    }

    /// Exponents of the unit part `F1`: units `i` whose character (Jacobi
    /// symbol, `(i|n1)` or `(i|n2)` depending on the construction) is `eps`.
    pub fn unit_exponents(&self, eps: i8) -> Vec<usize> {
        let (n1, n2) = (self.n1, self.n2);
        (1..n1 * n2)
            .filter(|&i| i % n1 != 0 && i % n2 != 0)
            .filter(|&i| {
                let ch = match self.tag {
                    DingTag::One => jacobi2(i as i64, n1, n2),
                    DingTag::Two => legendre(i as i64, n1),
                    DingTag::Three => legendre(i as i64, n2),
                };
                ch == Ok(eps)
            })
            .map(|i| i as usize)
            .collect()
    }

    /// Exponents `n1 i` with `(n1 i | n2) = eps`.
    pub fn f2_exponents(&self, eps: i8) -> Vec<usize> {
        let (n1, n2) = (self.n1, self.n2);
        (1..n2)
            .filter(|&i| legendre((n1 * i) as i64, n2) == Ok(eps))
            .map(|i| (n1 * i) as usize)
            .collect()
    }

    /// Exponents `n2 i` with `(n2 i | n1) = eps`.
    pub fn f3_exponents(&self, eps: i8) -> Vec<usize> {
        let (n1, n2) = (self.n1, self.n2);
        (1..n1)
            .filter(|&i| legendre((n2 * i) as i64, n1) == Ok(eps))
            .map(|i| (n2 * i) as usize)
            .collect()
    }

    pub fn root_exponents(&self, eps: &SignVector) -> Result<Vec<usize>> {
        if eps.len() != 3 || eps.0.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::NotInLambda(eps.0.clone()));
        }
        let mut exps = self.unit_exponents(eps.0[0]);
        exps.extend(self.f2_exponents(eps.0[1]));
        exps.extend(self.f3_exponents(eps.0[2]));
        exps.sort_unstable();
        Ok(exps)
    }

    pub fn code(&self, eps: &SignVector) -> Result<CyclicCode> {
        let exps = self.root_exponents(eps)?;
        let g = self
            .sf
            .poly_from_exponents(exps)
            .expect("residue conditions give base-field generators");
        CyclicCode::new(g, (self.n1 * self.n2) as usize)
    }

    /// The quadratic-residue generator of length `n1` built from the `F3`
    /// roots, i.e. `F3,eps` as a polynomial dividing `x^n1 - 1`.
    pub fn short_qr_generator(&self, eps: i8) -> Poly {
        self.sf
            .poly_from_exponents(self.f3_exponents(eps))
            .expect("residue classes are q-closed")
    }
}

/// Generator of Ding's construction `tag` for one sign triple.
pub fn ding_generator(tag: u8, n1: u64, n2: u64, q: u64, eps: &SignVector) -> Result<CyclicCode> {
    DingFamily::new(DingTag::from_number(tag)?, n1, n2, q)?.code(eps)
}

/// Smallest positive `u` coprime to `n1 n2` with `(u|n1) = s1`, `(u|n2) = s2`.
pub fn find_multiplier(n1: u64, n2: u64, s1: i8, s2: i8) -> u64 {
    (1..)
        .find(|&u| legendre(u as i64, n1) == Ok(s1) && legendre(u as i64, n2) == Ok(s2))
        .expect("a suitable residue class exists by the CRT")
}

/// Applies a sign-change pattern to a triple.
pub fn act(pattern: [i8; 3], eps: &SignVector) -> SignVector {
    SignVector(eps.0.iter().zip(pattern).map(|(&e, p)| e * p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[i8]) -> SignVector {
        SignVector(v.to_vec())
    }

    #[test]
    fn lambda_enumeration_order() {
        let l = enumerate_lambda(2, 3).unwrap();
        assert_eq!(
            l,
            vec![sv(&[1, 1, 1]), sv(&[1, -1, -1]), sv(&[-1, 1, 1]), sv(&[-1, -1, -1])]
        );
        assert_eq!(enumerate_lambda(3, 2).unwrap().len(), 4);
        assert_eq!(enumerate_lambda(4, 3).unwrap().len(), 8);
        assert!(enumerate_lambda(2, 4).is_err());
        assert!(l.iter().all(|e| in_lambda(2, e)));
        assert!(!in_lambda(2, &sv(&[1, 1, -1])));
    }

    #[test]
    fn qr_generators_of_length_seven() {
        let mut pair = vec![
            qr_generator(7, 2, 1).unwrap().reps(),
            qr_generator(7, 2, -1).unwrap().reps(),
        ];
        pair.sort();
        assert_eq!(pair, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
        assert_eq!(qr_generator(5, 4, 1).unwrap().degree(), Some(2));
        assert!(matches!(qr_generator(7, 3, 1), Err(Error::QNotResidue { .. })));
    }

    #[test]
    fn multipliers() {
        assert_eq!(find_multiplier(7, 17, 1, 1), 1);
        let a = find_multiplier(7, 17, -1, 1);
        assert_eq!(legendre(a as i64, 7).unwrap(), -1);
        assert_eq!(legendre(a as i64, 17).unwrap(), 1);
        assert!((1..a).all(|u| legendre(u as i64, 7) != Ok(-1) || legendre(u as i64, 17) != Ok(1)));
    }

    #[test]
    fn degrees_and_dimensions() {
        let fam = CrFamily::new(4, 5, 3).unwrap();
        for eps in fam.lambda() {
            let c = fam.code(&eps).unwrap();
            assert_eq!(c.generator().degree(), Some(3 * 2));
            assert_eq!(c.dimension(), 9);
        }
        for tag in [DingTag::One, DingTag::Two, DingTag::Three] {
            let fam = DingFamily::new(tag, 5, 7, 4).unwrap();
            for eps in sign_triples() {
                assert_eq!(fam.code(&eps).unwrap().dimension(), 18);
            }
        }
    }

    #[test]
    fn rejected_parameters() {
        assert!(matches!(CrFamily::new(3, 7, 2), Err(Error::QNotResidue { .. })));
        assert!(matches!(CrFamily::new(2, 7, 7), Err(Error::NonCoprimeParams { .. })));
        assert!(matches!(CrFamily::new(2, 9, 3), Err(Error::NotOddPrime(9))));
        assert!(CrFamily::new(2, 7, 1).is_err());
        assert!(DingFamily::new(DingTag::One, 7, 7, 2).is_err());
    }

    #[test]
    fn orbits_partition_lambda() {
        let orbits = lambda_orbits(2, 3).unwrap();
        assert_eq!(orbits.len(), 2);
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn multiplier_actions_permute_each_family() {
        for tag in [DingTag::One, DingTag::Two, DingTag::Three] {
            let fam = DingFamily::new(tag, 5, 7, 4).unwrap();
            let a = find_multiplier(5, 7, -1, 1);
            let b = find_multiplier(5, 7, 1, -1);
            let (pa, pb) = tag.multiplier_actions();
            for eps in sign_triples() {
                let c = fam.code(&eps).unwrap();
                assert_eq!(c.multiplier_image(a).unwrap(), fam.code(&act(pa, &eps)).unwrap());
                assert_eq!(c.multiplier_image(b).unwrap(), fam.code(&act(pb, &eps)).unwrap());
            }
        }
    }

    #[test]
    fn classes_are_closed_under_the_actions() {
        for tag in [DingTag::One, DingTag::Two, DingTag::Three] {
            let [a1, a2] = tag.classes();
            let (pa, pb) = tag.multiplier_actions();
            for class in [&a1, &a2] {
                for eps in class.iter() {
                    assert!(class.contains(&act(pa, eps)));
                    assert!(class.contains(&act(pb, eps)));
                }
            }
            assert!(a1.iter().all(|e| !a2.contains(e)));
        }
    }

    #[test]
    fn theta_power_relabels() {
        // theta -> theta^-1 sends every root set to its inverse
        let fam = CrFamily::new(2, 7, 3).unwrap();
        let inv = CrFamily::with_theta_power(2, 7, 3, 20).unwrap();
        for eps in fam.lambda() {
            let g = fam.code(&eps).unwrap().generator().reps();
            let mut h = inv.code(&eps).unwrap().generator().reps();
            h.reverse();
            assert_eq!(g, h);
        }
        assert!(CrFamily::with_theta_power(2, 7, 3, 7).is_err());
    }
}

