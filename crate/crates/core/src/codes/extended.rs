use serde::Serialize;

use super::{CyclicCode, LinearCode};
use crate::error::{Error, Result};
use crate::gf::Elem;

/// A cyclic code extended by one coordinate `c_inf = -gamma * c(1)`.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    pub base: CyclicCode,
    pub gamma: Elem,
    pub code: LinearCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualVerdict {
    pub length: usize,
    pub dimension: usize,
    pub gamma: Elem,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

/// Extends a cyclic code of length `n1 n2` with the smallest `gamma` solving
/// `1 + gamma^2 n1 n2 = 0`, and checks whether the result is self-dual.
pub fn extend_self_dual(
    code: &CyclicCode,
    n1: u64,
    n2: u64,
) -> Result<(ExtendedCode, SelfDualVerdict)> {
    let n = code.len();
    if n1 * n2 != n as u64 {
        return Err(Error::LengthMismatch {
            expected: n,
            got: (n1 * n2) as usize,
        });
    }
    let f = code.field().clone();
    let nn = f.from_int(n as i64);
    let gamma = f
        .elements()
        .find(|&g| f.add(Elem::ONE, f.mul(f.mul(g, g), nn)).is_zero())
        .ok_or(Error::NoGammaExists)?;
    let neg_gamma = f.neg(gamma);
    let rows: Vec<Vec<Elem>> = code
        .generator_matrix()
        .into_iter()
        .map(|mut row| {
            let sum = row.iter().fold(Elem::ZERO, |a, &b| f.add(a, b));
            row.push(f.mul(neg_gamma, sum));
            row
        })
        .collect();
    let self_orthogonal = rows.iter().enumerate().all(|(i, a)| {
        rows[i..].iter().all(|b| {
            a.iter()
                .zip(b)
                .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                .is_zero()
        })
    });
    let linear = LinearCode::new(&f, rows)?;
    let dimension = linear.dimension();
    let verdict = SelfDualVerdict {
        length: n + 1,
        dimension,
        gamma,
        self_orthogonal,
        self_dual: self_orthogonal && 2 * dimension == n + 1,
    };
    Ok((
        ExtendedCode {
            base: code.clone(),
            gamma,
            code: linear,
        },
        verdict,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::poly::{factor_xn_minus_1, Poly};

    #[test]
    fn extended_hamming_is_self_dual() {
        // [8,4,4] extended Hamming code: n1 n2 = 7 * 1
        let f = make_field(2, 1).unwrap();
        let c = CyclicCode::new(Poly::from_reps(&f, &[1, 1, 0, 1]).unwrap(), 7).unwrap();
        let (ext, v) = extend_self_dual(&c, 7, 1).unwrap();
        assert_eq!(v.gamma, Elem::ONE);
        assert!(v.self_dual);
        assert_eq!(ext.code.len(), 8);
        for row in ext.code.rows() {
            let sum = row[..7].iter().filter(|e| !e.is_zero()).count() % 2;
            assert_eq!(row[7].0 as usize, sum);
        }
    }

    #[test]
    fn missing_gamma_is_reported() {
        // 1 + 7 gamma^2 = 1 + gamma^2 over GF(3) never vanishes
        let f = make_field(3, 1).unwrap();
        let g = factor_xn_minus_1(&f, 7).unwrap()[0].clone();
        let c = CyclicCode::new(g, 7).unwrap();
        assert!(matches!(extend_self_dual(&c, 7, 1), Err(Error::NoGammaExists)));
    }
}
