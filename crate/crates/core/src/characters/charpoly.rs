//! Division-free characteristic polynomials (Berkowitz) and exact root
//! multiplicities of roots of unity, by repeated synthetic division.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

use super::gf::{FieldExt, FqElem};

/// Characteristic polynomial of an integer matrix, monic, coefficients
/// descending from the leading term: out[k] is the coefficient of x^(n-k).
pub fn charpoly_bigint(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // Berkowitz iteration: vector of the characteristic polynomial of the
    // leading principal r x r block, built by Toeplitz products.
    let mut v = vec![BigInt::one(), -a[0][0].clone()];
    for r in 2..=n {
        let rr = r - 1; // index of the new row/column
        // powers of the principal block applied to the new column
        let mut col: Vec<BigInt> = (0..rr).map(|i| a[i][rr].clone()).collect();
        let mut dots = Vec::with_capacity(r);
        // dots[k] = row . B^k . col
        for _ in 0..rr {
            let dot = (0..rr).fold(BigInt::zero(), |acc, i| acc + &a[rr][i] * &col[i]);
            dots.push(dot);
            let mut next = vec![BigInt::zero(); rr];
            for i in 0..rr {
                if !col[i].is_zero() {
                    for (k, row) in a.iter().enumerate().take(rr) {
                        next[k] += &row[i] * &col[i];
                    }
                }
            }
            col = next;
        }
        // Toeplitz (r+1) x r: T[i][j] = 1 if i = j, -a[rr][rr] if i = j+1,
        // -dots[i-j-2] if i > j+1
        let mut out = vec![BigInt::zero(); r + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for (j, vj) in v.iter().enumerate() {
                if i == j {
                    acc += vj;
                } else if i == j + 1 {
                    acc -= &a[rr][rr] * vj;
                } else if i > j + 1 && i - j - 2 < dots.len() {
                    acc -= &dots[i - j - 2] * vj;
                }
            }
            *slot = acc;
        }
        v = out;
    }
    v
}

/// Characteristic polynomial over F_p, same layout as `charpoly_bigint`.
pub fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    if n == 0 {
        return vec![1];
    }
    let mulm = |x: u64, y: u64| (x as u128 * y as u128 % p as u128) as u64;
    let mut v = vec![1u64, (p - a[0][0] % p) % p];
    for r in 2..=n {
        let rr = r - 1;
        let mut col: Vec<u64> = (0..rr).map(|i| a[i][rr] % p).collect();
        let mut dots = Vec::with_capacity(r);
        for _ in 0..rr {
            let mut dot = 0u64;
            for i in 0..rr {
                dot = (dot + mulm(a[rr][i] % p, col[i])) % p;
            }
            dots.push(dot);
            let mut next = vec![0u64; rr];
            for i in 0..rr {
                if col[i] != 0 {
                    for (k, row) in a.iter().enumerate().take(rr) {
                        next[k] = (next[k] + mulm(row[i] % p, col[i])) % p;
                    }
                }
            }
            col = next;
        }
        let neg_diag = (p - a[rr][rr] % p) % p;
        let mut out = vec![0u64; r + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = 0u64;
            for (j, &vj) in v.iter().enumerate() {
                if i == j {
                    acc = (acc + vj) % p;
                } else if i == j + 1 {
                    acc = (acc + mulm(neg_diag, vj)) % p;
                } else if i > j + 1 && i - j - 2 < dots.len() {
                    acc = (acc + mulm((p - dots[i - j - 2]) % p, vj)) % p;
                }
            }
            *slot = acc;
        }
        v = out;
    }
    v
}

/// Multiplicity of `root` as a zero of the integer polynomial `poly`
/// (descending coefficients), via synthetic division in the cyclotomic ring.
pub fn root_multiplicity_cyc(poly: &[BigInt], root: &CycInt) -> u64 {
    let mut coeffs: Vec<CycInt> = poly.iter().map(|c| CycInt::from_int(c.clone())).collect();
    let mut mult = 0;
    loop {
        // divide by (x - root): Horner
        let mut quotient = Vec::with_capacity(coeffs.len().saturating_sub(1));
        let mut acc = CycInt::zero();
        for c in &coeffs {
            acc = acc.mul(root).add(c);
            quotient.push(acc.clone());
        }
        let rem = quotient.pop().unwrap_or_else(CycInt::zero);
        if !rem.is_zero() || quotient.is_empty() {
            return mult;
        }
        mult += 1;
        coeffs = quotient;
    }
}

/// Multiplicity of `root` (an element of the extension field) as a zero of a
/// polynomial with F_p coefficients.
pub fn root_multiplicity_fq(field: &FieldExt, poly: &[u64], root: &FqElem) -> u64 {
    let mut coeffs: Vec<FqElem> = poly.iter().map(|&c| field.from_int(c)).collect();
    let mut mult = 0;
    loop {
        let mut quotient = Vec::with_capacity(coeffs.len().saturating_sub(1));
        let mut acc = field.zero();
        for c in &coeffs {
            acc = field.add(&field.mul(&acc, root), c);
            quotient.push(acc.clone());
        }
        let rem = quotient.pop().unwrap_or_else(|| field.zero());
        if !field.is_zero(&rem) || quotient.is_empty() {
            return mult;
        }
        mult += 1;
        coeffs = quotient;
    }
}

/// Characteristic polynomial of a rational matrix known to have integer
/// characteristic coefficients (used by the explicit module oracles).
pub fn charpoly_rational(a: &[Vec<num_rational::BigRational>]) -> Result<Vec<BigInt>> {
    use num_rational::BigRational;
    let n = a.len();
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let mut v = vec![BigRational::one(), -a[0][0].clone()];
    for r in 2..=n {
        let rr = r - 1;
        let mut col: Vec<BigRational> = (0..rr).map(|i| a[i][rr].clone()).collect();
        let mut dots = Vec::with_capacity(r);
        for _ in 0..rr {
            let dot = (0..rr).fold(BigRational::zero(), |acc, i| acc + &a[rr][i] * &col[i]);
            dots.push(dot);
            let mut next = vec![BigRational::zero(); rr];
            for i in 0..rr {
                if !col[i].is_zero() {
                    for (k, row) in a.iter().enumerate().take(rr) {
                        next[k] += &row[i] * &col[i];
                    }
                }
            }
            col = next;
        }
        let mut out = vec![BigRational::zero(); r + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = BigRational::zero();
            for (j, vj) in v.iter().enumerate() {
                if i == j {
                    acc += vj;
                } else if i == j + 1 {
                    acc -= &a[rr][rr] * vj;
                } else if i > j + 1 && i - j - 2 < dots.len() {
                    acc -= &dots[i - j - 2] * vj;
                }
            }
            *slot = acc;
        }
        v = out;
    }
    v.into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(Error::internal(
                    "characteristic polynomial of an integral action had a non-integer coefficient",
                ))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycInt;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn charpoly_2x2() {
        // [[1, 2], [3, 4]]: x^2 - 5x - 2
        let a = vec![big(&[1, 2]), big(&[3, 4])];
        assert_eq!(charpoly_bigint(&a), big(&[1, -5, -2]));
    }

    #[test]
    fn charpoly_permutation_matrix() {
        // 4-cycle permutation matrix: x^4 - 1
        let mut a = vec![vec![BigInt::zero(); 4]; 4];
        for i in 0..4 {
            a[(i + 1) % 4][i] = BigInt::one();
        }
        assert_eq!(charpoly_bigint(&a), big(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn charpoly_mod_matches() {
        let a = vec![big(&[1, 2]), big(&[3, 4])];
        let am = vec![vec![1u64, 2], vec![3, 4]];
        let pz = charpoly_bigint(&a);
        for p in [5u64, 7, 11] {
            let pm = charpoly_mod(&am, p);
            for (c, cm) in pz.iter().zip(&pm) {
                let r = ((c % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                assert_eq!(r, BigInt::from(*cm));
            }
        }
    }

    #[test]
    fn cyc_root_multiplicity() {
        // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
        let poly = big(&[1, -1, -1, 1]);
        assert_eq!(root_multiplicity_cyc(&poly, &CycInt::one()), 2);
        assert_eq!(root_multiplicity_cyc(&poly, &CycInt::from_int(-1)), 1);
        assert_eq!(
            root_multiplicity_cyc(&poly, &CycInt::root_of_unity(4, 1)),
            0
        );
        // x^5 - 1 has every fifth root once
        let poly = big(&[1, 0, 0, 0, 0, -1]);
        for j in 0..5 {
            assert_eq!(
                root_multiplicity_cyc(&poly, &CycInt::root_of_unity(5, j)),
                1
            );
        }
    }

    #[test]
    fn fq_root_multiplicity() {
        // over F_3, x^2 + 1 has the two order-4 roots in F_9
        let field = super::super::gf::find_irreducible(3, 2).unwrap();
        let i = field.root_of_unity(4).unwrap();
        let poly = vec![1u64, 0, 1];
        assert_eq!(root_multiplicity_fq(&field, &poly, &i), 1);
        let minus_i = field.pow(&i, 3);
        assert_eq!(root_multiplicity_fq(&field, &poly, &minus_i), 1);
        assert_eq!(root_multiplicity_fq(&field, &poly, &field.one()), 0);
    }
}
