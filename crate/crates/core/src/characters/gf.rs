//! Small finite-field arithmetic F_p[y]/(f) used by the matrix oracle to
//! realize eigenvalues in positive characteristic: the field is a quotient of
//! the cyclotomic ring by a prime over p, represented concretely by an
//! irreducible polynomial.

use crate::error::{Error, Result};

/// The field F_{p^d} as F_p[y]/(modulus), with elements stored as coefficient
/// vectors of length d.
#[derive(Clone, Debug)]
pub struct FieldExt {
    pub p: u64,
    /// monic irreducible polynomial of degree d, ascending coefficients,
    /// length d+1
    pub modulus: Vec<u64>,
}

pub type FqElem = Vec<u64>;

impl FieldExt {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.degree() as u32)
    }

    pub fn zero(&self) -> FqElem {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> FqElem {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    pub fn from_int(&self, v: u64) -> FqElem {
        let mut e = self.zero();
        e[0] = v % self.p;
        e
    }

    /// The class of y.
    pub fn gen(&self) -> FqElem {
        let mut e = self.zero();
        if self.degree() > 1 {
            e[1] = 1;
        } else {
            // degree-1 field: y = -modulus[0]
            e[0] = (self.p - self.modulus[0] % self.p) % self.p;
        }
        e
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let d = self.degree();
        let mut prod = vec![0u128; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x as u128 * y as u128;
            }
        }
        // reduce by the monic modulus
        for i in (d..prod.len()).rev() {
            let c = (prod[i] % self.p as u128) as u64;
            prod[i] = 0;
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus.iter().enumerate().take(d) {
                // subtract c * m * y^(i-d+j)
                prod[i - d + j] += c as u128 * ((self.p - m % self.p) % self.p) as u128;
            }
        }
        prod[..d]
            .iter()
            .map(|&c| (c % self.p as u128) as u64)
            .collect()
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// A fixed element of multiplicative order exactly `m` (requires
    /// m | p^d - 1). Deterministic: tries y, y+1, y+2, ...
    pub fn root_of_unity(&self, m: u64) -> Result<FqElem> {
        if m == 1 {
            return Ok(self.one());
        }
        let q1 = self.size() - 1;
        if q1 % m as u128 != 0 {
            return Err(Error::internal(format!(
                "no element of order {m} in a field of size {}",
                self.size()
            )));
        }
        let primes = crate::cyclotomic::prime_factors(m);
        let mut cand = self.gen();
        loop {
            let w = self.pow(&cand, q1 / m as u128);
            let full = !self.is_zero(&self.sub(&w, &self.one()))
                || m == 1;
            if full {
                let order_ok = primes.iter().all(|&r| {
                    let t = self.pow(&w, (m / r) as u128);
                    !self.is_zero(&self.sub(&t, &self.one()))
                });
                if order_ok && self.is_zero(&self.sub(&self.pow(&w, m as u128), &self.one())) {
                    return Ok(w);
                }
            }
            cand[0] = (cand[0] + 1) % self.p;
            if self.is_zero(&cand) {
                return Err(Error::internal(format!(
                    "exhausted candidates for an order-{m} element"
                )));
            }
        }
    }
}

fn poly_mod_pow_y(field_p: u64, modulus: &[u64], e: u128) -> Vec<u64> {
    // y^e mod (modulus) over F_p, used for irreducibility testing
    let ctx = FieldExt {
        p: field_p,
        modulus: modulus.to_vec(),
    };
    ctx.pow(&ctx.gen(), e)
}

fn poly_gcd_is_one(p: u64, a: &[u64], b: &[u64]) -> bool {
    // gcd over F_p[y]; inputs ascending coefficients
    let norm = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    };
    let inv_mod = |a: u64| -> u64 {
        // p prime
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    norm(&mut x);
    norm(&mut y);
    loop {
        if y.len() == 1 {
            return y[0] != 0 || x.len() == 1 && x[0] != 0;
        }
        // x mod y
        let lead_inv = inv_mod(*y.last().unwrap());
        while x.len() >= y.len() && !(x.len() == 1 && x[0] == 0) {
            let c = *x.last().unwrap() * lead_inv % p;
            let shift = x.len() - y.len();
            for (j, &m) in y.iter().enumerate() {
                let idx = shift + j;
                x[idx] = (x[idx] + p - c * m % p) % p;
            }
            norm(&mut x);
            if x.iter().all(|&c| c == 0) {
                x = vec![0];
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
}

/// Deterministically finds a monic irreducible polynomial of degree `d` over
/// F_p (lexicographically first by ascending coefficient vector).
pub fn find_irreducible(p: u64, d: usize) -> Result<FieldExt> {
    if d == 0 {
        return Err(Error::internal("degree must be positive"));
    }
    if d == 1 {
        return Ok(FieldExt {
            p,
            modulus: vec![0, 1],
        });
    }
    let primes = crate::cyclotomic::prime_factors(d as u64);
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    loop {
        // irreducible iff y^{p^d} = y mod f and gcd(y^{p^{d/r}} - y, f) = 1
        // for every prime r | d
        let mut ok = true;
        let top = poly_mod_pow_y(p, &coeffs, (p as u128).pow(d as u32));
        let ctx = FieldExt {
            p,
            modulus: coeffs.clone(),
        };
        if !ctx.is_zero(&ctx.sub(&top, &ctx.gen())) {
            ok = false;
        }
        if ok {
            for &r in &primes {
                let e = (p as u128).pow((d as u64 / r) as u32);
                let mut frob = poly_mod_pow_y(p, &coeffs, e);
                // frob - y
                let g = ctx.gen();
                frob = ctx.sub(&frob, &g);
                if !poly_gcd_is_one(p, &frob, &coeffs) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(FieldExt { p, modulus: coeffs });
        }
        // next coefficient vector (constant term fastest)
        let mut i = 0;
        loop {
            if i == d {
                return Err(Error::internal(format!(
                    "no irreducible polynomial of degree {d} over F_{p} found"
                )));
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_arithmetic() {
        let f = find_irreducible(3, 2).unwrap();
        assert_eq!(f.size(), 9);
        // an element of multiplicative order 8 exists, and of order 4
        let w = f.root_of_unity(8).unwrap();
        assert!(f.is_zero(&f.sub(&f.pow(&w, 8), &f.one())));
        assert!(!f.is_zero(&f.sub(&f.pow(&w, 4), &f.one())));
        let i = f.root_of_unity(4).unwrap();
        let m1 = f.mul(&i, &i);
        assert!(f.is_zero(&f.add(&m1, &f.one())));
    }

    #[test]
    fn fermat_inverse() {
        let f = find_irreducible(5, 3).unwrap();
        assert_eq!(f.size(), 125);
        let a = f.gen();
        let inv = f.pow(&a, f.size() - 2);
        assert_eq!(f.mul(&a, &inv), f.one());
    }

    #[test]
    fn prime_field_degree_one() {
        let f = find_irreducible(7, 1).unwrap();
        let w = f.root_of_unity(6).unwrap();
        // 3 and 5 are the generators of F_7^*; the smallest found must have
        // order exactly 6
        let mut pow = f.one();
        let mut order = 0;
        for k in 1..=6 {
            pow = f.mul(&pow, &w);
            if f.is_zero(&f.sub(&pow, &f.one())) {
                order = k;
                break;
            }
        }
        assert_eq!(order, 6);
    }
}
