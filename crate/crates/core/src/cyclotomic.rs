//! Exact arithmetic in rings of cyclotomic integers Z[zeta_m].
//!
//! Elements are stored on the power basis {zeta_m^i : 0 <= i < phi(m)},
//! reduced by the m-th cyclotomic polynomial, with arbitrary-precision
//! integer coefficients. Conductors are unified to the lcm on mixed-conductor
//! arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient.
pub fn phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Distinct prime factors.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn cyclo_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the m-th cyclotomic polynomial, ascending degree.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by the cyclotomic polynomials of all proper divisors
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    cyclo_cache().lock().unwrap().insert(m, arc.clone());
    arc
}

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact division by a monic divisor; panics if the division is not exact
/// (only used on polynomials where exactness is a theorem).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let (q, r) = poly_divrem(num, den);
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}

/// Division with remainder by a monic divisor.
fn poly_divrem(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    if rem.len() <= dd {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[i - dd + j] -= t;
        }
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

/// Index of a root of unity: denotes zeta_m^j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIndex {
    pub m: u64,
    pub j: u64,
}

impl RootIndex {
    pub fn new(m: u64, j: u64) -> Self {
        assert!(m >= 1);
        RootIndex { m, j: j % m }
    }

    /// Multiplicative order of the root.
    pub fn order(&self) -> u64 {
        self.m / self.m.gcd(&self.j)
    }

    /// Same root expressed at its exact order as conductor.
    pub fn normalized(&self) -> RootIndex {
        let g = self.m.gcd(&self.j);
        RootIndex {
            m: self.m / g,
            j: self.j / g,
        }
    }

    /// Same root expressed at conductor `target` (order must divide it).
    pub fn at_conductor(&self, target: u64) -> RootIndex {
        let n = self.normalized();
        assert!(target % n.m == 0);
        RootIndex {
            m: target,
            j: n.j * (target / n.m),
        }
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta({})^{}", self.m, self.j)
    }
}

impl fmt::Debug for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cyclotomic integer: an element of Z[zeta_m] on the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    m: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero() -> Self {
        CycInt {
            m: 1,
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        CycInt {
            m: 1,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        CycInt {
            m: 1,
            coeffs: vec![v.into()],
        }
    }

    /// zeta_m^j as an element of Z[zeta_m].
    pub fn root_of_unity(m: u64, j: u64) -> Self {
        assert!(m >= 1);
        let mut dense = vec![BigInt::zero(); (j % m) as usize + 1];
        *dense.last_mut().unwrap() = BigInt::one();
        CycInt::from_dense(m, dense)
    }

    pub fn from_root(r: RootIndex) -> Self {
        CycInt::root_of_unity(r.m, r.j)
    }

    /// Builds from a dense polynomial in zeta_m, reducing into the power basis.
    pub fn from_dense(m: u64, mut dense: Vec<BigInt>) -> Self {
        // fold exponents mod m first (x^m = 1), then reduce by the
        // cyclotomic polynomial
        let deg = phi(m) as usize;
        if dense.len() > m as usize {
            let mut folded = vec![BigInt::zero(); m as usize];
            for (i, c) in dense.into_iter().enumerate() {
                folded[i % m as usize] += c;
            }
            dense = folded;
        }
        if dense.len() > deg {
            let modulus = cyclotomic_polynomial(m);
            let (_, rem) = poly_divrem(&dense, &modulus);
            dense = rem;
        }
        dense.resize(deg, BigInt::zero());
        CycInt { m, coeffs: dense }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The integer value, when the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element at conductor `target`, a multiple of the
    /// current conductor.
    pub fn lift_to(&self, target: u64) -> CycInt {
        assert!(target % self.m == 0, "conductor lift requires divisibility");
        if target == self.m {
            return self.clone();
        }
        let k = (target / self.m) as usize;
        let mut dense = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * k] = c.clone();
        }
        CycInt::from_dense(target, dense)
    }

    /// Attempts to re-express the element at a smaller conductor `target`
    /// dividing the current one. Returns `None` when the element does not lie
    /// in Z[zeta_target].
    pub fn descend_to(&self, target: u64) -> Option<CycInt> {
        assert!(self.m % target == 0);
        if target == self.m {
            return Some(self.clone());
        }
        let dim_big = self.coeffs.len();
        let dim_small = phi(target) as usize;
        // columns: lifts of the small power basis
        let mut cols = Vec::with_capacity(dim_small);
        for i in 0..dim_small {
            cols.push(CycInt::root_of_unity(target, i as u64).lift_to(self.m));
        }
        // solve the rational linear system cols * x = self
        let mut aug: Vec<Vec<BigRational>> = (0..dim_big)
            .map(|r| {
                let mut row: Vec<BigRational> = cols
                    .iter()
                    .map(|c| BigRational::from(c.coeffs[r].clone()))
                    .collect();
                row.push(BigRational::from(self.coeffs[r].clone()));
                row
            })
            .collect();
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..dim_small {
            let Some(p) = (pivot_row..dim_big).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, p);
            let inv = aug[pivot_row][col].recip();
            for c in col..=dim_small {
                let v = &aug[pivot_row][c] * &inv;
                aug[pivot_row][c] = v;
            }
            for r in 0..dim_big {
                if r != pivot_row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in col..=dim_small {
                        let v = &aug[r][c] - &f * &aug[pivot_row][c];
                        aug[r][c] = v;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        // inconsistent system: element outside the subfield
        for r in pivot_row..dim_big {
            if !aug[r][dim_small].is_zero() {
                return None;
            }
        }
        let mut coeffs = vec![BigInt::zero(); dim_small];
        for (r, c) in pivots {
            let v = &aug[r][dim_small];
            if !v.denom().is_one() {
                return None;
            }
            coeffs[c] = v.numer().clone();
        }
        let candidate = CycInt { m: target, coeffs };
        if candidate.lift_to(self.m).coeffs == self.coeffs {
            Some(candidate)
        } else {
            None
        }
    }

    fn unify(&self, other: &CycInt) -> (CycInt, CycInt) {
        let m = self.m.lcm(&other.m);
        (self.lift_to(m), other.lift_to(m))
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        let (a, b) = self.unify(other);
        let dense = poly_mul(&a.coeffs, &b.coeffs);
        CycInt::from_dense(a.m, dense)
    }

    pub fn mul_int(&self, k: &BigInt) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplication by zeta_m^j at the element's own conductor.
    pub fn mul_root(&self, j: u64) -> CycInt {
        let j = j % self.m;
        let mut dense = vec![BigInt::zero(); self.coeffs.len() + j as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i + j as usize] = c.clone();
        }
        CycInt::from_dense(self.m, dense)
    }

    /// Galois action zeta |-> zeta^k for k coprime to the conductor.
    pub fn galois(&self, k: u64) -> CycInt {
        let k = k % self.m;
        assert!(self.m == 1 || self.m.gcd(&k) == 1);
        let mut dense = vec![BigInt::zero(); self.m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(i as u64 * k % self.m) as usize] += c;
        }
        CycInt::from_dense(self.m, dense)
    }

    /// Complex conjugation.
    pub fn conj(&self) -> CycInt {
        if self.m <= 2 {
            return self.clone();
        }
        self.galois(self.m - 1)
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<CycInt> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(CycInt { m: self.m, coeffs })
    }

    pub fn equals(&self, other: &CycInt) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "zeta({})^{}", self.m, i)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        CycInt::add(self, rhs)
    }
}
impl std::ops::Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        CycInt::sub(self, rhs)
    }
}
impl std::ops::Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        CycInt::mul(self, rhs)
    }
}
impl std::ops::Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt::neg(self)
    }
}

/// Sum_k values[k] * zeta_m^{-jk}, the inner sum of the eigenvalue
/// multiplicity extraction; the caller divides by m and asserts integrality.
pub fn inner_dft(values: &[CycInt], j: u64) -> CycInt {
    let m = values.len() as u64;
    let mut acc = CycInt::zero();
    for (k, v) in values.iter().enumerate() {
        let e = (j * k as u64) % m;
        let root = CycInt::root_of_unity(m, (m - e) % m);
        acc = acc.add(&v.mul(&root));
    }
    acc
}

/// Multiplicity extraction: (1/m) * inner_dft, asserting the result is a
/// non-negative rational integer.
pub fn dft_multiplicity(values: &[CycInt], j: u64) -> Result<BigInt> {
    let m = values.len() as u64;
    let s = inner_dft(values, j);
    let divided = s
        .div_exact_int(&BigInt::from(m))
        .ok_or_else(|| Error::internal(format!("multiplicity sum not divisible by {m}")))?;
    let v = divided
        .as_integer()
        .ok_or_else(|| Error::internal("multiplicity is not a rational integer".to_string()))?;
    if v.is_negative() {
        return Err(Error::internal(format!("negative multiplicity {v}")));
    }
    Ok(v)
}

/// Exact square root of a discriminant D = 1 mod 4 as a cyclotomic integer,
/// via the quadratic Gauss sum over the squarefree kernel of D.
pub fn sqrt_discriminant(d: &BigInt) -> Result<CycInt> {
    let four = BigInt::from(4);
    if ((d % &four) + &four) % &four != BigInt::one() {
        return Err(Error::domain(format!("discriminant {d} is not 1 mod 4")));
    }
    let neg = d.is_negative();
    let mut abs: u64 = d
        .abs()
        .try_into()
        .map_err(|_| Error::domain("discriminant too large"))?;
    // split off the square part
    let mut square_part: u64 = 1;
    let mut p = 2u64;
    let mut kernel = 1u64;
    while p * p <= abs {
        if abs % p == 0 {
            let mut e = 0;
            while abs % p == 0 {
                abs /= p;
                e += 1;
            }
            square_part *= p.pow(e / 2);
            if e % 2 == 1 {
                kernel *= p;
            }
        }
        p += 1;
    }
    if abs > 1 {
        kernel *= abs;
    }
    let m = kernel;
    let mut dense = vec![BigInt::zero(); m as usize];
    for j in 0..m {
        dense[((j as u128 * j as u128) % m as u128) as usize] += BigInt::one();
    }
    let tau = CycInt::from_dense(m, dense);
    // tau^2 equals the signed squarefree kernel; verify the sign matches D
    let expected = if neg {
        -BigInt::from(kernel)
    } else {
        BigInt::from(kernel)
    };
    let sq = tau.mul(&tau);
    if !sq.equals(&CycInt::from_int(expected)) {
        return Err(Error::internal(format!(
            "gauss sum square mismatch for discriminant {d}"
        )));
    }
    Ok(tau.mul_int(&BigInt::from(square_part)))
}

/// Jacobi symbol (a | n) for odd positive n.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1 && n > 0);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Serializable form: conductor plus coefficient vector.
#[derive(serde::Serialize, serde::Deserialize)]
pub struct CycIntRepr {
    pub m: u64,
    pub coeffs: Vec<i64>,
}

impl CycInt {
    pub fn to_repr(&self) -> Result<CycIntRepr> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                i64::try_from(c).map_err(|_| Error::internal("coefficient exceeds i64"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycIntRepr { m: self.m, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(m: u64, j: u64) -> CycInt {
        CycInt::root_of_unity(m, j)
    }

    #[test]
    fn sum_of_nontrivial_fifth_roots() {
        let s = zeta(5, 1)
            .add(&zeta(5, 2))
            .add(&zeta(5, 3))
            .add(&zeta(5, 4));
        assert!(s.equals(&CycInt::from_int(-1)));
    }

    #[test]
    fn i_squared() {
        assert!(zeta(4, 1).mul(&zeta(4, 1)).equals(&CycInt::from_int(-1)));
    }

    #[test]
    fn product_of_one_plus_cube_roots() {
        let a = CycInt::one().add(&zeta(3, 1));
        let b = CycInt::one().add(&zeta(3, 2));
        assert!(a.mul(&b).equals(&CycInt::one()));
    }

    #[test]
    fn as_integer_cases() {
        assert_eq!(
            CycInt::from_int(3).as_integer(),
            Some(BigInt::from(3))
        );
        assert_eq!(zeta(5, 1).as_integer(), None);
        // zeta_8 + zeta_8^-1 = sqrt(2) is irrational
        let r2 = zeta(8, 1).add(&zeta(8, 7));
        assert_eq!(r2.as_integer(), None);
        assert!(r2.mul(&r2).equals(&CycInt::from_int(2)));
    }

    #[test]
    fn dft_examples() {
        // regular character of C_5 at powers of a generator
        let values: Vec<CycInt> = [5, 0, 0, 0, 0]
            .iter()
            .map(|&v| CycInt::from_int(v))
            .collect();
        assert_eq!(dft_multiplicity(&values, 0).unwrap(), BigInt::one());
        // identity of a 2-dimensional module over C_3
        let values: Vec<CycInt> = [2, 2, 2].iter().map(|&v| CycInt::from_int(v)).collect();
        assert_eq!(dft_multiplicity(&values, 0).unwrap(), BigInt::from(2));
        assert_eq!(dft_multiplicity(&values, 1).unwrap(), BigInt::zero());
        // deleted permutation character of S_5 at powers of a 5-cycle
        let values: Vec<CycInt> = [4, -1, -1, -1, -1]
            .iter()
            .map(|&v| CycInt::from_int(v))
            .collect();
        assert!(inner_dft(&values, 1).equals(&CycInt::from_int(5)));
        assert_eq!(dft_multiplicity(&values, 1).unwrap(), BigInt::one());
        assert_eq!(dft_multiplicity(&values, 0).unwrap(), BigInt::zero());
    }

    #[test]
    fn lift_descend_roundtrip() {
        let v = zeta(5, 2).add(&CycInt::from_int(7));
        let lifted = v.lift_to(30);
        assert_eq!(lifted.conductor(), 30);
        let back = lifted.descend_to(5).expect("descend");
        assert!(back.equals(&v));
        assert_eq!(back.coeffs(), v.coeffs());
        // an element that genuinely needs the bigger field does not descend
        assert!(zeta(30, 1).descend_to(5).is_none());
    }

    #[test]
    fn golden_ratio_is_integral_in_conductor_five() {
        // (1 + sqrt 5)/2 = -(zeta_5^2 + zeta_5^3)
        let sqrt5 = sqrt_discriminant(&BigInt::from(5)).unwrap();
        let v = CycInt::one().add(&sqrt5).div_exact_int(&BigInt::from(2));
        let expected = zeta(5, 2).add(&zeta(5, 3)).neg();
        assert!(v.unwrap().equals(&expected));
    }

    #[test]
    fn gauss_sqrt_squares() {
        for d in [5i64, -3, -7, 9, 13, -15, 21, 45, -35] {
            let d = BigInt::from(d);
            let s = sqrt_discriminant(&d).unwrap();
            assert!(s.mul(&s).equals(&CycInt::from_int(d.clone())), "d = {d}");
        }
    }

    #[test]
    fn jacobi_matches_legendre() {
        // squares mod 7: 1,2,4
        for (a, want) in [(1, 1), (2, 1), (3, -1), (4, 1), (5, -1), (6, -1)] {
            assert_eq!(jacobi(a, 7), want);
        }
        assert_eq!(jacobi(2, 9), 1);
        assert_eq!(jacobi(2, 15), 1);
        assert_eq!(jacobi(7, 15), -1);
    }
}
