//! Brute-force spectrum oracle for the deleted permutation module: builds the
//! explicit matrix of a permutation on the sum-zero subspace (quotiented by
//! the all-ones line when the characteristic divides n), computes its
//! characteristic polynomial, and factors out roots of unity one linear
//! factor at a time over an explicit splitting field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::{CycInt, RootIndex};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spectra::EigenSpectrum;

use super::charpoly::{
    charpoly_bigint, charpoly_mod, root_multiplicity_cyc, root_multiplicity_fq,
};
use super::gf::find_irreducible;

/// Degree cap for the explicit oracle.
pub const ORACLE_DEGREE_CAP: u32 = 12;

fn multiplicative_order(ell: u64, m: u64) -> u64 {
    let mut d = 1;
    let mut pow = ell % m;
    while pow != 1 {
        pow = pow * ell % m;
        d += 1;
    }
    d
}

/// Exact spectrum of `g` on the deleted module W_n over a splitting field of
/// characteristic `ell` (0 allowed), read off the factored characteristic
/// polynomial of the explicit matrix.
pub fn matrix_oracle_wn(g: &Permutation, ell: u64) -> Result<EigenSpectrum> {
    let n = g.degree();
    if n > ORACLE_DEGREE_CAP {
        return Err(Error::domain(format!(
            "degree {n} exceeds the matrix-oracle cap {ORACLE_DEGREE_CAP}"
        )));
    }
    if n < 2 {
        return Err(Error::domain("the deleted module requires degree >= 2"));
    }
    let m = g.cycle_type().order();
    if ell > 0 && m % ell == 0 {
        return Err(Error::domain(format!(
            "element order {m} is divisible by the characteristic {ell}"
        )));
    }
    if ell == 0 {
        matrix_oracle_char_zero(g, m)
    } else {
        matrix_oracle_char_p(g, ell, m)
    }
}

/// Matrix of `g` on the sum-zero subspace in the basis v_i = e_i - e_n,
/// i = 1..n-1 (integer entries).
fn sum_zero_matrix(g: &Permutation) -> Vec<Vec<i64>> {
    let n = g.degree() as usize;
    let d = n - 1;
    let mut a = vec![vec![0i64; d]; d];
    let last_image = g.apply((n - 1) as u32) as usize;
    for i in 0..d {
        let gi = g.apply(i as u32) as usize;
        // g v_i = e_{g(i)} - e_{g(n)} = v_{g(i)} - v_{g(n)}  (v_n = 0)
        if gi < d {
            a[gi][i] += 1;
        }
        if last_image < d {
            a[last_image][i] -= 1;
        }
    }
    a
}

fn matrix_oracle_char_zero(g: &Permutation, m: u64) -> Result<EigenSpectrum> {
    let a: Vec<Vec<BigInt>> = sum_zero_matrix(g)
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let poly = charpoly_bigint(&a);
    let mut entries = Vec::new();
    let mut total = 0u64;
    for j in 0..m {
        let root = CycInt::root_of_unity(m, j);
        let mult = root_multiplicity_cyc(&poly, &root);
        if mult > 0 {
            entries.push((RootIndex::new(m, j), mult));
            total += mult;
        }
    }
    if total != (g.degree() - 1) as u64 {
        return Err(Error::internal(format!(
            "characteristic polynomial of the deleted module did not split into roots of unity (found {total} of {})",
            g.degree() - 1
        )));
    }
    EigenSpectrum::new(0, entries)
}

fn matrix_oracle_char_p(g: &Permutation, ell: u64, m: u64) -> Result<EigenSpectrum> {
    let n = g.degree() as usize;
    let divides_n = (n as u64) % ell == 0;
    let a = sum_zero_matrix(g);
    let to_mod = |v: i64| -> u64 { v.rem_euclid(ell as i64) as u64 };
    let matrix: Vec<Vec<u64>> = if !divides_n {
        a.iter()
            .map(|row| row.iter().map(|&v| to_mod(v)).collect())
            .collect()
    } else {
        // the all-ones vector lies in the sum-zero space mod ell; quotient by
        // it, using images of v_1..v_{n-2} with v_{n-1} = -(v_1+...+v_{n-2})
        let d = n - 2;
        let mut qm = vec![vec![0i64; d]; d];
        for i in 0..d {
            let mut col = vec![0i64; n - 1];
            for (r, row) in a.iter().enumerate() {
                col[r] = row[i];
            }
            let wrap = col[n - 2];
            for r in 0..d {
                qm[r][i] = col[r] - wrap;
            }
        }
        qm.iter()
            .map(|row| row.iter().map(|&v| to_mod(v)).collect())
            .collect()
    };
    let poly = charpoly_mod(&matrix, ell);
    let d = multiplicative_order(ell, m) as usize;
    let field = find_irreducible(ell, d)?;
    let eta = field.root_of_unity(m)?;
    let mut entries = Vec::new();
    let mut total = 0u64;
    for j in 0..m {
        let root = field.pow(&eta, j as u128);
        let mult = root_multiplicity_fq(&field, &poly, &root);
        if mult > 0 {
            entries.push((RootIndex::new(m, j), mult));
            total += mult;
        }
    }
    let dim = matrix.len() as u64;
    if total != dim {
        return Err(Error::internal(format!(
            "modular characteristic polynomial did not split into order-{m} roots (found {total} of {dim})"
        )));
    }
    EigenSpectrum::new(ell, entries)
}

/// The l = 0 permutation-module spectrum of `g` on P_n from the explicit
/// n x n matrix, used as a cross-check in tests.
pub fn matrix_spectrum_pn(g: &Permutation) -> Result<EigenSpectrum> {
    let n = g.degree() as usize;
    let m = g.cycle_type().order();
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        a[g.apply(i as u32) as usize][i] = BigInt::one();
    }
    let poly = charpoly_bigint(&a);
    let mut entries = Vec::new();
    for j in 0..m {
        let root = CycInt::root_of_unity(m, j);
        let mult = root_multiplicity_cyc(&poly, &root);
        if mult > 0 {
            entries.push((RootIndex::new(m, j), mult));
        }
    }
    EigenSpectrum::new(0, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;
    use crate::spectra::spectrum_on_wn;

    #[test]
    fn five_cycle_char_zero() {
        let g = CycleType::new(vec![5]).unwrap().canonical_rep();
        let s = matrix_oracle_wn(&g, 0).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 0);
        for j in 1..5 {
            assert_eq!(s.multiplicity_of(RootIndex::new(5, j)), 1);
        }
    }

    #[test]
    fn two_four_in_characteristic_three() {
        // 3 | 6: dimension drops to 4 and the eigenvalue-1 multiplicity
        // drops to zero
        let g = CycleType::new(vec![4, 2]).unwrap().canonical_rep();
        let s = matrix_oracle_wn(&g, 3).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 0);
        assert_eq!(s.multiplicity_of(RootIndex::new(2, 1)), 2);
        assert_eq!(s.multiplicity_of(RootIndex::new(4, 1)), 1);
        assert_eq!(s.multiplicity_of(RootIndex::new(4, 3)), 1);
    }

    #[test]
    fn identity_element() {
        let g = Permutation::identity(6);
        let s = matrix_oracle_wn(&g, 0).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 5);
    }

    #[test]
    fn agrees_with_combinatorial_rule() {
        for parts in [vec![5u32], vec![1, 4], vec![2, 2, 1], vec![3, 3], vec![1, 1, 3]] {
            let ct = CycleType::new(parts).unwrap();
            let g = ct.canonical_rep();
            for ell in [0u64, 2, 3, 5, 7] {
                if ell > 0 && ct.parts().iter().any(|&c| c as u64 % ell == 0) {
                    continue;
                }
                let oracle = matrix_oracle_wn(&g, ell).unwrap();
                let formula = spectrum_on_wn(&ct, ell, false).unwrap();
                assert_eq!(oracle, formula, "type {ct}, ell {ell}");
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        let g = CycleType::new(vec![4, 2]).unwrap().canonical_rep();
        assert!(matrix_oracle_wn(&g, 2).is_err());
    }
}
