//! Eigenvalue-multiplicity spectra of permutations on the full permutation
//! module P_n and on the deleted modules W_n, W_n^- in characteristic l,
//! the almost-cyclic predicate, the closed-form deleted-module classifier,
//! and Kronecker-product spectra.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cyclotomic::RootIndex;
use crate::error::{Error, Result};
use crate::perm::{CycleType, PrimePowerClass};

/// A finite multiset of roots of unity with multiplicities: the spectrum of a
/// semisimple matrix whose eigenvalues have order dividing `m`. Stored
/// sparsely over the exact conductor (the lcm of the eigenvalue orders).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenSpectrum {
    m: u64,
    ell: u64,
    dim: u64,
    mult: BTreeMap<u64, u64>,
}

impl EigenSpectrum {
    /// Builds a spectrum from (root, multiplicity) pairs, normalizing the
    /// conductor to the exact lcm of the eigenvalue orders.
    pub fn new(ell: u64, entries: impl IntoIterator<Item = (RootIndex, u64)>) -> Result<Self> {
        let mut acc: BTreeMap<RootIndex, u64> = BTreeMap::new();
        for (r, mult) in entries {
            if mult > 0 {
                *acc.entry(r.normalized()).or_insert(0) += mult;
            }
        }
        let m = acc.keys().fold(1u64, |a, r| a.lcm(&r.m));
        let mut mult = BTreeMap::new();
        let mut dim = 0u64;
        for (r, v) in acc {
            if ell > 0 && r.m % ell == 0 {
                return Err(Error::domain(format!(
                    "eigenvalue of order {} cannot occur in characteristic {}",
                    r.m, ell
                )));
            }
            mult.insert(r.at_conductor(m).j, v);
            dim += v;
        }
        Ok(EigenSpectrum { m, ell, dim, mult })
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn characteristic(&self) -> u64 {
        self.ell
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Multiplicity of zeta_m^j (in the spectrum's own conductor).
    pub fn multiplicity(&self, j: u64) -> u64 {
        self.mult.get(&(j % self.m)).copied().unwrap_or(0)
    }

    /// Multiplicity of an arbitrary root of unity.
    pub fn multiplicity_of(&self, r: RootIndex) -> u64 {
        let n = r.normalized();
        if self.m % n.m != 0 {
            return 0;
        }
        self.multiplicity(n.at_conductor(self.m).j)
    }

    pub fn entries(&self) -> impl Iterator<Item = (RootIndex, u64)> + '_ {
        self.mult
            .iter()
            .map(|(&j, &v)| (RootIndex::new(self.m, j), v))
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.mult.values().copied().max().unwrap_or(0)
    }

    /// Number of distinct eigenvalues (degree of the minimal polynomial of a
    /// semisimple matrix with this spectrum).
    pub fn distinct_eigenvalues(&self) -> u64 {
        self.mult.len() as u64
    }

    /// True when mult(x) = mult(x^-1) for every eigenvalue (the matrix is
    /// similar to its inverse).
    pub fn is_inverse_closed(&self) -> bool {
        self.mult
            .iter()
            .all(|(&j, &v)| self.multiplicity((self.m - j) % self.m) == v)
    }
}

impl Serialize for EigenSpectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("ell", &self.ell)?;
        map.serialize_entry("dim", &self.dim)?;
        let mult: BTreeMap<String, u64> =
            self.mult.iter().map(|(j, v)| (j.to_string(), *v)).collect();
        map.serialize_entry("mult", &mult)?;
        map.end()
    }
}

impl fmt::Display for EigenSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (&j, &v)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let r = RootIndex::new(self.m, j).normalized();
            match (r.m, r.j) {
                (1, _) => write!(f, "1")?,
                (2, _) => write!(f, "-1")?,
                (4, 1) => write!(f, "i")?,
                (4, 3) => write!(f, "-i")?,
                _ => write!(f, "{r}")?,
            }
            write!(f, ":{v}")?;
        }
        write!(f, "}}")
    }
}

/// Verdict of the almost-cyclic test. Cyclic matrices are also almost cyclic;
/// the verdict reports the strongest level.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Cyclic,
    AlmostCyclic,
    NotAlmostCyclic,
}

impl Verdict {
    pub fn is_almost_cyclic(self) -> bool {
        matches!(self, Verdict::Cyclic | Verdict::AlmostCyclic)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Cyclic => write!(f, "cyclic"),
            Verdict::AlmostCyclic => write!(f, "almost_cyclic"),
            Verdict::NotAlmostCyclic => write!(f, "not_almost_cyclic"),
        }
    }
}

/// Classification of a semisimple matrix by its multiplicity profile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostCyclicReport {
    pub verdict: Verdict,
    /// The unique eigenvalue of multiplicity > 1 when almost cyclic but not
    /// cyclic (the scalar of the scalar-block decomposition).
    pub exceptional: Option<RootIndex>,
    /// Degree of the minimal polynomial (= number of distinct eigenvalues).
    pub deg: u64,
    pub max_mult: u64,
}

impl Serialize for AlmostCyclicReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("verdict", &self.verdict)?;
        map.serialize_entry("e", &self.exceptional.map(|r| r.to_string()))?;
        map.serialize_entry("deg", &self.deg)?;
        map.serialize_entry("m", &self.max_mult)?;
        map.end()
    }
}

/// Almost-cyclic test on a spectrum: cyclic when every multiplicity is 1,
/// almost cyclic when exactly one eigenvalue repeats, and not almost cyclic
/// when two or more eigenvalues repeat.
pub fn analyze(spec: &EigenSpectrum) -> AlmostCyclicReport {
    let repeated: Vec<(u64, u64)> = spec
        .mult
        .iter()
        .filter(|(_, &v)| v > 1)
        .map(|(&j, &v)| (j, v))
        .collect();
    let deg = spec.distinct_eigenvalues();
    let max_mult = spec.max_multiplicity().max(if spec.dim == 0 { 0 } else { 1 });
    match repeated.len() {
        0 => AlmostCyclicReport {
            verdict: Verdict::Cyclic,
            exceptional: None,
            deg,
            max_mult,
        },
        1 => AlmostCyclicReport {
            verdict: Verdict::AlmostCyclic,
            exceptional: Some(RootIndex::new(spec.m, repeated[0].0).normalized()),
            deg,
            max_mult,
        },
        _ => AlmostCyclicReport {
            verdict: Verdict::NotAlmostCyclic,
            exceptional: None,
            deg,
            max_mult,
        },
    }
}

fn check_semisimple(ct: &CycleType, ell: u64) -> Result<()> {
    if ell > 0 {
        if let Some(&c) = ct.parts().iter().find(|&&c| c as u64 % ell == 0) {
            return Err(Error::domain(format!(
                "characteristic {ell} divides the cycle length {c}: the action is not semisimple (the element order must be coprime to the characteristic)"
            )));
        }
    }
    Ok(())
}

/// Spectrum of an element of cycle type `ct` on the full permutation module
/// P_n: each cycle of length c contributes every c-th root of unity once.
pub fn spectrum_on_pn(ct: &CycleType, ell: u64) -> Result<EigenSpectrum> {
    check_semisimple(ct, ell)?;
    let mut entries = Vec::new();
    for &c in ct.parts() {
        for j in 0..c as u64 {
            entries.push((RootIndex::new(c as u64, j), 1));
        }
    }
    EigenSpectrum::new(ell, entries)
}

/// Spectrum on the deleted module W_n: the P_n spectrum minus the trivial
/// composition factors (one eigenvalue-1 copy when ell does not divide n, two
/// when it does). With `sign_twist` the spectrum of W_n tensored with the
/// sign character is returned (requires ell != 2).
pub fn spectrum_on_wn(ct: &CycleType, ell: u64, sign_twist: bool) -> Result<EigenSpectrum> {
    check_semisimple(ct, ell)?;
    if sign_twist && ell == 2 {
        return Err(Error::domain(
            "the sign twist is trivial in characteristic 2 and the twisted module is not defined there",
        ));
    }
    let pn = spectrum_on_pn(ct, ell)?;
    let drop = if ell > 0 && ct.n() as u64 % ell == 0 {
        2
    } else {
        1
    };
    let ones = pn.multiplicity_of(RootIndex::new(1, 0));
    if ones < drop {
        return Err(Error::internal(format!(
            "eigenvalue 1 has multiplicity {ones} < {drop} on P_n"
        )));
    }
    let shift_order = if sign_twist && ct.sign() == -1 { 2 } else { 1 };
    let mut entries = Vec::new();
    for (r, v) in pn.entries() {
        let v = if r.order() == 1 { v - drop } else { v };
        if v == 0 {
            continue;
        }
        let r = if shift_order == 2 {
            // multiply the eigenvalue by -1
            let m = r.m.lcm(&2);
            let rr = r.at_conductor(m);
            RootIndex::new(m, (rr.j + m / 2) % m)
        } else {
            r
        };
        entries.push((r, v));
    }
    EigenSpectrum::new(ell, entries)
}

/// Closed-form report for a p-element acting on the deleted module W_n,
/// without constructing the spectrum: almost cyclic iff the type is
/// [1^(n-p^a), p^a] or [2, 2^a] with n = 2^a + 2; also computes the
/// minimal-polynomial degree and maximal multiplicity from divisor counts.
pub fn classify_wn(n: u32, cls: &PrimePowerClass, ell: u64) -> Result<AlmostCyclicReport> {
    if cls.base.n() != n {
        return Err(Error::domain(format!(
            "class {} has degree {}, not {n}",
            cls.base,
            cls.base.n()
        )));
    }
    if ell == cls.p as u64 {
        return Err(Error::domain(format!(
            "characteristic {ell} equals the class prime: the unipotent case is out of scope"
        )));
    }
    check_semisimple(&cls.base, ell)?;
    let parts = cls.base.parts();
    let m = cls.order();
    let drop = if ell > 0 && n as u64 % ell == 0 { 2 } else { 1 };
    // multiplicity of each eigenvalue of exact order d on W_n
    let mult_of_order = |d: u64| -> u64 {
        let raw = parts.iter().filter(|&&c| c as u64 % d == 0).count() as u64;
        if d == 1 {
            raw - drop
        } else {
            raw
        }
    };
    let mut deg = 0u64;
    let mut max_mult = 0u64;
    let mut repeated_values = 0u64;
    let mut exceptional = None;
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let mult = mult_of_order(d);
        let count = crate::cyclotomic::phi(d);
        if mult > 0 {
            deg += count;
        }
        if mult > 1 {
            repeated_values += count;
            if count == 1 {
                exceptional = Some(if d == 1 {
                    RootIndex::new(1, 0)
                } else {
                    RootIndex::new(2, 1)
                });
            }
        }
        max_mult = max_mult.max(mult);
    }
    let verdict = match repeated_values {
        0 => Verdict::Cyclic,
        1 => Verdict::AlmostCyclic,
        _ => Verdict::NotAlmostCyclic,
    };
    // shape test from the classification statement
    let nontrivial: Vec<u32> = parts.iter().copied().filter(|&c| c > 1).collect();
    let shape_single = nontrivial.len() == 1;
    let shape_two_cycle = parts.len() == 2
        && cls.p == 2
        && parts[1] == 2
        && parts[0] >= 4
        && n == parts[0] + 2;
    let matches_shape = shape_single || shape_two_cycle;
    if verdict.is_almost_cyclic() != matches_shape {
        return Err(Error::internal(format!(
            "closed-form shape test disagrees with the divisor-count profile for {} at ell={ell}",
            cls.base
        )));
    }
    if verdict == Verdict::Cyclic {
        exceptional = None;
    }
    Ok(AlmostCyclicReport {
        verdict,
        exceptional: if verdict == Verdict::AlmostCyclic {
            exceptional
        } else {
            None
        },
        deg,
        max_mult,
    })
}

/// Whether a p-element of this class attains the minimal-degree bound
/// deg = |g| - 1 on W_n (equivalently, eigenvalue 1 does not occur on W_n):
/// exactly when the number of cycles is 1 (ell coprime to n) or 2 (ell | n).
pub fn wn_degree_is_minimal(n: u32, cls: &PrimePowerClass, ell: u64) -> bool {
    let drop = if ell > 0 && n as u64 % ell == 0 { 2 } else { 1 };
    cls.base.parts().len() as u64 == drop
}

/// Kronecker-product spectrum: the multiplicity maps convolve under
/// root-of-unity multiplication.
pub fn kronecker(a: &EigenSpectrum, b: &EigenSpectrum) -> Result<EigenSpectrum> {
    if a.ell != b.ell {
        return Err(Error::domain(format!(
            "characteristic mismatch: {} vs {}",
            a.ell, b.ell
        )));
    }
    let m = a.m.lcm(&b.m);
    let mut entries: BTreeMap<u64, u64> = BTreeMap::new();
    for (&ja, &va) in &a.mult {
        for (&jb, &vb) in &b.mult {
            let j = (ja * (m / a.m) + jb * (m / b.m)) % m;
            *entries.entry(j).or_insert(0) += va * vb;
        }
    }
    EigenSpectrum::new(
        a.ell,
        entries
            .into_iter()
            .map(|(j, v)| (RootIndex::new(m, j), v)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    fn spec(ell: u64, entries: &[(u64, u64, u64)]) -> EigenSpectrum {
        EigenSpectrum::new(
            ell,
            entries
                .iter()
                .map(|&(m, j, v)| (RootIndex::new(m, j), v)),
        )
        .unwrap()
    }

    #[test]
    fn pn_spectra() {
        let s = spectrum_on_pn(&ct(&[5]), 0).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.conductor(), 5);
        for j in 0..5 {
            assert_eq!(s.multiplicity(j), 1);
        }
        let s = spectrum_on_pn(&ct(&[1, 1, 3]), 0).unwrap();
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 3);
        assert_eq!(s.multiplicity_of(RootIndex::new(3, 1)), 1);
        assert_eq!(s.multiplicity_of(RootIndex::new(3, 2)), 1);
        let s = spectrum_on_pn(&ct(&[2, 4]), 0).unwrap();
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 2);
        assert_eq!(s.multiplicity_of(RootIndex::new(2, 1)), 2);
        assert_eq!(s.multiplicity_of(RootIndex::new(4, 1)), 1);
        assert_eq!(s.multiplicity_of(RootIndex::new(4, 3)), 1);
    }

    #[test]
    fn wn_spectra() {
        // [1,1,3] at n = 5: almost cyclic with e = 1
        let s = spectrum_on_wn(&ct(&[1, 1, 3]), 0, false).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 2);
        let r = analyze(&s);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(1, 0)));
        // [2,4] at n = 6: almost cyclic with e = -1, max multiplicity 2
        let s = spectrum_on_wn(&ct(&[2, 4]), 0, false).unwrap();
        assert_eq!(s.dim(), 5);
        let r = analyze(&s);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(2, 1)));
        assert_eq!(r.max_mult, 2);
        assert_eq!(r.deg, 4);
        // [1,2,2] at n = 5: not almost cyclic
        let s = spectrum_on_wn(&ct(&[1, 2, 2]), 0, false).unwrap();
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 2);
        assert_eq!(s.multiplicity_of(RootIndex::new(2, 1)), 2);
        assert_eq!(analyze(&s).verdict, Verdict::NotAlmostCyclic);
    }

    #[test]
    fn wn_modular_dimension_drop() {
        // ell | n drops two trivial factors
        let s = spectrum_on_wn(&ct(&[2, 4]), 3, false).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 0);
        assert_eq!(s.multiplicity_of(RootIndex::new(2, 1)), 2);
        // rejected: characteristic divides a part
        assert!(spectrum_on_wn(&ct(&[2, 4]), 2, false).is_err());
    }

    #[test]
    fn sign_twist() {
        // [1,1,4] is odd: the twist multiplies every eigenvalue by -1
        let plain = spectrum_on_wn(&ct(&[1, 1, 4]), 0, false).unwrap();
        let twisted = spectrum_on_wn(&ct(&[1, 1, 4]), 0, true).unwrap();
        assert_eq!(plain.multiplicity_of(RootIndex::new(1, 0)), 2);
        assert_eq!(twisted.multiplicity_of(RootIndex::new(2, 1)), 2);
        assert_eq!(twisted.multiplicity_of(RootIndex::new(1, 0)), 1);
        assert_eq!(
            twisted.multiplicity_of(RootIndex::new(4, 1)),
            plain.multiplicity_of(RootIndex::new(4, 3))
        );
        assert_eq!(twisted.dim(), plain.dim());
        // even types are unchanged
        let a = spectrum_on_wn(&ct(&[1, 1, 3]), 0, false).unwrap();
        let b = spectrum_on_wn(&ct(&[1, 1, 3]), 0, true).unwrap();
        assert_eq!(a, b);
        assert!(spectrum_on_wn(&ct(&[1, 1, 3]), 2, true).is_err());
    }

    #[test]
    fn closed_form_classifier() {
        let classes = crate::perm::enumerate_p_classes(9, 3).unwrap();
        let three_cycle = classes.iter().find(|c| c.base.parts() == [3, 1, 1, 1, 1, 1, 1]).unwrap();
        let r = classify_wn(9, three_cycle, 0).unwrap();
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(1, 0)));

        let classes = crate::perm::enumerate_p_classes(6, 2).unwrap();
        let two_four = classes.iter().find(|c| c.base.parts() == [4, 2]).unwrap();
        let r = classify_wn(6, two_four, 0).unwrap();
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(2, 1)));
        assert_eq!(r.deg, 4);

        let classes = crate::perm::enumerate_p_classes(8, 2).unwrap();
        let bad = classes.iter().find(|c| c.base.parts() == [4, 2, 2]).unwrap();
        let r = classify_wn(8, bad, 0).unwrap();
        assert_eq!(r.verdict, Verdict::NotAlmostCyclic);
    }

    #[test]
    fn analyze_edge_cases() {
        // all multiplicities 1: cyclic
        let s = spec(0, &[(5, 1, 1), (5, 2, 1)]);
        assert_eq!(analyze(&s).verdict, Verdict::Cyclic);
        // one repeated eigenvalue: almost cyclic
        let s = spec(0, &[(1, 0, 3), (3, 1, 1), (3, 2, 1)]);
        let r = analyze(&s);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(1, 0)));
        assert_eq!(r.max_mult, 3);
        // two repeated eigenvalues: not almost cyclic
        let s = spec(0, &[(1, 0, 2), (2, 1, 2)]);
        assert_eq!(analyze(&s).verdict, Verdict::NotAlmostCyclic);
    }

    #[test]
    fn kronecker_products() {
        let c2 = spec(0, &[(1, 0, 1), (2, 1, 1)]);
        let k = kronecker(&c2, &c2).unwrap();
        assert_eq!(k.multiplicity_of(RootIndex::new(1, 0)), 2);
        assert_eq!(k.multiplicity_of(RootIndex::new(2, 1)), 2);
        // cyclic of dim 2 x cyclic of dim 3 with coprime orders
        let a = spec(0, &[(2, 1, 1), (1, 0, 1)]);
        let b = spec(0, &[(3, 0, 1), (3, 1, 1), (3, 2, 1)]);
        let k = kronecker(&a, &b).unwrap();
        assert_eq!(k.dim(), 6);
        assert!(k.max_multiplicity() <= 2);
        // identity: spec x {1:1} = spec
        let one = spec(0, &[(1, 0, 1)]);
        assert_eq!(kronecker(&a, &one).unwrap(), a);
        // characteristic mismatch
        let m3 = spec(3, &[(1, 0, 1)]);
        assert!(kronecker(&a, &m3).is_err());
    }

    #[test]
    fn conductor_is_exact() {
        // {zeta_3} x {zeta_3^2} = {1}: conductor collapses to 1
        let a = spec(0, &[(3, 1, 1)]);
        let b = spec(0, &[(3, 2, 1)]);
        assert_eq!(kronecker(&a, &b).unwrap().conductor(), 1);
    }
}
