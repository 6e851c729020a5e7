//! Eigenvalue spectra of prime-power-order classes in ordinary irreducible
//! representations, extracted exactly from character values on power classes:
//! the multiplicity of zeta_m^j is (1/m) sum_k chi(g^k) zeta_m^{-jk}.

use num_bigint::BigInt;

use crate::cyclotomic::{dft_multiplicity, CycInt, RootIndex};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{AnClassLabel, CycleType};
use crate::spectra::EigenSpectrum;

use super::an::{an_character_value, sn_character_value, AnCharacter};

fn check_prime_power_order(m: u64) -> Result<()> {
    if m == 1 {
        return Ok(());
    }
    let primes = crate::cyclotomic::prime_factors(m);
    if primes.len() != 1 {
        return Err(Error::domain(format!(
            "class order {m} is not a prime power"
        )));
    }
    Ok(())
}

fn spectrum_from_values(values: Vec<CycInt>, degree: &BigInt) -> Result<EigenSpectrum> {
    let m = values.len() as u64;
    let mut entries = Vec::new();
    let mut total = BigInt::from(0u32);
    for j in 0..m {
        let mult = dft_multiplicity(&values, j)?;
        total += &mult;
        if mult != BigInt::from(0u32) {
            let mult: u64 = (&mult)
                .try_into()
                .map_err(|_| Error::internal("multiplicity exceeds u64"))?;
            entries.push((RootIndex::new(m, j), mult));
        }
    }
    if total != *degree {
        return Err(Error::internal(format!(
            "multiplicities sum to {total}, expected the degree {degree}"
        )));
    }
    EigenSpectrum::new(0, entries)
}

/// Spectrum of a prime-power class in the ordinary irreducible S_n
/// representation labelled by `lambda` (characteristic 0).
pub fn sn_irrep_spectrum(lambda: &Partition, ct: &CycleType) -> Result<EigenSpectrum> {
    if lambda.n() != ct.n() {
        return Err(Error::domain(format!(
            "label {lambda} and class {ct} have different degrees"
        )));
    }
    let m = ct.order();
    check_prime_power_order(m)?;
    let values = (0..m)
        .map(|k| sn_character_value(lambda, &ct.power(k)))
        .collect::<Result<Vec<_>>>()?;
    spectrum_from_values(values, &lambda.dimension())
}

/// Spectrum of a prime-power A_n class in an irreducible A_n representation
/// (characteristic 0). Power classes are tracked through the split pair.
pub fn an_irrep_spectrum(chi: &AnCharacter, cls: &AnClassLabel) -> Result<EigenSpectrum> {
    if chi.n() != cls.cycle_type().n() {
        return Err(Error::domain(format!(
            "character {chi} and class {cls} have different degrees"
        )));
    }
    let m = cls.order();
    check_prime_power_order(m)?;
    let values = (0..m)
        .map(|k| an_character_value(chi, &cls.power(k)))
        .collect::<Result<Vec<_>>>()?;
    spectrum_from_values(values, &chi.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::an::{an_characters, SplitSign};
    use crate::perm::SplitTag;
    use crate::spectra::{analyze, Verdict};

    #[test]
    fn trivial_character_spectrum() {
        let s = sn_irrep_spectrum(
            &Partition::new(vec![5]).unwrap(),
            &CycleType::new(vec![5]).unwrap(),
        )
        .unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 1);
    }

    #[test]
    fn degree_five_a5_character_is_cyclic_at_five_cycles() {
        let chi = AnCharacter::new(Partition::new(vec![3, 2]).unwrap(), None).unwrap();
        let cls =
            AnClassLabel::new(CycleType::new(vec![5]).unwrap(), Some(SplitTag::A)).unwrap();
        let s = an_irrep_spectrum(&chi, &cls).unwrap();
        assert_eq!(s.dim(), 5);
        assert_eq!(s.conductor(), 5);
        for j in 0..5 {
            assert_eq!(s.multiplicity(j), 1, "j = {j}");
        }
        assert_eq!(analyze(&s).verdict, Verdict::Cyclic);
    }

    #[test]
    fn degree_three_a5_characters_at_five_cycles() {
        // rotation by 72 degrees: eigenvalues 1, zeta, zeta^-1 on one class
        let chi = AnCharacter::new(
            Partition::new(vec![3, 1, 1]).unwrap(),
            Some(SplitSign::Plus),
        )
        .unwrap();
        let a = AnClassLabel::new(CycleType::new(vec![5]).unwrap(), Some(SplitTag::A)).unwrap();
        let s = an_irrep_spectrum(&chi, &a).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(analyze(&s).verdict, Verdict::Cyclic);
        assert_eq!(s.distinct_eigenvalues(), 3);
        // the partner sees the other class's spectrum
        let b = AnClassLabel::new(CycleType::new(vec![5]).unwrap(), Some(SplitTag::B)).unwrap();
        let partner = chi.partner().unwrap();
        assert_eq!(an_irrep_spectrum(&partner, &b).unwrap(), s);
    }

    #[test]
    fn a5_degree_three_at_involutions() {
        let chi = AnCharacter::new(
            Partition::new(vec![3, 1, 1]).unwrap(),
            Some(SplitSign::Plus),
        )
        .unwrap();
        let cls = AnClassLabel::new(CycleType::new(vec![2, 2, 1]).unwrap(), None).unwrap();
        let s = an_irrep_spectrum(&chi, &cls).unwrap();
        let r = analyze(&s);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.exceptional, Some(RootIndex::new(2, 1)));
        assert_eq!(r.max_mult, 2);
        assert_eq!(r.deg, 2);
    }

    #[test]
    fn a6_degree_five_hits_one_order_three_class() {
        // of the two degree-5 characters of A_6, each is almost cyclic with
        // deg 3 on exactly one of the two order-3 classes
        let w = AnCharacter::new(Partition::new(vec![5, 1]).unwrap(), None).unwrap();
        let other = AnCharacter::new(Partition::new(vec![3, 3]).unwrap(), None).unwrap();
        let three_cycle =
            AnClassLabel::new(CycleType::new(vec![3, 1, 1, 1]).unwrap(), None).unwrap();
        let double = AnClassLabel::new(CycleType::new(vec![3, 3]).unwrap(), None).unwrap();
        let profile = |chi: &AnCharacter, cls: &AnClassLabel| {
            let s = an_irrep_spectrum(chi, cls).unwrap();
            analyze(&s)
        };
        let r = profile(&w, &three_cycle);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.deg, 3);
        assert_eq!(r.max_mult, 3);
        assert_eq!(r.exceptional, Some(RootIndex::new(1, 0)));
        assert_eq!(profile(&w, &double).verdict, Verdict::NotAlmostCyclic);
        let r = profile(&other, &double);
        assert_eq!(r.verdict, Verdict::AlmostCyclic);
        assert_eq!(r.deg, 3);
        assert_eq!(r.max_mult, 3);
        assert_eq!(profile(&other, &three_cycle).verdict, Verdict::NotAlmostCyclic);
    }

    #[test]
    fn a6_degree_eight_split_pair_at_five_classes() {
        // the split pair of (3,2,1): spectra at 5A/5B have multiplicity
        // pattern {2,2,2,1,1} and are exchanged between the pair members
        let chars = an_characters(6);
        let plus = chars
            .iter()
            .find(|c| c.to_string() == "(3,2,1)+")
            .unwrap();
        let minus = chars
            .iter()
            .find(|c| c.to_string() == "(3,2,1)-")
            .unwrap();
        let a = AnClassLabel::new(CycleType::new(vec![5, 1]).unwrap(), Some(SplitTag::A)).unwrap();
        let b = AnClassLabel::new(CycleType::new(vec![5, 1]).unwrap(), Some(SplitTag::B)).unwrap();
        let sa = an_irrep_spectrum(plus, &a).unwrap();
        assert_eq!(sa.dim(), 8);
        let mut mults: Vec<u64> = (0..5).map(|j| sa.multiplicity(j)).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 2, 2, 2]);
        assert_eq!(analyze(&sa).verdict, Verdict::NotAlmostCyclic);
        assert_eq!(an_irrep_spectrum(minus, &b).unwrap(), sa);
        assert_ne!(an_irrep_spectrum(minus, &a).unwrap(), sa);
    }

    #[test]
    fn rejects_non_prime_power_classes() {
        let chi = Partition::new(vec![5, 1]).unwrap();
        let cls = CycleType::new(vec![3, 2, 1]).unwrap();
        assert!(sn_irrep_spectrum(&chi, &cls).is_err());
    }
}
