//! Exhaustive search over (irreducible character, prime-power class) pairs
//! for almost-cyclic actions, in characteristic 0.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::{
    an_characters, an_irrep_spectrum, sn_character_labels, sn_irrep_spectrum, AnCharacter,
    GroupKind,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{enumerate_p_classes, AnClassLabel, CycleType, SplitTag};
use crate::spectra::{analyze, AlmostCyclicReport};

/// Character label in either group.
#[derive(Clone, Debug)]
pub enum CharLabel {
    Sn(Partition),
    An(AnCharacter),
}

impl CharLabel {
    pub fn degree(&self) -> BigInt {
        match self {
            CharLabel::Sn(p) => p.dimension(),
            CharLabel::An(c) => c.degree(),
        }
    }

    pub fn origin(&self) -> &Partition {
        match self {
            CharLabel::Sn(p) => p,
            CharLabel::An(c) => c.origin(),
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Sn(p) => write!(f, "{p}"),
            CharLabel::An(c) => write!(f, "{c}"),
        }
    }
}

/// Class label in either group.
#[derive(Clone, Debug)]
pub enum ClassLabel {
    Sn(CycleType),
    An(AnClassLabel),
}

impl ClassLabel {
    pub fn cycle_type(&self) -> &CycleType {
        match self {
            ClassLabel::Sn(ct) => ct,
            ClassLabel::An(c) => c.cycle_type(),
        }
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    pub fn split_tag(&self) -> Option<SplitTag> {
        match self {
            ClassLabel::Sn(_) => None,
            ClassLabel::An(c) => c.split(),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Sn(ct) => write!(f, "{ct}"),
            ClassLabel::An(c) => write!(f, "{c}"),
        }
    }
}

/// A (character, class) pair acting almost cyclically (cyclic included).
#[derive(Clone, Debug)]
pub struct ClassificationHit {
    pub n: u32,
    pub group: GroupKind,
    pub character: CharLabel,
    pub class: ClassLabel,
    pub report: AlmostCyclicReport,
    pub subnatural: bool,
}

impl ClassificationHit {
    pub fn dim(&self) -> u64 {
        (&self.character.degree()).try_into().unwrap_or(u64::MAX)
    }
}

impl Serialize for ClassificationHit {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(8))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("group", &self.group)?;
        map.serialize_entry("character", &self.character.to_string())?;
        map.serialize_entry("class", &self.class.to_string())?;
        map.serialize_entry("o_g", &self.class.order())?;
        map.serialize_entry("report", &self.report)?;
        map.serialize_entry("subnatural", &self.subnatural)?;
        map.serialize_entry("provenance", "character")?;
        map.end()
    }
}

/// The subnatural labels: the deleted-module partition (n-1, 1), its
/// transpose, and their common restriction.
pub fn is_subnatural_partition(lambda: &Partition) -> bool {
    let n = lambda.n();
    if n < 3 {
        return false;
    }
    let w = Partition::from_desc(vec![n - 1, 1]);
    *lambda == w || lambda.conjugate() == w
}

pub fn is_subnatural(label: &CharLabel) -> bool {
    is_subnatural_partition(label.origin())
}

/// Search cap (the bundled tables stop at degree 10; degrees 11 and 12 are
/// scanned only to confirm the absence of non-subnatural hits).
pub const SEARCH_DEGREE_CAP: u32 = 12;

/// Exhaustive scan of all non-trivial ordinary irreducible characters times
/// all p-power classes of the group, returning the almost-cyclic pairs in a
/// deterministic order (characters in descending label order, classes in
/// ascending type order, split tag A before B).
pub fn search_almost_cyclic(n: u32, group: GroupKind, p: u32) -> Result<Vec<ClassificationHit>> {
    if !(5..=SEARCH_DEGREE_CAP).contains(&n) {
        return Err(Error::domain(format!(
            "search degree {n} outside 5..={SEARCH_DEGREE_CAP}"
        )));
    }
    let classes = enumerate_p_classes(n, p)?;
    let mut hits = Vec::new();
    match group {
        GroupKind::Symmetric => {
            let trivial = Partition::from_desc(vec![n]);
            for lambda in sn_character_labels(n) {
                if lambda == trivial {
                    continue;
                }
                for cls in &classes {
                    let spec = sn_irrep_spectrum(&lambda, &cls.base)?;
                    let report = analyze(&spec);
                    if report.verdict.is_almost_cyclic() {
                        hits.push(ClassificationHit {
                            n,
                            group,
                            subnatural: is_subnatural_partition(&lambda),
                            character: CharLabel::Sn(lambda.clone()),
                            class: ClassLabel::Sn(cls.base.clone()),
                            report,
                        });
                    }
                }
            }
        }
        GroupKind::Alternating => {
            let trivial = Partition::from_desc(vec![n]);
            let an_class_labels: Vec<AnClassLabel> = classes
                .iter()
                .filter(|cls| cls.base.is_even())
                .flat_map(|cls| {
                    if cls.base.splits_in_an().unwrap() {
                        vec![
                            AnClassLabel::new(cls.base.clone(), Some(SplitTag::A)).unwrap(),
                            AnClassLabel::new(cls.base.clone(), Some(SplitTag::B)).unwrap(),
                        ]
                    } else {
                        vec![AnClassLabel::new(cls.base.clone(), None).unwrap()]
                    }
                })
                .collect();
            for chi in an_characters(n) {
                if *chi.origin() == trivial {
                    continue;
                }
                for cls in &an_class_labels {
                    let spec = an_irrep_spectrum(&chi, cls)?;
                    let report = analyze(&spec);
                    if report.verdict.is_almost_cyclic() {
                        hits.push(ClassificationHit {
                            n,
                            group,
                            subnatural: is_subnatural_partition(chi.origin()),
                            character: CharLabel::An(chi.clone()),
                            class: ClassLabel::An(cls.clone()),
                            report,
                        });
                    }
                }
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::Verdict;

    #[test]
    fn a5_at_p5_hits() {
        let hits = search_almost_cyclic(5, GroupKind::Alternating, 5).unwrap();
        // degree-3 pair on both split classes, the deleted module on both,
        // and the degree-5 character on both: 8 cyclic hits
        assert_eq!(hits.len(), 8);
        assert!(hits.iter().all(|h| h.report.verdict == Verdict::Cyclic));
        let dims: Vec<u64> = hits.iter().map(|h| h.dim()).collect();
        assert_eq!(dims.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(dims.iter().filter(|&&d| d == 4).count(), 2);
        assert_eq!(dims.iter().filter(|&&d| d == 5).count(), 2);
    }

    #[test]
    fn a6_at_p3_hits() {
        let hits = search_almost_cyclic(6, GroupKind::Alternating, 3).unwrap();
        // the two degree-5 characters, each on exactly one order-3 class
        assert_eq!(hits.len(), 2);
        for h in &hits {
            assert_eq!(h.report.verdict, Verdict::AlmostCyclic);
            assert_eq!(h.report.deg, 3);
            assert_eq!(h.report.max_mult, 3);
        }
        let natural = hits.iter().find(|h| h.subnatural).unwrap();
        assert_eq!(natural.class.cycle_type().parts(), &[3, 1, 1, 1]);
        let other = hits.iter().find(|h| !h.subnatural).unwrap();
        assert_eq!(other.class.cycle_type().parts(), &[3, 3]);
    }

    #[test]
    fn s5_at_p2_hits() {
        let hits = search_almost_cyclic(5, GroupKind::Symmetric, 2).unwrap();
        // the order-4 class [4,1] acts almost cyclically on both degree-5
        // modules with deg 4, and the sign/standard modules give more hits
        let five_dim: Vec<&ClassificationHit> = hits
            .iter()
            .filter(|h| h.dim() == 5 && h.class.order() == 4)
            .collect();
        assert_eq!(five_dim.len(), 2);
        for h in &five_dim {
            assert_eq!(h.report.deg, 4);
            assert_eq!(h.report.max_mult, 2);
        }
        let es: Vec<u64> = five_dim
            .iter()
            .map(|h| h.report.exceptional.unwrap().order())
            .collect();
        assert!(es.contains(&1) && es.contains(&2));
    }

    #[test]
    fn subnatural_labels() {
        assert!(is_subnatural_partition(&Partition::from_desc(vec![4, 1])));
        assert!(is_subnatural_partition(&Partition::from_desc(vec![
            2, 1, 1, 1
        ])));
        assert!(!is_subnatural_partition(&Partition::from_desc(vec![1; 5])));
        assert!(!is_subnatural_partition(&Partition::from_desc(vec![2, 2, 1])));
        assert!(!is_subnatural_partition(&Partition::from_desc(vec![3, 3])));
    }
}
