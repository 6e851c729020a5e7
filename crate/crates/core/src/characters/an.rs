//! Irreducible characters of A_n obtained from S_n by restriction: a
//! non-self-conjugate label and its transpose restrict to one common
//! irreducible character, while a self-conjugate label splits into a pair
//! whose values differ only on the two classes of its diagonal-hook type,
//! where they involve the square root of the discriminant
//! eps * (product of diagonal hooks).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{sqrt_discriminant, CycInt};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{AnClassLabel, CycleType, SplitTag};

use super::mn::mn_character;

/// Sign distinguishing the two members of a split character pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum SplitSign {
    Plus,
    Minus,
}

impl fmt::Display for SplitSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitSign::Plus => write!(f, "+"),
            SplitSign::Minus => write!(f, "-"),
        }
    }
}

/// An irreducible character of A_n, named by the S_n label it restricts from
/// (the lexicographically larger of the label and its transpose) and, for
/// self-conjugate labels, the member of the split pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnCharacter {
    origin: Partition,
    split: Option<SplitSign>,
}

impl AnCharacter {
    pub fn new(origin: Partition, split: Option<SplitSign>) -> Result<Self> {
        if origin.is_self_conjugate() != split.is_some() {
            return Err(Error::domain(format!(
                "label {origin}: a split sign is required exactly for self-conjugate labels"
            )));
        }
        Ok(AnCharacter { origin, split })
    }

    pub fn origin(&self) -> &Partition {
        &self.origin
    }

    pub fn split(&self) -> Option<SplitSign> {
        self.split
    }

    pub fn n(&self) -> u32 {
        self.origin.n()
    }

    pub fn degree(&self) -> BigInt {
        let full = self.origin.dimension();
        if self.split.is_some() {
            let (q, r) = full.div_rem(&BigInt::from(2));
            debug_assert!(r.is_zero());
            q
        } else {
            full
        }
    }

    /// The partner of a split pair; `None` for restriction characters.
    pub fn partner(&self) -> Option<AnCharacter> {
        self.split.map(|s| AnCharacter {
            origin: self.origin.clone(),
            split: Some(match s {
                SplitSign::Plus => SplitSign::Minus,
                SplitSign::Minus => SplitSign::Plus,
            }),
        })
    }
}

impl fmt::Display for AnCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.origin)?;
        if let Some(s) = self.split {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The irreducible characters of A_n (n >= 3), one per transpose-pair of
/// non-self-conjugate labels plus two per self-conjugate label, in
/// descending lexicographic order of the origin label.
pub fn an_characters(n: u32) -> Vec<AnCharacter> {
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        let t = lambda.conjugate();
        if lambda == t {
            out.push(AnCharacter {
                origin: lambda.clone(),
                split: Some(SplitSign::Plus),
            });
            out.push(AnCharacter {
                origin: lambda,
                split: Some(SplitSign::Minus),
            });
        } else if lambda > t {
            out.push(AnCharacter {
                origin: lambda,
                split: None,
            });
        }
    }
    out
}

/// Conjugacy classes of A_n: even cycle types in ascending lexicographic
/// order, split types contributing the pair (A, B).
pub fn an_classes(n: u32) -> Vec<AnClassLabel> {
    let mut types: Vec<Partition> = Partition::all(n)
        .into_iter()
        .filter(|t| CycleType::from_partition(t.clone()).is_even())
        .collect();
    types.sort();
    let mut out = Vec::new();
    for t in types {
        let ct = CycleType::from_partition(t);
        if ct.splits_in_an().expect("even type") {
            out.push(AnClassLabel::new(ct.clone(), Some(SplitTag::A)).unwrap());
            out.push(AnClassLabel::new(ct, Some(SplitTag::B)).unwrap());
        } else {
            out.push(AnClassLabel::new(ct, None).unwrap());
        }
    }
    out
}

/// Centralizer order of a class of S_n: prod over distinct parts c of
/// c^(mult) * mult!.
pub fn sn_centralizer_order(ct: &CycleType) -> u128 {
    let mut order: u128 = 1;
    let parts = ct.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let mult = (j - i) as u128;
        order *= (parts[i] as u128).pow((j - i) as u32);
        for k in 1..=mult {
            order *= k;
        }
        i = j;
    }
    order
}

pub fn factorial(n: u32) -> u128 {
    (2..=n as u128).product()
}

/// Size of the S_n class of a cycle type.
pub fn sn_class_size(ct: &CycleType) -> u128 {
    factorial(ct.n()) / sn_centralizer_order(ct)
}

/// Size of an A_n class: half the S_n class for split types, the full S_n
/// class otherwise.
pub fn an_class_size(label: &AnClassLabel) -> u128 {
    let full = sn_class_size(label.cycle_type());
    if label.split().is_some() {
        full / 2
    } else {
        full
    }
}

/// Discriminant data of a self-conjugate label: (eps, eps * prod of hooks)
/// where eps = (-1)^((n - r)/2) and r is the number of diagonal hooks.
fn split_discriminant(origin: &Partition) -> (i64, BigInt) {
    let hooks = origin.diagonal_hooks();
    let n = origin.n();
    let r = hooks.len() as u32;
    debug_assert_eq!((n - r) % 2, 0);
    let eps: i64 = if ((n - r) / 2) % 2 == 0 { 1 } else { -1 };
    let mut prod = BigInt::from(eps);
    for h in hooks {
        prod *= BigInt::from(h);
    }
    (eps, prod)
}

/// Exact value of an A_n character on an A_n class.
///
/// Restriction characters take the S_n value on both members of a split
/// class. A split pair agrees with half the S_n value away from its
/// diagonal-hook type; on the two classes of that type the values are
/// (eps +- sqrt(eps * prod hooks)) / 2, the plus sign attaching to the
/// `Plus` character on class `A` under the library's conventions.
pub fn an_character_value(chi: &AnCharacter, cls: &AnClassLabel) -> Result<CycInt> {
    if chi.n() != cls.cycle_type().n() {
        return Err(Error::domain(format!(
            "character {chi} and class {cls} have different degrees"
        )));
    }
    let Some(sign) = chi.split else {
        return Ok(CycInt::from_int(mn_character(&chi.origin, cls.cycle_type())?));
    };
    let hooks = chi.origin.diagonal_hooks();
    if cls.cycle_type().parts() != hooks.as_slice() {
        let v = mn_character(&chi.origin, cls.cycle_type())?;
        let (q, r) = v.div_rem(&BigInt::from(2));
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "split character value {v} for {chi} at {cls} is odd"
            )));
        }
        return Ok(CycInt::from_int(q));
    }
    // the diagonal-hook type: this class splits, and values involve the
    // discriminant square root
    let tag = cls.split().ok_or_else(|| {
        Error::internal(format!("hook-type class {cls} carries no split tag"))
    })?;
    let (eps, disc) = split_discriminant(&chi.origin);
    let root = sqrt_discriminant(&disc)?;
    let plus = (sign == SplitSign::Plus) == (tag == SplitTag::A);
    let num = if plus {
        CycInt::from_int(eps).add(&root)
    } else {
        CycInt::from_int(eps).sub(&root)
    };
    num.div_exact_int(&BigInt::from(2)).ok_or_else(|| {
        Error::internal(format!("split value for {chi} at {cls} is not integral"))
    })
}

/// Value of the S_n character `lambda` on `ct`, as a cyclotomic integer.
pub fn sn_character_value(lambda: &Partition, ct: &CycleType) -> Result<CycInt> {
    Ok(CycInt::from_int(mn_character(lambda, ct)?))
}
