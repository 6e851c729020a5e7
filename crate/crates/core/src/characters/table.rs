//! Full exact character tables of S_n and A_n, with JSON export and exact
//! orthogonality checks.

use num_bigint::BigInt;
use serde::Serialize;

use crate::cyclotomic::CycInt;
use crate::error::Result;
use crate::partition::Partition;
use crate::perm::{AnClassLabel, CycleType};

use super::an::{
    an_character_value, an_characters, an_class_size, an_classes, factorial, sn_class_size,
    sn_character_value, AnCharacter,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Symmetric,
    Alternating,
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupKind::Symmetric => write!(f, "Sn"),
            GroupKind::Alternating => write!(f, "An"),
        }
    }
}

/// An exact character table: rows labelled by characters, columns by classes.
pub struct CharacterTable {
    pub group: GroupKind,
    pub n: u32,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub class_sizes: Vec<u128>,
    pub values: Vec<Vec<CycInt>>,
}

/// All cycle types of n in ascending lexicographic order.
pub fn sn_classes(n: u32) -> Vec<CycleType> {
    let mut types = Partition::all(n);
    types.sort();
    types.into_iter().map(CycleType::from_partition).collect()
}

/// Character rows of S_n: every partition, descending lexicographic.
pub fn sn_character_labels(n: u32) -> Vec<Partition> {
    Partition::all(n)
}

pub fn build_sn_table(n: u32) -> Result<CharacterTable> {
    let rows = sn_character_labels(n);
    let cols = sn_classes(n);
    let mut values = Vec::with_capacity(rows.len());
    for lambda in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for ct in &cols {
            row.push(sn_character_value(lambda, ct)?);
        }
        values.push(row);
    }
    Ok(CharacterTable {
        group: GroupKind::Symmetric,
        n,
        row_labels: rows.iter().map(|p| p.to_string()).collect(),
        col_labels: cols.iter().map(|c| c.to_string()).collect(),
        class_sizes: cols.iter().map(sn_class_size).collect(),
        values,
    })
}

pub fn build_an_table(n: u32) -> Result<CharacterTable> {
    let rows: Vec<AnCharacter> = an_characters(n);
    let cols: Vec<AnClassLabel> = an_classes(n);
    let mut values = Vec::with_capacity(rows.len());
    for chi in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for cls in &cols {
            row.push(an_character_value(chi, cls)?);
        }
        values.push(row);
    }
    Ok(CharacterTable {
        group: GroupKind::Alternating,
        n,
        row_labels: rows.iter().map(|c| c.to_string()).collect(),
        col_labels: cols.iter().map(|c| c.to_string()).collect(),
        class_sizes: cols.iter().map(an_class_size).collect(),
        values,
    })
}

impl CharacterTable {
    pub fn group_order(&self) -> u128 {
        match self.group {
            GroupKind::Symmetric => factorial(self.n),
            GroupKind::Alternating => factorial(self.n) / 2,
        }
    }

    /// First orthogonality: sum over classes |K| chi(K) conj(chi'(K)) equals
    /// |G| on the diagonal and 0 off it. Exact.
    pub fn check_row_orthogonality(&self) -> Result<()> {
        let order = BigInt::from(self.group_order());
        for (i, r1) in self.values.iter().enumerate() {
            for (k, r2) in self.values.iter().enumerate().skip(i) {
                let mut acc = CycInt::zero();
                for (c, size) in self.class_sizes.iter().enumerate() {
                    let term = r1[c].mul(&r2[c].conj()).mul_int(&BigInt::from(*size));
                    acc = acc.add(&term);
                }
                let expected = if i == k {
                    CycInt::from_int(order.clone())
                } else {
                    CycInt::zero()
                };
                if !acc.equals(&expected) {
                    return Err(crate::error::Error::internal(format!(
                        "row orthogonality failed for {} vs {}",
                        self.row_labels[i], self.row_labels[k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Column orthogonality: sum over characters chi(K) conj(chi(K')) equals
    /// the centralizer order on the diagonal and 0 off it. Exact.
    pub fn check_column_orthogonality(&self) -> Result<()> {
        let order = BigInt::from(self.group_order());
        for c1 in 0..self.col_labels.len() {
            for c2 in c1..self.col_labels.len() {
                let mut acc = CycInt::zero();
                for row in &self.values {
                    acc = acc.add(&row[c1].mul(&row[c2].conj()));
                }
                let expected = if c1 == c2 {
                    let centralizer = &order / BigInt::from(self.class_sizes[c1]);
                    CycInt::from_int(centralizer)
                } else {
                    CycInt::zero()
                };
                if !acc.equals(&expected) {
                    return Err(crate::error::Error::internal(format!(
                        "column orthogonality failed for {} vs {}",
                        self.col_labels[c1], self.col_labels[c2]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut rows = Vec::new();
        for (i, label) in self.row_labels.iter().enumerate() {
            let mut entries = Vec::new();
            for v in &self.values[i] {
                entries.push(serde_json::to_value(v.to_repr()?).unwrap());
            }
            rows.push(serde_json::json!({ "character": label, "values": entries }));
        }
        Ok(serde_json::json!({
            "schema": 1,
            "group": format!("{}", self.group),
            "n": self.n,
            "classes": self.col_labels,
            "class_sizes": self.class_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "rows": rows,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn sum_of_squares_of_degrees() {
        for n in 2..=7u32 {
            let t = build_sn_table(n).unwrap();
            let id_col = t
                .col_labels
                .iter()
                .position(|l| *l == format!("[1^{n}]"))
                .unwrap();
            let mut acc = BigInt::zero();
            for row in &t.values {
                let d = row[id_col].as_integer().unwrap();
                acc += &d * &d;
            }
            assert_eq!(acc, BigInt::from(factorial(n)));
        }
    }

    #[test]
    fn orthogonality_sn_small() {
        for n in 2..=8u32 {
            let t = build_sn_table(n).unwrap();
            t.check_row_orthogonality().unwrap();
            t.check_column_orthogonality().unwrap();
        }
    }

    #[test]
    fn orthogonality_an_small() {
        for n in 3..=7u32 {
            let t = build_an_table(n).unwrap();
            t.check_row_orthogonality().unwrap();
            t.check_column_orthogonality().unwrap();
        }
    }
}
