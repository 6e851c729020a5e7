//! Integer partitions: the shared combinatorial backbone for cycle types
//! (conjugacy classes) and for the labels of irreducible representations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition of a non-negative integer, stored with parts in
/// non-increasing order. The empty partition (of 0) is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts, sorting them into
    /// canonical non-increasing order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parts already known to be sorted non-increasing and positive.
    pub fn from_desc(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed (conjugate) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut t = Vec::with_capacity(cols);
        for j in 0..cols {
            let len = self.parts.iter().filter(|&&p| p as usize > j).count() as u32;
            t.push(len);
        }
        Partition { parts: t }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook lengths of the diagonal cells (i, i). For a self-conjugate
    /// partition these are distinct odd numbers summing to n.
    pub fn diagonal_hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::new();
        for i in 0..self.parts.len() {
            if self.parts[i] as usize > i {
                let arm = self.parts[i] - 1 - i as u32;
                let leg = conj.parts[i] - 1 - i as u32;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut prod = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.parts[j] - 1 - i as u32;
                prod *= BigInt::from(arm + leg + 1);
            }
        }
        prod
    }

    /// Dimension of the irreducible S_n module labelled by this partition
    /// (hook length formula).
    pub fn dimension(&self) -> BigInt {
        let n = self.n();
        let mut fact = BigInt::one();
        for k in 2..=n {
            fact *= BigInt::from(k);
        }
        let hooks = self.hook_product();
        let (q, r) = num_integer::div_rem(fact, hooks);
        debug_assert!(r == BigInt::from(0));
        q
    }

    /// All partitions of `n` in descending lexicographic order, `(n)` first
    /// and `(1^n)` last.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        gen_rec(n, n, &mut stack, &mut out, None);
        out
    }

    /// All partitions of `n` whose parts are drawn from `allowed`
    /// (descending lexicographic order).
    pub fn all_with_parts(n: u32, allowed: &[u32]) -> Vec<Partition> {
        let mut desc: Vec<u32> = allowed.to_vec();
        desc.sort_unstable_by(|a, b| b.cmp(a));
        desc.dedup();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        gen_rec(n, n, &mut stack, &mut out, Some(&desc));
        out
    }
}

fn gen_rec(
    rem: u32,
    max: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    allowed: Option<&[u32]>,
) {
    if rem == 0 {
        out.push(Partition::from_desc(stack.clone()));
        return;
    }
    match allowed {
        None => {
            let mut p = rem.min(max);
            while p >= 1 {
                stack.push(p);
                gen_rec(rem - p, p, stack, out, None);
                stack.pop();
                p -= 1;
            }
        }
        Some(list) => {
            for &p in list {
                if p <= rem.min(max) {
                    stack.push(p);
                    gen_rec(rem - p, p, stack, out, Some(list));
                    stack.pop();
                }
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_is_descending_lex() {
        let all = Partition::all(4);
        let got: Vec<Vec<u32>> = all.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn conjugate_involution() {
        for p in Partition::all(8) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().n(), p.n());
        }
    }

    #[test]
    fn diagonal_hooks_of_self_conjugate() {
        let p = Partition::new(vec![3, 1, 1]).unwrap();
        assert!(p.is_self_conjugate());
        assert_eq!(p.diagonal_hooks(), vec![5]);
        let q = Partition::new(vec![3, 2, 1]).unwrap();
        assert!(q.is_self_conjugate());
        assert_eq!(q.diagonal_hooks(), vec![5, 1]);
        let r = Partition::new(vec![5, 2, 1, 1, 1]).unwrap();
        assert!(r.is_self_conjugate());
        assert_eq!(r.diagonal_hooks(), vec![9, 1]);
    }

    #[test]
    fn hook_dimensions_small() {
        assert_eq!(Partition::new(vec![4, 1]).unwrap().dimension(), 4.into());
        assert_eq!(Partition::new(vec![3, 2]).unwrap().dimension(), 5.into());
        assert_eq!(Partition::new(vec![3, 1, 1]).unwrap().dimension(), 6.into());
        assert_eq!(Partition::new(vec![3, 3]).unwrap().dimension(), 5.into());
        assert_eq!(
            Partition::new(vec![3, 2, 1]).unwrap().dimension(),
            16.into()
        );
        assert_eq!(
            Partition::new(vec![5, 2, 1, 1, 1]).unwrap().dimension(),
            448.into()
        );
    }

    #[test]
    fn restricted_parts() {
        let got: Vec<Vec<u32>> = Partition::all_with_parts(5, &[1, 2, 4])
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
    }
}
