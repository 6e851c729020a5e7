//! Second independent spectrum oracle: explicit rational matrices of the
//! irreducible S_n modules, built from polytabloids. The standard
//! polytabloids span the module inside the tabloid permutation module; the
//! action matrix of a permutation is recovered by solving against that basis.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::{CycInt, RootIndex};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::spectra::EigenSpectrum;

use super::charpoly::{charpoly_rational, root_multiplicity_cyc};

/// Combinatorial blow-up cap for the polytabloid construction.
pub const SPECHT_DEGREE_CAP: u32 = 7;

/// A tableau of shape lambda: rows of letters (0-based).
type Tableau = Vec<Vec<u32>>;

/// Canonical key of the tabloid (row-equivalence class) of a tableau.
fn tabloid_key(t: &Tableau) -> Vec<u32> {
    let mut key = Vec::new();
    for row in t {
        let mut r = row.clone();
        r.sort_unstable();
        key.extend_from_slice(&r);
    }
    key
}

fn standard_tableaux(shape: &[u32]) -> Vec<Tableau> {
    let rows = shape.len();
    let n: u32 = shape.iter().sum();
    let mut out = Vec::new();
    let mut tab: Tableau = shape.iter().map(|&r| Vec::with_capacity(r as usize)).collect();
    fn rec(shape: &[u32], tab: &mut Tableau, next: u32, n: u32, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(tab.clone());
            return;
        }
        for i in 0..shape.len() {
            if (tab[i].len() as u32) < shape[i]
                && (i == 0 || tab[i - 1].len() > tab[i].len())
            {
                tab[i].push(next);
                rec(shape, tab, next + 1, n, out);
                tab[i].pop();
            }
        }
    }
    rec(shape, &mut tab, 0, n, &mut out);
    let _ = rows;
    out
}

/// All (permutation, sign) pairs of the column stabilizer of `t`, as the
/// letters of each column permuted in place.
fn column_group(t: &Tableau, shape: &[u32]) -> Vec<(Vec<(u32, u32)>, i32)> {
    // columns as letter lists
    let cols = if shape.is_empty() { 0 } else { shape[0] as usize };
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut col = Vec::new();
        for row in t {
            if j < row.len() {
                col.push(row[j]);
            }
        }
        columns.push(col);
    }
    // per-column permutations with signs, via recursive generation
    fn perms_with_signs(letters: &[u32]) -> Vec<(Vec<u32>, i32)> {
        if letters.len() <= 1 {
            return vec![(letters.to_vec(), 1)];
        }
        let mut out = Vec::new();
        for (i, &first) in letters.iter().enumerate() {
            let mut rest = letters.to_vec();
            rest.remove(i);
            let sign0 = if i % 2 == 0 { 1 } else { -1 };
            for (tail, s) in perms_with_signs(&rest) {
                let mut v = vec![first];
                v.extend(tail);
                out.push((v, sign0 * s));
            }
        }
        out
    }
    let per_column: Vec<Vec<(Vec<u32>, i32)>> = columns
        .iter()
        .map(|c| perms_with_signs(c))
        .collect();
    // cartesian product: mapping original letter -> permuted letter
    let mut out: Vec<(Vec<(u32, u32)>, i32)> = vec![(Vec::new(), 1)];
    for (j, options) in per_column.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for (prefix, s0) in &out {
            for (arrangement, s1) in options {
                let mut map = prefix.clone();
                for (orig, new) in columns[j].iter().zip(arrangement) {
                    map.push((*orig, *new));
                }
                next.push((map, s0 * s1));
            }
        }
        out = next;
    }
    out
}

/// Sparse vector over the tabloid basis.
type SparseVec = HashMap<usize, i64>;

/// The irreducible S_n module of shape lambda realized on polytabloids, with
/// enough precomputed data to produce the integer action matrix of any
/// permutation.
pub struct SpechtModule {
    shape: Vec<u32>,
    n: u32,
    dim: usize,
    tabloid_ids: HashMap<Vec<u32>, usize>,
    /// expansion of each standard polytabloid over the tabloid basis
    basis: Vec<SparseVec>,
    /// expansions as tableau lists so the group action can permute letters
    basis_terms: Vec<Vec<(Tableau, i32)>>,
    /// rows of the tall basis matrix giving an invertible square system
    pivot_rows: Vec<usize>,
    /// inverse of the pivot-row square submatrix
    inverse: Vec<Vec<BigRational>>,
}

impl SpechtModule {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let n = lambda.n();
        if n > SPECHT_DEGREE_CAP {
            return Err(Error::domain(format!(
                "degree {n} exceeds the polytabloid-oracle cap {SPECHT_DEGREE_CAP}"
            )));
        }
        if n == 0 {
            return Err(Error::domain("empty shape"));
        }
        let shape = lambda.parts().to_vec();
        let standard = standard_tableaux(&shape);
        let dim = standard.len();
        let mut tabloid_ids: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut basis = Vec::with_capacity(dim);
        let mut basis_terms = Vec::with_capacity(dim);
        for t in &standard {
            let mut vec: SparseVec = HashMap::new();
            let mut terms = Vec::new();
            for (map, sign) in column_group(t, &shape) {
                let permuted = apply_letter_map(t, &map);
                let key = tabloid_key(&permuted);
                let next_id = tabloid_ids.len();
                let id = *tabloid_ids.entry(key).or_insert(next_id);
                *vec.entry(id).or_insert(0) += sign as i64;
                terms.push((permuted, sign));
            }
            vec.retain(|_, v| *v != 0);
            basis.push(vec);
            basis_terms.push(terms);
        }
        let (pivot_rows, inverse) = solve_setup(&basis, dim)?;
        Ok(SpechtModule {
            shape,
            n,
            dim,
            tabloid_ids,
            basis,
            basis_terms,
            pivot_rows,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Integer action matrix of `g` on the standard polytabloid basis
    /// (column i = coordinates of g . e_i).
    pub fn action_matrix(&self, g: &Permutation) -> Result<Vec<Vec<BigRational>>> {
        if g.degree() != self.n {
            return Err(Error::domain(format!(
                "permutation degree {} does not match the shape degree {}",
                g.degree(),
                self.n
            )));
        }
        let mut matrix = vec![vec![BigRational::zero(); self.dim]; self.dim];
        for (i, terms) in self.basis_terms.iter().enumerate() {
            // image vector of g . e_i over the tabloid basis
            let mut image: SparseVec = HashMap::new();
            for (tab, sign) in terms {
                let moved: Tableau = tab
                    .iter()
                    .map(|row| row.iter().map(|&x| g.apply(x)).collect())
                    .collect();
                let key = tabloid_key(&moved);
                let id = *self.tabloid_ids.get(&key).ok_or_else(|| {
                    Error::internal("image tabloid missing from the index")
                })?;
                *image.entry(id).or_insert(0) += *sign as i64;
            }
            image.retain(|_, v| *v != 0);
            // solve with the precomputed inverse of the pivot-row system
            let rhs: Vec<BigRational> = self
                .pivot_rows
                .iter()
                .map(|&r| BigRational::from(BigInt::from(image.get(&r).copied().unwrap_or(0))))
                .collect();
            let mut x = vec![BigRational::zero(); self.dim];
            for (r, xr) in x.iter_mut().enumerate() {
                let mut acc = BigRational::zero();
                for (c, rv) in rhs.iter().enumerate() {
                    if !rv.is_zero() {
                        acc += &self.inverse[r][c] * rv;
                    }
                }
                *xr = acc;
            }
            // verify the full (not just pivot-row) expansion
            let mut check: HashMap<usize, BigRational> = HashMap::new();
            for (k, xv) in x.iter().enumerate() {
                if xv.is_zero() {
                    continue;
                }
                for (&id, &c) in &self.basis[k] {
                    let e = check.entry(id).or_insert_with(BigRational::zero);
                    *e += xv * BigRational::from(BigInt::from(c));
                }
            }
            check.retain(|_, v| !v.is_zero());
            let image_rat: HashMap<usize, BigRational> = image
                .iter()
                .map(|(&id, &c)| (id, BigRational::from(BigInt::from(c))))
                .collect();
            if check != image_rat {
                return Err(Error::internal(
                    "polytabloid image does not lie in the standard basis span",
                ));
            }
            for (r, xv) in x.into_iter().enumerate() {
                matrix[r][i] = xv;
            }
        }
        Ok(matrix)
    }
}

fn apply_letter_map(t: &Tableau, map: &[(u32, u32)]) -> Tableau {
    let lookup: HashMap<u32, u32> = map.iter().copied().collect();
    t.iter()
        .map(|row| {
            row.iter()
                .map(|x| *lookup.get(x).unwrap_or(x))
                .collect()
        })
        .collect()
}

/// Row-reduces the tall (tabloids x dim) basis matrix to find `dim` pivot
/// rows and inverts the resulting square system.
fn solve_setup(basis: &[SparseVec], dim: usize) -> Result<(Vec<usize>, Vec<Vec<BigRational>>)> {
    let rows = basis
        .iter()
        .flat_map(|v| v.keys().copied())
        .max()
        .map_or(0, |m| m + 1);
    let mut work: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            (0..dim)
                .map(|c| BigRational::from(BigInt::from(basis[c].get(&r).copied().unwrap_or(0))))
                .collect()
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(dim);
    let mut used = vec![false; rows];
    for col in 0..dim {
        let Some(r) = (0..rows).find(|&r| !used[r] && !work[r][col].is_zero()) else {
            return Err(Error::internal(
                "standard polytabloids failed to be linearly independent",
            ));
        };
        pivot_rows.push(r);
        used[r] = true;
        let inv = work[r][col].recip();
        for c in 0..dim {
            let v = &work[r][c] * &inv;
            work[r][c] = v;
        }
        for rr in 0..rows {
            if rr != r && !work[rr][col].is_zero() {
                let f = work[rr][col].clone();
                for c in 0..dim {
                    let v = &work[rr][c] - &f * &work[r][c];
                    work[rr][c] = v;
                }
            }
        }
    }
    // invert the pivot-row square submatrix of the original basis matrix
    let square: Vec<Vec<BigRational>> = pivot_rows
        .iter()
        .map(|&r| {
            (0..dim)
                .map(|c| BigRational::from(BigInt::from(basis[c].get(&r).copied().unwrap_or(0))))
                .collect()
        })
        .collect();
    let inverse = invert_matrix(square)?;
    Ok((pivot_rows, inverse))
}

fn invert_matrix(mut a: Vec<Vec<BigRational>>) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::internal("singular pivot system"));
        };
        a.swap(col, p);
        inv.swap(col, p);
        let f = a[col][col].recip();
        for c in 0..n {
            let v = &a[col][c] * &f;
            a[col][c] = v;
            let v = &inv[col][c] * &f;
            inv[col][c] = v;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let v = &a[r][c] - &f * &a[col][c];
                    a[r][c] = v;
                    let v = &inv[r][c] - &f * &inv[col][c];
                    inv[r][c] = v;
                }
            }
        }
    }
    Ok(inv)
}

/// Exact characteristic-0 spectrum of `g` on the module of shape `lambda`
/// from the explicit polytabloid matrix.
pub fn specht_matrix_oracle(lambda: &Partition, g: &Permutation) -> Result<EigenSpectrum> {
    let module = SpechtModule::new(lambda)?;
    specht_spectrum_with(&module, g)
}

/// Same as `specht_matrix_oracle` with a prebuilt module (for sweeps).
pub fn specht_spectrum_with(module: &SpechtModule, g: &Permutation) -> Result<EigenSpectrum> {
    let matrix = module.action_matrix(g)?;
    let poly = charpoly_rational(&matrix)?;
    let m = g.cycle_type().order();
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
    if total != module.dim() as u64 {
        return Err(Error::internal(format!(
            "module spectrum of shape {:?} found {total} of {} eigenvalues",
            module.shape,
            module.dim()
        )));
    }
    EigenSpectrum::new(0, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::CycleType;

    #[test]
    fn dimensions_match_hook_formula() {
        for n in 1..=6u32 {
            for lambda in Partition::all(n) {
                let module = SpechtModule::new(&lambda).unwrap();
                assert_eq!(
                    BigInt::from(module.dim()),
                    lambda.dimension(),
                    "shape {lambda}"
                );
            }
        }
    }

    #[test]
    fn two_two_shape_at_a_four_cycle() {
        let lambda = Partition::new(vec![2, 2]).unwrap();
        let g = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
        let s = specht_matrix_oracle(&lambda, &g).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.multiplicity_of(RootIndex::new(1, 0)), 1);
        assert_eq!(s.multiplicity_of(RootIndex::new(2, 1)), 1);
    }

    #[test]
    fn sign_shape() {
        let lambda = Partition::new(vec![1, 1, 1, 1]).unwrap();
        for (cyc, expect_minus) in [("(1 2 3 4)", true), ("(1 2 3)", false)] {
            let g = Permutation::parse_cycles(cyc, 4).unwrap();
            let s = specht_matrix_oracle(&lambda, &g).unwrap();
            assert_eq!(s.dim(), 1);
            let minus = s.multiplicity_of(RootIndex::new(2, 1));
            assert_eq!(minus == 1, expect_minus);
        }
    }

    #[test]
    fn deleted_module_shape_matches_wn_formula() {
        for parts in [vec![5u32], vec![1, 4], vec![1, 1, 3], vec![2, 2, 1]] {
            let ct = CycleType::new(parts).unwrap();
            let g = ct.canonical_rep();
            let lambda = Partition::new(vec![4, 1]).unwrap();
            let s = specht_matrix_oracle(&lambda, &g).unwrap();
            let w = crate::spectra::spectrum_on_wn(&ct, 0, false).unwrap();
            assert_eq!(s, w, "type {ct}");
        }
    }
}
