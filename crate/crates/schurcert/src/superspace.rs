//! Concrete oracle in super vector spaces over the rationals.
//!
//! Permutations act on tensor powers of a graded space by signed place
//! permutations (Koszul signs), traces are supertraces, and Schur projector
//! ranks are computed by exact fraction-free elimination. This module is the
//! ground truth the symbolic trace polynomials are checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group_algebra::{young_symmetrizer, GroupAlgebraElement, YoungTableau};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::{q_int, Q};

/// Default cap on the dimension `(r+s)^m` of assembled matrices.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// A graded space `Q^{r|s}`: basis vectors `0..r` are even, `r..r+s` odd.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SuperSpaceSpec {
    even: usize,
    odd: usize,
}

impl SuperSpaceSpec {
    pub fn new(even: usize, odd: usize) -> Result<Self> {
        if even + odd == 0 {
            return Err(Error::OutOfRange("total dimension must be positive".into()));
        }
        Ok(SuperSpaceSpec { even, odd })
    }

    pub fn even(&self) -> usize {
        self.even
    }

    pub fn odd(&self) -> usize {
        self.odd
    }

    pub fn total_dim(&self) -> usize {
        self.even + self.odd
    }

    /// Even dimension minus odd dimension; the categorical dimension.
    pub fn superdim(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }

    fn basis_parity(&self, index: usize) -> bool {
        index >= self.even
    }

    /// Parity of each index of the `m`-th tensor power, first factor most
    /// significant.
    pub fn tensor_parity(&self, m: usize) -> Vec<bool> {
        let base = self.total_dim();
        let dim = base.pow(m as u32);
        (0..dim)
            .map(|mut idx| {
                let mut parity = false;
                for _ in 0..m {
                    parity ^= self.basis_parity(idx % base);
                    idx /= base;
                }
                parity
            })
            .collect()
    }
}

/// A sparse exact matrix on a graded basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMatrix {
    dim: usize,
    parity: Vec<bool>,
    entries: BTreeMap<(usize, usize), Q>,
}

impl GradedMatrix {
    pub fn zero(dim: usize, parity: Vec<bool>) -> Self {
        assert_eq!(parity.len(), dim);
        GradedMatrix {
            dim,
            parity,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, parity: Vec<bool>) -> Self {
        let mut m = Self::zero(dim, parity);
        for i in 0..dim {
            m.entries.insert((i, i), q_int(1));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self, index: usize) -> bool {
        self.parity[index]
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_entry(&mut self, row: usize, col: usize, value: Q) {
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((row, col)).or_insert_with(Q::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// `Some(scalar)` when the matrix is that multiple of the identity.
    pub fn as_scalar_identity(&self) -> Option<Q> {
        let scalar = self.entry(0, 0);
        for (&(r, c), v) in &self.entries {
            if r != c && !v.is_zero() {
                return None;
            }
        }
        for i in 0..self.dim {
            if self.entry(i, i) != scalar {
                return None;
            }
        }
        Some(scalar)
    }

    /// The supertrace: diagonal sum with signs from the grading.
    pub fn signed_trace(&self) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.dim {
            if let Some(v) = self.entries.get(&(i, i)) {
                if self.parity[i] {
                    acc -= v;
                } else {
                    acc += v;
                }
            }
        }
        acc
    }
}

/// The signed place-permutation matrix of `sigma` on the `m`-th tensor power
/// of `space`. Basis tensors map to signed basis tensors; the sign is the
/// Koszul sign, one `-1` for every inverted pair of odd factors.
pub fn permutation_action(
    sigma: &Permutation,
    space: &SuperSpaceSpec,
    cap: usize,
) -> Result<GradedMatrix> {
    let m = sigma.degree();
    let base = space.total_dim();
    let dim = checked_power(base, m, cap)?;
    let parity = space.tensor_parity(m);
    let mut matrix = GradedMatrix::zero(dim, parity);
    let mut digits = vec![0usize; m];
    for source in 0..dim {
        decode(source, base, &mut digits);
        let mut target_digits = vec![0usize; m];
        for (k, &d) in digits.iter().enumerate() {
            target_digits[sigma.apply(k)] = d;
        }
        let odd_images: Vec<usize> = digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| space.basis_parity(d))
            .map(|(k, _)| sigma.apply(k))
            .collect();
        let mut inversions = 0usize;
        for a in 0..odd_images.len() {
            for b in a + 1..odd_images.len() {
                if odd_images[a] > odd_images[b] {
                    inversions += 1;
                }
            }
        }
        let target = encode(&target_digits, base);
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        matrix.entries.insert((target, source), q_int(sign));
    }
    Ok(matrix)
}

fn checked_power(base: usize, m: usize, cap: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..m {
        acc = acc.saturating_mul(base);
        if acc > cap {
            return Err(Error::CapExceeded {
                what: "tensor power dimension",
                requested: acc,
                limit: cap,
            });
        }
    }
    Ok(acc)
}

fn decode(mut index: usize, base: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = index % base;
        index /= base;
    }
}

fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

/// Linear extension of the permutation action to group-algebra elements.
pub fn apply_algebra_element(
    x: &GroupAlgebraElement,
    space: &SuperSpaceSpec,
    cap: usize,
) -> Result<GradedMatrix> {
    let m = x.degree();
    let base = space.total_dim();
    let dim = checked_power(base, m, cap)?;
    let parity = space.tensor_parity(m);
    let mut acc = GradedMatrix::zero(dim, parity);
    for (perm, coeff) in x.terms() {
        let action = permutation_action(perm, space, cap)?;
        for (&(r, c), v) in &action.entries {
            acc.add_entry(r, c, coeff * v);
        }
    }
    Ok(acc)
}

/// The supertrace over the last `m - 1` tensor factors: the result acts on
/// the first factor alone.
pub fn partial_trace_last(
    matrix: &GradedMatrix,
    space: &SuperSpaceSpec,
    m: usize,
) -> Result<GradedMatrix> {
    let base = space.total_dim();
    if m == 0 || matrix.dim != base.pow(m as u32) {
        return Err(Error::SizeMismatch {
            expected: base.pow(m.max(1) as u32),
            found: matrix.dim,
        });
    }
    let rest = base.pow(m as u32 - 1);
    let rest_parity = space.tensor_parity(m - 1);
    let parity = space.tensor_parity(1);
    let mut out = GradedMatrix::zero(base, parity);
    for (&(a, b), v) in &matrix.entries {
        let (x, w1) = (a / rest, a % rest);
        let (y, w2) = (b / rest, b % rest);
        if w1 != w2 {
            continue;
        }
        let signed = if rest_parity[w1] { -v.clone() } else { v.clone() };
        out.add_entry(x, y, signed);
    }
    Ok(out)
}

/// Rank of the matrix restricted to rows and columns of one parity.
fn parity_block_rank(matrix: &GradedMatrix, odd: bool) -> usize {
    let mut rows: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
    for (&(r, c), v) in &matrix.entries {
        debug_assert_eq!(
            matrix.parity[r], matrix.parity[c],
            "entries must preserve the grading"
        );
        if matrix.parity[r] == odd {
            rows.entry(r).or_default().insert(c, v.clone());
        }
    }
    let integer_rows: Vec<BTreeMap<usize, BigInt>> =
        rows.into_values().map(clear_denominators).collect();
    integer_rank(integer_rows)
}

fn clear_denominators(row: BTreeMap<usize, Q>) -> BTreeMap<usize, BigInt> {
    let mut lcm = BigInt::one();
    for v in row.values() {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: BTreeMap<usize, BigInt> = row
        .into_iter()
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    let mut gcd = BigInt::zero();
    for v in out.values() {
        gcd = gcd.gcd(v);
    }
    if gcd > BigInt::one() {
        for v in out.values_mut() {
            *v /= &gcd;
        }
    }
    out
}

/// Exact rank by fraction-free elimination on sparse integer rows. Each
/// update is a two-multiplier cross combination followed by a content strip,
/// so entries stay integral.
fn integer_rank(mut rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut rank = 0usize;
    loop {
        rows.retain(|r| !r.is_empty());
        let Some(pivot_col) = rows
            .iter()
            .filter_map(|r| r.keys().next().copied())
            .min()
        else {
            break;
        };
        let pivot_idx = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.keys().next() == Some(&pivot_col))
            .min_by_key(|(_, r)| r.len())
            .map(|(i, _)| i)
            .expect("some row starts at the pivot column");
        let pivot = rows.swap_remove(pivot_idx);
        let pivot_val = pivot[&pivot_col].clone();
        rank += 1;
        for row in rows.iter_mut() {
            if row.keys().next() != Some(&pivot_col) {
                continue;
            }
            let factor = row[&pivot_col].clone();
            let mut updated: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&c, v) in row.iter() {
                updated.insert(c, v * &pivot_val);
            }
            for (&c, v) in pivot.iter() {
                let slot = updated.entry(c).or_insert_with(BigInt::zero);
                *slot -= v * &factor;
                if slot.is_zero() {
                    updated.remove(&c);
                }
            }
            let mut gcd = BigInt::zero();
            for v in updated.values() {
                gcd = gcd.gcd(v);
            }
            if gcd > BigInt::one() {
                for v in updated.values_mut() {
                    *v /= &gcd;
                }
            }
            *row = updated;
        }
    }
    rank
}

/// Total and per-parity rank of a projector image.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankProfile {
    pub total: usize,
    pub even: usize,
    pub odd: usize,
}

/// Rank of the Schur projector of shape `lambda` (canonical tableau) acting
/// on the `|lambda|`-th tensor power of `space`, split by parity.
pub fn schur_rank(lambda: &Partition, space: &SuperSpaceSpec, cap: usize) -> Result<RankProfile> {
    schur_rank_with_tableau(&YoungTableau::canonical(lambda), space, cap)
}

/// Same, for an arbitrary tableau of the shape; the rank does not depend on
/// the choice.
pub fn schur_rank_with_tableau(
    tableau: &YoungTableau,
    space: &SuperSpaceSpec,
    cap: usize,
) -> Result<RankProfile> {
    let symmetrizer = young_symmetrizer(tableau)?;
    let matrix = apply_algebra_element(&symmetrizer, space, cap)?;
    let even = parity_block_rank(&matrix, false);
    let odd = parity_block_rank(&matrix, true);
    Ok(RankProfile {
        total: even + odd,
        even,
        odd,
    })
}

/// Measures the scalar by which the partial trace of the composed isotypic
/// projectors acts on one factor, normalized by the two dimensions so it is
/// directly comparable to the trace polynomial at `d = superdim`.
/// Errors if the partial trace is not scalar.
pub fn measure_trace_scalar(
    alpha: &Partition,
    beta: &Partition,
    space: &SuperSpaceSpec,
    cap: usize,
) -> Result<Q> {
    let m = beta.size();
    if !alpha.add_box().contains(beta) {
        return Err(Error::NotAddable {
            parent: alpha.parts().to_vec(),
            child: beta.parts().to_vec(),
        });
    }
    let embedded = crate::group_algebra::central_idempotent(alpha)?.embed_fixing_first();
    let product = embedded.multiply_with_cap(&crate::group_algebra::central_idempotent(beta)?, m)?;
    let matrix = apply_algebra_element(&product, space, cap)?;
    let traced = partial_trace_last(&matrix, space, m)?;
    let scalar = traced.as_scalar_identity().ok_or_else(|| {
        Error::NonScalar(format!(
            "partial trace of the ({alpha}, {beta}) projector pair"
        ))
    })?;
    let dims = q_int(crate::characters::irrep_dimension(alpha) as i64)
        * q_int(crate::characters::irrep_dimension(beta) as i64);
    Ok(scalar / dims)
}
