//! The rational group algebra of `S_m`: Young symmetrizers and primitive
//! central idempotents.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::characters::{chi, irrep_dimension};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::rational::{factorial, q_int, Q};

/// Default cap on the degree of full group-algebra products; `m!^2` term
/// pairs get out of hand quickly past this.
pub const DEFAULT_PRODUCT_CAP: usize = 7;

/// Cap on the support of a Young symmetrizer (row stabilizer times column
/// stabilizer size).
const SYMMETRIZER_SUPPORT_CAP: usize = 2_000_000;

/// An element of the group algebra `Q[S_m]`: a finite map from permutations
/// to rationals. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element for a single permutation.
    pub fn delta(perm: Permutation) -> Self {
        let degree = perm.degree();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(perm, q_int(1));
        GroupAlgebraElement { degree, coeffs }
    }

    pub fn one(degree: usize) -> Self {
        Self::delta(Permutation::identity(degree))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, perm: &Permutation) -> Q {
        self.coeffs.get(perm).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Q)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, perm: Permutation, value: Q) {
        debug_assert_eq!(perm.degree(), self.degree);
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(perm.clone()).or_insert_with(Q::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(&perm);
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (perm, value) in &other.coeffs {
            out.add_term(perm.clone(), value.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Q) -> Self {
        if factor.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    /// Convolution product under the default degree cap.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_with_cap(other, DEFAULT_PRODUCT_CAP)
    }

    /// Convolution product: the bilinear extension of composition, right
    /// factor applied first.
    pub fn multiply_with_cap(&self, other: &Self, cap: usize) -> Result<Self> {
        self.check_degree(other)?;
        if self.degree > cap {
            return Err(Error::CapExceeded {
                what: "group algebra product degree",
                requested: self.degree,
                limit: cap,
            });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut acc: HashMap<Vec<usize>, Q> =
            HashMap::with_capacity(self.coeffs.len().max(other.coeffs.len()));
        for (sigma, a) in &self.coeffs {
            for (tau, b) in &other.coeffs {
                let composed: Vec<usize> =
                    tau.images().iter().map(|&i| sigma.apply(i)).collect();
                let entry = acc.entry(composed).or_insert_with(Q::zero);
                *entry += a * b;
            }
        }
        let coeffs = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(images, v)| {
                (
                    Permutation::from_images(images).expect("composition of bijections"),
                    v,
                )
            })
            .collect();
        GroupAlgebraElement {
            degree: self.degree,
            coeffs,
        }
    }

    /// Pushes every permutation through [`Permutation::embed_fixing_first`],
    /// realizing `id (x) self` on one more tensor factor.
    pub fn embed_fixing_first(&self) -> Self {
        GroupAlgebraElement {
            degree: self.degree + 1,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.embed_fixing_first(), v.clone()))
                .collect(),
        }
    }
}

impl Serialize for GroupAlgebraElement {
    /// Lists of `(one-line permutation, numerator, denominator)` triples in
    /// lexicographic permutation order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (perm, value) in &self.coeffs {
            let (num, den) = crate::rational::as_i64_pair(value)
                .ok_or_else(|| serde::ser::Error::custom("coefficient exceeds i64"))?;
            seq.serialize_element(&(perm, num, den))?;
        }
        seq.end()
    }
}

/// A filling of a Young diagram with `1..=m`, each number used once.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = shape.size();
        if rows.len() != shape.rows()
            || rows
                .iter()
                .enumerate()
                .any(|(i, r)| r.len() != shape.part(i))
        {
            return Err(Error::InvalidPartition(format!(
                "filling does not match shape {shape}"
            )));
        }
        let mut seen = vec![false; m];
        for &x in rows.iter().flatten() {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::OutOfRange(format!(
                    "filling must use 1..={m} exactly once"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(YoungTableau { shape, rows })
    }

    /// The row-reading filling: `1..lambda_1` in row one and so on.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        YoungTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.cols())
            .map(|j| {
                self.rows
                    .iter()
                    .filter_map(|row| row.get(j).copied())
                    .collect()
            })
            .collect()
    }

    /// Entries increase along rows and down columns.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// All standard tableaux of the given shape, by direct backtracking.
    pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
        let m = shape.size();
        let mut out = Vec::new();
        let mut fill: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        fn rec(
            shape: &Partition,
            next: usize,
            m: usize,
            fill: &mut Vec<Vec<usize>>,
            filled: &mut Vec<usize>,
            out: &mut Vec<YoungTableau>,
        ) {
            if next > m {
                out.push(
                    YoungTableau::new(
                        shape.clone(),
                        fill.clone(),
                    )
                    .expect("backtracking produces valid fillings"),
                );
                return;
            }
            for r in 0..shape.rows() {
                let c = filled[r];
                if c >= shape.part(r) {
                    continue;
                }
                if r > 0 && filled[r - 1] <= c {
                    continue;
                }
                fill[r][c] = next;
                filled[r] += 1;
                rec(shape, next + 1, m, fill, filled, out);
                filled[r] -= 1;
            }
        }
        let mut filled = vec![0usize; shape.rows()];
        rec(shape, 1, m, &mut fill, &mut filled, &mut out);
        out
    }
}

/// Sum over all permutations preserving each group of points, optionally
/// signed. Groups hold 1-based entries.
fn stabilizer_sum(m: usize, groups: &[Vec<usize>], signed: bool) -> GroupAlgebraElement {
    let mut element = GroupAlgebraElement::zero(m);
    let mut images: Vec<usize> = (0..m).collect();
    fn rec(
        groups: &[Vec<usize>],
        idx: usize,
        signed: bool,
        images: &mut Vec<usize>,
        sign: i64,
        element: &mut GroupAlgebraElement,
    ) {
        if idx == groups.len() {
            element.add_term(
                Permutation::from_images(images.clone()).expect("stabilizer element"),
                q_int(sign),
            );
            return;
        }
        let group = &groups[idx];
        for arrangement in group.iter().permutations(group.len()) {
            for (&slot, &&target) in group.iter().zip(arrangement.iter()) {
                images[slot - 1] = target - 1;
            }
            let step_sign = if signed {
                sign * arrangement_sign(&arrangement)
            } else {
                sign
            };
            rec(groups, idx + 1, signed, images, step_sign, element);
        }
        for &slot in group {
            images[slot - 1] = slot - 1;
        }
    }
    rec(groups, 0, signed, &mut images, 1, &mut element);
    element
}

fn arrangement_sign(arrangement: &[&usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..arrangement.len() {
        for j in i + 1..arrangement.len() {
            if arrangement[i] > arrangement[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Young symmetrizer of a tableau: the row-stabilizer sum times the
/// signed column-stabilizer sum. Satisfies `c^2 = (m!/dim) c`.
pub fn young_symmetrizer(tableau: &YoungTableau) -> Result<GroupAlgebraElement> {
    let m = tableau.size();
    let row_size: usize = tableau.rows().iter().map(|r| factorial_usize(r.len())).product();
    let col_size: usize = tableau
        .columns()
        .iter()
        .map(|c| factorial_usize(c.len()))
        .product();
    if row_size.saturating_mul(col_size) > SYMMETRIZER_SUPPORT_CAP {
        return Err(Error::CapExceeded {
            what: "Young symmetrizer support",
            requested: row_size.saturating_mul(col_size),
            limit: SYMMETRIZER_SUPPORT_CAP,
        });
    }
    let row_sum = stabilizer_sum(m, tableau.rows(), false);
    let col_sum = stabilizer_sum(m, &tableau.columns(), true);
    Ok(row_sum.mul_unchecked(&col_sum))
}

fn factorial_usize(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

/// The primitive central idempotent `(dim/m!) sum_s chi(s) s` projecting onto
/// the isotypic component indexed by `beta`.
pub fn central_idempotent(beta: &Partition) -> Result<GroupAlgebraElement> {
    let m = beta.size();
    let dim = irrep_dimension(beta);
    let scale = Q::new(dim.into(), factorial(m));
    let mut coeffs = BTreeMap::new();
    let mut by_type: HashMap<Partition, i64> = HashMap::new();
    for perm in Permutation::all(m) {
        let t = perm.cycle_type();
        let value = match by_type.get(&t) {
            Some(&v) => v,
            None => {
                let v = chi(beta, &t)?;
                by_type.insert(t, v);
                v
            }
        };
        if value != 0 {
            coeffs.insert(perm, &scale * q_int(value));
        }
    }
    Ok(GroupAlgebraElement { degree: m, coeffs })
}
