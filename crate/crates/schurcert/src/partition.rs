//! Partitions and Young-diagram combinatorics.
//!
//! A partition is a weakly decreasing list of positive integers; the empty
//! list is the unique partition of 0. Boxes of the diagram are addressed by
//! 1-based `(row, column)` pairs, so `(i, j)` lies in `lambda` exactly when
//! `j <= lambda_i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing list. Trailing zeros are
    /// stripped; an increasing pair or an interior zero is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition `(0)`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row `(q)`; `row(0)` is the empty partition.
    pub fn row(q: usize) -> Self {
        if q == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![q] }
        }
    }

    /// Single column `(1^p)`.
    pub fn column(p: usize) -> Self {
        Partition { parts: vec![1; p] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns (the first part, 0 if empty).
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `idx`-th part, 0-based, with 0 past the end.
    pub fn part(&self, idx: usize) -> usize {
        self.parts.get(idx).copied().unwrap_or(0)
    }

    /// Box membership, 1-based coordinates: `(i, j)` is a box iff `j <= lambda_i`.
    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i - 1)
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(idx, &p)| p <= self.part(idx))
    }

    /// The conjugate (transposed diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.cols();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// A hook omits the box `(2,2)`.
    pub fn is_hook(&self) -> bool {
        !self.contains_box(2, 2)
    }

    /// All parts equal.
    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Multiset of box contents `j - i`, in row-major box order.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                out.push(j as i64 - i as i64);
            }
        }
        out
    }

    /// All partitions of `size() + 1` obtained by adding a single box.
    /// Sorted descending; the count is the number of distinct part values
    /// plus one.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.rows() {
            let here = self.part(r);
            let above = if r == 0 { usize::MAX } else { self.part(r - 1) };
            if above > here {
                let mut parts = self.parts.clone();
                if r == self.rows() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out.sort();
        out.reverse();
        out
    }

    /// All partitions of `size() - i` whose diagram is contained in this one,
    /// i.e. every way of deleting `i` boxes that leaves a partition shape.
    /// Sorted descending. Errors if `i > size()`.
    pub fn remove_boxes(&self, i: usize) -> Result<Vec<Partition>> {
        let n = self.size();
        if i > n {
            return Err(Error::OutOfRange(format!(
                "cannot delete {i} boxes from a partition of {n}"
            )));
        }
        let target = n - i;
        let mut out = Vec::new();
        let mut acc = Vec::new();
        self.sub_shapes(0, usize::MAX, target, &mut acc, &mut out);
        out.sort();
        out.reverse();
        Ok(out)
    }

    fn sub_shapes(
        &self,
        row: usize,
        bound: usize,
        remaining: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        if row >= self.rows() {
            return;
        }
        let max_here = self.part(row).min(bound).min(remaining);
        for v in (1..=max_here).rev() {
            acc.push(v);
            self.sub_shapes(row + 1, v, remaining - v, acc, out);
            acc.pop();
        }
    }

    /// The set of dimensions for which semisimplicity of the associated Schur
    /// functor does not force semisimplicity of the underlying object.
    ///
    /// Start from the interval `R = {-q, ..., p}` and delete: 0 when the
    /// shape is a hook, 1 when `(3,2)` is not a box, -1 when `(2,3)` is not a
    /// box, and both `-q` and `p` when the shape is not a rectangle.
    pub fn forbidden_dimensions(&self) -> BTreeSet<i64> {
        let p = self.rows() as i64;
        let q = self.cols() as i64;
        let mut excluded: BTreeSet<i64> = BTreeSet::new();
        if self.is_hook() {
            excluded.insert(0);
        }
        if !self.contains_box(3, 2) {
            excluded.insert(1);
        }
        if !self.contains_box(2, 3) {
            excluded.insert(-1);
        }
        if !self.is_rectangle() {
            excluded.insert(-q);
            excluded.insert(p);
        }
        (-q..=p).filter(|d| !excluded.contains(d)).collect()
    }

    /// All partitions of `n`, sorted descending.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut acc = Vec::new();
        fn rec(remaining: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for v in (1..=max.min(remaining)).rev() {
                acc.push(v);
                rec(remaining - v, v, acc, out);
                acc.pop();
            }
        }
        rec(n, n, &mut acc, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience constructor used pervasively in tests.
#[macro_export]
macro_rules! partition {
    ($($x:expr),* $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),*]).unwrap()
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn new_strips_trailing_zeros_and_validates() {
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert_eq!(p(&[]).parts(), &[] as &[usize]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn basic_statistics() {
        let lam = p(&[4, 2, 1]);
        assert_eq!(lam.size(), 7);
        assert_eq!(lam.rows(), 3);
        assert_eq!(lam.cols(), 4);
        assert_eq!(lam.part(5), 0);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn box_membership() {
        assert!(!p(&[2, 1]).contains_box(2, 2));
        assert!(p(&[2, 2]).contains_box(2, 2));
        assert!(!p(&[3]).contains_box(2, 1));
    }

    #[test]
    fn hook_and_rectangle() {
        assert!(p(&[4, 1, 1]).is_hook());
        assert!(!p(&[2, 2]).is_hook());
        assert!(p(&[1]).is_hook());
        assert!(p(&[2, 2]).is_rectangle());
        assert!(!p(&[2, 1]).is_rectangle());
        assert!(p(&[5]).is_rectangle());
    }

    #[test]
    fn remove_boxes_examples() {
        assert_eq!(p(&[2, 1]).remove_boxes(1).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[2, 2]).remove_boxes(2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[3]).remove_boxes(3).unwrap(), vec![Partition::empty()]);
        assert!(p(&[2, 1]).remove_boxes(4).is_err());
    }

    #[test]
    fn add_box_examples() {
        assert_eq!(Partition::empty().add_box(), vec![p(&[1])]);
        assert_eq!(p(&[1]).add_box(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            p(&[2, 1]).add_box(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }

    #[test]
    fn forbidden_dimensions_examples() {
        for n in 2..=6 {
            let expected: BTreeSet<i64> = (2..=n as i64).collect();
            assert_eq!(Partition::column(n).forbidden_dimensions(), expected);
        }
        assert!(p(&[2, 1]).forbidden_dimensions().is_empty());
        let expected: BTreeSet<i64> = [-2, 0, 2].into_iter().collect();
        assert_eq!(p(&[2, 2]).forbidden_dimensions(), expected);
    }

    #[test]
    fn contents_examples() {
        let mut c = p(&[2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
        assert_eq!(p(&[1]).contents(), vec![0]);
        let mut c = p(&[2, 2]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 0, 1]);
    }

    #[test]
    fn contents_fill_the_interval() {
        for n in 1..=8 {
            for lam in Partition::all_of(n) {
                let set: BTreeSet<i64> = lam.contents().into_iter().collect();
                let expected: BTreeSet<i64> =
                    (1 - lam.cols() as i64..=lam.rows() as i64 - 1).map(|x| -x).collect();
                assert_eq!(set, expected, "contents of {lam}");
                let zeros = lam.contents().iter().filter(|&&c| c == 0).count();
                assert_eq!(zeros == 1, lam.is_hook(), "diagonal of {lam}");
            }
        }
    }

    #[test]
    fn remove_add_adjointness() {
        for n in 1..=6 {
            for lam in Partition::all_of(n) {
                for i in 0..=n {
                    for mu in lam.remove_boxes(i).unwrap() {
                        let mut reachable = vec![mu.clone()];
                        for _ in 0..i {
                            let mut next = Vec::new();
                            for nu in &reachable {
                                next.extend(nu.add_box());
                            }
                            next.sort();
                            next.dedup();
                            reachable = next;
                        }
                        assert!(reachable.contains(&lam), "{mu} should reach {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn forbidden_dimension_duality() {
        for n in 1..=8 {
            for lam in Partition::all_of(n) {
                let dual: BTreeSet<i64> = lam
                    .conjugate()
                    .forbidden_dimensions()
                    .into_iter()
                    .map(|x| -x)
                    .collect();
                assert_eq!(lam.forbidden_dimensions(), dual, "duality at {lam}");
            }
        }
    }

    #[test]
    fn serde_canonical_form() {
        let lam = p(&[2, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,3,1]").unwrap();
        assert_eq!(back, p(&[3, 3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=6, 0..=6).prop_map(|mut v| {
            v.sort();
            v.reverse();
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(lam in arb_partition()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn add_box_count(lam in arb_partition()) {
            let distinct: BTreeSet<usize> = lam.parts().iter().copied().collect();
            prop_assert_eq!(lam.add_box().len(), distinct.len() + 1);
        }

        #[test]
        fn conjugate_swaps_rows_and_cols(lam in arb_partition()) {
            let c = lam.conjugate();
            prop_assert_eq!(c.rows(), lam.cols());
            prop_assert_eq!(c.cols(), lam.rows());
            prop_assert_eq!(c.size(), lam.size());
        }
    }
}
