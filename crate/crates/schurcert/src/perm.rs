//! Permutations of `{1, ..., m}` in one-line notation.
//!
//! Internally images are stored 0-based; the JSON form is the 1-based
//! one-line notation `[s(1), ..., s(m)]`. Composition is right-to-left:
//! `(s * t)(i) = s(t(i))`.

use std::fmt;

use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity of `S_m`.
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// From 0-based images; must be a bijection on `0..m`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(Error::OutOfRange(format!(
                    "not a bijection on 0..{m}: {images:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::OutOfRange("one-line notation is 1-based".into()));
        }
        Self::from_images(images.into_iter().map(|x| x - 1).collect())
    }

    /// From disjoint cycles given with 1-based entries, e.g. `[[1,2,3]]`.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > m || b == 0 || b > m {
                    return Err(Error::OutOfRange(format!("cycle entry out of 1..={m}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composition degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles (0-based entries), fixed points included, each cycle
    /// starting at its least element, cycles ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of disjoint cycles, fixed points counted as 1-cycles.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().into_iter().map(|c| c.len()).collect();
        lens.sort();
        lens.reverse();
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// Sign of the permutation.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The element of `S_{m+1}` fixing the first point and acting as `self`
    /// on the remaining points, shifted up by one.
    pub fn embed_fixing_first(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.degree() + 1);
        images.push(0);
        images.extend(self.images.iter().map(|&x| x + 1));
        Permutation { images }
    }

    /// All of `S_m` in lexicographic one-line order.
    pub fn all(m: usize) -> impl Iterator<Item = Permutation> {
        (0..m)
            .permutations(m)
            .map(|images| Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|&x| x + 1).collect();
        write!(f, "perm{one_based:?}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.images.iter().map(|&x| x + 1).collect();
        one_based.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let one_based = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_line(one_based).map_err(D::Error::custom)
    }
}
