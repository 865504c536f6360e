//! Irreducible characters of the symmetric groups.
//!
//! Character values are computed per conjugacy class with the
//! Murnaghan-Nakayama border-strip recursion and memoized, so sums over
//! `S_m` can be taken over cycle types weighted by class size.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Character values of one symmetric group family, with its own memo table.
///
/// The global [`chi`] wrapper is backed by a shared table; code that must not
/// share cached state (certificate verification) builds a private table.
pub struct CharacterTable {
    memo: Mutex<HashMap<(Partition, Partition), i64>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable {
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The integer value of the irreducible character indexed by `beta` on
    /// the conjugacy class of cycle type `cycle_type`.
    pub fn chi(&self, beta: &Partition, cycle_type: &Partition) -> Result<i64> {
        if beta.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                expected: beta.size(),
                found: cycle_type.size(),
            });
        }
        Ok(self.chi_rec(beta, cycle_type))
    }

    fn chi_rec(&self, beta: &Partition, cycle_type: &Partition) -> i64 {
        if beta.is_empty() {
            return 1;
        }
        let key = (beta.clone(), cycle_type.clone());
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let strip_len = cycle_type.part(0);
        let rest = Partition::new(cycle_type.parts()[1..].to_vec())
            .expect("tail of a partition is a partition");
        let mut acc = 0i64;
        for (smaller, height) in border_strip_removals(beta, strip_len) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            acc += sign * self.chi_rec(&smaller, &rest);
        }
        self.memo.lock().unwrap().insert(key, acc);
        acc
    }
}

impl Default for CharacterTable {
    fn default() -> Self {
        Self::new()
    }
}

/// All ways to remove a border strip of `len` boxes from `beta`, as
/// `(remaining shape, strip height)` pairs. Uses first-column hook lengths:
/// removing a strip replaces one beta-number `b` by `b - len`, provided the
/// result is a fresh beta-number; the height is the number of beta-numbers
/// strictly between the two.
fn border_strip_removals(beta: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let p = beta.rows();
    let betas: Vec<usize> = (0..p).map(|i| beta.part(i) + (p - 1 - i)).collect();
    let mut out = Vec::new();
    for idx in 0..p {
        let b = betas[idx];
        if b < len {
            continue;
        }
        let target = b - len;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut replaced = betas.clone();
        replaced[idx] = target;
        replaced.sort();
        replaced.reverse();
        let parts: Vec<usize> = replaced
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (p - 1 - i))
            .collect();
        out.push((
            Partition::new(parts).expect("beta-numbers reconstruct a partition"),
            height,
        ));
    }
    out
}

static SHARED: LazyLock<CharacterTable> = LazyLock::new(CharacterTable::new);

/// Character value through the shared memo table.
pub fn chi(beta: &Partition, cycle_type: &Partition) -> Result<i64> {
    SHARED.chi(beta, cycle_type)
}

/// Size of the conjugacy class with the given cycle type: `m!/z` where
/// `z` is the product of `k^{a_k} a_k!` over part multiplicities.
pub fn class_size(cycle_type: &Partition) -> u64 {
    let m = cycle_type.size();
    let mut z = 1u128;
    let mut mult: HashMap<usize, u32> = HashMap::new();
    for &k in cycle_type.parts() {
        *mult.entry(k).or_insert(0) += 1;
    }
    for (k, a) in mult {
        z *= (k as u128).pow(a);
        for i in 1..=a as u128 {
            z *= i;
        }
    }
    let mut fact = 1u128;
    for i in 2..=m as u128 {
        fact *= i;
    }
    u64::try_from(fact / z).expect("class size fits u64")
}

/// Sign of any permutation in the class: `(-1)^{m - #parts}`.
pub fn class_sign(cycle_type: &Partition) -> i64 {
    if (cycle_type.size() - cycle_type.rows()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Dimension of the irreducible representation indexed by `beta`, by the
/// hook length formula. Equals the number of standard tableaux of that shape.
pub fn irrep_dimension(beta: &Partition) -> u64 {
    let m = beta.size();
    let conj = beta.conjugate();
    let mut hooks = 1u128;
    for i in 0..beta.rows() {
        for j in 0..beta.part(i) {
            let hook = (beta.part(i) - j) + (conj.part(j) - i) - 1;
            hooks *= hook as u128;
        }
    }
    let mut fact = 1u128;
    for i in 2..=m as u128 {
        fact *= i;
    }
    u64::try_from(fact / hooks).expect("dimension fits u64")
}

/// Multiplicity of the representation of `S_{m-1}` indexed by `alpha` in the
/// restriction of the one indexed by `beta`, as the class-weighted character
/// inner product. Equals 1 exactly when `beta` is `alpha` plus a box.
pub fn branching_multiplicity(beta: &Partition, alpha: &Partition) -> Result<u64> {
    let m = beta.size();
    if alpha.size() + 1 != m {
        return Err(Error::SizeMismatch {
            expected: m.saturating_sub(1),
            found: alpha.size(),
        });
    }
    let mut acc: i128 = 0;
    for t in Partition::all_of(m - 1) {
        let mut extended = t.parts().to_vec();
        extended.push(1);
        extended.sort();
        extended.reverse();
        let ext = Partition::new(extended)?;
        acc += class_size(&t) as i128 * chi(alpha, &t)? as i128 * chi(beta, &ext)? as i128;
    }
    let mut fact = 1i128;
    for i in 2..=(m - 1) as i128 {
        fact *= i;
    }
    debug_assert_eq!(acc % fact, 0);
    Ok(u64::try_from(acc / fact).expect("branching multiplicity is a small nonnegative integer"))
}
