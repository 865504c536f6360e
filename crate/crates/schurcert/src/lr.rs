//! Littlewood-Richardson coefficients by two independent routes: a
//! class-weighted character inner product over a Young subgroup, and direct
//! enumeration of skew semistandard tableaux with the lattice-word property.
//! The certifier gates on these values, so the two algorithms deliberately
//! share no code.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::characters::{class_size, CharacterTable};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Character-method coefficient with a private memo and character table, so
/// independent consumers can avoid any shared cached state.
pub struct LrTable {
    chars: CharacterTable,
    memo: Mutex<HashMap<(Partition, Partition, Partition), u64>>,
}

impl LrTable {
    pub fn new() -> Self {
        LrTable {
            chars: CharacterTable::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// Multiplicity of `mu (x) nu` in the restriction of `lambda` to the
    /// Young subgroup `S_{|mu|} x S_{|nu|}`. Zero whenever the sizes do not
    /// add up or a factor is not contained in `lambda`.
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if mu.size() + nu.size() != lambda.size()
            || !lambda.contains(mu)
            || !lambda.contains(nu)
        {
            return 0;
        }
        let key = (lambda.clone(), mu.clone(), nu.clone());
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let v = self.inner_product(lambda, mu, nu);
        self.memo.lock().unwrap().insert(key, v);
        v
    }

    fn inner_product(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let (i, j) = (mu.size(), nu.size());
        let mut acc: i128 = 0;
        for t1 in Partition::all_of(i) {
            let chi_mu = self.chars.chi(mu, &t1).expect("sizes match");
            if chi_mu == 0 {
                continue;
            }
            for t2 in Partition::all_of(j) {
                let chi_nu = self.chars.chi(nu, &t2).expect("sizes match");
                if chi_nu == 0 {
                    continue;
                }
                let mut merged = t1.parts().to_vec();
                merged.extend_from_slice(t2.parts());
                merged.sort();
                merged.reverse();
                let combined = Partition::new(merged).expect("merge of partitions");
                let chi_lambda = self.chars.chi(lambda, &combined).expect("sizes match");
                acc += class_size(&t1) as i128
                    * class_size(&t2) as i128
                    * chi_mu as i128
                    * chi_nu as i128
                    * chi_lambda as i128;
            }
        }
        let order: i128 = (1..=i as i128).product::<i128>() * (1..=j as i128).product::<i128>();
        debug_assert_eq!(acc % order, 0);
        u64::try_from(acc / order).expect("multiplicities are nonnegative")
    }
}

impl Default for LrTable {
    fn default() -> Self {
        Self::new()
    }
}

static SHARED: LazyLock<LrTable> = LazyLock::new(LrTable::new);

/// Character-method coefficient through the shared memo.
pub fn coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    SHARED.coefficient(lambda, mu, nu)
}

/// Number of semistandard skew tableaux of shape `lambda/mu` and content
/// `nu` whose reverse reading word is a lattice word. Errors when `mu` is
/// not contained in `lambda`.
pub fn coefficient_by_tableaux(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u64> {
    if !lambda.contains(mu) {
        return Err(Error::InvalidPartition(format!(
            "{mu} is not contained in {lambda}"
        )));
    }
    if lambda.size() != mu.size() + nu.size() {
        return Ok(0);
    }
    // Boxes in reading order: rows top to bottom, each row right to left.
    // Every constraint then only looks at boxes already placed.
    let mut boxes = Vec::new();
    for r in 0..lambda.rows() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            boxes.push((r, c));
        }
    }
    let values = nu.rows();
    let mut counts = vec![0usize; values];
    let mut grid: Vec<Vec<usize>> = (0..lambda.rows())
        .map(|r| vec![0; lambda.part(r)])
        .collect();
    let mut total = 0u64;
    search_fillings(
        lambda, mu, nu, &boxes, 0, &mut counts, &mut grid, &mut total,
    );
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn search_fillings(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    boxes: &[(usize, usize)],
    idx: usize,
    counts: &mut Vec<usize>,
    grid: &mut Vec<Vec<usize>>,
    total: &mut u64,
) {
    if idx == boxes.len() {
        *total += 1;
        return;
    }
    let (r, c) = boxes[idx];
    for v in 1..=nu.rows() {
        if counts[v - 1] >= nu.part(v - 1) {
            continue;
        }
        // Lattice word: after placing, value v must not outnumber v-1.
        if v > 1 && counts[v - 1] + 1 > counts[v - 2] {
            continue;
        }
        // Row weakly increasing left to right: the right neighbor, if in the
        // skew shape, was already placed.
        if c + 1 < lambda.part(r) && grid[r][c + 1] != 0 && grid[r][c + 1] < v {
            continue;
        }
        // Column strictly increasing downward.
        if r > 0 && c >= mu.part(r - 1) && grid[r - 1][c] >= v {
            continue;
        }
        grid[r][c] = v;
        counts[v - 1] += 1;
        search_fillings(lambda, mu, nu, boxes, idx + 1, counts, grid, total);
        counts[v - 1] -= 1;
        grid[r][c] = 0;
    }
}

/// The extensions of `base` by one box that pair with `fixed` inside
/// `lambda`: `{tau in base+1 : N(lambda; tau, fixed) != 0}`. By symmetry of
/// the coefficient this covers both orders of the pair.
pub fn admissible_extensions(
    base: &Partition,
    fixed: &Partition,
    lambda: &Partition,
) -> Vec<Partition> {
    base.add_box()
        .into_iter()
        .filter(|tau| coefficient(lambda, tau, fixed) != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn pinned_vanishing_coefficient() {
        let lambda = partition![2, 2];
        let mu = partition![1, 1];
        let nu = partition![2];
        assert_eq!(coefficient(&lambda, &mu, &nu), 0);
        assert_eq!(coefficient_by_tableaux(&lambda, &mu, &nu).unwrap(), 0);
        // ... while the pair of two rows does not vanish.
        assert_eq!(coefficient(&lambda, &nu, &nu), 1);
        assert_eq!(coefficient_by_tableaux(&lambda, &nu, &nu).unwrap(), 1);
    }

    #[test]
    fn restriction_to_itself() {
        for lambda in [partition![3, 1], partition![2, 2, 1], partition![5]] {
            assert_eq!(coefficient(&lambda, &lambda, &Partition::empty()), 1);
            assert_eq!(coefficient(&lambda, &Partition::empty(), &lambda), 1);
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(coefficient(&partition![2, 1], &partition![1], &partition![2]), 1);
        assert_eq!(
            coefficient_by_tableaux(&partition![2, 1], &partition![2], &partition![1]).unwrap(),
            1
        );
        assert_eq!(
            coefficient_by_tableaux(&partition![4, 2], &partition![2, 1], &partition![2, 1])
                .unwrap(),
            1
        );
        assert_eq!(
            coefficient(&partition![4, 2], &partition![2, 1], &partition![2, 1]),
            1
        );
    }

    #[test]
    fn tableau_method_requires_containment() {
        assert!(coefficient_by_tableaux(&partition![2], &partition![1, 1], &partition![1]).is_err());
    }

    #[test]
    fn size_mismatch_gives_zero() {
        assert_eq!(coefficient(&partition![3], &partition![1], &partition![1]), 0);
        assert_eq!(
            coefficient_by_tableaux(&partition![3], &partition![1], &partition![1]).unwrap(),
            0
        );
    }

    #[test]
    fn methods_agree_up_to_size_six() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                for i in 0..=n {
                    for mu in Partition::all_of(i) {
                        if !lambda.contains(&mu) {
                            continue;
                        }
                        for nu in Partition::all_of(n - i) {
                            assert_eq!(
                                coefficient(&lambda, &mu, &nu),
                                coefficient_by_tableaux(&lambda, &mu, &nu).unwrap(),
                                "disagreement at ({lambda}; {mu}, {nu})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_and_conjugation() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                for i in 0..=n / 2 {
                    for mu in Partition::all_of(i) {
                        for nu in Partition::all_of(n - i) {
                            let direct = coefficient(&lambda, &mu, &nu);
                            assert_eq!(direct, coefficient(&lambda, &nu, &mu));
                            assert_eq!(
                                direct,
                                coefficient(
                                    &lambda.conjugate(),
                                    &mu.conjugate(),
                                    &nu.conjugate()
                                ),
                                "conjugation at ({lambda}; {mu}, {nu})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_lives_on_subdiagrams() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                for i in 0..=n {
                    let inner = lambda.remove_boxes(n - i).unwrap();
                    let outer = lambda.remove_boxes(i).unwrap();
                    for mu in Partition::all_of(i) {
                        for nu in Partition::all_of(n - i) {
                            if coefficient(&lambda, &mu, &nu) != 0 {
                                assert!(inner.contains(&mu), "{mu} outside {lambda}");
                                assert!(outer.contains(&nu), "{nu} outside {lambda}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_extension_examples() {
        // Only (2) survives: the pair ((1,1), (2)) vanishes inside (2,2).
        assert_eq!(
            admissible_extensions(&partition![1], &partition![2], &partition![2, 2]),
            vec![partition![2]]
        );
        assert_eq!(
            admissible_extensions(&partition![1, 1], &partition![1], &partition![2, 2]),
            vec![partition![2, 1]]
        );
        assert_eq!(
            admissible_extensions(&partition![1], &Partition::empty(), &partition![1, 1]),
            vec![partition![1, 1]]
        );
        assert_eq!(
            admissible_extensions(&partition![1], &partition![1], &partition![3]),
            vec![partition![2]]
        );
        // Extending the empty partition always lands on (1).
        for lambda in Partition::all_of(4) {
            for nu in lambda.remove_boxes(1).unwrap() {
                assert_eq!(
                    admissible_extensions(&Partition::empty(), &nu, &lambda),
                    vec![partition![1]]
                );
            }
        }
    }

    #[test]
    fn full_shape_extension_detects_one_box_removals() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                let removals = lambda.remove_boxes(1).unwrap();
                for mu_prime in Partition::all_of(n - 1) {
                    let ext = admissible_extensions(&mu_prime, &Partition::empty(), &lambda);
                    if removals.contains(&mu_prime) {
                        assert_eq!(ext, vec![lambda.clone()]);
                    } else {
                        assert!(ext.is_empty());
                    }
                }
            }
        }
    }
}
