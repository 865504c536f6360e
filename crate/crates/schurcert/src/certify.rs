//! Machine-checkable semisimplicity certificates.
//!
//! For a partition `lambda` of `n` and an integer dimension `d` over a field
//! of characteristic 0 or a prime above `n`, [`certify`] produces either a
//! [`Certificate`] - witness data proving that semisimplicity of the Schur
//! functor forces semisimplicity of the underlying object - or a
//! [`CounterexampleReport`] naming a concrete family in which the implication
//! fails. Both documents are self-contained and independently re-checkable by
//! [`verify_certificate`] and [`verify_counterexample`].
//!
//! A certificate consists of one generic witness (covering every quotient
//! dimension `b` outside the integer root interval) and one branch witness
//! per integer `b` in `{1-q, ..., p-1}`. A witness `(i, mu', nu, mu, nu')`
//! is valid for branch `b` when
//!   - `mu'` is `lambda` minus `n-i+1` boxes and `nu` is `lambda` minus `i`
//!     boxes,
//!   - `mu` extends `mu'` by a box, `nu'` extends `nu` by a box, and both
//!     pairs `(mu, nu)` and `(mu', nu')` have nonvanishing
//!     Littlewood-Richardson multiplicity in `lambda`,
//!   - `b` avoids the integer roots attached to `nu'` and `d - b` avoids
//!     those attached to `mu`, as elements of the field.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr;
use crate::partition::Partition;
use crate::rational::q_is_int;
use crate::superspace;
use crate::trace_poly::{congruent, content_polynomial, in_set_mod, root_set};

/// Witness data for one branch; the root sets are recomputed on demand, so
/// the serialized form carries only the level and the four partitions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub mu_prime: Partition,
    pub nu: Partition,
    pub mu: Partition,
    pub nu_prime: Partition,
}

impl Witness {
    /// Integer roots constraining the sub-object dimension `a = d - b`.
    pub fn a_forbidden(&self) -> BTreeSet<i64> {
        root_set(&self.mu)
    }

    /// Integer roots constraining the quotient dimension `b`.
    pub fn b_forbidden(&self) -> BTreeSet<i64> {
        root_set(&self.nu_prime)
    }

    fn conjugate(&self) -> Witness {
        Witness {
            i: self.i,
            mu_prime: self.mu_prime.conjugate(),
            nu: self.nu.conjugate(),
            mu: self.mu.conjugate(),
            nu_prime: self.nu_prime.conjugate(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub lambda: Partition,
    pub d: i64,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub generic: Witness,
    pub branches: BTreeMap<i64, Witness>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterexampleFamily {
    /// A graded space of dimension `(r|s)`: the Schur functor vanishes
    /// because the diagram contains the box `(r+1, s+1)`, while the space
    /// carries a non-semisimple action.
    Super { r: usize, s: usize },
    /// A rectangle with `d = p > 1`: the Schur functor of a `p`-dimensional
    /// object is a power of its top exterior power, hence one-dimensional.
    RectangleTop,
    /// A rectangle with `d = -q`: the previous family composed with the
    /// parity twist that conjugates the shape and negates the dimension.
    RectangleBottomTwist,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub lambda: Partition,
    pub d: i64,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub family: CounterexampleFamily,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Outcome {
    Certificate(Certificate),
    Counterexample(CounterexampleReport),
}

/// Which branches needed the exhaustive fallback rather than a direct
/// construction. Empty in every case the construction recipes cover.
#[derive(Clone, Debug, Default)]
pub struct CertifyStats {
    pub fallback_branches: Vec<i64>,
}

/// Result of re-checking a document: valid iff no failures.
#[derive(Clone, Debug, Default)]
pub struct Verification {
    pub failures: Vec<String>,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn validate_characteristic(ch: u64, n: usize) -> Result<()> {
    if ch == 0 || (ch > n as u64 && is_prime(ch)) {
        Ok(())
    } else {
        Err(Error::InvalidCharacteristic { ch, n })
    }
}

fn wide_in_set(x: i128, set: &BTreeSet<i64>, ch: u64) -> bool {
    if ch == 0 {
        i64::try_from(x).is_ok_and(|x| set.contains(&x))
    } else {
        let ch = ch as i128;
        set.iter().any(|&y| (x - y as i128).rem_euclid(ch) == 0)
    }
}

/// Decide `(lambda, d)` over characteristic `ch` and emit the proof object.
pub fn certify(lambda: &Partition, d: i64, characteristic: u64) -> Result<Outcome> {
    certify_detailed(lambda, d, characteristic).map(|(outcome, _)| outcome)
}

/// As [`certify`], also reporting which branches fell back to exhaustive
/// search.
pub fn certify_detailed(
    lambda: &Partition,
    d: i64,
    characteristic: u64,
) -> Result<(Outcome, CertifyStats)> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidPartition(
            "certification needs a nonempty partition".into(),
        ));
    }
    validate_characteristic(characteristic, n)?;
    let mut stats = CertifyStats::default();
    if in_set_mod(d, &lambda.forbidden_dimensions(), characteristic) {
        let report = build_counterexample(lambda, d, characteristic)?;
        return Ok((Outcome::Counterexample(report), stats));
    }
    let generic = generic_witness(lambda);
    let p = lambda.rows() as i64;
    let q = lambda.cols() as i64;
    let mut branches = BTreeMap::new();
    for b in (1 - q)..=(p - 1) {
        let witness = branch_witness(lambda, d, b, characteristic, &mut stats)?;
        branches.insert(b, witness);
    }
    let certificate = Certificate {
        lambda: lambda.clone(),
        d,
        characteristic,
        generic,
        branches,
    };
    Ok((Outcome::Certificate(certificate), stats))
}

fn first_removal(lambda: &Partition) -> Partition {
    lambda
        .remove_boxes(1)
        .expect("nonempty partition")
        .into_iter()
        .next()
        .expect("a nonempty partition has a one-box removal")
}

/// The level-one witness: no constraint on the sub-object side, and the
/// quotient side is constrained exactly by the roots attached to `lambda`.
fn generic_witness(lambda: &Partition) -> Witness {
    Witness {
        i: 1,
        mu_prime: Partition::empty(),
        nu: first_removal(lambda),
        mu: Partition::row(1),
        nu_prime: lambda.clone(),
    }
}

fn branch_witness(
    lambda: &Partition,
    d: i64,
    b: i64,
    ch: u64,
    stats: &mut CertifyStats,
) -> Result<Witness> {
    let cached_lr = |l: &Partition, x: &Partition, y: &Partition| -> std::result::Result<bool, String> {
        Ok(lr::coefficient(l, x, y) != 0)
    };
    for candidate in recipe_candidates(lambda, d, b, ch) {
        if check_witness(lambda, d, Some(b), &candidate, ch, &cached_lr).is_ok() {
            return Ok(candidate);
        }
    }
    stats.fallback_branches.push(b);
    exhaustive_search(lambda, d, b, ch)
}

/// Candidate witnesses for one branch, in the order the construction tries
/// them: direct row-side recipes, then the mirrored recipes obtained by
/// conjugating the shape, negating the dimension and negating the branch.
fn recipe_candidates(lambda: &Partition, d: i64, b: i64, ch: u64) -> Vec<Witness> {
    let mut out = direct_recipes(lambda, d, b, ch);
    if let (Some(neg_d), Some(neg_b)) = (d.checked_neg(), b.checked_neg()) {
        out.extend(
            direct_recipes(&lambda.conjugate(), neg_d, neg_b, ch)
                .into_iter()
                .map(|w| w.conjugate()),
        );
    }
    out
}

fn direct_recipes(lambda: &Partition, d: i64, b: i64, ch: u64) -> Vec<Witness> {
    let p = lambda.rows();
    let q = lambda.cols();
    let mut out = Vec::new();
    if b > 0 && (b as usize) < p {
        let i_row = p - b as usize + 1;
        out.push(general_row_witness(lambda, i_row));
        if congruent(d, p as i64, ch) {
            out.extend(shifted_row_witness(lambda, i_row));
        }
        if congruent(d, 1, ch) {
            if b == 2 && p >= 3 {
                out.extend(dimension_one_second_branch(lambda));
            }
            if b == 1 && p >= 2 {
                out.push(dimension_one_first_branch(lambda));
            }
        }
        if congruent(d, 0, ch) && b == 1 && p >= 2 {
            out.push(hook_first_branch(lambda));
        }
    }
    if b == 0 {
        out.push(top_level_witness(lambda));
        out.push(generic_witness(lambda));
        if congruent(d, 1, ch) && p >= 2 {
            out.push(dimension_one_zero_branch(lambda));
        }
    }
    // Remaining column-side recipes for b < 0 are produced in
    // `recipe_candidates` by conjugating the row-side ones.
    if (b == -1 || b == -2) && (b.unsigned_abs() as usize) < q && congruent(d, 1, ch) && p >= 2 {
        out.push(dimension_one_negative_branches(lambda));
    }
    out
}

/// Branch `b = p - i + 1`: the last `i` rows without their final box pair
/// with the first `p - i` rows.
fn general_row_witness(lambda: &Partition, i_row: usize) -> Witness {
    let p = lambda.rows();
    let start = p - i_row;
    let mu = Partition::new(lambda.parts()[start..].to_vec()).expect("row suffix");
    let mut mu_prime_parts = lambda.parts()[start..].to_vec();
    *mu_prime_parts.last_mut().expect("nonempty suffix") -= 1;
    let mu_prime = Partition::new(mu_prime_parts).expect("row suffix minus a box");
    let nu = Partition::new(lambda.parts()[..start].to_vec()).expect("row prefix");
    let mut nu_prime_parts = lambda.parts()[..start].to_vec();
    nu_prime_parts.push(1);
    let nu_prime = Partition::new(nu_prime_parts).expect("row prefix plus a box");
    Witness {
        i: mu.size(),
        mu_prime,
        nu,
        mu,
        nu_prime,
    }
}

/// The non-rectangle variant used when `d = p`: shift the split one row up,
/// so the smaller side gains a box while keeping `i - 1` rows and the larger
/// side keeps `p - i + 1` rows. The frame fixes both row counts; which box
/// moves is searched over the one-box removals of the larger side, since for
/// some shapes (for example three rows with a repeated tail) only a removal
/// away from the last row leaves a nonvanishing multiplicity.
fn shifted_row_witness(lambda: &Partition, i_row: usize) -> Vec<Witness> {
    let p = lambda.rows();
    let start = p - i_row + 1;
    let mu_prime = Partition::new(lambda.parts()[start..].to_vec()).expect("row suffix");
    let nu_prime = Partition::new(lambda.parts()[..start].to_vec()).expect("row prefix");
    let candidates: Vec<Partition> = mu_prime
        .add_box()
        .into_iter()
        .filter(|t| t.rows() == i_row - 1)
        .collect();
    let mut out = Vec::new();
    for nu in nu_prime.remove_boxes(1).expect("nonempty prefix") {
        for mu in &candidates {
            if lr::coefficient(lambda, mu, &nu) != 0 {
                out.push(Witness {
                    i: mu.size(),
                    mu_prime: mu_prime.clone(),
                    nu: nu.clone(),
                    mu: mu.clone(),
                    nu_prime: nu_prime.clone(),
                });
            }
        }
    }
    out
}

/// `d = 1`, branch `b = 2`: a full column against the first two rows less
/// one box each.
fn dimension_one_second_branch(lambda: &Partition) -> Option<Witness> {
    let p = lambda.rows();
    let q = lambda.cols();
    let second = lambda.part(1);
    let nu = Partition::new(vec![q - 1, second - 1]).ok()?;
    let nu_prime = Partition::new(vec![q, second - 1]).ok()?;
    Some(Witness {
        i: p,
        mu_prime: Partition::column(p - 1),
        nu,
        mu: Partition::column(p),
        nu_prime,
    })
}

/// `d = 1`, branch `b = 1`: a full hook against the second row less a box.
fn dimension_one_first_branch(lambda: &Partition) -> Witness {
    let p = lambda.rows();
    let q = lambda.cols();
    let second = lambda.part(1);
    let mut mu_prime_parts = vec![q];
    mu_prime_parts.extend(std::iter::repeat_n(1, p.saturating_sub(2)));
    let mut mu_parts = vec![q];
    mu_parts.extend(std::iter::repeat_n(1, p - 1));
    Witness {
        i: q + p - 1,
        mu_prime: Partition::new(mu_prime_parts).expect("hook"),
        nu: Partition::row(second.saturating_sub(1)),
        mu: Partition::new(mu_parts).expect("hook"),
        nu_prime: Partition::row(second),
    }
}

/// `d = 0` on a hook, branch `b = 1`: the full column against the arm.
fn hook_first_branch(lambda: &Partition) -> Witness {
    let p = lambda.rows();
    let q = lambda.cols();
    Witness {
        i: p,
        mu_prime: Partition::column(p - 1),
        nu: Partition::row(q - 1),
        mu: Partition::column(p),
        nu_prime: Partition::row(q),
    }
}

/// Branch `b = 0` at the top level: all of `lambda` against the empty
/// partition.
fn top_level_witness(lambda: &Partition) -> Witness {
    Witness {
        i: lambda.size(),
        mu_prime: first_removal(lambda),
        nu: Partition::empty(),
        mu: lambda.clone(),
        nu_prime: Partition::row(1),
    }
}

/// `d = 1`, branch `b = 0`: the second row against the full hook.
fn dimension_one_zero_branch(lambda: &Partition) -> Witness {
    let p = lambda.rows();
    let q = lambda.cols();
    let second = lambda.part(1);
    let mut nu_parts = vec![q];
    nu_parts.extend(std::iter::repeat_n(1, p.saturating_sub(2)));
    let mut nu_prime_parts = vec![q];
    nu_prime_parts.extend(std::iter::repeat_n(1, p - 1));
    Witness {
        i: second,
        mu_prime: Partition::row(second.saturating_sub(1)),
        nu: Partition::new(nu_parts).expect("hook"),
        mu: Partition::row(second),
        nu_prime: Partition::new(nu_prime_parts).expect("hook"),
    }
}

/// `d = 1`, branches `b = -1, -2`: the first two rows against a column.
fn dimension_one_negative_branches(lambda: &Partition) -> Witness {
    let p = lambda.rows();
    let first = lambda.part(0);
    let second = lambda.part(1);
    let mu_prime = Partition::new(vec![first, second.saturating_sub(1)]).expect("two rows");
    let mu = Partition::new(vec![first, second]).expect("two rows");
    Witness {
        i: first + second,
        mu_prime,
        nu: Partition::column(p.saturating_sub(2)),
        mu,
        nu_prime: Partition::column(p - 1),
    }
}

/// Deterministic last resort: scan all levels and admissible partitions in
/// canonical order.
fn exhaustive_search(lambda: &Partition, d: i64, b: i64, ch: u64) -> Result<Witness> {
    let n = lambda.size();
    let cached_lr = |l: &Partition, x: &Partition, y: &Partition| -> std::result::Result<bool, String> {
        Ok(lr::coefficient(l, x, y) != 0)
    };
    for i in 1..=n {
        for mu_prime in lambda.remove_boxes(n - i + 1)? {
            for nu in lambda.remove_boxes(i)? {
                for mu in lr::admissible_extensions(&mu_prime, &nu, lambda) {
                    for nu_prime in lr::admissible_extensions(&nu, &mu_prime, lambda) {
                        let w = Witness {
                            i,
                            mu_prime: mu_prime.clone(),
                            nu: nu.clone(),
                            mu: mu.clone(),
                            nu_prime,
                        };
                        if check_witness(lambda, d, Some(b), &w, ch, &cached_lr).is_ok() {
                            return Ok(w);
                        }
                    }
                }
            }
        }
    }
    Err(Error::WitnessSearchFailed {
        lambda: lambda.parts().to_vec(),
        d,
        b,
    })
}

/// Re-derives every hypothesis of a witness from scratch. `b = None` checks
/// only the structural and multiplicity conditions (used for the generic
/// witness, whose sub-object side is unconstrained).
fn check_witness<F>(
    lambda: &Partition,
    d: i64,
    b: Option<i64>,
    w: &Witness,
    ch: u64,
    lr_nonzero: &F,
) -> std::result::Result<(), String>
where
    F: Fn(&Partition, &Partition, &Partition) -> std::result::Result<bool, String>,
{
    let n = lambda.size();
    if w.i < 1 || w.i > n {
        return Err(format!("level {} outside 1..={n}", w.i));
    }
    if w.mu_prime.size() != w.i - 1 || !lambda.contains(&w.mu_prime) {
        return Err(format!(
            "mu_prime {} is not {lambda} minus {} boxes",
            w.mu_prime,
            n - w.i + 1
        ));
    }
    if w.nu.size() != n - w.i || !lambda.contains(&w.nu) {
        return Err(format!("nu {} is not {lambda} minus {} boxes", w.nu, w.i));
    }
    if !w.mu_prime.add_box().contains(&w.mu) {
        return Err(format!("mu {} does not extend mu_prime {}", w.mu, w.mu_prime));
    }
    if !w.nu.add_box().contains(&w.nu_prime) {
        return Err(format!(
            "nu_prime {} does not extend nu {}",
            w.nu_prime, w.nu
        ));
    }
    if !lambda.contains(&w.mu) || !lambda.contains(&w.nu_prime) {
        return Err(format!(
            "extension {} or {} leaves {lambda}",
            w.mu, w.nu_prime
        ));
    }
    if !lr_nonzero(lambda, &w.mu, &w.nu)? {
        return Err(format!(
            "multiplicity of ({}, {}) in {lambda} vanishes",
            w.mu, w.nu
        ));
    }
    if !lr_nonzero(lambda, &w.mu_prime, &w.nu_prime)? {
        return Err(format!(
            "multiplicity of ({}, {}) in {lambda} vanishes",
            w.mu_prime, w.nu_prime
        ));
    }
    if let Some(b) = b {
        if in_set_mod(b, &w.b_forbidden(), ch) {
            return Err(format!("branch {b} lies in the roots of {}", w.nu_prime));
        }
        let a = d as i128 - b as i128;
        if wide_in_set(a, &w.a_forbidden(), ch) {
            return Err(format!("complement {a} lies in the roots of {}", w.mu));
        }
    }
    Ok(())
}

fn build_counterexample(
    lambda: &Partition,
    d: i64,
    ch: u64,
) -> Result<CounterexampleReport> {
    let mut best: Option<(usize, usize)> = None;
    for r in 0..lambda.rows() {
        for s in 0..lambda.part(r) {
            if r + s < 2 {
                continue;
            }
            if congruent(r as i64 - s as i64, d, ch) {
                let better = match best {
                    None => true,
                    Some((br, bs)) => (r + s, r) < (br + bs, br),
                };
                if better {
                    best = Some((r, s));
                }
            }
        }
    }
    let family = if let Some((r, s)) = best {
        CounterexampleFamily::Super { r, s }
    } else if lambda.is_rectangle()
        && lambda.rows() > 1
        && congruent(lambda.rows() as i64, d, ch)
    {
        CounterexampleFamily::RectangleTop
    } else if lambda.is_rectangle()
        && lambda.cols() > 1
        && congruent(-(lambda.cols() as i64), d, ch)
    {
        CounterexampleFamily::RectangleBottomTwist
    } else {
        return Err(Error::NoCounterexampleFamily {
            lambda: lambda.parts().to_vec(),
            d,
        });
    };
    Ok(CounterexampleReport {
        lambda: lambda.clone(),
        d,
        characteristic: ch,
        family,
    })
}

/// Re-checks every hypothesis of a certificate from scratch. Multiplicities
/// are recomputed by both Littlewood-Richardson routes on a private table;
/// no cached state is shared with certificate construction.
pub fn verify_certificate(cert: &Certificate) -> Verification {
    let mut v = Verification::default();
    let lambda = &cert.lambda;
    let n = lambda.size();
    let ch = cert.characteristic;
    if n == 0 {
        v.fail("lambda is empty");
        return v;
    }
    if validate_characteristic(ch, n).is_err() {
        v.fail(format!("invalid characteristic {ch}"));
    }
    if in_set_mod(cert.d, &lambda.forbidden_dimensions(), ch) {
        v.fail(format!(
            "dimension {} lies in the forbidden set of {lambda}",
            cert.d
        ));
    }
    let fresh = lr::LrTable::new();
    let dual_route =
        |l: &Partition, x: &Partition, y: &Partition| -> std::result::Result<bool, String> {
            let by_characters = fresh.coefficient(l, x, y);
            let by_tableaux =
                lr::coefficient_by_tableaux(l, x, y).map_err(|e| e.to_string())?;
            if by_characters != by_tableaux {
                return Err(format!(
                    "LR routes disagree on ({l}; {x}, {y}): {by_characters} vs {by_tableaux}"
                ));
            }
            Ok(by_characters != 0)
        };

    let g = &cert.generic;
    if g.i != 1 || !g.mu_prime.is_empty() || g.mu != Partition::row(1) {
        v.fail("generic witness must have level 1 with mu_prime = () and mu = (1)");
    }
    if let Err(msg) = check_witness(lambda, cert.d, None, g, ch, &dual_route) {
        v.fail(format!("generic witness: {msg}"));
    }

    let p = lambda.rows() as i64;
    let q = lambda.cols() as i64;
    let interval: BTreeSet<i64> = ((1 - q)..=(p - 1)).collect();
    let keys: BTreeSet<i64> = cert.branches.keys().copied().collect();
    if keys != interval {
        v.fail(format!(
            "branch set {keys:?} differs from the root interval {interval:?}"
        ));
    }
    for root in g.b_forbidden() {
        if !keys.iter().any(|&b| congruent(b, root, ch)) {
            v.fail(format!("no branch covers the generic root {root}"));
        }
    }
    for (&b, w) in &cert.branches {
        if let Err(msg) = check_witness(lambda, cert.d, Some(b), w, ch, &dual_route) {
            v.fail(format!("branch {b}: {msg}"));
        }
    }
    v
}

/// Re-checks a counterexample report: family shape conditions, and for small
/// graded families the Schur projector rank measured by the concrete oracle.
pub fn verify_counterexample(report: &CounterexampleReport) -> Verification {
    let mut v = Verification::default();
    let lambda = &report.lambda;
    let n = lambda.size();
    let ch = report.characteristic;
    if n == 0 {
        v.fail("lambda is empty");
        return v;
    }
    if validate_characteristic(ch, n).is_err() {
        v.fail(format!("invalid characteristic {ch}"));
    }
    if !in_set_mod(report.d, &lambda.forbidden_dimensions(), ch) {
        v.fail(format!(
            "dimension {} is not in the forbidden set of {lambda}",
            report.d
        ));
    }
    match report.family {
        CounterexampleFamily::Super { r, s } => {
            if r + s < 2 {
                v.fail("graded family needs total dimension at least 2");
            }
            if !congruent(r as i64 - s as i64, report.d, ch) {
                v.fail(format!("superdimension {} differs from d", r as i64 - s as i64));
            }
            if !lambda.contains_box(r + 1, s + 1) {
                v.fail(format!("{lambda} has no box at ({}, {})", r + 1, s + 1));
            } else if let Ok(space) = superspace::SuperSpaceSpec::new(r, s) {
                let dim = (r + s).checked_pow(n as u32).unwrap_or(usize::MAX);
                if dim <= superspace::DEFAULT_DIM_CAP {
                    match superspace::schur_rank(lambda, &space, superspace::DEFAULT_DIM_CAP) {
                        Ok(profile) if profile.total == 0 => {}
                        Ok(profile) => v.fail(format!(
                            "oracle rank {} is nonzero on the ({r}|{s}) space",
                            profile.total
                        )),
                        Err(e) => v.fail(format!("oracle failed: {e}")),
                    }
                }
            }
        }
        CounterexampleFamily::RectangleTop => {
            verify_rectangle_top(&mut v, lambda, report.d, ch, false);
        }
        CounterexampleFamily::RectangleBottomTwist => {
            verify_rectangle_top(&mut v, &lambda.conjugate(), -report.d, ch, true);
            if !lambda.is_rectangle() {
                v.fail(format!("{lambda} is not a rectangle"));
            }
        }
    }
    v
}

fn verify_rectangle_top(v: &mut Verification, lambda: &Partition, d: i64, ch: u64, twisted: bool) {
    let label = if twisted { "twisted rectangle" } else { "rectangle" };
    if !lambda.is_rectangle() {
        v.fail(format!("{label}: {lambda} is not a rectangle"));
        return;
    }
    let p = lambda.rows();
    if p <= 1 {
        v.fail(format!("{label}: needs more than one row"));
    }
    if !congruent(p as i64, d, ch) {
        v.fail(format!("{label}: dimension is not the row count {p}"));
    }
    // The Schur functor of a p-dimensional object is one-dimensional here:
    // dim * cp(p) / n! must be exactly 1.
    let n = lambda.size();
    let value = content_polynomial(lambda).eval_int(p as i64)
        * crate::rational::Q::new(
            crate::characters::irrep_dimension(lambda).into(),
            crate::rational::factorial(n),
        );
    if !q_is_int(&value, 1) {
        v.fail(format!("{label}: dimension check value {value} is not 1"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn certify_ok(lambda: &Partition, d: i64) -> Outcome {
        certify(lambda, d, 0).unwrap()
    }

    #[test]
    fn spec_example_two_boxes_column() {
        let lambda = partition![1, 1];
        let Outcome::Certificate(cert) = certify_ok(&lambda, 3) else {
            panic!("expected a certificate");
        };
        let keys: Vec<i64> = cert.branches.keys().copied().collect();
        assert_eq!(keys, vec![0, 1]);
        let w = &cert.branches[&1];
        assert_eq!(w.i, 2);
        assert_eq!(w.mu_prime, partition![1]);
        assert_eq!(w.nu, Partition::empty());
        assert_eq!(w.mu, partition![1, 1]);
        assert_eq!(w.nu_prime, partition![1]);
        assert!(w.a_forbidden().contains(&1));
        assert!(verify_certificate(&cert).ok());
    }

    #[test]
    fn empty_forbidden_set_certifies_everything() {
        let lambda = partition![2, 1];
        for d in -6..=6 {
            match certify_ok(&lambda, d) {
                Outcome::Certificate(cert) => {
                    let verification = verify_certificate(&cert);
                    assert!(verification.ok(), "d={d}: {:?}", verification.failures);
                }
                Outcome::Counterexample(_) => panic!("unexpected counterexample at d={d}"),
            }
        }
    }

    #[test]
    fn square_at_zero_is_a_graded_counterexample() {
        let lambda = partition![2, 2];
        let Outcome::Counterexample(report) = certify_ok(&lambda, 0) else {
            panic!("expected a counterexample");
        };
        assert_eq!(report.family, CounterexampleFamily::Super { r: 1, s: 1 });
        assert!(verify_counterexample(&report).ok());
    }

    #[test]
    fn rectangle_families() {
        let Outcome::Counterexample(report) = certify_ok(&partition![2, 2], 2) else {
            panic!("expected a counterexample");
        };
        assert_eq!(report.family, CounterexampleFamily::RectangleTop);
        assert!(verify_counterexample(&report).ok());

        let Outcome::Counterexample(report) = certify_ok(&partition![2], -2) else {
            panic!("expected a counterexample");
        };
        assert_eq!(report.family, CounterexampleFamily::RectangleBottomTwist);
        assert!(verify_counterexample(&report).ok());
    }

    #[test]
    fn dichotomy_small_range() {
        for n in 1..=4usize {
            for lambda in Partition::all_of(n) {
                let forbidden = lambda.forbidden_dimensions();
                for d in -6..=6i64 {
                    let (outcome, stats) = certify_detailed(&lambda, d, 0).unwrap();
                    assert!(
                        stats.fallback_branches.is_empty(),
                        "fallback used at ({lambda}, {d})"
                    );
                    match outcome {
                        Outcome::Certificate(cert) => {
                            assert!(!forbidden.contains(&d), "({lambda}, {d})");
                            let res = verify_certificate(&cert);
                            assert!(res.ok(), "({lambda}, {d}): {:?}", res.failures);
                        }
                        Outcome::Counterexample(report) => {
                            assert!(forbidden.contains(&d), "({lambda}, {d})");
                            let res = verify_counterexample(&report);
                            assert!(res.ok(), "({lambda}, {d}): {:?}", res.failures);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn duality_under_conjugation() {
        for n in 1..=4usize {
            for lambda in Partition::all_of(n) {
                for d in -5..=5i64 {
                    let direct = matches!(certify_ok(&lambda, d), Outcome::Certificate(_));
                    let mirrored = matches!(
                        certify_ok(&lambda.conjugate(), -d),
                        Outcome::Certificate(_)
                    );
                    assert_eq!(direct, mirrored, "({lambda}, {d})");
                }
            }
        }
    }

    #[test]
    fn characteristic_handling() {
        assert!(certify(&partition![2, 1], 0, 2).is_err());
        assert!(certify(&partition![2, 1], 0, 4).is_err());
        assert!(certify(&partition![1, 1], 5, 9).is_err());

        // 9 = 2 mod 7, and 2 is forbidden for a column of three boxes.
        let lambda = partition![1, 1, 1];
        let Outcome::Counterexample(report) = certify(&lambda, 9, 7).unwrap() else {
            panic!("expected a counterexample");
        };
        assert!(verify_counterexample(&report).ok());

        // 8 = 1 mod 7, and 1 is not forbidden.
        let Outcome::Certificate(cert) = certify(&lambda, 8, 7).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(verify_certificate(&cert).ok());
    }

    #[test]
    fn characteristic_consistency_without_collisions() {
        for n in 1..=4usize {
            for lambda in Partition::all_of(n) {
                let p = lambda.rows() as i64;
                let q = lambda.cols() as i64;
                for ch in [5u64, 7, 11] {
                    if ch <= n as u64 {
                        continue;
                    }
                    for d in -6..=6i64 {
                        let mut relevant: Vec<i64> = (-q..=p).collect();
                        relevant.push(d);
                        let collision = relevant.iter().enumerate().any(|(i, &x)| {
                            relevant[..i]
                                .iter()
                                .any(|&y| x != y && congruent(x, y, ch))
                        });
                        if collision {
                            continue;
                        }
                        let over_q = matches!(certify_ok(&lambda, d), Outcome::Certificate(_));
                        let over_p = matches!(
                            certify(&lambda, d, ch).unwrap(),
                            Outcome::Certificate(_)
                        );
                        assert_eq!(over_q, over_p, "({lambda}, {d}) mod {ch}");
                    }
                }
            }
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let lambda = partition![2, 1];
        let Outcome::Certificate(cert) = certify_ok(&lambda, 4) else {
            panic!("expected a certificate");
        };
        assert!(verify_certificate(&cert).ok());

        // A branch whose key lies in its own forbidden set: the generic-style
        // witness has b_forbidden = {-1, 1} here, so it cannot serve b = 1.
        let mut bad = cert.clone();
        let generic_style = cert.generic.clone();
        assert!(generic_style.b_forbidden().contains(&1));
        bad.branches.insert(1, generic_style);
        assert!(!verify_certificate(&bad).ok());

        // A branch witness whose extension leaves the diagram.
        let mut bad = cert.clone();
        let mut w = bad.branches[&1].clone();
        w.mu = partition![3];
        bad.branches.insert(1, w);
        assert!(!verify_certificate(&bad).ok());

        // A missing branch.
        let mut bad = cert.clone();
        bad.branches.remove(&0);
        assert!(!verify_certificate(&bad).ok());

        // A dimension moved into the forbidden set.
        let mut bad = cert;
        bad.d = 2;
        assert!(!verify_certificate(&bad).ok());
    }

    #[test]
    fn no_report_validates_when_nothing_is_forbidden() {
        // For a shape with an empty forbidden set, no report of any family
        // with any small parameters passes verification.
        let lambda = partition![2, 1];
        for d in -4..=4i64 {
            let mut families = vec![
                CounterexampleFamily::RectangleTop,
                CounterexampleFamily::RectangleBottomTwist,
            ];
            for r in 0..=4usize {
                for s in 0..=4usize {
                    families.push(CounterexampleFamily::Super { r, s });
                }
            }
            for family in families {
                let report = CounterexampleReport {
                    lambda: lambda.clone(),
                    d,
                    characteristic: 0,
                    family,
                };
                assert!(
                    !verify_counterexample(&report).ok(),
                    "family {family:?} at d={d}"
                );
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let Outcome::Certificate(cert) = certify_ok(&partition![2, 1], 5) else {
            panic!("expected a certificate");
        };
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        assert!(verify_certificate(&back).ok());

        let Outcome::Counterexample(report) = certify_ok(&partition![2, 2], 0) else {
            panic!("expected a counterexample");
        };
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"kind\":\"super\""));
        let back: CounterexampleReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(!is_prime(1_000_000_006));
    }
}
