//! The trace polynomials attached to a partition: the exact scalar by which
//! the partial trace of a composed pair of isotypic projectors acts, as a
//! polynomial in the dimension `d` of the underlying object.
//!
//! Three independent routes compute the same polynomial: a closed form from
//! the content polynomial, a class-function sum over cycle types, and a raw
//! group-algebra expansion. Their agreement is a test target, not an
//! assumption.

use std::collections::BTreeSet;

use crate::characters::{chi, class_size, irrep_dimension};
use crate::error::{Error, Result};
use crate::group_algebra::central_idempotent;
use crate::partition::Partition;
use crate::polynomial::RationalPolynomial;
use crate::rational::{factorial, q_int, Q};

/// The content polynomial `prod_{(i,j)} (d + j - i)`: monic, integer
/// coefficients, degree equal to the number of boxes.
pub fn content_polynomial(beta: &Partition) -> RationalPolynomial {
    RationalPolynomial::from_linear_factors(beta.contents())
}

/// Closed form of the trace polynomial: `cp(d) / (m! d)`. The box `(1,1)`
/// contributes the factor `d`, so the division is exact; the result has
/// degree `m - 1` and does not depend on the smaller partition of the pair.
pub fn trace_polynomial(beta: &Partition) -> Result<RationalPolynomial> {
    let m = beta.size();
    if m == 0 {
        return Err(Error::OutOfRange(
            "trace polynomial needs a nonempty partition".into(),
        ));
    }
    let cp = content_polynomial(beta);
    let inv_fact = Q::new(1.into(), factorial(m));
    Ok(cp.div_by_x()?.scale(&inv_fact))
}

/// The trace polynomial as the class-function sum
/// `(1/(m! dim)) sum_t |class t| chi(t) d^{N(t)-1}`.
pub fn trace_polynomial_by_characters(beta: &Partition) -> Result<RationalPolynomial> {
    let m = beta.size();
    if m == 0 {
        return Err(Error::OutOfRange(
            "trace polynomial needs a nonempty partition".into(),
        ));
    }
    let mut acc = RationalPolynomial::zero();
    for t in Partition::all_of(m) {
        let weight = class_size(&t) as i64 * chi(beta, &t)?;
        if weight != 0 {
            acc = acc.plus(&RationalPolynomial::monomial(q_int(weight), t.rows() - 1));
        }
    }
    let dim = irrep_dimension(beta);
    let norm = Q::new(1.into(), factorial(m) * num_bigint::BigInt::from(dim));
    Ok(acc.scale(&norm))
}

/// The trace polynomial by brute force: expand the product of the embedded
/// idempotent for `alpha` with the idempotent for `beta` in the group
/// algebra, take `sum_s f(s) d^{N(s)-1}`, and normalize by the two
/// dimensions. Requires `beta` to be `alpha` plus one box.
pub fn trace_polynomial_by_expansion(
    alpha: &Partition,
    beta: &Partition,
    degree_cap: usize,
) -> Result<RationalPolynomial> {
    if !alpha.add_box().contains(beta) {
        return Err(Error::NotAddable {
            parent: alpha.parts().to_vec(),
            child: beta.parts().to_vec(),
        });
    }
    let embedded = central_idempotent(alpha)?.embed_fixing_first();
    let product = embedded.multiply_with_cap(&central_idempotent(beta)?, degree_cap)?;
    let mut acc = RationalPolynomial::zero();
    for (perm, coeff) in product.terms() {
        acc = acc.plus(&RationalPolynomial::monomial(
            coeff.clone(),
            perm.cycle_count() - 1,
        ));
    }
    let dims = q_int(irrep_dimension(alpha) as i64) * q_int(irrep_dimension(beta) as i64);
    Ok(acc.scale(&(q_int(1) / dims)))
}

/// Integer roots of the trace polynomial: the interval
/// `{1-q, ..., p-1}` with 0 removed exactly when the shape is a hook.
/// The roots are read off the content multiset, not found numerically.
pub fn root_set(beta: &Partition) -> BTreeSet<i64> {
    let p = beta.rows() as i64;
    let q = beta.cols() as i64;
    let mut roots: BTreeSet<i64> = (1 - q..=p - 1).collect();
    if beta.is_hook() {
        roots.remove(&0);
    }
    roots
}

/// `x` equals an element of `set` in a field of the given characteristic
/// (0 means the rationals).
pub fn in_set_mod(x: i64, set: &BTreeSet<i64>, characteristic: u64) -> bool {
    if characteristic == 0 {
        set.contains(&x)
    } else {
        let ch = characteristic as i128;
        set.iter()
            .any(|&y| (x as i128 - y as i128).rem_euclid(ch) == 0)
    }
}

/// `x == y` in a field of the given characteristic.
pub fn congruent(x: i64, y: i64, characteristic: u64) -> bool {
    if characteristic == 0 {
        x == y
    } else {
        (x as i128 - y as i128).rem_euclid(characteristic as i128) == 0
    }
}
