//! Exact vertex and facet counts for the composihedra.

use num::{BigInt, BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Catalan number `C(k)`.
pub fn catalan(k: u32) -> BigUint {
    // C(k+1) = C(k) * 2(2k+1) / (k+2)
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

/// Binomial coefficient.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut b = BigUint::one();
    for i in 0..k {
        b = b * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    b
}

/// `a_0..=a_max` from `a_n = 1 + sum_{i=1}^{n-1} a_i a_{n-i}` with `a_0 = 0`.
pub fn vertex_counts_recursive(max: u32) -> Vec<BigUint> {
    let mut a = vec![BigUint::zero()];
    for n in 1..=max as usize {
        let mut sum = BigUint::one();
        for i in 1..n {
            sum += &a[i] * &a[n - i];
        }
        a.push(sum);
    }
    a
}

/// `a_n` from the binary transform of the Catalan numbers:
/// `a_{n+1} = sum_{k=0}^{n} binom(n, k) C(k)`.
pub fn vertex_count_closed_form(n: u32) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let m = n - 1;
    (0..=m).map(|k| binomial(m, k) * catalan(k)).sum()
}

/// Number of vertices of `CK(n)`. Both formulas are evaluated and must agree.
/// `vertex_count(0)` is the recursion seed 0.
pub fn vertex_count(n: u32) -> BigUint {
    let recursive = vertex_counts_recursive(n).pop().expect("non-empty");
    let closed = vertex_count_closed_form(n);
    assert_eq!(
        recursive, closed,
        "recursion and closed form disagree at n = {n}"
    );
    recursive
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetBreakdown {
    pub n: usize,
    pub upper_count: u64,
    pub lower_count: u64,
    pub total: u64,
}

/// Upper facets `2^{n-1} - 1`, lower facets `n - 1`.
pub fn facet_breakdown(n: usize) -> Result<FacetBreakdown> {
    if !(2..=63).contains(&n) {
        return Err(Error::InvalidLeafCount(n));
    }
    let upper_count = (1u64 << (n - 1)) - 1;
    let lower_count = n as u64 - 1;
    Ok(FacetBreakdown {
        n,
        upper_count,
        lower_count,
        total: upper_count + lower_count,
    })
}

/// Facets of `CK(n+1)` plus facets of `K(n+2)` minus facets of `J(n+1)`,
/// paired with the facet count `2n` of the `n`-cube.
pub fn facet_identity(n: u32) -> (BigInt, BigInt) {
    let n_big = BigInt::from(n);
    let two_n = BigInt::one() << n;
    let composihedron = &two_n + &n_big - 1;
    let associahedron = (&n_big + 1) * (&n_big + 2) / 2 - 1;
    let multiplihedron = &n_big * (&n_big + 1) / 2 + &two_n - 1;
    let lhs = composihedron + associahedron - multiplihedron;
    (lhs, 2 * n_big)
}

/// Coefficients of `x/(1-x) + A(x)^2` through `degree`, where `A` is the
/// ordinary generating function of `a_n`. Equal to `a_0..=a_degree` exactly
/// when the functional equation holds to that order.
pub fn generating_function_rhs(degree: u32) -> Vec<BigUint> {
    let a = vertex_counts_recursive(degree);
    (0..=degree as usize)
        .map(|d| {
            let geometric = if d >= 1 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
            let square: BigUint = (0..=d).map(|i| &a[i] * &a[d - i]).sum();
            geometric + square
        })
        .collect()
}
