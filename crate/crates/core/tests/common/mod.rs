//! Helpers shared by the integration-test targets: ambient-group
//! construction, the verification corpus, and a naive series oracle.

#![allow(dead_code)]

use saito_core::abelian::{AmbientGroup, GroupElement, QZ};
use std::sync::Arc;

/// `Z/m1 x ... x Z/mk` embedded coordinatewise in `(Q/Z)^k`.
pub fn product_group(factors: &[u64]) -> Arc<AmbientGroup> {
    let n = factors.len().max(1);
    let gens: Vec<GroupElement> = factors
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let mut coords = vec![QZ::new(0, 1); n];
            coords[i] = QZ::from_i128(1, m as i128);
            GroupElement::new(coords)
        })
        .collect();
    AmbientGroup::enumerate_closure(n, &gens, 5000).expect("small product group")
}

/// Every isomorphism class of abelian group of order <= 12.
pub fn groups_up_to_12() -> Vec<Arc<AmbientGroup>> {
    let types: &[&[u64]] = &[
        &[1],
        &[2],
        &[3],
        &[4],
        &[2, 2],
        &[5],
        &[6],
        &[7],
        &[8],
        &[2, 4],
        &[2, 2, 2],
        &[9],
        &[3, 3],
        &[10],
        &[11],
        &[12],
        &[2, 6],
    ];
    types.iter().map(|t| product_group(t)).collect()
}

/// The polynomial corpus of the verification suite: powers of one
/// variable plus the standard two- and three-variable chain, loop and
/// Fermat examples.
pub fn corpus() -> Vec<&'static str> {
    vec![
        "x",
        "x^2",
        "x^3",
        "x^4",
        "x^5",
        "x^6",
        "x^7",
        "x^2 + y^3",
        "x^3 + y^3",
        "x^2*y + y^3",
        "x^2*y + y^2*x",
        "x^2 + y^3 + z^7",
        "x^2*y + y^2*z + z^3",
        "x^3*y + y^3*z + z^3",
        "x^2*y + y^2*z + z^2*x",
    ]
}

/// Truncated series of a product of `(1 - t^n)^e` factors by schoolbook
/// convolution, independent of `IntegerZeta::series`.
pub fn naive_series(factors: &[(u64, i64)], deg: usize) -> Vec<i128> {
    let mut out = vec![0i128; deg + 1];
    out[0] = 1;
    for &(n, e) in factors {
        let n = n as usize;
        let base: Vec<i128> = if e >= 0 {
            // 1 - t^n
            let mut p = vec![0i128; deg + 1];
            p[0] = 1;
            if n <= deg {
                p[n] = -1;
            }
            p
        } else {
            // 1/(1 - t^n) = 1 + t^n + t^2n + ...
            let mut p = vec![0i128; deg + 1];
            let mut j = 0;
            while j <= deg {
                p[j] = 1;
                j += n;
            }
            p
        };
        for _ in 0..e.unsigned_abs() {
            let mut next = vec![0i128; deg + 1];
            for (i, &a) in out.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in base.iter().take(deg + 1 - i).enumerate() {
                    next[i + j] += a * b;
                }
            }
            out = next;
        }
    }
    out
}
