//! Coefficient tables from an independent brute-force lattice count, frozen.
//!
//! The reference counter walks every sublattice of Z² of index k in Hermite
//! form and decides properness by checking, for each prime q | f, whether
//! ω·L lies in q·L. That is a different test from the multiplier-conductor
//! search used by the crate.

use quadzeta_core::ordoracle::{enumerate_ideals, euler_expand, OrderSpec};
use quadzeta_core::Exec;

/// (d_K, f, star, a_1..a_40)
const TABLES: &[(i64, u64, bool, &[i64])] = &[
    (
        -4,
        2,
        false,
        &[
            1, 0, 0, 2, 2, 0, 0, 2, 1, 0, 0, 0, 2, 0, 0, 2, 2, 0, 0, 4, 0, 0, 0, 0, 3, 0, 0, 0, 2,
            0, 0, 2, 0, 0, 0, 2, 2, 0, 0, 4,
        ],
    ),
    (
        -4,
        2,
        true,
        &[
            1, 1, 0, 3, 2, 0, 0, 3, 1, 2, 0, 0, 2, 0, 0, 3, 2, 1, 0, 6, 0, 0, 0, 0, 3, 2, 0, 0, 2,
            0, 0, 3, 0, 2, 0, 3, 2, 0, 0, 6,
        ],
    ),
    (
        5,
        3,
        false,
        &[
            1, 0, 0, 1, 1, 0, 0, 0, 4, 0, 2, 0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 2,
            0, 2, 0, 0, 0, 0, 4, 0, 0, 0, 0,
        ],
    ),
    (
        5,
        3,
        true,
        &[
            1, 0, 1, 1, 1, 0, 0, 0, 4, 0, 2, 1, 0, 0, 1, 1, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 1, 0, 2,
            0, 2, 0, 2, 0, 0, 4, 0, 0, 0, 0,
        ],
    ),
    (
        -3,
        6,
        false,
        &[
            1, 0, 0, 3, 0, 0, 2, 0, 3, 0, 0, 0, 2, 0, 0, 3, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 3, 6, 0,
            0, 2, 0, 0, 0, 0, 9, 2, 0, 0, 0,
        ],
    ),
    (
        -3,
        6,
        true,
        &[
            1, 1, 1, 3, 0, 1, 2, 1, 4, 0, 0, 3, 2, 2, 0, 3, 0, 4, 2, 0, 2, 0, 0, 1, 1, 2, 4, 6, 0,
            0, 2, 1, 0, 0, 0, 12, 2, 2, 2, 0,
        ],
    ),
    (
        8,
        4,
        false,
        &[
            1, 0, 0, 2, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 4, 0,
            0, 2, 4, 0, 0, 0, 2, 0, 0, 0, 0,
        ],
    ),
    (
        8,
        4,
        true,
        &[
            1, 1, 0, 3, 0, 0, 2, 3, 1, 0, 0, 0, 0, 2, 0, 7, 2, 1, 0, 0, 0, 0, 2, 0, 1, 0, 0, 6, 0,
            0, 2, 7, 0, 2, 0, 3, 0, 0, 0, 0,
        ],
    ),
];

#[test]
fn enumeration_matches_frozen_tables() {
    for &(d_k, f, star, want) in TABLES {
        let spec = OrderSpec::new(d_k, f).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let got = enumerate_ideals(&spec, want.len(), !star, exec);
            assert_eq!(got.as_slice(), want, "d_K={d_k} f={f} star={star}");
        }
    }
}

#[test]
fn euler_product_matches_frozen_tables() {
    for &(d_k, f, star, want) in TABLES {
        let spec = OrderSpec::new(d_k, f).unwrap();
        let got = euler_expand(&spec, want.len(), star).unwrap();
        assert_eq!(got.as_slice(), want, "d_K={d_k} f={f} star={star}");
    }
}

#[test]
fn all_ideals_dominate_proper_ideals() {
    for &(d_k, f, star, want) in TABLES {
        if !star {
            continue;
        }
        let proper = TABLES
            .iter()
            .find(|t| t.0 == d_k && t.1 == f && !t.2)
            .unwrap()
            .3;
        assert!(proper.iter().zip(want).all(|(p, a)| p <= a));
    }
}
