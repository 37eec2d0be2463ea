mod common;

use tetra_core::calculus::{IndexedOperator, OperatorExpression};
use tetra_core::combinatorial::{eval_expression, k_map, r_map, Combinatorial};
use tetra_core::Nat;

#[test]
fn r_map_is_an_involution() {
    for a in 0..=5u64 {
        for b in 0..=5 {
            for c in 0..=5 {
                let (x, y, z) = r_map(a, b, c);
                assert_eq!(r_map(x, y, z), (a, b, c));
            }
        }
    }
}

#[test]
fn k_map_is_an_involution() {
    for a in 0..=5u64 {
        for b in 0..=5 {
            for c in 0..=5 {
                for d in 0..=5 {
                    let (p, q, r, s) = k_map(a, b, c, d);
                    assert_eq!(k_map(p, q, r, s), (a, b, c, d));
                }
            }
        }
    }
}

#[test]
fn r_map_commutes_with_reversal() {
    for a in 0..=6u64 {
        for b in 0..=6 {
            for c in 0..=6 {
                let (x, y, z) = r_map(a, b, c);
                assert_eq!(r_map(c, b, a), (z, y, x));
            }
        }
    }
}

#[test]
fn descending_k_is_conjugated_ascending_k() {
    let op = |s: &str| s.parse::<IndexedOperator>().unwrap();
    let descending = OperatorExpression::new(4, vec![op("K4321")]).unwrap();
    let conjugated = OperatorExpression::new(4, vec![op("P14"), op("P23"), op("K1234"), op("P14"), op("P23")]).unwrap();
    for n in 0..4u64.pow(4) {
        let s: Vec<Nat> = (0..4).map(|i| n / 4u64.pow(i) % 4).collect();
        assert_eq!(
            eval_expression(&Combinatorial, &descending, &s).unwrap(),
            eval_expression(&Combinatorial, &conjugated, &s).unwrap()
        );
    }
}

#[test]
fn normalization_preserves_the_map() {
    common::check_normalization(7, 1000, 100).unwrap();
}
