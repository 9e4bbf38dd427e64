mod common;

use skew_schur::*;

use common::{naive_lr_coefficient, naive_lr_counts, part, partitions_of};

fn skew(outer: &[u32], inner: &[u32]) -> SkewShape {
    SkewShape::new(part(outer), part(inner)).unwrap()
}

fn expansion_from_oracle(d: &SkewShape) -> SchurExpansion {
    SchurExpansion::from_terms(naive_lr_counts(d).into_iter().map(|(nu, c)| (part(&nu), c as i64))).unwrap()
}

#[test]
fn two_box_disconnected_shape() {
    let d = skew(&[2, 1], &[1]);
    let oracle = naive_lr_counts(&d);
    assert_eq!(oracle.len(), 2);
    assert_eq!(oracle[&vec![2]], 1);
    assert_eq!(oracle[&vec![1, 1]], 1);
    assert_eq!(skew_schur_expansion(&d), expansion_from_oracle(&d));
    assert_eq!(skew_schur_expansion(&d).to_string(), "s(2) + s(1,1)");
}

#[test]
fn lr_coefficients_agree_with_brute_force() {
    assert_eq!(naive_lr_coefficient(&[2, 1], &[1], &[1, 1]), 1);
    assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[1]), &part(&[1, 1])).unwrap(), 1);
    for outer in [vec![3, 2, 1], vec![4, 3, 2], vec![3, 3, 2, 1]] {
        for inner in [vec![1], vec![2, 1], vec![2, 2]] {
            let o = part(&outer);
            let i = part(&inner);
            let b = (o.size() - i.size()) as u32;
            for nu in partitions_of(b) {
                assert_eq!(
                    lr_coefficient(&o, &i, &part(&nu)).unwrap(),
                    naive_lr_coefficient(&outer, &inner, &nu),
                    "{outer:?}/{inner:?} at {nu:?}"
                );
            }
        }
    }
}

#[test]
fn products_agree_with_brute_force() {
    assert_eq!(product_expansion(&part(&[1]), &part(&[1])).to_string(), "s(2) + s(1,1)");
    for (mu, nu) in [(vec![2, 1], vec![2]), (vec![2, 1], vec![1, 1, 1]), (vec![3, 1], vec![2, 1]), (vec![2, 2], vec![2, 1])] {
        let f = product_expansion(&part(&mu), &part(&nu));
        let n = (part(&mu).size() + part(&nu).size()) as u32;
        for lambda in partitions_of(n) {
            let expected = if contains(&part(&mu), &part(&lambda)) {
                naive_lr_coefficient(&lambda, &mu, &nu) as i64
            } else {
                0
            };
            assert_eq!(f.coeff(&part(&lambda)), expected, "{mu:?}*{nu:?} at {lambda:?}");
        }
    }
}

#[test]
fn nine_box_expansions_agree_with_brute_force() {
    for d in [skew(&[4, 3, 3, 1], &[2, 1]), skew(&[5, 3, 2], &[1]), skew(&[3, 3, 3], &[])] {
        assert_eq!(skew_schur_expansion(&d), expansion_from_oracle(&d), "{d}");
    }
}

#[test]
fn staircase_with_foundation_agrees_with_brute_force() {
    let alpha = Composition::new(vec![1, 2]).unwrap();
    for k in 0..=2 {
        for lambda in [part(&[2, 1]), part(&[1, 1, 1]), part(&[3])] {
            if lambda.first() > 2 + k {
                continue;
            }
            let d = staircase_with_foundation(&lambda, &alpha, k).unwrap();
            assert_eq!(skew_schur_expansion(&d), expansion_from_oracle(&d), "{d}");
        }
    }
}
