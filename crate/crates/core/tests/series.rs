mod common;

use num_bigint::{BigInt, BigUint};
use powercat_core::objects::DomainObject;
use powercat_core::patterns::{count_class, enumerate_class, ClassSpec, EnumerationLimits};
use powercat_core::series::*;
use powercat_core::PathKind;
use proptest::prelude::*;

#[test]
fn kernel_formula_matches_recurrence_and_enumeration() {
    let a11 = kernel_a11(9).unwrap();
    let e3 = e3_sequence(9);
    let spec = ClassSpec::InvSeqTriple("geq,geq,geq".parse().unwrap());
    for n in 1..=9 {
        let brute = count_class(&spec, n, &EnumerationLimits::default()).unwrap();
        assert_eq!(a11[n - 1], BigInt::from(brute), "n = {}", n);
        assert_eq!(e3[n], BigUint::from(brute), "n = {}", n);
    }
    assert!(satisfies_a108307_recurrence(&e3));
}

#[test]
fn kernel_series_residuals_vanish() {
    let w = kernel_w(8).unwrap();
    assert!(w_residual(&w).is_zero());
    for order in 1..=8 {
        assert!(functional_equation_residual(order).unwrap().is_zero(), "order {}", order);
    }
}

#[test]
fn a_perturbed_series_leaves_a_residual() {
    let w = kernel_w(5).unwrap();
    let bumped = &w + &TruncatedSeries::constant(5, LaurentPoly::one()).times_x().times_x();
    assert!(!w_residual(&bumped).is_zero());
}

/// Direct count of `(=,>,>)`-avoiding sequences by number of zeros.
#[test]
fn triangle_counts_zeros() {
    let tri = callan_triangle(9);
    for n in 1..=9 {
        let mut row = vec![0u64; n + 1];
        for e in common::all_invseqs(n) {
            if common::avoids_triple(&e, ["eq", "gt", "gt"]) {
                row[e.iter().filter(|&&x| x == 0).count()] += 1;
            }
        }
        let expected: Vec<BigUint> = row.into_iter().map(BigUint::from).collect();
        assert_eq!(tri.row(n), &expected[..], "n = {}", n);
    }
}

#[test]
fn triangle_counts_last_descents_and_root_degrees() {
    let tri = callan_triangle(8);
    let limits = EnumerationLimits::default();
    for n in 1..=8 {
        let mut by_descent = vec![0u64; n + 1];
        for o in enumerate_class(&ClassSpec::Paths(PathKind::ValleyMarkedDyck), n, &limits).unwrap() {
            if let DomainObject::Path(p) = o {
                by_descent[p.last_descent_length()] += 1;
            }
        }
        let mut by_degree = vec![0u64; n + 1];
        for o in enumerate_class(&ClassSpec::Trees, n, &limits).unwrap() {
            if let DomainObject::Tree(t) = o {
                by_degree[t.root_degree()] += 1;
            }
        }
        for k in 0..=n {
            assert_eq!(BigUint::from(by_descent[k]), tri.get(n, k), "paths n={} k={}", n, k);
            assert_eq!(BigUint::from(by_degree[k]), tri.get(n, k), "trees n={} k={}", n, k);
        }
    }
}

#[test]
fn catalan_reference_is_the_dyck_count() {
    let seq = reference_sequence("catalan", 10).unwrap();
    for n in 1..=10 {
        assert_eq!(seq[n - 1], BigUint::from(common::dyck_words(n).len()));
    }
}

#[test]
fn bundled_prefixes_are_bounded() {
    assert_eq!(reference_sequence("baxter", 8).unwrap().last().unwrap(), &BigUint::from(10754u32));
    assert_eq!(reference_sequence("semibaxter", 8).unwrap().last().unwrap(), &BigUint::from(17734u32));
    assert!(reference_sequence("semibaxter", 100).is_err());
}

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(|t| LaurentPoly::from_terms(&t))
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    /// The expansion of `1/(1+a)^3` is a two-sided inverse in Laurent
    /// series, so it cancels a factor `(1+a)^3` exactly.
    #[test]
    fn division_by_one_plus_a_cubed(a in arb_laurent()) {
        let cube = LaurentPoly::from_terms(&[(0, 1), (1, 3), (2, 3), (3, 1)]);
        let p = &a * &cube;
        prop_assert_eq!(p.constant_term_over_one_plus_a_pow(3), a.coeff(0));
    }
}

