//! Structural consequences of the bracket axioms, verified on exact
//! solution families rather than asserted: the unit is central for any
//! bracket satisfying the outer Leibniz rule, and with antisymmetry the two
//! Leibniz forms imply each other.

mod common;

use common::*;
use precy_core::scalar::basis_vec;

#[test]
fn leibniz_brackets_kill_the_unit() {
    for alg in battery_algebras() {
        let kernel = leibniz_kernel(&alg);
        let mut r = rng(21);
        let unit = alg.unit().expect("battery algebras are unital").to_vec();
        for _ in 0..10 {
            let d = bracket_from_kernel_sample(&alg, &kernel, &mut r);
            assert!(d.check_leibniz_outer().pass);
            for i in 0..alg.dim() {
                let e = basis_vec(alg.dim(), i);
                assert!(d.eval(&e, &unit).unwrap().is_zero(), "{}", alg.name());
                assert!(d.eval(&unit, &e).unwrap().is_zero(), "{}", alg.name());
            }
        }
    }
}

#[test]
fn antisymmetry_plus_outer_implies_inner() {
    for alg in battery_algebras() {
        let kernel = leibniz_kernel(&alg);
        let mut r = rng(22);
        for _ in 0..10 {
            let d = bracket_from_kernel_sample(&alg, &kernel, &mut r);
            assert!(d.check_antisymmetry().pass);
            assert!(d.check_leibniz_outer().pass);
            assert!(d.check_leibniz_inner().pass, "{}", alg.name());
        }
    }
}

#[test]
fn polyderivation_is_the_conjunction_of_the_leibniz_forms() {
    for alg in battery_algebras() {
        let mut r = rng(23);
        for _ in 0..25 {
            let d = random_sparse_bracket(&alg, &mut r, 5);
            let expected = d.check_leibniz_outer().pass && d.check_leibniz_inner().pass;
            assert_eq!(d.check_polyderivation().pass, expected, "{}", alg.name());
        }
    }
}
