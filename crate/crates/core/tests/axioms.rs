mod common;

use common::*;

#[test]
fn dendriform_relations() {
    runner(64).run(&triple(5), |t| dendriform(&t)).unwrap();
}

#[test]
fn quadri_relations() {
    runner(64).run(&triple(5), |t| quadri(&t)).unwrap();
}

#[test]
fn prelie_associator_is_symmetric() {
    runner(64).run(&triple(5), |t| prelie_symmetry(&t)).unwrap();
}

#[test]
fn coproduct_is_multiplicative() {
    runner(64).run(&pair(5), |p| hopf(&p)).unwrap();
}

#[test]
fn splitting_formula() {
    runner(64).run(&splitting_operands(5), |t| splitting(&t)).unwrap();
}
