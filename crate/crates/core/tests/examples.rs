use std::sync::Arc;

use superjm::exact::int;
use superjm::functors::{
    ds_representation, hinich_witness, phi_general, rank_one_odd, SemisimpleObject,
};
use superjm::jm::{jm_triple, neat_in_g, support_membership, triple_restriction};
use superjm::liesuper::{adjoint_rep, gl_superalgebra, osp12};
use superjm::{Parity, SuperDim};

#[test]
fn gl12_running_example() {
    let (g, v) = gl_superalgebra(1, 2).unwrap();
    let x = g.element(&[("E12", int(1)), ("E31", int(1))]).unwrap();
    assert_eq!(
        phi_general(&v, &x).unwrap(),
        SemisimpleObject::simple(1, Parity::Odd)
    );
    assert!(neat_in_g(&v, &x).unwrap());
    let t = jm_triple(&v, &x).unwrap();
    let r = triple_restriction(&v, &t).unwrap();
    assert!(r.is_valid());

    let not_neat = g.element(&[("E12", int(1))]).unwrap();
    assert!(!neat_in_g(&v, &not_neat).unwrap());
    assert!(support_membership(&v, &not_neat).unwrap());
}

#[test]
fn gl11_projective_vanishes() {
    let (g, v) = gl_superalgebra(1, 1).unwrap();
    let e = g.element(&[("E12", int(1))]).unwrap();
    let p = v.tensor(&v.dual()).unwrap();
    assert!(phi_general(&p, &e).unwrap().is_zero());
    assert!(!phi_general(&p, &g.zero()).unwrap().is_zero());
}

#[test]
fn ds_of_defining_module() {
    let (g, v) = gl_superalgebra(2, 3).unwrap();
    let x = rank_one_odd(&g, 2, 3).unwrap();
    let (alg, m) = ds_representation(&v, &x).unwrap();
    assert_eq!(alg.algebra.graded_dim(), (1 + 4, 4));
    assert_eq!(m.space().superdim(), SuperDim::new(1, 2));
    assert!(m.is_valid());
}

#[test]
fn hinich_dims() {
    let w = hinich_witness().unwrap();
    assert_eq!(w.image_dims()[1], SuperDim::new(2, 1));
    assert!(!w.middle_dims_add_up());
}

#[test]
fn osp_adjoint_is_m4() {
    let g = Arc::new(osp12());
    let ad = adjoint_rep(&g);
    let x = g.element(&[("X", int(1))]).unwrap();
    assert_eq!(
        phi_general(&ad, &x).unwrap(),
        SemisimpleObject::simple(2, Parity::Even)
    );
}
