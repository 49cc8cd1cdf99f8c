use proptest::prelude::*;
use superjm::exact::{int, jordan_chevalley, Matrix};
use superjm::functors::{
    ga11_fusion, ga11_module, phi_of_operator, semisimplify, tensor_operator, Ga11Object,
    SemisimpleObject,
};
use superjm::json::{matrix_from_json, matrix_to_json};
use superjm::nilform::{
    adapted_basis, block_multiplicities, deligne_filtration, deligne_filtration_with,
    verify_deligne, BlockType, PivotOrder,
};
use superjm::sampling::{random_odd_nilpotent, rng};
use superjm::Parity;

fn block() -> impl Strategy<Value = BlockType> {
    (1usize..=5, any::<bool>())
        .prop_map(|(l, odd)| BlockType::new(l, if odd { Parity::Odd } else { Parity::Even }))
}

fn object() -> impl Strategy<Value = Ga11Object> {
    proptest::collection::vec((block(), 1usize..=2), 0..4).prop_map(Ga11Object::from_summands)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn block_sum_is_recovered(obj in object()) {
        let op = ga11_module(&obj);
        prop_assert_eq!(Ga11Object::from(&block_multiplicities(&op)), obj.clone());
        let chains = adapted_basis(&op, PivotOrder::Canonical).unwrap();
        prop_assert_eq!(Ga11Object::from(&chains), obj);
    }

    #[test]
    fn semisimplification_is_monoidal(a in object(), b in object()) {
        let op = tensor_operator(&ga11_module(&a), &ga11_module(&b)).unwrap();
        let lhs = phi_of_operator(&op);
        let rhs: SemisimpleObject = semisimplify(&a).tensor(&semisimplify(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fusion_preserves_superdimension(a in block(), b in block()) {
        let f = ga11_fusion(a, b);
        prop_assert_eq!(f.superdim().sdim, a.sdim() * b.sdim());
    }

    #[test]
    fn deligne_is_canonical(seed in any::<u64>(), order in any::<u64>()) {
        let (op, _) = random_odd_nilpotent(&mut rng(seed), 4, 4);
        let f = deligne_filtration(&op).unwrap();
        verify_deligne(&f, op.matrix()).unwrap();
        prop_assert_eq!(f, deligne_filtration_with(&op, PivotOrder::Seeded(order)).unwrap());
    }

    #[test]
    fn jordan_chevalley_recombines(entries in proptest::collection::vec(-3i64..=3, 16)) {
        let m = Matrix::from_fn(4, 4, |i, j| int(entries[4 * i + j]));
        let (s, n) = jordan_chevalley(&m).unwrap();
        prop_assert_eq!(&s + &n, m);
        prop_assert!(n.is_nilpotent());
        prop_assert!(Matrix::commutator(&s, &n).is_zero());
    }

    #[test]
    fn matrices_round_trip(num in proptest::collection::vec(-50i64..=50, 6), den in proptest::collection::vec(1i64..=9, 6)) {
        let m = Matrix::from_fn(2, 3, |i, j| superjm::exact::ratio(num[3 * i + j], den[3 * i + j]));
        prop_assert_eq!(matrix_from_json(&matrix_to_json(&m), 2, 3).unwrap(), m);
    }
}
