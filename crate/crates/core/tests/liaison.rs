use proptest::prelude::*;
use tetra_core::monomial::Monomial;
use tetra_core::resolution::{ascent_candidates, enumerate_linear_in_class};
use tetra_core::tuple::{is_minimal, reduction_applicable, ReductionType, VertexPerm};
use tetra_core::{MonomialIdeal, TetTuple};

#[test]
fn liaison_addition_of_buchsbaum_curves() {
    let ac: Monomial = "a*c".parse().unwrap();
    let bd: Monomial = "b*d".parse().unwrap();
    let two_lines = MonomialIdeal::of_tuple(&TetTuple::new([1, 0, 0, 0, 0, 1]));
    for r in 1..=4u32 {
        let lhs = MonomialIdeal::of_tuple(&TetTuple::new([r + 1, 0, r, r, 0, r + 1]));
        let smaller = MonomialIdeal::of_tuple(&TetTuple::new([r, 0, r - 1, r - 1, 0, r]));
        let bd_r = Monomial::new(bd.exponents().map(|e| e * r));
        let rhs = smaller.mul_monomial(&ac).sum(&two_lines.mul_monomial(&bd_r));
        assert_eq!(lhs, rhs, "r = {r}");
    }
}

#[test]
fn every_reduction_is_a_basic_double_link() {
    for t in TetTuple::all_with_total_at_most(7) {
        for ty in ReductionType::ALL {
            if !reduction_applicable(&t, ty) {
                continue;
            }
            let step = tetra_core::tuple::apply_reduction(&t, ty).unwrap();
            let linked = MonomialIdeal::of_tuple(&step.child)
                .basic_double_link(step.g, &step.f)
                .unwrap();
            assert_eq!(linked, MonomialIdeal::of_tuple(&t), "{t} {ty:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]
    #[test]
    fn wide_minimal_curves_are_alone(
        mid in proptest::array::uniform4(0u32..3),
        extra in (0u32..2, 0u32..2),
        perm in 0usize..24,
    ) {
        let [a2, a3, a4, a5] = mid;
        let a1 = (a3 + a5).max(a2 + a4) + 3 + extra.0;
        let a6 = (a4 + a5).max(a2 + a3) + 3 + extra.1;
        let t = TetTuple::new([a1, a2, a3, a4, a5, a6]).permute(&VertexPerm::all()[perm]);
        prop_assert!(is_minimal(&t));
        let found = enumerate_linear_in_class(&t).unwrap();
        prop_assert_eq!(found.len(), 1);
        for deg in 0..=3 * t.max_entry() + 3 {
            prop_assert!(ascent_candidates(&t, deg).is_empty(), "{} has an ascent in degree {}", t, deg);
        }
    }
}
