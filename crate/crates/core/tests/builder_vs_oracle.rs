use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tetra_core::resolution::{betti_table, betti_tables_over_tie_breaks};
use tetra_core::tuple::{degree_of_tuple, reduction_trace, regularity_closed_form};
use tetra_core::{betti_table_oracle, MonomialIdeal, TetTuple};

fn check(t: &TetTuple) -> Result<(), String> {
    let oracle = betti_table_oracle(&MonomialIdeal::of_tuple(t));
    let tables = betti_tables_over_tie_breaks(t).map_err(|e| format!("{t}: {e}"))?;
    if tables != BTreeSet::from([oracle.clone()]) {
        return Err(format!("{t}: builder {tables:?} vs oracle {oracle:?}"));
    }
    let reg = regularity_closed_form(t).map_err(|e| format!("{t}: {e}"))? as i64;
    if oracle.regularity() != Some(reg) {
        return Err(format!("{t}: regularity {reg} vs oracle {:?}", oracle.regularity()));
    }
    Ok(())
}

#[test]
fn every_tuple_up_to_total_seven() {
    let tuples: Vec<TetTuple> = TetTuple::all_with_total_at_most(7)
        .into_iter()
        .filter(|t| !t.is_trivial())
        .collect();
    assert_eq!(tuples.len(), 1715);
    let failures: Vec<String> = tuples.par_iter().filter_map(|t| check(t).err()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn seeded_random_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let tuples: Vec<TetTuple> = (0..200)
        .map(|_| TetTuple::new([(); 6].map(|_| rng.gen_range(0..=4))))
        .filter(|t| !t.is_trivial())
        .collect();
    let failures: Vec<String> = tuples.par_iter().filter_map(|t| check(t).err()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn hilbert_degree_matches_closed_form() {
    for t in TetTuple::all_with_total_at_most(7) {
        let ideal = MonomialIdeal::of_tuple(&t);
        let upto = ideal.max_generator_degree().unwrap_or(0) + 3;
        let h = ideal.hilbert_data(upto).unwrap();
        assert_eq!(h.degree, degree_of_tuple(&t), "{t}");
        for step in reduction_trace(&t).steps {
            assert_eq!(
                degree_of_tuple(&step.parent),
                degree_of_tuple(&step.child) + step.f_degree() as u64,
                "{t}"
            );
        }
    }
}

#[test]
fn worked_tables() {
    let t = |s: &str| s.parse::<TetTuple>().unwrap();
    for s in ["1,2,1,2,0,2", "1,3,4,2,3,0", "7,5,5,2,1,6", "4,1,2,1,1,5"] {
        assert_eq!(
            betti_table(&t(s)).unwrap(),
            betti_table_oracle(&MonomialIdeal::of_tuple(&t(s))),
            "{s}"
        );
    }
}
