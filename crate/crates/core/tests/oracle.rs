//! Formula against the explicit design-matrix rank on every complex on [4].

use loglin_core::design::verify_spec;
use loglin_core::engine::{rank_by_f_vector, rank_dehn_sommerville, report};
use loglin_core::enumerate::all_complexes;
use loglin_core::hilbert::is_dehn_sommerville;
use loglin_core::{Face, ModelSpec, DEFAULT_SIZE_CAP};
use num_bigint::BigInt;

#[test]
fn every_complex_on_four_vertices() {
    let complexes = all_complexes(4).unwrap();
    assert_eq!(complexes.len(), 114);
    let mut cases = 0;
    for c in &complexes {
        for code in 0..16u32 {
            let levels: Vec<u64> = (0..4).map(|i| 1 + u64::from(code >> i & 1)).collect();
            let spec = ModelSpec::new(c.clone(), levels.clone()).unwrap();
            let v = verify_spec(&spec, DEFAULT_SIZE_CAP).unwrap();
            assert!(v.agree(), "{c} {levels:?}: formula {} oracle {:?}", v.formula_rank, v.oracle_rank);
            cases += 1;
        }
        let spec = ModelSpec::constant(c.clone(), 3).unwrap();
        let v = verify_spec(&spec, DEFAULT_SIZE_CAP).unwrap();
        assert!(v.agree(), "{c} r=3");
        assert_eq!(rank_by_f_vector(c, 3).unwrap(), v.formula_rank);
        if is_dehn_sommerville(c) {
            assert_eq!(rank_dehn_sommerville(c, 3).unwrap(), v.formula_rank);
        }
    }
    assert_eq!(cases, 114 * 16);
}

#[test]
fn adding_a_face_grows_the_rank() {
    for c in all_complexes(4).unwrap() {
        let base = report(&ModelSpec::constant(c.clone(), 2).unwrap(), false, 0).unwrap().rank;
        for nf in c.minimal_nonfaces() {
            let bigger = c.with_face(&nf).unwrap();
            let grown = report(&ModelSpec::constant(bigger, 2).unwrap(), false, 0).unwrap().rank;
            // The new face contributes Π (r - 1) = 1 at r = 2.
            assert_eq!(grown, &base + BigInt::from(1), "{c} + {nf}");
        }
        assert!(c.minimal_nonfaces().iter().all(|f: &Face| !c.is_face(f.vertices()).unwrap()));
    }
}
