mod common;

use artin_core::centraliser::{
    classify_centraliser, generator_centraliser, has_zxf2_centraliser, CentraliserError,
    CentraliserShape, ElementDescriptor,
};
use artin_core::dihedral::{dihedral_centraliser_shape, DihedralWord};
use common::{all_graphs, build, label_sweep, two_dimensional, vertex_name};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn shapes_follow_the_local_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0usize;
    for n in 1..=6 {
        for edges in all_graphs(n) {
            for labelled in label_sweep(n, &edges, 3, true, &mut rng) {
                let g = build(n, &labelled);
                let large = labelled.iter().all(|e| e.2 >= 3);
                let defined = large || two_dimensional(n, &labelled);
                let mut degree = vec![0usize; n];
                for &(i, j, _) in &labelled {
                    degree[i] += 1;
                    degree[j] += 1;
                }
                for x in 0..n {
                    let shape = generator_centraliser(&g, &vertex_name(x));
                    if !defined {
                        assert_eq!(shape, Err(CentraliserError::OutsideHypothesis));
                        continue;
                    }
                    let shape = shape.unwrap();
                    checked += 1;
                    if let CentraliserShape::CyclicTimesFree { free_rank } = shape {
                        assert!(free_rank >= 2);
                    }
                    assert_eq!(shape == CentraliserShape::CyclicZ, degree[x] == 0);
                    let leaf_edge = labelled.iter().find(|e| e.0 == x || e.1 == x);
                    let z2_expected = degree[x] == 1 && {
                        let &(i, j, m) = leaf_edge.unwrap();
                        let y = if i == x { j } else { i };
                        m % 2 == 0 || degree[y] == 1
                    };
                    assert_eq!(shape == CentraliserShape::AbelianZ2, z2_expected, "{g}");
                    if degree[x] >= 2 && two_dimensional(n, &labelled) {
                        assert!(shape.is_zxf2());
                    }
                    if large {
                        let v = has_zxf2_centraliser(&g, &vertex_name(x), 1).unwrap();
                        let w = has_zxf2_centraliser(&g, &vertex_name(x), -7).unwrap();
                        assert_eq!(v.holds, shape.is_zxf2());
                        assert_eq!(v.holds, w.holds);
                        let isolated_odd = z2_expected && leaf_edge.unwrap().2 % 2 == 1;
                        assert_eq!(v.warning.is_some(), isolated_odd);
                    }
                }
            }
        }
    }
    assert!(checked > 100_000, "{checked}");
}

#[test]
fn single_edge_agrees_with_word_engine() {
    for m in 3..=9 {
        let g = common::graph(&["a", "b"], &[("a", "b", m)]);
        let d = ElementDescriptor::GeneratorPower {
            generator: "a".into(),
            exponent: 1,
        };
        let from_graph = classify_centraliser(&g, &d).unwrap().shape;
        let from_word = dihedral_centraliser_shape(&DihedralWord::parse(m, "a").unwrap()).unwrap();
        assert_eq!(from_graph, from_word);
        assert_eq!(from_graph, CentraliserShape::AbelianZ2);
    }
}
