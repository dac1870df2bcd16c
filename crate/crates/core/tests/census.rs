use endotriv::census::{
    endotrivial_census, enumerate_points, no_projective_submodule_test, one_dim_twist_orbit, CensusOptions, ScanMode,
    VarietyPoint,
};
use endotriv::hopf::PBWAlgebra;
use endotriv::repmod::{self, ModuleRep};
use endotriv::structure::dade_split;

fn full_scan() -> CensusOptions {
    CensusOptions { orbit_reduction: false, ..CensusOptions::default() }
}

#[test]
fn class_counts_for_cyclic_group_of_order_two() {
    let a = PBWAlgebra::preset("sl2-u1", 2).unwrap();
    for opts in [CensusOptions::default(), full_scan()] {
        let counts: Vec<usize> =
            (1..=3).map(|n| endotrivial_census(&a, n, &opts).unwrap().class_count).collect();
        assert_eq!(counts, vec![1, 0, 1]);
    }
}

#[test]
fn square_zero_matrices_over_f2() {
    let a = PBWAlgebra::preset("sl2-u1", 2).unwrap();
    let (pts, scanned) = enumerate_points(&a, 2, &full_scan()).unwrap();
    assert_eq!(scanned, 16);
    assert_eq!(pts.len(), 4);
    let (pts, _) = enumerate_points(&a, 0, &full_scan()).unwrap();
    assert_eq!(pts.len(), 1);
}

#[test]
fn orbit_sizes_account_for_every_point() {
    for (p, n) in [(2u32, 3usize), (3, 2)] {
        let a = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let r = endotrivial_census(&a, n, &full_scan()).unwrap();
        for c in &r.classes {
            assert_eq!(c.orbit_size, Some(c.points_found as u128), "p={p} n={n}");
        }
    }
}

#[test]
fn sampled_classes_are_found_exhaustively() {
    let a = PBWAlgebra::preset("sl2-u1", 3).unwrap();
    let ex = endotrivial_census(&a, 2, &full_scan()).unwrap();
    let opts = CensusOptions { mode: ScanMode::Sampled, samples: 2000, seed: 5, ..CensusOptions::default() };
    let sa = endotrivial_census(&a, 2, &opts).unwrap();
    assert!(sa.class_count <= ex.class_count);
    assert!(sa.endotrivial_points <= sa.valid_points);
}

#[test]
fn rank_criterion_matches_splitting() {
    for p in [2u32, 3] {
        let a = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let fixed = [ModuleRep::trivial(&a), ModuleRep::regular(&a)];
        for n in 1..=3 {
            let (pts, _) = enumerate_points(&a, n, &full_scan()).unwrap();
            for pt in &pts {
                for m in &fixed {
                    let t = repmod::tensor(m, &pt.module(&a)).unwrap();
                    let mult = dade_split(&t, 0).unwrap().multiplicity;
                    for s in 0..=3 {
                        let no_sub = no_projective_submodule_test(m, pt, 0, s).unwrap();
                        assert_eq!(no_sub, mult < s, "p={p} n={n} s={s}");
                    }
                }
            }
        }
    }
}

#[test]
fn twist_orbits() {
    let a = PBWAlgebra::preset("sl2-u1", 3).unwrap();
    let k = ModuleRep::trivial(&a);
    assert_eq!(one_dim_twist_orbit(&a, &k).unwrap().len(), 1);
    let b = PBWAlgebra::preset("sl3-b1", 2).unwrap();
    let kb = ModuleRep::trivial(&b);
    assert_eq!(one_dim_twist_orbit(&b, &kb).unwrap().len(), 4);
    let pt = VarietyPoint { action: kb.action().to_vec() };
    assert!(no_projective_submodule_test(&kb, &pt, 0, 1).unwrap());
}
