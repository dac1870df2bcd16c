use endotriv::hopf::PBWAlgebra;
use endotriv::repmod::{self, ModuleRep};
use endotriv::structure::{
    dade_split, decompose, hom_space, hom_space_naive, injective_hull, is_homomorphism, is_isomorphic,
    projective_cover, strip_projectives,
};
use endotriv::weight::Weight;

fn sample_modules(name: &str, p: u32) -> Vec<ModuleRep> {
    let a = PBWAlgebra::preset(name, p).unwrap();
    let k = ModuleRep::trivial(&a);
    let mut out = vec![k.clone(), ModuleRep::regular(&a).ungraded()];
    for i in 0..a.pims().unwrap().len() {
        out.push(repmod::pim_module(&a, i).unwrap());
        out.push(repmod::simple_module(&a, i).unwrap().ungraded());
    }
    let c = projective_cover(&k).unwrap();
    let (omega, _) = c.module.submodule(&endotriv::linalg::Subspace::kernel(&c.map)).unwrap();
    out.push(omega.ungraded());
    out.push(repmod::tensor(&omega, &omega).unwrap().ungraded());
    out.retain(|m| m.dim() <= 40);
    out
}

#[test]
fn hom_matches_naive_solver() {
    for (name, p) in [("sl2-u1", 3), ("sl2-b1", 3), ("sl2-g1", 2), ("sl2-g1", 3), ("sl3-u1", 2), ("sl3-b1", 2)] {
        let mods = sample_modules(name, p);
        for m in &mods {
            for n in &mods {
                let fast = hom_space(m, n).unwrap();
                let slow = hom_space_naive(m, n).unwrap();
                assert_eq!(fast.dim(), slow.dim(), "{name} p={p} dims {} {}", m.dim(), n.dim());
                for b in &fast.basis {
                    assert!(is_homomorphism(m, n, b));
                }
            }
        }
    }
}

#[test]
fn split_recovers_projective_multiplicity() {
    for (name, p) in [("sl2-u1", 3), ("sl2-g1", 3), ("sl3-b1", 2)] {
        let a = PBWAlgebra::preset(name, p).unwrap();
        let k = ModuleRep::trivial(&a).ungraded();
        for i in 0..a.pims().unwrap().len() {
            let q = repmod::pim_module(&a, i).unwrap();
            let m = repmod::direct_sum(&[q.clone(), k.clone(), q.clone()]).unwrap();
            let s = dade_split(&m, i).unwrap();
            assert_eq!(s.multiplicity, 2, "{name} p={p} pim {i}");
            if q.dim() > 1 {
                assert!(is_isomorphic(&s.complement, &k).unwrap().is_isomorphic());
            }
        }
        let (stripped, _) = strip_projectives(&ModuleRep::regular(&a).ungraded()).unwrap();
        assert_eq!(stripped.dim(), 0);
    }
}

#[test]
fn covers_and_hulls() {
    for (name, p) in [("sl2-u1", 3), ("sl2-g1", 3), ("sl3-b1", 2), ("sl3-u1", 3)] {
        let a = PBWAlgebra::preset(name, p).unwrap();
        let k = ModuleRep::trivial(&a);
        let c = projective_cover(&k).unwrap();
        assert!(is_homomorphism(&c.module, &k, &c.map));
        assert_eq!(c.pims.len(), 1);
        let h = injective_hull(&k).unwrap();
        assert!(is_homomorphism(&k, &h.module, &h.map));
        assert_eq!(h.map.rank(), 1);
    }
}

#[test]
fn regular_decomposes_into_projectives() {
    let a = PBWAlgebra::preset("sl3-b1", 2).unwrap();
    let d = decompose(&ModuleRep::regular(&a).ungraded(), 1).unwrap();
    assert_eq!(d.dims(), vec![8, 8, 8, 8]);
    assert!(d.certified);
}

#[test]
fn graded_pim_top_weight() {
    let a = PBWAlgebra::preset("sl3-b1", 2).unwrap();
    let mu = Weight(vec![-1, -1]);
    let p = repmod::graded_pim(&a, &mu).unwrap();
    assert!(p.is_valid());
    assert_eq!(p.weight(0), Some(&mu));
}
