use endotriv::endotrivial::{
    augmentation, cosyzygy_via_hulls, ext1, is_endotrivial, iso, steinberg_lift_sequence, steinberg_projective,
    strip, syzygy, syzygy_degree, EndoClass, LiftMode,
};
use endotriv::hopf::PBWAlgebra;
use endotriv::repmod::{self, ModuleRep};

#[test]
fn truncated_polynomial_resolution_alternates() {
    for p in [2u32, 3, 5, 7] {
        let a = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let k = ModuleRep::trivial(&a);
        for n in 1..=4 {
            let expected = if n % 2 == 1 { p as usize - 1 } else { 1 };
            assert_eq!(syzygy(&k, n).unwrap().dim(), expected, "p={p} n={n}");
            assert_eq!(syzygy(&k, -n).unwrap().dim(), expected, "p={p} n=-{n}");
        }
    }
}

#[test]
fn ext_of_trivial_over_truncated_polynomials() {
    let a = PBWAlgebra::preset("sl2-u1", 3).unwrap();
    let k = ModuleRep::trivial(&a);
    assert_eq!(ext1(&k, &k).unwrap().dim, 1);
    assert_eq!(ext1(&ModuleRep::regular(&a), &k).unwrap().dim, 0);
}

#[test]
fn endotriviality_of_small_modules() {
    for p in [3u32, 5] {
        let a = PBWAlgebra::preset("sl2-g1", p).unwrap();
        let l = repmod::weyl_sl2(&a, p as usize - 2).unwrap();
        assert!(is_endotrivial(&l).unwrap(), "p={p}");
        let steinberg = repmod::weyl_sl2(&a, p as usize - 1).unwrap();
        assert!(!is_endotrivial(&steinberg).unwrap());
    }
    let a = PBWAlgebra::preset("sl2-u1", 3).unwrap();
    assert!(!is_endotrivial(&ModuleRep::regular(&a)).unwrap());
}

#[test]
fn negative_syzygies_agree_with_hulls() {
    for (name, p) in [("sl2-u1", 3), ("sl2-g1", 3), ("sl3-b1", 2)] {
        let a = PBWAlgebra::preset(name, p).unwrap();
        let k = ModuleRep::trivial(&a);
        for n in 1..=2 {
            let d = syzygy(&k, -(n as i64)).unwrap();
            let h = cosyzygy_via_hulls(&k, n).unwrap();
            assert!(iso(&d, &h).unwrap(), "{name} p={p} n={n}");
            assert!(iso(&strip(&syzygy(&d, n as i64).unwrap()).unwrap(), &k).unwrap());
        }
    }
}

#[test]
fn class_arithmetic() {
    let a = PBWAlgebra::preset("sl2-u1", 3).unwrap();
    let k = ModuleRep::trivial(&a);
    let o1 = EndoClass::new(&syzygy(&k, 1).unwrap()).unwrap();
    let o2 = EndoClass::new(&syzygy(&k, 2).unwrap()).unwrap();
    assert!(o1.add(&o1).unwrap().equals(&o2).unwrap());
    assert!(o1.add(&o1.neg().unwrap()).unwrap().is_zero());
    assert!(EndoClass::new(&ModuleRep::regular(&a)).is_err());
}

#[test]
fn degrees_of_syzygies() {
    let a = PBWAlgebra::preset("sl2-g1", 3).unwrap();
    let k = ModuleRep::trivial(&a);
    for n in -2i64..=2 {
        let m = syzygy(&k, n).unwrap();
        let padded = repmod::direct_sum(&[m, repmod::pim_module(&a, 2).unwrap()]).unwrap();
        assert_eq!(syzygy_degree(&padded, 3).unwrap(), Some(n));
    }
}

#[test]
fn omega_two_over_borel_p2() {
    let a = PBWAlgebra::preset("sl3-b1", 2).unwrap();
    let k = ModuleRep::trivial(&a);
    let o2 = syzygy(&k, 2).unwrap();
    assert_eq!(o2.dim(), 9);
    assert!(o2.is_graded());
    assert!(is_endotrivial(&o2).unwrap());
}

#[test]
fn full_and_reduced_lifts_agree() {
    let a = PBWAlgebra::preset("sl2-g1", 2).unwrap();
    let p = steinberg_projective(&a).unwrap();
    let eps = augmentation(&p).unwrap();
    let full = steinberg_lift_sequence(&p, &eps, 3, LiftMode::Full).unwrap();
    let red = steinberg_lift_sequence(&p, &eps, 3, LiftMode::Reduced).unwrap();
    let k = ModuleRep::trivial(&a);
    for n in 0..=3 {
        let s = strip(&full[n]).unwrap();
        assert!(iso(&s, &red[n]).unwrap());
        assert!(iso(&s, &syzygy(&k, n as i64).unwrap()).unwrap(), "n={n}");
    }
}
