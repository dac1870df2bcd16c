use std::sync::Arc;

use endotriv::hopf::{AlgebraClass, PBWAlgebra, MAX_ALGEBRA_DIM, PRESET_NAMES};
use endotriv::Error;

/// The preset, or `None` when it is over the size budget (which must then be reported).
fn buildable(name: &str, p: u32) -> Option<Arc<PBWAlgebra>> {
    let d = endotriv::hopf::preset(name, p).unwrap().dim() as u32;
    let r = PBWAlgebra::preset(name, p);
    if (p as usize).pow(d) > MAX_ALGEBRA_DIM {
        assert!(matches!(r, Err(Error::BudgetExceeded(_))), "{name} p={p}");
        None
    } else {
        Some(r.unwrap())
    }
}

#[test]
fn preset_dimensions() {
    for &p in &[2u32, 3, 5] {
        for name in PRESET_NAMES {
            let Some(a) = buildable(name, p) else { continue };
            let d = a.ngens() as u32;
            assert_eq!(a.dim(), p.pow(d) as usize, "{name} p={p}");
        }
    }
}

#[test]
fn presets_are_associative() {
    for &p in &[2u32, 3] {
        for name in PRESET_NAMES {
            let a = PBWAlgebra::preset(name, p).unwrap();
            assert!(a.check_associativity(Some(300), 7), "{name} p={p}");
        }
    }
}

#[test]
fn projective_dimensions_sum_to_algebra() {
    for &p in &[2u32, 3, 5] {
        for name in PRESET_NAMES {
            let Some(a) = buildable(name, p) else { continue };
            let pims = a.pims().unwrap();
            let simples = a.simples().unwrap();
            let total: usize = pims.iter().map(|q| q.dim() * simples[q.simple].dim()).sum();
            assert_eq!(total, a.dim(), "{name} p={p}");
        }
    }
}

#[test]
fn sl2_projectives() {
    let a = PBWAlgebra::preset("sl2-g1", 3).unwrap();
    assert_eq!(*a.class(), AlgebraClass::Sl2G1);
    let dims: Vec<usize> = a.pims().unwrap().iter().map(|q| q.dim()).collect();
    assert_eq!(dims, vec![6, 6, 3]);
    let a = PBWAlgebra::preset("sl2-g1", 2).unwrap();
    let dims: Vec<usize> = a.pims().unwrap().iter().map(|q| q.dim()).collect();
    assert_eq!(dims, vec![4, 2]);
}
