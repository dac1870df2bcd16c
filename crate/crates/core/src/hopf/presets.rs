//! The built-in restricted Lie algebras.
//!
//! Chevalley conventions for A2: `f1 = E21`, `f2 = E32`, `f12 = [f1, f2] = -E31`,
//! `h1 = diag(1,-1,0)`, `h2 = diag(0,1,-1)`, and `f_a` has weight `-a`.

use crate::error::{Error, Result};
use crate::weight::{RootSystem, Weight};

use super::presentation::{Presentation, PresentationData};

pub const PRESET_NAMES: [&str; 5] = ["sl2-u1", "sl2-b1", "sl2-g1", "sl3-u1", "sl3-b1"];

fn unit(d: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = c;
    v
}

pub fn preset(name: &str, p: u32) -> Result<Presentation> {
    let a1 = RootSystem::A1;
    let a2 = RootSystem::A2;
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let data = match name {
        "sl2-u1" => PresentationData {
            basis: names(&["f"]),
            brackets: vec![],
            p_power: vec![vec![0]],
            weights: Some(vec![-&a1.simple_root(0)]),
            nilpotent: vec![true],
            coroots: vec![None],
            root_system: Some(a1),
            ..Default::default()
        },
        "sl2-b1" => PresentationData {
            basis: names(&["h", "f"]),
            brackets: vec![(0, 1, unit(2, 1, -2))],
            p_power: vec![unit(2, 0, 1), vec![0, 0]],
            weights: Some(vec![Weight::zero(1), -&a1.simple_root(0)]),
            nilpotent: vec![false, true],
            coroots: vec![Some(0), None],
            root_system: Some(a1),
            ..Default::default()
        },
        "sl2-g1" => PresentationData {
            basis: names(&["e", "h", "f"]),
            brackets: vec![(1, 0, unit(3, 0, 2)), (1, 2, unit(3, 2, -2)), (0, 2, unit(3, 1, 1))],
            p_power: vec![vec![0; 3], unit(3, 1, 1), vec![0; 3]],
            weights: Some(vec![a1.simple_root(0), Weight::zero(1), -&a1.simple_root(0)]),
            nilpotent: vec![true, false, true],
            coroots: vec![None, Some(0), None],
            root_system: Some(a1),
            ..Default::default()
        },
        "sl3-u1" => PresentationData {
            basis: names(&["f1", "f2", "f12"]),
            brackets: vec![(0, 1, unit(3, 2, 1))],
            p_power: vec![vec![0; 3]; 3],
            weights: Some(vec![
                a2.from_roots(&[-1, 0]),
                a2.from_roots(&[0, -1]),
                a2.from_roots(&[-1, -1]),
            ]),
            nilpotent: vec![true; 3],
            coroots: vec![None; 3],
            root_system: Some(a2),
            ..Default::default()
        },
        "sl3-b1" => PresentationData {
            basis: names(&["h1", "h2", "f1", "f2", "f12"]),
            brackets: vec![
                (0, 2, unit(5, 2, -2)),
                (0, 3, unit(5, 3, 1)),
                (0, 4, unit(5, 4, -1)),
                (1, 2, unit(5, 2, 1)),
                (1, 3, unit(5, 3, -2)),
                (1, 4, unit(5, 4, -1)),
                (2, 3, unit(5, 4, 1)),
            ],
            p_power: vec![unit(5, 0, 1), unit(5, 1, 1), vec![0; 5], vec![0; 5], vec![0; 5]],
            weights: Some(vec![
                Weight::zero(2),
                Weight::zero(2),
                a2.from_roots(&[-1, 0]),
                a2.from_roots(&[0, -1]),
                a2.from_roots(&[-1, -1]),
            ]),
            nilpotent: vec![false, false, true, true, true],
            coroots: vec![Some(0), Some(1), None, None, None],
            root_system: Some(a2),
            ..Default::default()
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Presentation::new(PresentationData { name: name.to_string(), p, ..data })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_validate() {
        for p in [2, 3, 5, 7] {
            for name in PRESET_NAMES {
                let pres = preset(name, p).unwrap();
                assert_eq!(pres.name(), name);
            }
        }
        assert!(matches!(preset("sl4-u1", 2), Err(Error::UnknownPreset(_))));
        assert!(preset("sl2-u1", 4).is_err());
    }

    #[test]
    fn sl3_u1_bracket() {
        let pres = preset("sl3-u1", 2).unwrap();
        assert_eq!(pres.bracket(0, 1), &[0, 0, 1]);
        assert!((0..3).all(|i| pres.p_power(i).iter().all(|&x| x == 0)));
    }

    #[test]
    fn sl2_b1_mod_two() {
        let pres = preset("sl2-b1", 2).unwrap();
        assert_eq!(pres.bracket(0, 1), &[0, 0]);
        assert_eq!(pres.p_power(0), &[1, 0]);
    }

    #[test]
    fn json_round_trip() {
        let pres = preset("sl3-b1", 3).unwrap();
        let back = Presentation::from_json(&pres.to_json()).unwrap();
        assert_eq!(back, pres);
    }

    #[test]
    fn rejects_bad_jacobi() {
        // [x,y]=z, [y,z]=x, [z,x]=z over F_5 breaks Jacobi
        let data = PresentationData {
            name: "bad".into(),
            p: 5,
            basis: vec!["x".into(), "y".into(), "z".into()],
            brackets: vec![(0, 1, vec![0, 0, 1]), (1, 2, vec![1, 0, 0]), (2, 0, vec![0, 0, 1])],
            p_power: vec![vec![0; 3]; 3],
            ..Default::default()
        };
        assert!(matches!(Presentation::new(data), Err(Error::InconsistentPresentation(_))));
    }
}
