//! Invariants over `k[f]/f^p`, where every module is a sum of Jordan blocks and Hom, syzygies,
//! projective multiplicities and endotriviality have closed forms.

use std::sync::Arc;

use proptest::prelude::*;

use endotriv::endotrivial::{is_endotrivial, omega, omega_inverse_via_hull, syzygy};
use endotriv::hopf::PBWAlgebra;
use endotriv::linalg::PrimeMatrix;
use endotriv::repmod::{direct_sum, dual, tensor, ModuleRep};
use endotriv::structure::{dade_split, hom_space, is_isomorphic, strip_projectives};

fn jordan(alg: &Arc<PBWAlgebra>, a: usize) -> ModuleRep {
    let f = alg.field();
    let mut x = PrimeMatrix::zeros(f, a, a);
    for i in 1..a {
        x.set(i, i - 1, 1);
    }
    ModuleRep::new(alg.clone(), vec![x], None).unwrap()
}

/// A module with the given Jordan blocks, written in a scrambled basis.
fn scrambled(alg: &Arc<PBWAlgebra>, blocks: &[usize], entries: &[u32]) -> ModuleRep {
    let parts: Vec<ModuleRep> = blocks.iter().map(|&a| jordan(alg, a)).collect();
    let m = direct_sum(&parts).unwrap();
    let n = m.dim();
    let f = alg.field();
    let mut b = PrimeMatrix::identity(f, n);
    for (k, &e) in entries.iter().take(n * n).enumerate() {
        let (r, c) = (k / n, k % n);
        if r < c {
            b.set(r, c, e % f.p());
        }
    }
    // Unit upper triangular times a permutation-free lower part keeps `b` invertible.
    let mut l = PrimeMatrix::identity(f, n);
    for (k, &e) in entries.iter().skip(n * n).take(n * n).enumerate() {
        let (r, c) = (k / n, k % n);
        if r > c {
            l.set(r, c, e % f.p());
        }
    }
    m.conjugate(&b.matmul(&l)).unwrap()
}

fn blocks_strategy() -> impl Strategy<Value = (u32, Vec<usize>, Vec<u32>)> {
    prop_oneof![Just(2u32), Just(3u32), Just(5u32)].prop_flat_map(|p| {
        (Just(p), prop::collection::vec(1..=p as usize, 1..4), prop::collection::vec(0u32..5, 2 * 15 * 15))
    })
}

fn blocks_of(m: &ModuleRep, p: usize) -> Vec<usize> {
    // Jordan type from ranks of powers: #blocks of size >= j is rank(x^{j-1}) - rank(x^j).
    let x = m.gen_action(0);
    let ranks: Vec<usize> = (0..=p).map(|j| x.pow(j as u64).rank()).collect();
    let mut out = Vec::new();
    for j in 1..=p {
        let at_least = ranks[j - 1] - ranks[j];
        let at_least_next = if j < p { ranks[j] - ranks[j + 1] } else { 0 };
        out.extend(std::iter::repeat_n(j, at_least - at_least_next));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution((p, blocks, entries) in blocks_strategy()) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let m = scrambled(&alg, &blocks, &entries);
        let dd = dual(&dual(&m));
        prop_assert_eq!(dd.action(), m.action());
        prop_assert!(is_isomorphic(&dual(&m), &m).unwrap().is_isomorphic());
    }

    #[test]
    fn hom_dimension_is_sum_of_minima((p, blocks, entries) in blocks_strategy(), other in prop::collection::vec(1usize..=5, 1..3)) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let other: Vec<usize> = other.into_iter().map(|a| a.min(p as usize)).collect();
        let m = scrambled(&alg, &blocks, &entries);
        let n = scrambled(&alg, &other, &entries[7..]);
        let expected: usize = blocks.iter().flat_map(|&a| other.iter().map(move |&b| a.min(b))).sum();
        prop_assert_eq!(hom_space(&m, &n).unwrap().dim(), expected);
    }

    #[test]
    fn dade_multiplicity_counts_free_blocks((p, blocks, entries) in blocks_strategy()) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let m = scrambled(&alg, &blocks, &entries);
        let free = blocks.iter().filter(|&&a| a == p as usize).count();
        let split = dade_split(&m, 0).unwrap();
        prop_assert_eq!(split.multiplicity, free);
        let mut rest: Vec<usize> = blocks.iter().copied().filter(|&a| a < p as usize).collect();
        rest.sort();
        let mut got = blocks_of(&split.complement, p as usize);
        got.sort();
        prop_assert_eq!(got, rest);
    }

    #[test]
    fn syzygy_exchanges_block_sizes((p, blocks, entries) in blocks_strategy()) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let m = scrambled(&alg, &blocks, &entries);
        let pu = p as usize;
        let mut want: Vec<usize> = blocks.iter().filter(|&&a| a < pu).map(|&a| pu - a).collect();
        want.sort();
        let mut got = blocks_of(&omega(&m).unwrap(), pu);
        got.sort();
        prop_assert_eq!(&got, &want);
        let (s, _) = strip_projectives(&m).unwrap();
        let back = omega(&omega_inverse_via_hull(&s).unwrap()).unwrap();
        prop_assert!(is_isomorphic(&back, &s).unwrap().is_isomorphic());
        let twice = syzygy(&m, 2).unwrap();
        prop_assert!(is_isomorphic(&twice, &s).unwrap().is_isomorphic());
    }

    #[test]
    fn endotrivial_iff_one_small_block((p, blocks, entries) in blocks_strategy()) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let m = scrambled(&alg, &blocks, &entries);
        let pu = p as usize;
        let rest: Vec<usize> = blocks.iter().copied().filter(|&a| a < pu).collect();
        let expected = rest.len() == 1 && (rest[0] == 1 || rest[0] == pu - 1);
        prop_assert_eq!(is_endotrivial(&m).unwrap(), expected);
    }

    #[test]
    fn tensor_dimensions_multiply((p, blocks, entries) in blocks_strategy()) {
        let alg = PBWAlgebra::preset("sl2-u1", p).unwrap();
        let m = scrambled(&alg, &blocks, &entries);
        let k = ModuleRep::trivial(&alg);
        let mk = tensor(&m, &k).unwrap();
        prop_assert_eq!(mk.action(), m.action());
        let mm = tensor(&m, &dual(&m)).unwrap();
        prop_assert_eq!(mm.dim(), m.dim() * m.dim());
        prop_assert!(mm.is_valid());
    }
}

fn sample_modules(preset: &str, p: u32) -> Vec<ModuleRep> {
    let alg = PBWAlgebra::preset(preset, p).unwrap();
    let k = ModuleRep::trivial(&alg);
    let mut out = vec![k.clone(), omega(&k).unwrap(), omega_inverse_via_hull(&k).unwrap()];
    for i in 0..alg.simples().unwrap().len().min(3) {
        out.push(endotriv::repmod::simple_module(&alg, i).unwrap());
        out.push(endotriv::repmod::pim_module(&alg, i).unwrap());
    }
    out.into_iter().filter(|m| m.dim() <= 12).map(|m| m.ungraded()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn presented_hom_matches_naive(
        which in 0usize..3,
        picks in prop::collection::vec(0usize..64, 3),
        entries in prop::collection::vec(0u32..3, 24 * 24),
    ) {
        let (preset, p) = [("sl3-b1", 2u32), ("sl2-b1", 3), ("sl2-g1", 2)][which];
        let pool = sample_modules(preset, p);
        let a = &pool[picks[0] % pool.len()];
        let b = direct_sum(&[pool[picks[1] % pool.len()].clone(), pool[picks[2] % pool.len()].clone()]).unwrap();
        let n = b.dim();
        let f = b.field();
        let mut c = PrimeMatrix::identity(f, n);
        for r in 0..n {
            for col in 0..n {
                if r != col {
                    c.set(r, col, entries[r * 24 + col] % f.p() * u32::from(r < col));
                }
            }
        }
        let b = b.conjugate(&c).unwrap();
        let naive = endotriv::structure::hom_space_naive(a, &b).unwrap().dim();
        prop_assert_eq!(hom_space(a, &b).unwrap().dim(), naive);
        prop_assert_eq!(hom_space(&b, a).unwrap().dim(), endotriv::structure::hom_space_naive(&b, a).unwrap().dim());
    }
}
