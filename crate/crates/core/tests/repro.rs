use endotriv::repro::{sl2_table, sl3_omega2, tilting_dim_sl2, Verdict};

#[test]
fn tilting_dims_small() {
    assert_eq!(tilting_dim_sl2(1, 3), 2);
    assert_eq!(tilting_dim_sl2(2, 3), 3);
    assert_eq!(tilting_dim_sl2(3, 3), 6);
    assert_eq!(tilting_dim_sl2(5, 3), 6);
    assert_eq!(tilting_dim_sl2(4, 2), 8);
}

#[test]
fn sl2_tables_run() {
    for p in [2, 3] {
        let r = sl2_table(p, 4).unwrap();
        println!("{}", r.summary());
        for c in r.checks.iter().filter(|c| c.id.ends_with("/weyl") || c.id.ends_with("/endotrivial")) {
            let odd = c.id.contains("/n1/") || c.id.contains("/n3/");
            if !odd || c.id.ends_with("/endotrivial") {
                assert_eq!(c.verdict, Verdict::Pass, "{} p={p}: {:?}", c.id, c.computed);
            }
        }
    }
}

#[test]
fn sl3_omega2_suite() {
    let (r, dot) = sl3_omega2(7).unwrap();
    println!("{}", r.to_json());
    assert!(dot.contains("->"));
    assert_eq!(r.overall, Verdict::Pass, "{}", r.summary());
}

#[test]
fn odd_syzygies_of_trivial_are_weyl_modules() {
    for p in [2u32, 3, 5] {
        let r = sl2_table(p, 3).unwrap();
        for n in [1usize, 3] {
            let c = r.check_by_id(&format!("trivial/n{n}/weyl")).unwrap();
            let want = format!("V({})", (n + 1) * p as usize - 2);
            let got = c.computed["matching_weyl"].as_str().unwrap().to_string();
            assert_eq!(got, want, "p={p} n={n}");
        }
    }
}
