use std::collections::HashSet;

use super::*;
use crate::testutil::{cycles, group, setup, setup_group};

fn counts(r: &VerificationReport) -> Vec<(u64, u64)> {
    r.per_block.iter().map(|e| (e.lhs, e.rhs)).collect()
}

fn v4_in_d8(d8: &GroupHandle) -> Subgroup {
    let a = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    d8.subgroup_from_perms(&[a, b]).unwrap()
}

fn swap_extension() -> GroupHandle {
    cycles(6, &[&[&[1, 2, 3]], &[&[4, 5, 6]], &[&[1, 4], &[2, 5], &[3, 6]]])
}

/// Elements of order dividing `n`, as a subgroup (valid when they form one).
fn elements_dividing(g: &GroupHandle, n: u64) -> Subgroup {
    g.subgroup_from_set((0..g.size() as u32).filter(|&x| n.is_multiple_of(g.elt_order(x) as u64)).collect())
}

/// Every subgroup, by closing all pairs of elements (enough for the small
/// groups used here, all of which are 2-generated).
fn all_subgroups(g: &GroupHandle) -> Vec<Subgroup> {
    let n = g.size() as u32;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x..n {
            let s = g.closure(&[x, y]);
            if seen.insert(s.elements().to_vec()) {
                out.push(s);
            }
        }
    }
    out
}

fn pair_battery() -> Vec<(GroupHandle, Subgroup)> {
    let s3 = group("sym:3");
    let c3 = s3.sylow(3).unwrap();
    let d8 = group("dihedral:8");
    let v4 = v4_in_d8(&d8);
    let c6 = group("cyclic:6");
    let c3b = elements_dividing(&c6, 3);
    let s4 = group("sym:4");
    let a4 = s4.subgroup_from_perms(&crate::groups::catalog::alternating(4)).unwrap();
    let sw = swap_extension();
    let k = elements_dividing(&sw, 3);
    vec![(s3, c3), (d8, v4), (c6, c3b), (s4, a4), (sw, k)]
}

#[test]
fn bawc_golden_values_for_s3() {
    let (ctx, g) = setup("sym:3", 3);
    let r = verify_bawc(&ctx, &g, None).unwrap();
    assert_eq!(counts(&r), vec![(2, 2)]);
    assert_eq!(r.verdict, Verdict::Equal);

    let (ctx, g) = setup("sym:3", 2);
    let r = verify_bawc(&ctx, &g, None).unwrap();
    assert_eq!(counts(&r), vec![(1, 1), (1, 1)]);
    assert_eq!(r.verdict, Verdict::Equal);

    let (ctx, g) = setup("sym:3", 5);
    let r = verify_bawc(&ctx, &g, None).unwrap();
    assert_eq!(counts(&r), vec![(1, 1); 3]);
}

#[test]
fn bawc_on_the_battery() {
    for name in ["cyclic:6", "sym:4", "alt:4", "alt:5", "dihedral:8", "quaternion:8", "sl:2:3"] {
        for p in [2, 3, 5] {
            let (ctx, g) = setup(name, p);
            if g.order() % p != 0 {
                continue;
            }
            let r = verify_bawc(&ctx, &g, None).unwrap();
            assert_eq!(r.verdict, Verdict::Equal, "{name} p={p}");
            assert!(r.per_block.iter().all(|e| e.witnesses.is_empty()));
        }
    }
}

#[test]
fn bawc_orbit_sizes_under_an_overgroup() {
    let (ctx, s4) = setup("sym:4", 2);
    let a4 = ctx.handle(&s4, &s4.subgroup_from_perms(&crate::groups::catalog::alternating(4)).unwrap()).unwrap();
    let r = verify_bawc(&ctx, &a4, Some(&s4)).unwrap();
    assert_eq!(r.verdict, Verdict::Equal);
    let ids: Vec<&str> = r.per_block.iter().map(|e| e.block_id.as_str()).collect();
    assert!(ids.contains(&"B0:orbits-of-size-2"), "{ids:?}");
    // the nontrivial linear characters of A4 are swapped, as are their weights
    let e = r.per_block.iter().find(|e| e.block_id == "B0:orbits-of-size-2").unwrap();
    assert_eq!((e.lhs, e.rhs), (1, 1));

    let (ctx, s3) = setup("sym:3", 2);
    assert!(matches!(
        verify_bawc(&ctx, &ctx.handle(&s3, &s3.sylow(2).unwrap()).unwrap(), Some(&s3)),
        Err(Error::NotNormal(_))
    ));
}

#[test]
fn theta_examples() {
    let (ctx, s3) = setup("sym:3", 2);
    let c3 = s3.sylow(3).unwrap();
    let th = theta_b(&ctx, &s3, &c3, 0).unwrap();
    assert_eq!(th.len(), 1);
    assert_eq!(th[0].order(), 2);
    let c = dz_quotient_given_b(&ctx, &s3, &c3, 0, &th[0]).unwrap();
    assert_eq!(c, DzCount { count: 1, undefined: 0 });

    // Γ = G, defect-zero block: only the trivial subgroup
    let b = ctx.blocks(&s3).unwrap().iter().position(|b| b.defect == 0).unwrap();
    let th = theta_b(&ctx, &s3, &s3.whole(), b).unwrap();
    assert_eq!(th.len(), 1);
    assert!(th[0].is_trivial());

    // the nonprincipal blocks of C3 are swapped by S3
    let c3h = ctx.handle(&s3, &c3).unwrap();
    let moved = ctx.blocks(&c3h).unwrap().iter().position(|b| !b.is_principal()).unwrap();
    assert!(matches!(theta_b(&ctx, &s3, &c3, moved), Err(Error::BlockNotInvariant(_))));
    assert!(matches!(theta_b(&ctx, &s3, &s3.sylow(2).unwrap(), 0), Err(Error::NotNormal(_))));

    let (ctx, s3) = setup("sym:3", 3);
    assert!(matches!(theta_b(&ctx, &s3, &s3.sylow(2).unwrap(), 0), Err(Error::NotNormal(_))));
    let c3 = s3.sylow(3).unwrap();
    assert!(matches!(theta_b(&ctx, &s3, &c3, 0), Err(Error::QuotientNotPGroup(_))));
}

/// Θ_B for the principal block of V4 ⊴ D8 against an exhaustive scan.
#[test]
fn theta_of_v4_in_d8_matches_subgroup_scan() {
    let (ctx, d8) = setup("dihedral:8", 2);
    let v4 = v4_in_d8(&d8);
    let got = theta_b(&ctx, &d8, &v4, 0).unwrap();
    let mut classes: Vec<Vec<Vec<u32>>> = Vec::new();
    for s in all_subgroups(&d8) {
        if d8.product_order(&v4, &s) != d8.order() {
            continue;
        }
        let conj: Vec<Vec<u32>> = d8.conjugates_in(&d8.whole(), &s).iter().map(|c| c.elements().to_vec()).collect();
        if !classes.iter().any(|c| c.contains(&s.elements().to_vec())) {
            classes.push(conj);
        }
    }
    assert_eq!(got.len(), classes.len());
    assert_eq!(got.len(), 4);
}

#[test]
fn navarro_on_the_pair_battery() {
    for (gamma, g) in pair_battery() {
        let order = gamma.order();
        let (ctx, gamma) = setup_group(gamma, 2);
        let r = verify_navarro_a(&ctx, &gamma, &g).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "order {order}: {:?}", r.per_block);
        assert!(!r.per_block.is_empty());
    }
    let (ctx, s3) = setup("sym:3", 2);
    let r = verify_navarro_a(&ctx, &s3, &s3.sylow(3).unwrap()).unwrap();
    assert_eq!(counts(&r), vec![(1, 1)]);
    assert_eq!(r.notes.iter().filter(|n| n.contains("excluded")).count(), 2);
}

#[test]
fn navarro_with_trivial_quotient_is_the_weight_count() {
    for (name, p) in [("sym:3", 2), ("sym:3", 3), ("sym:4", 2), ("alt:5", 2), ("sl:2:3", 3)] {
        let (ctx, g) = setup(name, p);
        let a = verify_bawc(&ctx, &g, None).unwrap();
        let b = verify_navarro_a(&ctx, &g, &g.whole()).unwrap();
        assert_eq!(a.per_block, b.per_block, "{name} p={p}");
    }
}

#[test]
fn extended_on_the_pair_battery() {
    for (gamma, g) in pair_battery() {
        let order = gamma.order();
        let (ctx, gamma) = setup_group(gamma, 2);
        let r = verify_extended_e(&ctx, &gamma, &g).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "order {order}: {:?}", r.per_block);
        let nav = verify_navarro_a(&ctx, &gamma, &g).unwrap();
        for e in &nav.per_block {
            let fixed = r.per_block.iter().find(|x| x.block_id == format!("{}:fixed-points", e.block_id)).unwrap();
            assert_eq!(fixed.rhs, e.lhs);
        }
    }
}

#[test]
fn extended_with_trivial_quotient_and_arbitrary_quotient() {
    let (ctx, g) = setup("sym:4", 2);
    let r = verify_extended_e(&ctx, &g, &g.whole()).unwrap();
    let a = verify_bawc(&ctx, &g, None).unwrap();
    let main: Vec<(u64, u64)> =
        r.per_block.iter().filter(|e| !e.block_id.contains(':')).map(|e| (e.lhs, e.rhs)).collect();
    assert_eq!(main, counts(&a));

    // C3 ⊴ S3 at p = 3 and V4 ⊴ S4 at p = 3 have quotients that are not p-groups
    let (ctx, s3) = setup("sym:3", 3);
    let r = verify_extended_e(&ctx, &s3, &s3.sylow(3).unwrap()).unwrap();
    assert_eq!(r.verdict, Verdict::Equal);
    assert!(r.per_block.iter().all(|e| !e.block_id.contains("fixed-points")));
    let (ctx, s4) = setup("sym:4", 3);
    let v4 = s4.p_core(2).unwrap();
    assert_eq!(verify_extended_e(&ctx, &s4, &v4).unwrap().verdict, Verdict::Equal);
    assert!(ebr_count(&ctx, &s4, &v4, &[0]).unwrap() > 0);
}

#[test]
fn nav_set_on_the_pair_battery() {
    for (gamma, g) in pair_battery() {
        let order = gamma.order();
        let (ctx, gamma) = setup_group(gamma, 2);
        let r = verify_nav_set_count(&ctx, &gamma, &g).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "order {order}: {:?}", r.per_block);
        let nav = verify_navarro_a(&ctx, &gamma, &g).unwrap();
        let left: Vec<u64> = r.per_block.iter().filter(|e| !e.block_id.contains(':')).map(|e| e.lhs).collect();
        assert_eq!(left, nav.per_block.iter().map(|e| e.lhs).collect::<Vec<_>>());
    }
    let (ctx, g) = setup("sym:3", 5);
    let r = verify_nav_set_count(&ctx, &g, &g.whole()).unwrap();
    assert!(r.per_block.iter().filter(|e| !e.block_id.contains(':')).all(|e| (e.lhs, e.rhs) == (1, 1)));
}

#[test]
fn dgn_counts() {
    let cases: Vec<(GroupHandle, u64, usize)> = vec![
        (group("sym:3"), 2, 1),
        (swap_extension(), 2, 3),
        (group("dihedral:10"), 2, 1),
        (cycles(7, &[&[&[1, 2, 3, 4, 5, 6, 7]], &[&[2, 3, 5], &[4, 7, 6]]]), 3, 1),
    ];
    for (g, p, expect) in cases {
        let order = g.order();
        let (ctx, g) = setup_group(g, p);
        let k = elements_dividing(&g, arith::p_prime_part(order, p));
        let r = verify_dgn_count(&ctx, &g, &k).unwrap();
        assert_eq!(r.verdict, Verdict::Equal, "order {order}");
        assert_eq!(r.per_block[0].lhs as usize, expect);
        assert_eq!(r.per_block.len(), 3);
    }
    // direct product: everything is invariant
    let (ctx, g) = setup("cyclic:6", 2);
    let k = elements_dividing(&g, 3);
    assert_eq!(counts(&verify_dgn_count(&ctx, &g, &k).unwrap())[0], (3, 3));
    // p divides |K|
    assert!(matches!(verify_dgn_count(&ctx, &g, &g.whole()), Err(Error::HypothesisViolated(_))));
}

/// Chain classes by brute force: every tower of p-subgroups, then orbits
/// under conjugation.
fn brute_chain_classes(g: &GroupHandle, p: u64) -> usize {
    let subs: Vec<Subgroup> = all_subgroups(g)
        .into_iter()
        .filter(|s| arith::p_prime_part(s.order(), p) == 1 && !s.is_trivial())
        .collect();
    let mut towers: Vec<Vec<Vec<u32>>> = vec![vec![]];
    let mut k = 0;
    while k < towers.len() {
        let t = towers[k].clone();
        k += 1;
        for s in &subs {
            let above = t.last().is_none_or(|l: &Vec<u32>| l.len() < s.elements().len() && l.iter().all(|x| s.contains(*x)));
            if above {
                let mut u = t.clone();
                u.push(s.elements().to_vec());
                towers.push(u);
            }
        }
    }
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut orbits = 0;
    for t in towers {
        if seen.contains(&t) {
            continue;
        }
        orbits += 1;
        for x in 0..g.size() as u32 {
            let c: Vec<Vec<u32>> = t
                .iter()
                .map(|s| {
                    let mut v: Vec<u32> = s.iter().map(|&y| g.conj(y, x)).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            seen.insert(c);
        }
    }
    orbits
}

#[test]
fn chain_enumeration_matches_brute_force() {
    for (name, p) in [("sym:3", 3), ("sym:3", 2), ("dihedral:8", 2), ("sym:4", 2), ("alt:4", 2), ("sym:4", 3)] {
        let (_, g) = setup(name, p);
        let chains = enumerate_p_chains(&g, p, 100_000).unwrap();
        assert_eq!(chains.len(), brute_chain_classes(&g, p), "{name} p={p}");
        for c in &chains {
            assert!(c.tower[0].is_trivial());
            let mut stab = g.whole();
            for w in c.tower.windows(2) {
                assert!(w[0].is_subgroup_of(&w[1]) && w[0].order() < w[1].order());
            }
            for q in &c.tower {
                stab = g.intersection(&stab, &g.normalizer(q));
            }
            assert_eq!(stab, c.stabilizer);
        }
    }
    let (_, g) = setup("sym:4", 2);
    assert!(matches!(enumerate_p_chains(&g, 2, 3), Err(Error::CapExceeded(_))));
}

#[test]
fn chain_balance() {
    let (ctx, g) = setup("sym:3", 3);
    let e = verify_chain_counts(&ctx, &g, 0).unwrap();
    assert_eq!((e.lhs, e.rhs), (2, 2));
    let (ctx, g) = setup("sym:3", 2);
    let dz = ctx.blocks(&g).unwrap().iter().position(|b| b.defect == 0).unwrap();
    assert!(matches!(verify_chain_counts(&ctx, &g, dz), Err(Error::DefectZeroBlock)));
    let r = verify_chains(&ctx, &g).unwrap();
    assert_eq!(r.per_block.len(), 1);
    assert_eq!(r.verdict, Verdict::Equal);
    for (name, p) in [("dihedral:8", 2), ("sym:4", 2), ("sym:4", 3), ("alt:5", 2), ("sl:2:3", 2), ("cyclic:6", 3)] {
        let (ctx, g) = setup(name, p);
        assert_eq!(verify_chains(&ctx, &g).unwrap().verdict, Verdict::Equal, "{name} p={p}");
    }
}

#[test]
fn linear_twists_of_defect_zero() {
    for (name, p) in [("sym:3", 2), ("alt:4", 2), ("sym:4", 3), ("alt:5", 2), ("sl:2:3", 3), ("cyclic:6", 5)] {
        let (ctx, g) = setup(name, p);
        assert_eq!(verify_linear_twist(&ctx, &g).unwrap().verdict, Verdict::Equal, "{name} p={p}");
    }
    let (ctx, g) = setup("sym:4", 3);
    let r = verify_linear_twist(&ctx, &g).unwrap();
    assert_eq!(counts(&r), vec![(2, 2), (2, 2)]);
}

#[test]
fn verdict_aggregation() {
    let e = |v: Verdict| Entry { block_id: "B0".into(), defect: 0, lhs: 0, rhs: 0, verdict: v, witnesses: vec![] };
    assert_eq!(overall(&[]), Verdict::Equal);
    assert_eq!(overall(&[e(Verdict::Equal), e(Verdict::Skipped("x".into()))]), Verdict::Skipped("x".into()));
    assert_eq!(overall(&[e(Verdict::Skipped("x".into())), e(Verdict::Unequal)]), Verdict::Unequal);
    assert_eq!(Verdict::Skipped("cap".into()).label(), "SKIPPED(cap)");
}
