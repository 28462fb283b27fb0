use super::*;
use crate::testutil::setup;

fn orders(s: &[Subgroup]) -> Vec<u64> {
    s.iter().map(Subgroup::order).collect()
}

/// Classes of p-subgroups by brute force: close every subset generated by
/// one or two p-elements, then count the distinct G-classes by order.
fn brute_p_subgroup_classes(g: &GroupHandle, p: u64) -> usize {
    let n = g.size() as u32;
    let is_p = |x: u32| {
        let mut o = g.elt_order(x) as u64;
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    };
    let pe: Vec<u32> = (0..n).filter(|&x| is_p(x)).collect();
    let mut subs: HashSet<Vec<u32>> = HashSet::new();
    let mut frontier = vec![g.trivial_subgroup()];
    subs.insert(vec![0]);
    while let Some(s) = frontier.pop() {
        for &x in &pe {
            if s.contains(x) {
                continue;
            }
            let mut gens = s.generators().to_vec();
            gens.push(x);
            let t = g.closure(&gens);
            if t.elements().iter().all(|&y| is_p(y)) && subs.insert(t.elements().to_vec()) {
                frontier.push(t);
            }
        }
    }
    let all: Vec<Subgroup> = subs.into_iter().map(|e| g.subgroup_from_set(e)).collect();
    let mut classes: Vec<Vec<Vec<u32>>> = Vec::new();
    for s in all {
        let conj: Vec<Vec<u32>> =
            (0..n).map(|x| g.conjugate_subgroup(&s, x).elements().to_vec()).collect();
        if !classes.iter().any(|c| c.contains(&s.elements().to_vec())) {
            classes.push(conj);
        }
    }
    classes.len()
}

#[test]
fn p_subgroup_classes() {
    let (_, g) = setup("sym:3", 2);
    assert_eq!(orders(&p_subgroups_up_to_conjugacy(&g, 2).unwrap()), vec![1, 2]);
    assert_eq!(orders(&p_subgroups_up_to_conjugacy(&g, 3).unwrap()), vec![1, 3]);
    assert_eq!(orders(&p_subgroups_up_to_conjugacy(&g, 5).unwrap()), vec![1]);
    for (name, p) in [("sym:4", 2), ("sym:4", 3), ("alt:5", 2), ("dihedral:8", 2), ("quaternion:8", 2), ("sl:2:3", 2)] {
        let (_, g) = setup(name, p);
        assert_eq!(p_subgroups_up_to_conjugacy(&g, p).unwrap().len(), brute_p_subgroup_classes(&g, p), "{name}");
    }
}

#[test]
fn radical_subgroups() {
    let (_, g) = setup("sym:3", 3);
    assert_eq!(orders(&radical_p_subgroups(&g, 3).unwrap()), vec![3]);
    assert_eq!(orders(&radical_p_subgroups(&g, 2).unwrap()), vec![1, 2]);
    let (_, g) = setup("cyclic:4", 2);
    assert_eq!(orders(&radical_p_subgroups(&g, 2).unwrap()), vec![4]);
    for (name, p) in [("sym:4", 2), ("alt:5", 2), ("sl:2:3", 3)] {
        let (_, g) = setup(name, p);
        for q in radical_p_subgroups(&g, p).unwrap() {
            let n = g.normalizer(&q);
            // independent O_p: intersection of all Sylows of N
            let s = g.sylow_in(&n, p).unwrap();
            let core: Vec<u32> = s
                .elements()
                .iter()
                .copied()
                .filter(|&x| n.elements().iter().all(|&y| s.contains(g.conj(x, y))))
                .collect();
            assert_eq!(core, q.elements());
        }
    }
}

#[test]
fn dz0_examples() {
    let (ctx, g) = setup("sym:3", 2);
    let dz = ctx.dz0(&g).unwrap();
    assert_eq!(dz.len(), 1);
    assert_eq!(dz[0].degree(), 2);

    let (ctx, g) = setup("cyclic:2", 2);
    let dz = ctx.dz0(&g).unwrap();
    assert_eq!(dz.len(), 1);
    assert_eq!(dz[0].degree(), 1);

    let (ctx, g) = setup("alt:4", 5);
    assert_eq!(ctx.dz0(&g).unwrap().len(), 4);
}

#[test]
fn weights_of_s3() {
    let (ctx, g) = setup("sym:3", 3);
    let w = enumerate_weights(&ctx, &g).unwrap();
    assert_eq!(w.len(), 2);
    assert!(w.iter().all(|x| x.q.order() == 3 && x.induced_block == 0));

    let (ctx, g) = setup("sym:3", 2);
    let w = enumerate_weights(&ctx, &g).unwrap();
    assert_eq!(w.len(), 2);
    let principal = b_weights(&w, 0);
    assert_eq!(principal.len(), 1);
    assert_eq!(principal[0].q.order(), 2);
    assert_eq!(principal[0].psi.degree, 1);
    let other = b_weights(&w, 1);
    assert_eq!(other.len(), 1);
    assert!(other[0].q.is_trivial());
    assert_eq!(other[0].psi.degree, 2);
    assert_eq!(orders(&rad0(&ctx, &g).unwrap()), vec![1, 2]);

    let (ctx, g) = setup("sym:3", 5);
    let w = enumerate_weights(&ctx, &g).unwrap();
    assert_eq!(w.len(), 3);
    assert!(w.iter().all(|x| x.q.is_trivial()));
}

#[test]
fn weight_counts_match_ibr() {
    for (name, p) in [("sym:4", 2), ("sym:4", 3), ("alt:5", 2), ("alt:5", 3), ("alt:5", 5), ("sl:2:3", 2), ("quaternion:8", 2)] {
        let (ctx, g) = setup(name, p);
        let w = enumerate_weights(&ctx, &g).unwrap();
        let m = ctx.modular(&g).unwrap();
        assert_eq!(w.len(), m.ibr.len(), "{name} p={p}");
        let nb = m.blocks.len();
        assert_eq!((0..nb).map(|b| b_weights(&w, b).len()).sum::<usize>(), w.len());
        let ids: HashSet<&str> = w.iter().map(|x| x.orbit_id.as_str()).collect();
        assert_eq!(ids.len(), w.len());
    }
}

#[test]
fn weights_over_normal_subgroups() {
    let (ctx, g) = setup("sym:3", 2);
    let k = g.sylow(3).unwrap();
    let ibr = ctx.modular(&g).unwrap().ibr.len();
    assert_eq!(weights_over(&ctx, &g, &k).unwrap().len(), ibr);
    assert_eq!(weights_over(&ctx, &g, &g.trivial_subgroup()).unwrap().len(), ibr);
    assert_eq!(weights_over(&ctx, &g, &g.whole()).unwrap().len(), enumerate_weights(&ctx, &g).unwrap().len());
    let t = g.subgroup_from_perms(&[g.classes()[1].rep_perm.clone()]).unwrap();
    assert!(matches!(weights_over(&ctx, &g, &t), Err(Error::NotNormal(_))));

    let (ctx, g) = setup("sym:4", 2);
    let v4 = g.p_core(2).unwrap();
    let ibr = ctx.modular(&g).unwrap().ibr.len();
    assert_eq!(weights_over(&ctx, &g, &v4).unwrap().len(), ibr);
}
