use super::*;
use crate::testutil::{cycles, setup, setup_group};

fn swap_extension() -> GroupHandle {
    cycles(6, &[&[&[1, 2, 3]], &[&[4, 5, 6]], &[&[1, 4], &[2, 5], &[3, 6]]])
}

fn invariant_rows(ctx: &Context, m: &Arc<GroupHandle>, k: &Subgroup) -> Vec<usize> {
    let kh = ctx.handle(m, k).unwrap();
    let kt = character_table(&kh).unwrap();
    (0..kt.num_chars())
        .filter(|&c| {
            kt.is_defect_zero(c, ctx.p())
                && classfn::is_invariant(&kh, &all_classes(&kh), &kt.irr[c], m.generators()).unwrap()
        })
        .collect()
}

#[test]
fn s3_over_c3() {
    let (ctx, m) = setup("sym:3", 2);
    let k = m.sylow(3).unwrap();
    let d = m.sylow(2).unwrap();
    let (ck, row) = glauberman_dgn_ordinary(&ctx, &m, &k, 0, &d).unwrap();
    assert_eq!(ck.order(), 1);
    assert_eq!(row, 0);
    assert_eq!(invariant_rows(&ctx, &m, &k), vec![0]);
}

#[test]
fn trivial_d_is_identity() {
    let (ctx, m) = setup("cyclic:3", 2);
    let k = m.whole();
    for theta in 0..3 {
        let (ck, row) = glauberman_dgn_ordinary(&ctx, &m, &k, theta, &m.trivial_subgroup()).unwrap();
        assert_eq!(ck.id(), m.id());
        assert_eq!(row, theta);
    }
}

#[test]
fn agrees_with_multiplicity_oracle() {
    let cases: Vec<(GroupHandle, u64)> = vec![
        (swap_extension(), 2),
        (crate::testutil::group("dihedral:10"), 2),
        (cycles(7, &[&[&[1, 2, 3, 4, 5, 6, 7]], &[&[2, 3, 5], &[4, 7, 6]]]), 3),
        (crate::testutil::group("sym:3"), 2),
    ];
    for (g, p) in cases {
        let (ctx, m) = setup_group(g, p);
        // K is the normal p-complement
        let q = arith::p_prime_part(m.order(), p);
        let k = m.subgroup_from_set((0..m.size() as u32).filter(|&x| q.is_multiple_of(m.elt_order(x) as u64)).collect());
        let d = m.sylow(p).unwrap();
        let rows = invariant_rows(&ctx, &m, &k);
        assert!(!rows.is_empty());
        for theta in rows {
            let a = glauberman_dgn_ordinary(&ctx, &m, &k, theta, &d).unwrap();
            let b = glauberman_by_multiplicity(&ctx, &m, &k, theta, &d).unwrap();
            assert_eq!(a.0.id(), b.0.id());
            assert_eq!(a.1, b.1);
        }
    }
}

#[test]
fn hypothesis_checks() {
    let (ctx, m) = setup("sym:3", 2);
    let k = m.sylow(3).unwrap();
    let d = m.sylow(2).unwrap();
    // nontrivial characters of C3 are swapped by S3
    let kh = ctx.handle(&m, &k).unwrap();
    let kt = character_table(&kh).unwrap();
    let nontrivial = (1..3).find(|&c| kt.degrees[c] == 1).unwrap();
    assert!(matches!(
        glauberman_dgn_ordinary(&ctx, &m, &k, nontrivial, &d),
        Err(Error::HypothesisViolated(_))
    ));
    // |S3 : C2| is not a power of 2
    assert!(matches!(glauberman_dgn_ordinary(&ctx, &m, &d, 0, &d), Err(Error::HypothesisViolated(_))));
}

#[test]
fn brauer_version_with_nontrivial_core() {
    let (ctx, m) = setup("sym:4", 2);
    let k = m.subgroup_from_perms(&crate::groups::catalog::alternating(4)).unwrap();
    assert_eq!(k.order(), 12);
    let kh = ctx.handle(&m, &k).unwrap();
    let trivial: Vec<Cyclotomic> = kh.p_regular_classes(2).iter().map(|_| Cyclotomic::one(1)).collect();
    let c = DgnContext::new(&ctx, &m, &k, &trivial).unwrap();
    assert_eq!(c.l.order(), 4);
    assert_eq!(c.d.order(), 8);
    let (nkd, pi) = dgn_brauer(&ctx, &c).unwrap();
    assert_eq!(nkd.order(), 4);
    assert_eq!(pi.values, vec![Cyclotomic::one(1)]);
}

#[test]
fn brauer_version_reduces_to_ordinary_when_core_is_trivial() {
    let (ctx, m) = setup_group(swap_extension(), 2);
    let k = m.subgroup_from_set((0..m.size() as u32).filter(|&x| 3 % m.elt_order(x) == 0).collect());
    assert_eq!(k.order(), 9);
    let d = m.sylow(2).unwrap();
    let kh = ctx.handle(&m, &k).unwrap();
    let kt = character_table(&kh).unwrap();
    for theta in invariant_rows(&ctx, &m, &k) {
        let phi = kt.restrict_to_p_regular(theta, 2);
        let c = DgnContext::new(&ctx, &m, &k, &phi).unwrap();
        assert!(c.l.is_trivial());
        let (nkd, pi) = dgn_brauer(&ctx, &c).unwrap();
        let (ck, row) = glauberman_by_multiplicity(&ctx, &m, &k, theta, &d).unwrap();
        assert_eq!(nkd.id(), ck.id());
        assert_eq!(pi.values, character_table(&ck).unwrap().restrict_to_p_regular(row, 2));
    }
    // D = L: M = K gives φ back
    let (ctx, m) = setup("cyclic:3", 2);
    let t = character_table(&m).unwrap();
    for theta in 0..3 {
        let phi = t.restrict_to_p_regular(theta, 2);
        let c = DgnContext::new(&ctx, &m, &m.whole(), &phi).unwrap();
        assert!(c.d.is_trivial());
        assert_eq!(dgn_brauer(&ctx, &c).unwrap().1.values, phi);
    }
}

#[test]
fn relative_defects() {
    let (ctx, g) = setup("sym:3", 2);
    let t = character_table(&g).unwrap();
    let k = g.sylow(3).unwrap();
    for chi in 0..t.num_chars() {
        assert_eq!(relative_defect(&ctx, &g, chi, &g.trivial_subgroup()).unwrap(), t.char_defect(chi, 2));
        assert_eq!(relative_defect(&ctx, &g, chi, &g.whole()).unwrap(), 0);
        let expect = if t.degrees[chi] == 2 { 0 } else { 1 };
        assert_eq!(relative_defect(&ctx, &g, chi, &k).unwrap(), expect);
    }
    let d = g.sylow(2).unwrap();
    assert!(matches!(relative_defect(&ctx, &g, 0, &d), Err(Error::NotNormal(_))));
}

#[test]
fn rdz0_degenerate_cases() {
    // K = M = G
    let (ctx, g) = setup("sym:4", 3);
    let t = character_table(&g).unwrap();
    for chi in (0..t.num_chars()).filter(|&c| t.is_defect_zero(c, 3)) {
        let phi = t.restrict_to_p_regular(chi, 3);
        let out = rdz0(&ctx, &g, &g.whole(), &g.whole(), &phi).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].values, phi);
    }
    // p ∤ |G|, non-invariant φ goes through the stabilizer
    let (ctx, g) = setup("sym:3", 5);
    let k = g.sylow(3).unwrap();
    let kh = ctx.handle(&g, &k).unwrap();
    let kt = character_table(&kh).unwrap();
    let nontrivial = (1..3).find(|&c| kt.degrees[c] == 1).unwrap();
    let out = rdz0(&ctx, &g, &k, &k, &kt.irr[nontrivial]).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].degree, 2);
    let out = rdz0(&ctx, &g, &k, &k, &kt.irr[0]).unwrap();
    let mut degrees: Vec<u64> = out.iter().map(|b| b.degree).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1]);
}

#[test]
fn rdz0_over_a_p_extension() {
    // G = M = S3, K = C3, p = 2: the invariant extensions of the trivial
    // character are 1 and sign, whose reductions coincide
    let (ctx, g) = setup("sym:3", 2);
    let k = g.sylow(3).unwrap();
    let kh = ctx.handle(&g, &k).unwrap();
    let one: Vec<Cyclotomic> = kh.p_regular_classes(2).iter().map(|_| Cyclotomic::one(1)).collect();
    let out = rdz0(&ctx, &g, &g.whole(), &k, &one).unwrap();
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].degree, 1);
    for b in &out {
        assert!(ctx.modular(&g).unwrap().find_ibr(&b.values).is_some());
    }
}
