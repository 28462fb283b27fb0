use blockweights::groups::{build_group, catalog::catalog, quotient_group, GroupHandle, Perm};
use blockweights::{Caps, Error};

fn group(name: &str) -> GroupHandle {
    build_group(&catalog(name).unwrap().unwrap()).unwrap()
}

fn perm(n: usize, cycles: &[&[u32]]) -> Perm {
    let cs: Vec<Vec<u32>> = cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
    Perm::from_cycles(n, &cs).unwrap()
}

#[test]
fn catalog_orders() {
    for (name, order) in [
        ("sym:3", 6),
        ("sym:4", 24),
        ("sym:5", 120),
        ("alt:4", 12),
        ("alt:5", 60),
        ("cyclic:6", 6),
        ("dihedral:8", 8),
        ("dihedral:4", 4),
        ("quaternion:8", 8),
        ("sl:2:3", 24),
    ] {
        assert_eq!(group(name).order(), order, "{name}");
    }
}

#[test]
fn malformed_input_rejected() {
    assert!(matches!(Perm::from_images(vec![0, 0, 1]), Err(Error::MalformedPermutation(_))));
    assert!(Perm::from_cycles(3, &[vec![0, 3]]).is_err());
    assert!(Perm::from_cycles(3, &[vec![0, 1, 0]]).is_err());
}

#[test]
fn normalizer_of_transposition() {
    let g = group("sym:4");
    let t = g.subgroup_from_perms(&[perm(4, &[&[1, 2]])]).unwrap();
    let n = g.normalizer(&t);
    assert_eq!(n.order(), 4);
    // oracle: elements g with g t g^-1 in t
    let brute = (0..g.size() as u32)
        .filter(|&x| t.elements().iter().all(|&y| t.contains(g.conj(y, x))))
        .count();
    assert_eq!(brute, 4);
    assert_eq!(g.centralizer(&t).order(), 4);
}

#[test]
fn p_cores_and_sylows() {
    let s3 = group("sym:3");
    assert_eq!(s3.p_core(2).unwrap().order(), 1);
    assert_eq!(s3.p_core(3).unwrap().order(), 3);
    let s4 = group("sym:4");
    assert_eq!(s4.p_core(2).unwrap().order(), 4);
    assert_eq!(s4.sylow(2).unwrap().order(), 8);
    assert_eq!(s4.sylow(3).unwrap().order(), 3);
    let a5 = group("alt:5");
    assert_eq!(a5.p_core(2).unwrap().order(), 1);
    assert_eq!(a5.sylow(5).unwrap().order(), 5);
    assert_eq!(group("sl:2:3").p_core(2).unwrap().order(), 8);
}

#[test]
fn quotient_by_klein_four() {
    let s4 = group("sym:4");
    let v4 = s4.p_core(2).unwrap();
    let q = quotient_group(&s4, &v4, &Caps::default()).unwrap();
    assert_eq!(q.group.order(), 6);
    assert_eq!(q.group.num_classes(), 3);
    // the map is a homomorphism
    for a in 0..24 {
        for b in 0..24 {
            assert_eq!(q.image(s4.mul(a, b)), q.group.mul(q.image(a), q.image(b)));
        }
    }
    let t = s4.subgroup_from_perms(&[perm(4, &[&[1, 2]])]).unwrap();
    assert!(matches!(quotient_group(&s4, &t, &Caps::default()), Err(Error::NotNormal(_))));
}

#[test]
fn not_a_subgroup() {
    let s3 = group("sym:3");
    assert!(matches!(
        s3.subgroup_from_perms(&[perm(4, &[&[1, 4]])]),
        Err(Error::NotASubgroup(_))
    ));
}

#[test]
fn p_part_decomposition_commutes() {
    let g = group("sl:2:3");
    for x in 0..g.size() as u32 {
        for p in [2, 3] {
            let (a, b) = g.p_part_decomposition(x, p);
            assert_eq!(g.mul(a, b), x);
            assert_eq!(g.mul(a, b), g.mul(b, a));
            let oa = g.elt_order(a) as u64;
            let ob = g.elt_order(b) as u64;
            assert_eq!(blockweights::numbers::p_part(oa as i64, p).unwrap(), oa);
            assert_ne!(ob % p, 0);
        }
    }
}

#[test]
fn words_evaluate() {
    let g = group("alt:5");
    let gens = g.gen_indices().to_vec();
    for x in 0..g.size() as u32 {
        let w = g.word(x);
        let v = w.iter().fold(g.identity(), |acc, &i| g.mul(acc, gens[i]));
        assert_eq!(v, x);
    }
}
