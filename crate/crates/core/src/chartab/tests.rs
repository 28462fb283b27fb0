use super::*;
use crate::groups::{build_group, catalog};

fn group(name: &str) -> GroupHandle {
    build_group(&catalog::catalog(name).unwrap().unwrap()).unwrap()
}

/// Sizes of conjugacy classes by brute force over all pairs.
fn brute_class_sizes(g: &GroupHandle) -> Vec<u64> {
    let els = g.elements();
    let mut seen = vec![false; els.len()];
    let mut sizes = Vec::new();
    for i in 0..els.len() {
        if seen[i] {
            continue;
        }
        let mut c = 0;
        for (j, y) in els.iter().enumerate() {
            if !seen[j] && els.iter().any(|h| &els[i].conjugate_by(h) == y) {
                seen[j] = true;
                c += 1;
            }
        }
        sizes.push(c);
    }
    sizes.sort_unstable();
    sizes
}

/// Order of the derived subgroup from all commutators.
fn brute_derived_order(g: &GroupHandle) -> u64 {
    let els = g.elements();
    let comms: Vec<u32> = els
        .iter()
        .flat_map(|a| els.iter().map(move |b| a.inverse().then(&b.inverse()).then(a).then(b)))
        .map(|c| g.index_of(&c).unwrap())
        .collect();
    g.closure(&comms).order()
}

#[test]
fn class_structure_matches_brute_force() {
    for name in ["cyclic:6", "sym:3", "sym:4", "alt:4", "alt:5", "dihedral:8", "quaternion:8", "sl:2:3"] {
        let g = group(name);
        let mut sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, brute_class_sizes(&g), "{name}");
        let total: u64 = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
    }
    assert_eq!(group("quaternion:8").num_classes(), 5);
    let s3 = group("sym:3");
    let sz: Vec<u64> = s3.classes().iter().map(|c| c.size).collect();
    assert_eq!(sz, vec![1, 3, 2]);
}

#[test]
fn s3_class_constants() {
    let g = group("sym:3");
    let cc = class_constants(&g);
    // classes: identity, transpositions, 3-cycles
    assert_eq!((cc.get(1, 1, 0), cc.get(1, 1, 1), cc.get(1, 1, 2)), (3, 0, 3));
    // brute force: count pairs (x, y) in K_i × K_j with xy = z_k
    let els = g.elements();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let z = &g.classes()[k].rep_perm;
                let count = g.classes()[i]
                    .members
                    .iter()
                    .flat_map(|&x| g.classes()[j].members.iter().map(move |&y| (x, y)))
                    .filter(|&(x, y)| &els[x as usize].then(&els[y as usize]) == z)
                    .count() as u64;
                assert_eq!(cc.get(i, j, k), count);
            }
        }
    }
}

#[test]
fn class_constant_identity() {
    for name in ["sym:4", "quaternion:8"] {
        let g = group(name);
        let cc = class_constants(&g);
        let r = g.num_classes();
        for i in 0..r {
            for j in 0..r {
                let lhs: u64 = (0..r).map(|k| cc.get(i, j, k) * g.classes()[k].size).sum();
                assert_eq!(lhs, g.classes()[i].size * g.classes()[j].size);
                assert_eq!(cc.get(0, j, j), 1);
            }
        }
    }
}

#[test]
fn tables_satisfy_axioms() {
    for name in ["cyclic:6", "sym:3", "sym:4", "alt:4", "alt:5", "dihedral:8", "quaternion:8", "sl:2:3"] {
        let g = group(name);
        let t = character_table(&g).unwrap();
        t.verify().unwrap();
        let linear = t.degrees.iter().filter(|&&d| d == 1).count() as u64;
        assert_eq!(linear, g.order() / brute_derived_order(&g), "{name}");
    }
}

#[test]
fn small_degree_sets() {
    let deg = |name: &str| character_table(&group(name)).unwrap().degrees.clone();
    assert_eq!(deg("sym:3"), vec![1, 1, 2]);
    assert_eq!(deg("quaternion:8"), vec![1, 1, 1, 1, 2]);
    assert_eq!(deg("alt:5"), vec![1, 3, 3, 4, 5]);
    let triv = build_group(&[crate::groups::Perm::identity(1)]).unwrap();
    assert_eq!(character_table(&triv).unwrap().degrees, vec![1]);
}

#[test]
fn defects_and_restriction() {
    let t = character_table(&group("sym:3")).unwrap();
    assert_eq!(t.char_defect(2, 2), 0);
    assert_eq!(t.char_defect(0, 3), 1);
    assert_eq!(t.char_defect(1, 3), 1);
    let sign = t.restrict_to_p_regular(1, 3);
    let ints: Vec<i64> = sign.iter().map(|v| v.to_i64().unwrap()).collect();
    assert_eq!(ints, vec![1, -1]);
    assert!(t.restrict_to_p_regular(0, 2).iter().all(|v| v.to_i64() == Some(1)));
}

#[test]
fn central_characters_are_integral() {
    for name in ["alt:5", "sl:2:3"] {
        let g = group(name);
        let t = character_table(&g).unwrap();
        let cc = class_constants(&g);
        let r = t.num_classes();
        for chi in 0..r {
            let w: Vec<Cyclotomic> = (0..r).map(|k| t.central_character(chi, k)).collect();
            assert!(w.iter().all(|x| x.is_algebraic_integer()));
            for i in 0..r {
                for j in 0..r {
                    let lhs = &w[i] * &w[j];
                    let mut rhs = Cyclotomic::zero(t.conductor());
                    for k in 0..r {
                        rhs = &rhs + &w[k].scale_int(cc.get(i, j, k) as i64);
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
