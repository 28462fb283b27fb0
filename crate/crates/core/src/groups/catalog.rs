//! Small constructive catalog of permutation groups.

use super::perm::Perm;
use crate::error::{Error, Result};

fn cycle(n: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(n, &[pts.to_vec()]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> Vec<Perm> {
    match n {
        0 | 1 => vec![Perm::identity(1)],
        2 => vec![cycle(2, &[0, 1])],
        _ => vec![cycle(n, &(0..n as u32).collect::<Vec<_>>()), cycle(n, &[0, 1])],
    }
}

pub fn alternating(n: usize) -> Vec<Perm> {
    if n < 3 {
        return vec![Perm::identity(n.max(1))];
    }
    (0..n - 2).map(|i| cycle(n, &[i as u32, i as u32 + 1, i as u32 + 2])).collect()
}

pub fn cyclic(n: usize) -> Vec<Perm> {
    if n == 1 {
        return vec![Perm::identity(1)];
    }
    vec![cycle(n, &(0..n as u32).collect::<Vec<_>>())]
}

/// Dihedral group of the given order (acting on order/2 points; order 4 on 4 points).
pub fn dihedral(order: usize) -> Result<Vec<Perm>> {
    if order < 4 || order % 2 == 1 {
        return Err(Error::MalformedPermutation(format!("dihedral order {order}")));
    }
    let n = order / 2;
    if n == 2 {
        return Ok(vec![
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
        ]);
    }
    let rot = cycle(n, &(0..n as u32).collect::<Vec<_>>());
    let refl = Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    Ok(vec![rot, refl])
}

/// Q8 in its regular representation.
pub fn quaternion8() -> Vec<Perm> {
    // elements ±1, ±i, ±j, ±k encoded as 2*u + s with u in {1,i,j,k}, s the sign bit
    let mul_unit = |a: usize, b: usize| -> (usize, usize) {
        // returns (unit, sign) of a*b for units 0=1,1=i,2=j,3=k
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        T[a][b]
    };
    let right_mult = |g: usize| -> Perm {
        let images = (0..8)
            .map(|x| {
                let (u, s) = mul_unit(x / 2, g / 2);
                let sign = (x % 2) ^ (g % 2) ^ s;
                (2 * u + sign) as u32
            })
            .collect();
        Perm::from_images(images).expect("regular action")
    };
    vec![right_mult(2), right_mult(4)]
}

/// SL(2,3) acting on the eight nonzero vectors of GF(3)^2.
pub fn sl2_3() -> Vec<Perm> {
    let vecs: Vec<(u32, u32)> = (0..9).map(|i| (i / 3, i % 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u32; 2]; 2]| -> Perm {
        let images = vecs
            .iter()
            .map(|&(a, b)| {
                let w = ((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3);
                vecs.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Perm::from_images(images).expect("invertible matrix")
    };
    vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]
}

/// Parses a catalog name such as `sym:4`, `alt:5`, `dihedral:8`, `cyclic:6`,
/// `quaternion:8` or `sl:2:3`.
pub fn catalog(name: &str) -> Option<Result<Vec<Perm>>> {
    let parts: Vec<&str> = name.trim().split(':').collect();
    let num = |s: &str| s.parse::<usize>().ok();
    match parts.as_slice() {
        ["sym", n] => num(n).map(|n| Ok(symmetric(n))),
        ["alt", n] => num(n).map(|n| Ok(alternating(n))),
        ["cyclic", n] => num(n).filter(|&n| n > 0).map(|n| Ok(cyclic(n))),
        ["dihedral", n] => num(n).map(dihedral),
        ["quaternion", "8"] => Some(Ok(quaternion8())),
        ["sl", "2", "3"] => Some(Ok(sl2_3())),
        _ => None,
    }
}
