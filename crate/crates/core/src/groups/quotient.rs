//! Quotients G/N acting on right cosets.

use std::sync::Arc;

use super::handle::GroupHandle;
use super::perm::Perm;
use super::subgroup::Subgroup;
use crate::caps::Caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<GroupHandle>,
    pub kernel: Subgroup,
    /// Element of G ↦ element of G/N.
    pub forward: Vec<u32>,
    /// Element of G/N ↦ smallest element of the corresponding coset.
    pub backward: Vec<u32>,
}

impl Quotient {
    pub fn image(&self, g: u32) -> u32 {
        self.forward[g as usize]
    }

    pub fn preimage_rep(&self, q: u32) -> u32 {
        self.backward[q as usize]
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, parent: &GroupHandle, sub: &Subgroup) -> Subgroup {
        let elems = (0..parent.size() as u32).filter(|&g| sub.contains(self.forward[g as usize])).collect();
        parent.subgroup_from_set(elems)
    }

    pub fn image_subgroup(&self, parent: &GroupHandle, sub: &Subgroup) -> Subgroup {
        let _ = parent;
        let gens: Vec<u32> = sub.generators().iter().map(|&g| self.forward[g as usize]).collect();
        self.group.closure(&gens)
    }
}

pub fn quotient_group(g: &GroupHandle, n: &Subgroup, caps: &Caps) -> Result<Quotient> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal(format!("subgroup of order {} in group of order {}", n.order(), g.order())));
    }
    let size = g.size();
    let mut coset_of = vec![u32::MAX; size];
    let mut reps: Vec<u32> = Vec::new();
    for x in 0..size as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let k = reps.len() as u32;
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(m, x) as usize] = k;
        }
    }
    let degree = reps.len();
    let action = |h: u32| -> Perm {
        let images = reps.iter().map(|&r| coset_of[g.mul(r, h) as usize]).collect();
        Perm::from_images(images).expect("coset action is a permutation")
    };
    let gens: Vec<Perm> = g.gen_indices().iter().map(|&h| action(h)).collect();
    let gens = if gens.is_empty() { vec![Perm::identity(degree)] } else { gens };
    let q = GroupHandle::new(degree, &gens, caps)?;
    // a quotient element is determined by where it sends the coset N
    let mut elem_of_coset = vec![0u32; degree];
    for (i, p) in q.elements().iter().enumerate() {
        elem_of_coset[p.image(0) as usize] = i as u32;
    }
    let forward: Vec<u32> = coset_of.iter().map(|&c| elem_of_coset[c as usize]).collect();
    let mut backward = vec![0u32; q.size()];
    for (k, &r) in reps.iter().enumerate() {
        backward[elem_of_coset[k] as usize] = r;
    }
    Ok(Quotient { group: Arc::new(q), kernel: n.clone(), forward, backward })
}
