//! Subgroups of an enumerated group, held as sorted element-index sets.

use std::collections::HashSet;

use super::handle::GroupHandle;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::numbers::arith;

#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: String,
    elems: Vec<u32>,
    mask: Vec<u64>,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl Subgroup {
    fn from_sorted(g: &GroupHandle, elems: Vec<u32>, gens: Vec<u32>) -> Self {
        let mut mask = vec![0u64; g.size().div_ceil(64)];
        for &e in &elems {
            mask[e as usize / 64] |= 1 << (e % 64);
        }
        Subgroup { parent: g.id().to_string(), elems, mask, gens }
    }

    pub fn parent_id(&self) -> &str {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    /// Generators as element indices of the parent.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn contains(&self, x: u32) -> bool {
        self.mask[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elems.len() <= other.elems.len() && self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn generator_perms(&self, g: &GroupHandle) -> Vec<Perm> {
        self.gens.iter().map(|&x| g.element(x).clone()).collect()
    }
}

impl GroupHandle {
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self, (0..self.size() as u32).collect(), self.gen_indices().to_vec())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[u32]) -> Subgroup {
        let gens: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        let mut elems = vec![0u32];
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            k += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        Subgroup::from_sorted(self, elems, reduce_gens(self, gens))
    }

    /// Subgroup from a set that is already known to be closed.
    pub fn subgroup_from_set(&self, mut elems: Vec<u32>) -> Subgroup {
        elems.sort_unstable();
        elems.dedup();
        let gens = self.small_generating_set(&elems);
        Subgroup::from_sorted(self, elems, gens)
    }

    pub fn subgroup_from_perms(&self, perms: &[Perm]) -> Result<Subgroup> {
        let mut idx = Vec::with_capacity(perms.len());
        for p in perms {
            match self.index_of(p) {
                Some(i) => idx.push(i),
                None => return Err(Error::NotASubgroup(format!("{p} is not in the group"))),
            }
        }
        Ok(self.closure(&idx))
    }

    /// Greedy generating set: smallest elements not yet in the span.
    fn small_generating_set(&self, elems: &[u32]) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut span = self.closure(&[]);
        for &x in elems {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
                if span.order() as usize == elems.len() {
                    break;
                }
            }
        }
        gens
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: u32) -> Subgroup {
        let elems: Vec<u32> = h.elements().iter().map(|&x| self.conj(x, g)).collect();
        let gens = h.generators().iter().map(|&x| self.conj(x, g)).collect();
        let mut sorted = elems;
        sorted.sort_unstable();
        Subgroup::from_sorted(self, sorted, gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_from_set(a.elements().iter().copied().filter(|&x| b.contains(x)).collect())
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut g = a.generators().to_vec();
        g.extend_from_slice(b.generators());
        self.closure(&g)
    }

    /// Whether `h` is normalized by every element of `a`.
    pub fn is_normal_in(&self, h: &Subgroup, a: &Subgroup) -> bool {
        a.generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// N_A(H), by testing every element of A on the generators of H.
    pub fn normalizer_in(&self, a: &Subgroup, h: &Subgroup) -> Subgroup {
        let elems = a
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
            .collect();
        self.subgroup_from_set(elems)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(&self.whole(), h)
    }

    pub fn centralizer_in(&self, a: &Subgroup, h: &Subgroup) -> Subgroup {
        let elems = a
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&x| self.mul(x, g) == self.mul(g, x)))
            .collect();
        self.subgroup_from_set(elems)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_in(&self.whole(), h)
    }

    pub fn element_centralizer_in(&self, a: &Subgroup, x: u32) -> Subgroup {
        let elems = a.elements().iter().copied().filter(|&g| self.mul(x, g) == self.mul(g, x)).collect();
        self.subgroup_from_set(elems)
    }

    /// A Sylow p-subgroup of A, grown one factor p at a time inside normalizers.
    pub fn sylow_in(&self, a: &Subgroup, p: u64) -> Result<Subgroup> {
        if !arith::is_prime(p) {
            return Err(Error::PrimeRequired(p));
        }
        let target = a.order() / arith::p_prime_part(a.order(), p);
        let mut pg = self.trivial_subgroup();
        while pg.order() < target {
            let n = self.normalizer_in(a, &pg);
            let mut step = None;
            for &x in n.elements() {
                if pg.contains(x) || !is_p_power(self.elt_order(x) as u64, p) {
                    continue;
                }
                let mut y = x;
                loop {
                    let z = self.pow(y, p);
                    if pg.contains(z) {
                        break;
                    }
                    y = z;
                }
                step = Some(y);
                break;
            }
            let y = step.ok_or_else(|| Error::Internal("Sylow growth stalled".into()))?;
            let mut gens = pg.generators().to_vec();
            gens.push(y);
            pg = self.closure(&gens);
        }
        Ok(pg)
    }

    pub fn sylow(&self, p: u64) -> Result<Subgroup> {
        self.sylow_in(&self.whole(), p)
    }

    /// O_p(A): intersection of all A-conjugates of a Sylow p-subgroup.
    pub fn p_core_in(&self, a: &Subgroup, p: u64) -> Result<Subgroup> {
        let s = self.sylow_in(a, p)?;
        let mut core: Vec<u32> = s.elements().to_vec();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(s.elements().to_vec());
        let mut queue = vec![s];
        let mut k = 0;
        while k < queue.len() {
            let cur = queue[k].clone();
            k += 1;
            for &g in a.generators() {
                let c = self.conjugate_subgroup(&cur, g);
                if seen.insert(c.elements().to_vec()) {
                    core.retain(|&x| c.contains(x));
                    queue.push(c);
                }
            }
        }
        Ok(self.subgroup_from_set(core))
    }

    pub fn p_core(&self, p: u64) -> Result<Subgroup> {
        self.p_core_in(&self.whole(), p)
    }

    /// |A B| for subgroups A, B.
    pub fn product_order(&self, a: &Subgroup, b: &Subgroup) -> u64 {
        let i = a.elements().iter().filter(|&&x| b.contains(x)).count() as u64;
        a.order() * b.order() / i
    }

    /// Some g in `a` with h^g ≤ k, if any.
    pub fn conjugate_into(&self, a: &Subgroup, h: &Subgroup, k: &Subgroup) -> Option<u32> {
        a.elements().iter().copied().find(|&g| {
            h.generators().iter().all(|&x| k.contains(self.conj(x, g)))
        })
    }

    /// Whether `h` and `k` are conjugate under `a`; returns a conjugating element.
    pub fn conjugating_element(&self, a: &Subgroup, h: &Subgroup, k: &Subgroup) -> Option<u32> {
        if h.order() != k.order() {
            return None;
        }
        self.conjugate_into(a, h, k)
    }
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Drops generators already in the span of earlier ones.
fn reduce_gens(g: &GroupHandle, gens: Vec<u32>) -> Vec<u32> {
    if gens.len() <= 1 {
        return gens;
    }
    let mut out: Vec<u32> = Vec::new();
    let mut span: HashSet<u32> = HashSet::from([0]);
    for x in gens {
        if span.contains(&x) {
            continue;
        }
        out.push(x);
        let mut elems: Vec<u32> = span.iter().copied().collect();
        let mut k = 0;
        while k < elems.len() {
            let y = elems[k];
            k += 1;
            for &s in &out {
                let z = g.mul(y, s);
                if span.insert(z) {
                    elems.push(z);
                }
            }
        }
    }
    out
}

impl GroupHandle {
    /// The same subgroup, read in another group on the same points.
    pub fn transport(&self, from: &GroupHandle, s: &Subgroup) -> Result<Subgroup> {
        self.subgroup_from_perms(&s.generator_perms(from))
    }

    /// All conjugates of `h` under `a`.
    pub fn conjugates_in(&self, a: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(h.elements().to_vec());
        let mut out = vec![h.clone()];
        let mut k = 0;
        while k < out.len() {
            let cur = out[k].clone();
            k += 1;
            for &g in a.generators() {
                let c = self.conjugate_subgroup(&cur, g);
                if seen.insert(c.elements().to_vec()) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// First member of each `a`-conjugacy class, in input order.
    pub fn fuse_classes(&self, a: &Subgroup, subs: Vec<Subgroup>) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut out = Vec::new();
        for s in subs {
            if seen.contains(s.elements()) {
                continue;
            }
            for c in self.conjugates_in(a, &s) {
                seen.insert(c.elements().to_vec());
            }
            out.push(s);
        }
        out
    }
}
