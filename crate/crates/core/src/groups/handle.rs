//! Permutation groups with a BSGS and, below the order cap, a full element table.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use sha2::{Digest, Sha256};

use super::bsgs::Bsgs;
use super::perm::Perm;
use crate::caps::Caps;
use crate::error::{Error, Result};

const MULT_TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Index of the lexicographically smallest member.
    pub rep: u32,
    pub rep_perm: Perm,
    pub size: u64,
    pub order: u32,
    pub members: Vec<u32>,
}

impl ConjClass {
    pub fn is_p_regular(&self, p: u64) -> bool {
        !(self.order as u64).is_multiple_of(p)
    }
}

#[derive(Debug)]
pub struct Enumeration {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    mult: Vec<u32>,
    gens: Vec<u32>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    words: OnceLock<Vec<(u32, u32)>>,
}

#[derive(Debug)]
pub struct GroupHandle {
    degree: usize,
    generators: Vec<Perm>,
    bsgs: Bsgs,
    order: BigUint,
    id: String,
    data: Option<Enumeration>,
    pub(crate) cache: crate::cache::HandleCache,
}

/// Builds a group from nonempty same-degree generators with the default order cap.
pub fn build_group(generators: &[Perm]) -> Result<GroupHandle> {
    let degree = generators
        .first()
        .map(|g| g.degree())
        .ok_or_else(|| Error::MalformedPermutation("empty generator list".into()))?;
    GroupHandle::new(degree, generators, &Caps::default())
}

impl GroupHandle {
    pub fn new(degree: usize, generators: &[Perm], caps: &Caps) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::MalformedPermutation(format!(
                    "generator {g} has degree {} instead of {degree}",
                    g.degree()
                )));
            }
            Perm::from_images(g.images().to_vec())?;
        }
        let bsgs = Bsgs::new(degree, generators);
        let order = bsgs.order();
        let small = order.to_u64().is_some_and(|o| o <= caps.order);
        let data = small.then(|| Enumeration::new(&bsgs, generators));
        let id = match &data {
            Some(d) => {
                let mut h = Sha256::new();
                h.update((degree as u64).to_le_bytes());
                for e in &d.elements {
                    for &x in e.images() {
                        h.update(x.to_le_bytes());
                    }
                }
                hex::encode(h.finalize())[..16].to_string()
            }
            None => {
                let mut h = Sha256::new();
                h.update((degree as u64).to_le_bytes());
                for g in generators {
                    for &x in g.images() {
                        h.update(x.to_le_bytes());
                    }
                }
                format!("g{}", &hex::encode(h.finalize())[..15])
            }
        };
        Ok(GroupHandle {
            degree,
            generators: generators.to_vec(),
            bsgs,
            order,
            id,
            data,
            cache: Default::default(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        &self.bsgs
    }

    pub fn order_big(&self) -> &BigUint {
        &self.order
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn contains_perm(&self, g: &Perm) -> bool {
        self.bsgs.contains(g)
    }

    pub fn is_enumerated(&self) -> bool {
        self.data.is_some()
    }

    pub fn require_enumerated(&self) -> Result<()> {
        if self.data.is_some() {
            Ok(())
        } else {
            Err(Error::CapExceeded(format!("group order {} above the enumeration cap", self.order)))
        }
    }

    fn en(&self) -> &Enumeration {
        self.data.as_ref().expect("group above the order cap is not enumerated")
    }

    /// Order of an enumerated group.
    pub fn order(&self) -> u64 {
        self.en().elements.len() as u64
    }

    pub fn size(&self) -> usize {
        self.en().elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.en().elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.en().elements[i as usize]
    }

    pub fn index_of(&self, g: &Perm) -> Option<u32> {
        self.en().index.get(g).copied()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// Element indices of the generators.
    pub fn gen_indices(&self) -> &[u32] {
        &self.en().gens
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let en = self.en();
        if !en.mult.is_empty() {
            return en.mult[a as usize * en.elements.len() + b as usize];
        }
        let p = en.elements[a as usize].then(&en.elements[b as usize]);
        en.index[&p]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.en().inv[a as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let o = self.elt_order(a) as u64;
        let mut k = k % o;
        let mut r = 0;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        r
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn elt_order(&self, a: u32) -> u32 {
        self.en().orders[a as usize]
    }

    pub fn exponent(&self) -> u64 {
        self.en()
            .classes
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.order as u64))
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.en().classes
    }

    pub fn num_classes(&self) -> usize {
        self.en().classes.len()
    }

    pub fn class_of(&self, a: u32) -> usize {
        self.en().class_of[a as usize] as usize
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.num_classes()).filter(|&k| self.classes()[k].is_p_regular(p)).collect()
    }

    /// (g_p, g_p') with g = g_p g_p', from a Bézout identity on the element order.
    pub fn p_part_decomposition(&self, g: u32, p: u64) -> (u32, u32) {
        let o = self.elt_order(g) as u64;
        let mut pa = 1;
        while o.is_multiple_of(pa * p) {
            pa *= p;
        }
        let m = o / pa;
        if pa == 1 {
            return (0, g);
        }
        if m == 1 {
            return (g, 0);
        }
        // 1 = u p^a + v m; g_p = g^{v m}, g_p' = g^{u p^a}
        let v = crate::numbers::arith::inv_mod(m % pa, pa).unwrap();
        let u = crate::numbers::arith::inv_mod(pa % m, m).unwrap();
        (self.pow(g, v * m % o), self.pow(g, u * pa % o))
    }

    /// Word in the generators for each element, as (parent, generator) links.
    fn words(&self) -> &Vec<(u32, u32)> {
        self.en().words.get_or_init(|| {
            let n = self.size();
            let mut link = vec![(u32::MAX, u32::MAX); n];
            link[0] = (0, u32::MAX);
            let mut queue = vec![0u32];
            let mut k = 0;
            while k < queue.len() {
                let x = queue[k];
                k += 1;
                for (gi, &g) in self.gen_indices().iter().enumerate() {
                    let y = self.mul(x, g);
                    if link[y as usize].0 == u32::MAX {
                        link[y as usize] = (x, gi as u32);
                        queue.push(y);
                    }
                }
            }
            link
        })
    }

    /// Generator positions whose product (left to right) is element `a`.
    pub fn word(&self, a: u32) -> Vec<usize> {
        let links = self.words();
        let mut w = Vec::new();
        let mut x = a;
        while x != 0 {
            let (parent, g) = links[x as usize];
            w.push(g as usize);
            x = parent;
        }
        w.reverse();
        w
    }
}

impl Enumeration {
    fn new(bsgs: &Bsgs, generators: &[Perm]) -> Self {
        let mut elements = bsgs.elements();
        elements.sort();
        let n = elements.len();
        let index: HashMap<Perm, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let inv: Vec<u32> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let mut mult = Vec::new();
        if n <= MULT_TABLE_LIMIT {
            mult = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    mult.push(index[&a.then(b)]);
                }
            }
        }
        let gens: Vec<u32> = generators.iter().map(|g| index[g]).collect();
        let mut en = Enumeration {
            elements,
            index,
            inv,
            orders,
            mult,
            gens,
            classes: Vec::new(),
            class_of: Vec::new(),
            words: OnceLock::new(),
        };
        en.compute_classes();
        en
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let n = self.elements.len();
        if !self.mult.is_empty() {
            return self.mult[a as usize * n + b as usize];
        }
        self.index[&self.elements[a as usize].then(&self.elements[b as usize])]
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let mut assigned = vec![u32::MAX; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for x in 0..n as u32 {
            if assigned[x as usize] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            assigned[x as usize] = cid;
            let mut members = vec![x];
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                k += 1;
                for &g in &self.gens {
                    let z = self.mul(self.mul(self.inv[g as usize], y), g);
                    if assigned[z as usize] == u32::MAX {
                        assigned[z as usize] = cid;
                        members.push(z);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjClass> = raw
            .into_iter()
            .map(|members| {
                let rep = members[0];
                ConjClass {
                    rep,
                    rep_perm: self.elements[rep as usize].clone(),
                    size: members.len() as u64,
                    order: self.orders[rep as usize],
                    members,
                }
            })
            .collect();
        classes.sort_by_key(|a| (a.order, a.size, a.rep));
        let mut class_of = vec![0u32; n];
        for (k, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = k as u32;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }
}

/// Same as [`GroupHandle::classes`], for callers preferring a free function.
pub fn conjugacy_classes(g: &GroupHandle) -> &[ConjClass] {
    g.classes()
}
