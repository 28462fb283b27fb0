//! Per-job state: the modular system shared by every group in the job, caps,
//! the MeatAxe seed, and caches keyed by group id.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::blocks::{self, Block};
use crate::caps::Caps;
use crate::error::Result;
use crate::groups::{quotient_group, GroupHandle, Perm, Quotient, Subgroup};
use crate::modrep::{self, Modular};
use crate::numbers::{FiniteField, PModularSystem};
use crate::weights::{self, Dz0};

type SubKey = (String, Vec<u32>);

#[derive(Debug)]
pub struct Context {
    sys: Arc<PModularSystem>,
    caps: Caps,
    seed: u64,
    by_id: Mutex<HashMap<String, Arc<GroupHandle>>>,
    subs: Mutex<HashMap<SubKey, Arc<GroupHandle>>>,
    quotients: Mutex<HashMap<SubKey, Arc<Quotient>>>,
    blocks: Mutex<HashMap<String, Arc<Vec<Block>>>>,
    modular: Mutex<HashMap<String, Arc<Modular>>>,
    dz0: Mutex<HashMap<String, Arc<Vec<Dz0>>>>,
}

fn cached<K, V, F>(map: &Mutex<HashMap<K, Arc<V>>>, key: K, make: F) -> Result<Arc<V>>
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> Result<V>,
{
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(make()?);
    Ok(map.lock().unwrap().entry(key).or_insert(v).clone())
}

impl Context {
    /// Context for groups inside `top`; the field is sized by the exponent of `top`.
    pub fn new(p: u64, top: &GroupHandle, caps: Caps, seed: u64) -> Result<Self> {
        top.require_enumerated()?;
        Self::with_exponent(p, top.exponent(), caps, seed)
    }

    pub fn with_exponent(p: u64, exponent: u64, caps: Caps, seed: u64) -> Result<Self> {
        Ok(Context {
            sys: Arc::new(PModularSystem::new(p, exponent)?),
            caps,
            seed,
            by_id: Default::default(),
            subs: Default::default(),
            quotients: Default::default(),
            blocks: Default::default(),
            modular: Default::default(),
            dz0: Default::default(),
        })
    }

    pub fn p(&self) -> u64 {
        self.sys.p
    }

    pub fn sys(&self) -> &PModularSystem {
        &self.sys
    }

    pub fn field(&self) -> &FiniteField {
        self.sys.field()
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Canonical shared instance of a handle, so cached tables are reused.
    pub fn intern(&self, g: GroupHandle) -> Arc<GroupHandle> {
        self.by_id.lock().unwrap().entry(g.id().to_string()).or_insert_with(|| Arc::new(g)).clone()
    }

    pub fn intern_arc(&self, g: &Arc<GroupHandle>) -> Arc<GroupHandle> {
        self.by_id.lock().unwrap().entry(g.id().to_string()).or_insert_with(|| g.clone()).clone()
    }

    /// A subgroup of `g` as a group in its own right, on the same points.
    pub fn handle(&self, g: &Arc<GroupHandle>, s: &Subgroup) -> Result<Arc<GroupHandle>> {
        if s.order() == g.order() {
            return Ok(self.intern_arc(g));
        }
        let key = (g.id().to_string(), s.elements().to_vec());
        cached(&self.subs, key, || {
            let mut gens = s.generator_perms(g);
            if gens.is_empty() {
                gens.push(Perm::identity(g.degree()));
            }
            GroupHandle::new(g.degree(), &gens, &self.caps)
        })
        .map(|h| self.intern_arc(&h))
    }

    pub fn quotient(&self, g: &Arc<GroupHandle>, n: &Subgroup) -> Result<Arc<Quotient>> {
        let key = (g.id().to_string(), n.elements().to_vec());
        cached(&self.quotients, key, || {
            let mut q = quotient_group(g, n, &self.caps)?;
            q.group = self.intern_arc(&q.group);
            Ok(q)
        })
    }

    pub fn blocks(&self, g: &Arc<GroupHandle>) -> Result<Arc<Vec<Block>>> {
        cached(&self.blocks, g.id().to_string(), || blocks::distribute_blocks(g, &self.sys))
    }

    /// Brauer characters, decomposition matrix and blocks with IBr members.
    pub fn modular(&self, g: &Arc<GroupHandle>) -> Result<Arc<Modular>> {
        cached(&self.modular, g.id().to_string(), || modrep::modular_data(self, g))
    }

    pub fn dz0(&self, g: &Arc<GroupHandle>) -> Result<Arc<Vec<Dz0>>> {
        cached(&self.dz0, g.id().to_string(), || weights::dz0_characters(self, g))
    }
}
