//! Modular representation theory of small permutation groups: character
//! tables, p-blocks, Brauer characters, weights, and exact counting checks of
//! the Alperin weight conjecture and its Navarro-type refinements.

pub mod blocks;
pub mod cache;
pub mod caps;
pub mod chartab;
pub mod classfn;
pub mod context;
pub mod dgn;
pub mod error;
pub mod groups;
pub mod modrep;
pub mod numbers;
pub mod verify;
pub mod weights;

pub use caps::Caps;
pub use context::Context;
pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testutil {
    use std::sync::Arc;

    use crate::groups::{build_group, catalog::catalog, GroupHandle, Perm};
    use crate::{Caps, Context};

    pub fn group(name: &str) -> GroupHandle {
        build_group(&catalog(name).unwrap().unwrap()).unwrap()
    }

    /// Group from 1-based cycle lists, one generator per entry.
    pub fn cycles(n: usize, gens: &[&[&[u32]]]) -> GroupHandle {
        let perms: Vec<Perm> = gens
            .iter()
            .map(|g| {
                let cs: Vec<Vec<u32>> = g.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                Perm::from_cycles(n, &cs).unwrap()
            })
            .collect();
        build_group(&perms).unwrap()
    }

    pub fn setup_group(g: GroupHandle, p: u64) -> (Context, Arc<GroupHandle>) {
        let ctx = Context::new(p, &g, Caps::default(), 1).unwrap();
        let g = ctx.intern(g);
        (ctx, g)
    }

    pub fn setup(name: &str, p: u64) -> (Context, Arc<GroupHandle>) {
        setup_group(group(name), p)
    }
}
