//! Lazily computed per-group data that does not depend on a prime.

use std::sync::{Arc, OnceLock};

use crate::chartab::{CharacterTable, ClassConstants};

#[derive(Debug, Default)]
pub struct HandleCache {
    pub(crate) table: OnceLock<Arc<CharacterTable>>,
    pub(crate) constants: OnceLock<Arc<ClassConstants>>,
}
