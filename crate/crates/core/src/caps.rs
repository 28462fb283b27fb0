use serde::Serialize;

/// Resource limits shared by every computation of a job.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest group order that is enumerated element by element.
    pub order: u64,
    /// Largest module dimension handed to the MeatAxe.
    pub dim: usize,
    /// Largest number of tensor steps while searching for simple modules.
    pub tensor_depth: usize,
    /// Largest number of chain classes enumerated.
    pub chains: usize,
    /// Largest index |M:K| searched for invariant extensions.
    pub extension_index: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { order: 5000, dim: 400, tensor_depth: 8, chains: 100_000, extension_index: 64 }
    }
}
