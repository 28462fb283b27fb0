//! Exact numbers: cyclotomic fields, finite fields and the p-modular reduction.

pub mod arith;
pub mod cyclotomic;
pub mod field;
pub mod matrix;
pub mod modsys;
pub mod poly;
pub mod qmat;

pub use arith::{p_part, valuation_p};
pub use cyclotomic::Cyclotomic;
pub use field::{Fe, FiniteField};
pub use modsys::PModularSystem;

/// Same as [`Cyclotomic::is_algebraic_integer`].
pub fn is_algebraic_integer(x: &Cyclotomic) -> bool {
    x.is_algebraic_integer()
}

/// Reduction map; see [`PModularSystem::star`].
pub fn star(x: &Cyclotomic, sys: &PModularSystem) -> crate::error::Result<Fe> {
    sys.star(x)
}
