//! Modules over restricted enveloping algebras and the operations on them.

mod constructors;
mod diagram;
mod io;
mod module;
mod ops;

pub use constructors::{
    adjoint_nilradical, character, frobenius_twist_trivial, graded_pim, natural_sl3, pim_index_for_weight, pim_module, simple_module,
    weyl_sl2,
};
pub use diagram::{parse_dot, WeightDiagram};
pub use io::{AlgebraRef, ModuleFile};
pub use module::ModuleRep;
pub use ops::{direct_sum, dual, restrict, shift, tensor, tensor_power, twist};
