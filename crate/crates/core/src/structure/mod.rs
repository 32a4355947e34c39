//! Conjugacy classes, Sylow subgroups, p-cores, derived series and the
//! cycle-type machinery for alternating groups.

mod alternating;
mod classes;
mod subgroups;

pub use alternating::{
    alternating_classes, alternating_power_conjugate, partitions, AltClassDescriptor,
};
pub use classes::{are_conjugate, conjugacy_classes, power_class, ClassTable};
pub use subgroups::{
    abelianization_exponent_divides, derived_series, derived_subgroup, exponent,
    is_elementary_abelian, is_p_group, is_solvable, normalizer, p_core, sylow,
    sylow_containing, Subgroup,
};
