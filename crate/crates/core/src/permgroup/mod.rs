//! Permutation groups with fully enumerated elements: conjugacy, subgroup
//! lattices up to conjugacy, normalizers, quotients by coset tables and
//! p'-abelianizations.

mod abelian;
mod group;
mod lattice;
mod local;
mod permutation;
mod quotient;

pub use abelian::AbelianStructure;
pub use group::{
    group_from_generators, group_from_generators_capped, is_prime, is_prime_power_of,
    mod_inverse, split_prime_power, CayleyTable, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP,
};
pub use lattice::{
    all_subgroup_classes, p_subgroup_classes, prime_divisors, sylow_class, SubgroupClass,
    SubgroupClasses, LATTICE_WARN_ORDER,
};
pub use local::{LocalQuotient, PLocalSystem, Transported};
pub use permutation::Permutation;
pub use quotient::{pprime_abelianization, quotient, Abelianization, QuotientGroup};

/// Conjugacy classes of `g` as `(representative, members)`, ordered by
/// `(class size, representative)`; the representative is the smallest member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<(usize, Vec<usize>)> {
    g.table()
        .conjugacy_classes()
        .into_iter()
        .map(|c| (c[0], c))
        .collect()
}
