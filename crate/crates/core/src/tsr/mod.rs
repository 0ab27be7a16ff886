//! Trivial source ring level: the pair set `T_p(G)`, β on virtual G-sets,
//! the coherence condition, species, duality, the Yoshida test and the orthogonal unit
//! group assembled from `B(F)^×` and coherent homomorphism tuples.

mod classfn;
mod cyclotomic;
mod otu;
mod pairs;
mod species;

pub use classfn::{
    beta_of_gset, check_condition_c, is_signed_linear_character, is_subconjugate, ClassFunction,
    ConditionViolation,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt};
pub use otu::{
    orthogonal_unit_group, species_of_tuple, CoherentGeneratorEntry, FusedUnitEntry,
    OrthogonalUnitGroup, OrthogonalUnitGroupReport,
};
pub use pairs::{pairs_tpg, Pair, PairsTpG};
pub use species::{
    class_functions_from_species, dual_class_functions, species_of_gset, yoshida_check,
    SpeciesTuple, YoshidaVerdict, YoshidaWitness,
};
