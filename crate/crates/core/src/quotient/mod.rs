//! Finite quotients `Ψ_k` of the homology representation: enumeration,
//! cosets of the liftable image, Schreier elements and maximality.

mod coset;
mod group;
mod maximal;

pub use coset::{
    coset_id, coset_index, coset_label, coset_rep_word, first_translation, schreier_check,
    second_translation, CosetIndex, CosetRep, CosetTable, SchreierElement,
};
pub use group::{
    adjoin_power_of_c, closure, closure_labeled, lmod_subgroup, mod_group, sl2_group, FiniteGroup,
};
pub use maximal::{
    is_maximal, is_maximal_with, smallest_prime_factor, twisted_rep_image, AdjoinMethod,
    Adjunction, IntermediateWitness, MaximalityReport,
};
