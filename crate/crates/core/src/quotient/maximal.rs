//! Maximality of `Ψ_k(LMod)` in `Ψ_k(Mod)`.
//!
//! A subgroup `H` of index `n` with coset representatives `1 = g₁, …, gₙ`
//! is maximal iff `⟨H, gᵢ⟩` is the whole group for every `i ≥ 2`. Each
//! `⟨H, gᵢ⟩` contains `H`, so it is a union of right `H`-cosets and its
//! order is `|H|` times the size of the orbit of the trivial coset under
//! its generators.

use crate::homology::eval_psi_mod;
use crate::quotient::coset::CosetTable;
use crate::quotient::group::{adjoin_power_of_c, closure_labeled, lmod_subgroup, mod_group};
use crate::word::{Symbol, TwistWord};
use crate::Error;

/// How `⟨H, h⟩` is sized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AdjoinMethod {
    /// Orbit of the trivial coset in the coset table.
    #[default]
    CosetOrbit,
    /// Element-level closure of the generators of `H` together with `h`.
    FullClosure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub m: u32,
    pub n: u32,
    /// `|⟨H, h_{m,n}⟩|`
    pub order: usize,
}

/// The intermediate subgroup generated by the images of `a, b, c^ℓ, i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateWitness {
    pub ell: u32,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub k: u32,
    pub maximal: bool,
    pub lmod_order: usize,
    pub mod_order: usize,
    /// One entry per non-trivial coset representative, in table order.
    pub adjunctions: Vec<Adjunction>,
    /// Present when k is composite.
    pub witness: Option<IntermediateWitness>,
}

impl MaximalityReport {
    pub fn proper_adjunctions(&self) -> impl Iterator<Item = &Adjunction> {
        self.adjunctions
            .iter()
            .filter(move |a| a.order != self.mod_order)
    }

    /// `|H| < |K| < |G|` and `|K|` divides `|G|`.
    pub fn witness_is_strict(&self) -> bool {
        self.witness.as_ref().is_some_and(|w| {
            self.lmod_order < w.order
                && w.order < self.mod_order
                && self.mod_order.is_multiple_of(w.order)
        })
    }
}

pub fn smallest_prime_factor(k: u32) -> u32 {
    (2..=k)
        .take_while(|d| d * d <= k)
        .find(|d| k.is_multiple_of(*d))
        .unwrap_or(k)
}

pub fn is_maximal(k: u32) -> Result<MaximalityReport, Error> {
    is_maximal_with(k, AdjoinMethod::CosetOrbit)
}

pub fn is_maximal_with(k: u32, method: AdjoinMethod) -> Result<MaximalityReport, Error> {
    let table = CosetTable::build(k)?;
    let h = lmod_subgroup(k)?;
    let g = mod_group(k)?;
    let h_gens: Vec<_> = h.generators().iter().map(|(_, m)| *m).collect();

    let mut adjunctions = Vec::with_capacity(table.len() - 1);
    for rep in &table.reps[1..] {
        let order = match method {
            AdjoinMethod::CosetOrbit => {
                let mut gens = h_gens.clone();
                gens.push(rep.image);
                h.order() * table.orbit_of_trivial(&gens)
            }
            AdjoinMethod::FullClosure => {
                let mut gens = h.generators().to_vec();
                gens.push((format!("h[{},{}]", rep.m, rep.n), rep.image));
                closure_labeled(gens)?.order()
            }
        };
        adjunctions.push(Adjunction {
            m: rep.m,
            n: rep.n,
            order,
        });
    }
    let maximal = adjunctions.iter().all(|a| a.order == g.order());

    let ell = smallest_prime_factor(k);
    let witness = if ell < k {
        Some(IntermediateWitness {
            ell,
            order: adjoin_power_of_c(k, ell)?.order(),
        })
    } else {
        None
    };

    Ok(MaximalityReport {
        k,
        maximal,
        lmod_order: h.order(),
        mod_order: g.order(),
        adjunctions,
        witness,
    })
}

/// `Ψ_k(c^m b c^n)`, which generates `⟨H, h_{m,n}⟩` together with `H`.
pub fn twisted_rep_image(m: i64, n: i64, k: u32) -> crate::matrix::ResidueMat3 {
    let w = TwistWord::letter(Symbol::C, m)
        .mul(&TwistWord::letter(Symbol::B, 1))
        .mul(&TwistWord::letter(Symbol::C, n));
    eval_psi_mod(&w, k).expect("k >= 2")
}
