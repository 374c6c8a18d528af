use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use rayon::prelude::*;

use crate::error::QuotientError;
use crate::homology::eval_psi_mod;
use crate::matrix::{ResidueMat3, MAX_PACKED_MODULUS};
use crate::word::{Symbol, TwistWord};

/// Multiplicative hasher for packed matrix keys.
#[derive(Default)]
pub(crate) struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ u64::from(b)).wrapping_mul(0x100_0000_01b3);
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (x ^ (x >> 29)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }
}

pub(crate) type KeyMap<V> = HashMap<u64, V, BuildHasherDefault<KeyHasher>>;

/// A finite matrix group over ℤ/k, fully enumerated.
///
/// Elements are listed in breadth-first order from the identity, right
/// multiplying by the generators and their inverses in a fixed order, so the
/// listing is reproducible regardless of thread count.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    modulus: u32,
    generators: Vec<(String, ResidueMat3)>,
    elements: Vec<ResidueMat3>,
    index: KeyMap<u32>,
}

impl FiniteGroup {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[(String, ResidueMat3)] {
        &self.generators
    }

    pub fn elements(&self) -> &[ResidueMat3] {
        &self.elements
    }

    pub fn contains(&self, m: &ResidueMat3) -> bool {
        m.modulus() == self.modulus && self.index.contains_key(&m.key())
    }

    pub fn position(&self, m: &ResidueMat3) -> Option<usize> {
        if m.modulus() != self.modulus {
            return None;
        }
        self.index.get(&m.key()).map(|&i| i as usize)
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }
}

/// Enumerates the group generated by unlabeled matrices.
pub fn closure(generators: &[ResidueMat3]) -> Result<FiniteGroup, QuotientError> {
    let labeled: Vec<(String, ResidueMat3)> = generators
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i}"), *g))
        .collect();
    closure_labeled(labeled)
}

pub fn closure_labeled(
    generators: Vec<(String, ResidueMat3)>,
) -> Result<FiniteGroup, QuotientError> {
    let first = generators.first().ok_or(QuotientError::NoGenerators)?;
    let modulus = first.1.modulus();
    if modulus > MAX_PACKED_MODULUS {
        return Err(QuotientError::ModulusTooLarge(modulus));
    }
    let mut multipliers: Vec<ResidueMat3> = Vec::new();
    for (idx, (_, g)) in generators.iter().enumerate() {
        if g.modulus() != modulus {
            return Err(QuotientError::ModulusMismatch(modulus, g.modulus()));
        }
        let inv = g.inverse().ok_or(QuotientError::NotInvertible {
            index: idx,
            modulus,
        })?;
        for m in [*g, inv] {
            if !multipliers.contains(&m) {
                multipliers.push(m);
            }
        }
    }

    let identity = ResidueMat3::identity(modulus);
    let mut elements = vec![identity];
    let mut index: KeyMap<u32> = KeyMap::default();
    index.insert(identity.key(), 0);
    let mut frontier = 0..1;
    while !frontier.is_empty() {
        let products: Vec<ResidueMat3> = elements[frontier.clone()]
            .par_iter()
            .flat_map_iter(|e| multipliers.iter().map(move |g| *e * *g))
            .collect();
        let start = elements.len();
        for p in products {
            let next = elements.len() as u32;
            index.entry(p.key()).or_insert_with(|| {
                elements.push(p);
                next
            });
        }
        frontier = start..elements.len();
    }
    Ok(FiniteGroup {
        modulus,
        generators,
        elements,
        index,
    })
}

fn images(words: &[(&str, TwistWord)], k: u32) -> Vec<(String, ResidueMat3)> {
    words
        .iter()
        .map(|(l, w)| {
            let m = eval_psi_mod(w, k).expect("modulus validated by caller");
            (l.to_string(), m)
        })
        .collect()
}

fn check_modulus(k: u32) -> Result<(), crate::Error> {
    if k < 2 {
        return Err(crate::Error::BadDegree(k));
    }
    Ok(())
}

/// `Ψ_k(Mod(S_{1,2}))`, generated by the images of `a, b, c, i`.
pub fn mod_group(k: u32) -> Result<FiniteGroup, crate::Error> {
    adjoin_power_of_c(k, 1)
}

/// `Ψ_k(LMod_{p_k})`, generated by the images of `a, b, c^k, i`.
pub fn lmod_subgroup(k: u32) -> Result<FiniteGroup, crate::Error> {
    adjoin_power_of_c(k, k)
}

/// The image mod k of the group generated by `a, b, c^ell, i`.
pub fn adjoin_power_of_c(k: u32, ell: u32) -> Result<FiniteGroup, crate::Error> {
    check_modulus(k)?;
    let words = [
        ("a", TwistWord::letter(Symbol::A, 1)),
        ("b", TwistWord::letter(Symbol::B, 1)),
        ("c", TwistWord::letter(Symbol::C, ell.into())),
        ("i", TwistWord::letter(Symbol::I, 1)),
    ];
    let mut gens = images(&words, k);
    if ell != 1 {
        gens[2].0 = format!("c^{ell}");
    }
    Ok(closure_labeled(gens)?)
}

/// `SL₂(ℤ/k)` embedded block-diagonally, generated by the blocks of
/// `Ψ(T_a)` and `Ψ(T_b)`.
pub fn sl2_group(k: u32) -> Result<FiniteGroup, crate::Error> {
    check_modulus(k)?;
    let words = [
        ("SA", TwistWord::letter(Symbol::A, 1)),
        ("SB", TwistWord::letter(Symbol::B, 1)),
    ];
    Ok(closure_labeled(images(&words, k))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(k: u32, rows: [[i64; 3]; 3]) -> ResidueMat3 {
        ResidueMat3::new(k, rows).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = closure(&[ResidueMat3::identity(5)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn small_orders() {
        assert_eq!(mod_group(3).unwrap().order(), 432);
        assert_eq!(mod_group(2).unwrap().order(), 24);
        assert_eq!(lmod_subgroup(3).unwrap().order(), 48);
        assert_eq!(lmod_subgroup(2).unwrap().order(), 6);
        assert_eq!(sl2_group(3).unwrap().order(), 24);
    }

    #[test]
    fn closure_is_closed() {
        let g = mod_group(3).unwrap();
        for x in g.elements().iter().step_by(7) {
            for y in g.elements().iter().step_by(11) {
                assert!(g.contains(&(*x * *y)));
            }
            assert!(g.contains(&x.inverse().unwrap()));
        }
        assert_eq!(g.position(&ResidueMat3::identity(3)), Some(0));
    }

    #[test]
    fn lmod_offsets_vanish() {
        for k in 2..=6 {
            let h = lmod_subgroup(k).unwrap();
            assert!(h
                .elements()
                .iter()
                .all(|e| e.get(2, 0) == 0 && e.get(2, 1) == 0));
            assert!(h.is_subgroup_of(&mod_group(k).unwrap()));
            let c = eval_psi_mod(&TwistWord::letter(Symbol::C, 1), k).unwrap();
            assert!(!h.contains(&c));
        }
    }

    #[test]
    fn closure_errors() {
        assert!(matches!(closure(&[]), Err(QuotientError::NoGenerators)));
        assert_eq!(
            closure(&[ResidueMat3::identity(3), ResidueMat3::identity(4)]).unwrap_err(),
            QuotientError::ModulusMismatch(3, 4)
        );
        assert_eq!(
            closure(&[r(4, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])]).unwrap_err(),
            QuotientError::NotInvertible {
                index: 0,
                modulus: 4
            }
        );
        assert_eq!(
            closure(&[ResidueMat3::identity(200)]).unwrap_err(),
            QuotientError::ModulusTooLarge(200)
        );
    }

    #[test]
    fn deterministic_order() {
        let x = mod_group(4).unwrap();
        let y = mod_group(4).unwrap();
        assert_eq!(x.elements(), y.elements());
    }
}
