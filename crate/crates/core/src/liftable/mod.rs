//! Liftable mapping classes for the k-fold cyclic branched cover: finite
//! generating sets, an explicit basis of `ker Ψ`, constructive membership
//! and checks of word identities.

mod decompose;
mod identities;

pub use decompose::decompose_lmod;
pub use identities::{
    displayed_identities, eq1_identities, eq2_identities, prop42_identities, verify_identities,
    verify_identity, verify_prop42_reductions, Divergence, IdentityCheck, IdentityMode,
    IdentityReport, WordIdentity,
};

use std::fmt;

use crate::homology::{lift_test, Cover};
use crate::word::{Symbol, TwistWord};
use crate::Error;

/// Where a generating set comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `5 + (k-1)²` generators, valid for every k.
    Full,
    /// `{a, b, c^k, i}`, valid for k = 2, 3.
    Reduced,
    KernelBasis,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Full => "full",
            Provenance::Reduced => "reduced",
            Provenance::KernelBasis => "kernel-basis",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    pub cover: Cover,
    pub provenance: Provenance,
    pub members: Vec<(String, TwistWord)>,
}

impl GenSet {
    pub fn words(&self) -> impl Iterator<Item = &TwistWord> {
        self.members.iter().map(|(_, w)| w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Labels of members that fail the lift test (empty when sound).
    pub fn non_liftable(&self) -> Vec<&str> {
        self.members
            .iter()
            .filter(|(_, w)| !lift_test(w, self.cover))
            .map(|(l, _)| l.as_str())
            .collect()
    }
}

fn letter(symbol: Symbol, e: i64) -> TwistWord {
    TwistWord::letter(symbol, e)
}

/// The separating twist `(T_b T_c)^6`.
pub fn bc6() -> TwistWord {
    letter(Symbol::B, 1).mul(&letter(Symbol::C, 1)).pow(6)
}

fn base_generators(k: u32) -> Vec<(String, TwistWord)> {
    vec![
        ("a".into(), letter(Symbol::A, 1)),
        ("b".into(), letter(Symbol::B, 1)),
        (format!("c^{k}"), letter(Symbol::C, k.into())),
        ("i".into(), letter(Symbol::I, 1)),
    ]
}

/// `c^j b^i a (b c)^6 a^-1 b^-i c^-j`
pub fn conjugated_separating_twist(i: i64, j: i64) -> TwistWord {
    letter(Symbol::C, j)
        .mul(&letter(Symbol::B, i))
        .mul(&letter(Symbol::A, 1))
        .conjugate(&bc6())
}

/// The `5 + (k-1)²` generators `a, b, c^k, i, (b c)^6` and
/// `c^j b^i a (b c)^6 a^-1 b^-i c^-j` for `1 ≤ i, j < k` (i outer).
pub fn generating_set(k: u32) -> Result<GenSet, Error> {
    let cover = Cover::new(k)?;
    let mut members = base_generators(k);
    members.push(("(b c)^6".into(), bc6()));
    for i in 1..i64::from(k) {
        for j in 1..i64::from(k) {
            members.push((format!("g[{i},{j}]"), conjugated_separating_twist(i, j)));
        }
    }
    Ok(GenSet {
        cover,
        provenance: Provenance::Full,
        members,
    })
}

/// `{a, b, c^k, i}`, which generates the liftable subgroup for k = 2, 3.
pub fn reduced_generating_set(k: u32) -> Result<GenSet, Error> {
    let cover = Cover::new(k)?;
    if !(2..=3).contains(&k) {
        return Err(Error::UnsupportedReduced(k));
    }
    Ok(GenSet {
        cover,
        provenance: Provenance::Reduced,
        members: base_generators(k),
    })
}

/// Parameters `(m, n)` of a kernel basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelWordIndex {
    pub m: i64,
    pub n: i64,
}

impl fmt::Display for KernelWordIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// `b^-n c a^-1 b^n a^m (b c)^6 a^-m b^-n a c^-1 b^n`: the conjugate of the
/// separating twist `(b c)^6` by `b^-n c a^-1 b^n a^m`.
pub fn kernel_word(index: KernelWordIndex) -> TwistWord {
    let KernelWordIndex { m, n } = index;
    letter(Symbol::B, -n)
        .mul(&letter(Symbol::C, 1))
        .mul(&letter(Symbol::A, -1))
        .mul(&letter(Symbol::B, n))
        .mul(&letter(Symbol::A, m))
        .conjugate(&bc6())
}

/// Kernel basis words for `(m, n) ∈ [-window, window]²`, m outer, both
/// ascending.
pub fn kernel_basis(window: u32) -> Vec<(KernelWordIndex, TwistWord)> {
    let w = i64::from(window);
    (-w..=w)
        .flat_map(|m| (-w..=w).map(move |n| KernelWordIndex { m, n }))
        .map(|idx| (idx, kernel_word(idx)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::eval_psi;

    fn w(s: &str) -> TwistWord {
        s.parse().unwrap()
    }

    #[test]
    fn generating_set_sizes() {
        let g2 = generating_set(2).unwrap();
        assert_eq!(g2.len(), 6);
        assert_eq!(
            g2.members.last().unwrap().1,
            w("c b a (b c)^6 a^-1 b^-1 c^-1")
        );
        assert_eq!(generating_set(3).unwrap().len(), 9);
        assert_eq!(generating_set(5).unwrap().len(), 21);
        assert!(generating_set(1).is_err());
        for k in 2..=12 {
            let g = generating_set(k).unwrap();
            assert_eq!(g.len(), 5 + (k as usize - 1).pow(2));
            assert!(g.non_liftable().is_empty(), "k = {k}");
        }
    }

    #[test]
    fn reduced_sets() {
        let r2 = reduced_generating_set(2).unwrap();
        let words: Vec<_> = r2.words().cloned().collect();
        assert_eq!(words, vec![w("a"), w("b"), w("c^2"), w("i")]);
        let r3 = reduced_generating_set(3).unwrap();
        assert_eq!(r3.members[2].1, w("c^3"));
        assert!(r3.non_liftable().is_empty());
        assert_eq!(reduced_generating_set(4), Err(Error::UnsupportedReduced(4)));
    }

    #[test]
    fn kernel_words() {
        assert_eq!(
            kernel_word(KernelWordIndex { m: 0, n: 0 }),
            w("c a^-1 (b c)^6 a c^-1")
        );
        assert_eq!(
            kernel_word(KernelWordIndex { m: 1, n: 0 }),
            w("c (b c)^6 c^-1")
        );
        assert_eq!(
            kernel_word(KernelWordIndex { m: 2, n: -1 }),
            w("b c a^-1 b^-1 a^2 (b c)^6 a^-2 b a c^-1 b^-1")
        );
        let basis = kernel_basis(5);
        assert_eq!(basis.len(), 121);
        assert_eq!(basis[0].0, KernelWordIndex { m: -5, n: -5 });
        assert_eq!(basis[1].0, KernelWordIndex { m: -5, n: -4 });
        assert_eq!(basis[120].0, KernelWordIndex { m: 5, n: 5 });
        assert!(basis.iter().all(|(_, word)| eval_psi(word).is_identity()));
        assert_eq!(kernel_basis(0).len(), 1);
    }
}
