//! Constructive SL₂(ℤ): row reduction of a vector to `(0, gcd)` and
//! factorisation into powers of `SA = [[1,1],[0,1]]` and `SB = [[1,0],[-1,1]]`,
//! the upper-left blocks of `Ψ(T_a)` and `Ψ(T_b)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::matrix::ExactMat2;
use crate::word::{Syllable, Symbol, TwistWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Gen {
    SA,
    SB,
}

impl Sl2Gen {
    pub fn power(self, e: &BigInt) -> ExactMat2 {
        let z = BigInt::zero();
        let o = BigInt::one();
        match self {
            Sl2Gen::SA => ExactMat2::from_rows([[o.clone(), e.clone()], [z, o]]),
            Sl2Gen::SB => ExactMat2::from_rows([[o.clone(), z], [-e, o]]),
        }
    }

    fn symbol(self) -> Symbol {
        match self {
            Sl2Gen::SA => Symbol::A,
            Sl2Gen::SB => Symbol::B,
        }
    }
}

/// A freely reduced word in `SA`, `SB`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sl2Word {
    syllables: Vec<(Sl2Gen, i64)>,
}

impl Sl2Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_syllables<I: IntoIterator<Item = (Sl2Gen, i64)>>(iter: I) -> Self {
        let mut w = Self::empty();
        for (g, e) in iter {
            w.push(g, e);
        }
        w
    }

    pub fn push(&mut self, gen: Sl2Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((g, x)) if *g == gen => {
                *x = x.checked_add(e).expect("SL2 word exponent overflowed i64");
                if *x == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((gen, e)),
        }
    }

    pub fn append(&mut self, other: &Sl2Word) {
        for &(g, e) in &other.syllables {
            self.push(g, e);
        }
    }

    pub fn syllables(&self) -> &[(Sl2Gen, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn eval(&self) -> ExactMat2 {
        self.syllables
            .iter()
            .fold(ExactMat2::identity(), |acc, (g, e)| {
                &acc * &g.power(&BigInt::from(*e))
            })
    }

    pub fn inverse(&self) -> Sl2Word {
        Sl2Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }
}

impl fmt::Display for Sl2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (idx, (g, e)) in self.syllables.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            let name = match g {
                Sl2Gen::SA => "SA",
                Sl2Gen::SB => "SB",
            };
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Returns `(ℓ, A)` with `ℓ = gcd(m, n) ≥ 0`, `det A = 1` and
/// `(m, n)·A = (0, ℓ)`.
///
/// `A = [[n/ℓ, r], [-m/ℓ, s]]` where `mr + ns = ℓ`; among all Bézout pairs
/// the one with the smallest `|r|` is used, then the smallest `|s|`, then
/// non-negative `r`. For `(0, 0)` the result is `(0, I)`.
pub fn gcd_sl2(m: &BigInt, n: &BigInt) -> (BigInt, ExactMat2) {
    if m.is_zero() && n.is_zero() {
        return (BigInt::zero(), ExactMat2::identity());
    }
    let eg = m.extended_gcd(n);
    let (ell, r0, s0) = if eg.gcd.is_negative() {
        (-eg.gcd, -eg.x, -eg.y)
    } else {
        (eg.gcd, eg.x, eg.y)
    };
    let step_r = n / &ell;
    let step_s = -(m / &ell);
    // r(t) = r0 + t·step_r, s(t) = s0 + t·step_s
    let pivot = if !step_r.is_zero() {
        (-&r0).div_floor(&step_r)
    } else {
        (-&s0).div_floor(&step_s)
    };
    let key = |t: &BigInt| {
        let r = &r0 + t * &step_r;
        let s = &s0 + t * &step_s;
        (r.abs(), s.abs(), r.is_negative(), s.is_negative())
    };
    let best = (-1..=2)
        .map(|d| &pivot + BigInt::from(d))
        .min_by_key(|t| key(t))
        .expect("candidate set is non-empty");
    let r = &r0 + &best * &step_r;
    let s = &s0 + &best * &step_s;
    let a = ExactMat2::from_rows([[n / &ell, r], [-(m / &ell), s]]);
    (ell, a)
}

fn small(x: &BigInt) -> i64 {
    x.to_i64()
        .expect("Euclidean quotient exceeds i64; entries are far beyond practical range")
}

/// Factorises an SL₂(ℤ) matrix as a word in `SA`, `SB`.
///
/// Euclidean reduction of the first column: `SA` powers reduce the top
/// entry modulo the bottom one, `SB` powers the bottom modulo the top,
/// until the bottom entry vanishes. What remains is `±SA^q`, and `-I` is
/// written as `(SA SB SA)^2`.
pub fn sl2_decompose(c: &ExactMat2) -> Result<Sl2Word, AlgebraError> {
    if !c.is_sl2() {
        return Err(AlgebraError::NotSl2 {
            det: c.det().to_string(),
        });
    }
    let [[mut p, mut q], [mut r, mut s]] = c.rows().clone();
    // c = word · [[p, q], [r, s]]
    let mut word = Sl2Word::empty();
    while !r.is_zero() {
        if p.is_zero() {
            // r = ±1 here; SA^(-r) turns the top entry into r² = 1.
            let t = -&r;
            p -= &t * &r;
            q -= &t * &s;
            word.push(Sl2Gen::SA, small(&t));
        } else if r.abs() >= p.abs() {
            let u = &r / &p;
            r -= &u * &p;
            s -= &u * &q;
            word.push(Sl2Gen::SB, -small(&u));
        } else {
            let t = &p / &r;
            p -= &t * &r;
            q -= &t * &s;
            word.push(Sl2Gen::SA, small(&t));
        }
    }
    // [[p, q], [0, p]] with p = ±1
    if p.is_negative() {
        word.append(&minus_identity());
        q = -q;
    }
    word.push(Sl2Gen::SA, small(&q));
    Ok(word)
}

/// `(SA SB SA)^2 = -I`.
pub fn minus_identity() -> Sl2Word {
    Sl2Word::from_syllables([
        (Sl2Gen::SA, 1),
        (Sl2Gen::SB, 1),
        (Sl2Gen::SA, 1),
        (Sl2Gen::SA, 1),
        (Sl2Gen::SB, 1),
        (Sl2Gen::SA, 1),
    ])
}

/// `SA ↦ a`, `SB ↦ b`.
pub fn sl2_embed(word: &Sl2Word) -> TwistWord {
    TwistWord::from_syllables(
        word.syllables
            .iter()
            .map(|&(g, e)| Syllable::new(g.symbol(), e)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{block_form, eval_psi};

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// Independent Bézout oracle: brute-force search over small r.
    fn brute_gcd(m: i64, n: i64) -> i64 {
        (1..=m.abs().max(n.abs()))
            .rev()
            .find(|d| m % d == 0 && n % d == 0)
            .unwrap_or(0)
    }

    #[test]
    fn gcd_examples() {
        let (l, a) = gcd_sl2(&bi(1), &bi(0));
        assert_eq!(l, bi(1));
        assert_eq!(a, ExactMat2::from_i64([[0, 1], [-1, 0]]));

        let (l, a) = gcd_sl2(&bi(0), &bi(5));
        assert_eq!(l, bi(5));
        assert_eq!(a, ExactMat2::identity());

        let (l, a) = gcd_sl2(&bi(6), &bi(4));
        assert_eq!(l, bi(2));
        assert_eq!(a, ExactMat2::from_i64([[2, 1], [-3, -1]]));

        let (l, a) = gcd_sl2(&bi(0), &bi(0));
        assert_eq!(l, bi(0));
        assert_eq!(a, ExactMat2::identity());
    }

    #[test]
    fn gcd_against_brute_force() {
        for m in -12i64..=12 {
            for n in -12i64..=12 {
                let (l, a) = gcd_sl2(&bi(m), &bi(n));
                assert_eq!(l, bi(brute_gcd(m, n)), "({m},{n})");
                assert!(a.is_sl2());
                assert_eq!(a.apply_row(&[bi(m), bi(n)]), [bi(0), l.clone()]);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert!(sl2_decompose(&ExactMat2::identity()).unwrap().is_empty());
        assert_eq!(
            sl2_decompose(&ExactMat2::from_i64([[0, 1], [-1, 1]])).unwrap(),
            Sl2Word::from_syllables([(Sl2Gen::SA, 1), (Sl2Gen::SB, 1)])
        );
        let neg = ExactMat2::identity().neg();
        assert_eq!(sl2_decompose(&neg).unwrap(), minus_identity());
        assert_eq!(minus_identity().eval(), neg);
        assert!(sl2_decompose(&ExactMat2::from_i64([[2, 0], [0, 1]])).is_err());
    }

    #[test]
    fn decompose_large_entries() {
        // Fibonacci-like growth: (SA SB^-1)^200
        let mut w = Sl2Word::empty();
        for _ in 0..200 {
            w.push(Sl2Gen::SA, 1);
            w.push(Sl2Gen::SB, -1);
        }
        let target = w.eval();
        assert!(target.get(0, 0).bits() > 100);
        let d = sl2_decompose(&target).unwrap();
        assert_eq!(d.eval(), target);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(
            sl2_embed(&Sl2Word::from_syllables([(Sl2Gen::SA, 2)])),
            "a^2".parse().unwrap()
        );
        assert!(sl2_embed(&Sl2Word::empty()).is_empty());
        let w = Sl2Word::from_syllables([(Sl2Gen::SA, 1), (Sl2Gen::SB, -1)]);
        let t = sl2_embed(&w);
        assert_eq!(t, "a b^-1".parse().unwrap());
        let f = block_form(&eval_psi(&t)).unwrap();
        assert_eq!(f.a, w.eval());
        assert_eq!(f.v, [bi(0), bi(0)]);
        assert_eq!(f.sign, 1);
    }
}
