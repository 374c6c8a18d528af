//! The homology representation `Ψ: Mod(S_{1,2}) → GL_3(ℤ)` and its
//! reductions modulo k.
//!
//! Matrices act on row vectors, so `Ψ(xy) = Ψ(x)·Ψ(y)` and a word is
//! evaluated left to right. Every image has the block shape
//!
//! ```text
//! [ A  0 ]
//! [ v  ε ]     A ∈ SL₂(ℤ), v = (m, n), ε = ±1
//! ```
//!
//! and lies in the image of the liftable subgroup for the k-fold cover iff
//! `k | m` and `k | n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, MembershipError, ShapeError};
use crate::matrix::{ExactMat2, ExactMat3, ResidueMat3};
use crate::word::{Symbol, TwistWord};

/// The k-fold cyclic branched cover of the twice-marked torus, defined by
/// the functional `n₁c₁ + n₂c₂ + n₃c₃ ↦ n₃ (mod k)` on first homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    k: u32,
}

impl Cover {
    pub fn new(k: u32) -> Result<Cover, crate::Error> {
        if k < 2 {
            return Err(crate::Error::BadDegree(k));
        }
        Ok(Cover { k })
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Coefficients of the defining functional on `(c₁, c₂, c₃)`.
    pub fn functional(&self) -> [u32; 3] {
        [0, 0, 1]
    }
}

/// `Ψ(x^e)` for a single symbol.
pub fn symbol_power(symbol: Symbol, e: i64) -> ExactMat3 {
    match symbol {
        Symbol::A => ExactMat3::from_i64([[1, e, 0], [0, 1, 0], [0, 0, 1]]),
        Symbol::B => ExactMat3::from_i64([[1, 0, 0], [-e, 1, 0], [0, 0, 1]]),
        Symbol::C => ExactMat3::from_i64([[1, e, 0], [0, 1, 0], [0, e, 1]]),
        Symbol::I => ExactMat3::scalar(if e % 2 == 0 { 1 } else { -1 }),
    }
}

pub fn generator(symbol: Symbol) -> ExactMat3 {
    symbol_power(symbol, 1)
}

pub fn eval_psi(word: &TwistWord) -> ExactMat3 {
    word.syllables()
        .iter()
        .fold(ExactMat3::identity(), |acc, s| {
            &acc * &symbol_power(s.symbol, s.exp)
        })
}

fn residue_power(symbol: Symbol, e: i64, k: u32) -> ResidueMat3 {
    let kk = i64::from(k);
    let e = e.rem_euclid(kk);
    let rows = match symbol {
        Symbol::A => [[1, e, 0], [0, 1, 0], [0, 0, 1]],
        Symbol::B => [[1, 0, 0], [kk - e, 1, 0], [0, 0, 1]],
        Symbol::C => [[1, e, 0], [0, 1, 0], [0, e, 1]],
        Symbol::I => {
            let s = if e % 2 == 0 { 1 } else { kk - 1 };
            [[s, 0, 0], [0, s, 0], [0, 0, s]]
        }
    };
    ResidueMat3::new(k, rows).expect("modulus checked by caller")
}

/// `Ψ_k(x)` for a single generator.
pub fn generator_mod(symbol: Symbol, k: u32) -> Result<ResidueMat3, AlgebraError> {
    eval_psi_mod(&TwistWord::letter(symbol, 1), k)
}

/// `Ψ_k(w)`, computed directly over ℤ/k.
pub fn eval_psi_mod(word: &TwistWord, k: u32) -> Result<ResidueMat3, AlgebraError> {
    if k < 2 {
        return Err(AlgebraError::BadModulus(k.into()));
    }
    // i has order 2 as a matrix, so reduce its exponent mod 2 before mod k.
    Ok(word
        .syllables()
        .iter()
        .fold(ResidueMat3::identity(k), |acc, s| {
            let e = if s.symbol == Symbol::I {
                s.exp.rem_euclid(2)
            } else {
                s.exp
            };
            acc * residue_power(s.symbol, e, k)
        }))
}

/// The decomposition `[[A, 0], [v, ε]]` of an image matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub a: ExactMat2,
    pub v: [BigInt; 2],
    pub sign: i8,
}

impl BlockForm {
    pub fn to_matrix(&self) -> ExactMat3 {
        let a = self.a.rows();
        let z = BigInt::zero();
        ExactMat3::from_rows([
            [a[0][0].clone(), a[0][1].clone(), z.clone()],
            [a[1][0].clone(), a[1][1].clone(), z],
            [
                self.v[0].clone(),
                self.v[1].clone(),
                BigInt::from(self.sign),
            ],
        ])
    }

    /// True iff `k` divides both offset entries.
    pub fn offset_divisible_by(&self, k: u32) -> bool {
        let k = BigInt::from(k);
        self.v.iter().all(|x| x.is_multiple_of(&k))
    }
}

pub fn block_form(m: &ExactMat3) -> Result<BlockForm, ShapeError> {
    if !m.get(0, 2).is_zero() || !m.get(1, 2).is_zero() {
        return Err(ShapeError::ThirdColumn(
            m.get(0, 2).to_string(),
            m.get(1, 2).to_string(),
        ));
    }
    let corner = m.get(2, 2);
    if !corner.abs().is_one() {
        return Err(ShapeError::Corner(corner.to_string()));
    }
    let a = ExactMat2::from_rows([
        [m.get(0, 0).clone(), m.get(0, 1).clone()],
        [m.get(1, 0).clone(), m.get(1, 1).clone()],
    ]);
    let det = a.det();
    if !det.is_one() {
        return Err(ShapeError::BlockDeterminant(det.to_string()));
    }
    Ok(BlockForm {
        a,
        v: [m.get(2, 0).clone(), m.get(2, 1).clone()],
        sign: if corner.is_positive() { 1 } else { -1 },
    })
}

pub fn in_image_mod(m: &ExactMat3) -> bool {
    block_form(m).is_ok()
}

/// Membership in `Ψ(LMod_{p_k})`, with the failing condition on error.
/// Divisibility is tested on the exact integers.
pub fn check_image_lmod(m: &ExactMat3, cover: Cover) -> Result<BlockForm, MembershipError> {
    let form = block_form(m)?;
    if !form.offset_divisible_by(cover.degree()) {
        return Err(MembershipError::Offset {
            m: form.v[0].to_string(),
            n: form.v[1].to_string(),
            k: cover.degree(),
        });
    }
    Ok(form)
}

pub fn in_image_lmod(m: &ExactMat3, cover: Cover) -> bool {
    check_image_lmod(m, cover).is_ok()
}

pub fn lift_test(word: &TwistWord, cover: Cover) -> bool {
    in_image_lmod(&eval_psi(word), cover)
}
