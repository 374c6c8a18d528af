use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::MembershipError;
use crate::homology::{check_image_lmod, Cover};
use crate::matrix::ExactMat3;
use crate::sl2::{gcd_sl2, sl2_decompose, sl2_embed};
use crate::word::{Symbol, TwistWord};

/// Writes a matrix of `Ψ(LMod_{p_k})` as a word in `a`, `b`, `c^k`, `i`.
///
/// With `X = [[A, 0], [v, ε]]`:
/// 1. if `ε = -1`, peel off `i` (whose image is `-I`);
/// 2. pick `B ∈ SL₂(ℤ)` with `vB = (0, ℓ)`, so `k | ℓ`;
/// 3. right-multiplying by `Ψ(c^-ℓ)` clears the offset, leaving `[[C, 0], [0, 1]]`;
/// 4. factor `C` and `B⁻¹` over `a`, `b`.
///
/// Then `X = Ψ(i)^{0|1} · Ψ(w_C) · Ψ(c^ℓ) · Ψ(w_{B⁻¹})`. The result is some
/// witness, not a canonical one.
pub fn decompose_lmod(x: &ExactMat3, cover: Cover) -> Result<TwistWord, MembershipError> {
    let form = check_image_lmod(x, cover)?;
    let mut word = TwistWord::empty();
    let (a, v) = if form.sign < 0 {
        word = TwistWord::letter(Symbol::I, 1);
        (form.a.neg(), [-&form.v[0], -&form.v[1]])
    } else {
        (form.a, form.v)
    };

    let (ell, b) = gcd_sl2(&v[0], &v[1]);
    debug_assert!((&ell % BigInt::from(cover.degree())).is_zero());
    // (A·B) · [[1, -ℓ], [0, 1]] is the block left after clearing the offset.
    let ab = &a * &b;
    let shear = crate::sl2::Sl2Gen::SA.power(&-&ell);
    let c_block = &ab * &shear;

    let c_word = sl2_decompose(&c_block).expect("product of SL2 matrices");
    let b_inv_word = sl2_decompose(&b.inverse().expect("gcd_sl2 returns SL2"))
        .expect("inverse of an SL2 matrix");
    let ell = ell.to_i64().expect("offset gcd exceeds i64 exponent range");

    word = word
        .mul(&sl2_embed(&c_word))
        .mul(&TwistWord::letter(Symbol::C, ell))
        .mul(&sl2_embed(&b_inv_word));
    Ok(word)
}
