//! Right cosets of `H = Ψ_k(LMod)` in `G = Ψ_k(Mod)`.
//!
//! For `g = [[A, 0], [v, ε]]` the coset `Hg` is determined by `ε·v mod k`,
//! so there are `k²` cosets. Coset `(m, n)` (numbered `m·k + n`) is
//! represented by `h_{m,n} = (b^-1 a^-1 c b)^m (a^-1 c)^n`, whose image has
//! identity block and offset `(-m, m + n)`.

use rayon::prelude::*;

use crate::homology::{check_image_lmod, eval_psi, eval_psi_mod, Cover};
use crate::liftable::decompose_lmod;
use crate::matrix::ResidueMat3;
use crate::quotient::group::{lmod_subgroup, mod_group};
use crate::word::{Symbol, TwistWord};
use crate::Error;

/// `b^-1 a^-1 c b`, image offset `(-1, 1)`.
pub fn first_translation() -> TwistWord {
    "b^-1 a^-1 c b".parse().expect("valid word")
}

/// `a^-1 c`, image offset `(0, 1)`.
pub fn second_translation() -> TwistWord {
    "a^-1 c".parse().expect("valid word")
}

pub fn coset_rep_word(m: u32, n: u32) -> TwistWord {
    first_translation()
        .pow(m.into())
        .mul(&second_translation().pow(n.into()))
}

/// The label `ε·v mod k` of the right coset containing `g`.
pub fn coset_label(g: &ResidueMat3) -> (u32, u32) {
    let k = g.modulus();
    let flip = |x: u32| if g.get(2, 2) == 1 { x } else { (k - x) % k };
    (flip(g.get(2, 0)), flip(g.get(2, 1)))
}

/// Coset id of a label: solves `(-m, m + n) = label`.
pub fn coset_id(label: (u32, u32), k: u32) -> usize {
    let m = (k - label.0) % k;
    let n = (label.0 + label.1) % k;
    (m * k + n) as usize
}

pub fn ambient_generators() -> [(Symbol, TwistWord); 4] {
    Symbol::ALL.map(|s| (s, TwistWord::letter(s, 1)))
}

#[derive(Clone, Debug)]
pub struct CosetRep {
    pub m: u32,
    pub n: u32,
    pub word: TwistWord,
    pub image: ResidueMat3,
}

#[derive(Clone, Debug)]
pub struct CosetTable {
    pub k: u32,
    pub reps: Vec<CosetRep>,
    /// Generator symbols, in column order of `action`.
    pub generators: Vec<Symbol>,
    /// `action[coset][gen]` is the coset of `rep(coset) · gen`.
    pub action: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn build(k: u32) -> Result<CosetTable, Error> {
        Cover::new(k)?;
        let mut reps = Vec::with_capacity((k * k) as usize);
        for m in 0..k {
            for n in 0..k {
                let word = coset_rep_word(m, n);
                let image = eval_psi_mod(&word, k)?;
                reps.push(CosetRep { m, n, word, image });
            }
        }
        let gens = ambient_generators();
        let gen_images: Vec<ResidueMat3> = gens
            .iter()
            .map(|(_, w)| eval_psi_mod(w, k))
            .collect::<Result<_, _>>()?;
        let action = reps
            .iter()
            .map(|r| {
                gen_images
                    .iter()
                    .map(|g| coset_id(coset_label(&(r.image * *g)), k))
                    .collect()
            })
            .collect();
        Ok(CosetTable {
            k,
            reps,
            generators: gens.iter().map(|(s, _)| *s).collect(),
            action,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coset of `rep(coset) · g` for an arbitrary element `g` of `G`.
    pub fn act(&self, coset: usize, g: &ResidueMat3) -> usize {
        coset_id(coset_label(&(self.reps[coset].image * *g)), self.k)
    }

    /// True iff each column of the action map is a permutation.
    pub fn is_permutation_action(&self) -> bool {
        (0..self.generators.len()).all(|j| {
            let mut seen = vec![false; self.len()];
            self.action
                .iter()
                .all(|row| !std::mem::replace(&mut seen[row[j]], true))
        })
    }

    /// Number of cosets reached from the trivial coset by right
    /// multiplication with `gens`. When `gens` generate a subgroup `S ⊇ H`,
    /// this is `[S : H]`.
    pub fn orbit_of_trivial(&self, gens: &[ResidueMat3]) -> usize {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for g in gens {
                let d = self.act(c, g);
                if !seen[d] {
                    seen[d] = true;
                    count += 1;
                    stack.push(d);
                }
            }
        }
        count
    }
}

#[derive(Clone, Debug)]
pub struct CosetIndex {
    pub k: u32,
    pub index: usize,
    pub mod_order: usize,
    pub lmod_order: usize,
    /// Distinct coset labels seen over all of `Ψ_k(Mod)`.
    pub labels_seen: usize,
    pub table: CosetTable,
}

impl CosetIndex {
    /// `|Ψ_k(Mod)| = index · |Ψ_k(LMod)|` exactly.
    pub fn lagrange_holds(&self) -> bool {
        self.mod_order == self.index * self.lmod_order
    }
}

/// Index of `Ψ_k(LMod)` in `Ψ_k(Mod)`, from full enumeration of both.
pub fn coset_index(k: u32) -> Result<CosetIndex, Error> {
    let table = CosetTable::build(k)?;
    let g = mod_group(k)?;
    let h = lmod_subgroup(k)?;
    let mut seen = vec![false; table.len()];
    for e in g.elements() {
        seen[coset_id(coset_label(e), k)] = true;
    }
    Ok(CosetIndex {
        k,
        index: g.order() / h.order(),
        mod_order: g.order(),
        lmod_order: h.order(),
        labels_seen: seen.iter().filter(|&&s| s).count(),
        table,
    })
}

#[derive(Clone, Debug)]
pub struct SchreierElement {
    pub coset: usize,
    pub generator: Symbol,
    pub word: TwistWord,
    pub in_lmod: bool,
    pub round_trip: bool,
    pub detail: String,
}

impl SchreierElement {
    pub fn passed(&self) -> bool {
        self.in_lmod && self.round_trip
    }
}

/// For each coset rep `r` and generator `s`, checks that
/// `r · s · rep(rs)^-1` lies in `Ψ(LMod)` over ℤ and that
/// [`decompose_lmod`] reproduces its image.
pub fn schreier_check(k: u32) -> Result<Vec<SchreierElement>, Error> {
    let cover = Cover::new(k)?;
    let table = CosetTable::build(k)?;
    let pairs: Vec<(usize, usize)> = (0..table.len())
        .flat_map(|c| (0..table.generators.len()).map(move |j| (c, j)))
        .collect();
    let out = pairs
        .par_iter()
        .map(|&(c, j)| {
            let s = table.generators[j];
            let target = table.action[c][j];
            let word = table.reps[c]
                .word
                .mul(&TwistWord::letter(s, 1))
                .mul(&table.reps[target].word.inverse());
            let x = eval_psi(&word);
            let (in_lmod, round_trip, detail) = match check_image_lmod(&x, cover) {
                Err(e) => (false, false, e.to_string()),
                Ok(_) => match decompose_lmod(&x, cover) {
                    Ok(d) if eval_psi(&d) == x => (true, true, format!("witness {d}")),
                    Ok(d) => (true, false, format!("witness {d} does not evaluate back")),
                    Err(e) => (true, false, e.to_string()),
                },
            };
            SchreierElement {
                coset: c,
                generator: s,
                word,
                in_lmod,
                round_trip,
                detail,
            }
        })
        .collect();
    Ok(out)
}
