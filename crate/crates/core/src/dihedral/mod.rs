//! Exact computation in dihedral Artin groups
//! `A(m) = <a, b | aba... = bab...>` (both sides of length `m`).
//!
//! Equality is decided through the Garside (left-greedy Δ-) normal form
//! `Δ^k s_1 ... s_l`. For a dihedral group the proper simple elements are the
//! alternating words of length `1..m`, and two consecutive factors are
//! left-weighted exactly when the first letter of `s_{i+1}` repeats the last
//! letter of `s_i`. Conjugation by Δ swaps `a` and `b` when `m` is odd and is
//! trivial when `m` is even.

mod conjugacy;
mod normal_form;
mod quotient;
mod word;

use thiserror::Error;

use crate::centraliser::{Centraliser, CentraliserShape, Justification};

pub use conjugacy::{is_conjugate_to_generator_power, ConjugacyWitness};
pub use normal_form::{garside_nf, GarsideNf, ProperSimple};
pub use quotient::{central_quotient_image, Factor, FreeProductNf, Syllable};
pub use word::{DihedralWord, Gen, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DihedralError {
    #[error("dihedral label must be at least 2, got {0}")]
    LabelTooSmall(u32),
    #[error("words live in different groups: A({0}) and A({1})")]
    LabelMismatch(u32, u32),
    #[error("operation needs m >= 3 (A(2) is abelian and equals its own centre)")]
    AbelianGroup,
    #[error("operation needs a non-trivial element")]
    TrivialElement,
    #[error("malformed word token `{0}`")]
    BadToken(String),
}

/// The `2m` simple elements `1, Δ` and the proper alternating prefixes,
/// each as its positive alternating word (Δ as the word starting with `a`).
pub fn simples(m: u32) -> Result<Vec<DihedralWord>, DihedralError> {
    if m < 2 {
        return Err(DihedralError::LabelTooSmall(m));
    }
    let mut out = vec![DihedralWord::identity(m)?];
    for len in 1..m {
        for first in [Gen::A, Gen::B] {
            out.push(DihedralWord::alternating(m, first, len)?);
        }
    }
    out.push(DihedralWord::delta(m)?);
    Ok(out)
}

pub fn words_equal(u: &DihedralWord, v: &DihedralWord) -> Result<bool, DihedralError> {
    if u.m() != v.m() {
        return Err(DihedralError::LabelMismatch(u.m(), v.m()));
    }
    Ok(garside_nf(u) == garside_nf(v))
}

fn require_large(w: &DihedralWord) -> Result<(), DihedralError> {
    if w.m() < 3 {
        Err(DihedralError::AbelianGroup)
    } else {
        Ok(())
    }
}

/// Membership in the centre, which is `<Δ>` for even `m` and `<Δ²>` for odd `m`.
pub fn is_central(w: &DihedralWord) -> Result<bool, DihedralError> {
    require_large(w)?;
    Ok(garside_nf(w).is_central())
}

/// Least `n >= 1` with `w^n` central, or `None` when no power is central.
///
/// `w^n` is central exactly when the image of `w` in the central quotient has
/// finite order dividing `n`, and an element of a free product of cyclic
/// groups has finite order iff it is conjugate into a finite factor.
pub fn has_central_power(w: &DihedralWord) -> Result<Option<u64>, DihedralError> {
    require_large(w)?;
    if garside_nf(w).is_identity() {
        return Err(DihedralError::TrivialElement);
    }
    let image = central_quotient_image(w)?;
    Ok(image.order())
}

/// Centraliser of an element of `A(m)` whose fixed set in the Deligne complex
/// is the single dihedral vertex: the whole group when central, `Z` when some
/// power is central, and `Z²` otherwise.
pub fn dihedral_centraliser_shape(w: &DihedralWord) -> Result<CentraliserShape, DihedralError> {
    Ok(explain_dihedral_centraliser(w)?.shape)
}

/// [`dihedral_centraliser_shape`] with the clause that produced it.
pub fn explain_dihedral_centraliser(w: &DihedralWord) -> Result<Centraliser, DihedralError> {
    let power = has_central_power(w)?;
    let (shape, justification) = match power {
        Some(1) => (
            CentraliserShape::DihedralArtin { m: w.m() },
            Justification::Central,
        ),
        Some(n) => (CentraliserShape::CyclicZ, Justification::CentralPower(n)),
        None => (CentraliserShape::AbelianZ2, Justification::NoCentralPower),
    };
    Ok(Centraliser {
        shape,
        justification,
    })
}
