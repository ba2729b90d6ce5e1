//! The central quotient `A(m)/Z(A(m))` as a free product of two cyclic groups.
//!
//! Pinned presentations and generator images (`k = (m-1)/2`):
//!
//! | `m`  | quotient                   | `x`  | `y`  | image of `a` | image of `b`  |
//! |------|----------------------------|------|------|--------------|---------------|
//! | odd  | `<x> * <y>`, `x² = y^m = 1`| `Δ`  | `ab` | `y^-k x`     | `x y^-k`      |
//! | even | `<x> * <y>`, `y^(m/2) = 1` | `a`  | `ab` | `x`          | `x^-1 y`      |
//!
//! For odd `m` the kernel is generated by `x² ↦ Δ²` and `y^m ↦ (ab)^m = Δ²`;
//! for even `m` by `y^(m/2) ↦ (ab)^(m/2) = Δ`. In both cases that is the centre.

use std::fmt;

use super::word::{DihedralWord, Gen, Letter};
use super::DihedralError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub factor: Factor,
    pub exp: i64,
}

/// Reduced alternating product of non-trivial syllables. Exponents in a finite
/// factor of order `n` are kept in `1..n`, so the form is unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeProductNf {
    m: u32,
    syllables: Vec<Syllable>,
}

/// Order of a factor, `None` when infinite.
pub fn factor_order(m: u32, factor: Factor) -> Option<u64> {
    match (m % 2 == 1, factor) {
        (true, Factor::X) => Some(2),
        (true, Factor::Y) => Some(u64::from(m)),
        (false, Factor::X) => None,
        (false, Factor::Y) => Some(u64::from(m / 2)),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FreeProductNf {
    pub fn identity(m: u32) -> Self {
        Self {
            m,
            syllables: Vec::new(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    fn normalise(&self, factor: Factor, exp: i64) -> i64 {
        match factor_order(self.m, factor) {
            Some(n) => exp.rem_euclid(n as i64),
            None => exp,
        }
    }

    pub fn push(&mut self, s: Syllable) {
        let exp = self.normalise(s.factor, s.exp);
        if exp == 0 {
            return;
        }
        if let Some(last) = self.syllables.last().copied() {
            if last.factor == s.factor {
                let merged = self.normalise(last.factor, last.exp + exp);
                if merged == 0 {
                    self.syllables.pop();
                } else if let Some(top) = self.syllables.last_mut() {
                    top.exp = merged;
                }
                return;
            }
        }
        self.syllables.push(Syllable {
            factor: s.factor,
            exp,
        });
    }

    pub fn mul(&self, other: &FreeProductNf) -> FreeProductNf {
        assert_eq!(self.m, other.m);
        let mut out = self.clone();
        for &s in &other.syllables {
            out.push(s);
        }
        out
    }

    pub fn inverse(&self) -> FreeProductNf {
        let mut out = FreeProductNf::identity(self.m);
        for s in self.syllables.iter().rev() {
            out.push(Syllable {
                factor: s.factor,
                exp: -s.exp,
            });
        }
        out
    }

    pub fn pow(&self, n: i64) -> FreeProductNf {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeProductNf::identity(self.m);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    fn from_syllables(m: u32, syllables: &[Syllable]) -> Self {
        let mut out = FreeProductNf::identity(m);
        for &s in syllables {
            out.push(s);
        }
        out
    }

    /// Splits `self = u · core · u^-1` with `core` cyclically reduced: of
    /// length at most one, or starting and ending in different factors.
    pub fn cyclic_reduction(&self) -> (FreeProductNf, FreeProductNf) {
        let mut conj = FreeProductNf::identity(self.m);
        let mut core = self.syllables.clone();
        while core.len() >= 2 && core[0].factor == core[core.len() - 1].factor {
            let first = core.remove(0);
            conj.push(first);
            let last = core.pop().expect("length checked");
            let merged = self.normalise(first.factor, last.exp + first.exp);
            if merged != 0 {
                core.push(Syllable {
                    factor: first.factor,
                    exp: merged,
                });
            }
        }
        (conj, FreeProductNf::from_syllables(self.m, &core))
    }

    /// Order of the element, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        let (_, core) = self.cyclic_reduction();
        match core.syllables.as_slice() {
            [] => Some(1),
            [s] => factor_order(self.m, s.factor).map(|n| n / gcd(n, s.exp.unsigned_abs())),
            _ => None,
        }
    }

    /// A word in `a, b` mapping onto this element.
    pub fn lift(&self) -> DihedralWord {
        let x = if self.m % 2 == 1 {
            DihedralWord::delta(self.m).expect("m >= 3")
        } else {
            DihedralWord::from_parts(self.m, vec![Letter::A])
        };
        let y = DihedralWord::from_parts(self.m, vec![Letter::A, Letter::B]);
        let mut out = DihedralWord::from_parts(self.m, Vec::new());
        for s in &self.syllables {
            let base = match s.factor {
                Factor::X => &x,
                Factor::Y => &y,
            };
            out = &out * &base.pow(s.exp);
        }
        out
    }

    pub(crate) fn letter_image(m: u32, letter: Letter) -> FreeProductNf {
        let syl = |factor, exp| Syllable { factor, exp };
        let parts: Vec<Syllable> = if m % 2 == 1 {
            let k = i64::from((m - 1) / 2);
            match (letter.gen, letter.inverse) {
                (Gen::A, false) => vec![syl(Factor::Y, -k), syl(Factor::X, 1)],
                (Gen::A, true) => vec![syl(Factor::X, -1), syl(Factor::Y, k)],
                (Gen::B, false) => vec![syl(Factor::X, 1), syl(Factor::Y, -k)],
                (Gen::B, true) => vec![syl(Factor::Y, k), syl(Factor::X, -1)],
            }
        } else {
            match (letter.gen, letter.inverse) {
                (Gen::A, false) => vec![syl(Factor::X, 1)],
                (Gen::A, true) => vec![syl(Factor::X, -1)],
                (Gen::B, false) => vec![syl(Factor::X, -1), syl(Factor::Y, 1)],
                (Gen::B, true) => vec![syl(Factor::Y, -1), syl(Factor::X, 1)],
            }
        };
        FreeProductNf::from_syllables(m, &parts)
    }

    /// Rotations `core = p q` with `q p == target`, returned as `p`.
    pub(crate) fn rotation_to(&self, target: &FreeProductNf) -> Option<FreeProductNf> {
        let n = self.syllables.len();
        if n != target.syllables.len() {
            return None;
        }
        if n <= 1 {
            return (self.syllables == target.syllables).then(|| FreeProductNf::identity(self.m));
        }
        (0..n).find_map(|i| {
            let rotated = self.syllables[i..].iter().chain(&self.syllables[..i]);
            rotated
                .eq(target.syllables.iter())
                .then(|| FreeProductNf::from_syllables(self.m, &self.syllables[..i]))
        })
    }
}

impl fmt::Display for FreeProductNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| {
                let name = match s.factor {
                    Factor::X => "x",
                    Factor::Y => "y",
                };
                if s.exp == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{}", s.exp)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Image of `w` in `A(m)/Z(A(m))`. Requires `m >= 3`.
pub fn central_quotient_image(w: &DihedralWord) -> Result<FreeProductNf, DihedralError> {
    let m = w.m();
    if m < 3 {
        return Err(DihedralError::AbelianGroup);
    }
    let mut out = FreeProductNf::identity(m);
    for &l in w.letters() {
        out = out.mul(&FreeProductNf::letter_image(m, l));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(m: u32, s: &str) -> FreeProductNf {
        central_quotient_image(&DihedralWord::parse(m, s).unwrap()).unwrap()
    }

    #[test]
    fn examples_in_a3() {
        assert!(img(3, "ababab").is_trivial());
        assert_eq!(img(3, "ab").to_string(), "y");
        // a = (ab)^-1 Δ, and y^-1 = y^2 in the order-3 factor
        assert_eq!(img(3, "a").to_string(), "y^2 x");
        assert_eq!(img(3, "b").to_string(), "x y^2");
    }

    #[test]
    fn relations_hold() {
        for m in 3..=9u32 {
            let delta = DihedralWord::delta(m).unwrap();
            let other = DihedralWord::alternating(m, Gen::B, m).unwrap();
            assert_eq!(img(m, &delta.compact()), img(m, &other.compact()), "m={m}");
            let ab = img(m, "ab");
            if m % 2 == 1 {
                assert!(img(m, &delta.compact()).pow(2).is_trivial());
                assert!(ab.pow(i64::from(m)).is_trivial());
                assert_eq!(ab.order(), Some(u64::from(m)));
            } else {
                assert!(ab.pow(i64::from(m / 2)).is_trivial());
                assert_eq!(ab.order(), Some(u64::from(m / 2)));
            }
        }
    }

    #[test]
    fn cyclic_reduction_conjugates_back() {
        let g = img(5, "aabAbbA");
        let (u, core) = g.cyclic_reduction();
        assert_eq!(u.mul(&core).mul(&u.inverse()), g);
    }

    #[test]
    fn lift_maps_back() {
        for m in 3..=6 {
            let g = img(m, "abBBaA");
            assert_eq!(central_quotient_image(&g.lift()).unwrap(), g);
        }
    }

    #[test]
    fn rejects_abelian_case() {
        let w = DihedralWord::parse(2, "ab").unwrap();
        assert_eq!(central_quotient_image(&w), Err(DihedralError::AbelianGroup));
    }
}
