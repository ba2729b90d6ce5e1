use std::fmt;
use std::ops::Mul;

use super::DihedralError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::A => Gen::B,
            Gen::B => Gen::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter { gen: Gen::A, inverse: false };
    pub const B: Letter = Letter { gen: Gen::B, inverse: false };
    pub const A_INV: Letter = Letter { gen: Gen::A, inverse: true };
    pub const B_INV: Letter = Letter { gen: Gen::B, inverse: true };
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV];

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn from_compact(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' => Some(Letter::A_INV),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }

    fn compact(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::A, false) => 'a',
            (Gen::B, false) => 'b',
            (Gen::A, true) => 'A',
            (Gen::B, true) => 'B',
        }
    }
}

/// A word over `a, b` and their inverses in the dihedral Artin group `A(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralWord {
    m: u32,
    letters: Vec<Letter>,
}

impl DihedralWord {
    pub fn new(m: u32, letters: Vec<Letter>) -> Result<Self, DihedralError> {
        if m < 2 {
            return Err(DihedralError::LabelTooSmall(m));
        }
        Ok(Self { m, letters })
    }

    pub(crate) fn from_parts(m: u32, letters: Vec<Letter>) -> Self {
        debug_assert!(m >= 2);
        Self { m, letters }
    }

    pub fn identity(m: u32) -> Result<Self, DihedralError> {
        Self::new(m, Vec::new())
    }

    /// Positive alternating word of length `len` starting with `first`.
    pub fn alternating(m: u32, first: Gen, len: u32) -> Result<Self, DihedralError> {
        Self::new(m, alternating_letters(first, len))
    }

    /// The Garside element `Δ = aba...` (length `m`).
    pub fn delta(m: u32) -> Result<Self, DihedralError> {
        Self::alternating(m, Gen::A, m)
    }

    pub fn generator_power(m: u32, gen: Gen, n: i64) -> Result<Self, DihedralError> {
        let letter = Letter {
            gen,
            inverse: n < 0,
        };
        Self::new(m, vec![letter; n.unsigned_abs() as usize])
    }

    /// Parses whitespace separated tokens. A token is `a`, `b`, `a^k`, `b^k`
    /// (any integer `k`), `a⁻¹`, `b⁻¹`, or a compact run over `abAB` where an
    /// uppercase letter is an inverse (`aB` = `a b^-1`).
    pub fn parse(m: u32, text: &str) -> Result<Self, DihedralError> {
        if m < 2 {
            return Err(DihedralError::LabelTooSmall(m));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let bad = || DihedralError::BadToken(token.to_string());
            let (base, exp) = if let Some(base) = token.strip_suffix("⁻¹") {
                (base, -1)
            } else if let Some((base, exp)) = token.split_once('^') {
                (base, exp.parse::<i64>().map_err(|_| bad())?)
            } else {
                (token, 1)
            };
            if exp != 1 {
                let gen = match base {
                    "a" => Gen::A,
                    "b" => Gen::B,
                    _ => return Err(bad()),
                };
                let letter = Letter {
                    gen,
                    inverse: exp < 0,
                };
                letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
                continue;
            }
            for c in base.chars() {
                letters.push(Letter::from_compact(c).ok_or_else(bad)?);
            }
        }
        Ok(Self { m, letters })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            m: self.m,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { m: self.m, letters }
    }

    /// Free reduction (cancels adjacent `x x^-1`).
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            m: self.m,
            letters: out,
        }
    }

    /// Exponent sums `(of a, of b)`, the image in the abelianisation of the free group.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.letters.iter().fold((0, 0), |(sa, sb), l| {
            let e = if l.inverse { -1 } else { 1 };
            match l.gen {
                Gen::A => (sa + e, sb),
                Gen::B => (sa, sb + e),
            }
        })
    }

    /// Letters in compact form, uppercase for inverses. The identity is `1`.
    pub fn compact(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters.iter().map(|l| l.compact()).collect()
    }
}

pub(crate) fn alternating_letters(first: Gen, len: u32) -> Vec<Letter> {
    let mut g = first;
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(Letter {
            gen: g,
            inverse: false,
        });
        g = g.other();
    }
    out
}

impl Mul for &DihedralWord {
    type Output = DihedralWord;

    /// Concatenation. Panics when the words belong to different groups.
    fn mul(self, rhs: &DihedralWord) -> DihedralWord {
        assert_eq!(self.m, rhs.m, "multiplying words of different dihedral groups");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        DihedralWord { m: self.m, letters }
    }
}

impl fmt::Display for DihedralWord {
    /// Space separated tokens `a`, `b`, `a^-1`, `b^-1`; empty for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("{}^-1", l.gen)
                } else {
                    l.gen.to_string()
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
