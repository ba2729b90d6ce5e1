use std::fmt;

use super::word::{alternating_letters, DihedralWord, Gen, Letter};

/// A simple element other than `1` and `Δ`: the alternating positive word of
/// length `len` (`1 <= len < m`) starting with `first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperSimple {
    pub first: Gen,
    pub len: u32,
}

impl ProperSimple {
    pub fn last(self) -> Gen {
        if self.len % 2 == 1 {
            self.first
        } else {
            self.first.other()
        }
    }

    pub fn letters(self) -> Vec<Letter> {
        alternating_letters(self.first, self.len)
    }

    fn conjugate_by_delta(self, m: u32) -> Self {
        if m % 2 == 1 {
            Self {
                first: self.first.other(),
                len: self.len,
            }
        } else {
            self
        }
    }
}

impl fmt::Display for ProperSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.gen)?;
        }
        Ok(())
    }
}

/// Left-greedy normal form `Δ^k s_1 ... s_l`; unique for each group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNf {
    m: u32,
    delta_power: i64,
    factors: Vec<ProperSimple>,
}

impl GarsideNf {
    pub fn identity(m: u32) -> Self {
        Self {
            m,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[ProperSimple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// In `<Δ>` for even `m`, `<Δ²>` for odd `m`.
    pub fn is_central(&self) -> bool {
        self.factors.is_empty() && (self.m % 2 == 0 || self.delta_power % 2 == 0)
    }

    fn conjugate_factors_by_delta(&mut self) {
        let m = self.m;
        for s in &mut self.factors {
            *s = s.conjugate_by_delta(m);
        }
    }

    /// Right multiplication by a positive generator, keeping the form left-greedy.
    pub fn push_gen(&mut self, x: Gen) {
        match self.factors.last_mut() {
            Some(last) if last.last() != x => {
                last.len += 1;
                if last.len == self.m {
                    // s_1 ... s_{l-1} Δ = Δ τ(s_1) ... τ(s_{l-1})
                    self.factors.pop();
                    self.delta_power += 1;
                    self.conjugate_factors_by_delta();
                }
            }
            _ => self.factors.push(ProperSimple { first: x, len: 1 }),
        }
    }

    /// Right multiplication by `x^-1 = Δ^-1 r_x` where `r_x x = Δ`.
    pub fn push_inverse(&mut self, x: Gen) {
        self.delta_power -= 1;
        self.conjugate_factors_by_delta();
        // r_x is the alternating word of length m-1 that x completes to Δ
        let first = if self.m % 2 == 1 { x } else { x.other() };
        for l in alternating_letters(first, self.m - 1) {
            self.push_gen(l.gen);
        }
    }

    pub fn push(&mut self, letter: Letter) {
        if letter.inverse {
            self.push_inverse(letter.gen);
        } else {
            self.push_gen(letter.gen);
        }
    }

    /// A word representing the element: `Δ^k` spelled out, then the factors.
    pub fn to_word(&self) -> DihedralWord {
        let delta = alternating_letters(Gen::A, self.m);
        let mut letters = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            if self.delta_power > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|l| l.inv()));
            }
        }
        for s in &self.factors {
            letters.extend(s.letters());
        }
        DihedralWord::from_parts(self.m, letters)
    }

    /// Number of letters in [`GarsideNf::to_word`].
    pub fn spelled_length(&self) -> usize {
        self.delta_power.unsigned_abs() as usize * self.m as usize
            + self.factors.iter().map(|s| s.len as usize).sum::<usize>()
    }
}

impl fmt::Display for GarsideNf {
    /// `D^k . s1 . s2 ...` with simples as positive words.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for s in &self.factors {
            write!(f, " . {s}")?;
        }
        Ok(())
    }
}

pub fn garside_nf(w: &DihedralWord) -> GarsideNf {
    let mut nf = GarsideNf::identity(w.m());
    for &l in w.letters() {
        nf.push(l);
    }
    nf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(m: u32, s: &str) -> GarsideNf {
        garside_nf(&DihedralWord::parse(m, s).unwrap())
    }

    #[test]
    fn delta_collapses() {
        assert_eq!(nf(3, "aba"), nf(3, "bab"));
        assert_eq!(nf(3, "aba").to_string(), "D^1");
        assert_eq!(nf(3, "abab").to_string(), "D^1 . b");
        assert_eq!(nf(3, "abab"), nf(3, "babb"));
        assert_eq!(nf(7, "").to_string(), "D^0");
        assert!(nf(5, "").is_identity());
    }

    #[test]
    fn inverses_cancel() {
        for m in 2..7 {
            for s in ["aA", "Aa", "bB", "Bb", "abBA", "AbaBab"] {
                let w = DihedralWord::parse(m, s).unwrap();
                let expect = garside_nf(&w.freely_reduced());
                assert_eq!(garside_nf(&w), expect, "m={m} {s}");
            }
            assert!(!nf(m, "abAB").to_word().is_empty() || m == 2);
        }
    }

    #[test]
    fn left_weighted_factors() {
        let f = nf(5, "aabbbabab");
        assert!(f.factors().iter().all(|s| s.len >= 1 && s.len < 5));
        for pair in f.factors().windows(2) {
            assert_eq!(pair[1].first, pair[0].last());
        }
    }

    #[test]
    fn negative_delta_powers() {
        let f = nf(4, "ABAB");
        assert_eq!(f.delta_power(), -1);
        assert!(f.factors().is_empty());
        let f = nf(3, "A");
        assert_eq!(f.to_string(), "D^-1 . ab");
        assert_eq!(garside_nf(&f.to_word()), f);
    }

    #[test]
    fn spelled_length_matches_word() {
        for s in ["", "abAB", "BBaba", "ababab"] {
            let f = nf(3, s);
            assert_eq!(f.spelled_length(), f.to_word().len());
        }
    }
}
