use super::normal_form::garside_nf;
use super::quotient::{central_quotient_image, FreeProductNf};
use super::word::{DihedralWord, Gen};
use super::DihedralError;

/// `w = conjugator · generator^exponent · conjugator^-1`, verified in `A(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub generator: Gen,
    pub exponent: i64,
    pub conjugator: DihedralWord,
}

impl ConjugacyWitness {
    pub fn holds_for(&self, w: &DihedralWord) -> bool {
        let power = DihedralWord::generator_power(w.m(), self.generator, self.exponent)
            .expect("m checked by caller");
        let candidate = &(&self.conjugator * &power) * &self.conjugator.inverse();
        garside_nf(&candidate) == garside_nf(w)
    }
}

/// Decides whether `w` is conjugate to a non-trivial power of `a` or `b`.
///
/// Exponent sums fix the only possible power: for odd `m` the abelianisation
/// is `Z` and `a`, `b` are conjugate, for even `m` it is `Z²`. Conjugacy is
/// then solved in the central quotient by cyclic reduction and rotation of
/// free-product normal forms; any lift of the quotient conjugator conjugates
/// `g^n` to `w` times a central element with exponent sum zero, and the only
/// such central element is the identity. The witness is checked with Garside
/// normal forms before it is returned.
pub fn is_conjugate_to_generator_power(
    w: &DihedralWord,
) -> Result<Option<ConjugacyWitness>, DihedralError> {
    let m = w.m();
    if m < 3 {
        return Err(DihedralError::AbelianGroup);
    }
    if garside_nf(w).is_identity() {
        return Err(DihedralError::TrivialElement);
    }
    let (sa, sb) = w.exponent_sums();
    let (generator, exponent) = if m % 2 == 1 {
        (Gen::A, sa + sb)
    } else if sb == 0 {
        (Gen::A, sa)
    } else if sa == 0 {
        (Gen::B, sb)
    } else {
        return Ok(None);
    };
    if exponent == 0 {
        return Ok(None);
    }

    let power = DihedralWord::generator_power(m, generator, exponent)?;
    let target = central_quotient_image(&power)?;
    let image = central_quotient_image(w)?;
    let (outer, core) = image.cyclic_reduction();
    let Some(rotation) = core.rotation_to(&target) else {
        return Ok(None);
    };
    // image = outer · core · outer^-1 and core = p · target · p^-1
    let conj_bar: FreeProductNf = outer.mul(&rotation);
    let conjugator = shortest_conjugator(conj_bar.lift(), generator, w);

    let witness = ConjugacyWitness {
        generator,
        exponent,
        conjugator,
    };
    if witness.holds_for(w) {
        Ok(Some(witness))
    } else {
        // a non-trivial central defect: w is conjugate to g^n times a central element
        Ok(None)
    }
}

/// Among `c · g^j · z^i` (`z` the positive generator of the centre), all of
/// which conjugate `g^n` the same way, picks the one with the shortest spelled
/// normal form.
fn shortest_conjugator(c: DihedralWord, generator: Gen, w: &DihedralWord) -> DihedralWord {
    let m = w.m();
    let delta = DihedralWord::delta(m).expect("m >= 3");
    let centre = if m % 2 == 1 { delta.pow(2) } else { delta };
    let mut best = garside_nf(&c);
    let range = i64::from(m);
    for j in -range..=range {
        let g = DihedralWord::generator_power(m, generator, j).expect("m >= 3");
        for i in -2..=2 {
            let cand = garside_nf(&(&(&c * &g) * &centre.pow(i)));
            let key = |nf: &super::GarsideNf| (nf.spelled_length(), nf.to_word());
            if key(&cand) < key(&best) {
                best = cand;
            }
        }
    }
    best.to_word()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: u32, s: &str) -> DihedralWord {
        DihedralWord::parse(m, s).unwrap()
    }

    #[test]
    fn explicit_conjugate() {
        let wit = is_conjugate_to_generator_power(&w(3, "b a b^-1")).unwrap().unwrap();
        assert_eq!(wit.generator, Gen::A);
        assert_eq!(wit.exponent, 1);
        assert_eq!(wit.conjugator.compact(), "b");
        assert!(wit.holds_for(&w(3, "b a b^-1")));
    }

    #[test]
    fn plain_power() {
        let wit = is_conjugate_to_generator_power(&w(3, "aa")).unwrap().unwrap();
        assert_eq!((wit.generator, wit.exponent), (Gen::A, 2));
        assert!(wit.conjugator.is_empty());
    }

    #[test]
    fn non_conjugates() {
        assert!(is_conjugate_to_generator_power(&w(3, "ab")).unwrap().is_none());
        assert!(is_conjugate_to_generator_power(&w(3, "aB")).unwrap().is_none());
        assert!(is_conjugate_to_generator_power(&w(3, "abA")).unwrap().is_some());
        assert!(is_conjugate_to_generator_power(&w(4, "abAB")).unwrap().is_none());
        // Δ² a has exponent sum 7 in A(3) but is not conjugate to a^7
        assert!(is_conjugate_to_generator_power(&w(3, "abababa")).unwrap().is_none());
    }

    #[test]
    fn even_case_distinguishes_generators() {
        let wit = is_conjugate_to_generator_power(&w(4, "a b a^-1")).unwrap().unwrap();
        assert_eq!((wit.generator, wit.exponent), (Gen::B, 1));
        assert!(wit.holds_for(&w(4, "abA")));
    }

    #[test]
    fn errors() {
        assert_eq!(
            is_conjugate_to_generator_power(&w(3, "abBA")),
            Err(DihedralError::TrivialElement)
        );
        assert_eq!(
            is_conjugate_to_generator_power(&w(2, "a")),
            Err(DihedralError::AbelianGroup)
        );
    }
}
