//! Seeded random test inputs with small integer coefficients.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, PolAlgebra, Word};
use crate::coeff::Coefficient;
use crate::integral::DElement;

fn small_coeff(rng: &mut ChaCha8Rng) -> Coefficient {
    let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Coefficient::from_int(c)
}

/// `count` random elements, each a combination of 1 to 3 normal words of
/// total degree at most `max_degree` over the full alphabet.
pub fn random_elements(pol: &PolAlgebra, seed: u64, count: usize, max_degree: usize) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words = pol.normal_words_up_to(max_degree);
    (0..count)
        .map(|_| {
            let mut e = Element::zero();
            while e.is_zero() {
                for _ in 0..rng.gen_range(1..=3) {
                    let w = words.choose(&mut rng).expect("nonempty").clone();
                    e.add_term(w, &small_coeff(&mut rng));
                }
            }
            e
        })
        .collect()
}

/// `count` random sandwich combinations with both sides of degree at most
/// `max_degree`, 1 to 4 terms each.
pub fn random_delements(pol: &PolAlgebra, seed: u64, count: usize, max_degree: usize) -> Vec<DElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = (0..=max_degree).flat_map(|d| pol.holomorphic_basis(d)).collect();
    (0..count)
        .map(|_| {
            let mut x = DElement::zero();
            while x.is_zero() {
                for _ in 0..rng.gen_range(1..=4) {
                    let a = words.choose(&mut rng).expect("nonempty").clone();
                    let b = words.choose(&mut rng).expect("nonempty").clone();
                    x.add_term(a, b, &small_coeff(&mut rng));
                }
            }
            x
        })
        .collect()
}
