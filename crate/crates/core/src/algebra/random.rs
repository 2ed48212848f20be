//! Seeded randomness: derived sub-seeds and random linear forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::echelon::{rank_of, SparseRow};
use crate::field::PrimeField;
use crate::poly::HomogPoly;

/// Default base seed when none is configured.
pub const DEFAULT_SEED: u64 = 0x5eed_1ef5;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn label_hash(label: &str) -> u64 {
    // FNV-1a
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Seed for the `index`-th draw of the stream `label` under `base`.
pub fn derive_seed(base: u64, label: &str, index: u64) -> u64 {
    splitmix64(splitmix64(base ^ label_hash(label)) ^ index)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A linear form in `nvars` variables with uniform coefficients, nonzero.
pub fn random_linear_form(nvars: usize, field: &PrimeField, rng: &mut impl Rng) -> HomogPoly {
    assert!(nvars > 0, "no variables to form a linear form from");
    loop {
        let coeffs: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..field.modulus())).collect();
        if coeffs.iter().any(|&c| c != 0) {
            return HomogPoly::linear(&coeffs, field);
        }
    }
}

/// `count` random linear forms; when `count <= nvars` they are
/// linearly independent (redrawn otherwise).
pub fn random_linear_forms(
    nvars: usize,
    count: usize,
    field: &PrimeField,
    rng: &mut impl Rng,
) -> Vec<HomogPoly> {
    if count == 0 {
        return Vec::new();
    }
    loop {
        let forms: Vec<HomogPoly> =
            (0..count).map(|_| random_linear_form(nvars, field, rng)).collect();
        if count > nvars || rank_of(*field, nvars, &coefficient_rows(&forms)) == count {
            return forms;
        }
    }
}

/// Linear forms in the first `nvars_used` of `nvars` variables.
pub fn random_linear_forms_in(
    nvars: usize,
    nvars_used: usize,
    count: usize,
    field: &PrimeField,
    rng: &mut impl Rng,
) -> Vec<HomogPoly> {
    random_linear_forms(nvars_used, count, field, rng)
        .into_iter()
        .map(|f| f.extend(nvars))
        .collect()
}

pub fn coefficient_rows(forms: &[HomogPoly]) -> Vec<SparseRow> {
    forms
        .iter()
        .map(|f| {
            f.linear_coefficients()
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (i as u32, c))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_request() {
        let mut rng = rng_from_seed(1);
        assert!(random_linear_forms(3, 0, &PrimeField::default(), &mut rng).is_empty());
    }

    #[test]
    fn reproducible_for_a_fixed_seed() {
        let f = PrimeField::default();
        let a = random_linear_forms(5, 3, &f, &mut rng_from_seed(42));
        let b = random_linear_forms(5, 3, &f, &mut rng_from_seed(42));
        assert_eq!(a, b);
        let json = |v: &[HomogPoly]| serde_json::to_string(&v.iter().map(|p| p.to_json()).collect::<Vec<_>>()).unwrap();
        assert_eq!(json(&a), json(&b));
    }

    #[test]
    fn square_systems_are_independent() {
        let f = PrimeField::new(5).unwrap();
        for s in 0..50 {
            let forms = random_linear_forms(4, 4, &f, &mut rng_from_seed(s));
            assert!(forms.iter().all(|p| p.degree() == 1 && !p.is_zero()));
            assert_eq!(rank_of(f, 4, &coefficient_rows(&forms)), 4);
        }
    }

    #[test]
    fn derived_seeds_differ_by_label_and_index() {
        let a = derive_seed(7, "trial", 0);
        assert_ne!(a, derive_seed(7, "trial", 1));
        assert_ne!(a, derive_seed(7, "forms", 0));
        assert_ne!(a, derive_seed(8, "trial", 0));
        assert_eq!(a, derive_seed(7, "trial", 0));
    }
}
