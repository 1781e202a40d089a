//! Reproducible random roots: a random Leech root pushed through a random
//! word of Leech triflections and Heisenberg translations.
//!
//! The generator is `ChaCha8Rng::seed_from_u64(seed)`; every draw below is
//! made in a fixed order, so a seed determines the output on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{rint, EisensteinInt};
use crate::leech::{self, LeechPoint};
use crate::lorentz::{leech_root, triflect_root, HeisenbergElement, LeechRootSpec, Root, Zeta};

fn random_unit(rng: &mut ChaCha8Rng) -> EisensteinInt {
    EisensteinInt::units()[rng.gen_range(0..6)].clone()
}

/// A sum of up to two basis vectors with unit coefficients.
fn random_lambda(rng: &mut ChaCha8Rng) -> LeechPoint {
    let basis = leech::standard().basis();
    let mut lam = LeechPoint::zero();
    for _ in 0..rng.gen_range(0..=2) {
        let b = &basis[rng.gen_range(0..basis.len())];
        lam = &lam + &b.scale(&random_unit(rng));
    }
    lam
}

pub fn random_leech_root(rng: &mut ChaCha8Rng) -> Root {
    let lambda = random_lambda(rng);
    let t = LeechRootSpec::t_offset(&lambda) + rint(rng.gen_range(-2..=2));
    leech_root(&LeechRootSpec::from_t(lambda, t)).expect("admissible spec")
}

fn random_zeta(rng: &mut ChaCha8Rng) -> Zeta {
    if rng.gen_bool(0.5) {
        Zeta::Omega
    } else {
        Zeta::OmegaBar
    }
}

/// `count` roots, each the image of a Leech root under a word whose length
/// is uniform in `0..=max_word`; letters are Leech triflections with
/// probability 3/4 and Heisenberg translations otherwise.
pub fn sample_roots(count: usize, max_word: usize, seed: u64) -> Vec<Root> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut s = random_leech_root(&mut rng);
            let len = rng.gen_range(0..=max_word);
            for _ in 0..len {
                if rng.gen_range(0..4) < 3 {
                    let l = random_leech_root(&mut rng);
                    let z = random_zeta(&mut rng);
                    s = triflect_root(&l, z, &s);
                } else {
                    let h = HeisenbergElement::with_offset(random_lambda(&mut rng), rng.gen_range(-2..=2));
                    s = Root::new(h.apply(s.vector())).expect("translations preserve roots");
                }
            }
            s
        })
        .collect()
}
