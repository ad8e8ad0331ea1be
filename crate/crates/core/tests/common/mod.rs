#![allow(dead_code)]

use numsg::NumericalSemigroup;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn kunz(m: u64, c: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_coordinates(m, c.to_vec()).unwrap()
}

/// Random semigroups with multiplicity in `2..=max_m` and genus at most
/// `max_genus`, generated from `m` and one random element per residue.
pub fn random_instances(seed: u64, count: usize, max_m: u64, max_genus: u64) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = rng.gen_range(2..=max_m);
        let mut gens = vec![m];
        for i in 1..m {
            gens.push(i + m * rng.gen_range(1..=4));
        }
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        if s.genus() <= max_genus {
            out.push(s);
        }
    }
    out
}
