#![allow(dead_code)]

use num_integer::Integer;
use omega_primality::{Monoid, NVec, SemigroupSpec};
use rand::Rng;

/// A random reduced monoid with at most four generators, entries at most 20,
/// for which the brute-force oracle has a sound bound.
pub fn random_monoid<R: Rng>(rng: &mut R) -> Monoid {
    loop {
        let spec = match rng.gen_range(0..4) {
            0 => {
                let p = rng.gen_range(1..=4);
                let gens: Vec<u64> = (0..p).map(|_| rng.gen_range(2..=20)).collect();
                if gens.iter().fold(0, |g, &x| g.gcd(&x)) != 1 {
                    continue;
                }
                SemigroupSpec::numerical(&gens)
            }
            1 => SemigroupSpec::two_gen(rng.gen_range(2..=20), rng.gen_range(2..=20)),
            2 => {
                let a = rng.gen_range(1..=20i64);
                let c = rng.gen_range(1..=20i64);
                SemigroupSpec::lattice(2, &[&[a, -c]])
            }
            _ => {
                // parallel columns: quasi-Archimedean
                let v = [rng.gen_range(1..=3u64), rng.gen_range(1..=3u64)];
                if v[0].gcd(&v[1]) != 1 {
                    continue;
                }
                let top = 20 / v[0].max(v[1]);
                let p = rng.gen_range(1..=4);
                let cols: Vec<Vec<u64>> = (0..p)
                    .map(|_| {
                        let c = rng.gen_range(1..=top);
                        vec![c * v[0], c * v[1]]
                    })
                    .collect();
                let refs: Vec<&[u64]> = cols.iter().map(Vec::as_slice).collect();
                SemigroupSpec::affine(&refs)
            }
        };
        if let Ok(m) = Monoid::new(&spec) {
            return m;
        }
    }
}

pub fn random_gamma<R: Rng>(rng: &mut R, p: usize, max: u64) -> NVec {
    NVec::from_u64s(&(0..p).map(|_| rng.gen_range(0..=max)).collect::<Vec<_>>())
}
