//! Asymptotic ω-primality of quasi-Archimedean cancellative reduced monoids.
//!
//! In such a monoid there are positive `k₁,…,k_p` with `k₁[e₁] = … = k_p[e_p]`.
//! With `k_max` the largest of them, `ω̄([γ]) = Σᵢ γᵢ·k_max/kᵢ`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::clock::map_all;
use crate::error::{Error, Result};
use crate::omega::{omega_element, OmegaOptions};
use crate::semigroup::{Element, Monoid, SemigroupSpec};
use crate::vector::NVec;

pub type Rational = BigRational;

/// Multipliers `k` with `k₁[e₁] = … = k_p[e_p]`, componentwise minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KVector {
    pub k: NVec,
    /// Position of the largest entry (lowest index on ties).
    pub kmax_index: usize,
}

impl KVector {
    fn new(k: Vec<BigUint>) -> Self {
        let kmax_index = k
            .iter()
            .enumerate()
            .fold(0, |best, (i, x)| if *x > k[best] { i } else { best });
        KVector {
            k: NVec::new(k),
            kmax_index,
        }
    }

    pub fn kmax(&self) -> &BigUint {
        &self.k.entries()[self.kmax_index]
    }

    pub fn kmin(&self) -> &BigUint {
        self.k.entries().iter().min().expect("nonempty")
    }
}

fn lcm_scaled(scales: &[BigUint]) -> Vec<BigUint> {
    let l = scales.iter().fold(BigUint::one(), |acc, s| acc.lcm(s));
    scales.iter().map(|s| &l / s).collect()
}

fn not_qa(why: &str) -> Error {
    Error::NotQuasiArchimedean(why.into())
}

pub fn k_vector(monoid: &Monoid) -> Result<KVector> {
    match monoid.spec() {
        SemigroupSpec::Numerical { generators } => Ok(KVector::new(lcm_scaled(generators))),
        SemigroupSpec::TwoGen { alpha, beta } => Ok(KVector::new(vec![alpha.clone(), beta.clone()])),
        SemigroupSpec::Affine { columns } => {
            // every column must be a positive multiple of one primitive direction
            let first = &columns[0];
            let g0 = first.entries().iter().fold(BigUint::zero(), |g, x| g.gcd(x));
            let dir: Vec<BigUint> = first.entries().iter().map(|x| x / &g0).collect();
            let scales = columns
                .iter()
                .map(|c| {
                    let g = c.entries().iter().fold(BigUint::zero(), |g, x| g.gcd(x));
                    let parallel = c.entries().iter().zip(&dir).all(|(x, d)| *x == &g * d);
                    parallel
                        .then_some(g)
                        .ok_or_else(|| not_qa("affine generators span more than one direction"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(KVector::new(lcm_scaled(&scales)))
        }
        SemigroupSpec::Lattice { .. } => {
            let basis = monoid.lattice_basis().expect("lattice mode");
            match (monoid.arity(), basis) {
                (1, []) => Ok(KVector::new(vec![BigUint::one()])),
                (2, [b]) => {
                    let (a, c) = (&b.entries()[0], &b.entries()[1]);
                    if (a * c).is_negative() {
                        Ok(KVector::new(vec![
                            a.abs().to_biguint().expect("abs"),
                            c.abs().to_biguint().expect("abs"),
                        ]))
                    } else {
                        Err(not_qa("lattice vector does not relate the two generators"))
                    }
                }
                _ => Err(not_qa("only rank-one lattices on two generators are recognized")),
            }
        }
    }
}

/// `ω̄` of the class of `γ`: `Σᵢ γᵢ·k_max/kᵢ`.
pub fn asymptotic_omega_of(k: &KVector, gamma: &NVec) -> Rational {
    let kmax = BigInt::from(k.kmax().clone());
    gamma
        .entries()
        .iter()
        .zip(k.k.entries())
        .map(|(g, ki)| Rational::new(BigInt::from(g.clone()) * &kmax, BigInt::from(ki.clone())))
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn asymptotic_omega_element(monoid: &Monoid, elem: &Element) -> Result<Rational> {
    let k = k_vector(monoid)?;
    let gamma = monoid.resolve(elem)?;
    Ok(asymptotic_omega_of(&k, &gamma))
}

/// `ω̄(S) = k_max / min kᵢ`, the largest value over the atoms.
pub fn asymptotic_omega_semigroup(monoid: &Monoid) -> Result<Rational> {
    let k = k_vector(monoid)?;
    Ok(Rational::new(
        BigInt::from(k.kmax().clone()),
        BigInt::from(k.kmin().clone()),
    ))
}

/// The ratios `ω(n·x)/n` for `n = 1..=nmax`.
pub fn empirical_ratio_sequence(
    monoid: &Monoid,
    elem: &Element,
    nmax: u64,
    opts: &OmegaOptions,
) -> Result<Vec<Rational>> {
    let gamma = monoid.resolve(elem)?;
    map_all((1..=nmax).collect(), |n| {
        let multiple = gamma.scale(&BigUint::from(n));
        let report = omega_element(monoid, &Element::Expression(multiple), opts)?;
        Ok(Rational::new(BigInt::from(report.value), BigInt::from(n)))
    })
    .into_iter()
    .collect()
}
