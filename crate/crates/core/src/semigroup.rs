//! Semigroup descriptions, normalization, membership and numerical-semigroup utilities.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::diophantine::{self, IntMatrix, Limits};
use crate::error::{Error, Result};
use crate::lattice;
use crate::vector::{check_arity, NVec, ZVec};

/// Largest modulus for which residue tables are built.
pub const MAX_RESIDUE_TABLE: u64 = 1 << 24;

/// A finitely generated cancellative reduced monoid, given in one of four ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupSpec {
    /// Submonoid of `N` generated by the listed naturals.
    Numerical { generators: Vec<BigUint> },
    /// Submonoid of `N^d` generated by the columns.
    Affine { columns: Vec<NVec> },
    /// `N^2/σ` with `σ` generated by `((α,0),(0,β))`.
    TwoGen { alpha: BigUint, beta: BigUint },
    /// `N^p/σ` with `x σ y` iff `x − y` lies in the span of `basis`.
    Lattice { arity: usize, basis: Vec<ZVec> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Numerical,
    Affine,
    TwoGen,
    Lattice,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Numerical => "numerical",
            Mode::Affine => "affine",
            Mode::TwoGen => "twogen",
            Mode::Lattice => "lattice",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl SemigroupSpec {
    pub fn numerical(gens: &[u64]) -> Self {
        SemigroupSpec::Numerical {
            generators: gens.iter().map(|&g| g.into()).collect(),
        }
    }

    pub fn affine(cols: &[&[u64]]) -> Self {
        SemigroupSpec::Affine {
            columns: cols.iter().map(|c| NVec::from_u64s(c)).collect(),
        }
    }

    pub fn two_gen(alpha: u64, beta: u64) -> Self {
        SemigroupSpec::TwoGen {
            alpha: alpha.into(),
            beta: beta.into(),
        }
    }

    pub fn lattice(arity: usize, basis: &[&[i64]]) -> Self {
        SemigroupSpec::Lattice {
            arity,
            basis: basis.iter().map(|b| ZVec::from_i64s(b)).collect(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            SemigroupSpec::Numerical { .. } => Mode::Numerical,
            SemigroupSpec::Affine { .. } => Mode::Affine,
            SemigroupSpec::TwoGen { .. } => Mode::TwoGen,
            SemigroupSpec::Lattice { .. } => Mode::Lattice,
        }
    }

    /// Number of generators `p` (the length of exponent vectors).
    pub fn arity(&self) -> usize {
        match self {
            SemigroupSpec::Numerical { generators } => generators.len(),
            SemigroupSpec::Affine { columns } => columns.len(),
            SemigroupSpec::TwoGen { .. } => 2,
            SemigroupSpec::Lattice { arity, .. } => *arity,
        }
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        match self {
            SemigroupSpec::Numerical { generators } => {
                write!(
                    f,
                    "<{}>",
                    join(generators.iter().map(ToString::to_string).collect())
                )
            }
            SemigroupSpec::Affine { columns } => {
                write!(f, "<{}>", join(columns.iter().map(ToString::to_string).collect()))
            }
            SemigroupSpec::TwoGen { alpha, beta } => {
                write!(f, "N^2/<(({alpha},0),(0,{beta}))>")
            }
            SemigroupSpec::Lattice { arity, basis } => write!(
                f,
                "N^{arity}/<{}>",
                join(basis.iter().map(ToString::to_string).collect())
            ),
        }
    }
}

/// An element of the monoid: either a point of the ambient space or the class
/// of an exponent vector `γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    /// A point of `N^d` (length one for numerical semigroups).
    Ambient(NVec),
    /// The class `[γ]σ` of an exponent vector.
    Expression(NVec),
}

impl Element {
    pub fn value(n: u64) -> Self {
        Element::Ambient(NVec::from_u64s(&[n]))
    }

    pub fn expression(g: &[u64]) -> Self {
        Element::Expression(NVec::from_u64s(g))
    }
}

fn to_u64(x: &BigUint) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::TooLarge(x.to_string()))
}

/// Minimum of `⟨gens⟩` in each residue class modulo `modulus` (Dijkstra over
/// residues), plus the generator used to reach each class. Unreachable
/// classes hold `u128::MAX`.
fn residue_table(gens: &[u64], modulus: u64) -> Result<(Vec<u128>, Vec<u32>)> {
    if modulus > MAX_RESIDUE_TABLE {
        return Err(Error::TooLarge(format!("modulus {modulus}")));
    }
    let m = modulus as usize;
    let mut dist = vec![u128::MAX; m];
    let mut pred = vec![u32::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u128, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for (i, &g) in gens.iter().enumerate() {
            let nd = d + g as u128;
            let nr = ((r as u64 + g % modulus) % modulus) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                pred[nr] = i as u32;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok((dist, pred))
}

fn in_table(table: &[u128], n: &BigUint) -> bool {
    let m = table.len() as u64;
    let r = (n % m).to_usize().expect("residue below modulus");
    table[r] != u128::MAX && *n >= BigUint::from(table[r])
}

fn gcd_all(xs: &[BigUint]) -> BigUint {
    xs.iter().fold(BigUint::zero(), |g, x| g.gcd(x))
}

/// Canonical form of a description: see each mode's rules below.
///
/// * numerical: sorted, deduplicated, divided by the gcd, non-minimal generators dropped;
/// * affine: duplicate and non-minimal columns dropped (first occurrence order kept);
/// * two-generated and lattice: checked and passed through.
pub fn normalize_spec(raw: &SemigroupSpec) -> Result<SemigroupSpec> {
    match raw {
        SemigroupSpec::Numerical { generators } => {
            if generators.is_empty() {
                return Err(Error::EmptyGenerators);
            }
            if generators.iter().any(Zero::is_zero) {
                return Err(Error::InvalidSpec("numerical generators must be positive".into()));
            }
            let mut gens = generators.clone();
            gens.sort();
            gens.dedup();
            let g = gcd_all(&gens);
            let gens: Vec<u64> = gens.iter().map(|x| to_u64(&(x / &g))).collect::<Result<_>>()?;
            let mut kept: Vec<u64> = Vec::new();
            for &s in &gens {
                let redundant = match kept.first() {
                    Some(&m) => {
                        let (table, _) = residue_table(&kept, m)?;
                        in_table(&table, &BigUint::from(s))
                    }
                    None => false,
                };
                if !redundant {
                    kept.push(s);
                }
            }
            Ok(SemigroupSpec::numerical(&kept))
        }
        SemigroupSpec::Affine { columns } => {
            let Some(d) = columns.first().map(NVec::len) else {
                return Err(Error::EmptyGenerators);
            };
            if d == 0 {
                return Err(Error::InvalidSpec(
                    "affine columns must have positive dimension".into(),
                ));
            }
            for c in columns {
                check_arity(d, c.len())?;
                if c.is_zero() {
                    return Err(Error::NotReduced("zero column".into()));
                }
            }
            let mut uniq: Vec<NVec> = Vec::new();
            for c in columns {
                if !uniq.contains(c) {
                    uniq.push(c.clone());
                }
            }
            let mut kept = Vec::new();
            for (i, c) in uniq.iter().enumerate() {
                let others: Vec<ZVec> = uniq
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, o)| o.to_zvec())
                    .collect();
                let redundant = !others.is_empty() && {
                    let m = IntMatrix::from_columns(&others)?;
                    diophantine::find_solution(&m, &c.to_zvec(), &[], &Limits::default())?.is_some()
                };
                if !redundant {
                    kept.push(c.clone());
                }
            }
            Ok(SemigroupSpec::Affine { columns: kept })
        }
        SemigroupSpec::TwoGen { alpha, beta } => {
            if *alpha <= BigUint::one() || *beta <= BigUint::one() {
                return Err(Error::InvalidTwoGen {
                    alpha: alpha.to_string(),
                    beta: beta.to_string(),
                });
            }
            Ok(raw.clone())
        }
        SemigroupSpec::Lattice { arity, basis } => {
            if *arity == 0 {
                return Err(Error::EmptyGenerators);
            }
            for b in basis {
                check_arity(*arity, b.len())?;
                if b.is_zero() {
                    return Err(Error::InvalidSpec("zero lattice basis vector".into()));
                }
            }
            check_lattice_reduced(*arity, &lattice::echelon_basis(basis))?;
            Ok(raw.clone())
        }
    }
}

/// Columns `[I | −B | B]` of the system `y − B·z⁺ + B·z⁻ = 0`.
fn lattice_system(arity: usize, basis: &[ZVec]) -> Result<IntMatrix> {
    let id = IntMatrix::identity(arity);
    if basis.is_empty() {
        return Ok(id);
    }
    let b = IntMatrix::from_columns(basis)?;
    id.hstack(&b.neg())?.hstack(&b)
}

/// `G ∩ N^p = {0}`: any minimal nonzero `y = B·z ≥ 0` would witness a nontrivial unit.
fn check_lattice_reduced(arity: usize, basis: &[ZVec]) -> Result<()> {
    if basis.is_empty() {
        return Ok(());
    }
    let r = basis.len();
    let m = lattice_system(arity, basis)?;
    let exclusive: Vec<(usize, usize)> = (0..r).map(|j| (arity + j, arity + r + j)).collect();
    let found = diophantine::Frontier {
        matrix: &m,
        rhs: None,
        exclusive: &exclusive,
        first_only: false,
        max_nodes: Limits::default().max_nodes,
        guide: None,
    }
    .run()?;
    match found.homogeneous.first() {
        None => Ok(()),
        Some(s) => Err(Error::NotReduced(format!(
            "lattice contains the nonnegative vector {}",
            NVec::new(s[..arity].iter().map(|&c| c.into()).collect())
        ))),
    }
}

#[derive(Debug, Clone)]
pub(crate) enum Structure {
    Numerical {
        gens: Vec<u64>,
        /// Apéry set with respect to the smallest generator, by residue.
        apery: Vec<u128>,
        pred: Vec<u32>,
    },
    Affine {
        /// `d × p`, generators as columns.
        matrix: IntMatrix,
    },
    Lattice {
        /// Echelon basis of `G`, one vector per entry.
        basis: Vec<ZVec>,
    },
}

/// A normalized description with its precomputed tables.
#[derive(Debug, Clone)]
pub struct Monoid {
    spec: SemigroupSpec,
    pub(crate) structure: Structure,
}

impl Monoid {
    pub fn new(raw: &SemigroupSpec) -> Result<Self> {
        let spec = normalize_spec(raw)?;
        let structure = match &spec {
            SemigroupSpec::Numerical { generators } => {
                let gens: Vec<u64> = generators.iter().map(to_u64).collect::<Result<_>>()?;
                let (apery, pred) = residue_table(&gens, gens[0])?;
                Structure::Numerical { gens, apery, pred }
            }
            SemigroupSpec::Affine { columns } => {
                let cols: Vec<ZVec> = columns.iter().map(NVec::to_zvec).collect();
                Structure::Affine {
                    matrix: IntMatrix::from_columns(&cols)?,
                }
            }
            SemigroupSpec::TwoGen { alpha, beta } => Structure::Lattice {
                basis: vec![ZVec::new(vec![
                    BigInt::from(alpha.clone()),
                    -BigInt::from(beta.clone()),
                ])],
            },
            SemigroupSpec::Lattice { basis, .. } => Structure::Lattice {
                basis: lattice::echelon_basis(basis),
            },
        };
        Ok(Monoid { spec, structure })
    }

    pub fn spec(&self) -> &SemigroupSpec {
        &self.spec
    }

    pub fn mode(&self) -> Mode {
        self.spec.mode()
    }

    pub fn arity(&self) -> usize {
        self.spec.arity()
    }

    /// Generator matrix for modes with an ambient embedding.
    pub fn generator_matrix(&self) -> Option<IntMatrix> {
        match &self.structure {
            Structure::Numerical { gens, .. } => {
                let row = gens.iter().map(|&g| BigInt::from(g)).collect();
                Some(IntMatrix::from_rows(vec![row]).expect("nonempty"))
            }
            Structure::Affine { matrix } => Some(matrix.clone()),
            Structure::Lattice { .. } => None,
        }
    }

    /// Image of an exponent vector in the ambient space.
    pub fn evaluate(&self, gamma: &NVec) -> Result<NVec> {
        check_arity(self.arity(), gamma.len())?;
        let m = self.generator_matrix().ok_or(Error::UnsupportedMode {
            op: "evaluate",
            mode: self.mode().name(),
        })?;
        Ok(m.mul_nvec(gamma)?.to_nvec().expect("nonnegative generators"))
    }

    /// Ambient dimension `d` (1 for numerical semigroups).
    pub fn ambient_dim(&self) -> Option<usize> {
        match &self.structure {
            Structure::Numerical { .. } => Some(1),
            Structure::Affine { matrix } => Some(matrix.rows()),
            Structure::Lattice { .. } => None,
        }
    }

    /// Numerical membership through the Apéry table: `n ∈ S` iff `n ≥ Ap(n mod s₁)`.
    pub(crate) fn numerical_contains(&self, n: &BigUint) -> bool {
        match &self.structure {
            Structure::Numerical { apery, .. } => in_table(apery, n),
            _ => unreachable!("numerical structure"),
        }
    }

    /// A factorization of `v` over the generators, or `None` if `v ∉ S`.
    pub fn membership(&self, v: &NVec) -> Result<Option<NVec>> {
        self.membership_with(v, &Limits::default())
    }

    pub fn membership_with(&self, v: &NVec, limits: &Limits) -> Result<Option<NVec>> {
        match &self.structure {
            Structure::Numerical { gens, apery, pred } => {
                check_arity(1, v.len())?;
                let n = &v.entries()[0];
                if !in_table(apery, n) {
                    return Ok(None);
                }
                let m = gens[0];
                let mut r = (n % m).to_u64().expect("residue");
                let mut counts = vec![BigUint::zero(); gens.len()];
                counts[0] = (n - BigUint::from(apery[r as usize])) / m;
                while r != 0 {
                    let i = pred[r as usize] as usize;
                    counts[i] += 1u32;
                    r = (r + m - gens[i] % m) % m;
                }
                Ok(Some(NVec::new(counts)))
            }
            Structure::Affine { matrix } => {
                check_arity(matrix.rows(), v.len())?;
                diophantine::find_solution(matrix, &v.to_zvec(), &[], limits)
            }
            Structure::Lattice { .. } => Err(Error::UnsupportedMode {
                op: "membership",
                mode: self.mode().name(),
            }),
        }
    }

    /// The exponent vector `γ` an element stands for. Ambient points are
    /// factorized first; any factorization works since `ω` only depends on the class.
    pub fn resolve(&self, elem: &Element) -> Result<NVec> {
        match elem {
            Element::Expression(g) => {
                check_arity(self.arity(), g.len())?;
                Ok(g.clone())
            }
            Element::Ambient(v) => self.membership(v)?.ok_or_else(|| {
                Error::NotMember(match v.entries() {
                    [n] => n.to_string(),
                    _ => v.to_string(),
                })
            }),
        }
    }

    pub(crate) fn lattice_basis(&self) -> Option<&[ZVec]> {
        match &self.structure {
            Structure::Lattice { basis } => Some(basis),
            _ => None,
        }
    }

    /// The `p × r` system `[I | −B | B]` used for lattice-mode queries.
    pub(crate) fn lattice_system(&self) -> Option<Result<IntMatrix>> {
        self.lattice_basis().map(|b| lattice_system(self.arity(), b))
    }
}

/// Returns some factorization of `v`, or `None` if `v` is not in the monoid.
pub fn membership(spec: &SemigroupSpec, v: &NVec) -> Result<Option<NVec>> {
    Monoid::new(spec)?.membership(v)
}

fn numerical_gens_gcd_one(spec: &SemigroupSpec) -> Result<Vec<u64>> {
    let SemigroupSpec::Numerical { generators } = spec else {
        return Err(Error::NotNumerical);
    };
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let g = gcd_all(generators);
    if !g.is_one() {
        return Err(Error::GcdNotOne(g.to_string()));
    }
    let mut gens: Vec<u64> = generators.iter().map(to_u64).collect::<Result<_>>()?;
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Largest integer not in the numerical semigroup, `−1` when it is all of `N`.
pub fn frobenius(spec: &SemigroupSpec) -> Result<BigInt> {
    let gens = numerical_gens_gcd_one(spec)?;
    let (table, _) = residue_table(&gens, gens[0])?;
    let max = table.iter().max().copied().expect("nonempty table");
    Ok(BigInt::from(max) - BigInt::from(gens[0]))
}

/// Apéry set of `m`: the least element of the semigroup in each residue class
/// modulo `m`, listed by residue.
pub fn apery(spec: &SemigroupSpec, m: &BigUint) -> Result<Vec<BigUint>> {
    let gens = numerical_gens_gcd_one(spec)?;
    let member = {
        let (table, _) = residue_table(&gens, gens[0])?;
        in_table(&table, m)
    };
    if m.is_zero() || !member {
        return Err(Error::NotMember(m.to_string()));
    }
    let (table, _) = residue_table(&gens, to_u64(m)?)?;
    Ok(table.into_iter().map(BigUint::from).collect())
}

/// Basis of the integer kernel of the generator matrix.
pub fn kernel_lattice(spec: &SemigroupSpec) -> Result<Vec<ZVec>> {
    let m = match spec {
        SemigroupSpec::Affine { columns } => {
            IntMatrix::from_columns(&columns.iter().map(NVec::to_zvec).collect::<Vec<_>>())?
        }
        SemigroupSpec::Numerical { generators } => {
            IntMatrix::from_rows(vec![generators.iter().map(|g| BigInt::from(g.clone())).collect()])?
        }
        _ => {
            return Err(Error::UnsupportedMode {
                op: "kernel_lattice",
                mode: spec.mode().name(),
            })
        }
    };
    Ok(lattice::integer_kernel(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member_scan(gens: &[u64], n: u64) -> bool {
        let mut reach = vec![false; n as usize + 1];
        reach[0] = true;
        for v in 1..=n as usize {
            reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
        }
        reach[n as usize]
    }

    #[test]
    fn normalize_numerical() {
        let s = normalize_spec(&SemigroupSpec::numerical(&[6, 4, 10])).unwrap();
        assert!(member_scan(&[2, 3], 5));
        assert_eq!(s, SemigroupSpec::numerical(&[2, 3]));
        let s = normalize_spec(&SemigroupSpec::numerical(&[3, 5])).unwrap();
        assert_eq!(s, SemigroupSpec::numerical(&[3, 5]));
    }

    #[test]
    fn normalize_affine_keeps_minimal_columns() {
        let raw = SemigroupSpec::affine(&[&[5, 3], &[5, 11], &[2, 7], &[11, 4]]);
        assert_eq!(normalize_spec(&raw).unwrap(), raw);
        let dup = SemigroupSpec::affine(&[&[1, 0], &[0, 1], &[1, 0], &[1, 1]]);
        assert_eq!(
            normalize_spec(&dup).unwrap(),
            SemigroupSpec::affine(&[&[1, 0], &[0, 1]])
        );
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            normalize_spec(&SemigroupSpec::Numerical { generators: vec![] }),
            Err(Error::EmptyGenerators)
        );
        assert!(matches!(
            normalize_spec(&SemigroupSpec::two_gen(1, 5)),
            Err(Error::InvalidTwoGen { .. })
        ));
        assert!(matches!(
            normalize_spec(&SemigroupSpec::affine(&[&[0, 0], &[1, 2]])),
            Err(Error::NotReduced(_))
        ));
        assert!(matches!(
            normalize_spec(&SemigroupSpec::lattice(2, &[&[1, 1]])),
            Err(Error::NotReduced(_))
        ));
        assert!(normalize_spec(&SemigroupSpec::lattice(2, &[&[4, -2]])).is_ok());
    }

    #[test]
    fn membership_witnesses() {
        let ns = SemigroupSpec::numerical(&[115, 212, 333, 571]);
        let w = membership(&ns, &NVec::from_u64s(&[10000])).unwrap().unwrap();
        let gens = [115u64, 212, 333, 571];
        let total: u64 = w.to_u64s().unwrap().iter().zip(gens).map(|(a, b)| a * b).sum();
        assert_eq!(total, 10000);
        let paper_expr = 3 * 115 + 2 * 212 + 2 * 333 + 15 * 571;
        assert_eq!(paper_expr, 10000);

        assert_eq!(
            membership(&SemigroupSpec::numerical(&[3, 5]), &NVec::from_u64s(&[4])).unwrap(),
            None
        );

        let aff = SemigroupSpec::affine(&[&[5, 3], &[5, 11], &[2, 7], &[11, 4]]);
        let m = Monoid::new(&aff).unwrap();
        let w = m.membership(&NVec::from_u64s(&[154, 118])).unwrap().unwrap();
        assert_eq!(m.evaluate(&w).unwrap(), NVec::from_u64s(&[154, 118]));
        assert_eq!(
            m.evaluate(&NVec::from_u64s(&[3, 5, 2, 10])).unwrap(),
            NVec::from_u64s(&[154, 118])
        );
    }

    #[test]
    fn membership_unsupported_for_presentations() {
        let err = membership(&SemigroupSpec::two_gen(7, 5), &NVec::from_u64s(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::UnsupportedMode { .. }));
    }

    #[test]
    fn frobenius_values() {
        let scan = (1..=15u64).filter(|&n| !member_scan(&[3, 5], n)).max().unwrap();
        assert_eq!(scan, 7);
        assert_eq!(
            frobenius(&SemigroupSpec::numerical(&[3, 5])).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            frobenius(&SemigroupSpec::numerical(&[2, 3])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            frobenius(&SemigroupSpec::numerical(&[1, 4])).unwrap(),
            BigInt::from(-1)
        );

        let gens = [115u64, 212, 333, 571];
        let limit = 115 * 212;
        let oracle = (1..=limit).filter(|&n| !member_scan(&gens, n)).max().unwrap();
        assert_eq!(
            frobenius(&SemigroupSpec::numerical(&gens)).unwrap(),
            BigInt::from(oracle)
        );
    }

    #[test]
    fn frobenius_errors() {
        assert_eq!(
            frobenius(&SemigroupSpec::numerical(&[4, 6])),
            Err(Error::GcdNotOne("2".into()))
        );
        assert_eq!(frobenius(&SemigroupSpec::two_gen(3, 2)), Err(Error::NotNumerical));
    }

    #[test]
    fn apery_sets() {
        let s = SemigroupSpec::numerical(&[3, 5]);
        let ap = |m: u64| -> Vec<u64> {
            apery(&s, &BigUint::from(m))
                .unwrap()
                .iter()
                .map(|x| x.to_u64().unwrap())
                .collect()
        };
        assert_eq!(ap(3), vec![0, 10, 5]);
        assert_eq!(ap(5), vec![0, 6, 12, 3, 9]);
        let s2 = SemigroupSpec::numerical(&[2, 3]);
        assert_eq!(
            apery(&s2, &BigUint::from(2u32)).unwrap(),
            vec![BigUint::from(0u32), BigUint::from(3u32)]
        );
        assert!(matches!(
            apery(&s, &BigUint::from(4u32)),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn kernel_lattice_examples() {
        assert_eq!(
            kernel_lattice(&SemigroupSpec::affine(&[&[3], &[5]])).unwrap(),
            vec![ZVec::from_i64s(&[5, -3])]
        );
        assert_eq!(
            kernel_lattice(&SemigroupSpec::affine(&[&[1, 0], &[1, 1], &[1, 2]])).unwrap(),
            vec![ZVec::from_i64s(&[1, -2, 1])]
        );
        assert!(kernel_lattice(&SemigroupSpec::two_gen(3, 2)).is_err());
    }
}
