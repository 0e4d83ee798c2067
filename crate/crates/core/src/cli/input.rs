//! Semigroup and element descriptions: inline flags and JSON files.

use std::path::Path;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::semigroup::{Element, Monoid, SemigroupSpec};
use crate::vector::{NVec, ZVec};

/// An integer in a JSON document: a number, or a decimal string for big values.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

impl JsonInt {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Signed(v) => Ok((*v).into()),
            JsonInt::Unsigned(v) => Ok((*v).into()),
            JsonInt::Text(s) => parse_int(s),
        }
    }

    fn to_biguint(&self) -> Result<BigUint> {
        self.to_bigint()?
            .to_biguint()
            .ok_or_else(|| Error::InvalidSpec(format!("expected a natural number, found {self:?}")))
    }
}

/// `{"mode": …, "generators" | "columns" | "alpha","beta" | "basis": …}`, with an
/// optional `element`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    pub mode: String,
    #[serde(default)]
    pub generators: Option<Vec<JsonInt>>,
    #[serde(default)]
    pub columns: Option<Vec<Vec<JsonInt>>>,
    #[serde(default)]
    pub alpha: Option<JsonInt>,
    #[serde(default)]
    pub beta: Option<JsonInt>,
    #[serde(default)]
    pub basis: Option<Vec<Vec<JsonInt>>>,
    /// Needed for a lattice with an empty basis.
    #[serde(default)]
    pub arity: Option<usize>,
    #[serde(default)]
    pub element: Option<ElementDoc>,
}

/// Exactly one of `{"value": n}`, `{"vector": […]}`, `{"expression": […]}`.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    #[serde(default)]
    pub value: Option<JsonInt>,
    #[serde(default)]
    pub vector: Option<Vec<JsonInt>>,
    #[serde(default)]
    pub expression: Option<Vec<JsonInt>>,
}

fn missing(mode: &str, field: &str) -> Error {
    Error::InvalidSpec(format!("mode {mode} needs \"{field}\""))
}

fn naturals(xs: &[JsonInt]) -> Result<Vec<BigUint>> {
    xs.iter().map(JsonInt::to_biguint).collect()
}

impl SpecDoc {
    pub fn to_spec(&self) -> Result<SemigroupSpec> {
        let mode = self.mode.as_str();
        match mode {
            "numerical" => {
                let g = self
                    .generators
                    .as_ref()
                    .ok_or_else(|| missing(mode, "generators"))?;
                Ok(SemigroupSpec::Numerical {
                    generators: naturals(g)?,
                })
            }
            "affine" => {
                let cols = self.columns.as_ref().ok_or_else(|| missing(mode, "columns"))?;
                let columns = cols
                    .iter()
                    .map(|c| naturals(c).map(NVec::new))
                    .collect::<Result<_>>()?;
                Ok(SemigroupSpec::Affine { columns })
            }
            "twogen" => Ok(SemigroupSpec::TwoGen {
                alpha: self
                    .alpha
                    .as_ref()
                    .ok_or_else(|| missing(mode, "alpha"))?
                    .to_biguint()?,
                beta: self
                    .beta
                    .as_ref()
                    .ok_or_else(|| missing(mode, "beta"))?
                    .to_biguint()?,
            }),
            "lattice" => {
                let rows = self.basis.as_ref().ok_or_else(|| missing(mode, "basis"))?;
                let basis = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(JsonInt::to_bigint)
                            .collect::<Result<_>>()
                            .map(ZVec::new)
                    })
                    .collect::<Result<Vec<_>>>()?;
                lattice_spec(self.arity, basis)
            }
            other => Err(Error::InvalidSpec(format!(
                "unknown mode {other:?} (expected numerical, affine, twogen or lattice)"
            ))),
        }
    }
}

impl ElementDoc {
    pub fn to_element(&self) -> Result<Element> {
        match (&self.value, &self.vector, &self.expression) {
            (Some(v), None, None) => Ok(Element::Ambient(NVec::new(vec![v.to_biguint()?]))),
            (None, Some(v), None) => Ok(Element::Ambient(NVec::new(naturals(v)?))),
            (None, None, Some(e)) => Ok(Element::Expression(NVec::new(naturals(e)?))),
            _ => Err(Error::InvalidSpec(
                "an element needs exactly one of value, vector, expression".into(),
            )),
        }
    }
}

fn lattice_spec(arity: Option<usize>, basis: Vec<ZVec>) -> Result<SemigroupSpec> {
    let arity = match (arity, basis.first()) {
        (Some(a), _) => a,
        (None, Some(v)) => v.len(),
        (None, None) => return Err(Error::InvalidSpec("an empty lattice basis needs an arity".into())),
    };
    Ok(SemigroupSpec::Lattice { arity, basis })
}

pub fn read_spec_file(path: &Path) -> Result<SpecDoc> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::InvalidSpec(format!("not an integer: {s:?}")))
}

fn parse_nat(s: &str) -> Result<BigUint> {
    BigUint::from_str(s.trim()).map_err(|_| Error::InvalidSpec(format!("not a natural number: {s:?}")))
}

/// `"1,2,3"`.
pub fn parse_naturals(s: &str) -> Result<Vec<BigUint>> {
    s.split(',').map(parse_nat).collect()
}

fn parse_integers(s: &str) -> Result<Vec<BigInt>> {
    s.split(',').map(parse_int).collect()
}

pub fn parse_numerical(s: &str) -> Result<SemigroupSpec> {
    Ok(SemigroupSpec::Numerical {
        generators: parse_naturals(s)?,
    })
}

/// `"5,3;5,11"`: columns separated by semicolons.
pub fn parse_affine(s: &str) -> Result<SemigroupSpec> {
    let columns = s
        .split(';')
        .map(|c| parse_naturals(c).map(NVec::new))
        .collect::<Result<_>>()?;
    Ok(SemigroupSpec::Affine { columns })
}

pub fn parse_two_gen(s: &str) -> Result<SemigroupSpec> {
    match parse_naturals(s)?.as_slice() {
        [alpha, beta] => Ok(SemigroupSpec::TwoGen {
            alpha: alpha.clone(),
            beta: beta.clone(),
        }),
        _ => Err(Error::InvalidSpec(format!(
            "--twogen expects alpha,beta, found {s:?}"
        ))),
    }
}

/// `"1,-1,0;0,2,-2"`; an empty string is the empty basis.
pub fn parse_lattice(s: &str, arity: Option<usize>) -> Result<SemigroupSpec> {
    let basis = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(';')
            .map(|v| parse_integers(v).map(ZVec::new))
            .collect::<Result<_>>()?
    };
    lattice_spec(arity, basis)
}

/// Rewrites an exponent vector over the generators as given into an element of
/// the normalized monoid. Normalization may sort, drop or rescale generators
/// of numerical and affine specs, so such vectors are evaluated first.
pub fn adapt_element(raw: &SemigroupSpec, monoid: &Monoid, elem: Element) -> Result<Element> {
    let Element::Expression(gamma) = &elem else {
        return Ok(elem);
    };
    if raw == monoid.spec() {
        return Ok(elem);
    }
    let sum = |cols: &mut dyn Iterator<Item = (&BigUint, &[BigUint])>, dim: usize| {
        let mut acc = vec![BigUint::zero(); dim];
        for (c, col) in cols {
            for (a, x) in acc.iter_mut().zip(col) {
                *a += c * x;
            }
        }
        acc
    };
    match raw {
        SemigroupSpec::Numerical { generators } => {
            check_len(generators.len(), gamma)?;
            let g = generators.iter().fold(BigUint::zero(), |g, x| g.gcd(x));
            let mut it = gamma
                .entries()
                .iter()
                .zip(generators.iter().map(std::slice::from_ref));
            let value = sum(&mut it, 1).remove(0);
            Ok(Element::Ambient(NVec::new(vec![if g.is_zero() {
                value
            } else {
                value / g
            }])))
        }
        SemigroupSpec::Affine { columns } => {
            check_len(columns.len(), gamma)?;
            let dim = columns.first().map_or(0, NVec::len);
            let mut it = gamma.entries().iter().zip(columns.iter().map(NVec::entries));
            Ok(Element::Ambient(NVec::new(sum(&mut it, dim))))
        }
        _ => Ok(elem),
    }
}

fn check_len(expected: usize, gamma: &NVec) -> Result<()> {
    if expected != gamma.len() {
        return Err(Error::MixedArity {
            expected,
            found: gamma.len(),
        });
    }
    Ok(())
}

/// `n` as a machine integer for loop bounds.
#[allow(dead_code)]
pub fn small(n: &BigUint, what: &str) -> Result<u64> {
    n.to_u64().ok_or_else(|| Error::TooLarge(format!("{what} {n}")))
}
