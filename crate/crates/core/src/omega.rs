//! ω-primality of elements and of whole monoids.
//!
//! `ω([γ]σ)` is the largest coordinate sum over `Minimals(E([γ]σ + S))`.

use std::fmt;
use std::time::Duration;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::asymptotic::k_vector;
use crate::clock::{map_all, Instant};
use crate::diophantine::{
    brute_minimals_bounded, ideal_preimage_minimals, minimals_filter, sound_bound, Antichain, Limits,
};
use crate::error::{Error, Result};
use crate::semigroup::{Element, Mode, Monoid};
use crate::vector::{check_arity, NVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Engine,
    TwoGenClosed,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Engine => "engine",
            Method::TwoGenClosed => "two-gen-closed",
            Method::Oracle => "oracle",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "engine" => Some(Method::Engine),
            "two-gen-closed" | "closed" => Some(Method::TwoGenClosed),
            "oracle" => Some(Method::Oracle),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default)]
pub struct OmegaOptions {
    pub limits: Limits,
    /// Force a method instead of the mode's default.
    pub method: Option<Method>,
    /// Run every applicable method and fail on disagreement.
    pub cross_check: bool,
}

/// Values from every applicable method, plus the uncorrected two-generator
/// formula for reference (not compared).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossCheck {
    pub engine: Option<BigUint>,
    pub oracle: Option<BigUint>,
    pub closed: Option<BigUint>,
    pub printed_formula: Option<BigUint>,
}

impl CrossCheck {
    fn values(&self) -> impl Iterator<Item = (Method, &BigUint)> {
        [
            (Method::Engine, &self.engine),
            (Method::Oracle, &self.oracle),
            (Method::TwoGenClosed, &self.closed),
        ]
        .into_iter()
        .filter_map(|(m, v)| v.as_ref().map(|v| (m, v)))
    }

    pub fn agree(&self) -> bool {
        let mut vals = self.values().map(|(_, v)| v);
        match vals.next() {
            Some(first) => vals.all(|v| v == first),
            None => true,
        }
    }
}

impl fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().map(|(m, v)| format!("{m}={v}")).collect();
        write!(f, "{}", parts.join(" "))?;
        if let Some(p) = &self.printed_formula {
            write!(f, " uncorrected-two-gen-formula={p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct OmegaReport {
    pub value: BigUint,
    /// The full minimal set `Minimals(E([γ]σ + S))`.
    pub minimals: Antichain,
    /// The exponent vector the computation started from.
    pub expression: NVec,
    pub method: Method,
    pub elapsed: Duration,
    pub cross_check: Option<CrossCheck>,
}

impl OmegaReport {
    /// Minimal elements attaining the maximum norm.
    pub fn witnesses(&self) -> Vec<NVec> {
        self.minimals.argmax_norm()
    }
}

fn check_two_gen(alpha: &BigUint, beta: &BigUint) -> Result<()> {
    if *alpha <= BigUint::one() || *beta <= BigUint::one() {
        return Err(Error::InvalidTwoGen {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
        });
    }
    Ok(())
}

/// Minimal elements of `E([γ]σ + S)` for `σ = ⟨((α,0),(0,β))⟩`: the minimal
/// points among the class `{γ + λ(α,−β)}` inside `N²` and the two axis points
/// `(0, γ₂ + (⌊γ₁/α⌋+1)β)` and `(γ₁ + (⌊γ₂/β⌋+1)α, 0)`.
pub fn two_gen_minimals(alpha: &BigUint, beta: &BigUint, gamma: &NVec) -> Result<Antichain> {
    check_two_gen(alpha, beta)?;
    check_arity(2, gamma.len())?;
    let (g1, g2) = (&gamma.entries()[0], &gamma.entries()[1]);
    let (down, up) = (g1 / alpha, g2 / beta);
    let mut pts = Vec::new();
    // λ = −down ..= up, written as γ − t(α,−β) and γ + t(α,−β)
    let mut t = BigUint::zero();
    while t <= down {
        pts.push(NVec::new(vec![g1 - &t * alpha, g2 + &t * beta]));
        t += 1u32;
    }
    let mut t = BigUint::one();
    while t <= up {
        pts.push(NVec::new(vec![g1 + &t * alpha, g2 - &t * beta]));
        t += 1u32;
    }
    pts.push(NVec::new(vec![BigUint::zero(), g2 + (&down + 1u32) * beta]));
    pts.push(NVec::new(vec![g1 + (&up + 1u32) * alpha, BigUint::zero()]));
    minimals_filter(pts)
}

/// `ω([γ]σ)` for `σ = ⟨((α,0),(0,β))⟩`, as `max(T_x, T_y)` where
/// `T_x = γ₁ + γ₂α/β` if `β | γ₂`, else `γ₁ + (⌊γ₂/β⌋+1)α`, and symmetrically
/// for `T_y`. When `β | γ₂` the axis point `(γ₁ + (γ₂/β + 1)α, 0)` is dominated
/// by the class member `(γ₁ + γ₂α/β, 0)`, which is then the minimal one.
pub fn omega_two_gen_closed(alpha: &BigUint, beta: &BigUint, gamma: &NVec) -> Result<BigUint> {
    check_two_gen(alpha, beta)?;
    check_arity(2, gamma.len())?;
    if gamma.is_zero() {
        return Ok(BigUint::zero());
    }
    let (g1, g2) = (&gamma.entries()[0], &gamma.entries()[1]);
    let axis = |own: &BigUint, other: &BigUint, a: &BigUint, b: &BigUint| {
        let (q, r) = (other / b, other % b);
        if r.is_zero() {
            own + q * a
        } else {
            own + (q + 1u32) * a
        }
    };
    let tx = axis(g1, g2, alpha, beta);
    let ty = axis(g2, g1, beta, alpha);
    Ok(tx.max(ty))
}

/// `max(γ₂ + (⌊γ₁/α⌋+1)β, γ₁ + (⌊γ₂/β⌋+1)α)`, the uncorrected expression. It
/// overshoots when `α | γ₁` or `β | γ₂`; kept for cross-check diagnostics.
pub fn two_gen_uncorrected_formula(alpha: &BigUint, beta: &BigUint, gamma: &NVec) -> Result<BigUint> {
    check_two_gen(alpha, beta)?;
    check_arity(2, gamma.len())?;
    let (g1, g2) = (&gamma.entries()[0], &gamma.entries()[1]);
    let a = g2 + (g1 / alpha + 1u32) * beta;
    let b = g1 + (g2 / beta + 1u32) * alpha;
    Ok(a.max(b))
}

/// `(α, β)` when the monoid is two-generated with `α[e₁] = β[e₂]`, `α, β > 1`.
pub fn two_gen_params(monoid: &Monoid) -> Option<(BigUint, BigUint)> {
    if monoid.arity() != 2 {
        return None;
    }
    let k = k_vector(monoid).ok()?;
    let (a, b) = (&k.k.entries()[0], &k.k.entries()[1]);
    (*a > BigUint::one() && *b > BigUint::one()).then(|| (a.clone(), b.clone()))
}

fn run_method(
    monoid: &Monoid,
    gamma: &NVec,
    method: Method,
    limits: &Limits,
) -> Result<(BigUint, Antichain)> {
    let minimals = match method {
        Method::Engine => ideal_preimage_minimals(monoid, gamma, limits)?,
        Method::Oracle => {
            let (_, bound) = sound_bound(monoid, gamma)?;
            brute_minimals_bounded(monoid, gamma, &bound, limits)?
        }
        Method::TwoGenClosed => {
            let (a, b) = two_gen_params(monoid).ok_or(Error::UnsupportedMode {
                op: "two-gen-closed",
                mode: monoid.mode().name(),
            })?;
            let value = omega_two_gen_closed(&a, &b, gamma)?;
            return Ok((value, two_gen_minimals(&a, &b, gamma)?));
        }
    };
    Ok((minimals.max_norm(), minimals))
}

pub fn default_method(monoid: &Monoid) -> Method {
    if monoid.mode() == Mode::TwoGen {
        Method::TwoGenClosed
    } else {
        Method::Engine
    }
}

/// Runs every applicable method on `γ`.
pub fn cross_check(monoid: &Monoid, gamma: &NVec, limits: &Limits) -> Result<CrossCheck> {
    let mut cc = CrossCheck::default();
    let mut sets: Vec<(Method, Antichain)> = Vec::new();
    let (value, set) = run_method(monoid, gamma, Method::Engine, limits)?;
    cc.engine = Some(value);
    sets.push((Method::Engine, set));
    match run_method(monoid, gamma, Method::Oracle, limits) {
        Ok((value, set)) => {
            cc.oracle = Some(value);
            sets.push((Method::Oracle, set));
        }
        Err(Error::NotQuasiArchimedean(_)) => {}
        Err(e) => return Err(e),
    }
    if let Some((a, b)) = two_gen_params(monoid) {
        cc.closed = Some(omega_two_gen_closed(&a, &b, gamma)?);
        cc.printed_formula = Some(two_gen_uncorrected_formula(&a, &b, gamma)?);
        sets.push((Method::TwoGenClosed, two_gen_minimals(&a, &b, gamma)?));
    }
    if !cc.agree() {
        return Err(Error::CrossCheckMismatch(format!("omega of {gamma}: {cc}")));
    }
    if let Some((m, _)) = sets.iter().find(|(_, s)| *s != sets[0].1) {
        return Err(Error::CrossCheckMismatch(format!(
            "minimal sets of {gamma} differ between engine and {m}"
        )));
    }
    Ok(cc)
}

/// ω of an element.
pub fn omega_element(monoid: &Monoid, elem: &Element, opts: &OmegaOptions) -> Result<OmegaReport> {
    let start = Instant::now();
    let gamma = monoid.resolve(elem)?;
    let method = opts.method.unwrap_or_else(|| default_method(monoid));
    let (value, minimals) = run_method(monoid, &gamma, method, &opts.limits)?;
    let cc = if opts.cross_check {
        Some(cross_check(monoid, &gamma, &opts.limits)?)
    } else {
        None
    };
    Ok(OmegaReport {
        value,
        minimals,
        expression: gamma,
        method,
        elapsed: start.elapsed(),
        cross_check: cc,
    })
}

#[derive(Debug, Clone)]
pub struct SemigroupOmega {
    pub value: BigUint,
    /// One report per minimal generator, in generator order.
    pub per_generator: Vec<OmegaReport>,
    pub elapsed: Duration,
}

impl SemigroupOmega {
    pub fn per_generator_values(&self) -> Vec<BigUint> {
        self.per_generator.iter().map(|r| r.value.clone()).collect()
    }
}

/// ω(S): the maximum of ω over the atoms `[e₁],…,[e_p]`.
pub fn omega_semigroup(monoid: &Monoid, opts: &OmegaOptions) -> Result<SemigroupOmega> {
    let start = Instant::now();
    let p = monoid.arity();
    let per_generator = map_all((0..p).collect(), |i| {
        omega_element(monoid, &Element::Expression(NVec::unit(p, i)), opts)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let value = per_generator
        .iter()
        .map(|r| r.value.clone())
        .max()
        .unwrap_or_default();
    Ok(SemigroupOmega {
        value,
        per_generator,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::SemigroupSpec;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn closed(a: u64, b: u64, g: [u64; 2]) -> u64 {
        omega_two_gen_closed(&big(a), &big(b), &NVec::from_u64s(&g))
            .unwrap()
            .try_into()
            .unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed(7, 5, [6, 7]), 20);
        assert_eq!(closed(5, 3, [1, 0]), 3);
        assert_eq!(closed(5, 3, [0, 0]), 0);
        assert_eq!(closed(4, 2, [0, 1]), 4);
    }

    #[test]
    fn uncorrected_formula_overshoots_on_axis_divisibility() {
        let v = two_gen_uncorrected_formula(&big(5), &big(3), &NVec::from_u64s(&[1, 0])).unwrap();
        assert_eq!(v, big(6));
        let v = two_gen_uncorrected_formula(&big(7), &big(5), &NVec::from_u64s(&[6, 7])).unwrap();
        assert_eq!(v, big(20));
    }

    #[test]
    fn closed_minimals() {
        let set = two_gen_minimals(&big(7), &big(5), &NVec::from_u64s(&[6, 7])).unwrap();
        let expected: Vec<NVec> = [[0, 12], [6, 7], [13, 2], [20, 0]]
            .iter()
            .map(|x| NVec::from_u64s(x))
            .collect();
        assert_eq!(set.as_slice(), expected.as_slice());
        let set = two_gen_minimals(&big(5), &big(3), &NVec::from_u64s(&[1, 0])).unwrap();
        assert_eq!(
            set.as_slice(),
            &[NVec::from_u64s(&[0, 3]), NVec::from_u64s(&[1, 0])]
        );
        let set = two_gen_minimals(&big(5), &big(3), &NVec::zeros(2)).unwrap();
        assert_eq!(set.as_slice(), &[NVec::zeros(2)]);
    }

    #[test]
    fn closed_form_rejects_small_parameters() {
        let err = omega_two_gen_closed(&big(1), &big(3), &NVec::zeros(2)).unwrap_err();
        assert!(matches!(err, Error::InvalidTwoGen { .. }));
    }

    #[test]
    fn small_numerical_element() {
        let m = Monoid::new(&SemigroupSpec::numerical(&[3, 5])).unwrap();
        let r = omega_element(&m, &Element::value(3), &OmegaOptions::default()).unwrap();
        assert_eq!(r.value, big(3));
        assert_eq!(r.method, Method::Engine);
        let r = omega_element(&m, &Element::value(0), &OmegaOptions::default()).unwrap();
        assert_eq!(r.value, big(0));
    }

    #[test]
    fn not_member() {
        let m = Monoid::new(&SemigroupSpec::numerical(&[3, 5])).unwrap();
        let err = omega_element(&m, &Element::value(7), &OmegaOptions::default()).unwrap_err();
        assert_eq!(err, Error::NotMember("7".into()));
    }

    #[test]
    fn cross_check_reports_uncorrected_value() {
        let m = Monoid::new(&SemigroupSpec::numerical(&[3, 5])).unwrap();
        let cc = cross_check(&m, &NVec::from_u64s(&[1, 0]), &Limits::default()).unwrap();
        assert_eq!(cc.engine, Some(big(3)));
        assert_eq!(cc.oracle, Some(big(3)));
        assert_eq!(cc.closed, Some(big(3)));
        assert_eq!(cc.printed_formula, Some(big(6)));
        assert!(cc.agree());
    }

    #[test]
    fn two_gen_dispatches_to_closed_form() {
        let m = Monoid::new(&SemigroupSpec::two_gen(7, 5)).unwrap();
        let r = omega_element(&m, &Element::expression(&[6, 7]), &OmegaOptions::default()).unwrap();
        assert_eq!(r.method, Method::TwoGenClosed);
        assert_eq!(r.value, big(20));
        assert_eq!(r.witnesses(), vec![NVec::from_u64s(&[20, 0])]);
    }

    #[test]
    fn two_generator_numerical_semigroup_per_generator() {
        let m = Monoid::new(&SemigroupSpec::numerical(&[3, 5])).unwrap();
        let s = omega_semigroup(&m, &OmegaOptions::default()).unwrap();
        let expected = [closed(5, 3, [1, 0]), closed(5, 3, [0, 1])];
        assert_eq!(s.per_generator_values(), expected.map(big).to_vec());
        assert_eq!(s.value, big(5));
    }
}
