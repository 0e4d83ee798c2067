//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string. Failures come back as
//! `{"error": "…"}` so the page never has to catch exceptions.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use omega_primality::{
    asymptotic_omega_element, empirical_ratio_sequence, frobenius, omega_element, Element, Limits, Monoid,
    NVec, OmegaOptions, Rational, SemigroupSpec,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Node cap for the Diophantine search; keeps the page responsive.
pub const NODE_LIMIT: u64 = 2_000_000;
/// Largest α, β and γ coordinate accepted by the ideal picture.
pub const MAX_PICTURE: u64 = 60;
pub const MAX_NMAX: u64 = 60;
const MAX_WITNESSES: usize = 20;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn options() -> OmegaOptions {
    OmegaOptions {
        limits: Limits {
            max_nodes: NODE_LIMIT,
        },
        ..Default::default()
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("not a natural number: {t:?}"))
        })
        .collect()
}

fn pair(s: &str, what: &str) -> Result<(u64, u64), String> {
    match parse_list(s)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(format!("{what} needs two numbers, found {s:?}")),
    }
}

fn rational(q: &Rational) -> Value {
    json!({ "exact": q.to_string(), "approx": q.to_f64() })
}

fn small(x: &BigUint) -> Value {
    x.to_u64()
        .map_or_else(|| Value::String(x.to_string()), Value::from)
}

/// Minimal points of the ideal generated by `[γ]` in `N²/⟨(α,−β)⟩`, the
/// class of `γ` inside `N²`, ω and ω̄.
#[wasm_bindgen]
pub fn two_gen_ideal(alpha: u32, beta: u32, g1: u32, g2: u32) -> String {
    respond(two_gen_ideal_value(
        alpha.into(),
        beta.into(),
        g1.into(),
        g2.into(),
    ))
}

pub fn two_gen_ideal_value(alpha: u64, beta: u64, g1: u64, g2: u64) -> Result<Value, String> {
    if [alpha, beta, g1, g2].iter().any(|&x| x > MAX_PICTURE) {
        return Err(format!(
            "keep alpha, beta and the coordinates at most {MAX_PICTURE}"
        ));
    }
    let m = Monoid::new(&SemigroupSpec::two_gen(alpha, beta)).map_err(|e| e.to_string())?;
    let elem = Element::expression(&[g1, g2]);
    let report = omega_element(&m, &elem, &options()).map_err(|e| e.to_string())?;
    let limit = asymptotic_omega_element(&m, &elem).map_err(|e| e.to_string())?;

    // γ + λ(α, −β) for every λ keeping both coordinates nonnegative
    let lo = -((g1 / alpha) as i64);
    let hi = (g2 / beta) as i64;
    let class: Vec<[u64; 2]> = (lo..=hi)
        .map(|l| {
            [
                (g1 as i64 + l * alpha as i64) as u64,
                (g2 as i64 - l * beta as i64) as u64,
            ]
        })
        .collect();
    let minimals: Vec<Vec<u64>> = report.minimals.iter().filter_map(NVec::to_u64s).collect();
    let reach = minimals
        .iter()
        .flatten()
        .chain(class.iter().flatten())
        .copied()
        .max()
        .unwrap_or(0);
    Ok(json!({
        "alpha": alpha,
        "beta": beta,
        "gamma": [g1, g2],
        "minimals": minimals,
        "omega": small(&report.value),
        "witnesses": report.witnesses(),
        "class": class,
        "asymptotic": rational(&limit),
        "window": reach + 2,
    }))
}

/// ω of a natural number in the numerical semigroup generated by `gens`
/// (comma separated).
#[wasm_bindgen]
pub fn numerical_omega(gens: &str, value: &str) -> String {
    respond(numerical_omega_value(gens, value))
}

pub fn numerical_omega_value(gens: &str, value: &str) -> Result<Value, String> {
    let gens = parse_list(gens)?;
    let n: u64 = value
        .trim()
        .parse()
        .map_err(|_| format!("not a natural number: {value:?}"))?;
    let spec = SemigroupSpec::numerical(&gens);
    let m = Monoid::new(&spec).map_err(|e| e.to_string())?;
    let report = omega_element(&m, &Element::value(n), &options()).map_err(|e| e.to_string())?;
    let mut witnesses = report.witnesses();
    witnesses.sort();
    witnesses.truncate(MAX_WITNESSES);
    let frob = frobenius(m.spec()).map_err(|e| e.to_string())?;
    let SemigroupSpec::Numerical { generators } = m.spec() else {
        unreachable!("numerical input stays numerical")
    };
    Ok(json!({
        "generators": generators.iter().map(small).collect::<Vec<_>>(),
        "value": n,
        "expression": report.expression,
        "omega": small(&report.value),
        "minimals_count": report.minimals.len(),
        "witnesses": witnesses,
        "frobenius": frob.to_string(),
    }))
}

/// `ω(n·x)/n` for `n = 1..=nmax` next to the limit ω̄(x).
///
/// `mode` is `numerical` (`params` the generators, `element` a number) or
/// `twogen` (`params` = `α,β`, `element` = `γ₁,γ₂`).
#[wasm_bindgen]
pub fn ratio_sequence(mode: &str, params: &str, element: &str, nmax: u32) -> String {
    respond(ratio_sequence_value(mode, params, element, nmax.into()))
}

pub fn ratio_sequence_value(mode: &str, params: &str, element: &str, nmax: u64) -> Result<Value, String> {
    if nmax == 0 || nmax > MAX_NMAX {
        return Err(format!("nmax must lie in 1..={MAX_NMAX}"));
    }
    let (spec, elem) = match mode {
        "numerical" => {
            let n: u64 = element
                .trim()
                .parse()
                .map_err(|_| format!("not a natural number: {element:?}"))?;
            (SemigroupSpec::numerical(&parse_list(params)?), Element::value(n))
        }
        "twogen" => {
            let (a, b) = pair(params, "alpha,beta")?;
            let (g1, g2) = pair(element, "the element")?;
            (SemigroupSpec::two_gen(a, b), Element::expression(&[g1, g2]))
        }
        other => return Err(format!("unknown mode {other:?}")),
    };
    let m = Monoid::new(&spec).map_err(|e| e.to_string())?;
    let ratios = empirical_ratio_sequence(&m, &elem, nmax, &options()).map_err(|e| e.to_string())?;
    let limit = asymptotic_omega_element(&m, &elem).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = ratios
        .iter()
        .zip(1u64..)
        .map(|(q, n)| {
            let omega = (q * Rational::from_integer(n.into())).to_integer();
            json!({ "n": n, "omega": omega.to_string(), "ratio": rational(q) })
        })
        .collect();
    Ok(json!({ "ratios": rows, "limit": rational(&limit) }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn figure_ideal() {
        let v = parse(two_gen_ideal(7, 5, 6, 7));
        assert_eq!(v["omega"], 20);
        assert_eq!(v["minimals"], json!([[0, 12], [6, 7], [13, 2], [20, 0]]));
        assert_eq!(v["class"], json!([[6, 7], [13, 2]]));
        assert_eq!(v["asymptotic"]["exact"], "79/5");
        assert_eq!(v["window"], 22);
    }

    #[test]
    fn numerical_value() {
        let v = parse(numerical_omega("115, 212, 333, 571", "10000"));
        assert_eq!(v["omega"], 109);
        assert_eq!(v["minimals_count"], 203);
        assert_eq!(v["generators"], json!([115, 212, 333, 571]));

        let v = parse(numerical_omega("3,5", "7"));
        assert!(v["error"].as_str().unwrap().contains("not an element"));
    }

    #[test]
    fn ratios_approach_the_limit() {
        let v = parse(ratio_sequence("numerical", "3,5", "3", 5));
        let exact: Vec<&str> = v["ratios"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["ratio"]["exact"].as_str().unwrap())
            .collect();
        assert_eq!(exact, ["3", "3/2", "1", "1", "1"]);
        assert_eq!(v["limit"]["exact"], "1");

        let v = parse(ratio_sequence("twogen", "7,5", "6,7", 10));
        assert_eq!(v["ratios"][4]["ratio"]["exact"], "79/5");
        assert_eq!(v["limit"]["approx"], 15.8);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(parse(two_gen_ideal(1, 5, 0, 0))["error"].is_string());
        assert!(parse(two_gen_ideal(70, 5, 0, 0))["error"].is_string());
        assert!(parse(ratio_sequence("affine", "1", "1", 3))["error"].is_string());
        assert!(parse(ratio_sequence("numerical", "3,5", "3", 0))["error"].is_string());
    }
}
