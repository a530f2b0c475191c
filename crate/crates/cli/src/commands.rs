//! One function per subcommand. Each builds a JSON report; the text output
//! is a rendering of the same value.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ecodim::catalog;
use ecodim::ecodim::{ec as expected_codim, ec_with};
use ecodim::error::{Error, Result};
use ecodim::io::{
    bigint_to_value, bipoly_to_value, essential_set_to_value, parse_window, permutation_to_value,
    tripoly_to_value, Document,
};
use ecodim::matroid::Matroid;
use ecodim::positroid::{
    affine_permutation_of, all_bounded_affine_permutations, ec_positroid, essential_set,
    positroid_from_permutation, AffinePermutation,
};
use ecodim::strategy::FamilyRegistry;
use ecodim::subset::{max_ground_size, GroundSubset};
use ecodim::valuative::{
    ec_from_s_poly, s_poly, tutte as tutte_poly, tutte_standard, S_POLY_MAX_N,
};
use ecodim::verify::{SuiteConfig, SuiteRegistry};

use crate::Outcome;

fn load_matroid(path: &Path) -> Result<Matroid> {
    Document::load(path)?.matroid()
}

fn sets(v: &[GroundSubset]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.to_vec())).collect())
}

/// Codimensions from the literature for catalog matroids, matched by equality.
fn reported_codim(m: &Matroid) -> Option<(&'static str, usize)> {
    if *m == catalog::pappus() {
        Some(("pappus", catalog::PAPPUS_REPORTED_CODIM))
    } else if *m == catalog::square() {
        Some(("square", catalog::SQUARE_REPORTED_CODIM))
    } else {
        None
    }
}

fn reported_fields(m: &Matroid, ec_value: &BigInt, report: &mut serde_json::Map<String, Value>) {
    if let Some((name, codim)) = reported_codim(m) {
        let agrees = *ec_value == BigInt::from(codim);
        report.insert(
            "reported_codim".into(),
            json!({ "matroid": name, "codim": codim, "ec_equals_codim": agrees }),
        );
        let relation = if agrees { "ec = codim" } else { "ec ≠ codim" };
        report.insert(
            "note".into(),
            json!(format!("reported codim: {codim}, {relation}")),
        );
    }
}

pub fn ec(path: &Path, families: &[String]) -> Result<Outcome> {
    let m = load_matroid(path)?;
    let canonical = expected_codim(&m);
    let mut report = serde_json::Map::new();
    report.insert("n".into(), json!(m.n()));
    report.insert("rank".into(), json!(m.rank()));
    report.insert("ec".into(), bigint_to_value(&canonical));
    if families.is_empty() {
        report.insert("family".into(), json!("flacets of each component"));
    } else {
        let registry = FamilyRegistry::default();
        let mut values = Vec::new();
        for name in families {
            let family = registry.get(name)?.family(&m)?;
            values.push((name.clone(), family.len(), ec_with(&m, &family)));
        }
        let all_equal = values.windows(2).all(|w| w[0].2 == w[1].2);
        report.insert(
            "families".into(),
            Value::Array(
                values
                    .iter()
                    .map(|(name, size, v)| json!({ "family": name, "sets": size, "ec": bigint_to_value(v) }))
                    .collect(),
            ),
        );
        if values.len() > 1 {
            report.insert("all_equal".into(), json!(all_equal));
        }
    }
    reported_fields(&m, &canonical, &mut report);
    Ok(Outcome {
        report: Value::Object(report),
        ok: true,
    })
}

/// SHA-256 of the compact JSON form of `s_M`.
fn s_digest(m: &Matroid) -> Result<Option<String>> {
    if m.n() > S_POLY_MAX_N {
        return Ok(None);
    }
    let text = tripoly_to_value(&s_poly(m)?).to_string();
    let digest = Sha256::digest(text.as_bytes());
    Ok(Some(digest.iter().map(|b| format!("{b:02x}")).collect()))
}

pub fn analyze(path: &Path) -> Result<Outcome> {
    let m = load_matroid(path)?;
    let value = expected_codim(&m);
    let mut report = serde_json::Map::new();
    report.insert("n".into(), json!(m.n()));
    report.insert("rank".into(), json!(m.rank()));
    report.insert("components".into(), sets(&m.connected_components()));
    report.insert("loops".into(), json!(m.loops().to_vec()));
    report.insert("coloops".into(), json!(m.coloops().to_vec()));
    report.insert("ec".into(), bigint_to_value(&value));
    report.insert("family".into(), json!("flacets of each component"));
    match affine_permutation_of(&m) {
        Ok(p) => {
            report.insert("positroid".into(), json!(true));
            report.insert("affine_permutation".into(), permutation_to_value(&p));
            report.insert("length".into(), json!(p.length()));
        }
        Err(_) => {
            report.insert("positroid".into(), json!(false));
        }
    }
    report.insert(
        "s_digest".into(),
        s_digest(&m)?.map_or(Value::Null, Value::from),
    );
    reported_fields(&m, &value, &mut report);
    Ok(Outcome {
        report: Value::Object(report),
        ok: true,
    })
}

fn positroid_report(p: &AffinePermutation) -> Result<Outcome> {
    let length = p.length();
    let from_perm = ec_positroid(p);
    let mut report = serde_json::Map::new();
    report.insert("permutation".into(), permutation_to_value(p));
    report.insert("rank".into(), json!(p.rank()));
    report.insert("length".into(), json!(length));
    report.insert("rank_matrix".into(), json!(p.rank_matrix().rows()));
    report.insert(
        "essential_set".into(),
        essential_set_to_value(&essential_set(p)),
    );
    report.insert("ec_from_permutation".into(), json!(from_perm));
    let mut ok = from_perm == length;
    if p.n() <= max_ground_size() {
        let m = positroid_from_permutation(p)?;
        let value = expected_codim(&m);
        ok &= value == BigInt::from(length);
        report.insert("ec".into(), bigint_to_value(&value));
    } else {
        report.insert("ec".into(), Value::Null);
    }
    report.insert("ec_equals_length".into(), json!(ok));
    Ok(Outcome {
        report: Value::Object(report),
        ok,
    })
}

pub fn positroid_perm(window: &str) -> Result<Outcome> {
    positroid_report(&parse_window(window)?)
}

pub fn positroid_ranks(path: &Path) -> Result<Outcome> {
    let p = match Document::load(path)? {
        Document::Permutation(p) => p,
        doc => affine_permutation_of(&doc.matroid()?)?,
    };
    positroid_report(&p)
}

fn suite_outcome(report: ecodim::verify::SuiteReport) -> Result<(Value, bool)> {
    let ok = report.passed();
    let mut value = serde_json::to_value(&report)?;
    value["passed"] = json!(ok);
    Ok((value, ok))
}

pub fn positroid_verify(n: Option<usize>, samples: Option<usize>, seed: u64) -> Result<Outcome> {
    let max_n = n.unwrap_or(5);
    let enumerated: usize = (1..=max_n)
        .map(|k| all_bounded_affine_permutations(k).len())
        .sum();
    let cfg = SuiteConfig {
        n: Some(max_n),
        samples,
        seed,
        witness: None,
    };
    let (mut report, ok) = suite_outcome(SuiteRegistry::default().get("positroids")?.run(&cfg)?)?;
    report["enumerated"] = json!(enumerated);
    let summary = if ok {
        format!("all {enumerated} permutations with n ≤ {max_n}: ec == length")
    } else {
        format!("failures among {enumerated} permutations with n ≤ {max_n} and the samples")
    };
    report["summary"] = json!(summary);
    Ok(Outcome { report, ok })
}

pub fn spoly(path: &Path, check_ec: bool) -> Result<Outcome> {
    let m = load_matroid(path)?;
    let s = s_poly(&m)?;
    if !check_ec {
        return Ok(Outcome {
            report: tripoly_to_value(&s),
            ok: true,
        });
    }
    let from_s = ec_from_s_poly(&s);
    let direct = expected_codim(&m);
    let ok = from_s == direct;
    Ok(Outcome {
        report: json!({
            "s": tripoly_to_value(&s),
            "ec": bigint_to_value(&direct),
            "ec_from_s": bigint_to_value(&from_s),
            "equal": ok,
        }),
        ok,
    })
}

fn parse_point(text: &str) -> Result<(BigInt, BigInt)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("`{t}` is not an integer")))
    };
    match parts.as_slice() {
        [x, y] => Ok((parse(x)?, parse(y)?)),
        _ => Err(Error::Parse(format!("expected `x,y`, got `{text}`"))),
    }
}

pub fn tutte(path: &Path, eval: Option<&str>, standard: bool) -> Result<Outcome> {
    let m = load_matroid(path)?;
    let t = if standard {
        tutte_standard(&m)?
    } else {
        tutte_poly(&m)?
    };
    let report = match eval {
        Some(point) => {
            let (x, y) = parse_point(point)?;
            json!({ "x": bigint_to_value(&x), "y": bigint_to_value(&y), "value": bigint_to_value(&t.eval(&x, &y)) })
        }
        None => bipoly_to_value(&t),
    };
    Ok(Outcome { report, ok: true })
}

pub fn verify(
    suite: &str,
    n: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    witness: Option<&Path>,
) -> Result<Outcome> {
    let suite = SuiteRegistry::default().get(suite)?;
    let witness = match witness.map(Document::load).transpose()? {
        None => None,
        Some(Document::Witness(w)) => Some(w),
        Some(_) => {
            return Err(Error::Parse(
                "--witness needs a file with `parent` and `faces`".into(),
            ))
        }
    };
    let cfg = SuiteConfig {
        n,
        samples,
        seed,
        witness,
    };
    let (report, ok) = suite_outcome(suite.run(&cfg)?)?;
    Ok(Outcome { report, ok })
}
