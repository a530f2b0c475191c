//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use ecodim::corpus::{connected_binary_matroids, random_connected_binary_matroid};
use ecodim::ecodim::ec;
use ecodim::io::{parse_window, Document};
use ecodim::positroid::{
    essential_set, is_positroid, positroid_from_interval_ranks, positroid_from_permutation,
    to_affine_permutation, IntervalRanks,
};
use ecodim::valuative::ec_from_s;
use ecodim::verify::{SuiteConfig, SuiteRegistry, SuiteReport};
use ecodim::Matroid;

type Verdict = Result<String, String>;

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

/// Runs the binary and returns its JSON report, exit code and wall time.
fn run(args: &[&str]) -> (Value, i32, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ecodim"))
        .args(args)
        .arg("--json")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (report, out.status.code().unwrap_or(-1), elapsed)
}

fn require(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, String> {
    let suite = SuiteRegistry::default()
        .get(name)
        .map_err(|e| e.to_string())?;
    suite.run(cfg).map_err(|e| e.to_string())
}

fn first_failure(report: &SuiteReport) -> String {
    report
        .checks
        .iter()
        .find(|c| !c.passed())
        .map(|c| {
            format!(
                "{}: {} failures, e.g. {:?}",
                c.name, c.failures, c.counterexample
            )
        })
        .unwrap_or_default()
}

fn square_ec() -> Verdict {
    let path = example("square.json");
    let (report, code, elapsed) = run(&["ec", path.to_str().unwrap()]);
    require(code == 0, format!("exit code {code}"))?;
    require(report["ec"] == 4, format!("ec = {}", report["ec"]))?;
    require(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("square: ec = 4 in {elapsed:.2?}"))
}

fn pappus_ec() -> Verdict {
    let path = example("pappus.json");
    let (report, code, elapsed) = run(&[
        "ec",
        path.to_str().unwrap(),
        "--family",
        "powerset",
        "--family",
        "flacets",
    ]);
    require(code == 0, format!("exit code {code}"))?;
    require(report["ec"] == 9, format!("ec = {}", report["ec"]))?;
    require(
        report["all_equal"] == true,
        "power set and flacets disagree",
    )?;
    let reported = &report["reported_codim"];
    require(
        reported["codim"] == 8 && reported["ec_equals_codim"] == false,
        format!("reported codim block: {reported}"),
    )?;
    require(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "pappus: ec = 9, flagged against reported codim 8, in {elapsed:.2?}"
    ))
}

fn positroid_ec_is_length(report: &SuiteReport, elapsed: Duration) -> Verdict {
    require(report.passed(), first_failure(report))?;
    let main = report
        .check("ec over power set = ec over intervals = ec from π = length")
        .ok_or("missing ec = length check")?;
    let coefficients = report
        .check("a over intervals equals the permutation-matrix entry")
        .ok_or("missing interval coefficient check")?;
    require(
        main.cases == coefficients.cases,
        "checks saw different corpora",
    )?;
    require(
        elapsed < Duration::from_secs(300),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} positroids ({}): ec = length and interval coefficients match, in {elapsed:.2?}",
        main.cases,
        main.note.clone().unwrap_or_default()
    ))
}

fn example_roundtrip() -> Verdict {
    let p = parse_window("3,6,5,8,7,10").map_err(|e| e.to_string())?;
    // Rows of the printed matrix, entries (i, i), ..., (i, i + 6).
    let printed: Vec<Vec<u8>> = vec![
        vec![1, 2, 2, 3, 3, 3, 3],
        vec![1, 2, 3, 3, 3, 3, 3],
        vec![1, 2, 2, 3, 3, 3, 3],
        vec![1, 2, 3, 3, 3, 3, 3],
        vec![1, 2, 2, 3, 3, 3, 3],
        vec![1, 2, 3, 3, 3, 3, 3],
    ];
    let r = p.rank_matrix();
    require(r.rows() == printed, format!("rank matrix {:?}", r.rows()))?;
    let underlined = [(1, 3), (2, 6), (3, 5), (4, 8), (5, 7), (6, 10)];
    require(
        underlined.iter().all(|&(i, j)| p.has_one(i, j)),
        "permutation 1s are not at the marked entries",
    )?;
    require(
        to_affine_permutation(&r).map_err(|e| e.to_string())? == p,
        "matrix does not invert to the permutation",
    )?;
    let m = positroid_from_permutation(&p).map_err(|e| e.to_string())?;
    let ess = essential_set(&p);
    let regenerated = positroid_from_interval_ranks(&IntervalRanks::from_essential_set(6, 3, &ess))
        .map_err(|e| e.to_string())?;
    require(
        regenerated == m,
        "essential-set bounds give a different matroid",
    )?;
    let from_file = Document::load(example("example46_ranks.json"))
        .and_then(|d| d.matroid())
        .map_err(|e| e.to_string())?;
    require(
        from_file == m,
        "the three rank-2 conditions give a different matroid",
    )?;
    let ess: Vec<String> = ess.iter().map(|e| e.to_string()).collect();
    Ok(format!(
        "3,6,5,8,7,10: matrix matches, inverts, essential set {{{}}} regenerates",
        ess.join(", ")
    ))
}

fn flacet_invariance() -> Verdict {
    let start = Instant::now();
    let cfg = SuiteConfig {
        n: Some(6),
        samples: Some(100),
        seed: 0,
        witness: None,
    };
    let report = run_suite("flacets", &cfg)?;
    let elapsed = start.elapsed();
    require(report.passed(), first_failure(&report))?;
    require(
        elapsed < Duration::from_secs(600),
        format!("took {elapsed:?}"),
    )?;
    let check = report
        .check("power set and flacets give the same ec")
        .ok_or("missing invariance check")?;
    Ok(format!(
        "{} matroids ({}), in {elapsed:.2?}",
        check.cases,
        check.note.clone().unwrap_or_default()
    ))
}

/// Same corpus as the flacet criterion, built here independently of the suite.
fn s_cross_check() -> Verdict {
    let mut corpus: Vec<Matroid> = (1..=6).flat_map(connected_binary_matroids).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    corpus.extend((0..100).map(|_| random_connected_binary_matroid(&mut rng, 7)));
    for m in &corpus {
        let from_s = ec_from_s(m).map_err(|e| e.to_string())?;
        let direct = ec(m);
        require(
            from_s == direct,
            format!(
                "{}: from s {from_s}, direct {direct}",
                ecodim::io::matroid_to_json(m)
            ),
        )?;
    }
    Ok(format!(
        "{} matroids: mixed derivative of s equals ec",
        corpus.len()
    ))
}

fn valuation_witness() -> Verdict {
    let path = example("delta24_split.json");
    let (report, code, _) = run(&["verify", "valuation", "--witness", path.to_str().unwrap()]);
    require(code == 0, format!("exit code {code}: {report}"))?;
    let checks = report["checks"].as_array().ok_or("no checks in report")?;
    for name in [
        "s(M) = Σ ± s(N) coefficientwise",
        "ec(M) = Σ ± ec(N)",
        "Σ ± 1 over internal faces = 1",
    ] {
        let c = checks
            .iter()
            .find(|c| c["name"] == name)
            .ok_or(format!("missing `{name}`"))?;
        require(c["failures"] == 0, format!("`{name}` failed"))?;
    }
    Ok("U(2,4) split: s identity, ec identity and Euler sum 1".into())
}

fn identity_suite() -> Verdict {
    let cfg = SuiteConfig {
        n: None,
        samples: Some(1000),
        seed: 0,
        witness: None,
    };
    let report = run_suite("identities", &cfg)?;
    require(report.passed(), first_failure(&report))?;
    let expected = [
        "ec_F − ec_{F−Z} = a(Z) b(Z)",
        "a_F(S) − a_{F−Z}(S) = a(Z) μ(Z, S)",
        "b_F(S) − b_{F−Z}(S) = μ(S, Z) b(Z)",
        "ec_F(M) = ec_F'(M*)",
        "a_F(S) = b_F'(E − S) in M*",
        "a vanishes on disconnected sets over the power set",
        "ec(M ⊕ N) = ec(M) + ec(N) + k_M c(N) + k_N c(M)",
    ];
    for name in expected {
        let c = report.check(name).ok_or(format!("missing `{name}`"))?;
        require(c.cases >= 1000, format!("`{name}` ran {} cases", c.cases))?;
    }
    let sum = report
        .check(expected[6])
        .and_then(|c| c.note.clone())
        .unwrap_or_default();
    Ok(format!(
        "{} identities on 1000 instances each, zero failures; {sum}",
        expected.len()
    ))
}

fn structural(positroids: &SuiteReport) -> Verdict {
    let axioms = run_suite(
        "axioms",
        &SuiteConfig {
            n: None,
            samples: Some(200),
            seed: 0,
            witness: None,
        },
    )?;
    require(axioms.passed(), first_failure(&axioms))?;
    for id in ["empty-rank", "unit-increase", "rank-exchange"] {
        require(
            axioms
                .checks
                .iter()
                .any(|c| c.name.starts_with(&format!("rejects {id}")) && c.passed()),
            format!("no passing rejection of {id}"),
        )?;
    }
    for name in [
        "connected components form a noncrossing partition",
        "flacets are cyclic intervals",
    ] {
        let c = positroids.check(name).ok_or(format!("missing `{name}`"))?;
        require(c.passed(), format!("`{name}` failed"))?;
    }
    let m = Document::load(example("not_positroid.json"))
        .and_then(|d| d.matroid())
        .map_err(|e| e.to_string())?;
    require(
        m.rank_of(ecodim::GroundSubset::from_elements([1, 3])) == 1
            && m.rank_of(ecodim::GroundSubset::from_elements([2, 4])) == 1,
        "example file is not the intended matroid",
    )?;
    require(
        !is_positroid(&m),
        "rk{1,3} = rk{2,4} = 1 accepted as a positroid",
    )?;
    let path = example("not_positroid.json");
    let (report, _, _) = run(&["analyze", path.to_str().unwrap()]);
    require(
        report["positroid"] == false,
        "analyze reports it as a positroid",
    )?;
    Ok("three rank-axiom violations rejected; components noncrossing and flacets intervals on all positroids; rk{1,3} = rk{2,4} = 1 is not a positroid".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let positroids = run_suite(
        "positroids",
        &SuiteConfig {
            n: Some(5),
            samples: Some(1000),
            seed: 0,
            witness: None,
        },
    );
    let positroid_time = start.elapsed();

    let results: Vec<(usize, Verdict)> = vec![
        (1, square_ec()),
        (2, pappus_ec()),
        (
            3,
            positroids
                .clone()
                .and_then(|r| positroid_ec_is_length(&r, positroid_time)),
        ),
        (4, example_roundtrip()),
        (5, flacet_invariance()),
        (6, s_cross_check()),
        (7, valuation_witness()),
        (8, identity_suite()),
        (9, positroids.and_then(|r| structural(&r))),
    ];
    let mut failed = 0;
    for (i, verdict) in &results {
        match verdict {
            Ok(msg) => println!("criterion {i}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i}: FAIL  {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", results.len());
        ExitCode::FAILURE
    }
}
