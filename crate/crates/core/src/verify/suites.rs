use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{run_check, single_check, CheckOutcome, SuiteConfig, SuiteReport, VerificationSuite};
use crate::corpus::{
    all_binary_matroids, connected_binary_matroids, random_binary_matroid,
    random_connected_binary_matroid, random_family, random_matroid, random_member, random_subset,
};
use crate::ecodim::{
    coeff_a, coeff_b, direct_sum_cross_term, ec, ec_with, flacets, removal_delta, RemovalDelta,
};
use crate::error::{Axiom, Error, Result};
use crate::family::SubsetFamily;
use crate::io::{matroid_to_json, permutation_to_value};
use crate::matroid::{find_axiom_violation, Matroid};
use crate::positroid::{
    affine_permutation_of, all_bounded_affine_permutations, ec_positroid, essential_set,
    identity_sums, interval_coefficient_mismatches, interval_family, is_cyclic_interval,
    is_noncrossing, is_positroid, positroid_from_interval_ranks, positroid_from_permutation,
    random_bounded_affine_permutation, to_affine_permutation, AffinePermutation, IntervalRanks,
};
use crate::subset::{all_subsets, GroundSubset};
use crate::valuative::{
    check_valuation, delta24_split, ec_from_s_poly, s_poly, tutte_from_s, SubdivisionWitness,
};

fn rng_for(cfg: &SuiteConfig, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ stream)
}

fn show(m: &Matroid) -> String {
    matroid_to_json(m)
}

fn report(suite: &str, checks: Vec<CheckOutcome>) -> Result<SuiteReport> {
    Ok(SuiteReport {
        suite: suite.to_string(),
        checks,
    })
}

fn random_matroids(cfg: &SuiteConfig, stream: u64, count: usize, max_n: usize) -> Vec<Matroid> {
    let mut rng = rng_for(cfg, stream);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_matroid(&mut rng, n)
        })
        .collect()
}

/// Oracle for components: the smallest separator containing each element,
/// found by scanning every subset.
fn components_by_separators(m: &Matroid) -> Vec<GroundSubset> {
    let separators: Vec<GroundSubset> = all_subsets(m.n()).filter(|&s| m.is_separator(s)).collect();
    let mut out: Vec<GroundSubset> = (1..=m.n())
        .map(|x| {
            separators
                .iter()
                .filter(|s| s.contains(x))
                .fold(m.ground(), |acc, s| acc.intersection(*s))
        })
        .collect();
    out.sort_by_key(|s| s.first());
    out.dedup();
    out
}

pub struct AxiomsSuite;

impl VerificationSuite for AxiomsSuite {
    fn name(&self) -> &str {
        "axioms"
    }

    fn description(&self) -> &str {
        "rank and basis axioms, duality and minors of the rank-table representation"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(7);
        let samples = cfg.samples.unwrap_or(200);
        let mut checks = Vec::new();

        let crafted: [(&str, usize, Vec<u8>, Axiom); 3] = [
            ("rk ∅ = 1", 1, vec![1, 1], Axiom::EmptyRank),
            ("rk {1} = 2", 1, vec![0, 2], Axiom::UnitIncrease),
            (
                "rk {1,2} = 1 over two loops",
                2,
                vec![0, 0, 0, 1],
                Axiom::RankExchange,
            ),
        ];
        for (label, n, table, axiom) in crafted {
            let found = find_axiom_violation(n, &table).map(|(a, _)| a);
            let rejected = matches!(
                Matroid::from_rank_table(n, table),
                Err(Error::AxiomViolation { axiom: a, .. }) if a == axiom
            );
            checks.push(single_check(
                format!("rejects {} ({label})", axiom.id()),
                (found != Some(axiom) || !rejected).then(|| format!("found {found:?}")),
            ));
        }
        let set = |e: &[usize]| GroundSubset::from_elements(e.iter().copied());
        let crafted_bases: [(&str, usize, Vec<GroundSubset>, Axiom); 3] = [
            ("no bases", 2, vec![], Axiom::BasesNonempty),
            (
                "{1} ⊂ {1,2}",
                2,
                vec![set(&[1]), set(&[1, 2])],
                Axiom::BasesAntichain,
            ),
            (
                "{1,2}, {3,4}",
                4,
                vec![set(&[1, 2]), set(&[3, 4])],
                Axiom::BasisExchange,
            ),
        ];
        for (label, n, bases, axiom) in crafted_bases {
            let got = Matroid::from_bases(n, &bases);
            let ok = matches!(&got, Err(Error::AxiomViolation { axiom: a, .. }) if *a == axiom);
            checks.push(single_check(
                format!("rejects {} ({label})", axiom.id()),
                (!ok).then(|| format!("{got:?}")),
            ));
        }

        let ms = random_matroids(cfg, 1, samples, max_n);
        checks.push(run_check(
            "random rank tables satisfy the axioms",
            &ms,
            |m| {
                find_axiom_violation(m.n(), m.rank_table())
                    .map(|(a, w)| format!("{a} {w} in {}", show(m)))
            },
        ));
        checks.push(run_check("bases determine the matroid", &ms, |m| {
            (Matroid::from_bases(m.n(), &m.bases()).ok().as_ref() != Some(m)).then(|| show(m))
        }));
        checks.push(run_check("dual is an involution", &ms, |m| {
            (m.dual().dual() != *m).then(|| show(m))
        }));
        checks.push(run_check(
            "components match the finest separator split",
            &ms,
            |m| {
                let got = m.connected_components();
                let want = components_by_separators(m);
                (got != want).then(|| format!("{}: {got:?} vs {want:?}", show(m)))
            },
        ));

        let mut rng = rng_for(cfg, 2);
        let pairs: Vec<(Matroid, Matroid, GroundSubset)> = (0..samples)
            .map(|_| {
                let a = rng.gen_range(1..=max_n.max(2) - 1);
                let b = rng.gen_range(1..=max_n.max(2) - a);
                let m = random_matroid(&mut rng, a);
                let n = random_matroid(&mut rng, b);
                let s = random_subset(&mut rng, a);
                (m, n, s)
            })
            .collect();
        checks.push(run_check(
            "dual commutes with direct sum",
            &pairs,
            |(m, n, _)| {
                let lhs = m.direct_sum(n).ok()?.dual();
                let rhs = m.dual().direct_sum(&n.dual()).ok()?;
                (lhs != rhs).then(|| format!("{} ⊕ {}", show(m), show(n)))
            },
        ));
        checks.push(run_check(
            "dual of a restriction is the contraction of the complement in the dual",
            &pairs,
            |(m, _, s)| {
                let lhs = m.restrict(*s).matroid.dual();
                let rhs = m.dual().contract(s.complement(m.n())).matroid;
                (lhs != rhs).then(|| format!("{} with S = {s}", show(m)))
            },
        ));
        report(self.name(), checks)
    }
}

/// `a_F(S)` in `M` against `b_{F'}(E − S)` in `M*`, and `ec_F(M) = ec_{F'}(M*)`.
fn dual_identities(m: &Matroid, f: &SubsetFamily) -> (Option<String>, Option<String>) {
    let d = m.dual();
    let g = f.complements();
    let ec_fail =
        (ec_with(m, f) != ec_with(&d, &g)).then(|| format!("{} with {} sets", show(m), f.len()));
    let a = coeff_a(m, f);
    let b = coeff_b(&d, &g);
    let coeff_fail = a
        .iter()
        .find(|(s, v)| b.get(s.complement(m.n())) != Some(*v))
        .map(|(s, _)| format!("{} at S = {s}", show(m)));
    (ec_fail, coeff_fail)
}

fn random_families(
    cfg: &SuiteConfig,
    stream: u64,
    count: usize,
    max_n: usize,
) -> Vec<(Matroid, SubsetFamily)> {
    let mut rng = rng_for(cfg, stream);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = random_matroid(&mut rng, n);
            let density = rng.gen_range(0.2..0.8);
            let f = random_family(&mut rng, n, density);
            (m, f)
        })
        .collect()
}

pub struct DualitySuite;

impl VerificationSuite for DualitySuite {
    fn name(&self) -> &str {
        "duality"
    }

    fn description(&self) -> &str {
        "ec and the coefficient systems under M ↦ M*, F ↦ {E − S}"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(7);
        let samples = cfg.samples.unwrap_or(100);
        let cases = random_families(cfg, 10, samples, max_n);
        let results: Vec<_> = cases
            .par_iter()
            .map(|(m, f)| dual_identities(m, f))
            .collect();
        let ec_fail: Vec<&Option<String>> = results.iter().map(|r| &r.0).collect();
        let coeff_fail: Vec<&Option<String>> = results.iter().map(|r| &r.1).collect();
        let checks = vec![
            run_check("ec_F(M) = ec_F'(M*)", &ec_fail, |r| (*r).clone()),
            run_check("a_F(S) = b_F'(E − S) in M*", &coeff_fail, |r| {
                (*r).clone()
            }),
            run_check(
                "s of the dual swaps x and y",
                &random_matroids(cfg, 11, samples, max_n),
                |m| {
                    let s = s_poly(m).ok()?;
                    (s_poly(&m.dual()).ok()? != s.swap_xy()).then(|| show(m))
                },
            ),
        ];
        report(self.name(), checks)
    }
}

/// Every binary matroid on at most `max_n` elements (optionally only the
/// connected ones), plus `extra` random ones on `max_n + 1`.
fn binary_corpus(
    cfg: &SuiteConfig,
    stream: u64,
    max_n: usize,
    extra: usize,
    connected: bool,
) -> (Vec<Matroid>, usize) {
    let mut out: Vec<Matroid> = (1..=max_n)
        .flat_map(|n| {
            if connected {
                connected_binary_matroids(n)
            } else {
                all_binary_matroids(n)
            }
        })
        .collect();
    let exhaustive = out.len();
    let mut rng = rng_for(cfg, stream);
    let n = max_n + 1;
    out.extend((0..extra).map(|_| {
        if connected {
            random_connected_binary_matroid(&mut rng, n)
        } else {
            let k = rng.gen_range(0..=n);
            random_binary_matroid(&mut rng, n, k)
        }
    }));
    (out, exhaustive)
}

pub struct FlacetsSuite;

impl VerificationSuite for FlacetsSuite {
    fn name(&self) -> &str {
        "flacets"
    }

    fn description(&self) -> &str {
        "ec over the power set equals ec over the flacets for connected matroids"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(6);
        let samples = cfg.samples.unwrap_or(100);
        let (connected, exhaustive) = binary_corpus(cfg, 20, max_n, samples, true);
        let invariance = run_check("power set and flacets give the same ec", &connected, |m| {
            let full = ec_with(m, &SubsetFamily::power_set(m.n()));
            let fl = ec_with(m, &flacets(m));
            (full != fl).then(|| format!("{}: {full} vs {fl}", show(m)))
        })
        .with_note(format!(
            "{exhaustive} connected binary matroids on ≤ {max_n} elements, {samples} random on {}",
            max_n + 1
        ));
        let (all, all_exhaustive) = binary_corpus(cfg, 21, max_n, samples, false);
        let canonical = run_check(
            "ec through components equals ec over the power set",
            &all,
            |m| {
                let full = ec_with(m, &SubsetFamily::power_set(m.n()));
                let fast = ec(m);
                (full != fast).then(|| format!("{}: {full} vs {fast}", show(m)))
            },
        )
        .with_note(format!(
            "{all_exhaustive} binary matroids, connected or not, plus {samples} random"
        ));
        report(self.name(), vec![invariance, canonical])
    }
}

pub struct SvalsSuite;

impl VerificationSuite for SvalsSuite {
    fn name(&self) -> &str {
        "svals"
    }

    fn description(&self) -> &str {
        "the polynomial s_M: its mixed derivative, products, duals and Tutte specialization"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(6);
        let samples = cfg.samples.unwrap_or(200);
        let (corpus, exhaustive) = binary_corpus(cfg, 30, max_n, samples, false);
        let polys: Vec<(Matroid, crate::valuative::TriPoly)> = corpus
            .into_par_iter()
            .map(|m| {
                let s = s_poly(&m).expect("corpus fits the cap");
                (m, s)
            })
            .collect();
        let mut checks = vec![
            run_check(
                "mixed derivative of s at (0,0,−1) equals ec",
                &polys,
                |(m, s)| {
                    let from_s = ec_from_s_poly(s);
                    let direct = ec(m);
                    (from_s != direct).then(|| format!("{}: {from_s} vs {direct}", show(m)))
                },
            )
            .with_note(format!(
                "{exhaustive} binary matroids on ≤ {max_n} elements, {samples} random on {}",
                max_n + 1
            )),
            run_check("s of the dual swaps x and y", &polys, |(m, s)| {
                (s_poly(&m.dual()).ok()? != s.swap_xy()).then(|| show(m))
            }),
            run_check(
                "Tutte coefficients are nonnegative and t(1,1) counts bases",
                &polys,
                |(m, s)| {
                    let t = tutte_from_s(s);
                    let one = BigInt::from(1);
                    let bases = BigInt::from(m.bases().len());
                    (t.terms().any(|(_, c)| c.is_negative()) || t.eval(&one, &one) != bases)
                        .then(|| show(m))
                },
            ),
        ];
        let mut rng = rng_for(cfg, 31);
        let pairs: Vec<(Matroid, Matroid)> = (0..samples)
            .map(|_| {
                let a = rng.gen_range(1..=4);
                let b = rng.gen_range(1..=4);
                (random_matroid(&mut rng, a), random_matroid(&mut rng, b))
            })
            .collect();
        checks.push(run_check(
            "s is multiplicative over direct sums",
            &pairs,
            |(m, n)| {
                let lhs = s_poly(&m.direct_sum(n).ok()?).ok()?;
                let rhs = &s_poly(m).ok()? * &s_poly(n).ok()?;
                (lhs != rhs).then(|| format!("{} ⊕ {}", show(m), show(n)))
            },
        ));
        report(self.name(), checks)
    }
}

/// One positroid with everything the positroid checks need.
struct PositroidCase {
    p: AffinePermutation,
    m: Matroid,
}

fn show_perm(p: &AffinePermutation) -> String {
    permutation_to_value(p).to_string()
}

pub struct PositroidsSuite;

impl VerificationSuite for PositroidsSuite {
    fn name(&self) -> &str {
        "positroids"
    }

    fn description(&self) -> &str {
        "ec equals length for positroids, with their encodings, essential sets and interval coefficients"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(5);
        let samples = cfg.samples.unwrap_or(1000);
        let exhaustive: Vec<AffinePermutation> = (1..=max_n)
            .flat_map(all_bounded_affine_permutations)
            .collect();
        let enumerated = exhaustive.len();
        let mut perms = exhaustive;
        for n in 6..=8 {
            perms.extend((0..samples).map(|i| {
                random_bounded_affine_permutation(n, cfg.seed ^ ((n as u64) << 32) ^ i as u64)
            }));
        }
        let cases: Vec<PositroidCase> = perms
            .into_par_iter()
            .map(|p| {
                let m = positroid_from_permutation(&p).expect("permutations give positroids");
                PositroidCase { p, m }
            })
            .collect();
        let scope = format!(
            "all {enumerated} bounded affine permutations with n ≤ {max_n}, {samples} random at each n = 6, 7, 8"
        );
        let mut checks = vec![
            run_check("ec over power set = ec over intervals = ec from π = length", &cases, |c| {
                let l = BigInt::from(c.p.length());
                let full = ec_with(&c.m, &SubsetFamily::power_set(c.m.n()));
                let iv = ec_with(&c.m, &interval_family(c.m.n()));
                let from_p = BigInt::from(ec_positroid(&c.p));
                let canonical = ec(&c.m);
                (full != l || iv != l || from_p != l || canonical != l).then(|| {
                    format!("{}: length {l}, power set {full}, intervals {iv}, π {from_p}, canonical {canonical}", show_perm(&c.p))
                })
            })
            .with_note(scope),
            run_check("a over intervals equals the permutation-matrix entry", &cases, |c| {
                let bad = interval_coefficient_mismatches(&c.m, &c.p);
                bad.first().map(|(iv, v)| format!("{}: a({iv}) = {v}", show_perm(&c.p)))
            }),
            run_check("Σ#I = nk + n and Σd_I = l + n over the 1s", &cases, |c| {
                let s = identity_sums(&c.p);
                (!s.holds()).then(|| format!("{}: {s:?}", show_perm(&c.p)))
            }),
            run_check("rank matrix and permutation invert each other", &cases, |c| {
                let r = c.p.rank_matrix();
                let ok = r.is_valid()
                    && to_affine_permutation(&r).ok().as_ref() == Some(&c.p)
                    && affine_permutation_of(&c.m).ok().as_ref() == Some(&c.p)
                    && is_positroid(&c.m);
                (!ok).then(|| show_perm(&c.p))
            }),
            run_check("essential-set bounds regenerate the positroid", &cases, |c| {
                let bounds = IntervalRanks::from_essential_set(c.p.n(), c.p.rank(), &essential_set(&c.p));
                (positroid_from_interval_ranks(&bounds).ok().as_ref() != Some(&c.m)).then(|| show_perm(&c.p))
            }),
            run_check("connected components form a noncrossing partition", &cases, |c| {
                (!is_noncrossing(&c.m.connected_components())).then(|| show_perm(&c.p))
            }),
            run_check("flacets are cyclic intervals", &cases, |c| {
                flacets(&c.m)
                    .iter()
                    .find(|&x| !is_cyclic_interval(c.m.n(), x))
                    .map(|x| format!("{}: {x}", show_perm(&c.p)))
            }),
        ];
        let mut rng = rng_for(cfg, 40);
        let minor_cases: Vec<(usize, GroundSubset)> = (0..samples.div_ceil(2))
            .map(|_| {
                let i = rng.gen_range(0..cases.len());
                (i, random_subset(&mut rng, cases[i].m.n()))
            })
            .collect();
        checks.push(run_check(
            "restrictions and contractions are positroids",
            &minor_cases,
            |(i, s)| {
                let m = &cases[*i].m;
                let ok =
                    is_positroid(&m.restrict(*s).matroid) && is_positroid(&m.contract(*s).matroid);
                (!ok).then(|| format!("{} with S = {s}", show_perm(&cases[*i].p)))
            },
        ));
        report(self.name(), checks)
    }
}

pub struct ValuationSuite;

impl VerificationSuite for ValuationSuite {
    fn name(&self) -> &str {
        "valuation"
    }

    fn description(&self) -> &str {
        "the valuation identity for s and ec on a matroidal subdivision witness"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let witness = cfg.witness.clone().unwrap_or_else(delta24_split);
        let r = check_valuation(&witness)?;
        let mut checks = vec![
            single_check(
                "s(M) = Σ ± s(N) coefficientwise",
                (!r.s_holds()).then(|| format!("{} vs {}", r.s_parent, r.s_signed_sum)),
            ),
            single_check(
                "ec(M) = Σ ± ec(N)",
                (!r.ec_holds()).then(|| format!("{} vs {}", r.ec_parent, r.ec_signed_sum)),
            ),
            single_check(
                "Σ ± 1 over internal faces = 1",
                (!r.euler_holds()).then(|| format!("{}", r.euler_sum)),
            ),
        ];
        let samples = cfg.samples.unwrap_or(50);
        let ms = random_matroids(cfg, 50, samples, cfg.n.unwrap_or(6));
        checks.push(run_check(
            "trivial subdivisions satisfy the identity",
            &ms,
            |m| {
                let ok =
                    check_valuation(&SubdivisionWitness::trivial(m.clone())).map(|r| r.holds());
                (!matches!(ok, Ok(true))).then(|| show(m))
            },
        ));
        report(self.name(), checks)
    }
}

pub struct IdentitiesSuite;

impl VerificationSuite for IdentitiesSuite {
    fn name(&self) -> &str {
        "identities"
    }

    fn description(&self) -> &str {
        "removal deltas, duality, vanishing on disconnected sets and direct sums"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let max_n = cfg.n.unwrap_or(6);
        let samples = cfg.samples.unwrap_or(1000);
        let mut checks = Vec::new();

        let mut rng = rng_for(cfg, 60);
        let triples: Vec<(Matroid, SubsetFamily, GroundSubset)> =
            random_families(cfg, 61, samples, max_n)
                .into_iter()
                .map(|(m, f)| {
                    let z = random_member(&mut rng, &f).expect("families are nonempty");
                    (m, f, z)
                })
                .collect();
        let deltas: Vec<[Option<String>; 3]> = triples
            .par_iter()
            .map(|(m, f, z)| {
                let predicted = removal_delta(m, f, *z).expect("z is a member");
                let observed = RemovalDelta::observed(m, f, *z).expect("z is a member");
                let tag = || format!("{} with {} sets, Z = {z}", show(m), f.len());
                [
                    (predicted.ec != observed.ec).then(tag),
                    (predicted.a != observed.a).then(tag),
                    (predicted.b != observed.b).then(tag),
                ]
            })
            .collect();
        for (i, name) in [
            "ec_F − ec_{F−Z} = a(Z) b(Z)",
            "a_F(S) − a_{F−Z}(S) = a(Z) μ(Z, S)",
            "b_F(S) − b_{F−Z}(S) = μ(S, Z) b(Z)",
        ]
        .into_iter()
        .enumerate()
        {
            checks.push(run_check(name, &deltas, |d| d[i].clone()));
        }

        let duals: Vec<_> = triples
            .par_iter()
            .map(|(m, f, _)| dual_identities(m, f))
            .collect();
        checks.push(run_check("ec_F(M) = ec_F'(M*)", &duals, |d| d.0.clone()));
        checks.push(run_check("a_F(S) = b_F'(E − S) in M*", &duals, |d| {
            d.1.clone()
        }));

        let ms = random_matroids(cfg, 62, samples, cfg.n.unwrap_or(8));
        checks.push(run_check(
            "a vanishes on disconnected sets over the power set",
            &ms,
            |m| {
                let a = coeff_a(m, &SubsetFamily::power_set(m.n()));
                let bad = a
                    .iter()
                    .find(|(s, v)| !v.is_zero() && !m.is_connected_restriction(*s))
                    .map(|(s, v)| format!("{}: a({s}) = {v}", show(m)));
                bad
            },
        ));

        let mut rng = rng_for(cfg, 63);
        let pairs: Vec<(Matroid, Matroid)> = (0..samples)
            .map(|_| {
                let a = rng.gen_range(1..=4);
                let b = rng.gen_range(1..=4);
                (random_matroid(&mut rng, a), random_matroid(&mut rng, b))
            })
            .collect();
        let literal = pairs
            .par_iter()
            .filter(|(m, n)| ec(&m.direct_sum(n).expect("small")) != ec(m) + ec(n))
            .count();
        let cross_nonzero = pairs
            .iter()
            .filter(|(m, n)| direct_sum_cross_term(m, n) != 0)
            .count();
        checks.push(
            run_check("ec(M ⊕ N) = ec(M) + ec(N) + k_M c(N) + k_N c(M)", &pairs, |(m, n)| {
                let sum = m.direct_sum(n).ok()?;
                let want = ec(m) + ec(n) + BigInt::from(direct_sum_cross_term(m, n));
                let full = ec_with(&sum, &SubsetFamily::power_set(sum.n()));
                (full != want || ec(&sum) != want)
                    .then(|| format!("{} ⊕ {}: {full} vs {want}", show(m), show(n)))
            })
            .with_note(format!(
                "plain additivity ec(M ⊕ N) = ec(M) + ec(N) failed on {literal} of {} pairs, exactly the {cross_nonzero} with a nonzero cross term",
                pairs.len()
            )),
        );
        checks.push(single_check(
            "plain additivity fails exactly where the cross term is nonzero",
            (literal != cross_nonzero)
                .then(|| format!("{literal} failures vs {cross_nonzero} nonzero cross terms")),
        ));
        report(self.name(), checks)
    }
}
