//! Acceptance criteria. Each prints one `PASS`/`FAIL` line; every comparison
//! is exact. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use bethe_lab::{execute, Cli, RunConfig};
use bethe_lab_core::cm::{build_qz, TraceWord};
use bethe_lab_core::exact::ring::rat;
use bethe_lab_core::seed::SeededRationals;
use bethe_lab_core::verifier::{self, PolynomialitySetup, VerificationReport};
use bethe_lab_core::{GaudinConfig, HamiltonianSet, OperatorMatrix, Rational};
use clap::Parser;

const SEED: u64 = 20;
const ORDER: usize = 6;
const CONFIGS: [(usize, usize); 6] = [(1, 3), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)];

fn configs() -> Vec<GaudinConfig> {
    CONFIGS
        .iter()
        .enumerate()
        .map(|(s, &(gl_n, sites))| GaudinConfig::seeded(gl_n, sites, SEED + s as u64).unwrap())
        .collect()
}

fn label(cfg: &GaudinConfig) -> String {
    format!("({},{})", cfg.gl_n(), cfg.sites())
}

/// Outcome of one criterion: failures are described, successes summarized.
struct Verdict {
    failures: Vec<String>,
    summary: String,
}

impl Verdict {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn report(&mut self, what: &str, r: &VerificationReport) {
        if !r.passed {
            let first = r.first_residual.as_ref().map(|x| x.location.clone()).unwrap_or_default();
            self.failures.push(format!("{what}: {} failed at {first}", r.check));
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

fn main_theorem() -> Verdict {
    let mut v = Verdict::new();
    let mut slowest = 0.0f64;
    for cfg in configs() {
        let t = Instant::now();
        v.report(&label(&cfg), &verifier::verify_main_theorem(&cfg, ORDER, ORDER).unwrap());
        slowest = slowest.max(t.elapsed().as_secs_f64());
        v.require(t.elapsed().as_secs_f64() < 60.0, format!("{} took over 60 s", label(&cfg)));
    }
    v.summary = format!("Psi_ij = psi_ij(z,H) for i,j <= {ORDER} at 6 configurations, slowest {slowest:.2} s");
    v
}

fn commutativity() -> Verdict {
    let mut v = Verdict::new();
    for cfg in configs() {
        v.report(&label(&cfg), &verifier::verify_commutativity(&cfg).unwrap());
        if matches!((cfg.gl_n(), cfg.sites()), (2, 2) | (2, 3)) {
            v.report(&label(&cfg), &verifier::verify_bethe_commutativity(&cfg, 4).unwrap());
        }
    }
    v.summary = "[H_a,H_b] = 0 everywhere, [Psi_ij,Psi_kl] = 0 for indices <= 4 at (2,2), (2,3)".into();
    v
}

fn constant_terms() -> Verdict {
    let mut v = Verdict::new();
    for cfg in configs() {
        v.report(&label(&cfg), &verifier::verify_constant_terms(&cfg).unwrap());
    }
    v.summary = "B_i0 = (-1)^i e_i(K) id".into();
    v
}

fn closed_forms() -> Verdict {
    let mut v = Verdict::new();
    for cfg in configs() {
        v.report(&label(&cfg), &verifier::verify_lemma_psi12(&cfg, ORDER).unwrap());
        v.report(&label(&cfg), &verifier::verify_eii(&cfg, ORDER).unwrap());
    }
    v.summary = format!("Psi_1, Psi_2, Psi_dagger closed forms and the E_ii traces to order {ORDER}");
    v
}

fn phi_product() -> Verdict {
    let mut v = Verdict::new();
    for cfg in configs() {
        v.report(&label(&cfg), &verifier::verify_phi_product(&cfg).unwrap());
    }
    v.summary = "phi(x,z,H) = prod (x-K_i)^lambda_i on every weight subspace".into();
    v
}

fn wronskian() -> Verdict {
    let mut v = Verdict::new();
    v.report("wronskian", &verifier::verify_wronskian(4, 10, 5, SEED).unwrap());
    v.summary = "W = Delta det((u-Z)(x-Q)-1) on 10 tuples for n <= 4, det S = Delta for n <= 5".into();
    v
}

fn rank_one() -> Verdict {
    let mut v = Verdict::new();
    let r = verifier::verify_rank_one(20, 5, SEED).unwrap();
    v.require(r.comparisons >= 20, format!("only {} instances compared", r.comparisons));
    v.report("rank_one", &r);
    v.summary = "rank([Q,Z]+1) = 1 on 20 seeded instances, n <= 5".into();
    v
}

fn simple_spectra() -> Verdict {
    let mut v = Verdict::new();
    let budget = bethe_lab_core::gaudin::DEFAULT_RETRY_BUDGET;
    for (s, (gl_n, sites)) in [(2, 2), (2, 3), (3, 2)].into_iter().enumerate() {
        let cfg = GaudinConfig::seeded(gl_n, sites, SEED + s as u64).unwrap();
        v.report(&format!("full {}", label(&cfg)), &verifier::verify_simple_spectra(&cfg, SEED, budget).unwrap());
    }
    for (s, sites) in [2, 3, 4].into_iter().enumerate() {
        let mut g = SeededRationals::new(SEED + 10 + s as u64);
        let c = g.next_rational();
        let cfg = GaudinConfig::new(2, sites, vec![c.clone(), c], g.distinct(sites)).unwrap();
        let r = verifier::verify_simple_spectra(&cfg, SEED, budget).unwrap();
        v.require(
            r.config.extra.iter().any(|(k, val)| k == "scope" && val == "singular subspace"),
            format!("equal K at {} not restricted to the singular subspace", label(&cfg)),
        );
        v.report(&format!("singular {}", label(&cfg)), &r);
    }
    let control = GaudinConfig::new(2, 2, vec![rat(0), rat(0)], vec![rat(0), rat(1)]).unwrap();
    let r = verifier::verify_non_simple(&control, SEED, budget).unwrap();
    v.require(
        r.details.iter().any(|d| d.starts_with("joint eigenspace dimensions")),
        "negative control did not find a degenerate joint eigenspace",
    );
    v.report("control K=(0,0)", &r);
    v.summary = "squarefree witnesses on (2,2),(2,3),(3,2) full and (2,2),(2,3),(2,4) singular; K=(0,0) degenerate".into();
    v
}

fn example() -> Verdict {
    let mut v = Verdict::new();
    let z = [rat(0), rat(1)];
    let cfg = GaudinConfig::new(2, 2, vec![rat(0), rat(1)], z.to_vec()).unwrap();
    let h = HamiltonianSet::build(&cfg).unwrap().h;
    let tr = TraceWord::parse("X^2").unwrap().evaluate(build_qz(&z, h.clone()).unwrap().pair());
    let gap: Rational = (&z[0] - &z[1]).recip();
    let expected = h[0]
        .mul(&h[0])
        .add(&h[1].mul(&h[1]))
        .sub(&OperatorMatrix::scalar(4, (), rat(2) * &gap * &gap));
    v.require(tr == expected, "tr X^2 differs from H_1^2 + H_2^2 - 2(z_1-z_2)^-2");
    v.report("example", &verifier::verify_example(&cfg).unwrap());
    let mut setup = PolynomialitySetup::new(2, 2, cfg.k().to_vec(), TraceWord::parse("X^2").unwrap(), SEED);
    setup.degree = 2;
    v.report("polynomiality", &verifier::verify_polynomiality(&setup).unwrap());
    v.summary = "tr X^2 = H_1^2 + H_2^2 - 2(z_1-z_2)^-2 id, polynomial of degree 2 in (z_1,z_2)".into();
    v
}

fn regularized() -> Verdict {
    let mut v = Verdict::new();
    for cfg in configs() {
        v.report(&label(&cfg), &verifier::verify_regularized(&cfg).unwrap());
    }
    v.summary = "A_ia polynomial, sum_a A_Na u^a = P(u) id, sum_i A_in d^i = prod (d-K_i) id".into();
    v
}

fn suite_json(seed: u64) -> Vec<String> {
    CONFIGS
        .iter()
        .map(|&(gl_n, sites)| {
            let args = [
                "bethe-lab".to_string(),
                "verify".into(),
                "--N".into(),
                gl_n.to_string(),
                "--n".into(),
                sites.to_string(),
                "--seed".into(),
                seed.to_string(),
                "--orders".into(),
                format!("{ORDER},{ORDER}"),
                "--format".into(),
                "json".into(),
            ];
            let cfg = RunConfig::from_cli(Cli::try_parse_from(args).unwrap()).unwrap();
            execute(&cfg).unwrap().text
        })
        .collect()
}

fn determinism() -> Verdict {
    let mut v = Verdict::new();
    let (a, b) = (suite_json(SEED), suite_json(SEED));
    for (i, (x, y)) in a.iter().zip(&b).enumerate() {
        v.require(x == y, format!("run {} differs between invocations", label_of(i)));
        v.require(x.contains("\"passed\": true"), format!("suite at {} did not pass", label_of(i)));
    }
    let bytes: usize = a.iter().map(String::len).sum();
    v.summary = format!("full verify suite at 6 configurations reproduced byte for byte ({bytes} bytes)");
    v
}

fn label_of(i: usize) -> String {
    format!("({},{})", CONFIGS[i].0, CONFIGS[i].1)
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("main theorem", main_theorem),
        ("commutativity", commutativity),
        ("constant terms", constant_terms),
        ("closed forms", closed_forms),
        ("phi product", phi_product),
        ("wronskian", wronskian),
        ("rank one", rank_one),
        ("simple spectra", simple_spectra),
        ("example", example),
        ("regularized operator", regularized),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = run();
        let secs = t.elapsed().as_secs_f64();
        if v.failures.is_empty() {
            println!("PASS {:>2} {name}: {} [{secs:.2} s]", n + 1, v.summary);
        } else {
            failed += 1;
            println!("FAIL {:>2} {name}: {} [{secs:.2} s]", n + 1, v.failures.join("; "));
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
