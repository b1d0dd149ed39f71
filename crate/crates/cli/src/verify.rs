use rayon::prelude::*;
use serde_json::json;
use wt_duality::verify_schur_weyl;
use wt_laurent::{parse_rational, LaurentPoly};
use wt_rep::{hecke_action_matrix, matrix_of_element_with, matrix_of_word, OperatorMatrix};
use wt_skein::{presentation_check, Normalizer, TangleElement};
use wt_tangle::random::{random_boundary, random_word, rng};
use wt_tangle::{strand_graph, Orientation, Slice, TangleType, TangleWord};

use crate::args::Suite;
use crate::{err, CliError, Report};

/// Failure messages kept per report.
const MAX_LISTED: usize = 20;

#[derive(Default)]
struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    fn into_report(self, suite: &str, mut params: serde_json::Value) -> Report {
        let failed = self.failed;
        let listed = &self.failures;
        let passed = failed == 0;
        let mut human = format!(
            "{suite}: {} ({} cases, {failed} failed)",
            if passed { "PASS" } else { "FAIL" },
            self.cases
        );
        for f in listed {
            human.push_str(&format!("\n  {f}"));
        }
        let obj = params.as_object_mut().expect("parameters are an object");
        obj.insert("suite".into(), json!(suite));
        obj.insert("cases".into(), json!(self.cases));
        obj.insert("failed".into(), json!(failed));
        obj.insert("failures".into(), json!(listed));
        obj.insert("passed".into(), json!(passed));
        Report { json: params, human, passed }
    }
}

fn z() -> LaurentPoly {
    LaurentPoly::q_pow(-1) - LaurentPoly::q_pow(1)
}

fn check_params(n: u32, m: usize) -> Result<(), CliError> {
    if n == 0 || m == 0 {
        return Err(CliError("n and m must be at least 1".into()));
    }
    Ok(())
}

fn skein(n: u32, m: usize, samples: usize, seed: u64) -> Result<Report, CliError> {
    check_params(n, m)?;
    let norm = Normalizer::new(n);
    let mut r = rng(seed);
    let mut t = Tally::default();
    for k in 0..samples {
        let top = random_boundary(&mut r, 1 + k % m);
        let w = random_word(&mut r, &top, 4, 8);
        let nf = norm.normalize(&w);
        let g = strand_graph(&w);
        for info in g.crossing_list() {
            // positive minus negative crossing = (q^-1 - q) · smoothing
            let sign = LaurentPoly::from(i64::from(info.sign));
            let smoothed = norm.normalize(&w.smooth_crossing(info.slice)).scale(&(&z() * &sign));
            let expansion = norm.normalize(&w.switch_crossing(info.slice)).add(&smoothed).map_err(err)?;
            t.check(nf == expansion, || format!("skein expansion at slice {}: {}", info.slice, w.to_dsl()));
        }
        let levels = w.levels();
        let at = k % levels.len();
        if levels[at].len() >= 2 {
            let pos = 1 + k % (levels[at].len() - 1);
            let mut slices = w.slices().to_vec();
            slices.splice(at..at, [Slice::over(pos), Slice::under(pos)]);
            let longer = TangleWord::validate(w.ty().clone(), slices).map_err(err)?;
            t.check(norm.normalize(&longer) == nf, || format!("Reidemeister II at {at}: {}", w.to_dsl()));
        }
        let (c, _) = w.connector();
        let basis = TangleElement::basis(c.clone(), n);
        t.check(norm.normalize(&norm.canonical(&c)) == basis, || format!("canonical word of {c}"));
    }
    Ok(t.into_report("skein", json!({ "n": n, "m": m, "samples": samples, "seed": seed })))
}

fn hecke(n: u32, m: usize) -> Result<Report, CliError> {
    check_params(n, m)?;
    let norm = Normalizer::new(n);
    let mut t = Tally::default();
    let d = Orientation::Down;
    for mm in 2..=m {
        let ty = TangleType::square(vec![d; mm]);
        let id = OperatorMatrix::identity(vec![d; mm], n);
        let mats = (1..mm).map(|k| hecke_action_matrix(k, mm, n)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        for k in 1..mm {
            let tk = &mats[k - 1];
            let w = TangleWord::validate(ty.clone(), vec![Slice::over(k)]).map_err(err)?;
            t.check(*tk == matrix_of_word(&w, n), || format!("m={mm} T{k}: crossing matrix"));
            t.check(*tk == matrix_of_element_with(&norm, &norm.normalize(&w)), || format!("m={mm} T{k}: element matrix"));
            let quad = tk.mul(tk).map_err(err)?;
            t.check(quad == id.add(&tk.scale(&z())).map_err(err)?, || format!("m={mm} T{k}: quadratic relation"));
            if k + 1 < mm {
                let tl = &mats[k];
                let lhs = tk.mul(tl).and_then(|x| x.mul(tk)).map_err(err)?;
                let rhs = tl.mul(tk).and_then(|x| x.mul(tl)).map_err(err)?;
                t.check(lhs == rhs, || format!("m={mm} T{k}: braid relation"));
            }
            for l in k + 2..mm {
                let tl = &mats[l - 1];
                t.check(tk.mul(tl).map_err(err)? == tl.mul(tk).map_err(err)?, || format!("m={mm} T{k} T{l} commute"));
            }
        }
    }
    Ok(t.into_report("hecke", json!({ "n": n, "m": m })))
}

fn presentation(n: u32, r: usize, s: usize) -> Result<Report, CliError> {
    if n == 0 || r + s == 0 {
        return Err(CliError("need n ≥ 1 and r + s ≥ 1".into()));
    }
    let rep = presentation_check(r, s, n);
    let passed = rep.all_passed();
    let mut human = format!(
        "presentation (r,s)=({r},{s}) n={n}: {}",
        if passed { "PASS" } else { "FAIL" }
    );
    for rel in &rep.relations {
        human.push_str(&format!("\n  {:<7} {:<4} {}", rel.name, if rel.passed { "ok" } else { "FAIL" }, rel.statement));
    }
    let mut json = serde_json::to_value(&rep).map_err(err)?;
    let obj = json.as_object_mut().expect("report is an object");
    obj.insert("suite".into(), json!("presentation"));
    obj.insert("passed".into(), json!(passed));
    Ok(Report { json, human, passed })
}

fn linking(n: u32, m: usize, samples: usize, seed: u64) -> Result<Report, CliError> {
    check_params(n, m)?;
    let norm = Normalizer::new(n);
    let mut r = rng(seed);
    let mut t = Tally::default();
    for k in 0..samples {
        let top = random_boundary(&mut r, 1 + k % m);
        let a = random_word(&mut r, &top, 5, 8);
        let b = random_word(&mut r, a.bottom(), 5, 8);
        let ab = a.concat(&b).map_err(err)?;
        let (ma, mb, mab) = (matrix_of_word(&a, n), matrix_of_word(&b, n), matrix_of_word(&ab, n));
        t.check(ma.mul(&mb).map_err(err)? == mab, || format!("functoriality: {} / {}", a.to_dsl(), b.to_dsl()));
        let via_nf = matrix_of_element_with(&norm, &norm.normalize(&ab));
        t.check(via_nf == mab, || format!("normal form vs slices: {}", ab.to_dsl()));
    }
    Ok(t.into_report("linking", json!({ "n": n, "m": m, "samples": samples, "seed": seed })))
}

fn duality(n: u32, r: usize, s: usize, q0: &str, timings: bool) -> Result<Report, CliError> {
    if n == 0 || r + s == 0 {
        return Err(CliError("need n ≥ 1 and r + s ≥ 1".into()));
    }
    let x = parse_rational(q0).map_err(err)?;
    let rep = verify_schur_weyl(n, r, s, &x, timings).map_err(err)?;
    let passed = rep.passed();
    let v = &rep.verdicts;
    let mark = |b: bool| if b { "ok" } else { "FAIL" };
    let human = format!(
        "duality (n,r,s)=({n},{r},{s}) at q = {}: {}\n  image rank {}, commutant dimension {}\n  annihilator {} (walled), {} (Hecke); faithful: {}\n  commutation {}, rank = commutant {}, annihilators match {}, faithfulness criterion {}",
        rep.q0,
        if passed { "PASS" } else { "FAIL" },
        rep.image_rank,
        rep.commutant_dim,
        rep.annihilator_dim,
        rep.hecke_annihilator_dim,
        rep.faithful,
        mark(v.commutation),
        mark(v.rank_equals_commutant),
        mark(v.annihilators_match),
        mark(v.faithfulness_criterion),
    );
    let mut json = serde_json::to_value(&rep).map_err(err)?;
    let obj = json.as_object_mut().expect("report is an object");
    obj.insert("suite".into(), json!("duality"));
    obj.insert("passed".into(), json!(passed));
    Ok(Report { json, human, passed })
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("WALLED_TANGLE_THREADS") {
        let k: usize = v
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| CliError(format!("WALLED_TANGLE_THREADS must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(k);
    }
    builder.build().map_err(err)
}

fn defaults() -> Vec<Suite> {
    vec![
        Suite::Skein { n: 2, m: 3, samples: 40 },
        Suite::Hecke { n: 2, m: 3 },
        Suite::Presentation { n: 2, r: 2, s: 2 },
        Suite::Linking { n: 2, m: 3, samples: 40 },
        Suite::Duality { n: 2, r: 1, s: 1, q0: "5/3".into(), timings: false },
    ]
}

pub(crate) fn run_suite(suite: &Suite, seed: u64) -> Result<Report, CliError> {
    match suite {
        Suite::Skein { n, m, samples } => skein(*n, *m, *samples, seed),
        Suite::Hecke { n, m } => hecke(*n, *m),
        Suite::Presentation { n, r, s } => presentation(*n, *r, *s),
        Suite::Linking { n, m, samples } => linking(*n, *m, *samples, seed),
        Suite::Duality { n, r, s, q0, timings } => duality(*n, *r, *s, q0, *timings),
        Suite::All => {
            let suites = defaults();
            // results are collected in suite order, so output does not depend on scheduling
            let reports = thread_pool()?
                .install(|| suites.par_iter().map(|s| run_suite(s, seed)).collect::<Result<Vec<_>, _>>())?;
            let passed = reports.iter().all(|r| r.passed);
            let human = reports.iter().map(|r| r.human.as_str()).collect::<Vec<_>>().join("\n");
            let json = json!({
                "suite": "all",
                "seed": seed,
                "reports": reports.iter().map(|r| r.json.clone()).collect::<Vec<_>>(),
                "passed": passed,
            });
            Ok(Report { json, human, passed })
        }
    }
}
