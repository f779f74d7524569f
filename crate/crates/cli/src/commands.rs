//! One function per subcommand. Each returns a [`Report`] holding both output forms.

use serde_json::{json, Value};
use skewcode_core::codes::PrincipalCode;
use skewcode_core::finring::{Elem, Ring};
use skewcode_core::matrices::{left_annihilator, RingMatrix};
use skewcode_core::oracle::{brute_dual, closure_check, enumerate_code, weight_distribution};
use skewcode_core::{Error, ErrorClass, SkewPoly};

use crate::config::Job;

pub struct Report {
    pub text: String,
    pub json: Value,
    /// False when a check inside the command failed.
    pub ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

pub fn matrix_json(m: &RingMatrix) -> Value {
    let ring = m.ring();
    Value::Array(m.row_vectors().map(|r| vector_json(ring, r)).collect())
}

pub fn vector_json(ring: &Ring, v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|&e| Value::String(ring.format(e))).collect())
}

pub fn vector_text(ring: &Ring, v: &[Elem]) -> String {
    v.iter().map(|&e| ring.format(e)).collect::<Vec<_>>().join(" ")
}

fn poly_json(p: &SkewPoly) -> Value {
    vector_json(p.context().ring(), p.coeffs())
}

pub fn build_code(job: &Job) -> Result<PrincipalCode, Error> {
    match &job.h {
        Some(h) => PrincipalCode::with_cofactor(&job.f, &job.g, h),
        None => PrincipalCode::new(&job.f, &job.g),
    }
}

fn matrix_report(m: RingMatrix) -> Report {
    Report::new(m.format(), json!({ "matrix": matrix_json(&m) }))
}

pub fn gen_matrix(job: &Job) -> Result<Report, Error> {
    Ok(matrix_report(build_code(job)?.generating_matrix()?))
}

pub fn control_matrix(job: &Job) -> Result<Report, Error> {
    Ok(matrix_report(build_code(job)?.control_matrix()?))
}

pub fn parity_check(job: &Job) -> Result<Report, Error> {
    Ok(matrix_report(build_code(job)?.parity_check_matrix()?))
}

pub fn dual(job: &Job) -> Result<Report, Error> {
    let code = build_code(job)?;
    let dual = code.dual_code()?;
    let m = code.dual_generating_matrix()?;
    let ring = job.ctx.ring();
    let text = format!(
        "h: {}\nh*: {}\nconstant: {}\ngenerating matrix:\n{}",
        dual.h.format(),
        dual.h_star.format(),
        ring.format(dual.constant),
        m.format()
    );
    let json = json!({
        "h": poly_json(&dual.h),
        "h_star": poly_json(&dual.h_star),
        "constant": ring.format(dual.constant),
        "matrix": matrix_json(&m),
    });
    Ok(Report::new(text, json))
}

pub fn self_dual(job: &Job) -> Result<Report, Error> {
    let code = build_code(job)?;
    let report = code.self_dual_criterion()?;
    let words = enumerate_code(&code, job.bound)?;
    let brute = brute_dual(&words, job.bound)?.words() == words.words();
    if brute != report.is_self_dual_by_sums {
        return Err(Error::InternalInconsistency("self-duality sums disagree with brute force"));
    }
    let ring = job.ctx.ring();
    let reason = if brute {
        "sums for l >= 1 all zero"
    } else {
        "a sum for l >= 1 is nonzero"
    };
    let text = format!(
        "sums (l = 0..k): {}\nself-dual: {brute} ({reason}; brute-force confirmed)\n",
        vector_text(ring, &report.sums)
    );
    let json = json!({
        "sums": vector_json(ring, &report.sums),
        "self_dual": brute,
        "brute_force_confirmed": true,
        "generator_matches_dual": report.generator_matches_dual,
    });
    Ok(Report::new(text, json))
}

fn parse_vector(ring: &Ring, text: &str) -> Result<Vec<Elem>, Error> {
    let m = RingMatrix::parse(ring, text)?;
    if m.rows() != 1 {
        return Err(Error::Parse(format!("expected one row, found {}", m.rows())));
    }
    Ok(m.row(0).to_vec())
}

pub fn encode(job: &Job, message: &str) -> Result<Report, Error> {
    let code = build_code(job)?;
    let ring = job.ctx.ring();
    let word = code.encode(&parse_vector(ring, message)?)?;
    Ok(Report::new(
        format!("{}\n", vector_text(ring, &word)),
        json!({ "codeword": vector_json(ring, &word) }),
    ))
}

pub fn syndrome(job: &Job, word: &str) -> Result<Report, Error> {
    let code = build_code(job)?;
    let ring = job.ctx.ring();
    let word = parse_vector(ring, word)?;
    let s = code.syndrome(&word)?;
    let member = s.iter().all(|e| e.is_zero());
    Ok(Report::new(
        format!("syndrome: {}\ncodeword: {member}\n", vector_text(ring, &s)),
        json!({ "syndrome": vector_json(ring, &s), "codeword": member }),
    ))
}

pub fn weights(job: &Job) -> Result<Report, Error> {
    let code = build_code(job)?;
    let words = enumerate_code(&code, job.bound)?;
    let dist = weight_distribution(&words);
    let mut text = String::new();
    for (w, count) in &dist.counts {
        text.push_str(&format!("weight {w}: {count}\n"));
    }
    match dist.min_distance() {
        Some(d) => text.push_str(&format!("minimum distance: {d}\n")),
        None => text.push_str("minimum distance: none\n"),
    }
    let counts: serde_json::Map<String, Value> =
        dist.counts.iter().map(|(w, c)| (w.to_string(), json!(c))).collect();
    Ok(Report::new(
        text,
        json!({ "counts": counts, "total": dist.total(), "minimum_distance": dist.min_distance() }),
    ))
}

enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

fn outcome(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Precondition errors become skips; anything else aborts the run.
fn or_skip<T>(r: Result<T, Error>) -> Result<Result<T, String>, Error> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if e.class() == ErrorClass::Precondition => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

pub fn verify(job: &Job) -> Result<Report, Error> {
    let code = build_code(job)?;
    let ring = job.ctx.ring();
    let (n, k, r) = (code.n(), code.k(), code.r());
    let plt = code.plt();
    let q = ring.size() as usize;
    let mut checks: Vec<(&str, Outcome)> = Vec::new();

    let g = code.generating_matrix()?;
    let start = code.generator().right_divmod(code.modulus())?.1.padded(n)?;
    let mut rows_ok = true;
    for i in 0..k {
        rows_ok &= g.row(i) == plt.iterate(&start, i)?;
    }
    checks.push(("generating rows are T_f iterates", outcome(rows_ok, || "row mismatch".into())));

    let words = enumerate_code(&code, job.bound)?;
    checks.push((
        "code closed under T_f",
        outcome(closure_check(&words, plt)?, || "T_f leaves the code".into()),
    ));
    checks.push((
        "|C| = |A|^k",
        outcome(q.checked_pow(k as u32) == Some(words.len()), || format!("|C| = {}", words.len())),
    ));

    match or_skip(code.control_matrix())? {
        Ok(h) => {
            let start = code.cofactor().expect("control matrix needs h").right_divmod(code.modulus())?.1.padded(n)?;
            let mut rows_ok = true;
            for i in 0..n {
                rows_ok &= h.row(i) == plt.iterate(&start, i)?;
            }
            checks.push(("control rows are T_f iterates", outcome(rows_ok, || "row mismatch".into())));
            checks.push(("G H = 0", outcome(g.mul(&h)?.is_zero(), || "nonzero product".into())));
            let ann = left_annihilator(&h, job.bound)?;
            checks.push((
                "C = left annihilator of H",
                outcome(&ann == words.words(), || format!("{} words against {}", ann.len(), words.len())),
            ));
        }
        Err(why) => {
            for name in ["control rows are T_f iterates", "G H = 0", "C = left annihilator of H"] {
                checks.push((name, Outcome::Skipped(why.clone())));
            }
        }
    }

    match or_skip(code.parity_check_matrix())? {
        Ok(hs) => {
            let hst = hs.transpose();
            checks.push(("G H_*^T = 0", outcome(g.mul(&hst)?.is_zero(), || "nonzero product".into())));
            let ann = if r == 0 {
                words.words().clone()
            } else {
                left_annihilator(&hst, job.bound)?
            };
            checks.push((
                "C = kernel of H_*^T",
                outcome(&ann == words.words(), || format!("{} words against {}", ann.len(), words.len())),
            ));
        }
        Err(why) => {
            for name in ["G H_*^T = 0", "C = kernel of H_*^T"] {
                checks.push((name, Outcome::Skipped(why.clone())));
            }
        }
    }

    let brute = brute_dual(&words, job.bound)?;
    match or_skip(code.dual_code())? {
        Ok(dual) => {
            let listed = enumerate_code(&dual.code, job.bound)?;
            checks.push((
                "dual code = brute-force dual",
                outcome(listed.words() == brute.words(), || "word sets differ".into()),
            ));
            checks.push((
                "|dual| = |A|^r",
                outcome(q.checked_pow(r as u32) == Some(listed.len()), || format!("|dual| = {}", listed.len())),
            ));
        }
        Err(why) => {
            for name in ["dual code = brute-force dual", "|dual| = |A|^r"] {
                checks.push((name, Outcome::Skipped(why.clone())));
            }
        }
    }

    match or_skip(code.self_dual_criterion())? {
        Ok(report) => {
            let self_dual = brute.words() == words.words();
            checks.push((
                "self-dual sums agree with brute force",
                outcome(report.is_self_dual_by_sums == self_dual, || {
                    format!("sums say {}, brute force says {self_dual}", report.is_self_dual_by_sums)
                }),
            ));
        }
        Err(why) => checks.push(("self-dual sums agree with brute force", Outcome::Skipped(why))),
    }

    let mut text = String::new();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let mut list = Vec::new();
    for (name, o) in &checks {
        let (status, detail) = match o {
            Outcome::Pass => {
                passed += 1;
                text.push_str(&format!("{name}: ok\n"));
                ("ok", None)
            }
            Outcome::Fail(d) => {
                failed += 1;
                text.push_str(&format!("{name}: FAILED ({d})\n"));
                ("failed", Some(d))
            }
            Outcome::Skipped(d) => {
                skipped += 1;
                text.push_str(&format!("{name}: skipped ({d})\n"));
                ("skipped", Some(d))
            }
        };
        list.push(json!({ "check": name, "status": status, "detail": detail }));
    }
    text.push_str(&format!("verify: {passed} passed, {failed} failed, {skipped} skipped\n"));
    Ok(Report {
        text,
        json: json!({ "checks": list, "passed": passed, "failed": failed, "skipped": skipped }),
        ok: failed == 0,
    })
}
