//! Bundled worked examples, each checked against independently computed values.

use serde_json::json;
use skewcode_core::codes::PrincipalCode;
use skewcode_core::matrices::RingMatrix;
use skewcode_core::oracle::{brute_dual, enumerate_code};
use skewcode_core::skewpoly::{divisor_transfer, hstar_targets, TransferDirection};
use skewcode_core::{Elem, Error, SkewContext, SkewPoly};

use crate::commands::{build_code, Report};
use crate::config::{Job, JobConfig};
use crate::CliError;

pub const CONFIGS: [(&str, &str); 8] = [
    ("example1.json", include_str!("../configs/example1.json")),
    ("example2.json", include_str!("../configs/example2.json")),
    ("example3.json", include_str!("../configs/example3.json")),
    ("example4.json", include_str!("../configs/example4.json")),
    ("example5.json", include_str!("../configs/example5.json")),
    ("example6.json", include_str!("../configs/example6.json")),
    ("example7.json", include_str!("../configs/example7.json")),
    ("example8.json", include_str!("../configs/example8.json")),
];

enum Miss {
    Lib(Error),
    Wrong(String),
}

impl From<Error> for Miss {
    fn from(e: Error) -> Self {
        Miss::Lib(e)
    }
}

type Check = Result<String, Miss>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), Miss> {
    if ok {
        Ok(())
    } else {
        Err(Miss::Wrong(detail()))
    }
}

fn matrix(job: &Job, text: &str) -> Result<RingMatrix, Miss> {
    Ok(RingMatrix::parse(job.ctx.ring(), text)?)
}

fn poly(ctx: &SkewContext, text: &str) -> Result<SkewPoly, Miss> {
    Ok(SkewPoly::parse(ctx, text)?)
}

fn show(m: &RingMatrix) -> String {
    m.format().trim_end().replace('\n', "; ")
}

fn elem(job: &Job, text: &str) -> Result<Elem, Miss> {
    Ok(job.ctx.ring().parse(text)?)
}

/// The enumerated dual of the code must equal the code generated by `dual`.
fn same_as_brute_dual(code: &PrincipalCode, dual: &PrincipalCode, bound: u64) -> Result<(), Miss> {
    let brute = brute_dual(&enumerate_code(code, bound)?, bound)?;
    let listed = enumerate_code(dual, bound)?;
    ensure(brute.words() == listed.words(), || {
        format!("brute-force dual has {} words, generated dual {}", brute.len(), listed.len())
    })
}

fn example1(job: &Job) -> Check {
    let code = PrincipalCode::new(&job.f, &job.g)?;
    let g = code.generating_matrix()?;
    let want = matrix(job, "(2,2) 1 0 0\n(0,2) 2 1 0\n(0,2) 0 2 1")?;
    ensure(g == want, || format!("G = {}", show(&g)))?;

    // The same quotient and generator with δ = 0.
    let flat = SkewContext::sigma_only(job.ctx.ring().clone(), job.ctx.sigma_map().clone())?;
    let (q, r) = job.f.right_divmod(&job.g)?;
    ensure(r.is_zero(), || "g does not right-divide f".into())?;
    let q = SkewPoly::new(&flat, q.coeffs().to_vec())?;
    let g0 = SkewPoly::new(&flat, job.g.coeffs().to_vec())?;
    let g = PrincipalCode::new(&(&q * &g0), &g0)?.generating_matrix()?;
    let want = matrix(job, "(2,2) 1 0 0\n0 2 1 0\n0 0 2 1")?;
    ensure(g == want, || format!("G with δ = 0 is {}", show(&g)))?;
    Ok("G with δ and with δ = 0 match".into())
}

fn example2(job: &Job) -> Check {
    let h = job.h.as_ref().ok_or(Error::CofactorMissing)?;
    let a4 = elem(job, "1")?;
    ensure(&job.g * h == job.f, || "g h != X^4 - α^4".into())?;
    ensure(&h.sigma_n(4)? * &job.g == job.f, || "σ^4(h) g != X^4 - α^4".into())?;
    let a = divisor_transfer(&job.g, a4, 4, TransferDirection::LeftToRight)?;
    ensure(a == a4, || format!("transfer gave {}", job.ctx.ring().format(a)))?;
    Ok("g h = σ^4(h) g = X^4 - α^4".into())
}

fn example3(job: &Job) -> Check {
    let ctx = &job.ctx;
    let h = job.h.as_ref().ok_or(Error::CofactorMissing)?;
    let hs = h.star()?;
    ensure(hs == poly(ctx, "[1, (2,2), (1,1), (2,2)]")?, || format!("h* = {}", hs.format()))?;
    let one = elem(job, "1")?;
    let targets = hstar_targets(h, one, 4)?;
    ensure(targets == (one, one), || "h* targets are not α^-4".into())?;
    let target = SkewPoly::x_pow_minus(ctx, 4, one);
    let (q, r) = target.left_divmod(&hs)?;
    ensure(r.is_zero(), || "h* does not left-divide X^4 - α^-4".into())?;
    ensure(q == poly(ctx, "[2, (2,2)]")?, || format!("left quotient {}", q.format()))?;
    let (_, r) = target.right_divmod(&hs)?;
    ensure(r.is_zero(), || "h* does not right-divide X^4 - α^-4".into())?;
    Ok("h* divides X^4 - α^-4 on both sides".into())
}

fn example4(job: &Job) -> Check {
    let code = build_code(job)?;
    let dual = code.dual_code()?;
    ensure(dual.h_star == poly(&job.ctx, "[1, (2,2), (1,1), (2,2)]")?, || {
        format!("dual generator {}", dual.h_star.format())
    })?;
    ensure(dual.constant == elem(job, "1")?, || {
        format!("dual constant {}", job.ctx.ring().format(dual.constant))
    })?;
    same_as_brute_dual(&code, &dual.code, job.bound)?;
    Ok("dual generated by h*, constant α^-4, brute force agrees".into())
}

fn example5(job: &Job, swap: &Job) -> Check {
    let code = build_code(swap)?;
    let m = code.dual_generating_matrix()?;
    ensure(m == matrix(swap, "1 (2,2) (1,1) (2,2)")?, || format!("swap dual matrix {}", show(&m)))?;

    let code = build_code(job)?;
    let (h, r) = job.f.left_divmod(&job.g)?;
    ensure(r.is_zero(), || "g does not left-divide f".into())?;
    ensure(&h * &job.g == job.f, || "h g != f".into())?;
    let m = code.dual_generating_matrix()?;
    // The entry in row 2, column 4 is σ(-α) = (5,1).
    ensure(m == matrix(job, "1 0 (5,5) 0\n0 1 0 (5,1)")?, || format!("D(Z_6) dual matrix {}", show(&m)))?;
    let dual = code.dual_code()?;
    same_as_brute_dual(&code, &dual.code, job.bound)?;
    Ok("both dual matrices match, brute force agrees".into())
}

fn example6(job: &Job) -> Check {
    let code = build_code(job)?;
    let report = code.self_dual_criterion()?;
    ensure(report.is_self_dual_by_sums, || "a criterion sum for l >= 1 is nonzero".into())?;
    let words = enumerate_code(&code, job.bound)?;
    let dual = brute_dual(&words, job.bound)?;
    ensure(dual.words() == words.words(), || "brute-force dual differs from the code".into())?;
    Ok(format!("self-dual, {} words", words.len()))
}

fn example7(job: &Job) -> Check {
    let code = build_code(job)?;
    let h = job.h.as_ref().ok_or(Error::CofactorMissing)?;
    ensure(&job.g * h == job.f, || "g h != f".into())?;
    let g = code.generating_matrix()?;
    let c = code.control_matrix()?;
    ensure(g == matrix(job, "(2,2) 1 0\n(0,2) (2,2) 1")?, || format!("G = {}", show(&g)))?;
    ensure(
        c == matrix(job, "(0,1) (1,1) 1\n(0,1) (1,2) (1,1)\n(0,1) (1,1) 1")?,
        || format!("H = {}", show(&c)),
    )?;
    ensure(g.mul(&c)?.is_zero(), || "G H != 0".into())?;
    Ok("G, H match and G H = 0".into())
}

fn example8(job: &Job) -> Check {
    let code = build_code(job)?;
    let g = code.generating_matrix()?;
    let hs = code.parity_check_matrix()?;
    ensure(hs == matrix(job, "1 (1,1) 1")?, || format!("H_* = {}", show(&hs)))?;
    ensure(g.mul(&hs.transpose())?.is_zero(), || "G H_*^T != 0".into())?;
    Ok("H_* matches and G H_*^T = 0".into())
}

fn load(index: usize, bound: Option<u64>, seed: Option<u64>) -> Result<Job, CliError> {
    Ok(JobConfig::from_json(CONFIGS[index].1)?.resolve(bound, seed)?)
}

pub fn run(bound: Option<u64>, seed: Option<u64>) -> Result<Report, CliError> {
    let jobs = (0..CONFIGS.len())
        .map(|i| load(i, bound, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let results = [
        example1(&jobs[0]),
        example2(&jobs[1]),
        example3(&jobs[2]),
        example4(&jobs[3]),
        example5(&jobs[4], &jobs[1]),
        example6(&jobs[5]),
        example7(&jobs[6]),
        example8(&jobs[7]),
    ];
    let mut text = String::new();
    let mut list = Vec::new();
    let mut passed = 0;
    for (i, result) in results.into_iter().enumerate() {
        let (ok, detail) = match result {
            Ok(d) => (true, d),
            Err(Miss::Wrong(d)) => (false, d),
            Err(Miss::Lib(e)) => (false, format!("error: {e}")),
        };
        passed += usize::from(ok);
        let status = if ok { "PASS" } else { "FAIL" };
        text.push_str(&format!("example {}: {status} ({detail})\n", i + 1));
        list.push(json!({ "example": i + 1, "config": CONFIGS[i].0, "pass": ok, "detail": detail }));
    }
    text.push_str(&format!("{passed}/{} passed\n", CONFIGS.len()));
    Ok(Report {
        text,
        json: json!({ "examples": list, "passed": passed, "total": CONFIGS.len() }),
        ok: passed == CONFIGS.len(),
    })
}
