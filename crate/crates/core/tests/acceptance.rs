//! Acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so every line is printed; exits nonzero if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewcode_core::codes::PrincipalCode;
use skewcode_core::finring::{Derivation, DerivationKind, Elem, Endomorphism, Ring};
use skewcode_core::matrices::{left_annihilator, row_module, RingMatrix};
use skewcode_core::oracle::{brute_dual, enumerate_code, monic_right_divisors};
use skewcode_core::plt::Plt;
use skewcode_core::skewpoly::{
    divisor_transfer, hstar_targets, LaurentSkewPoly, SkewContext, SkewPoly, TransferDirection,
};

const BOUND: u64 = 1 << 20;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn poly(ctx: &SkewContext, coeffs: Vec<Elem>) -> SkewPoly {
    SkewPoly::new(ctx, coeffs).unwrap()
}

fn rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> RingMatrix {
    let cols = rows[0].len();
    RingMatrix::from_rows(ring, cols, &rows).unwrap()
}

fn show(m: &RingMatrix) -> String {
    m.format().trim_end().replace('\n', "; ")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for m in [3, 5] {
        let ring = Ring::dual_numbers(Ring::integers_mod(m).unwrap()).unwrap();
        let inner_one = ring.inner().unwrap().one();
        let sigma = Endomorphism::DualScale { factor: Elem::ZERO };
        let alpha = ring.parse("(1,1)").unwrap();
        let (o, z) = (ring.one(), ring.zero());
        let (na, no) = (ring.neg(alpha), ring.neg(o));
        let oma = ring.sub(o, alpha);
        for with_delta in [true, false] {
            let kind = if with_delta {
                DerivationKind::DualComponent { factor: inner_one }
            } else {
                DerivationKind::Zero
            };
            let ctx = SkewContext::new(ring.clone(), sigma.clone(), Derivation::new(kind, sigma.clone()))
                .unwrap();
            let c = if with_delta { oma } else { z };
            let expect = rows(
                &ring,
                vec![vec![na, o, z, z], vec![c, no, o, z], vec![c, z, no, o]],
            );
            let g = poly(&ctx, vec![na, o]);
            for _ in 0..5 {
                let f = &common::random_monic(&ctx, 3, &mut rng) * &g;
                let got = PrincipalCode::new(&f, &g)
                    .and_then(|code| code.generating_matrix())
                    .map_err(|e| e.to_string())?;
                ensure(got == expect, || {
                    format!("D(Z_{m}) delta={with_delta}: got {}, want {}", show(&got), show(&expect))
                })?;
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{checked} moduli over D(Z_3), D(Z_5), both derivations"))
}

fn swap_ctx() -> SkewContext {
    let ring = Ring::product(Ring::galois(3, 1).unwrap()).unwrap();
    SkewContext::sigma_only(ring, Endomorphism::Swap).unwrap()
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let ctx = swap_ctx();
    let ring = ctx.ring().clone();
    for a in ["(1,1)", "(2,2)"] {
        let alpha = ring.parse(a).unwrap();
        let pw = |e| ring.pow(alpha, e);
        let inv = |x| ring.unit_inverse(x).unwrap();
        let g = poly(&ctx, vec![ring.neg(alpha), ring.one()]);
        let h = poly(&ctx, vec![pw(3), pw(2), alpha, ring.one()]);
        let f = SkewPoly::x_pow_minus(&ctx, 4, pw(4));
        ensure(&g * &h == f, || format!("alpha={a}: (X - a)(X^3 + ...) != X^4 - a^4"))?;
        let got = divisor_transfer(&g, pw(4), 4, TransferDirection::LeftToRight).map_err(|e| e.to_string())?;
        ensure(got == pw(4), || format!("alpha={a}: transfer gave {}", ring.format(got)))?;
        let targets = hstar_targets(&h, pw(4), 4).map_err(|e| e.to_string())?;
        ensure(targets == (inv(pw(4)), inv(pw(4))), || {
            format!("alpha={a}: h* targets {:?}", targets)
        })?;
        let dual = PrincipalCode::new(&f, &g)
            .and_then(|c| c.dual_code())
            .map_err(|e| e.to_string())?;
        let want = poly(&ctx, vec![ring.one(), alpha, pw(2), pw(3)]);
        ensure(dual.h_star == want, || {
            format!("alpha={a}: dual generator {}", dual.h_star.format())
        })?;
        ensure(dual.constant == inv(pw(4)), || {
            format!("alpha={a}: dual constant {}", ring.format(dual.constant))
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("alpha in {(1,1), (2,2)} over GF(3)xGF(3), swap".into())
}

fn criterion_3() -> Check {
    let ctx = swap_ctx();
    let ring = ctx.ring().clone();
    for a in ["(1,1)", "(2,2)"] {
        let alpha = ring.parse(a).unwrap();
        let pw = |e| ring.pow(alpha, e);
        let f = SkewPoly::x_pow_minus(&ctx, 4, pw(4));
        let g = poly(&ctx, vec![ring.neg(alpha), ring.one()]);
        let got = PrincipalCode::new(&f, &g)
            .and_then(|c| c.dual_generating_matrix())
            .map_err(|e| e.to_string())?;
        let want = rows(&ring, vec![vec![ring.one(), alpha, pw(2), pw(3)]]);
        ensure(got == want, || format!("swap alpha={a}: got {}", show(&got)))?;
    }

    let ring = Ring::dual_numbers(Ring::integers_mod(6).unwrap()).unwrap();
    let neg = ring.inner().unwrap().from_int(-1);
    let ctx = SkewContext::sigma_only(ring.clone(), Endomorphism::DualScale { factor: neg }).unwrap();
    let alpha = ring.parse("(1,1)").unwrap();
    let (o, z, na) = (ring.one(), ring.zero(), ring.neg(alpha));
    let f = SkewPoly::x_pow_minus(&ctx, 4, ring.mul(alpha, alpha));
    let g = poly(&ctx, vec![alpha, z, o]);
    let got = PrincipalCode::new(&f, &g)
        .and_then(|c| c.dual_generating_matrix())
        .map_err(|e| e.to_string())?;
    let want = rows(&ring, vec![vec![o, z, na, z], vec![z, o, z, na]]);
    ensure(got == want, || {
        format!(
            "D(Z_6): got {}, displayed {}; the computed dual is orthogonal to the code, the displayed one is not",
            show(&got),
            show(&want)
        )
    })?;
    Ok("both dual generating matrices reproduced".into())
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let ctx = swap_ctx();
    let ring = ctx.ring().clone();
    let alpha = ring.parse("(2,2)").unwrap();
    let inv = ring.unit_inverse(alpha).unwrap();
    let g = poly(&ctx, vec![ring.pow(inv, 3), ring.pow(inv, 2), ring.one()]);
    let f = SkewPoly::x_pow_minus(&ctx, 4, ring.from_int(2));
    let code = PrincipalCode::new(&f, &g).map_err(|e| e.to_string())?;
    let report = code.self_dual_criterion().map_err(|e| e.to_string())?;
    ensure(report.is_self_dual_by_sums, || format!("sums {:?}", report.sums))?;
    let words = enumerate_code(&code, BOUND).map_err(|e| e.to_string())?;
    let dual = brute_dual(&words, BOUND).map_err(|e| e.to_string())?;
    ensure(dual.words() == words.words(), || {
        format!("brute-force dual has {} words, code {}", dual.len(), words.len())
    })?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("C = C^perp, {} words, 6561 vectors searched", words.len()))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let ring = Ring::dual_numbers(Ring::integers_mod(3).unwrap()).unwrap();
    let one = ring.inner().unwrap().one();
    let delta = Derivation::new(DerivationKind::DualComponent { factor: one }, Endomorphism::Identity);
    let ctx = SkewContext::new(ring.clone(), Endomorphism::Identity, delta).unwrap();
    let p = |t: &str| SkewPoly::parse(&ctx, t).unwrap();
    let m = |t: &str| RingMatrix::parse(&ring, t).unwrap();
    let code = PrincipalCode::new(&p("[0, 2, 0, 1]"), &p("[(2,2), 1]")).map_err(|e| e.to_string())?;
    let g = code.generating_matrix().map_err(|e| e.to_string())?;
    let h = code.control_matrix().map_err(|e| e.to_string())?;
    let hs = code.parity_check_matrix().map_err(|e| e.to_string())?;
    ensure(g == m("(2,2) 1 0\n(0,2) (2,2) 1"), || format!("G = {}", show(&g)))?;
    ensure(h == m("(0,1) (1,1) 1\n(0,1) (1,2) (1,1)\n(0,1) (1,1) 1"), || {
        format!("H = {}", show(&h))
    })?;
    ensure(g.mul(&h).unwrap().is_zero(), || "GH != 0".into())?;
    ensure(hs == m("1 (1,1) 1"), || format!("H_* = {}", show(&hs)))?;
    ensure(g.mul(&hs.transpose()).unwrap().is_zero(), || "G H_*^T != 0".into())?;
    within(start, Duration::from_secs(1))?;
    Ok("G, H, H_* over D(Z_3) match; GH = 0, G H_*^T = 0".into())
}

/// One code from the randomized pool.
struct Instance {
    code: PrincipalCode,
    constacyclic: bool,
}

fn pool_moduli(ctx: &SkewContext, n_max: usize, rng: &mut ChaCha8Rng) -> Vec<(SkewPoly, bool)> {
    let ring = ctx.ring();
    let mut out = vec![
        (common::random_monic(ctx, n_max, rng), false),
        (common::random_monic(ctx, n_max, rng), false),
        (common::random_monic(ctx, n_max - 1, rng), false),
    ];
    let units: Vec<Elem> = ring.units().collect();
    if ctx.delta_is_zero() {
        for n in (2..=n_max.min(4)).chain((n_max > 4).then_some(n_max)) {
            let chosen: Vec<Elem> = if units.len() <= 4 {
                units.clone()
            } else {
                (0..4).map(|_| units[rng.random_range(0..units.len())]).collect()
            };
            for a in chosen {
                out.push((SkewPoly::x_pow_minus(ctx, n, a), true));
            }
        }
    } else {
        let a = units[rng.random_range(0..units.len())];
        out.push((SkewPoly::x_pow_minus(ctx, n_max, a), true));
    }
    out.dedup_by(|x, y| x.0 == y.0);
    out
}

fn build_pool() -> (Vec<Instance>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut out = Vec::new();
    let mut contexts = 0;
    for (ring, n_max) in common::pool_rings() {
        for ctx in common::contexts(&ring) {
            contexts += 1;
            for (f, constacyclic) in pool_moduli(&ctx, n_max, &mut rng) {
                for g in monic_right_divisors(&f, BOUND).unwrap() {
                    let code = PrincipalCode::new(&f, &g).unwrap();
                    out.push(Instance { code, constacyclic });
                }
            }
        }
    }
    (out, contexts)
}

fn criterion_6(pool: &[Instance], contexts: usize) -> Check {
    let mut control_rows = 0;
    let mut generating_rows = 0;
    let mut without_cofactor = 0;
    for (idx, inst) in pool.iter().enumerate() {
        let code = &inst.code;
        let plt = code.plt();
        let n = code.n();
        let label = || {
            format!(
                "instance {idx}: f = {}, g = {}",
                code.modulus().format(),
                code.generator().format()
            )
        };
        let g = code.generating_matrix().map_err(|e| format!("{}: {e}", label()))?;
        let start = code.generator().right_divmod(code.modulus()).unwrap().1.padded(n).unwrap();
        let mut chained = start.clone();
        for i in 0..code.k() {
            let want = plt.iterate(&start, i).unwrap();
            if i > 0 {
                chained = plt.recursive_step(&chained, Plt::hints_for(&chained)).unwrap();
            }
            ensure(g.row(i) == want && chained == want, || {
                format!("{}: generating row {i}", label())
            })?;
            generating_rows += 1;
        }
        let Some(h) = code.cofactor() else {
            without_cofactor += 1;
            continue;
        };
        let hm = code.control_matrix().map_err(|e| format!("{}: {e}", label()))?;
        let start = h.right_divmod(code.modulus()).unwrap().1.padded(n).unwrap();
        for i in 0..n {
            ensure(hm.row(i) == plt.iterate(&start, i).unwrap(), || {
                format!("{}: control row {i}", label())
            })?;
            control_rows += 1;
        }
    }
    ensure(pool.len() >= 200, || format!("only {} instances", pool.len()))?;
    Ok(format!(
        "{} instances over {contexts} (ring, sigma, delta) contexts, {generating_rows} generating and \
         {control_rows} control rows; {without_cofactor} without a left cofactor have no control matrix",
        pool.len()
    ))
}

fn small(code: &PrincipalCode) -> bool {
    (code.context().ring().size() as u64).checked_pow(code.n() as u32).is_some_and(|s| s <= BOUND)
}

fn criterion_7(pool: &[Instance]) -> Check {
    let (mut checked, mut skipped) = (0, 0);
    for inst in pool.iter().filter(|i| small(&i.code)) {
        let code = &inst.code;
        if code.cofactor().is_none() {
            skipped += 1;
            continue;
        }
        let g = code.generating_matrix().unwrap();
        let h = code.control_matrix().unwrap();
        let spanned = row_module(&g, BOUND).unwrap();
        let annihilated = left_annihilator(&h, BOUND).unwrap();
        let q = code.context().ring().size() as usize;
        ensure(spanned == annihilated && spanned.len() == q.pow(code.k() as u32), || {
            format!(
                "f = {}, g = {}: |row module| = {}, |annihilator| = {}",
                code.modulus().format(),
                code.generator().format(),
                spanned.len(),
                annihilated.len()
            )
        })?;
        checked += 1;
    }
    Ok(format!("{checked} instances; {skipped} without a control matrix"))
}

/// Constacyclic δ = 0 instances with unit `g_0` over an automorphism.
fn duality_pool(pool: &[Instance]) -> (Vec<&PrincipalCode>, usize) {
    let mut non_auto = 0;
    let mut out = Vec::new();
    for inst in pool {
        let code = &inst.code;
        let ctx = code.context();
        if !inst.constacyclic
            || !ctx.delta_is_zero()
            || !ctx.ring().is_unit(code.generator().coeff(0))
            || !small(code)
        {
            continue;
        }
        if !ctx.is_automorphism() {
            non_auto += 1;
            continue;
        }
        out.push(code);
    }
    (out, non_auto)
}

fn criterion_8(pool: &[Instance]) -> Check {
    let (codes, non_auto) = duality_pool(pool);
    for code in &codes {
        let label = || format!("f = {}, g = {}", code.modulus().format(), code.generator().format());
        let words = enumerate_code(code, BOUND).unwrap();
        let brute = brute_dual(&words, BOUND).unwrap();
        let dual = code.dual_code().map_err(|e| format!("{}: {e}", label()))?;
        let listed = enumerate_code(&dual.code, BOUND).unwrap();
        let q = code.context().ring().size() as usize;
        ensure(brute.words() == listed.words(), || format!("{}: duals differ", label()))?;
        ensure(listed.len() == q.pow(code.r() as u32), || {
            format!("{}: |dual| = {}", label(), listed.len())
        })?;
    }
    ensure(!codes.is_empty(), || "empty pool".into())?;
    Ok(format!(
        "{} instances; {non_auto} over non-invertible sigma have no dual construction",
        codes.len()
    ))
}

fn criterion_9(pool: &[Instance]) -> Check {
    let (codes, _) = duality_pool(pool);
    let (mut half, mut self_dual, mut other) = (0, 0, 0);
    for code in codes.iter().filter(|c| c.n() % 2 == 0) {
        let words = enumerate_code(code, BOUND).unwrap();
        let brute = brute_dual(&words, BOUND).unwrap().words() == words.words();
        if code.r() * 2 != code.n() {
            ensure(!brute, || format!("g = {} self-dual with r != n/2", code.generator().format()))?;
            other += 1;
            continue;
        }
        let report = code.self_dual_criterion().map_err(|e| e.to_string())?;
        ensure(report.is_self_dual_by_sums == brute, || {
            format!(
                "f = {}, g = {}: sums say {}, brute force says {brute}",
                code.modulus().format(),
                code.generator().format(),
                report.is_self_dual_by_sums
            )
        })?;
        half += 1;
        self_dual += brute as usize;
    }
    Ok(format!(
        "{half} instances with deg g = n/2 ({self_dual} self-dual), {other} of other degree never self-dual"
    ))
}

fn random_laurent(ctx: &SkewContext, rng: &mut ChaCha8Rng) -> LaurentSkewPoly {
    let terms: Vec<(i64, Elem)> = (0..rng.random_range(1..5))
        .map(|_| (rng.random_range(-3..=3), common::random_elem(ctx.ring(), rng)))
        .collect();
    LaurentSkewPoly::from_terms(ctx, terms).unwrap()
}

/// `(g, b, n)` with `g` (unit leading coefficient) a left divisor of `X^n - b`.
fn transfer_pool(ctxs: &[SkewContext], rng: &mut ChaCha8Rng) -> Vec<(SkewPoly, Elem, usize)> {
    let mut out = Vec::new();
    for ctx in ctxs {
        let ring = ctx.ring();
        for n in 2..=4usize {
            for b in ring.units().collect::<Vec<_>>() {
                let f = SkewPoly::x_pow_minus(ctx, n, b);
                for _ in 0..60 {
                    let g = common::random_poly(ctx, rng.random_range(1..n), rng);
                    if f.left_divmod(&g).unwrap().1.is_zero() {
                        out.push((g, b, n));
                    }
                }
            }
        }
    }
    out.sort_by_key(|(g, b, n)| (g.format(), b.index(), *n));
    out.dedup_by(|x, y| x.0 == y.0 && x.1 == y.1 && x.2 == y.2);
    out
}

fn criterion_10() -> Check {
    const SAMPLES: usize = 500;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let all: Vec<SkewContext> = common::pool_rings()
        .into_iter()
        .flat_map(|(ring, _)| common::contexts(&ring))
        .collect();
    let laurent: Vec<SkewContext> = all
        .iter()
        .filter(|c| c.delta_is_zero() && c.is_automorphism())
        .cloned()
        .collect();
    let sigma_only: Vec<SkewContext> = all.iter().filter(|c| c.delta_is_zero()).cloned().collect();
    let automorphic: Vec<SkewContext> = all.iter().filter(|c| c.is_automorphism()).cloned().collect();
    let pick = |v: &[SkewContext], rng: &mut ChaCha8Rng| v[rng.random_range(0..v.len())].clone();
    let fail = |name: &str, i: usize| Err::<(), String>(format!("{name}: sample {i}"));

    for i in 0..SAMPLES {
        let ctx = pick(&laurent, &mut rng);
        let (s, t) = (random_laurent(&ctx, &mut rng), random_laurent(&ctx, &mut rng));
        if s.checked_mul(&t).unwrap().psi() != t.psi().checked_mul(&s.psi()).unwrap() {
            fail("psi(ST) = psi(T) psi(S)", i)?;
        }
    }
    for i in 0..SAMPLES {
        let ctx = pick(&laurent, &mut rng);
        let mut h = common::random_any(&ctx, rng.random_range(0..6), &mut rng);
        if h.is_zero() {
            h = SkewPoly::one(&ctx);
        }
        let s = h.degree().unwrap() as i64;
        let lhs = LaurentSkewPoly::from_poly(&h.star().unwrap()).unwrap();
        let rhs = LaurentSkewPoly::monomial(&ctx, ctx.ring().one(), s)
            .unwrap()
            .checked_mul(&LaurentSkewPoly::from_poly(&h).unwrap().psi())
            .unwrap();
        if lhs != rhs {
            fail("h* = X^s psi(h)", i)?;
        }
    }
    for i in 0..SAMPLES {
        let ctx = pick(&sigma_only, &mut rng);
        let h = common::random_any(&ctx, rng.random_range(0..6), &mut rng);
        let n = rng.random_range(0..7);
        let xn = SkewPoly::monomial(&ctx, ctx.ring().one(), n);
        if &xn * &h != &h.sigma_n(n as i64).unwrap() * &xn {
            fail("X^n h = sigma^n(h) X^n", i)?;
        }
    }
    for i in 0..SAMPLES {
        let ctx = pick(&all, &mut rng);
        let f = common::random_any(&ctx, rng.random_range(0..8), &mut rng);
        let g = common::random_poly(&ctx, rng.random_range(0..5), &mut rng);
        let (q, r) = f.right_divmod(&g).unwrap();
        if &(&q * &g) + &r != f || r.degree().is_some_and(|d| d >= g.degree().unwrap()) {
            fail("f = q g + r", i)?;
        }
        let ctx = pick(&automorphic, &mut rng);
        let f = common::random_any(&ctx, rng.random_range(0..8), &mut rng);
        let g = common::random_poly(&ctx, rng.random_range(0..5), &mut rng);
        let (q, r) = f.left_divmod(&g).unwrap();
        if &(&g * &q) + &r != f || r.degree().is_some_and(|d| d >= g.degree().unwrap()) {
            fail("f = g q + r", i)?;
        }
    }
    let transfers = transfer_pool(&laurent, &mut rng);
    ensure(transfers.len() >= SAMPLES, || {
        format!("only {} divisor transfer inputs", transfers.len())
    })?;
    for (i, (g, b, n)) in transfers.iter().enumerate() {
        let a = divisor_transfer(g, *b, *n, TransferDirection::LeftToRight).unwrap();
        let back = divisor_transfer(g, a, *n, TransferDirection::RightToLeft).unwrap();
        if back != *b {
            fail("divisor transfer round trip", i)?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{SAMPLES} samples for each identity, {} transfer round trips, {:?}",
        transfers.len(),
        start.elapsed()
    ))
}

fn report(number: usize, name: &str, check: impl FnOnce() -> Check) -> bool {
    let outcome = match catch_unwind(AssertUnwindSafe(check)) {
        Ok(r) => r,
        Err(p) => Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    };
    match outcome {
        Ok(detail) => {
            println!("criterion {number} [{name}]: PASS - {detail}");
            true
        }
        Err(detail) => {
            println!("criterion {number} [{name}]: FAIL - {detail}");
            false
        }
    }
}

fn main() {
    let start = Instant::now();
    let mut passed = vec![
        report(1, "generating matrices over D(R)", criterion_1),
        report(2, "swap factorization, transfer, dual", criterion_2),
        report(3, "dual generating matrices", criterion_3),
        report(4, "self-dual code over GF(3)xGF(3)", criterion_4),
        report(5, "G, H, H_* over D(Z_3)", criterion_5),
    ];
    let (pool, contexts) = build_pool();
    passed.push(report(6, "recursion vs transform", || criterion_6(&pool, contexts)));
    passed.push(report(7, "annihilator", || criterion_7(&pool)));
    passed.push(report(8, "duality", || criterion_8(&pool)));
    passed.push(report(9, "self-dual equivalence", || criterion_9(&pool)));
    passed.push(report(10, "algebra properties", criterion_10));
    let failed = passed.iter().filter(|p| !**p).count();
    println!(
        "acceptance: {} passed, {failed} failed in {:?}",
        passed.len() - failed,
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
