//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact equality of canonical forms (tolerance 0); time targets are
//! printed next to the measured time and enforced.

use std::process::ExitCode;
use std::time::Instant;

use qheisenberg::heisenberg::Monomial;
use qheisenberg::liepoly::{
    self, classify_with, construct_basis_element, ClassificationRule, Report, Window,
};
use qheisenberg::qscalar::{q_binomial, q_int};
use qheisenberg::{Element, ScalarContext};
use serde_json::json;

const SEED: u64 = 20_240_611;

struct Run {
    lines: usize,
    failed: usize,
}

impl Run {
    fn line(&mut self, ok: bool, id: &str, text: &str) {
        self.lines += 1;
        if !ok {
            self.failed += 1;
        }
        println!("{} {id:<4} {text}", if ok { "PASS" } else { "FAIL" });
    }

    fn report(&mut self, id: &str, label: &str, r: &Report) {
        let text = format!(
            "{label} [{}]: {} checked, {} violations, exact, {:.2}s",
            r.parameters,
            r.pairs_checked,
            r.violations.len(),
            r.elapsed
        );
        self.line(r.passed() && r.pairs_checked > 0, id, &text);
        if let Some(v) = r.violations.first() {
            println!("          first violation: {v}");
        }
    }
}

fn torsion(p: usize) -> ScalarContext {
    ScalarContext::torsion(p).expect("p >= 2")
}

fn grid(p: usize) -> Window {
    let b = 2 * p as u32 + 2;
    Window::new(b, b)
}

fn criterion_1(run: &mut Run) {
    let t = Instant::now();
    let mut ctxs = vec![ScalarContext::generic()];
    ctxs.extend([2, 3, 4, 5, 6].map(torsion));
    for ctx in &ctxs {
        let r = liepoly::verify_oracle_equivalence(ctx, 200, SEED, 6, 4).expect("oracle run");
        run.report(
            "1",
            &format!("structure constants vs word rewriting, {ctx}"),
            &r,
        );
    }
    let s = t.elapsed().as_secs_f64();
    run.line(
        s < 60.0,
        "1",
        &format!("oracle equivalence total time {s:.2}s (target < 60 s)"),
    );
}

fn criterion_2(run: &mut Run) {
    let t = Instant::now();
    for p in [2, 3, 5] {
        let r = liepoly::verify_no_n_leakage(&torsion(p), grid(p)).expect("grid run");
        run.report(
            "2",
            &format!("no commutator of basis monomials meets N, p={p}"),
            &r,
        );
    }
    let s = t.elapsed().as_secs_f64();
    run.line(
        s < 300.0,
        "2",
        &format!("N-leakage total time {s:.2}s (target < 300 s)"),
    );
}

fn criterion_3(run: &mut Run) {
    for p in [2, 3, 5] {
        let b = 2 * p as u32;
        let ctx = torsion(p);
        let r = liepoly::verify_mixed_support(&ctx, b, b).expect("grid run");
        run.report(
            "3",
            &format!("mixed commutators have C-exponents >= 2, p={p}"),
            &r,
        );
        let r = liepoly::verify_mixed_coefficients(&ctx, b, b).expect("grid run");
        run.report(
            "3b",
            &format!("displayed mixed-commutator coefficients, p={p}"),
            &r,
        );
    }
}

fn criterion_4(run: &mut Run) {
    for p in [2, 3, 5] {
        let reports = liepoly::verify_constructor_identities(&torsion(p), 2 * p as u32 + 1)
            .expect("identity run");
        for r in &reports {
            run.report("4", &format!("{}, p={p}", r.claim), r);
        }
    }
}

fn criterion_5(run: &mut Run) {
    let t = Instant::now();
    for p in [2, 3] {
        let ctx = torsion(p);
        // Six leaves never exceed C^3 or |d| = 6, so nothing is truncated.
        let r = liepoly::verify_closure_soundness(
            &ctx,
            6,
            Window::new(6, 6),
            ClassificationRule::Table3,
        )
        .expect("closure run");
        run.report(
            "5a",
            &format!("closure to depth 6 has no non-Lie residual, p={p}"),
            &r,
        );
        let r = liepoly::verify_reachability(&ctx, Window::new(4, 4), ClassificationRule::Table3)
            .expect("reachability run");
        run.report(
            "5b",
            &format!("every Lie-classified monomial with k,|d| <= 4 is constructed, p={p}"),
            &r,
        );

        let m = Monomial::c_pow(p as u32 + 1);
        let built = construct_basis_element(&ctx, m).map(|c| c.value == Element::monomial(&ctx, m));
        let literal = classify_with(&ctx, m, ClassificationRule::Definition2Literal)
            .expect("torsion")
            .is_lie();
        run.line(
            built == Ok(true) && !literal,
            "5c",
            &format!(
                "C^{} is built exactly, and the literal spanning set omits it, p={p}",
                p + 1
            ),
        );

        let r = liepoly::verify_no_central_c_power(&ctx, grid(p)).expect("grid run");
        run.report(
            "5d",
            &format!("no commutator of basis monomials has a C^(np) term, p={p}"),
            &r,
        );
    }
    let two = torsion(2);
    let ca = Element::monomial(&two, Monomial::c_a(1, 1));
    let bc = Element::monomial(&two, Monomial::b_c(1, 1));
    let k = ca.commutator(&bc).expect("same context");
    run.line(
        k == Element::monomial(&two, Monomial::c_pow(3)),
        "5c",
        &format!("[CA, BC] = C^3 at p=2 (got {k})"),
    );
    let s = t.elapsed().as_secs_f64();
    run.line(
        s < 300.0,
        "5",
        &format!("closure checks total time {s:.2}s (target < 300 s)"),
    );
}

fn criterion_6(run: &mut Run) {
    for p in [2, 3, 4, 5] {
        let r = liepoly::verify_reduce_ab(&torsion(p), 2 * p as u32).expect("power products");
        run.report(
            "6a",
            &format!("printed A^lB^l = B^lA^l identity, p <= l <= 2p, p={p}"),
            &r,
        );
    }
    for p in [2, 3, 5] {
        let r = liepoly::verify_fastpath(&torsion(p), grid(p)).expect("grid run");
        run.report(
            "6b",
            &format!("fast-path product equals general product, p={p}"),
            &r,
        );
    }
}

fn scalar_claim<F>(run: &mut Run, id: &str, label: &str, mut check: F)
where
    F: FnMut(usize, &mut Vec<serde_json::Value>) -> u64,
{
    let t = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in 2..=7 {
        checked += check(p, &mut bad);
    }
    let r = Report {
        claim: label.to_string(),
        parameters: json!({"p": "2..7"}),
        pairs_checked: checked,
        violations: bad,
        elapsed: t.elapsed().as_secs_f64(),
    };
    run.report(id, label, &r);
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_7(run: &mut Run) {
    scalar_claim(run, "7a", "{n}_q = 0 iff p | n, n <= 3p", |p, bad| {
        let ctx = torsion(p);
        let top = 3 * p as u32;
        for n in 0..=top {
            if q_int(&ctx, n).is_zero() != (n as usize).is_multiple_of(p) {
                bad.push(json!({"p": p, "n": n}));
            }
        }
        top as u64 + 1
    });
    scalar_claim(run, "7b", "q-binomials with l < p are nonzero", |p, bad| {
        let ctx = torsion(p);
        let mut n = 0;
        for l in 0..p as u32 {
            for i in 0..=l {
                n += 1;
                if q_binomial(&ctx, l, i).is_zero() {
                    bad.push(json!({"p": p, "l": l, "i": i}));
                }
            }
        }
        n
    });
    scalar_claim(
        run,
        "7c",
        "printed collapse: l >= p gives 1 at i in {0,l}, else 0, l <= 3p",
        |p, bad| {
            let ctx = torsion(p);
            let mut n = 0;
            for l in p as u32..=3 * p as u32 {
                for i in 0..=l {
                    n += 1;
                    let want = if i == 0 || i == l {
                        ctx.one()
                    } else {
                        ctx.zero()
                    };
                    let got = q_binomial(&ctx, l, i);
                    if got != want {
                        bad.push(json!({"p": p, "l": l, "i": i, "value": got.to_string()}));
                    }
                }
            }
            n
        },
    );
    scalar_claim(
        run,
        "7d",
        "q-Lucas: [l,i] = [l mod p, i mod p] * C(l div p, i div p), l <= 3p",
        |p, bad| {
            let ctx = torsion(p);
            let pu = p as u32;
            let mut n = 0;
            for l in 0..=3 * pu {
                for i in 0..=l {
                    n += 1;
                    let small = q_binomial(&ctx, l % pu, i % pu);
                    let big = ctx.int(binomial((l / pu) as u64, (i / pu) as u64) as i64);
                    if q_binomial(&ctx, l, i) != &small * &big {
                        bad.push(json!({"p": p, "l": l, "i": i}));
                    }
                }
            }
            n
        },
    );
    let t = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut ctxs = vec![ScalarContext::generic()];
    ctxs.extend((2..=7).map(torsion));
    for ctx in &ctxs {
        for n in 0..=12 {
            for k in 0..=n {
                checked += 1;
                if q_binomial(ctx, n, k) != q_binomial(ctx, n, n - k) {
                    bad.push(json!({"mode": ctx.to_string(), "n": n, "k": k}));
                }
            }
        }
    }
    let r = Report {
        claim: "symmetry".into(),
        parameters: json!({"n": "0..=12", "modes": "generic, p=2..7"}),
        pairs_checked: checked,
        violations: bad,
        elapsed: t.elapsed().as_secs_f64(),
    };
    run.report("7e", "q-binomial symmetry [n,k] = [n,n-k]", &r);
}

fn criterion_8(run: &mut Run) {
    for p in [2, 3, 5] {
        let r = liepoly::verify_gradation(&torsion(p), grid(p)).expect("grid run");
        run.report(
            "8",
            &format!("products land in the summed grade, p={p}"),
            &r,
        );
    }
}

fn main() -> ExitCode {
    let mut run = Run {
        lines: 0,
        failed: 0,
    };
    let t = Instant::now();
    criterion_1(&mut run);
    criterion_2(&mut run);
    criterion_3(&mut run);
    criterion_4(&mut run);
    criterion_5(&mut run);
    criterion_6(&mut run);
    criterion_7(&mut run);
    criterion_8(&mut run);
    println!(
        "acceptance: {} of {} lines passed in {:.1}s",
        run.lines - run.failed,
        run.lines,
        t.elapsed().as_secs_f64()
    );
    if run.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
