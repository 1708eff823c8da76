//! Lie-polynomial membership by monomial classification.

use qheisenberg::liepoly::{classify_with, is_lie_polynomial_with, project_n, ClassificationRule};
use qheisenberg::{cli, Monomial, ScalarContext};

fn main() -> qheisenberg::Result<()> {
    let t = ScalarContext::torsion(2)?;
    for m in ["C*A", "C^2*A^2", "A^2", "C^2", "C^3", "B^3*C"] {
        let mono = Monomial::parse(m).expect("basis monomial");
        let row: Vec<String> = [
            ClassificationRule::Table3,
            ClassificationRule::Definition2Literal,
            ClassificationRule::Verified,
        ]
        .iter()
        .map(|r| {
            let c = classify_with(&t, mono, *r).expect("torsion");
            format!("{r:?}={}", if c.is_lie() { "lie" } else { "no" })
        })
        .collect();
        println!("{m:>8}: {}", row.join("  "));
    }

    let x = cli::normalize("[A, [A, B]] + 3*C^2*A^2 - B^2", &t)?;
    let (ok, residual) = is_lie_polynomial_with(&x, ClassificationRule::Table3)?;
    println!(
        "x = {x}\n  lie: {ok}, residual: {residual}, N-part: {}",
        project_n(&x)?
    );
    Ok(())
}
