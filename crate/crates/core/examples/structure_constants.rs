//! Products of basis monomials from the closed-form structure constants,
//! checked against word rewriting.

use qheisenberg::heisenberg::{monomial_product, oracle_product};
use qheisenberg::{Element, Monomial, ScalarContext};

fn main() -> qheisenberg::Result<()> {
    let pairs = [
        (Monomial::c_a(1, 2), Monomial::b_c(1, 1)),
        (Monomial::c_a(2, 1), Monomial::b_c(3, 0)),
        (Monomial::b_c(2, 1), Monomial::c_a(1, 2)),
        (Monomial::C, Monomial::B),
    ];
    for ctx in [ScalarContext::generic(), ScalarContext::torsion(3)?] {
        println!("{ctx}");
        for (x, y) in pairs {
            let prod = Element::from_terms(&ctx, monomial_product(&ctx, x, y));
            let check = oracle_product(&Element::monomial(&ctx, x), &Element::monomial(&ctx, y))?;
            println!(
                "  ({x}) * ({y}) = {prod}    [rewriting agrees: {}]",
                prod == check
            );
        }
    }
    Ok(())
}
