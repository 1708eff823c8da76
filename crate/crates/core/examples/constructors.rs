//! Bracket witnesses for the basis monomials of a small window.

use qheisenberg::liepoly::{construct_basis_element, Window};
use qheisenberg::ScalarContext;

fn main() -> qheisenberg::Result<()> {
    let p = 3;
    let t = ScalarContext::torsion(p)?;
    for m in Window::new(4, 3).monomials() {
        match construct_basis_element(&t, m) {
            Ok(c) => println!(
                "{m:>10}  {:<12} {:>3} leaves  {}",
                c.recipe.to_string(),
                c.expr.leaves(),
                c.expr
            ),
            Err(e) => println!("{m:>10}  -- {e}"),
        }
    }
    Ok(())
}
