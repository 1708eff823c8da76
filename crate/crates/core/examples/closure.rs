//! The span of all brackets of `A`, `B` up to a given number of leaves.

use qheisenberg::liepoly::{lie_closure_layers, Window};
use qheisenberg::ScalarContext;

fn main() -> qheisenberg::Result<()> {
    let t = ScalarContext::torsion(2)?;
    let closure = lie_closure_layers(&t, 7, Window::new(4, 4))?;
    for (n, layer) in closure.layers.iter().enumerate() {
        println!("{} leaves: {} independent brackets", n + 1, layer.len());
    }
    print!("{}", closure.basis);
    Ok(())
}
