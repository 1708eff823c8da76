//! Exhaustive grid checks with JSON reports.

use qheisenberg::liepoly::{
    verify_fastpath, verify_gradation, verify_no_n_leakage, verify_reduce_ab, Window,
};
use qheisenberg::ScalarContext;

fn main() -> qheisenberg::Result<()> {
    let t = ScalarContext::torsion(3)?;
    let w = Window::new(6, 6);
    for r in [
        verify_no_n_leakage(&t, w)?,
        verify_gradation(&t, w)?,
        verify_fastpath(&t, w)?,
        verify_reduce_ab(&t, 6)?,
    ] {
        println!("{}", r.summary());
        if let Some(v) = r.violations.first() {
            println!("  e.g. {v}");
        }
    }
    Ok(())
}
