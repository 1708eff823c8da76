//! Word reduction to ordered `B^a A^b` form and conversion to the
//! `C`-basis, with several rewriting orders.

use qheisenberg::heisenberg::{
    reduce_word, reduce_word_with, to_element, FreePoly, FreeWord, RewriteStrategy,
};
use qheisenberg::ScalarContext;

fn main() -> qheisenberg::Result<()> {
    let g = ScalarContext::generic();
    for text in ["AB", "BA", "ABA", "AABB", "BBA", "ABAB"] {
        let w = FreePoly::word(&g, FreeWord::parse(text)?);
        let ordered = reduce_word(&w);
        let mut parts: Vec<String> = ordered
            .terms()
            .map(|((a, b), c)| format!("({c})*B^{a}A^{b}"))
            .collect();
        parts.sort();
        println!("{text:>5} = {}", parts.join(" + "));
        println!("{:>5} = {}", "", to_element(&w));
    }

    // Any rewriting order gives the same normal form.
    let t = ScalarContext::torsion(3)?;
    let w = FreePoly::word(&t, FreeWord::parse("BAABABBA")?);
    let base = reduce_word(&w);
    for s in [
        RewriteStrategy::Leftmost,
        RewriteStrategy::Rightmost,
        RewriteStrategy::Random(42),
    ] {
        println!("{s:?} agrees: {}", reduce_word_with(&w, s) == base);
    }
    Ok(())
}
