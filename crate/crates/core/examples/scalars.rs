//! Exact coefficients: q-integers and q-binomials over Q(q) and over the
//! cyclotomic field of a primitive p-th root of unity.

use qheisenberg::qscalar::{q_binomial, q_int, ScalarContext};

fn main() -> qheisenberg::Result<()> {
    let g = ScalarContext::generic();
    println!("{{5}}_q = {}", q_int(&g, 5));
    println!("[6 choose 3]_q = {}", q_binomial(&g, 6, 3));
    let x = (&g.one() - &g.q()).pow(2).inv()?;
    println!("1/(1-q)^2 = {x}");

    for p in [3, 5] {
        let t = ScalarContext::torsion(p)?;
        let zeros: Vec<u32> = (1..=3 * p as u32)
            .filter(|&n| q_int(&t, n).is_zero())
            .collect();
        println!("p = {p}: {{n}}_q vanishes for n in {zeros:?}");
        let row: Vec<String> = (0..=p as u32 + 1)
            .map(|i| q_binomial(&t, p as u32 + 1, i).to_string())
            .collect();
        println!("  [{} choose i]_q = {}", p + 1, row.join(", "));
        println!("  1/(1-q) = {}", x.specialize(&t)?);
    }
    Ok(())
}
