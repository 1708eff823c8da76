//! Root-of-unity behaviour: central powers, the factorization of
//! `A^l B^l`, and the fast multiplication path.

use qheisenberg::torsion::{ab_power_product, is_central, multiply_fastpath, reduce_exponent};
use qheisenberg::{Element, Monomial, ScalarContext};

fn main() -> qheisenberg::Result<()> {
    let t = ScalarContext::torsion(3)?;
    for m in [
        Monomial::c_a(0, 3),
        Monomial::b_c(3, 0),
        Monomial::c_pow(3),
        Monomial::c_pow(2),
    ] {
        println!("{m} central: {}", is_central(&Element::monomial(&t, m))?);
    }
    println!("q^10 = q^{}", reduce_exponent(&t, 10)?.value);
    for l in [3, 4, 6] {
        println!("A^{l} B^{l} = {}", ab_power_product(&t, l)?);
    }
    let x = Element::monomial(&t, Monomial::c_a(1, 7));
    let y = Element::monomial(&t, Monomial::b_c(4, 2));
    let fast = multiply_fastpath(&x, &y)?;
    println!("({x}) * ({y}) = {fast}");
    println!("matches general product: {}", fast == x.multiply(&y)?);
    Ok(())
}
