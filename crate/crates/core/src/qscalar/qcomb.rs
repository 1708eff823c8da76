//! q-integers, Gaussian binomial coefficients and the structure scalars
//! `c_i(l)`, `d_i(l)` used by products `A^l B^l` and `B^l A^l`.

use super::scalar::{MemoKey, Scalar, ScalarContext};
use crate::error::{Error, Result};

/// `{n}_q = 1 + q + ... + q^{n-1}`, with `{0}_q = 0`.
pub fn q_int(ctx: &ScalarContext, n: u32) -> Scalar {
    let mut acc = ctx.zero();
    let mut pow = ctx.one();
    let q = ctx.q();
    for _ in 0..n {
        acc = &acc + &pow;
        pow = &pow * &q;
    }
    acc
}

/// Gaussian binomial `(n choose k)_q` by the q-Pascal recursion
/// `(n+1 choose k+1) = (n choose k) + q^{k+1} (n choose k+1)`.
pub fn q_binomial(ctx: &ScalarContext, n: u32, k: u32) -> Scalar {
    if k > n {
        return ctx.zero();
    }
    if k == 0 || k == n {
        return ctx.one();
    }
    if let Some(s) = ctx.memo_get(MemoKey::QBinomial(n, k)) {
        return s;
    }
    // Build rows bottom-up; each finished entry is memoized.
    let q = ctx.q();
    let mut row = vec![ctx.one()];
    for m in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(ctx.one());
        let mut q_pow = q.clone();
        for j in 0..m as usize {
            next.push(&row[j] + &(&q_pow * &row[j + 1]));
            q_pow = &q_pow * &q;
        }
        next.push(ctx.one());
        for (j, v) in next.iter().enumerate() {
            ctx.memo_put(MemoKey::QBinomial(m + 1, j as u32), v);
        }
        row = next;
    }
    row[k as usize].clone()
}

fn choose2(n: u32) -> i64 {
    let n = n as i64;
    n * (n - 1) / 2
}

fn check_range(i: u32, l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "structure scalar needs l >= 1".into(),
        ));
    }
    if i > l {
        return Err(Error::InvalidArgument(format!(
            "structure scalar index i={i} outside 0..={l}"
        )));
    }
    Ok(())
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(q-1)^{-l}`; never singular since `q != 1` in both modes.
pub fn inv_q_minus_one_pow(ctx: &ScalarContext, l: u32) -> Scalar {
    (&ctx.q() - &ctx.one())
        .pow(l)
        .inv()
        .expect("q - 1 is invertible")
}

/// `c_i(l) = (q-1)^{-l} (-1)^{l-i} q^{binom(i+1,2)} (l choose i)_q`, the
/// coefficient of `C^i` in `A^l B^l`.
pub fn struct_c(ctx: &ScalarContext, i: u32, l: u32) -> Result<Scalar> {
    check_range(i, l)?;
    if let Some(s) = ctx.memo_get(MemoKey::StructC(i, l)) {
        return Ok(s);
    }
    let s = &(&inv_q_minus_one_pow(ctx, l) * &ctx.int(sign(l - i)))
        * &(&ctx.q_pow(choose2(i + 1)) * &q_binomial(ctx, l, i));
    ctx.memo_put(MemoKey::StructC(i, l), &s);
    Ok(s)
}

/// `d_i(l) = q^{-binom(l,2)} (q-1)^{-l} (-1)^{l-i} q^{binom(l-i,2)} (l choose i)_q`,
/// the coefficient of `C^i` in `B^l A^l`.
pub fn struct_d(ctx: &ScalarContext, i: u32, l: u32) -> Result<Scalar> {
    check_range(i, l)?;
    if let Some(s) = ctx.memo_get(MemoKey::StructD(i, l)) {
        return Ok(s);
    }
    let s = &(&inv_q_minus_one_pow(ctx, l) * &ctx.int(sign(l - i)))
        * &(&ctx.q_pow(choose2(l - i) - choose2(l)) * &q_binomial(ctx, l, i));
    ctx.memo_put(MemoKey::StructD(i, l), &s);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ctx: &ScalarContext, cs: &[i64]) -> Scalar {
        ctx.from_poly(&crate::qscalar::IntPoly::from_i64s(cs))
    }

    #[test]
    fn q_integers() {
        let g = ScalarContext::generic();
        assert!(q_int(&g, 0).is_zero());
        assert_eq!(q_int(&g, 3), poly(&g, &[1, 1, 1]));
        let t = ScalarContext::torsion(3).unwrap();
        assert!(q_int(&t, 3).is_zero());
        assert!(!q_int(&t, 4).is_zero());
    }

    #[test]
    fn small_q_binomials() {
        let g = ScalarContext::generic();
        for n in 0..6 {
            assert!(q_binomial(&g, n, 0).is_one());
            assert!(q_binomial(&g, n, n + 1).is_zero());
        }
        assert_eq!(q_binomial(&g, 5, 1), q_int(&g, 5));
        // (4 choose 2)_q = (1 + q^2)(1 + q + q^2) = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(q_binomial(&g, 4, 2), poly(&g, &[1, 1, 2, 1, 1]));
        let t = ScalarContext::torsion(3).unwrap();
        assert!(q_binomial(&t, 3, 1).is_zero());
    }

    #[test]
    fn structure_scalars_at_l_one() {
        let g = ScalarContext::generic();
        let inv = inv_q_minus_one_pow(&g, 1);
        assert_eq!(struct_c(&g, 1, 1).unwrap(), &g.q() * &inv);
        assert_eq!(struct_d(&g, 1, 1).unwrap(), inv);
        // c_0(l) = d_0(l) = (1 - q)^{-l}
        for l in 1..6 {
            let expect = (&g.one() - &g.q()).pow(l).inv().unwrap();
            assert_eq!(struct_c(&g, 0, l).unwrap(), expect);
            assert_eq!(struct_d(&g, 0, l).unwrap(), expect);
        }
    }

    #[test]
    fn structure_scalar_ranges() {
        let g = ScalarContext::generic();
        assert!(struct_c(&g, 0, 0).is_err());
        assert!(struct_d(&g, 3, 2).is_err());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testutil::torsion_context;

    fn binomial(n: u32, k: u32) -> i64 {
        if k > n {
            return 0;
        }
        (0..k as i64).fold(1, |acc, i| acc * (n as i64 - i) / (i + 1))
    }

    proptest! {
        #[test]
        fn symmetry(n in 0u32..=12, k in 0u32..=12, p in prop::option::of(2usize..=7)) {
            prop_assume!(k <= n);
            let ctx = p.map_or_else(ScalarContext::generic, |p| ScalarContext::torsion(p).unwrap());
            prop_assert_eq!(q_binomial(&ctx, n, k), q_binomial(&ctx, n, n - k));
        }

        #[test]
        fn q_int_vanishes_iff_divisible(ctx in torsion_context(9), n in 0u32..40) {
            let p = ctx.order().unwrap() as u32;
            prop_assert_eq!(q_int(&ctx, n).is_zero(), n % p == 0);
        }

        #[test]
        fn q_lucas(ctx in torsion_context(7), l in 0u32..=21, i in 0u32..=21) {
            prop_assume!(i <= l);
            let p = ctx.order().unwrap() as u32;
            let small = q_binomial(&ctx, l % p, i % p);
            let big = ctx.int(binomial(l / p, i / p));
            prop_assert_eq!(q_binomial(&ctx, l, i), &small * &big);
        }

        #[test]
        fn pascal(n in 1u32..=14, k in 1u32..=14) {
            prop_assume!(k <= n);
            let g = ScalarContext::generic();
            let rhs = &q_binomial(&g, n - 1, k - 1) + &(&g.q().pow(k) * &q_binomial(&g, n - 1, k));
            prop_assert_eq!(q_binomial(&g, n, k), rhs);
        }
    }
}
