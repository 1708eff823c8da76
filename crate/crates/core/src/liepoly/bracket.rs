use std::fmt;

use crate::error::Result;
use crate::heisenberg::Element;
use crate::qscalar::{Scalar, ScalarContext};

/// A Lie word in `A`, `B`: leaves, brackets, and scalar combinations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketExpr {
    A,
    B,
    Bracket(Box<BracketExpr>, Box<BracketExpr>),
    Sum(Vec<(Scalar, BracketExpr)>),
}

impl BracketExpr {
    pub fn bracket(x: BracketExpr, y: BracketExpr) -> Self {
        BracketExpr::Bracket(Box::new(x), Box::new(y))
    }

    /// `[A, B]`.
    pub fn c() -> Self {
        Self::bracket(BracketExpr::A, BracketExpr::B)
    }

    pub fn scaled(self, s: Scalar) -> Self {
        BracketExpr::Sum(vec![(s, self)])
    }

    /// `(ad f)^n (g)`.
    pub fn ad_pow(f: &BracketExpr, n: u32, g: BracketExpr) -> Self {
        (0..n).fold(g, |acc, _| Self::bracket(f.clone(), acc))
    }

    /// `(-ad f)^n (g)`, written as `[[g, f], f]...` so no scalars appear.
    pub fn neg_ad_pow(f: &BracketExpr, n: u32, g: BracketExpr) -> Self {
        (0..n).fold(g, |acc, _| Self::bracket(acc, f.clone()))
    }

    pub fn eval(&self, ctx: &ScalarContext) -> Result<Element> {
        match self {
            BracketExpr::A => Ok(Element::a(ctx)),
            BracketExpr::B => Ok(Element::b(ctx)),
            BracketExpr::Bracket(x, y) => x.eval(ctx)?.commutator(&y.eval(ctx)?),
            BracketExpr::Sum(parts) => {
                let mut acc = Element::zero(ctx);
                for (s, e) in parts {
                    ctx.check_same(s.context())?;
                    acc = acc.checked_add(&e.eval(ctx)?.scale(s))?;
                }
                Ok(acc)
            }
        }
    }

    /// Number of `A`/`B` leaves.
    pub fn leaves(&self) -> usize {
        match self {
            BracketExpr::A | BracketExpr::B => 1,
            BracketExpr::Bracket(x, y) => x.leaves() + y.leaves(),
            BracketExpr::Sum(parts) => parts.iter().map(|(_, e)| e.leaves()).sum(),
        }
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::A => f.write_str("A"),
            BracketExpr::B => f.write_str("B"),
            BracketExpr::Bracket(x, y) => write!(f, "[{x}, {y}]"),
            BracketExpr::Sum(parts) => {
                if parts.is_empty() {
                    return f.write_str("0");
                }
                for (i, (s, e)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    let inner = match e {
                        BracketExpr::Sum(_) => format!("({e})"),
                        _ => e.to_string(),
                    };
                    if s.is_compound() {
                        write!(f, "({s})*{inner}")?;
                    } else {
                        write!(f, "{s}*{inner}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::Monomial;

    #[test]
    fn leaves_and_brackets() {
        let t = ScalarContext::torsion(3).unwrap();
        assert_eq!(BracketExpr::A.eval(&t).unwrap(), Element::a(&t));
        assert_eq!(BracketExpr::c().eval(&t).unwrap(), Element::c(&t));
        // [A, [A, B]] = (q - 1) C A
        let e = BracketExpr::ad_pow(&BracketExpr::A, 2, BracketExpr::B);
        let v = e.eval(&t).unwrap();
        assert_eq!(v, Element::term(&t, Monomial::c_a(1, 1), &t.q() - &t.one()));
        assert_eq!(e.leaves(), 3);
    }

    #[test]
    fn text_form() {
        let e = BracketExpr::bracket(
            BracketExpr::B,
            BracketExpr::bracket(BracketExpr::c(), BracketExpr::A),
        );
        assert_eq!(e.to_string(), "[B, [[A, B], A]]");
        let g = ScalarContext::generic();
        let s = BracketExpr::Sum(vec![(g.int(2), BracketExpr::A), (g.q(), BracketExpr::B)]);
        assert_eq!(s.to_string(), "2*A + q*B");
    }

    #[test]
    fn neg_ad_matches_negated_bracket() {
        let t = ScalarContext::torsion(5).unwrap();
        let lhs = BracketExpr::neg_ad_pow(&BracketExpr::A, 1, BracketExpr::B);
        let rhs = BracketExpr::bracket(BracketExpr::A, BracketExpr::B).scaled(-t.one());
        assert_eq!(lhs.eval(&t).unwrap(), rhs.eval(&t).unwrap());
    }
}
