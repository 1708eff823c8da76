use super::parse::{ExprAst, Pos};
use crate::error::{Error, Result};
use crate::heisenberg::{to_element, Element, FreePoly, FreeWord, Letter, Monomial};
use crate::qscalar::{Scalar, ScalarContext};

/// `ast` as a pure word in `A`, `B`, if it is one.
fn as_word(ast: &ExprAst) -> Option<FreeWord> {
    match ast {
        ExprAst::A => Some(FreeWord(vec![Letter::A])),
        ExprAst::B => Some(FreeWord(vec![Letter::B])),
        ExprAst::Mul(x, y) => Some(as_word(x)?.concat(&as_word(y)?)),
        ExprAst::Pow(x, n) => {
            let w = as_word(x)?;
            Some(FreeWord(w.letters().repeat(*n as usize)))
        }
        _ => None,
    }
}

/// The scalar `s` with `x = s I`, if any.
fn as_scalar(x: &Element) -> Option<Scalar> {
    match x.support().collect::<Vec<_>>().as_slice() {
        [] => Some(x.context().zero()),
        [m] if *m == Monomial::IDENTITY => Some(x.coeff(m)),
        _ => None,
    }
}

fn div_error(pos: Pos, message: &str) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.to_string(),
    }
}

/// The canonical element denoted by `ast`. Words in `A`, `B` go through
/// word reduction; brackets through the commutator.
pub fn elaborate(ast: &ExprAst, ctx: &ScalarContext) -> Result<Element> {
    if let Some(w) = as_word(ast) {
        return Ok(to_element(&FreePoly::word(ctx, w)));
    }
    Ok(match ast {
        ExprAst::A => Element::a(ctx),
        ExprAst::B => Element::b(ctx),
        ExprAst::C => Element::a(ctx).commutator(&Element::b(ctx))?,
        ExprAst::I => Element::one(ctx),
        ExprAst::Q => Element::term(ctx, Monomial::IDENTITY, ctx.q()),
        ExprAst::Int(n) => Element::term(
            ctx,
            Monomial::IDENTITY,
            ctx.rational(num_rational::BigRational::from_integer(n.clone())),
        ),
        ExprAst::Neg(x) => -&elaborate(x, ctx)?,
        ExprAst::Add(x, y) => elaborate(x, ctx)?.checked_add(&elaborate(y, ctx)?)?,
        ExprAst::Sub(x, y) => elaborate(x, ctx)?.checked_sub(&elaborate(y, ctx)?)?,
        ExprAst::Mul(x, y) => elaborate(x, ctx)?.multiply(&elaborate(y, ctx)?)?,
        ExprAst::Div(x, y, pos) => {
            let den = elaborate(y, ctx)?;
            let s = as_scalar(&den).ok_or_else(|| div_error(*pos, "divisor is not a scalar"))?;
            let inv = s.inv().map_err(|_| div_error(*pos, "division by zero"))?;
            elaborate(x, ctx)?.scale(&inv)
        }
        ExprAst::Pow(x, n) => elaborate(x, ctx)?.pow(*n),
        ExprAst::Bracket(x, y) => elaborate(x, ctx)?.commutator(&elaborate(y, ctx)?)?,
    })
}

/// Parses and elaborates in one step.
pub fn normalize(text: &str, ctx: &ScalarContext) -> Result<Element> {
    elaborate(&super::parse::parse_expression(text)?, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_inputs() {
        let g = ScalarContext::generic();
        let t3 = ScalarContext::torsion(3).unwrap();
        assert_eq!(normalize("A*B - q*B*A", &g).unwrap(), Element::one(&g));
        assert_eq!(
            normalize("[A,B]^2*A", &t3).unwrap(),
            Element::monomial(&t3, Monomial::new(2, -1))
        );
        let qm1 = &g.q() - &g.one();
        // [[B,A],A] = [A,C] = AC - CA = (q-1)(AB - BA)A.
        assert_eq!(
            normalize("[[B,A],A]", &g).unwrap(),
            Element::term(&g, Monomial::c_a(1, 1), qm1.clone())
        );
        assert_eq!(normalize("I", &g).unwrap(), Element::one(&g));
        let inv = qm1.inv().unwrap();
        let want = &Element::term(&g, Monomial::b_c(1, 1), inv.clone())
            - &Element::term(&g, Monomial::b_c(1, 0), inv);
        assert_eq!(normalize("B^2*A", &g).unwrap(), want);
        assert_eq!(normalize("q^3*A", &t3).unwrap(), Element::a(&t3));
    }

    #[test]
    fn c_is_the_bracket() {
        let t = ScalarContext::torsion(4).unwrap();
        assert_eq!(
            normalize("C", &t).unwrap(),
            normalize("A*B - B*A", &t).unwrap()
        );
        assert_eq!(
            normalize("C*A", &t).unwrap(),
            Element::monomial(&t, Monomial::c_a(1, 1))
        );
    }

    #[test]
    fn division() {
        let g = ScalarContext::generic();
        let x = normalize("(q^2+1)/(q-1)*C - 3/4*A", &g).unwrap();
        assert_eq!(normalize(&x.to_string(), &g).unwrap(), x);
        assert!(matches!(
            normalize("A/B", &g),
            Err(Error::Parse { column: 2, .. })
        ));
        assert!(matches!(normalize("A/(q-q)", &g), Err(Error::Parse { .. })));
        let t = ScalarContext::torsion(2).unwrap();
        assert!(normalize("A/(q+1)", &t).is_err());
    }
}
