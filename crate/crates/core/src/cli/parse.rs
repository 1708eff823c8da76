//! Expression syntax.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' nat)?
//! atom   := 'A' | 'B' | 'C' | 'I' | 'q' | nat | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! A rational literal `a/b` is a quotient of two integer atoms. The right
//! operand of `/` must elaborate to a nonzero scalar.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Line and column, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    A,
    B,
    C,
    I,
    Q,
    Int(BigInt),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>, Pos),
    Pow(Box<ExprAst>, u32),
    Bracket(Box<ExprAst>, Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Letter(char),
    Num(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, Pos)>,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

impl Lexer {
    fn new(text: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let (mut line, mut column) = (1, 1);
        let mut chars = text.chars().peekable();
        while let Some(&ch) = chars.peek() {
            let pos = Pos { line, column };
            if ch == '\n' {
                chars.next();
                line += 1;
                column = 1;
                continue;
            }
            if ch.is_whitespace() {
                chars.next();
                column += 1;
                continue;
            }
            if ch.is_ascii_digit() {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                toks.push((Tok::Num(s), pos));
                continue;
            }
            let tok = match ch {
                'A' | 'B' | 'C' | 'I' | 'q' => Tok::Letter(ch),
                '+' | '-' | '*' | '/' | '^' | '[' | ']' | '(' | ')' | ',' => Tok::Sym(ch),
                _ => return Err(err(pos, format!("unexpected character '{ch}'"))),
            };
            chars.next();
            column += 1;
            toks.push((tok, pos));
        }
        toks.push((Tok::End, Pos { line, column }));
        Ok(Lexer { toks })
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(
                self.pos(),
                format!("expected '{c}', found {}", describe(self.peek())),
            ))
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = if self.eat('-') {
            ExprAst::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.bump().1;
                lhs = ExprAst::Div(Box::new(lhs), Box::new(self.factor()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.bump() {
            (Tok::Num(s), pos) => s
                .parse::<u32>()
                .map(|e| ExprAst::Pow(Box::new(base), e))
                .map_err(|_| err(pos, format!("exponent {s} is too large"))),
            (t, pos) => Err(err(
                pos,
                format!("expected a nonnegative exponent, found {}", describe(&t)),
            )),
        }
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Letter('A') => Ok(ExprAst::A),
            Tok::Letter('B') => Ok(ExprAst::B),
            Tok::Letter('C') => Ok(ExprAst::C),
            Tok::Letter('I') => Ok(ExprAst::I),
            Tok::Letter(_) => Ok(ExprAst::Q),
            Tok::Num(s) => Ok(ExprAst::Int(s.parse().expect("digits"))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                let x = self.expr()?;
                self.expect(',')?;
                let y = self.expr()?;
                self.expect(']')?;
                Ok(ExprAst::Bracket(Box::new(x), Box::new(y)))
            }
            t => Err(err(
                pos,
                format!("expected an operand, found {}", describe(&t)),
            )),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Letter(c) | Tok::Sym(c) => format!("'{c}'"),
        Tok::Num(s) => format!("'{s}'"),
        Tok::End => "end of input".to_string(),
    }
}

pub fn parse_expression(text: &str) -> Result<ExprAst> {
    let toks = Lexer::new(text)?.toks;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pe(s: &str) -> ExprAst {
        parse_expression(s).unwrap()
    }

    #[test]
    fn precedence() {
        use ExprAst::*;
        assert_eq!(
            pe("A*B - q*B*A"),
            Sub(
                Box::new(Mul(Box::new(A), Box::new(B))),
                Box::new(Mul(Box::new(Mul(Box::new(Q), Box::new(B))), Box::new(A)))
            )
        );
        assert_eq!(pe("C^2*A"), Mul(Box::new(Pow(Box::new(C), 2)), Box::new(A)));
        assert_eq!(pe("-A + B"), Add(Box::new(Neg(Box::new(A))), Box::new(B)));
        assert!(matches!(pe("[[B,A],A]"), Bracket(_, _)));
        assert!(matches!(pe("2/3"), Div(_, _, _)));
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_expression("A*\n  B + )").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 7,
                message: "expected an operand, found ')'".into()
            }
        );
        assert!(matches!(
            parse_expression("A B"),
            Err(Error::Parse { column: 3, .. })
        ));
        assert!(matches!(
            parse_expression("[A, B"),
            Err(Error::Parse { column: 6, .. })
        ));
        assert!(matches!(
            parse_expression("x"),
            Err(Error::Parse { column: 1, .. })
        ));
    }

    #[test]
    fn exponent_overflow() {
        let e = parse_expression("A^99999999999").unwrap_err();
        assert!(matches!(e, Error::Parse { column: 3, .. }), "{e}");
        assert!(parse_expression("A^-1").is_err());
    }
}
