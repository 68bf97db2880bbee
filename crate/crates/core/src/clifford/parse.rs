//! Recursive-descent parser for gamma expressions.
//!
//! ```text
//! expr     := term { ("+" | "-") term } ;
//! term     := factor { "*" factor } ;
//! factor   := [ "-" ] ( atom | "(" expr ")" ) ;
//! atom     := "g0" | "g1" | "g2" | "g3" | "g5" | "i" | "I" | rational ;
//! rational := integer [ "/" positive-integer ] ;
//! ```
//!
//! Whitespace is insignificant. Products need an explicit `*`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Signed, Zero};

use super::expr::GammaExpr;
use crate::error::ParseError;
use crate::matrix::imag_unit;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Gen(u8),
    Gamma5,
    ImagUnit,
    Identity,
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Gen(mu) => format!("`g{mu}`"),
            Tok::Gamma5 => "`g5`".into(),
            Tok::ImagUnit => "`i`".into(),
            Tok::Identity => "`I`".into(),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Slash => "`/`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
            }
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                name.push(d);
                chars.next();
            }
            let tok = match name.as_str() {
                "g0" => Tok::Gen(0),
                "g1" => Tok::Gen(1),
                "g2" => Tok::Gen(2),
                "g3" => Tok::Gen(3),
                "g5" => Tok::Gamma5,
                "i" => Tok::ImagUnit,
                "I" => Tok::Identity,
                _ => return Err(ParseError::UnknownIdentifier { pos, name }),
            };
            out.push((pos, tok));
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            found => return Err(ParseError::UnexpectedChar { pos, found }),
        };
        chars.next();
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn syntax(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expr<T: Scalar>(&mut self) -> Result<GammaExpr<T>, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(GammaExpr::Negate(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            GammaExpr::Sum(terms)
        })
    }

    fn term<T: Scalar>(&mut self) -> Result<GammaExpr<T>, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GammaExpr::Product(factors)
        })
    }

    fn factor<T: Scalar>(&mut self) -> Result<GammaExpr<T>, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let inner = if *self.peek() == Tok::LParen {
            self.bump();
            let e = self.expr()?;
            if *self.peek() != Tok::RParen {
                return Err(self.syntax("`)`"));
            }
            self.bump();
            e
        } else {
            self.atom()?
        };
        Ok(if negate {
            GammaExpr::Negate(Box::new(inner))
        } else {
            inner
        })
    }

    fn atom<T: Scalar>(&mut self) -> Result<GammaExpr<T>, ParseError> {
        match self.peek().clone() {
            Tok::Gen(mu) => {
                self.bump();
                Ok(GammaExpr::Generator(mu))
            }
            Tok::Gamma5 => {
                self.bump();
                Ok(GammaExpr::Gamma5)
            }
            Tok::ImagUnit => {
                self.bump();
                Ok(GammaExpr::Scalar(imag_unit()))
            }
            Tok::Identity => {
                self.bump();
                Ok(GammaExpr::Identity)
            }
            Tok::Int(numer) => {
                let start = self.pos();
                self.bump();
                let mut value = Rational::from_integer(numer);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let den_pos = self.pos();
                    match self.bump() {
                        Tok::Int(d) if d.is_positive() && !d.is_zero() => {
                            value /= Rational::from_integer(d);
                        }
                        _ => return Err(ParseError::BadDenominator { pos: den_pos }),
                    }
                }
                let v = T::from_rational(&value).ok_or(ParseError::Syntax {
                    pos: start,
                    expected: "a representable number",
                    found: value.to_string(),
                })?;
                Ok(GammaExpr::Scalar(Complex::new(v, T::zero())))
            }
            _ => Err(self.syntax("a generator, scalar or `(`")),
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse<T: Scalar>(text: &str) -> Result<GammaExpr<T>, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.syntax("an operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    type E = GammaExpr<Rational>;

    fn p(s: &str) -> E {
        parse(s).unwrap()
    }

    #[test]
    fn product_of_generators() {
        assert_eq!(p("g1*g2*g3"), E::word(&[1, 2, 3]));
    }

    #[test]
    fn gamma5_definition_text() {
        let expected = E::Product(vec![E::i(), E::gen(0), E::gen(1), E::gen(2), E::gen(3)]);
        assert_eq!(p("i*g0*g1*g2*g3"), expected);
    }

    #[test]
    fn parenthesised_sum() {
        assert_eq!(
            p("g0*(g1+g2)"),
            E::Product(vec![E::gen(0), E::Sum(vec![E::gen(1), E::gen(2)])])
        );
    }

    #[test]
    fn precedence_of_minus() {
        // unary minus binds tighter than the product
        assert_eq!(
            p("-g1*g2"),
            E::Product(vec![E::Negate(Box::new(E::gen(1))), E::gen(2)])
        );
        assert_eq!(
            p("g1 - g2*g3"),
            E::Sum(vec![E::gen(1), E::Negate(Box::new(E::word(&[2, 3])))])
        );
    }

    #[test]
    fn rationals_and_whitespace() {
        assert_eq!(
            p("  3 / 4 * I "),
            E::Product(vec![E::Scalar(Complex::new(q(3, 4), q(0, 1))), E::Identity])
        );
        assert_eq!(p("6/8"), E::Scalar(Complex::new(q(3, 4), q(0, 1))));
    }

    #[test]
    fn juxtaposition_is_rejected() {
        let err = parse::<Rational>("g1 g2").unwrap_err();
        assert_eq!(err.position(), 3);
        assert!(matches!(err, ParseError::Syntax { .. }));
        assert!(parse::<Rational>("2g1").is_err());
    }

    #[test]
    fn unknown_identifiers_are_named() {
        assert_eq!(
            parse::<Rational>("g0*g4").unwrap_err(),
            ParseError::UnknownIdentifier {
                pos: 3,
                name: "g4".into()
            }
        );
        assert!(matches!(
            parse::<Rational>("x"),
            Err(ParseError::UnknownIdentifier { pos: 0, .. })
        ));
    }

    #[test]
    fn malformed_inputs_report_positions() {
        assert_eq!(parse::<Rational>("(g1+g2").unwrap_err().position(), 6);
        assert_eq!(parse::<Rational>("g1*").unwrap_err().position(), 3);
        assert_eq!(
            parse::<Rational>("1/0").unwrap_err(),
            ParseError::BadDenominator { pos: 2 }
        );
        assert_eq!(
            parse::<Rational>("1/-2").unwrap_err(),
            ParseError::BadDenominator { pos: 2 }
        );
        assert!(matches!(
            parse::<Rational>("g1 % g2"),
            Err(ParseError::UnexpectedChar { pos: 3, found: '%' })
        ));
        assert!(parse::<Rational>("--g1").is_err());
        assert!(parse::<Rational>("").is_err());
    }
}
