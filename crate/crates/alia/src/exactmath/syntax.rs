//! A small arithmetic expression language shared by scalar and rational
//! function literals.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | 'z' | 'zeta' INT | '(' expr ')'
//! ```

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var,
    Zeta(u32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Something an [`Expr`] can be evaluated into.
pub trait ExprTarget: Sized {
    fn int(n: &BigInt) -> Self;
    fn var() -> Result<Self, String>;
    fn zeta(n: u32) -> Result<Self, String>;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn div(self, o: Self) -> Result<Self, String>;
    fn neg(self) -> Self;
    fn pow(self, e: i64) -> Result<Self, String>;
}

impl Expr {
    pub fn eval<T: ExprTarget>(&self) -> Result<T, String> {
        Ok(match self {
            Expr::Int(n) => T::int(n),
            Expr::Var => T::var()?,
            Expr::Zeta(n) => T::zeta(*n)?,
            Expr::Add(a, b) => a.eval::<T>()?.add(b.eval()?),
            Expr::Sub(a, b) => a.eval::<T>()?.sub(b.eval()?),
            Expr::Mul(a, b) => a.eval::<T>()?.mul(b.eval()?),
            Expr::Div(a, b) => a.eval::<T>()?.div(b.eval()?)?,
            Expr::Neg(a) => a.eval::<T>()?.neg(),
            Expr::Pow(a, e) => a.eval::<T>()?.pow(*e)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    Zeta(u32),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, String> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().map_err(|e| format!("{e}"))?;
            out.push((start, Tok::Int(n)));
        } else if s[i..].starts_with("zeta") {
            let start = i;
            i += 4;
            let ds = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            if ds == i {
                return Err(format!("expected root order after 'zeta' at column {}", start + 1));
            }
            let n: u32 = s[ds..i].parse().map_err(|e| format!("{e}"))?;
            if n == 0 {
                return Err(format!("zeta0 is not a root of unity (column {})", start + 1));
            }
            out.push((start, Tok::Zeta(n)));
        } else if c == 'z' || c == 'x' {
            out.push((i, Tok::Var));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?} at column {}", i + 1));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0 + 1).unwrap_or(0)
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, String> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, String> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let neg = if self.peek_op() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let col = self.column();
            match self.toks.get(self.pos) {
                Some((_, Tok::Int(n))) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| format!("exponent too large at column {col}"))?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
                }
                _ => Err(format!("expected integer exponent at column {col}")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, String> {
        let col = self.column();
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some((_, Tok::Int(n))) => Ok(Expr::Int(n)),
            Some((_, Tok::Var)) => Ok(Expr::Var),
            Some((_, Tok::Zeta(n))) => Ok(Expr::Zeta(n)),
            Some((_, Tok::Op('('))) => {
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(format!("expected ')' at column {}", self.column()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => Err(format!("unexpected token at column {col}")),
            None => Err("unexpected end of input".to_string()),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, String> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(format!("trailing input at column {}", p.column()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("-z^2").unwrap();
        assert_eq!(e, Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var), 2))));
        let e = parse_expr("1/2*zeta5").unwrap();
        assert!(matches!(e, Expr::Mul(..)));
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_expr("1 + ?").unwrap_err();
        assert!(err.contains("column 5"), "{err}");
        assert!(parse_expr("(1 + z").is_err());
        assert!(parse_expr("z^").is_err());
    }
}
