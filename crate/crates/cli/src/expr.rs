//! Expression parsing and evaluation.
//!
//! ```text
//! expr := term (("+"|"-") term)*
//! term := atom ("*" atom)*
//! atom := NAT | "e" | tree | fn "(" expr ("," expr)* ")" | "(" expr ")"
//! ```
//!
//! Sums and products are kept flat, so only parentheses and calls nest.

use std::cmp::Ordering;

use hbn::{
    add, best_case, bitsize, cmp, double, exp2, from_natural, half, ilog2, left_shift, mul,
    parse_tree_prefix, pred, sub, succ, tsize, worst_case, Hbn, Natural,
};

use crate::error::CliError;

/// Deepest allowed nesting of parentheses and calls.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Succ,
    Pred,
    Pow2,
    Shl,
    Double,
    Half,
    Bitsize,
    Tsize,
    Ilog2,
    Best,
    Worst,
    Cmp,
}

impl Func {
    fn lookup(name: &str) -> Option<Func> {
        Some(match name {
            "succ" => Func::Succ,
            "pred" => Func::Pred,
            "pow2" => Func::Pow2,
            "shl" => Func::Shl,
            "double" => Func::Double,
            "half" => Func::Half,
            "bitsize" => Func::Bitsize,
            "tsize" => Func::Tsize,
            "ilog2" => Func::Ilog2,
            "best" => Func::Best,
            "worst" => Func::Worst,
            "cmp" => Func::Cmp,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Func::Shl | Func::Cmp => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Expr {
    Num(Hbn),
    /// First term, then `(is_minus, term)` pairs, left to right.
    Sum(Box<Expr>, Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Call { func: Func, pos: usize, args: Vec<Expr> },
}

/// Result of evaluation: a number, or the ordering produced by `cmp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Num(Hbn),
    Ord(Ordering),
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser {
        src,
        bytes: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(CliError::parse(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

pub fn evaluate(src: &str) -> Result<Value, CliError> {
    eval(&parse(src)?)
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), CliError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(CliError::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, CliError> {
        if depth > MAX_DEPTH {
            return Err(CliError::parse(self.pos, "expression nested too deeply"));
        }
        let first = self.term(depth)?;
        let mut rest = Vec::new();
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            rest.push((op == b'-', self.term(depth)?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Sum(Box::new(first), rest)
        })
    }

    fn term(&mut self, depth: usize) -> Result<Expr, CliError> {
        let mut factors = vec![self.atom(depth)?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.atom(depth)?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn atom(&mut self, depth: usize) -> Result<Expr, CliError> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr(depth + 1)?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let n: Natural = self.src[start..self.pos].parse().expect("decimal digits");
                Ok(Expr::Num(from_natural(&n)))
            }
            Some(b) if b.is_ascii_alphabetic() => self.word(depth),
            Some(_) => Err(CliError::parse(self.pos, "expected a number, tree, call or '('")),
            None => Err(CliError::parse(start.max(self.pos), "unexpected end of input")),
        }
    }

    fn word(&mut self, depth: usize) -> Result<Expr, CliError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        match name {
            "e" => return Ok(Expr::Num(Hbn::E)),
            "v" | "w" => {
                let (x, used) = parse_tree_prefix(&self.src[start..]).map_err(|e| match e {
                    hbn::HbnError::Syntax { pos, msg } => CliError::parse(start + pos, msg),
                    other => other.into(),
                })?;
                self.pos = start + used;
                return Ok(Expr::Num(x));
            }
            _ => {}
        }
        let func = Func::lookup(name)
            .ok_or_else(|| CliError::parse(start, format!("unknown function '{name}'")))?;
        self.expect(b'(')?;
        let mut args = vec![self.expr(depth + 1)?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            args.push(self.expr(depth + 1)?);
        }
        self.expect(b')')?;
        if args.len() != func.arity() {
            return Err(CliError::parse(
                start,
                format!(
                    "'{name}' takes {} argument(s), got {}",
                    func.arity(),
                    args.len()
                ),
            ));
        }
        Ok(Expr::Call {
            func,
            pos: start,
            args,
        })
    }
}

pub fn eval(e: &Expr) -> Result<Value, CliError> {
    match e {
        Expr::Num(x) => Ok(Value::Num(x.clone())),
        Expr::Sum(first, rest) => {
            let mut acc = number(first)?;
            for (minus, t) in rest {
                let y = number(t)?;
                acc = if *minus { sub(&acc, &y)? } else { add(&acc, &y) };
            }
            Ok(Value::Num(acc))
        }
        Expr::Product(factors) => {
            let mut acc = number(&factors[0])?;
            for f in &factors[1..] {
                acc = mul(&acc, &number(f)?);
            }
            Ok(Value::Num(acc))
        }
        Expr::Call { func, args, .. } => {
            if *func == Func::Cmp {
                return Ok(Value::Ord(cmp(&number(&args[0])?, &number(&args[1])?)));
            }
            let x = number(&args[0])?;
            let r = match func {
                Func::Succ => succ(&x),
                Func::Pred => pred(&x)?,
                Func::Pow2 => exp2(&x),
                Func::Shl => left_shift(&x, &number(&args[1])?),
                Func::Double => double(&x),
                Func::Half => half(&x)?,
                Func::Bitsize => bitsize(&x),
                Func::Tsize => tsize(&x),
                Func::Ilog2 => ilog2(&x)?,
                Func::Best => best_case(&x)?,
                Func::Worst => worst_case(&x)?,
                Func::Cmp => unreachable!("handled above"),
            };
            Ok(Value::Num(r))
        }
    }
}

fn number(e: &Expr) -> Result<Hbn, CliError> {
    match eval(e)? {
        Value::Num(x) => Ok(x),
        Value::Ord(_) => {
            let pos = match e {
                Expr::Call { pos, .. } => *pos,
                _ => 0,
            };
            Err(CliError::parse(pos, "cmp yields an ordering, not a number"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hbn::{from_u64, to_u64};

    fn num(src: &str) -> u64 {
        match evaluate(src).unwrap() {
            Value::Num(x) => to_u64(&x).unwrap(),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(num("2+3*4"), 14);
        assert_eq!(num("10-3-2"), 5);
        assert_eq!(num("(2+3)*4"), 20);
        assert_eq!(num("2*3*4 - 4"), 20);
    }

    #[test]
    fn functions() {
        assert_eq!(num("shl(4, 3)"), 48);
        assert_eq!(num("pow2(10)"), 1024);
        assert_eq!(num("succ(pred(7))"), 7);
        assert_eq!(num("half(double(21))"), 21);
        assert_eq!(num("bitsize(123456)"), 16);
        assert_eq!(num("tsize(123456)"), 12);
        assert_eq!(num("ilog2(1024)"), 10);
        assert_eq!(num("best(3)"), 65534);
        assert_eq!(num("worst(3)"), 84);
        assert_eq!(evaluate("cmp(3, 5)").unwrap(), Value::Ord(Ordering::Less));
        assert_eq!(evaluate("cmp(e, 0)").unwrap(), Value::Ord(Ordering::Equal));
    }

    #[test]
    fn tree_literals() {
        assert_eq!(num("w(v(e,[]),[e,e,e])"), 42);
        assert_eq!(num("v(e, []) + w(e,[])"), 3);
        assert_eq!(
            evaluate("v(e,[e])").unwrap(),
            Value::Num(Hbn::v(Hbn::E, [Hbn::E]))
        );
        assert_eq!(num("e"), 0);
        assert_eq!(from_u64(num("123456")), from_u64(123456));
    }

    fn parse_pos(src: &str) -> usize {
        match evaluate(src) {
            Err(CliError::Parse { pos, .. }) => pos,
            r => panic!("{src}: {r:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_pos("2+"), 2);
        assert_eq!(parse_pos("(1+2"), 4);
        assert_eq!(parse_pos("1 2"), 2);
        assert_eq!(parse_pos("foo(1)"), 0);
        assert_eq!(parse_pos("1 + succ(1, 2)"), 4);
        assert_eq!(parse_pos("1+v(e,[)"), 7);
        assert_eq!(parse_pos("cmp(1,2)+1"), 0);
        assert_eq!(parse_pos("1 + #"), 4);
    }

    #[test]
    fn arithmetic_errors() {
        for src in ["3-5", "pred(0)", "half(7)", "ilog2(0)"] {
            assert!(matches!(evaluate(src), Err(CliError::Arith(_))), "{src}");
        }
    }

    #[test]
    fn nesting_is_bounded() {
        let deep = format!("{}1{}", "(".repeat(MAX_DEPTH + 5), ")".repeat(MAX_DEPTH + 5));
        assert!(matches!(evaluate(&deep), Err(CliError::Parse { .. })));
        let ok = format!("{}1{}", "(".repeat(100), ")".repeat(100));
        assert_eq!(num(&ok), 1);
        let long = vec!["1"; 10_000].join("+");
        assert_eq!(num(&long), 10_000);
    }
}
