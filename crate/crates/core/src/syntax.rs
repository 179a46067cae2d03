//! Canonical ASCII term syntax: `e`, `v(X,[Xs...])`, `w(X,[Xs...])`.

use std::fmt;

use crate::error::{HbnError, Result};
use crate::tree::{to_u64, Digit, Hbn};

/// Counter nesting deeper than this is rejected rather than risking the stack.
const MAX_NESTING: usize = 1024;

pub fn render_tree(x: &Hbn) -> String {
    let mut out = String::new();
    write_tree(x, &mut out);
    out
}

fn write_tree(x: &Hbn, out: &mut String) {
    let mut blocks = x.blocks();
    let Some((d, head)) = blocks.next() else {
        out.push('e');
        return;
    };
    out.push(if d == Digit::O { 'v' } else { 'w' });
    out.push('(');
    write_tree(head, out);
    out.push_str(",[");
    for (j, (_, c)) in blocks.enumerate() {
        if j > 0 {
            out.push(',');
        }
        write_tree(c, out);
    }
    out.push_str("])");
}

/// Decimal when it fits a machine word, tree syntax otherwise.
pub fn describe(x: &Hbn) -> String {
    match to_u64(x) {
        Some(k) => k.to_string(),
        None => render_tree(x),
    }
}

impl fmt::Display for Hbn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_tree(self))
    }
}

impl fmt::Debug for Hbn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_tree(self))
    }
}

pub fn parse_tree(text: &str) -> Result<Hbn> {
    let (x, used) = parse_tree_prefix(text)?;
    let mut p = Parser { src: text.as_bytes(), pos: used };
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input after tree"));
    }
    Ok(x)
}

/// Parses one tree at the start of `text`, returning it with the number of
/// bytes consumed (trailing whitespace excluded).
pub fn parse_tree_prefix(text: &str) -> Result<(Hbn, usize)> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let x = p.tree(0)?;
    Ok((x, p.pos))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> HbnError {
        HbnError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn tree(&mut self, depth: usize) -> Result<Hbn> {
        if depth > MAX_NESTING {
            return Err(self.error("tree nested too deeply"));
        }
        let head = match self.peek() {
            Some(b'e') => {
                self.pos += 1;
                return Ok(Hbn::E);
            }
            Some(b'v') => Digit::O,
            Some(b'w') => Digit::I,
            _ => return Err(self.error("expected 'e', 'v' or 'w'")),
        };
        self.pos += 1;
        self.expect(b'(')?;
        let count = self.tree(depth + 1)?;
        self.expect(b',')?;
        self.expect(b'[')?;
        let mut rest = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                rest.push(self.tree(depth + 1)?);
                if self.peek() == Some(b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(b']')?;
        self.expect(b')')?;
        Ok(Hbn::from_term(head, count, rest))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::from_u64;

    #[test]
    fn renders_reference_terms() {
        assert_eq!(render_tree(&Hbn::E), "e");
        assert_eq!(render_tree(&from_u64(5)), "v(e,[e])");
        assert_eq!(render_tree(&from_u64(42)), "w(v(e,[]),[e,e,e])");
        assert_eq!(
            render_tree(&from_u64(123456)),
            "w(e,[w(e,[e]),e,v(e,[]),e,w(e,[]),w(e,[])])"
        );
    }

    #[test]
    fn parses_with_whitespace() {
        assert_eq!(parse_tree("e").unwrap(), Hbn::E);
        assert_eq!(parse_tree(" w( v(e, []) , [e, e,e] ) ").unwrap(), from_u64(42));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_tree("w(e,[e,])") {
            Err(HbnError::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_tree("x"), Err(HbnError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_tree("e e"), Err(HbnError::Syntax { pos: 2, .. })));
        assert!(parse_tree("v(e,[]").is_err());
    }

    #[test]
    fn prefix_reports_consumed_length() {
        let (x, used) = parse_tree_prefix("v(e,[])+1").unwrap();
        assert_eq!(x, from_u64(1));
        assert_eq!(used, 7);
    }

    #[test]
    fn rejects_runaway_nesting() {
        let deep = "v(".repeat(MAX_NESTING + 2);
        assert!(parse_tree(&deep).is_err());
    }
}
