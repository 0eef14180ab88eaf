//! Textual chain literals.
//!
//! ```text
//! chain  := '[' members? ']' | members?
//! members := member ('<' member)*
//! member := '{' (index (',' index)*)? '}'
//! ```
//!
//! Indices refer to the canonical positive-root order. Whitespace is
//! allowed between tokens. `Chain`'s `Display` output is a valid literal.

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::root_system::RootSystem;

/// Parses a literal into root-index lists without validating them.
pub fn parse_index_lists(input: &str) -> Result<Vec<Vec<usize>>> {
    Parser {
        src: input.as_bytes(),
        pos: 0,
    }
    .chain()
}

/// Parses and validates a chain of ideals.
pub fn parse_chain(rs: &RootSystem, input: &str) -> Result<Chain> {
    let lists = parse_index_lists(input)?;
    let mut members = Vec::with_capacity(lists.len());
    for (k, list) in lists.iter().enumerate() {
        let ideal = Ideal::from_indices(rs, list).map_err(|e| match e {
            Error::NotAnIdeal(s) => Error::InvalidChain(format!(
                "member {} = {s} is not closed under adding simple roots",
                k + 1
            )),
            other => other,
        })?;
        members.push(ideal);
    }
    Chain::new(members)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn chain(mut self) -> Result<Vec<Vec<usize>>> {
        self.skip_ws();
        let bracketed = self.eat(b'[');
        let mut members = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'{') {
            members.push(self.member()?);
            loop {
                self.skip_ws();
                if !self.eat(b'<') {
                    break;
                }
                self.skip_ws();
                members.push(self.member()?);
            }
        }
        self.skip_ws();
        if bracketed && !self.eat(b']') {
            return Err(self.error("expected '<' or ']'"));
        }
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.error(if bracketed {
                "unexpected input after ']'"
            } else {
                "expected '<' or end of input"
            }));
        }
        Ok(members)
    }

    fn member(&mut self) -> Result<Vec<usize>> {
        if !self.eat(b'{') {
            return Err(self.error("expected '{'"));
        }
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat(b'}') {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            out.push(self.index()?);
            self.skip_ws();
            if self.eat(b'}') {
                return Ok(out);
            }
            if !self.eat(b',') {
                return Err(self.error("expected ',' or '}'"));
            }
        }
    }

    fn index(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a root index"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "root index too large".into(),
            })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_index_lists("[]").unwrap(), Vec::<Vec<usize>>::new());
        assert_eq!(parse_index_lists("").unwrap(), Vec::<Vec<usize>>::new());
        assert_eq!(
            parse_index_lists("[{2} < {0,2} < {0, 1, 2}]").unwrap(),
            vec![vec![2], vec![0, 2], vec![0, 1, 2]]
        );
        assert_eq!(parse_index_lists(" {2}<{1,2} ").unwrap(), vec![vec![2], vec![1, 2]]);
    }

    #[test]
    fn reports_positions() {
        let err = parse_index_lists("[{2} < {0,x}]").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 10,
                message: "expected a root index".into()
            }
        );
        assert!(matches!(
            parse_index_lists("[{2}"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            parse_index_lists("[{2}] x"),
            Err(Error::Parse { position: 6, .. })
        ));
        assert!(matches!(
            parse_index_lists("{2} {3}"),
            Err(Error::Parse { position: 4, .. })
        ));
    }

    #[test]
    fn validates_members() {
        let rs = RootSystem::of("A", 2).unwrap();
        let c = parse_chain(&rs, "[{2} < {0,1,2}]").unwrap();
        assert_eq!(c.to_string(), "[{2} < {0,1,2}]");
        assert!(matches!(parse_chain(&rs, "[{0}]"), Err(Error::InvalidChain(_))));
        assert!(matches!(
            parse_chain(&rs, "[{0,2} < {1,2}]"),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            parse_chain(&rs, "[{7}]"),
            Err(Error::RootIndexOutOfRange { .. })
        ));
    }
}
