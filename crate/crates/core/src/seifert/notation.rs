//! Parser and printer for the `(±g | a1/b1, ..., ak/bk)` notation.

use std::fmt;
use std::str::FromStr;

use super::{Filling, SeifertError, SeifertInvariants};

/// Location and cause of a notation syntax error. `position` counts
/// characters from the start of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    /// Two-line diagnostic with a caret under the offending character.
    pub fn caret_diagnostic(&self, input: &str) -> String {
        format!(
            "{input}\n{}^ expected {}, found {}",
            " ".repeat(self.position),
            self.expected,
            self.found
        )
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&mut self, expected: &str) -> SeifertError {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        SeifertError::Parse(ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found,
        })
    }

    fn expect(&mut self, c: char) -> Result<(), SeifertError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("{c:?}")))
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(true)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(false)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<i64, SeifertError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            SeifertError::Domain(format!("integer {text} is too large"))
        })
    }

    fn signed_int(&mut self) -> Result<i64, SeifertError> {
        let positive = self.sign().unwrap_or(true);
        let v = self.digits()?;
        Ok(if positive { v } else { -v })
    }
}

pub(super) fn parse(text: &str) -> Result<SeifertInvariants, SeifertError> {
    let mut c = Cursor {
        chars: text.chars().collect(),
        pos: 0,
    };
    c.expect('(')?;
    let orientable = c.sign().unwrap_or(true);
    let genus = c.digits()?;
    let genus = u32::try_from(genus)
        .map_err(|_| SeifertError::Domain(format!("genus {genus} is too large")))?;
    c.expect('|')?;
    let mut fillings = Vec::new();
    if c.peek() != Some(')') {
        loop {
            let alpha = c.signed_int()?;
            c.expect('/')?;
            let beta = c.signed_int()?;
            fillings.push(Filling::new(alpha, beta)?);
            match c.peek() {
                Some(',') => c.pos += 1,
                Some(')') => break,
                _ => return Err(c.error("',' or ')'")),
            }
        }
    }
    c.expect(')')?;
    if c.peek().is_some() {
        return Err(c.error("end of input"));
    }
    SeifertInvariants::new(orientable, genus, fillings)
}

impl FromStr for SeifertInvariants {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<Self, SeifertError> {
        parse(s)
    }
}

/// Parses Seifert notation, e.g. `"(+2 | 3/1, 5/2)"`.
pub fn parse_seifert(text: &str) -> Result<SeifertInvariants, SeifertError> {
    parse(text)
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.orientable { '+' } else { '-' };
        write!(f, "({sign}{} | ", self.genus)?;
        let parts: Vec<String> = self
            .fillings
            .iter()
            .map(|fl| format!("{}/{}", fl.alpha, fl.beta))
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let s = parse_seifert("(+2 | 3/1, 5/2)").unwrap();
        assert!(s.orientable());
        assert_eq!(s.genus(), 2);
        assert_eq!(s.fillings(), &[Filling::new(3, 1).unwrap(), Filling::new(5, 2).unwrap()]);

        let s = parse_seifert("(-1 | 2/1)").unwrap();
        assert!(!s.orientable());
        assert_eq!(s.genus(), 1);

        let s = parse_seifert("(+1 | )").unwrap();
        assert!(s.fillings().is_empty());
    }

    #[test]
    fn whitespace_and_unicode_minus() {
        let a = parse_seifert("(\u{2212}1|2/\u{2212}1)").unwrap();
        let b = parse_seifert("  ( -1 |  2 / -1 ) ").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(-1 | 2/-1)");
        assert_eq!(parse_seifert("(0|)").unwrap().to_string(), "(+0 | )");
    }

    #[test]
    fn reports_positions() {
        match parse_seifert("(+1 | 3/1,)") {
            Err(SeifertError::Parse(e)) => {
                assert_eq!(e.position, 10);
                assert_eq!(e.expected, "an integer");
                let d = e.caret_diagnostic("(+1 | 3/1,)");
                assert!(d.ends_with("^ expected an integer, found ')'"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_seifert("+1 | )"), Err(SeifertError::Parse(_))));
        assert!(matches!(parse_seifert("(+1 | ) x"), Err(SeifertError::Parse(_))));
        assert!(matches!(parse_seifert("(+1 3/1)"), Err(SeifertError::Parse(_))));
    }

    #[test]
    fn domain_errors() {
        for bad in ["(+0 | 0/1)", "(+0 | 2/0)", "(+0 | 4/2)", "(-0 | )", "(+0 | -3/1)"] {
            assert!(
                matches!(parse_seifert(bad), Err(SeifertError::Domain(_))),
                "{bad}"
            );
        }
    }
}
