use crate::error::{Error, Result};

/// Byte cursor shared by the hand-written presentation parsers.
pub(crate) struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(s: &'a str) -> Self {
        Self {
            s: s.as_bytes(),
            i: 0,
        }
    }

    pub fn at_end(&self) -> bool {
        self.i >= self.s.len()
    }

    pub fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    pub fn bump(&mut self) {
        self.i += 1;
    }

    pub fn pos(&self) -> usize {
        self.i
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.i += 1;
        }
    }

    pub fn skip_separators(&mut self) {
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_whitespace() || b == b';')
        {
            self.i += 1;
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c as u8) {
            self.i += 1;
            Ok(())
        } else {
            Err(Error::Syntax(format!("expected `{c}` at byte {}", self.i)))
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.i;
        while self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::Syntax(format!(
                "expected a field name at byte {start}"
            )));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.i]).into_owned())
    }

    pub fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.i;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Syntax(format!("expected a number at byte {start}")))
    }

    pub fn list(&mut self) -> Result<Vec<usize>> {
        self.expect('[')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.i += 1;
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(b']') => {
                    self.i += 1;
                    return Ok(out);
                }
                _ => {
                    return Err(Error::Syntax(format!(
                        "expected `,` or `]` at byte {}",
                        self.i
                    )))
                }
            }
        }
    }
}
