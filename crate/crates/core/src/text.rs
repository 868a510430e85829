//! Shared cursor for the small text grammars (words, polynomials, matrix
//! documents, proper systems).

use crate::error::Error;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column_base: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self::at(src, 1, 1)
    }

    /// A cursor over `src`, reporting positions as if `src` began at
    /// `line`, `column`.
    pub fn at(src: &'a str, line: usize, column: usize) -> Self {
        Cursor {
            src,
            pos: 0,
            line,
            column_base: column,
        }
    }

    pub fn column(&self) -> usize {
        self.column_base + self.src[..self.pos].chars().count()
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    /// Consumes `c` after optional whitespace.
    pub fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// An identifier `[A-Za-z_][A-Za-z0-9_]*`, no leading whitespace skip.
    pub fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Some(&self.src[start..self.pos])
    }

    /// An unsigned run of ASCII digits, no leading whitespace skip.
    pub fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    /// An optionally signed integer, no leading whitespace skip.
    pub fn signed_int(&mut self) -> Option<i64> {
        let save = self.pos;
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.digits().and_then(|d| d.parse::<i64>().ok()) {
            Some(v) => Some(if neg { -v } else { v }),
            None => {
                self.pos = save;
                None
            }
        }
    }

    pub fn peek_is_digit(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }
}
