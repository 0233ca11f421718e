use super::{OrientabilityClass, SeifertPair, SeifertSymbol, SymbolError};

/// Parses `"(" INT "," class "|" pairs ")"`, ignoring ASCII whitespace.
pub fn parse_symbol(text: &str) -> Result<SeifertSymbol, SymbolError> {
    let mut cursor = Cursor::new(text);
    cursor.expect(b'(', "'('")?;
    let genus_pos = cursor.pos();
    let genus = cursor.integer()?;
    let genus = u32::try_from(genus).map_err(|_| SymbolError::Syntax {
        pos: genus_pos,
        expected: "a non-negative genus",
    })?;
    cursor.expect(b',', "','")?;
    let class = cursor.class()?;
    cursor.expect(b'|', "'|'")?;

    let mut pairs = Vec::new();
    if cursor.peek() != Some(b')') {
        loop {
            pairs.push(cursor.pair()?);
            if cursor.peek() == Some(b',') {
                cursor.bump();
            } else {
                break;
            }
        }
    }
    cursor.expect(b')', "',' or ')'")?;
    if cursor.peek().is_some() {
        return Err(SymbolError::Syntax {
            pos: cursor.pos(),
            expected: "end of input",
        });
    }
    SeifertSymbol::new(genus, class, pairs)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expect(&mut self, byte: u8, expected: &'static str) -> Result<(), SymbolError> {
        if self.peek() == Some(byte) {
            self.bump();
            Ok(())
        } else {
            Err(SymbolError::Syntax {
                pos: self.pos,
                expected,
            })
        }
    }

    fn integer(&mut self) -> Result<i64, SymbolError> {
        let start = self.pos();
        let mut end = start;
        if matches!(self.bytes.get(end), Some(b'-') | Some(b'+')) {
            end += 1;
        }
        let digits_start = end;
        while end < self.bytes.len() && self.bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return Err(SymbolError::Syntax {
                pos: start,
                expected: "an integer",
            });
        }
        // the slice is ASCII sign + digits, so only overflow can fail here
        let value = std::str::from_utf8(&self.bytes[start..end])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or(SymbolError::IntegerRange { pos: start })?;
        self.pos = end;
        Ok(value)
    }

    fn class(&mut self) -> Result<OrientabilityClass, SymbolError> {
        let start = self.pos();
        let rest = &self.bytes[start..];
        let class = if rest.starts_with(b"o1") {
            OrientabilityClass::O1
        } else if rest.starts_with(b"n2") {
            OrientabilityClass::N2
        } else {
            return Err(SymbolError::Syntax {
                pos: start,
                expected: "'o1' or 'n2'",
            });
        };
        self.pos += 2;
        Ok(class)
    }

    fn pair(&mut self) -> Result<SeifertPair, SymbolError> {
        self.expect(b'(', "'('")?;
        let q = self.integer()?;
        self.expect(b',', "','")?;
        let p = self.integer()?;
        self.expect(b')', "')'")?;
        SeifertPair::new(q, p)
    }
}
