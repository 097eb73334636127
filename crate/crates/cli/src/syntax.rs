//! Tokenizer and section reader shared by the quiver and triangulation formats.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{location}: {message}")]
pub struct SyntaxError {
    pub location: Location,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Ident(String),
    Colon,
    Semicolon,
    Comma,
    Star,
    Arrow,
    Open,
    Close,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Ident(s) => write!(f, "`{s}`"),
            Kind::Colon => f.write_str("`:`"),
            Kind::Semicolon => f.write_str("`;`"),
            Kind::Comma => f.write_str("`,`"),
            Kind::Star => f.write_str("`*`"),
            Kind::Arrow => f.write_str("`->`"),
            Kind::Open => f.write_str("`(`"),
            Kind::Close => f.write_str("`)`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: Kind,
    pub at: Location,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '\'')
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let at = Location { line: l + 1, column: i + 1 };
            let c = chars[i];
            let kind = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                ':' => Kind::Colon,
                ';' => Kind::Semicolon,
                ',' => Kind::Comma,
                '*' => Kind::Star,
                '(' => Kind::Open,
                ')' => Kind::Close,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Kind::Arrow
                }
                c if is_ident_char(c) => {
                    let start = i;
                    while i + 1 < chars.len() && is_ident_char(chars[i + 1]) {
                        i += 1;
                    }
                    Kind::Ident(chars[start..=i].iter().collect())
                }
                other => return Err(SyntaxError { location: at, message: format!("unexpected character `{other}`") }),
            };
            out.push(Token { kind, at });
            i += 1;
        }
    }
    Ok(out)
}

/// Reads `keyword: item sep item sep ...` sections in a fixed order.
pub struct Sections<'k> {
    tokens: Vec<Token>,
    pos: usize,
    keywords: &'k [&'k str],
    end: Location,
}

impl<'k> Sections<'k> {
    pub fn new(text: &str, keywords: &'k [&'k str]) -> Result<Self, SyntaxError> {
        let tokens = tokenize(text)?;
        let lines = text.lines().count().max(1);
        let last = text.lines().last().map_or(0, |l| l.chars().count());
        Ok(Sections { tokens, pos: 0, keywords, end: Location { line: lines, column: last + 1 } })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> Location {
        self.peek().map_or(self.end, |t| t.at)
    }

    fn error<T>(&self, message: String) -> Result<T, SyntaxError> {
        Err(SyntaxError { location: self.here(), message })
    }

    fn at_keyword(&self) -> bool {
        matches!(
            (self.tokens.get(self.pos), self.tokens.get(self.pos + 1)),
            (Some(Token { kind: Kind::Ident(s), .. }), Some(Token { kind: Kind::Colon, .. }))
                if self.keywords.contains(&s.as_str())
        )
    }

    /// Consumes `keyword:`.
    pub fn section(&mut self, keyword: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(Token { kind: Kind::Ident(s), .. }) if s == keyword && self.at_keyword() => {
                self.pos += 2;
                Ok(())
            }
            Some(t) => self.error(format!("expected section `{keyword}:`, found {}", t.kind)),
            None => self.error(format!("expected section `{keyword}:`, found end of input")),
        }
    }

    /// Calls `item` for each item of the current section. Items are separated
    /// by `,`, `;` or a line break; empty items are skipped. Stops at the next keyword.
    pub fn items(&mut self, mut item: impl FnMut(&mut Self) -> Result<(), SyntaxError>) -> Result<(), SyntaxError> {
        loop {
            while matches!(self.peek(), Some(Token { kind: Kind::Comma | Kind::Semicolon, .. })) {
                self.pos += 1;
            }
            if self.peek().is_none() || self.at_keyword() {
                return Ok(());
            }
            item(self)?;
            match self.peek() {
                None => return Ok(()),
                Some(Token { kind: Kind::Comma | Kind::Semicolon, .. }) => {}
                Some(_) if self.at_keyword() => return Ok(()),
                Some(t) if self.pos > 0 && t.at.line > self.tokens[self.pos - 1].at.line => {}
                Some(t) => return self.error(format!("expected `,` or `;`, found {}", t.kind)),
            }
        }
    }

    pub fn finish(&self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.error(format!("unexpected {} after the last section", t.kind)),
        }
    }

    /// An identifier that is not a section keyword, with its location.
    pub fn ident(&mut self, what: &str) -> Result<(String, Location), SyntaxError> {
        match self.peek().cloned() {
            Some(Token { kind: Kind::Ident(s), at }) => {
                if self.keywords.contains(&s.as_str()) {
                    return self.error(format!("`{s}` is a reserved word and cannot name {what}"));
                }
                self.pos += 1;
                Ok((s, at))
            }
            Some(t) => self.error(format!("expected {what}, found {}", t.kind)),
            None => self.error(format!("expected {what}, found end of input")),
        }
    }

    pub fn expect(&mut self, kind: Kind) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => self.error(format!("expected {kind}, found {}", t.kind)),
            None => self.error(format!("expected {kind}, found end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_locations() {
        let t = tokenize("a: x -> y # note\n  b*a").unwrap();
        let kinds: Vec<Kind> = t.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            [
                Kind::Ident("a".into()),
                Kind::Colon,
                Kind::Ident("x".into()),
                Kind::Arrow,
                Kind::Ident("y".into()),
                Kind::Ident("b".into()),
                Kind::Star,
                Kind::Ident("a".into()),
            ]
        );
        assert_eq!(t[5].at, Location { line: 2, column: 3 });
    }

    #[test]
    fn bad_character() {
        let e = tokenize("ok\n  x = y").unwrap_err();
        assert_eq!(e.location, Location { line: 2, column: 5 });
    }
}
