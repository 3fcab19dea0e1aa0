//! Line-oriented tokenizer shared by the model file parsers.

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u32),
    Str(String),
    Sym(&'static str),
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const SYMBOLS: &[&str] = &[
    "|>", "▷", ".", "+", "(", ")", "=", "|", "'", "<", ">", "@", "!", "^", ",", "-",
];

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits `src` into lines of tokens.  `#` starts a comment; blank lines
/// are dropped.
pub fn tokenize(src: &str) -> Result<Vec<Vec<Token>>, ParseError> {
    let mut lines = Vec::new();
    for (ln, text) in src.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '"' {
                let mut j = i + 1;
                while j < chars.len() && chars[j] != '"' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(ParseError::new(line, col, "unterminated string"));
                }
                toks.push(Token {
                    tok: Tok::Str(chars[i + 1..j].iter().collect()),
                    line,
                    col,
                });
                i = j + 1;
                continue;
            }
            if c.is_ascii_digit() {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                let n = s
                    .parse()
                    .map_err(|_| ParseError::new(line, col, "number out of range"))?;
                toks.push(Token {
                    tok: Tok::Int(n),
                    line,
                    col,
                });
                i = j;
                continue;
            }
            if ident_start(c) {
                let mut j = i + 1;
                if c == '$' {
                    toks.push(Token {
                        tok: Tok::Ident("$".into()),
                        line,
                        col,
                    });
                    i = j;
                    continue;
                }
                while j < chars.len() && ident_char(chars[j]) {
                    j += 1;
                }
                toks.push(Token {
                    tok: Tok::Ident(chars[i..j].iter().collect()),
                    line,
                    col,
                });
                i = j;
                continue;
            }
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
                Some(s) => {
                    toks.push(Token {
                        tok: Tok::Sym(s),
                        line,
                        col,
                    });
                    i += s.chars().count();
                }
                None => {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("unexpected character {c:?}"),
                    ))
                }
            }
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    Ok(lines)
}

/// A cursor over the tokens of one line.
pub struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// An error located at the current token, or just past the last one.
    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        match self.toks.get(self.pos) {
            Some(t) => ParseError::new(t.line, t.col, msg),
            None => {
                let (line, col) = self
                    .toks
                    .last()
                    .map(|t| (t.line, t.col + tok_width(&t.tok)))
                    .unwrap_or((1, 1));
                ParseError::new(line, col, msg)
            }
        }
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(x)) if *x == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    pub fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(x)) if x == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{kw}`")))
        }
    }

    pub fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn expect_int(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(*n)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

fn tok_width(t: &Tok) -> usize {
    match t {
        Tok::Ident(s) => s.chars().count(),
        Tok::Int(n) => n.to_string().len(),
        Tok::Str(s) => s.chars().count() + 2,
        Tok::Sym(s) => s.chars().count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions() {
        let lines = tokenize("# comment\n\nconf g = \"ab\" |> 0\n  trans t pre $^3 q$$").unwrap();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0][0].line, 3);
        assert_eq!(lines[0][3].tok, Tok::Str("ab".into()));
        assert_eq!(lines[0][4].tok, Tok::Sym("|>"));
        assert_eq!(lines[1][0].col, 3);
        assert_eq!(lines[1][3].tok, Tok::Ident("$".into()));
        assert_eq!(lines[1][5].tok, Tok::Int(3));
        assert_eq!(lines[1].len(), 9);
    }

    #[test]
    fn bad_character() {
        let e = tokenize("conf x = ;").unwrap_err();
        assert_eq!((e.line, e.col), (1, 10));
    }
}
