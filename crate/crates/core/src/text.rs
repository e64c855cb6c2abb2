//! Small line-oriented tokenizer shared by the fixture file formats.

use crate::error::{Error, Result};

/// A whitespace-delimited token with its 1-based column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// A significant line: comment stripped, non-empty.
#[derive(Clone, Debug)]
pub struct Line<'a> {
    pub number: usize,
    pub raw: &'a str,
    pub tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    pub fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::parse(self.number, column, message)
    }

    pub fn expect(&self, index: usize, what: &str) -> Result<Token<'a>> {
        self.tokens.get(index).copied().ok_or_else(|| {
            let col = self.raw.chars().count() + 1;
            self.error(col, format!("expected {what}"))
        })
    }

    pub fn expect_literal(&self, index: usize, literal: &str) -> Result<()> {
        let t = self.expect(index, &format!("`{literal}`"))?;
        if t.text != literal {
            return Err(self.error(
                t.column,
                format!("expected `{literal}`, found `{}`", t.text),
            ));
        }
        Ok(())
    }

    pub fn expect_end(&self, index: usize) -> Result<()> {
        match self.tokens.get(index) {
            Some(t) => Err(self.error(t.column, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }

    /// Text of the line starting at token `index`, with that token's column.
    pub fn rest(&self, index: usize) -> Option<(&'a str, usize)> {
        let t = self.tokens.get(index)?;
        let byte = char_to_byte(self.raw, t.column - 1);
        Some((self.raw[byte..].trim_end(), t.column))
    }
}

fn char_to_byte(s: &str, chars: usize) -> usize {
    s.char_indices().nth(chars).map_or(s.len(), |(b, _)| b)
}

/// Splits input into significant lines; `#` starts a comment.
pub fn lines(input: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, full) in input.lines().enumerate() {
        let raw = match full.find('#') {
            Some(p) => &full[..p],
            None => full,
        };
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        for (ci, (bi, ch)) in raw.char_indices().enumerate() {
            if ch.is_whitespace() {
                if let Some((sb, sc)) = start.take() {
                    tokens.push(Token {
                        text: &raw[sb..bi],
                        column: sc + 1,
                    });
                }
            } else if start.is_none() {
                start = Some((bi, ci));
            }
        }
        if let Some((sb, sc)) = start {
            tokens.push(Token {
                text: &raw[sb..],
                column: sc + 1,
            });
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                raw,
                tokens,
            });
        }
    }
    out
}

/// Splits `s` (starting at `column`) on top-level `+`/`-` signs into signed
/// terms, returning `(negated, term_text, term_column)`.
pub fn signed_terms(s: &str, column: usize) -> Vec<(bool, String, usize)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut cur_col = column;
    for (ci, ch) in s.chars().enumerate() {
        let col = column + ci;
        // a sign directly after `/` or `*` or at term start belongs to the term
        let at_term_start = cur.trim().is_empty();
        let after_op = cur.trim_end().ends_with(['*', '/']);
        if (ch == '+' || ch == '-') && !at_term_start && !after_op {
            out.push((neg, cur.trim().to_string(), cur_col));
            cur.clear();
            neg = ch == '-';
            cur_col = col + 1;
        } else if (ch == '+' || ch == '-') && at_term_start && !after_op {
            if ch == '-' {
                neg = !neg;
            }
            cur_col = col + 1;
        } else {
            if cur.trim().is_empty() && !ch.is_whitespace() {
                cur_col = col;
            }
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string(), cur_col));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_have_columns() {
        let ls = lines("# header\n\n  foo  bar # trailing\nbaz");
        assert_eq!(ls.len(), 2);
        assert_eq!(ls[0].number, 3);
        assert_eq!(
            ls[0].tokens[0],
            Token {
                text: "foo",
                column: 3
            }
        );
        assert_eq!(
            ls[0].tokens[1],
            Token {
                text: "bar",
                column: 8
            }
        );
        assert_eq!(ls[1].tokens[0].text, "baz");
    }

    #[test]
    fn signed_term_split() {
        let t = signed_terms("2*a - 1/2*b + -c", 5);
        let texts: Vec<(bool, &str)> = t.iter().map(|(n, s, _)| (*n, s.as_str())).collect();
        assert_eq!(texts, vec![(false, "2*a"), (true, "1/2*b"), (true, "c")]);
        assert_eq!(t[0].2, 5);
    }
}
