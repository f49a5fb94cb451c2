//! Concrete syntax for terms and signatures.
//!
//! ```text
//! term := seq
//! seq  := ten (";" ten)*
//! ten  := atom ("*" atom)*
//! atom := NAME | "id" WORD | "swap" WORD WORD | "tr" WORD "(" term ")" | "(" term ")"
//! WORD := NAT | "[" NAME ("," NAME)* "]"
//! ```
//!
//! Inside a bracketed word `_` stands for an anonymous wire, which is how the
//! printer renders words mixing plain and labelled wires. `#` starts a comment
//! that runs to the end of the line.

use super::{Object, Signature, Term, TermError, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Nat(usize),
    Semi,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Arrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Nat(n) => format!("`{n}`"),
            Tok::Semi => "`;`".into(),
            Tok::Star => "`*`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> TermError {
    TermError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Spanned>, TermError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            Tok::Nat(s.parse().map_err(|_| syntax(l, col, "number too large"))?)
        } else if is_name_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| is_name_char(**d)) {
                s.push(d);
                bump(&mut chars);
            }
            Tok::Name(s)
        } else {
            bump(&mut chars);
            match c {
                ';' => Tok::Semi,
                '*' => Tok::Star,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ':' => Tok::Colon,
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars);
                    Tok::Arrow
                }
                other => return Err(syntax(l, col, format!("unexpected character `{other}`"))),
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, TermError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> TermError {
        let t = &self.toks[self.pos];
        syntax(t.line, t.column, message)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), TermError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            )))
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        let mut t = self.tensor()?;
        while *self.peek() == Tok::Semi {
            self.next();
            t = t.seq(self.tensor()?);
        }
        Ok(t)
    }

    fn tensor(&mut self) -> Result<Term, TermError> {
        let mut t = self.atom()?;
        while *self.peek() == Tok::Star {
            self.next();
            t = t.tensor(self.atom()?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek().clone() {
            Tok::Name(n) if n == "id" => {
                self.next();
                Ok(Term::Id(self.word()?))
            }
            Tok::Name(n) if n == "swap" => {
                self.next();
                let m = self.word()?;
                let n = self.word()?;
                Ok(Term::Swap(m, n))
            }
            Tok::Name(n) if n == "tr" => {
                self.next();
                let x = self.word()?;
                self.expect(Tok::LParen)?;
                let body = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Term::trace(x, body))
            }
            Tok::Name(n) if n == "_" => Err(self.error_here("`_` is not a generator name")),
            Tok::Name(n) => {
                self.next();
                Ok(Term::gen(&n))
            }
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => Err(self.error_here(format!("expected a term, found {}", other.describe()))),
        }
    }

    fn word(&mut self) -> Result<Word, TermError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.next();
                Ok(Word::n(n))
            }
            Tok::LBracket => {
                self.next();
                let mut objs = vec![self.object()?];
                while *self.peek() == Tok::Comma {
                    self.next();
                    objs.push(self.object()?);
                }
                self.expect(Tok::RBracket)?;
                Ok(Word(objs))
            }
            other => Err(self.error_here(format!(
                "expected an object word, found {}",
                other.describe()
            ))),
        }
    }

    fn object(&mut self) -> Result<Object, TermError> {
        match self.peek().clone() {
            Tok::Name(n) if n == "_" => {
                self.next();
                Ok(Object::Wire)
            }
            Tok::Name(n) => {
                self.next();
                Ok(Object::named(&n))
            }
            other => Err(self.error_here(format!(
                "expected an object name, found {}",
                other.describe()
            ))),
        }
    }

    fn name(&mut self) -> Result<String, TermError> {
        match self.peek().clone() {
            Tok::Name(n) => {
                self.next();
                Ok(n)
            }
            other => Err(self.error_here(format!("expected a name, found {}", other.describe()))),
        }
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn finish(&self) -> Result<(), TermError> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.error_here(format!("unexpected {}", self.peek().describe())))
        }
    }
}

/// Parses a term without consulting a signature.
pub fn parse_term_unchecked(text: &str) -> Result<Term, TermError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses a term and checks that it is well typed over `sig`.
pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, TermError> {
    let t = parse_term_unchecked(text)?;
    t.type_of(sig)?;
    Ok(t)
}

/// Parses a signature file: one `name : WORD -> WORD` declaration per line,
/// optionally preceded by an `objects: A, B, …` line for labelled wires.
pub fn parse_signature(text: &str) -> Result<Signature, TermError> {
    let mut sig = Signature::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let shift = |e: TermError| match e {
            TermError::Syntax {
                column, message, ..
            } => TermError::Syntax {
                line,
                column,
                message,
            },
            other => other,
        };
        let mut p = Parser::new(raw).map_err(shift)?;
        if p.at_eof() {
            continue;
        }
        let name = p.name().map_err(shift)?;
        p.expect(Tok::Colon).map_err(shift)?;
        if name == "objects" {
            let mut objs = Vec::new();
            while !p.at_eof() {
                objs.push(p.name().map_err(shift)?);
                if *p.peek() == Tok::Comma {
                    p.next();
                }
            }
            let mut with_objs = Signature::with_objects(objs);
            with_objs.extend(&sig)?;
            sig = with_objs;
            continue;
        }
        let dom = p.word().map_err(shift)?;
        p.expect(Tok::Arrow).map_err(shift)?;
        let cod = p.word().map_err(shift)?;
        p.finish().map_err(shift)?;
        sig.add(&name, dom, cod)?;
    }
    Ok(sig)
}

/// Moves the position of a syntax error reported for a fragment starting at
/// `(line, column)` of a larger text.
pub(crate) fn relocate(e: TermError, line: usize, column: usize) -> TermError {
    match e {
        TermError::Syntax {
            line: l,
            column: c,
            message,
        } => TermError::Syntax {
            line: line + l - 1,
            column: if l == 1 { column + c - 1 } else { c },
            message,
        },
        other => other,
    }
}
