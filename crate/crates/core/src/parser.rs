//! Concrete syntax for terms and definition files.
//!
//! ```text
//! term    := abs | app
//! abs     := ('\' | 'λ') ident+ '.' term
//! app     := atom+ abs?
//! atom    := ident | '(' term ')' | '<' term ',' term '>'
//! program := (ident '=' term ';')*
//! ```
//!
//! `--` starts a comment running to the end of the line. Names bound to a
//! definition are inlined with capture-avoiding substitution; any other
//! unbound identifier is a free variable.

use std::fmt;

use thiserror::Error;

use crate::combinators::mk_pair;
use crate::term::{Ident, Substitution, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    /// Character offset from the start of the input.
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: expected {expected}, found {found}")]
    Syntax {
        position: Position,
        expected: String,
        found: String,
    },
    #[error("duplicate definition of `{name}` at {position}")]
    DuplicateName { name: Ident, position: Position },
}

impl ParseError {
    pub fn position(&self) -> Position {
        match self {
            ParseError::Syntax { position, .. } | ParseError::DuplicateName { position, .. } => {
                *position
            }
        }
    }
}

/// An ordered list of named definitions. Bodies are stored with every earlier
/// definition already inlined.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    defs: Vec<(Ident, Term)>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &Ident) -> Option<&Term> {
        self.defs.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn contains(&self, name: &Ident) -> bool {
        self.get(name).is_some()
    }

    pub fn definitions(&self) -> &[(Ident, Term)] {
        &self.defs
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    /// Adds a definition. The body is taken as-is; it is not resolved
    /// against earlier definitions.
    pub fn define(&mut self, name: impl Into<Ident>, body: Term) -> Result<(), Ident> {
        let name = name.into();
        if self.contains(&name) {
            return Err(name);
        }
        self.defs.push((name, body));
        Ok(())
    }

    /// Definitions of `self` followed by those of `other`; names must not clash.
    pub fn extend(&mut self, other: &Program) -> Result<(), Ident> {
        for (name, body) in &other.defs {
            self.define(name.clone(), body.clone())?;
        }
        Ok(())
    }

    /// Inlines every definition referenced freely in `t`.
    pub fn resolve(&self, t: &Term) -> Term {
        let sub: Substitution = t
            .free_vars()
            .into_iter()
            .filter_map(|x| self.get(&x).map(|body| (x, body.clone())))
            .collect();
        t.substitute(&sub)
    }
}

/// Parses a term with no definitions in scope.
pub fn parse(text: &str) -> Result<Term, ParseError> {
    parse_term(text, &Program::new())
}

pub fn parse_term(text: &str, env: &Program) -> Result<Term, ParseError> {
    let mut p = Parser::new(text);
    let t = p.term()?;
    p.expect_end()?;
    Ok(env.resolve(&t))
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut p = Parser::new(text);
    let mut program = Program::new();
    loop {
        p.skip_trivia();
        if p.peek().is_none() {
            return Ok(program);
        }
        let position = p.position();
        let name = p.ident()?;
        p.expect('=', "`=`")?;
        let body = program.resolve(&p.term()?);
        p.expect(';', "`;`")?;
        if let Err(name) = program.define(name, body) {
            return Err(ParseError::DuplicateName { name, position });
        }
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    offset: usize,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn is_lambda(c: char) -> bool {
    c == '\\' || c == 'λ'
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
            offset: 0,
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> Position {
        Position {
            offset: self.offset,
            line: self.line,
            column: self.column,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        self.offset += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('-') => {
                    let mut ahead = self.chars.clone();
                    ahead.next();
                    if ahead.next() != Some('-') {
                        return;
                    }
                    while !matches!(self.chars.peek(), None | Some('\n')) {
                        self.bump();
                    }
                }
                _ => return,
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_trivia();
        self.chars.peek().copied()
    }

    fn error<T>(&mut self, expected: &str) -> Result<T, ParseError> {
        let position = self.position();
        let found = match self.chars.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_owned(),
        };
        Err(ParseError::Syntax {
            position,
            expected: expected.to_owned(),
            found,
        })
    }

    fn expect(&mut self, c: char, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error("end of input"),
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        match self.peek() {
            Some(c) if is_ident_start(c) => {
                let mut name = String::new();
                while let Some(&c) = self.chars.peek() {
                    if !is_ident_continue(c) {
                        break;
                    }
                    name.push(c);
                    self.bump();
                }
                Ok(Ident::new(&name).expect("scanned identifier is valid"))
            }
            _ => self.error("identifier"),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(c) if is_lambda(c) => self.abstraction(),
            _ => self.application(),
        }
    }

    fn abstraction(&mut self) -> Result<Term, ParseError> {
        self.bump();
        let mut binders = vec![self.ident()?];
        while matches!(self.peek(), Some(c) if is_ident_start(c)) {
            binders.push(self.ident()?);
        }
        self.expect('.', "`.` or identifier")?;
        let body = self.term()?;
        Ok(Term::lams(binders, body))
    }

    fn application(&mut self) -> Result<Term, ParseError> {
        let mut acc = match self.atom()? {
            Some(t) => t,
            None => return self.error("term"),
        };
        loop {
            if matches!(self.peek(), Some(c) if is_lambda(c)) {
                let arg = self.abstraction()?;
                return Ok(Term::app(acc, arg));
            }
            match self.atom()? {
                Some(arg) => acc = Term::app(acc, arg),
                None => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<Option<Term>, ParseError> {
        match self.peek() {
            Some(c) if is_ident_start(c) => Ok(Some(Term::Var(self.ident()?))),
            Some('(') => {
                self.bump();
                let t = self.term()?;
                self.expect(')', "`)`")?;
                Ok(Some(t))
            }
            Some('<') => {
                self.bump();
                let m = self.term()?;
                self.expect(',', "`,`")?;
                let n = self.term()?;
                self.expect('>', "`>`")?;
                Ok(Some(mk_pair(m, n)))
            }
            _ => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::{mk_f, mk_i, mk_t};
    use crate::pretty::pretty;

    fn p(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn lambda_terms() {
        assert_eq!(p("\\x.\\y.x"), mk_t());
        assert_eq!(p("λx y.x"), mk_t());
        assert_eq!(p("\\x y.y"), mk_f());
        assert_eq!(
            p("\\f.\\x.f (f x)"),
            Term::lams(
                ["f", "x"],
                Term::app(Term::var("f"), Term::app(Term::var("f"), Term::var("x")))
            )
        );
    }

    #[test]
    fn application_is_left_associative() {
        assert_eq!(
            p("a b c"),
            Term::app(Term::app(Term::var("a"), Term::var("b")), Term::var("c"))
        );
        assert_eq!(p("(a b) c"), p("a b c"));
    }

    #[test]
    fn abstraction_extends_right() {
        assert_eq!(p("\\x.x y"), Term::lam("x", p("x y")));
        assert_eq!(p("f \\x.x y"), Term::app(p("f"), p("\\x.x y")));
    }

    #[test]
    fn pair_sugar() {
        assert_eq!(p("<a, b>"), mk_pair(p("a"), p("b")));
        assert_eq!(p("<x, y>"), p("\\x'.x' x y"));
    }

    #[test]
    fn comments_and_whitespace() {
        assert_eq!(p("  -- leading\n \\x . x -- trailing"), mk_i());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("(\\x").unwrap_err();
        match err {
            ParseError::Syntax { position, .. } => assert_eq!(position.offset, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("\\.x").is_err());
        assert!(parse("a )").is_err());
        assert!(parse("x - y").is_err());
        let err = parse("a\n  ,").unwrap_err();
        assert_eq!(err.position().line, 2);
        assert_eq!(err.position().column, 3);
    }

    #[test]
    fn programs_inline_earlier_definitions() {
        let prog = parse_program("I = \\x.x;").unwrap();
        assert_eq!(prog.definitions(), &[(Ident::from("I"), mk_i())]);

        let prog = parse_program("T = \\x.\\y.x;\nP = \\x.(x T);").unwrap();
        assert_eq!(prog.get(&Ident::from("P")), Some(&p("\\x.x (\\x.\\y.x)")));
    }

    #[test]
    fn duplicate_definitions_are_rejected() {
        let err = parse_program("a = \\x.x;\na = \\y.y;").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateName { ref name, .. } if name.as_str() == "a"));
        assert_eq!(err.position().line, 2);
    }

    #[test]
    fn program_syntax_errors() {
        assert!(parse_program("a \\x.x;").is_err());
        assert!(parse_program("a = \\x.x").is_err());
        assert!(parse_program("-- only a comment\r\n\r\n").unwrap().is_empty());
    }

    #[test]
    fn bound_names_shadow_definitions() {
        let env = parse_program("n = \\z.z;").unwrap();
        assert_eq!(parse_term("\\n.n", &env).unwrap(), p("\\n.n"));
        assert_eq!(parse_term("n", &env).unwrap(), p("\\z.z"));
    }

    #[test]
    fn inlining_avoids_capture() {
        let env = parse_program("V = c x;").unwrap();
        let t = parse_term("\\x.V", &env).unwrap();
        assert!(t.alpha_eq(&p("\\y.c x")));
    }

    #[test]
    fn free_identifiers_stay_free() {
        let env = parse_program("I = \\x.x;").unwrap();
        assert_eq!(parse_term("Z nu I", &env).unwrap(), p("Z nu (\\x.x)"));
    }

    #[test]
    fn pretty_output_reparses() {
        for s in ["\\x.\\y.x", "a b c", "a (b c)", "(\\x.x) (\\y.y)", "\\f.\\x.f (f x)"] {
            assert_eq!(p(&pretty(&p(s))), p(s));
        }
    }
}
