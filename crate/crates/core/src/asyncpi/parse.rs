//! Text format:
//!
//! ```text
//! names a b
//! proc p = tau.new y. 'y<a> + a(b).'a<b> @1
//! ```
//!
//! `'a<b>` is an output, `a(b).P` an input, `tau.P` a silent prefix,
//! `new b. P` a restriction and `!P` a replicated choice.  `|` binds
//! weaker than `+`, which binds weaker than prefixes.  Free names are
//! numbered in declaration order, then in order of first use.  The
//! interface `@n` defaults to the largest free name.

use std::sync::Arc;

use super::term::{Guard, Name, Proc};
use super::{PiInstance, PiState};
use crate::error::ParseError;
use crate::lex::{tokenize, Cursor, Tok};

#[derive(Clone, Debug)]
pub struct PiModel {
    pub instance: PiInstance,
    pub states: Vec<(String, PiState)>,
}

impl PiModel {
    pub fn get(&self, name: &str) -> Option<&PiState> {
        self.states.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

const KEYWORDS: &[&str] = &["tau", "τ", "new", "ν", "names", "proc"];

struct Scope<'a> {
    bound: Vec<String>,
    names: &'a mut Vec<String>,
}

impl Scope<'_> {
    fn resolve(&mut self, id: &str) -> Name {
        if let Some(pos) = self.bound.iter().rposition(|b| b == id) {
            return Name::Bound((self.bound.len() - 1 - pos) as u32);
        }
        match self.names.iter().position(|n| n == id) {
            Some(i) => Name::Free(i as u32 + 1),
            None => {
                self.names.push(id.to_string());
                Name::Free(self.names.len() as u32)
            }
        }
    }
}

fn ident(cur: &mut Cursor, what: &str) -> Result<String, ParseError> {
    let id = cur.expect_ident(what)?;
    if KEYWORDS.contains(&id.as_str()) {
        return Err(cur.error(format!("`{id}` is reserved")));
    }
    Ok(id)
}

fn par(cur: &mut Cursor, sc: &mut Scope) -> Result<Proc, ParseError> {
    let mut ps = vec![sum(cur, sc)?];
    while cur.eat_sym("|") {
        ps.push(sum(cur, sc)?);
    }
    Ok(Proc::par(ps))
}

fn sum(cur: &mut Cursor, sc: &mut Scope) -> Result<Proc, ParseError> {
    let first_err = cur.error("sum operands must be guarded");
    let first = unary(cur, sc)?;
    if !matches!(cur.peek(), Some(Tok::Sym("+"))) {
        return Ok(first);
    }
    let mut guards = Vec::new();
    let mut push = |p: Proc, err: ParseError| -> Result<(), ParseError> {
        match p {
            Proc::Nil => Ok(()),
            Proc::Sum(gs) => {
                guards.extend(gs);
                Ok(())
            }
            _ => Err(err),
        }
    };
    push(first, first_err)?;
    while cur.eat_sym("+") {
        let err = cur.error("sum operands must be guarded");
        let p = unary(cur, sc)?;
        push(p, err)?;
    }
    Ok(Proc::sum(guards))
}

fn unary(cur: &mut Cursor, sc: &mut Scope) -> Result<Proc, ParseError> {
    if cur.eat_keyword("tau") || cur.eat_keyword("τ") {
        cur.expect_sym(".")?;
        return Ok(Proc::tau(unary(cur, sc)?));
    }
    if cur.eat_keyword("new") || cur.eat_keyword("ν") {
        let b = ident(cur, "a bound name")?;
        cur.expect_sym(".")?;
        sc.bound.push(b);
        let body = unary(cur, sc);
        sc.bound.pop();
        return Ok(Proc::res(body?));
    }
    if cur.eat_sym("!") {
        let err = cur.error("replication needs a guarded choice");
        let body = unary(cur, sc)?;
        if !body.is_guarded_sum() {
            return Err(err);
        }
        return Ok(Proc::Bang(Arc::new(body)));
    }
    if cur.eat_sym("'") {
        let a = ident(cur, "a channel name")?;
        cur.expect_sym("<")?;
        let b = ident(cur, "a name")?;
        cur.expect_sym(">")?;
        return Ok(Proc::Out(sc.resolve(&a), sc.resolve(&b)));
    }
    if matches!(cur.peek(), Some(Tok::Int(0))) {
        cur.next();
        return Ok(Proc::Nil);
    }
    if cur.eat_sym("(") {
        let p = par(cur, sc)?;
        cur.expect_sym(")")?;
        return Ok(p);
    }
    if let Some(Tok::Ident(_)) = cur.peek() {
        let a = ident(cur, "a channel name")?;
        let chan = sc.resolve(&a);
        cur.expect_sym("(")?;
        let b = ident(cur, "a bound name")?;
        cur.expect_sym(")")?;
        cur.expect_sym(".")?;
        sc.bound.push(b);
        let body = unary(cur, sc);
        sc.bound.pop();
        return Ok(Proc::Sum(vec![Guard::In(chan, Arc::new(body?))]));
    }
    Err(cur.error("expected a process"))
}

/// Parses a single process term against a name table.
pub fn parse_proc(src: &str, names: &mut Vec<String>) -> Result<Proc, ParseError> {
    let lines = tokenize(src)?;
    let toks: Vec<_> = lines.into_iter().flatten().collect();
    let mut cur = Cursor::new(&toks);
    let mut sc = Scope {
        bound: Vec::new(),
        names,
    };
    let p = par(&mut cur, &mut sc)?;
    cur.expect_end()?;
    Ok(p)
}

pub fn parse_pi(src: &str) -> Result<PiModel, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut states: Vec<(String, PiState)> = Vec::new();
    for line in tokenize(src)? {
        let mut cur = Cursor::new(&line);
        if cur.eat_keyword("names") {
            while !cur.at_end() {
                let n = ident(&mut cur, "a name")?;
                if names.contains(&n) {
                    return Err(cur.error(format!("name `{n}` declared twice")));
                }
                names.push(n);
            }
        } else if cur.eat_keyword("proc") {
            let id = cur.expect_ident("a process name")?;
            if states.iter().any(|(n, _)| *n == id) {
                return Err(cur.error(format!("duplicate process `{id}`")));
            }
            cur.expect_sym("=")?;
            let mut sc = Scope {
                bound: Vec::new(),
                names: &mut names,
            };
            let p = par(&mut cur, &mut sc)?;
            let max = p.max_free();
            let sort = if cur.eat_sym("@") {
                let n = cur.expect_int("an interface size")?;
                if n < max {
                    return Err(cur.error(format!("interface {n} does not cover free name {max}")));
                }
                n
            } else {
                max
            };
            cur.expect_end()?;
            states.push((id, PiState::new(p, sort)));
        } else {
            return Err(cur.error("expected `names` or `proc`"));
        }
    }
    Ok(PiModel {
        instance: PiInstance::with_names(names),
        states,
    })
}
