//! Text format:
//!
//! ```text
//! alphabet a b
//! conf g1 = "" |> "a"."ab".0 + "ab"."".0
//! ```
//!
//! The empty word may also be written `e`, `eps` or `ε`.

use std::collections::BTreeSet;

use super::{Config, SwcInstance, SwcProc};
use crate::error::ParseError;
use crate::lex::{tokenize, Cursor, Tok};

#[derive(Clone, Debug)]
pub struct SwcModel {
    pub instance: SwcInstance,
    pub states: Vec<(String, Config)>,
}

impl SwcModel {
    pub fn get(&self, name: &str) -> Option<&Config> {
        self.states.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

fn word(cur: &mut Cursor) -> Result<Option<String>, ParseError> {
    match cur.peek() {
        Some(Tok::Str(s)) => {
            let s = s.clone();
            cur.next();
            Ok(Some(s))
        }
        Some(Tok::Ident(s)) if s == "e" || s == "eps" || s == "ε" => {
            cur.next();
            Ok(Some(String::new()))
        }
        _ => Ok(None),
    }
}

fn proc(cur: &mut Cursor) -> Result<SwcProc, ParseError> {
    let mut p = term(cur)?;
    while cur.eat_sym("+") {
        let q = term(cur)?;
        p = SwcProc::sum(p, q);
    }
    Ok(p)
}

fn term(cur: &mut Cursor) -> Result<SwcProc, ParseError> {
    if matches!(cur.peek(), Some(Tok::Int(0))) {
        cur.next();
        return Ok(SwcProc::Nil);
    }
    if cur.eat_sym("(") {
        let p = proc(cur)?;
        cur.expect_sym(")")?;
        return Ok(p);
    }
    match word(cur)? {
        Some(w) => {
            cur.expect_sym(".")?;
            Ok(SwcProc::prefix(&w, term(cur)?))
        }
        None => Err(cur.error("expected `0`, a word prefix or `(`")),
    }
}

pub fn parse_swc(src: &str) -> Result<SwcModel, ParseError> {
    let mut alphabet: Option<Vec<char>> = None;
    let mut states: Vec<(String, Config)> = Vec::new();
    let mut used: BTreeSet<char> = BTreeSet::new();
    for line in tokenize(src)? {
        let mut cur = Cursor::new(&line);
        if cur.eat_keyword("alphabet") {
            let mut letters = Vec::new();
            while !cur.at_end() {
                let s = cur.expect_ident("a letter")?;
                let mut cs = s.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => letters.push(c),
                    _ => return Err(cur.error("alphabet symbols are single characters")),
                }
            }
            alphabet = Some(letters);
        } else if cur.eat_keyword("conf") {
            let name = cur.expect_ident("a configuration name")?;
            if states.iter().any(|(n, _)| *n == name) {
                return Err(cur.error(format!("duplicate configuration `{name}`")));
            }
            cur.expect_sym("=")?;
            let res = word(&mut cur)?.ok_or_else(|| cur.error("expected a resource word"))?;
            if !(cur.eat_sym("|>") || cur.eat_sym("▷")) {
                return Err(cur.error("expected `|>`"));
            }
            let p = proc(&mut cur)?;
            cur.expect_end()?;
            used.extend(res.chars());
            collect_letters(&p, &mut used);
            if let Some(alpha) = &alphabet {
                if let Some(c) = used.iter().find(|c| !alpha.contains(c)) {
                    return Err(cur.error(format!("letter {c:?} is not in the alphabet")));
                }
            }
            states.push((name, Config::new(&res, p)));
        } else {
            return Err(cur.error("expected `alphabet` or `conf`"));
        }
    }
    let alphabet = alphabet.unwrap_or_else(|| {
        let mut a: BTreeSet<char> = ['a', 'b'].into_iter().collect();
        a.extend(used.iter().copied());
        a.into_iter().collect()
    });
    Ok(SwcModel {
        instance: SwcInstance::new(alphabet),
        states,
    })
}

fn collect_letters(p: &SwcProc, out: &mut BTreeSet<char>) {
    match p {
        SwcProc::Nil => {}
        SwcProc::Prefix(w, q) => {
            out.extend(w.chars());
            collect_letters(q, out);
        }
        SwcProc::Sum(l, r) => {
            collect_letters(l, out);
            collect_letters(r, out);
        }
    }
}
