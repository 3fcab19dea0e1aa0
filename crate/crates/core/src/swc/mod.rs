//! Sequential processes reading a shared word of resources.
//!
//! A configuration `u▷p` runs process `p` against the resource word `u`.
//! A prefix `w.p` may fire when `w` is a prefix of the resources, which are
//! read but never consumed.  Contexts are words appended to the resources.

mod parse;

use std::fmt;
use std::sync::Arc;

use crate::error::CoreResult;
use crate::system::{Instance, Transition, TransitionOf};

pub use parse::{parse_swc, SwcModel};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SwcProc {
    Nil,
    Prefix(String, Arc<SwcProc>),
    Sum(Arc<SwcProc>, Arc<SwcProc>),
}

impl SwcProc {
    pub fn prefix(w: &str, p: SwcProc) -> SwcProc {
        SwcProc::Prefix(w.to_string(), Arc::new(p))
    }

    pub fn sum(p: SwcProc, q: SwcProc) -> SwcProc {
        SwcProc::Sum(Arc::new(p), Arc::new(q))
    }

    /// Length of the longest prefix word.
    pub fn max_word(&self) -> usize {
        match self {
            SwcProc::Nil => 0,
            SwcProc::Prefix(w, p) => w.chars().count().max(p.max_word()),
            SwcProc::Sum(p, q) => p.max_word().max(q.max_word()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SwcProc::Nil => 0,
            SwcProc::Prefix(_, p) => 1 + p.depth(),
            SwcProc::Sum(p, q) => p.depth().max(q.depth()),
        }
    }
}

pub(crate) fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "ε"
    } else {
        w
    }
}

impl fmt::Display for SwcProc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwcProc::Nil => write!(f, "0"),
            SwcProc::Prefix(w, p) => match **p {
                SwcProc::Sum(..) => write!(f, "{}.({p})", show_word(w)),
                _ => write!(f, "{}.{p}", show_word(w)),
            },
            SwcProc::Sum(p, q) => match **q {
                SwcProc::Sum(..) => write!(f, "{p} + ({q})"),
                _ => write!(f, "{p} + {q}"),
            },
        }
    }
}

/// A configuration `res ▷ proc`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Config {
    pub res: String,
    pub proc: Arc<SwcProc>,
}

impl Config {
    pub fn new(res: &str, proc: SwcProc) -> Self {
        Config {
            res: res.to_string(),
            proc: Arc::new(proc),
        }
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}▷{}", show_word(&self.res), self.proc)
    }
}

/// The single sort.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Unit;

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "◦")
    }
}

/// The only observation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bullet;

impl fmt::Display for Bullet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "•")
    }
}

/// A context: the word appended to the resources.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(pub String);

impl Word {
    pub fn new(w: &str) -> Self {
        Word(w.to_string())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", show_word(&self.0))
    }
}

#[derive(Clone, Debug)]
pub struct SwcInstance {
    alphabet: Vec<char>,
}

impl Default for SwcInstance {
    fn default() -> Self {
        SwcInstance {
            alphabet: vec!['a', 'b'],
        }
    }
}

impl SwcInstance {
    pub fn new(alphabet: impl IntoIterator<Item = char>) -> Self {
        let mut alphabet: Vec<char> = alphabet.into_iter().collect();
        alphabet.sort();
        alphabet.dedup();
        SwcInstance { alphabet }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }
}

fn symbolic(res: &str, p: &SwcProc, out: &mut Vec<TransitionOf<SwcInstance>>) {
    match p {
        SwcProc::Nil => {}
        SwcProc::Prefix(w, q) => {
            if res.starts_with(w.as_str()) {
                out.push(Transition::new(
                    Word::new(""),
                    Bullet,
                    Config {
                        res: res.to_string(),
                        proc: q.clone(),
                    },
                ));
            } else if let Some(v) = w.strip_prefix(res) {
                out.push(Transition::new(
                    Word::new(v),
                    Bullet,
                    Config {
                        res: w.clone(),
                        proc: q.clone(),
                    },
                ));
            }
        }
        SwcProc::Sum(l, r) => {
            symbolic(res, l, out);
            symbolic(res, r, out);
        }
    }
}

fn steps(res: &str, p: &SwcProc, out: &mut Vec<(Bullet, Config)>) {
    match p {
        SwcProc::Nil => {}
        SwcProc::Prefix(w, q) => {
            if res.starts_with(w.as_str()) {
                out.push((
                    Bullet,
                    Config {
                        res: res.to_string(),
                        proc: q.clone(),
                    },
                ));
            }
        }
        SwcProc::Sum(l, r) => {
            steps(res, l, out);
            steps(res, r, out);
        }
    }
}

impl Instance for SwcInstance {
    type Sort = Unit;
    type Ctx = Word;
    type Obs = Bullet;
    type State = Config;

    fn name(&self) -> &'static str {
        "swc"
    }

    fn sort_of(&self, _p: &Config) -> Unit {
        Unit
    }

    fn ctx_source(&self, _c: &Word) -> Unit {
        Unit
    }

    fn ctx_target(&self, _c: &Word) -> Unit {
        Unit
    }

    fn identity(&self, _s: &Unit) -> Word {
        Word::new("")
    }

    fn compose(&self, c: &Word, d: &Word) -> CoreResult<Word> {
        Ok(Word(format!("{}{}", c.0, d.0)))
    }

    fn residual(&self, c1: &Word, c2: &Word) -> Option<Word> {
        c2.0.strip_prefix(c1.0.as_str()).map(Word::new)
    }

    fn apply(&self, c: &Word, p: &Config) -> CoreResult<Config> {
        Ok(Config {
            res: format!("{}{}", p.res, c.0),
            proc: p.proc.clone(),
        })
    }

    fn ctx_size(&self, c: &Word) -> usize {
        c.0.chars().count()
    }

    fn symbolic_transitions(&self, p: &Config) -> Vec<TransitionOf<Self>> {
        let mut out = Vec::new();
        symbolic(&p.res, &p.proc, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn rule_lookup(&self, x: &Word, _o1: &Bullet, _o2: &Bullet) -> Option<Word> {
        Some(x.clone())
    }

    fn contexts_from(&self, _s: &Unit, k: usize) -> Vec<Word> {
        let mut out = vec![String::new()];
        let mut layer = vec![String::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &layer {
                for &a in &self.alphabet {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.into_iter().map(Word).collect()
    }

    fn base_transitions(&self, p: &Config) -> Vec<(Bullet, Config)> {
        let mut out = Vec::new();
        steps(&p.res, &p.proc, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Firing depends only on the first `L` resource letters, `L` the
    /// longest prefix word, so longer contexts add nothing.
    fn sufficient_bound(&self, universe: &[Config]) -> usize {
        universe
            .iter()
            .map(|c| c.proc.max_word())
            .max()
            .unwrap_or(0)
    }
}
