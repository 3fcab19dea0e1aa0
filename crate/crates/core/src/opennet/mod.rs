//! Open Petri nets with input places.
//!
//! The environment may drop tokens on input places at any time.  A marked
//! net is a state; its sort is the set of input places, and contexts are
//! multisets of tokens on those places.

mod bundled;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{CoreError, CoreResult};
use crate::multiset::{multisets_up_to, Multiset};
use crate::system::{Instance, Transition, TransitionOf};

pub use bundled::{bundled, BUNDLED_SOURCE};
pub use parse::{parse_nets, NetModel};

pub type Marking = Multiset<String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetTransition {
    pub name: String,
    pub label: String,
    pub pre: Marking,
    pub post: Marking,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetDef {
    pub name: String,
    pub places: Vec<String>,
    pub inputs: BTreeSet<String>,
    pub transitions: Vec<NetTransition>,
}

impl NetDef {
    pub fn sort(&self) -> InputSort {
        InputSort(self.inputs.clone())
    }

    /// Largest number of tokens any transition takes from `place`.
    pub fn max_pre(&self, place: &str) -> u32 {
        self.transitions
            .iter()
            .map(|t| t.pre.count(&place.to_string()))
            .max()
            .unwrap_or(0)
    }
}

/// A net together with a marking.
#[derive(Clone, Debug)]
pub struct MarkedNet {
    pub net: Arc<NetDef>,
    pub marking: Marking,
}

impl MarkedNet {
    pub fn new(net: &Arc<NetDef>, marking: Marking) -> Self {
        MarkedNet {
            net: net.clone(),
            marking,
        }
    }

    fn key(&self) -> (&str, &Marking) {
        (&self.net.name, &self.marking)
    }
}

impl PartialEq for MarkedNet {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for MarkedNet {}

impl PartialOrd for MarkedNet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedNet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl Hash for MarkedNet {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.key().hash(h)
    }
}

impl fmt::Display for MarkedNet {
    /// Internal places first, then input places.  A marking with no
    /// internal token is qualified by the net name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut internal = String::new();
        let mut input = String::new();
        for (p, n) in self.marking.iter() {
            let out = if self.net.inputs.contains(p) {
                &mut input
            } else {
                &mut internal
            };
            out.push_str(p);
            if n > 1 {
                out.push_str(&format!("^{n}"));
            }
        }
        if internal.is_empty() {
            let shown = if input.is_empty() { "∅" } else { &input };
            write!(f, "{}:{shown}", self.net.name)
        } else {
            write!(f, "{internal}{input}")
        }
    }
}

/// The set of input places.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct InputSort(pub BTreeSet<String>);

impl fmt::Display for InputSort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(String::as_str).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Tokens added on input places.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TokenCtx {
    pub sort: InputSort,
    pub tokens: Marking,
}

impl fmt::Display for TokenCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tokens)
    }
}

/// A transition label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Label(pub String);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let greek = match self.0.as_str() {
            "alpha" => "α",
            "beta" => "β",
            "gamma" => "γ",
            "delta" => "δ",
            "tau" => "τ",
            "chi" => "χ",
            other => other,
        };
        write!(f, "{greek}")
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NetInstance;

fn check_sort(expected: &InputSort, found: &InputSort) -> CoreResult<()> {
    if expected == found {
        Ok(())
    } else {
        Err(CoreError::SortMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        })
    }
}

impl Instance for NetInstance {
    type Sort = InputSort;
    type Ctx = TokenCtx;
    type Obs = Label;
    type State = MarkedNet;

    fn name(&self) -> &'static str {
        "net"
    }

    fn sort_of(&self, p: &MarkedNet) -> InputSort {
        p.net.sort()
    }

    fn ctx_source(&self, c: &TokenCtx) -> InputSort {
        c.sort.clone()
    }

    fn ctx_target(&self, c: &TokenCtx) -> InputSort {
        c.sort.clone()
    }

    fn identity(&self, s: &InputSort) -> TokenCtx {
        TokenCtx {
            sort: s.clone(),
            tokens: Marking::new(),
        }
    }

    fn compose(&self, c: &TokenCtx, d: &TokenCtx) -> CoreResult<TokenCtx> {
        check_sort(&c.sort, &d.sort)?;
        Ok(TokenCtx {
            sort: c.sort.clone(),
            tokens: c.tokens.sum(&d.tokens),
        })
    }

    fn residual(&self, c1: &TokenCtx, c2: &TokenCtx) -> Option<TokenCtx> {
        if c1.sort != c2.sort {
            return None;
        }
        Some(TokenCtx {
            sort: c1.sort.clone(),
            tokens: c2.tokens.checked_minus(&c1.tokens)?,
        })
    }

    fn apply(&self, c: &TokenCtx, p: &MarkedNet) -> CoreResult<MarkedNet> {
        check_sort(&c.sort, &p.net.sort())?;
        Ok(MarkedNet::new(&p.net, p.marking.sum(&c.tokens)))
    }

    fn ctx_size(&self, c: &TokenCtx) -> usize {
        c.tokens.size()
    }

    /// For each transition, the tokens it lacks, provided they can all
    /// come from input places.
    fn symbolic_transitions(&self, p: &MarkedNet) -> Vec<TransitionOf<Self>> {
        let sort = p.net.sort();
        let mut out = Vec::new();
        for t in &p.net.transitions {
            let used = p.marking.intersection(&t.pre);
            let need = t.pre.minus(&used);
            if need.support().all(|s| p.net.inputs.contains(s)) {
                let rest = p.marking.minus(&used);
                out.push(Transition::new(
                    TokenCtx {
                        sort: sort.clone(),
                        tokens: need,
                    },
                    Label(t.label.clone()),
                    MarkedNet::new(&p.net, t.post.sum(&rest)),
                ));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn rule_lookup(&self, x: &TokenCtx, o1: &Label, o2: &Label) -> Option<TokenCtx> {
        (o1 == o2).then(|| x.clone())
    }

    fn contexts_from(&self, s: &InputSort, k: usize) -> Vec<TokenCtx> {
        let places: Vec<String> = s.0.iter().cloned().collect();
        multisets_up_to(&places, k)
            .into_iter()
            .map(|tokens| TokenCtx {
                sort: s.clone(),
                tokens,
            })
            .collect()
    }

    fn base_transitions(&self, p: &MarkedNet) -> Vec<(Label, MarkedNet)> {
        let mut out: Vec<_> = p
            .net
            .transitions
            .iter()
            .filter_map(|t| {
                let rest = p.marking.checked_minus(&t.pre)?;
                Some((
                    Label(t.label.clone()),
                    MarkedNet::new(&p.net, t.post.sum(&rest)),
                ))
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Per input place, the most tokens any single transition consumes
    /// from it; summed over places and maximised over the nets present.
    fn sufficient_bound(&self, universe: &[MarkedNet]) -> usize {
        let mut nets: Vec<&Arc<NetDef>> = universe.iter().map(|p| &p.net).collect();
        nets.sort_by(|a, b| a.name.cmp(&b.name));
        nets.dedup_by(|a, b| a.name == b.name);
        nets.iter()
            .map(|n| {
                n.inputs
                    .iter()
                    .map(|i| n.max_pre(i) as usize)
                    .sum::<usize>()
            })
            .max()
            .unwrap_or(0)
    }
}
