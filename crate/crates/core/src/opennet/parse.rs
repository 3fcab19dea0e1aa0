//! Text format:
//!
//! ```text
//! net N1
//! places a b $
//! inputs $
//! trans tA label alpha pre a post b
//! trans tB label beta pre b $ post b
//! marking m0 = a
//! ```
//!
//! Multiplicities are written `$^3`; `0` denotes the empty multiset.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{MarkedNet, Marking, NetDef, NetTransition};
use crate::error::ParseError;
use crate::lex::{tokenize, Cursor, Tok};

#[derive(Clone, Debug, Default)]
pub struct NetModel {
    pub nets: Vec<Arc<NetDef>>,
    pub markings: Vec<(String, MarkedNet)>,
}

impl NetModel {
    pub fn get(&self, name: &str) -> Option<&MarkedNet> {
        self.markings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
    }

    pub fn net(&self, name: &str) -> Option<&Arc<NetDef>> {
        self.nets.iter().find(|n| n.name == name)
    }
}

const KEYWORDS: &[&str] = &["pre", "post", "label"];

fn multiset(cur: &mut Cursor, places: &[String], stop: &[&str]) -> Result<Marking, ParseError> {
    let mut m = Marking::new();
    if matches!(cur.peek(), Some(Tok::Int(0))) {
        cur.next();
        return Ok(m);
    }
    while let Some(Tok::Ident(p)) = cur.peek() {
        if stop.contains(&p.as_str()) {
            break;
        }
        if !places.contains(p) {
            return Err(cur.error(format!("unknown place `{p}`")));
        }
        let p = p.clone();
        cur.next();
        let n = if cur.eat_sym("^") {
            cur.expect_int("a multiplicity")?
        } else {
            1
        };
        m.insert(p, n);
    }
    Ok(m)
}

struct Building {
    def: NetDef,
    markings: Vec<(String, Marking)>,
}

pub fn parse_nets(src: &str) -> Result<NetModel, ParseError> {
    let mut done: Vec<Building> = Vec::new();
    let mut cur_net: Option<Building> = None;
    let mut marking_names: BTreeSet<String> = BTreeSet::new();
    for line in tokenize(src)? {
        let mut cur = Cursor::new(&line);
        if cur.eat_keyword("net") {
            let name = cur.expect_ident("a net name")?;
            if done.iter().any(|b| b.def.name == name) {
                return Err(cur.error(format!("duplicate net `{name}`")));
            }
            cur.expect_end()?;
            done.extend(cur_net.take());
            cur_net = Some(Building {
                def: NetDef {
                    name,
                    places: Vec::new(),
                    inputs: BTreeSet::new(),
                    transitions: Vec::new(),
                },
                markings: Vec::new(),
            });
            continue;
        }
        let Some(b) = cur_net.as_mut() else {
            return Err(cur.error("expected `net`"));
        };
        if cur.eat_keyword("places") {
            while !cur.at_end() {
                let p = cur.expect_ident("a place name")?;
                if KEYWORDS.contains(&p.as_str()) {
                    return Err(cur.error(format!("`{p}` is reserved")));
                }
                if !b.def.places.contains(&p) {
                    b.def.places.push(p);
                }
            }
        } else if cur.eat_keyword("inputs") {
            while !cur.at_end() {
                let p = cur.expect_ident("a place name")?;
                if !b.def.places.contains(&p) {
                    return Err(cur.error(format!("unknown place `{p}`")));
                }
                b.def.inputs.insert(p);
            }
        } else if cur.eat_keyword("trans") {
            let name = cur.expect_ident("a transition name")?;
            cur.expect_keyword("label")?;
            let label = cur.expect_ident("a label")?;
            cur.expect_keyword("pre")?;
            let pre = multiset(&mut cur, &b.def.places, &["post"])?;
            cur.expect_keyword("post")?;
            let post = multiset(&mut cur, &b.def.places, &[])?;
            cur.expect_end()?;
            b.def.transitions.push(NetTransition {
                name,
                label,
                pre,
                post,
            });
        } else if cur.eat_keyword("marking") {
            let name = cur.expect_ident("a marking name")?;
            if !marking_names.insert(name.clone()) {
                return Err(cur.error(format!("duplicate marking `{name}`")));
            }
            cur.expect_sym("=")?;
            let m = multiset(&mut cur, &b.def.places, &[])?;
            cur.expect_end()?;
            b.markings.push((name, m));
        } else {
            return Err(cur.error("expected `places`, `inputs`, `trans` or `marking`"));
        }
    }
    done.extend(cur_net.take());
    let mut model = NetModel::default();
    for b in done {
        let net = Arc::new(b.def);
        for (name, m) in b.markings {
            model.markings.push((name, MarkedNet::new(&net, m)));
        }
        model.nets.push(net);
    }
    Ok(model)
}
