//! Late-style labelled semantics of open terms.
//!
//! Input and bound-output steps return their target under one extra
//! binder (index 0 is the received or extruded name).  Instantiation is
//! left to the caller.

use std::sync::Arc;

use super::term::{Guard, Name, Proc};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Action {
    Tau,
    Out(Name, Name),
    BoundOut(Name),
    In(Name),
}

impl Action {
    fn binds(&self) -> bool {
        matches!(self, Action::BoundOut(_) | Action::In(_))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Step {
    pub action: Action,
    pub target: Proc,
}

fn step(action: Action, target: Proc) -> Step {
    Step { action, target }
}

/// Moves a name from inside a restriction to outside it; `None` for the
/// restricted name itself.
fn lower(n: Name) -> Option<Name> {
    match n {
        Name::Bound(0) => None,
        Name::Bound(i) => Some(Name::Bound(i - 1)),
        free => Some(free),
    }
}

pub fn steps(p: &Proc) -> Vec<Step> {
    let mut out = Vec::new();
    collect(p, &mut out);
    out.sort();
    out.dedup();
    out
}

fn collect(p: &Proc, out: &mut Vec<Step>) {
    match p {
        Proc::Nil => {}
        Proc::Out(a, b) => out.push(step(Action::Out(*a, *b), Proc::Nil)),
        Proc::Sum(gs) => {
            for g in gs {
                match g {
                    Guard::Tau(q) => out.push(step(Action::Tau, (**q).clone())),
                    Guard::In(a, q) => out.push(step(Action::In(*a), (**q).clone())),
                }
            }
        }
        Proc::Bang(m) => {
            for s in steps(m) {
                let copy = if s.action.binds() {
                    p.shift()
                } else {
                    p.clone()
                };
                out.push(step(s.action, Proc::par([s.target, copy])));
            }
        }
        Proc::Res(q) => {
            for s in steps(q) {
                match s.action {
                    Action::Tau => out.push(step(Action::Tau, Proc::Res(Arc::new(s.target)))),
                    Action::Out(a, b) => {
                        let Some(a) = lower(a) else { continue };
                        match lower(b) {
                            Some(b) => {
                                out.push(step(Action::Out(a, b), Proc::Res(Arc::new(s.target))))
                            }
                            None => out.push(step(Action::BoundOut(a), s.target)),
                        }
                    }
                    Action::BoundOut(a) => {
                        let Some(a) = lower(a) else { continue };
                        out.push(step(
                            Action::BoundOut(a),
                            Proc::Res(Arc::new(s.target.swap01())),
                        ));
                    }
                    Action::In(a) => {
                        let Some(a) = lower(a) else { continue };
                        out.push(step(Action::In(a), Proc::Res(Arc::new(s.target.swap01()))));
                    }
                }
            }
        }
        Proc::Par(ps) => {
            let per: Vec<Vec<Step>> = ps.iter().map(steps).collect();
            let others = |skip: &[usize]| -> Vec<Proc> {
                ps.iter()
                    .enumerate()
                    .filter(|(k, _)| !skip.contains(k))
                    .map(|(_, q)| q.clone())
                    .collect()
            };
            for (i, ss) in per.iter().enumerate() {
                for s in ss {
                    let rest = others(&[i]);
                    let rest: Vec<Proc> = if s.action.binds() {
                        rest.iter().map(Proc::shift).collect()
                    } else {
                        rest
                    };
                    out.push(step(
                        s.action,
                        Proc::par(std::iter::once(s.target.clone()).chain(rest)),
                    ));
                }
            }
            for (i, si) in per.iter().enumerate() {
                for (j, sj) in per.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    for s in si {
                        for r in sj {
                            let Action::In(c) = r.action else { continue };
                            let rest = others(&[i, j]);
                            match s.action {
                                // communication
                                Action::Out(a, b) if a == c => out.push(step(
                                    Action::Tau,
                                    Proc::par(
                                        [s.target.clone(), r.target.open(b)]
                                            .into_iter()
                                            .chain(rest),
                                    ),
                                )),
                                // scope closure
                                Action::BoundOut(a) if a == c => out.push(step(
                                    Action::Tau,
                                    Proc::res(Proc::par(
                                        [s.target.clone(), r.target.clone()]
                                            .into_iter()
                                            .chain(rest.iter().map(Proc::shift)),
                                    )),
                                )),
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
    }
}
