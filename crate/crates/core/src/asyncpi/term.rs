//! Process terms.  Free names are positive naturals; bound names are de
//! Bruijn indices, so alpha-equivalent terms are identical.  Parallel
//! components and summands are kept sorted, parallel composition is kept
//! flat, and inert `0` components are dropped.

use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Name {
    Free(u32),
    Bound(u32),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Guard {
    Tau(Arc<Proc>),
    /// Input on a channel; the body binds index 0 to the received name.
    In(Name, Arc<Proc>),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Proc {
    Nil,
    Out(Name, Name),
    /// Non-empty guarded choice.
    Sum(Vec<Guard>),
    /// At least two components, none of them `Nil` or `Par`.
    Par(Vec<Proc>),
    /// Restriction; binds index 0.
    Res(Arc<Proc>),
    /// Replicated guarded choice.
    Bang(Arc<Proc>),
}

impl Proc {
    pub fn par(ps: impl IntoIterator<Item = Proc>) -> Proc {
        let mut flat = Vec::new();
        for p in ps {
            match p {
                Proc::Nil => {}
                Proc::Par(qs) => flat.extend(qs),
                q => flat.push(q),
            }
        }
        match flat.len() {
            0 => Proc::Nil,
            1 => flat.pop().unwrap(),
            _ => {
                flat.sort();
                Proc::Par(flat)
            }
        }
    }

    pub fn sum(gs: impl IntoIterator<Item = Guard>) -> Proc {
        let mut gs: Vec<Guard> = gs.into_iter().collect();
        if gs.is_empty() {
            return Proc::Nil;
        }
        gs.sort();
        Proc::Sum(gs)
    }

    pub fn tau(p: Proc) -> Proc {
        Proc::Sum(vec![Guard::Tau(Arc::new(p))])
    }

    pub fn input(a: Name, body: Proc) -> Proc {
        Proc::Sum(vec![Guard::In(a, Arc::new(body))])
    }

    pub fn res(p: Proc) -> Proc {
        Proc::Res(Arc::new(p))
    }

    pub fn out(a: u32, b: u32) -> Proc {
        Proc::Out(Name::Free(a), Name::Free(b))
    }

    /// Rebuilds the term with every name occurrence passed through `f`,
    /// which also receives the number of binders crossed.
    pub fn map_names(&self, f: &impl Fn(Name, u32) -> Name) -> Proc {
        self.map_at(0, f)
    }

    fn map_at(&self, d: u32, f: &impl Fn(Name, u32) -> Name) -> Proc {
        match self {
            Proc::Nil => Proc::Nil,
            Proc::Out(a, b) => Proc::Out(f(*a, d), f(*b, d)),
            Proc::Sum(gs) => Proc::sum(gs.iter().map(|g| match g {
                Guard::Tau(p) => Guard::Tau(Arc::new(p.map_at(d, f))),
                Guard::In(a, p) => Guard::In(f(*a, d), Arc::new(p.map_at(d + 1, f))),
            })),
            Proc::Par(ps) => Proc::par(ps.iter().map(|p| p.map_at(d, f))),
            Proc::Res(p) => Proc::Res(Arc::new(p.map_at(d + 1, f))),
            Proc::Bang(p) => Proc::Bang(Arc::new(p.map_at(d, f))),
        }
    }

    /// Moves the term under one more binder.
    pub fn shift(&self) -> Proc {
        self.map_names(&|n, d| match n {
            Name::Bound(i) if i >= d => Name::Bound(i + 1),
            n => n,
        })
    }

    /// Instantiates the outermost dangling index with `x`.
    pub fn open(&self, x: Name) -> Proc {
        self.map_names(&|n, d| match n {
            Name::Bound(i) if i == d => match x {
                Name::Bound(j) => Name::Bound(j + d),
                free => free,
            },
            Name::Bound(i) if i > d => Name::Bound(i - 1),
            n => n,
        })
    }

    /// Exchanges the two outermost dangling indices.
    pub fn swap01(&self) -> Proc {
        self.map_names(&|n, d| match n {
            Name::Bound(i) if i == d => Name::Bound(d + 1),
            Name::Bound(i) if i == d + 1 => Name::Bound(d),
            n => n,
        })
    }

    pub fn rename_free(&self, from: u32, to: u32) -> Proc {
        self.map_names(&|n, _| match n {
            Name::Free(a) if a == from => Name::Free(to),
            n => n,
        })
    }

    /// Largest free name, 0 if none.
    pub fn max_free(&self) -> u32 {
        let mut m = 0;
        self.visit(&mut |n| {
            if let Name::Free(a) = n {
                m = m.max(a);
            }
        });
        m
    }

    /// True when no de Bruijn index escapes its binder.
    pub fn is_closed(&self) -> bool {
        fn go(p: &Proc, d: u32) -> bool {
            let ok = |n: &Name| !matches!(n, Name::Bound(i) if *i >= d);
            match p {
                Proc::Nil => true,
                Proc::Out(a, b) => ok(a) && ok(b),
                Proc::Sum(gs) => gs.iter().all(|g| match g {
                    Guard::Tau(p) => go(p, d),
                    Guard::In(a, p) => ok(a) && go(p, d + 1),
                }),
                Proc::Par(ps) => ps.iter().all(|p| go(p, d)),
                Proc::Res(p) => go(p, d + 1),
                Proc::Bang(p) => go(p, d),
            }
        }
        go(self, 0)
    }

    fn visit(&self, f: &mut impl FnMut(Name)) {
        match self {
            Proc::Nil => {}
            Proc::Out(a, b) => {
                f(*a);
                f(*b);
            }
            Proc::Sum(gs) => {
                for g in gs {
                    match g {
                        Guard::Tau(p) => p.visit(f),
                        Guard::In(a, p) => {
                            f(*a);
                            p.visit(f);
                        }
                    }
                }
            }
            Proc::Par(ps) => ps.iter().for_each(|p| p.visit(f)),
            Proc::Res(p) | Proc::Bang(p) => p.visit(f),
        }
    }

    /// Longest chain of nested prefixes.
    pub fn depth(&self) -> usize {
        match self {
            Proc::Nil | Proc::Out(..) => 0,
            Proc::Sum(gs) => gs
                .iter()
                .map(|g| match g {
                    Guard::Tau(p) | Guard::In(_, p) => 1 + p.depth(),
                })
                .max()
                .unwrap_or(0),
            Proc::Par(ps) => ps.iter().map(Proc::depth).max().unwrap_or(0),
            Proc::Res(p) | Proc::Bang(p) => p.depth(),
        }
    }

    pub fn is_guarded_sum(&self) -> bool {
        matches!(self, Proc::Sum(_))
    }
}

/// Printing with a table of free-name spellings.
pub struct Printer<'a> {
    pub names: &'a [String],
}

const BINDER_NAMES: &[&str] = &["x", "y", "z", "u", "v", "w"];

impl Printer<'_> {
    pub fn free(&self, a: u32) -> String {
        match self.names.get(a as usize - 1) {
            Some(s) => s.clone(),
            None if a <= 26 && self.names.is_empty() => {
                ((b'a' + (a - 1) as u8) as char).to_string()
            }
            None => format!("n{a}"),
        }
    }

    fn binder(&self, level: u32) -> String {
        let mut k = 0;
        let mut i = 0usize;
        loop {
            let cand = match BINDER_NAMES.get(i) {
                Some(s) => s.to_string(),
                None => format!("x{i}"),
            };
            i += 1;
            if self.names.contains(&cand) {
                continue;
            }
            if k == level {
                return cand;
            }
            k += 1;
        }
    }

    fn name(&self, n: Name, depth: u32) -> String {
        match n {
            Name::Free(a) => self.free(a),
            Name::Bound(i) => self.binder(depth - 1 - i),
        }
    }

    pub fn proc(&self, p: &Proc) -> String {
        let mut s = String::new();
        self.par_level(p, 0, &mut s);
        s
    }

    fn par_level(&self, p: &Proc, d: u32, out: &mut String) {
        match p {
            Proc::Par(ps) => {
                for (i, q) in ps.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" | ");
                    }
                    self.sum_level(q, d, out);
                }
            }
            _ => self.sum_level(p, d, out),
        }
    }

    fn sum_level(&self, p: &Proc, d: u32, out: &mut String) {
        match p {
            Proc::Sum(gs) if gs.len() > 1 => {
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" + ");
                    }
                    self.guard(g, d, out);
                }
            }
            _ => self.unary(p, d, out),
        }
    }

    fn guard(&self, g: &Guard, d: u32, out: &mut String) {
        match g {
            Guard::Tau(p) => {
                out.push_str("tau.");
                self.unary(p, d, out);
            }
            Guard::In(a, p) => {
                out.push_str(&format!("{}({}).", self.name(*a, d), self.binder(d)));
                self.unary(p, d + 1, out);
            }
        }
    }

    fn unary(&self, p: &Proc, d: u32, out: &mut String) {
        match p {
            Proc::Nil => out.push('0'),
            Proc::Out(a, b) => {
                out.push_str(&format!("'{}<{}>", self.name(*a, d), self.name(*b, d)))
            }
            Proc::Sum(gs) if gs.len() == 1 => self.guard(&gs[0], d, out),
            Proc::Res(q) => {
                out.push_str(&format!("new {}. ", self.binder(d)));
                self.unary(q, d + 1, out);
            }
            Proc::Bang(q) => {
                out.push('!');
                self.unary(q, d, out);
            }
            _ => {
                out.push('(');
                self.par_level(p, d, out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Proc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Printer { names: &[] }.proc(self))
    }
}
