//! The asynchronous pi-calculus.
//!
//! A state is a closed process over an interface `n`: its free names lie in
//! `1..=n`.  Contexts put the process in parallel with output particles and
//! may enlarge the interface.  Inputs appear symbolically as a communication
//! with the single particle they need, instantiated with every known name
//! and one fresh name.

mod parse;
pub mod step;
pub mod term;

use std::fmt;
use std::sync::Arc;

use crate::error::{CoreError, CoreResult};
use crate::multiset::{multisets_up_to, Multiset};
use crate::system::{Instance, Transition, TransitionOf};

pub use parse::{parse_pi, parse_proc, PiModel};
use step::{steps, Action, Step};
use term::{Name, Printer, Proc};

/// A process together with its interface.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PiState {
    pub proc: Arc<Proc>,
    pub sort: u32,
}

impl PiState {
    pub fn new(proc: Proc, sort: u32) -> Self {
        debug_assert!(proc.is_closed() && proc.max_free() <= sort);
        PiState {
            proc: Arc::new(proc),
            sort,
        }
    }
}

impl fmt::Display for PiState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @{}", self.proc, self.sort)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PiObs {
    Tau,
    Out(u32, u32),
    BoundOut(u32),
}

impl fmt::Display for PiObs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Printer { names: &[] };
        show_obs(&p, self, f)
    }
}

fn show_obs(p: &Printer, o: &PiObs, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match o {
        PiObs::Tau => write!(f, "τ"),
        PiObs::Out(a, b) => write!(f, "'{}<{}>", p.free(*a), p.free(*b)),
        PiObs::BoundOut(a) => write!(f, "'{}()", p.free(*a)),
    }
}

/// A context `src → tgt` adding output particles.  `rename`, when set,
/// sends the name `src` of the inserted process to the given name; such
/// contexts only arise from shifting a context past a bound output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PiCtx {
    pub src: u32,
    pub tgt: u32,
    pub particles: Multiset<(u32, u32)>,
    pub rename: Option<u32>,
}

impl PiCtx {
    pub fn plain(src: u32, tgt: u32, particles: impl IntoIterator<Item = (u32, u32)>) -> Self {
        PiCtx {
            src,
            tgt,
            particles: particles.into_iter().collect(),
            rename: None,
        }
    }

    fn show(&self, p: &Printer, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "-")?;
        for &(a, b) in self.particles.elements() {
            write!(f, "|'{}<{}>", p.free(a), p.free(b))?;
        }
        if self.tgt != self.src {
            write!(f, ":{}→{}", self.src, self.tgt)?;
        }
        if let Some(r) = self.rename {
            write!(f, "[{}↦{}]", self.src, r)?;
        }
        Ok(())
    }
}

impl fmt::Display for PiCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.show(&Printer { names: &[] }, f)
    }
}

struct Shown<'a, T>(&'a T, &'a [String]);

impl fmt::Display for Shown<'_, PiCtx> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.show(&Printer { names: self.1 }, f)
    }
}

impl fmt::Display for Shown<'_, PiObs> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        show_obs(&Printer { names: self.1 }, self.0, f)
    }
}

#[derive(Clone, Debug, Default)]
pub struct PiInstance {
    names: Vec<String>,
}

impl PiInstance {
    pub fn with_names(names: Vec<String>) -> Self {
        PiInstance { names }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn show_proc(&self, p: &Proc) -> String {
        Printer { names: &self.names }.proc(p)
    }

    fn particles_proc(particles: &Multiset<(u32, u32)>) -> impl Iterator<Item = Proc> + '_ {
        particles.elements().map(|&(a, b)| Proc::out(a, b))
    }
}

fn free(n: Name) -> u32 {
    match n {
        Name::Free(a) => a,
        Name::Bound(_) => unreachable!("closed process has a dangling index"),
    }
}

fn rename_proc(p: &Proc, c: &PiCtx) -> Proc {
    match c.rename {
        Some(r) => p.rename_free(c.src, r),
        None => p.clone(),
    }
}

fn check_src(c: &PiCtx, p: &PiState) -> CoreResult<()> {
    if p.sort != c.src {
        return Err(CoreError::SortMismatch {
            expected: c.src.to_string(),
            found: p.sort.to_string(),
        });
    }
    Ok(())
}

/// Moves of `c(p)` contributed by `p`, given the steps of `p` after renaming.
fn steps_under(c: &PiCtx, body_steps: &[Step]) -> Vec<(PiObs, PiState)> {
    let m = c.tgt;
    let with = |q: Proc, parts: &Multiset<(u32, u32)>| {
        Proc::par(std::iter::once(q).chain(PiInstance::particles_proc(parts)))
    };
    let mut out = Vec::new();
    for s in body_steps {
        match s.action {
            Action::Tau => out.push((
                PiObs::Tau,
                PiState::new(with(s.target.clone(), &c.particles), m),
            )),
            Action::Out(a, b) => out.push((
                PiObs::Out(free(a), free(b)),
                PiState::new(with(s.target.clone(), &c.particles), m),
            )),
            Action::BoundOut(a) => out.push((
                PiObs::BoundOut(free(a)),
                PiState::new(with(s.target.open(Name::Free(m + 1)), &c.particles), m + 1),
            )),
            Action::In(a) => {
                let a = free(a);
                for &(ch, j) in c.particles.support() {
                    if ch != a {
                        continue;
                    }
                    let mut rest = c.particles.clone();
                    rest.remove_one(&(ch, j));
                    out.push((
                        PiObs::Tau,
                        PiState::new(with(s.target.open(Name::Free(j)), &rest), m),
                    ));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

impl Instance for PiInstance {
    type Sort = u32;
    type Ctx = PiCtx;
    type Obs = PiObs;
    type State = PiState;

    fn name(&self) -> &'static str {
        "pi"
    }

    fn sort_of(&self, p: &PiState) -> u32 {
        p.sort
    }

    fn ctx_source(&self, c: &PiCtx) -> u32 {
        c.src
    }

    fn ctx_target(&self, c: &PiCtx) -> u32 {
        c.tgt
    }

    fn identity(&self, s: &u32) -> PiCtx {
        PiCtx::plain(*s, *s, [])
    }

    fn compose(&self, c: &PiCtx, d: &PiCtx) -> CoreResult<PiCtx> {
        if c.tgt != d.src {
            return Err(CoreError::NotComposable(format!(
                "target {} against source {}",
                c.tgt, d.src
            )));
        }
        let moved = |a: u32| match d.rename {
            Some(r) if a == d.src => r,
            _ => a,
        };
        let mut particles = c.particles.map(|&(a, b)| (moved(a), moved(b)));
        particles = particles.sum(&d.particles);
        let top = moved(c.rename.unwrap_or(c.src));
        Ok(PiCtx {
            src: c.src,
            tgt: d.tgt,
            particles,
            rename: (top != c.src).then_some(top),
        })
    }

    fn residual(&self, c1: &PiCtx, c2: &PiCtx) -> Option<PiCtx> {
        if c1.rename.is_some() || c2.rename.is_some() {
            return (c1 == c2).then(|| self.identity(&c1.tgt));
        }
        if c1.src != c2.src || c1.tgt > c2.tgt {
            return None;
        }
        Some(PiCtx {
            src: c1.tgt,
            tgt: c2.tgt,
            particles: c2.particles.checked_minus(&c1.particles)?,
            rename: None,
        })
    }

    fn apply(&self, c: &PiCtx, p: &PiState) -> CoreResult<PiState> {
        if p.sort != c.src {
            return Err(CoreError::SortMismatch {
                expected: c.src.to_string(),
                found: p.sort.to_string(),
            });
        }
        let body = rename_proc(&p.proc, c);
        Ok(PiState::new(
            Proc::par(std::iter::once(body).chain(Self::particles_proc(&c.particles))),
            c.tgt,
        ))
    }

    /// Particles plus the number of names added to the interface.
    fn ctx_size(&self, c: &PiCtx) -> usize {
        c.particles.size() + (c.tgt - c.src) as usize
    }

    fn symbolic_transitions(&self, p: &PiState) -> Vec<TransitionOf<Self>> {
        let n = p.sort;
        let id = self.identity(&n);
        let mut out = Vec::new();
        for s in steps(&p.proc) {
            match s.action {
                Action::Tau => out.push(Transition::new(
                    id.clone(),
                    PiObs::Tau,
                    PiState::new(s.target, n),
                )),
                Action::Out(a, b) => out.push(Transition::new(
                    id.clone(),
                    PiObs::Out(free(a), free(b)),
                    PiState::new(s.target, n),
                )),
                Action::BoundOut(a) => out.push(Transition::new(
                    id.clone(),
                    PiObs::BoundOut(free(a)),
                    PiState::new(s.target.open(Name::Free(n + 1)), n + 1),
                )),
                Action::In(a) => {
                    let a = free(a);
                    for j in 1..=n + 1 {
                        let m = n.max(j);
                        out.push(Transition::new(
                            PiCtx::plain(n, m, [(a, j)]),
                            PiObs::Tau,
                            PiState::new(s.target.open(Name::Free(j)), m),
                        ));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Observations are kept; a bound output moves the context one name
    /// up, renaming the extruded name to the new top of the interface.
    fn rule_lookup(&self, x: &PiCtx, o1: &PiObs, o2: &PiObs) -> Option<PiCtx> {
        if o1 != o2 {
            return None;
        }
        match o1 {
            PiObs::BoundOut(_) => {
                if x.rename.is_some() {
                    return None;
                }
                Some(PiCtx {
                    src: x.src + 1,
                    tgt: x.tgt + 1,
                    particles: x.particles.clone(),
                    rename: (x.tgt > x.src).then_some(x.tgt + 1),
                })
            }
            _ => Some(x.clone()),
        }
    }

    /// Contexts over the known names plus at most one fresh name.
    fn contexts_from(&self, s: &u32, k: usize) -> Vec<PiCtx> {
        let n = *s;
        let mut out = Vec::new();
        for m in [n, n + 1] {
            let lift = (m - n) as usize;
            if lift > k {
                continue;
            }
            let pairs: Vec<(u32, u32)> =
                (1..=m).flat_map(|a| (1..=m).map(move |b| (a, b))).collect();
            for particles in multisets_up_to(&pairs, k - lift) {
                out.push(PiCtx {
                    src: n,
                    tgt: m,
                    particles,
                    rename: None,
                });
            }
        }
        out
    }

    /// Silent steps and outputs; inputs need a partner and are not observed.
    fn base_transitions(&self, p: &PiState) -> Vec<(PiObs, PiState)> {
        let n = p.sort;
        let mut out = Vec::new();
        for s in steps(&p.proc) {
            match s.action {
                Action::Tau => out.push((PiObs::Tau, PiState::new(s.target, n))),
                Action::Out(a, b) => {
                    out.push((PiObs::Out(free(a), free(b)), PiState::new(s.target, n)))
                }
                Action::BoundOut(a) => out.push((
                    PiObs::BoundOut(free(a)),
                    PiState::new(s.target.open(Name::Free(n + 1)), n + 1),
                )),
                Action::In(_) => {}
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Steps of `p | particles` in which `p` takes part: its own moves and
    /// its inputs from a particle.  A particle emitting on its own is a
    /// move of the context, present alike for every process, and is left
    /// out.
    fn context_steps(&self, c: &PiCtx, p: &PiState) -> CoreResult<Vec<(PiObs, PiState)>> {
        check_src(c, p)?;
        Ok(steps_under(c, &steps(&rename_proc(&p.proc, c))))
    }

    /// One particle and one fresh name: a context of size two.  Further
    /// particles can be supplied in later steps.
    fn sufficient_bound(&self, _universe: &[PiState]) -> usize {
        2
    }

    /// Saturated exploration grows quickly with the interface, so the
    /// oracle looks one round past the point where refinement stabilised.
    fn oracle_horizon(&self, _universe_size: usize, iterations: usize) -> Option<usize> {
        Some(iterations + 1)
    }

    fn show_state(&self, p: &PiState) -> String {
        format!("{} @{}", self.show_proc(&p.proc), p.sort)
    }

    fn show_ctx(&self, c: &PiCtx) -> String {
        Shown(c, &self.names).to_string()
    }

    fn show_obs(&self, o: &PiObs) -> String {
        Shown(o, &self.names).to_string()
    }
}
