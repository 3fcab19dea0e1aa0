//! The contract every calculus instance implements.
//!
//! An instance supplies a category of contexts (sorts are objects, contexts
//! are arrows), states living over sorts, a finite symbolic transition
//! relation and an inference system telling which transitions derive which.
//! It also supplies the ordinary base semantics, used only by the oracle.

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::CoreResult;

/// Bounds shared by sorts, contexts, observations and states.
pub trait Term: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync {}

impl<T: Clone + Eq + Ord + Hash + Debug + Display + Send + Sync> Term for T {}

/// A context transition `p --ctx,obs--> tgt`; the source is implicit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Transition<C, O, S> {
    pub ctx: C,
    pub obs: O,
    pub tgt: S,
}

impl<C, O, S> Transition<C, O, S> {
    pub fn new(ctx: C, obs: O, tgt: S) -> Self {
        Transition { ctx, obs, tgt }
    }
}

pub type TransitionOf<I> =
    Transition<<I as Instance>::Ctx, <I as Instance>::Obs, <I as Instance>::State>;

/// A finite set of transitions sharing one source state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionSet<C: Ord, O: Ord, S: Ord> {
    pub source: S,
    pub transitions: BTreeSet<Transition<C, O, S>>,
}

pub type TransitionSetOf<I> =
    TransitionSet<<I as Instance>::Ctx, <I as Instance>::Obs, <I as Instance>::State>;

impl<C: Ord, O: Ord, S: Ord> TransitionSet<C, O, S> {
    pub fn new(source: S, transitions: impl IntoIterator<Item = Transition<C, O, S>>) -> Self {
        TransitionSet {
            source,
            transitions: transitions.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Transition<C, O, S>> {
        self.transitions.iter()
    }
}

pub trait Instance: Sync {
    type Sort: Term;
    type Ctx: Term;
    type Obs: Term;
    type State: Term;

    /// Short tag used in reports ("swc", "net", "pi").
    fn name(&self) -> &'static str;

    fn sort_of(&self, p: &Self::State) -> Self::Sort;
    fn ctx_source(&self, c: &Self::Ctx) -> Self::Sort;
    fn ctx_target(&self, c: &Self::Ctx) -> Self::Sort;
    fn identity(&self, s: &Self::Sort) -> Self::Ctx;

    /// `c` followed by `d`; fails when the target of `c` is not the source of `d`.
    fn compose(&self, c: &Self::Ctx, d: &Self::Ctx) -> CoreResult<Self::Ctx>;

    /// The unique `d` with `compose(c1, d) = c2`, if any.
    fn residual(&self, c1: &Self::Ctx, c2: &Self::Ctx) -> Option<Self::Ctx>;

    fn apply(&self, c: &Self::Ctx, p: &Self::State) -> CoreResult<Self::State>;

    /// Zero exactly on identities, strictly increasing under non-identity composition.
    fn ctx_size(&self, c: &Self::Ctx) -> usize;

    fn symbolic_transitions(&self, p: &Self::State) -> Vec<TransitionOf<Self>>;

    /// The context `e` with `x ⊢_{o1→o2} e` in the inference system.
    fn rule_lookup(&self, x: &Self::Ctx, o1: &Self::Obs, o2: &Self::Obs) -> Option<Self::Ctx>;

    /// Observations `o2` for which some rule `x ⊢_{o→o2} e` may exist.
    fn rule_observations(&self, o: &Self::Obs) -> Vec<Self::Obs> {
        vec![o.clone()]
    }

    /// Every context with source `s` and size at most `k`.
    fn contexts_from(&self, s: &Self::Sort, k: usize) -> Vec<Self::Ctx>;

    /// Transitions of the plain operational semantics.
    fn base_transitions(&self, p: &Self::State) -> Vec<(Self::Obs, Self::State)>;

    /// Transitions of `c(p)` contributed by `p`.
    fn context_steps(
        &self,
        c: &Self::Ctx,
        p: &Self::State,
    ) -> CoreResult<Vec<(Self::Obs, Self::State)>> {
        Ok(self.base_transitions(&self.apply(c, p)?))
    }

    /// A context bound large enough for the bounded oracle on `universe`.
    fn sufficient_bound(&self, universe: &[Self::State]) -> usize;

    /// Explicit round bound for the oracle; `None` lets the engine choose.
    fn oracle_horizon(&self, _universe_size: usize, _iterations: usize) -> Option<usize> {
        None
    }

    fn show_state(&self, p: &Self::State) -> String {
        p.to_string()
    }

    fn show_ctx(&self, c: &Self::Ctx) -> String {
        c.to_string()
    }

    fn show_obs(&self, o: &Self::Obs) -> String {
        o.to_string()
    }

    fn show_sort(&self, s: &Self::Sort) -> String {
        s.to_string()
    }
}
