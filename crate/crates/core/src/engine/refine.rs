use std::collections::BTreeSet;

use rayon::prelude::*;

use super::closure::{close_universe, SymbolicLts, DEFAULT_MAX_STATES};
use super::partition::Partition;
use crate::derivation::derives;
use crate::error::{EngineError, EngineResult};
use crate::system::{Instance, TransitionOf};

pub const DEFAULT_MAX_ITERS: usize = 1_000;

#[derive(Clone, Debug)]
pub struct MinimizeOptions {
    pub max_states: usize,
    pub max_iters: usize,
    pub parallel: bool,
    /// Keep every intermediate partition.
    pub trace: bool,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions {
            max_states: DEFAULT_MAX_STATES,
            max_iters: DEFAULT_MAX_ITERS,
            parallel: false,
            trace: false,
        }
    }
}

pub type Signature<I> = BTreeSet<(<I as Instance>::Ctx, <I as Instance>::Obs, usize)>;

/// An edge of the minimized system, between block numbers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct QuotientEdge<C, O> {
    pub src: usize,
    pub ctx: C,
    pub obs: O,
    pub tgt: usize,
}

pub struct Minimization<I: Instance> {
    pub lts: SymbolicLts<I>,
    pub partition: Partition,
    pub iterations: usize,
    /// `P_0, P_1, ...` when tracing; otherwise empty.
    pub history: Vec<Partition>,
    pub quotient: Vec<QuotientEdge<I::Ctx, I::Obs>>,
}

impl<I: Instance> Minimization<I> {
    /// Block number of a state, if it belongs to the universe.
    pub fn block_of(&self, p: &I::State) -> Option<usize> {
        self.lts.id_of(p).map(|i| self.partition.block_of(i))
    }

    pub fn equivalent(&self, p: &I::State, q: &I::State) -> bool {
        matches!((self.block_of(p), self.block_of(q)), (Some(a), Some(b)) if a == b)
    }
}

fn block_of_state<I: Instance>(
    inst: &I,
    lts: &SymbolicLts<I>,
    part: &Partition,
    p: &I::State,
) -> EngineResult<usize> {
    lts.id_of(p)
        .map(|i| part.block_of(i))
        .ok_or_else(|| EngineError::ClosureViolation {
            state: inst.show_state(p),
        })
}

/// Whether `t`, leaving state `p`, is strictly dominated up to `part` by
/// another transition of `p`.
pub fn redundant_in<I: Instance>(
    inst: &I,
    lts: &SymbolicLts<I>,
    p: usize,
    t: &TransitionOf<I>,
    part: &Partition,
) -> EngineResult<bool> {
    let bt = block_of_state(inst, lts, part, &t.tgt)?;
    for u in lts.delta(p) {
        if u == t {
            continue;
        }
        let Some(q) = derives(inst, u, &t.ctx, &t.obs) else {
            continue;
        };
        if block_of_state(inst, lts, part, &q)? != bt {
            continue;
        }
        let back = match derives(inst, t, &u.ctx, &u.obs) {
            Some(q2) => {
                block_of_state(inst, lts, part, &q2)? == block_of_state(inst, lts, part, &u.tgt)?
            }
            None => false,
        };
        if !back {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Labels and target blocks of the non-redundant transitions of `p`.
pub fn signature<I: Instance>(
    inst: &I,
    lts: &SymbolicLts<I>,
    p: usize,
    part: &Partition,
) -> EngineResult<Signature<I>> {
    let mut sig = BTreeSet::new();
    for t in lts.delta(p) {
        if !redundant_in(inst, lts, p, t, part)? {
            let b = block_of_state(inst, lts, part, &t.tgt)?;
            sig.insert((t.ctx.clone(), t.obs.clone(), b));
        }
    }
    Ok(sig)
}

pub fn initial_partition<I: Instance>(inst: &I, lts: &SymbolicLts<I>) -> Partition {
    let sorts: Vec<I::Sort> = lts.states().iter().map(|p| inst.sort_of(p)).collect();
    Partition::from_keys(&sorts)
}

fn refine_step<I: Instance>(
    inst: &I,
    lts: &SymbolicLts<I>,
    part: &Partition,
    parallel: bool,
) -> EngineResult<Partition> {
    let key = |i: usize| -> EngineResult<(I::Sort, Signature<I>)> {
        Ok((inst.sort_of(lts.state(i)), signature(inst, lts, i, part)?))
    };
    let keys: Vec<_> = if parallel {
        (0..lts.len())
            .into_par_iter()
            .map(key)
            .collect::<Result<_, _>>()?
    } else {
        (0..lts.len()).map(key).collect::<Result<_, _>>()?
    };
    Ok(Partition::from_keys(&keys))
}

/// Signature refinement over an already closed universe.
pub fn refine<I: Instance>(
    inst: &I,
    lts: SymbolicLts<I>,
    opts: &MinimizeOptions,
) -> EngineResult<Minimization<I>> {
    let mut part = initial_partition(inst, &lts);
    let mut history = Vec::new();
    if opts.trace {
        history.push(part.clone());
    }
    let mut iterations = 0;
    loop {
        if iterations >= opts.max_iters {
            return Err(EngineError::IterationLimit {
                limit: opts.max_iters,
            });
        }
        let next = refine_step(inst, &lts, &part, opts.parallel)?;
        iterations += 1;
        assert!(next.refines(&part), "refinement is not monotone");
        if opts.trace {
            history.push(next.clone());
        }
        if next == part {
            break;
        }
        part = next;
    }
    let quotient = quotient(inst, &lts, &part)?;
    Ok(Minimization {
        lts,
        partition: part,
        iterations,
        history,
        quotient,
    })
}

fn quotient<I: Instance>(
    inst: &I,
    lts: &SymbolicLts<I>,
    part: &Partition,
) -> EngineResult<Vec<QuotientEdge<I::Ctx, I::Obs>>> {
    let mut edges = Vec::new();
    for (b, members) in part.blocks().iter().enumerate() {
        for (ctx, obs, tgt) in signature(inst, lts, members[0], part)? {
            edges.push(QuotientEdge {
                src: b,
                ctx,
                obs,
                tgt,
            });
        }
    }
    Ok(edges)
}

/// Closes the universe of `seeds` and computes symbolic bisimilarity on it.
pub fn minimize<I: Instance>(
    inst: &I,
    seeds: &[I::State],
    opts: &MinimizeOptions,
) -> EngineResult<Minimization<I>> {
    let lts = close_universe(inst, seeds, opts.max_states)?;
    refine(inst, lts, opts)
}

pub fn bisimilar<I: Instance>(
    inst: &I,
    p: &I::State,
    q: &I::State,
    opts: &MinimizeOptions,
) -> EngineResult<bool> {
    let m = minimize(inst, &[p.clone(), q.clone()], opts)?;
    Ok(m.equivalent(p, q))
}
