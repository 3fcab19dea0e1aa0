use std::collections::{HashMap, VecDeque};

use super::closure::SymbolicLts;
use super::ks::PlainLts;
use super::partition::Partition;
use crate::error::{EngineError, EngineResult};
use crate::system::Instance;

/// The saturated transition system explored from some roots, with every
/// context of size at most `bound`.
pub struct SaturatedLts<I: Instance> {
    pub states: Vec<I::State>,
    index: HashMap<I::State, usize>,
    pub succ: Vec<Vec<((I::Ctx, I::Obs), usize)>>,
    pub depth: Vec<usize>,
    pub roots: Vec<usize>,
    pub bound: usize,
    /// Set when some state at this depth was left unexpanded.
    pub horizon: Option<usize>,
}

impl<I: Instance> SaturatedLts<I> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn id_of(&self, p: &I::State) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn num_transitions(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Labels are the pairs (context, observation); states are first
    /// separated by sort.
    pub fn to_plain(&self, inst: &I) -> PlainLts<(I::Ctx, I::Obs)> {
        let sorts: Vec<I::Sort> = self.states.iter().map(|p| inst.sort_of(p)).collect();
        let classes = Partition::from_keys(&sorts);
        PlainLts {
            classes: (0..self.len()).map(|i| classes.block_of(i)).collect(),
            succ: self.succ.clone(),
            max_rounds: self.horizon,
        }
    }
}

/// Explores `c(p) → q` for all contexts `c` with `ctx_size(c) ≤ bound`,
/// breadth first from `roots`, stopping at depth `horizon` if given.
pub fn bounded_saturated_lts<I: Instance>(
    inst: &I,
    roots: &[I::State],
    bound: usize,
    horizon: Option<usize>,
    max_states: usize,
) -> EngineResult<SaturatedLts<I>> {
    let mut sat = SaturatedLts {
        states: Vec::new(),
        index: HashMap::new(),
        succ: Vec::new(),
        depth: Vec::new(),
        roots: Vec::new(),
        bound,
        horizon: None,
    };
    let mut queue = VecDeque::new();
    let add = |sat: &mut SaturatedLts<I>, p: &I::State, d: usize, queue: &mut VecDeque<usize>| {
        if let Some(&id) = sat.index.get(p) {
            return Ok(id);
        }
        if sat.states.len() >= max_states {
            return Err(EngineError::UniverseExplosion { limit: max_states });
        }
        let id = sat.states.len();
        sat.states.push(p.clone());
        sat.index.insert(p.clone(), id);
        sat.succ.push(Vec::new());
        sat.depth.push(d);
        queue.push_back(id);
        Ok(id)
    };
    for r in roots {
        let id = add(&mut sat, r, 0, &mut queue)?;
        sat.roots.push(id);
    }
    let mut cut = false;
    let mut contexts: HashMap<I::Sort, Vec<I::Ctx>> = HashMap::new();
    while let Some(id) = queue.pop_front() {
        let d = sat.depth[id];
        if horizon.is_some_and(|h| d >= h) {
            cut = true;
            continue;
        }
        let p = sat.states[id].clone();
        let sort = inst.sort_of(&p);
        let cs = contexts
            .entry(sort.clone())
            .or_insert_with(|| inst.contexts_from(&sort, bound))
            .clone();
        let mut out = Vec::new();
        for c in &cs {
            for (o, q) in inst.context_steps(c, &p)? {
                let j = add(&mut sat, &q, d + 1, &mut queue)?;
                out.push(((c.clone(), o), j));
            }
        }
        out.sort();
        out.dedup();
        sat.succ[id] = out;
    }
    if cut {
        sat.horizon = horizon;
    }
    Ok(sat)
}

/// The symbolic universe as a plain LTS labelled by (context, observation),
/// ignoring the inference system.
pub fn syntactic_lts<I: Instance>(inst: &I, lts: &SymbolicLts<I>) -> PlainLts<(I::Ctx, I::Obs)> {
    let sorts: Vec<I::Sort> = lts.states().iter().map(|p| inst.sort_of(p)).collect();
    let classes = Partition::from_keys(&sorts);
    let succ = (0..lts.len())
        .map(|i| {
            lts.delta(i)
                .iter()
                .filter_map(|t| Some(((t.ctx.clone(), t.obs.clone()), lts.id_of(&t.tgt)?)))
                .collect()
        })
        .collect();
    PlainLts {
        classes: (0..lts.len()).map(|i| classes.block_of(i)).collect(),
        succ,
        max_rounds: None,
    }
}
