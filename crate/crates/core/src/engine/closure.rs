use std::collections::{HashMap, VecDeque};

use crate::derivation::derives;
use crate::error::{EngineError, EngineResult};
use crate::system::{Instance, TransitionOf};

pub const DEFAULT_MAX_STATES: usize = 10_000;

/// A finite universe of states with their symbolic transitions.
pub struct SymbolicLts<I: Instance> {
    states: Vec<I::State>,
    index: HashMap<I::State, usize>,
    delta: Vec<Vec<TransitionOf<I>>>,
    seeds: Vec<usize>,
}

impl<I: Instance> Clone for SymbolicLts<I> {
    fn clone(&self) -> Self {
        SymbolicLts {
            states: self.states.clone(),
            index: self.index.clone(),
            delta: self.delta.clone(),
            seeds: self.seeds.clone(),
        }
    }
}

impl<I: Instance> SymbolicLts<I> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[I::State] {
        &self.states
    }

    pub fn state(&self, id: usize) -> &I::State {
        &self.states[id]
    }

    pub fn id_of(&self, p: &I::State) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn delta(&self, id: usize) -> &[TransitionOf<I>] {
        &self.delta[id]
    }

    pub fn seeds(&self) -> &[usize] {
        &self.seeds
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().map(Vec::len).sum()
    }

    /// The same universe with some states removed.  Transitions are kept
    /// verbatim, so targets may dangle; refinement then reports the
    /// missing states as closure violations.
    pub fn without(&self, drop: impl Fn(&I::State) -> bool) -> Self {
        let mut out = SymbolicLts {
            states: Vec::new(),
            index: HashMap::new(),
            delta: Vec::new(),
            seeds: Vec::new(),
        };
        for (i, p) in self.states.iter().enumerate() {
            if drop(p) {
                continue;
            }
            out.index.insert(p.clone(), out.states.len());
            out.states.push(p.clone());
            out.delta.push(self.delta[i].clone());
        }
        out.seeds = self
            .seeds
            .iter()
            .filter_map(|&s| out.id_of(&self.states[s]))
            .collect();
        out
    }
}

/// Closes `seeds` under symbolic targets and under the states needed to
/// compare pairs of transitions leaving a common source.
pub fn close_universe<I: Instance>(
    inst: &I,
    seeds: &[I::State],
    max_states: usize,
) -> EngineResult<SymbolicLts<I>> {
    if seeds.is_empty() {
        return Err(EngineError::NoSeeds);
    }
    let mut lts = SymbolicLts {
        states: Vec::new(),
        index: HashMap::new(),
        delta: Vec::new(),
        seeds: Vec::new(),
    };
    let mut queue = VecDeque::new();
    let add = |lts: &mut SymbolicLts<I>, p: &I::State, queue: &mut VecDeque<usize>| {
        if let Some(&id) = lts.index.get(p) {
            return Ok(id);
        }
        if lts.states.len() >= max_states {
            return Err(EngineError::UniverseExplosion { limit: max_states });
        }
        let id = lts.states.len();
        lts.states.push(p.clone());
        lts.index.insert(p.clone(), id);
        lts.delta.push(Vec::new());
        queue.push_back(id);
        Ok(id)
    };
    for s in seeds {
        let id = add(&mut lts, s, &mut queue)?;
        lts.seeds.push(id);
    }
    while let Some(id) = queue.pop_front() {
        let mut ts = inst.symbolic_transitions(&lts.states[id]);
        ts.sort();
        ts.dedup();
        for t in &ts {
            add(&mut lts, &t.tgt, &mut queue)?;
        }
        for t1 in &ts {
            for t2 in &ts {
                if t1 == t2 {
                    continue;
                }
                if let Some(q) = derives(inst, t1, &t2.ctx, &t2.obs) {
                    add(&mut lts, &q, &mut queue)?;
                }
            }
        }
        lts.delta[id] = ts;
    }
    Ok(lts)
}
