//! Machine-readable output.

use serde::{Deserialize, Serialize};
use symbis::engine::{Partition, SymbolicLts};
use symbis::Instance;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateEntry {
    pub id: usize,
    pub sort: String,
    pub show: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub ctx: String,
    pub obs: String,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub universe: Vec<StateEntry>,
    pub blocks: Vec<Vec<usize>>,
    pub lts: Vec<Edge>,
    pub iterations: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<usize>,
    /// Every intermediate partition, when traced.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<Vec<Vec<usize>>>,
}

impl Report {
    pub fn universe_of<I: Instance>(inst: &I, states: &[I::State]) -> Vec<StateEntry> {
        states
            .iter()
            .enumerate()
            .map(|(id, p)| StateEntry {
                id,
                sort: inst.show_sort(&inst.sort_of(p)),
                show: inst.show_state(p),
            })
            .collect()
    }

    pub fn from_symbolic<I: Instance>(inst: &I, lts: &SymbolicLts<I>) -> Report {
        let mut edges = Vec::new();
        for src in 0..lts.len() {
            for t in lts.delta(src) {
                if let Some(tgt) = lts.id_of(&t.tgt) {
                    edges.push(Edge {
                        src,
                        ctx: inst.show_ctx(&t.ctx),
                        obs: inst.show_obs(&t.obs),
                        tgt,
                    });
                }
            }
        }
        Report {
            universe: Self::universe_of(inst, lts.states()),
            blocks: Vec::new(),
            lts: edges,
            iterations: 0,
            seeds: lts.seeds().to_vec(),
            history: Vec::new(),
        }
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The blocks as a partition of the universe.
    pub fn partition(&self) -> Partition {
        let mut keys = vec![0; self.universe.len()];
        for (b, members) in self.blocks.iter().enumerate() {
            for &i in members {
                keys[i] = b;
            }
        }
        Partition::from_keys(&keys)
    }
}

pub fn blocks_of(p: &Partition) -> Vec<Vec<usize>> {
    p.blocks().to_vec()
}
