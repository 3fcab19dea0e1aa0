//! Cross-check of symbolic minimization against brute-force saturated
//! bisimilarity computed from the base semantics.

use super::closure::DEFAULT_MAX_STATES;
use super::ks::ks_refine;
use super::refine::{minimize, MinimizeOptions, DEFAULT_MAX_ITERS};
use super::saturated::bounded_saturated_lts;
use crate::error::EngineResult;
use crate::system::Instance;

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Context size bound; the instance's sufficient bound when unset.
    pub bound: Option<usize>,
    /// Exploration depth; chosen from the universe when unset.
    pub horizon: Option<usize>,
    pub max_states: usize,
    pub max_iters: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            bound: None,
            horizon: None,
            max_states: DEFAULT_MAX_STATES,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub bound: usize,
    pub horizon: usize,
    pub universe_size: usize,
    pub iterations: usize,
    pub saturated_states: usize,
    /// Seeds grouped by symbolic bisimilarity, as positions into the seed list.
    pub symbolic: Vec<Vec<usize>>,
    /// Seeds grouped by bounded saturated bisimilarity.
    pub oracle: Vec<Vec<usize>>,
}

impl OracleReport {
    pub fn agree(&self) -> bool {
        self.symbolic == self.oracle
    }
}

pub fn oracle_check<I: Instance>(
    inst: &I,
    seeds: &[I::State],
    opts: &OracleOptions,
) -> EngineResult<OracleReport> {
    let m = minimize(
        inst,
        seeds,
        &MinimizeOptions {
            max_states: opts.max_states,
            max_iters: opts.max_iters,
            ..MinimizeOptions::default()
        },
    )?;
    let bound = opts
        .bound
        .unwrap_or_else(|| inst.sufficient_bound(m.lts.states()));
    let horizon = opts
        .horizon
        .or_else(|| inst.oracle_horizon(m.lts.len(), m.iterations))
        .unwrap_or(m.lts.len());
    let seed_ids: Vec<usize> = seeds.iter().map(|s| m.lts.id_of(s).unwrap()).collect();
    let symbolic = m.partition.restrict(&seed_ids);

    let sat = bounded_saturated_lts(inst, seeds, bound, Some(horizon), opts.max_states)?;
    let ks = ks_refine(&sat.to_plain(inst));
    let sat_ids: Vec<usize> = seeds.iter().map(|s| sat.id_of(s).unwrap()).collect();
    let oracle = ks.partition.restrict(&sat_ids);

    Ok(OracleReport {
        bound,
        horizon,
        universe_size: m.lts.len(),
        iterations: m.iterations,
        saturated_states: sat.len(),
        symbolic,
        oracle,
    })
}
