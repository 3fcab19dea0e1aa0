//! Derivations between transitions, dominance, normalization and saturation.

use std::collections::BTreeSet;

use crate::system::{Instance, TransitionOf, TransitionSetOf};

/// The target obtained by deriving `t1` into the context `c2` with observation `o2`.
pub fn derives<I: Instance>(
    inst: &I,
    t1: &TransitionOf<I>,
    c2: &I::Ctx,
    o2: &I::Obs,
) -> Option<I::State> {
    let d = inst.residual(&t1.ctx, c2)?;
    let e = inst.rule_lookup(&d, &t1.obs, o2)?;
    inst.apply(&e, &t1.tgt).ok()
}

/// Derivation where the target context is first placed inside `d`.
pub fn derive_under<I: Instance>(
    inst: &I,
    d: &I::Ctx,
    t1: &TransitionOf<I>,
    c2: &I::Ctx,
    o2: &I::Obs,
) -> Option<I::State> {
    let dc = inst.compose(d, c2).ok()?;
    derives(inst, t1, &dc, o2)
}

/// `t1 ⊢ t2`: deriving `t1` into the label of `t2` yields exactly its target.
pub fn derives_transition<I: Instance>(
    inst: &I,
    t1: &TransitionOf<I>,
    t2: &TransitionOf<I>,
) -> bool {
    derives(inst, t1, &t2.ctx, &t2.obs).as_ref() == Some(&t2.tgt)
}

/// Strict dominance: `t1 ⊢ t2` but not `t2 ⊢ t1`.
pub fn dominates<I: Instance>(inst: &I, t1: &TransitionOf<I>, t2: &TransitionOf<I>) -> bool {
    derives_transition(inst, t1, t2) && !derives_transition(inst, t2, t1)
}

/// Mutual derivability.
pub fn equivalent<I: Instance>(inst: &I, t1: &TransitionOf<I>, t2: &TransitionOf<I>) -> bool {
    derives_transition(inst, t1, t2) && derives_transition(inst, t2, t1)
}

/// Removes every member strictly dominated by another member.
///
/// Panics if two distinct members are equivalent: all supported instances
/// have trivial equivalence classes.
pub fn normalize<I: Instance>(inst: &I, a: &TransitionSetOf<I>) -> TransitionSetOf<I> {
    let items: Vec<_> = a.iter().collect();
    for (i, t) in items.iter().enumerate() {
        for u in &items[i + 1..] {
            assert!(
                !equivalent(inst, t, u),
                "distinct equivalent transitions {t:?} and {u:?}"
            );
        }
    }
    let kept = items
        .iter()
        .filter(|t| !items.iter().any(|u| dominates(inst, u, t)))
        .map(|t| (*t).clone());
    TransitionSetOf::<I>::new(a.source.clone(), kept)
}

/// Closure of `a` under derivation, restricted to contexts of size at most `k`.
pub fn saturate_set<I: Instance>(inst: &I, a: &TransitionSetOf<I>, k: usize) -> TransitionSetOf<I> {
    let sort = inst.sort_of(&a.source);
    let contexts = inst.contexts_from(&sort, k);
    let mut out = BTreeSet::new();
    for t in a.iter() {
        for o2 in inst.rule_observations(&t.obs) {
            for c2 in &contexts {
                if let Some(q) = derives(inst, t, c2, &o2) {
                    out.insert(TransitionOf::<I>::new(c2.clone(), o2.clone(), q));
                }
            }
        }
    }
    TransitionSetOf::<I> {
        source: a.source.clone(),
        transitions: out,
    }
}

/// Dominance implies a strictly smaller context.  Returns the offending pairs.
pub fn well_foundedness_violations<I: Instance>(
    inst: &I,
    a: &TransitionSetOf<I>,
) -> Vec<(TransitionOf<I>, TransitionOf<I>)> {
    let mut bad = Vec::new();
    for t in a.iter() {
        for u in a.iter() {
            if dominates(inst, t, u) && inst.ctx_size(&t.ctx) >= inst.ctx_size(&u.ctx) {
                bad.push((t.clone(), u.clone()));
            }
        }
    }
    bad
}

pub fn check_well_founded<I: Instance>(inst: &I, a: &TransitionSetOf<I>) -> bool {
    well_foundedness_violations(inst, a).is_empty()
}
