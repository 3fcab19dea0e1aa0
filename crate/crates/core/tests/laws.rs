//! Property tests for the context category and the inference systems.

mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use symbis::asyncpi::{parse_proc, PiCtx, PiInstance};
use symbis::derivation::{derives, dominates, equivalent};
use symbis::engine::{minimize, MinimizeOptions};
use symbis::multiset::Multiset;
use symbis::opennet::NetInstance;
use symbis::swc::SwcInstance;
use symbis::Instance;

/// Three composable contexts out of `s`, drawn from those of size at most 2.
fn chain<I: Instance>(inst: &I, rng: &mut ChaCha8Rng, s: &I::Sort) -> [I::Ctx; 3] {
    let c1 = inst.contexts_from(s, 2).choose(rng).unwrap().clone();
    let c2 = inst
        .contexts_from(&inst.ctx_target(&c1), 2)
        .choose(rng)
        .unwrap()
        .clone();
    let c3 = inst
        .contexts_from(&inst.ctx_target(&c2), 2)
        .choose(rng)
        .unwrap()
        .clone();
    [c1, c2, c3]
}

fn category_laws<I: Instance>(inst: &I, p: &I::State, [c1, c2, c3]: [I::Ctx; 3]) {
    let s = inst.sort_of(p);
    let id = inst.identity(&s);
    assert_eq!(inst.ctx_size(&id), 0);
    assert_eq!(inst.compose(&id, &c1).unwrap(), c1);
    assert_eq!(
        inst.compose(&c1, &inst.identity(&inst.ctx_target(&c1)))
            .unwrap(),
        c1
    );

    let c12 = inst.compose(&c1, &c2).unwrap();
    let c23 = inst.compose(&c2, &c3).unwrap();
    assert_eq!(
        inst.compose(&c12, &c3).unwrap(),
        inst.compose(&c1, &c23).unwrap()
    );

    assert_eq!(inst.residual(&c1, &c12), Some(c2.clone()));
    if let Some(d) = inst.residual(&c12, &c1) {
        assert_eq!(inst.compose(&c12, &d).unwrap(), c1);
    }

    assert_eq!(
        inst.apply(&c12, p).unwrap(),
        inst.apply(&c2, &inst.apply(&c1, p).unwrap()).unwrap()
    );

    let (n1, n2, n12) = (inst.ctx_size(&c1), inst.ctx_size(&c2), inst.ctx_size(&c12));
    assert!(n12 >= n1 && n12 >= n2);
    if n2 > 0 {
        assert!(n12 > n1);
    }
}

/// Derivation is reflexive and transitive, and dominance is irreflexive.
fn derivation_laws<I: Instance>(inst: &I, p: &I::State, rng: &mut ChaCha8Rng) {
    let ts = inst.symbolic_transitions(p);
    let Some(t) = ts.choose(rng) else { return };
    assert_eq!(derives(inst, t, &t.ctx, &t.obs).as_ref(), Some(&t.tgt));
    assert!(!dominates(inst, t, t));
    assert!(equivalent(inst, t, t));

    let s = inst.sort_of(p);
    let cs = inst.contexts_from(&s, 2);
    let c2 = cs.choose(rng).unwrap();
    for o2 in inst.rule_observations(&t.obs) {
        let Some(q2) = derives(inst, t, c2, &o2) else {
            continue;
        };
        let t2 = symbis::TransitionOf::<I>::new(c2.clone(), o2.clone(), q2);
        let c3 = cs.choose(rng).unwrap();
        for o3 in inst.rule_observations(&o2) {
            if let Some(q3) = derives(inst, &t2, c3, &o3) {
                assert_eq!(derives(inst, t, c3, &o3), Some(q3));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn swc_contexts(seed in any::<u64>()) {
        let inst = SwcInstance::default();
        let mut rng = common::rng(seed);
        let p = common::swc_config(&mut rng);
        let cs = chain(&inst, &mut rng, &inst.sort_of(&p));
        category_laws(&inst, &p, cs);
        derivation_laws(&inst, &p, &mut rng);
    }

    #[test]
    fn net_contexts(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let p = common::marked_net(&mut rng, "P");
        let cs = chain(&NetInstance, &mut rng, &NetInstance.sort_of(&p));
        category_laws(&NetInstance, &p, cs);
        derivation_laws(&NetInstance, &p, &mut rng);
    }

    #[test]
    fn pi_contexts(seed in any::<u64>()) {
        let inst = PiInstance::default();
        let mut rng = common::rng(seed);
        let p = common::pi_state(&mut rng);
        let cs = chain(&inst, &mut rng, &p.sort);
        category_laws(&inst, &p, cs);
        derivation_laws(&inst, &p, &mut rng);
    }

    /// Contexts carrying a renaming compose and act like the sequence of
    /// their actions.
    #[test]
    fn pi_renaming_contexts(seed in any::<u64>()) {
        let inst = PiInstance::default();
        let mut rng = common::rng(seed);
        let p = common::pi_state(&mut rng);
        let particles = |rng: &mut ChaCha8Rng, m: u32| -> Multiset<(u32, u32)> {
            (0..rng.gen_range(0..=2))
                .map(|_| (rng.gen_range(1..=m), rng.gen_range(1..=m)))
                .collect()
        };
        let lift = |rng: &mut ChaCha8Rng, s: u32| {
            let t = s + rng.gen_range(1..=2);
            PiCtx { src: s, tgt: t, particles: particles(rng, t), rename: Some(t) }
        };
        let plain = |rng: &mut ChaCha8Rng, s: u32| {
            let t = s + rng.gen_range(0..=1);
            PiCtx::plain(s, t, particles(rng, t).elements().copied().collect::<Vec<_>>())
        };
        let c1 = if rng.gen() { lift(&mut rng, p.sort) } else { plain(&mut rng, p.sort) };
        let c2 = if rng.gen() { lift(&mut rng, c1.tgt) } else { plain(&mut rng, c1.tgt) };
        let c3 = lift(&mut rng, c2.tgt);
        let c12 = inst.compose(&c1, &c2).unwrap();
        prop_assert_eq!(
            inst.compose(&c12, &c3).unwrap(),
            inst.compose(&c1, &inst.compose(&c2, &c3).unwrap()).unwrap()
        );
        let step = |c: &PiCtx, q| inst.apply(c, q).unwrap();
        prop_assert_eq!(
            step(&inst.compose(&c12, &c3).unwrap(), &p),
            step(&c3, &step(&c2, &step(&c1, &p)))
        );
        if inst.ctx_size(&c2) > 0 {
            prop_assert!(inst.ctx_size(&c12) > inst.ctx_size(&c1));
        }
    }

    #[test]
    fn pi_print_parse_round_trip(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let p = common::pi_state(&mut rng);
        let names = vec!["a".to_string(), "b".to_string()];
        let inst = PiInstance::with_names(names.clone());
        let shown = inst.show_proc(&p.proc);
        let mut table = names;
        prop_assert_eq!(parse_proc(&shown, &mut table).unwrap(), (*p.proc).clone());
    }

    /// The verdict on a pair does not depend on the order of the seeds.
    #[test]
    fn seed_order_is_irrelevant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = SwcInstance::default();
        let p = common::swc_config(&mut rng);
        let q = common::swc_perturb(&mut rng, &p);
        let opts = MinimizeOptions::default();
        let pq = minimize(&inst, &[p.clone(), q.clone()], &opts).unwrap();
        let qp = minimize(&inst, &[q.clone(), p.clone()], &opts).unwrap();
        prop_assert_eq!(pq.equivalent(&p, &q), qp.equivalent(&p, &q));
        prop_assert_eq!(pq.partition.num_blocks(), qp.partition.num_blocks());
    }
}
