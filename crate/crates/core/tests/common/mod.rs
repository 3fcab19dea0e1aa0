//! Random instances shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use symbis::asyncpi::term::{Guard, Name, Proc};
use symbis::asyncpi::PiState;
use symbis::multiset::Multiset;
use symbis::opennet::{MarkedNet, NetDef, NetTransition};
use symbis::swc::{Config, SwcProc};
use symbis::{Instance, TransitionSetOf};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// swc: alphabet {a, b}, words up to 3 letters, depth up to 3.

pub fn swc_word(rng: &mut ChaCha8Rng, max: usize) -> String {
    let len = rng.gen_range(0..=max);
    (0..len)
        .map(|_| if rng.gen() { 'a' } else { 'b' })
        .collect()
}

pub fn swc_proc(rng: &mut ChaCha8Rng, depth: usize) -> SwcProc {
    if depth == 0 {
        return SwcProc::Nil;
    }
    match rng.gen_range(0..10) {
        0 => SwcProc::Nil,
        1..=6 => SwcProc::prefix(&swc_word(rng, 3), swc_proc(rng, depth - 1)),
        _ => SwcProc::sum(swc_proc(rng, depth), swc_proc(rng, depth - 1)),
    }
}

pub fn swc_config(rng: &mut ChaCha8Rng) -> Config {
    let p = swc_proc(rng, 3);
    Config::new(&swc_word(rng, 3), p)
}

/// A configuration bisimilar to `c` by construction, or a small edit of it.
pub fn swc_perturb(rng: &mut ChaCha8Rng, c: &Config) -> Config {
    let p = (*c.proc).clone();
    let q = match rng.gen_range(0..4) {
        0 => SwcProc::sum(p.clone(), p),
        1 => SwcProc::sum(p, SwcProc::Nil),
        2 => SwcProc::sum(p, SwcProc::prefix(&swc_word(rng, 3), SwcProc::Nil)),
        _ => return Config::new(&format!("{}{}", c.res, swc_word(rng, 1)), p),
    };
    Config::new(&c.res, q)
}

// nets: up to 4 places, up to 3 transitions, pre and post of size up to 3.

fn net_multiset(rng: &mut ChaCha8Rng, places: &[String], min: usize) -> Multiset<String> {
    let n = rng.gen_range(min..=3);
    (0..n)
        .map(|_| places.choose(rng).unwrap().clone())
        .collect()
}

pub fn net_def(rng: &mut ChaCha8Rng, name: &str) -> NetDef {
    let np = rng.gen_range(2..=4);
    let places: Vec<String> = (0..np).map(|i| format!("p{i}")).collect();
    let ni = rng.gen_range(1..np);
    let inputs: BTreeSet<String> = places[np - ni..].iter().cloned().collect();
    let nt = rng.gen_range(1..=3);
    let transitions = (0..nt)
        .map(|i| NetTransition {
            name: format!("t{i}"),
            label: ["alpha", "beta"].choose(rng).unwrap().to_string(),
            pre: net_multiset(rng, &places, 1),
            post: net_multiset(rng, &places, 0),
        })
        .collect();
    NetDef {
        name: name.to_string(),
        places,
        inputs,
        transitions,
    }
}

pub fn net_marking(rng: &mut ChaCha8Rng, net: &NetDef) -> Multiset<String> {
    let internal: Vec<String> = net
        .places
        .iter()
        .filter(|p| !net.inputs.contains(*p))
        .cloned()
        .collect();
    if internal.is_empty() {
        return Multiset::new();
    }
    let n = rng.gen_range(0..=2);
    (0..n)
        .map(|_| internal.choose(rng).unwrap().clone())
        .collect()
}

pub fn marked_net(rng: &mut ChaCha8Rng, name: &str) -> MarkedNet {
    let net = Arc::new(net_def(rng, name));
    let m = net_marking(rng, &net);
    MarkedNet::new(&net, m)
}

/// Two states over nets sharing places and inputs: either the same net
/// with another marking, or a renamed copy carrying a duplicated or
/// relabelled transition.
pub fn net_pair(rng: &mut ChaCha8Rng, name: &str) -> (MarkedNet, MarkedNet) {
    let p = marked_net(rng, name);
    let q = match rng.gen_range(0..3) {
        0 => {
            let m = net_marking(rng, &p.net);
            MarkedNet::new(&p.net, m)
        }
        1 => {
            let mut d = (*p.net).clone();
            d.name = format!("{name}'");
            let mut t = d.transitions.choose(rng).unwrap().clone();
            t.name = "dup".to_string();
            d.transitions.push(t);
            MarkedNet::new(&Arc::new(d), p.marking.clone())
        }
        _ => {
            let mut d = (*p.net).clone();
            d.name = format!("{name}'");
            let t = d.transitions.choose_mut(rng).unwrap();
            t.label = if t.label == "alpha" { "beta" } else { "alpha" }.to_string();
            MarkedNet::new(&Arc::new(d), p.marking.clone())
        }
    };
    (p, q)
}

// pi: free names among {1, 2}, prefix depth up to 3, no replication.

fn pi_name(rng: &mut ChaCha8Rng, bound: u32) -> Name {
    let k = rng.gen_range(0..2 + bound);
    if k < 2 {
        Name::Free(k + 1)
    } else {
        Name::Bound(k - 2)
    }
}

pub fn pi_proc(rng: &mut ChaCha8Rng, depth: usize, bound: u32) -> Proc {
    let leaf = depth == 0;
    match rng.gen_range(0..if leaf { 3 } else { 10 }) {
        0 => Proc::Nil,
        1 | 2 => Proc::Out(pi_name(rng, bound), pi_name(rng, bound)),
        3 | 4 => Proc::tau(pi_proc(rng, depth - 1, bound)),
        5 | 6 => Proc::input(pi_name(rng, bound), pi_proc(rng, depth - 1, bound + 1)),
        7 => Proc::sum([pi_guard(rng, depth, bound), pi_guard(rng, depth, bound)]),
        8 => Proc::par([
            pi_proc(rng, depth - 1, bound),
            pi_proc(rng, depth - 1, bound),
        ]),
        _ => Proc::res(pi_proc(rng, depth, bound + 1)),
    }
}

fn pi_guard(rng: &mut ChaCha8Rng, depth: usize, bound: u32) -> Guard {
    if rng.gen() {
        Guard::Tau(Arc::new(pi_proc(rng, depth - 1, bound)))
    } else {
        Guard::In(
            pi_name(rng, bound),
            Arc::new(pi_proc(rng, depth - 1, bound + 1)),
        )
    }
}

pub fn pi_state(rng: &mut ChaCha8Rng) -> PiState {
    PiState::new(pi_proc(rng, 3, 0), 2)
}

/// A state bisimilar to `p` by construction, or a small edit of it.
pub fn pi_perturb(rng: &mut ChaCha8Rng, p: &PiState) -> PiState {
    let body = (*p.proc).clone();
    let q = match rng.gen_range(0..4) {
        0 => Proc::par([body, Proc::res(Proc::Out(Name::Bound(0), Name::Free(1)))]),
        1 => Proc::tau(body),
        2 => Proc::par([body, Proc::out(rng.gen_range(1..=2), rng.gen_range(1..=2))]),
        _ => Proc::sum([
            Guard::Tau(Arc::new(body)),
            Guard::In(Name::Free(rng.gen_range(1..=2)), Arc::new(Proc::Nil)),
        ]),
    };
    PiState::new(q, 2)
}

/// A random subset of `a`.
pub fn subset<I: Instance>(rng: &mut ChaCha8Rng, a: &TransitionSetOf<I>) -> TransitionSetOf<I> {
    let keep = rng.gen_range(0.2..1.0);
    TransitionSetOf::<I>::new(
        a.source.clone(),
        a.iter().filter(|_| rng.gen_bool(keep)).cloned(),
    )
}
