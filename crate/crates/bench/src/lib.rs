//! Workloads for the benchmarks.

use std::collections::BTreeSet;
use std::sync::Arc;

use symbis::asyncpi::{parse_pi, PiModel};
use symbis::multiset::Multiset;
use symbis::opennet::{MarkedNet, NetDef, NetTransition};
use symbis::swc::{parse_swc, SwcModel};

pub fn swc_gamma() -> SwcModel {
    parse_swc(
        "conf g1 = \"\" |> \"a\".\"ab\".0 + \"ab\".\"\".0\nconf g2 = \"\" |> \"a\".\"ab\".0\n",
    )
    .expect("example parses")
}

pub fn pi_tau() -> PiModel {
    parse_pi(
        "names a b\n\
         proc p1 = tau.new y. 'y<a> + a(b).'a<b> @1\n\
         proc p2 = tau.0 @1\n\
         proc p3 = tau.0 + a(b).'a<b> @1\n",
    )
    .expect("example parses")
}

/// A line of `n` places `c0 .. c{n-1}`, each step consuming one input
/// token, followed by a loop on the last place.
pub fn token_chain(n: usize) -> MarkedNet {
    let places: Vec<String> = (0..n)
        .map(|i| format!("c{i}"))
        .chain(["$".into()])
        .collect();
    let mut transitions: Vec<NetTransition> = (0..n.saturating_sub(1))
        .map(|i| NetTransition {
            name: format!("t{i}"),
            label: if i % 2 == 0 { "alpha" } else { "beta" }.into(),
            pre: [places[i].clone(), "$".into()].into_iter().collect(),
            post: Multiset::singleton(places[i + 1].clone()),
        })
        .collect();
    transitions.push(NetTransition {
        name: "loop".into(),
        label: "beta".into(),
        pre: Multiset::singleton(places[n - 1].clone()),
        post: Multiset::singleton(places[n - 1].clone()),
    });
    let net = Arc::new(NetDef {
        name: format!("chain{n}"),
        places,
        inputs: BTreeSet::from(["$".to_string()]),
        transitions,
    });
    MarkedNet::new(&net, Multiset::singleton("c0".to_string()))
}
