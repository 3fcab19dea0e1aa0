use std::fmt::Write;

use crate::report::{Edge, Report};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn edge_label(ctx: &str, obs: &str) -> String {
    format!("{ctx} , {obs}")
}

pub fn block(r: &Report, members: &[usize]) -> String {
    let names: Vec<&str> = members
        .iter()
        .map(|&i| r.universe[i].show.as_str())
        .collect();
    format!("{{{}}}", names.join(", "))
}

pub fn blocks_line(r: &Report, blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| block(r, b))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn text_lts(r: &Report) -> String {
    let mut s = String::new();
    writeln!(s, "states: {}", r.universe.len()).unwrap();
    for st in &r.universe {
        writeln!(s, "  {}  {}", st.id, st.show).unwrap();
    }
    writeln!(s, "transitions: {}", r.lts.len()).unwrap();
    for e in &r.lts {
        writeln!(
            s,
            "  {} --{},{}--> {}",
            r.universe[e.src].show, e.ctx, e.obs, r.universe[e.tgt].show
        )
        .unwrap();
    }
    s
}

pub fn dot_lts(r: &Report) -> String {
    let mut s = String::from("digraph lts {\n");
    for st in &r.universe {
        let style = if r.seeds.contains(&st.id) {
            ", style=bold"
        } else {
            ""
        };
        writeln!(s, "  n{} [label={}{style}];", st.id, quote(&st.show)).unwrap();
    }
    for e in &r.lts {
        writeln!(
            s,
            "  n{} -> n{} [label={}];",
            e.src,
            e.tgt,
            quote(&edge_label(&e.ctx, &e.obs))
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}

/// The quotient graph: one node per block.
pub fn dot_quotient(r: &Report, edges: &[Edge]) -> String {
    let mut s = String::from("digraph quotient {\n");
    for (b, members) in r.blocks.iter().enumerate() {
        writeln!(s, "  b{b} [label={}];", quote(&block(r, members))).unwrap();
    }
    for e in edges {
        writeln!(
            s,
            "  b{} -> b{} [label={}];",
            e.src,
            e.tgt,
            quote(&edge_label(&e.ctx, &e.obs))
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}
