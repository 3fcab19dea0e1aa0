use serde::Serialize;
use symbis::engine::{
    bounded_saturated_lts, close_universe, minimize, oracle_check, MinimizeOptions, OracleOptions,
};
use symbis::opennet::NetInstance;
use symbis::Instance;

use crate::error::CliError;
use crate::load::{load, Model};
use crate::render;
use crate::report::{blocks_of, Edge, Report};
use crate::{Command, Common, Format};

/// What to print and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

fn ok(text: String) -> Outcome {
    Outcome { text, code: 0 }
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    let common = match cmd {
        Command::Slts(c)
        | Command::Minimize(c)
        | Command::Bisim(c)
        | Command::OracleCheck(c)
        | Command::Saturate { common: c, .. } => c,
    };
    match load(&common.files)? {
        Model::Swc(m) => execute(&m.instance, &m.states, cmd, common),
        Model::Net(m) => execute(&NetInstance, &m.markings, cmd, common),
        Model::Pi(m) => execute(&m.instance, &m.states, cmd, common),
    }
}

fn seeds<I: Instance>(
    named: &[(String, I::State)],
    wanted: &[String],
) -> Result<Vec<(String, I::State)>, CliError> {
    if wanted.is_empty() {
        return Ok(named.to_vec());
    }
    wanted
        .iter()
        .map(|w| {
            named
                .iter()
                .find(|(n, _)| n == w)
                .cloned()
                .ok_or_else(|| CliError::Usage(format!("unknown state `{w}`")))
        })
        .collect()
}

fn execute<I: Instance>(
    inst: &I,
    named: &[(String, I::State)],
    cmd: &Command,
    c: &Common,
) -> Result<Outcome, CliError> {
    if c.max_states == 0 {
        return Err(CliError::Usage("--max-states must be at least 1".into()));
    }
    let named_seeds = seeds::<I>(named, &c.seeds)?;
    let names: Vec<&str> = named_seeds.iter().map(|(n, _)| n.as_str()).collect();
    let seeds: Vec<I::State> = named_seeds.iter().map(|(_, p)| p.clone()).collect();
    let mopts = MinimizeOptions {
        max_states: c.max_states,
        max_iters: c.max_iters,
        parallel: c.parallel,
        trace: c.trace,
    };
    match cmd {
        Command::Slts(_) => {
            let lts = close_universe(inst, &seeds, c.max_states)?;
            let r = Report::from_symbolic(inst, &lts);
            Ok(ok(match c.format {
                Format::Text => render::text_lts(&r),
                Format::Json => r.to_json() + "\n",
                Format::Dot => render::dot_lts(&r),
            }))
        }
        Command::Minimize(_) => {
            let m = minimize(inst, &seeds, &mopts)?;
            let mut r = Report::from_symbolic(inst, &m.lts);
            r.blocks = blocks_of(&m.partition);
            r.iterations = m.iterations;
            r.history = m.history.iter().map(blocks_of).collect();
            let text = match c.format {
                Format::Json => r.to_json() + "\n",
                Format::Dot => {
                    let edges: Vec<Edge> = m
                        .quotient
                        .iter()
                        .map(|e| Edge {
                            src: e.src,
                            ctx: inst.show_ctx(&e.ctx),
                            obs: inst.show_obs(&e.obs),
                            tgt: e.tgt,
                        })
                        .collect();
                    render::dot_quotient(&r, &edges)
                }
                Format::Text => {
                    let mut s = String::new();
                    if c.trace {
                        for (i, p) in r.history.iter().enumerate() {
                            s += &format!("P{i}: {}\n", render::blocks_line(&r, p));
                        }
                    } else {
                        s += &format!("blocks: {}\n", r.blocks.len());
                        for b in &r.blocks {
                            s += &format!("  {}\n", render::block(&r, b));
                        }
                    }
                    s + &format!("iterations: {}\n", r.iterations)
                }
            };
            Ok(ok(text))
        }
        Command::Bisim(_) => {
            if seeds.len() != 2 {
                return Err(CliError::Usage(
                    "bisim needs exactly two --seed arguments".into(),
                ));
            }
            let m = minimize(inst, &seeds, &mopts)?;
            let same = m.equivalent(&seeds[0], &seeds[1]);
            let text = match c.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Verdict {
                        bisimilar: bool,
                        iterations: usize,
                        universe: usize,
                    }
                    let v = Verdict {
                        bisimilar: same,
                        iterations: m.iterations,
                        universe: m.lts.len(),
                    };
                    serde_json::to_string_pretty(&v).expect("verdict serializes") + "\n"
                }
                _ if same => "BISIMILAR\n".to_string(),
                _ => "NOT BISIMILAR\n".to_string(),
            };
            Ok(Outcome {
                text,
                code: if same { 0 } else { 1 },
            })
        }
        Command::Saturate { depth, .. } => {
            let bound = match c.bound {
                Some(k) => k,
                None => {
                    let lts = close_universe(inst, &seeds, c.max_states)?;
                    inst.sufficient_bound(lts.states())
                }
            };
            let sat = bounded_saturated_lts(inst, &seeds, bound, Some(*depth), c.max_states)?;
            let mut lts = Vec::new();
            for (src, out) in sat.succ.iter().enumerate() {
                for ((ctx, obs), tgt) in out {
                    lts.push(Edge {
                        src,
                        ctx: inst.show_ctx(ctx),
                        obs: inst.show_obs(obs),
                        tgt: *tgt,
                    });
                }
            }
            let r = Report {
                universe: Report::universe_of(inst, &sat.states),
                blocks: Vec::new(),
                lts,
                iterations: 0,
                seeds: sat.roots.clone(),
                history: Vec::new(),
            };
            Ok(ok(match c.format {
                Format::Text => format!("bound: {bound}\n") + &render::text_lts(&r),
                Format::Json => r.to_json() + "\n",
                Format::Dot => render::dot_lts(&r),
            }))
        }
        Command::OracleCheck(_) => {
            let opts = OracleOptions {
                bound: c.bound,
                horizon: None,
                max_states: c.max_states,
                max_iters: c.max_iters,
            };
            let rep = oracle_check(inst, &seeds, &opts)?;
            let agree = rep.agree();
            let text = match c.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Check<'a> {
                        agree: bool,
                        bound: usize,
                        horizon: usize,
                        universe: usize,
                        iterations: usize,
                        saturated_states: usize,
                        seeds: Vec<String>,
                        symbolic: &'a [Vec<usize>],
                        oracle: &'a [Vec<usize>],
                    }
                    let v = Check {
                        agree,
                        bound: rep.bound,
                        horizon: rep.horizon,
                        universe: rep.universe_size,
                        iterations: rep.iterations,
                        saturated_states: rep.saturated_states,
                        seeds: names.iter().map(|n| n.to_string()).collect(),
                        symbolic: &rep.symbolic,
                        oracle: &rep.oracle,
                    };
                    serde_json::to_string_pretty(&v).expect("check serializes") + "\n"
                }
                _ => {
                    let show = |groups: &[Vec<usize>]| {
                        groups
                            .iter()
                            .map(|g| {
                                let members: Vec<&str> = g.iter().map(|&i| names[i]).collect();
                                format!("{{{}}}", members.join(", "))
                            })
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    let mut s = format!(
                        "bound {}, horizon {}, universe {}, saturated states {}\n",
                        rep.bound, rep.horizon, rep.universe_size, rep.saturated_states
                    );
                    if agree {
                        s += &format!("AGREE {}\n", show(&rep.symbolic));
                    } else {
                        s += "DISAGREE\n";
                        s += &format!("  symbolic: {}\n", show(&rep.symbolic));
                        s += &format!("  oracle:   {}\n", show(&rep.oracle));
                    }
                    s
                }
            };
            Ok(Outcome {
                text,
                code: if agree { 0 } else { 1 },
            })
        }
    }
}
