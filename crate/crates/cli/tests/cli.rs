use std::path::PathBuf;
use std::process::{Command, Output};

use symbis_cli::Report;

fn model(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../models")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn symbis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn slts_text_for_one_net() {
    let o = symbis(&["slts", &model("n1.net"), "--seed", "m0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("a --∅,α--> b\n"), "{out}");
    assert!(out.contains("b --$,β--> b\n"), "{out}");
    assert!(out.contains("transitions: 2\n"), "{out}");
}

#[test]
fn slts_dot_for_swc() {
    let o = symbis(&[
        "slts",
        &model("swc_gamma.swc"),
        "--seed",
        "g1",
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    let from_seed = out
        .lines()
        .filter(|l| l.trim_start().starts_with("n0 ->"))
        .count();
    assert_eq!(from_seed, 2, "{out}");
}

#[test]
fn minimize_trace_prints_each_partition() {
    let o = symbis(&["minimize", &model("swc_gamma.swc"), "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4, "{out}");
    assert!(lines[0].starts_with("P0: {") && lines[0].matches('{').count() == 1);
    assert_eq!(lines[1]["P1:".len()..], lines[2]["P2:".len()..]);
    assert_eq!(lines[1].matches('{').count(), 4);
    assert_eq!(lines[3], "iterations: 2");
}

#[test]
fn deadlocked_seed_is_one_block() {
    let dir = std::env::temp_dir().join("symbis-cli-test-dead");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("dead.swc");
    std::fs::write(&f, "conf d = \"\" |> 0\n").unwrap();
    let o = symbis(&["minimize", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "blocks: 1\n  {ε▷0}\niterations: 1\n");
}

#[test]
fn bisim_verdicts_and_exit_codes() {
    let nets = model("nets.net");
    let o = symbis(&["bisim", &nets, "--seed", "a", "--seed", "l"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "BISIMILAR\n")
    );
    let o = symbis(&["bisim", &nets, "--seed", "a", "--seed", "c"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(1), "NOT BISIMILAR\n")
    );
    let o = symbis(&["bisim", &nets, "--seed", "r", "--seed", "r"]);
    assert_eq!(o.status.code(), Some(0));
    let o = symbis(&["bisim", &nets, "--seed", "a"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_check_agrees_on_examples() {
    let runs: [&[&str]; 4] = [
        &["swc_gamma.swc", "--bound", "2"],
        &["nets.net", "--bound", "3", "--seed", "a", "--seed", "l"],
        &["nets.net"],
        &["pi_tau.pi", "--bound", "2"],
    ];
    for args in runs {
        let file = model(args[0]);
        let mut argv = vec!["oracle-check", file.as_str()];
        argv.extend(&args[1..]);
        let o = symbis(&argv);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("AGREE"));
    }
}

#[test]
fn insufficient_bound_is_reported() {
    // r only moves after five tokens arrive
    let o = symbis(&[
        "oracle-check",
        &model("nets.net"),
        "--seed",
        "a",
        "--seed",
        "r",
        "--bound",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("DISAGREE"));
    assert!(out.contains("symbolic: {a} {r}"), "{out}");
    assert!(out.contains("oracle:   {a, r}"), "{out}");
}

#[test]
fn errors_map_to_exit_codes() {
    let nets = model("nets.net");
    let o = symbis(&["minimize", &nets, "--max-states", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("3 states"));

    let o = symbis(&[
        "minimize",
        &nets,
        "--max-iters",
        "1",
        "--seed",
        "a",
        "--seed",
        "l",
    ]);
    assert_eq!(o.status.code(), Some(3));

    let o = symbis(&["minimize", &nets, &model("pi_tau.pi")]);
    assert_eq!(o.status.code(), Some(2));

    let o = symbis(&["minimize", &nets, "--seed", "nope"]);
    assert_eq!(o.status.code(), Some(2));

    let o = symbis(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_carry_file_line_and_column() {
    let dir = std::env::temp_dir().join("symbis-cli-test-parse");
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.pi");
    std::fs::write(&empty, "").unwrap();
    let o = symbis(&["slts", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let bad = dir.join("bad.pi");
    std::fs::write(&bad, "# second file\nproc q = 'a<\n").unwrap();
    let o = symbis(&["slts", &model("pi_tau.pi"), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.pi:2:13"), "{err}");
}

#[test]
fn json_round_trips() {
    let o = symbis(&[
        "minimize",
        &model("nets.net"),
        "--seed",
        "a",
        "--seed",
        "l",
        "--format",
        "json",
        "--trace",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.blocks.len(), 5);
    assert_eq!(r.partition().blocks(), r.blocks.as_slice());
    assert_eq!(r.history.last(), Some(&r.blocks));
    let again = Report::from_json(&r.to_json()).unwrap();
    assert_eq!(again, r);
    for e in &r.lts {
        assert!(e.src < r.universe.len() && e.tgt < r.universe.len());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["minimize", "--format", "json"][..],
        &["slts", "--format", "dot"],
        &["saturate", "--depth", "2"],
    ] {
        let mut full: Vec<String> = args.to_vec().into_iter().map(String::from).collect();
        full.insert(1, model("nets.net"));
        let argv: Vec<&str> = full.iter().map(String::as_str).collect();
        assert_eq!(stdout(&symbis(&argv)), stdout(&symbis(&argv)));
    }
}

#[test]
fn saturate_lists_context_moves() {
    let o = symbis(&["saturate", &model("n1.net"), "--seed", "m0", "--bound", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("a --$,α--> b$\n"), "{out}");
    assert!(out.starts_with("bound: 1\n"));
}

#[test]
fn parallel_flag_gives_the_same_partition() {
    let nets = model("nets.net");
    let seq = stdout(&symbis(&["minimize", &nets]));
    let par = stdout(&symbis(&["minimize", &nets, "--parallel"]));
    assert_eq!(seq, par);
}
