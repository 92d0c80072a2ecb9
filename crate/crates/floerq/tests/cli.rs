use std::path::PathBuf;
use std::process::Command;

use floerq::report::Envelope;
use floerq::{run, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn floerq(args: &[&str]) -> Outcome {
    run(std::iter::once("floerq").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (Outcome, Envelope) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = floerq(&full);
    let env: Envelope = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out, env)
}

#[test]
fn steenrod_examples() {
    let out = floerq(&["steenrod", "apply", "--op", "Q1", "--ring", "rp:7", "--elem", "x^1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "x^4\n"));
    assert_eq!(floerq(&["steenrod", "milnor", "--i", "1"]).stdout, "Sq(3) + Sq(2,1)\n");
    assert_eq!(floerq(&["steenrod", "normalize", "--op", "Sq2 Sq2"]).stdout, "Sq(3,1)\n");
    assert_eq!(floerq(&["steenrod", "normalize", "--op", "Sq1 Sq1"]).stdout, "0\n");
    assert_eq!(floerq(&["steenrod", "available", "--n", "9"]).stdout, "0 1 2\n");
    assert_eq!(floerq(&["steenrod", "available", "--gate", "tauMU:2", "--i", "1"]).stdout, "true\n");
    assert_eq!(floerq(&["steenrod", "available", "--gate", "tauMU:1", "--i", "1"]).stdout, "false\n");
    assert_eq!(floerq(&["steenrod", "apply", "--op", "Sq1", "--ring", "rp:5", "--elem", "x^2"]).stdout, "0\n");
}

#[test]
fn qclass_examples() {
    assert_eq!(floerq(&["qclass", "universal", "--i", "0"]).stdout, "w1\n");
    assert_eq!(floerq(&["qclass", "universal", "--i", "1"]).stdout, "w1^3 + w1*w2 + w3\n");
    assert_eq!(floerq(&["qclass", "rpn", "--n", "4", "--i", "1"]).stdout, "x^3\n");
    assert_eq!(floerq(&["qclass", "rpn", "--n", "5", "--i", "1"]).stdout, "0\n");
    assert_eq!(floerq(&["qclass", "bundle", &data("tangent_rp4.json"), "--i", "1"]).stdout, "x^3\n");
    assert_eq!(floerq(&["qclass", "bundle", &data("formal_w.json"), "--i", "1"]).stdout, "w1^3 + w1*w2 + w3\n");
}

#[test]
fn flowcat_commands() {
    let out = floerq(&["flowcat", "check", &data("d2_violation.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("d^2 (a, c) = 1"), "{}", out.stdout);
    assert_eq!(floerq(&["flowcat", "check", &data("rp2_morse.json")]).code, 0);

    let z = floerq(&["flowcat", "homology", &data("rp2_morse.json"), "--coeff", "z"]);
    assert_eq!(z.stdout, "HF_0 = Z\nHF_1 = Z/2\nHF_2 = 0\n");
    let f2 = floerq(&["flowcat", "homology", &data("rp2_morse.json")]);
    assert_eq!(f2.stdout, "HF_0 = F2\nHF_1 = F2\nHF_2 = F2\n");
    let f3 = floerq(&["flowcat", "homology", &data("rp2_morse.json"), "--coeff", "fp:3"]);
    assert_eq!(f3.stdout, "HF_0 = F3\nHF_1 = 0\nHF_2 = 0\n");

    let bad = floerq(&["flowcat", "homology", &data("d2_violation.json")]);
    assert_eq!(bad.code, 1);

    let (_, env) = json(&["flowcat", "obstructions", "--ring", "MU", "--max-gap", "12"]);
    let floerq::report::Report::FlowcatObstructions(ob) = env.report else { panic!() };
    let groups: Vec<&str> = ob.entries.iter().map(|e| e.group.as_str()).collect();
    assert_eq!(groups, ["Z", "0", "Z", "0", "Z^2", "0", "Z^3", "0", "Z^5", "0", "Z^7"]);

    let out = floerq(&["flowcat", "obstructions", &data("rp2_morse.json"), "--ring", "tauMU:1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("(e2, e0) gap 2: pi_0 tauMU:1 = Z"), "{}", out.stdout);
}

#[test]
fn ohpoz_exit_codes() {
    let ok = floerq(&["ohpoz", "analyze", &data("pt_plus_rp6.json")]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    assert!(ok.stdout.contains("collapse forced"));
    let bad = floerq(&["ohpoz", "analyze", &data("pt_plus_rp6_misplaced.json")]);
    assert_eq!(bad.code, 3);
    assert!(bad.stdout.contains("contradiction at residue 7"));

    let search = floerq(&["ohpoz", "search", "--n", "7", "--shape", "pt+conn"]);
    assert_eq!(search.code, 0);
    let profiles: Vec<&str> = search.stdout.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(profiles, ["1,1,1,1,1,1,1"]);
    let conn = floerq(&["ohpoz", "search", "--n", "5"]);
    assert_eq!(conn.stdout.lines().next(), Some("1,1,1,1,1,1"));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"n\": 7,\n  \"N_mu\": }").unwrap();
    let out = floerq(&["ohpoz", "analyze", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("broken.json") && out.stderr.contains("line 2"), "{}", out.stderr);

    std::fs::write(&path, "{\"schema\": 2, \"N\": 4, \"generators\": []}").unwrap();
    assert_eq!(floerq(&["flowcat", "check", path.to_str().unwrap()]).code, 1);

    assert_eq!(floerq(&["rpcp", "report", "--n", "4"]).code, 1);
    assert_eq!(floerq(&["steenrod", "apply", "--op", "Sq(", "--ring", "rp:3", "--elem", "x"]).code, 1);
    assert_eq!(floerq(&["steenrod", "apply", "--op", "Q0", "--ring", "rp:3", "--elem", "x + x^2"]).code, 1);
    assert_eq!(floerq(&["steenrod", "frobnicate"]).code, 1);
    assert_eq!(floerq(&["flowcat", "check", "/nonexistent.json"]).code, 1);
    assert_eq!(floerq(&["--help"]).code, 0);
}

#[test]
fn rpcp_report_is_consistent() {
    for n in [3u32, 5, 7, 9, 11] {
        let (out, env) = json(&["rpcp", "report", "--n", &n.to_string()]);
        assert_eq!(out.code, 0, "n={n}");
        let floerq::report::Report::RpcpReport(r) = env.report else { panic!() };
        assert!(r.consistent && r.alphrpn.mismatches.is_empty());
        assert_eq!(r.pss_range, Some((1, n as i64 - 1)));
    }
    let text = floerq(&["rpcp", "report", "--n", "9", "--r", "1"]).stdout;
    assert!(text.contains("r=1 q1(TC) = y3"), "{text}");
    assert!(text.contains("d=2  idq: y2*y3 + y5"), "{text}");
}

#[test]
fn json_round_trips_byte_for_byte() {
    let commands: Vec<Vec<String>> = [
        vec!["steenrod", "apply", "--op", "Q2", "--ring", "poly:3", "--elem", "t1*t2"],
        vec!["steenrod", "milnor", "--i", "3"],
        vec!["steenrod", "available", "--gate", "HZ", "--i", "1"],
        vec!["qclass", "universal", "--i", "2"],
        vec!["flowcat", "check", "D2"],
        vec!["flowcat", "homology", "RP2", "--coeff", "z"],
        vec!["flowcat", "obstructions", "RP2", "--ring", "tauMU:2"],
        vec!["ohpoz", "analyze", "PT", "--page"],
        vec!["ohpoz", "search", "--n", "7", "--shape", "pt+conn"],
        vec!["rpcp", "report", "--n", "7"],
    ]
    .iter()
    .map(|c| {
        c.iter()
            .map(|a| match *a {
                "D2" => data("d2_violation.json"),
                "RP2" => data("rp2_morse.json"),
                "PT" => data("pt_plus_rp6.json"),
                a => a.to_string(),
            })
            .collect()
    })
    .collect();
    for c in &commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        let (out, env) = json(&args);
        assert_eq!(env.schema, 1);
        assert_eq!(env.to_json(), out.stdout, "{args:?}");
        let again: Envelope = serde_json::from_str(&env.to_json()).unwrap();
        assert_eq!(again, env);
        assert_eq!(json(&args).0.stdout, out.stdout, "nondeterministic: {args:?}");
    }
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_floerq");
    let out = Command::new(bin).args(["ohpoz", "analyze", &data("pt_plus_rp6_misplaced.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let lib = floerq(&["ohpoz", "analyze", &data("pt_plus_rp6_misplaced.json")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
    let out = Command::new(bin).args(["qclass", "universal", "--i", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "w1^3 + w1*w2 + w3\n");
}
