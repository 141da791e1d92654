mod support;

use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use resistnet_cli::format::{network_to_json, parse_network, NetworkFormat};
use resistnet_cli::{run_with, tolerance_from, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_with(std::iter::once("resistnet").chain(args.iter().copied()), None)
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", o.stdout))
}

fn temp_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("resistnet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const FOUR_NODE: &str = r#"{"nodes": 4, "edges": [[1, 2, "2"], [2, 3, "2"], [3, 4, "2"], [4, 1, "2"], [2, 4, "3"]]}"#;

#[test]
fn free_lattice_both_modes() {
    let o = run(&[
        "lattice", "--bc", "free", "--dims", "5x4", "--r", "1", "--s", "1", "--from", "0,0", "--to", "3,3", "--mode",
        "both",
    ]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    assert_eq!(v["value_exact"], "2356898/1380027");
    assert!((v["value_float"].as_f64().unwrap() - 1.707863).abs() < 1e-6);
    assert!(v["discrepancy"].as_f64().unwrap() <= 1e-9);
    assert_eq!(v["method"], "closed-form+oracle");
    assert_eq!(v["pair"], serde_json::json!([[0, 0], [3, 3]]));
    assert_eq!(v["spec"], "free2d 5x4 r=1 s=1 (0,0)->(3,3)");
}

#[test]
fn graph_file_one_based() {
    let path = temp_file("four.json", FOUR_NODE);
    let o = run(&[
        "graph",
        "--input",
        &path,
        "--from",
        "1",
        "--to",
        "3",
        "--one-based",
        "--mode",
        "exact",
    ]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let v = json(&o);
    assert_eq!(v["value_exact"], "2");
    assert_eq!(v["method"], "oracle");
    assert_eq!(v["pair"], serde_json::json!([[1], [3]]));
    let o = run(&["graph", "--input", &path, "--from", "1", "--to", "3", "--one-based"]);
    assert!((json(&o)["value_float"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn text_network_and_all_outputs() {
    let path = temp_file("ring.txt", "# ring of three\n0 1 1\n1 2 1 # middle\n2 0 1\n");
    let o = run(&[
        "graph", "--input", &path, "--from", "0", "--to", "1", "--mode", "exact", "--output", "csv",
    ]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "method,value_float,value_exact,pair,spec,discrepancy\noracle,0.6666666666666666,2/3,0->1,network 3 nodes 3 edges,\n");
    let o = run(&[
        "graph", "--input", &path, "--from", "0", "--to", "1", "--output", "text",
    ]);
    assert!(o.stdout.starts_with("method       spectral\n"), "{}", o.stdout);
}

#[test]
fn identity_commands() {
    let o = run(&["identity", "--which", "product-periodic", "--N", "1", "--lambda", "1.0"]);
    assert_eq!(o.code, 0);
    let v = json(&o);
    let want = 1f64.cosh() - 1.0;
    assert!((v["lhs"].as_f64().unwrap() - want).abs() < 1e-15);
    assert!((v["rhs"].as_f64().unwrap() - want).abs() < 1e-15);

    let v = json(&run(&[
        "identity", "--which", "i2", "--N", "12", "--ell", "5", "--lambda", "0.7",
    ]));
    assert!(v["difference"].as_f64().unwrap() < 1e-12);
    let v = json(&run(&["identity", "--which", "i1", "--N", "4", "--lambda", "0"]));
    assert_eq!(v["lhs"], "inf");
    assert_eq!(v["rhs"], "inf");
    assert_eq!(
        run(&["identity", "--which", "i2", "--N", "4", "--ell", "4", "--lambda", "1"]).code,
        4
    );
    assert_eq!(
        run(&["identity", "--which", "i1", "--N", "4", "--lambda", "-1"]).code,
        4
    );
}

#[test]
fn infinite_commands() {
    let v = json(&run(&["infinite", "--delta", "1,0"]));
    assert!((v["value_float"].as_f64().unwrap() - 0.5).abs() < 1e-7);
    let v = json(&run(&[
        "infinite", "--delta", "-1,0,0", "--r", "2", "--s", "2", "--t", "2",
    ]));
    assert!((v["value_float"].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-6);
    let o = run(&["infinite", "--delta", "1,0", "--sizes", "8,16,32", "--bc", "cylinder"]);
    let v = json(&o);
    assert_eq!(v["bc"], "cylinder");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["infinite", "--delta", "1"]).code, 2);
}

#[test]
fn exit_codes() {
    let disconnected = temp_file("two.txt", "0 1 1\n2 3 1\n");
    let bad = temp_file("bad.txt", "0 1\n");
    let four = temp_file("four-b.json", FOUR_NODE);
    let cases: [(&[&str], i32, &str); 8] = [
        (&["graph", "--input", &bad, "--from", "0", "--to", "1"], 2, "parse"),
        (
            &["graph", "--input", "/nonexistent/net.json", "--from", "0", "--to", "1"],
            2,
            "parse",
        ),
        (
            &[
                "lattice", "--bc", "sphere", "--dims", "3x3", "--from", "0,0", "--to", "1,1",
            ],
            2,
            "parse",
        ),
        (
            &[
                "lattice", "--bc", "free", "--dims", "3x3", "--from", "0,0", "--to", "1,a",
            ],
            2,
            "parse",
        ),
        (
            &["graph", "--input", &disconnected, "--from", "0", "--to", "3"],
            3,
            "disconnected",
        ),
        (
            &[
                "graph",
                "--input",
                &disconnected,
                "--from",
                "0",
                "--to",
                "3",
                "--mode",
                "exact",
            ],
            3,
            "disconnected",
        ),
        (
            &["graph", "--input", &four, "--from", "1", "--to", "5", "--one-based"],
            4,
            "range",
        ),
        (
            &[
                "lattice", "--bc", "klein", "--dims", "5x4", "--from", "0,0", "--to", "5,3",
            ],
            4,
            "range",
        ),
    ];
    for (args, code, kind) in cases {
        let o = run(args);
        assert_eq!(o.code, code, "{args:?}: {}", o.stdout);
        assert_eq!(json(&o)["error"]["kind"], kind, "{args:?}");
        assert_eq!(json(&o)["error"]["code"], code);
    }
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn tolerance_variable() {
    assert_eq!(tolerance_from(None).unwrap(), 1e-9);
    assert_eq!(tolerance_from(Some("1e-3")).unwrap(), 1e-3);
    assert!(tolerance_from(Some("-1")).is_err());
    assert!(tolerance_from(Some("lots")).is_err());
    let four = temp_file("four-c.json", FOUR_NODE);
    let args = [
        "resistnet",
        "graph",
        "--input",
        &four,
        "--from",
        "1",
        "--to",
        "2",
        "--one-based",
        "--mode",
        "both",
    ];
    assert_eq!(run_with(args, None).code, 0);
    // Any rounding at all violates a zero tolerance.
    let strict = run_with(args, Some("0"));
    assert_eq!(strict.code, 5, "{}", strict.stdout);
    assert_eq!(json(&strict)["error"]["kind"], "numeric");
    assert_eq!(run_with(args, Some("x")).code, 2);
}

#[test]
fn lattice_network_round_trip_through_graph() {
    let dump = run(&["lattice", "--bc", "moebius", "--dims", "5x4", "--emit-network"]);
    assert_eq!(dump.code, 0);
    let path = temp_file("moebius.json", &dump.stdout);
    let v = json(&run(&[
        "graph", "--input", &path, "--from", "0", "--to", "18", "--mode", "exact",
    ]));
    assert_eq!(v["value_exact"], "6046/6745");
}

#[test]
fn binary_reads_stdin_and_reports_status() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_resistnet"))
        .args(["graph", "--input", "-", "--from", "0", "--to", "2", "--mode", "exact"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 1 1/2\n1 2 1/3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value_exact"], "5/6");

    let out = Command::new(env!("CARGO_BIN_EXE_resistnet"))
        .args(["lattice", "--bc", "free", "--dims", "2", "--from", "0", "--to", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn identical_requests_identical_bytes() {
    for args in [
        &[
            "lattice", "--bc", "klein", "--dims", "6x5", "--r", "2", "--s", "1/3", "--from", "1,2", "--to", "4,0",
            "--mode", "both",
        ][..],
        &[
            "lattice", "--bc", "free", "--dims", "4x4x3", "--from", "0,0,0", "--to", "3,3,2", "--output", "csv",
        ][..],
        &["infinite", "--delta", "2,1,1"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn reproduce_rows() {
    let o = run(&["reproduce"]);
    let v = json(&o);
    let rows = v["rows"].as_array().unwrap();
    let failed = rows.iter().filter(|r| r["pass"] == false).count();
    assert_eq!(v["failed"], failed);
    assert_eq!(o.code, if failed == 0 { 0 } else { 5 });
    let find = |ex: &str, method: &str| {
        rows.iter()
            .find(|r| r["example"] == ex && r["method"] == method)
            .unwrap_or_else(|| panic!("{ex} {method}"))
    };
    assert_eq!(find("Example 8", "oracle")["pass"], true);
    assert_eq!(find("Example 11", "closed-form")["pass"], true);
    assert!((find("Example 11", "spectral")["computed_float"].as_f64().unwrap() - 0.929693).abs() < 1e-6);
    assert_eq!(find("Example 12", "quadrature")["pass"], true);
    for ex in ["Example 3", "Example 6", "Example 9", "Example 10", "Example 11"] {
        for m in ["oracle", "spectral", "closed-form"] {
            assert_eq!(find(ex, m)["pass"], true, "{ex} {m}");
        }
    }
    let csv = run(&["reproduce", "--output", "csv"]);
    assert_eq!(csv.stdout.lines().count(), rows.len() + 1);
}

#[test]
fn fixed_corpus_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let net = support::random_network(&mut rng, 12);
        let back = parse_network(&network_to_json(&net), NetworkFormat::Json, 0).unwrap();
        assert_eq!(back.laplacian(), net.laplacian());
        assert_eq!(back.laplacian_exact(), net.laplacian_exact());
    }
}

proptest! {
    #[test]
    fn json_round_trip(n in 2usize..10, raw in proptest::collection::vec((0usize..10, 0usize..10, 1i64..1000, 1i64..1000), 1..30)) {
        let edges: Vec<_> = raw.into_iter().filter(|(a, b, _, _)| a != b && *a < n && *b < n)
            .map(|(a, b, p, d)| (a, b, resistnet_core::ExactRational::new(p, d))).collect();
        let net = resistnet_core::build_network(n, edges).unwrap();
        let text = network_to_json(&net);
        let back = parse_network(&text, NetworkFormat::Json, 0).unwrap();
        prop_assert_eq!(back.laplacian(), net.laplacian());
        prop_assert_eq!(back.laplacian_exact(), net.laplacian_exact());
        prop_assert_eq!(network_to_json(&back), text);
    }

    #[test]
    fn decimal_resistances_are_exact(p in 1u32..100000, scale in 0u32..6) {
        let lit = format!("{}", p as f64 / 10f64.powi(scale as i32));
        let body = format!(r#"{{"nodes": 2, "edges": [[0, 1, {lit}]]}}"#);
        let net = parse_network(&body, NetworkFormat::Json, 0).unwrap();
        let want: resistnet_core::ExactRational = lit.parse().unwrap();
        prop_assert_eq!(&net.edges()[0].resistance, &want);
        prop_assert_eq!(want, resistnet_core::ExactRational::new(p, 10u32.pow(scale)));
    }
}
