use std::path::PathBuf;
use std::process::{Command, Output};

use disclab::cli::{EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY};
use disclab::{exact_l2, lift, sequences, PointSet, SequenceGen};

fn disclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_disclab")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("disclab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_field<'a>(line: &'a str, key: &str) -> &'a str {
    let start = line.find(&format!("\"{key}\":")).unwrap_or_else(|| panic!("no {key} in {line}")) + key.len() + 3;
    let rest = &line[start..];
    let end = rest.find([',', '}']).unwrap();
    &rest[..end]
}

#[test]
fn compute_single_point_from_file() {
    let path = scratch("single_point_half.csv");
    std::fs::write(&path, "0.5\n").unwrap();
    let o = disclab(&["compute", "--kind", "extreme", "--p", "2", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let line = stdout(&o);
    assert_eq!(json_field(&line, "value"), "0.28867513459481287");
    assert_eq!(json_field(&line, "method"), "\"exact-closed-form\"");
    assert_eq!(json_field(&line, "n"), "1");
    assert_eq!(json_field(&line, "d"), "1");
    assert!(!line.contains("stderr"));
}

#[test]
fn gen_to_compute_round_trip_is_exact() {
    let path = scratch("halton.csv");
    let o = disclab(&["gen", "--kind", "halton", "--bases", "2,3,5", "--n", "300", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let gen = SequenceGen::halton(vec![2, 3, 5]).unwrap();
    let in_process = sequences::prefix(&gen, 300).unwrap();
    let file = PointSet::read_csv(std::fs::read(&path).unwrap().as_slice()).unwrap();
    assert_eq!(file, in_process);
    for kind in ["star", "extreme", "periodic", "diaphony"] {
        let o = disclab(&["compute", "--kind", kind, "--in", path.to_str().unwrap()]);
        let v: f64 = json_field(&stdout(&o), "value").parse().unwrap();
        let direct = exact_l2::evaluate(&in_process, kind.parse().unwrap()).unwrap().value;
        assert_eq!(v, direct, "{kind}");
    }
}

#[test]
fn lift_from_file_matches_generator() {
    let prefix = scratch("vdc.csv");
    disclab(&["gen", "--kind", "vdc", "--n", "16", "--out", prefix.to_str().unwrap()]);
    let a = disclab(&["lift", "--n", "10", "--in", prefix.to_str().unwrap()]);
    let b = disclab(&["lift", "--n", "10", "--seq", "vdc"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let parsed = PointSet::read_csv(a.stdout.as_slice()).unwrap();
    assert_eq!(parsed, lift(&SequenceGen::van_der_corput(2).unwrap(), 10).unwrap());
    assert_eq!(disclab(&["lift", "--n", "20", "--in", prefix.to_str().unwrap()]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn oracle_reports_sampling_metadata() {
    let path = scratch("three.csv");
    std::fs::write(&path, "# d=1 n=3\n0.1\n0.5\n0.8\n").unwrap();
    let args = [
        "oracle",
        "--kind",
        "extreme",
        "--p",
        "1.5",
        "--samples",
        "200000",
        "--seed",
        "42",
        "--in",
        path.to_str().unwrap(),
    ];
    let o = disclab(&args);
    assert!(o.status.success());
    let line = stdout(&o);
    assert_eq!(json_field(&line, "seed"), "42");
    assert_eq!(json_field(&line, "samples"), "200000");
    assert_eq!(json_field(&line, "method"), "\"monte-carlo\"");
    assert_eq!(json_field(&line, "rng"), "\"chacha8\"");
    assert!(json_field(&line, "stderr").parse::<f64>().unwrap() > 0.0);
    assert_eq!(disclab(&args).stdout, o.stdout);
}

#[test]
fn compute_other_norms() {
    let o = disclab(&["compute", "--kind", "star", "--p", "inf", "--seq", "vdc", "--n", "2"]);
    let line = stdout(&o);
    assert_eq!(json_field(&line, "p"), "\"inf\"");
    assert_eq!(json_field(&line, "value"), "1.0000000000000000");
    let o = disclab(&["compute", "--kind", "extreme", "--p", "inf", "--seq", "halton", "--n", "8"]);
    assert!(o.status.success());
    let o = disclab(&["compute", "--kind", "extreme", "--p", "1.5", "--seq", "vdc", "--n", "8", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("kind,p,method,value,n,d\nextreme,1.5000000000000000,exact-piecewise,"));
    let o = disclab(&["compute", "--kind", "diaphony", "--seq", "vdc", "--n", "4", "--cutoff", "100"]);
    assert!(stdout(&o).contains("\"tail_bound\":"));
    let o = disclab(&["compute", "--kind", "star", "--p", "3", "--seq", "halton", "--n", "8"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle"));
    let o = disclab(&["compute", "--kind", "star", "--p", "inf", "--seq", "halton", "--n", "65"]);
    assert_eq!(o.status.code(), Some(EXIT_DOMAIN));
}

#[test]
fn bad_input_files() {
    let path = scratch("bad.csv");
    std::fs::write(&path, "0.1,0.2\n0.3,1.5\n").unwrap();
    let o = disclab(&["compute", "--kind", "star", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(EXIT_DOMAIN));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("row 2"), "{err}");
    std::fs::write(&path, "0.1,0.2\n0.3\n").unwrap();
    assert_eq!(
        disclab(&["compute", "--kind", "star", "--in", path.to_str().unwrap()]).status.code(),
        Some(EXIT_DOMAIN)
    );
    assert_eq!(
        disclab(&["compute", "--kind", "star", "--in", "x.csv", "--seq", "vdc"]).status.code(),
        Some(EXIT_USAGE)
    );
    assert_eq!(disclab(&["gen", "--kind", "halton", "--bases", "2,4", "--n", "3"]).status.code(), Some(EXIT_USAGE));
}

#[test]
fn scan_csv_and_plot_data() {
    let plot = scratch("plot.csv");
    let o = disclab(&[
        "scan",
        "--seq",
        "vdc",
        "--kind",
        "extreme",
        "--p",
        "2",
        "--ns",
        "16..1024:geometric",
        "--format",
        "csv",
        "--plot-data",
        plot.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "N,value,rate,ratio");
    assert_eq!(lines.len(), 8);
    assert!(lines[1].starts_with("16,"));
    let plot = std::fs::read_to_string(plot).unwrap();
    assert!(plot.starts_with("N,log_n_pow_half_d,log_n,sqrt_log_n\n16,"));

    let o = disclab(&["scan", "--seq", "vdc", "--kind", "diaphony", "--ns", "2,8", "--format", "json", "--envelope"]);
    let text = stdout(&o);
    assert!(text.contains("\"mode\": \"envelope\"") && text.contains("\"max_ratio\""));
    assert_eq!(
        disclab(&["scan", "--seq", "vdc", "--kind", "star", "--ns", "1..8:geometric"]).status.code(),
        Some(EXIT_USAGE)
    );
}

#[test]
fn verify_suites() {
    let out = scratch("lemma1.json");
    let o = disclab(&["verify", "--suite", "lemma1", "--seq", "vdc", "--n", "256", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&out).unwrap();
    assert!(report.contains("\"pass\": true") && report.contains("\"cases_total\": 256"));
    assert!(report.contains("\"min_slack\""));

    let o = disclab(&["verify", "--suite", "inequalities", "--dims", "1,2", "--trials", "50,10"]);
    assert_eq!(o.status.code(), Some(0));

    let o = disclab(&["verify", "--suite", "vdc-constant", "--max-n", "256", "--upper", "0.5"]);
    assert_eq!(o.status.code(), Some(EXIT_VERIFY));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL"));

    let o = disclab(&["verify", "--suite", "lemma1", "--n", "2048"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn thread_cap_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_disclab"))
            .args(["compute", "--kind", "periodic", "--seq", "halton", "--n", "500"])
            .env("DISCLAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert!(one.status.success());
    assert_eq!(one.stdout, run("3").stdout);
    assert_eq!(one.stdout, run("0").stdout);
    assert_eq!(run("many").status.code(), Some(EXIT_USAGE));
}
