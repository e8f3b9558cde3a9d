use std::fs;
use std::process::{Command, Output};

use lrq_cli::output::{parse_tsv, QueryOutputRecord};

fn lrq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn query_examples() {
    assert_eq!(
        stdout(&lrq(&["query", "--text", "abcabcddbca", "--pos", "2"])),
        "2\t1\t3\n"
    );
    assert_eq!(
        stdout(&lrq(&[
            "query",
            "--text",
            "abcabcddbca",
            "--pos",
            "2",
            "--all"
        ])),
        "2\t2\t3\n2\t1\t3\n"
    );
    assert_eq!(
        stdout(&lrq(&["query", "--text", "mississippi", "--pos", "1"])),
        "1\t-1\t0\n"
    );
}

#[test]
fn query_matches_library() {
    let text = "abaababaabaababaababa";
    let index = lrq::build_index(text.as_bytes());
    for k in 1..=text.len() {
        let got = parse_tsv(&stdout(&lrq(&[
            "query",
            "--text",
            text,
            "--pos",
            &k.to_string(),
        ])))
        .unwrap();
        let lr = lrq::leftmost_lr_at(&index, k).unwrap();
        assert_eq!(got, vec![QueryOutputRecord::new(k, lr, None)]);
    }
}

#[test]
fn out_of_range_position_is_usage_error() {
    for pos in ["0", "12"] {
        let o = lrq(&["query", "--text", "mississippi", "--pos", pos]);
        assert_eq!(o.status.code(), Some(2));
    }
    // Every position is out of range on an empty text.
    assert_eq!(
        lrq(&["query", "--text", "", "--pos", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn all_positions_reference_is_byte_identical() {
    for text in [
        "mississippi",
        "abcabcddbca",
        "aaaaaaa",
        "abc",
        "ACGTACGTTTACG",
    ] {
        let fast = stdout(&lrq(&["all-positions", "--text", text, "--show-substring"]));
        let reference = stdout(&lrq(&[
            "all-positions",
            "--text",
            text,
            "--show-substring",
            "--reference",
        ]));
        assert_eq!(fast, reference);
        assert_eq!(fast.lines().count(), text.len());
    }
}

#[test]
fn all_positions_mississippi_golden() {
    let got = stdout(&lrq(&["all-positions", "--text", "mississippi"]));
    let expect = "1\t-1\t0\n2\t2\t4\n3\t2\t4\n4\t2\t4\n5\t2\t4\n6\t5\t4\n7\t5\t4\n8\t5\t4\n9\t9\t1\n10\t10\t1\n11\t11\t1\n";
    assert_eq!(got, expect);
}

#[test]
fn empty_text_has_no_records() {
    assert_eq!(stdout(&lrq(&["all-positions", "--text", ""])), "");
    assert_eq!(
        stdout(&lrq(&["all-positions", "--text", "", "--output", "json"])),
        "[]\n"
    );
}

#[test]
fn json_round_trips_to_tsv_records() {
    let args = ["all-positions", "--text", "abcabcddbca", "--show-substring"];
    let tsv = parse_tsv(&stdout(&lrq(&args))).unwrap();
    let json_out = stdout(&lrq(&[&args[..], &["--output", "json"]].concat()));
    let json: Vec<QueryOutputRecord> = serde_json::from_str(&json_out).unwrap();
    assert_eq!(json, tsv);
    for r in &json {
        let s = r.substring.as_deref().unwrap();
        assert_eq!(s.len(), r.length);
    }
}

#[test]
fn header_flag() {
    let out = stdout(&lrq(&[
        "query",
        "--text",
        "aa",
        "--pos",
        "1",
        "--header",
        "--show-substring",
    ]));
    assert_eq!(out, "position\tstart\tlength\tsubstring\n1\t1\t1\ta\n");
}

#[test]
fn raw_index_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let out = dir.path().join("m.lrq");
    fs::write(&input, "mississippi").unwrap();
    let o = lrq(&[
        "index",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let loaded = lrq::load_index(&mut fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(loaded, lrq::build_index(b"mississippi"));

    let via_index = stdout(&lrq(&["all-positions", "--index", out.to_str().unwrap()]));
    let via_text = stdout(&lrq(&["all-positions", "--text", "mississippi"]));
    assert_eq!(via_index, via_text);
}

#[test]
fn fasta_records_become_separate_indexes() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.fa");
    let out = dir.path().join("g.lrq");
    fs::write(&input, ">r1\nACG\nT\n>r2 second\nacgtacgt\n").unwrap();
    let o = lrq(&[
        "index",
        input.to_str().unwrap(),
        "--format",
        "fasta",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let first = lrq::load_index(&mut fs::File::open(dir.path().join("g.lrq.1")).unwrap()).unwrap();
    let second = lrq::load_index(&mut fs::File::open(dir.path().join("g.lrq.2")).unwrap()).unwrap();
    assert_eq!(first.text(), b"ACGT");
    assert_eq!(second.text(), b"ACGTACGT");
    assert!(!dir.path().join("g.lrq.3").exists());
}

#[test]
fn index_error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let out = dir.path().join("x.lrq");
    let o = lrq(&[
        "index",
        missing.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let empty = dir.path().join("empty.fa");
    fs::write(&empty, "\n").unwrap();
    let o = lrq(&[
        "index",
        empty.to_str().unwrap(),
        "--format",
        "fasta",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn corrupt_or_missing_index_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lrq");
    fs::write(&bad, b"XXXXgarbage").unwrap();
    let o = lrq(&["query", "--index", bad.to_str().unwrap(), "--pos", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("format"));

    let gone = dir.path().join("gone.lrq");
    assert_eq!(
        lrq(&["all-positions", "--index", gone.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_shape_and_determinism() {
    let run = || {
        stdout(&lrq(&[
            "bench",
            "--sizes",
            "1000,2000,4000",
            "--seed",
            "42",
            "--repeats",
            "1",
        ]))
    };
    let (a, b) = (run(), run());
    let rows = |s: &str| -> Vec<(usize, String)> {
        s.lines()
            .map(|l| {
                let cols: Vec<_> = l.split('\t').collect();
                assert_eq!(cols.len(), 4);
                (cols[0].parse().unwrap(), cols[3].to_string())
            })
            .collect()
    };
    let (ra, rb) = (rows(&a), rows(&b));
    assert_eq!(
        ra.iter().map(|r| r.0).collect::<Vec<_>>(),
        [1000, 2000, 4000]
    );
    assert_eq!(ra, rb);
}

#[test]
fn bench_rejects_zero_size() {
    assert_eq!(lrq(&["bench", "--sizes", "0"]).status.code(), Some(2));
    assert_eq!(lrq(&["bench", "--sizes", "10,abc"]).status.code(), Some(2));
}
