use std::process::{Command, Output};

use flagpos::cli::{DescribeOutput, SeshadriOutput};
use flagpos::flag::GkmExport;
use flagpos::positivity::PositivityVerdict;

fn flagpos(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagpos"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Reserialising through `serde_json::Value` reproduces the bytes exactly.
fn assert_canonical_json(text: &str) -> serde_json::Value {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    v
}

#[test]
fn describe_table_and_json_agree() {
    let table = flagpos("--type A3 --omit 2 describe");
    assert_eq!(table.status.code(), Some(0));
    assert!(stdout(&table).contains("6 fixed points, 12 invariant curves"));
    let json = flagpos("--type A3 --omit 2 describe --json");
    let text = stdout(&json);
    assert_canonical_json(&text);
    let d: DescribeOutput = serde_json::from_str(&text).unwrap();
    assert_eq!(
        (d.fixed_points, d.invariant_curves, d.dimension),
        (6, 12, 4)
    );
}

#[test]
fn verdict_table_and_json_agree() {
    for (args, status) in [
        ("--type A3 --omit 2 nef --bundle Q", "nef-not-ample"),
        ("--type A3 --omit 3 ample --bundle Q", "ample"),
        ("--type A3 --omit 2 ample --bundle Q*det(Q)", "ample"),
        ("--type A1 --omit 1 nef --bundle L[-1]", "not-nef"),
    ] {
        let t = stdout(&flagpos(args));
        let text = stdout(&flagpos(&format!("{args} --json")));
        assert_canonical_json(&text);
        let v: PositivityVerdict = serde_json::from_str(&text).unwrap();
        assert_eq!(v.status.as_str(), status);
        assert!(t.contains(&format!("status: {status}\n")), "{t}");
        assert!(t.contains(&format!("global_min: {}\n", v.global_min)));
        assert!(t.contains(&format!("table_digest: {}\n", v.table_digest)));
        let w = v.witness.unwrap();
        assert!(t.contains(&format!("witness: curve {} entry {}\n", w.curve, w.entry)));
    }
}

#[test]
fn seshadri_outputs() {
    let args = "--type A3 --omit 3 seshadri --bundle Q --point all";
    let t = stdout(&flagpos(args));
    let text = stdout(&flagpos(&format!("{args} --json")));
    assert_canonical_json(&text);
    let s: SeshadriOutput = serde_json::from_str(&text).unwrap();
    assert_eq!(s.results.len(), 4);
    for r in &s.results {
        assert_eq!((r.value.numer, r.value.denom), (1, 1));
        assert!(t.contains(&format!("point {}: epsilon = 1/1", r.point)));
    }
    let one = stdout(&flagpos(
        "--type A3 --omit 3 seshadri --bundle Q --point 2 --json",
    ));
    let s1: SeshadriOutput = serde_json::from_str(&one).unwrap();
    assert_eq!(s1.results, vec![s.results[2].clone()]);
}

#[test]
fn export_formats() {
    let text = stdout(&flagpos("--type A2 export-gkm"));
    let v = assert_canonical_json(&text);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    let e: GkmExport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&e).unwrap() + "\n", text);
    let dot = stdout(&flagpos("--type A2 export-gkm --dot"));
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 9);
    let restrict = stdout(&flagpos("--type A2 --omit 1 restrict --bundle T --json"));
    let table = assert_canonical_json(&restrict);
    assert_eq!(table["0"], serde_json::json!([2, 1]));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        "--type A3 --omit 2 restrict --bundle sym(2,Q)+dual(S) --json",
        "--type B3 export-gkm",
        "--type D4 --omit 2 nef --bundle L[0,1,0,0] --json",
        "--type A4 --omit 2 seshadri --bundle T --point all --json",
    ] {
        let a = flagpos(args);
        let b = flagpos(args);
        assert_eq!(a.status.code(), Some(0), "{args}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args}");
    }
}

#[test]
fn exit_codes() {
    let o = flagpos("--type A1 --omit 1 seshadri --bundle L[-1] --point 0");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("witness: curve 0 entry -1"));
    assert!(o.stdout.is_empty());

    for bad in [
        "--type A3 --omit 2 nef",
        "--type A3 --omit 2 nef --bundle Q+",
        "--type A3 --omit 5 describe",
        "--type X3 describe",
        "--type A3 describe --dot",
        "--type A3 --omit 2 seshadri --bundle Q --point 99",
        "--type A3 --omit 2 nef --bundle L[1,0,0]",
        "--type A3 nef --bundle Q",
        "--type A3 frobnicate",
    ] {
        let o = flagpos(bad);
        assert_eq!(o.status.code(), Some(2), "{bad}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }

    let o = flagpos("--type E8 describe");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("error:"));
    let o = flagpos("--type A3 describe --max-cosets 23");
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(
        flagpos("--type A3 describe --max-cosets 24").status.code(),
        Some(0)
    );
    assert_eq!(flagpos("--help").status.code(), Some(0));
}
