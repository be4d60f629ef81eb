use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borosmoll"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn row_forms() {
    let o = run(&["row", "2", "--form", "b"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "row");
    assert_eq!(
        v["payload"]["values"],
        serde_json::json!(["42", "60", "24"])
    );

    let o = run(&["row", "0", "--form", "d"]);
    assert_eq!(
        json_lines(&o)[0]["payload"]["values"],
        serde_json::json!(["1"])
    );
}

#[test]
fn tsv_and_json_agree() {
    for form in ["b", "d"] {
        let j = run(&["row", "5", "--form", form]);
        let t = run(&["row", "5", "--form", form, "--format", "tsv"]);
        let from_json: Vec<String> = json_lines(&j)[0]["payload"]["values"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        let text = stdout(&t);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("m\tform\ti\tvalue"));
        let from_tsv: Vec<String> = lines
            .map(|l| l.split('\t').nth(3).unwrap().to_string())
            .collect();
        assert_eq!(from_json, from_tsv);
    }

    let j = run(&["minseq", "5"]);
    let t = run(&["minseq", "5", "--format", "tsv"]);
    let c: Vec<_> = json_lines(&j)[0]["payload"]["c"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let text = stdout(&t);
    let tsv: Vec<_> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(2).unwrap().to_string())
        .collect();
    assert_eq!(c, tsv);

    let j = run(&["integral", "3", "1/2"]);
    let t = run(&["integral", "3", "1/2", "--format", "tsv"]);
    let v = &json_lines(&j)[0]["payload"];
    let text = stdout(&t);
    let cells: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(cells[1], v["a"].as_str().unwrap());
    assert_eq!(
        cells[2].parse::<f64>().unwrap(),
        v["numeric_integral"].as_f64().unwrap()
    );
    assert_eq!(
        cells[3].parse::<f64>().unwrap(),
        v["closed_form"].as_f64().unwrap()
    );
    assert_eq!(cells[7], "true");
}

#[test]
fn minseq_outputs() {
    let v = &json_lines(&run(&["minseq", "2"]))[0]["payload"];
    assert_eq!(v["c"], serde_json::json!(["81/4", "27/2"]));
    assert_eq!(v["argmin"], serde_json::json!([2]));
    assert_eq!(v["closed_form_min"], "27/2");

    let v = &json_lines(&run(&["minseq", "8"]))[0]["payload"];
    assert_eq!(v["argmin"], serde_json::json!([8]));
    assert_eq!(v["c"][7], "372683025/2048");
    assert_eq!(v["closed_form_min"], "372683025/2048");

    assert_eq!(run(&["minseq", "1"]).status.code(), Some(2));
}

#[test]
fn integral_outputs() {
    let o = run(&["integral", "0", "0", "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0]["payload"];
    let want = std::f64::consts::PI / (2.0 * 2f64.sqrt());
    assert!((v["numeric_integral"].as_f64().unwrap() - want).abs() < 1e-10);
    assert!((v["closed_form"].as_f64().unwrap() - want).abs() < 1e-14);

    let o = run(&["integral", "2", "1", "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(0));
    let cf = json_lines(&o)[0]["payload"]["closed_form"]
        .as_f64()
        .unwrap();
    assert!((cf - std::f64::consts::PI * (63.0 / 8.0) / 64.0).abs() < 1e-15);

    for bad in [
        &["integral", "1", "-1"][..],
        &["integral", "1", "-3/2"],
        &["integral", "1", "x"],
        &["integral", "1", "0", "--tol", "-1"],
        &["integral", "1", "0", "--tol", "0"],
    ] {
        assert_eq!(run(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn verify_outputs() {
    let o = run(&["verify", "--property", "spiral", "--from", "2", "--to", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["command"], "verify");
    assert_eq!(lines[0]["payload"]["verdict"], "verified");
    assert_eq!(lines[1]["command"], "verify-summary");
    assert_eq!(lines[1]["payload"]["m_to"], 2);

    for bad in [
        &["verify", "--property", "spiral", "--from", "1", "--to", "4"][..],
        &["verify", "--property", "spiral", "--from", "5", "--to", "4"],
        &["verify", "--property", "nope", "--from", "2", "--to", "4"],
        &["verify", "--property", "spiral", "--from", "x", "--to", "4"],
        &["verify", "--property", "spiral"],
    ] {
        let o = run(bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn jobs_do_not_change_output() {
    let args = [
        "verify",
        "--property",
        "minimum-at-m",
        "--from",
        "2",
        "--to",
        "40",
    ];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let many = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.status.code(), Some(0));

    let one = run(&["table", "--to", "12", "--jobs", "1"]);
    let many = run(&["table", "--to", "12", "--jobs", "3"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn usage_errors_exit_2() {
    for bad in [
        &[][..],
        &["row"],
        &["row", "-3"],
        &["row", "2", "--form", "x"],
        &["row", "2", "--format", "xml"],
        &["frobnicate"],
        &["table", "--from", "3", "--to", "1"],
    ] {
        assert_eq!(run(bad).status.code(), Some(2), "{bad:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
