use std::process::{Command, Output};

fn anomaly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anomaly")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = anomaly(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn expand_modular_forms() {
    assert_eq!(stdout(&["expand", "delta2", "--order", "4"]).trim(), "-1/8 - 3 q^(1/2) - 3 q - 12 q^(3/2) - 3 q^2");
    assert_eq!(stdout(&["expand", "eps2", "--order", "2"]).trim(), "q^(1/2) + 8 q");
    assert_eq!(stdout(&["expand", "delta1", "--order", "4"]).trim(), "1/4 + 6 q + 6 q^2");
}

#[test]
fn expand_p2_leading_term_is_a_hat() {
    let text = stdout(&["expand", "P2", "--dim", "12", "--order", "1"]);
    assert!(text.contains("q^0: -31/967680*p1^3 + 11/241920*p1*p2 - 1/60480*p3"), "{text}");
}

#[test]
fn manifold_tables() {
    let text = stdout(&["manifold", "K3"]);
    assert!(text.contains("-16") && text.contains("-256"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["manifold", "K3×Bott8", "--format", "json"])).unwrap();
    assert_eq!(json["passed"], true);
    let tt = json["numbers"].as_array().unwrap().iter().find(|r| r["functional"] == "Sig(·,T⊗T)").unwrap();
    assert_eq!(tt["value"], "-1802240");
}

#[test]
fn verify_single_theorem() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--theorem", "2.3", "--dim", "16", "--format", "json"])).unwrap();
    assert_eq!(json["failed"], 0);
    assert!(json["total"].as_u64().unwrap() > 0);
    let cases: Vec<&str> = json["reports"].as_array().unwrap().iter().map(|r| r["case"].as_str().unwrap()).collect();
    assert!(cases.iter().any(|c| c.starts_with("cor09/")), "{cases:?}");
}

#[test]
fn json_is_independent_of_thread_count() {
    let args = ["verify", "--dim", "8", "--dim", "12", "--format", "json"];
    let one = stdout(&[&args[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["verify", "--dim", "6"][..],
        &["verify", "--theorem", "2.1", "--dim", "8"],
        &["verify", "--theorem", "9.9"],
        &["expand", "nonsense"],
        &["manifold", "CP2"],
        &["verify", "--dim", "8", "--degree", "2"],
    ] {
        let out = anomaly(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
