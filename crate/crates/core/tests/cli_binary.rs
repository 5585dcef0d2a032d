use std::process::Command;

use spherefib::cli::OutputRecord;

fn spherefib(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spherefib"))
        .args(args)
        .env_remove("SPHEREFIB_N_RANGE_K6")
        .output()
        .expect("run binary");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_prints_count_and_representatives() {
    let (code, out, _) = spherefib(&["classify", "--k", "2", "--n", "12"]);
    assert_eq!(code, 0);
    assert!(out.contains("case: 4|n"));
    assert!(out.contains("G = 6"));
}

#[test]
fn json_record_round_trips() {
    let (code, out, _) = spherefib(&["classify", "--k", "5", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let rec: OutputRecord = serde_json::from_str(&out).unwrap();
    assert_eq!((rec.g, rec.representatives.as_slice()), (1, &["(1/2)θ".to_string()][..]));
    let again = serde_json::to_string_pretty(&rec).unwrap();
    assert_eq!(again + "\n", out);
}

#[test]
fn out_of_range_k_is_a_usage_error() {
    let (code, _, err) = spherefib(&["classify", "--k", "7", "--n", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("outside the supported range"));
}

#[test]
fn table_rows() {
    let (_, out, _) = spherefib(&["table", "--k", "4", "--n", "2..32", "--format", "csv"]);
    assert!(out.starts_with("k,n,branch,star,rho3,rho5,rho7,rho9,G\n"));
    assert!(out.contains("\n4,16,16|n,false,0,0,0,0,5\n"));
    assert!(out.contains("\n4,24,8||n,false,1,0,0,0,8\n"));
    let (_, out, _) = spherefib(&["table", "--k", "6", "--n", "63", "--format", "csv"]);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn verify_range_and_env_default() {
    let (code, out, _) = spherefib(&["verify", "--k", "3", "--n", "2..500"]);
    assert_eq!((code, out.as_str()), (0, "k=3 n=2..500: 499 pass / 0 fail\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_spherefib"))
        .args(["verify", "--k", "6", "--jobs", "2"])
        .env("SPHEREFIB_N_RANGE_K6", "2..20")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k=6 n=2..20: 19 pass / 0 fail\n");
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("spherefib-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = spherefib(&["table", "--k", "2", "--n", "3", "--format", "json", "--out", p]);
    assert_eq!((code, out.as_str()), (0, ""));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.contains("\"G\": 2"));
}
