use std::process::{Command, Output};

fn lieforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieforge")).args(args).env_remove("LIEFORGE_CACHE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ribbon_expansion_of_the_catalan_idempotent() {
    let o = lieforge(&["idempotent", "--family", "catalan", "--n", "3", "--basis", "ribbon"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(a+b)*R(3) - a*R(2,1) - b*R(1,2) + (a+b)*R(1,1,1)\n");
}

#[test]
fn verify_prints_compact_json() {
    let o = lieforge(&["verify", "catpbw", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"ok\":true,\"n\":5}\n");
    let o = lieforge(&["verify", "idempotent", "--n", "4", "--family", "dynkin"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["quasi_scalar"], "4");
    assert_eq!(v["report"]["family"], "dynkin");
}

#[test]
fn class_table_last_row() {
    let o = lieforge(&["tables", "--which", "bprime", "--max-n", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("1 3 10 14 10 3 1"));
}

#[test]
fn exit_codes() {
    assert_eq!(lieforge(&["--bogus"]).status.code(), Some(2));
    assert_eq!(lieforge(&["idempotent", "--family", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(lieforge(&["idempotent", "--family", "dynkin", "--n", "8"]).status.code(), Some(2));
    assert_eq!(lieforge(&["expand", "[[1,2],[1,3]]"]).status.code(), Some(2));
    assert_eq!(lieforge(&["--version"]).status.code(), Some(0));
    let o = lieforge(&["expand", "[[1,2],[3,4]]", "--basis", "ribbon"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_lieforge"))
            .args(["--format", "json", "idempotent", "--family", "catalan", "--n", "4", "--basis", "c"])
            .env("LIEFORGE_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let third = run();
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8(third.stderr).unwrap().contains("corrupted"));
}
