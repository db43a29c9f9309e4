use std::path::Path;
use std::process::{Command, Output};

fn geokiss(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geokiss"))
        .args(args)
        .current_dir(dir)
        .env_remove("GEOKISS_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn star_instance_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = geokiss(
        &["adversary", "--family", "unit-disks", "--out", "star.json"],
        dir.path(),
    );
    assert!(o.status.success());
    let o = geokiss(
        &[
            "run",
            "--instance",
            "star.json",
            "--algorithm",
            "greedy_ds",
            "--trace",
            "t.csv",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0,unit_disks,6,greedy_ds:mds,5,1,5,5.0,pass,"));
    let trace = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert!(trace.starts_with("vertex,decision,solution_size\n0,accept,1\n"));
    assert!(trace.ends_with("5,reject,5\n"));
}

#[test]
fn cyclone_instance_defeats_greedy_cds() {
    let dir = tempfile::tempdir().unwrap();
    let o = geokiss(
        &[
            "adversary",
            "--family",
            "unit-squares",
            "--sequence",
            "cyclone",
            "--out",
            "w.json",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = geokiss(
        &["run", "--instance", "w.json", "--algorithm", "greedy_cds"],
        dir.path(),
    );
    assert!(o.status.success());
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols[3], "greedy_cds:mcds_abs");
    assert!(cols[4].parse::<usize>().unwrap() >= 6);
    assert_eq!(cols[5], "1");
    let o = geokiss(
        &[
            "adversary",
            "--family",
            "balls",
            "--sequence",
            "cyclone",
            "--out",
            "x.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_and_zeta_on_adjacency_list() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("c5.txt"),
        "# five-cycle\n0: 1 4\n1: 2\n2: 3\n3: 4\n",
    )
    .unwrap();
    let o = geokiss(&["oracle", "--graph", "c5.txt"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        stdout(&o),
        "problem,value,witness\nmds,2,0 2\nmids,2,0 2\nmcds,3,0 1 2\nchi,3,1 2 1 2 3\n"
    );
    let o = geokiss(
        &["oracle", "--problem", "chi", "--graph", "c5.txt"],
        dir.path(),
    );
    assert_eq!(stdout(&o), "problem,value,witness\nchi,3,1 2 1 2 3\n");
    let o = geokiss(&["zeta", "--graph", "c5.txt"], dir.path());
    assert_eq!(stdout(&o), "zeta,witness_vertex,witness_set\n2,0,1 4\n");
    let o = geokiss(
        &["oracle", "--problem", "tsp", "--graph", "c5.txt"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_config_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = geokiss(
        &[
            "adversary",
            "--family",
            "balls",
            "--sequence",
            "config",
            "--out",
            "b.json",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    let o = geokiss(&["verify-config", "--config", "b.json"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "valid: 12 independents (balls)\n");
    let o = geokiss(
        &["verify-config", "--config", "b.json", "--standard"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid: independent 0 overlaps the core interior"));
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["a.json", "b.json"] {
        let o = geokiss(
            &[
                "gen",
                "--family",
                "congruent_squares",
                "--n",
                "9",
                "--box-size",
                "4",
                "--seed",
                "5",
                "--out",
                out,
            ],
            dir.path(),
        );
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.json")).unwrap());
    let o = geokiss(
        &["run", "--instance", "a.json", "--algorithm", "layer"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2), "squares carry no width bound");
}

#[test]
fn sweep_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.toml"), "").unwrap();
    let o = geokiss(
        &["sweep", "--config", "empty.toml", "--out", "e.csv"],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(
        std::fs::read_to_string(dir.path().join("e.csv")).unwrap(),
        "seed,family,n,algorithm,alg_value,opt_value,zeta,bound_value,pass,wall_ms\n"
    );
    std::fs::write(
        dir.path().join("s.toml"),
        "[[trials]]\nfamily = \"regular_kgon:5\"\nn_min = 4\nn_max = 10\ncount = 8\nbox_size = 4.0\n\
         algorithms = [\"greedy_ds\", \"greedy_cds\", \"first_fit\", \"relaxed_ff[t=1]\"]\n",
    )
    .unwrap();
    let o = geokiss(
        &["sweep", "--config", "s.toml", "--out", "s.csv"],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).ends_with(" failures\n"));
    let text = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let rows = geokiss::harness::read_report(text.as_bytes()).unwrap();
    assert!(rows
        .iter()
        .any(|r| r.algorithm == "greedy_ds:mds@family" && r.zeta == Some(6)));
    assert!(text.contains("\n# summary: "));
}

#[test]
fn table_prints_formulas() {
    let dir = tempfile::tempdir().unwrap();
    let o = geokiss(&["table", "--d", "3"], dir.path());
    let text = stdout(&o);
    assert!(text.contains("\"congruent balls in R^3\",12,12,22,288\n"));
    assert!(text.contains("\"hypercube translates (d=3)\",8,8,14,128\n"));
    assert!(text.contains("\"congruent hypercubes (d=3)\",16,16,30,512\n"));
}
