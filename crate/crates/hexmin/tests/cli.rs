mod common;

use common::*;
use hexmin_core::energy::energy_r;
use hexmin_core::ModuliPoint;

#[test]
fn eval_prints_r_with_twelve_digits() {
    let c = run(&["eval", "--functional", "R", "--alpha", "1.5", "--z", "0.5,0.8660254"]);
    assert_eq!(c.code, 0, "{}", c.stderr);
    let printed: f64 = c.stdout.trim().parse().unwrap();
    let exact = energy_r(1.5, ModuliPoint { x: 0.5, y: 0.8660254 }, &Default::default()).unwrap();
    assert!((printed - exact).abs() <= 1e-11 * exact, "{printed} vs {exact}");
    assert_eq!(c.stdout.trim().trim_start_matches(['0', '.']).len(), 12);
}

#[test]
fn eval_selects_each_functional() {
    let z = "0.3,1.1";
    for args in [
        vec!["--functional", "theta", "--alpha", "1"],
        vec!["--functional", "generalized", "--k", "3"],
        vec!["--functional", "corollary", "--alpha", "1.5", "--beta", "2.5"],
    ] {
        let mut full = vec!["eval"];
        full.extend(args.iter().copied());
        full.extend(["--z", z]);
        let c = run(&full);
        assert_eq!(c.code, 0, "{args:?}: {}", c.stderr);
        assert!(c.stdout.trim().parse::<f64>().unwrap() > 0.0);
    }
}

#[test]
fn reduce_prints_point_and_word() {
    let c = run(&["reduce", "--z", "1.7,0.8"]);
    assert_eq!(c.code, 0);
    assert_eq!(c.stdout, "x,y,word\n0.41095890411,1.09589041096,ttS\n");
}

#[test]
fn printed_points_reparse_to_twelve_digits() {
    let c = run(&["reduce", "--z", "-3.217,0.0731"]);
    assert_eq!(c.code, 0);
    let row = c.stdout.lines().nth(1).unwrap();
    let again = run(&["reduce", "--z", row.rsplit_once(',').unwrap().0]);
    let a: Vec<f64> = row.split(',').take(2).map(|s| s.parse().unwrap()).collect();
    let b: Vec<f64> = again
        .stdout
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .take(2)
        .map(|s| s.parse().unwrap())
        .collect();
    for i in 0..2 {
        assert!((a[i] - b[i]).abs() <= 1e-11 * a[i].abs(), "{a:?} vs {b:?}");
    }
    assert!(again.stdout.ends_with(",-\n"), "{}", again.stdout);
}

#[test]
fn landscape_has_header_rows_and_hexagonal_minimum() {
    for args in [LANDSCAPE_R, LANDSCAPE_THETA] {
        let c = run(&args);
        assert_eq!(c.code, 0, "{}", c.stderr);
        assert!(c.stdout.starts_with("x,y,value\n"));
        let (rows, x, y, _) = landscape_min(&c.stdout);
        assert_eq!(rows, 2500);
        assert!(adjacent_to_hex(x, y), "{args:?}: min at ({x}, {y})");
    }
}

#[test]
fn landscape_is_row_major_in_y_then_x() {
    let c = run(&["landscape", "--xrange", "0,0.5", "--yrange", "1,2", "--res", "3"]);
    let cells: Vec<(String, String)> = c
        .stdout
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(',');
            (it.next().unwrap().to_string(), it.next().unwrap().to_string())
        })
        .collect();
    let expected: Vec<(String, String)> = ["1", "1.5", "2"]
        .iter()
        .flat_map(|y| ["0", "0.25", "0.5"].iter().map(move |x| (x.to_string(), y.to_string())))
        .collect();
    assert_eq!(cells, expected);
}

#[test]
fn minimize_finds_hexagonal_point() {
    let c = run(&["minimize", "--functional", "R", "--alpha", "2"]);
    assert_eq!(c.code, 0, "{}", c.stderr);
    let row: Vec<&str> = c.stdout.lines().nth(1).unwrap().split(',').collect();
    let (x, y): (f64, f64) = (row[2].parse().unwrap(), row[3].parse().unwrap());
    assert!((x - HEX.0).abs() < 1e-4 && (y - HEX.1).abs() < 1e-4);
    assert_eq!(row[6], "true");
}

#[test]
fn verify_all_on_32_grid_exits_zero() {
    let c = run(&["verify", "--lemma", "all", "--grid", "32"]);
    assert_eq!(c.code, 0, "{}", c.stderr);
    let mut lines = c.stdout.lines();
    assert_eq!(lines.next(), Some("lemma_id,points,min_slack,worst_point,violations"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), hexmin_core::bounds::lemma_ids().len());
    assert!(rows.iter().all(|r| r.ends_with(",0")));
    assert!(c.stderr.contains("no violations"));
}

#[test]
fn verify_reports_violations_with_exit_one() {
    // At zero tolerance the rounding error of a bound that is tight to 5e-12 counts as a violation.
    let c = run(&["verify", "--lemma", "4lemm10", "--grid", "8", "--tolerance", "0"]);
    assert_eq!(c.code, 1, "{}", c.stderr);
    let row = c.stdout.lines().nth(1).unwrap();
    assert!(row.starts_with("4lemm10,36,-") && !row.ends_with(",0"), "{row}");
    assert!(c.stderr.contains("4lemm10"));
    let c = run(&["verify", "--lemma", "4lemm10", "--grid", "8"]);
    assert_eq!(c.code, 0, "{}", c.stderr);
}

#[test]
fn constants_reports_irreproducible_rows_with_exit_one() {
    let c = run(&["constants"]);
    assert_eq!(c.code, 1);
    assert_eq!(c.stdout.lines().count(), 8);
    assert_eq!(c.stdout.lines().filter(|l| l.ends_with(",false")).count(), 3);
    assert!(c.stderr.contains("4 of 7"));
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let cases: [(&[&str], &str); 8] = [
        (&["eval", "--alpha", "0", "--z", "0,1"], "--alpha"),
        (&["eval", "--z", "0,-1"], "--z"),
        (&["eval", "--z", "0"], "--z"),
        (
            &["eval", "--functional", "corollary", "--beta", "1", "--z", "0,1"],
            "--beta",
        ),
        (&["eval", "--functional", "R", "--k", "2", "--z", "0,1"], "--k"),
        (&["landscape", "--res", "1"], "--res"),
        (&["landscape", "--xrange", "1,0"], "--xrange"),
        (&["verify", "--lemma", "nope"], "--lemma"),
    ];
    for (args, flag) in cases {
        let c = run(args);
        assert_eq!(c.code, 2, "{args:?}");
        assert!(c.stderr.contains(flag), "{args:?}: {}", c.stderr);
        assert!(c.stdout.is_empty());
    }
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
}

#[test]
fn help_exits_zero() {
    let c = run(&["--help"]);
    assert_eq!(c.code, 0);
    assert!(c.stdout.contains("landscape"));
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["landscape", "--functional", "R", "--alpha", "3", "--res", "12"];
    let (c1, one) = run_binary(&args, Some("1"));
    let (c4, four) = run_binary(&args, Some("4"));
    let (cd, default) = run_binary(&args, None);
    assert_eq!((c1, c4, cd), (0, 0, 0));
    assert_eq!(one, four);
    assert_eq!(one, default);
}
