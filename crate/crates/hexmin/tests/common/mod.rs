#![allow(dead_code)]

use std::process::Command;

/// Output of one in-process CLI call.
pub struct Captured {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Captured {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hexmin").chain(args.iter().copied());
    let code = hexmin::run_with(argv, &mut out, &mut err);
    Captured {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Runs the built binary as a separate process and returns (exit code, stdout bytes).
pub fn run_binary(args: &[&str], threads: Option<&str>) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hexmin"));
    cmd.args(args);
    match threads {
        Some(n) => cmd.env(hexmin::THREADS_ENV, n),
        None => cmd.env_remove(hexmin::THREADS_ENV),
    };
    let o = cmd.output().expect("spawn hexmin");
    (o.status.code().unwrap_or(-1), o.stdout)
}

/// Cell of a `x,y,value` landscape with the smallest value.
pub fn landscape_min(csv: &str) -> (usize, f64, f64, f64) {
    let mut rows = 0;
    let mut best = (f64::NAN, f64::NAN, f64::INFINITY);
    for line in csv.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        rows += 1;
        if v[2] < best.2 {
            best = (v[0], v[1], v[2]);
        }
    }
    (rows, best.0, best.1, best.2)
}

pub const HEX: (f64, f64) = (0.5, 0.866_025_403_784_438_6);

pub const LANDSCAPE_R: [&str; 11] = [
    "landscape",
    "--functional",
    "R",
    "--alpha",
    "1.5",
    "--xrange",
    "0,0.5",
    "--yrange",
    "0.85,2",
    "--res",
    "50",
];

pub const LANDSCAPE_THETA: [&str; 11] = [
    "landscape",
    "--functional",
    "theta",
    "--alpha",
    "1",
    "--xrange",
    "0,0.5",
    "--yrange",
    "0.85,2",
    "--res",
    "50",
];

/// Whether a cell of the 50 × 50 grid over `[0, 1/2] × [0.85, 2]` touches the hexagonal point.
pub fn adjacent_to_hex(x: f64, y: f64) -> bool {
    let dx = 0.5 / 49.0;
    let dy = 1.15 / 49.0;
    (x - HEX.0).abs() <= dx * (1.0 + 1e-9) && (y - HEX.1).abs() <= dy * (1.0 + 1e-9)
}
