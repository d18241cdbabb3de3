//! Criterion 7: identical CLI invocations give byte-identical CSV output.

mod common;

use common::*;

fn main() {
    let invocations: [&[&str]; 4] = [
        &LANDSCAPE_R,
        &LANDSCAPE_THETA,
        &["verify", "--lemma", "all", "--grid", "16"],
        &["reduce", "--z", "1.7,0.8"],
    ];
    let mut all = true;
    for args in invocations {
        let (c1, first) = run_binary(args, None);
        let (c2, second) = run_binary(args, None);
        let ok = c1 == 0 && c2 == 0 && !first.is_empty() && first == second;
        all &= ok;
        println!(
            "    [{}] hexmin {} ({} bytes)",
            if ok { "ok" } else { "FAIL" },
            args.join(" "),
            first.len()
        );
    }
    println!("{} criterion 7: CLI determinism", if all { "PASS" } else { "FAIL" });
    if !all {
        std::process::exit(1);
    }
}
