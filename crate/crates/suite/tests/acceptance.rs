//! Runs every acceptance criterion and prints one PASS/FAIL line per criterion, followed by
//! the failing sub-checks. Exits non-zero if any criterion fails.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use berge_core::search::GraphCatalog;
use berge_core::verify::{
    classical, construction_formulas, construction_freeness, exact_berge_turan, kelmans_suite, recoloring,
    reduction_contract, reproducibility, sharpness, Check, CriterionResult,
};
use berge_suite::berge_binary;

const SEED: u64 = 1;

type Step = Box<dyn FnOnce(&mut GraphCatalog) -> CriterionResult>;

/// Two full `verify all` runs of the binary with the same seed file, compared byte for byte
/// on stdout and on the written report.
fn cli_reproducibility() -> Vec<Check> {
    let dir = std::env::temp_dir().join(format!("berge-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir");
    let seed_file = dir.join("seed.txt");
    fs::write(&seed_file, format!("# acceptance seed\nseed = {SEED}\n")).expect("seed file");
    let bin = berge_binary();
    let run = |tag: &str| {
        let report = dir.join(format!("report-{tag}.json"));
        let out = Command::new(&bin)
            .args(["--jobs", "4", "verify", "all", "--seed-file"])
            .arg(&seed_file)
            .arg("-o")
            .arg(&report)
            .output()
            .expect("run berge verify all");
        (out.stdout, fs::read(&report).unwrap_or_default(), out.status.code())
    };
    let (out_a, rep_a, code_a) = run("a");
    let (out_b, rep_b, code_b) = run("b");
    let _ = fs::remove_dir_all(&dir);
    vec![
        Check {
            name: "verify all stdout identical across two invocations".into(),
            pass: !out_a.is_empty() && out_a == out_b && code_a == code_b,
            detail: format!("{} bytes, exit codes {code_a:?} and {code_b:?}", out_a.len()),
        },
        Check {
            name: "verify all JSON report identical across two invocations".into(),
            pass: !rep_a.is_empty() && rep_a == rep_b,
            detail: format!("{} and {} bytes", rep_a.len(), rep_b.len()),
        },
    ]
}

fn main() -> ExitCode {
    let mut catalog = GraphCatalog::new();
    let steps: Vec<Step> = vec![
        Box::new(|_| construction_formulas()),
        Box::new(|_| construction_freeness()),
        Box::new(|_| sharpness().0),
        Box::new(|_| reduction_contract(SEED)),
        Box::new(|_| kelmans_suite(SEED)),
        Box::new(|_| recoloring(SEED)),
        Box::new(classical),
        Box::new(|_| exact_berge_turan()),
        Box::new(|_| {
            let mut c = reproducibility(SEED);
            c.checks.extend(cli_reproducibility());
            c.pass = c.checks.iter().all(|k| k.pass);
            c
        }),
    ];
    let mut failed = 0;
    for step in steps {
        let start = Instant::now();
        let c = step(&mut catalog);
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {} ({:.1}s)", c.id, c.title, start.elapsed().as_secs_f64());
        for check in c.checks.iter().filter(|k| !k.pass) {
            println!("    failed: {}: {}", check.name, check.detail);
        }
        failed += usize::from(!c.pass);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
