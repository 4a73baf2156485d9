//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use sbcw::dump::TreeKind;
use sbcw::verify::{verify_duality, verify_forms, verify_maximality, DEFAULT_SEED};
use sbcw::words::{christoffel_word, path_oracle};
use sbcw::{cw_locate, cw_node, sb_locate, sb_node, Ratio};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

/// Runs the binary; `Ok(stdout)` on exit 0.
fn sbcw(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sbcw"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout).trim_end().to_string();
    if out.status.success() {
        Ok((stdout, elapsed))
    } else {
        Err(format!(
            "exit {:?}: {stdout} {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim_end()
        ))
    }
}

fn suite(args: &[&str], budget: Duration) -> Outcome {
    let (line, elapsed) = sbcw(args)?;
    if elapsed > budget {
        return Err(format!("{line}, took {elapsed:.2?} over {budget:?}"));
    }
    Ok(format!("{line} in {elapsed:.2?}"))
}

fn golden_rows() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures");
    let mut rows = 0;
    for kind in TreeKind::ALL {
        let path = dir.join(format!("{}.txt", kind.name()));
        let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let lines = expected.lines().count();
        let depth = (lines + 1).trailing_zeros() - 1;
        if (1usize << (depth + 1)) - 1 != lines || depth > 3 {
            return Err(format!("{}: {lines} rows is not a full tree of depth <= 3", kind.name()));
        }
        let (got, _) = sbcw(&["tree", kind.name(), "--depth", &depth.to_string(), "--format", "text"])?;
        if got != expected.trim_end() {
            return Err(format!("{} differs from fixture", kind.name()));
        }
        rows += lines;
    }
    Ok(format!("{rows} rows over {} kinds", TreeKind::ALL.len()))
}

fn determinant_law() -> Outcome {
    let (line, _) = sbcw(&["verify", "det", "--bound", "20"])?;
    Ok(line)
}

fn report(r: sbcw::verify::Report) -> Outcome {
    if r.passed() {
        Ok(r.to_string())
    } else {
        Err(r.to_string())
    }
}

fn christoffel_base() -> Outcome {
    let slope: Ratio = "3/5".parse().unwrap();
    let w = christoffel_word(&slope).map_err(|e| e.to_string())?.to_string();
    if w != "aabaabab" {
        return Err(format!("slope 3/5 gives {w}"));
    }
    let mut checked = 0;
    for x in 0..=60i64 {
        for y in 0..=(60 - x) {
            if (x, y) == (0, 0) || num_gcd(x, y) != 1 {
                continue;
            }
            let s = Ratio::from_ints(y, x).unwrap();
            let formula = christoffel_word(&s).map_err(|e| e.to_string())?;
            let oracle = path_oracle(&s).map_err(|e| e.to_string())?;
            if formula != oracle {
                return Err(format!("slope {s}: formula {formula}, staircase {oracle}"));
            }
            checked += 1;
        }
    }
    Ok(format!("aabaabab; {checked} slopes agree with the staircase"))
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

fn locator_round_trips() -> Outcome {
    let mut checked = 0;
    for p in 1..30i64 {
        for q in 1..=(30 - p) {
            if num_gcd(p, q) != 1 {
                continue;
            }
            let r = Ratio::from_ints(p, q).unwrap();
            let sb = sb_locate(&r).map_err(|e| e.to_string())?;
            let cw = cw_locate(&r).map_err(|e| e.to_string())?;
            if sb_node(&sb) != r || cw_node(&cw) != r {
                return Err(format!("{r}: sb {sb} -> {}, cw {cw} -> {}", sb_node(&sb), cw_node(&cw)));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} fractions"))
}

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("1 main1 depth 12", Box::new(move || suite(&["verify", "main1", "--depth", "12"], secs(5)))),
        ("2 main2 depth 12", Box::new(move || suite(&["verify", "main2", "--depth", "12"], secs(5)))),
        ("3 golden rows", Box::new(golden_rows)),
        ("4 int-inc bound 50", Box::new(move || suite(&["verify", "int-inc", "--bound", "50"], secs(30)))),
        ("5 determinant law", Box::new(determinant_law)),
        ("6 duality 200 samples", Box::new(|| report(verify_duality(200, DEFAULT_SEED)))),
        ("7 maximality depth 12", Box::new(|| report(verify_maximality(12)))),
        ("8 forms depth 12", Box::new(|| report(verify_forms(12)))),
        ("9 christoffel words", Box::new(christoffel_base)),
        (
            "10 christoffel and cohn depth 10",
            Box::new(move || {
                let a = suite(&["verify", "christoffel", "--depth", "10"], secs(30))?;
                let b = suite(&["verify", "cohn", "--depth", "10"], secs(30))?;
                Ok(format!("{a}; {b}"))
            }),
        ),
        ("11 closure bound 40", Box::new(move || suite(&["verify", "closure", "--bound", "40"], secs(30)))),
        ("12 locator round trips", Box::new(locator_round_trips)),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
