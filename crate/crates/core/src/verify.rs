//! Exhaustive and sampled checks of the tree dualities.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classic_trees::{cw_node, sb_node};
use crate::cluster::{
    classify_form, dual_matrix_of, h_walk, h_walk_states, intersection_number, map_g, matrix_of,
    psi_flip, tree_d, tree_ddag, Form, IntersectionMatrix, FORM_ARROWS,
};
use crate::error::{Error, Result};
use crate::oracle::{crossing_count, verify_det, verify_int_inc, Segment};
use crate::treewalk::{address_to_flipword, FlipWord, Step, TreeAddress};
use crate::words::{verify_christoffel_main, verify_dual_christoffel, verify_morphism_closure};

/// Outcome of a verification suite: how many cases passed, and the first failure if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checked: u64,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Self { suite: suite.to_string(), checked: 0, failure: None }
    }

    pub fn pass(&mut self) {
        self.checked += 1;
    }

    pub fn fail(mut self, msg: String) -> Self {
        self.failure = Some(msg);
        self
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} cases)", self.suite, self.checked),
            Some(msg) => write!(f, "FAIL {} after {} cases: {}", self.suite, self.checked, msg),
        }
    }
}

/// Every address up to `depth`, in level order.
fn addresses(depth: usize) -> impl Iterator<Item = TreeAddress> {
    (0..=depth).flat_map(TreeAddress::level)
}

/// `g` applied to the intersection vector tree reproduces the Stern-Brocot tree.
pub fn verify_main1(depth: usize) -> Report {
    let mut report = Report::new("main1");
    for a in addresses(depth) {
        let word = address_to_flipword(&a);
        let v = tree_d(&word);
        match map_g(&v) {
            Ok(q) if q == sb_node(&a) => report.pass(),
            Ok(q) => return report.fail(format!("at {a} ({word}): g({v}) = {q}, Stern-Brocot has {}", sb_node(&a))),
            Err(e) => return report.fail(format!("at {a} ({word}): {e}")),
        }
    }
    report
}

/// `h` applied to the initial intersection vector tree reproduces the Calkin-Wilf tree.
pub fn verify_main2(depth: usize) -> Report {
    let mut report = Report::new("main2");
    for a in addresses(depth) {
        let word = address_to_flipword(&a);
        match h_walk(&word) {
            Ok(q) if q == cw_node(&a) => report.pass(),
            Ok(q) => return report.fail(format!("at {a} ({word}): h = {q}, Calkin-Wilf has {}", cw_node(&a))),
            Err(e) => return report.fail(format!("at {a} ({word}): {e}")),
        }
    }
    report
}

/// Uniform random flip word of length `0..=max_len`.
pub fn random_flipword(rng: &mut impl Rng, max_len: usize) -> FlipWord {
    let len = rng.gen_range(0..=max_len);
    let steps = (0..len)
        .map(|_| if rng.gen::<bool>() { Step::Right } else { Step::Left })
        .collect();
    address_to_flipword(&TreeAddress(steps))
}

/// Role swap: the matrix of the initial arcs against `L_t` is the transpose of `matrix_of`.
///
/// Checked three ways per sampled word: by swapping arguments of the closed form,
/// by running the column flips along the word, and by the geometric oracle.
pub fn verify_duality(samples: usize, seed: u64) -> Report {
    let mut report = Report::new("duality");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let word = random_flipword(&mut rng, 20);
        let forward = matrix_of(&word);
        let swapped = dual_matrix_of(&word);
        if swapped != forward.transpose() {
            return report.fail(format!("word {word}: D(L_t,L) = {swapped}, D(L,L_t)^T = {}", forward.transpose()));
        }
        match dual_by_psi(&word) {
            Ok(m) if m == swapped => {}
            Ok(m) => return report.fail(format!("word {word}: column flips give {m}, expected {swapped}")),
            Err(e) => return report.fail(format!("word {word}: {e}")),
        }
        match dual_by_oracle(&word) {
            Ok(m) if m == swapped => {}
            Ok(m) => return report.fail(format!("word {word}: oracle gives {m}, expected {swapped}")),
            Err(e) => return report.fail(format!("word {word}: {e}")),
        }
        report.pass();
    }
    report
}

fn dual_by_psi(word: &FlipWord) -> Result<IntersectionMatrix> {
    let mut m = dual_matrix_of(&FlipWord::empty());
    for &k in word.labels() {
        m = psi_flip(&m, k)?;
    }
    Ok(m)
}

fn dual_by_oracle(word: &FlipWord) -> Result<IntersectionMatrix> {
    let moving = crate::cluster::gradients_at(word);
    let initial = crate::cluster::initial_gradients();
    let mut out = IntersectionMatrix::from_ints([[0; 3]; 3]);
    for (i, e) in initial.entries().iter().enumerate() {
        let seg = Segment::from_gradient(e)?;
        for (j, g) in moving.entries().iter().enumerate() {
            out.0[i][j] = crossing_count(&seg, g)?.into();
            debug_assert_eq!(out.0[i][j], intersection_number(e, g));
        }
    }
    Ok(out)
}

/// Along each forward edge labelled `k`: entries other than `k` of the Tree(D†) vector
/// are unchanged, entry `k` is not maximal before and strictly maximal after; and the
/// unused index of the `h` walk equals the incoming label at every vertex.
pub fn verify_maximality(depth: usize) -> Report {
    let mut report = Report::new("maximality");
    for a in addresses(depth.saturating_sub(1)) {
        let word = address_to_flipword(&a);
        let before = tree_ddag(&word);
        let excluded = word.last().unwrap_or(3);
        for k in (1..=3u8).filter(|&k| k != excluded) {
            if depth == 0 {
                break;
            }
            let child = word.pushed(k).expect("k differs from the last label");
            let after = tree_ddag(&child);
            if !(before.is_nonnegative() && after.is_nonnegative()) {
                continue;
            }
            for i in (1..=3u8).filter(|&i| i != k) {
                if before.get(i) != after.get(i) {
                    return report.fail(format!("edge {word} -{k}-> {child}: entry {i} changed from {before} to {after}"));
                }
            }
            let was_max = (1..=3u8).all(|i| before.get(k) >= before.get(i));
            let strictly_max = (1..=3u8).filter(|&i| i != k).all(|i| after.get(k) > after.get(i));
            if was_max || !strictly_max {
                return report.fail(format!("edge {word} -{k}-> {child}: {before} -> {after} breaks maximality"));
            }
            report.pass();
        }
    }
    for a in TreeAddress::level(depth) {
        let word = address_to_flipword(&a);
        let states = match h_walk_states(&word) {
            Ok(s) => s,
            Err(e) => return report.fail(format!("h walk on {word}: {e}")),
        };
        let incoming = std::iter::once(3).chain(word.labels().iter().copied());
        for (state, label) in states.iter().zip(incoming) {
            if state.pair.unused() != label {
                return report.fail(format!(
                    "h walk on {word}: index pair {:?} does not leave out incoming label {label}",
                    state.pair
                ));
            }
        }
        report.pass();
    }
    report
}

/// Forms of `matrix_of` follow the six-arrow diagram; the root is form (i).
pub fn verify_forms(depth: usize) -> Report {
    let mut report = Report::new("forms");
    match classify_form(&matrix_of(&FlipWord::empty())) {
        Ok(Form::I) => report.pass(),
        Ok(f) => return report.fail(format!("root classifies as {f}")),
        Err(e) => return report.fail(format!("root: {e}")),
    }
    for a in addresses(depth.saturating_sub(1)) {
        if depth == 0 {
            break;
        }
        let word = address_to_flipword(&a);
        let from = match classify_form(&matrix_of(&word)) {
            Ok(f) => f,
            Err(e) => return report.fail(format!("at {word}: {e}")),
        };
        let excluded = word.last().unwrap_or(3);
        for k in (1..=3u8).filter(|&k| k != excluded) {
            let child = word.pushed(k).expect("k differs from the last label");
            let to = match classify_form(&matrix_of(&child)) {
                Ok(f) => f,
                Err(e) => return report.fail(format!("at {child}: {e}")),
            };
            if !FORM_ARROWS.contains(&(from, k, to)) {
                return report.fail(format!("edge {word} -{k}-> {child}: {from} -> {to} is not in the diagram"));
            }
            report.pass();
        }
    }
    report
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "main1", "main2", "duality", "maximality", "forms", "int-inc", "det", "christoffel", "cohn",
    "closure",
];

/// Parameters for [`run_suite`]; unset fields fall back to the suite's default.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteParams {
    pub depth: Option<usize>,
    pub bound: Option<u32>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

pub fn run_suite(name: &str, params: SuiteParams) -> Result<Report> {
    let depth = |d| params.depth.unwrap_or(d);
    let bound = |b| params.bound.unwrap_or(b);
    Ok(match name {
        "main1" => verify_main1(depth(12)),
        "main2" => verify_main2(depth(12)),
        "duality" => verify_duality(params.samples.unwrap_or(200), params.seed.unwrap_or(DEFAULT_SEED)),
        "maximality" => verify_maximality(depth(12)),
        "forms" => verify_forms(depth(12)),
        "int-inc" => verify_int_inc(bound(50)),
        "det" => verify_det(bound(20)),
        "christoffel" => verify_christoffel_main(depth(10)),
        "cohn" => verify_dual_christoffel(depth(10)),
        "closure" => {
            let b = bound(40) as usize;
            if b < 2 {
                return Err(Error::OutOfDomain(format!("closure bound {b} is below 2")));
            }
            verify_morphism_closure(b)
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for name in SUITES {
            let params = SuiteParams { depth: Some(5), bound: Some(8), samples: Some(20), seed: None };
            let report = run_suite(name, params).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checked > 0, "{report}");
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("main3", SuiteParams::default()).is_err());
        let bad = SuiteParams { bound: Some(1), ..Default::default() };
        assert!(run_suite("closure", bad).is_err());
    }

    #[test]
    fn report_display() {
        let mut r = Report::new("x");
        r.pass();
        assert_eq!(r.to_string(), "PASS x (1 cases)");
        assert_eq!(r.fail("boom".into()).to_string(), "FAIL x after 1 cases: boom");
    }

    #[test]
    fn random_words_are_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(1);
        let mut b = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert_eq!(random_flipword(&mut a, 20), random_flipword(&mut b, 20));
        }
    }
}
