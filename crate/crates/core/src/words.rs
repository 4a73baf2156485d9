//! Christoffel words and the Christoffel and Cohn trees.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::classic_trees::{cw_node, sb_node};
use crate::cluster::{map_g, tree_d, IntersectionVector};
use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::treewalk::{address_to_flipword, flipword_to_address, FlipWord, LabelState, Step, TreeAddress};
use crate::verify::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

/// A word over `{a, b}`, ordered lexicographically with `a < b` and prefixes first.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BWord(Vec<Letter>);

impl BWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn a() -> Self {
        Self(vec![Letter::A])
    }

    pub fn b() -> Self {
        Self(vec![Letter::B])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BWord) -> BWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        BWord(v)
    }

    /// Replaces every occurrence of `letter` by `ab`.
    pub fn substitute(&self, letter: Letter) -> BWord {
        let mut v = Vec::with_capacity(self.len() * 2);
        for &l in &self.0 {
            if l == letter {
                v.extend_from_slice(&[Letter::A, Letter::B]);
            } else {
                v.push(l);
            }
        }
        BWord(v)
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|l| match l {
                Letter::A => 'a',
                Letter::B => 'b',
            })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                other => Err(Error::Parse(format!("letter {other:?} is not a or b"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BWord)
    }
}

/// Letter counts `(|w|_a, |w|_b, |w|)`.
pub fn counts(w: &BWord) -> (usize, usize, usize) {
    let na = w.0.iter().filter(|&&l| l == Letter::A).count();
    (na, w.len() - na, w.len())
}

fn slope_parts(slope: &Ratio) -> Result<(usize, usize)> {
    if slope.numer().is_negative() {
        return Err(Error::OutOfDomain(slope.to_string()));
    }
    let conv = |v: &BigInt| usize::try_from(v).map_err(|_| Error::Overflow(v.to_string()));
    // slope y/x: numerator counts b's, denominator counts a's
    Ok((conv(slope.denom())?, conv(slope.numer())?))
}

/// Lower Christoffel word of slope `y/x`.
///
/// Letter `k` (1-based) is `a` iff `k*y mod n > (k-1)*y mod n` with `n = x + y`.
/// Slopes `0/1` and `1/0` give `a` and `b`.
pub fn christoffel_word(slope: &Ratio) -> Result<BWord> {
    let (x, y) = slope_parts(slope)?;
    if y == 0 {
        return Ok(BWord::a());
    }
    if x == 0 {
        return Ok(BWord::b());
    }
    let n = x + y;
    let letters = (1..=n)
        .map(|k| {
            if (k * y) % n > ((k - 1) * y) % n {
                Letter::A
            } else {
                Letter::B
            }
        })
        .collect();
    Ok(BWord(letters))
}

/// Christoffel word read off the highest staircase from `(0,0)` to `(x,y)` that stays
/// on or below the segment: step up whenever the new corner is not above the line.
pub fn path_oracle(slope: &Ratio) -> Result<BWord> {
    let (x, y) = slope_parts(slope)?;
    let (mut i, mut j) = (0usize, 0usize);
    let mut letters = Vec::with_capacity(x + y);
    while (i, j) != (x, y) {
        // (i, j+1) lies on or below the line through (x, y) iff (j+1)*x <= i*y
        if j < y && (j + 1) * x <= i * y {
            j += 1;
            letters.push(Letter::B);
        } else {
            i += 1;
            letters.push(Letter::A);
        }
    }
    Ok(BWord(letters))
}

pub fn is_christoffel(w: &BWord) -> bool {
    let (na, nb, _) = counts(w);
    if na.gcd(&nb) != 1 {
        return false;
    }
    let slope = Ratio::reduce(nb as u64, na as u64).expect("nonempty word");
    christoffel_word(&slope).is_ok_and(|c| &c == w)
}

/// `uv` if `u` precedes `v`, else `vu`.
pub fn star(u: &BWord, v: &BWord) -> Result<BWord> {
    if u == v {
        return Err(Error::EqualWords(u.to_string()));
    }
    Ok(if u < v { u.concat(v) } else { v.concat(u) })
}

/// `|u|_a * |v|_b - |v|_a * |u|_b`.
pub fn det_pair(u: &BWord, v: &BWord) -> i64 {
    let (ua, ub, _) = counts(u);
    let (va, vb, _) = counts(v);
    (ua * vb) as i64 - (va * ub) as i64
}

/// A vertex `(u, v)` of the Christoffel or Cohn tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPair {
    pub u: BWord,
    pub v: BWord,
}

impl WordPair {
    pub fn root() -> Self {
        Self { u: BWord::a(), v: BWord::b() }
    }

    pub fn product(&self) -> BWord {
        self.u.concat(&self.v)
    }
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleKind {
    Christoffel,
    Cohn,
}

/// Three words; for Cohn triples `w = uv`, for Christoffel triples `w = u*v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordTriple {
    pub u: BWord,
    pub v: BWord,
    pub w: BWord,
    pub kind: TripleKind,
}

impl WordTriple {
    pub fn root(kind: TripleKind) -> Self {
        Self { u: BWord::a(), v: BWord::b(), w: "ab".parse().unwrap(), kind }
    }

    pub fn get(&self, k: u8) -> &BWord {
        match k {
            1 => &self.u,
            2 => &self.v,
            3 => &self.w,
            _ => panic!("position {k} out of range"),
        }
    }

    fn with(&self, k: u8, word: BWord) -> Self {
        let mut t = self.clone();
        match k {
            1 => t.u = word,
            2 => t.v = word,
            _ => t.w = word,
        }
        t
    }

    /// Position of the second-largest entry in lexicographic order.
    pub fn middle_position(&self) -> Result<u8> {
        if self.u == self.v || self.v == self.w || self.u == self.w {
            return Err(Error::TieBreak(self.to_string()));
        }
        let mut idx = [1u8, 2, 3];
        idx.sort_by(|&i, &j| self.get(i).cmp(self.get(j)));
        Ok(idx[1])
    }

    /// `(smallest, largest)` entries.
    pub fn extremes(&self) -> WordPair {
        let mut all = [&self.u, &self.v, &self.w];
        all.sort();
        WordPair { u: all[0].clone(), v: all[2].clone() }
    }
}

impl fmt::Display for WordTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.u, self.v, self.w)
    }
}

/// Children `(u, uv)` (Left) and `(uv, v)` (Right).
pub fn christoffel_children(p: &WordPair) -> (WordPair, WordPair) {
    let uv = p.product();
    (
        WordPair { u: p.u.clone(), v: uv.clone() },
        WordPair { u: uv, v: p.v.clone() },
    )
}

/// The two children of a Christoffel triple, tagged with the position they replace.
///
/// The second-largest entry stays put; each other position `k` is replaced by
/// the star product of the remaining two entries.
pub fn christoffel_triple_children(t: &WordTriple) -> Result<[(u8, WordTriple); 2]> {
    let middle = t.middle_position()?;
    let mut out = Vec::with_capacity(2);
    for k in (1..=3).filter(|&k| k != middle) {
        let (i, j) = match k {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        };
        out.push((k, t.with(k, star(t.get(i), t.get(j))?)));
    }
    Ok([out[0].clone(), out[1].clone()])
}

/// Christoffel triple reached along `word`; each label must be a non-middle position.
pub fn christoffel_triple_node(word: &FlipWord) -> Result<WordTriple> {
    let mut t = WordTriple::root(TripleKind::Christoffel);
    for &k in word.labels() {
        let children = christoffel_triple_children(&t)?;
        t = children
            .into_iter()
            .find(|(label, _)| *label == k)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::InvalidWord(word.to_string()))?;
    }
    Ok(t)
}

/// Left applies `b -> ab`, Right applies `a -> ab`.
pub fn cohn_children(t: &WordTriple) -> (WordTriple, WordTriple) {
    let sub = |l: Letter| WordTriple {
        u: t.u.substitute(l),
        v: t.v.substitute(l),
        w: t.w.substitute(l),
        kind: TripleKind::Cohn,
    };
    (sub(Letter::B), sub(Letter::A))
}

pub fn christoffel_node(addr: &TreeAddress) -> WordPair {
    let mut p = WordPair::root();
    for &s in addr.steps() {
        let (l, r) = christoffel_children(&p);
        p = if s == Step::Left { l } else { r };
    }
    p
}

pub fn cohn_triple_node(addr: &TreeAddress) -> WordTriple {
    let mut t = WordTriple::root(TripleKind::Cohn);
    for &s in addr.steps() {
        let (l, r) = cohn_children(&t);
        t = if s == Step::Left { l } else { r };
    }
    t
}

pub fn cohn_node(addr: &TreeAddress) -> WordPair {
    let t = cohn_triple_node(addr);
    WordPair { u: t.u, v: t.v }
}

pub fn combined_cohn_node(addr: &TreeAddress) -> BWord {
    cohn_triple_node(addr).w
}

fn ratio(n: usize, d: usize) -> Ratio {
    Ratio::reduce(n as u64, d as u64).expect("word lengths are positive")
}

fn check_pair(p: &WordPair) -> std::result::Result<(), String> {
    for (name, word) in [("u", &p.u), ("v", &p.v), ("uv", &p.product())] {
        if !is_christoffel(word) {
            return Err(format!("{name} = {word} is not a Christoffel word"));
        }
    }
    if det_pair(&p.u, &p.v) != 1 {
        return Err(format!("det of {p} is {}", det_pair(&p.u, &p.v)));
    }
    Ok(())
}

/// Christoffel tree: `|u|/|v|` is Calkin-Wilf, `|uv|_b/|uv|_a` is Stern-Brocot,
/// and every entry and product is a Christoffel word.
pub fn verify_christoffel_main(depth: usize) -> Report {
    let mut report = Report::new("christoffel");
    let mut level = vec![(TreeAddress::root(), WordPair::root())];
    for d in 0..=depth {
        for (addr, p) in &level {
            let (na, nb, _) = counts(&p.product());
            let checks = [
                ("|u|/|v|", ratio(p.u.len(), p.v.len()), cw_node(addr)),
                ("|uv|_b/|uv|_a", ratio(nb, na), sb_node(addr)),
            ];
            for (what, got, want) in checks {
                if got != want {
                    return report.fail(format!("at {addr:?} {p}: {what} = {got}, expected {want}"));
                }
            }
            if let Err(msg) = check_pair(p) {
                return report.fail(format!("at {addr:?}: {msg}"));
            }
            report.pass();
        }
        if d < depth {
            level = level
                .iter()
                .flat_map(|(a, p)| {
                    let (l, r) = christoffel_children(p);
                    [(a.child(Step::Right), r), (a.child(Step::Left), l)]
                })
                .collect();
        }
    }
    report
}

/// Cohn tree: `|u|/|v|` is Stern-Brocot, `|uv|_b/|uv|_a` is Calkin-Wilf, every entry and
/// product is a Christoffel word, and the triples' third entries agree with the
/// intersection vector tree through `[|u|-1, |v|-1, |uv|-1]`.
pub fn verify_dual_christoffel(depth: usize) -> Report {
    let mut report = Report::new("cohn");
    let mut level = vec![(TreeAddress::root(), WordTriple::root(TripleKind::Cohn))];
    for d in 0..=depth {
        for (addr, t) in &level {
            let p = WordPair { u: t.u.clone(), v: t.v.clone() };
            if t.w != p.product() {
                return report.fail(format!("at {addr:?}: third entry {} is not uv", t.w));
            }
            let (na, nb, _) = counts(&t.w);
            let checks = [
                ("|u|/|v|", ratio(t.u.len(), t.v.len()), sb_node(addr)),
                ("|uv|_b/|uv|_a", ratio(nb, na), cw_node(addr)),
            ];
            for (what, got, want) in checks {
                if got != want {
                    return report.fail(format!("at {addr:?} {t}: {what} = {got}, expected {want}"));
                }
            }
            if let Err(msg) = check_pair(&p) {
                return report.fail(format!("at {addr:?}: {msg}"));
            }
            let lengths = length_vector(t);
            let word = address_to_flipword(addr);
            let expected = tree_d(&word);
            if lengths != expected {
                return report.fail(format!("at {addr:?}: length vector {lengths}, Tree(D) has {expected}"));
            }
            if map_g(&lengths).ok().as_ref() != Some(&sb_node(addr)) {
                return report.fail(format!("at {addr:?}: g of {lengths} is not the Stern-Brocot value"));
            }
            report.pass();
        }
        if d < depth {
            level = level
                .iter()
                .flat_map(|(a, t)| {
                    let (l, r) = cohn_children(t);
                    [(a.child(Step::Right), r), (a.child(Step::Left), l)]
                })
                .collect();
        }
    }
    report
}

/// `[|u|-1, |v|-1, |uv|-1]`.
pub fn length_vector(t: &WordTriple) -> IntersectionVector {
    IntersectionVector::from_ints([t.u.len() as i64 - 1, t.v.len() as i64 - 1, t.w.len() as i64 - 1])
}

/// All Christoffel words of length at most `max_len`, including `a` and `b`.
pub fn christoffel_words_up_to(max_len: usize) -> Vec<BWord> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for y in 0..=n {
            let x = n - y;
            if x.gcd(&y) == 1 {
                let slope = Ratio::reduce(y as u64, x as u64).expect("n >= 1");
                out.push(christoffel_word(&slope).expect("nonnegative slope"));
            }
        }
    }
    out
}

/// Both substitutions preserve Christoffel words up to `max_len`, and every non-degenerate
/// Christoffel word up to `max_len` is reached from `ab` by substitutions.
pub fn verify_morphism_closure(max_len: usize) -> Report {
    let mut report = Report::new("closure");
    let words = christoffel_words_up_to(max_len);
    for w in &words {
        for l in [Letter::A, Letter::B] {
            let image = w.substitute(l);
            if !is_christoffel(&image) {
                return report.fail(format!("{w} with {l:?} -> ab gives {image}, not a Christoffel word"));
            }
        }
        report.pass();
    }

    let start: BWord = "ab".parse().unwrap();
    let mut reached = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for l in [Letter::A, Letter::B] {
            let next = w.substitute(l);
            if next.len() <= max_len && reached.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    for w in words.iter().filter(|w| w.len() >= 2) {
        if !reached.contains(w) {
            return report.fail(format!("{w} is not reached from ab"));
        }
        report.pass();
    }
    report
}

/// Labels of the two child edges match the automaton, so the triple tree can be walked by flip word.
pub fn christoffel_triple_labels_agree(depth: usize) -> Result<bool> {
    let mut level = vec![(LabelState::root(), WordTriple::root(TripleKind::Christoffel))];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (state, t) in &level {
            let children = christoffel_triple_children(t)?;
            let labels = [children[0].0, children[1].0];
            let mut expected = [state.left_label, state.right_label];
            expected.sort();
            if labels != expected {
                return Ok(false);
            }
            for step in [Step::Right, Step::Left] {
                let (label, child_state) = state.step(step);
                let child = children.iter().find(|(l, _)| *l == label).unwrap().1.clone();
                next.push((child_state, child));
            }
        }
        level = next;
    }
    Ok(true)
}

/// Flip word of a Christoffel-tree address, for walking the triple tree.
pub fn christoffel_triple_at(addr: &TreeAddress) -> Result<WordTriple> {
    christoffel_triple_node(&address_to_flipword(addr))
}

/// Cohn triple at a flip word, via its address.
pub fn cohn_triple_at(word: &FlipWord) -> Result<WordTriple> {
    Ok(cohn_triple_node(&flipword_to_address(word)?))
}
