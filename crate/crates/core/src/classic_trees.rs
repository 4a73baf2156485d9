//! The Stern-Brocot tree, the Calkin-Wilf tree and the Farey triple tree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::treewalk::{FlipWord, Step, TreeAddress};

/// Three pairwise Farey-neighbour gradients, one per arc of a triangulation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradientTriple([Ratio; 3]);

impl GradientTriple {
    pub fn new(entries: [Ratio; 3]) -> Result<Self> {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !entries[i].is_farey_neighbor(&entries[j]) {
                return Err(Error::NotNeighbors(entries[i].to_string(), entries[j].to_string()));
            }
        }
        Ok(Self(entries))
    }

    /// `(0/1, 1/0, 1/1)`, the root of the Farey triple tree.
    pub fn farey_root() -> Self {
        Self([Ratio::zero(), Ratio::infinity(), Ratio::one()])
    }

    pub fn entries(&self) -> &[Ratio; 3] {
        &self.0
    }

    /// Entry at label `k` in `1..=3`.
    pub fn get(&self, k: u8) -> &Ratio {
        &self.0[usize::from(k) - 1]
    }

    fn others(&self, k: u8) -> (&Ratio, &Ratio) {
        let idx = usize::from(k) - 1;
        (&self.0[(idx + 1) % 3], &self.0[(idx + 2) % 3])
    }

    /// Position (1-based) of the strictly middle value.
    pub fn middle_position(&self) -> u8 {
        let e = &self.0;
        for k in 0..3 {
            let (a, b) = (&e[(k + 1) % 3], &e[(k + 2) % 3]);
            if (a < &e[k] && &e[k] < b) || (b < &e[k] && &e[k] < a) {
                return k as u8 + 1;
            }
        }
        unreachable!("three distinct values always have a middle one")
    }

    pub fn second_largest(&self) -> &Ratio {
        self.get(self.middle_position())
    }

    /// Replaces entry `k` by the mediant of the other two.
    pub fn with_mediant(&self, k: u8) -> Result<Self> {
        let (a, b) = self.others(k);
        let m = a.mediant(b)?;
        let mut e = self.0.clone();
        e[usize::from(k) - 1] = m;
        Ok(Self(e))
    }

    /// Replaces entry `k` by the Farey difference of the other two.
    pub fn with_difference(&self, k: u8) -> Result<Self> {
        let (a, b) = self.others(k);
        let d = a.farey_difference(b)?;
        let mut e = self.0.clone();
        e[usize::from(k) - 1] = d;
        Ok(Self(e))
    }

    /// The gradient triple after a flip in direction `k`.
    ///
    /// A non-middle entry becomes the mediant of the other two; the middle
    /// entry becomes their Farey difference. Flipping twice in the same
    /// direction is the identity.
    pub fn flip(&self, k: u8) -> Self {
        assert!((1..=3).contains(&k), "flip direction {k} out of range");
        let res = if self.middle_position() == k {
            self.with_difference(k)
        } else {
            self.with_mediant(k)
        };
        res.expect("entries of a gradient triple are pairwise Farey neighbours")
    }
}

impl fmt::Display for GradientTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for GradientTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicTree {
    SternBrocot,
    CalkinWilf,
}

/// Calkin-Wilf value: `x/y` has children `x/(x+y)` (Left) and `(x+y)/y` (Right).
pub fn cw_node(addr: &TreeAddress) -> Ratio {
    let (mut x, mut y) = (BigInt::one(), BigInt::one());
    for s in addr.steps() {
        match s {
            Step::Left => y = &x + &y,
            Step::Right => x = &x + &y,
        }
    }
    Ratio::reduce(x, y).expect("Calkin-Wilf entries are positive")
}

/// Stern-Brocot value: the mediant of the running bounds, starting from `(0/1, 1/0)`.
pub fn sb_node(addr: &TreeAddress) -> Ratio {
    let (mut lo, mut hi) = (Ratio::zero(), Ratio::infinity());
    for s in addr.steps() {
        let value = lo.mediant(&hi).expect("Stern-Brocot bounds are neighbours");
        match s {
            Step::Left => hi = value,
            Step::Right => lo = value,
        }
    }
    lo.mediant(&hi).expect("Stern-Brocot bounds are neighbours")
}

/// Farey triple reached by `word`: label `k` replaces entry `k` with the mediant of the others.
pub fn farey_triple_node(word: &FlipWord) -> Result<GradientTriple> {
    let mut t = GradientTriple::farey_root();
    for &k in word.labels() {
        t = t.with_mediant(k)?;
    }
    Ok(t)
}

fn positive_finite(q: &Ratio) -> Result<()> {
    if q.is_infinite() || !q.numer().is_positive() {
        return Err(Error::OutOfDomain(q.to_string()));
    }
    Ok(())
}

/// Address of `q` in the Stern-Brocot tree, by descending from the root.
pub fn sb_locate(q: &Ratio) -> Result<TreeAddress> {
    positive_finite(q)?;
    let (mut lo, mut hi) = (Ratio::zero(), Ratio::infinity());
    let mut steps = Vec::new();
    loop {
        let m = lo.mediant(&hi)?;
        match q.cmp(&m) {
            std::cmp::Ordering::Equal => return Ok(TreeAddress(steps)),
            std::cmp::Ordering::Less => {
                steps.push(Step::Left);
                hi = m;
            }
            std::cmp::Ordering::Greater => {
                steps.push(Step::Right);
                lo = m;
            }
        }
    }
}

/// Address of `q` in the Calkin-Wilf tree, by running the Euclidean steps backwards.
pub fn cw_locate(q: &Ratio) -> Result<TreeAddress> {
    positive_finite(q)?;
    let (mut x, mut y) = (q.numer().clone(), q.denom().clone());
    let mut steps = Vec::new();
    while !(x.is_one() && y.is_one()) {
        if x > y {
            x -= &y;
            steps.push(Step::Right);
        } else {
            y -= &x;
            steps.push(Step::Left);
        }
        debug_assert!(!x.is_zero() && !y.is_zero());
    }
    steps.reverse();
    Ok(TreeAddress(steps))
}

/// Values at `depth`, top to bottom (all-Right address first).
pub fn enumerate_level(tree: ClassicTree, depth: usize) -> Vec<Ratio> {
    TreeAddress::level(depth)
        .map(|a| match tree {
            ClassicTree::SternBrocot => sb_node(&a),
            ClassicTree::CalkinWilf => cw_node(&a),
        })
        .collect()
}
