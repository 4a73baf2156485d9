//! Flip dynamics on triangulations of the once-punctured torus.
//!
//! A triangulation is tracked through the gradients of its three arcs on the
//! universal cover; the initial triangulation has gradients `0/1`, `1/0` and
//! `-1/1`. Intersection numbers are then `|det| - 1`, so that an arc meets
//! itself `-1` times.
//!
//! Vertices of the binary tree below `t1` are addressed by [`FlipWord`]s.
//! `matrix_of(word)` is the intersection matrix with rows indexed by the arcs
//! of the moving triangulation and columns by the initial arcs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::classic_trees::GradientTriple;
use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::treewalk::FlipWord;

/// Crossing counts of one arc with the three reference arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntersectionVector(pub [BigInt; 3]);

impl IntersectionVector {
    pub fn from_ints(v: [i64; 3]) -> Self {
        Self(v.map(BigInt::from))
    }

    pub fn get(&self, idx: u8) -> &BigInt {
        &self.0[usize::from(idx) - 1]
    }

    pub fn entries(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|d| !d.is_negative())
    }

    /// Entries as `i64`, for serialisation.
    pub fn to_i64s(&self) -> Result<[i64; 3]> {
        let conv = |d: &BigInt| i64::try_from(d).map_err(|_| Error::Overflow(d.to_string()));
        Ok([conv(&self.0[0])?, conv(&self.0[1])?, conv(&self.0[2])?])
    }
}

impl fmt::Display for IntersectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for IntersectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Row-major 3x3 matrix of crossing counts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix(pub [[BigInt; 3]; 3]);

impl IntersectionMatrix {
    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Self(m.map(|row| row.map(BigInt::from)))
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone())))
    }

    pub fn row(&self, idx: u8) -> IntersectionVector {
        IntersectionVector(self.0[usize::from(idx) - 1].clone())
    }

    pub fn column(&self, idx: u8) -> IntersectionVector {
        let j = usize::from(idx) - 1;
        IntersectionVector(std::array::from_fn(|i| self.0[i][j].clone()))
    }

    /// Whether row `k` equals the sum of the other two rows plus one.
    fn row_is_sum(&self, k: u8) -> bool {
        let (i, j) = others(k);
        let m = &self.0;
        let (i, j, k) = (usize::from(i) - 1, usize::from(j) - 1, usize::from(k) - 1);
        (0..3).all(|c| m[k][c] == &m[i][c] + &m[j][c] + 1)
    }

    fn col_is_sum(&self, k: u8) -> bool {
        self.transpose().row_is_sum(k)
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn others(k: u8) -> (u8, u8) {
    match k {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => panic!("direction {k} out of range"),
    }
}

/// The three shapes an intersection matrix below `t1` can take.
///
/// Every row satisfies `d3 = d1 + d2 + 1`; the shapes differ in which row is
/// the sum of the other two plus one (row 3, row 1 and row 2 respectively).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    I,
    II,
    III,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::I => "(i)",
            Form::II => "(ii)",
            Form::III => "(iii)",
        })
    }
}

/// `(from, label, to)` transitions of the form diagram under forward flips.
pub const FORM_ARROWS: [(Form, u8, Form); 6] = [
    (Form::III, 1, Form::II),
    (Form::II, 2, Form::III),
    (Form::II, 3, Form::I),
    (Form::I, 1, Form::II),
    (Form::III, 3, Form::I),
    (Form::I, 2, Form::III),
];

/// Numerator and denominator indices used by the `h` map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexPair {
    pub num_idx: u8,
    pub den_idx: u8,
}

impl IndexPair {
    pub fn unused(self) -> u8 {
        6 - self.num_idx - self.den_idx
    }

    /// Moves the index hit by edge `k` to the unused slot.
    pub fn advance(self, k: u8) -> Option<IndexPair> {
        let third = self.unused();
        if k == self.num_idx {
            Some(IndexPair { num_idx: third, den_idx: self.den_idx })
        } else if k == self.den_idx {
            Some(IndexPair { num_idx: self.num_idx, den_idx: third })
        } else {
            None
        }
    }
}

/// Gradients of the initial triangulation: horizontal, vertical, anti-diagonal.
pub fn initial_gradients() -> GradientTriple {
    GradientTriple::new([Ratio::zero(), Ratio::infinity(), Ratio::from_ints(-1, 1).unwrap()])
        .expect("initial gradients are unimodular")
}

pub fn flip_triple(t: &GradientTriple, k: u8) -> GradientTriple {
    t.flip(k)
}

/// `[a-1, b-1, a+b-1]` for gradient `a/b` with `a >= 0`.
pub fn grad_to_ivec(g: &Ratio) -> Result<IntersectionVector> {
    if g.numer().is_negative() {
        return Err(Error::OutOfRegion(g.to_string()));
    }
    let (a, b) = (g.numer(), g.denom());
    Ok(IntersectionVector([a - 1, b - 1, a + b - 1]))
}

/// Minimal crossing count of two arcs with the given gradients; `-1` for the same arc.
pub fn intersection_number(g: &Ratio, e: &Ratio) -> BigInt {
    g.cross_det(e).abs() - 1
}

/// Gradient triple at the vertex reached from `t1` by `word`.
pub fn gradients_at(word: &FlipWord) -> GradientTriple {
    let mut t = flip_triple(&initial_gradients(), 3);
    for &k in word.labels() {
        t = flip_triple(&t, k);
    }
    t
}

fn matrix_from_gradients(moving: &GradientTriple, fixed: &GradientTriple) -> IntersectionMatrix {
    let (g, e) = (moving.entries(), fixed.entries());
    IntersectionMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| intersection_number(&g[i], &e[j]))
    }))
}

/// Intersection matrix `D(L, L_t)`: entry `(i, j)` counts crossings of arc `i` of the
/// moving triangulation with initial arc `j`.
pub fn matrix_of(word: &FlipWord) -> IntersectionMatrix {
    matrix_from_gradients(&gradients_at(word), &initial_gradients())
}

/// Role-swapped matrix `D(L_t, L)`: entry `(i, j)` counts crossings of initial arc `i`
/// with arc `j` of the moving triangulation.
pub fn dual_matrix_of(word: &FlipWord) -> IntersectionMatrix {
    matrix_from_gradients(&initial_gradients(), &gradients_at(word))
}

/// Forward matrix flip: row `k` becomes the sum of the other two rows plus one.
pub fn phi_flip(m: &IntersectionMatrix, k: u8) -> Result<IntersectionMatrix> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidWord(k.to_string()));
    }
    if m.row_is_sum(k) {
        return Err(Error::MiddleFlip(k));
    }
    let (i, j) = others(k);
    let (i, j, k) = (usize::from(i) - 1, usize::from(j) - 1, usize::from(k) - 1);
    let mut out = m.clone();
    for c in 0..3 {
        out.0[k][c] = &m.0[i][c] + &m.0[j][c] + 1;
    }
    Ok(out)
}

/// Forward flip of the initial triangulation, acting on `D(L_t, L)` by columns.
pub fn psi_flip(m: &IntersectionMatrix, k: u8) -> Result<IntersectionMatrix> {
    Ok(phi_flip(&m.transpose(), k)?.transpose())
}

/// Shape of a `D(L, L_t)` matrix; exactly one must match.
pub fn classify_form(m: &IntersectionMatrix) -> Result<Form> {
    if !m.col_is_sum(3) {
        return Err(Error::Unclassifiable(0));
    }
    let matches: Vec<Form> = [(3, Form::I), (1, Form::II), (2, Form::III)]
        .into_iter()
        .filter(|&(k, _)| m.row_is_sum(k))
        .map(|(_, f)| f)
        .collect();
    match matches.as_slice() {
        [f] => Ok(*f),
        other => Err(Error::Unclassifiable(other.len())),
    }
}

/// Shape of a `D(L_t, L)` matrix, classified through its transpose.
pub fn classify_dual_form(m: &IntersectionMatrix) -> Result<Form> {
    classify_form(&m.transpose())
}

/// `[d1,d2,d3] -> (d1+1)/(d2+1)` on nonnegative vectors.
pub fn map_g(v: &IntersectionVector) -> Result<Ratio> {
    if !v.is_nonnegative() {
        return Err(Error::OutOfDomain(v.to_string()));
    }
    Ratio::reduce(&v.0[0] + 1, &v.0[1] + 1)
}

/// Vertex value of the intersection vector tree: the row created by the last flip.
pub fn tree_d(word: &FlipWord) -> IntersectionVector {
    matrix_of(word).row(word.last().unwrap_or(3))
}

/// Vertex value of the initial intersection vector tree: crossings of the moving arcs with arc 3.
pub fn tree_ddag(word: &FlipWord) -> IntersectionVector {
    matrix_of(word).column(3)
}

/// State of the `h` walk at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HState {
    pub pair: IndexPair,
    pub vector: IntersectionVector,
}

impl HState {
    pub fn value(&self) -> Ratio {
        let v = &self.vector;
        Ratio::reduce(v.get(self.pair.num_idx) + 1, v.get(self.pair.den_idx) + 1)
            .expect("entries are at least -1 and never both -1")
    }
}

/// States along the `h` walk, one per vertex from `t1` to the end of `word`.
pub fn h_walk_states(word: &FlipWord) -> Result<Vec<HState>> {
    let mut pair = IndexPair { num_idx: 1, den_idx: 2 };
    let mut grads = gradients_at(&FlipWord::empty());
    let arc3 = initial_gradients().get(3).clone();
    let column = |g: &GradientTriple| {
        IntersectionVector(std::array::from_fn(|i| intersection_number(&g.entries()[i], &arc3)))
    };
    let mut states = vec![HState { pair, vector: column(&grads) }];
    for &k in word.labels() {
        pair = pair.advance(k).ok_or_else(|| Error::InvalidWord(word.to_string()))?;
        grads = flip_triple(&grads, k);
        states.push(HState { pair, vector: column(&grads) });
    }
    Ok(states)
}

pub fn h_walk(word: &FlipWord) -> Result<Ratio> {
    let states = h_walk_states(word)?;
    Ok(states.last().expect("walk has at least the root").value())
}
