//! Brute-force crossing counts on the universal cover.
//!
//! Punctures are the integer lattice. An arc of gradient `p/q` lifts to the
//! segment from the origin to `(q, p)`, and another arc of gradient `r/s`
//! lifts to the family of parallel lines `s*y - r*x = c` through lattice
//! points. Counting the lines that cross the open segment away from lattice
//! points gives the crossing number, using integer predicates only.

use num_integer::Integer;

use crate::cluster::{grad_to_ivec, initial_gradients, IntersectionVector};
use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::verify::Report;

/// Lift of an arc: the segment from the origin to `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    x: i64,
    y: i64,
}

impl Segment {
    /// Segment to `(x, y)`; requires `x >= 0`, `gcd(|y|, x) = 1` and a nonzero endpoint.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if x < 0 || x.gcd(&y) != 1 {
            return Err(Error::NotPrimitive(x.to_string(), y.to_string()));
        }
        Ok(Self { x, y })
    }

    /// The lift of an arc with the given gradient.
    pub fn from_gradient(g: &Ratio) -> Result<Self> {
        let x = to_i64(g.denom())?;
        let y = to_i64(g.numer())?;
        Self::new(x, y)
    }

    pub fn endpoint(&self) -> (i64, i64) {
        (self.x, self.y)
    }
}

fn to_i64(v: &num_bigint::BigInt) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(v.to_string()))
}

/// Crossings of `arc` with the arc of gradient `family`, or `-1` if they are the same arc.
pub fn crossing_count(arc: &Segment, family: &Ratio) -> Result<i64> {
    crossing_count_from(arc, family, (0, 0))
}

/// As [`crossing_count`], enumerating the family as translates of the line through `base`.
pub fn crossing_count_from(arc: &Segment, family: &Ratio, base: (i64, i64)) -> Result<i64> {
    let r = i128::from(to_i64(family.numer())?);
    let s = i128::from(to_i64(family.denom())?);
    let (q, p) = (i128::from(arc.x), i128::from(arc.y));
    let (bx, by) = (i128::from(base.0), i128::from(base.1));

    // level of the line family along the segment: f(t) = t * det
    let det = s * p - r * q;
    if det == 0 {
        return Ok(-1);
    }

    // lines are s*(y-by) - r*(x-bx) = k; bound k by the segment's bounding box
    let shift = s * by - r * bx;
    let level = |x: i128, y: i128| s * y - r * x - shift;
    let corners = [
        level(0, 0),
        level(q, 0),
        level(0, p),
        level(q, p),
    ];
    let kmin = *corners.iter().min().unwrap();
    let kmax = *corners.iter().max().unwrap();

    let mut count = 0i64;
    for k in kmin..=kmax {
        // the line meets the segment's supporting line at t = c / det
        let c = k + shift;
        let (lo, hi) = if det > 0 { (0, det) } else { (det, 0) };
        if c <= lo || c >= hi {
            continue;
        }
        // crossing point (c*q/det, c*p/det) is a puncture iff both coordinates are integers
        let on_lattice = (c * q) % det == 0 && (c * p) % det == 0;
        if !on_lattice {
            count += 1;
        }
    }
    Ok(count)
}

/// Oracle intersection vector of gradient `g` against the initial triangulation.
pub fn oracle_vector(g: &Ratio) -> Result<IntersectionVector> {
    let seg = Segment::from_gradient(g)?;
    let e = initial_gradients();
    let mut out = [0i64; 3];
    for (slot, fam) in out.iter_mut().zip(e.entries()) {
        *slot = crossing_count(&seg, fam)?;
    }
    Ok(IntersectionVector::from_ints(out))
}

/// Checks `[p-1, q-1, p+q-1]` against the oracle for every reduced `p/q >= 0` with `p + q <= bound`.
pub fn verify_int_inc(bound: u32) -> Report {
    let mut report = Report::new("int-inc");
    let bound = i64::from(bound);
    for p in 0..=bound {
        for q in 0..=(bound - p) {
            if (p, q) == (0, 0) || p.gcd(&q) != 1 {
                continue;
            }
            let g = Ratio::from_ints(p, q).expect("nonzero");
            let expected = grad_to_ivec(&g).expect("nonnegative gradient");
            match oracle_vector(&g) {
                Ok(got) if got == expected => report.pass(),
                Ok(got) => {
                    return report.fail(format!("gradient {g}: oracle {got}, closed form {expected}"))
                }
                Err(e) => return report.fail(format!("gradient {g}: {e}")),
            }
        }
    }
    report
}

/// All reduced `n/d` with `|n| <= bound`, `0 <= d <= bound`.
pub fn reduced_fractions(bound: i64) -> Vec<Ratio> {
    let mut out = Vec::new();
    for n in -bound..=bound {
        for d in 0..=bound {
            if (n, d) != (0, 0) && n.gcd(&d) == 1 && !(d == 0 && n < 0) {
                out.push(Ratio::from_ints(n, d).expect("nonzero"));
            }
        }
    }
    out
}

/// Checks oracle crossing counts against `|det| - 1` for all reduced pairs with entries up to `bound`.
pub fn verify_det(bound: u32) -> Report {
    let mut report = Report::new("det");
    let all = reduced_fractions(i64::from(bound));
    for g in &all {
        let seg = match Segment::from_gradient(g) {
            Ok(s) => s,
            Err(e) => return report.fail(format!("{g}: {e}")),
        };
        for e in &all {
            let expected = crate::cluster::intersection_number(g, e);
            match crossing_count(&seg, e) {
                Ok(got) if num_bigint::BigInt::from(got) == expected => report.pass(),
                Ok(got) => {
                    return report.fail(format!("arcs {g} and {e}: oracle {got}, |det|-1 = {expected}"))
                }
                Err(err) => return report.fail(format!("arcs {g} and {e}: {err}")),
            }
        }
    }
    report
}
