//! Binary-tree addresses and the `{1,2,3}` edge-labelling automaton.
//!
//! Trees are drawn sideways with the larger branch on top; `Right` is the top
//! child. The root's two edges carry labels `1` (Right) and `2` (Left); below
//! that each vertex hands its incoming label's complement down as described in
//! [`LabelState::step`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Left,
    Right,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Left => 'L',
            Step::Right => 'R',
        }
    }
}

/// A path from the root; empty is the root itself.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeAddress(pub Vec<Step>);

impl TreeAddress {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn child(&self, step: Step) -> Self {
        let mut steps = self.0.clone();
        steps.push(step);
        Self(steps)
    }

    /// All `2^depth` addresses at `depth`, all-Right first.
    ///
    /// This is the top-to-bottom order when the tree is drawn growing rightwards.
    pub fn level(depth: usize) -> impl Iterator<Item = TreeAddress> {
        let count = 1u64 << depth;
        (0..count).map(move |i| {
            // i = 0 is all-Right; bit (depth-1-j) set means Left at step j
            TreeAddress(
                (0..depth)
                    .map(|j| {
                        if (i >> (depth - 1 - j)) & 1 == 1 {
                            Step::Left
                        } else {
                            Step::Right
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for TreeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for TreeAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Step::Left),
                'R' => Ok(Step::Right),
                other => Err(Error::Parse(format!("address character {other:?} is not L or R"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TreeAddress)
    }
}

/// Labels carried by the two edges leaving a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelState {
    pub left_label: u8,
    pub right_label: u8,
}

impl LabelState {
    /// The root behaves as a right child entered through label 3 whose sibling had label 2.
    pub fn root() -> Self {
        Self { left_label: 2, right_label: 1 }
    }

    /// The label not used by either child edge; equals the incoming edge label.
    pub fn excluded(self) -> u8 {
        6 - self.left_label - self.right_label
    }

    pub fn label_for(self, step: Step) -> u8 {
        match step {
            Step::Left => self.left_label,
            Step::Right => self.right_label,
        }
    }

    /// Follows one edge, returning its label and the state at the child.
    ///
    /// A left child gives its own left edge the third label and keeps the
    /// sibling's label on the right; a right child does the mirror image.
    pub fn step(self, step: Step) -> (u8, LabelState) {
        let third = self.excluded();
        match step {
            Step::Left => (
                self.left_label,
                LabelState { left_label: third, right_label: self.right_label },
            ),
            Step::Right => (
                self.right_label,
                LabelState { left_label: self.left_label, right_label: third },
            ),
        }
    }

    /// Inverse of [`LabelState::label_for`].
    pub fn step_for_label(self, label: u8) -> Option<Step> {
        if label == self.left_label {
            Some(Step::Left)
        } else if label == self.right_label {
            Some(Step::Right)
        } else {
            None
        }
    }
}

/// An edge-label word read along a path from the root.
///
/// Consecutive labels differ and the first label is never 3.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipWord(Vec<u8>);

impl FlipWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(labels: Vec<u8>) -> Result<Self> {
        validate(&labels)?;
        Ok(Self(labels))
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Appends `label`, checking it can follow the current last label.
    pub fn push(&mut self, label: u8) -> Result<()> {
        let prev = self.0.last().copied().unwrap_or(3);
        if !(1..=3).contains(&label) || label == prev {
            return Err(Error::InvalidWord(format!("{self}{label}")));
        }
        self.0.push(label);
        Ok(())
    }

    pub fn pushed(&self, label: u8) -> Result<Self> {
        let mut w = self.clone();
        w.push(label)?;
        Ok(w)
    }
}

fn validate(labels: &[u8]) -> Result<()> {
    let mut prev = 3u8;
    for &l in labels {
        if !(1..=3).contains(&l) || l == prev {
            let text: String = labels.iter().map(|l| l.to_string()).collect();
            return Err(Error::InvalidWord(text));
        }
        prev = l;
    }
    Ok(())
}

impl fmt::Display for FlipWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for FlipWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                '3' => Ok(3),
                other => Err(Error::Parse(format!("flip label {other:?} is not 1, 2 or 3"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        FlipWord::new(labels)
    }
}

pub fn root_state() -> LabelState {
    LabelState::root()
}

pub fn address_to_flipword(addr: &TreeAddress) -> FlipWord {
    let mut state = LabelState::root();
    let mut labels = Vec::with_capacity(addr.depth());
    for &s in addr.steps() {
        let (label, next) = state.step(s);
        labels.push(label);
        state = next;
    }
    FlipWord(labels)
}

pub fn flipword_to_address(word: &FlipWord) -> Result<TreeAddress> {
    validate(word.labels())?;
    let mut state = LabelState::root();
    let mut steps = Vec::with_capacity(word.len());
    for &label in word.labels() {
        let step = state
            .step_for_label(label)
            .ok_or_else(|| Error::InvalidWord(word.to_string()))?;
        steps.push(step);
        state = state.step(step).1;
    }
    Ok(TreeAddress(steps))
}
