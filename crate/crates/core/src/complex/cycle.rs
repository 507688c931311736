use std::fmt;

use serde::Serialize;

/// Lexicographically smallest rotation or reflection of a cyclic sequence.
pub fn canonical_cyclic<T: Ord + Copy>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..n {
        for forward in [true, false] {
            let candidate: Vec<T> = (0..n)
                .map(|i| {
                    let idx = if forward { (start + i) % n } else { (start + n - i) % n };
                    seq[idx]
                })
                .collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap_or_default()
}

/// A closed vertex sequence without repetitions, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexCycle(Vec<usize>);

impl VertexCycle {
    /// Canonicalizes `vertices`. Returns `None` for fewer than three vertices or repeats.
    pub fn new(vertices: Vec<usize>) -> Option<Self> {
        if vertices.len() < 3 {
            return None;
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self(canonical_cyclic(&vertices)))
    }

    /// Wraps a sequence already known to be canonical.
    pub(crate) fn from_canonical(vertices: Vec<usize>) -> Self {
        debug_assert_eq!(canonical_cyclic(&vertices), vertices);
        Self(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Consecutive pairs, including the closing pair.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// The two cyclic neighbours of `v`, if `v` is on the cycle.
    pub fn neighbours_of(&self, v: usize) -> Option<(usize, usize)> {
        let n = self.0.len();
        let i = self.0.iter().position(|&x| x == v)?;
        Some((self.0[(i + n - 1) % n], self.0[(i + 1) % n]))
    }
}

impl fmt::Display for VertexCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
