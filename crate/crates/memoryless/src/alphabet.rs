use std::fmt;

use crate::error::{Error, Result};

/// The shape of the state space: `n` registers, each holding a value in
/// `{0, …, q−1}`. States are indexed big-endian — register 1 is the most
/// significant digit — so state `(a_1, …, a_n)` has index `Σ a_i · q^(n−i)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    q: u32,
    n: u32,
    size: u32,
}

impl Alphabet {
    pub fn new(q: u32, n: u32) -> Result<Alphabet> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "q must be at least 2, got {q}"
            )));
        }
        if n < 1 {
            return Err(Error::InvalidAlphabet(format!(
                "n must be at least 1, got {n}"
            )));
        }
        let size = q.checked_pow(n).ok_or_else(|| {
            Error::InvalidAlphabet(format!("q^n = {q}^{n} does not fit an index"))
        })?;
        Ok(Alphabet { q, n, size })
    }

    /// Alphabet cardinality q.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Register count n.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of states, q^n.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Positional weight of register `j` (1-based): q^(n−j).
    pub fn stride(&self, j: u32) -> u32 {
        debug_assert!(1 <= j && j <= self.n);
        self.q.pow(self.n - j)
    }

    /// Value of register `j` (1-based) in the state with index `s`.
    pub fn digit(&self, s: u32, j: u32) -> u32 {
        (s / self.stride(j)) % self.q
    }

    /// State index obtained from `s` by setting register `j` to `v`.
    pub fn with_digit(&self, s: u32, j: u32, v: u32) -> u32 {
        debug_assert!(v < self.q);
        let w = self.stride(j);
        s - self.digit(s, j) * w + v * w
    }

    /// Index of the state with the given register contents.
    pub fn index_of(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.n as usize {
            return Err(Error::InvalidState(format!(
                "expected {} coordinates, got {}",
                self.n,
                coords.len()
            )));
        }
        let mut s = 0u32;
        for (i, &c) in coords.iter().enumerate() {
            if c >= self.q {
                return Err(Error::InvalidState(format!(
                    "coordinate {} is {c}, must be below q = {}",
                    i + 1,
                    self.q
                )));
            }
            s = s * self.q + c;
        }
        Ok(s)
    }

    /// Register contents of the state with index `s`.
    pub fn state_of(&self, s: u32) -> State {
        debug_assert!(s < self.size);
        let mut coords = vec![0u32; self.n as usize];
        let mut rem = s;
        for j in (0..self.n as usize).rev() {
            coords[j] = rem % self.q;
            rem /= self.q;
        }
        State { coords }
    }

    /// All state indices, ascending.
    pub fn states(&self) -> std::ops::Range<u32> {
        0..self.size
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} n={}", self.q, self.n)
    }
}

/// Register contents of one state.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct State {
    coords: Vec<u32>,
}

impl State {
    pub fn new(coords: Vec<u32>) -> State {
        State { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

impl fmt::Display for State {
    /// Digits are concatenated when every one fits a single character
    /// (q ≤ 10), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.iter().all(|&c| c < 10) {
            for &c in &self.coords {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}
