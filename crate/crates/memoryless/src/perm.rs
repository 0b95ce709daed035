use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// A permutation of the state space A^n, stored as its image table:
/// `images[s]` is the index of the image of state `s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    alphabet: Alphabet,
    images: Vec<u32>,
}

/// Disjoint-cycle form of a permutation. Fixed points are omitted; each cycle
/// has length ≥ 2 and is rotated so its smallest state index comes first;
/// cycles are listed by that leading index. `sign` is +1 for even, −1 for odd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<u32>>,
    pub sign: i8,
}

impl Permutation {
    pub fn identity(alphabet: Alphabet) -> Permutation {
        Permutation {
            alphabet,
            images: alphabet.states().collect(),
        }
    }

    pub fn from_images(alphabet: Alphabet, images: Vec<u32>) -> Result<Permutation> {
        let size = alphabet.size() as usize;
        if images.len() != size {
            return Err(Error::NotBijective(format!(
                "image table has {} entries, state space has {}",
                images.len(),
                size
            )));
        }
        let mut seen = vec![false; size];
        for &im in &images {
            if im as usize >= size {
                return Err(Error::NotBijective(format!(
                    "image {im} out of range for {size} states"
                )));
            }
            if seen[im as usize] {
                return Err(Error::NotBijective(format!("image {im} repeated")));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { alphabet, images })
    }

    /// Build from a list of disjoint cycles of state indices; states not
    /// mentioned are fixed.
    pub fn from_cycles(alphabet: Alphabet, cycles: &[Vec<u32>]) -> Result<Permutation> {
        let mut images: Vec<u32> = alphabet.states().collect();
        let mut moved = vec![false; alphabet.size() as usize];
        for cycle in cycles {
            for (k, &s) in cycle.iter().enumerate() {
                if s >= alphabet.size() {
                    return Err(Error::InvalidState(format!("state {s} out of range")));
                }
                if moved[s as usize] {
                    return Err(Error::NotBijective(format!("state {s} in two cycles")));
                }
                moved[s as usize] = true;
                images[s as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(alphabet, images)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, s: u32) -> u32 {
        self.images[s as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(s, &im)| s as u32 == im)
    }

    /// `self ∘ g`: apply `g` first, then `self`.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.alphabet != g.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "cannot compose over {} and {}",
                self.alphabet, g.alphabet
            )));
        }
        let images = g.images.iter().map(|&s| self.images[s as usize]).collect();
        Ok(Permutation {
            alphabet: self.alphabet,
            images,
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (s, &im) in self.images.iter().enumerate() {
            images[im as usize] = s as u32;
        }
        Permutation {
            alphabet: self.alphabet,
            images,
        }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let size = self.images.len();
        let mut seen = vec![false; size];
        let mut cycles = Vec::new();
        let mut transposition_count = 0usize;
        for start in 0..size {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur as u32);
                cur = self.images[cur] as usize;
            }
            transposition_count += cycle.len() - 1;
            cycles.push(cycle);
        }
        let sign = if transposition_count.is_multiple_of(2) {
            1
        } else {
            -1
        };
        CycleDecomposition { cycles, sign }
    }

    pub fn sign(&self) -> i8 {
        self.cycle_decomposition().sign
    }

    /// The new value of register `j` (1-based) as a table over all states.
    pub fn coordinate_function(&self, j: u32) -> Vec<u32> {
        let a = self.alphabet;
        self.images.iter().map(|&im| a.digit(im, j)).collect()
    }

    /// Registers whose coordinate function differs from the projection,
    /// ascending and 1-based.
    pub fn updated_registers(&self) -> Vec<u32> {
        let a = self.alphabet;
        (1..=a.n())
            .filter(|&j| {
                self.images
                    .iter()
                    .enumerate()
                    .any(|(s, &im)| a.digit(s as u32, j) != a.digit(im, j))
            })
            .collect()
    }

    /// Registers the coordinate function of register `j` genuinely depends
    /// on: `k` is essential iff two states differing only at `k` map to
    /// different values of register `j`. Ascending, 1-based.
    pub fn essential_variables(&self, j: u32) -> Vec<u32> {
        let a = self.alphabet;
        let mut essential = vec![false; a.n() as usize + 1];
        for s in a.states() {
            let out = a.digit(self.images[s as usize], j);
            for k in 1..=a.n() {
                if essential[k as usize] {
                    continue;
                }
                let v = a.digit(s, k);
                for w in 0..a.q() {
                    if w == v {
                        continue;
                    }
                    let t = a.with_digit(s, k, w);
                    if a.digit(self.images[t as usize], j) != out {
                        essential[k as usize] = true;
                        break;
                    }
                }
            }
        }
        (1..=a.n()).filter(|&k| essential[k as usize]).collect()
    }

    /// Largest essential-variable count over all coordinates.
    pub fn arity(&self) -> u32 {
        (1..=self.alphabet.n())
            .map(|j| self.essential_variables(j).len() as u32)
            .max()
            .unwrap_or(0)
    }

    /// Membership in the group U of unary permutations (each output register
    /// reads one input register through a value permutation, and the wiring
    /// of registers is itself a permutation).
    pub fn is_unary(&self) -> bool {
        let n = self.alphabet.n();
        let mut wiring = Vec::with_capacity(n as usize);
        for j in 1..=n {
            let ess = self.essential_variables(j);
            match ess.as_slice() {
                [k] => wiring.push(*k),
                // A bijection cannot have a constant coordinate, so an empty
                // set is impossible; more than one essential variable means
                // not unary.
                _ => return false,
            }
        }
        let mut seen = vec![false; n as usize + 1];
        for &k in &wiring {
            if seen[k as usize] {
                return false;
            }
            seen[k as usize] = true;
        }
        true
    }
}

/// `h⁻¹ ∘ g ∘ h`: apply `h`, then `g`, then undo `h`.
pub fn conjugate(h: &Permutation, g: &Permutation) -> Result<Permutation> {
    h.inverse().compose(g)?.compose(h)
}

impl CycleDecomposition {
    /// Cycle notation such as `(1,2,3)(6,7)`, with each state rendered
    /// through `label` (e.g. canonical index, 1-based index, or a Gray rank).
    pub fn render(&self, label: impl Fn(u32) -> String) -> String {
        if self.cycles.is_empty() {
            return "id".to_string();
        }
        let mut out = String::new();
        for cycle in &self.cycles {
            out.push('(');
            for (k, &s) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push_str(&label(s));
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation over 0-based canonical state indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.cycle_decomposition().render(|s| s.to_string())
        )
    }
}
