//! Whole-group analysis: breadth-first distance tables over an instruction
//! set, internal computability of permutation groups, fastness of elements
//! relative to nested instruction sets, and the groups generated by
//! instructions of bounded arity.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::group::{build_chain, identify_group, GroupIdentity};
use crate::instr::{enumerate_instructions, Instruction, Program};
use crate::perm::{conjugate, Permutation};
use crate::synth::{optimal_program, optimal_program_with_set};

/// Default bound on how many group elements a distance table may record.
pub const DEFAULT_TABLE_CAP: u64 = 10_000_000;

/// Distances are stored as bytes; this value marks unreached permutations.
const UNSEEN: u8 = u8::MAX;
/// Largest distance a byte-backed table can hold (255 is the sentinel).
const MAX_DISTANCE: u32 = u8::MAX as u32 - 1;

const FACT: [usize; 10] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880];

/// Lexicographic rank of a permutation of {0, …, m−1} given as its image
/// array; m is at most 9 so a 16-bit mask tracks the values already placed.
fn lex_rank(images: &[u32]) -> usize {
    let m = images.len();
    let mut seen: u16 = 0;
    let mut rank = 0usize;
    for (i, &p) in images.iter().enumerate() {
        let below = (seen & ((1u16 << p) - 1)).count_ones() as usize;
        rank += (p as usize - below) * FACT[m - 1 - i];
        seen |= 1u16 << p;
    }
    rank
}

/// Inverse of `lex_rank`: the image array of the permutation with the given
/// lexicographic rank among permutations of {0, …, m−1}.
fn lex_unrank(m: usize, mut rank: usize) -> Vec<u32> {
    let mut avail: Vec<u32> = (0..m as u32).collect();
    let mut images = Vec::with_capacity(m);
    for i in 0..m {
        let f = FACT[m - 1 - i];
        images.push(avail.remove(rank / f));
        rank %= f;
    }
    images
}

/// Distance storage: a flat byte array indexed by lexicographic rank while
/// the degree allows it, a hash map keyed by image arrays beyond that.
enum Distances {
    Dense(Vec<u8>),
    Sparse(HashMap<Vec<u32>, u8>),
}

impl Distances {
    fn get(&self, images: &[u32]) -> Option<u8> {
        match self {
            Distances::Dense(v) => {
                let d = v[lex_rank(images)];
                (d != UNSEEN).then_some(d)
            }
            Distances::Sparse(m) => m.get(images).copied(),
        }
    }

    /// Records `d` for `images` if unseen; returns whether it was new.
    fn insert(&mut self, images: &[u32], d: u8) -> bool {
        match self {
            Distances::Dense(v) => {
                let r = lex_rank(images);
                if v[r] == UNSEEN {
                    v[r] = d;
                    true
                } else {
                    false
                }
            }
            Distances::Sparse(m) => {
                if m.contains_key(images) {
                    false
                } else {
                    m.insert(images.to_vec(), d);
                    true
                }
            }
        }
    }
}

/// For every element of the group generated by an instruction set, the
/// length of a shortest program over that set, found breadth-first from
/// the identity.
pub struct ComplexityTable {
    alphabet: Alphabet,
    full_set: bool,
    set: Vec<Instruction>,
    distances: Distances,
    histogram: Vec<u64>,
    sum: u64,
    count: u64,
}

impl ComplexityTable {
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Whether the generating set was the full instruction set.
    pub fn full_set(&self) -> bool {
        self.full_set
    }

    /// The generating instructions, in the order used during the search.
    pub fn instructions(&self) -> &[Instruction] {
        &self.set
    }

    /// Shortest program length for `f`, or None outside the generated group.
    pub fn distance(&self, f: &Permutation) -> Option<u32> {
        if f.alphabet() != self.alphabet {
            return None;
        }
        self.distances.get(f.images()).map(u32::from)
    }

    /// Number of elements of the generated group.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Largest distance, i.e. the diameter of the directed Cayley graph of
    /// the generated group over the instruction set.
    pub fn diameter(&self) -> u32 {
        self.histogram.len() as u32 - 1
    }

    /// Entry `d` counts the group elements at distance exactly `d`.
    pub fn histogram(&self) -> &[u64] {
        &self.histogram
    }

    /// Exact mean distance as a reduced fraction (numerator, denominator).
    pub fn mean(&self) -> (u64, u64) {
        let g = self.sum.gcd(&self.count);
        (self.sum / g, self.count / g)
    }

    /// Visits every recorded element as (image array, distance), in an
    /// unspecified order.
    pub fn for_each(&self, mut visit: impl FnMut(&[u32], u32)) {
        match &self.distances {
            Distances::Dense(v) => {
                let m = self.alphabet.size() as usize;
                for (rank, &d) in v.iter().enumerate() {
                    if d != UNSEEN {
                        visit(&lex_unrank(m, rank), u32::from(d));
                    }
                }
            }
            Distances::Sparse(map) => {
                for (images, &d) in map {
                    visit(images, u32::from(d));
                }
            }
        }
    }
}

impl std::fmt::Debug for ComplexityTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ComplexityTable")
            .field("alphabet", &self.alphabet)
            .field("full_set", &self.full_set)
            .field("instructions", &self.set.len())
            .field("count", &self.count)
            .field("histogram", &self.histogram)
            .finish()
    }
}

/// Explores the group generated by `set` breadth-first from the identity,
/// recording the shortest program length of every element. `cap` bounds the
/// number of recorded elements (default 10⁷).
pub fn complexity_table(
    alphabet: Alphabet,
    set: &[Instruction],
    cap: Option<u64>,
) -> Result<ComplexityTable> {
    complexity_table_inner(alphabet, set.to_vec(), false, cap)
}

/// Distance table over the full instruction set. The state space is limited
/// to nine states so the whole symmetric group stays enumerable.
pub fn full_complexity_table(alphabet: Alphabet, cap: Option<u64>) -> Result<ComplexityTable> {
    if alphabet.size() > 9 {
        return Err(Error::TooLarge {
            what: "state space for a full-set distance table".to_string(),
            count: alphabet.size().to_string(),
            cap: 9,
        });
    }
    let set = enumerate_instructions(alphabet, None)?;
    complexity_table_inner(alphabet, set, true, cap)
}

fn complexity_table_inner(
    alphabet: Alphabet,
    set: Vec<Instruction>,
    full_set: bool,
    cap: Option<u64>,
) -> Result<ComplexityTable> {
    let cap = cap.unwrap_or(DEFAULT_TABLE_CAP);
    for g in &set {
        if g.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "instruction over {} in a distance table over {}",
                g.alphabet(),
                alphabet
            )));
        }
    }
    let degree = alphabet.size() as usize;
    let mut distances = if degree <= 9 {
        Distances::Dense(vec![UNSEEN; FACT[degree]])
    } else {
        Distances::Sparse(HashMap::new())
    };
    let gen_images: Vec<Vec<u32>> = set
        .iter()
        .map(|g| g.to_permutation().images().to_vec())
        .collect();

    let identity: Vec<u32> = (0..alphabet.size()).collect();
    distances.insert(&identity, 0);
    let mut histogram: Vec<u64> = vec![1];
    let mut sum = 0u64;
    let mut count = 1u64;
    let mut layer = vec![identity];
    let mut scratch = vec![0u32; degree];
    let mut d: u32 = 0;

    while !layer.is_empty() {
        d += 1;
        let mut next: Vec<Vec<u32>> = Vec::new();
        for f in &layer {
            for g in &gen_images {
                for s in 0..degree {
                    scratch[s] = g[f[s] as usize];
                }
                if d > MAX_DISTANCE {
                    // The byte store is full; any further element is fatal.
                    if distances.get(&scratch).is_none() {
                        return Err(Error::TooLarge {
                            what: "distance in a byte-backed table".to_string(),
                            count: format!("more than {MAX_DISTANCE}"),
                            cap: MAX_DISTANCE as u64,
                        });
                    }
                } else if distances.insert(&scratch, d as u8) {
                    count += 1;
                    if count > cap {
                        return Err(Error::TooLarge {
                            what: "group explored by the distance table".to_string(),
                            count: format!("more than {cap}"),
                            cap,
                        });
                    }
                    sum += u64::from(d);
                    next.push(scratch.clone());
                }
            }
        }
        if !next.is_empty() {
            histogram.push(next.len() as u64);
        }
        layer = next;
    }

    Ok(ComplexityTable {
        alphabet,
        full_set,
        set,
        distances,
        histogram,
        sum,
        count,
    })
}

/// Outcome of an internal-computability check: a group is internally
/// computable when the instructions it contains already generate it.
#[derive(Clone, Debug)]
pub struct InternalReport {
    pub group_order: BigUint,
    pub closure_order: BigUint,
    /// The group elements that are instructions, identity included.
    pub members: Vec<Instruction>,
    pub computable: bool,
}

/// Decides whether the group generated by `gens` is internally computable:
/// lists its elements (at most `cap`, default 10⁷), keeps those that are
/// instructions, and compares the group they generate with the whole group.
pub fn internal_computability(
    alphabet: Alphabet,
    gens: &[Permutation],
    cap: Option<u64>,
) -> Result<InternalReport> {
    let cap = cap.unwrap_or(DEFAULT_TABLE_CAP);
    let chain = build_chain(alphabet, gens)?;
    let elems = chain.elements(cap)?;
    let members: Vec<Instruction> = elems
        .iter()
        .filter_map(Instruction::from_permutation)
        .collect();
    let member_perms: Vec<Permutation> = members.iter().map(Instruction::to_permutation).collect();
    let closure = build_chain(alphabet, &member_perms)?;
    let group_order = chain.order();
    let closure_order = closure.order();
    let computable = group_order == closure_order;
    Ok(InternalReport {
        group_order,
        closure_order,
        members,
        computable,
    })
}

/// Shortest-program lengths of one permutation over two nested instruction
/// sets; the element is fast relative to the pair when the lengths agree.
#[derive(Clone, Debug)]
pub struct FastnessReport {
    pub g: Permutation,
    pub restricted_size: usize,
    pub larger_size: usize,
    pub restricted_length: u32,
    pub larger_length: u32,
    pub fast: bool,
}

/// Compares the shortest program for `g` over `restricted` with the one
/// over its superset `larger`. Errors with `NotComputable` when `g` is not
/// a product of members of `restricted`.
pub fn fastness(
    g: &Permutation,
    restricted: &[Instruction],
    larger: &[Instruction],
    cap: Option<u64>,
) -> Result<FastnessReport> {
    let lookup: HashSet<&Instruction> = larger.iter().collect();
    if let Some(missing) = restricted.iter().find(|i| !lookup.contains(*i)) {
        return Err(Error::Precondition(format!(
            "the restricted set must be contained in the larger one; \
             an instruction on register {} is not",
            missing.register()
        )));
    }
    let restricted_length = optimal_program_with_set(g, restricted, cap)?.len() as u32;
    let larger_length = optimal_program_with_set(g, larger, cap)?.len() as u32;
    Ok(FastnessReport {
        g: g.clone(),
        restricted_size: restricted.len(),
        larger_size: larger.len(),
        restricted_length,
        larger_length,
        fast: restricted_length == larger_length,
    })
}

/// Conjugating by a unary permutation maps instructions to instructions, so
/// it preserves shortest program lengths over the full instruction set.
/// Returns whether the lengths of `g` and of h⁻¹∘g∘h agree; `h` must be
/// unary.
pub fn conjugacy_complexity_check(g: &Permutation, h: &Permutation) -> Result<bool> {
    if !h.is_unary() {
        return Err(Error::Precondition(
            "conjugation preserves instructions only for unary permutations".to_string(),
        ));
    }
    let twisted = conjugate(h, g)?;
    let direct = optimal_program(g)?.len();
    let conjugated = optimal_program(&twisted)?.len();
    Ok(direct == conjugated)
}

fn tau_swap(v: u32, _q: u32) -> u32 {
    match v {
        0 => 1,
        1 => 0,
        other => other,
    }
}

fn tau_cycle(v: u32, q: u32) -> u32 {
    (v + 1) % q
}

/// Controlled instructions of arity at most `l`: each applies either a swap
/// of the values 0, 1 or the full value cycle to one register, conditioned
/// on an exact assignment of l−1 other registers (both maps coincide for a
/// binary alphabet). This compact set generates the same group as the set
/// of all instructions of arity at most l.
pub fn lary_generators(alphabet: Alphabet, l: u32) -> Result<Vec<Instruction>> {
    let n = alphabet.n();
    let q = alphabet.q();
    if l < 2 || l > n {
        return Err(Error::Precondition(format!(
            "arity bound must be between 2 and {n}, got {l}"
        )));
    }
    let controls = (l - 1) as usize;
    let taus: &[fn(u32, u32) -> u32] = if q == 2 {
        &[tau_cycle]
    } else {
        &[tau_swap, tau_cycle]
    };
    let mut out = Vec::new();
    for j in 1..=n {
        let others: Vec<u32> = (1..=n).filter(|&k| k != j).collect();
        for subset in others.into_iter().combinations(controls) {
            for idx in 0..q.pow(controls as u32) {
                let mut alpha = Vec::with_capacity(controls);
                let mut rem = idx;
                for _ in 0..controls {
                    alpha.push(rem % q);
                    rem /= q;
                }
                for tau in taus {
                    let table: Vec<u32> = alphabet
                        .states()
                        .map(|s| {
                            let hit = subset
                                .iter()
                                .zip(&alpha)
                                .all(|(&k, &v)| alphabet.digit(s, k) == v);
                            let dj = alphabet.digit(s, j);
                            if hit {
                                tau(dj, q)
                            } else {
                                dj
                            }
                        })
                        .collect();
                    out.push(Instruction::new(alphabet, j, table)?);
                }
            }
        }
    }
    Ok(out)
}

/// Identifies the group generated by all instructions of arity at most `l`,
/// computed from the compact controlled generating set.
pub fn lary_group(alphabet: Alphabet, l: u32) -> Result<GroupIdentity> {
    let gens = lary_generators(alphabet, l)?;
    let perms: Vec<Permutation> = gens.iter().map(Instruction::to_permutation).collect();
    let chain = build_chain(alphabet, &perms)?;
    Ok(identify_group(&chain))
}

/// A two-step program of instructions with arity at most `l` whose composite
/// has a coordinate depending on l+1 registers — witnessing that these
/// instruction sets are not closed under composition for 2 ≤ l ≤ n−1.
pub fn lary_closure_counterexample(alphabet: Alphabet, l: u32) -> Result<Program> {
    let n = alphabet.n();
    let q = alphabet.q();
    if l < 1 || l > n {
        return Err(Error::Precondition(format!(
            "arity bound must be between 1 and {n}, got {l}"
        )));
    }
    if l == 1 || l == n {
        return Err(Error::Degenerate(format!(
            "instructions of arity at most {l} are closed under composition \
             over {n} registers; no counterexample exists"
        )));
    }
    // After y2 ← y2 + y_{l+1}, the second register carries register l+1, so
    // y1 ← y1 + y2 + … + yl leaves the first coordinate depending on l+1
    // registers even though both steps have arity at most l.
    let first: Vec<u32> = alphabet
        .states()
        .map(|s| (alphabet.digit(s, 2) + alphabet.digit(s, l + 1)) % q)
        .collect();
    let second: Vec<u32> = alphabet
        .states()
        .map(|s| (1..=l).map(|i| alphabet.digit(s, i)).sum::<u32>() % q)
        .collect();
    let program = Program::new(
        alphabet,
        vec![
            Instruction::new(alphabet, 2, first)?,
            Instruction::new(alphabet, 1, second)?,
        ],
    )?;
    debug_assert!(program
        .steps()
        .iter()
        .all(|i| i.to_permutation().arity() <= l));
    let composite = program.to_permutation();
    let arity = composite.essential_variables(1).len() as u32;
    if arity != l + 1 {
        return Err(Error::ConstructionInvalid(format!(
            "expected the composite's first coordinate to depend on {} registers, found {arity}",
            l + 1
        )));
    }
    Ok(program)
}
