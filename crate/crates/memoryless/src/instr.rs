use itertools::Itertools;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default ceiling for full instruction-set enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A memoryless instruction: an update of a single register `j` that leaves
/// every other register unchanged. `table[s]` is the new value of register
/// `j` when the machine is in state `s`; for the whole map to be a bijection,
/// the table must restrict to a bijection of `{0,…,q−1}` on every fiber
/// (fixed values of the other registers).
///
/// The identity is an instruction by convention; its canonical form uses
/// register 1 with the projection table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Instruction {
    alphabet: Alphabet,
    register: u32,
    table: Vec<u32>,
}

impl Instruction {
    pub fn new(alphabet: Alphabet, register: u32, table: Vec<u32>) -> Result<Instruction> {
        if register < 1 || register > alphabet.n() {
            return Err(Error::Precondition(format!(
                "register {register} out of range 1..={}",
                alphabet.n()
            )));
        }
        if table.len() != alphabet.size() as usize {
            return Err(Error::Precondition(format!(
                "table has {} entries, state space has {}",
                table.len(),
                alphabet.size()
            )));
        }
        let q = alphabet.q();
        for (s, &v) in table.iter().enumerate() {
            if v >= q {
                return Err(Error::NotBijective(format!(
                    "table value {v} at state {s} is not below q = {q}"
                )));
            }
        }
        // Every fiber must be hit bijectively: walk states with the register
        // at 0 and check the q values along the fiber are distinct.
        let mut seen = vec![false; q as usize];
        for s in alphabet.states() {
            if alphabet.digit(s, register) != 0 {
                continue;
            }
            seen.fill(false);
            for v in 0..q {
                let t = alphabet.with_digit(s, register, v);
                let out = table[t as usize];
                if seen[out as usize] {
                    return Err(Error::NotBijective(format!(
                        "register {register} repeats value {out} on the fiber of state {s}"
                    )));
                }
                seen[out as usize] = true;
            }
        }
        Ok(Instruction {
            alphabet,
            register,
            table,
        })
    }

    /// The identity instruction (canonical form: register 1, projection table).
    pub fn identity(alphabet: Alphabet) -> Instruction {
        let table = alphabet.states().map(|s| alphabet.digit(s, 1)).collect();
        Instruction {
            alphabet,
            register: 1,
            table,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The register this instruction updates (1-based).
    pub fn register(&self) -> u32 {
        self.register
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.alphabet
            .states()
            .all(|s| self.table[s as usize] == self.alphabet.digit(s, self.register))
    }

    pub fn apply(&self, s: u32) -> u32 {
        self.alphabet
            .with_digit(s, self.register, self.table[s as usize])
    }

    pub fn to_permutation(&self) -> Permutation {
        let images = self.alphabet.states().map(|s| self.apply(s)).collect();
        Permutation::from_images(self.alphabet, images)
            .expect("a valid instruction induces a bijection")
    }

    /// Instruction form of a permutation, present iff at most one register is
    /// updated. The identity yields its canonical instruction form.
    pub fn from_permutation(f: &Permutation) -> Option<Instruction> {
        let updated = f.updated_registers();
        match updated.as_slice() {
            [] => Some(Instruction::identity(f.alphabet())),
            [j] => Some(Instruction {
                alphabet: f.alphabet(),
                register: *j,
                table: f.coordinate_function(*j),
            }),
            _ => None,
        }
    }

    pub fn inverse(&self) -> Instruction {
        let a = self.alphabet;
        let mut table = vec![0u32; a.size() as usize];
        for s in a.states() {
            // s ↦ t with register j set to table[s]; the inverse sends t back.
            let t = self.apply(s);
            table[t as usize] = a.digit(s, self.register);
        }
        Instruction {
            alphabet: a,
            register: self.register,
            table,
        }
    }

    /// Parity of the induced permutation of A^n: the product of the signs of
    /// the per-fiber value permutations.
    pub fn sign(&self) -> i8 {
        let a = self.alphabet;
        let q = a.q();
        let mut sign = 1i8;
        for s in a.states() {
            if a.digit(s, self.register) != 0 {
                continue;
            }
            let fiber: Vec<u32> = (0..q)
                .map(|v| self.table[a.with_digit(s, self.register, v) as usize])
                .collect();
            let mut seen = vec![false; q as usize];
            for start in 0..q as usize {
                if seen[start] {
                    continue;
                }
                let mut len = 0u32;
                let mut cur = start;
                while !seen[cur] {
                    seen[cur] = true;
                    len += 1;
                    cur = fiber[cur] as usize;
                }
                if len.is_multiple_of(2) {
                    sign = -sign;
                }
            }
        }
        sign
    }
}

/// Number of non-identity instructions, `n·((q!)^(q^(n−1)) − 1)`, or `None`
/// when the count overflows.
pub fn instruction_count(alphabet: Alphabet) -> Option<u128> {
    let q = alphabet.q() as u128;
    let mut qfact = 1u128;
    for k in 2..=q {
        qfact = qfact.checked_mul(k)?;
    }
    let fibers = alphabet.size() / alphabet.q();
    let mut tables = 1u128;
    for _ in 0..fibers {
        tables = tables.checked_mul(qfact)?;
    }
    (tables - 1).checked_mul(alphabet.n() as u128)
}

/// Every non-identity instruction, grouped by register (ascending) and, within
/// a register, ordered by lexicographic comparison of tables. Refuses to
/// materialize more than `cap` instructions (default 10⁷).
pub fn enumerate_instructions(alphabet: Alphabet, cap: Option<u64>) -> Result<Vec<Instruction>> {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let count = instruction_count(alphabet);
    match count {
        Some(c) if c <= cap as u128 => {}
        _ => {
            return Err(Error::TooLarge {
                what: "instruction count".to_string(),
                count: count.map_or_else(
                    || "an astronomically large number".to_string(),
                    |c| c.to_string(),
                ),
                cap,
            });
        }
    }

    let a = alphabet;
    let q = a.q();
    let value_perms: Vec<Vec<u32>> = (0..q).permutations(q as usize).collect();

    let mut out = Vec::with_capacity(count.unwrap() as usize);
    for register in 1..=a.n() {
        // Fiber rank of each state: position of its fiber among base states
        // (register set to 0) in ascending index order.
        let mut fiber_rank = vec![0usize; a.size() as usize];
        let mut rank = 0usize;
        for s in a.states() {
            if a.digit(s, register) == 0 {
                fiber_rank[s as usize] = rank;
                rank += 1;
            }
        }
        for s in a.states() {
            let base = a.with_digit(s, register, 0);
            fiber_rank[s as usize] = fiber_rank[base as usize];
        }
        let fibers = rank;

        // Odometer over per-fiber value permutations.
        let mut choice = vec![0usize; fibers];
        let mut tables: Vec<Vec<u32>> = Vec::new();
        loop {
            if choice.iter().any(|&c| c != 0) {
                let table: Vec<u32> = a
                    .states()
                    .map(|s| {
                        value_perms[choice[fiber_rank[s as usize]]][a.digit(s, register) as usize]
                    })
                    .collect();
                tables.push(table);
            }
            let mut i = fibers;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < value_perms.len() {
                    break;
                }
                choice[i] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
        tables.sort_unstable();
        out.extend(tables.into_iter().map(|table| Instruction {
            alphabet: a,
            register,
            table,
        }));
    }
    Ok(out)
}

/// An ordered list of instructions over one alphabet; step 1 executes first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Program {
    alphabet: Alphabet,
    steps: Vec<Instruction>,
}

impl Program {
    pub fn new(alphabet: Alphabet, steps: Vec<Instruction>) -> Result<Program> {
        for (k, step) in steps.iter().enumerate() {
            if step.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch(format!(
                    "step {} is over {}, program is over {}",
                    k + 1,
                    step.alphabet(),
                    alphabet
                )));
            }
        }
        Ok(Program { alphabet, steps })
    }

    pub fn empty(alphabet: Alphabet) -> Program {
        Program {
            alphabet,
            steps: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn steps(&self) -> &[Instruction] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Run the program on a state.
    pub fn evaluate(&self, s: u32) -> u32 {
        self.steps.iter().fold(s, |cur, step| step.apply(cur))
    }

    /// The permutation the program computes (steps composed in program order).
    pub fn to_permutation(&self) -> Permutation {
        let images = self.alphabet.states().map(|s| self.evaluate(s)).collect();
        Permutation::from_images(self.alphabet, images)
            .expect("instruction steps compose to a bijection")
    }
}
