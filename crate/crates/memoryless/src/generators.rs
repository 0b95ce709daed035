//! Minimal generating sets: n instructions, one per register, generating the
//! full symmetric or alternating group of A^n.
//!
//! Each construction is a case formula assigning every state a new value for
//! one register. The formulas are intricate, so they run through an audit:
//! every state must match exactly one explicit branch (or fall to a declared
//! otherwise-branch), and the resulting table must pass the instruction
//! fiber-bijectivity check. Any violation aborts with `ConstructionInvalid`
//! rather than producing a silently wrong generator.
//!
//! The alternating constructions dispatch on q mod 6 because the designs
//! track cycle lengths mod 3 alongside parity; q = 4 gets its own variant.
//! For q = 2 the symmetric construction works over Gray-code order: the
//! register-n generator swaps the first two words of the Gray sequence, and
//! the generator for register r < n flips register r everywhere except on
//! the fiber of the first Gray transition that changes register r.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::gray::gray_sequence;
use crate::group::{build_chain, identify_group, GroupIdentity, GroupTag};
use crate::instr::Instruction;
use crate::perm::Permutation;

/// A family of n instructions, one per register, intended to generate the
/// symmetric or alternating group.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    alphabet: Alphabet,
    target: GroupTag,
    /// `pis[r-1]` updates register r.
    pis: Vec<Instruction>,
}

impl GeneratorFamily {
    /// Assemble a family from parts, e.g. to probe a deliberately broken
    /// variant with [`verify_family`]. Only alphabet consistency and the
    /// target tag are enforced here; everything else is the verifier's job.
    pub fn new(
        alphabet: Alphabet,
        target: GroupTag,
        pis: Vec<Instruction>,
    ) -> Result<GeneratorFamily> {
        if !matches!(target, GroupTag::Symmetric | GroupTag::Alternating) {
            return Err(Error::Precondition(
                "generator families target the symmetric or alternating group".to_string(),
            ));
        }
        for pi in &pis {
            if pi.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch(format!(
                    "family over {}, instruction over {}",
                    alphabet,
                    pi.alphabet()
                )));
            }
        }
        Ok(GeneratorFamily {
            alphabet,
            target,
            pis,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn target(&self) -> GroupTag {
        self.target
    }

    pub fn pis(&self) -> &[Instruction] {
        &self.pis
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.pis.iter().map(Instruction::to_permutation).collect()
    }
}

/// Outcome of checking a family's claims; failures are recorded, not raised.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    /// Per slot r−1: the instruction is declared on register r and updates
    /// exactly that register (the identity instruction updates none).
    pub instruction_on_register: Vec<bool>,
    /// Exactly one generator actually updates each register 1..=n.
    pub one_per_register: bool,
    /// Signs of the generators, in slot order.
    pub signs: Vec<i8>,
    /// Alternating targets need every sign +1; symmetric targets need at
    /// least one −1 (an all-even family generates at most the alternating
    /// group).
    pub parity_ok: bool,
    /// What the generated group actually is.
    pub identity: GroupIdentity,
    /// The generated group matches the target tag.
    pub group_ok: bool,
    /// Whether the generated group is transitive (diagnostic detail).
    pub transitive: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.instruction_on_register.iter().all(|&b| b)
            && self.one_per_register
            && self.parity_ok
            && self.group_ok
    }
}

/// Evaluate an audited case formula at one state: exactly one explicit
/// branch may hold; with none, the declared otherwise-value applies.
///
/// Values are carried as i64 so branch expressions like `1 - v` can be
/// written down for every state and only the selected one is range-checked.
fn pick(a: Alphabet, s: u32, branches: &[(bool, i64)], otherwise: Option<i64>) -> Result<u32> {
    let mut hit: Option<i64> = None;
    for &(cond, value) in branches {
        if !cond {
            continue;
        }
        if hit.is_some() {
            return Err(Error::ConstructionInvalid(format!(
                "case branches overlap at state {}",
                a.state_of(s)
            )));
        }
        hit = Some(value);
    }
    let value = match (hit, otherwise) {
        (Some(v), _) => v,
        (None, Some(v)) => v,
        (None, None) => {
            return Err(Error::ConstructionInvalid(format!(
                "no case branch matches state {}",
                a.state_of(s)
            )))
        }
    };
    u32::try_from(value).map_err(|_| {
        Error::ConstructionInvalid(format!(
            "case formula assigns {value} at state {}",
            a.state_of(s)
        ))
    })
}

/// True when every register other than `r` holds `val` in state `s`.
fn others_all(a: Alphabet, s: u32, r: u32, val: u32) -> bool {
    (1..=a.n())
        .filter(|&j| j != r)
        .all(|j| a.digit(s, j) == val)
}

/// Build the instruction on register `r` whose table comes from an audited
/// case formula.
fn instruction_from_cases<F>(a: Alphabet, r: u32, formula: F) -> Result<Instruction>
where
    F: Fn(u32, i64) -> (Vec<(bool, i64)>, Option<i64>),
{
    let mut table = Vec::with_capacity(a.size() as usize);
    for s in a.states() {
        let v = a.digit(s, r) as i64;
        let (branches, otherwise) = formula(s, v);
        table.push(pick(a, s, &branches, otherwise)?);
    }
    Instruction::new(a, r, table).map_err(|e| {
        Error::ConstructionInvalid(format!("register-{r} table is not an instruction: {e}"))
    })
}

/// The generator on register n for the symmetric constructions with q ≥ 3:
/// on the fiber where all other registers are 0, swap 0 ↔ 1 and fix the
/// rest; elsewhere, for odd q a full q-cycle, for even q the (q−1)-cycle
/// 1 → 2 → … → q−1 → 1 fixing 0.
fn sym_register_n(a: Alphabet) -> Result<Instruction> {
    let q = a.q() as i64;
    let n = a.n();
    instruction_from_cases(a, n, |s, v| {
        let zero = others_all(a, s, n, 0);
        if q % 2 == 1 {
            (
                vec![
                    (zero && v <= 1, 1 - v),
                    (zero && v > 1, v),
                    (!zero && v == q - 1, 0),
                ],
                Some(v + 1),
            )
        } else {
            (
                vec![
                    (zero && v <= 1, 1 - v),
                    (zero && v > 1, v),
                    (!zero && v == 0, v),
                    (!zero && v == q - 1, 1),
                ],
                Some(v + 1),
            )
        }
    })
}

/// The generator on register r < n for the odd-q symmetric and most
/// alternating constructions: a full q-cycle on every fiber except the
/// all-(q−1) fiber, which runs backwards.
fn cycle_with_reversed_top(a: Alphabet, r: u32) -> Result<Instruction> {
    let top_val = a.q() - 1;
    let q = a.q() as i64;
    instruction_from_cases(a, r, |s, v| {
        let top = others_all(a, s, r, top_val);
        (
            vec![
                (!top && v == q - 1, 0),
                (!top && v != q - 1, v + 1),
                (top && v == 0, q - 1),
            ],
            Some(if top { v - 1 } else { v }),
        )
    })
}

/// The generator on register r < n for the even-q symmetric construction:
/// a full q-cycle on every fiber except the all-(q−1) fiber, which runs the
/// (q−1)-cycle 0 → 1 → … → q−2 → 0 and fixes q−1. Five explicit branches
/// and no otherwise-branch, so the audit also proves the cases total.
fn even_sym_register(a: Alphabet, r: u32) -> Result<Instruction> {
    let top_val = a.q() - 1;
    let q = a.q() as i64;
    instruction_from_cases(a, r, |s, v| {
        let top = others_all(a, s, r, top_val);
        (
            vec![
                (!top && v != q - 1, v + 1),
                (top && v < q - 2, v + 1),
                (!top && v == q - 1, 0),
                (top && v == q - 2, 0),
                (top && v == q - 1, v),
            ],
            None,
        )
    })
}

/// The generator on register r < n shared by the q ≡ 0, 2 (mod 6) and the
/// q ≡ 4 (mod 6), q > 4 alternating constructions: a full q-cycle off the
/// all-(q−1) fiber; on it, the (q−2)-cycle 0 → 1 → … → q−3 → 0 with q−2 and
/// q−1 fixed, keeping the permutation even.
fn alt_even_register(a: Alphabet, r: u32) -> Result<Instruction> {
    let top_val = a.q() - 1;
    let q = a.q() as i64;
    instruction_from_cases(a, r, |s, v| {
        let top = others_all(a, s, r, top_val);
        (
            vec![
                (!top && v == q - 1, 0),
                (!top && v != q - 1, v + 1),
                (top && v < q - 3, v + 1),
                (top && v == q - 3, 0),
            ],
            Some(v),
        )
    })
}

/// Generators of Sym(A^n), one instruction per register.
///
/// No such family exists for q = n = 2 (instruction cycles there are all
/// 2-cycles and the generated group is too small), nor for a single
/// register unless q = 2 (one instruction generates a cyclic group).
pub fn sym_generators(a: Alphabet) -> Result<GeneratorFamily> {
    let (q, n) = (a.q(), a.n());
    if q == 2 && n == 2 {
        return Err(Error::Unsupported(
            "Sym({0,1}²) is not generated by 2 instructions".to_string(),
        ));
    }
    if n == 1 {
        if q > 2 {
            return Err(Error::Unsupported(
                "one instruction generates only a cyclic group".to_string(),
            ));
        }
        let flip = Instruction::new(a, 1, vec![1, 0])?;
        return GeneratorFamily::new(a, GroupTag::Symmetric, vec![flip]);
    }

    let mut pis = Vec::with_capacity(n as usize);
    if q == 2 {
        let gray = gray_sequence(a);
        for r in 1..n {
            // Flip register r everywhere except on the fiber of the first
            // Gray transition that changes register r.
            let t = gray
                .windows(2)
                .find(|w| a.digit(w[0], r) != a.digit(w[1], r))
                .expect("every register changes somewhere in a Gray cycle");
            let (keep_a, keep_b) = (t[0], t[1]);
            let table = a
                .states()
                .map(|s| {
                    if s == keep_a || s == keep_b {
                        a.digit(s, r)
                    } else {
                        1 - a.digit(s, r)
                    }
                })
                .collect();
            pis.push(Instruction::new(a, r, table)?);
        }
        // Swap the first two Gray words; they differ exactly in register n.
        let mut table: Vec<u32> = a.states().map(|s| a.digit(s, n)).collect();
        table[gray[0] as usize] = a.digit(gray[1], n);
        table[gray[1] as usize] = a.digit(gray[0], n);
        pis.push(Instruction::new(a, n, table)?);
    } else if q % 2 == 1 {
        for r in 1..n {
            pis.push(cycle_with_reversed_top(a, r)?);
        }
        pis.push(sym_register_n(a)?);
    } else {
        for r in 1..n {
            pis.push(even_sym_register(a, r)?);
        }
        pis.push(sym_register_n(a)?);
    }
    GeneratorFamily::new(a, GroupTag::Symmetric, pis)
}

/// Generators of Alt(A^n), one even instruction per register. Requires
/// q ≥ 3 (for q = 2 every instruction is odd... every instruction is a
/// product of 2-cycles and the even ones generate too little), and n ≥ 2
/// unless q = 3.
pub fn alt_generators(a: Alphabet) -> Result<GeneratorFamily> {
    let (q, n) = (a.q(), a.n());
    if q == 2 {
        return Err(Error::Unsupported(
            "the alternating construction needs q at least 3".to_string(),
        ));
    }
    if n == 1 {
        if q > 3 {
            return Err(Error::Unsupported(
                "one instruction generates only a cyclic group".to_string(),
            ));
        }
        let cyc = Instruction::new(a, 1, vec![1, 2, 0])?;
        return GeneratorFamily::new(a, GroupTag::Alternating, vec![cyc]);
    }

    let qi = q as i64;
    let mut pis = Vec::with_capacity(n as usize);
    // Registers 1..n−1 first, then the register-n generator that carries
    // the 3-cycle used to seed the group.
    for r in 1..n {
        let pi = match q % 6 {
            1 | 3 | 5 => cycle_with_reversed_top(a, r)?,
            0 | 2 => alt_even_register(a, r)?,
            4 if q == 4 => instruction_from_cases(a, r, |s, v| {
                let top = others_all(a, s, r, 3);
                (
                    vec![
                        (!top && v == 3, 0),
                        (!top && v != 3, v + 1),
                        (top && v <= 1, 1 - v),
                    ],
                    Some(v),
                )
            })?,
            _ => alt_even_register(a, r)?,
        };
        pis.push(pi);
    }

    let pi_n = match q % 6 {
        1 | 5 => instruction_from_cases(a, n, |s, v| {
            let zero = others_all(a, s, n, 0);
            (
                vec![
                    (zero && v < 2, v + 1),
                    (zero && v == 2, 0),
                    (zero && v > 2, v),
                    (!zero && v == qi - 1, 0),
                ],
                Some(v + 1),
            )
        })?,
        3 if q == 3 && n == 2 => instruction_from_cases(a, n, |s, v| {
            // With a ternary alphabet and only two registers the generic
            // seed below degenerates to a single 3-cycle on the zero fiber,
            // and no even partner on the other register can complete it:
            // every such pair stalls in a group of order 81. Advancing the
            // register on every fiber except the all-2 one (two 3-cycles,
            // still even) is a minimal change that generates the
            // alternating group.
            let top = others_all(a, s, n, q - 1);
            (vec![(top, v), (!top && v == qi - 1, 0)], Some(v + 1))
        })?,
        3 => instruction_from_cases(a, n, |s, v| {
            let zero = others_all(a, s, n, 0);
            (
                vec![
                    (zero && v < 2, v + 1),
                    (zero && v == 2, 0),
                    (zero && v > 2, v),
                    (!zero && v <= 1, v),
                    (!zero && v == qi - 1, 2),
                ],
                Some(v + 1),
            )
        })?,
        0 | 2 => instruction_from_cases(a, n, |s, v| {
            let zero = others_all(a, s, n, 0);
            (
                vec![
                    (zero && v < 2, v + 1),
                    (zero && v == 2, 0),
                    (zero && v > 2, v),
                    (!zero && v == 0, v),
                    (!zero && v == qi - 1, 1),
                ],
                Some(v + 1),
            )
        })?,
        4 if q == 4 => instruction_from_cases(a, n, |s, v| {
            let zero = others_all(a, s, n, 0);
            (
                vec![
                    (zero && v < 2, v + 1),
                    (zero && v == 2, 0),
                    (zero && v == 3, v),
                ],
                // Off the zero fiber: the involution v ↦ 3 − v, a pair of
                // transpositions per fiber, keeping the permutation even.
                Some(3 - v),
            )
        })?,
        _ => instruction_from_cases(a, n, |s, v| {
            // q ≡ 4 (mod 6), q > 4: on the zero fiber a transposition (0 1)
            // and a 3-cycle (3 4 5) with everything else fixed; a full
            // q-cycle on every other fiber.
            let zero = others_all(a, s, n, 0);
            (
                vec![
                    (zero && v <= 1, 1 - v),
                    (zero && v == 2, v),
                    (zero && (v == 3 || v == 4), v + 1),
                    (zero && v == 5, 3),
                    (zero && v > 5, v),
                    (!zero && v == qi - 1, 0),
                ],
                Some(v + 1),
            )
        })?,
    };
    pis.push(pi_n);
    GeneratorFamily::new(a, GroupTag::Alternating, pis)
}

/// Check a family's claims: each slot holds an instruction on its register,
/// the registers are covered exactly once, the parities fit the target, and
/// the generated group (by stabilizer chain) is the target.
pub fn verify_family(fam: &GeneratorFamily) -> FamilyReport {
    let a = fam.alphabet;
    let n = a.n();
    let perms = fam.permutations();
    let instruction_on_register: Vec<bool> = fam
        .pis
        .iter()
        .zip(&perms)
        .enumerate()
        .map(|(k, (pi, p))| {
            pi.register() == k as u32 + 1 && p.updated_registers() == vec![k as u32 + 1]
        })
        .collect();
    let one_per_register = fam.pis.len() == n as usize
        && (1..=n).all(|r| {
            perms
                .iter()
                .filter(|p| p.updated_registers() == vec![r])
                .count()
                == 1
        });
    let signs: Vec<i8> = perms.iter().map(Permutation::sign).collect();
    let parity_ok = match fam.target {
        GroupTag::Alternating => signs.iter().all(|&s| s == 1),
        _ => signs.contains(&-1),
    };
    let chain = build_chain(a, &perms).expect("family permutations share the alphabet");
    let identity = identify_group(&chain);
    let group_ok = identity.tag == fam.target;
    let transitive = chain.is_transitive();
    FamilyReport {
        instruction_on_register,
        one_per_register,
        signs,
        parity_ok,
        identity,
        group_ok,
        transitive,
    }
}

/// The obstruction that dooms a one-instruction-per-register family
/// containing a unary member: if some generator updating register r is
/// unary (its new value depends on register r alone), then every generator
/// preserves the partition of states by coordinate r, so the family cannot
/// generate the full symmetric group. Returns the smallest such r.
pub fn unary_obstruction(gens: &[Instruction]) -> Option<u32> {
    let mut found: Option<u32> = None;
    for g in gens {
        let r = g.register();
        let unary = g.to_permutation().essential_variables(r).len() <= 1;
        if unary && found.is_none_or(|f| r < f) {
            found = Some(r);
        }
    }
    let r = found?;
    // The partition by coordinate r is preserved by construction: members
    // updating other registers leave coordinate r alone, and a unary member
    // on r rewrites it from itself. Audit anyway.
    for g in gens {
        let a = g.alphabet();
        let p = g.to_permutation();
        for v in 0..a.q() {
            let classes: std::collections::HashSet<u32> = a
                .states()
                .filter(|&s| a.digit(s, r) == v)
                .map(|s| a.digit(p.apply(s), r))
                .collect();
            assert!(
                classes.len() == 1,
                "a family with a unary member on register {r} must preserve coordinate {r}"
            );
        }
    }
    Some(r)
}
