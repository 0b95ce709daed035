//! Reflected mixed-radix Gray codes on A^n and the Coxeter instruction set.
//!
//! The reflected (q,n)-Gray code lists all q^n states so that consecutive
//! states differ in exactly one register; register n varies fastest, and each
//! block of lower registers is traversed forwards or backwards according to
//! the parity of the digit above it. Adjacent transpositions of this ordering
//! are then single-register updates — a path of q^n−1 instructions that
//! generates Sym(A^n).

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::instr::Instruction;
use crate::perm::Permutation;

/// State indices in reflected Gray order; entry `r` is the state with Gray
/// rank `r` (0-based). Human-readable listings label states 1-based.
pub fn gray_sequence(a: Alphabet) -> Vec<u32> {
    (0..a.size())
        .map(|rank| {
            let mut rem = rank;
            let mut s = 0u32;
            for j in 1..=a.n() {
                let block = a.stride(j);
                let d = rem / block;
                rem %= block;
                // Odd digits flip the traversal direction of everything below.
                if d % 2 == 1 {
                    rem = block - 1 - rem;
                }
                s += d * block;
            }
            s
        })
        .collect()
}

/// Gray rank of each state: the inverse of [`gray_sequence`].
pub fn gray_rank(a: Alphabet) -> Vec<u32> {
    let seq = gray_sequence(a);
    let mut rank = vec![0u32; seq.len()];
    for (r, &s) in seq.iter().enumerate() {
        rank[s as usize] = r as u32;
    }
    rank
}

/// The adjacent transpositions of the Gray order: instruction `r` swaps the
/// states of Gray ranks `r` and `r+1`. Exactly q^n−1 instructions; together
/// they generate Sym(A^n), and no proper subset does.
pub fn coxeter_instructions(a: Alphabet) -> Result<Vec<Instruction>> {
    let seq = gray_sequence(a);
    let mut out = Vec::with_capacity(seq.len() - 1);
    for w in seq.windows(2) {
        let t = Permutation::from_cycles(a, &[vec![w[0], w[1]]])?;
        let instr = Instruction::from_permutation(&t).expect(
            "consecutive Gray states differ in one register, so their transposition is an instruction",
        );
        out.push(instr);
    }
    Ok(out)
}
