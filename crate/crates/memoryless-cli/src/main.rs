//! Command-line front end. Every subcommand prints deterministic plain text:
//! machine-readable `key: value` lines (histograms as TSV) ending in a
//! `verdict:` token, except `synthesize`, `optimal`, `coxeter`, and `gray`,
//! whose whole output is a file format so it can be piped back in.
//!
//! Exit codes: 0 success, 1 domain error (one-line diagnostic on stderr) or
//! failed verdict, 2 usage error. The environment variable MEMORYLESS_CAP
//! overrides the default caps of enumerations, searches, and tables.

use std::fmt::Write as _;
use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use memoryless::text::{format_program, parse_permutation, parse_program};
use memoryless::{
    alt_generators, complexity_table, conjugacy_complexity_check, conjugate, coxeter_instructions,
    enumerate_instructions, fastness, full_complexity_table, gray_sequence, internal_computability,
    lary_generators, lary_group, optimal_program, optimal_program_with_set, sym_generators,
    synthesize, verify_family, Alphabet, CycleDecomposition, Instruction, Permutation, Program,
};

#[derive(Parser)]
#[command(
    name = "memoryless",
    version,
    about = "Computing in permutation groups of A^n without memory",
    long_about = "Instructions rewrite one register of (A^n) as a function of the whole state, \
                  always bijectively. This tool synthesizes instruction programs for arbitrary \
                  permutations, searches for shortest ones, measures exhaustive complexity \
                  tables, and emits generating families with verified group identifications."
)]
struct Cli {
    /// State labels in cycle notation: canonical 0-based indices or 1-based ones.
    #[arg(long, global = true, value_enum, default_value_t = Labels::Canonical)]
    labels: Labels,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Labels {
    Canonical,
    OneBased,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupChoice {
    Sym,
    Alt,
}

#[derive(Subcommand)]
enum Command {
    /// Build a program of at most 2n−1 instructions computing a permutation.
    ///
    /// Reads a permutation file and prints a program file.
    Synthesize {
        /// Permutation file, or "-" for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },

    /// Find a shortest program computing a permutation.
    ///
    /// Exhaustive over the full instruction set (state spaces up to nine
    /// states), or over the steps of a program file given with --set.
    /// Prints a program file.
    Optimal {
        /// Permutation file, or "-" for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// Program file whose steps form the allowed instruction set.
        #[arg(long)]
        set: Option<PathBuf>,
    },

    /// Check a program file and optionally compare its result to a target.
    Verify {
        /// Program file to check.
        #[arg(long)]
        program: PathBuf,
        /// Permutation file the program should compute.
        #[arg(long)]
        target: Option<PathBuf>,
    },

    /// Shortest-program length of a permutation.
    Complexity {
        /// Permutation file, or "-" for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// Program file whose steps form the allowed instruction set.
        #[arg(long)]
        set: Option<PathBuf>,
    },

    /// Exhaustive distance table over an instruction set.
    ///
    /// Explores the generated group breadth-first and reports the element
    /// count, the diameter, the exact mean distance, and a TSV histogram.
    Diameter {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (at least 1).
        #[arg(long)]
        n: u32,
        /// Program file whose steps form the instruction set
        /// (default: all instructions; state space limited to nine states).
        #[arg(long)]
        set: Option<PathBuf>,
    },

    /// Emit a generating family of instructions with its verification report.
    ///
    /// One instruction per register, generating the full symmetric group of
    /// states, or the alternating group from even instructions alone.
    Generators {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (at least 1).
        #[arg(long)]
        n: u32,
        /// Target group.
        #[arg(long, value_enum)]
        group: GroupChoice,
    },

    /// List the states of A^n in reflected Gray order, one per line.
    Gray {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (at least 1).
        #[arg(long)]
        n: u32,
    },

    /// Emit the q^n − 1 instructions swapping Gray-adjacent states.
    ///
    /// Printed as a program file so the listing can feed --set flags;
    /// together these transpositions generate the full symmetric group.
    Coxeter {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (at least 1).
        #[arg(long)]
        n: u32,
    },

    /// Identify the group generated by all instructions of arity at most l.
    LaryGroup {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (at least 1).
        #[arg(long)]
        n: u32,
        /// Arity bound (between 2 and n).
        #[arg(long)]
        l: u32,
    },

    /// Decide internal computability of the group generated by permutations.
    ///
    /// Lists the group's elements, keeps those that are instructions, and
    /// reports whether they generate the whole group back.
    Internal {
        /// Permutation files, one generator each.
        #[arg(required = true)]
        gens: Vec<PathBuf>,
    },

    /// Compare shortest-program lengths over nested instruction sets.
    Fastness {
        /// Permutation file, or "-" for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        /// Program file whose steps form the restricted set.
        #[arg(long, conflicts_with = "even", required_unless_present = "even")]
        restricted: Option<PathBuf>,
        /// Use the even instructions of the larger set as the restricted set.
        #[arg(long)]
        even: bool,
        /// Program file whose steps form the larger set
        /// (default: all instructions).
        #[arg(long)]
        larger: Option<PathBuf>,
    },

    /// Check that conjugating by a register-wise permutation keeps complexity.
    ConjugacyCheck {
        /// Permutation file for the measured element.
        #[arg(long)]
        input: PathBuf,
        /// Permutation file for the conjugator; must act register-wise
        /// (permute registers, then each register's values independently).
        #[arg(long)]
        conjugator: PathBuf,
    },

    /// The classic three-step register swap, built and verified.
    SwapDemo {
        /// Alphabet size (at least 2).
        #[arg(long)]
        q: u32,
        /// Number of registers (the swap demo requires exactly 2).
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
}

/// Stdout payload plus the exit verdict.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match env_cap() {
        Ok(cap) => cap,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match run(cli, cap) {
        Ok(outcome) => {
            // A reader that hangs up early (e.g. `| head`) must stop us
            // quietly, the way grep or cat stop, not with a panic.
            if let Err(err) = io::stdout().write_all(outcome.text.as_bytes()) {
                if err.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {err}");
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn env_cap() -> Result<Option<u64>, String> {
    match std::env::var("MEMORYLESS_CAP") {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("MEMORYLESS_CAP must be an unsigned integer, got {raw:?}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("MEMORYLESS_CAP: {e}")),
    }
}

fn run(cli: Cli, cap: Option<u64>) -> Result<Outcome, String> {
    let labels = cli.labels;
    match cli.command {
        Command::Synthesize { input } => cmd_synthesize(&input),
        Command::Optimal { input, set } => cmd_optimal(&input, set.as_deref(), cap),
        Command::Verify { program, target } => cmd_verify(&program, target.as_deref(), labels),
        Command::Complexity { input, set } => cmd_complexity(&input, set.as_deref(), cap),
        Command::Diameter { q, n, set } => cmd_diameter(q, n, set.as_deref(), cap),
        Command::Generators { q, n, group } => cmd_generators(q, n, group, labels),
        Command::Gray { q, n } => cmd_gray(q, n),
        Command::Coxeter { q, n } => cmd_coxeter(q, n),
        Command::LaryGroup { q, n, l } => cmd_lary_group(q, n, l),
        Command::Internal { gens } => cmd_internal(&gens, cap, labels),
        Command::Fastness {
            input,
            restricted,
            even,
            larger,
        } => cmd_fastness(&input, restricted.as_deref(), even, larger.as_deref(), cap),
        Command::ConjugacyCheck { input, conjugator } => {
            cmd_conjugacy_check(&input, &conjugator, labels)
        }
        Command::SwapDemo { q, n } => cmd_swap_demo(q, n, labels),
    }
}

// ---------------------------------------------------------------- plumbing

fn read_input(source: &str) -> Result<String, String> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("standard input: {e}"))?;
        Ok(buf)
    } else {
        read_file(Path::new(source))
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn permutation_from(source: &str) -> Result<Permutation, String> {
    parse_permutation(&read_input(source)?).map_err(|e| e.to_string())
}

fn permutation_from_file(path: &Path) -> Result<Permutation, String> {
    parse_permutation(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn set_from_file(path: &Path) -> Result<Vec<Instruction>, String> {
    let program =
        parse_program(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(program.steps().to_vec())
}

fn render_cycles(d: &CycleDecomposition, labels: Labels) -> String {
    match labels {
        Labels::Canonical => d.render(|s| s.to_string()),
        Labels::OneBased => d.render(|s| (s + 1).to_string()),
    }
}

fn cycles_of(f: &Permutation, labels: Labels) -> String {
    render_cycles(&f.cycle_decomposition(), labels)
}

fn alphabet(q: u32, n: u32) -> Result<Alphabet, String> {
    Alphabet::new(q, n).map_err(|e| e.to_string())
}

fn verdict(out: &mut String, ok: bool) {
    let _ = writeln!(out, "verdict: {}", if ok { "OK" } else { "FAIL" });
}

// ------------------------------------------------------------- subcommands

fn cmd_synthesize(input: &str) -> Result<Outcome, String> {
    let f = permutation_from(input)?;
    let program = synthesize(&f);
    Ok(Outcome::ok(format_program(&program)))
}

fn cmd_optimal(input: &str, set: Option<&Path>, cap: Option<u64>) -> Result<Outcome, String> {
    let f = permutation_from(input)?;
    let program = match set {
        Some(path) => {
            let set = set_from_file(path)?;
            optimal_program_with_set(&f, &set, cap)
        }
        None => optimal_program(&f),
    }
    .map_err(|e| e.to_string())?;
    Ok(Outcome::ok(format_program(&program)))
}

fn cmd_verify(program: &Path, target: Option<&Path>, labels: Labels) -> Result<Outcome, String> {
    let program = parse_program(&read_file(program)?).map_err(|e| e.to_string())?;
    let a = program.alphabet();
    let composite = program.to_permutation();

    let mut out = String::new();
    let _ = writeln!(out, "q: {}", a.q());
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "steps: {}", program.len());
    let registers: String = program
        .steps()
        .iter()
        .map(|i| format!(" {}", i.register()))
        .collect();
    let _ = writeln!(out, "registers:{registers}");
    let _ = writeln!(out, "composite: {}", cycles_of(&composite, labels));

    let mut ok = true;
    if let Some(path) = target {
        let target = permutation_from_file(path)?;
        if target.alphabet() != a {
            return Err(format!(
                "alphabet mismatch: program over {a}, target over {}",
                target.alphabet()
            ));
        }
        let matched = composite == target;
        let _ = writeln!(
            out,
            "target: {}",
            if matched { "match" } else { "mismatch" }
        );
        ok = matched;
    }
    verdict(&mut out, ok);
    Ok(Outcome { text: out, ok })
}

fn cmd_complexity(input: &str, set: Option<&Path>, cap: Option<u64>) -> Result<Outcome, String> {
    let f = permutation_from(input)?;
    let a = f.alphabet();
    let (kind, count, program) = match set {
        Some(path) => {
            let set = set_from_file(path)?;
            let program = optimal_program_with_set(&f, &set, cap).map_err(|e| e.to_string())?;
            ("file", set.len(), program)
        }
        None => {
            let program = optimal_program(&f).map_err(|e| e.to_string())?;
            let count = enumerate_instructions(a, cap)
                .map_err(|e| e.to_string())?
                .len();
            ("full", count, program)
        }
    };

    let mut out = String::new();
    let _ = writeln!(out, "q: {}", a.q());
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "set: {kind}");
    let _ = writeln!(out, "instructions: {count}");
    let _ = writeln!(out, "length: {}", program.len());
    verdict(&mut out, true);
    Ok(Outcome::ok(out))
}

fn cmd_diameter(q: u32, n: u32, set: Option<&Path>, cap: Option<u64>) -> Result<Outcome, String> {
    let a = alphabet(q, n)?;
    let (kind, table) = match set {
        Some(path) => {
            let set = set_from_file(path)?;
            (
                "file",
                complexity_table(a, &set, cap).map_err(|e| e.to_string())?,
            )
        }
        None => (
            "full",
            full_complexity_table(a, cap).map_err(|e| e.to_string())?,
        ),
    };

    let mut out = String::new();
    let _ = writeln!(out, "q: {q}");
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "set: {kind}");
    let _ = writeln!(out, "instructions: {}", table.instructions().len());
    let _ = writeln!(out, "elements: {}", table.count());
    let _ = writeln!(out, "diameter: {}", table.diameter());
    let (num, den) = table.mean();
    let _ = writeln!(out, "mean: {num}/{den}");
    let _ = writeln!(out, "histogram:");
    for (d, count) in table.histogram().iter().enumerate() {
        let _ = writeln!(out, "{d}\t{count}");
    }
    verdict(&mut out, true);
    Ok(Outcome::ok(out))
}

fn cmd_generators(q: u32, n: u32, group: GroupChoice, labels: Labels) -> Result<Outcome, String> {
    let a = alphabet(q, n)?;
    let (name, family) = match group {
        GroupChoice::Sym => ("sym", sym_generators(a)),
        GroupChoice::Alt => ("alt", alt_generators(a)),
    };
    let family = family.map_err(|e| e.to_string())?;
    let report = verify_family(&family);

    let mut out = String::new();
    let _ = writeln!(out, "q: {q}");
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "group: {name}");
    let _ = writeln!(out, "generators: {}", family.pis().len());
    for (i, pi) in family.pis().iter().enumerate() {
        let _ = writeln!(
            out,
            "pi[{}]: {}",
            i + 1,
            cycles_of(&pi.to_permutation(), labels)
        );
    }
    let on_registers = report.instruction_on_register.iter().all(|&b| b);
    let _ = writeln!(out, "on_declared_registers: {on_registers}");
    let _ = writeln!(out, "one_per_register: {}", report.one_per_register);
    let signs: String = report.signs.iter().map(|s| format!(" {s}")).collect();
    let _ = writeln!(out, "signs:{signs}");
    let _ = writeln!(out, "parity_ok: {}", report.parity_ok);
    let _ = writeln!(out, "order: {}", report.identity.order);
    let _ = writeln!(out, "identified: {}", report.identity.tag);
    let _ = writeln!(out, "group_ok: {}", report.group_ok);
    let _ = writeln!(out, "transitive: {}", report.transitive);
    let ok = report.passed();
    verdict(&mut out, ok);
    Ok(Outcome { text: out, ok })
}

fn cmd_gray(q: u32, n: u32) -> Result<Outcome, String> {
    let a = alphabet(q, n)?;
    let mut out = String::new();
    for s in gray_sequence(a) {
        let state = a.state_of(s);
        let digits: Vec<String> = state.coords().iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out, "{}", digits.join(" "));
    }
    Ok(Outcome::ok(out))
}

fn cmd_coxeter(q: u32, n: u32) -> Result<Outcome, String> {
    let a = alphabet(q, n)?;
    let steps = coxeter_instructions(a).map_err(|e| e.to_string())?;
    let listing = Program::new(a, steps).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(format_program(&listing)))
}

fn cmd_lary_group(q: u32, n: u32, l: u32) -> Result<Outcome, String> {
    let a = alphabet(q, n)?;
    let generators = lary_generators(a, l).map_err(|e| e.to_string())?;
    let identity = lary_group(a, l).map_err(|e| e.to_string())?;

    let mut out = String::new();
    let _ = writeln!(out, "q: {q}");
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "l: {l}");
    let _ = writeln!(out, "generators: {}", generators.len());
    let _ = writeln!(out, "order: {}", identity.order);
    let _ = writeln!(out, "identified: {}", identity.tag);
    verdict(&mut out, true);
    Ok(Outcome::ok(out))
}

fn cmd_internal(gens: &[PathBuf], cap: Option<u64>, labels: Labels) -> Result<Outcome, String> {
    let mut perms = Vec::with_capacity(gens.len());
    for path in gens {
        perms.push(permutation_from_file(path)?);
    }
    let a = perms[0].alphabet();
    for f in &perms[1..] {
        if f.alphabet() != a {
            return Err(format!(
                "alphabet mismatch: generators over {a} and {}",
                f.alphabet()
            ));
        }
    }
    let report = internal_computability(a, &perms, cap).map_err(|e| e.to_string())?;

    let mut out = String::new();
    let _ = writeln!(out, "q: {}", a.q());
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "generators: {}", perms.len());
    let _ = writeln!(out, "group_order: {}", report.group_order);
    let _ = writeln!(out, "closure_order: {}", report.closure_order);
    let _ = writeln!(out, "members: {}", report.members.len());
    let mut members: Vec<Permutation> = report
        .members
        .iter()
        .map(Instruction::to_permutation)
        .collect();
    members.sort_by(|f, g| f.images().cmp(g.images()));
    for (i, member) in members.iter().enumerate() {
        let _ = writeln!(out, "member[{}]: {}", i + 1, cycles_of(member, labels));
    }
    let _ = writeln!(out, "computable: {}", report.computable);
    verdict(&mut out, true);
    Ok(Outcome::ok(out))
}

fn cmd_fastness(
    input: &str,
    restricted: Option<&Path>,
    even: bool,
    larger: Option<&Path>,
    cap: Option<u64>,
) -> Result<Outcome, String> {
    let g = permutation_from(input)?;
    let a = g.alphabet();
    let larger_set = match larger {
        Some(path) => set_from_file(path)?,
        None => enumerate_instructions(a, cap).map_err(|e| e.to_string())?,
    };
    let restricted_set = if even {
        larger_set
            .iter()
            .filter(|i| i.sign() == 1)
            .cloned()
            .collect()
    } else {
        let path = restricted.expect("clap requires --restricted without --even");
        set_from_file(path)?
    };
    let report = fastness(&g, &restricted_set, &larger_set, cap).map_err(|e| e.to_string())?;

    let mut out = String::new();
    let _ = writeln!(out, "q: {}", a.q());
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "restricted_instructions: {}", report.restricted_size);
    let _ = writeln!(out, "larger_instructions: {}", report.larger_size);
    let _ = writeln!(out, "restricted_length: {}", report.restricted_length);
    let _ = writeln!(out, "larger_length: {}", report.larger_length);
    let _ = writeln!(out, "fast: {}", report.fast);
    verdict(&mut out, true);
    Ok(Outcome::ok(out))
}

fn cmd_conjugacy_check(input: &Path, conjugator: &Path, labels: Labels) -> Result<Outcome, String> {
    let g = permutation_from_file(input)?;
    let h = permutation_from_file(conjugator)?;
    let preserved = conjugacy_complexity_check(&g, &h).map_err(|e| e.to_string())?;
    let twisted = conjugate(&h, &g).map_err(|e| e.to_string())?;
    let direct = optimal_program(&g).map_err(|e| e.to_string())?.len();
    let conjugated = optimal_program(&twisted).map_err(|e| e.to_string())?.len();

    let a = g.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "q: {}", a.q());
    let _ = writeln!(out, "n: {}", a.n());
    let _ = writeln!(out, "element: {}", cycles_of(&g, labels));
    let _ = writeln!(out, "conjugate: {}", cycles_of(&twisted, labels));
    let _ = writeln!(out, "length: {direct}");
    let _ = writeln!(out, "conjugate_length: {conjugated}");
    let _ = writeln!(out, "preserved: {preserved}");
    verdict(&mut out, preserved);
    Ok(Outcome {
        text: out,
        ok: preserved,
    })
}

fn cmd_swap_demo(q: u32, n: u32, labels: Labels) -> Result<Outcome, String> {
    if n != 2 {
        return Err("the swap demo uses exactly two registers (pass --n 2)".to_string());
    }
    let a = alphabet(q, 2)?;

    // The arithmetic swap: y1 ← y1 + y2, y2 ← y1 − y2, y1 ← y1 − y2 (mod q).
    // Over a binary alphabet all three steps are the same XOR update.
    let step = |register: u32, table: Vec<u32>| {
        Instruction::new(a, register, table).map_err(|e| e.to_string())
    };
    let add: Vec<u32> = a
        .states()
        .map(|s| (a.digit(s, 1) + a.digit(s, 2)) % q)
        .collect();
    let sub: Vec<u32> = a
        .states()
        .map(|s| (a.digit(s, 1) + q - a.digit(s, 2)) % q)
        .collect();
    let program = Program::new(a, vec![step(1, add)?, step(2, sub.clone())?, step(1, sub)?])
        .map_err(|e| e.to_string())?;

    let swapped: Vec<u32> = a
        .states()
        .map(|s| {
            a.index_of(&[a.digit(s, 2), a.digit(s, 1)])
                .expect("digits of a valid state")
        })
        .collect();
    let target = Permutation::from_images(a, swapped).map_err(|e| e.to_string())?;
    let computes = program.to_permutation() == target;

    let mut out = String::new();
    let _ = writeln!(out, "q: {q}");
    let _ = writeln!(out, "n: 2");
    let _ = writeln!(out, "target: {}", cycles_of(&target, labels));
    let _ = writeln!(out, "program:");
    out.push_str(&format_program(&program));
    let _ = writeln!(out, "length: {}", program.len());
    let _ = writeln!(out, "computes_target: {computes}");
    verdict(&mut out, computes);
    Ok(Outcome {
        text: out,
        ok: computes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use memoryless::text::format_permutation;

    #[test]
    fn swap_demo_is_three_steps_and_correct() {
        for q in [2, 3, 5, 7] {
            let outcome = cmd_swap_demo(q, 2, Labels::Canonical).unwrap();
            assert!(outcome.ok, "q = {q}:\n{}", outcome.text);
            assert!(outcome.text.contains("length: 3"));
            assert!(outcome.text.contains("computes_target: true"));
        }
    }

    #[test]
    fn swap_demo_rejects_other_register_counts() {
        assert!(cmd_swap_demo(2, 3, Labels::Canonical).is_err());
    }

    #[test]
    fn one_based_labels_shift_cycles() {
        let outcome = cmd_swap_demo(2, 2, Labels::OneBased).unwrap();
        // Canonically the binary swap exchanges states 1 and 2.
        assert!(outcome.text.contains("target: (2,3)"), "{}", outcome.text);
    }

    #[test]
    fn permutation_text_roundtrips_through_format() {
        let a = Alphabet::new(3, 2).unwrap();
        let f = Permutation::from_images(a, (0..9).map(|s| (s + 1) % 9).collect()).unwrap();
        let parsed = parse_permutation(&format_permutation(&f)).unwrap();
        assert_eq!(parsed, f);
    }
}
