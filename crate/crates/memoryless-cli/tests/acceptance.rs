//! Acceptance suite: one test per release criterion, each printing a single
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).
//! The criteria pin the mathematical claims the crate is built around, with
//! exact integer equalities throughout — no tolerances.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use memoryless::group::affine_gf2_order;
use memoryless::text::{format_permutation, parse_program};
use memoryless::{
    alt_generators, build_chain, conjugacy_complexity_check, conjugate, coxeter_instructions,
    enumerate_instructions, factorial, fastness, full_complexity_table, gray_sequence,
    internal_computability, lary_group, optimal_program, sym_generators, synthesize, verify_family,
    Alphabet, GroupTag, Instruction, Permutation,
};

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => println!("criterion {number} ({name}): PASS [{elapsed:.1}s]"),
        Err(payload) => {
            println!("criterion {number} ({name}): FAIL [{elapsed:.1}s]");
            resume_unwind(payload);
        }
    }
}

fn alphabet(q: u32, n: u32) -> Alphabet {
    Alphabet::new(q, n).unwrap()
}

/// The permutation exchanging registers 1 and 2.
fn swap_permutation(q: u32) -> Permutation {
    let a = alphabet(q, 2);
    let images: Vec<u32> = a
        .states()
        .map(|s| a.index_of(&[a.digit(s, 2), a.digit(s, 1)]).unwrap())
        .collect();
    Permutation::from_images(a, images).unwrap()
}

fn random_permutation(a: Alphabet, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<u32> = a.states().collect();
    images.shuffle(rng);
    Permutation::from_images(a, images).unwrap()
}

/// A random register-wise permutation: registers are rewired by a fixed
/// permutation and each register's values pass through their own bijection.
fn random_unary(a: Alphabet, rng: &mut ChaCha8Rng) -> Permutation {
    let n = a.n() as usize;
    let mut wiring: Vec<usize> = (0..n).collect();
    wiring.shuffle(rng);
    let mut value_maps: Vec<Vec<u32>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut map: Vec<u32> = (0..a.q()).collect();
        map.shuffle(rng);
        value_maps.push(map);
    }
    let images: Vec<u32> = a
        .states()
        .map(|s| {
            let coords: Vec<u32> = (0..n)
                .map(|j| value_maps[j][a.digit(s, wiring[j] as u32 + 1) as usize])
                .collect();
            a.index_of(&coords).unwrap()
        })
        .collect();
    Permutation::from_images(a, images).unwrap()
}

#[test]
fn criterion_01_shortest_swap() {
    criterion(1, "shortest swap", || {
        let start = Instant::now();
        for q in [2u32, 3] {
            // Drive the real binary: the `optimal` subcommand must return a
            // three-step program for the register swap.
            let path = std::env::temp_dir().join(format!(
                "memoryless-acceptance-{}-swap{q}.perm",
                std::process::id()
            ));
            std::fs::write(&path, format_permutation(&swap_permutation(q))).unwrap();
            let output = std::process::Command::new(env!("CARGO_BIN_EXE_memoryless"))
                .args(["optimal", "--input", path.to_str().unwrap()])
                .output()
                .unwrap();
            assert!(output.status.success(), "q = {q}: {output:?}");
            let program = parse_program(&String::from_utf8(output.stdout).unwrap()).unwrap();
            assert_eq!(program.len(), 3, "q = {q}");
            assert_eq!(program.to_permutation(), swap_permutation(q));
        }
        assert!(start.elapsed().as_secs() < 10);
    });
}

#[test]
fn criterion_02_exhaustive_diameters() {
    criterion(2, "exhaustive diameters", || {
        let start = Instant::now();
        for (q, n, diameter) in [(2u32, 2u32, 3u32), (2, 3, 5), (3, 2, 3)] {
            let table = full_complexity_table(alphabet(q, n), None).unwrap();
            assert_eq!(table.diameter(), diameter, "(q, n) = ({q}, {n})");
            assert_eq!(table.diameter(), 2 * n - 1, "(q, n) = ({q}, {n})");
            // The table covers the whole symmetric group of states.
            assert_eq!(
                BigUint::from(table.count()),
                factorial(q.pow(n)),
                "(q, n) = ({q}, {n})"
            );
        }
        assert!(start.elapsed().as_secs() < 300);
    });
}

#[test]
fn criterion_03_synthesis_bound() {
    criterion(3, "synthesis bound", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(20260816);
        for q in [2u32, 3, 4, 5] {
            for n in [2u32, 3, 4] {
                let a = alphabet(q, n);
                for _ in 0..100 {
                    let f = random_permutation(a, &mut rng);
                    let program = synthesize(&f);
                    assert!(
                        (program.len() as u32) < 2 * n,
                        "(q, n) = ({q}, {n}): {} steps",
                        program.len()
                    );
                    assert_eq!(program.to_permutation(), f, "(q, n) = ({q}, {n})");
                }
            }
        }
        assert!(start.elapsed().as_secs() < 300);
    });
}

#[test]
fn criterion_04_generating_families() {
    criterion(4, "generating families", || {
        let start = Instant::now();

        for (q, n) in [
            (2u32, 3u32),
            (2, 4),
            (3, 2),
            (3, 3),
            (4, 2),
            (5, 2),
            (6, 2),
            (4, 3),
        ] {
            let family = sym_generators(alphabet(q, n)).unwrap();
            let report = verify_family(&family);
            assert!(report.passed(), "sym ({q}, {n}): {report:?}");
            assert_eq!(report.identity.order, factorial(q.pow(n)), "sym ({q}, {n})");
        }

        // One pair per construction branch for odd, even, and multiple-of-three
        // alphabet sizes, plus the larger-degree spot checks.
        for (q, n) in [
            (3u32, 2u32),
            (3, 3),
            (4, 2),
            (4, 3),
            (5, 2),
            (7, 2),
            (9, 2),
            (10, 2),
        ] {
            let family = alt_generators(alphabet(q, n)).unwrap();
            let report = verify_family(&family);
            assert!(report.passed(), "alt ({q}, {n}): {report:?}");
            assert_eq!(
                report.identity.order,
                factorial(q.pow(n)) / BigUint::from(2u32),
                "alt ({q}, {n})"
            );
            assert!(report.signs.iter().all(|&s| s == 1), "alt ({q}, {n})");
        }

        // The excluded corners really are excluded.
        assert!(sym_generators(alphabet(2, 2)).is_err());
        assert!(alt_generators(alphabet(2, 2)).is_err());
        assert!(alt_generators(alphabet(2, 3)).is_err());

        assert!(start.elapsed().as_secs() < 600);
    });
}

#[test]
fn criterion_05_bounded_arity_groups() {
    criterion(5, "bounded-arity groups", || {
        let two = BigUint::from(2u32);

        let id = lary_group(alphabet(2, 3), 2).unwrap();
        assert_eq!(id.tag, GroupTag::AffineOverGf2);
        assert_eq!(id.order, BigUint::from(1344u32));
        assert_eq!(id.order, affine_gf2_order(3));

        let id = lary_group(alphabet(2, 4), 2).unwrap();
        assert_eq!(id.tag, GroupTag::AffineOverGf2);
        assert_eq!(id.order, BigUint::from(322560u32));
        assert_eq!(id.order, affine_gf2_order(4));

        let id = lary_group(alphabet(2, 4), 3).unwrap();
        assert_eq!(id.tag, GroupTag::Alternating);
        assert_eq!(id.order, factorial(16) / &two);

        let id = lary_group(alphabet(3, 3), 2).unwrap();
        assert_eq!(id.tag, GroupTag::Symmetric);
        assert_eq!(id.order, factorial(27));

        let id = lary_group(alphabet(4, 3), 2).unwrap();
        assert_eq!(id.tag, GroupTag::Alternating);
        assert_eq!(id.order, factorial(64) / &two);
    });
}

#[test]
fn criterion_06_internal_computability() {
    criterion(6, "internal computability", || {
        // A 5-cycle-free example: the cyclic group of the permutation that
        // is a 3-cycle and a transposition in Gray labels is internally
        // computable — its square and cube are instructions.
        let a = alphabet(3, 2);
        let g = Permutation::from_cycles(a, &[vec![0, 1, 2], vec![3, 6]]).unwrap();
        let report = internal_computability(a, std::slice::from_ref(&g), None).unwrap();
        assert!(report.computable);
        assert_eq!(report.group_order, BigUint::from(6u32));
        let members: Vec<Permutation> = report
            .members
            .iter()
            .map(Instruction::to_permutation)
            .collect();
        let square = conjugate(&Permutation::identity(a), &g)
            .unwrap()
            .compose(&g)
            .unwrap();
        let cube = square.compose(&g).unwrap();
        assert!(members.contains(&square), "g² must be an instruction");
        assert!(members.contains(&cube), "g³ must be an instruction");

        // The alternating group on four binary states is too small: only
        // four of its twelve elements are instructions.
        let a = alphabet(2, 2);
        let g = Permutation::from_cycles(a, &[vec![0, 1, 2]]).unwrap();
        let h = Permutation::from_cycles(a, &[vec![1, 2, 3]]).unwrap();
        let report = internal_computability(a, &[g, h], None).unwrap();
        assert!(!report.computable);
        assert_eq!(report.group_order, BigUint::from(12u32));
        assert_eq!(report.closure_order, BigUint::from(4u32));

        // The alternating group on eight binary states also fails: its
        // instruction members are all affine, generating order 1344.
        let a = alphabet(2, 3);
        let g = Permutation::from_cycles(a, &[vec![0, 1, 2]]).unwrap();
        let h = Permutation::from_cycles(a, &[vec![1, 2, 3, 4, 5, 6, 7]]).unwrap();
        let report = internal_computability(a, &[g, h], None).unwrap();
        assert_eq!(report.group_order, factorial(8) / BigUint::from(2u32));
        assert!(!report.computable);
        assert_eq!(report.closure_order, affine_gf2_order(3));

        // Over a ternary alphabet the alternating group is computable again.
        let a = alphabet(3, 2);
        let g = Permutation::from_cycles(a, &[vec![0, 1, 2]]).unwrap();
        let h = Permutation::from_cycles(a, &[vec![0, 1, 2, 3, 4, 5, 6, 7, 8]]).unwrap();
        let report = internal_computability(a, &[g, h], None).unwrap();
        assert_eq!(report.group_order, factorial(9) / BigUint::from(2u32));
        assert!(report.computable);
        assert!(report.members.iter().all(|i| i.sign() == 1));
    });
}

#[test]
fn criterion_07_even_set_slowdown() {
    criterion(7, "even-set slowdown", || {
        let a = alphabet(3, 2);
        // The 3-cycle through the all-zero state and the two unit vectors.
        let g = Permutation::from_cycles(a, &[vec![0, 3, 1]]).unwrap();
        let all = enumerate_instructions(a, None).unwrap();
        let even: Vec<Instruction> = all.iter().filter(|i| i.sign() == 1).cloned().collect();

        assert_eq!(optimal_program(&g).unwrap().len(), 2);
        let report = fastness(&g, &even, &all, None).unwrap();
        assert_eq!(report.larger_length, 2);
        assert!(report.restricted_length >= 3);
        // Exact value found by the search and confirmed by an independent
        // exhaustive meet-in-the-middle check.
        assert_eq!(report.restricted_length, 4);
        assert!(!report.fast);
        println!(
            "  even-set length: {} (full-set length 2)",
            report.restricted_length
        );
    });
}

#[test]
fn criterion_08_register_wise_conjugation() {
    criterion(8, "register-wise conjugation", || {
        let a = alphabet(2, 2);
        let instructions = enumerate_instructions(a, None).unwrap();

        // Every permutation of four states, by images.
        let mut perms: Vec<Permutation> = Vec::new();
        let mut images = vec![0u32, 1, 2, 3];
        permute_all(&mut images, 0, &mut |arr| {
            perms.push(Permutation::from_images(a, arr.to_vec()).unwrap());
        });
        assert_eq!(perms.len(), 24);

        for h in &perms {
            let all_conjugates_are_instructions = instructions.iter().all(|i| {
                let twisted = conjugate(h, &i.to_permutation()).unwrap();
                Instruction::from_permutation(&twisted).is_some()
            });
            // Register-wise permutations preserve the instruction property;
            // everything else breaks it on some instruction.
            assert_eq!(all_conjugates_are_instructions, h.is_unary(), "h = {h}");
        }
    });
}

fn permute_all(arr: &mut [u32], k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == arr.len() {
        visit(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute_all(arr, k + 1, visit);
        arr.swap(k, i);
    }
}

#[test]
fn criterion_09_gray_order_and_coxeter_set() {
    criterion(9, "gray order and coxeter set", || {
        let render = |a: Alphabet, s: u32| -> String {
            (1..=a.n()).map(|j| a.digit(s, j).to_string()).collect()
        };

        let a = alphabet(2, 3);
        let listing: Vec<String> = gray_sequence(a).into_iter().map(|s| render(a, s)).collect();
        assert_eq!(
            listing,
            ["000", "001", "011", "010", "110", "111", "101", "100"]
        );

        let a = alphabet(3, 2);
        let listing: Vec<String> = gray_sequence(a).into_iter().map(|s| render(a, s)).collect();
        assert_eq!(
            listing,
            ["00", "01", "02", "12", "11", "10", "20", "21", "22"]
        );

        for (q, n) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let a = alphabet(q, n);
            let set = coxeter_instructions(a).unwrap();
            assert_eq!(set.len(), (q.pow(n) - 1) as usize, "({q}, {n})");

            let perms: Vec<Permutation> = set.iter().map(Instruction::to_permutation).collect();
            let full = factorial(q.pow(n));
            assert_eq!(
                build_chain(a, &perms).unwrap().order(),
                full,
                "({q}, {n}) must generate the symmetric group"
            );

            // Minimality: the transpositions chain the states along the Gray
            // path, so removing any one disconnects it.
            for skip in 0..perms.len() {
                let rest: Vec<Permutation> = perms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, p)| p.clone())
                    .collect();
                assert!(
                    build_chain(a, &rest).unwrap().order() < full,
                    "({q}, {n}) stays full without member {skip}"
                );
            }
        }
    });
}

#[test]
fn criterion_10_property_suites() {
    criterion(10, "property suites", || {
        // Conjugating by register-wise permutations preserves shortest
        // program lengths.
        let mut rng = ChaCha8Rng::seed_from_u64(8261);
        for (q, n) in [(2u32, 2u32), (3, 2)] {
            let a = alphabet(q, n);
            for _ in 0..50 {
                let g = random_permutation(a, &mut rng);
                let h = random_unary(a, &mut rng);
                assert!(
                    conjugacy_complexity_check(&g, &h).unwrap(),
                    "({q}, {n}): g = {g}, h = {h}"
                );
            }
        }

        // Parity barrier: with an even alphabet, every instruction that
        // ignores at least one register is an even permutation.
        let a = alphabet(2, 3);
        for i in enumerate_instructions(a, None).unwrap() {
            let p = i.to_permutation();
            if p.arity() < 3 {
                assert_eq!(i.sign(), 1, "{p}");
            }
        }

        // Mean shortest length over all of Sym(2³), reported exactly; the
        // asymptotic reference point is 2n − 3 = 3.
        let table = full_complexity_table(a, None).unwrap();
        assert_eq!(table.count(), 40320);
        let (num, den) = table.mean();
        println!(
            "  mean length at (q, n) = (2, 3): {num}/{den} ≈ {:.4} (reference 2n−3 = 3)",
            num as f64 / den as f64
        );
    });
}
