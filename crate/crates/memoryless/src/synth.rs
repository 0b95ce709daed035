//! Program synthesis.
//!
//! [`synthesize`] writes any permutation of A^n as a program of at most 2n−1
//! instructions. The construction is a recursive routing-network (Clos)
//! decomposition: view A^n as A × A^(n−1), build the bipartite multigraph
//! routing each input column to its target column, and properly q-edge-color
//! it. The first stage writes each state's edge color into register 1, the
//! middle stage permutes the remaining n−1 registers within each fixed value
//! of register 1 (recursively, by the same scheme), and the last stage
//! restores register 1 to its target value. Registers are touched in the
//! palindromic order 1, 2, …, n, …, 2, 1; identity stages are dropped.
//!
//! [`optimal_program`] finds a true shortest program over the full
//! instruction set by bidirectional breadth-first search — feasible only for
//! tiny state spaces (q^n ≤ 9); [`optimal_program_with_set`] does the same
//! over a caller-supplied instruction set.

use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::instr::{enumerate_instructions, Instruction, Program};
use crate::perm::Permutation;

/// Default ceiling on visited states in the exact searches.
pub const DEFAULT_SEARCH_CAP: u64 = 10_000_000;

/// A bipartite multigraph with labelled edges; vertices are column indices.
#[derive(Clone, Debug)]
pub struct BipartiteMultigraph {
    pub left_count: u32,
    pub right_count: u32,
    /// (left vertex, right vertex, label); labels are distinct.
    pub edges: Vec<(u32, u32, u32)>,
}

/// A proper edge coloring; `color[label]` is the color of the edge with that
/// label.
#[derive(Clone, Debug)]
pub struct EdgeColoring {
    pub color: Vec<u32>,
}

/// The routing graph of `f` for the split A^n = A × A^(n−1): one vertex per
/// column (values of registers 2…n), one edge per state `s` from `column(s)`
/// to `column(f(s))`, labelled `s`. Both sides are q-regular.
pub fn perm_to_routing_graph(f: &Permutation) -> Result<BipartiteMultigraph> {
    let a = f.alphabet();
    if a.n() < 2 {
        return Err(Error::Degenerate(
            "routing graphs need at least two registers".to_string(),
        ));
    }
    let sub = a.size() / a.q();
    Ok(routing_graph_raw(sub, f.images()))
}

/// Routing graph of an image table over columns modulo `sub`.
fn routing_graph_raw(sub: u32, images: &[u32]) -> BipartiteMultigraph {
    let edges = images
        .iter()
        .enumerate()
        .map(|(x, &fx)| (x as u32 % sub, fx % sub, x as u32))
        .collect();
    BipartiteMultigraph {
        left_count: sub,
        right_count: sub,
        edges,
    }
}

/// Properly color a q-regular bipartite multigraph with q colors by peeling
/// perfect matchings (König's theorem, via augmenting paths). Deterministic
/// for a fixed edge order.
pub fn edge_color(g: &BipartiteMultigraph, q: u32) -> Result<EdgeColoring> {
    let mut left_degree = vec![0u32; g.left_count as usize];
    let mut right_degree = vec![0u32; g.right_count as usize];
    let mut max_label = 0u32;
    for &(l, r, label) in &g.edges {
        if l >= g.left_count || r >= g.right_count {
            return Err(Error::InvalidGraph(format!(
                "edge ({l},{r}) out of vertex range"
            )));
        }
        left_degree[l as usize] += 1;
        right_degree[r as usize] += 1;
        max_label = max_label.max(label);
    }
    if left_degree.iter().any(|&d| d != q) || right_degree.iter().any(|&d| d != q) {
        return Err(Error::InvalidGraph(format!(
            "graph is not {q}-regular on both sides"
        )));
    }
    let mut color = vec![u32::MAX; max_label as usize + 1];
    let mut seen = vec![false; max_label as usize + 1];
    for &(_, _, label) in &g.edges {
        if seen[label as usize] {
            return Err(Error::InvalidGraph(format!("edge label {label} repeated")));
        }
        seen[label as usize] = true;
    }

    // adj[u] = (edge index, right vertex) in edge order.
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); g.left_count as usize];
    for (ei, &(l, r, _)) in g.edges.iter().enumerate() {
        adj[l as usize].push((ei, r));
    }
    let mut colored = vec![false; g.edges.len()];
    for round in 0..q {
        // Kuhn's augmenting-path matching over the uncolored edges.
        let mut right_match: Vec<Option<u32>> = vec![None; g.right_count as usize];
        let mut left_edge: Vec<Option<usize>> = vec![None; g.left_count as usize];
        for u in 0..g.left_count {
            let mut visited = vec![false; g.right_count as usize];
            let ok = augment(
                u,
                &adj,
                &colored,
                &mut visited,
                &mut right_match,
                &mut left_edge,
            );
            debug_assert!(
                ok,
                "a regular bipartite multigraph always has a perfect matching"
            );
            if !ok {
                return Err(Error::InvalidGraph(
                    "no perfect matching found; graph is not regular".to_string(),
                ));
            }
        }
        for entry in &left_edge {
            let ei = entry.expect("perfect matching covers every left vertex");
            colored[ei] = true;
            color[g.edges[ei].2 as usize] = round;
        }
    }
    Ok(EdgeColoring { color })
}

fn augment(
    u: u32,
    adj: &[Vec<(usize, u32)>],
    colored: &[bool],
    visited: &mut [bool],
    right_match: &mut [Option<u32>],
    left_edge: &mut [Option<usize>],
) -> bool {
    for &(ei, v) in &adj[u as usize] {
        if colored[ei] || visited[v as usize] {
            continue;
        }
        visited[v as usize] = true;
        let free = match right_match[v as usize] {
            None => true,
            Some(w) => augment(w, adj, colored, visited, right_match, left_edge),
        };
        if free {
            right_match[v as usize] = Some(u);
            left_edge[u as usize] = Some(ei);
            return true;
        }
    }
    false
}

/// Append the instruction with the given register and table unless it is the
/// identity.
fn push_step(a: Alphabet, register: u32, table: Vec<u32>, out: &mut Vec<Instruction>) {
    let identity = a
        .states()
        .all(|s| table[s as usize] == a.digit(s, register));
    if identity {
        return;
    }
    let step = Instruction::new(a, register, table)
        .expect("synthesis stages satisfy the fiber-bijectivity audit");
    out.push(step);
}

/// Synthesize the family `fams` of permutations of the last `m` registers,
/// one per context (values of the first n−m registers, as the high digits of
/// the state index). Appends instructions computing, on every state, the
/// member of the family selected by that state's context.
fn synth_family(a: Alphabet, m: u32, fams: &[Vec<u32>], out: &mut Vec<Instruction>) {
    let q = a.q();
    if m == 1 {
        let table: Vec<u32> = a
            .states()
            .map(|s| fams[(s / q) as usize][(s % q) as usize])
            .collect();
        push_step(a, a.n(), table, out);
        return;
    }

    let sub = q.pow(m - 1);
    let block = q * sub; // states per context
    let r0 = a.n() - m + 1;
    let mut stage_a = vec![0u32; a.size() as usize];
    let mut stage_c = vec![0u32; a.size() as usize];
    let mut middle: Vec<Vec<u32>> = vec![vec![0u32; sub as usize]; fams.len() * q as usize];

    for (c, fc) in fams.iter().enumerate() {
        let graph = routing_graph_raw(sub, fc);
        let coloring = edge_color(&graph, q).expect("routing graphs are q-regular");
        for x in 0..block {
            let k = coloring.color[x as usize];
            let y = x % sub;
            let target = fc[x as usize];
            let (v_target, y_target) = (target / sub, target % sub);
            let s = c as u32 * block + x;
            // Stage A: park the color in register r0.
            stage_a[s as usize] = k;
            // Middle: within (context, color), route column y to its target.
            middle[c * q as usize + k as usize][y as usize] = y_target;
            // Stage C: the state is now (context, k, y_target); restore r0.
            let s_after = c as u32 * block + k * sub + y_target;
            stage_c[s_after as usize] = v_target;
        }
    }

    push_step(a, r0, stage_a, out);
    synth_family(a, m - 1, &middle, out);
    push_step(a, r0, stage_c, out);
}

/// A program of at most 2n−1 instructions computing `f`, touching registers
/// in the palindromic order 1,…,n,…,1 with identity stages dropped.
pub fn synthesize(f: &Permutation) -> Program {
    let a = f.alphabet();
    let mut steps = Vec::with_capacity(2 * a.n() as usize - 1);
    synth_family(a, a.n(), &[f.images().to_vec()], &mut steps);
    let program = Program::new(a, steps).expect("stages share the alphabet");
    debug_assert_eq!(&program.to_permutation(), f);
    program
}

/// A shortest program for `f` over the full instruction set. Exact search,
/// restricted to q^n ≤ 9.
pub fn optimal_program(f: &Permutation) -> Result<Program> {
    let a = f.alphabet();
    if a.size() > 9 {
        return Err(Error::TooLarge {
            what: "state space for exhaustive search".to_string(),
            count: a.size().to_string(),
            cap: 9,
        });
    }
    let set = enumerate_instructions(a, None)?;
    optimal_program_with_set(f, &set, None)
}

/// A shortest program for `f` using only the given instructions (in the
/// given order, which breaks ties). Bidirectional breadth-first search;
/// `cap` bounds the total number of visited permutations (default 10⁷).
/// Errors with `NotComputable` when `f` is not a product of set members.
pub fn optimal_program_with_set(
    f: &Permutation,
    set: &[Instruction],
    cap: Option<u64>,
) -> Result<Program> {
    let a = f.alphabet();
    let cap = cap.unwrap_or(DEFAULT_SEARCH_CAP);
    for i in set {
        if i.alphabet() != a {
            return Err(Error::AlphabetMismatch(format!(
                "instruction over {}, target over {}",
                i.alphabet(),
                a
            )));
        }
    }
    if f.is_identity() {
        return Program::new(a, Vec::new());
    }

    let perms: Vec<Vec<u32>> = set
        .iter()
        .map(|i| i.to_permutation().images().to_vec())
        .collect();
    let inverses: Vec<Vec<u32>> = set
        .iter()
        .map(|i| i.inverse().to_permutation().images().to_vec())
        .collect();

    // dist & parent generator index per side; parent u32::MAX marks the root.
    let mut fwd: HashMap<Vec<u32>, (u32, u32)> = HashMap::new();
    let mut bwd: HashMap<Vec<u32>, (u32, u32)> = HashMap::new();
    let id: Vec<u32> = a.states().collect();
    let target = f.images().to_vec();
    fwd.insert(id.clone(), (0, u32::MAX));
    bwd.insert(target.clone(), (0, u32::MAX));
    let mut fwd_frontier: Vec<Vec<u32>> = vec![id];
    let mut bwd_frontier: Vec<Vec<u32>> = vec![target.clone()];
    let (mut fwd_depth, mut bwd_depth) = (0u32, 0u32);
    // (total length, meet state)
    let mut best: Option<(u32, Vec<u32>)> = None;

    // The target is not the identity, but it may itself be in the other map
    // already (a set member handles it at depth 1, found during expansion).
    loop {
        if let Some((len, _)) = &best {
            if *len <= fwd_depth + bwd_depth + 1 {
                break;
            }
        }
        if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
            return Err(Error::NotComputable(
                "target is not a product of the given instructions".to_string(),
            ));
        }
        if (fwd.len() + bwd.len()) as u64 > cap {
            return Err(Error::TooLarge {
                what: "visited permutations".to_string(),
                count: (fwd.len() + bwd.len()).to_string(),
                cap,
            });
        }
        let forward = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, this, other, gens) = if forward {
            (&mut fwd_frontier, &mut fwd, &mut bwd, &perms)
        } else {
            (&mut bwd_frontier, &mut bwd, &mut fwd, &inverses)
        };
        let depth = if forward { fwd_depth } else { bwd_depth } + 1;
        let mut next: Vec<Vec<u32>> = Vec::new();
        for cur in frontier.iter() {
            for (gi, g) in gens.iter().enumerate() {
                let stepped: Vec<u32> = cur.iter().map(|&s| g[s as usize]).collect();
                if this.contains_key(&stepped) {
                    continue;
                }
                this.insert(stepped.clone(), (depth, gi as u32));
                if let Some(&(od, _)) = other.get(&stepped) {
                    let total = depth + od;
                    if best.as_ref().is_none_or(|(b, _)| total < *b) {
                        best = Some((total, stepped.clone()));
                    }
                }
                next.push(stepped);
            }
        }
        *frontier = next;
        if forward {
            fwd_depth = depth;
        } else {
            bwd_depth = depth;
        }
    }

    let (_, meet) = best.expect("loop exits with a recorded meet");
    // Forward half: walk back to the identity collecting generator indices.
    let mut first_half: Vec<usize> = Vec::new();
    let mut cur = meet.clone();
    loop {
        let &(d, gi) = fwd.get(&cur).expect("walk stays inside the forward map");
        if d == 0 {
            break;
        }
        first_half.push(gi as usize);
        // Undo the last applied instruction: prev = g⁻¹ ∘ cur.
        let ginv = &inverses[gi as usize];
        cur = cur.iter().map(|&s| ginv[s as usize]).collect();
    }
    first_half.reverse();
    // Backward half: walk from the meet to the target, collecting the suffix
    // in execution order.
    let mut second_half: Vec<usize> = Vec::new();
    let mut cur = meet;
    loop {
        let &(d, gi) = bwd.get(&cur).expect("walk stays inside the backward map");
        if d == 0 {
            break;
        }
        second_half.push(gi as usize);
        // The suffix at cur starts with g; past it, we are at g ∘ cur.
        let g = &perms[gi as usize];
        cur = cur.iter().map(|&s| g[s as usize]).collect();
    }

    let steps: Vec<Instruction> = first_half
        .into_iter()
        .chain(second_half)
        .map(|gi| set[gi].clone())
        .collect();
    let program = Program::new(a, steps)?;
    debug_assert_eq!(program.to_permutation().images(), f.images());
    Ok(program)
}
