//! Browser bindings: string-in/string-out wrappers around the library for
//! the static demo page. Inputs use the same plain-text formats as the CLI,
//! so anything built in the browser pipes straight into the command line.
//!
//! The exported functions are thin shells over host-testable cores — a
//! `JsError` can only be constructed on the wasm target itself.

use memoryless::text::{format_program, parse_permutation, parse_program};
use memoryless::{optimal_program, synthesize, Program};
use wasm_bindgen::prelude::*;

/// Builds a program of at most 2n−1 instructions computing the permutation
/// given in the text format (`q n` header line, then the image row).
#[wasm_bindgen]
pub fn synthesize_program(permutation: &str) -> Result<String, JsError> {
    synthesize_report(permutation).map_err(|msg| JsError::new(&msg))
}

/// Finds a shortest program for the permutation by exhaustive search
/// (state spaces up to nine states).
#[wasm_bindgen]
pub fn shortest_program(permutation: &str) -> Result<String, JsError> {
    shortest_report(permutation).map_err(|msg| JsError::new(&msg))
}

/// Runs a program on one start state (register values separated by spaces)
/// and returns the state after every step — the whole computation happens
/// inside the registers, with no extra memory anywhere.
#[wasm_bindgen]
pub fn trace_program(program: &str, start: &str) -> Result<String, JsError> {
    trace_report(program, start).map_err(|msg| JsError::new(&msg))
}

fn report(program: &Program) -> String {
    let composite = program.to_permutation();
    format!(
        "{}\nlength: {}\ncomputes: {}\n",
        format_program(program).trim_end(),
        program.len(),
        composite
    )
}

fn synthesize_report(permutation: &str) -> Result<String, String> {
    let f = parse_permutation(permutation).map_err(|e| e.to_string())?;
    let program = synthesize(&f);
    debug_assert_eq!(program.to_permutation(), f);
    Ok(report(&program))
}

fn shortest_report(permutation: &str) -> Result<String, String> {
    let f = parse_permutation(permutation).map_err(|e| e.to_string())?;
    let program = optimal_program(&f).map_err(|e| e.to_string())?;
    Ok(report(&program))
}

fn trace_report(program: &str, start: &str) -> Result<String, String> {
    let program = parse_program(program).map_err(|e| e.to_string())?;
    let a = program.alphabet();

    let coords: Vec<u32> = start
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| format!("register values must be digits, got {tok:?}"))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != a.n() as usize {
        return Err(format!(
            "the start state needs {} register values, got {}",
            a.n(),
            coords.len()
        ));
    }
    let mut s = a.index_of(&coords).map_err(|e| e.to_string())?;

    let show = |s: u32| -> String {
        a.state_of(s)
            .coords()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    out.push_str(&format!("start:            [{}]\n", show(s)));
    for (k, step) in program.steps().iter().enumerate() {
        s = step.apply(s);
        out.push_str(&format!(
            "step {} (y{} ← ·): [{}]\n",
            k + 1,
            step.register(),
            show(s)
        ));
    }
    Ok(out)
}
