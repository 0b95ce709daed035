//! Plain-text formats for permutations and programs.
//!
//! Permutation:
//! ```text
//! q n
//! i_0 i_1 … i_{q^n−1}
//! ```
//! where `i_s` is the image of state `s` in canonical (big-endian) indexing.
//!
//! Program:
//! ```text
//! q n L
//! j t_0 t_1 … t_{q^n−1}      (one line per step, in execution order)
//! ```
//! where `j` is the updated register (1-based) and `t_s` the new value of
//! register `j` in state `s`.
//!
//! Tokens are whitespace-separated; blank lines are ignored. Parse errors
//! carry 1-based line and column numbers.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::instr::{Instruction, Program};
use crate::perm::Permutation;

/// A token with its 1-based source position.
struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokenize(input: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (li, line) in input.lines().enumerate() {
        let mut tokens = Vec::new();
        let mut start: Option<usize> = None;
        // Column numbers count characters, not bytes.
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        for (ci, &(bi, ch)) in chars.iter().enumerate() {
            if ch.is_whitespace() {
                if let Some(sci) = start.take() {
                    let sbyte = chars[sci].0;
                    tokens.push(Token {
                        text: &line[sbyte..bi],
                        line: li + 1,
                        col: sci + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(ci);
            }
        }
        if let Some(sci) = start {
            let sbyte = chars[sci].0;
            tokens.push(Token {
                text: &line[sbyte..],
                line: li + 1,
                col: sci + 1,
            });
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn parse_u32(tok: &Token<'_>, what: &str) -> Result<u32> {
    tok.text.parse::<u32>().map_err(|_| Error::Parse {
        line: tok.line,
        col: tok.col,
        msg: format!("expected {what}, found {:?}", tok.text),
    })
}

fn expect_len(tokens: &[Token<'_>], want: usize, what: &str) -> Result<()> {
    match tokens.len().cmp(&want) {
        std::cmp::Ordering::Equal => Ok(()),
        std::cmp::Ordering::Less => {
            let last = tokens.last().expect("non-empty line");
            Err(Error::Parse {
                line: last.line,
                col: last.col + last.text.chars().count(),
                msg: format!("expected {want} {what}, found {}", tokens.len()),
            })
        }
        std::cmp::Ordering::Greater => {
            let extra = &tokens[want];
            Err(Error::Parse {
                line: extra.line,
                col: extra.col,
                msg: format!("expected {want} {what}, found {}", tokens.len()),
            })
        }
    }
}

fn parse_header(tokens: &[Token<'_>], fields: usize) -> Result<(Alphabet, Vec<u32>)> {
    expect_len(tokens, fields, "header fields")?;
    let q = parse_u32(&tokens[0], "alphabet size q")?;
    let n = parse_u32(&tokens[1], "register count n")?;
    let a = Alphabet::new(q, n).map_err(|e| Error::Parse {
        line: tokens[0].line,
        col: tokens[0].col,
        msg: e.to_string(),
    })?;
    let rest = tokens[2..]
        .iter()
        .map(|t| parse_u32(t, "header field"))
        .collect::<Result<Vec<u32>>>()?;
    Ok((a, rest))
}

pub fn parse_permutation(input: &str) -> Result<Permutation> {
    let lines = tokenize(input);
    if lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input, expected `q n` header".to_string(),
        });
    }
    let (a, _) = parse_header(&lines[0], 2)?;
    if lines.len() < 2 {
        return Err(Error::Parse {
            line: lines[0][0].line,
            col: 1,
            msg: format!("expected a line of {} images", a.size()),
        });
    }
    if lines.len() > 2 {
        return Err(Error::Parse {
            line: lines[2][0].line,
            col: lines[2][0].col,
            msg: "unexpected extra line".to_string(),
        });
    }
    expect_len(&lines[1], a.size() as usize, "images")?;
    let images = lines[1]
        .iter()
        .map(|t| parse_u32(t, "state index"))
        .collect::<Result<Vec<u32>>>()?;
    Permutation::from_images(a, images).map_err(|e| Error::Parse {
        line: lines[1][0].line,
        col: lines[1][0].col,
        msg: e.to_string(),
    })
}

pub fn format_permutation(f: &Permutation) -> String {
    let a = f.alphabet();
    let images: Vec<String> = f.images().iter().map(|s| s.to_string()).collect();
    format!("{} {}\n{}\n", a.q(), a.n(), images.join(" "))
}

pub fn parse_program(input: &str) -> Result<Program> {
    let lines = tokenize(input);
    if lines.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input, expected `q n L` header".to_string(),
        });
    }
    let (a, rest) = parse_header(&lines[0], 3)?;
    let step_count = rest[0] as usize;
    if lines.len() != step_count + 1 {
        if lines.len() < step_count + 1 {
            return Err(Error::Parse {
                line: lines.last().expect("non-empty")[0].line,
                col: 1,
                msg: format!(
                    "expected {step_count} step lines, found {}",
                    lines.len() - 1
                ),
            });
        }
        let extra = &lines[step_count + 1][0];
        return Err(Error::Parse {
            line: extra.line,
            col: extra.col,
            msg: format!(
                "expected {step_count} step lines, found {}",
                lines.len() - 1
            ),
        });
    }
    let mut steps = Vec::with_capacity(step_count);
    for tokens in &lines[1..] {
        expect_len(tokens, 1 + a.size() as usize, "fields (register + table)")?;
        let register = parse_u32(&tokens[0], "register")?;
        let table = tokens[1..]
            .iter()
            .map(|t| parse_u32(t, "register value"))
            .collect::<Result<Vec<u32>>>()?;
        let step = Instruction::new(a, register, table).map_err(|e| Error::Parse {
            line: tokens[0].line,
            col: tokens[0].col,
            msg: e.to_string(),
        })?;
        steps.push(step);
    }
    Program::new(a, steps)
}

pub fn format_program(p: &Program) -> String {
    let a = p.alphabet();
    let mut out = format!("{} {} {}\n", a.q(), a.n(), p.len());
    for step in p.steps() {
        let table: Vec<String> = step.table().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{} {}\n", step.register(), table.join(" ")));
    }
    out
}
