//! Golden CLI transcripts.
//!
//! Each file in `tests/golden/` is a list of blocks: `#` comment lines, a
//! `$ command` line, then the expected stdout, `! `-prefixed stderr lines and
//! a final `? code` line. `UPDATE_GOLDEN=1 cargo test --test cli` rewrites
//! the expectations in place.

use std::fs;
use std::path::{Path, PathBuf};

use cst_workbench::cli::{run, CommandResult};

/// Shell-style word splitting with single quotes only.
fn words(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut started = false;
    for c in line.chars() {
        match c {
            '\'' => {
                quoted = !quoted;
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    out.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    assert!(!quoted, "unbalanced quote in {line:?}");
    if started {
        out.push(cur);
    }
    out
}

fn transcript(r: &CommandResult) -> String {
    let mut s = r.stdout.clone();
    for line in r.stderr.lines() {
        s.push_str("! ");
        s.push_str(line);
        s.push('\n');
    }
    s.push_str(&format!("? {}\n", r.code));
    s
}

struct Block {
    comments: Vec<String>,
    command: String,
    expected: String,
}

fn blocks(text: &str) -> Vec<Block> {
    let mut out: Vec<Block> = Vec::new();
    let mut comments = Vec::new();
    // The block still collecting output, if any; it closes at its `? code` line.
    let mut open = false;
    for line in text.lines() {
        if let Some(cmd) = line.strip_prefix("$ ") {
            assert!(!open, "missing exit code before {line:?}");
            out.push(Block { comments: std::mem::take(&mut comments), command: cmd.to_string(), expected: String::new() });
            open = true;
        } else if open {
            let b = out.last_mut().unwrap();
            b.expected.push_str(line);
            b.expected.push('\n');
            open = !line.starts_with("? ");
        } else if line.starts_with('#') {
            comments.push(line.to_string());
        } else {
            assert!(line.trim().is_empty(), "stray line {line:?}");
        }
    }
    assert!(!open, "last block has no exit code");
    out
}

fn golden_files() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut v: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "txt")).collect();
    v.sort();
    v
}

fn run_line(cmd: &str) -> CommandResult {
    // Relative paths in transcripts are resolved against the crate root.
    std::env::set_current_dir(env!("CARGO_MANIFEST_DIR")).unwrap();
    run(words(cmd))
}

#[test]
fn golden_transcripts() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    let mut total = 0;
    for path in golden_files() {
        let text = fs::read_to_string(&path).unwrap();
        let mut rewritten = String::new();
        for b in blocks(&text) {
            total += 1;
            let got = transcript(&run_line(&b.command));
            if got != b.expected {
                failures.push(format!("{}: $ {}\n--- expected\n{}--- got\n{}", path.display(), b.command, b.expected, got));
            }
            for c in &b.comments {
                rewritten.push_str(c);
                rewritten.push('\n');
            }
            rewritten.push_str(&format!("$ {}\n{}\n", b.command, got));
        }
        if update {
            fs::write(&path, rewritten).unwrap();
        }
    }
    assert!(total > 0);
    if !update {
        assert!(failures.is_empty(), "{} of {total} transcripts differ:\n{}", failures.len(), failures.join("\n"));
    }
}

#[test]
fn transcripts_are_deterministic() {
    for path in golden_files() {
        for b in blocks(&fs::read_to_string(&path).unwrap()) {
            let a = transcript(&run_line(&b.command));
            assert_eq!(a, transcript(&run_line(&b.command)), "$ {}", b.command);
        }
    }
}

#[test]
fn seed_makes_sampling_reproducible() {
    let cmd = |seed: &str| run(["--seed", seed, "translate", "ex x. x in x | x = x", "--semantic", "--sample", "5"]);
    assert_eq!(cmd("7"), cmd("7"));
    assert_eq!(cmd("7").code, 0);
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(run(["no-such-command"]).code, 2);
    assert_eq!(run(["parse", "x in"]).code, 2);
    assert_eq!(run(["hf-eval", "F_p", "{}"]).code, 2);
    assert_eq!(run(["--budget", "0", "prove", "p -> p"]).code, 3);
    assert_eq!(run(["--help"]).code, 0);
}

#[test]
fn word_splitting() {
    assert_eq!(words("prove 'p | ~p'  --quiet"), ["prove", "p | ~p", "--quiet"]);
    assert_eq!(words("x=''"), ["x="]);
}
