//! The regression corpus: `corpus/<name>.ideal` inputs with golden outputs in
//! `golden/<name>.json`.
//!
//! An entry file holds
//!
//! ```text
//! vars: x,y,z
//! (x^2, y*z)
//! expect: not_golod
//! ```
//!
//! The second line may start with an operation, `closure` or `reduce`; the
//! default is a Golod verdict. `expect:` is a status for verdicts and an
//! ideal for the other operations.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::closure::integral_closure;
use crate::criteria::{verdict, VerdictOptions};
use crate::error::{Error, Result};
use crate::harness::parse::{parse_ideal, parse_vars};
use crate::harness::report;
use crate::ideal::eliminate_variable_generators;
use crate::ring::{MonomialIdeal, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Verdict,
    Closure,
    Reduce,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub context: RingContext,
    pub operation: Operation,
    pub ideal: MonomialIdeal,
    pub expect: Option<String>,
}

fn entry_error(name: &str, message: impl std::fmt::Display) -> Error {
    Error::InvalidConfig(format!("corpus entry {name}: {message}"))
}

pub fn parse_entry(name: &str, text: &str) -> Result<CorpusEntry> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let vars = lines
        .next()
        .and_then(|l| l.strip_prefix("vars:"))
        .ok_or_else(|| entry_error(name, "first line must be `vars: ...`"))?;
    let context = parse_vars(vars.trim())?;
    let body = lines.next().ok_or_else(|| entry_error(name, "missing ideal line"))?;
    let (operation, expr) = if let Some(rest) = body.strip_prefix("closure") {
        (Operation::Closure, rest)
    } else if let Some(rest) = body.strip_prefix("reduce") {
        (Operation::Reduce, rest)
    } else {
        (Operation::Verdict, body)
    };
    let ideal = parse_ideal(expr, &context).map_err(|e| entry_error(name, e))?;
    let expect = match lines.next() {
        Some(l) => Some(
            l.strip_prefix("expect:")
                .ok_or_else(|| entry_error(name, "third line must be `expect: ...`"))?
                .trim()
                .to_string(),
        ),
        None => None,
    };
    if lines.next().is_some() {
        return Err(entry_error(name, "unexpected extra lines"));
    }
    Ok(CorpusEntry { name: name.to_string(), context, operation, ideal, expect })
}

pub fn corpus_dir(root: &Path) -> PathBuf {
    root.join("corpus")
}

pub fn golden_path(root: &Path, name: &str) -> PathBuf {
    root.join("golden").join(format!("{name}.json"))
}

/// All entries under `root/corpus`, sorted by name.
pub fn load(root: &Path) -> Result<Vec<CorpusEntry>> {
    let dir = corpus_dir(root);
    let mut paths: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let name = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
            parse_entry(name, &fs::read_to_string(p)?)
        })
        .collect()
}

/// The output compared against the golden file. Timing is left out.
pub fn evaluate(entry: &CorpusEntry) -> Result<Value> {
    Ok(match entry.operation {
        Operation::Verdict => {
            let mut v = report::verdict(&verdict(&entry.ideal, &VerdictOptions::default())?);
            if let Some(m) = v.as_object_mut() {
                m.remove("timing_ms");
            }
            v
        }
        Operation::Closure => json!({ "operation": "closure", "result": report::ideal(&integral_closure(&entry.ideal)?) }),
        Operation::Reduce => {
            let (reduced, _) = eliminate_variable_generators(&entry.ideal);
            json!({ "operation": "reduce", "result": report::ideal(&reduced) })
        }
    })
}

/// Does `output` satisfy the entry's `expect:` line? `None` if there is none.
pub fn expectation_holds(entry: &CorpusEntry, output: &Value) -> Result<Option<bool>> {
    let Some(expect) = &entry.expect else { return Ok(None) };
    Ok(Some(match entry.operation {
        Operation::Verdict => output["status"].as_str() == Some(expect.as_str()),
        Operation::Closure | Operation::Reduce => {
            let ctx = match output["result"]["vars"].as_array() {
                Some(v) => RingContext::new(v.iter().filter_map(|x| x.as_str()))?,
                None => return Ok(Some(false)),
            };
            // a reduction may drop every variable; compare text then
            if ctx.nvars() == 0 {
                output["result"]["text"].as_str() == Some(expect.as_str())
            } else {
                let want = parse_ideal(expect, &ctx)?;
                output["result"]["text"].as_str() == Some(want.to_string().as_str())
            }
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenState {
    Match,
    Mismatch,
    Missing,
}

#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub name: String,
    pub output: Value,
    pub expectation: Option<bool>,
    pub golden: GoldenState,
}

impl EntryOutcome {
    pub fn ok(&self) -> bool {
        self.expectation != Some(false) && self.golden == GoldenState::Match
    }
}

pub fn check(root: &Path, entry: &CorpusEntry) -> Result<EntryOutcome> {
    let output = evaluate(entry)?;
    let expectation = expectation_holds(entry, &output)?;
    let path = golden_path(root, &entry.name);
    let golden = match fs::read_to_string(&path) {
        Ok(text) => {
            let stored: Value = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
            if stored == output {
                GoldenState::Match
            } else {
                GoldenState::Mismatch
            }
        }
        Err(_) => GoldenState::Missing,
    };
    Ok(EntryOutcome { name: entry.name.clone(), output, expectation, golden })
}

pub fn run_all(root: &Path) -> Result<Vec<EntryOutcome>> {
    load(root)?.iter().map(|e| check(root, e)).collect()
}

/// Rewrite every golden file from the current outputs. Entries whose
/// `expect:` line fails are refused.
pub fn bless(root: &Path) -> Result<Vec<String>> {
    let dir = root.join("golden");
    fs::create_dir_all(&dir)?;
    let mut written = Vec::new();
    for entry in load(root)? {
        let output = evaluate(&entry)?;
        if expectation_holds(&entry, &output)? == Some(false) {
            return Err(entry_error(&entry.name, "output contradicts its expect line; not blessing"));
        }
        let text = serde_json::to_string_pretty(&output).map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(golden_path(root, &entry.name), text + "\n")?;
        written.push(entry.name);
    }
    Ok(written)
}
