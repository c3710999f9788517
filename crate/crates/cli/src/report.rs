//! Deterministic `key: value` reports.

use std::fmt::Display;

use patchtop::{FinPoset, LevelSet, ProDensity, ProSpace, Subset};

pub struct Report {
    command: String,
    lines: Vec<(String, String)>,
}

impl Report {
    /// Starts a report echoing the command and the limits in force.
    pub fn new(command: &str, depth: usize, bound: usize) -> Self {
        let mut r = Report {
            command: command.to_string(),
            lines: Vec::new(),
        };
        r.push("command", command);
        r.push("depth", depth);
        r.push("bound", bound);
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    /// Plain mode: `key: value`. Porcelain mode: `command<TAB>key<TAB>value`.
    pub fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.lines {
            if porcelain {
                out.push_str(&format!("{}\t{k}\t{v}\n", self.command));
            } else {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        out
    }
}

/// `{a, b}`, identifiers sorted.
pub fn set(x: &FinPoset, s: &Subset) -> String {
    format!("{{{}}}", x.names(s).join(", "))
}

/// `level n {a, b}`.
pub fn level_set(space: &ProSpace, c: &LevelSet) -> String {
    match space.level(c.level()) {
        Ok(x) => format!("level {} {}", c.level(), set(x, c.members())),
        Err(_) => format!("level {} {:?}", c.level(), c.members()),
    }
}

/// Cover relations `a ~> b`, sorted.
pub fn covers(x: &FinPoset) -> String {
    let mut pairs: Vec<String> = x
        .covers()
        .into_iter()
        .map(|(a, b)| format!("{} ~> {}", x.id(a), x.id(b)))
        .collect();
    pairs.sort();
    if pairs.is_empty() {
        "none".into()
    } else {
        pairs.join(", ")
    }
}

pub fn points(x: &FinPoset) -> String {
    let mut ids: Vec<&str> = x.ids().iter().map(String::as_str).collect();
    ids.sort();
    ids.join(", ")
}

pub fn density(space: Option<&ProSpace>, d: &ProDensity) -> String {
    match d {
        ProDensity::DenseProven { .. } | ProDensity::DenseUpToDepth { .. } => d.tag().to_string(),
        ProDensity::NotDense { witness, .. } => match space {
            Some(p) => format!("{} missing {}", d.tag(), level_set(p, witness)),
            None => format!("{} missing {:?}", d.tag(), witness.members()),
        },
    }
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}
