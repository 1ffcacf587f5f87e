//! Multiplicity tables and their JSON / TSV encodings.
//!
//! JSON layout:
//!
//! ```text
//! {"context":{"kind":"rect","n":3,"k":2,"m":2,"t":1},
//!  "entries":[{"lambda":"3","mu":"2,1","mult":2}, ...]}
//! ```
//!
//! emitted compactly on one line followed by a newline. Square-matrix tables
//! use `"kind":"square"` and omit `mu`. Rows always appear in enumeration
//! order, so output is byte-for-byte reproducible.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// What a table describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TableContext {
    /// `V^λ_k ⊗ V^μ_m` in the hook component `t` of the `n`-th tensor power
    /// of `k × m` matrices.
    Rect { n: usize, k: usize, m: usize, t: usize },
    /// `V^λ_k` in the hook component `t` (optionally restricted to `j`
    /// skew-symmetric factors) of the `n`-th tensor power of square matrices.
    Square {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        t: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        j: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    pub mult: u64,
}

/// Nonzero multiplicities for one context, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTable {
    pub context: TableContext,
    pub entries: Vec<TableEntry>,
}

impl MultiplicityTable {
    pub fn new(context: TableContext) -> Self {
        MultiplicityTable {
            context,
            entries: Vec::new(),
        }
    }

    /// Appends an entry; zero multiplicities are dropped.
    pub fn push(&mut self, lambda: Partition, mu: Option<Partition>, mult: u64) {
        if mult > 0 {
            self.entries.push(TableEntry { lambda, mu, mult });
        }
    }

    /// Multiplicity for a key, zero when absent.
    pub fn get(&self, lambda: &Partition, mu: Option<&Partition>) -> u64 {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda && e.mu.as_ref() == mu)
            .map_or(0, |e| e.mult)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("tables always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            input: "<table json>".to_owned(),
            reason: e.to_string(),
        })
    }

    /// Tab-separated rows with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        match self.context {
            TableContext::Rect { .. } => out.push_str("lambda\tmu\tmult\n"),
            TableContext::Square { .. } => out.push_str("lambda\tmult\n"),
        }
        for e in &self.entries {
            match &e.mu {
                Some(mu) => writeln!(out, "{}\t{}\t{}", e.lambda, mu, e.mult),
                None => writeln!(out, "{}\t{}", e.lambda, e.mult),
            }
            .expect("writing to a String");
        }
        out
    }
}
