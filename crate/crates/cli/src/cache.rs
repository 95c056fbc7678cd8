//! Append-only JSON-lines journal of computed terms.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use menage_core::ExactInt;
use serde::{Deserialize, Serialize};

use crate::method::Method;

/// One computed raw seating count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub k: usize,
    pub n: usize,
    /// Decimal digits; values outgrow 64 bits quickly.
    pub value: String,
    pub method: Method,
    pub elapsed_ms: u64,
}

impl TermRecord {
    pub fn new(k: usize, n: usize, value: &ExactInt, method: Method, elapsed_ms: u64) -> Self {
        TermRecord { k, n, value: value.to_string(), method, elapsed_ms }
    }

    pub fn parsed_value(&self) -> Option<ExactInt> {
        self.value.parse::<ExactInt>().ok().filter(|v| v.sign() != num_bigint::Sign::Minus)
    }
}

type Key = (usize, usize, Method);

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    records: HashMap<Key, TermRecord>,
}

impl Cache {
    /// Reads the journal at `path`. A missing file is an empty cache;
    /// unreadable lines are skipped with a warning.
    pub fn load(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e),
        };
        let mut records = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<TermRecord>(line) {
                Ok(r) if r.parsed_value().is_some() => {
                    records.insert((r.k, r.n, r.method), r);
                }
                Ok(_) => log::warn!("{}:{}: ignoring record with bad value", path.display(), lineno + 1),
                Err(e) => log::warn!("{}:{}: ignoring corrupt line: {e}", path.display(), lineno + 1),
            }
        }
        Ok(Cache { path, records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &TermRecord> {
        self.records.values()
    }

    pub fn get(&self, k: usize, n: usize, method: Method) -> Option<&TermRecord> {
        self.records.get(&(k, n, method))
    }

    /// Appends `record` to the journal and remembers it.
    pub fn store(&mut self, record: TermRecord) -> io::Result<()> {
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let line = serde_json::to_string(&record).map_err(io::Error::other)?;
        writeln!(file, "{line}")?;
        self.records.insert((record.k, record.n, record.method), record);
        Ok(())
    }
}
