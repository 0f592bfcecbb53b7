//! Optional on-disk cache of full character values.
//!
//! Line-oriented text format, versioned:
//!
//! ```text
//! symgap-charcache 1
//! 16|11,5|5^3 1^1|-364
//! ```
//!
//! Records are written sorted, so a cache saved twice from the same state
//! is byte-identical. A version mismatch on load is an error, never a
//! silent recompute.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition};

const MAGIC: &str = "symgap-charcache";
const VERSION: u32 = 1;

/// Thread-safe character value cache with optional file persistence.
#[derive(Default)]
pub struct CharCache {
    entries: Mutex<HashMap<(Partition, CycleType), BigInt>>,
}

impl CharCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        let mut lines = BufReader::new(file).lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache("empty cache file".into()))??;
        let mut it = header.split_whitespace();
        if it.next() != Some(MAGIC) {
            return Err(Error::Cache(format!("not a character cache: {header:?}")));
        }
        let version: u32 = it
            .next()
            .ok_or_else(|| Error::Cache("missing version".into()))?
            .parse()
            .map_err(|e| Error::Cache(format!("bad version: {e}")))?;
        if version != VERSION {
            return Err(Error::Cache(format!(
                "format version {version} does not match supported version {VERSION}"
            )));
        }
        let mut entries = HashMap::new();
        for (lineno, line) in lines.enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('|').collect();
            if fields.len() != 4 {
                return Err(Error::Cache(format!("malformed record at line {}", lineno + 2)));
            }
            let shape = Partition::from_str(fields[1])?;
            let class = CycleType::from_str(fields[2])?;
            let value = BigInt::from_str(fields[3])
                .map_err(|e| Error::Cache(format!("bad value at line {}: {e}", lineno + 2)))?;
            entries.insert((shape, class), value);
        }
        Ok(CharCache { entries: Mutex::new(entries) })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let entries = self.entries.lock().unwrap();
        let mut records: Vec<String> = entries
            .iter()
            .map(|((p, c), v)| format!("{}|{}|{}|{}", p.n(), p, c, v))
            .collect();
        records.sort();
        let mut out = std::fs::File::create(path)?;
        writeln!(out, "{MAGIC} {VERSION}")?;
        for r in records {
            writeln!(out, "{r}")?;
        }
        Ok(())
    }

    pub fn get(&self, shape: &Partition, class: &CycleType) -> Option<BigInt> {
        self.entries
            .lock()
            .unwrap()
            .get(&(shape.clone(), class.clone()))
            .cloned()
    }

    pub fn insert(&self, shape: Partition, class: CycleType, value: BigInt) {
        self.entries.lock().unwrap().insert((shape, class), value);
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
