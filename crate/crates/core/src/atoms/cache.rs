//! On-disk cache of alpha rows.
//!
//! The file is CSV with header `n,k,alpha`: one row per `(n, k)` with
//! `α_{n,k} > 0`, then a row `n,total,α_n` closing each `n`. Rows are sorted
//! by `n` and then `k`, so a given set of tables always serializes to the
//! same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use super::enumerate::AlphaTable;
use crate::error::{Error, Result};

const HEADER: [&str; 3] = ["n", "k", "alpha"];

#[derive(Clone, Debug)]
pub struct AlphaCache {
    path: PathBuf,
}

impl AlphaCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        AlphaCache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Every cached row; a missing file is an empty cache.
    pub fn load(&self) -> Result<BTreeMap<usize, AlphaTable>> {
        match fs::File::open(&self.path) {
            Ok(f) => read_tables(f),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(BTreeMap::new()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn get(&self, n: usize) -> Result<Option<AlphaTable>> {
        Ok(self.load()?.remove(&n))
    }

    /// Merges `tables` into the file, replacing rows with the same `n`.
    pub fn store(&self, tables: &[AlphaTable]) -> Result<()> {
        let mut all = self.load()?;
        for t in tables {
            all.insert(t.n, t.clone());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension("csv.tmp");
        {
            let f = fs::File::create(&tmp)?;
            write_tables(all.values(), f)?;
        }
        fs::rename(tmp, &self.path)?;
        Ok(())
    }
}

/// Writes rows in the cache schema.
pub fn write_tables<'a, W: Write>(
    tables: impl IntoIterator<Item = &'a AlphaTable>,
    out: W,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for t in tables {
        let n = t.n.to_string();
        for (k, &a) in t.counts.iter().enumerate() {
            if a > 0 {
                w.write_record([n.as_str(), &k.to_string(), &a.to_string()])?;
            }
        }
        w.write_record([n.as_str(), "total", &t.total().to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_tables<R: Read>(input: R) -> Result<BTreeMap<usize, AlphaTable>> {
    let mut r = csv::Reader::from_reader(input);
    if r.headers()?.iter().ne(HEADER) {
        return Err(Error::Cache("unexpected header".into()));
    }
    let bad = |what: &str| Error::Cache(what.to_string());
    let mut tables: BTreeMap<usize, AlphaTable> = BTreeMap::new();
    let mut totals: BTreeMap<usize, u64> = BTreeMap::new();
    for record in r.records() {
        let record = record?;
        if record.len() != 3 {
            return Err(bad("row must have three fields"));
        }
        let n: usize = record[0].parse().map_err(|_| bad("bad n"))?;
        let value: u64 = record[2].parse().map_err(|_| bad("bad count"))?;
        if &record[1] == "total" {
            totals.insert(n, value);
            continue;
        }
        let k: usize = record[1].parse().map_err(|_| bad("bad k"))?;
        if k == 0 || k > n + 1 {
            return Err(bad("k outside 1..=n+1"));
        }
        let t = tables
            .entry(n)
            .or_insert_with(|| AlphaTable::from_counts(n, vec![0; n + 2]));
        t.counts[k] = value;
    }
    for (n, t) in &tables {
        if totals.get(n) != Some(&t.total()) {
            return Err(Error::Cache(format!("total for n = {n} is missing or wrong")));
        }
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::alpha_tables;

    #[test]
    fn schema_and_round_trip() {
        let rows = alpha_tables(4).unwrap();
        let mut buf = Vec::new();
        write_tables(&rows[3..], &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text, "n,k,alpha\n4,1,1\n4,2,4\n4,3,4\n4,4,2\n4,total,11\n");
        let back = read_tables(buf.as_slice()).unwrap();
        assert_eq!(back[&4], rows[3]);
    }

    #[test]
    fn rejects_inconsistent_totals() {
        let text = "n,k,alpha\n2,1,1\n2,2,2\n2,total,4\n";
        assert!(read_tables(text.as_bytes()).is_err());
        assert!(read_tables("a,b,c\n".as_bytes()).is_err());
    }

    #[test]
    fn store_merges() {
        let dir = tempfile::tempdir().unwrap();
        let cache = AlphaCache::new(dir.path().join("alpha.csv"));
        assert!(cache.load().unwrap().is_empty());
        let rows = alpha_tables(6).unwrap();
        cache.store(&rows[..3]).unwrap();
        cache.store(&rows[2..]).unwrap();
        let loaded = cache.load().unwrap();
        assert_eq!(loaded.len(), 6);
        assert_eq!(cache.get(5).unwrap().unwrap(), rows[4]);
    }
}
