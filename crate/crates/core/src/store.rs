//! On-disk memo table of validated volume polynomials.
//!
//! One JSON document per key and provenance:
//!
//! ```text
//! {"schema":1,"g":1,"n":1,"provenance":"seed",
//!  "terms":[{"l":[2],"pi":0,"re":"1/48","im":"0"}, ...]}
//! ```
//!
//! Terms are written in canonical order and rationals as strings, so
//! serialization is byte-deterministic. Every read re-validates the
//! polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::conerec::{check_dilaton, check_string};
use crate::error::{Error, Result};
use crate::exactpoly::{is_stable, parse_rational, ExactCoeff, Monomial, Poly, VolumePoly};

pub const SCHEMA_VERSION: u64 = 1;
pub const CACHE_ENV: &str = "WPVOL_CACHE";
pub const DEFAULT_CACHE_DIR: &str = "wpvol-cache";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Seed,
    Genus0Lift,
    Genus1Lift,
    Mirzakhani,
}

impl Provenance {
    pub const ALL: [Provenance; 4] =
        [Provenance::Seed, Provenance::Genus0Lift, Provenance::Genus1Lift, Provenance::Mirzakhani];

    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Seed => "seed",
            Provenance::Genus0Lift => "genus0_lift",
            Provenance::Genus1Lift => "genus1_lift",
            Provenance::Mirzakhani => "mirzakhani",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoreEntry {
    pub key: (u32, usize),
    pub poly: VolumePoly,
    pub provenance: Provenance,
    pub schema_version: u64,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    l: Vec<u32>,
    pi: u32,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    schema: u64,
    g: u32,
    n: usize,
    provenance: Provenance,
    terms: Vec<TermDoc>,
}

impl StoreEntry {
    pub fn new(poly: VolumePoly, provenance: Provenance) -> Self {
        StoreEntry { key: poly.key(), poly, provenance, schema_version: SCHEMA_VERSION }
    }

    pub fn to_json(&self) -> Result<String> {
        let terms = self
            .poly
            .poly()
            .terms()
            .map(|(m, c)| TermDoc { l: m.l_exps.clone(), pi: m.pi_exp, re: c.re.to_string(), im: c.im.to_string() })
            .collect();
        let doc =
            EntryDoc { schema: self.schema_version, g: self.key.0, n: self.key.1, provenance: self.provenance, terms };
        let mut text = serde_json::to_string(&doc)?;
        text.push('\n');
        Ok(text)
    }

    /// Parses and validates a stored document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: EntryDoc = serde_json::from_str(text)?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::SchemaVersion { found: doc.schema, expected: SCHEMA_VERSION });
        }
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in doc.terms {
            if t.l.len() != doc.n {
                return Err(Error::InvalidVolume {
                    g: doc.g,
                    n: doc.n,
                    reason: format!("term with {} exponents", t.l.len()),
                });
            }
            let c = ExactCoeff::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
            terms.push((Monomial::new(t.l, t.pi), c));
        }
        let poly = VolumePoly::new(doc.g, doc.n, Poly::from_terms(doc.n, terms)?)?;
        Ok(StoreEntry { key: (doc.g, doc.n), poly, provenance: doc.provenance, schema_version: doc.schema })
    }
}

/// Cache directory: the flag, else `$WPVOL_CACHE`, else `./wpvol-cache`.
pub fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => PathBuf::from(DEFAULT_CACHE_DIR),
    }
}

fn file_name(key: (u32, usize), provenance: Provenance) -> String {
    format!("v_{}_{}.{}.json", key.0, key.1, provenance.as_str())
}

/// Outcome of one relation or file check in [`VolumeStore::verify_all`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub relation: String,
    pub g: u32,
    pub n: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub entries: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn ok(&self) -> bool {
        self.failures() == 0
    }
}

/// Memo table, optionally backed by a directory.
///
/// Writes need `&mut self`; each file is written to a temporary and renamed
/// into place.
#[derive(Debug, Default)]
pub struct VolumeStore {
    dir: Option<PathBuf>,
    memory: HashMap<((u32, usize), Provenance), StoreEntry>,
}

impl VolumeStore {
    pub fn in_memory() -> Self {
        VolumeStore::default()
    }

    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(VolumeStore { dir: Some(dir), memory: HashMap::new() })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn get_with(&self, key: (u32, usize), provenance: Provenance) -> Result<Option<StoreEntry>> {
        if let Some(e) = self.memory.get(&(key, provenance)) {
            return Ok(Some(e.clone()));
        }
        let Some(dir) = &self.dir else { return Ok(None) };
        let path = dir.join(file_name(key, provenance));
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let entry = StoreEntry::from_json(&text)?;
        if entry.key != key || entry.provenance != provenance {
            return Err(Error::Store(format!("{} holds {:?} from {:?}", path.display(), entry.key, entry.provenance)));
        }
        Ok(Some(entry))
    }

    /// Any stored entry for `key`, trying provenances in a fixed order.
    pub fn get(&self, key: (u32, usize)) -> Result<Option<StoreEntry>> {
        for p in Provenance::ALL {
            if let Some(e) = self.get_with(key, p)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    pub fn put(&mut self, entry: StoreEntry) -> Result<()> {
        let (g, n) = entry.key;
        if !is_stable(g, n) {
            return Err(Error::Unstable { g, n });
        }
        if entry.poly.key() != entry.key {
            return Err(Error::Store(format!("entry key {:?} holds V{:?}", entry.key, entry.poly.key())));
        }
        if entry.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion { found: entry.schema_version, expected: SCHEMA_VERSION });
        }
        for p in Provenance::ALL {
            if let Some(existing) = self.get_with(entry.key, p)? {
                if existing.poly != entry.poly {
                    let diff = entry.poly.poly().sub(existing.poly.poly())?;
                    return Err(Error::ProvenanceConflict { g, n, diff });
                }
            }
        }
        if let Some(dir) = &self.dir {
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(entry.to_json()?.as_bytes())?;
            tmp.persist(dir.join(file_name(entry.key, entry.provenance))).map_err(|e| e.error)?;
        }
        self.memory.insert((entry.key, entry.provenance), entry);
        Ok(())
    }

    fn stored_files(&self) -> Result<Vec<PathBuf>> {
        let Some(dir) = &self.dir else { return Ok(Vec::new()) };
        let mut files = Vec::new();
        for item in fs::read_dir(dir)? {
            let path = item?.path();
            if path.extension().is_some_and(|e| e == "json") {
                files.push(path);
            }
        }
        files.sort();
        Ok(files)
    }

    /// Every readable entry; unreadable files are an error.
    pub fn entries(&self) -> Result<Vec<StoreEntry>> {
        let mut out: BTreeMap<((u32, usize), Provenance), StoreEntry> = BTreeMap::new();
        for path in self.stored_files()? {
            let e = StoreEntry::from_json(&fs::read_to_string(&path)?)?;
            out.insert((e.key, e.provenance), e);
        }
        for (k, e) in &self.memory {
            out.entry(*k).or_insert_with(|| e.clone());
        }
        Ok(out.into_values().collect())
    }

    /// Re-validates every entry, then checks provenance agreement and the
    /// string and dilaton relations between stored consecutive keys.
    pub fn verify_all(&self) -> Result<VerifyReport> {
        let mut report = VerifyReport::default();
        let mut by_key: BTreeMap<(u32, usize), Vec<StoreEntry>> = BTreeMap::new();
        for path in self.stored_files()? {
            let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            report.entries += 1;
            match fs::read_to_string(&path).map_err(Error::from).and_then(|t| StoreEntry::from_json(&t)) {
                Ok(e) => by_key.entry(e.key).or_default().push(e),
                Err(err) => report.checks.push(CheckOutcome {
                    relation: "read".into(),
                    g: 0,
                    n: 0,
                    passed: false,
                    detail: Some(format!("{name}: {err}")),
                }),
            }
        }
        if self.dir.is_none() {
            for e in self.memory.values() {
                report.entries += 1;
                by_key.entry(e.key).or_default().push(e.clone());
            }
        }
        for (&(g, n), entries) in &by_key {
            let first = &entries[0].poly;
            let agree = entries.iter().all(|e| e.poly == *first);
            report.checks.push(CheckOutcome {
                relation: "provenance".into(),
                g,
                n,
                passed: agree,
                detail: (!agree).then(|| "entries from different provenances differ".into()),
            });
        }
        for (&(g, n), entries) in &by_key {
            let Some(upper) = by_key.get(&(g, n + 1)) else { continue };
            let (v, w) = (&entries[0].poly, &upper[0].poly);
            for (relation, check) in [("string", check_string(w, v)), ("dilaton", check_dilaton(w, v))] {
                let outcome = match check {
                    Ok(c) => CheckOutcome {
                        relation: relation.into(),
                        g,
                        n,
                        passed: c.holds(),
                        detail: (!c.holds()).then(|| c.difference.to_string()),
                    },
                    Err(err) => {
                        CheckOutcome { relation: relation.into(), g, n, passed: false, detail: Some(err.to_string()) }
                    }
                };
                report.checks.push(outcome);
            }
        }
        Ok(report)
    }

    /// Removes every stored document. Returns how many were removed.
    pub fn clear(&mut self) -> Result<usize> {
        let files = self.stored_files()?;
        for path in &files {
            fs::remove_file(path)?;
        }
        let removed = if self.dir.is_some() { files.len() } else { self.memory.len() };
        self.memory.clear();
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conerec::{genus0_lift, seed_v03, seed_v11};

    #[test]
    fn seed_document() {
        let e = StoreEntry::new(seed_v11(), Provenance::Seed);
        let text = e.to_json().unwrap();
        assert_eq!(
            text,
            "{\"schema\":1,\"g\":1,\"n\":1,\"provenance\":\"seed\",\"terms\":[\
             {\"l\":[2],\"pi\":0,\"re\":\"1/48\",\"im\":\"0\"},\
             {\"l\":[0],\"pi\":2,\"re\":\"1/12\",\"im\":\"0\"}]}\n"
        );
        assert_eq!(StoreEntry::from_json(&text).unwrap(), e);
    }

    #[test]
    fn rejects_unstable_and_bad_schema() {
        let mut store = VolumeStore::in_memory();
        let mut e = StoreEntry::new(seed_v03(), Provenance::Seed);
        e.key = (0, 2);
        assert!(matches!(store.put(e), Err(Error::Unstable { .. })));
        assert!(store.get((0, 2)).unwrap().is_none());
        let text =
            StoreEntry::new(seed_v11(), Provenance::Seed).to_json().unwrap().replace("\"schema\":1", "\"schema\":7");
        assert!(matches!(StoreEntry::from_json(&text), Err(Error::SchemaVersion { found: 7, .. })));
    }

    #[test]
    fn corrupted_coefficient_is_detected() {
        let text = StoreEntry::new(seed_v11(), Provenance::Seed).to_json().unwrap().replace("\"l\":[2]", "\"l\":[3]");
        assert!(StoreEntry::from_json(&text).is_err());
    }

    #[test]
    fn provenance_conflict_is_fatal() {
        let mut store = VolumeStore::in_memory();
        let v04 = genus0_lift(&seed_v03()).unwrap();
        store.put(StoreEntry::new(v04.clone(), Provenance::Genus0Lift)).unwrap();
        store.put(StoreEntry::new(v04.clone(), Provenance::Mirzakhani)).unwrap();
        let doubled = VolumePoly::new(0, 4, v04.poly().scale_rational(&crate::exactpoly::int(2))).unwrap();
        assert!(matches!(
            store.put(StoreEntry::new(doubled, Provenance::Mirzakhani)),
            Err(Error::ProvenanceConflict { g: 0, n: 4, .. })
        ));
    }

    #[test]
    fn directory_round_trip_and_verify() {
        let dir = tempfile::tempdir().unwrap();
        let mut store = VolumeStore::open(dir.path()).unwrap();
        assert_eq!(store.verify_all().unwrap().entries, 0);
        let v03 = seed_v03();
        let v04 = genus0_lift(&v03).unwrap();
        store.put(StoreEntry::new(v03, Provenance::Seed)).unwrap();
        store.put(StoreEntry::new(v04.clone(), Provenance::Genus0Lift)).unwrap();

        let reopened = VolumeStore::open(dir.path()).unwrap();
        assert_eq!(reopened.get((0, 4)).unwrap().unwrap().poly, v04);
        let report = reopened.verify_all().unwrap();
        assert_eq!(report.entries, 2);
        assert!(report.ok());
        assert!(report.checks.iter().any(|c| c.relation == "dilaton"));
    }

    #[test]
    fn cache_dir_precedence() {
        assert_eq!(resolve_cache_dir(Some(Path::new("/x"))), PathBuf::from("/x"));
    }
}
