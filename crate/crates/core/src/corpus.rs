//! Named presentations: the built-in corpus and directories of user files.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::pc::{
    check_consistency, parse_presentations, ConsistencyReport, ParseError, PcPresentation,
};

const BUILTIN_FILES: [(&str, &str); 6] = [
    ("abelian.pcg", include_str!("../corpus/abelian.pcg")),
    (
        "extraspecial.pcg",
        include_str!("../corpus/extraspecial.pcg"),
    ),
    (
        "maximal-class.pcg",
        include_str!("../corpus/maximal-class.pcg"),
    ),
    ("small-class.pcg", include_str!("../corpus/small-class.pcg")),
    ("paper-3^7.pcg", include_str!("../corpus/paper-3^7.pcg")),
    (
        "mutant-class3-3^7.pcg",
        include_str!("../corpus/mutant-class3-3^7.pcg"),
    ),
];

/// The order-2187 presentation exactly as printed, which is inconsistent.
pub const PRINTED_PAPER_FIXTURE: &str = include_str!("../fixtures/paper-3^7-printed.pcg");

/// Name of the order-2187 example group in the built-in corpus.
pub const PAPER_GROUP: &str = "paper-3^7";

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub presentation: Arc<PcPresentation>,
    /// Comment lines directly above the `group` line.
    pub provenance: String,
    pub source: String,
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        self.presentation.name()
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}: {error}")]
    Parse { file: String, error: ParseError },
    #[error("{file}: group {name} failed the consistency check")]
    Inconsistent {
        file: String,
        name: String,
        report: Box<ConsistencyReport>,
    },
    #[error("duplicate group name {0}")]
    Duplicate(String),
    #[error("no group named {0}")]
    Unknown(String),
}

/// Comment block directly above each `group` line, keyed by group name.
pub fn provenance_notes(text: &str) -> HashMap<String, String> {
    let mut notes = HashMap::new();
    let mut block: Vec<&str> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(c) = t.strip_prefix('#') {
            block.push(c.strip_prefix(' ').unwrap_or(c));
        } else if let Some(name) = t.strip_prefix("group ") {
            let name = name.split('#').next().unwrap_or("").trim();
            notes.insert(name.to_string(), block.join("\n"));
            block.clear();
        } else {
            block.clear();
        }
    }
    notes
}

/// Parses one file's text into entries, without the consistency gate.
pub fn parse_entries(file: &str, text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let notes = provenance_notes(text);
    let presentations = parse_presentations(text).map_err(|error| CorpusError::Parse {
        file: file.to_string(),
        error,
    })?;
    Ok(presentations
        .into_iter()
        .map(|p| CorpusEntry {
            provenance: notes.get(p.name()).cloned().unwrap_or_default(),
            presentation: Arc::new(p),
            source: file.to_string(),
        })
        .collect())
}

fn gate(entry: &CorpusEntry) -> Result<(), CorpusError> {
    let report = check_consistency(&entry.presentation);
    if report.passed() {
        Ok(())
    } else {
        Err(CorpusError::Inconsistent {
            file: entry.source.clone(),
            name: entry.name().to_string(),
            report: Box::new(report),
        })
    }
}

/// Named, consistency-checked presentations ordered by name.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    entries: BTreeMap<String, CorpusEntry>,
}

impl Corpus {
    /// The built-in corpus. Parsed and checked once per process.
    pub fn builtin() -> &'static Corpus {
        static BUILTIN: OnceLock<Corpus> = OnceLock::new();
        BUILTIN.get_or_init(|| {
            let mut c = Corpus::default();
            for (file, text) in BUILTIN_FILES {
                for e in parse_entries(file, text).expect("built-in corpus parses") {
                    c.insert(e).expect("built-in corpus is consistent");
                }
            }
            c
        })
    }

    /// Adds an entry after the consistency check.
    pub fn insert(&mut self, entry: CorpusEntry) -> Result<(), CorpusError> {
        if self.entries.contains_key(entry.name()) {
            return Err(CorpusError::Duplicate(entry.name().to_string()));
        }
        gate(&entry)?;
        self.entries.insert(entry.name().to_string(), entry);
        Ok(())
    }

    /// Loads every `*.pcg` file of a directory (sorted by file name).
    /// Files that fail to parse or check are returned alongside instead of
    /// aborting the load.
    pub fn from_dir(dir: &Path) -> Result<(Corpus, Vec<CorpusError>), CorpusError> {
        let io = |source| CorpusError::Io {
            path: dir.to_path_buf(),
            source,
        };
        let mut files: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "pcg"))
            .collect();
        files.sort();
        let mut corpus = Corpus::default();
        let mut errors = Vec::new();
        for path in files {
            match load_file(&path) {
                Ok(entries) => {
                    for e in entries {
                        if let Err(err) = corpus.insert(e) {
                            errors.push(err);
                        }
                    }
                }
                Err(err) => errors.push(err),
            }
        }
        Ok((corpus, errors))
    }

    pub fn get(&self, name: &str) -> Result<&CorpusEntry, CorpusError> {
        self.entries
            .get(name)
            .ok_or_else(|| CorpusError::Unknown(name.to_string()))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.values()
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Union of two corpora; names must not clash.
    pub fn merged(&self, other: &Corpus) -> Result<Corpus, CorpusError> {
        let mut out = self.clone();
        for e in other.entries() {
            if out.entries.contains_key(e.name()) {
                return Err(CorpusError::Duplicate(e.name().to_string()));
            }
            out.entries.insert(e.name().to_string(), e.clone());
        }
        Ok(out)
    }
}

/// Reads and parses a presentation file (no consistency gate).
pub fn load_file(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_entries(&path.display().to_string(), &text)
}
