//! Content-addressed JSON cache for character tables and structure constants.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::abelian::GroupDescriptor;
use crate::arith::{Cyclotomic, Rational};
use crate::chartab::{CharacterTable, ClassFunction, ClassGeometry};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "WREATH_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTableFile {
    pub format_version: u32,
    pub kind: String,
    pub descriptor: GroupDescriptor,
    pub descriptor_hash: String,
    pub degree: usize,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub representatives: Vec<String>,
    pub conductor: u32,
    /// values[character][class] = power-basis coefficients as exact rationals.
    pub values: Vec<Vec<Vec<String>>>,
}

impl CharTableFile {
    pub fn new(descriptor: &GroupDescriptor, degree: usize, representatives: Vec<String>, table: &CharacterTable) -> Self {
        CharTableFile {
            format_version: FORMAT_VERSION,
            kind: "char_table".into(),
            descriptor: descriptor.clone(),
            descriptor_hash: descriptor.hash_hex(),
            degree,
            order: table.geometry().order,
            class_sizes: table.geometry().sizes.clone(),
            representatives,
            conductor: table.conductor(),
            values: table
                .irreducibles()
                .iter()
                .map(|chi| chi.values().iter().map(|v| v.coeffs().iter().map(Rational::to_string).collect()).collect())
                .collect(),
        }
    }

    /// Rebuilds the table in stored row order.
    pub fn to_table(&self) -> Result<CharacterTable> {
        let geometry = ClassGeometry { order: self.order, sizes: self.class_sizes.clone() };
        let rows = self
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coeffs| {
                        let parsed = coeffs
                            .iter()
                            .map(|c| Rational::from_str(c).map_err(|e| Error::Serde(format!("bad rational {c:?}: {e}"))))
                            .collect::<Result<Vec<_>>>()?;
                        Cyclotomic::from_coeffs(self.conductor, parsed)
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(ClassFunction::new)
            })
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::from_stored(geometry, self.conductor, rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisLabels {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
    pub product: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlabFile {
    pub format_version: u32,
    pub kind: String,
    pub descriptor: GroupDescriptor,
    pub descriptor_hash: String,
    pub k: usize,
    pub l: usize,
    /// Irreducible degrees of G_k, G_l and G_{k+l}, in basis order.
    pub basis_labels: BasisLabels,
    /// constants[i][j][t]
    pub constants: Vec<Vec<Vec<i64>>>,
}

pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    Ok(serde_json::from_str(s)?)
}

#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir, hits: AtomicUsize::new(0), misses: AtomicUsize::new(0) })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn key(descriptor: &GroupDescriptor, kind: &str, part: &str) -> String {
        let material = format!("{}|{kind}|{part}|v{FORMAT_VERSION}", descriptor.canonical_json());
        let digest = Sha256::digest(material.as_bytes());
        digest.iter().take(12).map(|b| format!("{b:02x}")).collect()
    }

    pub fn table_path(&self, descriptor: &GroupDescriptor, degree: usize) -> PathBuf {
        self.dir.join(format!("char_table-{}.json", Self::key(descriptor, "char_table", &degree.to_string())))
    }

    pub fn slab_path(&self, descriptor: &GroupDescriptor, k: usize, l: usize) -> PathBuf {
        self.dir.join(format!("structure_constants-{}.json", Self::key(descriptor, "structure_constants", &format!("{k},{l}"))))
    }

    fn read<T: for<'de> Deserialize<'de>>(&self, path: &Path) -> Option<T> {
        let text = fs::read_to_string(path).ok()?;
        match from_json(&text) {
            Ok(v) => Some(v),
            Err(e) => {
                log::warn!("ignoring unreadable cache entry {}: {e}", path.display());
                None
            }
        }
    }

    /// Loads a table entry if present and its format version and descriptor match.
    pub fn load_table(&self, descriptor: &GroupDescriptor, degree: usize) -> Option<CharTableFile> {
        let path = self.table_path(descriptor, degree);
        let entry: Option<CharTableFile> = self.read(&path);
        let entry = entry
            .filter(|f| f.format_version == FORMAT_VERSION && f.descriptor == *descriptor && f.degree == degree && f.kind == "char_table");
        self.count(entry.is_some(), "char_table", degree.to_string());
        entry
    }

    pub fn store_table(&self, file: &CharTableFile) -> Result<()> {
        self.write_atomic(&self.table_path(&file.descriptor, file.degree), &to_canonical_json(file)?)
    }

    pub fn load_slab(&self, descriptor: &GroupDescriptor, k: usize, l: usize) -> Option<SlabFile> {
        let entry: Option<SlabFile> = self.read(&self.slab_path(descriptor, k, l));
        let entry = entry.filter(|f| f.format_version == FORMAT_VERSION && f.descriptor == *descriptor && (f.k, f.l) == (k, l));
        self.count(entry.is_some(), "structure_constants", format!("{k},{l}"));
        entry
    }

    pub fn store_slab(&self, file: &SlabFile) -> Result<()> {
        self.write_atomic(&self.slab_path(&file.descriptor, file.k, file.l), &to_canonical_json(file)?)
    }

    fn count(&self, hit: bool, kind: &str, part: String) {
        if hit {
            self.hits.fetch_add(1, Ordering::Relaxed);
            log::info!("cache hit: {kind} {part}");
        } else {
            self.misses.fetch_add(1, Ordering::Relaxed);
            log::debug!("cache miss: {kind} {part}");
        }
    }

    /// Write-to-temp-then-rename.
    fn write_atomic(&self, path: &Path, contents: &str) -> Result<()> {
        static COUNTER: AtomicUsize = AtomicUsize::new(0);
        let unique = COUNTER.fetch_add(1, Ordering::Relaxed);
        let tmp = path.with_extension(format!("tmp{}-{unique}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(contents.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::TowerContext;
    use std::sync::Arc;

    fn g42() -> GroupDescriptor {
        GroupDescriptor::new(vec![4], vec![vec![2]])
    }

    #[test]
    fn table_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        let ctx = TowerContext::new(g42(), 2).unwrap();
        let d = ctx.degree(2).unwrap();
        let file = CharTableFile::new(&g42(), 2, d.representative_words(), &d.table);
        assert!(cache.load_table(&g42(), 2).is_none());
        cache.store_table(&file).unwrap();
        let back = cache.load_table(&g42(), 2).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_table().unwrap(), d.table);
        assert_eq!((cache.hits(), cache.misses()), (1, 1));
        assert_eq!(fs::read_to_string(cache.table_path(&g42(), 2)).unwrap(), to_canonical_json(&file).unwrap());
    }

    #[test]
    fn version_or_descriptor_mismatch_invalidates() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path()).unwrap();
        let ctx = TowerContext::new(g42(), 1).unwrap();
        let d = ctx.degree(1).unwrap();
        let mut file = CharTableFile::new(&g42(), 1, d.representative_words(), &d.table);
        file.format_version = FORMAT_VERSION + 1;
        cache.store_table(&file).unwrap();
        assert!(cache.load_table(&g42(), 1).is_none());

        let other = GroupDescriptor::new(vec![4], vec![]);
        assert_ne!(cache.table_path(&g42(), 1), cache.table_path(&other, 1));
        fs::write(cache.table_path(&g42(), 1), "{ not json").unwrap();
        assert!(cache.load_table(&g42(), 1).is_none());
    }

    #[test]
    fn slabs_are_reused() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Arc::new(Cache::new(dir.path()).unwrap());
        let cold = TowerContext::new(g42(), 2).unwrap().with_cache(cache.clone());
        let s = cold.structure_constants(1, 1).unwrap();
        let warm = TowerContext::new(g42(), 2).unwrap().with_cache(cache.clone());
        let hits = cache.hits();
        assert_eq!(*warm.structure_constants(1, 1).unwrap(), *s);
        assert!(cache.hits() > hits);
        assert!(cache.load_slab(&g42(), 1, 1).is_some());
    }
}
