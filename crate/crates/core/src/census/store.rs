//! JSON persistence, the on-disk cache and CSV export.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{
    build_census_with, CensusCounts, CensusTable, Provenance, ENGINE_VERSION, SCHEMA_VERSION,
};
use crate::error::{Error, Result};
use crate::exactnum::format_rational;
use crate::exactnum::rational::serde_ratio;
use crate::weilpoly::PrimePower;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "WEIL_CACHE_DIR";

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Caps {
    max_g_region: usize,
    max_g_all: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct CensusFile {
    schema_version: u32,
    engine_version: String,
    q: PrimePower,
    g: usize,
    #[serde(with = "serde_ratio")]
    epsilon: BigRational,
    restriction: String,
    counts: CensusCounts,
    caps: Caps,
    generated_at: Option<String>,
}

/// Saves with the current UTC time in `generated_at`.
pub fn save_census(table: &CensusTable, path: &Path) -> Result<()> {
    save_census_with(table, path, Some(utc_timestamp()))
}

/// Current UTC time, RFC 3339 to the second.
pub fn utc_timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Writes `table` to a sibling temporary file and renames it over `path`.
pub fn save_census_with(
    table: &CensusTable,
    path: &Path,
    generated_at: Option<String>,
) -> Result<()> {
    write_atomic(path, census_json(table, generated_at).as_bytes())
}

/// The JSON document `save_census_with` writes.
pub fn census_json(table: &CensusTable, generated_at: Option<String>) -> String {
    let file = CensusFile {
        schema_version: SCHEMA_VERSION,
        engine_version: table.provenance.engine_version.clone(),
        q: table.q,
        g: table.g,
        epsilon: table.epsilon.clone(),
        restriction: "ordinary".into(),
        counts: table.counts.clone(),
        caps: Caps {
            max_g_region: table.provenance.max_g_region,
            max_g_all: table.provenance.max_g_all,
        },
        generated_at,
    };
    let mut s = serde_json::to_string_pretty(&file).expect("census serializes");
    s.push('\n');
    s
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn byte_offset(text: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text
        .split_inclusive(|&b| b == b'\n')
        .take(line - 1)
        .map(<[u8]>::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}

/// Loads a census file. Corrupt input is a [`Error::Parse`] with a byte offset; a file written
/// by another engine or schema version is [`Error::StaleVersion`].
pub fn load_census(path: &Path) -> Result<CensusTable> {
    let bytes = fs::read(path)?;
    let file: CensusFile = serde_json::from_slice(&bytes).map_err(|e| Error::Parse {
        offset: byte_offset(&bytes, e.line(), e.column()),
        message: e.to_string(),
    })?;
    if file.schema_version != SCHEMA_VERSION || file.engine_version != ENGINE_VERSION {
        return Err(Error::StaleVersion {
            found: format!("{} (schema {})", file.engine_version, file.schema_version),
            expected: format!("{ENGINE_VERSION} (schema {SCHEMA_VERSION})"),
        });
    }
    Ok(CensusTable {
        q: file.q,
        g: file.g,
        epsilon: file.epsilon,
        counts: file.counts,
        provenance: Provenance {
            engine_version: file.engine_version,
            max_g_region: file.caps.max_g_region,
            max_g_all: file.caps.max_g_all,
        },
    })
}

fn cache_path(dir: &Path, q: PrimePower, g: usize, eps: &BigRational) -> PathBuf {
    dir.join(format!(
        "census-q{q}-g{g}-eps{}_{}.json",
        eps.numer(),
        eps.denom()
    ))
}

/// Census from `$WEIL_CACHE_DIR` when a current entry exists, computed (and stored) otherwise.
/// Stale or unreadable entries are recomputed and replaced.
pub fn cached_census(
    q: PrimePower,
    g: usize,
    epsilon: &BigRational,
    parts: usize,
) -> Result<CensusTable> {
    let Some(dir) = std::env::var_os(CACHE_ENV).map(PathBuf::from) else {
        return build_census_with(q, g, epsilon, parts);
    };
    let path = cache_path(&dir, q, g, epsilon);
    if let Ok(t) = load_census(&path) {
        if t.q == q && t.g == g && &t.epsilon == epsilon {
            return Ok(t);
        }
    }
    let table = build_census_with(q, g, epsilon, parts)?;
    fs::create_dir_all(&dir)?;
    save_census(&table, &path)?;
    Ok(table)
}

pub fn census_csv_header() -> &'static str {
    "q,g,epsilon,x_g,y_g,y_gn,m_ord,s_ord,a_L_ord,a_S_ord,s_ord_ratio,engine_version"
}

/// One CSV row; `y_gn` lists `|Y_{g,n}|` for `n = 1, 2, …` separated by `;`.
pub fn census_csv_row(t: &CensusTable) -> String {
    let c = &t.counts;
    let ygn: Vec<String> = c.y_gn.iter().map(u64::to_string).collect();
    let ratio = t
        .simple_ratio()
        .map(|r| format_rational(&r))
        .unwrap_or_else(|| "undefined".into());
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        t.q,
        t.g,
        format_rational(&t.epsilon),
        c.x_g,
        c.y_g,
        ygn.join(";"),
        c.m_ord,
        c.s_ord,
        c.a_l_ord,
        c.a_s_ord,
        ratio,
        t.provenance.engine_version
    )
}
