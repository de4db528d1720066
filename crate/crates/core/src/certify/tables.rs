//! Stored n_min tables, the symmetric-partition search and the diff report.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::certificate::{build_certificate, Grade};
use super::fm::CertificateInput;
use crate::catalog::EntryName;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableId {
    /// General type of the pointed moduli space itself.
    Mgn,
    /// Quotient by the full symmetric group.
    Msn,
    /// Quotient by `S_n × S_n`, the universal difference variety.
    Diff,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Mgn, TableId::Msn, TableId::Diff];

    pub fn as_str(self) -> &'static str {
        match self {
            TableId::Mgn => "mgn",
            TableId::Msn => "msn",
            TableId::Diff => "diff",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown table {s:?}; expected mgn, msn or diff")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub g: u32,
    pub n_min: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeTable {
    pub table: TableId,
    pub description: String,
    pub rows: Vec<TableRow>,
}

impl KnowledgeTable {
    pub fn n_min(&self, g: u32) -> Option<u32> {
        self.rows.iter().find(|r| r.g == g).map(|r| r.n_min)
    }

    pub fn genus_range(&self) -> (u32, u32) {
        (self.rows[0].g, self.rows[self.rows.len() - 1].g)
    }

    pub fn restricted(&self, gmin: u32, gmax: u32) -> KnowledgeTable {
        KnowledgeTable {
            rows: self.rows.iter().filter(|r| (gmin..=gmax).contains(&r.g)).copied().collect(),
            ..self.clone()
        }
    }
}

const MGN_JSON: &str = include_str!("../../data/mgn.json");
const MSN_JSON: &str = include_str!("../../data/msn.json");
const DIFF_JSON: &str = include_str!("../../data/diff.json");

pub fn stored_table(which: TableId) -> &'static KnowledgeTable {
    static TABLES: OnceLock<[KnowledgeTable; 3]> = OnceLock::new();
    let all = TABLES.get_or_init(|| {
        [MGN_JSON, MSN_JSON, DIFF_JSON].map(|s| serde_json::from_str(s).expect("bundled table data is valid"))
    });
    &all[which as usize]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Weierstrass divisors on every block, `n ≤ g − 2`.
    Closed,
    /// Closed mode plus the catalog choices `catalog_choice`.
    General,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(SearchMode::Closed),
            "general" => Ok(SearchMode::General),
            _ => Err(Error::Parse(format!("unknown search mode {s:?}"))),
        }
    }
}

/// Catalog divisor used on a block of size `n` in genus `g` when Weierstrass
/// divisors are not good enough.
pub fn catalog_choice(g: u32, n: u32) -> Option<EntryName> {
    match (g, n) {
        (20, 4) => Some(EntryName::F(8)),
        (22, 5) => Some(EntryName::Ftilde(9)),
        _ if n + 1 == g => Some(EntryName::T),
        _ => None,
    }
}

fn certifies(input: &CertificateInput) -> Result<bool> {
    match build_certificate(input) {
        Ok(c) => Ok(c.grade == Grade::GeneralType),
        Err(Error::CriterionInapplicable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The certificate input proving general type for `m` blocks of size `n`, if any.
pub fn certifying_input(g: u32, m: usize, n: u32, mode: SearchMode) -> Result<Option<CertificateInput>> {
    let blocks = vec![n; m];
    if n + 2 <= g {
        let closed = CertificateInput::closed(g, &blocks);
        if certifies(&closed)? {
            return Ok(Some(closed));
        }
    }
    if mode == SearchMode::General {
        if let Some(e) = catalog_choice(g, n) {
            let input = CertificateInput::general(g, &blocks, &vec![e; m])?;
            if certifies(&input)? {
                return Ok(Some(input));
            }
        }
    }
    Ok(None)
}

/// Smallest block size `n` such that `m` blocks of size `n` are certified.
pub fn nmin_search(g: u32, m: usize, mode: SearchMode) -> Result<Option<u32>> {
    if g < 4 {
        return Err(Error::Unsupported(format!("no slope bound for g = {g}")));
    }
    if m == 0 {
        return Err(Error::Domain("at least one block required".into()));
    }
    let top = match mode {
        SearchMode::Closed => g - 2,
        SearchMode::General => g - 1,
    };
    for n in 1..=top {
        if certifying_input(g, m, n, mode)?.is_some() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffStatus {
    Match,
    /// Differs from the closed search in a documented way.
    Exception,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRow {
    pub g: u32,
    pub table: u32,
    pub closed: Option<u32>,
    pub general: Option<u32>,
    pub status: DiffStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub rows: Vec<DiffRow>,
}

impl DiffReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.status != DiffStatus::Mismatch)
    }
}

enum Exception {
    External,
    Catalog { closed: u32, general: u32, entry: &'static str },
}

fn exception(g: u32) -> Option<Exception> {
    match g {
        13 => Some(Exception::External),
        20 => Some(Exception::Catalog { closed: 5, general: 4, entry: "F(20,8)" }),
        22 => Some(Exception::Catalog { closed: 6, general: 5, entry: "F̃(22,9)" }),
        _ => None,
    }
}

fn show(n: Option<u32>) -> String {
    n.map_or_else(|| "none".into(), |n| n.to_string())
}

pub fn diff_row(g: u32) -> Result<DiffRow> {
    let table = stored_table(TableId::Diff)
        .n_min(g)
        .ok_or_else(|| Error::Domain(format!("no stored difference-variety row for g = {g}")))?;
    let closed = nmin_search(g, 2, SearchMode::Closed)?;
    let general = nmin_search(g, 2, SearchMode::General)?;
    let (status, note) = match exception(g) {
        Some(Exception::External) => (
            DiffStatus::Exception,
            Some(format!(
                "table value {table} uses an external divisor; closed search gives {}",
                show(closed)
            )),
        ),
        Some(Exception::Catalog { closed: c, general: gen, entry }) => {
            let ok = closed == Some(c) && general == Some(gen) && gen == table;
            let note = format!("closed {}, general with {entry} {}", show(closed), show(general));
            (if ok { DiffStatus::Exception } else { DiffStatus::Mismatch }, Some(note))
        }
        None if general == Some(table) && closed == Some(table) => (DiffStatus::Match, None),
        None => (DiffStatus::Mismatch, None),
    };
    Ok(DiffRow {
        g,
        table,
        closed,
        general,
        status,
        note,
    })
}

/// Recomputes the difference-variety table on `[gmin, gmax] ∩ [10, 23]`.
pub fn reproduce_diff(gmin: u32, gmax: u32) -> Result<DiffReport> {
    let (lo, hi) = stored_table(TableId::Diff).genus_range();
    let rows = (gmin.max(lo)..=gmax.min(hi)).map(diff_row).collect::<Result<_>>()?;
    Ok(DiffReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "which", rename_all = "snake_case")]
pub enum TableReport {
    Stored(KnowledgeTable),
    Diff(DiffReport),
}

impl TableReport {
    pub fn passed(&self) -> bool {
        match self {
            TableReport::Stored(_) => true,
            TableReport::Diff(d) => d.all_match(),
        }
    }
}

pub fn reproduce_tables(which: TableId, gmin: Option<u32>, gmax: Option<u32>) -> Result<TableReport> {
    let (lo, hi) = stored_table(which).genus_range();
    let (gmin, gmax) = (gmin.unwrap_or(lo), gmax.unwrap_or(hi));
    if gmin > gmax {
        return Err(Error::Domain(format!("empty genus range {gmin}..={gmax}")));
    }
    Ok(match which {
        TableId::Diff => TableReport::Diff(reproduce_diff(gmin, gmax)?),
        _ => TableReport::Stored(stored_table(which).restricted(gmin, gmax)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_tables_load() {
        assert_eq!(stored_table(TableId::Mgn).genus_range(), (4, 22));
        assert_eq!(stored_table(TableId::Msn).n_min(23), Some(1));
        assert_eq!(stored_table(TableId::Diff).n_min(21), Some(3));
        assert_eq!(stored_table(TableId::Mgn).n_min(23), None);
    }

    #[test]
    fn search_examples() {
        assert_eq!(nmin_search(23, 2, SearchMode::Closed).unwrap(), Some(2));
        assert_eq!(nmin_search(20, 2, SearchMode::Closed).unwrap(), Some(5));
        assert_eq!(nmin_search(20, 2, SearchMode::General).unwrap(), Some(4));
        assert_eq!(nmin_search(22, 2, SearchMode::General).unwrap(), Some(5));
        assert!(nmin_search(3, 2, SearchMode::Closed).is_err());
    }

    #[test]
    fn general_input_at_twenty() {
        let input = certifying_input(20, 2, 4, SearchMode::General).unwrap().unwrap();
        assert_eq!(input.entries, vec![EntryName::F(8); 2]);
        assert!(certifying_input(20, 2, 4, SearchMode::Closed).unwrap().is_none());
    }

    #[test]
    fn diff_rows() {
        let r = diff_row(21).unwrap();
        assert_eq!((r.closed, r.status), (Some(3), DiffStatus::Match));
        let r = diff_row(20).unwrap();
        assert_eq!((r.closed, r.general, r.status), (Some(5), Some(4), DiffStatus::Exception));
        assert_eq!(diff_row(13).unwrap().status, DiffStatus::Exception);
    }

    #[test]
    fn report_restriction() {
        match reproduce_tables(TableId::Msn, Some(20), Some(30)).unwrap() {
            TableReport::Stored(t) => assert_eq!(t.rows.len(), 4),
            other => panic!("{other:?}"),
        }
        assert!(reproduce_tables(TableId::Mgn, Some(9), Some(5)).is_err());
    }
}
