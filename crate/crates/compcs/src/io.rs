//! JSON and CSV formats.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use compcs_core::composites::{CompositeCS, EntConfig};
use compcs_core::constituents::Constituent;
use compcs_core::names::Name;
use serde::{Deserialize, Serialize};

pub type Grid = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureRecord {
    pub n: usize,
    pub constituents: Vec<String>,
    /// 1-based qubit pairs.
    pub wires: Vec<[usize; 2]>,
}

impl From<&CompositeCS> for StructureRecord {
    fn from(cs: &CompositeCS) -> Self {
        StructureRecord {
            n: cs.n(),
            constituents: cs.constituents().iter().map(|c| c.to_string()).collect(),
            wires: cs.wires().iter().map(|&(p, q)| [p + 1, q + 1]).collect(),
        }
    }
}

impl StructureRecord {
    pub fn to_structure(&self) -> Result<CompositeCS, String> {
        if self.constituents.len() != self.n {
            return Err(format!("expected {} constituents, got {}", self.n, self.constituents.len()));
        }
        let mut cons = Vec::with_capacity(self.n);
        for s in &self.constituents {
            let mut chars = s.chars();
            match (chars.next().and_then(Constituent::from_symbol), chars.next()) {
                (Some(c), None) => cons.push(c),
                _ => return Err(format!("unknown constituent {:?}", s)),
            }
        }
        let mut wires = Vec::with_capacity(self.wires.len());
        for &[p, q] in &self.wires {
            if p == 0 || q == 0 {
                return Err("wire endpoints are 1-based".into());
            }
            wires.push((p - 1, q - 1));
        }
        CompositeCS::new(cons, &wires).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRecord {
    pub members: Vec<Grid>,
    pub config: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleSet {
    pub config: [usize; 3],
    pub members: Vec<Grid>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub p2: usize,
    pub sets2: usize,
    pub gen2: usize,
    pub gen3: usize,
    pub pass3: usize,
    pub sets3: usize,
}

pub fn grid(name: &Name) -> Grid {
    name.to_rows()
}

pub fn parse_grid(g: &Grid) -> Result<Name, String> {
    Name::from_rows(g).map_err(|e| e.to_string())
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

pub fn read_names(path: &Path) -> Result<Vec<Name>, String> {
    let grids: Vec<Grid> = read(path)?;
    grids.iter().map(parse_grid).collect()
}

pub fn read_name_sets(path: &Path) -> Result<Vec<Vec<Name>>, String> {
    let sets: Vec<Vec<Grid>> = read(path)?;
    sets.iter().map(|s| s.iter().map(parse_grid).collect()).collect()
}

pub fn read_examples(path: &Path) -> Result<Vec<(EntConfig, Vec<Name>)>, String> {
    let sets: Vec<ExampleSet> = read(path)?;
    sets.iter()
        .map(|e| {
            let [n_sc, n_bs, n_ns] = e.config;
            let names = e.members.iter().map(parse_grid).collect::<Result<_, _>>()?;
            Ok((EntConfig { n_sc, n_bs, n_ns }, names))
        })
        .collect()
}

pub fn read_counts(path: &Path) -> Result<Counts, String> {
    read(path)
}

/// Structures, one JSON record per line.
pub fn read_structures(path: &Path) -> Result<Vec<CompositeCS>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let r: StructureRecord = serde_json::from_str(l).map_err(|e| e.to_string())?;
            r.to_structure()
        })
        .collect()
}

/// Names as a JSON array with one member per line.
pub fn names_json(names: &[Name]) -> String {
    let mut out = String::from("[\n");
    for (i, n) in names.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&serde_json::to_string(&grid(n)).expect("serializable"));
        out.push_str(if i + 1 < names.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}

pub fn summary_csv(summary: &BTreeMap<EntConfig, usize>) -> String {
    let mut out = String::from("config,count\n");
    for (c, k) in summary {
        out.push_str(&format!("\"{}\",{}\n", c, k));
    }
    out
}

/// `23220` as `23,220`.
pub fn thousands(x: usize) -> String {
    let s = x.to_string();
    let mut out = String::new();
    for (i, ch) in s.chars().enumerate() {
        if i > 0 && (s.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let cs = CompositeCS::parse("ZZX:13,23").unwrap();
        let r = StructureRecord::from(&cs);
        assert_eq!(r.wires, vec![[1, 3], [2, 3]]);
        let text = serde_json::to_string(&r).unwrap();
        let back: StructureRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_structure().unwrap(), cs);
    }

    #[test]
    fn separators() {
        assert_eq!(thousands(23220), "23,220");
        assert_eq!(thousands(153), "153");
        assert_eq!(thousands(1000000), "1,000,000");
    }
}
