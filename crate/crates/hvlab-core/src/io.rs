//! The JSON structure format: parsing with positioned errors and
//! canonical serialization.
//!
//! A structure file carries a ring section, a module section, the action
//! table, and optionally named membership/nonmembership pairs and named
//! maps. Tables are arrays of arrays of element-label lists; rationals
//! are strings ("2/5", "1") so no floats ever enter the pipeline. Parsing
//! resolves labels to indices, rejects empty cells and inadmissible
//! pairs, and annotates every error with the offending position. The
//! serializer emits a canonical rendering: parse → serialize → parse is
//! the identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::carrier::{Carrier, Subset};
use crate::error::{HvError, Result};
use crate::fuzzy::{validate_ivifs, IVFuzzySet, Ivifs};
use crate::hyper::{ExternalOp, HvModule, HvRing, HyperOp};
use crate::interval::{IntervalNumber, Rational01};

pub const FORMAT_VERSION: u32 = 1;

/// Rows of cells, each cell a list of element labels.
pub type Table = Vec<Vec<Vec<String>>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureFile {
    pub version: u32,
    pub ring: RingSection,
    pub module: ModuleSection,
    pub action: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fuzzy: BTreeMap<String, FuzzySection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RingSection {
    pub labels: Vec<String>,
    pub add: Table,
    pub mul: Table,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleSection {
    pub labels: Vec<String>,
    pub add: Table,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
}

/// Interval endpoints per label, for both sides of a pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzySection {
    #[serde(rename = "M")]
    pub membership: BTreeMap<String, (String, String)>,
    #[serde(rename = "N")]
    pub nonmembership: BTreeMap<String, (String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapSection {
    pub map: BTreeMap<String, String>,
}

/// Everything a file denotes, fully resolved and validated.
#[derive(Debug, Clone)]
pub struct ParsedStructure {
    pub module: HvModule,
    /// Named pairs in file (alphabetical) order.
    pub fuzzy: Vec<(String, Ivifs)>,
    /// Named self-maps as index vectors, in file order.
    pub maps: Vec<(String, Vec<usize>)>,
}

impl ParsedStructure {
    pub fn fuzzy_named(&self, name: &str) -> Option<&Ivifs> {
        self.fuzzy.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }

    pub fn map_named(&self, name: &str) -> Option<&[usize]> {
        self.maps.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }
}

fn at(path: impl Into<String>) -> impl FnOnce(HvError) -> HvError {
    let path = path.into();
    move |e| match e {
        // Already positioned errors keep their location.
        HvError::EmptyCell(_) | HvError::Parse { .. } => e,
        other => HvError::Parse {
            path,
            detail: other.to_string(),
        },
    }
}

/// Resolves a label table into bitset cells. `rows`/`cols` fix the
/// expected shape; `values` is the carrier cell entries resolve against.
fn convert_table(table: &Table, rows: usize, cols: usize, values: &Carrier, context: &str) -> Result<Vec<Subset>> {
    if table.len() != rows {
        return Err(HvError::TableShape {
            context: context.to_string(),
            got: table.len(),
            want: rows,
        });
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(HvError::TableShape {
                context: format!("{context}[{i}]"),
                got: row.len(),
                want: cols,
            });
        }
        for (j, cell) in row.iter().enumerate() {
            if cell.is_empty() {
                return Err(HvError::EmptyCell(format!("{context}[{i}][{j}]")));
            }
            let mut s = Subset::empty();
            for label in cell {
                let idx = values.index_of(label).map_err(at(format!("{context}[{i}][{j}]")))?;
                s.insert(idx);
            }
            cells.push(s);
        }
    }
    Ok(cells)
}

fn convert_fuzzy_side(
    entries: &BTreeMap<String, (String, String)>,
    carrier: &Carrier,
    path: &str,
) -> Result<IVFuzzySet> {
    for label in entries.keys() {
        carrier.index_of(label).map_err(at(path.to_string()))?;
    }
    let values = (0..carrier.size())
        .map(|i| {
            let label = carrier.label(i);
            let (lo, hi) = entries.get(label).ok_or_else(|| HvError::Parse {
                path: path.to_string(),
                detail: format!("missing value for label {label:?}"),
            })?;
            let here = format!("{path}[{label:?}]");
            let lo: Rational01 = lo.parse().map_err(at(here.clone()))?;
            let hi: Rational01 = hi.parse().map_err(at(here.clone()))?;
            IntervalNumber::new(lo, hi).map_err(at(here))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IVFuzzySet::new(values))
}

/// Parses and validates a structure file from raw bytes.
pub fn parse_structure_file(bytes: &[u8]) -> Result<ParsedStructure> {
    let file: StructureFile = serde_json::from_slice(bytes).map_err(|e| HvError::Parse {
        path: "(document)".to_string(),
        detail: e.to_string(),
    })?;
    build_structure(&file)
}

/// Resolves an already-deserialized file into validated objects.
pub fn build_structure(file: &StructureFile) -> Result<ParsedStructure> {
    if file.version != FORMAT_VERSION {
        return Err(HvError::Parse {
            path: "version".to_string(),
            detail: format!("unsupported version {}, expected {FORMAT_VERSION}", file.version),
        });
    }
    let ring_carrier = Carrier::new(file.ring.labels.clone()).map_err(at("ring.labels"))?;
    let module_carrier = Carrier::new(file.module.labels.clone()).map_err(at("module.labels"))?;
    let (rn, mn) = (ring_carrier.size(), module_carrier.size());

    let ring_add = HyperOp::new(
        rn,
        convert_table(&file.ring.add, rn, rn, &ring_carrier, "ring.add")?,
        "ring.add",
    )?;
    let ring_mul = HyperOp::new(
        rn,
        convert_table(&file.ring.mul, rn, rn, &ring_carrier, "ring.mul")?,
        "ring.mul",
    )?;
    let module_add = HyperOp::new(
        mn,
        convert_table(&file.module.add, mn, mn, &module_carrier, "module.add")?,
        "module.add",
    )?;
    let action = ExternalOp::new(
        rn,
        mn,
        convert_table(&file.action, rn, mn, &module_carrier, "action")?,
        "action",
    )?;
    let zero = file
        .module
        .zero
        .as_ref()
        .map(|label| module_carrier.index_of(label).map_err(at("module.zero")))
        .transpose()?;

    let ring = HvRing::new(ring_carrier, ring_add, ring_mul)?;
    let module = HvModule::new(ring, module_carrier.clone(), module_add, action, zero)?;

    let mut fuzzy = Vec::new();
    for (name, section) in &file.fuzzy {
        let m = convert_fuzzy_side(&section.membership, &module_carrier, &format!("fuzzy.{name}.M"))?;
        let n = convert_fuzzy_side(
            &section.nonmembership,
            &module_carrier,
            &format!("fuzzy.{name}.N"),
        )?;
        let pair = Ivifs::new(m, n).map_err(at(format!("fuzzy.{name}")))?;
        let report = validate_ivifs(&pair, &module_carrier)?;
        if !report.passed() {
            let element = report
                .witness
                .as_ref()
                .and_then(|w| w.elements.first())
                .map(|e| e.label.clone())
                .unwrap_or_default();
            return Err(HvError::Parse {
                path: format!("fuzzy.{name}"),
                detail: format!(
                    "admissibility fails at element {element:?}: sup M + sup N exceeds 1"
                ),
            });
        }
        fuzzy.push((name.clone(), pair));
    }

    let mut maps = Vec::new();
    for (name, section) in &file.maps {
        let path = format!("maps.{name}");
        for label in section.map.keys() {
            module_carrier.index_of(label).map_err(at(path.clone()))?;
        }
        let mapping = (0..mn)
            .map(|i| {
                let label = module_carrier.label(i);
                let dst = section.map.get(label).ok_or_else(|| HvError::Parse {
                    path: path.clone(),
                    detail: format!("no image for label {label:?}"),
                })?;
                module_carrier.index_of(dst).map_err(at(path.clone()))
            })
            .collect::<Result<Vec<usize>>>()?;
        maps.push((name.clone(), mapping));
    }

    Ok(ParsedStructure {
        module,
        fuzzy,
        maps,
    })
}

fn cells_to_table(cells: &[Subset], cols: usize, values: &Carrier) -> Table {
    cells
        .chunks(cols)
        .map(|row| {
            row.iter()
                .map(|cell| cell.iter().map(|i| values.label(i).to_string()).collect())
                .collect()
        })
        .collect()
}

fn fuzzy_side_to_entries(f: &IVFuzzySet, carrier: &Carrier) -> BTreeMap<String, (String, String)> {
    (0..carrier.size())
        .map(|i| {
            let v = f.value(i);
            (
                carrier.label(i).to_string(),
                (v.lo().to_string(), v.hi().to_string()),
            )
        })
        .collect()
}

/// Re-encodes validated objects as a structure file.
pub fn structure_to_file(
    m: &HvModule,
    fuzzy: &[(String, Ivifs)],
    maps: &[(String, Vec<usize>)],
) -> StructureFile {
    let rc = m.ring().carrier();
    let mc = m.carrier();
    StructureFile {
        version: FORMAT_VERSION,
        ring: RingSection {
            labels: rc.labels().to_vec(),
            add: cells_to_table(m.ring().add().cells(), rc.size(), rc),
            mul: cells_to_table(m.ring().mul().cells(), rc.size(), rc),
        },
        module: ModuleSection {
            labels: mc.labels().to_vec(),
            add: cells_to_table(m.add().cells(), mc.size(), mc),
            zero: m.zero().map(|z| mc.label(z).to_string()),
        },
        action: cells_to_table(m.action().cells(), mc.size(), mc),
        fuzzy: fuzzy
            .iter()
            .map(|(name, pair)| {
                (
                    name.clone(),
                    FuzzySection {
                        membership: fuzzy_side_to_entries(pair.membership(), mc),
                        nonmembership: fuzzy_side_to_entries(pair.nonmembership(), mc),
                    },
                )
            })
            .collect(),
        maps: maps
            .iter()
            .map(|(name, mapping)| {
                (
                    name.clone(),
                    MapSection {
                        map: mapping
                            .iter()
                            .enumerate()
                            .map(|(i, &dst)| (mc.label(i).to_string(), mc.label(dst).to_string()))
                            .collect(),
                    },
                )
            })
            .collect(),
    }
}

impl ParsedStructure {
    pub fn to_file(&self) -> StructureFile {
        structure_to_file(&self.module, &self.fuzzy, &self.maps)
    }
}

/// Canonical rendering: pretty JSON with a trailing newline.
pub fn render_structure_file(file: &StructureFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("structure files serialize");
    s.push('\n');
    s
}
