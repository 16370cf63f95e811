//! Venn-validity checking for grid diagrams and the minimum-area,
//! minimum-bounding-box and congruence classifications.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{CellSet, GridDiagram, SubsetMask};
use crate::polyomino::{
    canonical_free_form, component_count, enclosed_cells, is_edge_connected, is_hole_free,
    trace_perimeter,
};

pub const CURVE_COUNT_POSITIVE: &str = "curve_count_positive";
pub const ALL_MASKS_PRESENT: &str = "all_masks_present";
pub const MASKS_UNIQUE_REGIONS: &str = "masks_unique_regions";
pub const EMPTY_REGION_CONNECTED: &str = "empty_region_connected";
pub const CURVES_CONNECTED: &str = "curves_connected";
pub const CURVES_HOLE_FREE: &str = "curves_hole_free";
pub const CURVE_PERIMETERS_SIMPLE: &str = "curve_perimeters_simple";

/// Check names in report order.
pub const CHECK_NAMES: [&str; 7] = [
    CURVE_COUNT_POSITIVE,
    ALL_MASKS_PRESENT,
    MASKS_UNIQUE_REGIONS,
    EMPTY_REGION_CONNECTED,
    CURVES_CONNECTED,
    CURVES_HOLE_FREE,
    CURVE_PERIMETERS_SIMPLE,
];

/// Listing more than this many offenders in a detail message is noise.
const DETAIL_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Itemized result of [`validate_venn`]. Always lists the seven checks of
/// [`CHECK_NAMES`] in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    checks: Vec<Check>,
    overall: bool,
}

impl ValidationReport {
    fn new(checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        ValidationReport { checks, overall }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn overall(&self) -> bool {
        self.overall
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        writeln!(f, "overall: {}", if self.overall { "valid" } else { "invalid" })
    }
}

fn summarize<T: fmt::Display>(items: &[T]) -> String {
    let mut parts: Vec<String> = items.iter().take(DETAIL_LIMIT).map(|x| x.to_string()).collect();
    if items.len() > DETAIL_LIMIT {
        parts.push(format!("... ({} total)", items.len()));
    }
    parts.join(" ")
}

fn check(name: &'static str, failures: &[String], ok_detail: String, what: &str) -> Check {
    if failures.is_empty() {
        Check {
            name,
            passed: true,
            detail: ok_detail,
        }
    } else {
        Check {
            name,
            passed: false,
            detail: format!("{what}: {}", summarize(failures)),
        }
    }
}

pub fn validate_venn(d: &GridDiagram) -> ValidationReport {
    let n = d.n();
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    checks.push(Check {
        name: CURVE_COUNT_POSITIVE,
        passed: n >= 1,
        detail: format!("n = {n}"),
    });

    let mut regions: BTreeMap<SubsetMask, CellSet> = BTreeMap::new();
    for (c, m) in d.iter() {
        regions.entry(m).or_default().insert(c);
    }
    let expected = (1u64 << n) - 1;
    let missing: Vec<String> = (1..=expected as u32)
        .map(SubsetMask::from_bits)
        .filter(|m| !regions.contains_key(m))
        .map(|m| m.to_string())
        .collect();
    checks.push(check(
        ALL_MASKS_PRESENT,
        &missing,
        format!("{expected} regions present"),
        "missing",
    ));

    let split: Vec<String> = regions
        .iter()
        .filter_map(|(m, cells)| {
            let k = component_count(cells);
            (k > 1).then(|| format!("{m}({k} components)"))
        })
        .collect();
    checks.push(check(
        MASKS_UNIQUE_REGIONS,
        &split,
        "every region is one component".into(),
        "split regions",
    ));

    let pockets: Vec<String> = match d.bounds() {
        Some(b) => enclosed_cells(b, |c| d.get(c).is_some())
            .into_iter()
            .map(|c| format!("({},{})", c.x, c.y))
            .collect(),
        None => Vec::new(),
    };
    checks.push(check(
        EMPTY_REGION_CONNECTED,
        &pockets,
        "empty region reaches the outer face".into(),
        "enclosed empty cells",
    ));

    let curves: Vec<(char, CellSet)> = (0..n)
        .map(|i| {
            let letter = char::from(b'A' + i as u8);
            (letter, d.curve_cells(i).expect("index below n"))
        })
        .collect();
    let failing = |pred: &dyn Fn(&CellSet) -> bool| -> Vec<String> {
        curves
            .iter()
            .filter(|(_, cells)| !pred(cells))
            .map(|(l, _)| l.to_string())
            .collect()
    };
    checks.push(check(
        CURVES_CONNECTED,
        &failing(&is_edge_connected),
        format!("{n} curves edge-connected"),
        "disconnected curves",
    ));
    checks.push(check(
        CURVES_HOLE_FREE,
        &failing(&is_hole_free),
        format!("{n} curves hole-free"),
        "curves with holes",
    ));
    checks.push(check(
        CURVE_PERIMETERS_SIMPLE,
        &failing(&|cells: &CellSet| trace_perimeter(cells).is_ok()),
        format!("{n} simple closed perimeters"),
        "non-simple perimeters",
    ));

    ValidationReport::new(checks)
}

/// Valid and exactly `2^n - 1` cells.
pub fn is_minimum_area(d: &GridDiagram) -> bool {
    d.area() as u64 == (1u64 << d.n()) - 1 && validate_venn(d).overall()
}

/// Valid and fits within some `2^s x 2^t` box with `s + t = n`.
pub fn is_minimum_bbox(d: &GridDiagram) -> bool {
    let Ok((w, h)) = d.bounding_box() else {
        return false;
    };
    let n = d.n();
    let fits = (0..=n).any(|s| (w as u64) <= 1u64 << s && (h as u64) <= 1u64 << (n - s));
    fits && validate_venn(d).overall()
}

/// True iff every curve has the same free canonical form. The diagram must
/// pass [`validate_venn`].
pub fn curves_congruent(d: &GridDiagram) -> Result<bool> {
    let report = validate_venn(d);
    if let Some(name) = report.first_failure() {
        return Err(Error::InvalidDiagram(name));
    }
    let first = canonical_free_form(&d.curve_cells(0)?)?;
    for i in 1..d.n() {
        if canonical_free_form(&d.curve_cells(i)?)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}
