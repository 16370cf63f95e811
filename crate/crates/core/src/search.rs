//! Exhaustive backtracking search for minimum-area polyomino Venn diagrams
//! and for diagrams that exactly fill a `w x h` box.
//!
//! In a diagram of area `2^n - 1` every nonempty region is a single cell, so
//! both searches assign the `2^n - 1` masks bijectively to cells. The
//! minimum-area search grows the cell set from the full-set cell at the
//! origin with Redelmeier's algorithm, labeling each cell as it is added;
//! the fill-box search labels the box in row-major order. Partial labelings
//! are pruned when some curve can no longer become one connected piece of
//! `2^(n-1)` cells, or when a cell is already enclosed by a curve that does
//! not contain it. Every reported diagram is re-validated.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::model::{Bounds, CellCoord, Dihedral, GridDiagram, SubsetMask};
use crate::validation::validate_venn;

pub const MIN_SEARCH_N: u32 = 2;
pub const MAX_SEARCH_N: u32 = 4;

/// Node and wall-clock budgets. A node is one tentative (cell, mask)
/// assignment.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchLimits {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn with_time(self, max_time: Duration) -> Self {
        SearchLimits {
            max_time: Some(max_time),
            ..self
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_nodes == Some(0) {
            return Err(Error::Limits("node budget must be positive".into()));
        }
        if self.max_time == Some(Duration::ZERO) {
            return Err(Error::Limits("time budget must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A diagram meeting the target; it passes `validate_venn`.
    Found(GridDiagram),
    /// The whole search space was explored without a solution.
    Exhausted,
    /// A node or time budget ran out first.
    BudgetHit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Nodes expanded, counting the one that hit the budget.
    pub nodes: u64,
}

/// Every solution found by an exhaustive enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub diagrams: Vec<GridDiagram>,
    /// False if a budget stopped the enumeration early.
    pub complete: bool,
    pub nodes: u64,
}

struct Budget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Budget {
    fn new(limits: &SearchLimits) -> Self {
        Budget {
            max_nodes: limits.max_nodes,
            deadline: limits.max_time.map(|t| Instant::now() + t),
            nodes: 0,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|max| self.nodes > max) {
            return false;
        }
        if self.nodes.is_multiple_of(512) {
            if let Some(deadline) = self.deadline {
                return Instant::now() < deadline;
            }
        }
        true
    }
}

enum Flow {
    Continue,
    Stop,
}

enum Mode {
    First(Option<GridDiagram>),
    All(Vec<GridDiagram>),
}

impl Mode {
    /// Records a solution; returns whether the search should stop.
    fn accept(&mut self, d: GridDiagram) -> Flow {
        match self {
            Mode::First(slot) => {
                *slot = Some(d);
                Flow::Stop
            }
            Mode::All(list) => {
                list.push(d);
                Flow::Continue
            }
        }
    }
}

fn check_n(n: u32) -> Result<()> {
    if !(MIN_SEARCH_N..=MAX_SEARCH_N).contains(&n) {
        return Err(Error::CurveCount {
            n,
            min: MIN_SEARCH_N,
            max: MAX_SEARCH_N,
        });
    }
    Ok(())
}

/// Can the partial labeling still complete to a minimum-area Venn diagram?
/// `open(c)` tells whether cell `c` may still be labeled later.
fn feasible<F>(n: u32, placed: &HashMap<CellCoord, SubsetMask>, open: F) -> bool
where
    F: Fn(CellCoord) -> bool,
{
    let quota = 1usize << (n - 1);
    for i in 0..n {
        let mut unvisited: HashSet<CellCoord> = placed
            .iter()
            .filter(|(_, m)| m.contains(i))
            .map(|(c, _)| *c)
            .collect();
        while let Some(&start) = unvisited.iter().next() {
            unvisited.remove(&start);
            let mut stack = vec![start];
            let mut size = 0;
            let mut can_grow = false;
            while let Some(c) = stack.pop() {
                size += 1;
                for nb in c.neighbors() {
                    if unvisited.remove(&nb) {
                        stack.push(nb);
                    } else if !placed.contains_key(&nb) && open(nb) {
                        can_grow = true;
                    }
                }
            }
            // a sealed piece smaller than the whole curve can never join the rest
            if !can_grow && size < quota {
                return false;
            }
        }
    }

    // Local enclosure: a cell whose four neighbors are all labeled is cut off
    // from every curve that covers all four neighbors but not the cell.
    let surrounded = |c: CellCoord| -> Option<SubsetMask> {
        let mut common = SubsetMask::full(n);
        for nb in c.neighbors() {
            common = common & placed.get(&nb).copied()?;
        }
        Some(common)
    };
    for (&c, &m) in placed {
        if let Some(common) = surrounded(c) {
            if !(common & !m).is_empty() {
                return false;
            }
        }
        for nb in c.neighbors() {
            if placed.contains_key(&nb) || open(nb) {
                continue;
            }
            // nb stays empty forever
            if surrounded(nb).is_some() {
                return false;
            }
        }
    }
    true
}

fn diagram_from(n: u32, placed: &HashMap<CellCoord, SubsetMask>) -> GridDiagram {
    GridDiagram::from_cells(n, placed.iter().map(|(c, m)| (*c, *m))).expect("labels are valid masks")
}

struct MinAreaSearch {
    n: u32,
    target: usize,
    placed: HashMap<CellCoord, SubsetMask>,
    seen: HashSet<CellCoord>,
    used: Vec<bool>,
    budget: Budget,
    symmetry: bool,
    mode: Mode,
    budget_hit: bool,
    /// Cap on bounding-box width + height.
    max_span: i32,
    bounds: Option<Bounds>,
}

/// Width + height of the bounding box of `target` cells can range from the
/// most compact rectangle up to a straight bar.
fn span_range(target: usize) -> std::ops::RangeInclusive<i32> {
    let compact = (1..=target)
        .map(|w| w + target.div_ceil(w))
        .min()
        .expect("target >= 1");
    compact as i32..=target as i32 + 1
}

impl MinAreaSearch {
    fn new(n: u32, limits: &SearchLimits, symmetry: bool, mode: Mode) -> Self {
        let target = (1usize << n) - 1;
        MinAreaSearch {
            n,
            target,
            placed: HashMap::new(),
            seen: HashSet::new(),
            used: vec![false; 1 << n],
            budget: Budget::new(limits),
            symmetry,
            mode,
            budget_hit: false,
            max_span: *span_range(target).end(),
            bounds: None,
        }
    }

    fn run(&mut self, max_span: i32) -> Flow {
        self.max_span = max_span;
        self.seen = HashSet::from([CellCoord::ORIGIN]);
        self.grow(&[CellCoord::ORIGIN])
    }

    /// Deepens the span cap one step at a time so compact diagrams are found
    /// first; the last pass covers the whole search space.
    fn run_deepening(&mut self) {
        for span in span_range(self.target) {
            if let Flow::Stop = self.run(span) {
                return;
            }
        }
    }

    /// True if the cell set is the least of its eight images about the
    /// origin, which always holds the full-set cell.
    fn shape_is_canonical(&self) -> bool {
        let mut shape: Vec<CellCoord> = self.placed.keys().copied().collect();
        shape.sort_unstable();
        Dihedral::ALL.iter().all(|t| {
            let mut image: Vec<CellCoord> = shape.iter().map(|&c| t.apply(c)).collect();
            image.sort_unstable();
            image >= shape
        })
    }

    fn leaf(&mut self) -> Flow {
        if self.symmetry && !self.shape_is_canonical() {
            return Flow::Continue;
        }
        let d = diagram_from(self.n, &self.placed);
        if validate_venn(&d).overall() {
            self.mode.accept(d)
        } else {
            Flow::Continue
        }
    }

    /// Redelmeier's enumeration of cell sets containing the origin; `untried`
    /// holds cells that may still be added at this depth, in order.
    fn grow(&mut self, untried: &[CellCoord]) -> Flow {
        let full = SubsetMask::full(self.n);
        for (idx, &cell) in untried.iter().enumerate() {
            let mut next = untried[idx + 1..].to_vec();
            let mut added = Vec::new();
            for nb in cell.neighbors() {
                if self.seen.insert(nb) {
                    added.push(nb);
                    next.push(nb);
                }
            }
            let masks: Vec<SubsetMask> = if self.placed.is_empty() {
                vec![full]
            } else {
                (1..full.bits())
                    .filter(|&b| !self.used[b as usize])
                    .map(SubsetMask::from_bits)
                    .collect()
            };
            let future: HashSet<CellCoord> = next.iter().copied().collect();
            let saved_bounds = self.bounds;
            let grown = match saved_bounds {
                None => Bounds { min_x: cell.x, max_x: cell.x, min_y: cell.y, max_y: cell.y },
                Some(b) => Bounds {
                    min_x: b.min_x.min(cell.x),
                    max_x: b.max_x.max(cell.x),
                    min_y: b.min_y.min(cell.y),
                    max_y: b.max_y.max(cell.y),
                },
            };
            // any set containing this cell is too wide; siblings may still fit
            let masks = if (grown.width() + grown.height()) as i32 > self.max_span {
                Vec::new()
            } else {
                masks
            };
            self.bounds = Some(grown);
            for mask in masks {
                if !self.budget.tick() {
                    self.budget_hit = true;
                    return Flow::Stop;
                }
                self.placed.insert(cell, mask);
                self.used[mask.bits() as usize] = true;
                let flow = if !feasible(self.n, &self.placed, |c| future.contains(&c)) {
                    Flow::Continue
                } else if self.placed.len() == self.target {
                    self.leaf()
                } else {
                    self.grow(&next)
                };
                self.placed.remove(&cell);
                self.used[mask.bits() as usize] = false;
                if let Flow::Stop = flow {
                    return Flow::Stop;
                }
            }
            self.bounds = saved_bounds;
            for nb in added {
                self.seen.remove(&nb);
            }
        }
        Flow::Continue
    }
}

/// Searches for a diagram of area `2^n - 1` with the full-set cell at the
/// origin, for `2 <= n <= 4`. Passes are repeated with a growing cap on
/// bounding-box width + height, so a report of exhaustion covers every
/// shape. Solutions whose cell set is not the least of
/// its dihedral images are skipped, since a transformed copy is reached
/// elsewhere in the search.
pub fn search_min_area(n: u32, limits: &SearchLimits) -> Result<SearchReport> {
    check_n(n)?;
    limits.check()?;
    let mut search = MinAreaSearch::new(n, limits, true, Mode::First(None));
    search.run_deepening();
    let nodes = search.budget.nodes;
    let outcome = match search.mode {
        Mode::First(Some(d)) => SearchOutcome::Found(d),
        _ if search.budget_hit => SearchOutcome::BudgetHit,
        _ => SearchOutcome::Exhausted,
    };
    Ok(SearchReport { outcome, nodes })
}

/// Lists every minimum-area diagram in the search space, with or without
/// the dihedral pruning used by [`search_min_area`].
pub fn enumerate_min_area(n: u32, limits: &SearchLimits, symmetry: bool) -> Result<Enumeration> {
    check_n(n)?;
    limits.check()?;
    let mut search = MinAreaSearch::new(n, limits, symmetry, Mode::All(Vec::new()));
    let widest = *span_range(search.target).end();
    search.run(widest);
    let Mode::All(diagrams) = search.mode else {
        unreachable!("collecting mode")
    };
    Ok(Enumeration {
        diagrams,
        complete: !search.budget_hit,
        nodes: search.budget.nodes,
    })
}

struct FillBoxSearch {
    n: u32,
    w: i32,
    h: i32,
    cells: Vec<CellCoord>,
    placed: HashMap<CellCoord, SubsetMask>,
    used: Vec<bool>,
    budget: Budget,
    found: Option<GridDiagram>,
    budget_hit: bool,
}

impl FillBoxSearch {
    fn index(&self, c: CellCoord) -> usize {
        (c.y * self.w + c.x) as usize
    }

    fn in_box(&self, c: CellCoord) -> bool {
        (0..self.w).contains(&c.x) && (0..self.h).contains(&c.y)
    }

    /// Symmetries of the box, as maps on cells.
    fn box_images(&self, c: CellCoord) -> Vec<CellCoord> {
        let (w, h) = (self.w - 1, self.h - 1);
        let CellCoord { x, y } = c;
        let mut images = vec![
            CellCoord::new(w - x, y),
            CellCoord::new(x, h - y),
            CellCoord::new(w - x, h - y),
        ];
        if self.w == self.h {
            images.extend([
                CellCoord::new(y, x),
                CellCoord::new(w - y, x),
                CellCoord::new(y, h - x),
                CellCoord::new(w - y, h - x),
            ]);
        }
        images
    }

    /// The full-set cell is only placed at the least position of its orbit
    /// under the box symmetries.
    fn full_position_allowed(&self, c: CellCoord) -> bool {
        let i = self.index(c);
        self.box_images(c).into_iter().all(|g| self.index(g) >= i)
    }

    fn assign(&mut self, idx: usize) -> Flow {
        if idx == self.cells.len() {
            let d = diagram_from(self.n, &self.placed);
            if validate_venn(&d).overall() {
                self.found = Some(d);
                return Flow::Stop;
            }
            return Flow::Continue;
        }
        let cell = self.cells[idx];
        let full = SubsetMask::full(self.n);
        for bits in 1..=full.bits() {
            if self.used[bits as usize] {
                continue;
            }
            let mask = SubsetMask::from_bits(bits);
            if mask == full && !self.full_position_allowed(cell) {
                continue;
            }
            if !self.budget.tick() {
                self.budget_hit = true;
                return Flow::Stop;
            }
            self.placed.insert(cell, mask);
            self.used[bits as usize] = true;
            let flow = if feasible(self.n, &self.placed, |c| {
                self.in_box(c) && self.index(c) > idx
            }) {
                self.assign(idx + 1)
            } else {
                Flow::Continue
            };
            self.placed.remove(&cell);
            self.used[bits as usize] = false;
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

/// Searches for a Venn diagram occupying exactly the `w x h` box with
/// corner cell `(0, 0)`, where `w * h = 2^n - 1` and `2 <= n <= 4`. Cells
/// are labeled in row-major order from the bottom row.
pub fn search_fill_box(n: u32, w: u32, h: u32, limits: &SearchLimits) -> Result<SearchReport> {
    check_n(n)?;
    let area = w as u64 * h as u64;
    let expected = (1u64 << n) - 1;
    if area != expected {
        return Err(Error::BoxArea {
            w,
            h,
            n,
            area,
            expected,
        });
    }
    limits.check()?;
    let (w, h) = (w as i32, h as i32);
    let cells = (0..h)
        .flat_map(|y| (0..w).map(move |x| CellCoord::new(x, y)))
        .collect();
    let mut search = FillBoxSearch {
        n,
        w,
        h,
        cells,
        placed: HashMap::new(),
        used: vec![false; 1 << n],
        budget: Budget::new(limits),
        found: None,
        budget_hit: false,
    };
    search.assign(0);
    let outcome = match search.found {
        Some(d) => SearchOutcome::Found(d),
        None if search.budget_hit => SearchOutcome::BudgetHit,
        None => SearchOutcome::Exhausted,
    };
    Ok(SearchReport {
        outcome,
        nodes: search.budget.nodes,
    })
}
