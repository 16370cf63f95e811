//! Value types shared by every module: subset masks, lattice cells, cell sets
//! and grid diagrams.
//!
//! A cell `(x, y)` is the unit square `[x, x+1] x [y, y+1]`, with `y`
//! increasing upward. A [`GridDiagram`] maps occupied cells to the nonempty
//! set of curves covering them; the empty region is everything unmapped.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use crate::error::{Error, Result};

/// Largest supported number of curves.
pub const MAX_CURVES: u32 = 20;

/// A subset of curve labels; bit `i` is curve `i`, printed as letter `'A' + i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: u32) -> Self {
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: u32) -> Self {
        SubsetMask(1 << i)
    }

    pub fn contains(self, i: u32) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of curves in the subset.
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: SubsetMask) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn with(self, i: u32) -> Self {
        SubsetMask(self.0 | (1 << i))
    }

    /// True if only bits below `n` are set.
    pub fn fits(self, n: u32) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    /// Curve indices in ascending order.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// Parses a letter set such as `"AC"`; `"{}"` or `""` is the empty set.
    pub fn from_letters(text: &str) -> Option<Self> {
        if text == "{}" {
            return Some(SubsetMask::EMPTY);
        }
        let mut mask = SubsetMask::EMPTY;
        for ch in text.chars() {
            if !ch.is_ascii_uppercase() {
                return None;
            }
            let i = ch as u32 - 'A' as u32;
            if i >= MAX_CURVES || mask.contains(i) {
                return None;
            }
            mask = mask.with(i);
        }
        Some(mask)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> SubsetMask {
        SubsetMask(!self.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        for i in self.elements() {
            write!(f, "{}", char::from(b'A' + i as u8))?;
        }
        Ok(())
    }
}

/// A unit cell of the integer lattice, identified by its lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellCoord {
    pub x: i32,
    pub y: i32,
}

impl CellCoord {
    pub const ORIGIN: CellCoord = CellCoord { x: 0, y: 0 };

    pub const fn new(x: i32, y: i32) -> Self {
        CellCoord { x, y }
    }

    /// Edge-adjacent cells in the order right, up, left, down.
    pub fn neighbors(self) -> [CellCoord; 4] {
        let CellCoord { x, y } = self;
        [
            CellCoord::new(x + 1, y),
            CellCoord::new(x, y + 1),
            CellCoord::new(x - 1, y),
            CellCoord::new(x, y - 1),
        ]
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        CellCoord::new(self.x + dx, self.y + dy)
    }
}

impl From<(i32, i32)> for CellCoord {
    fn from((x, y): (i32, i32)) -> Self {
        CellCoord::new(x, y)
    }
}

/// A corner point of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i32,
    pub y: i32,
}

impl LatticePoint {
    pub const fn new(x: i32, y: i32) -> Self {
        LatticePoint { x, y }
    }
}

/// The eight symmetries of the square lattice, as integer maps fixing cell
/// `(0, 0)`. Combined with translation they generate the congruences used for
/// free polyominoes and congruent diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dihedral {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    MirrorX,
    MirrorY,
    Transpose,
    AntiTranspose,
}

impl Dihedral {
    pub const ALL: [Dihedral; 8] = [
        Dihedral::Identity,
        Dihedral::Rot90,
        Dihedral::Rot180,
        Dihedral::Rot270,
        Dihedral::MirrorX,
        Dihedral::MirrorY,
        Dihedral::Transpose,
        Dihedral::AntiTranspose,
    ];

    pub fn apply(self, c: CellCoord) -> CellCoord {
        let CellCoord { x, y } = c;
        let (x, y) = match self {
            Dihedral::Identity => (x, y),
            Dihedral::Rot90 => (-y, x),
            Dihedral::Rot180 => (-x, -y),
            Dihedral::Rot270 => (y, -x),
            Dihedral::MirrorX => (-x, y),
            Dihedral::MirrorY => (x, -y),
            Dihedral::Transpose => (y, x),
            Dihedral::AntiTranspose => (-y, -x),
        };
        CellCoord::new(x, y)
    }

    /// True if the transform exchanges the roles of width and height.
    pub fn swaps_axes(self) -> bool {
        matches!(
            self,
            Dihedral::Rot90 | Dihedral::Rot270 | Dihedral::Transpose | Dihedral::AntiTranspose
        )
    }
}

/// Inclusive extents of a nonempty set of cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub min_x: i32,
    pub max_x: i32,
    pub min_y: i32,
    pub max_y: i32,
}

impl Bounds {
    fn of(mut cells: impl Iterator<Item = CellCoord>) -> Option<Bounds> {
        let first = cells.next()?;
        let mut b = Bounds {
            min_x: first.x,
            max_x: first.x,
            min_y: first.y,
            max_y: first.y,
        };
        for c in cells {
            b.min_x = b.min_x.min(c.x);
            b.max_x = b.max_x.max(c.x);
            b.min_y = b.min_y.min(c.y);
            b.max_y = b.max_y.max(c.y);
        }
        Some(b)
    }

    pub fn width(&self) -> u32 {
        (self.max_x - self.min_x + 1) as u32
    }

    pub fn height(&self) -> u32 {
        (self.max_y - self.min_y + 1) as u32
    }

    pub fn contains(&self, c: CellCoord) -> bool {
        (self.min_x..=self.max_x).contains(&c.x) && (self.min_y..=self.max_y).contains(&c.y)
    }

    /// The same box grown by `by` cells on every side.
    pub fn inflate(&self, by: i32) -> Bounds {
        Bounds {
            min_x: self.min_x - by,
            max_x: self.max_x + by,
            min_y: self.min_y - by,
            max_y: self.max_y + by,
        }
    }
}

/// A finite set of lattice cells, iterated in `(x, y)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSet(BTreeSet<CellCoord>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, c: CellCoord) -> bool {
        self.0.insert(c)
    }

    pub fn contains(&self, c: CellCoord) -> bool {
        self.0.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = CellCoord> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<CellCoord> {
        self.0.first().copied()
    }

    pub fn bounds(&self) -> Option<Bounds> {
        Bounds::of(self.iter())
    }

    pub fn map(&self, f: impl Fn(CellCoord) -> CellCoord) -> CellSet {
        self.iter().map(f).collect()
    }

    /// Translates so that the minimum x and minimum y are both zero.
    pub fn normalized(&self) -> CellSet {
        match self.bounds() {
            Some(b) => self.map(|c| c.offset(-b.min_x, -b.min_y)),
            None => CellSet::new(),
        }
    }
}

impl FromIterator<CellCoord> for CellSet {
    fn from_iter<I: IntoIterator<Item = CellCoord>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a CellCoord;
    type IntoIter = std::collections::btree_set::Iter<'a, CellCoord>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An orthogonal unit-grid drawing: `n` curves and the subset covering each
/// occupied cell. Stored masks are always nonempty and fit in `n` bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    n: u32,
    cells: BTreeMap<CellCoord, SubsetMask>,
}

impl GridDiagram {
    /// An empty diagram with `n` curves, `1 <= n <= MAX_CURVES`.
    pub fn new(n: u32) -> Result<Self> {
        if !(1..=MAX_CURVES).contains(&n) {
            return Err(Error::CurveCount {
                n,
                min: 1,
                max: MAX_CURVES,
            });
        }
        Ok(GridDiagram {
            n,
            cells: BTreeMap::new(),
        })
    }

    pub fn from_cells<I>(n: u32, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CellCoord, SubsetMask)>,
    {
        let mut d = GridDiagram::new(n)?;
        for (c, m) in cells {
            d.insert(c, m)?;
        }
        Ok(d)
    }

    /// Adds one occupied cell. Fails on an empty or oversized mask, or if
    /// the cell is already occupied.
    pub fn insert(&mut self, cell: CellCoord, mask: SubsetMask) -> Result<()> {
        self.check_mask(mask)?;
        if self.cells.contains_key(&cell) {
            return Err(Error::DuplicateCell(cell));
        }
        self.cells.insert(cell, mask);
        Ok(())
    }

    fn check_mask(&self, mask: SubsetMask) -> Result<()> {
        if mask.is_empty() {
            return Err(Error::EmptyMask);
        }
        if !mask.fits(self.n) {
            return Err(Error::MaskOutOfRange {
                mask: mask.bits(),
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, cell: CellCoord) -> Option<SubsetMask> {
        self.cells.get(&cell).copied()
    }

    /// Occupied cells and their masks in `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = (CellCoord, SubsetMask)> + '_ {
        self.cells.iter().map(|(c, m)| (*c, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of occupied cells.
    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn support(&self) -> CellSet {
        self.cells.keys().copied().collect()
    }

    /// Cells enclosed by curve `i`.
    pub fn curve_cells(&self, i: u32) -> Result<CellSet> {
        if i >= self.n {
            return Err(Error::CurveIndex {
                index: i,
                n: self.n,
            });
        }
        Ok(self
            .iter()
            .filter(|(_, m)| m.contains(i))
            .map(|(c, _)| c)
            .collect())
    }

    /// Cells whose mask is exactly `mask`.
    pub fn region_cells(&self, mask: SubsetMask) -> Result<CellSet> {
        self.check_mask(mask)?;
        Ok(self
            .iter()
            .filter(|(_, m)| *m == mask)
            .map(|(c, _)| c)
            .collect())
    }

    pub fn bounds(&self) -> Option<Bounds> {
        Bounds::of(self.cells.keys().copied())
    }

    /// Tight `(width, height)` of the occupied cells.
    pub fn bounding_box(&self) -> Result<(u32, u32)> {
        self.bounds()
            .map(|b| (b.width(), b.height()))
            .ok_or(Error::EmptyDiagram)
    }

    pub fn translated(&self, dx: i32, dy: i32) -> GridDiagram {
        GridDiagram {
            n: self.n,
            cells: self.iter().map(|(c, m)| (c.offset(dx, dy), m)).collect(),
        }
    }

    pub fn transformed(&self, t: Dihedral) -> GridDiagram {
        GridDiagram {
            n: self.n,
            cells: self.iter().map(|(c, m)| (t.apply(c), m)).collect(),
        }
    }
}
