//! Predicates and counting for polyominoes: connectivity, holes, boundary
//! tracing, convexity, canonical forms and small-size enumeration.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::model::{Bounds, CellCoord, CellSet, Dihedral, LatticePoint};

/// Largest size accepted by the brute-force enumerators.
pub const MAX_ENUMERATION_SIZE: usize = 8;
/// Largest size accepted by the column-convex brute-force filter.
pub const MAX_COLUMN_CONVEX_BRUTEFORCE: usize = 7;

/// Breadth-first fill from `start` over cells accepted by `passable`.
pub(crate) fn flood<F>(start: CellCoord, passable: F) -> HashSet<CellCoord>
where
    F: Fn(CellCoord) -> bool,
{
    let mut seen = HashSet::new();
    if !passable(start) {
        return seen;
    }
    seen.insert(start);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if passable(nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen
}

/// Number of 4-connected components of `cells`.
pub(crate) fn component_count(cells: &CellSet) -> usize {
    let mut remaining: BTreeSet<CellCoord> = cells.iter().collect();
    let mut count = 0;
    while let Some(start) = remaining.pop_first() {
        count += 1;
        for c in flood(start, |c| cells.contains(c)) {
            remaining.remove(&c);
        }
    }
    count
}

/// Unoccupied cells inside `bounds` (inflated by one ring) that cannot reach
/// the ring through unoccupied cells.
pub(crate) fn enclosed_cells<F>(bounds: Bounds, occupied: F) -> Vec<CellCoord>
where
    F: Fn(CellCoord) -> bool,
{
    let ring = bounds.inflate(1);
    let outside = flood(CellCoord::new(ring.min_x, ring.min_y), |c| {
        ring.contains(c) && !occupied(c)
    });
    let mut enclosed = Vec::new();
    for x in bounds.min_x..=bounds.max_x {
        for y in bounds.min_y..=bounds.max_y {
            let c = CellCoord::new(x, y);
            if !occupied(c) && !outside.contains(&c) {
                enclosed.push(c);
            }
        }
    }
    enclosed
}

/// True iff `cells` is nonempty and 4-connected.
pub fn is_edge_connected(cells: &CellSet) -> bool {
    match cells.first() {
        None => false,
        Some(start) => flood(start, |c| cells.contains(c)).len() == cells.len(),
    }
}

/// True iff the complement of `cells`, infinite face included, is 4-connected.
pub fn is_hole_free(cells: &CellSet) -> bool {
    match cells.bounds() {
        None => true,
        Some(b) => enclosed_cells(b, |c| cells.contains(c)).is_empty(),
    }
}

/// A closed boundary path on lattice points. Edge `i` runs from `vertices[i]`
/// to `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perimeter {
    vertices: Vec<LatticePoint>,
}

impl Perimeter {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the signed enclosed area; positive for counterclockwise paths.
    pub fn signed_area2(&self) -> i64 {
        self.edges()
            .map(|(a, b)| a.x as i64 * b.y as i64 - b.x as i64 * a.y as i64)
            .sum()
    }
}

/// Directed unit boundary edges of `cells`, oriented with the interior on the
/// left.
fn boundary_edges(cells: &CellSet) -> Vec<(LatticePoint, LatticePoint)> {
    let p = LatticePoint::new;
    let mut edges = Vec::with_capacity(cells.len() * 4);
    for c in cells.iter() {
        let CellCoord { x, y } = c;
        if !cells.contains(c.offset(0, -1)) {
            edges.push((p(x, y), p(x + 1, y)));
        }
        if !cells.contains(c.offset(1, 0)) {
            edges.push((p(x + 1, y), p(x + 1, y + 1)));
        }
        if !cells.contains(c.offset(0, 1)) {
            edges.push((p(x + 1, y + 1), p(x, y + 1)));
        }
        if !cells.contains(c.offset(-1, 0)) {
            edges.push((p(x, y + 1), p(x, y)));
        }
    }
    edges
}

/// Traces the boundary of a hole-free polyomino counterclockwise, starting at
/// its least boundary vertex in `(x, y)` order. The result visits no lattice
/// point twice.
pub fn trace_perimeter(cells: &CellSet) -> Result<Perimeter> {
    if !is_edge_connected(cells) {
        return Err(Error::NotPolyomino("edge_connected"));
    }
    if !is_hole_free(cells) {
        return Err(Error::NotPolyomino("hole_free"));
    }
    let edges = boundary_edges(cells);
    let mut next: HashMap<LatticePoint, LatticePoint> = HashMap::with_capacity(edges.len());
    for &(a, b) in &edges {
        if next.insert(a, b).is_some() {
            return Err(Error::NotPolyomino("simple_perimeter"));
        }
    }
    let start = edges
        .iter()
        .map(|e| e.0)
        .min()
        .expect("nonempty polyomino has a boundary");
    let mut vertices = Vec::with_capacity(edges.len());
    let mut at = start;
    loop {
        vertices.push(at);
        at = next[&at];
        if at == start {
            break;
        }
        if vertices.len() > edges.len() {
            return Err(Error::NotPolyomino("simple_perimeter"));
        }
    }
    if vertices.len() != edges.len() {
        return Err(Error::NotPolyomino("simple_perimeter"));
    }
    Ok(Perimeter { vertices })
}

/// Row/column convexity flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convexity {
    pub row_convex: bool,
    pub column_convex: bool,
    pub convex: bool,
}

fn lines_contiguous(cells: &CellSet, key: impl Fn(CellCoord) -> (i32, i32)) -> bool {
    let mut runs: HashMap<i32, (i32, i32, usize)> = HashMap::new();
    for c in cells.iter() {
        let (line, pos) = key(c);
        let e = runs.entry(line).or_insert((pos, pos, 0));
        e.0 = e.0.min(pos);
        e.1 = e.1.max(pos);
        e.2 += 1;
    }
    runs.values()
        .all(|&(lo, hi, count)| (hi - lo + 1) as usize == count)
}

pub fn convexity_class(cells: &CellSet) -> Result<Convexity> {
    if !is_edge_connected(cells) {
        return Err(Error::NotPolyomino("edge_connected"));
    }
    let row_convex = lines_contiguous(cells, |c| (c.y, c.x));
    let column_convex = lines_contiguous(cells, |c| (c.x, c.y));
    Ok(Convexity {
        row_convex,
        column_convex,
        convex: row_convex && column_convex,
    })
}

/// Translation-normalized form: minimum x and y moved to zero.
pub fn canonical_fixed_form(cells: &CellSet) -> Result<CellSet> {
    if cells.is_empty() {
        return Err(Error::EmptyCellSet);
    }
    Ok(cells.normalized())
}

/// Representative of the free class (translations, rotations, reflections):
/// the lexicographically least sorted cell list among the eight normalized
/// images.
pub fn canonical_free_form(cells: &CellSet) -> Result<CellSet> {
    if cells.is_empty() {
        return Err(Error::EmptyCellSet);
    }
    Ok(Dihedral::ALL
        .iter()
        .map(|t| cells.map(|c| t.apply(c)).normalized())
        .min()
        .expect("eight images"))
}

fn check_size(k: usize, max: usize) -> Result<()> {
    if !(1..=max).contains(&k) {
        return Err(Error::OutOfRange {
            what: "polyomino size",
            value: k as u64,
            min: 1,
            max: max as u64,
        });
    }
    Ok(())
}

/// All fixed `k`-ominoes in translation-normalized form, in sorted order.
/// Grows every (k-1)-omino by each free neighbor cell and deduplicates.
pub fn enumerate_fixed_polyominoes(k: usize) -> Result<Vec<CellSet>> {
    check_size(k, MAX_ENUMERATION_SIZE)?;
    let mut level: BTreeSet<CellSet> = BTreeSet::from([CellSet::from_iter([CellCoord::ORIGIN])]);
    for _ in 1..k {
        let mut grown = BTreeSet::new();
        for poly in &level {
            for c in poly.iter() {
                for nb in c.neighbors() {
                    if poly.contains(nb) {
                        continue;
                    }
                    let mut bigger = poly.clone();
                    bigger.insert(nb);
                    grown.insert(bigger.normalized());
                }
            }
        }
        level = grown;
    }
    Ok(level.into_iter().collect())
}

pub fn count_fixed_polyominoes(k: usize) -> Result<u64> {
    Ok(enumerate_fixed_polyominoes(k)?.len() as u64)
}

pub fn count_free_polyominoes(k: usize) -> Result<u64> {
    let classes: BTreeSet<CellSet> = enumerate_fixed_polyominoes(k)?
        .iter()
        .map(|p| canonical_free_form(p).expect("nonempty"))
        .collect();
    Ok(classes.len() as u64)
}

/// Fixed column-convex `k`-ominoes from the recurrence
/// `a(k) = 5a(k-1) - 7a(k-2) + 4a(k-3)` seeded with 1, 2, 6, 19.
pub fn count_column_convex(k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "polyomino size",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let mut a: Vec<BigInt> = [1u32, 2, 6, 19].into_iter().map(BigInt::from).collect();
    while a.len() < k {
        let j = a.len();
        let next = 5 * &a[j - 1] - 7 * &a[j - 2] + 4 * &a[j - 3];
        a.push(next);
    }
    Ok(a[k - 1]
        .to_biguint()
        .expect("recurrence values are positive"))
}

/// Counts column-convex members of the full fixed enumeration.
pub fn count_column_convex_bruteforce(k: usize) -> Result<u64> {
    check_size(k, MAX_COLUMN_CONVEX_BRUTEFORCE)?;
    let polys = enumerate_fixed_polyominoes(k)?;
    Ok(polys
        .iter()
        .filter(|p| convexity_class(p).map(|c| c.column_convex).unwrap_or(false))
        .count() as u64)
}
