//! Constructive layouts of polyomino Venn diagrams and their area figures.
//!
//! Both constructions start from a one-row rectangle of full-set cells whose
//! leftmost cell is `(0, 0)` and attach every other nonempty region around
//! it. The naive layout gives each region its own perimeter cell; the chain
//! layout stacks each symmetric chain in a single column (or row) so that
//! fewer perimeter slots, and hence a shorter rectangle, are needed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::model::{CellCoord, GridDiagram, SubsetMask, MAX_CURVES};
use crate::scd::{central_binomial, scd_aigner, scd_christmas_tree, validate_scd, ChainDecomposition};

/// Diagram construction selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    ScdAigner,
    ScdChristmas,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Naive, Method::ScdAigner, Method::ScdChristmas];

    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::ScdAigner => "scd-aigner",
            Method::ScdChristmas => "scd-christmas",
        }
    }

    /// Smallest supported curve count.
    pub fn min_n(self) -> u32 {
        match self {
            Method::Naive => 3,
            Method::ScdAigner | Method::ScdChristmas => 2,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Which area formula [`approximation_ratio`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioMethod {
    Naive,
    Scd,
}

fn check_n(n: u32, min: u32) -> Result<()> {
    if !(min..=MAX_CURVES).contains(&n) {
        return Err(Error::CurveCount {
            n,
            min,
            max: MAX_CURVES,
        });
    }
    Ok(())
}

/// `2^n - 1`: one cell for every bounded region.
pub fn minimum_area(n: u32) -> u64 {
    (1u64 << n) - 1
}

/// Area of [`layout_naive`]: `2^n + 2^(n-1) - 4`.
pub fn naive_area(n: u32) -> u64 {
    (1u64 << n) + (1u64 << (n - 1)) - 4
}

/// Rectangle width used by [`layout_scd`]: `max(1, ceil((C - 2) / 2))` with
/// `C = C(n, floor(n/2))`.
pub fn scd_rectangle_width(n: u32) -> u64 {
    let c = central_binomial(n);
    (c.saturating_sub(2)).div_ceil(2).max(1)
}

/// Area of [`layout_scd`]: rectangle width plus the `2^n - 2` proper nonempty
/// regions.
pub fn scd_area(n: u32) -> u64 {
    scd_rectangle_width(n) + (1u64 << n) - 2
}

/// The naive layout: a `1 x (2^(n-1) - 2)` rectangle of full-set cells with
/// the remaining `2^n - 2` regions placed one per perimeter cell, clockwise
/// from the cell above `(0, 0)`, in ascending mask order.
pub fn layout_naive(n: u32) -> Result<GridDiagram> {
    check_n(n, 3)?;
    let len = (1i32 << (n - 1)) - 2;
    let full = SubsetMask::full(n);
    let mut d = GridDiagram::new(n)?;
    for x in 0..len {
        d.insert(CellCoord::new(x, 0), full)?;
    }
    let ring = (0..len)
        .map(|x| CellCoord::new(x, 1))
        .chain([CellCoord::new(len, 0)])
        .chain((0..len).rev().map(|x| CellCoord::new(x, -1)))
        .chain([CellCoord::new(-1, 0)]);
    for (cell, bits) in ring.zip(1..full.bits()) {
        d.insert(cell, SubsetMask::from_bits(bits))?;
    }
    Ok(d)
}

/// The chain layout. Empty and full sets are dropped from their chains; the
/// remaining chains fill the slots above the rectangle (left to right), then
/// below it, then the left and right ends. Each chain grows outward with its
/// largest element touching the rectangle, so every curve is column-convex.
pub fn layout_scd(n: u32, dec: &ChainDecomposition) -> Result<GridDiagram> {
    check_n(n, 2)?;
    if dec.n != n {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition is over {} elements, expected {n}",
            dec.n
        )));
    }
    let report = validate_scd(dec);
    if !report.passed() {
        return Err(Error::InvalidDecomposition(format!("{report:?}")));
    }

    let width = scd_rectangle_width(n) as i32;
    let full = SubsetMask::full(n);
    let mut d = GridDiagram::new(n)?;
    for x in 0..width {
        d.insert(CellCoord::new(x, 0), full)?;
    }

    // (first cell, outward step) per slot
    let mut slots = (0..width)
        .map(|x| (CellCoord::new(x, 1), (0, 1)))
        .chain((0..width).map(|x| (CellCoord::new(x, -1), (0, -1))))
        .chain([
            (CellCoord::new(-1, 0), (-1, 0)),
            (CellCoord::new(width, 0), (1, 0)),
        ]);
    let chains = dec.chains.iter().map(|c| {
        c.elements()
            .iter()
            .copied()
            .filter(|m| !m.is_empty() && *m != full)
            .collect::<Vec<_>>()
    });
    for chain in chains.filter(|c| !c.is_empty()) {
        let (mut cell, (dx, dy)) = slots.next().ok_or_else(|| {
            Error::InvalidDecomposition("more chains than perimeter slots".into())
        })?;
        for &m in chain.iter().rev() {
            d.insert(cell, m)?;
            cell = cell.offset(dx, dy);
        }
    }
    Ok(d)
}

/// Builds the diagram for `method`.
pub fn generate(n: u32, method: Method) -> Result<GridDiagram> {
    match method {
        Method::Naive => layout_naive(n),
        Method::ScdAigner => {
            check_n(n, 2)?;
            layout_scd(n, &scd_aigner(n)?)
        }
        Method::ScdChristmas => {
            check_n(n, 2)?;
            layout_scd(n, &scd_christmas_tree(n)?)
        }
    }
}

/// Exact ratio of a construction's area to the minimum `2^n - 1`.
///
/// Evaluated from the closed-form areas, which match the built layouts
/// cell for cell; see the tests.
pub fn approximation_ratio(method: RatioMethod, n: u32) -> Result<Ratio<u64>> {
    let area = match method {
        RatioMethod::Naive => {
            check_n(n, 3)?;
            naive_area(n)
        }
        RatioMethod::Scd => {
            check_n(n, 2)?;
            scd_area(n)
        }
    };
    Ok(Ratio::new(area, minimum_area(n)))
}

/// Largest `m` accepted by [`central_binomial_bound_holds`].
pub const MAX_BOUND_M: u32 = 30;

/// Pi to 40 decimal places, as an integer scaled by `10^40`.
const PI_SCALED: &str = "31415926535897932384626433832795028841971";
const PI_SCALE_DIGITS: u32 = 40;

/// Exact `C(2m, m)`.
pub fn central_binomial_big(m: u32) -> BigUint {
    let mut c = BigUint::one();
    for i in 1..=m as u64 {
        c = c * (m as u64 + i) / i;
    }
    c
}

/// Floating-point value of `4^m / (sqrt(pi) (m^2 + m/2 + 3/32)^(1/4))`.
pub fn central_binomial_bound_rhs(m: u32) -> f64 {
    let m = m as f64;
    4f64.powf(m) / (std::f64::consts::PI.sqrt() * (m * m + m / 2.0 + 3.0 / 32.0).powf(0.25))
}

/// Decides `C(2m, m) < 4^m / (sqrt(pi) (m^2 + m/2 + 3/32)^(1/4))` exactly.
///
/// Raising both sides to the fourth power gives
/// `C^4 pi^2 (32m^2 + 16m + 3) < 32 * 4^(4m)`, which is checked in integers
/// with pi bracketed by 40-digit rationals.
pub fn central_binomial_bound_holds(m: u32) -> Result<bool> {
    if !(1..=MAX_BOUND_M).contains(&m) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as u64,
            min: 1,
            max: MAX_BOUND_M as u64,
        });
    }
    let c = central_binomial_big(m);
    let c4 = Pow::pow(&c, 4u32);
    let q = BigUint::from(32u64 * (m as u64).pow(2) + 16 * m as u64 + 3);
    let scale2 = Pow::pow(BigUint::from(10u32), 2 * PI_SCALE_DIGITS);
    let rhs = BigUint::from(32u32) * Pow::pow(BigUint::from(4u32), 4 * m) * scale2;
    let pi_lo: BigUint = PI_SCALED.parse().expect("digits");
    let pi_hi = &pi_lo + 1u32;
    let lhs = |pi: &BigUint| &c4 * pi * pi * &q;
    if lhs(&pi_hi) < rhs {
        Ok(true)
    } else if lhs(&pi_lo) >= rhs {
        Ok(false)
    } else {
        Err(Error::Undecided(m))
    }
}
