//! Venn diagrams whose curves are the outlines of polyominoes.
//!
//! The crate builds such diagrams on the unit grid (a naive perimeter layout
//! and a symmetric-chain layout whose area tends to the minimum `2^n - 1`),
//! checks arbitrary grid diagrams for Venn validity, classifies them as
//! minimum-area, minimum-bounding-box or congruent, and searches exhaustively
//! for minimum-area and box-filling diagrams with few curves.
//!
//! ```
//! use polyvenn::{generate, validate_venn, Method};
//!
//! let d = generate(5, Method::ScdAigner).unwrap();
//! assert_eq!(d.area(), 34);
//! assert!(validate_venn(&d).overall());
//! ```

pub mod error;
pub mod layout;
pub mod model;
pub mod polyomino;
pub mod pvn;
pub mod render;
pub mod scd;
pub mod search;
pub mod validation;

pub use error::{Error, Result};
pub use layout::{
    approximation_ratio, central_binomial_bound_holds, generate, layout_naive, layout_scd,
    minimum_area, Method, RatioMethod,
};
pub use model::{Bounds, CellCoord, CellSet, Dihedral, GridDiagram, LatticePoint, SubsetMask, MAX_CURVES};
pub use polyomino::{
    canonical_free_form, convexity_class, count_column_convex, count_column_convex_bruteforce,
    count_fixed_polyominoes, count_free_polyominoes, is_edge_connected, is_hole_free,
    trace_perimeter, Convexity, Perimeter,
};
pub use pvn::{parse_pvn, serialize_pvn};
pub use render::{render_ascii, render_svg};
pub use scd::{lex_compare, scd_aigner, scd_christmas_tree, validate_scd, Chain, ChainDecomposition, ScdReport};
pub use search::{search_fill_box, search_min_area, SearchLimits, SearchOutcome, SearchReport};
pub use validation::{curves_congruent, is_minimum_area, is_minimum_bbox, validate_venn, ValidationReport};
