//! Symmetric chain decompositions of the Boolean lattice on `n` elements.
//!
//! Element `k` (1-based) of the ground set is bit `k - 1` of a
//! [`SubsetMask`], printed as letter `'A' + k - 1`.

use std::cmp::Ordering;
use std::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::model::{SubsetMask, MAX_CURVES};

/// A sequence of subsets `x_1, .., x_t` of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain(Vec<SubsetMask>);

impl Chain {
    pub fn new(elements: Vec<SubsetMask>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidDecomposition("empty chain".into()));
        }
        Ok(Chain(elements))
    }

    pub fn elements(&self) -> &[SubsetMask] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every consecutive pair is a strict inclusion.
    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0].is_proper_subset_of(w[1]))
    }

    /// `|x_i| = n - |x_{t-i+1}|` for `1 <= i <= ceil(t/2)`.
    pub fn is_symmetric(&self, n: u32) -> bool {
        let t = self.0.len();
        (0..t.div_ceil(2)).all(|i| self.0[i].len() + self.0[t - 1 - i].len() == n)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An ordered list of chains claimed to partition the subsets of `{1..n}`.
/// Use [`validate_scd`] to check the claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub n: u32,
    pub chains: Vec<Chain>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain lengths in emission order.
    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Chain::len).collect()
    }
}

/// `C(n, floor(n/2))`, the number of chains in any symmetric chain
/// decomposition.
pub fn central_binomial(n: u32) -> u64 {
    binomial(n as u64, n as u64 / 2)
}

fn check_ground_size(n: u32) -> Result<()> {
    if !(1..=MAX_CURVES).contains(&n) {
        return Err(Error::CurveCount {
            n,
            min: 1,
            max: MAX_CURVES,
        });
    }
    Ok(())
}

/// Smallest element of `x` not in `y`; `None` stands for negative infinity
/// (`x` is a subset of `y`).
fn first_missing(x: SubsetMask, y: SubsetMask) -> Option<u32> {
    let diff = x.bits() & !y.bits();
    (diff != 0).then(|| diff.trailing_zeros())
}

/// Lexicographic comparison: `x` precedes `y` iff `m(x, y) < m(y, x)` where
/// `m(x, y)` is the smallest element of `x` not in `y`, or negative infinity
/// when `x` is a subset of `y`.
///
/// This is a total order on subsets of equal size, which is the only way
/// [`scd_aigner`] uses it. Across sizes it is not transitive:
/// `{B} < {A,B} < {A,C} < {B}`.
pub fn lex_compare(x: SubsetMask, y: SubsetMask) -> Result<Ordering> {
    if x == y {
        return Err(Error::EqualSubsets(x));
    }
    // None < Some(_) encodes the negative-infinity sentinel.
    Ok(first_missing(x, y).cmp(&first_missing(y, x)))
}

fn lex(x: &SubsetMask, y: &SubsetMask) -> Ordering {
    if x == y {
        Ordering::Equal
    } else {
        lex_compare(*x, *y).expect("distinct")
    }
}

/// The de Bruijn–van Ebbenhorst Tengbergen–Kruyswijk inductive construction
/// ("Christmas tree pattern"). Each step adjoins the next element `k` and
/// replaces every chain `x_1..x_t` with `x_2..x_t` (dropped when `t = 1`)
/// followed by `x_1, x_1+k, x_2+k, .., x_t+k`.
pub fn scd_christmas_tree(n: u32) -> Result<ChainDecomposition> {
    check_ground_size(n)?;
    let mut chains: Vec<Vec<SubsetMask>> = vec![vec![SubsetMask::EMPTY, SubsetMask::singleton(0)]];
    for k in 1..n {
        let mut next = Vec::with_capacity(chains.len() * 2);
        for chain in chains {
            if chain.len() > 1 {
                next.push(chain[1..].to_vec());
            }
            let mut grown = Vec::with_capacity(chain.len() + 1);
            grown.push(chain[0]);
            grown.extend(chain.iter().map(|x| x.with(k)));
            next.push(grown);
        }
        chains = next;
    }
    Ok(ChainDecomposition {
        n,
        chains: chains.into_iter().map(Chain).collect(),
    })
}

/// Aigner's greedy lexicographic decomposition. Each chain starts at the
/// lex-least uncovered subset of the smallest rank that still has one, and is
/// extended by the lex-least uncovered superset one size larger until none
/// remains.
pub fn scd_aigner(n: u32) -> Result<ChainDecomposition> {
    check_ground_size(n)?;
    let total = 1usize << n;
    let mut ranks: Vec<Vec<SubsetMask>> = vec![Vec::new(); n as usize + 1];
    for bits in 0..total as u32 {
        let m = SubsetMask::from_bits(bits);
        ranks[m.len() as usize].push(m);
    }
    for rank in &mut ranks {
        rank.sort_by(lex);
    }

    let mut covered = vec![false; total];
    let mut cursor = vec![0usize; n as usize + 1];
    let mut remaining = total;
    let mut chains = Vec::new();
    while remaining > 0 {
        let mut start = None;
        for (j, rank) in ranks.iter().enumerate() {
            while cursor[j] < rank.len() && covered[rank[cursor[j]].bits() as usize] {
                cursor[j] += 1;
            }
            if cursor[j] < rank.len() {
                start = Some(rank[cursor[j]]);
                break;
            }
        }
        let mut x = start.expect("uncovered subsets remain");
        let mut chain = Vec::new();
        loop {
            covered[x.bits() as usize] = true;
            remaining -= 1;
            chain.push(x);
            let succ = (0..n)
                .filter(|&i| !x.contains(i))
                .map(|i| x.with(i))
                .filter(|y| !covered[y.bits() as usize])
                .min_by(lex);
            match succ {
                Some(y) => x = y,
                None => break,
            }
        }
        chains.push(Chain(chain));
    }
    Ok(ChainDecomposition { n, chains })
}

/// Independent pass/fail flags for a claimed symmetric chain decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScdReport {
    /// Chains are disjoint and cover every subset of the ground set.
    pub partition_ok: bool,
    /// Exactly `C(n, floor(n/2))` chains.
    pub count_ok: bool,
    /// Strict inclusion between consecutive elements.
    pub eq1_ok: bool,
    /// Rank symmetry about `n/2`.
    pub eq2_ok: bool,
}

impl ScdReport {
    pub fn passed(&self) -> bool {
        self.partition_ok && self.count_ok && self.eq1_ok && self.eq2_ok
    }
}

pub fn validate_scd(dec: &ChainDecomposition) -> ScdReport {
    let n = dec.n;
    let partition_ok = if (1..=MAX_CURVES).contains(&n) {
        let mut seen = vec![false; 1usize << n];
        let mut ok = true;
        for m in dec.chains.iter().flat_map(|c| c.elements()) {
            if !m.fits(n) || std::mem::replace(&mut seen[m.bits() as usize], true) {
                ok = false;
                break;
            }
        }
        ok && seen.iter().all(|&s| s)
    } else {
        false
    };
    let count_ok = n <= MAX_CURVES && dec.chains.len() as u64 == central_binomial(n);
    ScdReport {
        partition_ok,
        count_ok,
        eq1_ok: dec.chains.iter().all(|c| !c.is_empty() && c.is_strictly_increasing()),
        eq2_ok: dec.chains.iter().all(|c| !c.is_empty() && c.is_symmetric(n)),
    }
}
