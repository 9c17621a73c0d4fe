//! Linear-time counting of the solutions that respect one segment
//! decomposition.
//!
//! Pattern values are processed in increasing order. Level `i` holds one cell
//! per σ-value `j` in the segment of pattern position `p = π⁻¹(i)`, and
//!
//! ```text
//! DP[i][j] = Σ_{j' < j} DP[i-1][j'],      DP[0] = {(0, 1)}
//! ```
//!
//! Each segment's values are produced already sorted by a single bucket pass
//! over `σ⁻¹`, so the prefix sum is a forward merge of two sorted lists. The
//! total work is `O(n + k)` and only two levels are alive at any time.
//!
//! Cells are `u64` with checked addition. On overflow the run is repeated
//! with arbitrary-precision cells.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::Count;
use crate::domain::{Permutation, PpmInstance, SegmentDecomposition};
use crate::error::{PpmError, Result};

const NO_SEGMENT: u32 = u32::MAX;

/// Sorted σ-values per segment, `values_p = sort(σ([ℓ_p, r_p]))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SegmentValues {
    // offsets[p-1]..offsets[p] indexes segment p
    offsets: Vec<usize>,
    values: Vec<u32>,
}

impl SegmentValues {
    /// Number of segments.
    pub fn len(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted values of segment `p`, 1-based.
    pub fn get(&self, p: usize) -> &[u32] {
        &self.values[self.offsets[p - 1]..self.offsets[p]]
    }

    /// `Σ_p |values_p|`, at most `n + k - 1`.
    pub fn total_len(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (1..=self.len()).map(move |p| self.get(p))
    }

    /// Bucket pass: walk positions in σ-value order and append each value to
    /// the contiguous run of segments containing its position.
    fn fill(&mut self, sigma_inv: &[usize], d: &SegmentDecomposition, first_seg: &mut Vec<u32>) {
        let n = d.n();
        let k = d.len();
        first_seg.clear();
        first_seg.resize(n + 1, NO_SEGMENT);
        self.offsets.clear();
        self.offsets.push(0);
        let mut total = 0;
        for (idx, &(l, r)) in d.segments().iter().enumerate() {
            for first in &mut first_seg[l..=r] {
                if *first == NO_SEGMENT {
                    *first = idx as u32;
                }
            }
            total += r - l + 1;
            self.offsets.push(total);
        }

        self.values.clear();
        self.values.resize(total, 0);
        let mut fill: Vec<usize> = self.offsets[..k].to_vec();
        for (value, &q) in sigma_inv.iter().enumerate().skip(1) {
            if first_seg[q] == NO_SEGMENT {
                continue;
            }
            let mut p = first_seg[q] as usize;
            while p < k {
                let (l, r) = d.segments()[p];
                if q < l || q > r {
                    break;
                }
                self.values[fill[p]] = value as u32;
                fill[p] += 1;
                p += 1;
            }
        }
    }
}

/// Computes the sorted value lists of every segment of `d`.
pub fn segment_values(sigma: &Permutation, d: &SegmentDecomposition) -> Result<SegmentValues> {
    if d.n() != sigma.len() {
        return Err(PpmError::LengthMismatch {
            expected: sigma.len(),
            found: d.n(),
        });
    }
    let mut sigma_inv = vec![0; sigma.len() + 1];
    sigma_inv[1..].copy_from_slice(sigma.inverse().as_slice());
    let mut out = SegmentValues::default();
    out.fill(&sigma_inv, d, &mut Vec::new());
    Ok(out)
}

/// Operation counts of one DP run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    /// DP cells written, the level-0 sentinel included.
    pub cell_writes: usize,
    /// Steps of the merge cursor over the previous level.
    pub cursor_advances: usize,
    /// `Σ_p |values_p|` for the decomposition.
    pub segment_values: usize,
    /// Whether the run had to switch to arbitrary-precision cells.
    pub escalated: bool,
}

/// Anything that counts the solutions respecting a decomposition.
///
/// The solvers are generic over this so alternative implementations can be
/// plugged into the same summation loops.
pub trait RespectCounter {
    /// `d` must have `instance.k()` segments over `[instance.n()]`.
    fn count_respecting(&mut self, instance: &PpmInstance, d: &SegmentDecomposition) -> Count;
}

/// The linear-time DP with reusable scratch buffers.
///
/// One value per worker; it is not shared across threads.
#[derive(Debug, Default)]
pub struct LinearDp {
    values: SegmentValues,
    first_seg: Vec<u32>,
    sigma_inv: Vec<usize>,
    prev: Vec<(u32, u64)>,
    cur: Vec<(u32, u64)>,
    stats: DpStats,
}

impl LinearDp {
    pub fn new() -> Self {
        Self::default()
    }

    /// Statistics of the most recent run.
    pub fn last_stats(&self) -> DpStats {
        self.stats
    }

    pub fn count(&mut self, instance: &PpmInstance, d: &SegmentDecomposition) -> Count {
        assert_eq!(d.len(), instance.k(), "decomposition must have k segments");
        assert_eq!(d.n(), instance.n(), "decomposition must cover [n]");

        self.sigma_inv.clear();
        self.sigma_inv.push(0);
        self.sigma_inv
            .extend((1..=instance.n()).map(|v| instance.sigma_position_of(v)));
        self.values.fill(&self.sigma_inv, d, &mut self.first_seg);
        debug_assert!(self.values.total_len() < instance.n() + instance.k());

        self.stats = DpStats {
            segment_values: self.values.total_len(),
            ..DpStats::default()
        };
        if let Some(c) = run_levels(
            instance,
            &self.values,
            &mut self.prev,
            &mut self.cur,
            &mut self.stats,
        ) {
            return Count::from(c);
        }

        self.stats = DpStats {
            segment_values: self.values.total_len(),
            escalated: true,
            ..DpStats::default()
        };
        let (mut prev, mut cur) = (Vec::new(), Vec::new());
        let big: BigUint = run_levels(instance, &self.values, &mut prev, &mut cur, &mut self.stats)
            .expect("arbitrary-precision cells cannot overflow");
        Count::from(big)
    }
}

impl RespectCounter for LinearDp {
    fn count_respecting(&mut self, instance: &PpmInstance, d: &SegmentDecomposition) -> Count {
        self.count(instance, d)
    }
}

trait Cell: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Returns false on overflow.
    fn try_add(&mut self, rhs: &Self) -> bool;
}

impl Cell for u64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn try_add(&mut self, rhs: &Self) -> bool {
        match self.checked_add(*rhs) {
            Some(s) => {
                *self = s;
                true
            }
            None => false,
        }
    }
}

impl Cell for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_add(&mut self, rhs: &Self) -> bool {
        *self += rhs;
        true
    }
}

/// Returns `None` on overflow of `C`.
fn run_levels<C: Cell>(
    instance: &PpmInstance,
    values: &SegmentValues,
    prev: &mut Vec<(u32, C)>,
    cur: &mut Vec<(u32, C)>,
    stats: &mut DpStats,
) -> Option<C> {
    prev.clear();
    prev.push((0, C::one()));
    stats.cell_writes += 1;

    for level in 1..=instance.k() {
        let p = instance.pattern_position_of(level);
        cur.clear();
        let mut running = C::zero();
        let mut cursor = 0;
        for &j in values.get(p) {
            while cursor < prev.len() && prev[cursor].0 < j {
                if !running.try_add(&prev[cursor].1) {
                    return None;
                }
                cursor += 1;
                stats.cursor_advances += 1;
            }
            cur.push((j, running.clone()));
            stats.cell_writes += 1;
        }
        // Cells never exceed the final prefix sum; an all-zero level stays zero.
        if running.is_zero() {
            return Some(C::zero());
        }
        std::mem::swap(prev, cur);
    }

    let mut total = C::zero();
    for (_, c) in prev.iter() {
        if !total.try_add(c) {
            return None;
        }
    }
    Some(total)
}

fn check_shape(instance: &PpmInstance, d: &SegmentDecomposition) -> Result<()> {
    if d.len() != instance.k() {
        return Err(PpmError::LengthMismatch {
            expected: instance.k(),
            found: d.len(),
        });
    }
    if d.n() != instance.n() {
        return Err(PpmError::LengthMismatch {
            expected: instance.n(),
            found: d.n(),
        });
    }
    Ok(())
}

/// Number of solutions of `instance` that respect `d`.
pub fn count_respecting(instance: &PpmInstance, d: &SegmentDecomposition) -> Result<Count> {
    check_shape(instance, d)?;
    Ok(LinearDp::new().count(instance, d))
}

/// [`count_respecting`] together with the operation counts of the run.
pub fn count_respecting_instrumented(
    instance: &PpmInstance,
    d: &SegmentDecomposition,
) -> Result<(Count, DpStats)> {
    check_shape(instance, d)?;
    let mut dp = LinearDp::new();
    let c = dp.count(instance, d);
    Ok((c, dp.last_stats()))
}
