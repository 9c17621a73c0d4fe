//! The linear-time count for a single segment decomposition, with its
//! operation counters.

use ppm::dp::{count_respecting_instrumented, segment_values};
use ppm::{parse_permutation, PpmInstance, SegmentDecomposition};

fn main() -> ppm::Result<()> {
    let instance = PpmInstance::new(
        parse_permutation("8 1 3 9 5 4 2 7 6")?,
        parse_permutation("5 2 3 1 4")?,
    )?;
    let d = SegmentDecomposition::new(9, vec![(1, 2), (2, 3), (3, 6), (6, 7), (7, 9)])?;

    println!("decomposition {d}");
    for (p, values) in segment_values(instance.sigma(), &d)?.iter().enumerate() {
        println!(
            "  pattern position {}: sorted text values {values:?}",
            p + 1
        );
    }
    let (count, stats) = count_respecting_instrumented(&instance, &d)?;
    println!("solutions respecting it: {count}");
    println!(
        "cells written {}, cursor steps {}, n + k = {}",
        stats.cell_writes,
        stats.cursor_advances,
        instance.n() + instance.k()
    );
    Ok(())
}
