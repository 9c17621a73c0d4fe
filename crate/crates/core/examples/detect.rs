//! Decide containment, stopping at the first decomposition with a solution.

use ppm::dp::LinearDp;
use ppm::rng::{planted_instance, random_instance};
use ppm::solver::{detect_ppm_report, family_size};

fn main() {
    let (n, k) = (40, 12);
    let total = family_size(n, k).unwrap();
    for seed in 0..4 {
        for (label, instance) in [
            ("planted", planted_instance(n, k, seed)),
            ("random ", random_instance(n, k, seed)),
        ] {
            let report = detect_ppm_report(&instance, &mut LinearDp::new());
            println!(
                "{label} seed {seed}: contains = {:5}, examined {:>6} of {total} decompositions",
                report.found, report.decompositions_examined
            );
        }
    }
}
