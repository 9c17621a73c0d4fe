//! Compare the position-guessing baseline with the parity family on the same
//! instances.

use std::time::Instant;

use ppm::count_ppm;
use ppm::dp::LinearDp;
use ppm::oracle::bkm_report;
use ppm::rng::planted_instance;
use ppm::solver::family_size;

fn main() {
    println!(
        "{:>3} {:>3} {:>10} {:>10} {:>12} {:>12}",
        "n", "k", "family", "baseline", "t family", "t baseline"
    );
    for n in (12..=28).step_by(4) {
        let k = n / 2;
        let instance = planted_instance(n, k, n as u64);

        let start = Instant::now();
        let fast = count_ppm(&instance);
        let t_fast = start.elapsed();

        let start = Instant::now();
        let report = bkm_report(&instance, &mut LinearDp::new());
        let t_bkm = start.elapsed();

        assert_eq!(fast, report.count);
        println!(
            "{n:>3} {k:>3} {:>10} {:>10} {:>12?} {:>12?}",
            family_size(n, k).unwrap(),
            report.decompositions,
            t_fast,
            t_bkm
        );
    }
}
