//! Median-of-5 timings for k = n/2, printed as CSV with growth ratios.
//!
//! ```text
//! cargo run --release --example scaling_bench -- 20 36
//! ```

use ppm::cli::{bench_row, Algorithm, BenchRow};

fn main() -> ppm::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer bound"));
    let lo = args.next().unwrap_or(20);
    let hi = args.next().unwrap_or(32);

    println!("{},ratio", BenchRow::HEADER);
    let mut prev: Option<u128> = None;
    for n in (lo..=hi).step_by(4) {
        let row = bench_row(Algorithm::Fast, n, n / 2, 0, 5, 1)?;
        let ratio = prev.map_or(String::new(), |p| {
            format!("{:.2}", row.nanos_median as f64 / p as f64)
        });
        println!("{},{ratio}", row.csv());
        prev = Some(row.nanos_median);
    }
    Ok(())
}
