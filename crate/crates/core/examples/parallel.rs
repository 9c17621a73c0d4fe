//! Split the family over threads; the count does not depend on the split.

use std::time::Instant;

use ppm::rng::planted_instance;
use ppm::{count_ppm, count_ppm_parallel};

fn main() {
    let threads = std::thread::available_parallelism()
        .map_or(4, |t| t.get())
        .max(2);
    let instance = planted_instance(38, 19, 2);

    let start = Instant::now();
    let serial = count_ppm(&instance);
    println!("1 thread:  {serial} in {:?}", start.elapsed());

    let start = Instant::now();
    let parallel = count_ppm_parallel(&instance, threads);
    println!("{threads} threads: {parallel} in {:?}", start.elapsed());
    assert_eq!(serial, parallel);
}
