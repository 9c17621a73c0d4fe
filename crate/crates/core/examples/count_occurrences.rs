//! Count and list the occurrences of a pattern in a text permutation.
//!
//! ```text
//! cargo run --example count_occurrences
//! cargo run --example count_occurrences -- "8 1 3 9 5 4 2 7 6" "5 2 3 1 4"
//! ```

use ppm::{brute_force_enumerate, count_ppm, parse_permutation, PpmInstance};

fn main() -> ppm::Result<()> {
    let mut args = std::env::args().skip(1);
    let sigma = parse_permutation(&args.next().unwrap_or_else(|| "3 2 5 4 1".into()))?;
    let pattern = parse_permutation(&args.next().unwrap_or_else(|| "1 3 2".into()))?;
    let instance = PpmInstance::new(sigma, pattern)?;

    println!("text    {}", instance.sigma());
    println!("pattern {}", instance.pattern());
    println!("occurrences: {}", count_ppm(&instance));

    if instance.n() <= ppm::oracle::DEFAULT_MAX_N {
        for f in brute_force_enumerate(&instance)? {
            let values: Vec<usize> = f
                .as_slice()
                .iter()
                .map(|&q| instance.sigma().value(q))
                .collect();
            println!("  positions {:?} -> values {:?}", f.as_slice(), values);
        }
    }
    Ok(())
}
