//! The lower-bound construction: sizes next to the binomial they match and
//! next to the full family.

use ppm::selftest::lowerbound_family;
use ppm::solver::family_size;

fn main() -> ppm::Result<()> {
    for d in lowerbound_family(8, 5)? {
        println!("n = 8, k = 5: {d}");
    }
    println!();
    println!("{:>3} {:>3} {:>8} {:>8}", "n", "k", "lower", "family");
    for n in [8, 12, 16, 20] {
        for k in [n / 4, n / 2, n - 1] {
            let lower = lowerbound_family(n, k)?.len();
            println!("{n:>3} {k:>3} {lower:>8} {:>8}", family_size(n, k).unwrap());
        }
    }
    Ok(())
}
