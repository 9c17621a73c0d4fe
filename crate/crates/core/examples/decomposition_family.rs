//! List the decomposition family for small (n, k) and show which member a
//! given solution falls into.

use ppm::solver::{canonical_guess, decomposition_family, enumerate_guesses, family_size};
use ppm::{canonical_decomposition, decomposition_of_guess, respects, Embedding};

fn main() -> ppm::Result<()> {
    let (n, k) = (9, 5);
    println!("n = {n}, k = {k}: {} members", family_size(n, k).unwrap());
    for g in enumerate_guesses(n, k)? {
        println!(
            "  guess {:?} -> {}",
            g.as_slice(),
            decomposition_of_guess(&g, n, k)?
        );
    }

    let f = Embedding::new(vec![1, 3, 5, 7, 9])?;
    let canonical = canonical_decomposition(&f, n)?;
    println!(
        "f = {:?}: canonical guess {:?}",
        f.as_slice(),
        canonical_guess(&f).as_slice()
    );
    for d in decomposition_family(n, k)? {
        if respects(&f, &d)? {
            println!("  respected by {d} (canonical: {})", d == canonical);
        }
    }
    Ok(())
}
