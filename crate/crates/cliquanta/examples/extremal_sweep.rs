//! Exhaustive check, over every isomorphism class of small graphs with a
//! degree cap, that the clique-count bound a(2^{r+1} - 1) + 2^b holds and
//! that the certified maximizers attain it.

use cliquanta::{bounds, canon, cliques, enumerate, verify};
use num::BigUint;

fn main() -> cliquanta::Result<()> {
    for (n, r) in [(6, 2), (7, 2), (6, 3), (8, 3)] {
        let bound = bounds::cutler_radcliffe_bound(n, r)?;
        let classes = enumerate::enumerate_graphs(n, r)?;
        let mut best = BigUint::from(0u32);
        let mut argmax = Vec::new();
        for g in &classes {
            let total = cliques::k_total(g)?;
            if total > best {
                best = total.clone();
                argmax.clear();
            }
            if total == best {
                argmax.push(canon::canonical_g6(g)?);
            }
        }
        assert!(best <= bound);
        println!(
            "n = {n}, max degree {r}: {} classes, bound {bound}, best {best}",
            classes.len()
        );
        for g6 in &argmax {
            println!("  maximizer: {g6}");
        }

        // the verification sweep reaches the same verdict with equality
        // cases attached
        let cert = verify::verify_extremal(n, r)?;
        assert!(cert.is_verified());
        println!(
            "  certificate: {:?}, {} equality case(s), {} ms",
            cert.verdict,
            cert.equality_cases.len(),
            cert.runtime_ms
        );
    }
    Ok(())
}
