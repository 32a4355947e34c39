// Orders and membership from a Schreier-Sims stabilizer chain, without
// listing any elements.

use cutgroups::{constructions, PermGroup, Permutation};

fn main() -> cutgroups::Result<()> {
    let m11 = PermGroup::from_cycle_strings(
        11,
        &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"],
    )?;
    let chain = m11.chain();
    println!("M11: order {}", m11.order());
    println!("  base {:?}", chain.base().iter().map(|b| b + 1).collect::<Vec<_>>());
    println!("  orbit lengths {:?}", chain.orbit_lengths());
    println!("  strong generators: {}", chain.strong_generators().len());

    let odd: Permutation = Permutation::parse("(1 2)", 11)?;
    println!("  contains (1 2)? {}", m11.contains(&odd)?);

    let big = constructions::iterated_wreath(5, 3)?;
    println!("iterated wreath of the Sylow 5-normalizer, depth 3:");
    println!("  degree {}, order {}", big.degree(), big.order());

    let s12 = constructions::symmetric(12)?;
    match s12.elements(100_000) {
        Ok(els) => println!("S12 has {} elements", els.len()),
        Err(e) => println!("S12 is too big to list: {e}"),
    }
    Ok(())
}
