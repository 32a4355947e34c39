// Standard families and wreath products.

use cutgroups::constructions::{self, FamilySpec};
use cutgroups::rationality::group_rationality;
use cutgroups::DEFAULT_CAP;

fn main() -> cutgroups::Result<()> {
    for spec in [
        "cyclic:6",
        "abelian:2,2,4",
        "dihedral:8",
        "dicyclic:4",
        "sylnorm:5",
        "direct:symmetric:3/cyclic:4",
        "wreath:cyclic:2/symmetric:3",
        "wreath-sylnorm:3:2",
    ] {
        let family: FamilySpec = spec.parse()?;
        let g = family.build()?;
        let r = group_rationality(&g, DEFAULT_CAP)?;
        println!(
            "{spec:<30} degree {:>3} order {:>5} cut {:<5} |Q(G):Q| {}",
            g.degree(),
            r.order,
            r.is_cut,
            r.qg_degree
        );
    }

    for (p, depth) in [(3, 4), (5, 3), (7, 2)] {
        for k in 1..=depth {
            let w = constructions::iterated_wreath(p, k)?;
            println!("depth {k} wreath of sylnorm({p}): degree {}, order {}", w.degree(), w.order());
        }
    }
    Ok(())
}
