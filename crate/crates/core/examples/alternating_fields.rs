// |Q(A_n):Q| from cycle types, checked against full enumeration where that
// is still cheap.

use cutgroups::rationality::{alternating_field, qg_degree};
use cutgroups::{constructions, DEFAULT_CAP};

fn main() -> cutgroups::Result<()> {
    println!("{:>3} {:>10} {:>10}", "n", "exp(A_n)", "|Q(A_n):Q|");
    for n in 4..=14 {
        let row = alternating_field(n, 14)?;
        println!("{:>3} {:>10} {:>10}", row.n, row.exponent, row.qg_degree);
    }
    for n in 4..=7 {
        let enumerated = qg_degree(&constructions::alternating(n)?, DEFAULT_CAP)?;
        println!("A{n} by enumeration: {enumerated}");
    }
    Ok(())
}
