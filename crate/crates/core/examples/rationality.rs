// Class-by-class rationality and the conjecture checks for a few groups.

use cutgroups::rationality::{group_rationality, run_checks, Check};
use cutgroups::{constructions, DEFAULT_CAP};

fn main() -> cutgroups::Result<()> {
    let groups = [
        ("C4", constructions::cyclic(4)?),
        ("C5", constructions::cyclic(5)?),
        ("C7:C6", constructions::sylnorm(7)?),
        ("Q8", constructions::dicyclic(2)?),
        ("A5", constructions::alternating(5)?),
        ("S5", constructions::symmetric(5)?),
    ];
    for (name, g) in &groups {
        let mut r = group_rationality(g, DEFAULT_CAP)?;
        r.check_results = run_checks(g, &r, &Check::ALL, DEFAULT_CAP)?;
        println!(
            "{name:<6} order {:>4}  rational {:<5}  cut {:<5}  semi-rational {:<5}  |Q(G):Q| = {}",
            r.order, r.is_rational, r.is_cut, r.is_semirational, r.qg_degree
        );
        for c in r.class_reports.iter().filter(|c| !c.is_rational) {
            println!(
                "         class {} (order {}): stabilizer {:?}, field degree {}{}",
                c.class_index,
                c.element_order,
                c.stabilizer,
                c.field_degree,
                if c.field_imaginary { ", imaginary" } else { "" }
            );
        }
        let summary: Vec<String> = r
            .check_results
            .iter()
            .map(|(k, v)| format!("{k}={}", v.status))
            .collect();
        println!("         {}", summary.join(" "));
    }
    Ok(())
}
