// Conjugacy classes and power maps of a small group.

use cutgroups::{constructions, structure::conjugacy_classes};

fn main() -> cutgroups::Result<()> {
    let g = constructions::symmetric(5)?;
    let table = conjugacy_classes(&g, 1000)?;
    println!("S5 has {} classes", table.len());
    println!("class  size  order  rep            squares to");
    for c in 0..table.len() {
        println!(
            "{c:>5} {:>5} {:>6}  {:<14} {}",
            table.size(c),
            table.rep_order(c),
            table.rep(c).to_string(),
            table.power_class(c, 2)
        );
    }
    let total: usize = table.sizes().iter().sum();
    println!("class sizes sum to {total} = |S5|");

    let q8 = constructions::dicyclic(2)?;
    let t = conjugacy_classes(&q8, 100)?;
    println!("Q8 class sizes: {:?}", t.sizes());
    Ok(())
}
