// Sylow subgroups, p-cores and the derived series.

use cutgroups::structure::{derived_series, exponent, is_elementary_abelian, p_core, sylow};
use cutgroups::{constructions, DEFAULT_CAP};

fn main() -> cutgroups::Result<()> {
    let s4 = constructions::symmetric(4)?;
    for p in [2, 3] {
        let s = sylow(&s4, p, DEFAULT_CAP)?;
        let o = p_core(&s4, p, DEFAULT_CAP)?;
        println!("S4: |Syl_{p}| = {}, |O_{p}| = {}", s.order(), o.order());
    }
    let orders: Vec<_> = derived_series(&s4).iter().map(|h| h.order()).collect();
    println!("S4 derived series orders: {orders:?}");

    let f = constructions::sylnorm(7)?;
    let p7 = sylow(&f, 7, DEFAULT_CAP)?;
    println!(
        "C7:C6: Sylow 7 elementary abelian {}, normal {}",
        is_elementary_abelian(p7.as_group(), 7, DEFAULT_CAP)?,
        p_core(&f, 7, DEFAULT_CAP)?.order() == p7.order()
    );

    let w = constructions::iterated_wreath(3, 2)?;
    let o3 = p_core(&w, 3, DEFAULT_CAP)?;
    println!(
        "S3 wr S3: order {}, |O_3| = {}, exp(O_3) = {}",
        w.order(),
        o3.order(),
        exponent(o3.as_group(), DEFAULT_CAP)?
    );
    Ok(())
}
