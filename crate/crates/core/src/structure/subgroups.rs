//! Sylow subgroups, p-cores, normalizers, derived series and exponents.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{is_p_power, lcm_all, p_part};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A subgroup given by generators that are known to lie in some parent group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: PermGroup,
}

impl Subgroup {
    /// Checks every generator against `parent` before accepting it.
    pub fn new(parent: &PermGroup, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if !parent.contains(g)? {
                return Err(Error::BadParam(format!("{g} is not in the parent group")));
            }
        }
        Ok(Self {
            group: parent.subgroup(gens)?,
        })
    }

    fn unchecked(group: PermGroup) -> Self {
        Self { group }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::unchecked(PermGroup::trivial(degree))
    }

    pub fn gens(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn as_group(&self) -> &PermGroup {
        &self.group
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.group.chain().contains(p)
    }
}

/// Greedy generating set: keeps each element not already generated by its predecessors.
fn generated_by<'a, I>(degree: usize, elements: I) -> PermGroup
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut group = PermGroup::trivial(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    for x in elements {
        if !group.chain().contains(x) {
            gens.push(x.clone());
            group = PermGroup::new(degree, gens.clone()).expect("non-empty");
        }
    }
    group
}

/// `x^m` where `m` is the p'-part of the order of `x`.
fn p_part_of(x: &Permutation, p: u64) -> Permutation {
    let order = x.order();
    x.pow((order / p_part(order, p)) as i64)
}

fn normalizes(g: &Permutation, h: &PermGroup) -> bool {
    let chain = h.chain();
    h.nontrivial_generators()
        .all(|x| chain.contains(&x.conjugate_by(g)))
}

fn normalizer_elements(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<Vec<Permutation>> {
    let e = g.enumeration(cap)?;
    Ok(e
        .elements()
        .iter()
        .filter(|x| normalizes(x, h))
        .cloned()
        .collect())
}

/// `N_G(H)` by filtering the enumeration of `G`.
pub fn normalizer(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<Subgroup> {
    let elements = normalizer_elements(g, h, cap)?;
    Ok(Subgroup::unchecked(generated_by(g.degree(), &elements)))
}

/// A Sylow p-subgroup grown through normalizers from the first element of order divisible by `p`.
pub fn sylow(g: &PermGroup, p: u64, cap: usize) -> Result<Subgroup> {
    let e = g.enumeration(cap)?;
    match e.elements().iter().find(|x| x.order() % p == 0) {
        Some(seed) => {
            let seed = seed.clone();
            sylow_containing(g, p, &seed, cap)
        }
        None => Ok(Subgroup::trivial(g.degree())),
    }
}

/// A Sylow p-subgroup containing the p-part of `seed`.
pub fn sylow_containing(
    g: &PermGroup,
    p: u64,
    seed: &Permutation,
    cap: usize,
) -> Result<Subgroup> {
    let order = g.check_cap(cap)? as u64;
    let target = p_part(order, p);
    let mut gens = vec![p_part_of(seed, p)];
    let mut current = g.subgroup(gens.clone())?;
    while current.order() < BigUint::from(target) {
        let n = normalizer_elements(g, &current, cap)?;
        let next = n
            .iter()
            .map(|x| p_part_of(x, p))
            .find(|y| !current.chain().contains(y))
            .expect("a proper p-subgroup grows inside its normalizer");
        gens.push(next);
        current = g.subgroup(gens.clone())?;
    }
    Ok(Subgroup::unchecked(current))
}

/// `O_p(G)`: elements of a Sylow p-subgroup whose whole class stays inside it.
pub fn p_core(g: &PermGroup, p: u64, cap: usize) -> Result<Subgroup> {
    let syl = sylow(g, p, cap)?;
    if syl.as_group().is_trivial() {
        return Ok(syl);
    }
    let table = g.class_table(cap)?;
    let els = table.elements();
    let inside: Vec<bool> = (0..table.len())
        .map(|c| table.members(c).iter().all(|&i| syl.contains(&els[i])))
        .collect();
    let syl_elements = syl.as_group().enumeration(cap)?;
    let core = syl_elements
        .elements()
        .iter()
        .filter(|x| inside[table.class_of(x).expect("Sylow lies in G")]);
    Ok(Subgroup::unchecked(generated_by(g.degree(), core)))
}

/// Normal closure of the generator commutators.
pub fn derived_subgroup(h: &PermGroup) -> Subgroup {
    let hgens: Vec<&Permutation> = h.nontrivial_generators().collect();
    let mut gens: Vec<Permutation> = Vec::new();
    for (i, a) in hgens.iter().enumerate() {
        for b in &hgens[i + 1..] {
            let c = a.commutator(b);
            if !c.is_identity() && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    if gens.is_empty() {
        return Subgroup::trivial(h.degree());
    }
    let mut current = h.subgroup(gens.clone()).expect("non-empty");
    let mut idx = 0;
    while idx < gens.len() {
        for g in &hgens {
            let c = gens[idx].conjugate_by(g);
            if !current.chain().contains(&c) {
                gens.push(c);
                current = h.subgroup(gens.clone()).expect("non-empty");
            }
        }
        idx += 1;
    }
    Subgroup::unchecked(current)
}

/// Subgroups `G = G⁰ ≥ G' ≥ G'' ≥ …` until the series stabilizes.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let order = g.order();
    let limit = order.bits() as usize + 1;
    let mut series = vec![g.clone()];
    for _ in 0..limit {
        let last = series.last().expect("non-empty");
        if last.order().is_one() {
            break;
        }
        let next = derived_subgroup(last).into_group();
        if next.order() == last.order() {
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g)
        .last()
        .map(|h| h.order().is_one())
        .unwrap_or(true)
}

pub fn exponent(g: &PermGroup, cap: usize) -> Result<u64> {
    let e = g.enumeration(cap)?;
    Ok(lcm_all(e.elements().iter().map(Permutation::order)))
}

pub fn is_elementary_abelian(h: &PermGroup, p: u64, cap: usize) -> Result<bool> {
    let exp = exponent(h, cap)?;
    Ok(h.is_abelian() && p.is_multiple_of(exp))
}

/// True iff `x^p ∈ P'` for every `x ∈ P`, i.e. `exp(P/P')` divides `p`.
pub fn abelianization_exponent_divides(pg: &PermGroup, p: u64, cap: usize) -> Result<bool> {
    let e = pg.enumeration(cap)?;
    let derived = derived_subgroup(pg);
    Ok(e
        .elements()
        .iter()
        .all(|x| derived.contains(&x.pow(p as i64))))
}

/// True iff every element of `h` has p-power order.
pub fn is_p_group(h: &PermGroup, p: u64) -> bool {
    h.order_u64().is_some_and(|n| is_p_power(n, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn s4() -> PermGroup {
        group(4, &["(1 2)", "(1 2 3 4)"])
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow(&s4(), 2, 100).unwrap().order(), BigUint::from(8u32));
        assert_eq!(sylow(&s4(), 3, 100).unwrap().order(), BigUint::from(3u32));
        assert!(sylow(&s4(), 5, 100).unwrap().as_group().is_trivial());
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        let p = sylow(&s3, 3, 100).unwrap();
        assert_eq!(p.order(), BigUint::from(3u32));
        assert!(p.gens().iter().all(|g| g.order() == 3));
    }

    #[test]
    fn cores() {
        let c3 = group(3, &["(1 2 3)"]);
        assert!(p_core(&c3, 2, 100).unwrap().as_group().is_trivial());
        let v4 = p_core(&s4(), 2, 100).unwrap();
        assert_eq!(v4.order(), BigUint::from(4u32));
        assert!(v4.contains(&Permutation::parse("(1 2)(3 4)", 4).unwrap()));
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(p_core(&s3, 3, 100).unwrap().order(), BigUint::from(3u32));
        assert!(p_core(&s3, 2, 100).unwrap().as_group().is_trivial());
    }

    #[test]
    fn normalizers() {
        let g = s4();
        assert_eq!(normalizer(&g, &g, 100).unwrap().order(), BigUint::from(24u32));
        let t = PermGroup::trivial(4);
        assert_eq!(normalizer(&g, &t, 100).unwrap().order(), BigUint::from(24u32));
        let s5 = group(5, &["(1 2 3 4 5)", "(1 2)"]);
        let p5 = group(5, &["(1 2 3 4 5)"]);
        assert_eq!(normalizer(&s5, &p5, 200).unwrap().order(), BigUint::from(20u32));
    }

    #[test]
    fn derived_and_solvable() {
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(derived_subgroup(&s3).order(), BigUint::from(3u32));
        assert_eq!(derived_subgroup(&s4()).order(), BigUint::from(12u32));
        let c6 = group(6, &["(1 2 3 4 5 6)"]);
        assert!(derived_subgroup(&c6).as_group().is_trivial());
        let orders: Vec<_> = derived_series(&s4()).iter().map(|h| h.order()).collect();
        let expected: Vec<BigUint> = [24u32, 12, 4, 1].iter().map(|&n| n.into()).collect();
        assert_eq!(orders, expected);
        assert!(is_solvable(&s4()));
        assert!(is_solvable(&c6));
        let a5 = group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(!is_solvable(&a5));
    }

    #[test]
    fn exponents() {
        let c4 = group(4, &["(1 2 3 4)"]);
        assert_eq!(exponent(&c4, 10).unwrap(), 4);
        let s3 = group(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(exponent(&s3, 10).unwrap(), 6);
        assert!(is_elementary_abelian(&PermGroup::trivial(3), 7, 10).unwrap());
        let v4 = group(4, &["(1 2)", "(3 4)"]);
        assert!(is_elementary_abelian(&v4, 2, 10).unwrap());
        assert!(!is_elementary_abelian(&c4, 2, 10).unwrap());
    }

    #[test]
    fn abelianization() {
        let c9 = group(9, &["(1 2 3 4 5 6 7 8 9)"]);
        assert!(!abelianization_exponent_divides(&c9, 3, 100).unwrap());
        let c3c3 = group(6, &["(1 2 3)", "(4 5 6)"]);
        assert!(abelianization_exponent_divides(&c3c3, 3, 100).unwrap());
    }
}
