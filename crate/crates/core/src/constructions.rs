//! Builders for the standard families as permutation groups.
//!
//! Textual family specs look like `dihedral:12`, `abelian:2,2,3`,
//! `sylnorm:7`, `wreath-sylnorm:5:2`, `direct:symmetric:3/cyclic:4` and
//! `wreath:cyclic:2/cyclic:2`. In the two binary forms the left operand
//! ends at the first `/`.

use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, least_primitive_root};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest permutation degree any builder will produce.
pub const DEGREE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
    Wreath(Box<FamilySpec>, Box<FamilySpec>),
    Sylnorm(u64),
    IteratedWreath(u64, usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<PermGroup> {
        match self {
            FamilySpec::Cyclic(n) => cyclic(*n),
            FamilySpec::Abelian(f) => abelian(f),
            FamilySpec::Dihedral(n) => dihedral(*n),
            FamilySpec::Dicyclic(m) => dicyclic(*m),
            FamilySpec::Symmetric(n) => symmetric(*n),
            FamilySpec::Alternating(n) => alternating(*n),
            FamilySpec::DirectProduct(a, b) => direct_product(&a.build()?, &b.build()?),
            FamilySpec::Wreath(a, b) => wreath(&a.build()?, &b.build()?),
            FamilySpec::Sylnorm(p) => sylnorm(*p),
            FamilySpec::IteratedWreath(p, k) => iterated_wreath(*p, *k),
        }
    }
}

fn parse_int<T: FromStr>(text: &str, what: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| Error::BadParam(format!("{what}: expected an integer, got {text:?}")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::BadParam(format!("family spec {s:?} has no parameters")))?;
        let params: Vec<&str> = rest.split(':').collect();
        let single = |what: &str| -> Result<usize> {
            match params.as_slice() {
                [one] => parse_int(one, what),
                _ => Err(Error::BadParam(format!("{what} takes one parameter"))),
            }
        };
        let binary = || -> Result<(Box<FamilySpec>, Box<FamilySpec>)> {
            let (a, b) = rest
                .split_once('/')
                .ok_or_else(|| Error::BadParam(format!("{family} needs two groups as A/B")))?;
            Ok((Box::new(a.parse()?), Box::new(b.parse()?)))
        };
        match family {
            "cyclic" => Ok(FamilySpec::Cyclic(single("cyclic")?)),
            "dihedral" => Ok(FamilySpec::Dihedral(single("dihedral")?)),
            "dicyclic" => Ok(FamilySpec::Dicyclic(single("dicyclic")?)),
            "symmetric" => Ok(FamilySpec::Symmetric(single("symmetric")?)),
            "alternating" => Ok(FamilySpec::Alternating(single("alternating")?)),
            "sylnorm" => Ok(FamilySpec::Sylnorm(single("sylnorm")? as u64)),
            "abelian" => {
                let factors = rest
                    .split(',')
                    .map(|t| parse_int(t, "abelian"))
                    .collect::<Result<Vec<usize>>>()?;
                Ok(FamilySpec::Abelian(factors))
            }
            "wreath-sylnorm" | "iterated_wreath" | "iterated-wreath" => match params.as_slice() {
                [p, k] => Ok(FamilySpec::IteratedWreath(
                    parse_int(p, family)?,
                    parse_int(k, family)?,
                )),
                _ => Err(Error::BadParam(format!("{family} takes p:k"))),
            },
            "direct" | "direct_product" => {
                let (a, b) = binary()?;
                Ok(FamilySpec::DirectProduct(a, b))
            }
            "wreath" => {
                let (a, b) = binary()?;
                Ok(FamilySpec::Wreath(a, b))
            }
            other => Err(Error::BadParam(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Abelian(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            FamilySpec::Alternating(n) => write!(f, "alternating:{n}"),
            FamilySpec::DirectProduct(a, b) => write!(f, "direct:{a}/{b}"),
            FamilySpec::Wreath(a, b) => write!(f, "wreath:{a}/{b}"),
            FamilySpec::Sylnorm(p) => write!(f, "sylnorm:{p}"),
            FamilySpec::IteratedWreath(p, k) => write!(f, "wreath-sylnorm:{p}:{k}"),
        }
    }
}

fn cycle_on(degree: usize, points: std::ops::Range<usize>) -> Permutation {
    if points.len() < 2 {
        return Permutation::identity(degree);
    }
    Permutation::from_cycles(degree, &[points.collect()]).expect("valid cycle")
}

/// `C_n` generated by an n-cycle.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::BadParam("cyclic order must be at least 1".into()));
    }
    PermGroup::new(n, vec![cycle_on(n, 0..n)])
}

/// Direct product of cyclic groups of the given orders, on disjoint points.
pub fn abelian(factors: &[usize]) -> Result<PermGroup> {
    if factors.is_empty() || factors.iter().any(|&f| f < 2) {
        return Err(Error::BadParam(format!(
            "abelian factors must be non-empty and at least 2, got {factors:?}"
        )));
    }
    let degree: usize = factors.iter().sum();
    let mut start = 0;
    let mut gens = Vec::new();
    for &f in factors {
        gens.push(cycle_on(degree, start..start + f));
        start += f;
    }
    PermGroup::new(degree, gens)
}

/// Dihedral group of order `2n` acting on the n-gon.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::BadParam(format!("dihedral needs n >= 3, got {n}")));
    }
    let rotation = cycle_on(n, 0..n);
    let images: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    let reflection = Permutation::from_images(images)?;
    PermGroup::new(n, vec![rotation, reflection])
}

/// Dicyclic group of order `4m` in its right regular action; `dicyclic(2)` is `Q_8`.
pub fn dicyclic(m: usize) -> Result<PermGroup> {
    if m < 2 {
        return Err(Error::BadParam(format!("dicyclic needs m >= 2, got {m}")));
    }
    let n = 2 * m;
    // element a^i x^j has index i + n*j
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        let twisted = if j == 0 { k } else { (n - k) % n };
        let mut e = (i + twisted) % n;
        let mut s = j + l;
        if s == 2 {
            e = (e + m) % n;
            s = 0;
        }
        (e, s)
    };
    let right_mult = |g: (usize, usize)| -> Result<Permutation> {
        let images = (0..2 * n)
            .map(|idx| {
                let (e, s) = mul((idx % n, idx / n), g);
                (e + n * s) as u32
            })
            .collect();
        Permutation::from_images(images)
    };
    PermGroup::new(2 * n, vec![right_mult((1, 0))?, right_mult((0, 1))?])
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::BadParam("symmetric needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let mut gens = vec![cycle_on(n, 0..2)];
    if n > 2 {
        gens.push(cycle_on(n, 0..n));
    }
    PermGroup::new(n, gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::BadParam(format!("alternating needs n >= 3, got {n}")));
    }
    let long = if n % 2 == 1 {
        cycle_on(n, 0..n)
    } else {
        cycle_on(n, 1..n)
    };
    PermGroup::new(n, vec![cycle_on(n, 0..3), long])
}

/// `A × B` on the disjoint union of the point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let degree = a.degree() + b.degree();
    let shift = |p: &Permutation, offset: usize| -> Result<Permutation> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in 0..p.degree() {
            images[offset + i] = (offset + p.apply(i)) as u32;
        }
        Permutation::from_images(images)
    };
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(shift(g, 0)?);
    }
    for g in b.generators() {
        gens.push(shift(g, a.degree())?);
    }
    PermGroup::new(degree, gens)
}

/// Least point of each orbit of `g`, in increasing order.
fn orbit_leaders(g: &PermGroup) -> Vec<usize> {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut leaders = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        leaders.push(start);
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for s in g.generators() {
                let y = s.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    leaders
}

/// Imprimitive wreath product `A ≀ B`: `B` permutes `deg B` blocks of size `deg A`.
///
/// Copies of `A`'s generators are placed on the first block of every `B`-orbit
/// so the base group is the full direct power even for intransitive `B`.
pub fn wreath(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let m = a.degree();
    let n = b.degree();
    let degree = m
        .checked_mul(n)
        .filter(|&d| d <= DEGREE_LIMIT)
        .ok_or(Error::DegreeTooLarge {
            degree: m as u128 * n as u128,
            limit: DEGREE_LIMIT,
        })?;
    let mut gens = Vec::new();
    for block in orbit_leaders(b) {
        for g in a.nontrivial_generators() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in 0..m {
                images[block * m + i] = (block * m + g.apply(i)) as u32;
            }
            gens.push(Permutation::from_images(images)?);
        }
    }
    for h in b.nontrivial_generators() {
        let images = (0..degree)
            .map(|pt| (h.apply(pt / m) * m + pt % m) as u32)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    PermGroup::new(degree, gens)
}

/// Normalizer of a Sylow p-subgroup of `S_p`: the affine maps `i ↦ a·i + b` on `Z/p`.
pub fn sylnorm(p: u64) -> Result<PermGroup> {
    if !is_prime(p) || p > 13 {
        return Err(Error::BadParam(format!(
            "sylnorm needs a prime p <= 13, got {p}"
        )));
    }
    let n = p as usize;
    let root = least_primitive_root(p);
    let translation = cycle_on(n, 0..n);
    let multiplier =
        Permutation::from_images((0..p).map(|i| (i * root % p) as u32).collect())?;
    PermGroup::new(n, vec![translation, multiplier])
}

/// `W_1 = sylnorm(p)`, `W_{i+1} = sylnorm(p) ≀ W_i`, acting on `p^k` points.
pub fn iterated_wreath(p: u64, k: usize) -> Result<PermGroup> {
    if k == 0 {
        return Err(Error::BadParam("iterated wreath depth must be at least 1".into()));
    }
    let degree = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if degree > DEGREE_LIMIT as u128 {
        return Err(Error::DegreeTooLarge {
            degree,
            limit: DEGREE_LIMIT,
        });
    }
    let base = sylnorm(p)?;
    let mut w = base.clone();
    for _ in 1..k {
        w = wreath(&base, &w)?;
    }
    Ok(w)
}

/// Invariant-factor lists `d_1 | d_2 | … | d_r` (all `d_i ≥ 2`) with product at most `max_order`.
///
/// Together with the trivial group these are the abelian groups up to that order.
pub fn abelian_invariant_factor_lists(max_order: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        let last = prefix.last().copied().unwrap_or(1);
        let mut next = if prefix.is_empty() { 2 } else { last };
        while product * next <= max {
            if next % last == 0 {
                prefix.push(next);
                out.push(prefix.clone());
                extend(prefix, product * next, max, out);
                prefix.pop();
            }
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|f| (f.iter().product::<usize>(), f.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn order(g: &PermGroup) -> u64 {
        g.order_u64().unwrap()
    }

    #[test]
    fn basic_orders() {
        assert_eq!(order(&cyclic(1).unwrap()), 1);
        assert_eq!(order(&cyclic(4).unwrap()), 4);
        assert_eq!(order(&abelian(&[2, 2]).unwrap()), 4);
        assert_eq!(order(&abelian(&[2, 6]).unwrap()), 12);
        assert_eq!(order(&dihedral(4).unwrap()), 8);
        assert_eq!(order(&dihedral(3).unwrap()), 6);
        assert!(!dihedral(3).unwrap().is_abelian());
        assert_eq!(order(&dicyclic(2).unwrap()), 8);
        assert_eq!(order(&dicyclic(5).unwrap()), 20);
        assert_eq!(order(&symmetric(1).unwrap()), 1);
        assert_eq!(order(&symmetric(2).unwrap()), 2);
        assert_eq!(order(&symmetric(4).unwrap()), 24);
        assert_eq!(order(&alternating(3).unwrap()), 3);
        assert_eq!(order(&alternating(4).unwrap()), 12);
        assert_eq!(order(&alternating(6).unwrap()), 360);
    }

    #[test]
    fn bad_params() {
        assert!(cyclic(0).is_err());
        assert!(abelian(&[1, 2]).is_err());
        assert!(abelian(&[]).is_err());
        assert!(dihedral(2).is_err());
        assert!(dicyclic(1).is_err());
        assert!(alternating(2).is_err());
        assert!(sylnorm(4).is_err());
        assert!(sylnorm(17).is_err());
        assert!(iterated_wreath(5, 0).is_err());
        assert!(matches!(
            iterated_wreath(11, 6),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn q8_is_dicyclic_2() {
        let q8 = dicyclic(2).unwrap();
        let els = q8.elements(10).unwrap();
        let involutions = els.iter().filter(|x| x.order() == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(els.iter().filter(|x| x.order() == 4).count(), 6);
    }

    #[test]
    fn sylnorm_orders() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(order(&sylnorm(p).unwrap()), p * (p - 1));
        }
    }

    #[test]
    fn wreath_orders() {
        let c2 = cyclic(2).unwrap();
        let w = wreath(&c2, &c2).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(order(&w), 8);
        let f20 = sylnorm(5).unwrap();
        let big = wreath(&f20, &f20).unwrap();
        assert_eq!(big.order(), BigUint::from(64_000_000u64));
        assert_eq!(order(&iterated_wreath(3, 2).unwrap()), 1296);
        // trivial base acts like the top group
        let top = symmetric(3).unwrap();
        assert_eq!(order(&wreath(&cyclic(1).unwrap(), &top).unwrap()), 6);
        // intransitive top group still gets the full base
        let v4 = abelian(&[2, 2]).unwrap();
        assert_eq!(order(&wreath(&cyclic(3).unwrap(), &v4).unwrap()), 3u64.pow(4) * 4);
    }

    #[test]
    fn spec_strings() {
        for text in [
            "cyclic:6",
            "abelian:2,2,3",
            "dihedral:12",
            "dicyclic:3",
            "symmetric:4",
            "alternating:5",
            "sylnorm:7",
            "wreath-sylnorm:5:2",
            "direct:symmetric:3/cyclic:4",
            "wreath:cyclic:2/cyclic:2",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "iterated_wreath:3:2".parse::<FamilySpec>().unwrap(),
            FamilySpec::IteratedWreath(3, 2)
        );
        assert!("cyclic".parse::<FamilySpec>().is_err());
        assert!("cyclic:x".parse::<FamilySpec>().is_err());
        assert!("frobnicate:3".parse::<FamilySpec>().is_err());
        assert!("direct:cyclic:2".parse::<FamilySpec>().is_err());
        assert!("sylnorm:4".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn invariant_factor_lists() {
        let lists = abelian_invariant_factor_lists(16);
        let of_order = |n: usize| lists.iter().filter(|f| f.iter().product::<usize>() == n).count();
        // numbers of abelian groups of orders 8, 12, 16
        assert_eq!(of_order(8), 3);
        assert_eq!(of_order(12), 2);
        assert_eq!(of_order(16), 5);
        assert!(lists.contains(&vec![2, 2, 4]));
    }
}
