//! Conjugacy classes of `A_n` described by cycle types, without enumerating `A_n`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One `S_n`-class of even permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltClassDescriptor {
    pub n: usize,
    /// Parts in decreasing order, fixed points included as parts of size 1.
    pub cycle_type: Vec<usize>,
    /// The `S_n`-class breaks into two `A_n`-classes.
    pub splits: bool,
    pub rep: Permutation,
}

impl AltClassDescriptor {
    pub fn order(&self) -> u64 {
        self.cycle_type
            .iter()
            .fold(1u64, |acc, &l| acc.lcm(&(l as u64)))
    }
}

/// Partitions of `n` with parts in decreasing order, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn all_odd_distinct(parts: &[usize]) -> bool {
    parts.iter().all(|p| p % 2 == 1) && parts.windows(2).all(|w| w[0] != w[1])
}

/// Cycles on consecutive points, longest first.
fn canonical_rep(n: usize, parts: &[usize]) -> Permutation {
    let mut start = 0;
    let mut cycles = Vec::new();
    for &len in parts {
        if len > 1 {
            cycles.push((start..start + len).collect::<Vec<_>>());
        }
        start += len;
    }
    Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
}

pub fn alternating_classes(n: usize) -> Result<Vec<AltClassDescriptor>> {
    if n < 3 {
        return Err(Error::BadParam(format!(
            "alternating classes need n >= 3, got {n}"
        )));
    }
    Ok(partitions(n)
        .into_iter()
        .filter(|parts| (n - parts.len()).is_multiple_of(2))
        .map(|parts| AltClassDescriptor {
            n,
            splits: all_odd_distinct(&parts),
            rep: canonical_rep(n, &parts),
            cycle_type: parts,
        })
        .collect())
}

/// Whether `rep^k` is `A_n`-conjugate to `rep`.
///
/// Non-split classes always answer true. For split classes the canonical
/// conjugator taking each cycle of `rep^k` onto the matching cycle of `rep`
/// is built, and its parity decides.
pub fn alternating_power_conjugate(d: &AltClassDescriptor, k: i64) -> Result<bool> {
    let order = d.order();
    let reduced = k.rem_euclid(order as i64) as u64;
    if reduced.gcd(&order) != 1 {
        return Err(Error::NotCoprime { k, order });
    }
    if !d.splits {
        return Ok(true);
    }
    let mut images: Vec<u32> = (0..d.n as u32).collect();
    let mut start = 0;
    for &len in &d.cycle_type {
        let step = (reduced % len as u64) as usize;
        // rep^k sends a_i to a_{i+k}; map a_{jk} to a_j.
        for j in 0..len {
            images[start + (j * step) % len] = (start + j) as u32;
        }
        start += len;
    }
    let sigma = Permutation::from_images(images).expect("bijection");
    Ok(sigma.is_even())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn a4_descriptors() {
        let classes = alternating_classes(4).unwrap();
        let types: Vec<_> = classes.iter().map(|d| d.cycle_type.clone()).collect();
        assert_eq!(types, vec![vec![3, 1], vec![2, 2], vec![1, 1, 1, 1]]);
        assert!(classes[0].splits);
        assert!(!classes[1].splits && !classes[2].splits);
        for d in &classes {
            assert_eq!(d.rep.cycle_type(), d.cycle_type);
            assert!(d.rep.is_even());
        }
    }

    #[test]
    fn split_criteria() {
        let a5 = alternating_classes(5).unwrap();
        assert!(a5.iter().find(|d| d.cycle_type == vec![5]).unwrap().splits);
        let a6 = alternating_classes(6).unwrap();
        assert!(!a6
            .iter()
            .find(|d| d.cycle_type == vec![2, 2, 1, 1])
            .unwrap()
            .splits);
        assert!(alternating_classes(2).is_err());
    }

    #[test]
    fn five_cycle_powers() {
        let a5 = alternating_classes(5).unwrap();
        let five = a5.iter().find(|d| d.cycle_type == vec![5]).unwrap();
        assert_eq!(five.rep.to_string(), "(1 2 3 4 5)");
        assert!(alternating_power_conjugate(five, 1).unwrap());
        assert!(!alternating_power_conjugate(five, 2).unwrap());
        assert!(!alternating_power_conjugate(five, 3).unwrap());
        assert!(alternating_power_conjugate(five, 4).unwrap());
        assert!(alternating_power_conjugate(five, -1).unwrap());
        assert!(matches!(
            alternating_power_conjugate(five, 5),
            Err(Error::NotCoprime { .. })
        ));
    }
}
