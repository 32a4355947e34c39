//! Permutations of `{1..n}` stored as image lists.
//!
//! Points are 0-based internally and 1-based in every textual form. Products
//! are applied left to right: `p.then(&q)` maps `i` to `q(p(i))`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(Error::PointOutOfRange {
                    point: i + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::RepeatedPoint(i + 1));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images_1based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut zero = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::PointOutOfRange {
                    point: img,
                    degree: n,
                });
            }
            zero.push((img - 1) as u32);
        }
        Self::from_images(zero)
    }

    /// Builds a permutation from 0-based cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::PointOutOfRange {
                        point: pt + 1,
                        degree,
                    });
                }
                if std::mem::replace(&mut seen[pt], true) {
                    return Err(Error::RepeatedPoint(pt + 1));
                }
                images[pt] = cycle[(idx + 1) % cycle.len()] as u32;
            }
        }
        Ok(Self { images })
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let malformed = |reason: &str| Error::MalformedCycle {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(malformed("empty input"));
        }
        let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "()" {
            return Ok(Self::identity(degree));
        }

        let mut cycles = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(malformed("expected '('"));
            };
            let Some(close) = body.find(')') else {
                return Err(malformed("unclosed cycle"));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(malformed("nested '('"));
            }
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let point: usize = tok
                    .parse()
                    .map_err(|_| malformed(&format!("not a point: {tok:?}")))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                cycle.push(point - 1);
            }
            if cycle.len() < 2 {
                return Err(malformed("a cycle needs at least two points"));
            }
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` first, then `other`. Panics on a degree mismatch; see [`compose`].
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    /// `g⁻¹ · self · g`, the conjugate of `self` by `g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        // i ↦ g(self(g⁻¹(i))), computed as a relabeling.
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[j as usize];
        }
        Self { images }
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Cycles of length at least two, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Least common multiple of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u64`, which needs degree in the hundreds.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let len = c.len() as u64;
            let g = acc.gcd(&len);
            (acc / g)
                .checked_mul(len)
                .expect("element order exceeds u64")
        })
    }

    /// `k`-fold product; negative `k` powers the inverse.
    ///
    /// Each cycle is rotated by `k` modulo its own length, which is the exponent
    /// reduction mod the element order applied cycle by cycle.
    pub fn pow(&self, k: i64) -> Self {
        let mut images = self.images.clone();
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (idx, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(idx + shift) % cycle.len()] as u32;
            }
        }
        Self { images }
    }

    /// Smallest moved point, 0-based.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }
}

/// Left-to-right product: the result maps `i` to `q(p(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.check_degree(q)?;
    Ok(p.then(q))
}

pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    Permutation::parse(text, degree)
}

pub fn format_permutation(p: &Permutation) -> String {
    p.to_string()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (idx, pt) in cycle.iter().enumerate() {
                if idx > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses with the degree taken from the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Self::parse(s, max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn parses_identity_and_cycles() {
        assert!(p("()", 3).is_identity());
        assert_eq!(p("( )", 3).degree(), 3);
        assert_eq!(p("(1 2 3)", 3).images(), &[1, 2, 0]);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        assert_eq!(p("  (1 2) (3 4 5) ", 5).to_string(), "(1 2)(3 4 5)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(1 2", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            Permutation::parse("1 2", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            Permutation::parse("(1)", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            Permutation::parse("(1 a)", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            Permutation::parse("", 3),
            Err(Error::MalformedCycle { .. })
        ));
        assert!(matches!(
            Permutation::parse("(1 4)", 3),
            Err(Error::PointOutOfRange { point: 4, .. })
        ));
        assert!(matches!(
            Permutation::parse("(0 1)", 3),
            Err(Error::PointOutOfRange { point: 0, .. })
        ));
        assert!(matches!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(Error::RepeatedPoint(2))
        ));
        assert!(matches!(
            Permutation::parse("(1 2 1)", 3),
            Err(Error::RepeatedPoint(1))
        ));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let q = Permutation::from_images_1based(&[2, 3, 1]).unwrap();
        assert_eq!(q.to_string(), "(1 2 3)");
        let r = Permutation::from_images_1based(&[2, 1, 5, 3, 4]).unwrap();
        assert_eq!(r.to_string(), "(1 2)(3 5 4)");
        // cycles given out of order come back sorted and rotated
        assert_eq!(p("(5 3 4)(2 1)", 5).to_string(), "(1 2)(3 4 5)");
    }

    #[test]
    fn compose_left_to_right() {
        let a = p("(1 2 3)", 3);
        let b = p("(1 2)", 3);
        assert_eq!(compose(&a, &Permutation::identity(3)).unwrap(), a);
        assert!(compose(&b, &b).unwrap().is_identity());
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(compose(&a, &b).unwrap().to_string(), "(2 3)");
        assert_eq!(compose(&b, &a).unwrap().to_string(), "(1 3)");
        assert!(matches!(
            compose(&a, &Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_power_order() {
        let c = p("(1 2 3)", 3);
        assert_eq!(c.inverse().to_string(), "(1 3 2)");
        assert!(Permutation::identity(5).inverse().is_identity());
        assert_eq!(c.pow(2).to_string(), "(1 3 2)");
        assert_eq!(c.pow(-1), c.inverse());
        assert!(c.pow(0).is_identity());
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(p("(1 2 3 4 5)", 5).order(), 5);
    }

    #[test]
    fn conjugation_and_parity() {
        let x = p("(1 2 3)", 4);
        let g = p("(2 3)", 4);
        let expected = g.inverse().then(&x).then(&g);
        assert_eq!(x.conjugate_by(&g), expected);
        assert_eq!(x.conjugate_by(&g).to_string(), "(1 3 2)");
        assert!(x.is_even());
        assert!(!g.is_even());
        assert_eq!(p("(1 2)(3 4)", 6).cycle_type(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn from_str_infers_degree() {
        let q: Permutation = "(1 4)(2 3)".parse().unwrap();
        assert_eq!(q.degree(), 4);
    }
}
