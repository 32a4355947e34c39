//! Independent oracles for the integration tests. They work on raw image
//! vectors and share no code with the library beyond reading generators.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;

use cutgroups::corpus::{parse_corpus, GroupRecord};
use cutgroups::PermGroup;

pub type Raw = Vec<usize>;

pub fn bundled_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/bundled.corpus")
}

pub fn bundled() -> Vec<GroupRecord> {
    parse_corpus(bundled_path()).expect("bundled corpus parses")
}

pub fn raw_gens(g: &PermGroup) -> Vec<Raw> {
    g.generators()
        .iter()
        .map(|p| (0..p.degree()).map(|i| p.apply(i)).collect())
        .collect()
}

/// `a` then `b`.
pub fn mul(a: &[usize], b: &[usize]) -> Raw {
    a.iter().map(|&i| b[i]).collect()
}

pub fn inv(a: &[usize]) -> Raw {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn identity(n: usize) -> Raw {
    (0..n).collect()
}

pub fn pow(a: &[usize], k: u64) -> Raw {
    let mut out = identity(a.len());
    for _ in 0..k {
        out = mul(&out, a);
    }
    out
}

pub fn order(a: &[usize]) -> u64 {
    let id = identity(a.len());
    let mut x = a.to_vec();
    let mut k = 1;
    while x != id {
        x = mul(&x, a);
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn units(n: u64) -> Vec<u64> {
    (1..=n.max(1)).filter(|&k| gcd(k, n) == 1 && k < n.max(2)).collect()
}

/// All elements, by breadth-first closure under right multiplication.
pub fn closure(n: usize, gens: &[Raw]) -> Vec<Raw> {
    let mut seen: HashSet<Raw> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}

/// Conjugacy classes as sets of elements, by direct conjugation.
pub fn classes(elements: &[Raw]) -> Vec<HashSet<Raw>> {
    let mut class_of: HashMap<Raw, usize> = HashMap::new();
    let mut out: Vec<HashSet<Raw>> = Vec::new();
    for x in elements {
        if class_of.contains_key(x) {
            continue;
        }
        let class: HashSet<Raw> = elements
            .iter()
            .map(|h| mul(&mul(&inv(h), x), h))
            .collect();
        for y in &class {
            class_of.insert(y.clone(), out.len());
        }
        out.push(class);
    }
    out
}

pub struct Oracle {
    pub elements: Vec<Raw>,
    pub classes: Vec<HashSet<Raw>>,
}

impl Oracle {
    pub fn new(g: &PermGroup) -> Self {
        let elements = closure(g.degree(), &raw_gens(g));
        let classes = classes(&elements);
        Self { elements, classes }
    }

    fn class_index(&self, x: &[usize]) -> usize {
        self.classes.iter().position(|c| c.contains(x)).unwrap()
    }

    /// `{k : x^k ~ x}` over units mod the order of `x`.
    pub fn stabilizer(&self, x: &[usize]) -> Vec<u64> {
        let o = order(x);
        let c = self.class_index(x);
        units(o)
            .into_iter()
            .filter(|&k| self.classes[c].contains(&pow(x, k)))
            .collect()
    }

    pub fn is_cut(&self) -> bool {
        self.classes.iter().all(|c| {
            let x = c.iter().next().unwrap();
            let o = order(x);
            let xi = inv(x);
            units(o).into_iter().all(|k| {
                let y = pow(x, k);
                c.contains(&y) || self.classes[self.class_index(&xi)].contains(&y)
            })
        })
    }

    pub fn is_rational(&self) -> bool {
        self.classes.iter().all(|c| {
            let x = c.iter().next().unwrap();
            units(order(x)).into_iter().all(|k| c.contains(&pow(x, k)))
        })
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .map(|x| order(x))
            .fold(1, |a, b| a / gcd(a, b) * b)
    }
}
