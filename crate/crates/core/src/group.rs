//! Permutation groups given by generators, with cached order and enumeration.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::ClassTable;

/// Default element cap for enumeration-based analyses.
pub const DEFAULT_CAP: usize = 100_000;

/// All elements of a group in breadth-first order, with a reverse index.
#[derive(Debug)]
pub struct Enumeration {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl Enumeration {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabChain>>,
    enumeration: OnceLock<Arc<Enumeration>>,
    classes: OnceLock<Arc<ClassTable>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
            enumeration: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![Permutation::identity(degree)]).expect("identity generator")
    }

    /// Convenience constructor from cycle-notation strings.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|t| Permutation::parse(t, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators with identities dropped (possibly empty).
    pub fn nontrivial_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().filter(|g| !g.is_identity())
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::new(self.degree, &self.generators)))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as a `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn is_trivial(&self) -> bool {
        self.nontrivial_generators().next().is_none()
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<_> = self.nontrivial_generators().collect();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Fails with `CapExceeded` when `|G| > cap`.
    pub fn check_cap(&self, cap: usize) -> Result<usize> {
        let order = self.order();
        match order.to_usize() {
            Some(n) if n <= cap => Ok(n),
            _ => Err(Error::CapExceeded { order, cap }),
        }
    }

    /// Breadth-first closure over the generators, identity first.
    pub fn enumeration(&self, cap: usize) -> Result<Arc<Enumeration>> {
        if let Some(e) = self.enumeration.get() {
            if e.len() > cap {
                return Err(Error::CapExceeded {
                    order: BigUint::from(e.len()),
                    cap,
                });
            }
            return Ok(Arc::clone(e));
        }
        let order = self.check_cap(cap)?;
        let e = Arc::new(self.close(order));
        Ok(Arc::clone(self.enumeration.get_or_init(|| e)))
    }

    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        Ok(self.enumeration(cap)?.elements().to_vec())
    }

    fn close(&self, order: usize) -> Enumeration {
        let gens: Vec<&Permutation> = self.nontrivial_generators().collect();
        let mut elements = Vec::with_capacity(order);
        let mut index = HashMap::with_capacity(order);
        let id = self.identity();
        index.insert(id.clone(), 0);
        elements.push(id);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = elements[i].then(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        debug_assert_eq!(elements.len(), order);
        Enumeration { elements, index }
    }

    /// Conjugacy classes, built once per group.
    pub fn class_table(&self, cap: usize) -> Result<Arc<ClassTable>> {
        if let Some(t) = self.classes.get() {
            if t.group_order() > cap {
                return Err(Error::CapExceeded {
                    order: BigUint::from(t.group_order()),
                    cap,
                });
            }
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(ClassTable::build(self, cap)?);
        Ok(Arc::clone(self.classes.get_or_init(|| table)))
    }

    /// Subgroup generated by `gens` (same degree; identity if empty).
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        if gens.is_empty() {
            return Ok(Self::trivial(self.degree));
        }
        Self::new(self.degree, gens)
    }
}

pub fn build_group(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    PermGroup::new(degree, gens)
}

pub fn group_order(g: &PermGroup) -> BigUint {
    g.order()
}

pub fn contains(g: &PermGroup, p: &Permutation) -> Result<bool> {
    g.contains(p)
}

pub fn elements(g: &PermGroup, cap: usize) -> Result<Vec<Permutation>> {
    g.elements(cap)
}
