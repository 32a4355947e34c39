use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::group::{Enumeration, PermGroup};
use crate::perm::Permutation;

/// Conjugacy classes of an enumerated group.
///
/// Classes are numbered in the order their first element appears in the
/// breadth-first enumeration, so class 0 is always the identity.
#[derive(Debug)]
pub struct ClassTable {
    enumeration: Arc<Enumeration>,
    reps: Vec<usize>,
    members: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    rep_orders: Vec<u64>,
    power_memo: Mutex<HashMap<(usize, u64), usize>>,
}

impl ClassTable {
    pub fn build(group: &PermGroup, cap: usize) -> Result<Self> {
        let enumeration = group.enumeration(cap)?;
        let gens: Vec<&Permutation> = group.nontrivial_generators().collect();
        let els = enumeration.elements();
        let mut class_of = vec![usize::MAX; els.len()];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for seed in 0..els.len() {
            if class_of[seed] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(seed);
            class_of[seed] = c;
            let mut orbit = vec![seed];
            let mut idx = 0;
            while idx < orbit.len() {
                let x = &els[orbit[idx]];
                for g in &gens {
                    let y = x.conjugate_by(g);
                    let j = enumeration.index_of(&y).expect("group is closed");
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        orbit.push(j);
                    }
                }
                idx += 1;
            }
            members.push(orbit);
        }
        let rep_orders = reps.iter().map(|&r| els[r].order()).collect();
        Ok(Self {
            enumeration,
            reps,
            members,
            class_of,
            rep_orders,
            power_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.enumeration.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        self.enumeration.elements()
    }

    pub fn rep(&self, c: usize) -> &Permutation {
        &self.enumeration.elements()[self.reps[c]]
    }

    pub fn reps(&self) -> impl Iterator<Item = &Permutation> {
        self.reps.iter().map(|&r| &self.enumeration.elements()[r])
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Element indices (into the group enumeration) of class `c`.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn rep_order(&self, c: usize) -> u64 {
        self.rep_orders[c]
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    /// Class of an element of the group, `None` for non-members.
    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.enumeration.index_of(p).map(|i| self.class_of[i])
    }

    pub fn class_of_index(&self, element_index: usize) -> usize {
        self.class_of[element_index]
    }

    /// Class of `rep(c)^k`, memoized on `k` reduced mod the representative's order.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let order = self.rep_orders[c];
        let k = k.rem_euclid(order as i64) as u64;
        if k == 1 {
            return c;
        }
        if let Some(&hit) = self.power_memo.lock().unwrap().get(&(c, k)) {
            return hit;
        }
        let power = self.rep(c).pow(k as i64);
        let answer = self.class_of(&power).expect("powers stay in the group");
        self.power_memo.lock().unwrap().insert((c, k), answer);
        answer
    }

    pub fn are_conjugate(&self, x: &Permutation, y: &Permutation) -> Option<bool> {
        Some(self.class_of(x)? == self.class_of(y)?)
    }
}

pub fn conjugacy_classes(group: &PermGroup, cap: usize) -> Result<Arc<ClassTable>> {
    group.class_table(cap)
}

/// Errors with `BadParam` if either element lies outside the group.
pub fn are_conjugate(
    group: &PermGroup,
    x: &Permutation,
    y: &Permutation,
    cap: usize,
) -> Result<bool> {
    let table = group.class_table(cap)?;
    table
        .are_conjugate(x, y)
        .ok_or_else(|| Error::BadParam(format!("{x} or {y} is not in the group")))
}

pub fn power_class(table: &ClassTable, c: usize, k: i64) -> usize {
    table.power_class(c, k)
}
