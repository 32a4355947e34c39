//! Rationality of elements and groups, read off from the power maps on
//! conjugacy classes.
//!
//! For an element `x` of order `o`, the Galois group of the `o`-th cyclotomic
//! field is the unit group `U = (Z/o)^×`, acting on classes through
//! `x ↦ x^k`. The stabilizer `S = {k ∈ U : x^k ~ x}` determines everything
//! here: the column field of `x` is the fixed field of `S`, of degree
//! `|U : S|`, and it is real exactly when `-1 ∈ S`.

mod checks;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{lcm_all, residues_coprime, totient};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::{alternating_classes, alternating_power_conjugate, is_solvable, ClassTable};

pub use checks::{
    conjecture_suite, lemma61_check, run_checks, sylow3_check, Check, CheckResult, CheckStatus,
    Witness,
};

/// Default upper bound on `n` for [`qg_degree_alternating`].
pub const ALTERNATING_BOUND: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRationality {
    pub class_index: usize,
    pub class_size: usize,
    pub element_order: u64,
    /// `{k coprime to the order : x^k ~ x}`, increasing.
    pub stabilizer: Vec<u64>,
    pub stabilizer_index: u64,
    pub is_rational: bool,
    pub is_inverse_semirational: bool,
    pub is_semirational: bool,
    pub is_real: bool,
    pub field_degree: u64,
    pub field_imaginary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: u64,
    pub exponent: u64,
    pub solvable: bool,
    pub is_rational: bool,
    pub is_cut: bool,
    pub is_semirational: bool,
    pub qg_degree: u64,
    pub class_reports: Vec<ClassRationality>,
    pub check_results: BTreeMap<String, CheckResult>,
}

pub fn class_stabilizer(table: &ClassTable, c: usize) -> Vec<u64> {
    let order = table.rep_order(c);
    residues_coprime(order)
        .into_iter()
        .filter(|&k| table.power_class(c, k as i64) == c)
        .collect()
}

pub fn classify_class(table: &ClassTable, c: usize) -> ClassRationality {
    let order = table.rep_order(c);
    let units = residues_coprime(order);
    let stabilizer = class_stabilizer(table, c);
    let index = units.len() as u64 / stabilizer.len() as u64;
    let is_real = order <= 2 || stabilizer.contains(&(order - 1));
    // S ∪ (-1)·S covers U exactly when |U : S| = 1, or = 2 with -1 outside S.
    let is_inverse_semirational = if order <= 2 {
        true
    } else {
        units.iter().all(|k| {
            stabilizer.contains(k) || stabilizer.contains(&((order - 1) * k % order))
        })
    };
    ClassRationality {
        class_index: c,
        class_size: table.size(c),
        element_order: order,
        stabilizer_index: index,
        is_rational: stabilizer.len() == units.len(),
        is_inverse_semirational,
        is_semirational: index <= 2,
        is_real,
        field_degree: index,
        field_imaginary: !is_real,
        stabilizer,
    }
}

/// `|Q(G):Q|` as the index in `(Z/exp G)^×` of the residues fixing every class.
pub fn qg_degree_from_table(table: &ClassTable) -> u64 {
    let exp = lcm_all(table.rep_orders().iter().copied());
    let fixing = residues_coprime(exp)
        .into_iter()
        .filter(|&k| (0..table.len()).all(|c| table.power_class(c, k as i64) == c))
        .count() as u64;
    totient(exp) / fixing
}

pub fn qg_degree(g: &PermGroup, cap: usize) -> Result<u64> {
    Ok(qg_degree_from_table(&*g.class_table(cap)?))
}

/// Classifies every class; `check_results` is left empty.
pub fn group_rationality(g: &PermGroup, cap: usize) -> Result<GroupReport> {
    let table = g.class_table(cap)?;
    let class_reports: Vec<ClassRationality> =
        (0..table.len()).map(|c| classify_class(&table, c)).collect();
    Ok(GroupReport {
        order: table.group_order() as u64,
        exponent: lcm_all(table.rep_orders().iter().copied()),
        solvable: is_solvable(g),
        is_rational: class_reports.iter().all(|r| r.is_rational),
        is_cut: class_reports.iter().all(|r| r.is_inverse_semirational),
        is_semirational: class_reports.iter().all(|r| r.is_semirational),
        qg_degree: qg_degree_from_table(&table),
        class_reports,
        check_results: BTreeMap::new(),
    })
}

/// The definition taken literally: every generator of every `⟨x⟩` is searched
/// for a conjugator onto `x` or `x⁻¹` across the full element list.
pub fn is_cut_bruteforce(g: &PermGroup, cap: usize) -> Result<bool> {
    let els = g.elements(cap)?;
    for x in &els {
        let x_inv = x.inverse();
        for k in residues_coprime(x.order()) {
            let y = x.pow(k as i64);
            let hit = els.iter().any(|h| {
                let z = y.conjugate_by(h);
                z == *x || z == x_inv
            });
            if !hit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Row of the alternating character-field table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingField {
    pub n: usize,
    pub exponent: u64,
    pub qg_degree: u64,
}

/// `|Q(A_n):Q|` from cycle types alone, for `3 ≤ n ≤ max_n`.
pub fn alternating_field(n: usize, max_n: usize) -> Result<AlternatingField> {
    if !(3..=max_n).contains(&n) {
        return Err(Error::BoundExceeded {
            n,
            min: 3,
            max: max_n,
        });
    }
    let classes = alternating_classes(n)?;
    let exponent = lcm_all(classes.iter().map(|d| d.order()));
    let split: Vec<_> = classes.iter().filter(|d| d.splits).collect();
    let mut fixing = 0u64;
    for k in residues_coprime(exponent) {
        let mut fixes_all = true;
        for d in &split {
            if !alternating_power_conjugate(d, k as i64)? {
                fixes_all = false;
                break;
            }
        }
        if fixes_all {
            fixing += 1;
        }
    }
    Ok(AlternatingField {
        n,
        exponent,
        qg_degree: totient(exponent) / fixing,
    })
}

pub fn qg_degree_alternating(n: usize) -> Result<u64> {
    Ok(alternating_field(n, ALTERNATING_BOUND)?.qg_degree)
}
