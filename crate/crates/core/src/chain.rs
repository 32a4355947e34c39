//! Deterministic Schreier–Sims stabilizer chains.
//!
//! The base is chosen greedily: whenever a strong generator fixes every base
//! point so far, its smallest moved point is appended.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[i]` maps `base_point` to `orbit[i]`.
    transversal: Vec<Permutation>,
    /// point -> index into `orbit`, or `NONE`.
    position: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut position = vec![NONE; degree];
        position[base_point] = 0;
        Self {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal: vec![Permutation::identity(degree)],
            position,
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        // Old orbit points may now reach new points through `g`; sweep everything.
        let mut idx = 0;
        while idx < self.orbit.len() {
            let b = self.orbit[idx];
            for s in 0..self.gens.len() {
                let c = self.gens[s].apply(b);
                if self.position[c] == NONE {
                    self.position[c] = self.orbit.len() as u32;
                    self.orbit.push(c);
                    let u = self.transversal[idx].then(&self.gens[s]);
                    self.transversal.push(u);
                }
            }
            idx += 1;
        }
    }

    fn transversal_for(&self, point: usize) -> Option<&Permutation> {
        match self.position[point] {
            NONE => None,
            i => Some(&self.transversal[i as usize]),
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = Self {
            degree,
            levels: Vec::new(),
        };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let pt = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(degree, pt));
            }
        }
        for g in generators.iter().filter(|g| !g.is_identity()) {
            for level in chain.levels.iter_mut() {
                level.add_generator(g.clone());
                if g.apply(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        chain.complete();
        chain
    }

    /// Tests Schreier generators bottom-up, adding residues until every level is closed.
    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            let orbit_len = self.levels[level].orbit.len();
            let gen_count = self.levels[level].gens.len();
            for b_idx in 0..orbit_len {
                for s_idx in 0..gen_count {
                    let lv = &self.levels[level];
                    let b = lv.orbit[b_idx];
                    let s = &lv.gens[s_idx];
                    let c = s.apply(b);
                    let u_c = lv.transversal_for(c).expect("orbit is closed");
                    let schreier = lv.transversal[b_idx].then(s).then(&u_c.inverse());
                    let (residue, stop) = self.sift(schreier, level + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stop == self.levels.len() {
                        let pt = residue.first_moved().expect("non-identity");
                        self.levels.push(Level::new(self.degree, pt));
                    }
                    for l in level + 1..=stop {
                        self.levels[l].add_generator(residue.clone());
                    }
                    i = stop + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Strips `g` through the levels starting at `from`; returns the residue and the
    /// level where stripping stopped (`levels.len()` if it passed every level).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.base_point);
            match level.transversal_for(b) {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    /// Base points, 0-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All strong generators, deduplicated, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}
