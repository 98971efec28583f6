//! The full ideal lattice of a finite commutative ring, with the radical,
//! annihilator and dualradical maps tabulated by ideal index.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ideal::{
    annihilator_ideal, contains, ideal_members, intersect_ideals, principal_ideal, sum_ideals,
    unit_ideal, Ideal,
};
use crate::order::BitMatrix;
use crate::ring::{Elem, FiniteRing, RingOps};
use crate::word::Generator;

pub const DEFAULT_IDEAL_BUDGET: usize = 1_000_000;

/// Rings up to this size have their spectrum cross-checked elementwise.
pub const PRIME_ORACLE_LIMIT: u64 = 1024;

/// Every ideal of a ring, indexed in ascending `(size, canonical form)`
/// order. Index 0 is `{0}` and the last index is `R`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ring: FiniteRing,
    ideals: Vec<Ideal>,
    index: HashMap<Ideal, usize>,
    /// `leq[i][j]` iff ideal `i` is contained in ideal `j`.
    leq: BitMatrix,
    geq: BitMatrix,
    primes: Vec<usize>,
    radical: Vec<usize>,
    annihilator: Vec<usize>,
    dualradical: Vec<usize>,
}

pub fn all_ideals(ring: FiniteRing, budget: usize) -> Result<IdealLattice> {
    all_ideals_with(ring, budget, Exec::default())
}

pub fn all_ideals_with(ring: FiniteRing, budget: usize, exec: Exec) -> Result<IdealLattice> {
    let ideals = enumerate(&ring, budget, exec)?;
    IdealLattice::from_ideals(ring, ideals, exec)
}

/// Principal ideals, then closure under adding a principal ideal. Every
/// ideal is a finite sum of principal ideals, so this reaches the lattice.
fn enumerate(ring: &FiniteRing, budget: usize, exec: Exec) -> Result<Vec<Ideal>> {
    let n = ring.size() as usize;
    let mut principal: Vec<Ideal> = exec.map_range(n, |g| principal_ideal(ring, g as Elem));
    principal.sort();
    principal.dedup();
    if principal.len() > budget {
        return Err(Error::IdealBudget {
            found: principal.len(),
            budget,
        });
    }
    let mut seen: HashSet<Ideal> = principal.iter().cloned().collect();
    let mut frontier = principal.clone();
    while !frontier.is_empty() {
        let sums: Vec<Vec<Ideal>> = exec.map(&frontier, |i| {
            principal
                .iter()
                .filter(|p| !p.is_subset(i))
                .map(|p| sum_ideals(ring, i, p).expect("same ring"))
                .collect()
        });
        let mut next = Vec::new();
        for s in sums.into_iter().flatten() {
            if seen.insert(s.clone()) {
                next.push(s);
                if seen.len() > budget {
                    return Err(Error::IdealBudget {
                        found: seen.len(),
                        budget,
                    });
                }
            }
        }
        next.sort();
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = seen.into_iter().collect();
    ideals.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));
    Ok(ideals)
}

impl IdealLattice {
    fn from_ideals(ring: FiniteRing, ideals: Vec<Ideal>, exec: Exec) -> Result<Self> {
        let n = ideals.len();
        let index: HashMap<Ideal, usize> = ideals.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let rows = exec.map_range(n, |i| {
            let mut row = FixedBitSet::with_capacity(n);
            for j in i..n {
                if ideals[i].is_subset(&ideals[j]) {
                    row.insert(j);
                }
            }
            row
        });
        let leq = BitMatrix::from_rows(rows);
        let geq = leq.transpose();
        let whole = n - 1;

        // Maximal proper ideals: contained only in themselves and R.
        let primes: Vec<usize> = (0..whole).filter(|&i| leq.row(i).count_ones(..) == 2).collect();

        let mut lattice = IdealLattice {
            ring,
            ideals,
            index,
            leq,
            geq,
            primes,
            radical: Vec::new(),
            annihilator: Vec::new(),
            dualradical: Vec::new(),
        };
        lattice.check_primes(exec)?;

        let mut memo: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut radical = Vec::with_capacity(n);
        let mut dualradical = Vec::with_capacity(n);
        for i in 0..n {
            let (h, hc) = lattice.hull_split(i);
            radical.push(lattice.intersect_primes(&h, &mut memo)?);
            dualradical.push(lattice.intersect_primes(&hc, &mut memo)?);
        }
        let annihilator = exec
            .map(&lattice.ideals, |x| annihilator_ideal(&lattice.ring, x))
            .into_iter()
            .map(|a| lattice.index_of(&a?))
            .collect::<Result<Vec<_>>>()?;
        lattice.radical = radical;
        lattice.dualradical = dualradical;
        lattice.annihilator = annihilator;
        Ok(lattice)
    }

    fn intersect_primes(&self, set: &[usize], memo: &mut HashMap<Vec<usize>, usize>) -> Result<usize> {
        if let Some(&k) = memo.get(set) {
            return Ok(k);
        }
        let mut acc = unit_ideal(&self.ring);
        for &p in set {
            acc = intersect_ideals(&self.ring, &acc, &self.ideals[p])?;
        }
        let k = self.index_of(&acc)?;
        memo.insert(set.to_vec(), k);
        Ok(k)
    }

    /// Compares maximality against `ab ∈ I ⇒ a ∈ I or b ∈ I` on small rings.
    fn check_primes(&self, exec: Exec) -> Result<()> {
        if self.ring.size() > PRIME_ORACLE_LIMIT {
            return Ok(());
        }
        let whole = self.whole();
        let verdicts = exec.map_range(whole, |i| is_prime_elementwise(&self.ring, &self.ideals[i]));
        for (i, &v) in verdicts.iter().enumerate() {
            if v != self.primes.contains(&i) {
                return Err(Error::Inconsistent(format!(
                    "ideal {i}: maximality says {}, elementwise test says {v}",
                    !v
                )));
            }
        }
        Ok(())
    }

    fn hull_split(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        self.primes.iter().partition(|&&p| self.leq(i, p))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn index_of(&self, ideal: &Ideal) -> Result<usize> {
        self.index.get(ideal).copied().ok_or(Error::UnknownIdeal)
    }

    /// `I_i ⊆ I_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    pub fn containment(&self) -> &BitMatrix {
        &self.leq
    }

    /// `I_i ∩ I_j`: the largest ideal below both.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut both = self.geq.row(i).clone();
        both.intersect_with(self.geq.row(j));
        both.maximum().expect("{0} is below every ideal")
    }

    /// `I_i + I_j`: the smallest ideal above both.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut both = self.leq.row(i).clone();
        both.intersect_with(self.leq.row(j));
        both.minimum().expect("R is above every ideal")
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Indices of the prime (equivalently, maximal) ideals.
    pub fn primes(&self) -> &[usize] {
        &self.primes
    }

    pub fn prime_spectrum(&self) -> Vec<&Ideal> {
        self.primes.iter().map(|&p| &self.ideals[p]).collect()
    }

    /// `r({0})`.
    pub fn nilradical(&self) -> usize {
        self.radical[0]
    }

    pub fn radical(&self, i: usize) -> usize {
        self.radical[i]
    }

    pub fn annihilator(&self, i: usize) -> usize {
        self.annihilator[i]
    }

    pub fn dualradical(&self, i: usize) -> usize {
        self.dualradical[i]
    }

    pub fn apply(&self, g: Generator, i: usize) -> usize {
        match g {
            Generator::Radical => self.radical[i],
            Generator::Annihilator => self.annihilator[i],
            Generator::Dualradical => self.dualradical[i],
        }
    }

    /// Image vector of a generator.
    pub fn map_of(&self, g: Generator) -> &[usize] {
        match g {
            Generator::Radical => &self.radical,
            Generator::Annihilator => &self.annihilator,
            Generator::Dualradical => &self.dualradical,
        }
    }

    pub fn radical_of(&self, ideal: &Ideal) -> Result<&Ideal> {
        Ok(&self.ideals[self.radical[self.index_of(ideal)?]])
    }

    pub fn annihilator_of(&self, ideal: &Ideal) -> Result<&Ideal> {
        Ok(&self.ideals[self.annihilator[self.index_of(ideal)?]])
    }

    pub fn dualradical_of(&self, ideal: &Ideal) -> Result<&Ideal> {
        Ok(&self.ideals[self.dualradical[self.index_of(ideal)?]])
    }

    /// Primes containing `I_i`.
    pub fn hull(&self, i: usize) -> Vec<usize> {
        self.hull_split(i).0
    }

    /// Primes not containing `I_i`.
    pub fn hull_complement(&self, i: usize) -> Vec<usize> {
        self.hull_split(i).1
    }

    pub fn is_semiprime_ideal(&self, i: usize) -> bool {
        self.radical[i] == i
    }

    pub fn is_semiprime_ring(&self) -> bool {
        self.is_semiprime_ideal(0)
    }

    /// `a(a(I)) = I` for every ideal.
    pub fn is_dual_ring(&self) -> bool {
        (0..self.len()).all(|i| self.annihilator[self.annihilator[i]] == i)
    }

    /// `a(I ∩ J) = a(I) + a(J)` for every pair.
    ///
    /// With the radical in place of the annihilator the identity would fail
    /// in every nonzero ring at `I = {0}, J = R`.
    pub fn birkenmeier_condition(&self) -> bool {
        let n = self.len();
        let a = &self.annihilator;
        (0..n).all(|i| (i..n).all(|j| a[self.meet(i, j)] == self.join(a[i], a[j])))
    }

    pub fn is_local(&self) -> bool {
        self.primes.len() == 1
    }

    pub fn is_field(&self) -> bool {
        self.len() == 2
    }

    /// Elements of `I_i`, ascending.
    pub fn members(&self, i: usize) -> Vec<Elem> {
        ideal_members(&self.ring, &self.ideals[i])
    }
}

/// Elementwise primality: `I` proper and `ab ∈ I ⇒ a ∈ I or b ∈ I`.
pub fn is_prime_elementwise(ring: &FiniteRing, ideal: &Ideal) -> bool {
    if ideal.size() == ring.size() {
        return false;
    }
    let outside: Vec<Elem> = ring.elements().filter(|&e| !contains(ring, ideal, e)).collect();
    let mut member = FixedBitSet::with_capacity(ring.size() as usize);
    for e in ideal_members(ring, ideal) {
        member.insert(e as usize);
    }
    outside
        .iter()
        .all(|&a| outside.iter().all(|&b| !member.contains(ring.mul(a, b) as usize)))
}
