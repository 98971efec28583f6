//! Ideals of a [`FiniteRing`] in canonical form.
//!
//! Rings that are `F_p`-vector spaces store ideals as reduced echelon
//! subspaces; all other rings store the sorted element set as a bitset.
//! Either way two ideals are equal exactly when their representations are.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::linalg::{kernel, Subspace};
use crate::ring::{Elem, FiniteRing, RingOps};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ideal {
    Span(Subspace),
    Elements(FixedBitSet),
}

impl Ideal {
    pub fn size(&self) -> u64 {
        match self {
            Ideal::Span(s) => s.cardinality() as u64,
            Ideal::Elements(b) => b.count_ones(..) as u64,
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        match (self, other) {
            (Ideal::Span(a), Ideal::Span(b)) => a.is_subspace_of(b),
            (Ideal::Elements(a), Ideal::Elements(b)) => a.is_subset(b),
            _ => false,
        }
    }

    fn belongs_to(&self, ring: &FiniteRing) -> bool {
        match (self, ring.vector_space()) {
            (Ideal::Span(s), Some((p, dim))) => s.prime() == p && s.dim() == dim,
            (Ideal::Elements(b), None) => b.len() as u64 == ring.size(),
            _ => false,
        }
    }
}

fn check(ring: &FiniteRing, ideals: &[&Ideal]) -> Result<()> {
    if ideals.iter().all(|i| i.belongs_to(ring)) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn zero_ideal(ring: &FiniteRing) -> Ideal {
    match ring.vector_space() {
        Some((p, dim)) => Ideal::Span(Subspace::zero(p, dim)),
        None => {
            let mut b = FixedBitSet::with_capacity(ring.size() as usize);
            b.insert(0);
            Ideal::Elements(b)
        }
    }
}

pub fn unit_ideal(ring: &FiniteRing) -> Ideal {
    match ring.vector_space() {
        Some((p, dim)) => Ideal::Span(Subspace::full(p, dim)),
        None => {
            let mut b = FixedBitSet::with_capacity(ring.size() as usize);
            b.insert_range(..);
            Ideal::Elements(b)
        }
    }
}

pub fn contains(ring: &FiniteRing, ideal: &Ideal, e: Elem) -> bool {
    match ideal {
        Ideal::Span(s) => s.contains(&ring.to_vector(e)),
        Ideal::Elements(b) => b.contains(e as usize),
    }
}

/// Subgroup generated by `start` (already a subgroup) and `gens`.
fn additive_closure(ring: &FiniteRing, mut set: FixedBitSet, gens: &[Elem]) -> FixedBitSet {
    let mut queue: Vec<Elem> = set.ones().map(|e| e as Elem).collect();
    while let Some(s) = queue.pop() {
        for &g in gens {
            let t = ring.add(s, g);
            if !set.put(t as usize) {
                queue.push(t);
            }
        }
    }
    set
}

/// Multiples `b * g` of every element by an additive generating set of the ring.
fn module_generators(ring: &FiniteRing, elements: &[Elem]) -> Vec<Elem> {
    let gens = ring.additive_generators();
    let mut out: Vec<Elem> = elements
        .iter()
        .flat_map(|&g| gens.iter().map(move |&b| ring.mul(b, g)))
        .filter(|&x| x != 0)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Smallest ideal containing `elements`.
pub fn ideal_generated(ring: &FiniteRing, elements: &[Elem]) -> Ideal {
    let gens = module_generators(ring, elements);
    match ring.vector_space() {
        Some((p, dim)) => Ideal::Span(Subspace::span(p, dim, gens.iter().map(|&g| ring.to_vector(g)))),
        None => match zero_ideal(ring) {
            Ideal::Elements(z) => Ideal::Elements(additive_closure(ring, z, &gens)),
            Ideal::Span(_) => unreachable!(),
        },
    }
}

/// `R g`. For element-set rings this is computed directly as `{ r g }`.
pub fn principal_ideal(ring: &FiniteRing, g: Elem) -> Ideal {
    match ring.vector_space() {
        Some(_) => ideal_generated(ring, &[g]),
        None => {
            let mut b = FixedBitSet::with_capacity(ring.size() as usize);
            for r in ring.elements() {
                b.insert(ring.mul(r, g) as usize);
            }
            Ideal::Elements(b)
        }
    }
}

/// An additive generating set of the ideal (echelon rows for subspaces,
/// greedy otherwise).
pub fn additive_basis(ring: &FiniteRing, ideal: &Ideal) -> Vec<Elem> {
    match ideal {
        Ideal::Span(s) => s.rows().iter().map(|r| ring.from_vector(r)).collect(),
        Ideal::Elements(b) => {
            let mut basis = Vec::new();
            let Ideal::Elements(mut reached) = zero_ideal(ring) else {
                unreachable!()
            };
            for e in b.ones() {
                if !reached.contains(e) {
                    basis.push(e as Elem);
                    reached = additive_closure(ring, reached, &[e as Elem]);
                }
            }
            basis
        }
    }
}

/// A small set of ideal generators, chosen greedily from the additive basis.
pub fn ideal_generators(ring: &FiniteRing, ideal: &Ideal) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut reached = zero_ideal(ring);
    for b in additive_basis(ring, ideal) {
        if !contains(ring, &reached, b) {
            gens.push(b);
            reached = ideal_generated(ring, &gens);
        }
        if reached == *ideal {
            break;
        }
    }
    gens
}

/// Every element of the ideal, ascending.
pub fn ideal_members(ring: &FiniteRing, ideal: &Ideal) -> Vec<Elem> {
    match ideal {
        Ideal::Elements(b) => b.ones().map(|e| e as Elem).collect(),
        Ideal::Span(s) => {
            let p = s.prime();
            let mut out = vec![vec![0u32; s.dim()]];
            for row in s.rows() {
                let mut next = Vec::with_capacity(out.len() * p as usize);
                for v in &out {
                    for k in 0..p {
                        let mut w = v.clone();
                        crate::linalg::axpy(&mut w, k, row, p);
                        next.push(w);
                    }
                }
                out = next;
            }
            let mut elems: Vec<Elem> = out.iter().map(|v| ring.from_vector(v)).collect();
            elems.sort_unstable();
            elems
        }
    }
}

pub fn sum_ideals(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(ring, &[a, b])?;
    Ok(match (a, b) {
        (Ideal::Span(x), Ideal::Span(y)) => Ideal::Span(x.sum(y)),
        (Ideal::Elements(x), Ideal::Elements(_)) => {
            let gens = additive_basis(ring, b);
            Ideal::Elements(additive_closure(ring, x.clone(), &gens))
        }
        _ => unreachable!(),
    })
}

pub fn intersect_ideals(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(ring, &[a, b])?;
    Ok(match (a, b) {
        (Ideal::Span(x), Ideal::Span(y)) => Ideal::Span(x.intersection(y)),
        (Ideal::Elements(x), Ideal::Elements(y)) => {
            let mut z = x.clone();
            z.intersect_with(y);
            Ideal::Elements(z)
        }
        _ => unreachable!(),
    })
}

/// `IJ`, the ideal generated by products of generators.
pub fn multiply_ideals(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check(ring, &[a, b])?;
    let (ga, gb) = (additive_basis(ring, a), additive_basis(ring, b));
    let prods: Vec<Elem> = ga
        .iter()
        .flat_map(|&x| gb.iter().map(move |&y| ring.mul(x, y)))
        .collect();
    Ok(ideal_generated(ring, &prods))
}

/// `{ r : I r = 0 }`.
pub fn annihilator_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<Ideal> {
    check(ring, &[ideal])?;
    let gens = additive_basis(ring, ideal);
    Ok(match ring.vector_space() {
        Some((p, dim)) => {
            // Row (g, k) of the constraint matrix is coordinate k of r*g as a
            // linear function of r.
            let units: Vec<Elem> = (0..dim).map(|j| (p as u64).pow(j as u32)).collect();
            let mut rows = Vec::with_capacity(gens.len() * dim);
            for &g in &gens {
                let cols: Vec<Vec<u32>> = units.iter().map(|&u| ring.to_vector(ring.mul(u, g))).collect();
                for k in 0..dim {
                    rows.push(cols.iter().map(|c| c[k]).collect());
                }
            }
            Ideal::Span(kernel(p, dim, &rows))
        }
        None => {
            let mut b = FixedBitSet::with_capacity(ring.size() as usize);
            for r in ring.elements() {
                if gens.iter().all(|&g| ring.mul(r, g) == 0) {
                    b.insert(r as usize);
                }
            }
            Ideal::Elements(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::RingDescription;
    use crate::ring::build_ring;
    use std::collections::BTreeSet;

    fn z(n: u64) -> FiniteRing {
        build_ring(&RingDescription::cyclic(n).unwrap(), 1 << 20).unwrap()
    }

    /// Brute-force ideal closure: repeat additive and multiplicative closure.
    fn closure_oracle(ring: &FiniteRing, elems: &[Elem]) -> BTreeSet<Elem> {
        let mut set: BTreeSet<Elem> = elems.iter().copied().collect();
        set.insert(0);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.insert(ring.add(a, b));
                }
                for r in ring.elements() {
                    next.insert(ring.mul(r, a));
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    fn members(ring: &FiniteRing, i: &Ideal) -> BTreeSet<Elem> {
        ideal_members(ring, i).into_iter().collect()
    }

    #[test]
    fn generated_in_z12() {
        let r = z(12);
        let i = ideal_generated(&r, &[4]);
        assert_eq!(members(&r, &i), BTreeSet::from([0, 4, 8]));
        assert_eq!(members(&r, &i), closure_oracle(&r, &[4]));
        assert_eq!(ideal_generated(&r, &[]), zero_ideal(&r));
        assert_eq!(ideal_generated(&r, &[1]), unit_ideal(&r));
        assert_eq!(principal_ideal(&r, 4), i);
    }

    #[test]
    fn generated_matches_oracle_in_vector_rings() {
        let d = RingDescription::poly_quotient(2, &["x", "y"], &["x^2 = 0", "y^3 = 0"], &[]).unwrap();
        let r = build_ring(&d, 1 << 20).unwrap();
        for g in [[3u64, 5], [2, 0], [6, 9], [1, 0]] {
            let i = ideal_generated(&r, &g);
            assert_eq!(members(&r, &i), closure_oracle(&r, &g));
        }
    }

    #[test]
    fn sums_products_intersections_in_z12() {
        let r = z(12);
        let (i4, i6, i2, i3) = (
            principal_ideal(&r, 4),
            principal_ideal(&r, 6),
            principal_ideal(&r, 2),
            principal_ideal(&r, 3),
        );
        assert_eq!(sum_ideals(&r, &i4, &i6).unwrap(), i2);
        assert_eq!(sum_ideals(&r, &i4, &zero_ideal(&r)).unwrap(), i4);
        assert_eq!(multiply_ideals(&r, &i2, &i3).unwrap(), i6);
        assert_eq!(intersect_ideals(&r, &i4, &i6).unwrap(), principal_ideal(&r, 0));
        assert_eq!(intersect_ideals(&r, &i2, &i3).unwrap(), i6);
    }

    #[test]
    fn annihilators() {
        let r = z(12);
        assert_eq!(annihilator_ideal(&r, &principal_ideal(&r, 2)).unwrap(), principal_ideal(&r, 6));
        assert_eq!(annihilator_ideal(&r, &zero_ideal(&r)).unwrap(), unit_ideal(&r));
        let fx2 = build_ring(&RingDescription::truncated(2, 2).unwrap(), 1 << 20).unwrap();
        let x = fx2.parse_element("x").unwrap();
        let ix = principal_ideal(&fx2, x);
        assert_eq!(annihilator_ideal(&fx2, &ix).unwrap(), ix);
    }

    #[test]
    fn annihilator_by_brute_force_in_vector_ring() {
        let d = RingDescription::poly_quotient(3, &["x", "y"], &["x^2 = 0", "y^2 = 0"], &[]).unwrap();
        let r = build_ring(&d, 1 << 20).unwrap();
        for g in r.elements().step_by(7) {
            let i = principal_ideal(&r, g);
            let ann = annihilator_ideal(&r, &i).unwrap();
            let expected: BTreeSet<Elem> = r
                .elements()
                .filter(|&s| ideal_members(&r, &i).iter().all(|&m| r.mul(s, m) == 0))
                .collect();
            assert_eq!(members(&r, &ann), expected);
        }
    }

    #[test]
    fn mismatched_rings_error() {
        let (a, b) = (z(12), z(6));
        let i = principal_ideal(&b, 2);
        assert!(matches!(sum_ideals(&a, &principal_ideal(&a, 2), &i), Err(Error::RingMismatch)));
    }

    #[test]
    fn generators_regenerate() {
        let d = RingDescription::product(vec![
            RingDescription::cyclic(4).unwrap(),
            RingDescription::truncated(2, 3).unwrap(),
        ])
        .unwrap();
        let r = build_ring(&d, 1 << 20).unwrap();
        for g in r.elements() {
            let i = principal_ideal(&r, g);
            let gens = ideal_generators(&r, &i);
            assert_eq!(ideal_generated(&r, &gens), i);
            assert!(gens.len() <= 2);
        }
    }
}
