//! Commutative-ring axiom validation.
//!
//! For rings with at most [`EXHAUSTIVE_LIMIT`] elements every check is
//! exhaustive: binary laws run over all pairs, and the ternary laws run over
//! all pairs times an additive generating set, which by induction on sums of
//! generators covers every triple. Larger rings are checked on random triples.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::exec::Exec;
use crate::ring::{Elem, RingOps};

pub const EXHAUSTIVE_LIMIT: u64 = 4096;
pub const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveIdentity,
    AdditiveInverses,
    Associativity,
    Commutativity,
    Identity,
    Distributivity,
    ZeroAnnihilates,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::AdditiveAssociativity,
        Axiom::AdditiveCommutativity,
        Axiom::AdditiveIdentity,
        Axiom::AdditiveInverses,
        Axiom::Associativity,
        Axiom::Commutativity,
        Axiom::Identity,
        Axiom::Distributivity,
        Axiom::ZeroAnnihilates,
    ];

    fn holds<R: RingOps + ?Sized>(self, r: &R, a: Elem, b: Elem, c: Elem) -> bool {
        match self {
            Axiom::AdditiveAssociativity => r.add(r.add(a, b), c) == r.add(a, r.add(b, c)),
            Axiom::AdditiveCommutativity => r.add(a, b) == r.add(b, a),
            Axiom::AdditiveIdentity => r.add(a, r.zero()) == a,
            Axiom::AdditiveInverses => r.add(a, r.neg(a)) == r.zero(),
            Axiom::Associativity => r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)),
            Axiom::Commutativity => r.mul(a, b) == r.mul(b, a),
            Axiom::Identity => r.mul(r.one(), a) == a && r.mul(a, r.one()) == a,
            Axiom::Distributivity => {
                r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
                    && r.mul(r.add(b, c), a) == r.add(r.mul(b, a), r.mul(c, a))
            }
            Axiom::ZeroAnnihilates => r.mul(r.zero(), a) == r.zero(),
        }
    }

    fn arity(self) -> usize {
        match self {
            Axiom::AdditiveIdentity
            | Axiom::AdditiveInverses
            | Axiom::Identity
            | Axiom::ZeroAnnihilates => 1,
            Axiom::AdditiveCommutativity | Axiom::Commutativity => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// First failing `(a, b, c)` (unused positions are 0).
    pub witness: Option<[Elem; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub size: u64,
    pub exhaustive: bool,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("every axiom is checked")
    }
}

pub fn validate_ring_axioms<R: RingOps + ?Sized>(ring: &R) -> ValidationReport {
    validate_ring_axioms_with(ring, Exec::default())
}

pub fn validate_ring_axioms_with<R: RingOps + ?Sized>(ring: &R, exec: Exec) -> ValidationReport {
    let n = ring.size();
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let checks = if exhaustive {
        let gens = ring.additive_generators();
        let all: Vec<Elem> = (0..n).collect();
        // Checking the third argument on additive generators suffices for
        // the ternary laws, except that associativity only reduces this way
        // once distributivity is known.
        let distributive = third_argument_witness(ring, exec, Axiom::Distributivity, &gens).is_none();
        Axiom::ALL
            .iter()
            .map(|&ax| {
                let thirds = if ax == Axiom::Associativity && !distributive {
                    &all
                } else {
                    &gens
                };
                let witness = match ax.arity() {
                    1 => exec.find_first(n as usize, |a| {
                        let a = a as Elem;
                        (!ax.holds(ring, a, 0, 0)).then_some([a, 0, 0])
                    }),
                    2 => exec.find_first(n as usize, |a| {
                        let a = a as Elem;
                        (0..n).find(|&b| !ax.holds(ring, a, b, 0)).map(|b| [a, b, 0])
                    }),
                    _ => third_argument_witness(ring, exec, ax, thirds),
                };
                AxiomCheck {
                    axiom: ax,
                    passed: witness.is_none(),
                    witness,
                }
            })
            .collect()
    } else {
        let mut rng = StdRng::seed_from_u64(0x005e_ed0f_41a5);
        let triples: Vec<[Elem; 3]> = (0..SAMPLED_TRIPLES)
            .map(|_| [rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)])
            .collect();
        Axiom::ALL
            .iter()
            .map(|&ax| {
                let witness = exec.find_first(triples.len(), |i| {
                    let [a, b, c] = triples[i];
                    (!ax.holds(ring, a, b, c)).then_some(triples[i])
                });
                AxiomCheck {
                    axiom: ax,
                    passed: witness.is_none(),
                    witness,
                }
            })
            .collect()
    };
    ValidationReport {
        size: n,
        exhaustive,
        checks,
    }
}

fn third_argument_witness<R: RingOps + ?Sized>(
    ring: &R,
    exec: Exec,
    ax: Axiom,
    thirds: &[Elem],
) -> Option<[Elem; 3]> {
    let n = ring.size();
    exec.find_first(n as usize, |a| {
        let a = a as Elem;
        (0..n).find_map(|b| {
            thirds
                .iter()
                .find(|&&c| !ax.holds(ring, a, b, c))
                .map(|&c| [a, b, c])
        })
    })
}
