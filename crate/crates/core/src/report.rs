//! The JSON analysis report for one ring.

use serde::Serialize;

use crate::catalog;
use crate::error::Result;
use crate::exec::Exec;
use crate::ideal::ideal_generators;
use crate::lattice::{all_ideals_with, IdealLattice};
use crate::monoid::{generate_monoid_with, ElementFlags, KReport, MapMonoid};
use crate::pomonoid::{is_collapse_of, is_isomorphic};
use crate::ring::{build_ring, FiniteRing, RingOps};
use crate::desc::RingDescription;
use crate::word::Generator;

/// Relations drawn from the monoid figures, checked whenever every letter is
/// a generator of the analysed monoid.
pub const NAMED_RELATIONS: &[(&str, &str)] = &[
    ("r", "1"),
    ("aa", "1"),
    ("aaa", "a"),
    ("rr", "r"),
    ("ra", "ar"),
    ("ra", "a"),
    ("ar", "a"),
    ("rar", "rara"),
    ("rar", "arar"),
    ("rar", "rarara"),
    ("aar", "r"),
    ("raa", "r"),
    ("ara", "ar"),
    ("aar", "raar"),
    ("raar", "aar"),
    ("rarar", "rara"),
    ("ddd", "d"),
    ("dd", "r"),
    ("rd", "d"),
    ("dr", "d"),
    ("d", "a"),
];

#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    pub elements: u64,
    pub ideals: usize,
    pub monoid: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            elements: crate::ring::DEFAULT_ELEMENT_BUDGET,
            ideals: crate::lattice::DEFAULT_IDEAL_BUDGET,
            monoid: crate::monoid::DEFAULT_MONOID_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingSummary {
    pub description: String,
    pub size: u64,
    pub characteristic: u64,
    pub local: bool,
    pub field: bool,
    pub semiprime: bool,
    pub dual: bool,
    /// `a(I ∩ J) = a(I) + a(J)` for all pairs.
    pub annihilator_intersection: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealEntry {
    pub index: usize,
    pub size: u64,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapImages {
    pub r: Vec<usize>,
    pub a: Vec<usize>,
    pub d: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementEntry {
    pub index: usize,
    pub word: String,
    pub image: Vec<usize>,
    pub flags: ElementFlags,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonoidReport {
    pub generators: String,
    pub elements: Vec<ElementEntry>,
    pub table: Vec<Vec<usize>>,
    pub order: Vec<String>,
    pub hasse: Vec<[usize; 2]>,
    pub k: KReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationEntry {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Classification {
    /// Catalog entries isomorphic to the monoid, generators matched in order.
    pub isomorphic: Vec<String>,
    /// Catalog entries the monoid is an order-preserving quotient of.
    pub collapse_of: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub ring: RingSummary,
    pub ideal_count: usize,
    pub ideals: Vec<IdealEntry>,
    pub containment: Vec<String>,
    pub spectrum: Vec<usize>,
    pub nilradical: usize,
    pub maps: MapImages,
    pub monoid: MonoidReport,
    pub relations: Vec<RelationEntry>,
    pub classification: Classification,
}

impl AnalysisReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn ring_summary(lattice: &IdealLattice) -> RingSummary {
    let ring = lattice.ring();
    RingSummary {
        description: ring.description().to_string(),
        size: ring.size(),
        characteristic: ring.characteristic(),
        local: lattice.is_local(),
        field: lattice.is_field(),
        semiprime: lattice.is_semiprime_ring(),
        dual: lattice.is_dual_ring(),
        annihilator_intersection: lattice.birkenmeier_condition(),
    }
}

fn ideal_entries(lattice: &IdealLattice) -> Vec<IdealEntry> {
    let ring: &FiniteRing = lattice.ring();
    lattice
        .ideals()
        .iter()
        .enumerate()
        .map(|(index, ideal)| IdealEntry {
            index,
            size: ideal.size(),
            generators: ideal_generators(ring, ideal).into_iter().map(|g| ring.format_element(g)).collect(),
        })
        .collect()
}

fn monoid_report(monoid: &MapMonoid<'_>, exec: Exec) -> MonoidReport {
    let flags = monoid.classify_properties_with(exec);
    MonoidReport {
        generators: monoid.export_abstract().generators().iter().map(|&(c, _)| c).collect(),
        elements: monoid
            .elements()
            .iter()
            .zip(flags)
            .enumerate()
            .map(|(index, (e, flags))| ElementEntry {
                index,
                word: e.label(),
                image: e.image.clone(),
                flags,
            })
            .collect(),
        table: monoid.table().to_vec(),
        order: monoid.order().to_bit_strings(),
        hasse: monoid.hasse().into_iter().map(|(lo, hi)| [lo, hi]).collect(),
        k: monoid.k_numbers(),
    }
}

/// Named relations whose letters are all generators of `monoid`.
pub fn relation_table(monoid: &MapMonoid<'_>) -> Vec<RelationEntry> {
    let symbols: Vec<char> = monoid.generators().iter().map(|g| g.symbol()).collect();
    NAMED_RELATIONS
        .iter()
        .filter(|(l, r)| l.chars().chain(r.chars()).all(|c| c == '1' || symbols.contains(&c)))
        .map(|&(l, r)| RelationEntry {
            lhs: l.to_string(),
            rhs: r.to_string(),
            holds: monoid.relation_check(l, r).expect("letters are generators"),
        })
        .collect()
}

/// Matches against the catalog, including the field type. Generators are
/// compared by position, so only two-generator monoids can match.
pub fn classify(monoid: &MapMonoid<'_>) -> Classification {
    let abstract_monoid = monoid.export_abstract();
    let mut out = Classification::default();
    if abstract_monoid.generators().len() != 2 {
        return out;
    }
    for name in catalog::names() {
        let entry = catalog::lookup(name).expect("listed name");
        if is_isomorphic(&abstract_monoid, &entry.monoid) {
            out.isomorphic.push(entry.title.to_string());
        }
        if is_collapse_of(&abstract_monoid, &entry.monoid) {
            out.collapse_of.push(entry.name.to_string());
        }
    }
    out
}

pub fn analyze_lattice(lattice: &IdealLattice, generators: &[Generator], monoid_budget: usize, exec: Exec) -> Result<AnalysisReport> {
    let monoid = generate_monoid_with(lattice, generators, monoid_budget, exec)?;
    let n = lattice.len();
    Ok(AnalysisReport {
        ring: ring_summary(lattice),
        ideal_count: n,
        ideals: ideal_entries(lattice),
        containment: lattice.containment().to_bit_strings(),
        spectrum: lattice.primes().to_vec(),
        nilradical: lattice.nilradical(),
        maps: MapImages {
            r: (0..n).map(|i| lattice.radical(i)).collect(),
            a: (0..n).map(|i| lattice.annihilator(i)).collect(),
            d: (0..n).map(|i| lattice.dualradical(i)).collect(),
        },
        monoid: monoid_report(&monoid, exec),
        relations: relation_table(&monoid),
        classification: classify(&monoid),
    })
}

pub fn analyze(desc: &RingDescription, generators: &[Generator], budgets: Budgets, exec: Exec) -> Result<AnalysisReport> {
    let ring = build_ring(desc, budgets.elements)?;
    let lattice = all_ideals_with(ring, budgets.ideals, exec)?;
    analyze_lattice(&lattice, generators, budgets.monoid, exec)
}
