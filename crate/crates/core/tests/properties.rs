mod common;

use common::{closure, Oracle};
use proptest::prelude::*;
use ramon::catalog::lookup;
use ramon::lattice::DEFAULT_IDEAL_BUDGET;
use ramon::monoid::DEFAULT_MONOID_BUDGET;
use ramon::pomonoid::OrderedMonoid;
use ramon::word::{format_word, parse_word};
use ramon::{all_ideals, build_ring, generate_monoid, is_isomorphic, odot, Generator, RingDescription};

/// Rings of at most 64 elements: cyclic, truncated polynomial, and products.
fn small_ring() -> impl Strategy<Value = RingDescription> {
    let leaf = prop_oneof![
        (1u64..=64).prop_map(|n| RingDescription::cyclic(n).unwrap()),
        (prop_oneof![Just(2u64), Just(3), Just(5)], 1u32..=3)
            .prop_filter("at most 64 elements", |(p, k)| p.pow(*k) <= 64)
            .prop_map(|(p, k)| RingDescription::truncated(p, k).unwrap()),
    ];
    (leaf.clone(), proptest::option::of(leaf)).prop_filter_map("at most 64 elements", |(a, b)| {
        let size = |d: &RingDescription| build_ring(d, 64).map(|r| ramon::RingOps::size(&r)).ok();
        match b {
            None => Some(a),
            Some(b) => {
                (size(&a)? * size(&b)? <= 64).then(|| RingDescription::product(vec![a, b]).unwrap())
            }
        }
    })
}

fn ra_catalog() -> impl Strategy<Value = OrderedMonoid> {
    prop::sample::select(vec![
        "LOCDUAL-i",
        "LOCDUAL-ii",
        "EX1-7",
        "SEMIPRIME-max",
        "FULLSEMIPRIME",
        "ZD-b",
        "ZD-c",
        "ZDR-16",
        "field",
    ])
    .prop_map(|n| lookup(n).unwrap().monoid)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_and_maps_match_the_oracle(desc in small_ring()) {
        let o = Oracle::new(&desc);
        let l = all_ideals(build_ring(&desc, 64).unwrap(), DEFAULT_IDEAL_BUDGET).unwrap();
        let masks: Vec<u64> = (0..l.len()).map(|i| l.members(i).iter().fold(0, |m, &e| m | 1 << e)).collect();
        let mut sorted = masks.clone();
        sorted.sort_by_key(|&m| (m.count_ones(), m));
        prop_assert_eq!(&sorted, &o.ideals);
        let primes: Vec<u64> = l.primes().iter().map(|&p| masks[p]).collect();
        let mut primes_sorted = primes.clone();
        primes_sorted.sort_by_key(|&m| (m.count_ones(), m));
        prop_assert_eq!(&primes_sorted, &o.primes);
        for (g, c) in [(Generator::Radical, 'r'), (Generator::Annihilator, 'a'), (Generator::Dualradical, 'd')] {
            let om = o.map(c);
            for i in 0..l.len() {
                prop_assert_eq!(masks[l.apply(g, i)], o.ideals[om[o.index(masks[i])]]);
            }
        }
    }

    #[test]
    fn monoid_size_matches_the_oracle(desc in small_ring(), gens in prop::sample::select(vec!["ra", "rd", "rad"])) {
        let o = Oracle::new(&desc);
        let l = all_ideals(build_ring(&desc, 64).unwrap(), DEFAULT_IDEAL_BUDGET).unwrap();
        let set = Generator::parse_set(gens).unwrap();
        let m = generate_monoid(&l, &set, DEFAULT_MONOID_BUDGET).unwrap();
        let c = closure(&o, gens);
        prop_assert_eq!(m.len(), c.maps.len());
        let flags = m.classify_properties();
        let mut lib_parities: Vec<[bool; 2]> = flags.iter().map(|f| [f.parity.even, f.parity.odd]).collect();
        let mut oracle_parities = c.parities.clone();
        lib_parities.sort();
        oracle_parities.sort();
        prop_assert_eq!(lib_parities, oracle_parities);
    }

    #[test]
    fn odot_size_bounds(parts in prop::collection::vec(ra_catalog(), 1..=3)) {
        let p = odot(&parts).unwrap();
        let max = parts.iter().map(|m| m.len()).max().unwrap();
        let prod: usize = parts.iter().map(|m| m.len()).product();
        prop_assert!(max <= p.len() && p.len() <= prod);
    }

    #[test]
    fn odot_of_copies_is_the_monoid(m in ra_catalog(), copies in 1usize..=3) {
        let p = odot(&vec![m.clone(); copies]).unwrap();
        prop_assert!(is_isomorphic(&p, &m));
    }

    #[test]
    fn monoid_json_round_trips(m in ra_catalog()) {
        let back = OrderedMonoid::from_json(&m.to_json().to_string()).unwrap();
        prop_assert!(is_isomorphic(&back, &m));
        prop_assert_eq!(back.labels(), m.labels());
    }

    #[test]
    fn word_format_round_trips(word in "[rad]{0,12}") {
        let letters: Vec<char> = word.chars().collect();
        prop_assert_eq!(parse_word(&format_word(&letters)).unwrap(), letters);
    }
}
