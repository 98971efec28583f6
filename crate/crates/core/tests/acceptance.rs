//! Acceptance criteria 1-9, each printed as one PASS/FAIL line. Runs with
//! its own harness so the lines show up without `--nocapture`.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use common::{closure, direct_product_closure, kuratowski_maps, orbit_sizes, Oracle};
use ramon::catalog::lookup;
use ramon::corpus::{builtin_corpus, maximal_power};
use ramon::ideal::{ideal_generated, ideal_members};
use ramon::lattice::DEFAULT_IDEAL_BUDGET;
use ramon::monoid::DEFAULT_MONOID_BUDGET;
use ramon::order::BitMatrix;
use ramon::pomonoid::OrderedMonoid;
use ramon::{
    all_ideals, build_ring, from_presentation, generate_monoid, is_isomorphic, odot, Generator, IdealLattice,
    RewritingPresentation, RingDescription, RingOps,
};

type Outcome = Result<(), String>;

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const RA: [Generator; 2] = [Generator::Radical, Generator::Annihilator];

fn lattice(desc: &RingDescription) -> IdealLattice {
    all_ideals(build_ring(desc, 1 << 20).expect("ring builds"), DEFAULT_IDEAL_BUDGET).expect("lattice builds")
}

fn catalog(name: &str) -> OrderedMonoid {
    lookup(name).expect("catalog entry").monoid
}

fn fx(n: u32) -> RingDescription {
    RingDescription::truncated(2, n).unwrap()
}

/// Library lattice index to oracle mask, matched by member sets.
fn masks(l: &IdealLattice) -> Vec<u64> {
    (0..l.len()).map(|i| l.members(i).iter().fold(0u64, |m, &e| m | 1 << e)).collect()
}

/// Oracle K-number and per-ideal k-numbers, in library index order.
fn oracle_k(desc: &RingDescription, l: &IdealLattice) -> (usize, Vec<usize>) {
    let o = Oracle::new(desc);
    let c = closure(&o, "ra");
    let k = orbit_sizes(&c.maps, o.ideals.len());
    (c.maps.len(), masks(l).iter().map(|&m| k[o.index(m)]).collect())
}

fn criterion_1() -> Outcome {
    let desc = fx(2);
    let l = lattice(&desc);
    let m = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?;
    let k = m.k_numbers();
    let x = l.index_of(&ideal_generated(l.ring(), &[l.ring().parse_element("x").unwrap()])).unwrap();
    check!(k.big_k == 7, "K = {}", k.big_k);
    check!(
        k.ideal_k[l.zero()] == 3 && k.ideal_k[x] == 1 && k.ideal_k[l.whole()] == 3,
        "k = {:?}",
        k.ideal_k
    );
    check!(oracle_k(&desc, &l) == (7, k.ideal_k.clone()), "oracle disagrees");
    let o = Oracle::new(&desc);
    check!(o.word("rar") == o.word("rara") && o.word("rar") == o.word("arar"), "oracle: rar = rara = arar fails");
    check!(
        m.relation_check("rar", "rara").unwrap() && m.relation_check("rar", "arar").unwrap(),
        "rar = rara = arar fails"
    );
    Ok(())
}

fn criterion_2() -> Outcome {
    let desc = fx(3);
    let l = lattice(&desc);
    let m = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?;
    let k = m.k_numbers();
    check!(k.big_k == 8, "K = {}", k.big_k);
    for i in 0..l.len() {
        let expect = if i == l.zero() || i == l.whole() { 4 } else { 2 };
        check!(k.ideal_k[i] == expect, "k = {:?}", k.ideal_k);
    }
    check!(oracle_k(&desc, &l) == (8, k.ideal_k.clone()), "oracle disagrees");
    check!(is_isomorphic(&m.export_abstract(), &catalog("LOCDUAL-i")), "not isomorphic to LOCDUAL-i");
    Ok(())
}

fn criterion_3() -> Outcome {
    let desc = RingDescription::product(vec![fx(3), RingDescription::cyclic(2).unwrap()]).unwrap();
    let l = lattice(&desc);
    let m = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?;
    check!(m.len() == 10, "K = {}", m.len());
    check!(oracle_k(&desc, &l).0 == 10, "oracle K = {}", oracle_k(&desc, &l).0);
    let o = Oracle::new(&desc);
    check!(o.word("rar") == o.word("rarara"), "oracle: rar != rarara");
    check!(o.word("rar") != o.word("rara"), "oracle: rar = rara");
    check!(m.relation_check("rar", "rarara").unwrap(), "rar != rarara");
    check!(!m.relation_check("rar", "rara").unwrap(), "rar = rara");
    check!(is_isomorphic(&m.export_abstract(), &catalog("LOCDUAL-ii")), "not isomorphic to LOCDUAL-ii");
    Ok(())
}

/// Elementwise ideal operations on an F_2-algebra whose element indices are
/// coordinate bit vectors, so addition is XOR.
struct Elementwise<'a> {
    ring: &'a ramon::FiniteRing,
}

impl Elementwise<'_> {
    fn size(&self) -> u64 {
        self.ring.size()
    }

    /// A spanning set of the XOR-closed set.
    fn basis(&self, set: &[bool]) -> Vec<u64> {
        let mut basis: Vec<u64> = Vec::new();
        for e in (0..self.size()).filter(|&e| set[e as usize]) {
            let reduced = basis.iter().fold(e, |v, &b| v.min(v ^ b));
            if reduced != 0 {
                basis.push(reduced);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis
    }

    fn annihilator(&self, set: &[bool]) -> Vec<bool> {
        let basis = self.basis(set);
        (0..self.size()).map(|z| basis.iter().all(|&b| self.ring.mul(b, z) == 0)).collect()
    }

    fn radical(&self, set: &[bool]) -> Vec<bool> {
        (0..self.size())
            .map(|z| {
                let mut p = z;
                for _ in 0..16 {
                    if set[p as usize] {
                        return true;
                    }
                    p = self.ring.mul(p, z);
                }
                set[p as usize]
            })
            .collect()
    }
}

fn criterion_4() -> Outcome {
    let l = lattice(&maximal_power(2, 5));
    let ring = l.ring();
    let m = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?;
    let members = |i: usize| -> Vec<bool> {
        let mut set = vec![false; ring.size() as usize];
        for e in ideal_members(ring, l.ideal(i)) {
            set[e as usize] = true;
        }
        set
    };
    let power = |k: usize| {
        let gens: Vec<u64> = (0..=k)
            .map(|i| ring.parse_element(&format!("x^{}*y^{}", k - i, i)).unwrap())
            .collect();
        l.index_of(&ideal_generated(ring, &gens)).unwrap()
    };
    let x2 = l.index_of(&ideal_generated(ring, &[ring.parse_element("x^2").unwrap()])).unwrap();
    let expected: HashSet<usize> = [x2, power(3), power(2), power(1), power(4)].into();
    check!(expected.len() == 5, "the five named ideals are not distinct");
    let orbit: HashSet<usize> = m.orbit(x2).into_iter().collect();
    check!(orbit == expected, "orbit {orbit:?}, expected {expected:?}");

    // The same orbit from elementwise radicals and annihilators.
    check!((0..ring.size()).step_by(97).all(|a| ring.add(a, 1234) == a ^ 1234), "addition is not XOR");
    let ew = Elementwise { ring };
    let mut sets: Vec<Vec<bool>> = vec![members(x2)];
    let mut i = 0;
    while i < sets.len() {
        for next in [ew.radical(&sets[i]), ew.annihilator(&sets[i])] {
            if !sets.contains(&next) {
                sets.push(next);
            }
        }
        i += 1;
        check!(sets.len() <= 64, "elementwise orbit does not close");
    }
    let mut named: Vec<Vec<bool>> = expected.iter().map(|&i| members(i)).collect();
    named.sort();
    sets.sort();
    check!(sets == named, "elementwise orbit has {} sets", sets.len());

    let k = m.k_numbers();
    check!(k.ring_k == 5, "ring k = {}", k.ring_k);
    check!(k.big_k <= 9, "K = {}", k.big_k);
    for (lhs, rhs) in [("r", "aar"), ("r", "raa"), ("rar", "rara")] {
        check!(m.relation_check(lhs, rhs).unwrap(), "{lhs} != {rhs}");
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let (f, b, c) = (catalog("field"), catalog("ZD-b"), catalog("ZD-c"));
    for (parts, size) in [
        (vec![&f, &b], 11),
        (vec![&f, &c], 12),
        (vec![&b, &c], 13),
        (vec![&f, &b, &c], 16),
    ] {
        let owned: Vec<OrderedMonoid> = parts.iter().map(|m| (*m).clone()).collect();
        let p = odot(&owned).map_err(|e| e.to_string())?;
        check!(p.len() == size, "odot has {} elements, expected {size}", p.len());
        let tables: Vec<_> = parts
            .iter()
            .map(|m| (m.table(), m.identity(), m.generators().iter().map(|g| g.1).collect::<Vec<_>>()))
            .collect();
        check!(direct_product_closure(&tables) == size, "direct product closure disagrees at {size}");
        if size == 16 {
            check!(is_isomorphic(&p, &catalog("ZDR-16")), "triple product is not ZDR-16");
        }
    }
    let z = catalog("ZDR-16");
    let ra2 = z.element("ra^2").unwrap();
    check!(z.mul(ra2, ra2) == z.element("a^2r").unwrap(), "(ra^2)^2 != a^2r");
    check!(z.mul(ra2, ra2) != ra2, "ra^2 is idempotent");
    Ok(())
}

fn criterion_6() -> Outcome {
    let pres = RewritingPresentation::new("kc", &["cc=1", "kk=k", "kckckck=kck"]).unwrap();
    let m = from_presentation(&pres).map_err(|e| e.to_string())?;
    check!(m.len() == 14, "{} elements", m.len());

    // Closure and complement on a concrete space generate the same monoid.
    let (k, c) = kuratowski_maps();
    let identity: Vec<usize> = (0..k.len()).collect();
    let mut maps = vec![identity];
    let mut i = 0;
    while i < maps.len() {
        for g in [&k, &c] {
            let h: Vec<usize> = maps[i].iter().map(|&s| g[s]).collect();
            if !maps.contains(&h) {
                maps.push(h);
            }
        }
        i += 1;
    }
    check!(maps.len() == 14, "the space gives {} operators", maps.len());
    let index = |f: &Vec<usize>| maps.iter().position(|g| g == f).unwrap();
    let table: Vec<Vec<usize>> = maps
        .iter()
        .map(|f| maps.iter().map(|g| index(&g.iter().map(|&s| f[s]).collect())).collect())
        .collect();
    let subset = |a: usize, b: usize| a & !b == 0;
    let mut order = BitMatrix::new(14);
    for (x, f) in maps.iter().enumerate() {
        for (y, g) in maps.iter().enumerate() {
            if f.iter().zip(g).all(|(&a, &b)| subset(a, b)) {
                order.set(x, y);
            }
        }
    }
    let labels = (0..14).map(|i| format!("f{i}")).collect();
    let gens = vec![('k', index(&k)), ('c', index(&c))];
    let space = OrderedMonoid::new(labels, 0, table.clone(), order, gens.clone()).map_err(|e| e.to_string())?;
    check!(is_isomorphic(&space, &catalog("KURA-14")), "catalog order differs from the space's");
    let discrete = OrderedMonoid::new(
        (0..14).map(|i| format!("f{i}")).collect(),
        0,
        table,
        BitMatrix::identity(14),
        gens,
    )
    .unwrap();
    check!(is_isomorphic(&discrete, &m), "presentation differs from the space's monoid");
    Ok(())
}

fn criterion_7() -> Outcome {
    let corpus = builtin_corpus();
    let lattices: Vec<IdealLattice> = corpus.iter().map(|c| lattice(&c.description)).collect();
    let exports: Vec<OrderedMonoid> = lattices
        .iter()
        .map(|l| generate_monoid(l, &RA, DEFAULT_MONOID_BUDGET).unwrap().export_abstract())
        .collect();
    let mut pairs = 0;
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            if lattices[i].ring().size() * lattices[j].ring().size() > 1 << 16 {
                continue;
            }
            let desc =
                RingDescription::product(vec![corpus[i].description.clone(), corpus[j].description.clone()]).unwrap();
            let l = lattice(&desc);
            let m = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?.export_abstract();
            let o = odot(&[exports[i].clone(), exports[j].clone()]).map_err(|e| e.to_string())?;
            check!(is_isomorphic(&m, &o), "{} x {}", corpus[i].name, corpus[j].name);
            pairs += 1;
        }
    }
    check!(pairs == corpus.len() * (corpus.len() + 1) / 2, "only {pairs} pairs checked");
    Ok(())
}

/// Library lattice, maps and monoid against the oracle, then the structural
/// theorems on the oracle's own data.
fn criterion_8() -> Outcome {
    for c in builtin_corpus() {
        let name = &c.name;
        let o = Oracle::new(&c.description);
        let l = lattice(&c.description);
        let lib_masks = masks(&l);
        let mut sorted = lib_masks.clone();
        sorted.sort_by_key(|&m| (m.count_ones(), m));
        check!(sorted == o.ideals, "{name}: ideal sets differ");
        for (g, letter) in [(Generator::Radical, 'r'), (Generator::Annihilator, 'a'), (Generator::Dualradical, 'd')] {
            let om = o.map(letter);
            for i in 0..l.len() {
                check!(
                    lib_masks[l.apply(g, i)] == o.ideals[om[o.index(lib_masks[i])]],
                    "{name}: {letter} differs at ideal {i}"
                );
            }
        }
        let lib = generate_monoid(&l, &RA, DEFAULT_MONOID_BUDGET).map_err(|e| e.to_string())?;
        let ra = closure(&o, "ra");
        check!(lib.len() == ra.maps.len(), "{name}: K {} vs oracle {}", lib.len(), ra.maps.len());
        theorems(&o).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn theorems(o: &Oracle) -> Outcome {
    let n = o.ideals.len();
    let w = |word: &str| o.word(word);
    let pointwise = |f: &[usize], g: &[usize]| f.iter().zip(g).all(|(&x, &y)| o.leq(x, y));
    let (r, a, d) = (w("r"), w("a"), w("d"));
    let zero = o.index(1);
    let whole = n - 1;
    let nil = r[zero];

    for x in 0..n {
        check!(o.leq(x, r[x]) && r[r[x]] == r[x], "r not extensive or idempotent");
        check!(o.leq(x, a[a[x]]) && a[a[a[x]]] == a[x], "aa not extensive or aaa != a");
        for y in (0..n).filter(|&y| o.leq(x, y)) {
            check!(o.leq(r[x], r[y]), "r not monotone");
            check!(o.leq(a[y], a[x]) && o.leq(d[y], d[x]), "a or d not antitone");
        }
    }

    // rar = rara exactly when a(N) lies in N, and then rar is constant.
    let stable = w("rar") == w("rara");
    check!(stable == o.leq(a[nil], nil), "rar = rara biconditional fails");
    if stable {
        check!(w("rar").iter().all(|&x| x == nil), "rar not constant N");
    }

    // Semiprime: no nonzero ideal squares to zero.
    let square_zero = o.ideals.iter().any(|&i| {
        i != 1
            && (0..64u64)
                .filter(|b| i >> b & 1 == 1)
                .all(|x| (0..64u64).filter(|b| i >> b & 1 == 1).all(|y| o.ring.mul(x, y) == 0))
    });
    let semiprime = !square_zero;
    for (label, holds) in [
        ("ra = ar", w("ra") == w("ar")),
        ("ra = a", w("ra") == a),
        ("ar = a", w("ar") == a),
        ("r <= aa", pointwise(&r, &w("aa"))),
        ("d = a", d == a),
    ] {
        check!(holds == semiprime, "semiprime is {semiprime}, {label} is {holds}");
    }
    if semiprime {
        let allowed = [w("1"), w("a"), w("aa"), w("r")];
        check!(closure(o, "ra").maps.iter().all(|f| allowed.contains(f)), "semiprime monoid too large");
    }

    // Dual rings: a(I meet J) = a(I) + a(J), and rar = rarara.
    if w("aa") == w("1") {
        for i in 0..n {
            for j in 0..n {
                let meet = o.index(o.ideals[i] & o.ideals[j]);
                let sum = o.index(o.generate(o.ideals[a[i]] | o.ideals[a[j]]));
                check!(a[meet] == sum, "a(I meet J) != a(I) + a(J)");
            }
        }
        check!(w("rar") == w("rarara"), "dual ring with rar != rarara");
    }

    // Local rings: aa(M) = M iff aar = r iff raa = r.
    if o.local() {
        let m = o.index(o.primes[0]);
        let (x, y, z) = (w("aa")[m] == m, w("aar") == r, w("raa") == r);
        check!(x == y && y == z, "local three-way equivalence fails: {x} {y} {z}");
    }

    // Dualradical inequalities and identities.
    check!(pointwise(&w("ra"), &d), "ra <= d fails");
    check!(pointwise(&r, &w("da")), "r <= da fails");
    check!(pointwise(&r, &w("dd")), "r <= dd fails");
    check!(w("ddd") == d && w("rd") == d && w("dr") == d, "ddd = d = rd = dr fails");
    if w("dd") == r {
        check!((0..n).filter(|&i| i != whole).all(|i| d[i] != nil), "dd = r but d(I) = r(0)");
    }

    // Fields.
    if o.primes == [1] {
        check!((0..n).all(|i| a[i] == if i == zero { whole } else { zero }), "field annihilator");
        check!(w("aa") == r, "field: aa != r");
    }

    // Parity of antitone letters controls monotonicity.
    let c = closure(o, "rad");
    for (f, [even, odd]) in c.maps.iter().zip(&c.parities) {
        let preserving = (0..n).all(|x| (0..n).all(|y| !o.leq(x, y) || o.leq(f[x], f[y])));
        let reversing = (0..n).all(|x| (0..n).all(|y| !o.leq(x, y) || o.leq(f[y], f[x])));
        check!(!even || preserving, "even word reverses order");
        check!(!odd || reversing, "odd word preserves order");
        check!(!(preserving && reversing) || f.iter().all(|&x| x == f[0]), "monotone and antitone but not constant");
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let pres = RewritingPresentation::new("ra", &["aa=1", "rr=r", "rarara=rar", "arar=r"]).unwrap();
    // The relations alone leave ra = rar and ara = r.
    let bare = from_presentation(&pres).map_err(|e| e.to_string())?;
    check!(bare.relation_holds("ra", "rar").unwrap(), "ra != rar");
    check!(bare.relation_holds("ara", "r").unwrap(), "ara != r");
    let ordered = pres.with_order(&["1<=r"]).unwrap().with_antitone("a").unwrap();
    let m = from_presentation(&ordered).map_err(|e| e.to_string())?;
    check!(m.len() == 2, "{} elements", m.len());
    check!(m.relation_holds("r", "1").unwrap() && m.relation_holds("aa", "1").unwrap(), "not r = aa = 1");
    check!(is_isomorphic(&m, &catalog("field")), "not the field type");
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("F2[x]/(x^2): K = 7, k = 3, 1, 3, rar = rara = arar", criterion_1),
        ("F2[x]/(x^3): K = 8, k = 4 and 2, LOCDUAL-i", criterion_2),
        ("F2[x]/(x^3) x GF(2): K = 10, rar = rarara != rara, LOCDUAL-ii", criterion_3),
        ("F2[x,y]/(x,y)^5: orbit of (x^2), k = 5, K <= 9", criterion_4),
        ("odot sizes 11, 12, 13, 16 and ZDR-16", criterion_5),
        ("Kuratowski presentation: 14 elements", criterion_6),
        ("corpus products match odot", criterion_7),
        ("structural theorems over the corpus", criterion_8),
        ("order axioms collapse to the field type", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {} ({secs:.2}s): {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {} ({secs:.2}s): {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
