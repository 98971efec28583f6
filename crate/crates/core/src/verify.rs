//! The check suite behind `ramon verify`: the worked examples, the product
//! construction, and structural properties over a corpus of rings.

use serde::Serialize;

use crate::catalog::lookup;
use crate::corpus::{builtin_corpus, maximal_power, CorpusRing};
use crate::desc::RingDescription;
use crate::error::Result;
use crate::exec::Exec;
use crate::ideal::{additive_basis, ideal_generated, multiply_ideals};
use crate::lattice::{all_ideals_with, IdealLattice, DEFAULT_IDEAL_BUDGET};
use crate::monoid::{generate_monoid_with, MapMonoid, DEFAULT_MONOID_BUDGET};
use crate::pomonoid::{from_presentation, is_collapse_of, is_isomorphic, odot, RewritingPresentation};
use crate::ring::{build_ring, RingOps, DEFAULT_ELEMENT_BUDGET};
use crate::word::{parse_word, Generator};

use Generator::{Annihilator as A, Dualradical as D, Radical as R};

/// Rings whose products with each other are checked against `odot`.
pub const PRODUCT_SIZE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// First counterexample or error, empty on success.
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub slow: bool,
    pub extra: Vec<CorpusRing>,
    pub exec: Exec,
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn lattice_of(desc: &RingDescription, exec: Exec) -> Result<IdealLattice> {
    all_ideals_with(build_ring(desc, DEFAULT_ELEMENT_BUDGET)?, DEFAULT_IDEAL_BUDGET, exec)
}

/// Applies a word (rightmost letter first) to every ideal.
pub fn word_map(l: &IdealLattice, word: &str) -> Vec<usize> {
    let letters = parse_word(word).expect("static word");
    (0..l.len())
        .map(|i| {
            letters.iter().rev().fold(i, |x, &c| l.apply(Generator::from_symbol(c).expect("generator letter"), x))
        })
        .collect()
}

fn pointwise_leq(l: &IdealLattice, f: &[usize], g: &[usize]) -> bool {
    f.iter().zip(g).all(|(&x, &y)| l.leq(x, y))
}

/// Index of the ideal generated by the named elements.
pub fn ideal_from(l: &IdealLattice, elements: &[&str]) -> Result<usize> {
    let ring = l.ring();
    let elems = elements.iter().map(|e| ring.parse_element(e)).collect::<Result<Vec<_>>>()?;
    l.index_of(&ideal_generated(ring, &elems))
}

/// `I * J = {0}` from products of additive bases.
fn kills(l: &IdealLattice, i: usize, j: usize) -> bool {
    let ring = l.ring();
    let (bi, bj) = (additive_basis(ring, l.ideal(i)), additive_basis(ring, l.ideal(j)));
    bi.iter().all(|&x| bj.iter().all(|&y| ring.mul(x, y) == ring.zero()))
}

/// `Q` is semiprime iff `J^2 ⊆ Q` implies `J ⊆ Q`, with squares computed
/// directly rather than through primes.
fn elementary_semiprime(l: &IdealLattice, squares: &[usize], q: usize) -> bool {
    (0..l.len()).all(|j| !l.leq(squares[j], q) || l.leq(j, q))
}

fn squares(l: &IdealLattice) -> Result<Vec<usize>> {
    (0..l.len())
        .map(|j| l.index_of(&multiply_ideals(l.ring(), l.ideal(j), l.ideal(j))?))
        .collect()
}

struct Subject<'a> {
    name: &'a str,
    lattice: &'a IdealLattice,
    ra: MapMonoid<'a>,
    rad: MapMonoid<'a>,
}

type PropertyCheck = fn(&Subject<'_>) -> Outcome;

fn maps_of(s: &Subject<'_>) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let l = s.lattice;
    (l.map_of(R).to_vec(), l.map_of(A).to_vec(), l.map_of(D).to_vec())
}

fn radical_and_annihilator_basics(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let (r, a, _) = maps_of(s);
    for x in 0..l.len() {
        ensure(l.leq(x, r[x]), || format!("I <= r(I) fails at ideal {x}"))?;
        ensure(r[r[x]] == r[x], || format!("rr = r fails at ideal {x}"))?;
        ensure(l.leq(x, a[a[x]]), || format!("I <= aa(I) fails at ideal {x}"))?;
        ensure(a[a[a[x]]] == a[x], || format!("aaa = a fails at ideal {x}"))?;
        for y in l.containment().row(x).ones() {
            ensure(l.leq(r[x], r[y]), || format!("r not monotone on {x} <= {y}"))?;
            ensure(l.leq(a[y], a[x]), || format!("a not antitone on {x} <= {y}"))?;
        }
    }
    Ok(())
}

fn annihilator_is_largest_killer(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    for i in 0..l.len() {
        for j in 0..l.len() {
            ensure(kills(l, i, j) == l.leq(j, l.annihilator(i)), || {
                format!("ideal {j} kills ideal {i} disagrees with a({i})")
            })?;
        }
    }
    Ok(())
}

fn radical_is_smallest_semiprime(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let sq = lift(squares(l))?;
    for q in 0..l.len() {
        ensure(elementary_semiprime(l, &sq, q) == l.is_semiprime_ideal(q), || {
            format!("semiprimality of ideal {q} disagrees with the square test")
        })?;
    }
    for i in 0..l.len() {
        let r = l.radical(i);
        ensure(elementary_semiprime(l, &sq, r), || format!("r({i}) is not semiprime"))?;
        for q in 0..l.len() {
            if l.leq(i, q) && elementary_semiprime(l, &sq, q) {
                ensure(l.leq(r, q), || format!("semiprime {q} contains {i} but not r({i})"))?;
            }
        }
    }
    Ok(())
}

fn rar_stabilizes_iff(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let n = l.nilradical();
    let stable = word_map(l, "rar") == word_map(l, "rara");
    let criterion = l.leq(l.annihilator(n), n);
    ensure(stable == criterion, || format!("rar = rara is {stable} but a(N) <= N is {criterion}"))?;
    if stable {
        let rar = word_map(l, "rar");
        ensure(rar.iter().all(|&x| x == n), || "rar is not constant with value r(0)".into())?;
    }
    Ok(())
}

fn semiprime_equivalences(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let sq = lift(squares(l))?;
    let semiprime = elementary_semiprime(l, &sq, l.zero());
    let (ra, ar, a, r, aa) = (word_map(l, "ra"), word_map(l, "ar"), word_map(l, "a"), word_map(l, "r"), word_map(l, "aa"));
    let sides = [
        ("ra = ar", ra == ar),
        ("ra = a", ra == a),
        ("ar = a", ar == a),
        ("r <= aa", pointwise_leq(l, &r, &aa)),
    ];
    for (label, holds) in sides {
        ensure(holds == semiprime, || format!("semiprime is {semiprime} but {label} is {holds}"))?;
    }
    ensure(l.is_semiprime_ring() == semiprime, || "ring-level semiprime flag disagrees".into())
}

fn dual_rings_split_intersections(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    if !l.is_dual_ring() {
        return Ok(());
    }
    for i in 0..l.len() {
        for j in 0..l.len() {
            let lhs = l.annihilator(l.meet(i, j));
            let rhs = l.join(l.annihilator(i), l.annihilator(j));
            ensure(lhs == rhs, || format!("a(I meet J) != a(I) + a(J) at ({i}, {j})"))?;
        }
    }
    Ok(())
}

fn local_rings_radical_from_annihilator(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    if !l.is_local() {
        return Ok(());
    }
    let m = l.primes()[0];
    let aa = word_map(l, "aa");
    let fixes_max = aa[m] == m;
    let left = word_map(l, "aar") == word_map(l, "r");
    let right = word_map(l, "raa") == word_map(l, "r");
    ensure(fixes_max == left && left == right, || {
        format!("aa(M) = M is {fixes_max}, aar = r is {left}, raa = r is {right}")
    })
}

fn dualradical_properties(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let (r, _, d) = maps_of(s);
    for x in 0..l.len() {
        for y in l.containment().row(x).ones() {
            ensure(l.leq(d[y], d[x]), || format!("d not antitone on {x} <= {y}"))?;
        }
    }
    let w = |word: &str| word_map(l, word);
    ensure(pointwise_leq(l, &w("ra"), &d), || "ra <= d fails".into())?;
    ensure(pointwise_leq(l, &r, &w("da")), || "r <= da fails".into())?;
    ensure(pointwise_leq(l, &r, &w("dd")), || "r <= dd fails".into())?;
    ensure(w("ddd") == d, || "ddd = d fails".into())?;
    ensure(w("rd") == d && w("dr") == d, || "rd = d = dr fails".into())
}

fn dualradical_is_annihilator_iff_semiprime(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let same = l.map_of(D) == l.map_of(A);
    let semiprime = l.is_semiprime_ring();
    ensure(same == semiprime, || format!("d = a is {same}, semiprime is {semiprime}"))
}

fn fields_kill_nonzero_ideals(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    if !l.is_field() {
        return Ok(());
    }
    for i in 0..l.len() {
        let expect = if i == l.zero() { l.whole() } else { l.zero() };
        ensure(l.annihilator(i) == expect, || format!("a({i}) is not the expected trivial ideal"))?;
    }
    ensure(word_map(l, "aa") == word_map(l, "r"), || "aa != r".into())
}

fn parity_controls_monotonicity(s: &Subject<'_>) -> Outcome {
    for monoid in [&s.ra, &s.rad] {
        for (k, f) in monoid.classify_properties().iter().enumerate() {
            let label = monoid.element(k).label();
            ensure(!f.parity.even || f.order_preserving, || format!("{label} has an even word but reverses order"))?;
            ensure(!f.parity.odd || f.order_reversing, || format!("{label} has an odd word but preserves order"))?;
            ensure(!(f.order_preserving && f.order_reversing) || f.constant, || {
                format!("{label} preserves and reverses order but is not constant")
            })?;
        }
    }
    Ok(())
}

fn dd_equals_r_separates(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    if word_map(l, "dd") != word_map(l, "r") {
        return Ok(());
    }
    let n = l.nilradical();
    for i in (0..l.len()).filter(|&i| i != l.whole()) {
        ensure(l.dualradical(i) != n, || format!("d({i}) = r(0) although dd = r"))?;
    }
    Ok(())
}

fn k_number_bounds(s: &Subject<'_>) -> Outcome {
    for monoid in [&s.ra, &s.rad] {
        let k = monoid.k_numbers();
        ensure(k.big_k >= k.ring_k && k.ideal_k.iter().all(|&x| x <= k.ring_k), || {
            format!("K = {}, k = {}, ideal k = {:?}", k.big_k, k.ring_k, k.ideal_k)
        })?;
    }
    Ok(())
}

fn dual_rings_satisfy_rar_rarara(s: &Subject<'_>) -> Outcome {
    if !s.lattice.is_dual_ring() {
        return Ok(());
    }
    ensure(lift(s.ra.relation_check("rar", "rarara"))?, || "rar != rarara".into())
}

fn semiprime_monoids_are_small(s: &Subject<'_>) -> Outcome {
    if !s.lattice.is_semiprime_ring() {
        return Ok(());
    }
    let allowed: Vec<usize> = ["1", "a", "aa", "r"]
        .iter()
        .map(|w| s.ra.index_of_word(w))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    ensure((0..s.ra.len()).all(|k| allowed.contains(&k)), || format!("{} elements", s.ra.len()))
}

fn local_rings_have_small_monoids(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    if !l.is_local() {
        return Ok(());
    }
    let m = s.ra.export_abstract();
    if l.is_field() {
        let field = lift(lookup("field"))?.monoid;
        return ensure(is_isomorphic(&m, &field), || "field without the field-type monoid".into());
    }
    let zd_b = lift(lookup("ZD-b"))?.monoid;
    let k = s.ra.k_numbers();
    ensure(is_collapse_of(&m, &zd_b), || "monoid is not a collapse of ZD-b".into())?;
    ensure(k.ring_k <= 5 && k.big_k <= 9, || format!("k = {}, K = {}", k.ring_k, k.big_k))
}

/// Ideals, containment, `r` and `a` of a product agree with the factors'.
fn products_act_componentwise(s: &Subject<'_>) -> Outcome {
    let l = s.lattice;
    let ring = l.ring();
    let factors = ring.factors();
    if factors.is_empty() {
        return Ok(());
    }
    let parts: Vec<IdealLattice> = factors
        .iter()
        .map(|f| all_ideals_with(f.clone(), DEFAULT_IDEAL_BUDGET, Exec::Sequential))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let expected: usize = parts.iter().map(|p| p.len()).product();
    ensure(l.len() == expected, || format!("{} ideals, factors give {expected}", l.len()))?;
    // Project each ideal onto the factors.
    let mut proj = Vec::with_capacity(l.len());
    for i in 0..l.len() {
        let members = l.members(i);
        let mut coords = Vec::with_capacity(parts.len());
        for (k, p) in parts.iter().enumerate() {
            let comps: Vec<_> = members.iter().map(|&e| ring.components(e)[k]).collect();
            coords.push(lift(p.index_of(&ideal_generated(p.ring(), &comps)))?);
        }
        let size: u64 = coords.iter().zip(&parts).map(|(&c, p)| p.ideal(c).size()).product();
        ensure(size == l.ideal(i).size(), || format!("ideal {i} is not a product of its projections"))?;
        proj.push(coords);
    }
    for i in 0..l.len() {
        for (k, p) in parts.iter().enumerate() {
            ensure(proj[l.annihilator(i)][k] == p.annihilator(proj[i][k]), || format!("a not componentwise at {i}"))?;
            ensure(proj[l.radical(i)][k] == p.radical(proj[i][k]), || format!("r not componentwise at {i}"))?;
        }
        for j in 0..l.len() {
            let componentwise = parts.iter().enumerate().all(|(k, p)| p.leq(proj[i][k], proj[j][k]));
            ensure(l.leq(i, j) == componentwise, || format!("containment not componentwise at ({i}, {j})"))?;
        }
    }
    Ok(())
}

const PROPERTY_CHECKS: &[(&str, PropertyCheck)] = &[
    ("r monotone, extensive, idempotent; a antitone; aaa = a", radical_and_annihilator_basics),
    ("a(I) is the largest ideal killing I", annihilator_is_largest_killer),
    ("r(I) is the smallest semiprime ideal over I", radical_is_smallest_semiprime),
    ("rar = rara iff a(N) <= N, then rar is constant N", rar_stabilizes_iff),
    ("semiprime iff ra = ar iff ra = a iff ar = a iff r <= aa", semiprime_equivalences),
    ("dual rings: a(I meet J) = a(I) + a(J)", dual_rings_split_intersections),
    ("local rings: aa(M) = M iff aar = r iff raa = r", local_rings_radical_from_annihilator),
    ("d antitone, ra <= d, r <= da, r <= dd, ddd = d, rd = d = dr", dualradical_properties),
    ("d = a iff semiprime", dualradical_is_annihilator_iff_semiprime),
    ("fields: a swaps 0 and R, aa = r", fields_kill_nonzero_ideals),
    ("even words preserve order, odd reverse, both constant", parity_controls_monotonicity),
    ("dd = r implies d(I) != r(0) for proper I", dd_equals_r_separates),
    ("K >= ring k >= ideal k", k_number_bounds),
    ("dual rings: rar = rarara", dual_rings_satisfy_rar_rarara),
    ("semiprime monoids lie in {1, a, aa, r}", semiprime_monoids_are_small),
    ("local rings: field type or a collapse of ZD-b with k <= 5, K <= 9", local_rings_have_small_monoids),
    ("products: ideals, containment, r and a componentwise", products_act_componentwise),
];

fn single_ring(desc: RingDescription, exec: Exec, check: impl FnOnce(&MapMonoid<'_>) -> Outcome) -> Outcome {
    let l = lift(lattice_of(&desc, exec))?;
    let m = lift(generate_monoid_with(&l, &[R, A], DEFAULT_MONOID_BUDGET, exec))?;
    check(&m)
}

fn catalog_monoid(name: &str) -> std::result::Result<crate::pomonoid::OrderedMonoid, String> {
    Ok(lift(lookup(name))?.monoid)
}

fn square_zero_line(exec: Exec) -> Outcome {
    let desc = lift(RingDescription::truncated(2, 2))?;
    single_ring(desc, exec, |m| {
        let l = m.lattice();
        let k = m.k_numbers();
        let x = lift(ideal_from(l, &["x"]))?;
        ensure(k.big_k == 7, || format!("K = {}", k.big_k))?;
        ensure(k.ideal_k[l.zero()] == 3 && k.ideal_k[x] == 1 && k.ideal_k[l.whole()] == 3, || {
            format!("k-numbers {:?}", k.ideal_k)
        })?;
        ensure(lift(m.relation_check("rar", "rara"))? && lift(m.relation_check("rar", "arar"))?, || {
            "rar = rara = arar fails".into()
        })
    })
}

fn cube_zero_line(exec: Exec) -> Outcome {
    let desc = lift(RingDescription::truncated(2, 3))?;
    single_ring(desc, exec, |m| {
        let l = m.lattice();
        let k = m.k_numbers();
        ensure(k.big_k == 8, || format!("K = {}", k.big_k))?;
        for i in 0..l.len() {
            let expect = if i == l.zero() || i == l.whole() { 4 } else { 2 };
            ensure(k.ideal_k[i] == expect, || format!("k-numbers {:?}", k.ideal_k))?;
        }
        ensure(is_isomorphic(&m.export_abstract(), &catalog_monoid("LOCDUAL-i")?), || "not LOCDUAL-i".into())
    })
}

fn dual_composite(exec: Exec) -> Outcome {
    let desc = lift(RingDescription::product(vec![
        lift(RingDescription::truncated(2, 3))?,
        lift(RingDescription::cyclic(2))?,
    ]))?;
    single_ring(desc, exec, |m| {
        ensure(m.len() == 10, || format!("K = {}", m.len()))?;
        ensure(lift(m.relation_check("rar", "rarara"))?, || "rar != rarara".into())?;
        ensure(!lift(m.relation_check("rar", "rara"))?, || "rar = rara".into())?;
        ensure(is_isomorphic(&m.export_abstract(), &catalog_monoid("LOCDUAL-ii")?), || "not LOCDUAL-ii".into())
    })
}

fn degree_five_orbit(exec: Exec) -> Outcome {
    single_ring(maximal_power(2, 5), exec, |m| {
        let l = m.lattice();
        let power = |k: usize| {
            let monomials: Vec<String> = (0..=k).map(|i| format!("x^{}*y^{}", k - i, i)).collect();
            let refs: Vec<&str> = monomials.iter().map(|s| s.as_str()).collect();
            lift(ideal_from(l, &refs))
        };
        let x2 = lift(ideal_from(l, &["x^2"]))?;
        let mut expected = vec![x2, power(3)?, power(2)?, power(1)?, power(4)?];
        expected.sort_unstable();
        ensure(m.orbit(x2) == expected, || format!("orbit {:?}, expected {expected:?}", m.orbit(x2)))?;
        let k = m.k_numbers();
        ensure(k.ring_k == 5 && k.big_k <= 9, || format!("k = {}, K = {}", k.ring_k, k.big_k))?;
        for (lhs, rhs) in [("r", "aar"), ("r", "raa"), ("rar", "rara")] {
            ensure(lift(m.relation_check(lhs, rhs))?, || format!("{lhs} != {rhs}"))?;
        }
        Ok(())
    })
}

fn odot_sizes() -> Outcome {
    let (field, b, c) = (catalog_monoid("field")?, catalog_monoid("ZD-b")?, catalog_monoid("ZD-c")?);
    for (parts, size) in [(vec![&field, &b], 11), (vec![&field, &c], 12), (vec![&b, &c], 13), (vec![&field, &b, &c], 16)] {
        let owned: Vec<_> = parts.into_iter().cloned().collect();
        let p = lift(odot(&owned))?;
        ensure(p.len() == size, || format!("{} elements, expected {size}", p.len()))?;
        if size == 16 {
            ensure(is_isomorphic(&p, &catalog_monoid("ZDR-16")?), || "triple product is not ZDR-16".into())?;
        }
    }
    let zdr = catalog_monoid("ZDR-16")?;
    ensure(lift(zdr.relation_holds("(ra^2)^2", "a^2r"))?, || "(ra^2)^2 != a^2r".into())?;
    ensure(!zdr.is_idempotent(lift(zdr.element("ra^2"))?), || "ra^2 is idempotent".into())
}

fn kuratowski() -> Outcome {
    let pres = lift(RewritingPresentation::new("kc", &["cc=1", "kk=k", "kckckck=kck"]))?;
    let m = lift(from_presentation(&pres))?;
    ensure(m.len() == 14, || format!("{} elements", m.len()))
}

fn order_forces_field_type() -> Outcome {
    let pres = lift(RewritingPresentation::new("ra", &["aa=1", "rr=r", "rarara=rar", "arar=r"]))?;
    let pres = lift(lift(pres.with_order(&["1<=r"]))?.with_antitone("a"))?;
    let m = lift(from_presentation(&pres))?;
    ensure(is_isomorphic(&m, &catalog_monoid("field")?), || format!("{} elements", m.len()))
}

/// Products of corpus pairs against the product of their monoids.
fn products_match_odot(rings: &[(String, IdealLattice)], exec: Exec) -> Outcome {
    let exports = rings
        .iter()
        .map(|(_, l)| Ok(generate_monoid_with(l, &[R, A], DEFAULT_MONOID_BUDGET, exec)?.export_abstract()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    for i in 0..rings.len() {
        for j in i..rings.len() {
            let (li, lj) = (&rings[i].1, &rings[j].1);
            if li.ring().size().saturating_mul(lj.ring().size()) > PRODUCT_SIZE_LIMIT {
                continue;
            }
            let desc = lift(RingDescription::product(vec![
                li.ring().description().clone(),
                lj.ring().description().clone(),
            ]))?;
            let l = lift(lattice_of(&desc, exec))?;
            let m = lift(generate_monoid_with(&l, &[R, A], DEFAULT_MONOID_BUDGET, exec))?.export_abstract();
            let o = lift(odot(&[exports[i].clone(), exports[j].clone()]))?;
            ensure(is_isomorphic(&m, &o), || format!("{} x {}", rings[i].0, rings[j].0))?;
        }
    }
    Ok(())
}

fn record(name: &str, outcome: Outcome) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
    }
}

/// Runs the whole suite. The degree-five example only runs with `slow`.
pub fn run_verification(opts: &VerifyOptions) -> Vec<CheckResult> {
    let exec = opts.exec;
    let mut out = vec![
        record("F2[x]/(x^2): K = 7, k = 3, 1, 3, rar = rara = arar", square_zero_line(exec)),
        record("F2[x]/(x^3): K = 8, k = 4 and 2, LOCDUAL-i", cube_zero_line(exec)),
        record("F2[x]/(x^3) x GF(2): K = 10, rar = rarara != rara, LOCDUAL-ii", dual_composite(exec)),
    ];
    if opts.slow {
        out.push(record("F2[x,y]/(x,y)^5: orbit of (x^2), k = 5, K <= 9", degree_five_orbit(exec)));
    }
    out.push(record("odot sizes 11, 12, 13, 16 and ZDR-16", odot_sizes()));
    out.push(record("Kuratowski presentation has 14 elements", kuratowski()));
    out.push(record("aa = 1, rr = r, rarara = rar, arar = r with 1 <= r is the field type", order_forces_field_type()));

    let corpus: Vec<CorpusRing> = builtin_corpus().into_iter().chain(opts.extra.iter().cloned()).collect();
    let mut rings = Vec::new();
    let mut load_errors = Vec::new();
    for c in &corpus {
        match lattice_of(&c.description, exec) {
            Ok(l) => rings.push((c.name.clone(), l)),
            Err(e) => load_errors.push(format!("{}: {e}", c.name)),
        }
    }
    out.push(record(
        "corpus rings build",
        ensure(load_errors.is_empty(), || load_errors.join("; ")),
    ));
    out.push(record("ring products match odot of monoids", products_match_odot(&rings, exec)));

    let mut subjects = Vec::new();
    let mut monoid_errors = Vec::new();
    for (name, l) in &rings {
        let ra = generate_monoid_with(l, &[R, A], DEFAULT_MONOID_BUDGET, exec);
        let rad = generate_monoid_with(l, &[R, A, D], DEFAULT_MONOID_BUDGET, exec);
        match (ra, rad) {
            (Ok(ra), Ok(rad)) => subjects.push(Subject {
                name,
                lattice: l,
                ra,
                rad,
            }),
            (Err(e), _) | (_, Err(e)) => monoid_errors.push(format!("{name}: {e}")),
        }
    }
    out.push(record(
        "corpus monoids generate",
        ensure(monoid_errors.is_empty(), || monoid_errors.join("; ")),
    ));
    for (name, check) in PROPERTY_CHECKS {
        let outcome = subjects
            .iter()
            .try_for_each(|s| check(s).map_err(|e| format!("{}: {e}", s.name)));
        out.push(record(name, outcome));
    }
    out
}
