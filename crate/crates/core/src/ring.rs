//! Realized finite commutative rings.
//!
//! Elements are indices `0..size`. Zero is always index 0. For rings of
//! prime characteristic `p` that are built from prime fields and
//! polynomial quotients (and products / trivial extensions of those), the
//! index is the base-`p` encoding of the element's coordinate vector, so
//! the ring is also an `F_p`-vector space and ideals become subspaces.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::desc::{Cap, PolyQuotient, RingDescription};
use crate::error::{Error, Result};
use crate::linalg::{axpy, Subspace, Vector};
use crate::poly::{monomial_string, Polynomial};

pub type Elem = u64;

/// Default element budget for [`build_ring`].
pub const DEFAULT_ELEMENT_BUDGET: u64 = 1 << 20;

/// Largest number of monomials allowed in the box before quotienting.
const MAX_BOX_MONOMIALS: usize = 1 << 12;

/// Arithmetic interface shared by realized rings and test fixtures.
pub trait RingOps: Sync {
    fn size(&self) -> u64;
    fn one(&self) -> Elem;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    /// Elements whose additive span is the whole ring.
    fn additive_generators(&self) -> Vec<Elem>;

    fn zero(&self) -> Elem {
        0
    }
}

#[derive(Clone, Debug)]
pub struct FiniteRing {
    desc: RingDescription,
    size: u64,
    kind: Kind,
    /// `(p, dim)` when elements are base-`p` coordinate vectors.
    linear: Option<(u32, usize)>,
}

#[derive(Clone, Debug)]
enum Kind {
    Cyclic { n: u64 },
    Algebra(Box<Algebra>),
    Product { factors: Vec<FiniteRing>, strides: Vec<u64> },
    TrivialExtension { base: Box<FiniteRing> },
}

/// `F_p[x_1..x_k]` truncated by degree caps, modulo an ideal of extra relations.
#[derive(Clone, Debug)]
struct Algebra {
    p: u32,
    vars: Vec<String>,
    caps: Vec<Cap>,
    /// Box monomials (all exponents below their caps), in coordinate order:
    /// descending total degree so that echelon pivots land on high-degree terms.
    box_monomials: Vec<Vec<u32>>,
    box_index: HashMap<Vec<u32>, usize>,
    /// Relation subspace in box coordinates.
    relations: Subspace,
    /// Quotient basis: box coordinates that are not relation pivots, ordered
    /// by ascending degree.
    basis: Vec<usize>,
    /// `structure[i][j]` = product of basis monomials `i` and `j`, in quotient coordinates.
    structure: Vec<Vec<Vector>>,
    one: Vector,
}

impl Algebra {
    fn build(q: &PolyQuotient, budget: u64) -> Result<Self> {
        let p = q.p as u32;
        let box_len: u128 = q.caps.iter().map(|c| c.degree as u128).product();
        if box_len > MAX_BOX_MONOMIALS as u128 {
            return Err(Error::InvalidDescription(format!(
                "degree caps allow {box_len} monomials (limit {MAX_BOX_MONOMIALS})"
            )));
        }
        let mut box_monomials: Vec<Vec<u32>> = vec![vec![]];
        for cap in &q.caps {
            box_monomials = box_monomials
                .into_iter()
                .flat_map(|m| {
                    (0..cap.degree).map(move |e| {
                        let mut m = m.clone();
                        m.push(e);
                        m
                    })
                })
                .collect();
        }
        box_monomials.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let box_index: HashMap<Vec<u32>, usize> = box_monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        let mut alg = Algebra {
            p,
            vars: q.vars.clone(),
            caps: q.caps.clone(),
            box_monomials,
            box_index,
            relations: Subspace::zero(p, 0),
            basis: vec![],
            structure: vec![],
            one: vec![],
        };
        let dbox = alg.box_monomials.len();
        let mut memo = HashMap::new();

        // Relation ideal: span of (box monomial) * g for every extra relation g.
        let mut relations = Subspace::zero(p, dbox);
        for g in &q.extra_relations {
            for m in 0..dbox {
                let shifted = alg.box_monomials[m].clone();
                let v = alg.reduce_poly_shifted(g, &shifted, &mut memo);
                relations.insert(&v);
            }
        }
        let pivots: Vec<usize> = relations.pivots().collect();
        let mut basis: Vec<usize> = (0..dbox).filter(|c| !pivots.contains(c)).collect();
        basis.reverse(); // ascending degree
        let qdim = basis.len();
        let required = (p as u128).checked_pow(qdim as u32).unwrap_or(u128::MAX);
        if required > budget as u128 {
            return Err(Error::RingBudget { required, budget });
        }
        alg.relations = relations;
        alg.basis = basis;

        let unit = vec![0u32; alg.vars.len()];
        let one_box = alg.reduce_monomial(&unit, &mut memo);
        alg.one = alg.project(one_box);

        let mut structure = vec![vec![Vec::new(); qdim]; qdim];
        for i in 0..qdim {
            for j in i..qdim {
                let e: Vec<u32> = alg.box_monomials[alg.basis[i]]
                    .iter()
                    .zip(&alg.box_monomials[alg.basis[j]])
                    .map(|(a, b)| a + b)
                    .collect();
                let v = alg.reduce_monomial(&e, &mut memo);
                let v = alg.project(v);
                structure[i][j] = v.clone();
                structure[j][i] = v;
            }
        }
        alg.structure = structure;
        alg.check_well_defined(&mut memo)?;
        Ok(alg)
    }

    /// Reduces a monomial by the cap rewrite rules, in box coordinates.
    /// Every rewrite strictly lowers total degree, so this terminates.
    fn reduce_monomial(&self, e: &[u32], memo: &mut HashMap<Vec<u32>, Vector>) -> Vector {
        if let Some(v) = memo.get(e) {
            return v.clone();
        }
        let dbox = self.box_monomials.len();
        let mut out = vec![0u32; dbox];
        match (0..e.len()).find(|&i| e[i] >= self.caps[i].degree) {
            None => out[self.box_index[e]] = 1,
            Some(i) => {
                let mut rest = e.to_vec();
                rest[i] -= self.caps[i].degree;
                let sub = self.reduce_poly_shifted(&self.caps[i].rhs, &rest, memo);
                out = sub;
            }
        }
        memo.insert(e.to_vec(), out.clone());
        out
    }

    /// `poly * x^shift`, reduced by caps.
    fn reduce_poly_shifted(
        &self,
        poly: &Polynomial,
        shift: &[u32],
        memo: &mut HashMap<Vec<u32>, Vector>,
    ) -> Vector {
        let p = self.p;
        let mut out = vec![0u32; self.box_monomials.len()];
        for (c, t) in poly.terms() {
            let e: Vec<u32> = t.iter().zip(shift).map(|(a, b)| a + b).collect();
            let v = self.reduce_monomial(&e, memo);
            let k = c.rem_euclid(p as i64) as u32;
            axpy(&mut out, k, &v, p);
        }
        out
    }

    /// Box vector -> quotient coordinates.
    fn project(&self, mut v: Vector) -> Vector {
        self.relations.reduce_in_place(&mut v);
        self.basis.iter().map(|&c| v[c]).collect()
    }

    fn mul_vec(&self, a: &[u32], b: &[u32]) -> Vector {
        let mut out = vec![0u32; self.basis.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let k = (ai as u64 * bj as u64 % self.p as u64) as u32;
                axpy(&mut out, k, &self.structure[i][j], self.p);
            }
        }
        out
    }

    /// Exact check that the quotient multiplication is representative
    /// independent (relations times monomials stay in the relation space)
    /// and associative on basis triples; both properties are multilinear,
    /// so basis checks cover every element.
    fn check_well_defined(&self, memo: &mut HashMap<Vec<u32>, Vector>) -> Result<()> {
        let dbox = self.box_monomials.len();
        for row in self.relations.rows() {
            for m in 0..dbox {
                let mut prod = vec![0u32; dbox];
                for (k, &c) in row.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let e: Vec<u32> = self.box_monomials[k]
                        .iter()
                        .zip(&self.box_monomials[m])
                        .map(|(a, b)| a + b)
                        .collect();
                    axpy(&mut prod, c, &self.reduce_monomial(&e, memo), self.p);
                }
                if !self.relations.contains(&prod) {
                    return Err(Error::IllDefined(format!(
                        "relation times {} leaves the relation ideal",
                        self.monomial_name(&self.box_monomials[m])
                    )));
                }
            }
        }
        let q = self.basis.len();
        let unit = |i: usize| {
            let mut v = vec![0u32; q];
            v[i] = 1;
            v
        };
        for i in 0..q {
            for j in 0..q {
                let ij = &self.structure[i][j];
                for k in 0..q {
                    let left = self.mul_vec(ij, &unit(k));
                    let right = self.mul_vec(&unit(i), &self.structure[j][k]);
                    if left != right {
                        let names: Vec<String> = [i, j, k]
                            .iter()
                            .map(|&t| self.monomial_name(&self.box_monomials[self.basis[t]]))
                            .collect();
                        return Err(Error::IllDefined(format!(
                            "cap rules are not associative on ({})",
                            names.join(", ")
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn monomial_name(&self, e: &[u32]) -> String {
        let s = monomial_string(e, &self.vars);
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    fn format(&self, v: &[u32]) -> String {
        let mut out = String::new();
        for (i, &c) in v.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let m = monomial_string(&self.box_monomials[self.basis[i]], &self.vars);
            match (c, m.is_empty()) {
                (_, true) => write!(out, "{c}").unwrap(),
                (1, false) => out.push_str(&m),
                _ => write!(out, "{c}*{m}").unwrap(),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn parse(&self, text: &str) -> Result<Vector> {
        let poly = Polynomial::parse(text, &self.vars)?;
        let mut memo = HashMap::new();
        let zero = vec![0u32; self.vars.len()];
        let v = self.reduce_poly_shifted(&poly, &zero, &mut memo);
        Ok(self.project(v))
    }

    fn quotient_dim(&self) -> usize {
        self.basis.len()
    }
}

/// Realizes a description as a concrete ring, failing if it would exceed
/// `budget` elements.
pub fn build_ring(desc: &RingDescription, budget: u64) -> Result<FiniteRing> {
    let (size, kind, linear) = match desc {
        RingDescription::Cyclic { n } => {
            if *n > budget {
                return Err(Error::RingBudget {
                    required: *n as u128,
                    budget,
                });
            }
            let linear = crate::desc::is_prime(*n).then_some((*n as u32, 1));
            (*n, Kind::Cyclic { n: *n }, linear)
        }
        RingDescription::PolyQuotient(q) => {
            let alg = Algebra::build(q, budget)?;
            let dim = alg.quotient_dim();
            let size = (alg.p as u64).pow(dim as u32);
            let linear = Some((alg.p, dim));
            (size, Kind::Algebra(Box::new(alg)), linear)
        }
        RingDescription::Product(factors) => {
            let built = factors
                .iter()
                .map(|f| build_ring(f, budget))
                .collect::<Result<Vec<_>>>()?;
            let required: u128 = built.iter().map(|f| f.size as u128).product();
            if required > budget as u128 {
                return Err(Error::RingBudget { required, budget });
            }
            let mut strides = Vec::with_capacity(built.len());
            let mut acc = 1u64;
            for f in &built {
                strides.push(acc);
                acc *= f.size;
            }
            let linear = match built[0].linear {
                Some((p, _)) if built.iter().all(|f| matches!(f.linear, Some((q, _)) if q == p)) => {
                    Some((p, built.iter().map(|f| f.linear.unwrap().1).sum()))
                }
                _ => None,
            };
            (
                acc,
                Kind::Product {
                    factors: built,
                    strides,
                },
                linear,
            )
        }
        RingDescription::TrivialExtension(base) => {
            let b = build_ring(base, budget)?;
            let required = (b.size as u128).pow(2);
            if required > budget as u128 {
                return Err(Error::RingBudget { required, budget });
            }
            let linear = b.linear.map(|(p, d)| (p, 2 * d));
            (
                b.size * b.size,
                Kind::TrivialExtension { base: Box::new(b) },
                linear,
            )
        }
    };
    Ok(FiniteRing {
        desc: desc.clone(),
        size,
        kind,
        linear,
    })
}

impl FiniteRing {
    pub fn description(&self) -> &RingDescription {
        &self.desc
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    /// `(p, dim)` if the ring is an `F_p`-vector space in base-`p` coordinates.
    pub fn vector_space(&self) -> Option<(u32, usize)> {
        self.linear
    }

    pub fn to_vector(&self, mut e: Elem) -> Vector {
        let (p, dim) = self.linear.expect("ring is not an F_p-space");
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push((e % p as u64) as u32);
            e /= p as u64;
        }
        v
    }

    pub fn from_vector(&self, v: &[u32]) -> Elem {
        let (p, _) = self.linear.expect("ring is not an F_p-space");
        v.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64)
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> u64 {
        if let Some((p, _)) = self.linear {
            return p as u64;
        }
        let one = self.one();
        let mut x = one;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, one);
            k += 1;
        }
        k
    }

    fn split(&self, e: Elem) -> Vec<Elem> {
        match &self.kind {
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| (e / s) % f.size)
                .collect(),
            Kind::TrivialExtension { base } => vec![e % base.size, e / base.size],
            _ => vec![e],
        }
    }

    fn join(&self, parts: &[Elem]) -> Elem {
        match &self.kind {
            Kind::Product { strides, .. } => parts.iter().zip(strides).map(|(x, s)| x * s).sum(),
            Kind::TrivialExtension { base } => parts[0] + parts[1] * base.size,
            _ => parts[0],
        }
    }

    /// Renders an element: integers for `Z/n`, polynomials for quotients,
    /// tuples for products and trivial extensions.
    pub fn format_element(&self, e: Elem) -> String {
        match &self.kind {
            Kind::Cyclic { .. } => e.to_string(),
            Kind::Algebra(alg) => alg.format(&self.to_vector(e)),
            Kind::Product { factors, .. } => {
                let parts: Vec<String> = factors
                    .iter()
                    .zip(self.split(e))
                    .map(|(f, x)| f.format_element(x))
                    .collect();
                format!("({})", parts.join(", "))
            }
            Kind::TrivialExtension { base } => {
                let s = self.split(e);
                format!("({}, {})", base.format_element(s[0]), base.format_element(s[1]))
            }
        }
    }

    /// Inverse of [`format_element`](Self::format_element).
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        match &self.kind {
            Kind::Cyclic { n } => {
                let v: i128 = text
                    .parse()
                    .map_err(|_| Error::syntax("element", format!("`{text}` is not an integer")))?;
                Ok(v.rem_euclid(*n as i128) as Elem)
            }
            Kind::Algebra(alg) => Ok(self.from_vector(&alg.parse(text)?)),
            Kind::Product { factors, .. } => {
                let parts = split_tuple(text)?;
                if parts.len() != factors.len() {
                    return Err(Error::syntax("element", "wrong tuple length"));
                }
                let xs = factors
                    .iter()
                    .zip(parts)
                    .map(|(f, s)| f.parse_element(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.join(&xs))
            }
            Kind::TrivialExtension { base } => {
                let parts = split_tuple(text)?;
                if parts.len() != 2 {
                    return Err(Error::syntax("element", "expected a pair"));
                }
                let xs = [base.parse_element(parts[0])?, base.parse_element(parts[1])?];
                Ok(self.join(&xs))
            }
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Factor rings of a product; empty for every other kind.
    pub fn factors(&self) -> &[FiniteRing] {
        match &self.kind {
            Kind::Product { factors, .. } => factors,
            _ => &[],
        }
    }

    /// Coordinates of `e` in a product (one per factor) or trivial extension
    /// (`[r, m]`); a single-entry vector otherwise.
    pub fn components(&self, e: Elem) -> Vec<Elem> {
        self.split(e)
    }

    pub fn from_components(&self, parts: &[Elem]) -> Elem {
        self.join(parts)
    }
}

fn split_tuple(text: &str) -> Result<Vec<&str>> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::syntax("element", "expected a parenthesized tuple"))?;
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[start..]);
    Ok(parts)
}

impl RingOps for FiniteRing {
    fn size(&self) -> u64 {
        self.size
    }

    fn one(&self) -> Elem {
        match &self.kind {
            Kind::Cyclic { n } => 1 % n,
            Kind::Algebra(alg) => self.from_vector(&alg.one),
            Kind::Product { factors, .. } => {
                let ones: Vec<Elem> = factors.iter().map(|f| f.one()).collect();
                self.join(&ones)
            }
            Kind::TrivialExtension { base } => self.join(&[base.one(), 0]),
        }
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some((p, dim)) = self.linear {
            if p == 2 {
                return a ^ b;
            }
            let (p, mut a, mut b) = (p as u64, a, b);
            let (mut out, mut place) = (0, 1);
            for _ in 0..dim {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            return out;
        }
        match &self.kind {
            Kind::Cyclic { n } => ((a as u128 + b as u128) % *n as u128) as Elem,
            Kind::Product { factors, .. } => {
                let (xa, xb) = (self.split(a), self.split(b));
                let s: Vec<Elem> = factors
                    .iter()
                    .zip(xa.iter().zip(&xb))
                    .map(|(f, (x, y))| f.add(*x, *y))
                    .collect();
                self.join(&s)
            }
            Kind::TrivialExtension { base } => {
                let (xa, xb) = (self.split(a), self.split(b));
                self.join(&[base.add(xa[0], xb[0]), base.add(xa[1], xb[1])])
            }
            Kind::Algebra(_) => unreachable!("algebras are linear"),
        }
    }

    fn neg(&self, a: Elem) -> Elem {
        if let Some((p, dim)) = self.linear {
            if p == 2 {
                return a;
            }
            let v: Vector = self.to_vector(a).iter().map(|&x| (p - x) % p).collect();
            debug_assert_eq!(v.len(), dim);
            return self.from_vector(&v);
        }
        match &self.kind {
            Kind::Cyclic { n } => (n - a) % n,
            Kind::Product { factors, .. } => {
                let s: Vec<Elem> = factors
                    .iter()
                    .zip(self.split(a))
                    .map(|(f, x)| f.neg(x))
                    .collect();
                self.join(&s)
            }
            Kind::TrivialExtension { base } => {
                let x = self.split(a);
                self.join(&[base.neg(x[0]), base.neg(x[1])])
            }
            Kind::Algebra(_) => unreachable!("algebras are linear"),
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            Kind::Cyclic { n } => ((a as u128 * b as u128) % *n as u128) as Elem,
            Kind::Algebra(alg) => {
                let v = alg.mul_vec(&self.to_vector(a), &self.to_vector(b));
                self.from_vector(&v)
            }
            Kind::Product { factors, .. } => {
                let (xa, xb) = (self.split(a), self.split(b));
                let s: Vec<Elem> = factors
                    .iter()
                    .zip(xa.iter().zip(&xb))
                    .map(|(f, (x, y))| f.mul(*x, *y))
                    .collect();
                self.join(&s)
            }
            Kind::TrivialExtension { base } => {
                let (x, y) = (self.split(a), self.split(b));
                let r = base.mul(x[0], y[0]);
                let m = base.add(base.mul(x[0], y[1]), base.mul(x[1], y[0]));
                self.join(&[r, m])
            }
        }
    }

    fn additive_generators(&self) -> Vec<Elem> {
        if let Some((p, dim)) = self.linear {
            return (0..dim).map(|k| (p as u64).pow(k as u32)).collect();
        }
        match &self.kind {
            Kind::Cyclic { n } => {
                if *n > 1 {
                    vec![1]
                } else {
                    vec![]
                }
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .flat_map(|(f, s)| f.additive_generators().into_iter().map(move |g| g * s))
                .collect(),
            Kind::TrivialExtension { base } => {
                let gens = base.additive_generators();
                let lower = gens.iter().map(|&g| self.join(&[g, 0]));
                let upper = gens.iter().map(|&g| self.join(&[0, g]));
                lower.chain(upper).collect()
            }
            Kind::Algebra(_) => unreachable!("algebras are linear"),
        }
    }
}
