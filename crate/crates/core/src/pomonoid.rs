//! Abstract finite ordered monoids with designated generators.
//!
//! Generators are pinned by position: the first is the radical-like one,
//! the second the annihilator-like one (more are allowed). Words multiply
//! left to right, so `ra` is `r·a`, which for maps means "apply `a`, then
//! `r`".

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::BitMatrix;
use crate::word::{format_word, parse_relation, parse_word, shortlex_closure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedMonoid {
    labels: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
    order: BitMatrix,
    generators: Vec<(char, usize)>,
}

impl OrderedMonoid {
    /// Validates associativity, the identity law, the order, and that the
    /// generators generate.
    pub fn new(
        labels: Vec<String>,
        identity: usize,
        table: Vec<Vec<usize>>,
        order: BitMatrix,
        generators: Vec<(char, usize)>,
    ) -> Result<Self> {
        let m = OrderedMonoid {
            labels,
            identity,
            table,
            order,
            generators,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        let bad = |msg: String| Err(Error::InvalidMonoid(msg));
        if n == 0 {
            return bad("no elements".into());
        }
        if self.identity >= n {
            return bad(format!("identity index {} out of range", self.identity));
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n} x {n} with entries below {n}"));
        }
        let mut labels = self.labels.clone();
        labels.sort();
        labels.dedup();
        if labels.len() != n {
            return bad("duplicate labels".into());
        }
        for x in 0..n {
            if self.table[self.identity][x] != x || self.table[x][self.identity] != x {
                return bad(format!("identity law fails at `{}`", self.labels[x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.table[x][y];
                for z in 0..n {
                    if self.table[xy][z] != self.table[x][self.table[y][z]] {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[x], self.labels[y], self.labels[z]
                        ));
                    }
                }
            }
        }
        if self.order.len() != n || !self.order.is_partial_order() {
            return bad("order is not a partial order on the elements".into());
        }
        let mut symbols: Vec<char> = self.generators.iter().map(|g| g.0).collect();
        symbols.sort();
        symbols.dedup();
        if symbols.len() != self.generators.len() || self.generators.iter().any(|g| g.1 >= n) {
            return bad("generators must have distinct symbols and valid indices".into());
        }
        if self.closure_size() != n {
            return bad("generators do not generate the monoid".into());
        }
        Ok(())
    }

    fn closure_size(&self) -> usize {
        let symbols: Vec<char> = self.generators.iter().map(|g| g.0).collect();
        shortlex_closure(self.identity, &symbols, usize::MAX, |g, &x| self.table[self.generators[g].1][x])
            .map(|v| v.len())
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.get(x, y)
    }

    pub fn order(&self) -> &BitMatrix {
        &self.order
    }

    pub fn generators(&self) -> &[(char, usize)] {
        &self.generators
    }

    pub fn generator(&self, symbol: char) -> Result<usize> {
        self.generators
            .iter()
            .find(|g| g.0 == symbol)
            .map(|g| g.1)
            .ok_or(Error::UnknownGenerator(symbol))
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Product of the generators spelled by `word`.
    pub fn evaluate(&self, word: &[char]) -> Result<usize> {
        word.iter()
            .try_fold(self.identity, |x, &c| Ok(self.table[x][self.generator(c)?]))
    }

    /// Element denoted by a word such as `a^2r` or `(ra^2)^2`.
    pub fn element(&self, word: &str) -> Result<usize> {
        self.evaluate(&parse_word(word)?)
    }

    pub fn relation_holds(&self, lhs: &str, rhs: &str) -> Result<bool> {
        Ok(self.element(lhs)? == self.element(rhs)?)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.table[x][x] == x
    }

    /// Covering pairs `(lo, hi)` of the order.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.order.covers()
    }

    /// Shortlex-least word for every element, in generator symbols.
    pub fn canonical_words(&self) -> Vec<Vec<char>> {
        let symbols: Vec<char> = self.generators.iter().map(|g| g.0).collect();
        let closure = shortlex_closure(self.identity, &symbols, usize::MAX, |g, &x| {
            self.table[self.generators[g].1][x]
        })
        .expect("unbounded budget");
        let mut words = vec![Vec::new(); self.len()];
        for (x, w) in closure {
            words[x] = w;
        }
        words
    }

    /// A complete set of defining relations: every word that is not
    /// shortlex-least but whose proper factors all are, with its value.
    pub fn relations(&self) -> Vec<(String, String)> {
        let words = self.canonical_words();
        let canonical: HashMap<&[char], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut out = Vec::new();
        for u in &words {
            for &(g, gi) in &self.generators {
                let mut w = u.clone();
                w.push(g);
                if canonical.contains_key(w.as_slice()) || !canonical.contains_key(&w[1..]) {
                    continue;
                }
                let value = self.table[self.evaluate(u).expect("own symbols")][gi];
                out.push((format_word(&w), self.labels[value].clone()));
            }
        }
        out.sort_by(|x, y| (x.0.len(), &x.0).cmp(&(y.0.len(), &y.0)));
        out
    }

    /// Replaces the order by the reflexive-transitive closure of `pairs`
    /// (`lo <= hi`, as words).
    pub fn with_order_pairs(mut self, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut m = BitMatrix::identity(self.len());
        for (lo, hi) in pairs {
            m.set(self.element(lo)?, self.element(hi)?);
        }
        let closed = m.reflexive_transitive_closure();
        if !closed.is_antisymmetric() {
            return Err(Error::InvalidMonoid("order pairs contain a cycle".into()));
        }
        self.order = closed;
        Ok(self)
    }

    /// DOT graph: one node per element, bold idempotents, edges along covers
    /// drawn upward.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", name.replace('"', "'"));
        for (i, l) in self.labels.iter().enumerate() {
            let style = if self.is_idempotent(i) { ", style=bold" } else { "" };
            out.push_str(&format!("  n{i} [label=\"{l}\"{style}];\n"));
        }
        for (lo, hi) in self.hasse() {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_document(&self) -> MonoidDocument {
        let n = self.len();
        MonoidDocument {
            labels: self.labels.clone(),
            identity: self.identity,
            generators: self
                .generators
                .iter()
                .map(|&(symbol, index)| GeneratorDocument { symbol, index })
                .collect(),
            table: self.table.clone(),
            order: (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .filter(|&(i, j)| self.leq(i, j))
                .map(|(i, j)| [i, j])
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_document()).expect("plain data")
    }

    pub fn from_document(doc: MonoidDocument) -> Result<Self> {
        let n = doc.labels.len();
        let mut m = BitMatrix::identity(n);
        for [lo, hi] in doc.order {
            if lo >= n || hi >= n {
                return Err(Error::InvalidMonoid(format!("order pair ({lo}, {hi}) out of range")));
            }
            m.set(lo, hi);
        }
        OrderedMonoid::new(
            doc.labels,
            doc.identity,
            doc.table,
            m.reflexive_transitive_closure(),
            doc.generators.into_iter().map(|g| (g.symbol, g.index)).collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MonoidDocument = serde_json::from_str(text)
            .map_err(|e| Error::syntax(format!("line {} column {}", e.line(), e.column()), e))?;
        Self::from_document(doc)
    }
}

/// JSON interchange form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidDocument {
    pub labels: Vec<String>,
    pub identity: usize,
    pub generators: Vec<GeneratorDocument>,
    pub table: Vec<Vec<usize>>,
    /// Strict order pairs `[lo, hi]`.
    pub order: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorDocument {
    pub symbol: char,
    pub index: usize,
}

/// Builds a monoid from the shortlex closure of values under generator
/// steps. `mul` multiplies values; `leq` compares them.
fn from_closure<T, M, L>(
    closure: Vec<(T, Vec<char>)>,
    generators: &[(char, T)],
    mul: M,
    leq: L,
) -> Result<OrderedMonoid>
where
    T: Clone + Eq + std::hash::Hash,
    M: Fn(&T, &T) -> T,
    L: Fn(&T, &T) -> bool,
{
    let n = closure.len();
    let index: HashMap<&T, usize> = closure.iter().enumerate().map(|(i, (t, _))| (t, i)).collect();
    let lookup = |t: &T| {
        index
            .get(t)
            .copied()
            .ok_or_else(|| Error::Inconsistent("closure is not closed under products".into()))
    };
    let mut table = vec![vec![0; n]; n];
    let mut order = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            table[i][j] = lookup(&mul(&closure[i].0, &closure[j].0))?;
            if leq(&closure[i].0, &closure[j].0) {
                order.set(i, j);
            }
        }
    }
    let generators = generators
        .iter()
        .map(|(c, t)| Ok((*c, lookup(t)?)))
        .collect::<Result<Vec<_>>>()?;
    OrderedMonoid::new(
        closure.iter().map(|(_, w)| format_word(w)).collect(),
        0,
        table,
        order,
        generators,
    )
}

/// `⊙` of monoids with the same number of generators: the submonoid of the
/// direct product generated by the diagonal generator tuples, ordered
/// componentwise. Labels use the first factor's generator symbols.
pub fn odot(monoids: &[OrderedMonoid]) -> Result<OrderedMonoid> {
    let first = monoids
        .first()
        .ok_or_else(|| Error::InvalidMonoid("odot of an empty list".into()))?;
    let k = first.generators.len();
    if monoids.iter().any(|m| m.generators.len() != k) {
        return Err(Error::InvalidMonoid("factors have different numbers of generators".into()));
    }
    let symbols: Vec<char> = first.generators.iter().map(|g| g.0).collect();
    let identity: Vec<usize> = monoids.iter().map(|m| m.identity).collect();
    let step = |g: usize, x: &Vec<usize>| -> Vec<usize> {
        monoids
            .iter()
            .zip(x)
            .map(|(m, &xi)| m.table[m.generators[g].1][xi])
            .collect()
    };
    let generators: Vec<(char, Vec<usize>)> = (0..k)
        .map(|g| (symbols[g], monoids.iter().map(|m| m.generators[g].1).collect()))
        .collect();
    let closure = shortlex_closure(identity, &symbols, usize::MAX, step).expect("unbounded budget");
    from_closure(
        closure,
        &generators,
        |x, y| monoids.iter().zip(x.iter().zip(y)).map(|(m, (&a, &b))| m.table[a][b]).collect(),
        |x, y| monoids.iter().zip(x.iter().zip(y)).all(|(m, (&a, &b))| m.leq(a, b)),
    )
}

/// Isomorphism sending identity to identity and the `i`-th generator to
/// the `i`-th generator, preserving products and the order both ways.
pub fn is_isomorphic(a: &OrderedMonoid, b: &OrderedMonoid) -> bool {
    isomorphism(a, b).is_some()
}

/// The generator-pinned isomorphism, as an index map from `a` to `b`.
pub fn isomorphism(a: &OrderedMonoid, b: &OrderedMonoid) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let phi = homomorphism(a, b)?;
    let mut hit = vec![false; b.len()];
    for &v in &phi {
        if std::mem::replace(&mut hit[v], true) {
            return None;
        }
    }
    let reflects = (0..a.len()).all(|x| (0..a.len()).all(|y| a.leq(x, y) == b.leq(phi[x], phi[y])));
    reflects.then_some(phi)
}

/// The monoid homomorphism from `a` onto `b` sending the `i`-th generator
/// to the `i`-th generator, if the relations of `a` hold in `b`. Order is
/// not consulted.
pub fn homomorphism(a: &OrderedMonoid, b: &OrderedMonoid) -> Option<Vec<usize>> {
    if a.generators.len() != b.generators.len() {
        return None;
    }
    let n = a.len();
    let mut phi = vec![usize::MAX; n];
    phi[a.identity] = b.identity;
    let mut queue = vec![a.identity];
    while let Some(x) = queue.pop() {
        for (ga, gb) in a.generators.iter().zip(&b.generators) {
            let (y, fy) = (a.table[ga.1][x], b.table[gb.1][phi[x]]);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                queue.push(y);
            } else if phi[y] != fy {
                return None;
            }
        }
    }
    let preserves = (0..n).all(|x| (0..n).all(|y| phi[a.table[x][y]] == b.table[phi[x]][phi[y]]));
    preserves.then_some(phi)
}

/// `b` is a collapse of `a`: a pinned homomorphism exists and is monotone.
pub fn is_collapse_of(b: &OrderedMonoid, a: &OrderedMonoid) -> bool {
    homomorphism(a, b).is_some_and(|phi| {
        (0..a.len()).all(|x| (0..a.len()).all(|y| !a.leq(x, y) || b.leq(phi[x], phi[y])))
    })
}

/// Longest words considered when closing a presentation.
pub const DEFAULT_MAX_WORD_LENGTH: usize = 16;

/// Generators, defining relations, order axioms and which generators
/// reverse the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritingPresentation {
    /// Radical-like symbol first.
    pub alphabet: Vec<char>,
    pub rules: Vec<(Vec<char>, Vec<char>)>,
    /// `(lo, hi)`: `lo <= hi`.
    pub order_axioms: Vec<(Vec<char>, Vec<char>)>,
    pub antitone: Vec<char>,
    pub max_length: usize,
}

impl RewritingPresentation {
    /// `rules` are `lhs=rhs` strings over `alphabet`.
    pub fn new(alphabet: &str, rules: &[&str]) -> Result<Self> {
        let alphabet: Vec<char> = alphabet.chars().collect();
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != alphabet.len() || alphabet.is_empty() {
            return Err(Error::Presentation("alphabet must be nonempty with distinct symbols".into()));
        }
        let mut pres = RewritingPresentation {
            alphabet,
            rules: Vec::new(),
            order_axioms: Vec::new(),
            antitone: Vec::new(),
            max_length: DEFAULT_MAX_WORD_LENGTH,
        };
        for r in rules {
            let (l, rhs) = parse_relation(r)?;
            pres.check_letters(&l)?;
            pres.check_letters(&rhs)?;
            pres.rules.push((l, rhs));
        }
        Ok(pres)
    }

    /// Order axioms written `lo<=hi`.
    pub fn with_order(mut self, axioms: &[&str]) -> Result<Self> {
        for ax in axioms {
            let (lo, hi) = ax
                .split_once("<=")
                .ok_or_else(|| Error::syntax(format!("order axiom `{ax}`"), "expected `<=`"))?;
            let (lo, hi) = (parse_word(lo)?, parse_word(hi)?);
            self.check_letters(&lo)?;
            self.check_letters(&hi)?;
            self.order_axioms.push((lo, hi));
        }
        Ok(self)
    }

    pub fn with_antitone(mut self, symbols: &str) -> Result<Self> {
        let s: Vec<char> = symbols.chars().collect();
        self.check_letters(&s)?;
        self.antitone = s;
        Ok(self)
    }

    pub fn with_max_length(mut self, max_length: usize) -> Self {
        self.max_length = max_length;
        self
    }

    fn check_letters(&self, w: &[char]) -> Result<()> {
        match w.iter().find(|c| !self.alphabet.contains(c)) {
            Some(&c) => Err(Error::UnknownGenerator(c)),
            None => Ok(()),
        }
    }
}

/// Words up to a fixed length, indexed in shortlex order.
struct WordSpace {
    sorted: Vec<char>,
    offsets: Vec<usize>,
}

impl WordSpace {
    fn new(alphabet: &[char], max_len: usize) -> Self {
        let mut sorted = alphabet.to_vec();
        sorted.sort();
        let k = sorted.len();
        let mut offsets = vec![0];
        let mut count = 1;
        for _ in 0..=max_len {
            offsets.push(offsets.last().unwrap() + count);
            count *= k;
        }
        WordSpace { sorted, offsets }
    }

    fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn max_len(&self) -> usize {
        self.offsets.len() - 2
    }

    fn index(&self, w: &[char]) -> usize {
        let k = self.sorted.len();
        let v = w
            .iter()
            .fold(0, |acc, c| acc * k + self.sorted.iter().position(|s| s == c).expect("known letter"));
        self.offsets[w.len()] + v
    }

    fn word(&self, i: usize) -> Vec<char> {
        let len = self.offsets.partition_point(|&o| o <= i) - 1;
        let k = self.sorted.len();
        let mut v = i - self.offsets[len];
        let mut w = vec![' '; len];
        for slot in w.iter_mut().rev() {
            *slot = self.sorted[v % k];
            v /= k;
        }
        w
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The monoid presented by the rules, with the order generated by the
/// axioms under right multiplication and (anti)monotone left
/// multiplication by generators. Elements the order forces to be equal
/// (`u <= v <= u`) are identified and the closure repeats.
///
/// The rules are closed as a congruence on all words up to a length bound
/// that grows until the resulting table is a monoid in which every rule
/// holds and every class representative evaluates to its own class; such a
/// table is exactly the presented monoid. Confluence of the rules as a
/// rewriting system is not required; see [`confluence_report`].
pub fn from_presentation(pres: &RewritingPresentation) -> Result<OrderedMonoid> {
    let mut pres = pres.clone();
    loop {
        let (reps, table, gens) = close(&pres)?;
        let eval = |w: &[char]| {
            w.iter().fold(0, |x, c| {
                table[x][gens[pres.alphabet.iter().position(|a| a == c).expect("known letter")]]
            })
        };
        let order = presentation_order(&pres, &table, &eval);
        let k = table.len();
        let forced: Vec<(usize, usize)> = (0..k)
            .flat_map(|x| (x + 1..k).map(move |y| (x, y)))
            .filter(|&(x, y)| order.get(x, y) && order.get(y, x))
            .collect();
        if forced.is_empty() {
            let generators = pres.alphabet.iter().map(|&c| (c, eval(&[c]))).collect();
            let labels = reps.iter().map(|w| format_word(w)).collect();
            return OrderedMonoid::new(labels, 0, table, order, generators);
        }
        for (x, y) in forced {
            pres.rules.push((reps[y].clone(), reps[x].clone()));
        }
    }
}

type Closed = (Vec<Vec<char>>, Vec<Vec<usize>>, Vec<usize>);

/// Representatives, multiplication table and generator elements.
fn close(pres: &RewritingPresentation) -> Result<Closed> {
    let longest = pres.rules.iter().map(|(l, r)| l.len().max(r.len())).max().unwrap_or(0);
    let mut len = (longest + 2).max(4).min(pres.max_length);
    loop {
        if let Some(found) = close_at(pres, len) {
            return Ok(found);
        }
        if len >= pres.max_length {
            return Err(Error::Presentation(format!(
                "no closed monoid found with words up to length {}",
                pres.max_length
            )));
        }
        len = (len + 2).min(pres.max_length);
    }
}

fn close_at(pres: &RewritingPresentation, max_len: usize) -> Option<Closed> {
    let space = WordSpace::new(&pres.alphabet, max_len);
    let n = space.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let w = space.word(i);
        for (l, r) in &pres.rules {
            if l.len() > w.len() {
                continue;
            }
            for pos in 0..=w.len() - l.len() {
                if w[pos..pos + l.len()] != l[..] {
                    continue;
                }
                let mut v = w[..pos].to_vec();
                v.extend_from_slice(r);
                v.extend_from_slice(&w[pos + l.len()..]);
                if v.len() <= max_len {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, space.index(&v)));
                    // Keep the shortlex-smaller word as root.
                    if a != b {
                        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                        parent[hi] = lo;
                    }
                }
            }
        }
    }
    // Reachable classes from the empty word, by right multiplication.
    let mut classes: Vec<usize> = vec![find(&mut parent, 0)];
    let mut pos_of: HashMap<usize, usize> = HashMap::from([(classes[0], 0)]);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < classes.len() {
        let rep = space.word(classes[i]);
        if rep.len() >= space.max_len() {
            return None;
        }
        let mut row = Vec::with_capacity(pres.alphabet.len());
        for &g in &pres.alphabet {
            let mut w = rep.clone();
            w.push(g);
            let c = find(&mut parent, space.index(&w));
            let k = *pos_of.entry(c).or_insert_with(|| {
                classes.push(c);
                classes.len() - 1
            });
            row.push(k);
        }
        right.push(row);
        i += 1;
    }
    // Renumber in shortlex order of representatives (root = least word).
    let mut perm: Vec<usize> = (0..classes.len()).collect();
    perm.sort_by_key(|&k| classes[k]);
    let mut new_of = vec![0; classes.len()];
    for (new, &old) in perm.iter().enumerate() {
        new_of[old] = new;
    }
    let k = classes.len();
    let reps: Vec<Vec<char>> = perm.iter().map(|&old| space.word(classes[old])).collect();
    let right: Vec<Vec<usize>> = perm
        .iter()
        .map(|&old| right[old].iter().map(|&x| new_of[x]).collect())
        .collect();
    let gen_pos = |c: char| pres.alphabet.iter().position(|&a| a == c).expect("known letter");
    let eval_from = |start: usize, w: &[char]| w.iter().fold(start, |x, &c| right[x][gen_pos(c)]);
    let table: Vec<Vec<usize>> = (0..k).map(|x| (0..k).map(|y| eval_from(x, &reps[y])).collect()).collect();
    let consistent = (0..k).all(|x| eval_from(0, &reps[x]) == x)
        && pres.rules.iter().all(|(l, r)| eval_from(0, l) == eval_from(0, r))
        && (0..k).all(|x| (0..k).all(|y| (0..k).all(|z| table[table[x][y]][z] == table[x][table[y][z]])));
    let gens = pres.alphabet.iter().map(|&c| eval_from(0, &[c])).collect();
    consistent.then_some((reps, table, gens))
}

fn presentation_order(
    pres: &RewritingPresentation,
    table: &[Vec<usize>],
    eval: &dyn Fn(&[char]) -> usize,
) -> BitMatrix {
    let k = table.len();
    let mut m = BitMatrix::identity(k);
    for (lo, hi) in &pres.order_axioms {
        m.set(eval(lo), eval(hi));
    }
    loop {
        let mut next = m.reflexive_transitive_closure();
        for u in 0..k {
            for v in 0..k {
                if !m.get(u, v) {
                    continue;
                }
                for x in 0..k {
                    next.set(table[u][x], table[v][x]);
                }
                for &g in &pres.alphabet {
                    let gi = eval(&[g]);
                    if pres.antitone.contains(&g) {
                        next.set(table[gi][v], table[gi][u]);
                    } else {
                        next.set(table[gi][u], table[gi][v]);
                    }
                }
            }
        }
        let next = next.reflexive_transitive_closure();
        if next == m {
            break;
        }
        m = next;
    }
    m
}

/// Outcome of normalizing every short word with the rules oriented from
/// the shortlex-larger side to the smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub max_length: usize,
    pub confluent: bool,
    /// A word with two distinct normal forms.
    pub witness: Option<(String, String, String)>,
}

pub fn confluence_report(pres: &RewritingPresentation, max_length: usize) -> ConfluenceReport {
    let shortlex = |w: &Vec<char>| (w.len(), w.clone());
    let rules: Vec<(Vec<char>, Vec<char>)> = pres
        .rules
        .iter()
        .filter(|(l, r)| l != r)
        .map(|(l, r)| {
            if shortlex(l) > shortlex(r) {
                (l.clone(), r.clone())
            } else {
                (r.clone(), l.clone())
            }
        })
        .collect();
    let space = WordSpace::new(&pres.alphabet, max_length);
    for i in 0..space.len() {
        let w = space.word(i);
        let mut normal: BTreeMap<Vec<char>, ()> = BTreeMap::new();
        let mut stack = vec![w.clone()];
        let mut seen = std::collections::HashSet::new();
        while let Some(u) = stack.pop() {
            if !seen.insert(u.clone()) {
                continue;
            }
            let mut reducible = false;
            for (l, r) in &rules {
                if l.len() > u.len() {
                    continue;
                }
                for pos in 0..=u.len() - l.len() {
                    if u[pos..pos + l.len()] == l[..] {
                        reducible = true;
                        let mut v = u[..pos].to_vec();
                        v.extend_from_slice(r);
                        v.extend_from_slice(&u[pos + l.len()..]);
                        stack.push(v);
                    }
                }
            }
            if !reducible {
                normal.insert(u, ());
            }
        }
        if normal.len() > 1 {
            let mut it = normal.into_keys();
            let (x, y) = (it.next().unwrap(), it.next().unwrap());
            return ConfluenceReport {
                max_length,
                confluent: false,
                witness: Some((format_word(&w), format_word(&x), format_word(&y))),
            };
        }
    }
    ConfluenceReport {
        max_length,
        confluent: true,
        witness: None,
    }
}
