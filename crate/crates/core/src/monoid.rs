//! The ordered monoid of ideal-lattice self-maps generated by a chosen set
//! of `r`, `a`, `d`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::lattice::IdealLattice;
use crate::order::BitMatrix;
use crate::pomonoid::OrderedMonoid;
use crate::word::{format_word, parse_word, shortlex_closure, Generator};

pub const DEFAULT_MONOID_BUDGET: usize = 10_000;

/// Which parities of the number of antitone letters (`a`, `d`) occur among
/// words for a map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Parity {
    pub even: bool,
    pub odd: bool,
}

#[derive(Clone, Debug)]
pub struct IdealMap {
    /// Image ideal index for each ideal index.
    pub image: Vec<usize>,
    /// Shortest word, lexicographic tie-break with `a < d < r`.
    pub word: Vec<char>,
    pub parity: Parity,
}

impl IdealMap {
    pub fn label(&self) -> String {
        format_word(&self.word)
    }
}

#[derive(Clone, Debug)]
pub struct MapMonoid<'a> {
    lattice: &'a IdealLattice,
    generators: Vec<Generator>,
    elements: Vec<IdealMap>,
    table: Vec<Vec<usize>>,
    order: BitMatrix,
    generator_index: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KReport {
    /// Orbit size of each ideal, by ideal index.
    pub ideal_k: Vec<usize>,
    pub ring_k: usize,
    #[serde(rename = "K")]
    pub big_k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementFlags {
    pub order_preserving: bool,
    pub order_reversing: bool,
    pub idempotent: bool,
    pub constant: bool,
    pub parity: Parity,
}

/// Breadth-first closure of the identity map under the generators, with
/// elements numbered by canonical word.
pub fn generate_monoid<'a>(
    lattice: &'a IdealLattice,
    generators: &[Generator],
    budget: usize,
) -> Result<MapMonoid<'a>> {
    generate_monoid_with(lattice, generators, budget, Exec::default())
}

pub fn generate_monoid_with<'a>(
    lattice: &'a IdealLattice,
    generators: &[Generator],
    budget: usize,
    exec: Exec,
) -> Result<MapMonoid<'a>> {
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();
    if gens.is_empty() {
        return Err(Error::InvalidDescription("empty generator set".into()));
    }
    let symbols: Vec<char> = gens.iter().map(|g| g.symbol()).collect();
    let identity: Vec<usize> = (0..lattice.len()).collect();
    let closure = shortlex_closure(identity, &symbols, budget, |g, img: &Vec<usize>| {
        let m = lattice.map_of(gens[g]);
        img.iter().map(|&i| m[i]).collect()
    })
    .map_err(|()| Error::MonoidBudget { budget })?;

    let index: std::collections::HashMap<&Vec<usize>, usize> =
        closure.iter().enumerate().map(|(i, (img, _))| (img, i)).collect();
    let n = closure.len();
    let table = exec.map_range(n, |i| {
        let f = &closure[i].0;
        (0..n)
            .map(|j| {
                let composite: Vec<usize> = closure[j].0.iter().map(|&x| f[x]).collect();
                index[&composite]
            })
            .collect::<Vec<_>>()
    });
    let rows = exec.map_range(n, |i| {
        let mut row = fixedbitset::FixedBitSet::with_capacity(n);
        for j in 0..n {
            let (f, g) = (&closure[i].0, &closure[j].0);
            if (0..lattice.len()).all(|x| lattice.leq(f[x], g[x])) {
                row.insert(j);
            }
        }
        row
    });
    let generator_index: Vec<usize> = gens
        .iter()
        .map(|&g| index[&lattice.map_of(g).to_vec()])
        .collect();
    let parity = parities(&table, &gens, &generator_index);
    let elements = closure
        .into_iter()
        .zip(parity)
        .map(|((image, word), parity)| IdealMap { image, word, parity })
        .collect();
    Ok(MapMonoid {
        lattice,
        generators: gens,
        elements,
        table,
        order: BitMatrix::from_rows(rows),
        generator_index,
    })
}

/// Parity sets over all words: fixpoint on the Cayley graph from the identity.
fn parities(table: &[Vec<usize>], gens: &[Generator], gen_index: &[usize]) -> Vec<Parity> {
    let mut out = vec![Parity::default(); table.len()];
    out[0].even = true;
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..table.len() {
            let p = out[x];
            for (g, &gi) in gens.iter().zip(gen_index) {
                let y = table[gi][x];
                let q = if g.is_antitone() {
                    Parity { even: p.odd, odd: p.even }
                } else {
                    p
                };
                let merged = Parity {
                    even: out[y].even || q.even,
                    odd: out[y].odd || q.odd,
                };
                if merged != out[y] {
                    out[y] = merged;
                    changed = true;
                }
            }
        }
    }
    out
}

impl<'a> MapMonoid<'a> {
    pub fn lattice(&self) -> &'a IdealLattice {
        self.lattice
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[IdealMap] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &IdealMap {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// `table[i][j]` is `i ∘ j` (apply `j`, then `i`).
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn order(&self) -> &BitMatrix {
        &self.order
    }

    /// Pointwise inclusion of maps.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    pub fn generator_index(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&h| h == g).map(|k| self.generator_index[k])
    }

    /// Image vector of a word, applied right to left.
    pub fn evaluate_word(&self, word: &[char]) -> Result<Vec<usize>> {
        let maps = word
            .iter()
            .map(|&c| match Generator::from_symbol(c) {
                Some(g) if self.generators.contains(&g) => Ok(self.lattice.map_of(g)),
                _ => Err(Error::UnknownGenerator(c)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.lattice.len())
            .map(|i| maps.iter().rev().fold(i, |x, m| m[x]))
            .collect())
    }

    /// Index of the element a word denotes.
    pub fn index_of_word(&self, word: &str) -> Result<usize> {
        let img = self.evaluate_word(&parse_word(word)?)?;
        Ok(self
            .elements
            .iter()
            .position(|e| e.image == img)
            .expect("words stay inside the generated monoid"))
    }

    /// Whether two words denote the same map.
    pub fn relation_check(&self, lhs: &str, rhs: &str) -> Result<bool> {
        Ok(self.evaluate_word(&parse_word(lhs)?)? == self.evaluate_word(&parse_word(rhs)?)?)
    }

    /// `{ w(I) }` over the monoid, as sorted ideal indices.
    pub fn orbit(&self, ideal: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.elements.iter().map(|e| e.image[ideal]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn k_numbers(&self) -> KReport {
        let ideal_k: Vec<usize> = (0..self.lattice.len()).map(|i| self.orbit(i).len()).collect();
        KReport {
            ring_k: ideal_k.iter().copied().max().unwrap_or(0),
            ideal_k,
            big_k: self.len(),
        }
    }

    pub fn classify_properties(&self) -> Vec<ElementFlags> {
        self.classify_properties_with(Exec::default())
    }

    pub fn classify_properties_with(&self, exec: Exec) -> Vec<ElementFlags> {
        let l = self.lattice;
        let n = l.len();
        exec.map_range(self.len(), |k| {
            let e = &self.elements[k];
            let f = &e.image;
            let mut preserving = true;
            let mut reversing = true;
            for i in 0..n {
                for j in l.containment().row(i).ones() {
                    preserving &= l.leq(f[i], f[j]);
                    reversing &= l.leq(f[j], f[i]);
                }
            }
            ElementFlags {
                order_preserving: preserving,
                order_reversing: reversing,
                idempotent: self.table[k][k] == k,
                constant: f.iter().all(|&x| x == f[0]),
                parity: e.parity,
            }
        })
    }

    /// Covering pairs `(lo, hi)` of the pointwise order.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        self.order.covers()
    }

    /// Forgets the lattice. Generators are listed radical first, then `a`,
    /// then `d`.
    pub fn export_abstract(&self) -> OrderedMonoid {
        let mut gens: Vec<(char, usize)> = self
            .generators
            .iter()
            .zip(&self.generator_index)
            .map(|(g, &i)| (g.symbol(), i))
            .collect();
        gens.sort_by_key(|&(c, _)| match c {
            'r' => 0,
            'a' => 1,
            _ => 2,
        });
        OrderedMonoid::new(
            self.elements.iter().map(|e| e.label()).collect(),
            0,
            self.table.clone(),
            self.order.clone(),
            gens,
        )
        .expect("a generated map monoid is a valid ordered monoid")
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.export_abstract().to_dot(name)
    }
}
