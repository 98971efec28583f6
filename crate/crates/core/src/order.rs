//! Square boolean relations: containment matrices, monoid orders, Hasse covers.

use fixedbitset::FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        BitMatrix {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    pub fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must be {n} bits");
        BitMatrix { n, rows }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.rows[i].ones() {
                t.set(j, i);
            }
        }
        t
    }

    /// Reflexive-transitive closure (Warshall on bit rows).
    pub fn reflexive_transitive_closure(&self) -> BitMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i);
        }
        for k in 0..self.n {
            let rk = m.rows[k].clone();
            for i in 0..self.n {
                if m.rows[i].contains(k) {
                    m.rows[i].union_with(&rk);
                }
            }
        }
        m
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| self.rows[i].ones().all(|j| j == i || !self.get(j, i)))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|i| {
            self.rows[i]
                .ones()
                .all(|j| self.rows[j].is_subset(&self.rows[i]))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Covering pairs `(lo, hi)` of a partial order: `lo < hi` with nothing
    /// strictly between. This is the transitive reduction.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.n {
            let ups: Vec<usize> = self.rows[lo].ones().filter(|&j| j != lo).collect();
            for &hi in &ups {
                let between = ups
                    .iter()
                    .any(|&mid| mid != hi && self.get(mid, hi));
                if !between {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// Rows rendered as `0`/`1` strings.
    pub fn to_bit_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| (0..self.n).map(|j| if r.contains(j) { '1' } else { '0' }).collect())
            .collect()
    }
}
