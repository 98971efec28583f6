//! Vector spaces over a prime field `Z/p`, with subspaces kept in reduced
//! row-echelon form so that equal subspaces have identical representations.

pub type Vector = Vec<u32>;

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// `dst += k * src` over `Z/p`.
#[inline]
pub fn axpy(dst: &mut [u32], k: u32, src: &[u32], p: u32) {
    if k == 0 {
        return;
    }
    if p == 2 {
        for (d, s) in dst.iter_mut().zip(src) {
            *d ^= *s;
        }
        return;
    }
    let (k, p) = (k as u64, p as u64);
    for (d, s) in dst.iter_mut().zip(src) {
        *d = ((*d as u64 + k * *s as u64) % p) as u32;
    }
}

fn scale(v: &mut [u32], k: u32, p: u32) {
    for x in v.iter_mut() {
        *x = ((*x as u64 * k as u64) % p as u64) as u32;
    }
}

fn pivot(v: &[u32]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

/// A subspace of `(Z/p)^dim` in canonical reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot entry is 1 and every pivot
/// column is zero outside its own row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    p: u32,
    dim: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn zero(p: u32, dim: usize) -> Self {
        Subspace {
            p,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn full(p: u32, dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { p, dim, rows }
    }

    pub fn span<I, V>(p: u32, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u32]>,
    {
        let mut s = Subspace::zero(p, dim);
        for v in vectors {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    /// Number of vectors in the subspace, `p^rank`.
    pub fn cardinality(&self) -> u128 {
        (self.p as u128).pow(self.rank() as u32)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| pivot(r).expect("rows are nonzero"))
    }

    /// Reduces `v` modulo the subspace, in place; the result is zero iff `v`
    /// was a member, and is the canonical coset representative otherwise.
    pub fn reduce_in_place(&self, v: &mut [u32]) {
        for row in &self.rows {
            let pc = pivot(row).unwrap();
            let k = v[pc];
            if k != 0 {
                axpy(v, self.p - k, row, self.p);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.dim, "vector has wrong dimension");
        let p = self.p;
        let mut w: Vector = v.iter().map(|&x| x % p).collect();
        self.reduce_in_place(&mut w);
        let Some(pc) = pivot(&w) else {
            return false;
        };
        let k = inv_mod(w[pc], p);
        scale(&mut w, k, p);
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                axpy(row, p - c, &w, p);
            }
        }
        let at = self
            .rows
            .iter()
            .position(|r| pivot(r).unwrap() > pc)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, w);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        if self.rank() > other.rank() {
            return false;
        }
        if self.rank() == other.rank() {
            return self == other;
        }
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let (mut big, small) = if self.rank() >= other.rank() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for r in &small.rows {
            big.insert(r);
        }
        big
    }

    /// Zassenhaus intersection.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.dim;
        let mut joint = Subspace::zero(self.p, 2 * n);
        for r in &self.rows {
            let mut v = r.clone();
            v.extend_from_slice(r);
            joint.insert(&v);
        }
        for r in &other.rows {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(0, n));
            joint.insert(&v);
        }
        let meet = joint
            .rows
            .iter()
            .filter(|r| r[..n].iter().all(|&x| x == 0))
            .map(|r| r[n..].to_vec());
        Subspace::span(self.p, n, meet)
    }
}

/// Null space `{x : row . x = 0 for every row}` of a matrix with `ncols` columns.
pub fn kernel(p: u32, ncols: usize, rows: &[Vector]) -> Subspace {
    let echelon = Subspace::span(p, ncols, rows);
    let pivots: Vec<usize> = echelon.pivots().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in echelon.rows.iter().zip(&pivots) {
            v[pc] = (p - row[free] % p) % p;
        }
        basis.push(v);
    }
    Subspace::span(p, ncols, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// All vectors of `(Z/p)^dim` in a subspace, by enumeration of coefficients.
    fn members(s: &Subspace) -> Vec<Vector> {
        let mut out = vec![vec![0; s.dim()]];
        for r in s.rows() {
            let mut next = Vec::new();
            for v in &out {
                for k in 0..s.prime() {
                    let mut w = v.clone();
                    axpy(&mut w, k, r, s.prime());
                    next.push(w);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    fn all_vectors(p: u32, dim: usize) -> Vec<Vector> {
        let mut out = vec![vec![]];
        for _ in 0..dim {
            out = out
                .into_iter()
                .flat_map(|v: Vector| {
                    (0..p).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn arb_space(p: u32, dim: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(0..p, dim), 0..4)
            .prop_map(move |vs| Subspace::span(p, dim, vs))
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = Subspace::span(3, 3, [[1, 2, 0], [0, 1, 1]]);
        let b = Subspace::span(3, 3, [[0, 1, 1], [1, 0, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.cardinality(), 9);
    }

    #[test]
    fn kernel_by_brute_force() {
        let rows = vec![vec![1, 1, 0, 2], vec![0, 2, 1, 1]];
        let k = kernel(3, 4, &rows);
        let expected: Vec<Vector> = all_vectors(3, 4)
            .into_iter()
            .filter(|x| {
                rows.iter()
                    .all(|r| r.iter().zip(x).map(|(a, b)| a * b).sum::<u32>() % 3 == 0)
            })
            .collect();
        assert_eq!(members(&k), expected);
    }

    proptest! {
        #[test]
        fn intersection_matches_membership(a in arb_space(3, 3), b in arb_space(3, 3)) {
            let meet = a.intersection(&b);
            let expected: Vec<Vector> = members(&a).into_iter().filter(|v| b.contains(v)).collect();
            prop_assert_eq!(members(&meet), expected);
            prop_assert!(meet.is_subspace_of(&a) && meet.is_subspace_of(&b));
        }

        #[test]
        fn sum_contains_both(a in arb_space(2, 4), b in arb_space(2, 4)) {
            let s = a.sum(&b);
            prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
            prop_assert_eq!(s.rank() + a.intersection(&b).rank(), a.rank() + b.rank());
        }
    }
}
