//! Brute-force oracles that share nothing with the library beyond ring
//! arithmetic: ideals are bitmasks over element indices, maps are computed
//! from their set-theoretic definitions.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use ramon::{build_ring, FiniteRing, RingDescription, RingOps};

pub type Mask = u64;

pub struct Oracle {
    pub ring: FiniteRing,
    pub n: usize,
    /// Ideals as element bitmasks, sorted by (size, mask).
    pub ideals: Vec<Mask>,
    pub primes: Vec<Mask>,
}

fn bits(m: Mask) -> impl Iterator<Item = u64> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

impl Oracle {
    /// Rings of at most 64 elements only.
    pub fn new(desc: &RingDescription) -> Oracle {
        let ring = build_ring(desc, 64).expect("oracle rings have at most 64 elements");
        let n = ring.size() as usize;
        let mut o = Oracle {
            ring,
            n,
            ideals: Vec::new(),
            primes: Vec::new(),
        };
        o.ideals = o.enumerate_ideals();
        o.primes = o.ideals.iter().copied().filter(|&p| o.is_prime(p)).collect();
        o
    }

    pub fn full(&self) -> Mask {
        if self.n == 64 {
            !0
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn is_ideal(&self, m: Mask) -> bool {
        let r = &self.ring;
        m & 1 == 1
            && bits(m).all(|a| {
                bits(m).all(|b| m >> r.add(a, b) & 1 == 1) && (0..self.n as u64).all(|x| m >> r.mul(a, x) & 1 == 1)
            })
    }

    /// Smallest ideal containing the set.
    pub fn generate(&self, m: Mask) -> Mask {
        let r = &self.ring;
        let mut cur = m | 1;
        loop {
            let mut next = cur;
            for a in bits(cur) {
                for b in bits(cur) {
                    next |= 1 << r.add(a, b);
                }
                for x in 0..self.n as u64 {
                    next |= 1 << r.mul(a, x);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    fn enumerate_ideals(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = if self.n <= 16 {
            (0..1u64 << self.n).filter(|&m| self.is_ideal(m)).collect()
        } else {
            let principal: Vec<Mask> = (0..self.n).map(|g| self.generate(1 << g)).collect();
            let mut seen: HashSet<Mask> = principal.iter().copied().collect();
            let mut queue: VecDeque<Mask> = seen.iter().copied().collect();
            while let Some(i) = queue.pop_front() {
                for &p in &principal {
                    let s = self.generate(i | p);
                    if seen.insert(s) {
                        queue.push_back(s);
                    }
                }
            }
            seen.into_iter().collect()
        };
        out.sort_by_key(|&m| (m.count_ones(), m));
        out
    }

    pub fn is_prime(&self, p: Mask) -> bool {
        let r = &self.ring;
        p != self.full()
            && (0..self.n as u64).all(|a| {
                p >> a & 1 == 1 || (0..self.n as u64).all(|b| p >> b & 1 == 1 || p >> r.mul(a, b) & 1 == 0)
            })
    }

    pub fn index(&self, m: Mask) -> usize {
        self.ideals.iter().position(|&x| x == m).expect("an ideal")
    }

    fn meet_all(&self, it: impl Iterator<Item = Mask>) -> Mask {
        it.fold(self.full(), |acc, p| acc & p)
    }

    pub fn radical(&self, i: Mask) -> Mask {
        self.meet_all(self.primes.iter().copied().filter(|&p| i & !p == 0))
    }

    pub fn dualradical(&self, i: Mask) -> Mask {
        self.meet_all(self.primes.iter().copied().filter(|&p| i & !p != 0))
    }

    pub fn annihilator(&self, i: Mask) -> Mask {
        let r = &self.ring;
        (0..self.n as u64)
            .filter(|&x| bits(i).all(|a| r.mul(a, x) == 0))
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Ideal-index map of a generator letter.
    pub fn map(&self, letter: char) -> Vec<usize> {
        self.ideals
            .iter()
            .map(|&i| {
                self.index(match letter {
                    'r' => self.radical(i),
                    'a' => self.annihilator(i),
                    'd' => self.dualradical(i),
                    _ => panic!("unknown letter {letter}"),
                })
            })
            .collect()
    }

    /// Word applied rightmost letter first; `1` is the identity.
    pub fn word(&self, w: &str) -> Vec<usize> {
        let maps: HashMap<char, Vec<usize>> = "rad".chars().map(|c| (c, self.map(c))).collect();
        (0..self.ideals.len())
            .map(|i| w.chars().rev().filter(|&c| c != '1').fold(i, |x, c| maps[&c][x]))
            .collect()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i] & !self.ideals[j] == 0
    }

    pub fn local(&self) -> bool {
        self.primes.len() == 1
    }
}

/// Every map reachable from the identity, with the parities of the count
/// of antitone letters along the words reaching it.
pub struct MapClosure {
    pub maps: Vec<Vec<usize>>,
    pub parities: Vec<[bool; 2]>,
}

pub fn closure(oracle: &Oracle, letters: &str) -> MapClosure {
    let gens: Vec<(Vec<usize>, usize)> = letters
        .chars()
        .map(|c| (oracle.map(c), usize::from(c != 'r')))
        .collect();
    let identity: Vec<usize> = (0..oracle.ideals.len()).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut maps = Vec::new();
    let mut seen_states = HashSet::new();
    let mut queue = VecDeque::from([(identity, 0usize)]);
    let mut parities: Vec<[bool; 2]> = Vec::new();
    while let Some((f, parity)) = queue.pop_front() {
        if !seen_states.insert((f.clone(), parity)) {
            continue;
        }
        let k = *index.entry(f.clone()).or_insert_with(|| {
            maps.push(f.clone());
            parities.push([false; 2]);
            maps.len() - 1
        });
        parities[k][parity] = true;
        for (g, flip) in &gens {
            let h: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            queue.push_back((h, parity ^ flip));
        }
    }
    MapClosure { maps, parities }
}

/// Orbit sizes of every ideal under a set of maps.
pub fn orbit_sizes(maps: &[Vec<usize>], ideals: usize) -> Vec<usize> {
    (0..ideals)
        .map(|i| maps.iter().map(|f| f[i]).collect::<HashSet<_>>().len())
        .collect()
}

/// Submonoid of a direct product generated by the diagonal generators,
/// from the factors' tables alone.
pub fn direct_product_closure(tables: &[(&[Vec<usize>], usize, Vec<usize>)]) -> usize {
    let identity: Vec<usize> = tables.iter().map(|(_, id, _)| *id).collect();
    let ngen = tables[0].2.len();
    let gens: Vec<Vec<usize>> = (0..ngen).map(|g| tables.iter().map(|(_, _, gs)| gs[g]).collect()).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y: Vec<usize> = x.iter().zip(g).zip(tables).map(|((&xi, &gi), (t, _, _))| t[xi][gi]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// A four-point space whose closure and complement generate all fourteen
/// Kuratowski operators. Closed sets are the down-sets of the preorder.
pub const KURATOWSKI_SPACE: (usize, &[(usize, usize)]) = (4, &[(0, 1), (0, 2), (0, 3), (2, 3), (3, 2)]);

/// Closure and complement as maps on all subsets of the space.
pub fn kuratowski_maps() -> (Vec<usize>, Vec<usize>) {
    let (n, pairs) = KURATOWSKI_SPACE;
    let below = |x: usize, a: usize| x == a || pairs.contains(&(x, a));
    let full = (1 << n) - 1;
    let closure = (0..1usize << n)
        .map(|s| (0..n).filter(|&x| (0..n).any(|a| s >> a & 1 == 1 && below(x, a))).fold(0, |m, x| m | 1 << x))
        .collect();
    let complement = (0..1usize << n).map(|s| full ^ s).collect();
    (closure, complement)
}
