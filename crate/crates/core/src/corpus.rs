//! The built-in ring corpus and loading of extra rings from a directory.

use std::path::Path;

use crate::desc::{parse_ring_description, RingDescription};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct CorpusRing {
    pub name: String,
    pub description: RingDescription,
}

/// `F_p[x, y] / (x, y)^n`.
pub fn maximal_power(p: u64, n: u32) -> RingDescription {
    let caps = [format!("x^{n} = 0"), format!("y^{n} = 0")];
    let extra: Vec<String> = (1..n).map(|i| format!("x^{}*y^{}", n - i, i)).collect();
    let extra: Vec<&str> = extra.iter().map(|s| s.as_str()).collect();
    RingDescription::poly_quotient(p, &["x", "y"], &[&caps[0], &caps[1]], &extra).expect("valid description")
}

pub fn gf4() -> RingDescription {
    RingDescription::poly_quotient(2, &["x"], &["x^2 = x + 1"], &[]).expect("valid description")
}

fn cyclic(n: u64) -> RingDescription {
    RingDescription::cyclic(n).expect("n >= 1")
}

fn truncated(p: u64, n: u32) -> RingDescription {
    RingDescription::truncated(p, n).expect("valid description")
}

fn product(a: RingDescription, b: RingDescription) -> RingDescription {
    RingDescription::product(vec![a, b]).expect("two factors")
}

/// Eighteen small rings covering every realizable monoid type.
pub fn builtin_corpus() -> Vec<CorpusRing> {
    let rings = vec![
        ("GF(2)", cyclic(2)),
        ("GF(3)", cyclic(3)),
        ("GF(4)", gf4()),
        ("Z/4", cyclic(4)),
        ("Z/6", cyclic(6)),
        ("Z/8", cyclic(8)),
        ("Z/12", cyclic(12)),
        ("Z/36", cyclic(36)),
        ("F2[x]/(x^2)", truncated(2, 2)),
        ("F2[x]/(x^3)", truncated(2, 3)),
        ("F2[x]/(x^4)", truncated(2, 4)),
        ("F3[x]/(x^3)", truncated(3, 3)),
        ("F2[x,y]/(x^2,xy,y^2)", maximal_power(2, 2)),
        ("F2[x,y]/(x,y)^3", maximal_power(2, 3)),
        ("Z/4(+)Z/4", RingDescription::trivial_extension(cyclic(4))),
        ("F2[x]/(x^3) x GF(2)", product(truncated(2, 3), cyclic(2))),
        ("F2[x]/(x^2) x GF(2)", product(truncated(2, 2), cyclic(2))),
        ("GF(2) x GF(3)", product(cyclic(2), cyclic(3))),
    ];
    rings
        .into_iter()
        .map(|(name, description)| CorpusRing {
            name: name.to_string(),
            description,
        })
        .collect()
}

/// Every `*.json` ring description in `dir`, sorted by file name.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusRing>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p)?;
            Ok(CorpusRing {
                name: p.file_stem().unwrap_or_default().to_string_lossy().into_owned(),
                description: parse_ring_description(&text)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingOps};

    #[test]
    fn sizes() {
        let sizes: Vec<u64> = builtin_corpus()
            .iter()
            .map(|r| build_ring(&r.description, 1 << 20).unwrap().size())
            .collect();
        assert_eq!(sizes, [2, 3, 4, 4, 6, 8, 12, 36, 4, 8, 16, 27, 8, 64, 16, 16, 8, 6]);
        assert_eq!(build_ring(&maximal_power(2, 5), 1 << 20).unwrap().size(), 1 << 15);
    }

    #[test]
    fn maximal_power_kills_degree_n() {
        let r = build_ring(&maximal_power(2, 3), 1 << 20).unwrap();
        let x = r.parse_element("x").unwrap();
        let y = r.parse_element("y").unwrap();
        assert_eq!(r.mul(r.mul(x, x), y), 0);
        assert_ne!(r.mul(x, y), 0);
        assert_ne!(r.mul(x, x), 0);
    }

    #[test]
    fn empty_directory_loads_nothing() {
        let dir = std::env::temp_dir().join(format!("ramon-empty-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        assert!(load_corpus_dir(&dir).unwrap().is_empty());
        std::fs::remove_dir(&dir).unwrap();
    }
}
