//! Named ordered monoids: the Kuratowski monoid and the radical-annihilator
//! monoid types. Tables come from the defining relations; orders are given
//! as Hasse data.

use crate::error::{Error, Result};
use crate::pomonoid::{from_presentation, OrderedMonoid, RewritingPresentation};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub title: &'static str,
    /// Defining relations, `lhs=rhs`.
    pub relations: &'static [&'static str],
    pub monoid: OrderedMonoid,
}

struct Entry {
    name: &'static str,
    title: &'static str,
    /// Radical-like generator first.
    alphabet: &'static str,
    relations: &'static [&'static str],
    /// Covering pairs `(lo, hi)`.
    hasse: &'static [(&'static str, &'static str)],
}

const KURA: Entry = Entry {
    name: "KURA-14",
    title: "Kuratowski closure-complement monoid",
    alphabet: "kc",
    relations: &["cc=1", "kk=k", "kckckck=kck"],
    hasse: &[
        ("1", "k"),
        ("ckc", "1"),
        ("kckck", "k"),
        ("ckc", "ckckckc"),
        ("ckck", "kckck"),
        ("kckc", "kckck"),
        ("ckckckc", "ckck"),
        ("ckckckc", "kckc"),
        ("c", "kc"),
        ("kckckc", "kc"),
        ("ck", "c"),
        ("ck", "ckckck"),
        ("ckckc", "kckckc"),
        ("kck", "kckckc"),
        ("ckckck", "ckckc"),
        ("ckckck", "kck"),
    ],
};

const LOCDUAL_I: Entry = Entry {
    name: "LOCDUAL-i",
    title: "local dual ring",
    alphabet: "ra",
    relations: &["aa=1", "rr=r", "rara=rar"],
    hasse: &[
        ("rar", "r"),
        ("1", "r"),
        ("ara", "1"),
        ("arar", "rar"),
        ("rar", "ra"),
        ("ara", "arar"),
        ("ar", "arar"),
        ("ar", "a"),
        ("a", "ra"),
    ],
};

const LOCDUAL_II: Entry = Entry {
    name: "LOCDUAL-ii",
    title: "dual ring, largest",
    alphabet: "ra",
    relations: &["aa=1", "rr=r", "rarara=rar"],
    hasse: &[
        ("rara", "r"),
        ("1", "r"),
        ("rar", "ra"),
        ("a", "ra"),
        ("ara", "1"),
        ("ar", "a"),
        ("arar", "rara"),
        ("ara", "arar"),
        ("arara", "rar"),
        ("ar", "arara"),
    ],
};

const EX1_7: Entry = Entry {
    name: "EX1-7",
    title: "local dual ring with rar = arar",
    alphabet: "ra",
    relations: &["aa=1", "rr=r", "rara=rar", "arar=rar"],
    hasse: &[
        ("rar", "r"),
        ("1", "r"),
        ("ara", "1"),
        ("ara", "rar"),
        ("ar", "rar"),
        ("rar", "ra"),
        ("ar", "a"),
        ("a", "ra"),
    ],
};

const SEMIPRIME_MAX: Entry = Entry {
    name: "SEMIPRIME-max",
    title: "semiprime ring",
    alphabet: "ra",
    relations: &["aaa=a", "rr=r", "ra=a", "ar=a"],
    hasse: &[("1", "r"), ("r", "a^2")],
};

const FULLSEMIPRIME: Entry = Entry {
    name: "FULLSEMIPRIME",
    title: "semiprime ring with r = 1",
    alphabet: "ra",
    relations: &["aaa=a", "r=1"],
    hasse: &[("1", "a^2")],
};

const ZD_B: Entry = Entry {
    name: "ZD-b",
    title: "zero-dimensional local ring, type (b)",
    alphabet: "ra",
    relations: &["rr=r", "aaa=a", "rara=rar", "aar=r", "raa=r"],
    hasse: &[
        ("a^2", "r"),
        ("rar", "r"),
        ("rar", "ra"),
        ("a", "ra"),
        ("arar", "rar"),
        ("ara", "arar"),
        ("ar", "arar"),
        ("ara", "a^2"),
        ("ar", "a"),
        ("1", "a^2"),
    ],
};

const ZD_C: Entry = Entry {
    name: "ZD-c",
    title: "zero-dimensional local ring, type (c)",
    alphabet: "ra",
    relations: &["rr=r", "aaa=a", "ara=ar", "aar=raar"],
    hasse: &[
        ("ra^2", "a^2r"),
        ("a^2", "ra^2"),
        ("1", "a^2"),
        ("ar", "1"),
        ("r", "ra^2"),
        ("rar", "r"),
        ("ar", "rar"),
        ("a", "ra"),
        ("ra", "a^2r"),
        ("rar", "ra"),
        ("ar", "a"),
        ("1", "r"),
    ],
};

const ZDR_16: Entry = Entry {
    name: "ZDR-16",
    title: "product of the field, (b) and (c) types",
    alphabet: "ra",
    relations: &["rr=r", "aaa=a", "araa=ar", "raar=aar", "rarar=rara"],
    hasse: &[
        ("ra^2", "a^2r"),
        ("a^2rara", "a^2r"),
        ("r", "ra^2"),
        ("a^2", "ra^2"),
        ("1", "r"),
        ("rara", "r"),
        ("1", "a^2"),
        ("ara", "a^2"),
        ("rara", "a^2rara"),
        ("arar", "rara"),
        ("ara", "arar"),
        ("a^2rar", "a^2ra"),
        ("ra", "a^2ra"),
        ("rar", "a^2rar"),
        ("rar", "ra"),
        ("a", "ra"),
        ("arara", "rar"),
        ("ar", "arara"),
        ("ar", "a"),
    ],
};

const FIELD: Entry = Entry {
    name: "field",
    title: "field type",
    alphabet: "ra",
    relations: &["r=1", "aa=1"],
    hasse: &[],
};

const ENTRIES: [&Entry; 9] = [
    &KURA,
    &LOCDUAL_I,
    &LOCDUAL_II,
    &EX1_7,
    &SEMIPRIME_MAX,
    &FULLSEMIPRIME,
    &ZD_B,
    &ZD_C,
    &ZDR_16,
];

fn build(e: &Entry) -> CatalogEntry {
    let pres = RewritingPresentation::new(e.alphabet, e.relations).expect("static presentation");
    let monoid = from_presentation(&pres)
        .and_then(|m| m.with_order_pairs(e.hasse))
        .unwrap_or_else(|err| panic!("catalog entry {}: {err}", e.name));
    CatalogEntry {
        name: e.name,
        title: e.title,
        relations: e.relations,
        monoid,
    }
}

/// The nine named entries, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES.iter().map(|e| build(e)).collect()
}

/// Looks up a catalog entry by name (case-insensitive). The two-element
/// field type is available as `field` without being listed.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let key = name.to_ascii_lowercase();
    if key == "field" || key == "field-type" {
        return Ok(build(&FIELD));
    }
    ENTRIES
        .iter()
        .find(|e| e.name.to_ascii_lowercase() == key)
        .map(|e| build(e))
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

/// Names of every entry [`lookup`] resolves, the field type last.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).chain([FIELD.name]).collect()
}
