//! Generator symbols and words such as `rar`, `a^2r` or `(ra^2)^2`.
//!
//! A word denotes the composite map applied right to left: `ra` means
//! "apply `a`, then `r`".

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ideal-lattice generators. Declaration order is the tie-break order for
/// canonical words: `a < d < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "a")]
    Annihilator,
    #[serde(rename = "d")]
    Dualradical,
    #[serde(rename = "r")]
    Radical,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::Annihilator => 'a',
            Generator::Dualradical => 'd',
            Generator::Radical => 'r',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'a' => Some(Generator::Annihilator),
            'd' => Some(Generator::Dualradical),
            'r' => Some(Generator::Radical),
            _ => None,
        }
    }

    /// `a` and `d` reverse inclusion; `r` preserves it.
    pub fn is_antitone(self) -> bool {
        !matches!(self, Generator::Radical)
    }

    /// Parses a generator set such as `ra`, `rd` or `rad`.
    pub fn parse_set(text: &str) -> Result<Vec<Generator>> {
        let mut gens = Vec::new();
        for c in text.chars() {
            let g = Generator::from_symbol(c).ok_or(Error::UnknownGenerator(c))?;
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            return Err(Error::InvalidDescription("empty generator set".into()));
        }
        gens.sort();
        Ok(gens)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Expands a word written with powers and parentheses into its letters.
/// `1` (or the empty string) is the empty word.
pub fn parse_word(text: &str) -> Result<Vec<char>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let out = parse_seq(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::syntax(format!("word `{text}` column {}", pos + 1), "unexpected `)`"));
    }
    Ok(out)
}

fn parse_seq(chars: &[char], pos: &mut usize) -> Result<Vec<char>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let item = match c {
            ')' => break,
            '1' => {
                *pos += 1;
                Vec::new()
            }
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(Error::syntax(format!("word column {}", *pos + 1), "missing `)`"));
                }
                *pos += 1;
                inner
            }
            c if c.is_alphabetic() => {
                *pos += 1;
                vec![c]
            }
            c => {
                return Err(Error::syntax(
                    format!("word column {}", *pos + 1),
                    format!("unexpected `{c}`"),
                ))
            }
        };
        let mut power = 1usize;
        if chars.get(*pos) == Some(&'^') {
            *pos += 1;
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            power = chars[start..*pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::syntax(format!("word column {}", start + 1), "expected exponent"))?;
        }
        for _ in 0..power {
            out.extend_from_slice(&item);
        }
    }
    Ok(out)
}

/// Renders letters with runs compressed: `aar` becomes `a^2r`, empty is `1`.
pub fn format_word(letters: &[char]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let c = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == c {
            j += 1;
        }
        out.push(c);
        if j - i > 1 {
            out.push('^');
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

/// Splits `lhs=rhs`.
pub fn parse_relation(text: &str) -> Result<(Vec<char>, Vec<char>)> {
    let (l, r) = text
        .split_once('=')
        .ok_or_else(|| Error::syntax(format!("relation `{text}`"), "expected `=`"))?;
    Ok((parse_word(l)?, parse_word(r)?))
}

/// Breadth-first closure of `identity` under left multiplication by the
/// generators, `step(g, x) = g·x`.
///
/// Returns every reachable value with its shortlex-least word (shortest,
/// then lexicographic by symbol), in that order. `Err(())` once more than
/// `budget` values are found.
pub(crate) fn shortlex_closure<T, F>(
    identity: T,
    symbols: &[char],
    budget: usize,
    step: F,
) -> std::result::Result<Vec<(T, Vec<char>)>, ()>
where
    T: Clone + Eq + Hash,
    F: Fn(usize, &T) -> T,
{
    let mut gens: Vec<usize> = (0..symbols.len()).collect();
    gens.sort_by_key(|&g| symbols[g]);
    let mut seen: HashMap<T, usize> = HashMap::new();
    seen.insert(identity.clone(), 0);
    let mut out = vec![(identity, Vec::new())];
    let mut level = 0..1;
    loop {
        let mut fresh: Vec<(Vec<char>, T)> = Vec::new();
        let mut pending: HashMap<T, usize> = HashMap::new();
        for i in level.clone() {
            for &g in &gens {
                let t = step(g, &out[i].0);
                if seen.contains_key(&t) {
                    continue;
                }
                let mut w = Vec::with_capacity(out[i].1.len() + 1);
                w.push(symbols[g]);
                w.extend_from_slice(&out[i].1);
                match pending.get(&t) {
                    Some(&k) => {
                        if w < fresh[k].0 {
                            fresh[k].0 = w;
                        }
                    }
                    None => {
                        pending.insert(t.clone(), fresh.len());
                        fresh.push((w, t));
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Ok(out);
        }
        fresh.sort_by(|x, y| x.0.cmp(&y.0));
        let start = out.len();
        for (w, t) in fresh {
            seen.insert(t.clone(), out.len());
            out.push((t, w));
            if out.len() > budget {
                return Err(());
            }
        }
        level = start..out.len();
    }
}
