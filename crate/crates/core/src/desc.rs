//! Declarative ring descriptions and their JSON document form.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{monomial_string, Polynomial};

/// Constructor tree for a finite commutative ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDescription {
    /// `Z/n`.
    Cyclic { n: u64 },
    /// `F_p[vars]` with one monic degree cap per variable, modulo extra relations.
    PolyQuotient(PolyQuotient),
    /// Direct product with componentwise operations.
    Product(Vec<RingDescription>),
    /// `R(+)R`: pairs with `(r,m)(r',m') = (rr', rm' + mr')`.
    TrivialExtension(Box<RingDescription>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQuotient {
    pub p: u64,
    pub vars: Vec<String>,
    /// One cap per variable, in `vars` order.
    pub caps: Vec<Cap>,
    pub extra_relations: Vec<Polynomial>,
}

/// The rewrite rule `x^degree = rhs` for one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cap {
    pub degree: u32,
    pub rhs: Polynomial,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum RawDescription {
    Cyclic {
        n: u64,
    },
    PolyQuotient {
        p: u64,
        vars: Vec<String>,
        caps: BTreeMap<String, String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extra_relations: Vec<String>,
    },
    Product {
        factors: Vec<RawDescription>,
    },
    TrivialExtension {
        base: Box<RawDescription>,
    },
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses a ring description document.
pub fn parse_ring_description(text: &str) -> Result<RingDescription> {
    let raw: RawDescription = serde_json::from_str(text).map_err(|e| {
        Error::syntax(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    RingDescription::from_raw(raw)
}

impl RingDescription {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescription("cyclic ring needs n >= 1".into()));
        }
        Ok(RingDescription::Cyclic { n })
    }

    /// Builds a polynomial quotient from cap strings like `"x^2 = x + 1"`
    /// (given in `vars` order) and relation strings like `"x*y"`.
    pub fn poly_quotient(p: u64, vars: &[&str], caps: &[&str], extra: &[&str]) -> Result<Self> {
        let caps = vars
            .iter()
            .zip(caps)
            .map(|(v, c)| (v.to_string(), c.to_string()))
            .collect::<BTreeMap<_, _>>();
        Self::from_raw(RawDescription::PolyQuotient {
            p,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            caps,
            extra_relations: extra.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// `F_p[x]/(x^n)`.
    pub fn truncated(p: u64, n: u32) -> Result<Self> {
        let cap = format!("x^{n} = 0");
        Self::poly_quotient(p, &["x"], &[&cap], &[])
    }

    pub fn product(factors: Vec<RingDescription>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDescription("product needs at least one factor".into()));
        }
        Ok(RingDescription::Product(factors))
    }

    pub fn trivial_extension(base: RingDescription) -> Self {
        RingDescription::TrivialExtension(Box::new(base))
    }

    fn from_raw(raw: RawDescription) -> Result<Self> {
        match raw {
            RawDescription::Cyclic { n } => Self::cyclic(n),
            RawDescription::PolyQuotient {
                p,
                vars,
                caps,
                extra_relations,
            } => {
                if !is_prime(p) {
                    return Err(Error::NonPrime(p));
                }
                for (i, v) in vars.iter().enumerate() {
                    if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(Error::InvalidDescription(format!("bad variable name `{v}`")));
                    }
                    if v.starts_with(|c: char| c.is_ascii_digit()) || vars[..i].contains(v) {
                        return Err(Error::InvalidDescription(format!("bad variable name `{v}`")));
                    }
                }
                if let Some(k) = caps.keys().find(|k| !vars.contains(k)) {
                    return Err(Error::UnknownVariable(k.clone()));
                }
                let mut parsed_caps = Vec::with_capacity(vars.len());
                for (i, v) in vars.iter().enumerate() {
                    let text = caps.get(v).ok_or_else(|| Error::MissingCap(v.clone()))?;
                    parsed_caps.push(parse_cap(text, i, &vars)?);
                }
                let extra_relations = extra_relations
                    .iter()
                    .map(|r| Polynomial::parse(r, &vars))
                    .collect::<Result<Vec<_>>>()?;
                Ok(RingDescription::PolyQuotient(PolyQuotient {
                    p,
                    vars,
                    caps: parsed_caps,
                    extra_relations,
                }))
            }
            RawDescription::Product { factors } => Self::product(
                factors
                    .into_iter()
                    .map(Self::from_raw)
                    .collect::<Result<Vec<_>>>()?,
            ),
            RawDescription::TrivialExtension { base } => {
                Ok(Self::trivial_extension(Self::from_raw(*base)?))
            }
        }
    }

    fn to_raw(&self) -> RawDescription {
        match self {
            RingDescription::Cyclic { n } => RawDescription::Cyclic { n: *n },
            RingDescription::PolyQuotient(q) => RawDescription::PolyQuotient {
                p: q.p,
                vars: q.vars.clone(),
                caps: q
                    .vars
                    .iter()
                    .zip(&q.caps)
                    .enumerate()
                    .map(|(i, (v, c))| (v.clone(), cap_string(i, c, &q.vars)))
                    .collect(),
                extra_relations: q
                    .extra_relations
                    .iter()
                    .map(|r| r.display(&q.vars).to_string())
                    .collect(),
            },
            RingDescription::Product(fs) => RawDescription::Product {
                factors: fs.iter().map(Self::to_raw).collect(),
            },
            RingDescription::TrivialExtension(b) => RawDescription::TrivialExtension {
                base: Box::new(b.to_raw()),
            },
        }
    }

    /// The description as a JSON document value (round-trips through
    /// [`parse_ring_description`]).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("description serializes")
    }
}

fn cap_string(var: usize, cap: &Cap, vars: &[String]) -> String {
    let mut e = vec![0; vars.len()];
    e[var] = cap.degree;
    format!("{} = {}", monomial_string(&e, vars), cap.rhs.display(vars))
}

fn parse_cap(text: &str, var: usize, vars: &[String]) -> Result<Cap> {
    let (lhs, rhs) = text.split_once('=').ok_or_else(|| {
        Error::syntax(format!("cap for `{}`", vars[var]), "expected `x^d = polynomial`")
    })?;
    let lhs = Polynomial::parse(lhs, vars)?;
    let rhs = Polynomial::parse(rhs, vars)?;
    let mut terms = lhs.terms();
    let degree = match (terms.next(), terms.next()) {
        (Some((1, e)), None)
            if e.iter().enumerate().all(|(i, &d)| (i == var) == (d > 0)) =>
        {
            e[var]
        }
        _ => {
            return Err(Error::InvalidDescription(format!(
                "cap for `{}` must have left side `{}^d` with d >= 1",
                vars[var], vars[var]
            )))
        }
    };
    if rhs.total_degree().is_some_and(|d| d >= degree) {
        return Err(Error::InvalidDescription(format!(
            "cap for `{}`: right side must have total degree below {degree}",
            vars[var]
        )));
    }
    Ok(Cap { degree, rhs })
}

impl fmt::Display for RingDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescription::Cyclic { n } => write!(f, "Z/{n}"),
            RingDescription::PolyQuotient(q) => {
                write!(f, "F{}[{}]/(", q.p, q.vars.join(","))?;
                let mut rels: Vec<String> = q
                    .vars
                    .iter()
                    .zip(&q.caps)
                    .enumerate()
                    .map(|(i, (_, c))| {
                        let s = cap_string(i, c, &q.vars);
                        match s.strip_suffix(" = 0") {
                            Some(m) => m.to_string(),
                            None => s,
                        }
                    })
                    .collect();
                rels.extend(q.extra_relations.iter().map(|r| r.display(&q.vars).to_string()));
                write!(f, "{})", rels.join(", "))
            }
            RingDescription::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    match x {
                        RingDescription::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            RingDescription::TrivialExtension(b) => write!(f, "({b})(+)({b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic() {
        let d = parse_ring_description(r#"{"type":"cyclic","n":12}"#).unwrap();
        assert_eq!(d, RingDescription::Cyclic { n: 12 });
        assert_eq!(d.to_string(), "Z/12");
    }

    #[test]
    fn parses_poly_quotient() {
        let d = parse_ring_description(
            r#"{"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}}"#,
        )
        .unwrap();
        assert_eq!(d, RingDescription::truncated(2, 2).unwrap());
        assert_eq!(d.to_string(), "F2[x]/(x^2)");
    }

    #[test]
    fn round_trips_through_json() {
        let d = RingDescription::product(vec![
            RingDescription::poly_quotient(2, &["x", "y"], &["x^2 = 0", "y^2 = 0"], &["x*y"])
                .unwrap(),
            RingDescription::trivial_extension(RingDescription::cyclic(4).unwrap()),
            RingDescription::poly_quotient(2, &["x"], &["x^2 = x + 1"], &[]).unwrap(),
        ])
        .unwrap();
        let text = d.to_json().to_string();
        assert_eq!(parse_ring_description(&text).unwrap(), d);
    }

    #[test]
    fn rejects_bad_documents() {
        let bad = [
            (r#"{"type":"cyclic","n":0}"#, "invalid"),
            (r#"{"type":"cyclic""#, "syntax"),
            (r#"{"type":"poly_quotient","p":4,"vars":["x"],"caps":{"x":"x^2 = 0"}}"#, "prime"),
            (r#"{"type":"poly_quotient","p":2,"vars":["x","y"],"caps":{"x":"x^2 = 0"}}"#, "cap"),
            (r#"{"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"},"extra_relations":["y"]}"#, "unknown"),
            (r#"{"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = x^2"}}"#, "invalid"),
            (r#"{"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"2*x^2 = 0"}}"#, "invalid"),
            (r#"{"type":"product","factors":[]}"#, "invalid"),
            (r#"{"type":"torus","n":3}"#, "syntax"),
        ];
        for (text, kind) in bad {
            let err = parse_ring_description(text).unwrap_err();
            let ok = match kind {
                "syntax" => matches!(err, Error::Syntax { .. }),
                "prime" => matches!(err, Error::NonPrime(4)),
                "cap" => matches!(err, Error::MissingCap(ref v) if v == "y"),
                "unknown" => matches!(err, Error::UnknownVariable(ref v) if v == "y"),
                _ => matches!(err, Error::InvalidDescription(_)),
            };
            assert!(ok, "{text}: got {err:?}");
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_ring_description("{\n  \"type\": cyclic}") {
            Err(Error::Syntax { position, .. }) => assert!(position.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
