//! Verdicts produced by the verifiers.

use crate::exact::{format_rational, parse_rational};
use crate::{Error, Int, Rational, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Unimodal,
    LogConcave,
    Spiral,
    RatioMonotone,
    FactorialLogConcave,
    MinimumAtM,
    Conj11Identity,
    #[serde(rename = "strong-ratio-c")]
    StrongRatioMonotoneC,
    IntegralIdentity,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Unimodal,
        Property::LogConcave,
        Property::Spiral,
        Property::RatioMonotone,
        Property::FactorialLogConcave,
        Property::MinimumAtM,
        Property::Conj11Identity,
        Property::StrongRatioMonotoneC,
        Property::IntegralIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Unimodal => "unimodal",
            Property::LogConcave => "log-concave",
            Property::Spiral => "spiral",
            Property::RatioMonotone => "ratio-monotone",
            Property::FactorialLogConcave => "factorial-log-concave",
            Property::MinimumAtM => "minimum-at-m",
            Property::Conj11Identity => "conj11-identity",
            Property::StrongRatioMonotoneC => "strong-ratio-c",
            Property::IntegralIdentity => "integral-identity",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown property {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Violated,
    DomainError,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Violated => "violated",
            Verdict::DomainError => "domain-error",
        })
    }
}

/// The relation a checked link was required to satisfy, `lhs REL rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Less,
    LessEq,
    Equal,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Less => lhs < rhs,
            Relation::LessEq => lhs <= rhs,
            Relation::Equal => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessEq => "<=",
            Relation::Equal => "==",
        }
    }
}

/// A link `lhs REL rhs` that failed, with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub m: u32,
    pub i: i64,
    pub relation: Relation,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(m: u32, i: i64, relation: Relation, lhs: &Rational, rhs: &Rational) -> Self {
        Witness {
            m,
            i,
            relation,
            lhs: format_rational(lhs),
            rhs: format_rational(rhs),
        }
    }

    pub fn from_ints(m: u32, i: i64, relation: Relation, lhs: &Int, rhs: &Int) -> Self {
        Witness::new(
            m,
            i,
            relation,
            &Rational::from_integer(lhs.clone()),
            &Rational::from_integer(rhs.clone()),
        )
    }

    /// Re-evaluates the rendered comparison.
    pub fn holds(&self) -> Result<bool> {
        let lhs = parse_rational(&self.lhs)?;
        let rhs = parse_rational(&self.rhs)?;
        Ok(self.relation.holds(&lhs, &rhs))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} i={}: expected {} {} {}",
            self.m,
            self.i,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}

/// Outcome of one property over one `m` or a range of `m`.
///
/// A witness is present exactly when the verdict is [`Verdict::Violated`];
/// deserialization rejects records that break this.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct PropertyReport {
    property: Property,
    m_from: u32,
    m_to: u32,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    notes: String,
}

#[derive(Deserialize)]
struct RawReport {
    property: Property,
    m_from: u32,
    m_to: u32,
    verdict: Verdict,
    #[serde(default)]
    witness: Option<Witness>,
    notes: String,
}

impl TryFrom<RawReport> for PropertyReport {
    type Error = String;

    fn try_from(r: RawReport) -> std::result::Result<Self, String> {
        if (r.verdict == Verdict::Violated) != r.witness.is_some() {
            return Err("a witness must be present exactly when the verdict is violated".into());
        }
        if r.m_from > r.m_to {
            return Err("m_from exceeds m_to".into());
        }
        Ok(PropertyReport {
            property: r.property,
            m_from: r.m_from,
            m_to: r.m_to,
            verdict: r.verdict,
            witness: r.witness,
            notes: r.notes,
        })
    }
}

impl PropertyReport {
    pub fn verified(property: Property, m: u32, notes: impl Into<String>) -> Self {
        Self::build(property, (m, m), Verdict::Verified, None, notes.into())
    }

    pub fn violated(property: Property, witness: Witness, notes: impl Into<String>) -> Self {
        let m = witness.m;
        Self::build(
            property,
            (m, m),
            Verdict::Violated,
            Some(witness),
            notes.into(),
        )
    }

    pub fn domain_error(property: Property, m: u32, notes: impl Into<String>) -> Self {
        Self::build(property, (m, m), Verdict::DomainError, None, notes.into())
    }

    /// `Verified` when `witness` is `None`, otherwise `Violated`.
    pub fn from_outcome(
        property: Property,
        m: u32,
        witness: Option<Witness>,
        notes: impl Into<String>,
    ) -> Self {
        match witness {
            None => Self::verified(property, m, notes),
            Some(w) => Self::violated(property, w, notes),
        }
    }

    /// Folds per-`m` reports into one covering `m_from..=m_to`. The first
    /// violation (by ascending `m`) becomes the summary witness.
    pub fn summarize(
        property: Property,
        m_from: u32,
        m_to: u32,
        reports: &[PropertyReport],
    ) -> Self {
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        let (ok, bad, dom) = (
            count(Verdict::Verified),
            count(Verdict::Violated),
            count(Verdict::DomainError),
        );
        let notes = format!("{ok} verified, {bad} violated, {dom} domain errors");
        let witness = reports.iter().find_map(|r| r.witness.clone());
        let verdict = if witness.is_some() {
            Verdict::Violated
        } else if dom > 0 {
            Verdict::DomainError
        } else {
            Verdict::Verified
        };
        Self::build(property, (m_from, m_to), verdict, witness, notes)
    }

    fn build(
        property: Property,
        (m_from, m_to): (u32, u32),
        verdict: Verdict,
        witness: Option<Witness>,
        notes: String,
    ) -> Self {
        PropertyReport {
            property,
            m_from,
            m_to,
            verdict,
            witness,
            notes,
        }
    }

    pub fn property(&self) -> Property {
        self.property
    }

    pub fn m_range(&self) -> (u32, u32) {
        (self.m_from, self.m_to)
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn notes(&self) -> &str {
        &self.notes
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(json, format!("\"{}\"", p.name()));
        }
        assert!("no-such".parse::<Property>().is_err());
    }

    #[test]
    fn witness_re_evaluates() {
        let w = Witness::from_ints(2, 1, Relation::Less, &Int::from(1), &Int::from(1));
        assert!(!w.holds().unwrap());
        let w = Witness::from_ints(2, 1, Relation::Equal, &Int::from(3), &Int::from(3));
        assert!(w.holds().unwrap());
    }

    #[test]
    fn deserialize_enforces_witness_invariant() {
        let bad = r#"{"property":"spiral","m_from":2,"m_to":2,"verdict":"violated","notes":""}"#;
        assert!(serde_json::from_str::<PropertyReport>(bad).is_err());
        let bad = r#"{"property":"spiral","m_from":2,"m_to":2,"verdict":"verified","notes":"",
            "witness":{"m":2,"i":1,"relation":"less","lhs":"1","rhs":"1"}}"#;
        assert!(serde_json::from_str::<PropertyReport>(bad).is_err());
        let ok = r#"{"property":"spiral","m_from":2,"m_to":2,"verdict":"verified","notes":""}"#;
        assert!(serde_json::from_str::<PropertyReport>(ok)
            .unwrap()
            .is_verified());
    }

    #[test]
    fn summary_takes_first_witness() {
        let w = Witness::from_ints(3, 1, Relation::Less, &Int::from(2), &Int::from(1));
        let reports = vec![
            PropertyReport::verified(Property::Spiral, 2, ""),
            PropertyReport::violated(Property::Spiral, w.clone(), ""),
            PropertyReport::verified(Property::Spiral, 4, ""),
        ];
        let s = PropertyReport::summarize(Property::Spiral, 2, 4, &reports);
        assert_eq!(s.verdict(), Verdict::Violated);
        assert_eq!(s.witness(), Some(&w));
        assert_eq!(s.m_range(), (2, 4));
        assert_eq!(s.notes(), "2 verified, 1 violated, 0 domain errors");
    }
}
