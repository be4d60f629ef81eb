//! Exact checks of the ordering, identity, and minimum properties of a
//! coefficient row.
//!
//! All comparisons are strict and run on the integer scale `b_i = 4^m d_i`;
//! ratio chains are compared by cross-multiplication. Every verifier needs
//! `m >= 2` and returns [`Error::Domain`] below that.

use crate::coeff::{four_pow, row_direct};
use crate::quartic::{check_integral_identity, DEFAULT_TOL};
use crate::report::{Property, PropertyReport, Relation, Witness};
use crate::{binomial, CoeffRow, Error, Int, Rational, Result};
use num_traits::{One, Zero};
use rayon::prelude::*;

fn require_m2(m: u32, what: &str) -> Result<()> {
    if m < 2 {
        return Err(Error::domain(format!("{what} needs m >= 2, got m = {m}")));
    }
    Ok(())
}

/// First index `k` with `values[k] >= values[k + 1]`, as a witness.
fn strictly_increasing(m: u32, items: &[(i64, Int)]) -> Option<Witness> {
    items.windows(2).find_map(|w| {
        let ((_, lo), (i, hi)) = (&w[0], &w[1]);
        (lo >= hi).then(|| Witness::from_ints(m, *i, Relation::Less, lo, hi))
    })
}

/// Checks `p_0/q_0 < p_1/q_1 < ... < p_n/q_n < 1` for positive entries.
///
/// `pairs` holds `(numerator index, numerator, denominator)`; the witness
/// index is the numerator index of the left ratio of the failing link.
fn ratio_chain(m: u32, pairs: &[(i64, &Int, &Int)]) -> Option<Witness> {
    let ratio = |p: &Int, q: &Int| Rational::new(p.clone(), q.clone());
    for w in pairs.windows(2) {
        let (i, p0, q0) = w[0];
        let (_, p1, q1) = w[1];
        if p0 * q1 >= p1 * q0 {
            return Some(Witness::new(
                m,
                i,
                Relation::Less,
                &ratio(p0, q0),
                &ratio(p1, q1),
            ));
        }
    }
    let &(i, p, q) = pairs.last()?;
    (p >= q).then(|| Witness::new(m, i, Relation::Less, &ratio(p, q), &Rational::one()))
}

/// Unimodality with the peak at `⌊m/2⌋`:
/// `b_0 < ... < b_{⌊m/2⌋} > ... > b_m`.
pub fn check_unimodal_middle_peak(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    require_m2(m, "unimodality check")?;
    let peak = (m / 2) as i64;
    let b = |i: i64| row.b(i).clone();
    let rising: Vec<_> = (0..=peak).map(|i| (i, b(i))).collect();
    let falling: Vec<_> = (peak..=m as i64).rev().map(|i| (i, b(i))).collect();
    let witness = strictly_increasing(m, &rising).or_else(|| strictly_increasing(m, &falling));
    Ok(PropertyReport::from_outcome(
        Property::Unimodal,
        m,
        witness,
        format!("peak index {peak}; values are b_i = 4^m d_i"),
    ))
}

/// `b_{i-1} b_{i+1} < b_i^2` for `1 <= i <= m-1`.
pub fn check_log_concave(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    require_m2(m, "log-concavity check")?;
    let witness = (1..m as i64).find_map(|i| {
        let outer = row.b(i - 1) * row.b(i + 1);
        let inner = row.b(i) * row.b(i);
        (outer >= inner).then(|| Witness::from_ints(m, i, Relation::Less, &outer, &inner))
    });
    Ok(PropertyReport::from_outcome(
        Property::LogConcave,
        m,
        witness,
        "b_{i-1} b_{i+1} < b_i^2",
    ))
}

/// Index order `m, 0, m-1, 1, m-2, 2, ...` of length `m + 1`, ending at `⌊m/2⌋`.
pub fn spiral_order(m: u32) -> Vec<i64> {
    let m = m as i64;
    (0..=m)
        .map(|k| if k % 2 == 0 { m - k / 2 } else { k / 2 })
        .collect()
}

/// `d_m < d_0 < d_{m-1} < d_1 < ... < d_{⌊m/2⌋}`.
pub fn check_spiral(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    require_m2(m, "spiral check")?;
    let items: Vec<_> = spiral_order(m)
        .into_iter()
        .map(|i| (i, row.b(i).clone()))
        .collect();
    Ok(PropertyReport::from_outcome(
        Property::Spiral,
        m,
        strictly_increasing(m, &items),
        "interleaved chain m, 0, m-1, 1, ...; values are b_i = 4^m d_i",
    ))
}

/// Both ratio chains
///
/// * `d_m/d_0 < d_{m-1}/d_1 < ... < d_{m-⌊(m-1)/2⌋}/d_{⌊(m-1)/2⌋} < 1`
/// * `d_0/d_{m-1} < d_1/d_{m-2} < ... < d_{⌊m/2⌋-1}/d_{m-⌊m/2⌋} < 1`
pub fn check_ratio_monotone(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    require_m2(m, "ratio monotonicity check")?;
    let mi = m as i64;
    let a: Vec<_> = (0..=(mi - 1) / 2)
        .map(|i| (mi - i, row.b(mi - i), row.b(i)))
        .collect();
    let b: Vec<_> = (1..=mi / 2)
        .map(|i| (i - 1, row.b(i - 1), row.b(mi - i)))
        .collect();
    let (witness, notes) = match ratio_chain(m, &a) {
        Some(w) => (Some(w), "chain d_{m-i}/d_i failed"),
        None => match ratio_chain(m, &b) {
            Some(w) => (Some(w), "chain d_{i-1}/d_{m-i} failed"),
            None => (None, "both ratio chains strict"),
        },
    };
    Ok(PropertyReport::from_outcome(
        Property::RatioMonotone,
        m,
        witness,
        notes,
    ))
}

/// `(i+1) b_{i+1} b_{i-1} < i b_i^2` for `1 <= i <= m-1`, i.e. log-concavity
/// of `i! d_i`.
pub fn check_factorial_log_concave(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    require_m2(m, "factorial log-concavity check")?;
    let witness = (1..m as i64).find_map(|i| {
        let outer = row.b(i + 1) * row.b(i - 1) * (i + 1);
        let inner = row.b(i) * row.b(i) * i;
        (outer >= inner).then(|| Witness::from_ints(m, i, Relation::Less, &outer, &inner))
    });
    Ok(PropertyReport::from_outcome(
        Property::FactorialLogConcave,
        m,
        witness,
        "(i+1) b_{i+1} b_{i-1} < i b_i^2",
    ))
}

/// The sequence `e_i = i(i+1)(b_i^2 - b_{i+1} b_{i-1})`, `1 <= i <= m`, with
/// `b_{m+1} = 0`. The rational values are `c_i = e_i / 4^{2m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSequence {
    m: u32,
    e: Vec<Int>,
}

impl MinSequence {
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `e_i` for `1 <= i <= m`.
    pub fn e(&self, i: usize) -> &Int {
        &self.e[i - 1]
    }

    pub fn e_slice(&self) -> &[Int] {
        &self.e
    }

    /// `4^{2m}`.
    pub fn scale(&self) -> Int {
        four_pow(2 * self.m)
    }

    pub fn c(&self, i: usize) -> Rational {
        Rational::new(self.e(i).clone(), self.scale())
    }

    pub fn c_vec(&self) -> Vec<Rational> {
        (1..=self.m as usize).map(|i| self.c(i)).collect()
    }

    /// Every index attaining the minimum, ascending.
    pub fn argmin(&self) -> Vec<usize> {
        let min = self.e.iter().min().expect("m >= 2");
        (1..=self.m as usize)
            .filter(|&i| self.e(i) == min)
            .collect()
    }
}

pub fn min_sequence(row: &CoeffRow) -> Result<MinSequence> {
    let m = row.m();
    require_m2(m, "minimum sequence")?;
    let e = (1..=m as i64)
        .map(|i| (row.b(i) * row.b(i) - row.b(i + 1) * row.b(i - 1)) * (i * (i + 1)))
        .collect();
    Ok(MinSequence { m, e })
}

/// `2^{-2m} m(m+1) C(2m,m)^2`, the minimum value of `c_i`.
pub fn minimum_closed_form(m: u32) -> Rational {
    let central = binomial(2 * m as u64, m as i64);
    Rational::new(
        &central * &central * (m as u64 * (m as u64 + 1)),
        Int::one() << (2 * m as usize),
    )
}

/// The minimum of `c_i` is attained only at `i = m`, with value
/// `2^{-2m} m(m+1) C(2m,m)^2`.
pub fn check_minimum_at_m(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    let seq = min_sequence(row)?;
    let mu = m as usize;
    let e_m = seq.e(mu);
    let top = row.b(m as i64) * row.b(m as i64) * (m as u64 * (m as u64 + 1));
    let witness = if *e_m != top {
        Some(Witness::from_ints(m, m as i64, Relation::Equal, e_m, &top))
    } else if seq.c(mu) != minimum_closed_form(m) {
        Some(Witness::new(
            m,
            m as i64,
            Relation::Equal,
            &seq.c(mu),
            &minimum_closed_form(m),
        ))
    } else {
        (1..mu).find_map(|i| {
            (seq.e(i) <= e_m)
                .then(|| Witness::new(m, i as i64, Relation::Less, &seq.c(mu), &seq.c(i)))
        })
    };
    Ok(PropertyReport::from_outcome(
        Property::MinimumAtM,
        m,
        witness,
        format!("c_m = {}", crate::exact::format_rational(&seq.c(mu))),
    ))
}

/// `(m+i)(m+1-i) b_{i-1}^2 + i(i+1) b_i^2 - i(2m+1) b_{i-1} b_i`.
pub fn quadratic_form(row: &CoeffRow, i: i64) -> Int {
    let m = row.m() as i64;
    let (prev, cur) = (row.b(i - 1), row.b(i));
    prev * prev * ((m + i) * (m + 1 - i)) + cur * cur * (i * (i + 1))
        - prev * cur * (i * (2 * m + 1))
}

/// The quadratic form equals `e_i` for every `1 <= i <= m`, and its value at
/// `i = m` is `2^{2m} m(m+1) C(2m,m)^2`.
pub fn check_conj11_identity(row: &CoeffRow) -> Result<PropertyReport> {
    let m = row.m();
    let seq = min_sequence(row)?;
    let mut witness = (1..=m as usize).find_map(|i| {
        let form = quadratic_form(row, i as i64);
        (form != *seq.e(i))
            .then(|| Witness::from_ints(m, i as i64, Relation::Equal, &form, seq.e(i)))
    });
    if witness.is_none() {
        let central = binomial(2 * m as u64, m as i64);
        let stated = (&central * &central * (m as u64 * (m as u64 + 1))) << (2 * m as usize);
        let form = quadratic_form(row, m as i64);
        if form != stated {
            witness = Some(Witness::from_ints(
                m,
                m as i64,
                Relation::Equal,
                &form,
                &stated,
            ));
        }
    }
    Ok(PropertyReport::from_outcome(
        Property::Conj11Identity,
        m,
        witness,
        "quadratic form == i(i+1)(b_i^2 - b_{i+1} b_{i-1})",
    ))
}

/// Ratio chains on `c_1..c_m`:
///
/// * `c_m/c_1 < c_{m-1}/c_2 < ... < 1` over pairs `(m-j, 1+j)` while `m-j > 1+j`
/// * `c_1/c_{m-1} < c_2/c_{m-2} < ... < 1` over pairs `(1+j, m-1-j)` while `1+j < m-1-j`
///
/// An empty chain holds vacuously. The chain shape generalizes the `m = 8`
/// instance; a violation is a finding about an open conjecture.
pub fn check_strong_ratio_monotone_c(seq: &MinSequence) -> Result<PropertyReport> {
    let m = seq.m();
    require_m2(m, "strong ratio monotonicity check")?;
    let mu = m as usize;
    // cross-multiplication below needs positive entries
    if let Some(i) = (1..=mu).find(|&i| !crate::exact::is_positive(seq.e(i))) {
        let w = Witness::new(m, i as i64, Relation::Less, &Rational::zero(), &seq.c(i));
        return Ok(PropertyReport::violated(
            Property::StrongRatioMonotoneC,
            w,
            "sequence entry is not positive",
        ));
    }
    let a: Vec<_> = (0..)
        .take_while(|j| mu - j > 1 + j)
        .map(|j| ((mu - j) as i64, seq.e(mu - j), seq.e(1 + j)))
        .collect();
    let b: Vec<_> = (0..)
        .take_while(|j| 1 + j + 1 + j < mu)
        .map(|j| ((1 + j) as i64, seq.e(1 + j), seq.e(mu - 1 - j)))
        .collect();
    let (witness, notes) = match ratio_chain(m, &a) {
        Some(w) => (Some(w), "chain c_{m-j}/c_{1+j} failed"),
        None => match ratio_chain(m, &b) {
            Some(w) => (Some(w), "chain c_{1+j}/c_{m-1-j} failed"),
            None => (
                None,
                "both chains strict; chain shape inferred from the m = 8 instance",
            ),
        },
    };
    Ok(PropertyReport::from_outcome(
        Property::StrongRatioMonotoneC,
        m,
        witness,
        notes,
    ))
}

/// `4 e_i > (2m+1)^2 b_m^2` for `1 <= i <= m-2`; the first failing link is
/// returned.
pub fn check_proof_step_bound(row: &CoeffRow) -> Result<Option<Witness>> {
    let m = row.m();
    let seq = min_sequence(row)?;
    let rhs = row.b(m as i64) * row.b(m as i64) * ((2 * m as u64 + 1) * (2 * m as u64 + 1));
    Ok((1..m.saturating_sub(1) as usize).find_map(|i| {
        let lhs = seq.e(i) * 4u32;
        (lhs <= rhs).then(|| Witness::from_ints(m, i as i64, Relation::Less, &rhs, &lhs))
    }))
}

/// Compares the closed forms for `d_m, d_{m-1}, d_{m-2}` and the relation
/// `d_{m-1} = (2m+1)/2 d_m` against the row; returns the first mismatch.
pub fn check_closed_forms(row: &CoeffRow) -> Result<Option<Witness>> {
    let m = row.m();
    let cf = crate::closed_forms(m)?;
    let mi = m as i64;
    let half_odd = Rational::new(Int::from(2 * m + 1), Int::from(2));
    let pairs = [
        (mi, cf.d_m.clone(), row.d(mi)),
        (mi - 1, cf.d_m_minus_1.clone(), row.d(mi - 1)),
        (mi - 2, cf.d_m_minus_2.clone(), row.d(mi - 2)),
        (mi - 1, half_odd * &cf.d_m, row.d(mi - 1)),
    ];
    Ok(pairs
        .into_iter()
        .find(|(_, closed, summed)| closed != summed)
        .map(|(i, closed, summed)| Witness::new(m, i, Relation::Equal, &closed, &summed)))
}

/// Default `a` grid used when sweeping the integral identity.
pub fn integral_grid() -> Vec<Rational> {
    [(-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)]
        .into_iter()
        .map(|(n, d)| Rational::new(Int::from(n), Int::from(d)))
        .collect()
}

fn integral_report(m: u32) -> PropertyReport {
    for a in integral_grid() {
        match check_integral_identity::<f64>(m, &a, DEFAULT_TOL) {
            Ok(r) if r.pass => {}
            Ok(r) => {
                let exact = |x: f64| Rational::from_float(x).unwrap_or_default();
                let w = Witness::new(m, 0, Relation::LessEq, &exact(r.rel_error), &exact(r.tol));
                return PropertyReport::violated(
                    Property::IntegralIdentity,
                    w,
                    format!("a = {a}: relative error {:e} exceeds tol", r.rel_error),
                );
            }
            Err(e) => {
                return PropertyReport::domain_error(Property::IntegralIdentity, m, e.to_string())
            }
        }
    }
    PropertyReport::verified(
        Property::IntegralIdentity,
        m,
        format!("a in {{-1/2, 0, 1/2, 1, 2}}, tol {DEFAULT_TOL:e}"),
    )
}

/// Runs one property on one row. Domain errors become `DomainError` reports.
pub fn check(property: Property, row: &CoeffRow) -> PropertyReport {
    let m = row.m();
    let result = match property {
        Property::Unimodal => check_unimodal_middle_peak(row),
        Property::LogConcave => check_log_concave(row),
        Property::Spiral => check_spiral(row),
        Property::RatioMonotone => check_ratio_monotone(row),
        Property::FactorialLogConcave => check_factorial_log_concave(row),
        Property::MinimumAtM => check_minimum_at_m(row),
        Property::Conj11Identity => check_conj11_identity(row),
        Property::StrongRatioMonotoneC => {
            min_sequence(row).and_then(|s| check_strong_ratio_monotone_c(&s))
        }
        Property::IntegralIdentity => {
            require_m2(m, "integral identity sweep").map(|_| integral_report(m))
        }
    };
    result.unwrap_or_else(|e| PropertyReport::domain_error(property, m, e.to_string()))
}

/// One report per `m` in `m_from..=m_to`, ascending, followed by a summary
/// report over the whole range. Rows are computed in parallel on the current
/// rayon pool.
pub fn verify_range(property: Property, m_from: u32, m_to: u32) -> Result<Vec<PropertyReport>> {
    require_m2(m_from, "verify_range")?;
    if m_from > m_to {
        return Err(Error::domain(format!("empty range {m_from}..={m_to}")));
    }
    let mut reports: Vec<PropertyReport> = (m_from..=m_to)
        .into_par_iter()
        .map(|m| check(property, &row_direct(m)))
        .collect();
    let summary = PropertyReport::summarize(property, m_from, m_to, &reports);
    reports.push(summary);
    Ok(reports)
}
