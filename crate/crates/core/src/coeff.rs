//! Boros-Moll coefficients by direct summation and by recurrence.

use crate::{binomial, poly::horner, Error, Int, Rational, Result};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

/// All coefficients of `P_m`, held as the integers `b_i(m) = 4^m d_i(m)`.
///
/// Indices outside `0..=m` read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffRow {
    m: u32,
    b: Vec<Int>,
}

impl CoeffRow {
    /// Wraps an arbitrary positive sequence `b_0..b_m` as a row of degree
    /// `len - 1`. Rows built this way need not be Boros-Moll rows; this is how
    /// verifiers are exercised on synthetic input.
    pub fn from_b(b: Vec<Int>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::domain("a coefficient row needs at least one entry"));
        }
        if let Some(i) = b.iter().position(|x| !crate::exact::is_positive(x)) {
            return Err(Error::domain(format!("entry {i} is not positive")));
        }
        let m = u32::try_from(b.len() - 1).map_err(|_| Error::domain("row too long"))?;
        Ok(CoeffRow { m, b })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `b_i`, or zero when `i < 0` or `i > m`.
    pub fn b(&self, i: i64) -> &Int {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.b.get(i))
            .unwrap_or(&Int::ZERO)
    }

    pub fn b_slice(&self) -> &[Int] {
        &self.b
    }

    /// The common denominator `4^m` relating `b_i` and `d_i`.
    pub fn scale(&self) -> Int {
        four_pow(self.m)
    }

    /// `d_i = b_i / 4^m`, zero out of range.
    pub fn d(&self, i: i64) -> Rational {
        Rational::new(self.b(i).clone(), self.scale())
    }

    pub fn d_vec(&self) -> Vec<Rational> {
        let scale = self.scale();
        self.b
            .iter()
            .map(|b| Rational::new(b.clone(), scale.clone()))
            .collect()
    }

    /// `P_m(a)` evaluated exactly.
    pub fn eval(&self, a: &Rational) -> Rational {
        horner(&self.d_vec(), a)
    }

    pub fn into_b(self) -> Vec<Int> {
        self.b
    }
}

pub(crate) fn four_pow(m: u32) -> Int {
    Int::one() << (2 * m as usize)
}

/// `t_k = 2^k C(2m-2k, m-k) C(m+k, k)` for `k = 0..=m`.
fn outer_terms(m: u32) -> Vec<Int> {
    let m = m as u64;
    (0..=m)
        .map(|k| {
            (binomial(2 * m - 2 * k, (m - k) as i64) * binomial(m + k, k as i64)) << (k as usize)
        })
        .collect()
}

/// `sum_{k=i}^{m} t_k C(k, i)`, stepping `C(k, i)` along `k`.
fn inner_sum(terms: &[Int], i: usize) -> Int {
    let mut choose = Int::one();
    let mut acc = Int::zero();
    for (k, t) in terms.iter().enumerate().skip(i) {
        if k > i {
            choose *= k as u64;
            choose /= (k - i) as u64;
        }
        acc += t * &choose;
    }
    acc
}

/// `b_i(m)` straight from the defining sum; zero outside `0..=m`.
pub fn b_direct(m: u32, i: i64) -> Int {
    if i < 0 || i > m as i64 {
        return Int::zero();
    }
    inner_sum(&outer_terms(m), i as usize)
}

pub fn row_direct(m: u32) -> CoeffRow {
    let terms = outer_terms(m);
    let b = (0..=m as usize).map(|i| inner_sum(&terms, i)).collect();
    CoeffRow { m, b }
}

/// Builds the row from `b_0, b_1` with the three-term recurrence
///
/// `i(i-1) b_i = (i-1)(2m+1) b_{i-1} - (m+2-i)(m+i-1) b_{i-2}`,  `i >= 2`.
///
/// Every division is checked for a zero remainder.
pub fn row_recurrence(m: u32) -> Result<CoeffRow> {
    let mut b = Vec::with_capacity(m as usize + 1);
    b.push(b_direct(m, 0));
    if m >= 1 {
        b.push(b_direct(m, 1));
    }
    let mm = m as u64;
    for i in 2..=mm {
        let num = &b[i as usize - 1] * ((i - 1) * (2 * mm + 1))
            - &b[i as usize - 2] * ((mm + 2 - i) * (mm + i - 1));
        let (q, r) = num.div_rem(&Int::from(i * (i - 1)));
        if !r.is_zero() {
            return Err(Error::NonIntegralStep {
                m,
                i: i as u32,
                remainder: r.to_string(),
            });
        }
        b.push(q);
    }
    Ok(CoeffRow { m, b })
}

/// `d_i(m)` in lowest terms; zero outside `0..=m`.
pub fn d(m: u32, i: i64) -> Rational {
    Rational::new(b_direct(m, i), four_pow(m))
}

/// `P_m(a) = sum_i d_i(m) a^i`.
pub fn eval_p(m: u32, a: &Rational) -> Rational {
    row_direct(m).eval(a)
}

/// Closed forms for the top three coefficients of `P_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormTriple {
    pub d_m: Rational,
    pub d_m_minus_1: Rational,
    pub d_m_minus_2: Rational,
}

/// `d_m = C(2m,m) / 2^m`, `d_{m-1} = (2m+1) C(2m,m) / 2^{m+1}` and
/// `d_{m-2} = (m-1)(4m^2+2m+1) C(2m,m) / (2^{m+2} (2m-1))`. Requires `m >= 2`.
pub fn closed_forms(m: u32) -> Result<ClosedFormTriple> {
    if m < 2 {
        return Err(Error::domain(format!(
            "closed forms need m >= 2, got m = {m}"
        )));
    }
    let central = binomial(2 * m as u64, m as i64);
    let mi = Int::from(m);
    let pow2 = |e: u32| Int::from(2u8).pow(e);

    let d_m = Rational::new(central.clone(), pow2(m));
    let d_m_minus_1 = Rational::new(&central * (2u32 * m + 1), pow2(m + 1));
    let top = (&mi - 1u32) * (4u32 * &mi * &mi + 2u32 * &mi + 1u32) * &central;
    let d_m_minus_2 = Rational::new(top, pow2(m + 2) * (2u32 * m - 1));
    Ok(ClosedFormTriple {
        d_m,
        d_m_minus_1,
        d_m_minus_2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::format_rational;

    fn ints(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| Int::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d))
    }

    // Term-by-term expansion of the defining sum with independently computed
    // binomials; no shared code with the stepping inner sum.
    fn oracle_b(m: u64, i: u64) -> Int {
        (i..=m)
            .map(|k| {
                Int::from(2u8).pow(k as u32)
                    * binomial(2 * m - 2 * k, (m - k) as i64)
                    * binomial(m + k, k as i64)
                    * binomial(k, i as i64)
            })
            .sum()
    }

    #[test]
    fn small_rows() {
        assert_eq!(row_direct(0).b_slice(), ints(&[1]).as_slice());
        assert_eq!(row_direct(1).b_slice(), ints(&[6, 4]).as_slice());
        assert_eq!(row_direct(2).b_slice(), ints(&[42, 60, 24]).as_slice());
        assert_eq!(row_direct(2).d_vec(), vec![q(21, 8), q(15, 4), q(3, 2)]);
        assert_eq!(b_direct(2, 0), Int::from(42));
        assert_eq!(b_direct(2, 2), Int::from(24));
        assert_eq!(b_direct(3, -1), Int::zero());
        assert_eq!(b_direct(3, 4), Int::zero());
    }

    #[test]
    fn direct_matches_termwise_oracle() {
        for m in 0..25u32 {
            let row = row_direct(m);
            for i in 0..=m {
                assert_eq!(
                    row.b(i as i64),
                    &oracle_b(m as u64, i as u64),
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn p8_row() {
        let expected = [
            "4023459/32768",
            "3283533/4096",
            "9804465/4096",
            "8625375/2048",
            "9695565/2048",
            "1772199/512",
            "819819/512",
            "109395/256",
            "6435/128",
        ];
        let got: Vec<String> = row_direct(8).d_vec().iter().map(format_rational).collect();
        assert_eq!(got, expected);
        assert_eq!(b_direct(8, 8), Int::from(3294720));
        assert_eq!(d(8, 8), q(6435, 128));
        assert_eq!(d(8, 0), q(4023459, 32768));
    }

    #[test]
    fn out_of_range_reads_zero() {
        let row = row_direct(3);
        assert!(row.b(-1).is_zero());
        assert!(row.b(4).is_zero());
        assert_eq!(row.d(7), Rational::zero());
        assert_eq!(d(5, 9), Rational::zero());
        assert_eq!(d(2, 1), q(15, 4));
    }

    #[test]
    fn recurrence_agrees_with_direct() {
        assert_eq!(
            row_recurrence(1).unwrap().b_slice(),
            ints(&[6, 4]).as_slice()
        );
        assert_eq!(
            row_recurrence(2).unwrap().b_slice(),
            ints(&[42, 60, 24]).as_slice()
        );
        for m in 0..60 {
            assert_eq!(row_recurrence(m).unwrap(), row_direct(m), "m={m}");
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_p(2, &q(1, 1)), q(63, 8));
        assert_eq!(eval_p(8, &Rational::zero()), q(4023459, 32768));
        assert_eq!(eval_p(0, &q(7, 3)), q(1, 1));
    }

    #[test]
    fn closed_forms_match_sum() {
        let cf = closed_forms(8).unwrap();
        assert_eq!(cf.d_m, q(6435, 128));
        assert_eq!(cf.d_m_minus_1, q(109395, 256));
        assert_eq!(cf.d_m_minus_2, q(819819, 512));
        let cf = closed_forms(2).unwrap();
        assert_eq!(cf.d_m, q(3, 2));
        assert_eq!(cf.d_m_minus_1, q(5, 2) * q(3, 2));
        for m in 2..40 {
            let cf = closed_forms(m).unwrap();
            assert_eq!(cf.d_m, d(m, m as i64));
            assert_eq!(cf.d_m_minus_1, d(m, m as i64 - 1));
            assert_eq!(cf.d_m_minus_2, d(m, m as i64 - 2));
        }
        assert!(matches!(closed_forms(1), Err(Error::Domain(_))));
        assert!(matches!(closed_forms(0), Err(Error::Domain(_))));
    }

    #[test]
    fn synthetic_rows() {
        assert!(CoeffRow::from_b(vec![]).is_err());
        assert!(CoeffRow::from_b(ints(&[1, 0, 1])).is_err());
        let row = CoeffRow::from_b(ints(&[1, 1, 1])).unwrap();
        assert_eq!(row.m(), 2);
    }
}
