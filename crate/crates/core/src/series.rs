//! Truncated power series `c_0 + c_1 t + … + c_N t^N` over exact rationals.
//!
//! The truncation order is part of the value: binary operations on series
//! of different orders are errors, never silent re-truncations.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn ratio(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl TruncatedSeries {
    /// The series with the given coefficients; its order is `len − 1`.
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(ratio).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// `c·t^k`, truncated (zero if `k > order`).
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `t` at the given order.
    pub fn variable(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`, or pads with zeros.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let g0 = &other.coeffs[0];
        if g0.is_zero() {
            return Err(Error::validation(
                "division by a series with zero constant term",
            ));
        }
        let n = self.order();
        let mut q: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                if !other.coeffs[i].is_zero() {
                    acc -= &other.coeffs[i] * &q[k - i];
                }
            }
            q.push(acc / g0);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `exp(f)` for `f(0) = 0`, via `n g_n = Σ_{k=1}^{n} k f_k g_{n−k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::validation(
                "exp needs a series with zero constant term",
            ));
        }
        let n = self.order();
        let mut g = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g[m - k] * ratio(k);
                }
            }
            g.push(acc / ratio(m));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `log(f)` for `f(0) = 1`, via `n g_n = n f_n − Σ_{k=1}^{n−1} k g_k f_{n−k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::validation("log needs a series with constant term 1"));
        }
        let n = self.order();
        let mut g = vec![BigRational::zero()];
        for m in 1..=n {
            let mut acc = &self.coeffs[m] * ratio(m);
            for k in 1..m {
                if !self.coeffs[m - k].is_zero() {
                    acc -= &g[k] * &self.coeffs[m - k] * ratio(k);
                }
            }
            g.push(acc / ratio(m));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// The square root with constant term 1, for `f(0) = 1`, via
    /// `2 g_n = f_n − Σ_{k=1}^{n−1} g_k g_{n−k}`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::validation(
                "sqrt needs a series with constant term 1",
            ));
        }
        let n = self.order();
        let two = ratio(2);
        let mut g = vec![BigRational::one()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                acc -= &g[k] * &g[m - k];
            }
            g.push(acc / &two);
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Termwise `d/dt`; the order drops by one (an order-0 series maps to
    /// the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * ratio(k + 1))
                .collect(),
        }
    }

    /// Multiplication by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Division by `t^k`: requires the first `k` coefficients to vanish;
    /// the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::validation(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order()
            )));
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::validation(format!(
                "coefficient of t^{i} is nonzero, series is not divisible by t^{k}"
            )));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `t·f'/f` at the order of `f`.
    pub fn log_derivative(&self) -> Result<Self> {
        let n = self.order();
        let tf = self.derivative().truncate(n).shift_up(1);
        tf.div(self)
    }

    /// `f(λt)`: coefficient `k` multiplied by `λ^k`.
    pub fn rescale(&self, lambda: &BigRational) -> Self {
        let mut p = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &p);
            p *= lambda;
        }
        TruncatedSeries { coeffs }
    }

    /// Every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `Σ a_n tⁿ` with zero constant term; order `a.len()`.
    pub fn generating_from_counts(a: &[BigInt]) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(a.iter().cloned().map(BigRational::from_integer));
        TruncatedSeries { coeffs }
    }

    /// `exp(Σ a_n tⁿ/n)`; order `a.len()`.
    pub fn zeta_from_counts(a: &[BigInt]) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(
            a.iter()
                .enumerate()
                .map(|(k, c)| BigRational::new(c.clone(), BigInt::from(k + 1))),
        );
        TruncatedSeries { coeffs }
            .exp()
            .expect("constant term is zero")
    }

    /// The integer coefficients, if the series is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// One line per coefficient: `k: p/q`, or `k: p` for integers.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{k}: {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().copied())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn harmonic(order: usize) -> TruncatedSeries {
        let mut c = vec![BigRational::zero()];
        c.extend((1..=order).map(|n| q(1, n as i64)));
        TruncatedSeries::new(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(
            ints(&[1, 1, 0]).mul(&ints(&[1, -1, 0])).unwrap(),
            ints(&[1, 0, -1])
        );
        assert_eq!(
            TruncatedSeries::one(5)
                .div(&ints(&[1, -1, 0, 0, 0, 0]))
                .unwrap(),
            ints(&[1; 6])
        );
        let f = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(f.div(&f).unwrap(), TruncatedSeries::one(4));
        assert!(matches!(
            f.div(&ints(&[0, 1, 0, 0, 0])),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            f.add(&ints(&[1])),
            Err(Error::OrderMismatch { left: 4, right: 0 })
        ));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(
            TruncatedSeries::zero(6).exp().unwrap(),
            TruncatedSeries::one(6)
        );
        assert_eq!(harmonic(8).exp().unwrap(), ints(&[1; 9]));
        let e = TruncatedSeries::variable(6).exp().unwrap();
        let mut fact = 1i64;
        for k in 0..=6 {
            if k > 0 {
                fact *= k as i64;
            }
            assert_eq!(e.coeff(k), q(1, fact));
        }
        assert!(!e.is_integral());
        assert!(ints(&[1, 1]).exp().is_err());
    }

    #[test]
    fn log_examples() {
        assert!(TruncatedSeries::one(5).log().unwrap().is_zero());
        assert_eq!(ints(&[1; 8]).log().unwrap(), harmonic(7));
        let f = ints(&[0, 1, 1, 0, 0, 0]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        assert!(ints(&[2, 1]).log().is_err());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(
            TruncatedSeries::one(4).sqrt().unwrap(),
            TruncatedSeries::one(4)
        );
        assert_eq!(
            ints(&[1, 2, 1, 0, 0]).sqrt().unwrap(),
            ints(&[1, 1, 0, 0, 0])
        );
        // sqrt(1 − 4t) = 1 − Σ 2 C_{k−1} t^k with Catalan numbers computed
        // by their own recurrence.
        let n = 10;
        let mut catalan = vec![BigInt::one()];
        for m in 1..n {
            let next: BigInt = (0..m).map(|i| &catalan[i] * &catalan[m - 1 - i]).sum();
            catalan.push(next);
        }
        let mut f = vec![1i64, -4];
        f.resize(n + 1, 0);
        let s = ints(&f).sqrt().unwrap();
        assert_eq!(s.coeff(0), q(1, 1));
        for k in 1..=n {
            assert_eq!(
                s.coeff(k),
                BigRational::from_integer(-BigInt::from(2) * &catalan[k - 1])
            );
        }
        assert_eq!(s.mul(&s).unwrap(), ints(&f));
        assert!(ints(&[4, 1]).sqrt().is_err());
    }

    #[test]
    fn counts_examples() {
        let g = TruncatedSeries::generating_from_counts(&[0, 6, 0, 30].map(BigInt::from));
        assert_eq!(g, ints(&[0, 0, 6, 0, 30]));
        assert_eq!(TruncatedSeries::generating_from_counts(&[]), ints(&[0]));
        assert_eq!(
            TruncatedSeries::generating_from_counts(&[1, 1, 1].map(BigInt::from)),
            ints(&[0, 1, 1, 1])
        );

        assert_eq!(
            TruncatedSeries::zeta_from_counts(&vec![BigInt::one(); 7]),
            ints(&[1; 8])
        );
        let counts = [0, 6, 0, 30, 0, 174, 0, 1086, 0, 7086].map(BigInt::from);
        assert_eq!(
            TruncatedSeries::zeta_from_counts(&counts),
            ints(&[1, 0, 3, 0, 12, 0, 56, 0, 288, 0, 1584])
        );
        let mut a = vec![BigInt::zero(); 6];
        a[0] = BigInt::one();
        assert_eq!(
            TruncatedSeries::zeta_from_counts(&a),
            TruncatedSeries::variable(6).exp().unwrap()
        );
    }

    #[test]
    fn rescale_and_integrality() {
        let f = ints(&[1, 1]);
        assert_eq!(f.rescale(&q(1, 1)), f);
        assert_eq!(f.rescale(&q(2, 1)), ints(&[1, 2]));
        assert!(ints(&[1, 0, 3]).is_integral());
        assert!(
            TruncatedSeries::zeta_from_counts(&[0, 6, 0, 30, 0, 174].map(BigInt::from))
                .is_integral()
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(ints(&[1, 0, 3]).derivative(), ints(&[0, 6]));
        assert!(ints(&[7, 0, 0]).derivative().is_zero());
        assert_eq!(ints(&[5]).derivative(), ints(&[0]));
        let geometric = ints(&[1; 7]);
        let mut expected = vec![1i64; 7];
        expected[0] = 0;
        assert_eq!(geometric.log_derivative().unwrap(), ints(&expected));
    }

    #[test]
    fn shifts() {
        let f = ints(&[0, 0, 1, 2]);
        assert_eq!(f.shift_down(2).unwrap(), ints(&[1, 2]));
        assert!(f.shift_down(3).is_err());
        assert_eq!(ints(&[1, 2, 3]).shift_up(1), ints(&[0, 1, 2]));
    }

    #[test]
    fn display_format() {
        let s = TruncatedSeries::new(vec![q(1, 1), q(-1, 2), q(0, 1)]);
        assert_eq!(s.to_string(), "0: 1\n1: -1/2\n2: 0\n");
    }

    fn small_series(constant: Option<i64>) -> impl Strategy<Value = TruncatedSeries> {
        (0usize..=12)
            .prop_flat_map(|n| prop::collection::vec((-9i64..=9, 1i64..=5), n + 1))
            .prop_map(move |v| {
                let mut c: Vec<BigRational> = v.into_iter().map(|(a, b)| q(a, b)).collect();
                if let Some(k) = constant {
                    c[0] = q(k, 1);
                }
                TruncatedSeries::new(c)
            })
    }

    proptest! {
        #[test]
        fn exp_log_round_trips(f in small_series(Some(0))) {
            let e = f.exp().unwrap();
            prop_assert_eq!(e.log().unwrap(), f.clone());
            prop_assert_eq!(e.mul(&f.neg().exp().unwrap()).unwrap(), TruncatedSeries::one(f.order()));
            let g = f.add(&TruncatedSeries::one(f.order())).unwrap();
            prop_assert_eq!(g.log().unwrap().exp().unwrap(), g);
        }

        #[test]
        fn sqrt_squares_back(f in small_series(Some(1))) {
            let s = f.sqrt().unwrap();
            prop_assert_eq!(s.mul(&s).unwrap(), f);
        }

        #[test]
        fn div_inverts_mul(f in small_series(None), g in small_series(Some(1))) {
            let g = g.truncate(f.order());
            prop_assert_eq!(f.div(&g).unwrap().mul(&g).unwrap(), f);
        }

        #[test]
        fn log_derivative_recovers_counts(a in prop::collection::vec(-50i64..=50, 1..=12)) {
            let counts: Vec<BigInt> = a.iter().map(|&x| x.into()).collect();
            let zeta = TruncatedSeries::zeta_from_counts(&counts);
            prop_assert_eq!(zeta.log_derivative().unwrap(), TruncatedSeries::generating_from_counts(&counts));
        }
    }
}
