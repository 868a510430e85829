//! The built-in matrix families and exact evaluations of their closed-form
//! series.
//!
//! * `kontsevich:n`: the 1×1 matrix `X_1 + X_1⁻¹ + ⋯ + X_n + X_n⁻¹`.
//! * `paper2x2`: `[[a + a⁻¹, b], [b⁻¹, d + d⁻¹]]`.
//! * `paperdxd:d`: diagonal `a_i + a_i⁻¹`, `b_ij` above the diagonal and
//!   `b_ji⁻¹` below it, for `d ≥ 3`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};
use crate::freegroup::{Generators, ReducedWord};
use crate::group_algebra::AlgebraElement;
use crate::matrix::AlgebraMatrix;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    Kontsevich(u32),
    TwoByTwo,
    DByD(usize),
}

impl ExampleId {
    fn validate(self) -> Result<Self> {
        match self {
            ExampleId::Kontsevich(0) => {
                Err(Error::validation("kontsevich needs at least one generator"))
            }
            ExampleId::DByD(d) if d < 3 => Err(Error::validation(format!(
                "the d×d family needs d >= 3, got {d}"
            ))),
            other => Ok(other),
        }
    }

    pub fn generators(self) -> Result<Generators> {
        let names: Vec<String> = match self.validate()? {
            ExampleId::Kontsevich(n) => (1..=n).map(|k| format!("x{k}")).collect(),
            ExampleId::TwoByTwo => vec!["a".into(), "b".into(), "d".into()],
            ExampleId::DByD(d) => {
                let mut names: Vec<String> = (1..=d).map(|i| format!("a_{i}")).collect();
                for i in 1..=d {
                    for j in i + 1..=d {
                        names.push(if d < 10 {
                            format!("b_{i}{j}")
                        } else {
                            format!("b_{i}_{j}")
                        });
                    }
                }
                names
            }
        };
        Generators::from_names(names)
    }

    pub fn build(self) -> Result<AlgebraMatrix> {
        let sym = |g: i32| {
            AlgebraElement::from_terms([(ReducedWord::letter(g), 1), (ReducedWord::letter(-g), 1)])
        };
        let single = |g: i32| AlgebraElement::monomial(1, ReducedWord::letter(g));
        match self.validate()? {
            ExampleId::Kontsevich(n) => {
                let mut e = AlgebraElement::zero();
                for g in 1..=n as i32 {
                    e = &e + &sym(g);
                }
                AlgebraMatrix::from_entries(1, vec![e])
            }
            ExampleId::TwoByTwo => {
                AlgebraMatrix::from_entries(2, vec![sym(1), single(2), single(-2), sym(3)])
            }
            ExampleId::DByD(d) => {
                let gens = self.generators()?;
                let b = |i: usize, j: usize| {
                    let name = if d < 10 {
                        format!("b_{i}{j}")
                    } else {
                        format!("b_{i}_{j}")
                    };
                    gens.id(&name).expect("declared")
                };
                let mut m = AlgebraMatrix::zero(d)?;
                for i in 1..=d {
                    for j in 1..=d {
                        let e = match i.cmp(&j) {
                            std::cmp::Ordering::Equal => sym(i as i32),
                            std::cmp::Ordering::Less => single(b(i, j)),
                            std::cmp::Ordering::Greater => single(-b(j, i)),
                        };
                        m.set(i - 1, j - 1, e);
                    }
                }
                Ok(m)
            }
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExampleId::Kontsevich(n) => write!(f, "kontsevich:{n}"),
            ExampleId::TwoByTwo => f.write_str("paper2x2"),
            ExampleId::DByD(d) => write!(f, "paperdxd:{d}"),
        }
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::validation(format!(
                "unknown built-in '{s}' (expected kontsevich:<n>, paper2x2 or paperdxd:<d>)"
            ))
        };
        let id = match s.split_once(':') {
            None if s == "paper2x2" => ExampleId::TwoByTwo,
            Some(("kontsevich", n)) => ExampleId::Kontsevich(n.parse().map_err(|_| bad())?),
            Some(("paperdxd", d)) => ExampleId::DByD(d.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        id.validate()
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `1 + c·t²` at the given order.
fn one_plus_ct2(c: BigRational, order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .add(&TruncatedSeries::monomial(c, 2, order))
        .expect("same order")
}

/// `(1 − 4d t²)^{1/2}`; `d = 2` gives the `(1 − 8t²)^{1/2}` of the 2×2 case.
fn radical(d: i64, order: usize) -> TruncatedSeries {
    one_plus_ct2(int(-4 * d), order)
        .sqrt()
        .expect("constant term 1")
}

/// `d(d+1)/2 · ((1 − 4dt²)^{1/2} − 1 + 2(d+1)t²) / (1 − (d+1)²t²)`. At `d = 2`
/// this is the 2×2 generating series.
fn g_family(d: i64, order: usize) -> TruncatedSeries {
    let numer = radical(d, order)
        .sub(&one_plus_ct2(int(-2 * (d + 1)), order))
        .expect("same order");
    let denom = one_plus_ct2(int(-(d + 1) * (d + 1)), order);
    numer
        .div(&denom)
        .expect("unit denominator")
        .scale(&frac(d * (d + 1), 2))
}

/// Closed form of `g_M = Σ a_n(M) tⁿ`.
pub fn closed_g(id: ExampleId, order: usize) -> Result<TruncatedSeries> {
    match id.validate()? {
        ExampleId::TwoByTwo => Ok(g_family(2, order)),
        ExampleId::DByD(d) => Ok(g_family(d as i64, order)),
        ExampleId::Kontsevich(_) => Err(Error::validation(
            "no separate closed form of g for kontsevich; take the log-derivative of closed_p",
        )),
    }
}

/// Closed form of the zeta function `P_M`.
pub fn closed_p(id: ExampleId, order: usize) -> Result<TruncatedSeries> {
    match id.validate()? {
        ExampleId::TwoByTwo => {
            // ((1 − 8t²)^{3/2} − 1 + 12t² − 24t⁴) / (32 t⁶)
            let n = order + 6;
            let s = radical(2, n);
            let cube = s.mul(&one_plus_ct2(int(-8), n)).expect("same order");
            let poly =
                TruncatedSeries::new([1i64, 0, -12, 0, 24].iter().map(|&c| int(c)).collect())
                    .truncate(n);
            let numer = cube.sub(&poly).expect("same order");
            Ok(numer.shift_down(6)?.scale(&frac(1, 32)))
        }
        ExampleId::Kontsevich(n) => {
            // 2ⁿ/(2n−1)^{n−1} · (n − 1 + n s)^{n−1} / (1 + s)ⁿ,  s = (1 − 4(2n−1)t²)^{1/2}
            let n = n as i64;
            let s = one_plus_ct2(int(-4 * (2 * n - 1)), order)
                .sqrt()
                .expect("constant term 1");
            let one = TruncatedSeries::one(order);
            let top = s
                .scale(&int(n))
                .add(&one.scale(&int(n - 1)))?
                .pow((n - 1) as u32);
            let bottom = s.add(&one)?.pow(n as u32);
            let prefactor = BigRational::new(
                BigInt::from(2).pow(n as u32),
                BigInt::from(2 * n - 1).pow((n - 1) as u32),
            );
            Ok(top.div(&bottom)?.scale(&prefactor))
        }
        ExampleId::DByD(_) => Err(Error::validation(
            "no closed form of the zeta function is known for the d×d family; use dxd_p_prefix",
        )),
    }
}

/// Coefficient of `t^{2n}` in the 2×2 zeta function:
/// `3·2ⁿ/((n+2)(n+3)) · binom(2n+2, n+1)`.
pub fn two_by_two_p_coefficient(n: u32) -> BigRational {
    let n64 = n as i64;
    let binom = binomial(2 * n as u64 + 2, n as u64 + 1);
    BigRational::new(
        BigInt::from(3) * BigInt::from(2).pow(n) * binom,
        BigInt::from((n64 + 2) * (n64 + 3)),
    )
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The known expansion of the d×d zeta function through `t⁸`, as a series
/// of order `order <= 8`.
pub fn dxd_p_prefix(d: usize, order: usize) -> Result<TruncatedSeries> {
    if d < 3 {
        return Err(Error::validation(format!(
            "the d×d family needs d >= 3, got {d}"
        )));
    }
    if order > 8 {
        return Err(Error::validation(format!(
            "the d×d expansion is only known through t^8, asked for order {order}"
        )));
    }
    let d = BigInt::from(d);
    let poly = |cs: &[i64]| cs.iter().fold(BigInt::from(0), |acc, &c| acc * &d + c);
    let base: BigInt = &d * (&d + BigInt::one());
    let c2 = BigRational::new(base.clone(), 2.into());
    let c4 = BigRational::new(&base * poly(&[1, 5, 2]), 8.into());
    let c6 = BigRational::new(&base * poly(&[1, 14, 59, 38, 8]), 48.into());
    let c8 = BigRational::new(&base * poly(&[1, 27, 271, 1105, 904, 332, 48]), 384.into());
    let zero = || int(0);
    let full = TruncatedSeries::new(vec![int(1), zero(), c2, zero(), c4, zero(), c6, zero(), c8]);
    Ok(full.truncate(order))
}

/// `u = (1 − (1 − 4dt²)^{1/2}) / (2d)`, the root of `u(1 − du) = t²` with
/// `u(0) = 0`. At `d = 2` this is the root of `2u² − u + t² = 0`.
pub fn u_series(d: usize, order: usize) -> TruncatedSeries {
    let d = d as i64;
    TruncatedSeries::one(order)
        .sub(&radical(d, order))
        .expect("same order")
        .scale(&frac(1, 2 * d))
}
