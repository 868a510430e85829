//! Annihilating polynomials for truncated series.
//!
//! A [`BivariatePolynomial`] `P(t, y)` annihilates `f` to order `N` when
//! `P(t, f(t)) ≡ 0 mod t^{N+1}`. The search solves for the coefficients of
//! `P` as the kernel of an exact linear system, so a returned polynomial is
//! a certificate only up to the truncation order of `f`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::text::Cursor;

/// Extra equations demanded beyond the number of unknowns.
pub const GUESS_MARGIN: usize = 8;

/// Integer polynomial in `t` and `y`, keyed by `(t-degree, y-degree)`.
///
/// Always nonzero and normalized: the content is 1 and the coefficient
/// with the largest `(j, i)` (y-degree first) is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    /// Builds and normalizes; fails on the zero polynomial.
    pub fn new<I, C>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), C)>,
        C: Into<BigInt>,
    {
        let mut coeffs: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (k, c) in terms {
            *coeffs.entry(k).or_default() += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        if coeffs.is_empty() {
            return Err(Error::validation(
                "the zero polynomial is not a certificate",
            ));
        }
        let content = coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c));
        let lead = coeffs
            .iter()
            .max_by_key(|((i, j), _)| (*j, *i))
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        let div = if lead { -content } else { content };
        for c in coeffs.values_mut() {
            *c = &*c / &div;
        }
        Ok(BivariatePolynomial { coeffs })
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn deg_t(&self) -> usize {
        self.coeffs.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// `Σ c_ij tⁱ f(t)ʲ`, truncated to the order of `f`.
    pub fn evaluate_at_series(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let n = f.order();
        let powers = series_powers(f, self.deg_y());
        let mut out = vec![BigRational::zero(); n + 1];
        for (&(i, j), c) in &self.coeffs {
            if i > n {
                continue;
            }
            let c = BigRational::from_integer(c.clone());
            for (k, p) in powers[j].coeffs()[..=n - i].iter().enumerate() {
                if !p.is_zero() {
                    out[k + i] += &c * p;
                }
            }
        }
        TruncatedSeries::new(out)
    }

    /// Whether `P(t, f(t))` vanishes to the order of `f`.
    pub fn annihilates(&self, f: &TruncatedSeries) -> bool {
        self.evaluate_at_series(f).is_zero()
    }

    /// `P(λt, y)`, normalized.
    pub fn rescale_t(&self, lambda: &BigInt) -> Result<Self> {
        Self::new(
            self.coeffs
                .iter()
                .map(|(&(i, j), c)| ((i, j), c * lambda.pow(i as u32))),
        )
    }

    /// Parses sums of products such as `16*t^6*y^2 + -1 + 9*t^2` or
    /// `2 y^2 - y + t^2`; factors may be joined by `*` or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let mut terms: Vec<((usize, usize), BigInt)> = Vec::new();
        let mut negate_next = false;
        loop {
            cur.skip_ws();
            let mut neg = negate_next;
            if cur.eat('-') {
                neg = !neg;
            }
            let mut c = BigInt::one();
            let (mut i, mut j) = (0usize, 0usize);
            let mut factors = 0;
            loop {
                cur.skip_ws();
                if factors > 0 && cur.eat('*') {
                    cur.skip_ws();
                }
                if let Some(d) = cur.digits() {
                    c *= d
                        .parse::<BigInt>()
                        .map_err(|_| cur.error("malformed integer"))?;
                } else if let Some(name) = cur.ident() {
                    let exp = if cur.eat('^') {
                        cur.skip_ws();
                        let e = cur
                            .digits()
                            .ok_or_else(|| cur.error("expected a nonnegative exponent"))?;
                        e.parse::<usize>()
                            .map_err(|_| cur.error("exponent too large"))?
                    } else {
                        1
                    };
                    match name {
                        "t" => i += exp,
                        "y" => j += exp,
                        other => {
                            return Err(
                                cur.error(format!("unknown variable '{other}', expected t or y"))
                            )
                        }
                    }
                } else {
                    break;
                }
                factors += 1;
            }
            if factors == 0 {
                return Err(cur.error("expected a term"));
            }
            terms.push(((i, j), if neg { -c } else { c }));
            if cur.eat('+') {
                negate_next = false;
            } else if cur.eat('-') {
                negate_next = true;
            } else {
                break;
            }
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        Self::new(terms)
    }
}

/// Terms `c * t^i * y^j` joined by ` + `, sorted by `(j, i)`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by_key(|((i, j), _)| (*j, *i));
        for (k, ((i, j), c)) in keys.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * t^{i} * y^{j}")?;
        }
        Ok(())
    }
}

fn series_powers(f: &TruncatedSeries, max: usize) -> Vec<TruncatedSeries> {
    let mut powers = vec![TruncatedSeries::one(f.order())];
    for _ in 0..max {
        let next = powers.last().unwrap().mul(f).expect("same order");
        powers.push(next);
    }
    powers
}

/// Basis of `{v : A v = 0}` for an exact `rows × cols` matrix.
///
/// Rows are scaled to integers and reduced by fraction-free (Bareiss)
/// elimination with largest-magnitude pivoting; each basis vector is
/// returned as a primitive integer vector, one per free column in
/// increasing column order.
pub fn exact_kernel(rows: &[Vec<BigRational>], cols: usize) -> Result<Vec<Vec<BigRational>>> {
    if let Some(r) = rows.iter().position(|r| r.len() != cols) {
        return Err(Error::validation(format!(
            "row {r} does not have {cols} columns"
        )));
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();

    let nrows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .max_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()).then(y.cmp(&x)))
        else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row[c + 1..].iter_mut() {
                    *x = &*x * &pivot_row[c] / &prev;
                }
            } else {
                for j in c + 1..cols {
                    let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    debug_assert!((&v % &prev).is_zero());
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    let mut basis = Vec::new();
    let is_pivot: Vec<bool> = (0..cols).map(|c| pivots.contains(&c)).collect();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![BigRational::zero(); cols];
        x[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut s = BigRational::zero();
            for j in pc + 1..cols {
                if !a[row][j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from_integer(a[row][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / BigRational::from_integer(a[row][pc].clone());
        }
        basis.push(primitive(x));
    }
    Ok(basis)
}

fn primitive(v: Vec<BigRational>) -> Vec<BigRational> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &g))
        .collect()
}

/// Smallest `(deg_y, deg_t)` annihilator of `f` within the bounds, or
/// `None`. Requires `f.order() >= (deg_t + 1)(deg_y + 1) + 8`.
pub fn guess_annihilator(
    f: &TruncatedSeries,
    deg_t: usize,
    deg_y: usize,
) -> Result<Option<BivariatePolynomial>> {
    let required = (deg_t + 1) * (deg_y + 1) + GUESS_MARGIN;
    if f.order() < required {
        return Err(Error::validation(format!(
            "guessing with bounds deg_t = {deg_t}, deg_y = {deg_y} needs a series of order at least {required}, got {}",
            f.order()
        )));
    }
    let n = f.order();
    let powers = series_powers(f, deg_y);
    for dy in 1..=deg_y {
        for dt in 0..=deg_t {
            let unknowns: Vec<(usize, usize)> = (0..=dy)
                .flat_map(|j| (0..=dt).map(move |i| (i, j)))
                .collect();
            let rows: Vec<Vec<BigRational>> = (0..=n)
                .map(|k| {
                    unknowns
                        .iter()
                        .map(|&(i, j)| {
                            if k >= i {
                                powers[j].coeff(k - i)
                            } else {
                                BigRational::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            let kernel = exact_kernel(&rows, unknowns.len())?;
            if let Some(v) = kernel.into_iter().next() {
                let p = BivariatePolynomial::new(
                    unknowns
                        .iter()
                        .copied()
                        .zip(v.into_iter().map(|x| x.to_integer())),
                )?;
                debug_assert!(p.annihilates(f));
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}
