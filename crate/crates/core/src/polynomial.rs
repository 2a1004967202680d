//! Sparse multivariate polynomials with integer coefficients, and the
//! operators `∂_i`, `π_i`, `π̄_i` and `θ_i`.
//!
//! All operators are computed monomial by monomial through closed forms, so
//! nothing is ever divided. For a monomial with exponents `(p, q)` in
//! positions `(i, i+1)`:
//!
//! * `∂_i`: `Σ_{t=q}^{p-1} x^(t, p+q-1-t)` when `p > q`, zero when `p = q`,
//!   and `-Σ_{t=p}^{q-1} x^(t, p+q-1-t)` when `p < q`;
//! * `π_i = ∂_i x_i` is `∂_i` applied to `(p + 1, q)`;
//! * `π̄_i = π_i - 1`;
//! * `θ_i` replaces `(p, q)` by `(p-1, q+1), ..., (q, p)` when `p > q` and
//!   vanishes otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinat::{check_index, WeakComposition};
use crate::{Error, Result};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// The operator families that can be applied along a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    DividedDifference,
    Pi,
    PiBar,
    Theta,
}

impl Operator {
    pub fn apply(self, f: &Polynomial, i: usize) -> Result<Polynomial> {
        match self {
            Operator::DividedDifference => f.divided_difference(i),
            Operator::Pi => f.pi(i),
            Operator::PiBar => f.pibar(i),
            Operator::Theta => f.theta(i),
        }
    }
}

/// A polynomial in `x_1, ..., x_n` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(vec![0; nvars], BigInt::one())
    }

    /// `x^γ`.
    pub fn monomial(exponents: &WeakComposition) -> Self {
        Self::term(exponents.parts().to_vec(), BigInt::one())
    }

    /// `x_i` for 1-based `i`.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::term(e, BigInt::one())
    }

    pub fn term(exponents: Exponents, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients (the value at `x = (1, ..., 1)`).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exponents: Exponents, coeff: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_assign_scaled(&mut self, other: &Polynomial, scale: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * scale);
        }
    }

    /// Maps each term to a polynomial and sums the results.
    fn map_terms<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&[u32], &BigInt, &mut Polynomial),
    {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            f(e, c, &mut out);
        }
        out
    }

    fn check(&self, i: usize) -> Result<()> {
        check_index(i, self.nvars)
    }

    /// `s_i f`: exchanges the exponents of `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Polynomial> {
        self.check(i)?;
        Ok(self.map_terms(|e, c, out| {
            let mut e = e.to_vec();
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }))
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Polynomial> {
        self.check(i)?;
        Ok(self.map_terms(|e, c, out| divided_difference_term(e, c, i, 0, out)))
    }

    /// `π_i f = ∂_i (x_i f)`.
    pub fn pi(&self, i: usize) -> Result<Polynomial> {
        self.check(i)?;
        Ok(self.map_terms(|e, c, out| divided_difference_term(e, c, i, 1, out)))
    }

    /// `π̄_i f = π_i f - f`.
    pub fn pibar(&self, i: usize) -> Result<Polynomial> {
        Ok(&self.pi(i)? - self)
    }

    /// `θ_i`, applied term by term, with `k = m_i - m_{i+1}`.
    ///
    /// For `k >= 1` a monomial becomes the sum of the `k` monomials obtained
    /// by moving one to `k` units of exponent from `x_i` to `x_{i+1}`; for
    /// `k = 0` it vanishes. For `k < 0` the mirrored move is taken with a
    /// minus sign: `-(x_i^0 ... x_i^{-k-1})` times the remaining factors,
    /// i.e. moving zero to `-k - 1` units from `x_{i+1}` to `x_i`. Without
    /// that branch the word `x^λ θ_{i1} ... θ_{ik}` depends on the reduced
    /// word and can miss the atom for every choice; see [`theta_truncated`].
    ///
    /// [`theta_truncated`]: Polynomial::theta_truncated
    pub fn theta(&self, i: usize) -> Result<Polynomial> {
        self.check(i)?;
        Ok(self.map_terms(|e, c, out| {
            let (p, q) = (e[i - 1], e[i]);
            if p >= q {
                theta_down(e, c, i, out);
            } else {
                for moved in 0..q - p {
                    let mut e = e.to_vec();
                    e[i - 1] = p + moved;
                    e[i] = q - moved;
                    out.add_term(e, -c);
                }
            }
        }))
    }

    /// `θ_i` with every monomial of `k <= 0` sent to zero.
    pub fn theta_truncated(&self, i: usize) -> Result<Polynomial> {
        self.check(i)?;
        Ok(self.map_terms(|e, c, out| theta_down(e, c, i, out)))
    }

    /// Applies `op_{i1} ∘ op_{i2} ∘ ... ∘ op_{ik}` for `word = (i1, ..., ik)`:
    /// the last letter acts first.
    pub fn apply_word(&self, word: &[usize], op: Operator) -> Result<Polynomial> {
        self.apply_word_with(word, |f, i| op.apply(f, i))
    }

    /// Like [`Polynomial::apply_word`] with a caller-supplied operator.
    pub fn apply_word_with<F>(&self, word: &[usize], mut op: F) -> Result<Polynomial>
    where
        F: FnMut(&Polynomial, usize) -> Result<Polynomial>,
    {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = op(&f, i)?;
        }
        Ok(f)
    }

    /// Whether every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficient-wise `self <= other`.
    pub fn is_dominated_by(&self, other: &Polynomial) -> bool {
        self.terms.iter().all(|(e, c)| c <= &other.coeff(e))
            && other.terms.iter().all(|(e, c)| self.terms.contains_key(e) || !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: serde_json::Value,
            exponents: &'a [u32],
        }
        let terms: Vec<Term> = self
            .terms()
            .map(|(e, c)| Term {
                coeff: match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                },
                exponents: e,
            })
            .collect();
        serde_json::to_value(terms).expect("polynomial terms serialize")
    }

    pub fn from_json(value: &serde_json::Value, nvars: usize) -> Result<Polynomial> {
        let bad = |msg: &str| Error::InvalidFilling(format!("polynomial JSON: {msg}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = Polynomial::zero(nvars);
        for item in items {
            let coeff: BigInt = match &item["coeff"] {
                serde_json::Value::Number(n) => n.to_string().parse().map_err(|_| bad("coeff"))?,
                serde_json::Value::String(s) => s.parse().map_err(|_| bad("coeff"))?,
                _ => return Err(bad("coeff")),
            };
            let exps: Vec<u32> = serde_json::from_value(item["exponents"].clone())
                .map_err(|_| bad("exponents"))?;
            if exps.len() != nvars {
                return Err(Error::VariableCount { expected: nvars, found: exps.len() });
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

fn theta_down(e: &[u32], c: &BigInt, i: usize, out: &mut Polynomial) {
    let (p, q) = (e[i - 1], e[i]);
    for moved in 1..=p.saturating_sub(q) {
        let mut e = e.to_vec();
        e[i - 1] = p - moved;
        e[i] = q + moved;
        out.add_term(e, c.clone());
    }
}

// Adds c·(∂_i x_i^shift) x^e to `out`.
fn divided_difference_term(e: &[u32], c: &BigInt, i: usize, shift: u32, out: &mut Polynomial) {
    let (p, q) = (e[i - 1] + shift, e[i]);
    let (lo, hi, coeff) = match p.cmp(&q) {
        std::cmp::Ordering::Equal => return,
        std::cmp::Ordering::Greater => (q, p, c.clone()),
        std::cmp::Ordering::Less => (p, q, -c),
    };
    for t in lo..hi {
        let mut e = e.to_vec();
        e[i - 1] = t;
        e[i] = p + q - 1 - t;
        out.add_term(e, coeff.clone());
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &BigInt::one());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-BigInt::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.map_terms(|e, c, out| out.add_term(e.to_vec(), -c))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let Some(mut acc) = iter.next() else {
            panic!("sum of an empty polynomial iterator has no variable count");
        };
        for p in iter {
            acc.add_assign_scaled(&p, &BigInt::one());
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    /// `x1^2*x2 + 2*x1*x3 - x2`, terms in descending lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| match a {
                    1 => format!("x{}", j + 1),
                    _ => format!("x{}^{}", j + 1, a),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}
