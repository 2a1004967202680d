//! Demazure atoms, right keys and key polynomials, plus fillings over a
//! permuted basement.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, Permutation, WeakComposition};
use crate::polynomial::{Operator, Polynomial};
use crate::ssaf::{self, check_shape, e_poly, psi, TripleReport};
use crate::tableaux::{key_of_composition, Key, Ssyt};
use crate::{Error, Result, Ssaf};

/// Re-pads `lam` to `n` parts.
pub(crate) fn fit(lam: &Partition, n: usize) -> Result<Partition> {
    Partition::new(lam.nonzero_parts().to_vec(), n)
}

/// The shortest permutation sending `lam` to `w(lam)`.
fn coset_min(w: &Permutation, lam: &Partition) -> Result<Permutation> {
    Ok(Permutation::of_composition(&w.act(lam)?))
}

/// `𝔘(w, λ)` as `E_{w(λ)}(x; 0, 0)`.
pub fn atom_via_ssaf(w: &Permutation, lam: &Partition) -> Result<Polynomial> {
    let lam = fit(lam, w.n())?;
    Ok(e_poly(&w.act(&lam)?))
}

/// `𝔘(w, λ) = π̄_w x^λ`.
///
/// The atom only depends on `w(λ)`, so `w` is first replaced by the shortest
/// permutation with the same image of `λ`. Applying `π̄` along a longer
/// representative would kill the monomial (`π̄_i x^λ = 0` when
/// `λ_i = λ_{i+1}`).
pub fn atom_via_operators(w: &Permutation, lam: &Partition) -> Result<Polynomial> {
    atom_via_word(w, lam, |f, i| f.pibar(i))
}

/// `𝔘(w, λ) = x^λ θ_{i1} ... θ_{ik}` along a reduced word of the shortest
/// representative of `w` in its coset.
pub fn atom_via_theta(w: &Permutation, lam: &Partition) -> Result<Polynomial> {
    atom_via_word(w, lam, |f, i| f.theta(i))
}

/// [`atom_via_theta`] with a caller-supplied `θ`; used to check that the
/// verification sweep notices a broken operator.
pub fn atom_via_word<F>(w: &Permutation, lam: &Partition, op: F) -> Result<Polynomial>
where
    F: FnMut(&Polynomial, usize) -> Result<Polynomial>,
{
    let lam = fit(lam, w.n())?;
    let tau = coset_min(w, &lam)?;
    Polynomial::monomial(&lam.as_composition()).apply_word_with(&tau.reduced_word(), op)
}

/// `κ_{w(λ)} = π_w x^λ`.
pub fn key_poly_via_operators(w: &Permutation, lam: &Partition) -> Result<Polynomial> {
    let lam = fit(lam, w.n())?;
    Polynomial::monomial(&lam.as_composition()).apply_word(&w.reduced_word(), Operator::Pi)
}

/// Compositions `α` rearranging `γ` with `α <= γ` in the Bruhat order on
/// minimal coset representatives.
pub fn bruhat_interval(gamma: &WeakComposition) -> Vec<WeakComposition> {
    let top = Permutation::of_composition(gamma);
    gamma
        .rearrangements()
        .into_iter()
        .filter(|alpha| Permutation::of_composition(alpha).bruhat_leq(&top))
        .collect()
}

/// `κ_γ` as the sum of `E_α(x; 0, 0)` over the Bruhat interval below `γ`.
pub fn key_poly_via_atoms(gamma: &WeakComposition) -> Polynomial {
    bruhat_interval(gamma)
        .iter()
        .map(e_poly)
        .fold(Polynomial::zero(gamma.len()), |acc, p| &acc + &p)
}

/// `κ_{w(λ)}` as the total weight of `pb(λ, w)`.
pub fn key_poly_via_pb(lam: &Partition, w: &Permutation) -> Result<Polynomial> {
    Ok(enumerate_pb(lam, w)?
        .iter()
        .map(PermutedSsaf::weight)
        .fold(Polynomial::zero(w.n()), |acc, p| &acc + &p))
}

/// `K_+(t) = key(shape(Ψ(t)))`, with content of length the largest entry.
pub fn right_key(t: &Ssyt) -> Key {
    let n = t.max_entry() as usize;
    let f = psi(t, n).expect("n bounds every entry");
    key_of_composition(&f.shape())
}

/// The key whose column `j` is the first `heights[j]` letters of `w`,
/// sorted.
pub fn key_tableau_of_perm(w: &Permutation, heights: &[usize]) -> Result<Key> {
    if heights.windows(2).any(|p| p[0] < p[1]) || heights.first().is_some_and(|&h| h > w.n()) {
        return Err(Error::InvalidTableau(format!(
            "column heights {heights:?} must decrease weakly and not exceed {}",
            w.n()
        )));
    }
    let columns: Vec<Vec<u32>> = heights
        .iter()
        .filter(|&&h| h > 0)
        .map(|&h| {
            let mut col: Vec<u32> = w.one_line()[..h].iter().map(|&x| x as u32).collect();
            col.sort_unstable();
            col
        })
        .collect();
    Key::from_tableau(Ssyt::from_columns(&columns)?, w.n())
}

/// A filling of partition shape over the basement `ω(1), ..., ω(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermuted", into = "RawPermuted")]
pub struct PermutedSsaf {
    basement: Permutation,
    columns: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawPermuted {
    shape: Vec<u32>,
    basement: Vec<usize>,
    columns: Vec<Vec<u32>>,
}

impl TryFrom<RawPermuted> for PermutedSsaf {
    type Error = Error;
    fn try_from(raw: RawPermuted) -> Result<Self> {
        check_shape(&raw.shape, &raw.columns)?;
        PermutedSsaf::new(Permutation::new(raw.basement)?, raw.columns)
    }
}

impl From<PermutedSsaf> for RawPermuted {
    fn from(g: PermutedSsaf) -> Self {
        RawPermuted {
            shape: g.columns.iter().map(|c| c.len() as u32).collect(),
            basement: g.basement.one_line().to_vec(),
            columns: g.columns,
        }
    }
}

fn basement_entries(w: &Permutation) -> Vec<u32> {
    w.one_line().iter().map(|&x| x as u32).collect()
}

impl PermutedSsaf {
    pub fn new(basement: Permutation, columns: Vec<Vec<u32>>) -> Result<Self> {
        if columns.len() != basement.n() {
            return Err(Error::VariableCount { expected: basement.n(), found: columns.len() });
        }
        if columns.windows(2).any(|p| p[0].len() < p[1].len()) {
            return Err(Error::InvalidFilling("column heights must decrease weakly".into()));
        }
        let report = ssaf::validate_filling(&basement_entries(&basement), &columns);
        if !report.is_valid() {
            let msg = match report.column_violations.first() {
                Some(c) => format!("column {} increases upward at row {}", c.col, c.row),
                None => "a triple is not an inversion triple".into(),
            };
            return Err(Error::InvalidFilling(msg));
        }
        Ok(Self { basement, columns })
    }

    pub fn basement(&self) -> &Permutation {
        &self.basement
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn shape(&self) -> Partition {
        let parts = self.columns.iter().map(|c| c.len() as u32).collect();
        Partition::new(parts, self.n()).expect("heights decrease weakly")
    }

    pub fn content(&self) -> WeakComposition {
        ssaf::content_of_columns(&self.columns, self.n())
    }

    pub fn weight(&self) -> Polynomial {
        Polynomial::monomial(&self.content())
    }

    /// Row multisets bottom-up, each sorted increasingly.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        ssaf::rows_of_columns(&self.columns)
    }

    pub fn report(&self) -> TripleReport {
        ssaf::validate_filling(&basement_entries(&self.basement), &self.columns)
    }
}

impl fmt::Display for PermutedSsaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ssaf::render(f, &basement_entries(&self.basement), &self.columns)
    }
}

/// `pb(λ, w)`: every filling of shape `λ` over the basement `w`.
pub fn enumerate_pb(lam: &Partition, w: &Permutation) -> Result<Vec<PermutedSsaf>> {
    let lam = fit(lam, w.n())?;
    Ok(ssaf::enumerate_fillings(&basement_entries(w), lam.parts())
        .into_iter()
        .map(|columns| PermutedSsaf { basement: w.clone(), columns })
        .collect())
}

/// Places the rows of `f` greedily over the basement `w`: each row largest
/// entry first, each entry on the leftmost available cell below it holding
/// something at least as large.
pub fn pb_from_ssaf(f: &Ssaf, w: &Permutation) -> Result<PermutedSsaf> {
    if f.n() != w.n() {
        return Err(Error::VariableCount { expected: w.n(), found: f.n() });
    }
    let columns = ssaf::place_rows(&basement_entries(w), &f.rows())?;
    PermutedSsaf::new(w.clone(), columns)
}

/// Inverse of [`pb_from_ssaf`]: the rows of `g` placed over the identity
/// basement.
pub fn ssaf_from_pb(g: &PermutedSsaf) -> Result<Ssaf> {
    ssaf::rho(&g.rows(), g.n())
}
