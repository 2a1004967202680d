//! Partitions, weak compositions and permutations of `1..=n`.

use std::fmt;

use crate::{Error, Result};

/// A word in positive letters: column words, reading words, reduced words.
pub type Word = Vec<u32>;

/// A weak composition with an explicit number of parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts sorted into weakly decreasing order, same length.
    pub fn sort_desc(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `s_i γ`: exchange parts `i` and `i + 1` (1-based).
    pub fn swapped(&self, i: usize) -> Result<Self> {
        check_index(i, self.len())?;
        let mut parts = self.0.clone();
        parts.swap(i - 1, i);
        Ok(Self(parts))
    }

    /// Pads with zeros to `n` parts. Fails if nonzero parts would be dropped.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.0.len() > n && self.0[n..].iter().any(|&p| p != 0) {
            return Err(Error::VariableCount { expected: n, found: self.0.len() });
        }
        let mut parts = self.0.clone();
        parts.resize(n, 0);
        Ok(Self(parts))
    }

    /// Distinct rearrangements of the parts, in increasing lexicographic order.
    pub fn rearrangements(&self) -> Vec<Self> {
        let mut parts = self.0.clone();
        parts.sort_unstable();
        let mut out = vec![Self(parts.clone())];
        while next_permutation(&mut parts) {
            out.push(Self(parts.clone()));
        }
        out
    }

    /// Every weak composition of `size` into exactly `n` parts.
    pub fn all(n: usize, size: u32) -> Vec<Self> {
        fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
            if cur.len() + 1 == n {
                cur.push(left);
                out.push(WeakComposition(cur.clone()));
                cur.pop();
                return;
            }
            for p in 0..=left {
                cur.push(p);
                rec(n, left - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        match n {
            0 if size == 0 => out.push(Self(Vec::new())),
            0 => {}
            _ => rec(n, size, &mut Vec::with_capacity(n), &mut out),
        }
        out
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(parts: Vec<u32>) -> Self {
        Self(parts)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

/// A partition padded with zeros to exactly `n` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition with `n` parts. Trailing zeros beyond `n` are dropped.
    pub fn new(mut parts: Vec<u32>, n: usize) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        let nonzero = parts.iter().take_while(|&&p| p > 0).count();
        if nonzero > n {
            return Err(Error::TooManyParts { parts: nonzero, nvars: n });
        }
        parts.resize(n, 0);
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of variables (padded length).
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nonzero_parts(&self) -> &[u32] {
        let len = self.0.iter().take_while(|&&p| p > 0).count();
        &self.0[..len]
    }

    /// The conjugate partition, padded to `max(n, λ_1)` parts.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0) as usize;
        let len = self.n().max(first);
        let parts = (1..=len as u32)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn as_composition(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    /// All partitions of `size` with at most `n` nonzero parts, padded to `n`.
    /// Ordered reverse-lexicographically (largest first part first).
    pub fn all(n: usize, size: u32) -> Vec<Partition> {
        fn rec(n: usize, left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                let mut parts = cur.clone();
                parts.resize(n, 0);
                out.push(Partition(parts));
                return;
            }
            if cur.len() == n {
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(n, left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    /// The adjacent transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Ok(Self(v))
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Self(cur.clone()));
        }
        out
    }

    /// The product `s_{i1} ∘ s_{i2} ∘ ... ∘ s_{ik}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            check_index(i, n)?;
            // w ∘ s_i swaps positions i and i+1
            w.0.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Self(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// A reduced word `i1 ... ik` with `w = s_{i1} ∘ ... ∘ s_{ik}`.
    ///
    /// The largest value not in its place is bubbled one step to the right at
    /// a time; the recorded positions, reversed, form the word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.0.clone();
        let mut steps = Vec::with_capacity(self.length());
        while let Some(v) = (1..=cur.len()).rev().find(|&v| cur[v - 1] != v) {
            let mut p = cur.iter().position(|&x| x == v).unwrap();
            while p + 1 < v {
                cur.swap(p, p + 1);
                steps.push(p + 1);
                p += 1;
            }
        }
        steps.reverse();
        steps
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn rec(w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, suffix: &mut Vec<usize>) {
            let mut descended = false;
            for k in 1..w.len() {
                if w[k - 1] > w[k] {
                    descended = true;
                    w.swap(k - 1, k);
                    suffix.push(k);
                    rec(w, out, suffix);
                    suffix.pop();
                    w.swap(k - 1, k);
                }
            }
            if !descended {
                out.push(suffix.iter().rev().copied().collect());
            }
        }
        let mut out = Vec::new();
        rec(&mut self.0.clone(), &mut out, &mut Vec::new());
        out.sort();
        out
    }

    /// Strong Bruhat order by prefix dominance: for every `k`, the decreasing
    /// sort of `self(1..=k)` is entrywise at most that of `other(1..=k)`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "Bruhat comparison across different S_n");
        let mut a: Vec<usize> = Vec::with_capacity(self.n());
        let mut b: Vec<usize> = Vec::with_capacity(self.n());
        for k in 0..self.n() {
            insert_desc(&mut a, self.0[k]);
            insert_desc(&mut b, other.0[k]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// `w(λ)`: the composition `γ` with `γ_{w(i)} = λ_i`.
    pub fn act(&self, lambda: &Partition) -> Result<WeakComposition> {
        let parts = lambda.as_composition().padded(self.n())?;
        let mut gamma = vec![0; self.n()];
        for (i, &p) in parts.parts().iter().enumerate() {
            gamma[self.0[i] - 1] = p;
        }
        Ok(WeakComposition(gamma))
    }

    /// The minimal-length `τ` with `τ(sort_desc(γ)) = γ`: columns listed from
    /// tallest to shortest, equal heights from left to right.
    pub fn of_composition(gamma: &WeakComposition) -> Self {
        let mut cols: Vec<usize> = (1..=gamma.len()).collect();
        cols.sort_by(|&a, &b| gamma.0[b - 1].cmp(&gamma.0[a - 1]).then(a.cmp(&b)));
        Self(cols)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::IndexOutOfRange { index: i, nvars: n })
    } else {
        Ok(())
    }
}

fn insert_desc(v: &mut Vec<usize>, x: usize) {
    let pos = v.iter().position(|&y| y < x).unwrap_or(v.len());
    v.insert(pos, x);
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (k, x) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
