//! Exhaustive cross-checks between the independent constructions.
//!
//! Every sweep returns a [`Report`] counting the cases it checked and
//! keeping the first few counterexamples. Sweeps run in parallel over
//! `(n, λ)` pairs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{Partition, Permutation, WeakComposition};
use crate::demazure::{
    atom_via_operators, atom_via_word, bruhat_interval, enumerate_pb, key_poly_via_operators,
    key_poly_via_pb, key_tableau_of_perm, pb_from_ssaf, right_key, ssaf_from_pb, PermutedSsaf,
};
use crate::polynomial::{Operator, Polynomial};
use crate::ssaf::{e_poly, enumerate_ssaf, psi};
use crate::tableaux::{
    colform, crystal_graph, enumerate_ssyt, key_of_composition, knuth_class, right_key_oracle,
    schur, Ssyt,
};
use crate::Result;

const KEPT_EXAMPLES: usize = 5;

/// Outcome of one sweep.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    /// The first few counterexamples.
    pub examples: Vec<String>,
    pub seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} cases", self.name, self.checked)?;
        if self.failures > 0 {
            write!(f, ", {} failed", self.failures)?;
        }
        write!(f, " ({:.2}s)", self.seconds)?;
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        let room = KEPT_EXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
        self
    }

    fn into_report(self, name: &str, start: Instant) -> Report {
        Report {
            name: name.to_string(),
            checked: self.checked,
            failures: self.failures,
            examples: self.examples,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Runs `body` on every `(n, λ)` with `1 <= n <= max_n`, `|λ| <= max_size`
/// and at most `n` parts, in parallel.
fn over_partitions<F>(name: &str, max_n: usize, max_size: u32, body: F) -> Report
where
    F: Fn(usize, &Partition, &mut Tally) + Sync,
{
    let start = Instant::now();
    let work: Vec<(usize, Partition)> = (1..=max_n)
        .flat_map(|n| (0..=max_size).flat_map(move |s| Partition::all(n, s)).map(move |l| (n, l)))
        .collect();
    work.par_iter()
        .map(|(n, lam)| {
            let mut t = Tally::default();
            body(*n, lam, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
        .into_report(name, start)
}

fn e_polys_of(lam: &Partition) -> HashMap<WeakComposition, Polynomial> {
    lam.as_composition().rearrangements().into_iter().map(|g| (g.clone(), e_poly(&g))).collect()
}

fn show(r: &Result<Polynomial>) -> String {
    match r {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Atoms three ways: `π̄`, `θ` and SSAF enumeration, for every permutation.
pub fn sweep_atoms(max_n: usize, max_size: u32) -> Report {
    sweep_atoms_with_theta("atoms: operators = theta = ssaf", max_n, max_size, |f, i| f.theta(i))
}

/// [`sweep_atoms`] with a substitute for `θ_i`.
pub fn sweep_atoms_with_theta<T>(name: &str, max_n: usize, max_size: u32, theta: T) -> Report
where
    T: Fn(&Polynomial, usize) -> Result<Polynomial> + Sync,
{
    over_partitions(name, max_n, max_size, |n, lam, tally| {
        let by_ssaf = e_polys_of(lam);
        for w in Permutation::all(n) {
            let gamma = w.act(lam).expect("λ fits in n parts");
            let expected = &by_ssaf[&gamma];
            let ops = atom_via_operators(&w, lam);
            let th = atom_via_word(&w, lam, &theta);
            tally.check(ops.as_ref().ok() == Some(expected) && th.as_ref().ok() == Some(expected), || {
                format!("w={w} λ={lam}: ssaf {expected}; operators {}; theta {}", show(&ops), show(&th))
            });
        }
    })
}

/// `θ_i` replaced by the identity on monomials with `m_i <= m_{i+1}`; the
/// atom sweep must reject it.
pub fn theta_identity_mutant(f: &Polynomial, i: usize) -> Result<Polynomial> {
    let mut out = Polynomial::zero(f.nvars());
    for (e, c) in f.terms() {
        let m = Polynomial::term(e.clone(), c.clone());
        out = if e[i - 1] > e[i] { &out + &m.theta(i)? } else { &out + &m };
    }
    Ok(out)
}

/// Key polynomials three ways: `π`, sums of atoms over Bruhat intervals, and
/// permuted-basement fillings.
pub fn sweep_key_polys(max_n: usize, max_size: u32) -> Report {
    over_partitions("key polynomials: operators = atoms = permuted basements", max_n, max_size, |n, lam, tally| {
        let atoms = e_polys_of(lam);
        for w in Permutation::all(n) {
            let gamma = w.act(lam).expect("λ fits in n parts");
            let via_atoms = bruhat_interval(&gamma)
                .iter()
                .map(|a| &atoms[a])
                .fold(Polynomial::zero(n), |acc, p| &acc + p);
            let ops = key_poly_via_operators(&w, lam);
            let pb = key_poly_via_pb(lam, &w);
            tally.check(ops.as_ref().ok() == Some(&via_atoms) && pb.as_ref().ok() == Some(&via_atoms), || {
                format!("w={w} λ={lam}: atoms {via_atoms}; operators {}; pb {}", show(&ops), show(&pb))
            });
        }
    })
}

/// Right keys through skyline insertion against the Knuth-class oracle, for
/// every tableau with at most `max_size` cells and entries at most
/// `max_entry`.
pub fn sweep_right_keys(max_size: u32, max_entry: u32, cap: usize) -> Report {
    let n = max_entry as usize;
    over_partitions("right key: insertion = Knuth-class oracle", n, max_size, |m, lam, tally| {
        if m != n {
            return;
        }
        for t in enumerate_ssyt(lam, max_entry) {
            let fast = right_key(&t);
            match right_key_oracle(&t, cap) {
                Ok(slow) => tally.check(fast == slow, || {
                    format!("T={t:?}: insertion {:?}, oracle {:?}", fast.content(), slow.content())
                }),
                Err(e) => tally.check(false, || format!("T={t:?}: oracle failed: {e}")),
            }
        }
    })
}

/// `Ψ(f_i T) = Θ_i(Ψ(T))` for every tableau and every `i < n`.
pub fn sweep_crystal_commutes(max_n: usize, max_size: u32) -> Report {
    over_partitions("insertion intertwines f_i and Theta_i", max_n, max_size, |n, lam, tally| {
        for t in enumerate_ssyt(lam, n as u32) {
            let f = psi(&t, n).expect("entries bounded by n");
            for i in 1..n {
                let lhs = psi(&t.crystal_f(i as u32), n).expect("entries bounded by n");
                let rhs = f.theta(i).expect("i < n");
                tally.check(lhs == rhs, || format!("T={t:?} i={i}"));
            }
        }
    })
}

/// The shape of `Θ_i(F)` is `γ` or `s_i γ` for every SSAF `F` of shape `γ`.
pub fn sweep_theta_shapes(max_n: usize, max_size: u32) -> Report {
    over_partitions("Theta_i keeps the shape or swaps columns i, i+1", max_n, max_size, |n, lam, tally| {
        for gamma in lam.as_composition().rearrangements() {
            for f in enumerate_ssaf(&gamma) {
                for i in 1..n {
                    let shape = f.theta(i).expect("i < n").shape();
                    let swapped = gamma.swapped(i).expect("i < n");
                    tally.check(shape == gamma || shape == swapped, || {
                        format!("γ={gamma} i={i}: got shape {shape} from {:?}", f.columns())
                    });
                }
            }
        }
    })
}

/// Atoms over distinct rearrangements and the key polynomial of the longest
/// permutation both sum to the Schur polynomial.
pub fn sweep_schur(max_n: usize, max_size: u32) -> Report {
    over_partitions("atoms and top key polynomial sum to Schur", max_n, max_size, |n, lam, tally| {
        let s = schur(lam, n);
        let atoms: Polynomial =
            e_polys_of(lam).values().fold(Polynomial::zero(n), |acc, p| &acc + p);
        tally.check(atoms == s, || format!("λ={lam} n={n}: atoms sum to {atoms}, Schur is {s}"));
        let top = key_poly_via_operators(&Permutation::longest(n), lam);
        tally.check(top.as_ref().ok() == Some(&s), || format!("λ={lam} n={n}: π_w0 gives {}", show(&top)));
    })
}

/// `|pb(λ, w0)|` equals the number of tableaux, and the placement maps are
/// inverse bijections between the SSAFs below `w(λ)` and `pb(λ, w)`.
pub fn sweep_pb_bijections(max_n: usize, max_size: u32) -> Report {
    over_partitions("permuted-basement bijections", max_n, max_size, |n, lam, tally| {
        let top = enumerate_pb(lam, &Permutation::longest(n)).map(|v| v.len());
        let tableaux = enumerate_ssyt(lam, n as u32).len();
        tally.check(top.as_ref().ok() == Some(&tableaux), || {
            format!("λ={lam} n={n}: |pb| = {top:?}, tableaux = {tableaux}")
        });
        for w in Permutation::all(n) {
            let gamma = w.act(lam).expect("λ fits in n parts");
            let mut image = BTreeSet::new();
            let mut ok = true;
            for alpha in bruhat_interval(&gamma) {
                for f in enumerate_ssaf(&alpha) {
                    match pb_from_ssaf(&f, &w) {
                        Ok(g) => {
                            ok &= g.content() == f.content();
                            ok &= ssaf_from_pb(&g).ok().as_ref() == Some(&f);
                            ok &= image.insert(g);
                        }
                        Err(_) => ok = false,
                    }
                }
            }
            let all: Option<BTreeSet<PermutedSsaf>> = enumerate_pb(lam, &w).ok().map(|v| v.into_iter().collect());
            tally.check(ok && all.as_ref() == Some(&image), || format!("w={w} λ={lam}"));
        }
    })
}

fn monomials(terms: &[&[u32]]) -> Polynomial {
    let n = terms[0].len();
    terms
        .iter()
        .map(|e| Polynomial::monomial(&WeakComposition::new(e.to_vec())))
        .fold(Polynomial::zero(n), |acc, p| &acc + &p)
}

fn golden_checks() -> Vec<(&'static str, bool)> {
    let x = |e: &[u32]| Polynomial::monomial(&WeakComposition::new(e.to_vec()));
    let perm = |v: &[usize]| Permutation::new(v.to_vec()).unwrap();
    let ssyt = |rows: &[&[u32]]| Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let comp = |v: &[u32]| WeakComposition::new(v.to_vec());
    let lam21 = Partition::new(vec![2, 1], 3).unwrap();
    let kappa = monomials(&[&[2, 1, 0], &[1, 2, 0], &[2, 0, 1], &[1, 1, 1], &[1, 0, 2]]);
    let fig5 = ssyt(&[&[1, 2, 2, 3], &[2, 3, 3, 6], &[4, 5]]);
    let f5 = psi(&fig5, 6).unwrap();

    let crystal = crystal_graph(&lam21, 3);
    let edge = |a: &[&[u32]], b: &[&[u32]], i: u32| {
        let ia = crystal.vertices.iter().position(|t| t == &ssyt(a));
        let ib = crystal.vertices.iter().position(|t| t == &ssyt(b));
        matches!((ia, ib), (Some(a), Some(b)) if crystal.edges.contains(&(a, b, i)))
    };
    let drawn = [
        edge(&[&[1, 1], &[2]], &[&[1, 2], &[2]], 1),
        edge(&[&[1, 1], &[2]], &[&[1, 1], &[3]], 2),
        edge(&[&[1, 2], &[2]], &[&[1, 3], &[2]], 2),
        edge(&[&[1, 1], &[3]], &[&[1, 2], &[3]], 1),
        edge(&[&[1, 2], &[3]], &[&[2, 2], &[3]], 1),
        edge(&[&[1, 3], &[2]], &[&[1, 3], &[3]], 2),
        edge(&[&[2, 2], &[3]], &[&[2, 3], &[3]], 2),
        edge(&[&[1, 3], &[3]], &[&[2, 3], &[3]], 1),
    ];

    let pb: BTreeSet<_> = enumerate_pb(&lam21, &perm(&[3, 1, 2])).unwrap().into_iter().collect();
    let drawn_pb: BTreeSet<_> = [[2, 1], [2, 2], [3, 1], [3, 2], [3, 3]]
        .iter()
        .map(|c| PermutedSsaf::new(perm(&[3, 1, 2]), vec![c.to_vec(), vec![1], vec![]]).unwrap())
        .collect();

    let knuth = |a: &[u32], b: &[u32]| knuth_class(a, 10_000).map(|c| c.contains(&b.to_vec())).unwrap_or(false);
    let x21 = x(&[2, 1, 0]);

    vec![
        ("pi_1 pi_2 (x1^2 x2), five terms", x21.apply_word(&[1, 2], Operator::Pi).ok()
            == Some(monomials(&[&[2, 1, 0], &[2, 0, 1], &[1, 2, 0], &[1, 1, 1], &[0, 2, 1]]))),
        ("pi_2 (x1^2 x2)", x21.pi(2).ok() == Some(monomials(&[&[2, 1, 0], &[2, 0, 1]]))),
        ("pi_1 (x1^2 x2)", x21.pi(1).ok() == Some(monomials(&[&[2, 1, 0], &[1, 2, 0]]))),
        ("pibar_1 (x1^2 x2 x3)", x(&[2, 1, 1]).pibar(1).ok() == Some(x(&[1, 2, 1]))),
        ("theta_2 (x1^3 x2^4 x3 x5 x7^3)", x(&[3, 4, 1, 0, 1, 0, 3]).theta(2).ok()
            == Some(monomials(&[&[3, 3, 2, 0, 1, 0, 3], &[3, 2, 3, 0, 1, 0, 3], &[3, 1, 4, 0, 1, 0, 3]]))),
        ("key(2,1,1,4,0,3)", key_of_composition(&comp(&[2, 1, 1, 4, 0, 3])).tableau()
            == &ssyt(&[&[1, 1, 4, 4], &[2, 4, 6], &[3, 6], &[4], &[6]])),
        ("colform 354221 = (1,3,2)", colform(&[3, 5, 4, 2, 2, 1]) == [1, 3, 2]),
        ("colform 425321 = (2,4)", colform(&[4, 2, 5, 3, 2, 1]) == [2, 4]),
        ("5321.42 ~ 354221", knuth(&[5, 3, 2, 1, 4, 2], &[3, 5, 4, 2, 2, 1])),
        ("4321.52 ~ 425321", knuth(&[4, 3, 2, 1, 5, 2], &[4, 2, 5, 3, 2, 1])),
        ("right key of 5321.42 is 5421.42", {
            let s = Ssyt::from_columns(&[vec![1, 2, 3, 5], vec![2, 4]]).unwrap();
            right_key(&s).tableau().col_word() == [5, 4, 2, 1, 4, 2]
        }),
        ("K(241635, (4,2,2,1)) = 6421.42.42.2", key_tableau_of_perm(&perm(&[2, 4, 1, 6, 3, 5]), &[4, 2, 2, 1])
            .map(|k| k.tableau().col_word() == [6, 4, 2, 1, 4, 2, 4, 2, 2])
            .unwrap_or(false)),
        ("crystal graph of (2,1): 8 vertices, 8 edges as drawn",
            crystal.vertices.len() == 8 && crystal.edges.len() == 8 && drawn.iter().all(|&b| b)),
        ("tau of (1,0,3,3,0,1,2,0) = 34716258", Permutation::of_composition(&comp(&[1, 0, 3, 3, 0, 1, 2, 0])).one_line()
            == [3, 4, 7, 1, 6, 2, 5, 8]),
        ("insertion of the sample tableau: shape (0,2,4,0,0,4)", f5.shape() == comp(&[0, 2, 4, 0, 0, 4])
            && f5.columns() == [vec![], vec![2, 2], vec![3, 3, 3, 2], vec![], vec![], vec![6, 5, 4, 1]]),
        ("right key of the sample tableau", right_key(&fig5).tableau().rows()
            == [vec![2, 2, 3, 3], vec![3, 3, 6, 6], vec![6, 6]]),
        ("kappa_{(3,1,2),(2,1)} by operators, atoms, fillings",
            key_poly_via_operators(&perm(&[3, 1, 2]), &lam21).ok() == Some(kappa.clone())
                && crate::demazure::key_poly_via_atoms(&comp(&[1, 0, 2])) == kappa
                && key_poly_via_pb(&lam21, &perm(&[3, 1, 2])).ok() == Some(kappa.clone())),
        ("the five fillings over basement 312", pb == drawn_pb),
    ]
}

/// Reproduces the worked examples exactly.
pub fn goldens() -> Report {
    let start = Instant::now();
    let mut tally = Tally::default();
    for (name, ok) in golden_checks() {
        tally.check(ok, || name.to_string());
    }
    tally.into_report("worked examples", start)
}

/// Every sweep with a common bound on `n` and on the number of cells.
pub fn run_all(max_n: usize, max_size: u32) -> Vec<Report> {
    vec![
        sweep_atoms(max_n, max_size),
        sweep_key_polys(max_n, max_size),
        sweep_right_keys(max_size, max_n as u32, 100_000),
        sweep_crystal_commutes(max_n, max_size),
        sweep_theta_shapes(max_n, max_size),
        sweep_schur(max_n, max_size),
        goldens(),
        sweep_pb_bijections(max_n, max_size),
    ]
}
