//! Integral weight lattice of gl(m|n) in ρ-shifted tuple coordinates.
//!
//! A [`Weight`] `(q₁..q_m | r₁..r_n)` stands for `Σ qᵢ δᵢ − Σ r_j ε_j`. The
//! Verma module labelled by a tuple has highest weight `tuple − ρ`; nothing in
//! this crate ever subtracts ρ, every formula works on the shifted tuples.
//!
//! The supertrace form in these coordinates is `Σ qᵢq'ᵢ − Σ r_j r'_j`, so the
//! odd root `δᵢ − ε_j` is stored as `q_i = 1, r_j = 1` and is isotropic, and
//! `ε_j` alone is stored as `r_j = −1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(m, n)` of gl(m|n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraShape {
    m: usize,
    n: usize,
}

impl AlgebraShape {
    pub const GL31: AlgebraShape = AlgebraShape { m: 3, n: 1 };
    pub const GL22: AlgebraShape = AlgebraShape { m: 2, n: 2 };

    pub fn new(m: usize, n: usize) -> Result<Self> {
        if (1..=3).contains(&m) && (1..=3).contains(&n) {
            Ok(Self { m, n })
        } else {
            Err(Error::InvalidShape { m, n })
        }
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Rank of the root lattice, i.e. the number of simple roots.
    pub fn rank(self) -> usize {
        self.m + self.n - 1
    }

    pub fn weyl_order(self) -> usize {
        factorial(self.m) * factorial(self.n)
    }

    pub fn zero(self) -> Weight {
        Weight {
            shape: self,
            q: vec![0; self.m],
            r: vec![0; self.n],
        }
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl fmt::Display for AlgebraShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

impl FromStr for AlgebraShape {
    type Err = Error;

    /// Accepts `3x1`, `3|1` and `gl(3|1)`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "algebra shape",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let t = t
            .strip_prefix("gl(")
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t);
        let (m, n) = t
            .split_once(['x', 'X', '|'])
            .ok_or_else(|| err("expected MxN"))?;
        let m = m.trim().parse().map_err(|_| err("bad m"))?;
        let n = n.trim().parse().map_err(|_| err("bad n"))?;
        AlgebraShape::new(m, n)
    }
}

impl Serialize for AlgebraShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// An integral weight (or a weight displacement) in tuple coordinates.
///
/// Ordering is lexicographic on `(q, r)` within a shape, which is the
/// canonical order used for flags and serialisation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    shape: AlgebraShape,
    q: Vec<i64>,
    r: Vec<i64>,
}

impl Weight {
    pub fn new(shape: AlgebraShape, q: Vec<i64>, r: Vec<i64>) -> Result<Self> {
        if q.len() != shape.m || r.len() != shape.n {
            return Err(Error::Parse {
                what: "weight",
                input: format!("{q:?}|{r:?}"),
                reason: format!("expected {} even and {} odd coordinates", shape.m, shape.n),
            });
        }
        Ok(Self { shape, q, r })
    }

    /// Builds a weight, inferring the shape from the slice lengths.
    pub fn from_parts(q: &[i64], r: &[i64]) -> Result<Self> {
        let shape = AlgebraShape::new(q.len(), r.len())?;
        Self::new(shape, q.to_vec(), r.to_vec())
    }

    /// Parses `"q1,q2,...|r1,..."` and checks the shape.
    pub fn parse(shape: AlgebraShape, s: &str) -> Result<Self> {
        let w: Weight = s.parse()?;
        if w.shape != shape {
            return Err(Error::ShapeMismatch {
                left: shape,
                right: w.shape,
            });
        }
        Ok(w)
    }

    /// Flat coordinate vector `[q..., r...]`.
    pub fn from_flat(shape: AlgebraShape, flat: &[i64]) -> Result<Self> {
        if flat.len() != shape.m + shape.n {
            return Err(Error::Parse {
                what: "weight",
                input: format!("{flat:?}"),
                reason: format!("expected {} coordinates", shape.m + shape.n),
            });
        }
        Self::new(shape, flat[..shape.m].to_vec(), flat[shape.m..].to_vec())
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn q(&self) -> &[i64] {
        &self.q
    }

    pub fn r(&self) -> &[i64] {
        &self.r
    }

    pub fn flat(&self) -> Vec<i64> {
        self.q.iter().chain(&self.r).copied().collect()
    }

    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        self.q.iter().chain(&self.r).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coords().all(|x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            shape: self.shape,
            q: self.q.iter().map(|x| x * k).collect(),
            r: self.r.iter().map(|x| x * k).collect(),
        }
    }

    /// `δ_i` (0-based index).
    pub fn delta(shape: AlgebraShape, i: usize) -> Weight {
        let mut w = shape.zero();
        w.q[i] = 1;
        w
    }

    /// `ε_j` (0-based index). Stored as `r_j = −1`.
    pub fn epsilon(shape: AlgebraShape, j: usize) -> Weight {
        let mut w = shape.zero();
        w.r[j] = -1;
        w
    }

    pub(crate) fn swap_q(&self, i: usize, j: usize) -> Weight {
        let mut w = self.clone();
        w.q.swap(i, j);
        w
    }

    pub(crate) fn swap_r(&self, i: usize, j: usize) -> Weight {
        let mut w = self.clone();
        w.r.swap(i, j);
        w
    }

    fn check_shape(&self, other: &Weight) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                left: self.shape,
                right: other.shape,
            })
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_shape(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_shape(other)?;
        Ok(self - other)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.q.iter().join(","), self.r.iter().join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            what: "weight",
            input: s.to_string(),
            reason,
        };
        let (left, right) = s.split_once('|').ok_or_else(|| err("missing '|'".into()))?;
        let side = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|e| err(format!("{x:?}: {e}")))
                })
                .collect()
        };
        let q = side(left)?;
        let r = side(right)?;
        let shape = AlgebraShape::new(q.len(), r.len())?;
        Weight::new(shape, q, r)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn zip_with(a: &Weight, b: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
    assert_eq!(a.shape, b.shape, "weight shape mismatch");
    Weight {
        shape: a.shape,
        q: a.q.iter().zip(&b.q).map(|(x, y)| f(*x, *y)).collect(),
        r: a.r.iter().zip(&b.r).map(|(x, y)| f(*x, *y)).collect(),
    }
}

impl Add for &Weight {
    type Output = Weight;

    /// Panics on shape mismatch; use [`Weight::checked_add`] at API boundaries.
    fn add(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// Supertrace form `Σ qᵢq'ᵢ − Σ r_j r'_j`.
pub fn form(a: &Weight, b: &Weight) -> Result<i64> {
    a.check_shape(b)?;
    Ok(form_unchecked(a, b))
}

pub(crate) fn form_unchecked(a: &Weight, b: &Weight) -> i64 {
    let even: i64 = a.q.iter().zip(&b.q).map(|(x, y)| x * y).sum();
    let odd: i64 = a.r.iter().zip(&b.r).map(|(x, y)| x * y).sum();
    even - odd
}

/// `ρ = (m, m−1, …, 1 | 1, 2, …, n)`.
pub fn rho(shape: AlgebraShape) -> Weight {
    Weight {
        shape,
        q: (1..=shape.m as i64).rev().collect(),
        r: (1..=shape.n as i64).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    /// `δ_i − δ_j`, `i < j` (0-based).
    EvenDelta(usize, usize),
    /// `ε_i − ε_j`, `i < j` (0-based).
    EvenEps(usize, usize),
    /// `δ_i − ε_j` (0-based).
    Odd(usize, usize),
}

/// A positive root of gl(m|n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    shape: AlgebraShape,
    kind: RootKind,
}

impl Root {
    pub fn new(shape: AlgebraShape, kind: RootKind) -> Result<Self> {
        let ok = match kind {
            RootKind::EvenDelta(i, j) => i < j && j < shape.m,
            RootKind::EvenEps(i, j) => i < j && j < shape.n,
            RootKind::Odd(i, j) => i < shape.m && j < shape.n,
        };
        if ok {
            Ok(Self { shape, kind })
        } else {
            Err(Error::Parse {
                what: "root",
                input: format!("{kind:?}"),
                reason: format!("not a positive root of gl({}|{})", shape.m, shape.n),
            })
        }
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn is_even(&self) -> bool {
        !matches!(self.kind, RootKind::Odd(..))
    }

    pub fn is_isotropic(&self) -> bool {
        !self.is_even()
    }

    /// The root as a displacement in tuple coordinates.
    pub fn vector(&self) -> Weight {
        let mut w = self.shape.zero();
        match self.kind {
            RootKind::EvenDelta(i, j) => {
                w.q[i] = 1;
                w.q[j] = -1;
            }
            RootKind::EvenEps(i, j) => {
                w.r[i] = -1;
                w.r[j] = 1;
            }
            RootKind::Odd(i, j) => {
                w.q[i] = 1;
                w.r[j] = 1;
            }
        }
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::EvenDelta(i, j) => write!(f, "δ{}−δ{}", i + 1, j + 1),
            RootKind::EvenEps(i, j) => write!(f, "ε{}−ε{}", i + 1, j + 1),
            RootKind::Odd(i, j) => write!(f, "δ{}−ε{}", i + 1, j + 1),
        }
    }
}

pub fn positive_even_roots(shape: AlgebraShape) -> Vec<Root> {
    let delta = (0..shape.m)
        .tuple_combinations()
        .map(|(i, j)| RootKind::EvenDelta(i, j));
    let eps = (0..shape.n)
        .tuple_combinations()
        .map(|(i, j)| RootKind::EvenEps(i, j));
    delta.chain(eps).map(|kind| Root { shape, kind }).collect()
}

pub fn positive_odd_roots(shape: AlgebraShape) -> Vec<Root> {
    (0..shape.m)
        .cartesian_product(0..shape.n)
        .map(|(i, j)| Root {
            shape,
            kind: RootKind::Odd(i, j),
        })
        .collect()
}

pub fn positive_roots(shape: AlgebraShape) -> Vec<Root> {
    let mut roots = positive_even_roots(shape);
    roots.extend(positive_odd_roots(shape));
    roots
}

/// The distinguished fundamental system `δ₁−δ₂, …, δ_m−ε₁, ε₁−ε₂, …`.
pub fn simple_roots(shape: AlgebraShape) -> Vec<Root> {
    let mut out: Vec<Root> = (1..shape.m)
        .map(|i| Root {
            shape,
            kind: RootKind::EvenDelta(i - 1, i),
        })
        .collect();
    out.push(Root {
        shape,
        kind: RootKind::Odd(shape.m - 1, 0),
    });
    out.extend((1..shape.n).map(|j| Root {
        shape,
        kind: RootKind::EvenEps(j - 1, j),
    }));
    out
}

/// `⟨λ, α∨⟩ = 2(λ, α)/(α, α)` for an even root.
pub fn coroot_pairing(lam: &Weight, alpha: &Root) -> Result<i64> {
    if alpha.shape != lam.shape {
        return Err(Error::ShapeMismatch {
            left: lam.shape,
            right: alpha.shape,
        });
    }
    Ok(match alpha.kind {
        RootKind::EvenDelta(i, j) => lam.q[i] - lam.q[j],
        RootKind::EvenEps(i, j) => lam.r[j] - lam.r[i],
        RootKind::Odd(..) => return Err(Error::OddRoot(alpha.to_string())),
    })
}

/// `s_α(λ) = λ − ⟨λ, α∨⟩α`: a transposition of two coordinates on one side of the bar.
pub fn reflect(alpha: &Root, lam: &Weight) -> Result<Weight> {
    if alpha.shape != lam.shape {
        return Err(Error::ShapeMismatch {
            left: lam.shape,
            right: alpha.shape,
        });
    }
    match alpha.kind {
        RootKind::EvenDelta(i, j) => Ok(lam.swap_q(i, j)),
        RootKind::EvenEps(i, j) => Ok(lam.swap_r(i, j)),
        RootKind::Odd(..) => Err(Error::OddRoot(alpha.to_string())),
    }
}

/// Coefficients of `diff` in the simple-root basis, if `diff` lies in the
/// root lattice.
///
/// For `k ≤ m` the coefficient is the partial sum `Σ_{i≤k} dqᵢ`; past the bar
/// each `dr_j` peels one unit off the running coefficient, and the last one
/// must land exactly on `dr_n`.
pub fn simple_root_coefficients(diff: &Weight) -> Option<Vec<i64>> {
    let shape = diff.shape;
    let mut coeffs = Vec::with_capacity(shape.rank());
    let mut acc = 0;
    for &d in &diff.q {
        acc += d;
        coeffs.push(acc);
    }
    for &d in &diff.r[..shape.n - 1] {
        acc -= d;
        coeffs.push(acc);
    }
    (acc == diff.r[shape.n - 1]).then_some(coeffs)
}

/// Simple-root height of a positive root.
pub fn root_height(alpha: &Root) -> i64 {
    simple_root_coefficients(&alpha.vector())
        .expect("roots lie in the root lattice")
        .iter()
        .sum()
}

/// An element of `S_m × S_n`, acting by `(w·λ).q[σ(i)] = λ.q[i]` and likewise
/// on the odd side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

impl WeylElement {
    pub fn new(sigma: Vec<usize>, tau: Vec<usize>) -> Result<Self> {
        let is_perm = |p: &[usize]| p.iter().sorted().copied().eq(0..p.len());
        if is_perm(&sigma)
            && is_perm(&tau)
            && (1..=3).contains(&sigma.len())
            && (1..=3).contains(&tau.len())
        {
            Ok(Self { sigma, tau })
        } else {
            Err(Error::Parse {
                what: "Weyl element",
                input: format!("{sigma:?} x {tau:?}"),
                reason: "not a pair of permutations".into(),
            })
        }
    }

    pub fn identity(shape: AlgebraShape) -> Self {
        Self {
            sigma: (0..shape.m).collect(),
            tau: (0..shape.n).collect(),
        }
    }

    /// `self ∘ other`: acting by the result equals acting by `other`, then `self`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            sigma: other.sigma.iter().map(|&i| self.sigma[i]).collect(),
            tau: other.tau.iter().map(|&i| self.tau[i]).collect(),
        }
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }
}

/// All `m!·n!` Weyl group elements in lexicographic order of `(σ, τ)`.
pub fn weyl_elements(shape: AlgebraShape) -> Vec<WeylElement> {
    let sigmas: Vec<Vec<usize>> = (0..shape.m).permutations(shape.m).collect();
    let taus: Vec<Vec<usize>> = (0..shape.n).permutations(shape.n).collect();
    sigmas
        .into_iter()
        .cartesian_product(taus)
        .map(|(sigma, tau)| WeylElement { sigma, tau })
        .collect()
}

pub fn act(w: &WeylElement, lam: &Weight) -> Weight {
    assert_eq!(w.sigma.len(), lam.shape.m, "Weyl element shape mismatch");
    assert_eq!(w.tau.len(), lam.shape.n, "Weyl element shape mismatch");
    let mut out = lam.clone();
    for (i, &s) in w.sigma.iter().enumerate() {
        out.q[s] = lam.q[i];
    }
    for (j, &t) in w.tau.iter().enumerate() {
        out.r[t] = lam.r[j];
    }
    out
}

/// Dominant in the shifted convention: `⟨λ, α∨⟩ ≥ 0` for every positive even root.
pub fn is_dominant(lam: &Weight) -> bool {
    positive_even_roots(lam.shape)
        .iter()
        .all(|alpha| coroot_pairing(lam, alpha).expect("even root") >= 0)
}
