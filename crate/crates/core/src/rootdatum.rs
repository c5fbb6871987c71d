//! Based root data of split reductive groups, their Weyl groups, and the dominance order.
//!
//! Characters `X^*` and cocharacters `X_*` are both written in coordinates, with the
//! two bases declared dual so that the pairing is the dot product. Everything derived from
//! the simple roots and coroots (positive systems, the Weyl group, `w_0`, the solver used
//! for the dominance order) is computed once in [`RootDatum::new`].

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::linalg;

/// Default bound on the order of a generated Weyl group.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumError {
    UnknownFamily(String),
    InvalidRank { family: String, n: usize },
    LengthMismatch { expected: usize, found: usize },
    CountMismatch { roots: usize, coroots: usize },
    TooManySimpleRoots { simple: usize, rank: usize },
    NotCartan(String),
    DependentRoots,
    DependentCoroots,
    RootClosureTooLarge(usize),
    WeylGroupTooLarge(usize),
    NotDominant(Coweight),
}

impl fmt::Display for DatumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatumError::UnknownFamily(s) => write!(f, "unknown group family `{s}`"),
            DatumError::InvalidRank { family, n } => {
                write!(f, "rank {n} is not valid for family {family}")
            }
            DatumError::LengthMismatch { expected, found } => {
                write!(f, "vector of length {found}, expected {expected}")
            }
            DatumError::CountMismatch { roots, coroots } => {
                write!(f, "{roots} simple roots but {coroots} simple coroots")
            }
            DatumError::TooManySimpleRoots { simple, rank } => {
                write!(f, "{simple} simple roots exceed rank {rank}")
            }
            DatumError::NotCartan(why) => write!(f, "not a Cartan matrix of finite type: {why}"),
            DatumError::DependentRoots => f.write_str("simple roots are linearly dependent"),
            DatumError::DependentCoroots => f.write_str("simple coroots are linearly dependent"),
            DatumError::RootClosureTooLarge(n) => {
                write!(f, "root system closure exceeded {n} elements")
            }
            DatumError::WeylGroupTooLarge(cap) => {
                write!(
                    f,
                    "Weyl group generation exceeded the cap of {cap} elements"
                )
            }
            DatumError::NotDominant(c) => write!(f, "coweight {c} is not dominant"),
        }
    }
}

/// An element of `X_*(T)`, compared and printed lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl From<Vec<i64>> for Coweight {
    fn from(v: Vec<i64>) -> Self {
        Coweight(v)
    }
}

impl From<&[i64]> for Coweight {
    fn from(v: &[i64]) -> Self {
        Coweight(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Coweight {
    fn from(v: [i64; N]) -> Self {
        Coweight(v.to_vec())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.len(), rhs.len(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.len(), rhs.len(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }
}

/// An element of the finite Weyl group acting on `X_*(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl WeylElement {
    /// Action matrix on `X_*(T)` (row-major, acting on column vectors).
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// A word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, c: &Coweight) -> Coweight {
        Coweight(linalg::mat_vec(&self.matrix, &c.0))
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
            word,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == linalg::identity(self.matrix.len())
    }
}

/// Finite-type Cartan-Killing classification, Bourbaki numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn parse(s: &str) -> Option<CartanType> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = tail.trim_start_matches('_').parse().ok()?;
        let t = match head.to_ascii_uppercase().as_str() {
            "A" => CartanType::A(n),
            "B" => CartanType::B(n),
            "C" => CartanType::C(n),
            "D" => CartanType::D(n),
            "E" => CartanType::E(n),
            "F" if n == 4 => CartanType::F4,
            "G" if n == 2 => CartanType::G2,
            _ => return None,
        };
        t.is_valid().then_some(t)
    }

    fn is_valid(&self) -> bool {
        match *self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match *self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u64 << n) * fact(n),
            CartanType::D(n) => (1u64 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(_) => 696_729_600,
            CartanType::F4 => 1_152,
            CartanType::G2 => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        match *self {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::B(n) | CartanType::C(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::E(6) => 36,
            CartanType::E(7) => 63,
            CartanType::E(_) => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
        }
    }

    /// `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = linalg::identity(n);
        c.iter_mut()
            .for_each(|row| row.iter_mut().for_each(|x| *x *= 2));
        let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match *self {
            CartanType::A(_) => (0..n - 1).for_each(|i| bond(i, i + 1, -1, -1)),
            CartanType::B(_) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -2, -1);
            }
            CartanType::C(_) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -1, -2);
            }
            CartanType::D(_) => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            CartanType::E(_) => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
            CartanType::F4 => {
                bond(0, 1, -1, -1);
                bond(1, 2, -2, -1);
                bond(2, 3, -1, -1);
            }
            CartanType::G2 => bond(0, 1, -1, -3),
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

/// Named families of root data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GL(usize),
    SL(usize),
    PGL(usize),
    Sp4,
    SimplyConnected(CartanType),
    Adjoint(CartanType),
}

impl Family {
    /// Family from a tag and a rank, e.g. `("GL", 2)`, or `("SC-G", 2)` for a Cartan type.
    pub fn from_tag(tag: &str, n: usize) -> Result<Family, DatumError> {
        let bad = || DatumError::InvalidRank {
            family: tag.to_string(),
            n,
        };
        let upper = tag.to_ascii_uppercase();
        let typed = |prefix: &str| -> Option<Result<CartanType, DatumError>> {
            let rest = upper.strip_prefix(prefix)?;
            let rest = rest
                .trim_start_matches(['-', ':', '('])
                .trim_end_matches(')');
            Some(CartanType::parse(&format!("{rest}{n}")).ok_or_else(bad))
        };
        let fam = match upper.as_str() {
            "GL" if n >= 1 => Family::GL(n),
            "SL" if n >= 2 => Family::SL(n),
            "PGL" if n >= 2 => Family::PGL(n),
            "SP" if n == 4 => Family::Sp4,
            "GL" | "SL" | "PGL" | "SP" => return Err(bad()),
            _ => {
                if let Some(t) = typed("SC") {
                    Family::SimplyConnected(t?)
                } else if let Some(t) = typed("AD") {
                    Family::Adjoint(t?)
                } else {
                    return Err(DatumError::UnknownFamily(tag.to_string()));
                }
            }
        };
        Ok(fam)
    }

    /// Parses compact names such as `GL2`, `SL3`, `PGL2`, `Sp4`, `SC-G2`, `AD-B3`.
    pub fn parse(s: &str) -> Result<Family, DatumError> {
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        for prefix in ["SC", "AD"] {
            if let Some(rest) = upper.strip_prefix(prefix) {
                let rest = rest
                    .trim_start_matches(['-', ':', '(', '_'])
                    .trim_end_matches(')');
                let t = CartanType::parse(rest)
                    .ok_or_else(|| DatumError::UnknownFamily(s.to_string()))?;
                return Ok(if prefix == "SC" {
                    Family::SimplyConnected(t)
                } else {
                    Family::Adjoint(t)
                });
            }
        }
        let split = upper
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| DatumError::UnknownFamily(s.to_string()))?;
        let (tag, num) = upper.split_at(split);
        let n: usize = num
            .trim_start_matches('_')
            .parse()
            .map_err(|_| DatumError::UnknownFamily(s.to_string()))?;
        Family::from_tag(tag.trim_end_matches('_'), n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GL(n) => write!(f, "GL{n}"),
            Family::SL(n) => write!(f, "SL{n}"),
            Family::PGL(n) => write!(f, "PGL{n}"),
            Family::Sp4 => f.write_str("Sp4"),
            Family::SimplyConnected(t) => write!(f, "SC-{t}"),
            Family::Adjoint(t) => write!(f, "AD-{t}"),
        }
    }
}

/// Builds the standard root datum of a family with the default Weyl cap.
pub fn build_root_datum(family: Family) -> Result<RootDatum, DatumError> {
    build_root_datum_with_cap(family, DEFAULT_WEYL_CAP)
}

pub fn build_root_datum_with_cap(family: Family, weyl_cap: usize) -> Result<RootDatum, DatumError> {
    let unit = |n: usize, i: usize| -> Vec<i64> { (0..n).map(|k| (k == i) as i64).collect() };
    let (rank, roots, coroots) = match family {
        Family::GL(n) => {
            let simple: Vec<Vec<i64>> = (0..n.saturating_sub(1))
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            (n, simple.clone(), simple)
        }
        Family::SL(n) => {
            return build_root_datum_with_cap(
                Family::SimplyConnected(CartanType::A(n - 1)),
                weyl_cap,
            )
            .map(|d| d.relabel(format!("SL{n}")))
        }
        Family::PGL(n) => {
            return build_root_datum_with_cap(Family::Adjoint(CartanType::A(n - 1)), weyl_cap)
                .map(|d| d.relabel(format!("PGL{n}")))
        }
        Family::Sp4 => (
            2,
            vec![vec![1, -1], vec![0, 2]],
            vec![vec![1, -1], vec![0, 1]],
        ),
        Family::SimplyConnected(t) => {
            let r = t.rank();
            (r, t.cartan_matrix(), (0..r).map(|i| unit(r, i)).collect())
        }
        Family::Adjoint(t) => {
            let r = t.rank();
            let c = t.cartan_matrix();
            let coroots = (0..r).map(|j| (0..r).map(|i| c[i][j]).collect()).collect();
            (r, (0..r).map(|i| unit(r, i)).collect(), coroots)
        }
    };
    RootDatum::new(rank, roots, coroots, family.to_string(), weyl_cap)
}

/// A based root datum with all derived data precomputed.
#[derive(Debug, Clone)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    label: String,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    weyl: Vec<WeylElement>,
    longest: usize,
    // numerators * coroot matrix = den * I
    coroot_solver: (Vec<Vec<i128>>, i128),
    // unimodular U and elementary divisors of the coroot lattice
    component_reducer: (Vec<Vec<i64>>, Vec<i64>),
}

impl RootDatum {
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        label: String,
        weyl_cap: usize,
    ) -> Result<RootDatum, DatumError> {
        if rank == 0 {
            return Err(DatumError::InvalidRank {
                family: label,
                n: 0,
            });
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(DatumError::LengthMismatch {
                    expected: rank,
                    found: v.len(),
                });
            }
        }
        let s = simple_roots.len();
        if s != simple_coroots.len() {
            return Err(DatumError::CountMismatch {
                roots: s,
                coroots: simple_coroots.len(),
            });
        }
        if s > rank {
            return Err(DatumError::TooManySimpleRoots { simple: s, rank });
        }
        let cartan: Vec<Vec<i64>> = simple_roots
            .iter()
            .map(|a| simple_coroots.iter().map(|c| dot(a, c)).collect())
            .collect();
        check_cartan(&cartan)?;
        if linalg::rank(&simple_roots) != s {
            return Err(DatumError::DependentRoots);
        }
        if linalg::rank(&simple_coroots) != s {
            return Err(DatumError::DependentCoroots);
        }

        let closure_cap = weyl_cap.max(1024);
        let root_coeffs = positive_closure(&cartan, false, closure_cap)?;
        let coroot_coeffs = positive_closure(&cartan, true, closure_cap)?;
        let combine = |coeffs: &[Vec<i64>], basis: &[Vec<i64>]| -> Vec<Vec<i64>> {
            let mut out: Vec<Vec<i64>> = coeffs
                .iter()
                .map(|b| {
                    (0..rank)
                        .map(|k| b.iter().zip(basis).map(|(x, v)| x * v[k]).sum())
                        .collect()
                })
                .collect();
            out.sort();
            out
        };
        let positive_roots = combine(&root_coeffs, &simple_roots);
        let positive_coroots = combine(&coroot_coeffs, &simple_coroots);

        let weyl = generate_weyl(rank, &simple_roots, &simple_coroots, weyl_cap)?;
        let positive_set: BTreeSet<&Vec<i64>> = positive_coroots.iter().collect();
        let longest = weyl
            .iter()
            .position(|w| {
                positive_coroots.iter().all(|c| {
                    let img = linalg::mat_vec(&w.matrix, c);
                    let neg: Vec<i64> = img.iter().map(|x| -x).collect();
                    positive_set.contains(&neg)
                })
            })
            .expect("finite Weyl group has a longest element");

        let coroot_solver = linalg::left_inverse(&simple_coroots, rank);
        let component_reducer = linalg::smith_row_transform(&simple_coroots, rank);
        Ok(RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            label,
            positive_roots,
            positive_coroots,
            weyl,
            longest,
            coroot_solver,
            component_reducer,
        })
    }

    fn relabel(mut self, label: String) -> Self {
        self.label = label;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// `C[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| dot(a, c)).collect())
            .collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.weyl[self.longest]
    }

    pub fn is_torus(&self) -> bool {
        self.simple_roots.is_empty()
    }

    fn check_len(&self, n: usize) -> Result<(), DatumError> {
        if n == self.rank {
            Ok(())
        } else {
            Err(DatumError::LengthMismatch {
                expected: self.rank,
                found: n,
            })
        }
    }

    pub fn check_coweight(&self, c: &Coweight) -> Result<(), DatumError> {
        self.check_len(c.len())
    }

    /// The pairing `<w, c>` between `X^*` and `X_*`.
    pub fn pairing(&self, w: &[i64], c: &Coweight) -> Result<i64, DatumError> {
        self.check_len(w.len())?;
        self.check_len(c.len())?;
        Ok(dot(w, &c.0))
    }

    /// `2<rho, mu> = sum of <alpha, mu>` over positive roots.
    pub fn two_rho(&self, c: &Coweight) -> i64 {
        self.positive_roots.iter().map(|a| dot(a, &c.0)).sum()
    }

    pub fn is_dominant(&self, c: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| dot(a, &c.0) >= 0)
    }

    pub fn is_antidominant(&self, c: &Coweight) -> bool {
        self.simple_roots.iter().all(|a| dot(a, &c.0) <= 0)
    }

    pub fn require_dominant(&self, c: &Coweight) -> Result<(), DatumError> {
        self.check_coweight(c)?;
        if self.is_dominant(c) {
            Ok(())
        } else {
            Err(DatumError::NotDominant(c.clone()))
        }
    }

    pub fn reflect(&self, i: usize, c: &Coweight) -> Coweight {
        let k = dot(&self.simple_roots[i], &c.0);
        Coweight(
            c.0.iter()
                .zip(&self.simple_coroots[i])
                .map(|(x, a)| x - k * a)
                .collect(),
        )
    }

    pub fn w0(&self, c: &Coweight) -> Coweight {
        self.longest_element().apply(c)
    }

    /// The dominant Weyl conjugate of `c`, and an element `w` with `w(c)` equal to it.
    pub fn dominate(&self, c: &Coweight) -> (Coweight, WeylElement) {
        let mut cur = c.clone();
        let mut word = Vec::new();
        while let Some(i) =
            (0..self.simple_roots.len()).find(|&i| dot(&self.simple_roots[i], &cur.0) < 0)
        {
            cur = self.reflect(i, &cur);
            word.push(i);
        }
        word.reverse();
        let matrix = word.iter().fold(linalg::identity(self.rank), |acc, &i| {
            linalg::mat_mul(&acc, &self.reflection_matrix(i))
        });
        (cur, WeylElement { matrix, word })
    }

    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        reflection_matrix(self.rank, &self.simple_roots[i], &self.simple_coroots[i])
    }

    /// Coefficients of `v` in the simple coroot basis, if `v` lies in their integral span.
    pub fn coroot_coefficients(&self, v: &Coweight) -> Option<Vec<i64>> {
        let (nums, den) = &self.coroot_solver;
        let mut coeffs = Vec::with_capacity(nums.len());
        for row in nums {
            let x: i128 = row.iter().zip(&v.0).map(|(a, &b)| a * b as i128).sum();
            if x % den != 0 {
                return None;
            }
            coeffs.push((x / den) as i64);
        }
        let back: Vec<i64> = (0..self.rank)
            .map(|k| {
                coeffs
                    .iter()
                    .zip(&self.simple_coroots)
                    .map(|(c, a)| c * a[k])
                    .sum()
            })
            .collect();
        (back == v.0).then_some(coeffs)
    }

    /// `lambda <= mu` iff `mu - lambda` is a nonnegative integral sum of simple coroots.
    pub fn dominance_leq(&self, lambda: &Coweight, mu: &Coweight) -> bool {
        if lambda.len() != self.rank || mu.len() != self.rank {
            return false;
        }
        match self.coroot_coefficients(&(mu - lambda)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// All dominant `lambda <= mu`, sorted lexicographically.
    pub fn strata_below(&self, mu: &Coweight) -> Result<Vec<Coweight>, DatumError> {
        self.require_dominant(mu)?;
        let mut seen: BTreeMap<Coweight, i64> = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone(), self.two_rho(mu));
        queue.push_back(mu.clone());
        while let Some(nu) = queue.pop_front() {
            let h = seen[&nu];
            for a in &self.simple_coroots {
                let next = Coweight(nu.0.iter().zip(a).map(|(x, y)| x - y).collect());
                let hn = self.two_rho(&next);
                assert_eq!(
                    hn,
                    h - 2,
                    "subtracting a simple coroot must lower 2<rho,.> by 2"
                );
                // a dominant weight below `next` would need 2<rho,.> >= 0
                if hn < 0 || seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), hn);
                queue.push_back(next);
            }
        }
        Ok(seen.into_keys().filter(|c| self.is_dominant(c)).collect())
    }

    /// Dominant coweights with `2<rho, mu> <= max_dim`.
    ///
    /// Exact when the simple roots span `X^*` rationally. Otherwise the central directions are
    /// unbounded and the scan is restricted to coordinates in `[-radius, radius]`.
    pub fn dominant_coweights_up_to(&self, max_dim: i64, radius: i64) -> Vec<Coweight> {
        let s = self.simple_roots.len();
        let mut out = Vec::new();
        if s == self.rank {
            // mu is determined by m_i = <alpha_i, mu>, and sum m_i <= 2<rho,mu>.
            let cols: Vec<Vec<i64>> = (0..s)
                .map(|k| self.simple_roots.iter().map(|a| a[k]).collect())
                .collect();
            // nums * R = den * I for R the matrix with rows alpha_i, so mu = nums * m / den.
            let (nums, den) = linalg::left_inverse(&cols, s);
            let mut m = vec![0i64; s];
            loop {
                let mu: Option<Vec<i64>> = (0..s)
                    .map(|k| {
                        let x: i128 = (0..s).map(|i| nums[k][i] * m[i] as i128).sum();
                        (x % den == 0).then_some((x / den) as i64)
                    })
                    .collect();
                if let Some(mu) = mu {
                    let c = Coweight(mu);
                    debug_assert!(self.is_dominant(&c));
                    if self.two_rho(&c) <= max_dim {
                        out.push(c);
                    }
                }
                // odometer over m with sum <= max_dim
                let mut i = 0;
                loop {
                    if i == s {
                        out.sort();
                        return out;
                    }
                    m[i] += 1;
                    if m.iter().sum::<i64>() <= max_dim {
                        break;
                    }
                    m[i] = 0;
                    i += 1;
                }
            }
        }
        let mut c = vec![-radius; self.rank];
        loop {
            let cw = Coweight(c.clone());
            if self.is_dominant(&cw) && self.two_rho(&cw) <= max_dim {
                out.push(cw);
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort();
                    return out;
                }
                c[i] += 1;
                if c[i] <= radius {
                    break;
                }
                c[i] = -radius;
                i += 1;
            }
        }
    }

    /// Canonical residue of `c` modulo the coroot lattice.
    pub fn component_class(&self, c: &Coweight) -> Vec<i64> {
        let (u, d) = &self.component_reducer;
        let mut v = linalg::mat_vec(u, &c.0);
        for (x, &di) in v.iter_mut().zip(d) {
            *x = x.rem_euclid(di);
        }
        v
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn reflection_matrix(rank: usize, root: &[i64], coroot: &[i64]) -> Vec<Vec<i64>> {
    // s(c) = c - <alpha, c> alpha^vee
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| (i == j) as i64 - coroot[i] * root[j])
                .collect()
        })
        .collect()
}

fn check_cartan(c: &[Vec<i64>]) -> Result<(), DatumError> {
    let n = c.len();
    for i in 0..n {
        if c[i][i] != 2 {
            return Err(DatumError::NotCartan(format!(
                "diagonal entry {i} is {}",
                c[i][i]
            )));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if c[i][j] > 0 {
                return Err(DatumError::NotCartan(format!(
                    "entry ({i},{j}) is positive"
                )));
            }
            if (c[i][j] == 0) != (c[j][i] == 0) {
                return Err(DatumError::NotCartan(format!(
                    "entries ({i},{j}) and ({j},{i}) disagree on vanishing"
                )));
            }
        }
    }
    for k in 1..=n {
        let minor: Vec<Vec<i64>> = c[..k].iter().map(|r| r[..k].to_vec()).collect();
        if linalg::det(&minor) <= 0 {
            return Err(DatumError::NotCartan(format!(
                "leading minor of size {k} is not positive"
            )));
        }
    }
    Ok(())
}

/// Positive roots (or coroots) as coefficient vectors in the simple basis.
fn positive_closure(
    cartan: &[Vec<i64>],
    coroots: bool,
    cap: usize,
) -> Result<Vec<Vec<i64>>, DatumError> {
    let s = cartan.len();
    // <beta, alpha_i^vee> for beta = sum b_j alpha_j is sum_j b_j C[j][i]; coroots use C^T.
    let pair = |b: &[i64], i: usize| -> i64 {
        (0..s)
            .map(|j| b[j] * if coroots { cartan[i][j] } else { cartan[j][i] })
            .sum()
    };
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..s {
        let mut e = vec![0; s];
        e[i] = 1;
        all.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..s {
            let k = pair(&b, i);
            let mut r = b.clone();
            r[i] -= k;
            if all.insert(r.clone()) {
                if all.len() > cap {
                    return Err(DatumError::RootClosureTooLarge(cap));
                }
                queue.push_back(r);
            }
        }
    }
    Ok(all
        .into_iter()
        .filter(|b| b.iter().all(|&x| x >= 0))
        .collect())
}

fn generate_weyl(
    rank: usize,
    roots: &[Vec<i64>],
    coroots: &[Vec<i64>],
    cap: usize,
) -> Result<Vec<WeylElement>, DatumError> {
    let gens: Vec<Vec<Vec<i64>>> = roots
        .iter()
        .zip(coroots)
        .map(|(a, c)| reflection_matrix(rank, a, c))
        .collect();
    let id = WeylElement {
        matrix: linalg::identity(rank),
        word: Vec::new(),
    };
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    seen.insert(id.matrix.clone());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        for (i, g) in gens.iter().enumerate() {
            let matrix = linalg::mat_mul(g, &elements[head].matrix);
            if seen.contains(&matrix) {
                continue;
            }
            if elements.len() >= cap {
                return Err(DatumError::WeylGroupTooLarge(cap));
            }
            seen.insert(matrix.clone());
            let mut word = Vec::with_capacity(elements[head].word.len() + 1);
            word.push(i);
            word.extend_from_slice(&elements[head].word);
            elements.push(WeylElement { matrix, word });
        }
        head += 1;
    }
    Ok(elements)
}
