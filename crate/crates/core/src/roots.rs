//! Reduced crystallographic root systems with a fixed positive system.
//!
//! Roots are generated from simple roots by reflection closure and kept in
//! two coordinate systems: integer ambient coordinates (for the pairing)
//! and simple-root coefficients (for heights, spans and lookups). Positive
//! roots occupy indices `0..npos`, sorted by height, with simple root `i`
//! at index `i`; the negative of root `k` sits at `k + npos`.
//!
//! Subsets of positive roots are [`RootSet`] bitmasks, which caps subsystem
//! work at 128 positive roots (E8 has 120).

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::Partition;

/// Default cap on the order of an explicitly materialized Weyl group.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;
/// Largest total rank accepted by [`RootSystem::build`].
pub const MAX_BUILD_RANK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Cartan type such as `A5` or `F4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!(
                "{}{rank}",
                family.letter()
            )))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Coxeter number from the classical table. Used only as a regression
    /// reference; the library computes `h` from the constructed roots.
    pub fn coxeter_number_table(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r + 1,
            Family::B | Family::C => 2 * r,
            Family::D => 2 * r - 2,
            Family::E => [12, 18, 30][r - 6],
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// Classical order of the Weyl group, saturating at `u128::MAX`.
    pub fn weyl_order(self) -> u128 {
        let r = self.rank as u128;
        let fact = |k: u128| (1..=k).try_fold(1u128, |a, b| a.checked_mul(b));
        let pow2 = |k: u128| 1u128.checked_shl(k as u32);
        let order = match self.family {
            Family::A => fact(r + 1),
            Family::B | Family::C => fact(r).and_then(|f| pow2(r).and_then(|p| p.checked_mul(f))),
            Family::D => fact(r).and_then(|f| pow2(r - 1).and_then(|p| p.checked_mul(f))),
            Family::E => Some([51_840, 2_903_040, 696_729_600][self.rank - 6]),
            Family::F => Some(1152),
            Family::G => Some(12),
        };
        order.unwrap_or(u128::MAX)
    }

    /// Parse a comma list such as `"A5,D4,G2"`.
    pub fn parse_list(text: &str) -> Result<Vec<CartanType>> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }

    /// Ambient dimension and simple roots of the standard realization.
    fn simple_roots(self) -> (usize, Vec<Vec<i64>>) {
        let r = self.rank;
        let unit_diff = |dim: usize, i: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v[i + 1] = -1;
            v
        };
        match self.family {
            Family::A => (r + 1, (0..r).map(|i| unit_diff(r + 1, i)).collect()),
            Family::B | Family::C | Family::D => {
                let mut simple: Vec<Vec<i64>> = (0..r - 1).map(|i| unit_diff(r, i)).collect();
                let mut last = vec![0; r];
                match self.family {
                    Family::B => last[r - 1] = 1,
                    Family::C => last[r - 1] = 2,
                    _ => {
                        last[r - 2] = 1;
                        last[r - 1] = 1;
                    }
                }
                simple.push(last);
                (r, simple)
            }
            Family::G => (3, vec![vec![1, -1, 0], vec![-2, 1, 1]]),
            // Coordinates doubled so that half-integer roots become integral.
            Family::F => (
                4,
                vec![
                    vec![0, 2, -2, 0],
                    vec![0, 0, 2, -2],
                    vec![0, 0, 0, 2],
                    vec![1, -1, -1, -1],
                ],
            ),
            Family::E => {
                let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], {
                    let mut v = vec![0; 8];
                    v[0] = 2;
                    v[1] = 2;
                    v
                }];
                for i in 0..6 {
                    let mut v = vec![0; 8];
                    v[i] = -2;
                    v[i + 1] = 2;
                    simple.push(v);
                }
                simple.truncate(r);
                (8, simple)
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::InvalidCartanType(t.to_string());
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A set of positive-root indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_bits(bits: u128) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Lexicographic comparison of the sorted index lists.
    pub fn lex_cmp(self, other: RootSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// A symmetric subset of the roots, stored by its positive part.
///
/// Subsystems do not borrow their parent; methods that need the ambient
/// system take it as an argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subsystem {
    positive: RootSet,
}

impl Subsystem {
    pub fn from_positive(positive: RootSet) -> Self {
        Subsystem { positive }
    }

    /// The empty subsystem, i.e. the Cartan subalgebra.
    pub fn cartan() -> Self {
        Subsystem::from_positive(RootSet::EMPTY)
    }

    pub fn positive(&self) -> RootSet {
        self.positive
    }

    pub fn positive_count(&self) -> usize {
        self.positive.len()
    }

    /// Number of roots, counting both signs.
    pub fn size(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_subset(&self, other: &Subsystem) -> bool {
        self.positive.is_subset(other.positive)
    }

    /// Semisimple rank: rank over Q of the roots.
    pub fn rank(&self, rs: &RootSystem) -> usize {
        rs.span_rank(self.positive)
    }

    /// Closed under addition inside the parent root system.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        rs.is_closed(self.positive)
    }

    /// Irreducible components, ordered by smallest positive-root index.
    pub fn components(&self, rs: &RootSystem) -> Vec<Subsystem> {
        rs.components(self.positive)
            .into_iter()
            .map(Subsystem::from_positive)
            .collect()
    }

    pub fn is_irreducible(&self, rs: &RootSystem) -> bool {
        !self.positive.is_empty() && self.components(rs).len() == 1
    }

    /// Cartan types of the components, e.g. `[A2, A1]`.
    pub fn cartan_types(&self, rs: &RootSystem) -> Result<Vec<CartanType>> {
        self.components(rs)
            .iter()
            .map(|c| rs.classify_irreducible(c.positive))
            .collect()
    }

    /// A short label such as `A2+A1`, or `T` for the empty subsystem.
    pub fn type_label(&self, rs: &RootSystem) -> String {
        match self.cartan_types(rs) {
            Ok(types) if types.is_empty() => "T".to_string(),
            Ok(types) => types
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("+"),
            Err(_) => "?".to_string(),
        }
    }

    pub fn describe(&self, rs: &RootSystem) -> SubsystemDescription {
        SubsystemDescription {
            subsystem_type: self.type_label(rs),
            positive_roots: self
                .positive
                .iter()
                .map(|i| rs.ambient(i).to_vec())
                .collect(),
        }
    }
}

/// Serializable description of a subsystem, used for witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsystemDescription {
    #[serde(rename = "type")]
    pub subsystem_type: String,
    /// Positive roots in ambient coordinates.
    pub positive_roots: Vec<Vec<i64>>,
}

/// A finite reduced crystallographic root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    factors: Vec<CartanType>,
    gl: Option<usize>,
    ambient_dim: usize,
    rank: usize,
    simple: Vec<Vec<i64>>,
    /// `cartan[i][j] = <α_i, α_j^∨>`.
    cartan: Vec<Vec<i64>>,
    npos: usize,
    ambient: Vec<Vec<i64>>,
    coeffs: Vec<Vec<i64>>,
    by_coeffs: HashMap<Vec<i64>, usize>,
    /// Permutations of all root indices by the simple reflections.
    reflections: Vec<Vec<u32>>,
}

impl RootSystem {
    /// The standard realization of an irreducible type.
    pub fn build(ty: CartanType) -> Result<Self> {
        Self::from_factors(&[ty])
    }

    /// gl_n: type `A_{n-1}` with roots `ε_i − ε_j` in `n` coordinates.
    pub fn gl(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("gl(0)".into()));
        }
        if n == 1 {
            return Self::assemble(format!("gl({n})"), vec![], Some(1), 1, vec![]);
        }
        let ty = CartanType::new(Family::A, n - 1)?;
        let (dim, simple) = ty.simple_roots();
        Self::assemble(format!("gl({n})"), vec![ty], Some(n), dim, simple)
    }

    /// Orthogonal direct sum of irreducible types.
    pub fn from_factors(factors: &[CartanType]) -> Result<Self> {
        let mut dim = 0;
        let mut blocks = Vec::new();
        for ty in factors {
            let (d, simple) = ty.simple_roots();
            blocks.push((dim, d, simple));
            dim += d;
        }
        let mut simple = Vec::new();
        for (offset, _, block) in blocks {
            for root in block {
                let mut v = vec![0; dim];
                v[offset..offset + root.len()].copy_from_slice(&root);
                simple.push(v);
            }
        }
        let label = factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        Self::assemble(label, factors.to_vec(), None, dim, simple)
    }

    /// Parse `"A3"`, `"A5,D4"` or `"gl4"` / `"gl(4)"`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("gl") {
            let n: usize = rest
                .trim_start_matches('(')
                .trim_end_matches(')')
                .trim()
                .parse()
                .map_err(|_| Error::InvalidCartanType(t.to_string()))?;
            return Self::gl(n);
        }
        let factors = CartanType::parse_list(t)?;
        if factors.is_empty() {
            return Err(Error::InvalidCartanType(t.to_string()));
        }
        Self::from_factors(&factors)
    }

    fn assemble(
        label: String,
        factors: Vec<CartanType>,
        gl: Option<usize>,
        ambient_dim: usize,
        simple: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let rank = simple.len();
        if rank > MAX_BUILD_RANK {
            return Err(Error::cap(format!("rank {rank}"), MAX_BUILD_RANK));
        }
        let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let mut cartan = vec![vec![0; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * dot(&simple[i], &simple[j]);
                let den = dot(&simple[j], &simple[j]);
                if num % den != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral Cartan entry ({i},{j})"
                    )));
                }
                cartan[i][j] = num / den;
            }
        }

        // Reflection closure of the simple roots, in coefficient coordinates.
        let reflect = |c: &[i64], j: usize| -> Vec<i64> {
            let pairing: i64 = (0..rank).map(|i| c[i] * cartan[i][j]).sum();
            let mut out = c.to_vec();
            out[j] -= pairing;
            out
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(c) = queue.pop_front() {
            for j in 0..rank {
                let image = reflect(&c, j);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }

        let mut positive: Vec<Vec<i64>> = Vec::new();
        let mut negative_count = 0;
        for c in &seen {
            if c.iter().all(|&x| x >= 0) {
                positive.push(c.clone());
            } else if c.iter().all(|&x| x <= 0) {
                negative_count += 1;
            } else {
                return Err(Error::Internal(format!("root {c:?} has mixed signs")));
            }
        }
        if negative_count != positive.len() {
            return Err(Error::Internal("roots are not symmetric".into()));
        }
        positive.sort_by_key(|c| (c.iter().sum::<i64>(), Reverse(c.clone())));
        let npos = positive.len();
        let mut coeffs = positive.clone();
        coeffs.extend(
            positive
                .iter()
                .map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        let ambient: Vec<Vec<i64>> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0; ambient_dim];
                for (k, &ck) in c.iter().enumerate() {
                    for (x, s) in v.iter_mut().zip(&simple[k]) {
                        *x += ck * s;
                    }
                }
                v
            })
            .collect();
        let by_coeffs: HashMap<Vec<i64>, usize> = coeffs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        if by_coeffs.len() != 2 * npos {
            return Err(Error::Internal("duplicate roots".into()));
        }
        let reflections = (0..rank)
            .map(|j| {
                coeffs
                    .iter()
                    .map(|c| by_coeffs[&reflect(c, j)] as u32)
                    .collect()
            })
            .collect();

        let rs = RootSystem {
            label,
            factors,
            gl,
            ambient_dim,
            rank,
            simple,
            cartan,
            npos,
            ambient,
            coeffs,
            by_coeffs,
            reflections,
        };
        // Reduced: no root is twice another.
        for c in &rs.coeffs {
            let doubled: Vec<i64> = c.iter().map(|x| 2 * x).collect();
            if rs.by_coeffs.contains_key(&doubled) {
                return Err(Error::Internal("root system is not reduced".into()));
            }
        }
        Ok(rs)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Irreducible factors in construction order (one factor for `gl(n)`, `n ≥ 2`).
    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }

    /// `Some(n)` for the gl_n realization.
    pub fn gl_size(&self) -> Option<usize> {
        self.gl
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Semisimple rank (number of simple roots).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        2 * self.npos
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Ambient coordinates of root `i` (any sign).
    pub fn ambient(&self, i: usize) -> &[i64] {
        &self.ambient[i]
    }

    /// Simple-root coefficients of root `i`.
    pub fn coeffs(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coeffs[i].iter().sum()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negate(&self, i: usize) -> usize {
        (i + self.npos) % (2 * self.npos)
    }

    /// Index of the positive root `±root_i`.
    pub fn positive_rep(&self, i: usize) -> usize {
        i % self.npos
    }

    pub fn index_of_coeffs(&self, c: &[i64]) -> Option<usize> {
        self.by_coeffs.get(c).copied()
    }

    pub fn index_of_ambient(&self, v: &[i64]) -> Option<usize> {
        self.ambient.iter().position(|a| a == v)
    }

    /// Euclidean pairing of two roots in ambient coordinates.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.ambient[i]
            .iter()
            .zip(&self.ambient[j])
            .map(|(x, y)| x * y)
            .sum()
    }

    /// Index of `root_i + root_j` if it is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let c: Vec<i64> = self.coeffs[i]
            .iter()
            .zip(&self.coeffs[j])
            .map(|(a, b)| a + b)
            .collect();
        self.index_of_coeffs(&c)
    }

    /// Index of `s_{root_a}(root_b)`.
    pub fn reflect(&self, a: usize, b: usize) -> usize {
        let k = 2 * self.pairing(a, b) / self.pairing(a, a);
        let c: Vec<i64> = self.coeffs[b]
            .iter()
            .zip(&self.coeffs[a])
            .map(|(x, y)| x - k * y)
            .collect();
        self.by_coeffs[&c]
    }

    /// All positive roots.
    pub fn all_positive(&self) -> RootSet {
        (0..self.npos.min(128)).collect()
    }

    fn check_mask_capacity(&self) -> Result<()> {
        if self.npos > 128 {
            Err(Error::cap(format!("{} positive roots", self.npos), 128))
        } else {
            Ok(())
        }
    }

    /// The whole root system as a subsystem of itself.
    pub fn full(&self) -> Result<Subsystem> {
        self.check_mask_capacity()?;
        Ok(Subsystem::from_positive(self.all_positive()))
    }

    pub fn is_irreducible(&self) -> bool {
        self.rank > 0 && self.components(self.all_positive()).len() == 1
    }

    /// Rank over Q of a set of positive roots.
    pub fn span_rank(&self, set: RootSet) -> usize {
        let mut e = Echelon::new();
        for i in set.iter() {
            e.insert(&self.coeffs[i]);
        }
        e.rank()
    }

    /// All positive roots in the Q-span of `set`.
    pub fn saturate(&self, set: RootSet) -> RootSet {
        let mut e = Echelon::new();
        for i in set.iter() {
            e.insert(&self.coeffs[i]);
        }
        (0..self.npos)
            .filter(|&i| e.contains(&self.coeffs[i]))
            .collect()
    }

    fn is_closed(&self, set: RootSet) -> bool {
        let signed: Vec<usize> = set.iter().flat_map(|i| [i, self.negate(i)]).collect();
        signed.iter().all(|&a| {
            signed.iter().all(|&b| match self.sum(a, b) {
                Some(c) => set.contains(self.positive_rep(c)),
                None => true,
            })
        })
    }

    fn components(&self, set: RootSet) -> Vec<RootSet> {
        let mut remaining = set;
        let mut out = Vec::new();
        while let Some(start) = remaining.iter().next() {
            let mut comp = RootSet::EMPTY;
            comp.insert(start);
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for b in remaining.difference(comp).iter() {
                    if self.pairing(a, b) != 0 {
                        comp.insert(b);
                        stack.push(b);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Identify an irreducible set of positive roots by size, rank and root lengths.
    fn classify_irreducible(&self, set: RootSet) -> Result<CartanType> {
        let p = set.len();
        let r = self.span_rank(set);
        let norms: BTreeSet<i64> = set.iter().map(|i| self.pairing(i, i)).collect();
        let unknown = || {
            Error::Internal(format!(
                "unrecognized component: {p} positive roots, rank {r}"
            ))
        };
        if norms.len() == 1 {
            let ty = match p {
                _ if p == r * (r + 1) / 2 => CartanType::new(Family::A, r),
                _ if r >= 4 && p == r * (r - 1) => CartanType::new(Family::D, r),
                36 if r == 6 => CartanType::new(Family::E, 6),
                63 if r == 7 => CartanType::new(Family::E, 7),
                120 if r == 8 => CartanType::new(Family::E, 8),
                _ => return Err(unknown()),
            };
            return ty;
        }
        let short = *norms.iter().next().ok_or_else(unknown)?;
        let short_count = set.iter().filter(|&i| self.pairing(i, i) == short).count();
        match (r, p) {
            (2, 6) => CartanType::new(Family::G, 2),
            (4, 24) => CartanType::new(Family::F, 4),
            _ if p == r * r && short_count == r => CartanType::new(Family::B, r),
            _ if p == r * r && short_count == r * (r - 1) => CartanType::new(Family::C, r),
            _ => Err(unknown()),
        }
    }

    /// Index of the highest root; errors unless irreducible.
    pub fn highest_root(&self) -> Result<usize> {
        if !self.is_irreducible() {
            return Err(Error::Reducible);
        }
        let top = (0..self.npos).map(|i| self.height(i)).max().unwrap_or(0);
        let tops: Vec<usize> = (0..self.npos).filter(|&i| self.height(i) == top).collect();
        match tops.as_slice() {
            [only] => Ok(*only),
            _ => Err(Error::Internal("highest root is not unique".into())),
        }
    }

    /// Simple roots followed by `−θ`, as root indices.
    pub fn extended_simple_indices(&self) -> Result<Vec<usize>> {
        let theta = self.highest_root()?;
        let mut out: Vec<usize> = (0..self.rank).collect();
        out.push(self.negate(theta));
        Ok(out)
    }

    /// Simple roots followed by `−θ`, in ambient coordinates.
    pub fn extended_simple_roots(&self) -> Result<Vec<Vec<i64>>> {
        Ok(self
            .extended_simple_indices()?
            .into_iter()
            .map(|i| self.ambient[i].clone())
            .collect())
    }

    /// Coxeter number as `|Σ| / rank`, cross-checked against `ht(θ) + 1`
    /// and the order of a Coxeter element.
    pub fn coxeter_number(&self) -> Result<usize> {
        let theta = self.highest_root()?;
        if !self.num_roots().is_multiple_of(self.rank) {
            return Err(Error::Internal(format!(
                "{} roots not divisible by rank {}",
                self.num_roots(),
                self.rank
            )));
        }
        let by_count = self.num_roots() / self.rank;
        let by_height = self.height(theta) as usize + 1;
        let by_order = self.coxeter_element_order();
        if by_count != by_height || by_count != by_order {
            return Err(Error::Internal(format!(
                "Coxeter number routes disagree: {by_count}, {by_height}, {by_order}"
            )));
        }
        Ok(by_count)
    }

    /// Order of `s_1 s_2 ⋯ s_r` acting on the roots.
    pub fn coxeter_element_order(&self) -> usize {
        let n = self.num_roots();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for refl in self.reflections.iter().rev() {
            perm = perm.iter().map(|&k| refl[k as usize]).collect();
        }
        permutation_order(&perm)
    }

    /// Classical Weyl group order.
    pub fn weyl_order(&self) -> u128 {
        self.factors
            .iter()
            .map(|t| t.weyl_order())
            .fold(1u128, |a, b| a.saturating_mul(b))
    }

    /// Materialize the Weyl group by closure under simple reflections.
    pub fn weyl_group(&self, cap: usize) -> Result<WeylGroup> {
        let order = self.weyl_order();
        if order > cap as u128 {
            return Err(Error::WeylGroupTooLarge { order, cap });
        }
        let n = self.num_roots();
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for refl in &self.reflections {
                let next: Vec<u32> = w.iter().map(|&k| refl[k as usize]).collect();
                if seen.insert(next.clone()) {
                    if elements.len() >= cap {
                        return Err(Error::WeylGroupTooLarge {
                            order: order.max(cap as u128 + 1),
                            cap,
                        });
                    }
                    elements.push(next);
                }
            }
        }
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!(
                "Weyl group closure has {} elements, expected {order}",
                elements.len()
            )));
        }
        Ok(WeylGroup {
            rank: self.rank,
            npos: self.npos,
            elements,
        })
    }

    /// Standard Levi generated by the simple roots with the given 1-based labels.
    pub fn levi_subsystem(&self, simple_labels: &[usize]) -> Result<Subsystem> {
        self.check_mask_capacity()?;
        let mut allowed = vec![false; self.rank];
        for &label in simple_labels {
            if label == 0 || label > self.rank {
                return Err(Error::OutOfRange(format!("simple root label {label}")));
            }
            allowed[label - 1] = true;
        }
        let set = (0..self.npos)
            .filter(|&i| {
                self.coeffs[i]
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || allowed[k])
            })
            .collect();
        Ok(Subsystem::from_positive(set))
    }

    /// Block-diagonal Levi `gl_{b_1} ⊕ ⋯` of the gl_n realization, blocks on
    /// consecutive coordinates in the order given by the partition.
    pub fn gl_block_levi(&self, blocks: &Partition) -> Result<Subsystem> {
        let n = self.gl.ok_or_else(|| {
            Error::NotSubsystem(format!("{} is not a gl realization", self.label))
        })?;
        if blocks.size() as usize != n {
            return Err(Error::NotSubsystem(format!(
                "blocks {blocks} do not partition {n}"
            )));
        }
        let mut labels = Vec::new();
        let mut start = 0;
        for &b in blocks.parts() {
            let b = b as usize;
            labels.extend(start + 1..start + b);
            start += b;
        }
        self.levi_subsystem(&labels)
    }

    /// Subsystem generated by roots (any signs) under their own reflections.
    pub fn reflection_closure(&self, generators: &[usize]) -> Subsystem {
        let mut set: RootSet = generators.iter().map(|&i| self.positive_rep(i)).collect();
        loop {
            let members: Vec<usize> = set.iter().collect();
            let mut grown = set;
            for &a in &members {
                for &b in &members {
                    grown.insert(self.positive_rep(self.reflect(a, b)));
                }
            }
            if grown == set {
                return Subsystem::from_positive(set);
            }
            set = grown;
        }
    }

    /// The Weyl-group orbit of a subsystem, sorted lexicographically.
    ///
    /// Computed by closure under simple reflections, so it needs no group
    /// materialization. Errors once more than `cap` subsystems are found.
    pub fn subsystem_orbit(&self, sub: &Subsystem, cap: usize) -> Result<Vec<Subsystem>> {
        let pos_reflections: Vec<Vec<usize>> = self
            .reflections
            .iter()
            .map(|r| {
                (0..self.npos)
                    .map(|k| self.positive_rep(r[k] as usize))
                    .collect()
            })
            .collect();
        let mut seen: HashSet<RootSet> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(sub.positive);
        queue.push_back(sub.positive);
        while let Some(set) = queue.pop_front() {
            for refl in &pos_reflections {
                let image: RootSet = set.iter().map(|k| refl[k]).collect();
                if seen.insert(image) {
                    if seen.len() > cap {
                        return Err(Error::cap("subsystem orbit size", cap));
                    }
                    queue.push_back(image);
                }
            }
        }
        let mut out: Vec<RootSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        Ok(out.into_iter().map(Subsystem::from_positive).collect())
    }
}

/// A Weyl group stored as permutations of the root indices.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    npos: usize,
    elements: Vec<Vec<u32>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    /// Integer matrix of element `w` in the basis of simple roots: column
    /// `j` holds the coefficients of `w(α_j)`.
    pub fn matrix_in_simple_basis(&self, rs: &RootSystem, w: usize) -> Vec<Vec<i64>> {
        let perm = &self.elements[w];
        let mut m = vec![vec![0; self.rank]; self.rank];
        for j in 0..self.rank {
            let image = rs.coeffs(perm[j] as usize);
            for i in 0..self.rank {
                m[i][j] = image[i];
            }
        }
        m
    }

    /// Whether `w` maps the positive system onto itself.
    pub fn fixes_positive_system(&self, w: usize) -> bool {
        self.elements[w][..self.npos]
            .iter()
            .all(|&k| (k as usize) < self.npos)
    }
}

fn permutation_order(perm: &[u32]) -> usize {
    use num_integer::Integer;
    let mut visited = vec![false; perm.len()];
    let mut order = 1usize;
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !visited[k] {
            visited[k] = true;
            k = perm[k] as usize;
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}
