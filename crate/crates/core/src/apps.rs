//! Exponents for compact groups: homogeneous spaces `U_n / U_λ`, powers of
//! Haar-random unitary matrices, pseudo-Levi minima, and the arithmetic
//! that turns ε⋆ into multiplicity and convolution bounds.

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::epsilon::{EpsilonReport, FormulaId, Witness};
use crate::error::{Error, Result};
use crate::lattice::LatticeCaps;
use crate::partition::Partition;
use crate::rational::ExtRational;
use crate::roots::{RootSet, RootSystem, Subsystem};

/// Largest Weyl orbit of a subsystem that pseudo-Levi expansion will visit.
pub const ORBIT_CAP: usize = 1_000_000;

/// The `ℓ`-th power of a Haar-random `n × n` unitary matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerMeasureSpec {
    pub n: u32,
    pub ell: u32,
    /// `n mod ℓ`.
    pub j: u32,
    /// Block sizes of `H_{n,ℓ} = U_{⌊n/ℓ⌋+1}^j × U_{⌊n/ℓ⌋}^{ℓ−j}`.
    pub levi_partition: Partition,
    /// `min(n, ℓ)`.
    pub ell_tilde: u32,
}

impl PowerMeasureSpec {
    pub fn new(n: u32, ell: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!(
                "matrix size n = {n} (need n ≥ 2)"
            )));
        }
        if ell < 1 {
            return Err(Error::OutOfRange(format!("power ℓ = {ell} (need ℓ ≥ 1)")));
        }
        let (q, j) = (n / ell, n % ell);
        let mut parts = vec![q + 1; j as usize];
        parts.extend(std::iter::repeat_n(q, (ell - j).min(n) as usize));
        Ok(PowerMeasureSpec {
            n,
            ell,
            j,
            levi_partition: Partition::new(parts)?,
            ell_tilde: n.min(ell),
        })
    }
}

/// ε⋆ of the character of `L²(U_n / U_λ)`: `1/N` for `N ≥ 2` parts, and
/// `+∞` when `λ = (n)`.
pub fn epsilon_homogeneous_unitary(lambda: &Partition) -> Result<ExtRational> {
    match lambda.len() {
        0 => Err(Error::EmptyPartition),
        1 => Ok(ExtRational::Infinite),
        parts => Ok(ExtRational::ratio(1, parts as i64)),
    }
}

/// ε⋆ of the power measure, through the homogeneous space `U_n / H_{n,ℓ}`.
/// `ℓ = 1` is Haar measure itself and gives `+∞`.
pub fn epsilon_power_measure(spec: &PowerMeasureSpec) -> Result<ExtRational> {
    let value = epsilon_homogeneous_unitary(&spec.levi_partition)?;
    let expected = if spec.ell == 1 {
        ExtRational::Infinite
    } else {
        ExtRational::ratio(1, i64::from(spec.n.min(spec.ell)))
    };
    if value != expected {
        return Err(Error::Internal(format!(
            "power measure n={} ℓ={}: homogeneous route gives {value}, direct {expected}",
            spec.n, spec.ell
        )));
    }
    Ok(value)
}

/// Subsystems obtained from each component by deleting at least one vertex
/// of its extended Dynkin diagram (the empty subset included).
fn component_bds_choices(rs: &RootSystem, sub: &Subsystem) -> Vec<Vec<RootSet>> {
    sub.components(rs)
        .iter()
        .map(|comp| {
            let extended = component_extended_simple_within(rs, comp.positive());
            let size = extended.len();
            let mut choices: Vec<RootSet> = (0u32..(1 << size) - 1)
                .map(|mask| {
                    let kept: Vec<usize> = (0..size)
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| extended[b])
                        .collect();
                    rs.reflection_closure(&kept).positive()
                })
                .collect();
            choices.sort_by(|a, b| a.lex_cmp(*b));
            choices.dedup();
            choices
        })
        .collect()
}

/// Extended simple roots of an irreducible subsystem: its indecomposable
/// positive roots, then minus its highest root. Parent height is positive
/// on the subsystem's simple roots, so it singles out the highest root.
fn component_extended_simple_within(rs: &RootSystem, comp: RootSet) -> Vec<usize> {
    let members: Vec<usize> = comp.iter().collect();
    let mut out: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&c| {
            !members
                .iter()
                .any(|&a| members.iter().any(|&b| rs.sum(a, b) == Some(c)))
        })
        .collect();
    if let Some(theta) = members.iter().copied().max_by_key(|&i| rs.height(i)) {
        out.push(rs.negate(theta));
    }
    out
}

fn product_choices(choices: &[Vec<RootSet>]) -> Vec<RootSet> {
    choices.iter().fold(vec![RootSet::EMPTY], |acc, options| {
        acc.iter()
            .flat_map(|a| options.iter().map(move |o| a.union(*o)))
            .collect()
    })
}

fn expand_orbits(
    rs: &RootSystem,
    seeds: impl IntoIterator<Item = RootSet>,
) -> Result<Vec<Subsystem>> {
    let mut seen: HashSet<RootSet> = HashSet::new();
    let mut out = Vec::new();
    for seed in seeds {
        if seen.contains(&seed) {
            continue;
        }
        for sub in rs.subsystem_orbit(&Subsystem::from_positive(seed), ORBIT_CAP)? {
            if seen.insert(sub.positive()) {
                out.push(sub);
            }
        }
    }
    out.sort_by(|a, b| {
        a.positive()
            .len()
            .cmp(&b.positive().len())
            .then(a.positive().lex_cmp(b.positive()))
    });
    Ok(out)
}

/// Root subsystems of pseudo-Levi subalgebras, as positioned subsystems.
///
/// Each irreducible factor contributes the subsystems generated by proper
/// subsets of its extended simple roots; products of these are expanded to
/// full Weyl-group orbits. The Cartan subalgebra (empty subsystem) is
/// included.
pub fn pseudo_levi_subsystems(rs: &RootSystem, caps: LatticeCaps) -> Result<Vec<Subsystem>> {
    caps.check(rs)?;
    let full = rs.full()?;
    let seeds = product_choices(&component_bds_choices(rs, &full));
    let subs = expand_orbits(rs, seeds)?;
    for s in &subs {
        if !s.is_closed(rs) {
            return Err(Error::Internal(format!(
                "pseudo-Levi candidate {} is not closed",
                s.type_label(rs)
            )));
        }
    }
    Ok(subs)
}

/// Every subsystem reachable by repeating the extended-diagram deletion on
/// each component. This is the full set of closed subsystems and strictly
/// contains the pseudo-Levis in general (for example `D4 ⊂ F4`); it is kept
/// as a diagnostic.
pub fn bds_closed_subsystems(rs: &RootSystem, caps: LatticeCaps) -> Result<Vec<Subsystem>> {
    caps.check(rs)?;
    let full = rs.full()?;
    let mut seen: HashSet<RootSet> = HashSet::new();
    let mut stack = vec![full.positive()];
    seen.insert(full.positive());
    while let Some(set) = stack.pop() {
        let sub = Subsystem::from_positive(set);
        for next in product_choices(&component_bds_choices(rs, &sub)) {
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    expand_orbits(rs, seen)
}

/// Brute force: every symmetric subset of roots closed under addition.
pub fn closed_subsystems_brute_force(rs: &RootSystem) -> Result<Vec<Subsystem>> {
    let npos = rs.num_positive();
    if npos > 20 {
        return Err(Error::cap(format!("{npos} positive roots"), 20));
    }
    let mut out: Vec<Subsystem> = (0u128..1 << npos)
        .map(|bits| Subsystem::from_positive(RootSet::from_bits(bits)))
        .filter(|s| s.is_closed(rs))
        .collect();
    out.sort_by(|a, b| {
        a.positive()
            .len()
            .cmp(&b.positive().len())
            .then(a.positive().lex_cmp(b.positive()))
    });
    Ok(out)
}

/// `½ · min (ss.rk(l′) + 2|Σ⁺(l) ∩ Σ⁺(l′)|) / |Σ⁺(l′) \ Σ⁺(l)|` over the
/// candidates, skipping those contained in `l`.
fn pseudo_levi_min(rs: &RootSystem, levi: &Subsystem, candidates: &[Subsystem]) -> EpsilonReport {
    let mut best: Option<(ExtRational, RootSet)> = None;
    for cand in candidates {
        let outside = cand.positive().difference(levi.positive()).len();
        if cand.positive().is_empty() || outside == 0 {
            continue;
        }
        let inside = cand.positive().intersection(levi.positive()).len();
        let value = ExtRational::ratio(
            BigInt::from(cand.rank(rs) + 2 * inside),
            BigInt::from(2 * outside),
        );
        let better = match &best {
            None => true,
            Some((v, key)) => value < *v || (value == *v && cand.positive().lex_cmp(*key).is_lt()),
        };
        if better {
            best = Some((value, cand.positive()));
        }
    }
    match best {
        Some((value, key)) => EpsilonReport {
            value,
            witness: Witness::Subsystem(Subsystem::from_positive(key).describe(rs)),
            formula_id: FormulaId::PseudoLevis,
        },
        None => EpsilonReport {
            value: ExtRational::Infinite,
            witness: Witness::FullLevi,
            formula_id: FormulaId::PseudoLevis,
        },
    }
}

fn check_levi(rs: &RootSystem, levi: &Subsystem) -> Result<()> {
    if !levi.positive().is_subset(rs.full()?.positive()) || !levi.is_closed(rs) {
        return Err(Error::NotSubsystem(format!(
            "{} positive roots are not a closed subsystem of {}",
            levi.positive_count(),
            rs.label()
        )));
    }
    Ok(())
}

/// ε⋆ of `L²(K/L)` for a compact group `K` with root system `rs` and
/// connected subgroup `L` with root subsystem `levi`, as a minimum over all
/// pseudo-Levi subalgebras.
pub fn epsilon_pseudo_levi(
    rs: &RootSystem,
    levi: &Subsystem,
    caps: LatticeCaps,
) -> Result<EpsilonReport> {
    check_levi(rs, levi)?;
    let candidates = pseudo_levi_subsystems(rs, caps)?;
    Ok(pseudo_levi_min(rs, levi, &candidates))
}

/// The same minimum restricted to pseudo-Levis with simple derived algebra.
/// Reported for comparison only; whether it always matches is not known.
pub fn epsilon_pseudo_levi_simple_derived(
    rs: &RootSystem,
    levi: &Subsystem,
    caps: LatticeCaps,
) -> Result<EpsilonReport> {
    check_levi(rs, levi)?;
    let candidates: Vec<Subsystem> = pseudo_levi_subsystems(rs, caps)?
        .into_iter()
        .filter(|s| s.is_irreducible(rs))
        .collect();
    Ok(pseudo_levi_min(rs, levi, &candidates))
}

/// Exponent `1 − 2ε/(1+ε)` in the multiplicity bound
/// `dim Hom_K(τ, π|_K) < C (dim τ)^exponent`, valid for every `ε < ε⋆`.
/// `ε = +∞` maps to the formal limit `−1`.
pub fn mult_exponent(epsilon: &ExtRational) -> Result<ExtRational> {
    match epsilon {
        ExtRational::Infinite => Ok(ExtRational::integer(-1)),
        ExtRational::Finite(e) => {
            if epsilon.is_negative() {
                return Err(Error::OutOfRange(format!("ε = {e} (need ε ≥ 0)")));
            }
            let one = num_rational::BigRational::from_integer(1.into());
            Ok(ExtRational::Finite((&one - e) / (&one + e)))
        }
    }
}

/// Bound on the Fourier coefficients of a power measure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FourierBound {
    /// `a_ρ ≪ (dim ρ)^{exponent + δ}` for every `δ > 0`.
    Exponent(ExtRational),
    /// Each coefficient is at most 1 (the `ℓ = 2` case).
    MultiplicityAtMostOne,
}

/// Fourier exponent `1 − 2/(min(n,ℓ)+1)` for `ℓ ≥ 3`; `ℓ = 2` gives the
/// sharp bound 1.
pub fn fourier_power_exponent(n: u32, ell: u32) -> Result<FourierBound> {
    if n < 2 || ell < 2 {
        return Err(Error::OutOfRange(format!(
            "n = {n}, ℓ = {ell} (need both ≥ 2)"
        )));
    }
    if ell == 2 {
        return Ok(FourierBound::MultiplicityAtMostOne);
    }
    let t = i64::from(n.min(ell));
    Ok(FourierBound::Exponent(ExtRational::ratio(t - 1, t + 1)))
}

/// Convolution powers of a power measure that gain regularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConvolutionSmoothing {
    /// Smallest power whose density lies in every `L^q`, `q < ∞`.
    pub k_all_q: u32,
    /// Smallest power with bounded density.
    pub k_bounded: u32,
}

pub fn convolution_smoothing(n: u32, ell: u32) -> Result<ConvolutionSmoothing> {
    if n < 2 || ell < 2 {
        return Err(Error::OutOfRange(format!(
            "n = {n}, ℓ = {ell} (need both ≥ 2)"
        )));
    }
    let t = n.min(ell);
    Ok(ConvolutionSmoothing {
        k_all_q: t + 1,
        k_bounded: t + 2,
    })
}
