//! Closed-form thresholds: ε⋆ of nilpotent orbits in gl_n, relative lct of
//! the Weyl discriminant, and Coxeter-number bounds.
//!
//! Two partitions are in play and are never conjugated silently:
//! a *Jordan partition* names a nilpotent orbit, a *Levi partition* names
//! the block sizes of `gl_{ν_1} ⊕ ⋯ ⊕ gl_{ν_M}`. The orbit with Jordan
//! partition `ν` is Richardson for the Levi with blocks `ν^t`.
//!
//! All values are thresholds of a supremum that is not attained: the
//! integrability or convergence holds strictly below the reported value.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{ArrangementLattice, FlatDescription, LatticeCaps};
use crate::partition::{choose2, Partition};
use crate::rational::ExtRational;
use crate::roots::{CartanType, RootSet, RootSystem, Subsystem, SubsystemDescription};

/// Which closed form produced a report. The serialized tags are part of the
/// JSON interface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormulaId {
    /// Minimum over prefixes of the Jordan partition.
    #[serde(rename = "thmC")]
    OrbitPrefixMinimum,
    /// Ratio of semisimple rank plus nilradical dimensions over prefixes.
    #[serde(rename = "remark1.6")]
    OrbitNilradical,
    /// Column-filling minimum for a block Levi of gl_n.
    #[serde(rename = "prop3.10")]
    BlockLeviDiscriminant,
    /// `2/h` for a simple type.
    #[serde(rename = "prop3.5")]
    SimpleCoxeter,
    /// `min 2/h_i` over simple factors.
    #[serde(rename = "cor3.6")]
    ReductiveCoxeter,
    /// Lower bound for admissible representations.
    #[serde(rename = "thmB")]
    RepresentationBound,
    /// Minimum over Levis with simple derived algebra.
    #[serde(rename = "prop3.8")]
    SimpleDerivedLevis,
    /// ε⋆ of a representation read off its maximal orbit.
    #[serde(rename = "thmD")]
    MaximalOrbit,
    /// Minimum over pseudo-Levi subalgebras of a compact group.
    #[serde(rename = "thmF")]
    PseudoLevis,
}

impl FormulaId {
    pub fn tag(self) -> &'static str {
        match self {
            FormulaId::OrbitPrefixMinimum => "thmC",
            FormulaId::OrbitNilradical => "remark1.6",
            FormulaId::BlockLeviDiscriminant => "prop3.10",
            FormulaId::SimpleCoxeter => "prop3.5",
            FormulaId::ReductiveCoxeter => "cor3.6",
            FormulaId::RepresentationBound => "thmB",
            FormulaId::SimpleDerivedLevis => "prop3.8",
            FormulaId::MaximalOrbit => "thmD",
            FormulaId::PseudoLevis => "thmF",
        }
    }
}

/// The argument at which a minimum is attained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// Prefix length of a Jordan partition, or a column count in the full scan.
    #[serde(rename = "k")]
    K(usize),
    /// Number of leading columns in the endpoint form.
    #[serde(rename = "s")]
    S(usize),
    Factor(CartanType),
    Flat(FlatDescription),
    Subsystem(SubsystemDescription),
    /// The value is `+∞` because the orbit is zero.
    ZeroOrbit,
    /// The value is `+∞` because the Levi is everything.
    FullLevi,
    /// The value is `+∞` because nothing constrains it.
    Unconstrained,
}

/// A threshold together with where and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonReport {
    pub value: ExtRational,
    pub witness: Witness,
    pub formula_id: FormulaId,
}

/// Keep the first minimizer.
fn push_min<W>(best: &mut Option<(ExtRational, W)>, value: ExtRational, witness: W) {
    if best.as_ref().is_none_or(|(v, _)| value < *v) {
        *best = Some((value, witness));
    }
}

fn ratio(num: u64, den: u64) -> ExtRational {
    ExtRational::ratio(BigInt::from(num), BigInt::from(den))
}

/// ε⋆ of the Fourier transform of the orbital integral of the nilpotent
/// orbit with Jordan partition `nu`:
///
/// `min_k (Σ_{j≤k} j ν_j − 1) / (C(n_k, 2) − Σ_{j≤k} (j−1) ν_j)`, `n_k = ν_1 + ⋯ + ν_k`.
///
/// The zero orbit gives `+∞`. The witness is the smallest minimizing `k`.
pub fn epsilon_orbit_gln(nu: &Partition) -> Result<EpsilonReport> {
    if nu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let formula_id = FormulaId::OrbitPrefixMinimum;
    if nu.largest() == 1 {
        return Ok(EpsilonReport {
            value: ExtRational::Infinite,
            witness: Witness::ZeroOrbit,
            formula_id,
        });
    }
    let mut best = None;
    let (mut n_k, mut weighted, mut shifted) = (0u64, 0u64, 0u64);
    for (idx, &part) in nu.parts().iter().enumerate() {
        let j = idx as u64 + 1;
        let part = u64::from(part);
        n_k += part;
        weighted += j * part;
        shifted += (j - 1) * part;
        let den = choose2(n_k) - shifted;
        if den > 0 {
            push_min(&mut best, ratio(weighted - 1, den), idx + 1);
        }
    }
    let (value, k) = best.ok_or_else(|| Error::Internal(format!("no finite term for {nu}")))?;
    Ok(EpsilonReport {
        value,
        witness: Witness::K(k),
        formula_id,
    })
}

/// The same invariant through nilradical dimensions:
/// `min_k (ss.rk(gl_{n_k}) + dim n_k') / (dim n_{n_k} − dim n_k')`, where
/// `n_k'` is the nilradical attached to the prefix `(ν_1,…,ν_k)` read as
/// columns.
pub fn epsilon_orbit_geometric(nu: &Partition) -> Result<ExtRational> {
    if nu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if nu.largest() == 1 {
        return Ok(ExtRational::Infinite);
    }
    let mut best: Option<(ExtRational, ())> = None;
    for k in 1..=nu.len() {
        let prefix = Partition::new(nu.parts()[..k].to_vec())?;
        let n_k = u64::from(prefix.size());
        let nilradical: u64 = prefix
            .conjugate()
            .parts()
            .iter()
            .map(|&c| choose2(c.into()))
            .sum();
        let full = choose2(n_k);
        if full > nilradical {
            push_min(
                &mut best,
                ratio(n_k - 1 + nilradical, full - nilradical),
                (),
            );
        }
    }
    best.map(|(v, _)| v)
        .ok_or_else(|| Error::Internal(format!("no finite term for {nu}")))
}

/// The orbit invariant computed by the lattice oracle: relative lct of the
/// gl_n arrangement for the Levi with blocks `ν^t`, with `m = 1`.
pub fn epsilon_orbit_oracle(nu: &Partition, caps: LatticeCaps) -> Result<EpsilonReport> {
    if nu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let rs = RootSystem::gl(nu.size() as usize)?;
    let lattice = ArrangementLattice::enumerate(&rs, caps)?;
    let levi = rs.gl_block_levi(&nu.conjugate())?;
    let (value, flat) = lattice.relative_lct(&levi, 1)?;
    Ok(EpsilonReport {
        value,
        witness: match flat {
            Some(f) => Witness::Flat(f.describe(&rs)),
            None => Witness::ZeroOrbit,
        },
        formula_id: FormulaId::SimpleDerivedLevis,
    })
}

/// Relative lct of the Weyl discriminant of gl_n with respect to the block
/// Levi `levi_partition`, with the Levi discriminant raised to `m`.
///
/// The value is the endpoint minimum over the first `s` columns of the
/// diagram (`λ = ν^t`, `n_s = λ_1 + ⋯ + λ_s`):
/// `min_s ((n_s − 1) + m Σ_{j≤s}(j−1)λ_j) / (C(n_s, 2) − Σ_{j≤s}(j−1)λ_j)`.
/// For `m = 0` and `m ≥ 2` the value is also checked against the collapsed
/// forms `(n−1)/dim n_ν` and `2/λ_1`. A single block gives `+∞`.
pub fn rlct_weyl_disc(levi_partition: &Partition, m: u32) -> Result<EpsilonReport> {
    let n = levi_partition.size();
    if n < 1 {
        return Err(Error::OutOfRange("n = 0".into()));
    }
    let formula_id = FormulaId::BlockLeviDiscriminant;
    if levi_partition.len() == 1 {
        return Ok(EpsilonReport {
            value: ExtRational::Infinite,
            witness: Witness::FullLevi,
            formula_id,
        });
    }
    let (value, s) = rlct_endpoint(levi_partition, m)?;
    let collapsed = match m {
        0 => {
            let dim_n = choose2(n.into())
                - levi_partition
                    .parts()
                    .iter()
                    .map(|&p| choose2(p.into()))
                    .sum::<u64>();
            Some(ratio(u64::from(n) - 1, dim_n))
        }
        1 => None,
        _ => Some(ratio(2, levi_partition.len() as u64)),
    };
    if let Some(c) = collapsed {
        if c != value {
            return Err(Error::Internal(format!(
                "collapsed form {c} differs from endpoint minimum {value} for {levi_partition}, m={m}"
            )));
        }
    }
    Ok(EpsilonReport {
        value,
        witness: Witness::S(s),
        formula_id,
    })
}

/// Endpoint minimum over `s = 1..ν_1`, with the smallest minimizing `s`.
pub fn rlct_endpoint(levi_partition: &Partition, m: u32) -> Result<(ExtRational, usize)> {
    let columns = levi_partition.conjugate();
    let m = u64::from(m);
    let mut best = None;
    let (mut n_s, mut psi) = (0u64, 0u64);
    for (idx, &height) in columns.parts().iter().enumerate() {
        n_s += u64::from(height);
        psi += idx as u64 * u64::from(height);
        let den = choose2(n_s) - psi;
        if den > 0 {
            push_min(&mut best, ratio(n_s - 1 + m * psi, den), idx + 1);
        }
    }
    Ok(best.unwrap_or((ExtRational::Infinite, 0)))
}

/// Minimum over every `k = 2..n` of `(k − 1 + m ψ_{ν,k}) / (C(k,2) − ψ_{ν,k})`.
pub fn rlct_full_scan(levi_partition: &Partition, m: u32) -> Result<(ExtRational, usize)> {
    let m = u64::from(m);
    let mut best = None;
    for k in 2..=levi_partition.size() {
        let psi = levi_partition.fill_stats(k)?.psi;
        let den = choose2(k.into()) - psi;
        if den > 0 {
            push_min(
                &mut best,
                ratio(u64::from(k) - 1 + m * psi, den),
                k as usize,
            );
        }
    }
    Ok(best.unwrap_or((ExtRational::Infinite, 0)))
}

/// `2/h` for a simple type, with `h` computed from the constructed roots.
pub fn lct_simple(ty: CartanType) -> Result<ExtRational> {
    let h = RootSystem::build(ty)?.coxeter_number()?;
    Ok(ratio(2, h as u64))
}

fn coxeter_minimum(factors: &[CartanType], formula_id: FormulaId) -> Result<EpsilonReport> {
    let mut best = None;
    for &ty in factors {
        push_min(&mut best, lct_simple(ty)?, ty);
    }
    Ok(match best {
        Some((value, ty)) => EpsilonReport {
            value,
            witness: Witness::Factor(ty),
            formula_id,
        },
        None => EpsilonReport {
            value: ExtRational::Infinite,
            witness: Witness::Unconstrained,
            formula_id,
        },
    })
}

/// `min_i 2/h_i` over the simple factors; `+∞` for a torus.
pub fn lct_reductive(factors: &[CartanType]) -> Result<EpsilonReport> {
    coxeter_minimum(factors, FormulaId::ReductiveCoxeter)
}

/// Lower bound `min_i 2/h_i` on ε⋆ of any admissible representation of a
/// group whose absolute simple factors are `factors`.
pub fn lower_bound_representation(factors: &[CartanType]) -> Result<EpsilonReport> {
    coxeter_minimum(factors, FormulaId::RepresentationBound)
}

/// Levis whose derived algebra is simple: the Weyl-group orbits of the
/// standard Levis on connected sets of simple roots.
pub fn simple_derived_levis(rs: &RootSystem) -> Result<Vec<(Subsystem, usize)>> {
    let rank = rs.rank();
    if rank >= 32 {
        return Err(Error::cap(format!("rank {rank}"), 31));
    }
    let cartan = rs.cartan_matrix();
    let mut out: Vec<(Subsystem, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mask in 1u32..(1 << rank) {
        let labels: Vec<usize> = (0..rank).filter(|k| mask >> k & 1 == 1).collect();
        // Connected in the Dynkin diagram.
        let mut reached = vec![labels[0]];
        let mut stack = vec![labels[0]];
        while let Some(a) = stack.pop() {
            for &b in &labels {
                if !reached.contains(&b) && cartan[a][b] != 0 {
                    reached.push(b);
                    stack.push(b);
                }
            }
        }
        if reached.len() != labels.len() {
            continue;
        }
        let one_based: Vec<usize> = labels.iter().map(|k| k + 1).collect();
        let standard = rs.levi_subsystem(&one_based)?;
        for sub in rs.subsystem_orbit(&standard, 1_000_000)? {
            if seen.insert(sub.positive()) {
                out.push((sub, labels.len()));
            }
        }
    }
    out.sort_by(|a, b| a.0.positive().lex_cmp(b.0.positive()));
    Ok(out)
}

/// Relative lct of the Weyl discriminant for an arbitrary Levi:
/// `min (ss.rk(l') + m |Σ⁺(l) ∩ Σ⁺(l')|) / |Σ⁺(l') \ Σ⁺(l)|` over Levis `l'`
/// with simple derived algebra, skipping those inside `l`.
///
/// The candidate Levis come from Weyl-group orbits of standard ones, not
/// from the flat lattice, so agreement with the lattice oracle is a real
/// cross-check.
pub fn general_relative_lct(
    rs: &RootSystem,
    levi: &Subsystem,
    m: u32,
    caps: LatticeCaps,
) -> Result<EpsilonReport> {
    caps.check(rs)?;
    if !levi.positive().is_subset(rs.full()?.positive()) || !levi.is_closed(rs) {
        return Err(Error::NotSubsystem(format!(
            "{} positive roots are not a closed subsystem of {}",
            levi.positive_count(),
            rs.label()
        )));
    }
    let mut best: Option<(ExtRational, RootSet)> = None;
    for (candidate, ss_rank) in simple_derived_levis(rs)? {
        let inside = candidate.positive().intersection(levi.positive()).len() as u64;
        let outside = candidate.positive().difference(levi.positive()).len() as u64;
        if outside == 0 {
            continue;
        }
        let value = ratio(ss_rank as u64 + u64::from(m) * inside, outside);
        let better = match &best {
            None => true,
            Some((v, key)) => {
                value < *v || (value == *v && candidate.positive().lex_cmp(*key).is_lt())
            }
        };
        if better {
            best = Some((value, candidate.positive()));
        }
    }
    Ok(match best {
        Some((value, key)) => EpsilonReport {
            value,
            witness: Witness::Subsystem(Subsystem::from_positive(key).describe(rs)),
            formula_id: FormulaId::SimpleDerivedLevis,
        },
        None => EpsilonReport {
            value: ExtRational::Infinite,
            witness: Witness::FullLevi,
            formula_id: FormulaId::SimpleDerivedLevis,
        },
    })
}

/// ε⋆ of an admissible representation of GL_n near the identity, given the
/// Jordan partition of the maximal orbit in its local character expansion.
pub fn epsilon_representation_gln(nu_max: &Partition) -> Result<EpsilonReport> {
    let report = epsilon_orbit_gln(nu_max)?;
    Ok(EpsilonReport {
        formula_id: FormulaId::MaximalOrbit,
        ..report
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn q(num: i64, den: i64) -> ExtRational {
        ExtRational::ratio(num, den)
    }

    #[test]
    fn orbit_table_values() {
        let table = [
            ("10", q(1, 5)),
            ("9,1", q(2, 9)),
            ("6,4", q(13, 41)),
            ("5,5", q(7, 20)),
            ("4,4,2", q(11, 24)),
            ("3,3,3,1", q(17, 27)),
            ("2^5", q(1, 1)),
            ("1^10", ExtRational::Infinite),
            ("4,4", q(11, 24)),
        ];
        for (nu, value) in table {
            assert_eq!(epsilon_orbit_gln(&p(nu)).unwrap().value, value, "{nu}");
        }
    }

    #[test]
    fn orbit_witnesses() {
        let r = epsilon_orbit_gln(&p("6,4")).unwrap();
        assert_eq!(r.witness, Witness::K(2));
        assert_eq!(r.formula_id, FormulaId::OrbitPrefixMinimum);
        // (4,4): k=1 gives 1/2, k=2 gives 11/24.
        assert_eq!(epsilon_orbit_gln(&p("4,4")).unwrap().witness, Witness::K(2));
        assert_eq!(
            epsilon_orbit_gln(&p("1,1")).unwrap().witness,
            Witness::ZeroOrbit
        );
        assert_eq!(
            epsilon_orbit_gln(&Partition::default()),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn regular_and_subregular() {
        for n in 3..=12u32 {
            assert_eq!(
                epsilon_orbit_gln(&Partition::row(n)).unwrap().value,
                q(2, n.into())
            );
            let sub = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(
                epsilon_orbit_gln(&sub).unwrap().value,
                q(2, i64::from(n) - 1)
            );
        }
    }

    #[test]
    fn geometric_route_agrees() {
        assert_eq!(epsilon_orbit_geometric(&p("6,4")).unwrap(), q(13, 41));
        assert_eq!(epsilon_orbit_geometric(&p("2,1")).unwrap(), q(1, 1));
        assert_eq!(epsilon_orbit_geometric(&p("7")).unwrap(), q(2, 7));
        for n in 1..=12 {
            for nu in Partition::enumerate(n, 30).unwrap() {
                assert_eq!(
                    epsilon_orbit_geometric(&nu).unwrap(),
                    epsilon_orbit_gln(&nu).unwrap().value,
                    "{nu}"
                );
            }
        }
    }

    #[test]
    fn weyl_discriminant_examples() {
        for n in 2..=9u32 {
            let r = rlct_weyl_disc(&Partition::column(n), 0).unwrap();
            assert_eq!(r.value, q(2, n.into()));
        }
        // Levi (2,1) with m = 1 is the Richardson Levi of the orbit (2,1).
        assert_eq!(rlct_weyl_disc(&p("2,1"), 1).unwrap().value, q(1, 1));
        assert_eq!(rlct_weyl_disc(&p("3,3,2"), 2).unwrap().value, q(2, 3));
        assert_eq!(
            rlct_weyl_disc(&p("5"), 1).unwrap().value,
            ExtRational::Infinite
        );
        assert_eq!(
            rlct_weyl_disc(&p("5"), 1).unwrap().witness,
            Witness::FullLevi
        );
        assert!(rlct_weyl_disc(&Partition::default(), 1).is_err());
    }

    #[test]
    fn endpoint_collapse() {
        for n in 2..=10 {
            for nu in Partition::enumerate(n, 30).unwrap() {
                for m in 0..=3 {
                    assert_eq!(
                        rlct_endpoint(&nu, m).unwrap().0,
                        rlct_full_scan(&nu, m).unwrap().0,
                        "{nu} m={m}"
                    );
                    // rlct_weyl_disc errors if a collapsed form disagrees.
                    rlct_weyl_disc(&nu, m).unwrap();
                }
            }
        }
    }

    #[test]
    fn levi_route_matches_orbit_route() {
        for n in 1..=12 {
            for nu in Partition::enumerate(n, 30).unwrap() {
                assert_eq!(
                    rlct_weyl_disc(&nu.conjugate(), 1).unwrap().value,
                    epsilon_orbit_gln(&nu).unwrap().value,
                    "{nu}"
                );
            }
        }
    }

    #[test]
    fn coxeter_bounds() {
        let t = |s: &str| CartanType::parse_list(s).unwrap();
        assert_eq!(lct_simple("A2".parse().unwrap()).unwrap(), q(2, 3));
        assert_eq!(lct_simple("E8".parse().unwrap()).unwrap(), q(1, 15));
        assert_eq!(lct_simple("A1".parse().unwrap()).unwrap(), q(1, 1));
        assert_eq!(lct_reductive(&t("A4,D4")).unwrap().value, q(1, 3));
        assert_eq!(
            lct_reductive(&t("A4,D4")).unwrap().witness,
            Witness::Factor("D4".parse().unwrap())
        );
        assert_eq!(lct_reductive(&t("A1")).unwrap().value, q(1, 1));
        assert_eq!(lct_reductive(&t("E8,G2")).unwrap().value, q(1, 15));
        assert_eq!(lct_reductive(&[]).unwrap().value, ExtRational::Infinite);
        assert_eq!(lower_bound_representation(&t("A5")).unwrap().value, q(1, 3));
        assert_eq!(lower_bound_representation(&t("C3")).unwrap().value, q(1, 3));
        assert_eq!(
            lower_bound_representation(&t("A1,A1")).unwrap().value,
            q(1, 1)
        );
        assert_eq!(
            lower_bound_representation(&t("A1")).unwrap().formula_id,
            FormulaId::RepresentationBound
        );
    }

    #[test]
    fn general_relative_examples() {
        let caps = LatticeCaps::default();
        let gl4 = RootSystem::gl(4).unwrap();
        let levi = gl4.gl_block_levi(&p("2,2")).unwrap();
        let r = general_relative_lct(&gl4, &levi, 1, caps).unwrap();
        // The Levi (2,2) polarizes the orbit (2,2)^t = (2,2).
        assert_eq!(r.value, epsilon_orbit_gln(&p("2,2")).unwrap().value);
        assert_eq!(r.value, q(1, 1));

        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(
            general_relative_lct(&b2, &Subsystem::cartan(), 0, caps)
                .unwrap()
                .value,
            q(1, 2)
        );
        for text in ["A2", "G2", "B3"] {
            let rs = RootSystem::parse(text).unwrap();
            let full = rs.full().unwrap();
            assert_eq!(
                general_relative_lct(&rs, &full, 1, caps).unwrap().value,
                ExtRational::Infinite
            );
        }
    }

    #[test]
    fn general_relative_matches_oracle() {
        let caps = LatticeCaps::default();
        for text in ["gl4", "gl5", "B2", "B3", "C3", "G2", "A1,A2"] {
            let rs = RootSystem::parse(text).unwrap();
            let lattice = ArrangementLattice::enumerate(&rs, caps).unwrap();
            for mask in 0u32..(1 << rs.rank()) {
                let labels: Vec<usize> = (0..rs.rank())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| k + 1)
                    .collect();
                let levi = rs.levi_subsystem(&labels).unwrap();
                for m in 0..3 {
                    assert_eq!(
                        general_relative_lct(&rs, &levi, m, caps).unwrap().value,
                        lattice.relative_lct(&levi, m).unwrap().0,
                        "{text} {labels:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn simple_derived_levis_are_dense_flats() {
        let caps = LatticeCaps::default();
        for text in ["gl5", "B3", "G2", "C3"] {
            let rs = RootSystem::parse(text).unwrap();
            let lattice = ArrangementLattice::enumerate(&rs, caps).unwrap();
            let mut dense: Vec<RootSet> = lattice.dense_flats().map(|f| f.vanishing()).collect();
            dense.sort_by(|a, b| a.lex_cmp(*b));
            let levis: Vec<RootSet> = simple_derived_levis(&rs)
                .unwrap()
                .iter()
                .map(|l| l.0.positive())
                .collect();
            assert_eq!(levis, dense, "{text}");
        }
    }

    #[test]
    fn representation_wrapper() {
        assert_eq!(epsilon_representation_gln(&p("6")).unwrap().value, q(1, 3));
        assert_eq!(
            epsilon_representation_gln(&p("1^4")).unwrap().value,
            ExtRational::Infinite
        );
        let r = epsilon_representation_gln(&p("4,4,2")).unwrap();
        assert_eq!(r.value, q(11, 24));
        assert_eq!(r.formula_id, FormulaId::MaximalOrbit);
    }

    #[test]
    fn report_json() {
        let r = epsilon_orbit_gln(&p("6,4")).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"value":{"num":"13","den":"41"},"witness":{"k":2},"formula_id":"thmC"}"#
        );
        let zero = serde_json::to_string(&epsilon_orbit_gln(&p("1^3")).unwrap().witness).unwrap();
        assert_eq!(zero, r#""zero-orbit""#);
    }
}
