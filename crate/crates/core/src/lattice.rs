//! Brute-force intersection lattice of a reflection arrangement.
//!
//! This is the oracle the closed forms are tested against. A flat is keyed
//! by the set of positive roots vanishing on it; that set is always the
//! positive part of a Levi subsystem, so it is saturated (every positive
//! root in its Q-span belongs to it). Flats are found by intersecting known
//! flats with one more hyperplane and saturating, starting from the
//! hyperplanes themselves. The ambient space (codimension 0) is excluded.

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::ExtRational;
use crate::roots::{Family, RootSet, RootSystem, Subsystem, SubsystemDescription};

/// Rank limits for lattice enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeCaps {
    /// Largest semisimple rank for systems whose factors are all type A.
    pub type_a_rank: usize,
    /// Largest semisimple rank for everything else.
    pub other_rank: usize,
}

impl Default for LatticeCaps {
    fn default() -> Self {
        LatticeCaps {
            type_a_rank: 8,
            other_rank: 4,
        }
    }
}

impl LatticeCaps {
    /// The same cap for every type.
    pub fn uniform(rank: usize) -> Self {
        LatticeCaps {
            type_a_rank: rank,
            other_rank: rank,
        }
    }

    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        let all_a = rs.factors().iter().all(|t| t.family() == Family::A);
        let cap = if all_a {
            self.type_a_rank
        } else {
            self.other_rank
        };
        if rs.rank() > cap {
            return Err(Error::cap(
                format!("semisimple rank {} of {}", rs.rank(), rs.label()),
                cap,
            ));
        }
        Ok(())
    }
}

/// A proper flat of the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    vanishing: RootSet,
    codim: usize,
    dense: bool,
}

impl Flat {
    /// Positive roots vanishing on the flat.
    pub fn vanishing(&self) -> RootSet {
        self.vanishing
    }

    /// `r(W)`: codimension, equal to the rank of the vanishing roots.
    pub fn codim(&self) -> usize {
        self.codim
    }

    /// `s(W)`: number of hyperplanes containing the flat.
    pub fn count(&self) -> usize {
        self.vanishing.len()
    }

    /// Whether the localized arrangement is indecomposable.
    pub fn is_dense(&self) -> bool {
        self.dense
    }

    pub fn subsystem(&self) -> Subsystem {
        Subsystem::from_positive(self.vanishing)
    }

    pub fn describe(&self, rs: &RootSystem) -> FlatDescription {
        FlatDescription {
            vanishing: self.subsystem().describe(rs),
            codim: self.codim,
            count: self.count(),
            dense: self.dense,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatDescription {
    pub vanishing: SubsystemDescription,
    pub codim: usize,
    pub count: usize,
    pub dense: bool,
}

/// All proper flats of the reflection arrangement of a root system.
#[derive(Clone, Debug)]
pub struct ArrangementLattice<'a> {
    rs: &'a RootSystem,
    flats: Vec<Flat>,
}

impl<'a> ArrangementLattice<'a> {
    pub fn enumerate(rs: &'a RootSystem, caps: LatticeCaps) -> Result<Self> {
        caps.check(rs)?;
        rs.full()?;
        let npos = rs.num_positive();
        let mut seen: HashSet<RootSet> = HashSet::new();
        let mut frontier: Vec<RootSet> = Vec::new();
        for i in 0..npos {
            let key = rs.saturate(std::iter::once(i).collect());
            if seen.insert(key) {
                frontier.push(key);
            }
        }
        let mut all = frontier.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &flat in &frontier {
                for i in 0..npos {
                    if flat.contains(i) {
                        continue;
                    }
                    let mut grown = flat;
                    grown.insert(i);
                    let key = rs.saturate(grown);
                    if seen.insert(key) {
                        next.push(key);
                    }
                }
            }
            all.extend(&next);
            frontier = next;
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        let flats = all
            .into_iter()
            .map(|vanishing| {
                let sub = Subsystem::from_positive(vanishing);
                Flat {
                    vanishing,
                    codim: rs.span_rank(vanishing),
                    dense: sub.is_irreducible(rs),
                }
            })
            .collect();
        Ok(ArrangementLattice { rs, flats })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    /// Flats ordered by count, then lexicographically by vanishing set.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn dense_flats(&self) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(|f| f.dense)
    }

    /// `min r(W)/s(W)` over dense flats; `+∞` for the empty arrangement.
    pub fn lct(&self) -> (ExtRational, Option<Flat>) {
        argmin(
            self.dense_flats()
                .map(|f| (ExtRational::ratio(f.codim, f.count()), *f)),
        )
    }

    /// `min (r + m·b)/(a − b)` over dense flats with `a > b`, where `a` is
    /// the count and `b` the number of vanishing roots inside the Levi.
    pub fn relative_lct(&self, levi: &Subsystem, m: u32) -> Result<(ExtRational, Option<Flat>)> {
        self.check_subsystem(levi)?;
        Ok(argmin(self.dense_flats().filter_map(|f| {
            relative_term(f, levi, m).map(|v| (v, *f))
        })))
    }

    /// The same minimum taken over every flat, dense or not.
    pub fn relative_lct_all_flats(&self, levi: &Subsystem, m: u32) -> Result<ExtRational> {
        self.check_subsystem(levi)?;
        Ok(self
            .flats
            .iter()
            .filter_map(|f| relative_term(f, levi, m))
            .min()
            .unwrap_or(ExtRational::Infinite))
    }

    fn check_subsystem(&self, levi: &Subsystem) -> Result<()> {
        let full = self.rs.all_positive();
        if !levi.positive().is_subset(full) || !levi.is_closed(self.rs) {
            return Err(Error::NotSubsystem(format!(
                "{} positive roots are not a closed subsystem of {}",
                levi.positive_count(),
                self.rs.label()
            )));
        }
        Ok(())
    }
}

fn relative_term(f: &Flat, levi: &Subsystem, m: u32) -> Option<ExtRational> {
    let a = f.count();
    let b = f.vanishing.intersection(levi.positive()).len();
    (a > b).then(|| {
        ExtRational::ratio(
            BigInt::from(f.codim) + BigInt::from(m) * BigInt::from(b),
            BigInt::from(a - b),
        )
    })
}

/// Minimum with ties broken by the lexicographically smallest vanishing set.
fn argmin(items: impl Iterator<Item = (ExtRational, Flat)>) -> (ExtRational, Option<Flat>) {
    let mut best: Option<(ExtRational, Flat)> = None;
    for (value, flat) in items {
        let better = match &best {
            None => true,
            Some((v, f)) => {
                value < *v || (value == *v && flat.vanishing.lex_cmp(f.vanishing).is_lt())
            }
        };
        if better {
            best = Some((value, flat));
        }
    }
    match best {
        Some((v, f)) => (v, Some(f)),
        None => (ExtRational::Infinite, None),
    }
}
