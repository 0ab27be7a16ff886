use std::collections::BTreeSet;

use serde::Serialize;

use super::cyclotomic::CyclotomicInt;
use super::pairs::{pairs_tpg, PairsTpG};
use super::species::{species_of_gset, yoshida_check, SpeciesTuple};
use crate::burnside::{table_of_marks, BurnsideElement, MarkMatrix, SylowTransfer};
use crate::coherent::{coherent_tuple_group, CoherentGroup, CoherentHomTuple};
use crate::error::{Error, Result};
use crate::fusion::{fusion_system, fused_units, FusionSystem};
use crate::permgroup::{FiniteGroup, PLocalSystem};

/// Species of a coherent tuple: `φ_P(sP)` at each pair, as a power of `ζ_m`.
pub fn species_of_tuple(pairs: &PairsTpG, tuple: &CoherentHomTuple) -> SpeciesTuple {
    let m = pairs.conductor();
    let values = pairs
        .pairs()
        .iter()
        .map(|pair| {
            let phi = &tuple.components[pair.class];
            let step = m / phi.exponent;
            CyclotomicInt::zeta_pow(m, (phi.value(pair.coset) * step) as i64)
        })
        .collect();
    SpeciesTuple { values }
}

#[derive(Clone, Debug, Serialize)]
pub struct FusedUnitEntry {
    /// The unit in `B(S)`.
    pub unit: BurnsideElement,
    /// Its image `t_S^G(u)` in `B(G)`.
    pub transfer: BurnsideElement,
    pub species: SpeciesTuple,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoherentGeneratorEntry {
    pub order: u64,
    pub tuple: CoherentHomTuple,
    pub species: SpeciesTuple,
}

/// `O(T(OG)) ≅ B(F)^× × (coherent tuples)`, with species of every listed element.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalUnitGroupReport {
    pub p: u64,
    /// `e = exp(G)_{p'}`
    pub exponent: u64,
    /// `m = 2e`
    pub conductor: u64,
    pub bf_units: Vec<FusedUnitEntry>,
    /// Indices into `bf_units` of an `F_2`-basis.
    pub bf_generators: Vec<usize>,
    pub coherent: Vec<CoherentGeneratorEntry>,
    pub coherent_factors: Vec<u64>,
    pub total_order: u64,
}

/// Everything computed on the way to the report, kept for inspection.
#[derive(Clone, Debug)]
pub struct OrthogonalUnitGroup {
    pub marks: MarkMatrix,
    pub local: PLocalSystem,
    pub pairs: PairsTpG,
    pub fusion: FusionSystem,
    pub coherent: CoherentGroup,
    pub report: OrthogonalUnitGroupReport,
}

pub fn orthogonal_unit_group(g: &FiniteGroup, p: u64, enum_cap: usize) -> Result<OrthogonalUnitGroup> {
    let local = PLocalSystem::new(g, p)?;
    let pairs = pairs_tpg(&local);
    let marks = table_of_marks(g);
    let fusion = fusion_system(g, p)?;
    let units = fused_units(&fusion, enum_cap)?;
    let transfer = SylowTransfer::new(&marks, fusion.ring(), p)?;
    let bf_units = units
        .units
        .iter()
        .map(|u| {
            let t = transfer.transfer(&marks, fusion.ring(), u)?;
            Ok(FusedUnitEntry {
                species: species_of_gset(&marks, &local, &pairs, &t),
                unit: u.clone(),
                transfer: t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let bf_generators = units
        .structure
        .generators
        .iter()
        .map(|gen| units.units.iter().position(|u| u == gen).expect("generator is a unit"))
        .collect();
    let coherent = coherent_tuple_group(&local)?;
    let coherent_entries: Vec<CoherentGeneratorEntry> = coherent
        .structure
        .generators
        .iter()
        .zip(&coherent.structure.invariant_factors)
        .map(|(t, &d)| CoherentGeneratorEntry {
            order: d,
            tuple: t.clone(),
            species: species_of_tuple(&pairs, t),
        })
        .collect();

    let emitted = bf_units
        .iter()
        .map(|u| &u.species)
        .chain(coherent_entries.iter().map(|c| &c.species));
    for species in emitted {
        if !yoshida_check(&local, &pairs, species)?.passed {
            return Err(Error::Inconsistent(format!("unit species {species:?} fails the Yoshida test")));
        }
        if !species.pointwise_mul(&species.dual()).is_all_ones() {
            return Err(Error::Inconsistent(format!("unit species {species:?} is not orthogonal")));
        }
    }

    let total_order = bf_units.len() as u64 * coherent.order();
    let report = OrthogonalUnitGroupReport {
        p,
        exponent: coherent.exponent,
        conductor: pairs.conductor(),
        bf_units,
        bf_generators,
        coherent: coherent_entries,
        coherent_factors: coherent.structure.invariant_factors.clone(),
        total_order,
    };
    Ok(OrthogonalUnitGroup {
        marks,
        local,
        pairs,
        fusion,
        coherent,
        report,
    })
}

impl OrthogonalUnitGroup {
    /// Species tuples of every element of the group, provided there are at most `limit`.
    pub fn species_span(&self, limit: u64) -> Result<BTreeSet<SpeciesTuple>> {
        let total = self.report.total_order;
        if total > limit {
            return Err(Error::EnumerationCapExceeded {
                what: "orthogonal units",
                count: total as usize,
                cap: limit as usize,
            });
        }
        let mut coherent = vec![SpeciesTuple::ones(&self.pairs)];
        for gen in &self.report.coherent {
            let mut next = Vec::with_capacity(coherent.len() * gen.order as usize);
            for s in &coherent {
                let mut x = s.clone();
                for _ in 0..gen.order {
                    next.push(x.clone());
                    x = x.pointwise_mul(&gen.species);
                }
            }
            coherent = next;
        }
        let mut out = BTreeSet::new();
        for u in &self.report.bf_units {
            for s in &coherent {
                out.insert(u.species.pointwise_mul(s));
            }
        }
        Ok(out)
    }
}
