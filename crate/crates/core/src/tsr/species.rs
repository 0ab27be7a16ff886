use serde::Serialize;

use super::classfn::ClassFunction;
use super::cyclotomic::CyclotomicInt;
use super::pairs::PairsTpG;
use crate::burnside::{BurnsideElement, MarkMatrix};
use crate::error::{Error, Result};
use crate::permgroup::PLocalSystem;

/// Values indexed by the pairs of `T_p(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpeciesTuple {
    pub values: Vec<CyclotomicInt>,
}

impl SpeciesTuple {
    pub fn ones(pairs: &PairsTpG) -> Self {
        SpeciesTuple {
            values: vec![CyclotomicInt::one(pairs.conductor()); pairs.len()],
        }
    }

    pub fn dual(&self) -> Self {
        SpeciesTuple {
            values: self.values.iter().map(CyclotomicInt::conj).collect(),
        }
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        SpeciesTuple {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.values.iter().all(|v| v.as_integer() == Some(1))
    }
}

/// Componentwise `ζ ↦ ζ⁻¹` on a tuple of class functions.
pub fn dual_class_functions(tuple: &[ClassFunction]) -> Vec<ClassFunction> {
    tuple.iter().map(ClassFunction::dual).collect()
}

/// Species of a virtual G-set: the value at `(P, sP)` is the mark at `⟨P, s⟩`.
pub fn species_of_gset(
    marks: &MarkMatrix,
    local: &PLocalSystem,
    pairs: &PairsTpG,
    a: &BurnsideElement,
) -> SpeciesTuple {
    let g = marks.group();
    let m = pairs.conductor();
    let values = pairs
        .pairs()
        .iter()
        .map(|pair| {
            let mut gens = g.table().greedy_generators(local.rep(pair.class).members());
            gens.push(pair.element);
            let k = marks.class_of(&g.subgroup_generated(&gens));
            CyclotomicInt::from_int(m, marks.mark_at(a, k))
        })
        .collect();
    SpeciesTuple { values }
}

/// The β tuple determined by a coherent species tuple: `χ_P(xP)` is the value at
/// the pair reached from `(P, x)` by `Q = P⟨x_p⟩`.
pub fn class_functions_from_species(
    local: &PLocalSystem,
    pairs: &PairsTpG,
    alpha: &SpeciesTuple,
) -> Vec<ClassFunction> {
    local
        .locals()
        .iter()
        .enumerate()
        .map(|(c, l)| ClassFunction {
            values: l
                .quotient
                .classes()
                .iter()
                .map(|members| {
                    let tr = local.transport(c, l.quotient.rep(members[0]));
                    let i = pairs
                        .lookup(local, tr.class, tr.coset)
                        .expect("transported coset is p'");
                    alpha.values[i].clone()
                })
                .collect(),
        })
        .collect()
}

/// First failure of multiplicativity: `ψ_P(uv) ≠ ψ_P(u) ψ_P(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YoshidaWitness {
    pub class: usize,
    /// Representatives in G of the cosets `u` and `v`.
    pub u: usize,
    pub v: usize,
    /// Exponents of `ζ_m`.
    pub psi_u: u64,
    pub psi_v: u64,
    pub psi_uv: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YoshidaVerdict {
    pub passed: bool,
    pub witness: Option<YoshidaWitness>,
}

/// Tests whether every `ψ_P : xP ↦ α_{(Q, xQ)} · α_{(P, 1P)}`, `Q = P⟨x_p⟩`,
/// is a homomorphism `N_G(P)/P → ⟨ζ_m⟩`.
pub fn yoshida_check(local: &PLocalSystem, pairs: &PairsTpG, alpha: &SpeciesTuple) -> Result<YoshidaVerdict> {
    let m = pairs.conductor();
    if alpha.values.len() != pairs.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} values for {} pairs",
            alpha.values.len(),
            pairs.len()
        )));
    }
    let exps: Vec<u64> = alpha
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if v.conductor() != m {
                return Err(Error::NotRootOfUnity(format!(
                    "value {i} has conductor {}, expected {m}",
                    v.conductor()
                )));
            }
            v.root_of_unity_exponent()
                .ok_or_else(|| Error::NotRootOfUnity(format!("value {i} is {v}")))
        })
        .collect::<Result<_>>()?;
    for (c, l) in local.locals().iter().enumerate() {
        let q = &l.quotient;
        let base = exps[pairs.identity_pair(c)];
        let psi: Vec<u64> = (0..q.order())
            .map(|u| {
                let tr = local.transport(c, q.rep(u));
                let i = pairs.lookup(local, tr.class, tr.coset).expect("transported coset is p'");
                (exps[i] + base) % m
            })
            .collect();
        let t = q.table();
        for u in 0..q.order() {
            for v in 0..q.order() {
                let uv = t.mul(u, v);
                if psi[uv] != (psi[u] + psi[v]) % m {
                    return Ok(YoshidaVerdict {
                        passed: false,
                        witness: Some(YoshidaWitness {
                            class: c,
                            u: q.rep(u),
                            v: q.rep(v),
                            psi_u: psi[u],
                            psi_v: psi[v],
                            psi_uv: psi[uv],
                        }),
                    });
                }
            }
        }
    }
    Ok(YoshidaVerdict {
        passed: true,
        witness: None,
    })
}
