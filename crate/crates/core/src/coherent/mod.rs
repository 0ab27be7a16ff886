//! Homomorphisms from normalizer quotients `N_G(P)/P` into the roots of unity of
//! order dividing `e = exp(G)_{p'}`, and the group of coherent G-stable tuples
//! of such homomorphisms.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::{AbelianStructure, PLocalSystem, QuotientGroup};
use crate::zlinalg::{kernel_mod_orders, IntMatrix};

/// A homomorphism `Q → μ_e`, stored as exponents: coset `k` goes to `ζ_e^values[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomToUnits {
    pub exponent: u64,
    pub values: Vec<u64>,
}

impl HomToUnits {
    pub fn trivial(order: usize, exponent: u64) -> Self {
        HomToUnits {
            exponent,
            values: vec![0; order],
        }
    }

    pub fn value(&self, coset: usize) -> u64 {
        self.values[coset]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Pointwise product of homomorphisms.
    pub fn add(&self, other: &Self) -> Self {
        self.add_multiple(other, 1)
    }

    /// `self · other^k`
    pub fn add_multiple(&self, other: &Self, k: u64) -> Self {
        let e = self.exponent;
        HomToUnits {
            exponent: e,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a + (k % e) * b) % e)
                .collect(),
        }
    }

    /// Whether the stored values really define a homomorphism on `q`.
    pub fn is_homomorphism(&self, q: &QuotientGroup) -> bool {
        let t = q.table();
        (0..t.len()).all(|a| {
            (0..t.len()).all(|b| self.values[t.mul(a, b)] == (self.values[a] + self.values[b]) % self.exponent)
        })
    }
}

/// `Hom(Q, μ_e)` via the p'-abelianization of `Q`.
///
/// A factor `C_d` of the abelianization contributes `C_gcd(d, e)`, generated by
/// the map sending the `d`-coordinate `c` to `c · e / gcd(d, e)`.
pub fn hom_group(q: &QuotientGroup, p: u64, e: u64) -> AbelianStructure<HomToUnits> {
    let ab = q.pprime_abelianization(p);
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    for (i, &d) in ab.structure.invariant_factors.iter().enumerate() {
        let f = d.gcd(&e);
        if f == 1 {
            continue;
        }
        let step = e / f;
        let values = ab.coords.iter().map(|c| (c[i] % f) * step).collect();
        factors.push(f);
        generators.push(HomToUnits {
            exponent: e,
            values,
        });
    }
    AbelianStructure {
        invariant_factors: factors,
        generators,
    }
}

/// One homomorphism per p-subgroup class representative, in class order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoherentHomTuple {
    pub components: Vec<HomToUnits>,
}

impl CoherentHomTuple {
    pub fn trivial(local: &PLocalSystem, exponent: u64) -> Self {
        CoherentHomTuple {
            components: local
                .locals()
                .iter()
                .map(|l| HomToUnits::trivial(l.quotient.order(), exponent))
                .collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(HomToUnits::is_trivial)
    }

    pub fn add_multiple(&self, other: &Self, k: u64) -> Self {
        CoherentHomTuple {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add_multiple(b, k))
                .collect(),
        }
    }
}

/// A pair `(P, x)` at which `φ_P(xP) ≠ φ_{Q'}(g x g⁻¹ Q')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceViolation {
    pub class: usize,
    pub element: usize,
    pub value: u64,
    pub transported_class: usize,
    pub transported_value: u64,
}

/// Every `(P, x)` with `x ∈ N_G(P)` at which the tuple fails coherence.
pub fn coherence_violations(local: &PLocalSystem, tuple: &CoherentHomTuple) -> Vec<CoherenceViolation> {
    let mut out = Vec::new();
    for (c, l) in local.locals().iter().enumerate() {
        for &x in l.normalizer.members() {
            let here = tuple.components[c].value(l.quotient.coset_of(x).expect("x normalizes P"));
            let tr = local.transport(c, x);
            let there = tuple.components[tr.class].value(tr.coset);
            if here != there {
                out.push(CoherenceViolation {
                    class: c,
                    element: x,
                    value: here,
                    transported_class: tr.class,
                    transported_value: there,
                });
            }
        }
    }
    out
}

/// The group of coherent tuples and the data it was solved from.
#[derive(Clone, Debug)]
pub struct CoherentGroup {
    /// `e = exp(G)_{p'}`.
    pub exponent: u64,
    /// `Hom(N_G(P)/P, μ_e)` for each class representative.
    pub homs: Vec<AbelianStructure<HomToUnits>>,
    pub structure: AbelianStructure<CoherentHomTuple>,
    equations: Vec<Vec<i64>>,
}

impl CoherentGroup {
    pub fn order(&self) -> u64 {
        self.structure.order()
    }

    /// Order of the unconstrained product of Hom groups.
    pub fn candidate_count(&self) -> u64 {
        self.homs.iter().map(AbelianStructure::order).product()
    }

    fn unknown_orders(&self) -> Vec<u64> {
        self.homs
            .iter()
            .flat_map(|h| h.invariant_factors.iter().copied())
            .collect()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.homs.len());
        let mut at = 0;
        for h in &self.homs {
            offsets.push(at);
            at += h.rank();
        }
        offsets
    }

    /// Tuple with coordinates `y` in the product of Hom groups.
    pub fn tuple_from_coordinates(&self, local: &PLocalSystem, y: &[u64]) -> CoherentHomTuple {
        let offsets = self.offsets();
        let mut tuple = CoherentHomTuple::trivial(local, self.exponent);
        for (c, h) in self.homs.iter().enumerate() {
            for (i, gen) in h.generators.iter().enumerate() {
                tuple.components[c] = tuple.components[c].add_multiple(gen, y[offsets[c] + i]);
            }
        }
        tuple
    }

    fn solve(&self, local: &PLocalSystem, extra: &[Vec<i64>]) -> Result<AbelianStructure<CoherentHomTuple>> {
        let orders = self.unknown_orders();
        let rows: Vec<Vec<i64>> = self.equations.iter().chain(extra).cloned().collect();
        let a = if rows.is_empty() {
            IntMatrix::zeros(0, orders.len())
        } else {
            IntMatrix::from_rows(&rows)
        };
        let moduli = vec![self.exponent; rows.len()];
        let kernel = kernel_mod_orders(&a, &moduli, &orders)?;
        Ok(kernel.map(|y| self.tuple_from_coordinates(local, &y)))
    }
}

/// Solves for the coherent tuples `(φ_P)`: one congruence mod `e` for each
/// class representative `P` and `x ∈ N_G(P)` with `x_p ∉ P`.
pub fn coherent_tuple_group(local: &PLocalSystem) -> Result<CoherentGroup> {
    let g = local.group();
    let p = local.p();
    let e = local.pprime_exponent();
    let homs: Vec<AbelianStructure<HomToUnits>> = local
        .locals()
        .iter()
        .map(|l| hom_group(&l.quotient, p, e))
        .collect();
    let mut group = CoherentGroup {
        exponent: e,
        homs,
        structure: AbelianStructure::trivial(),
        equations: Vec::new(),
    };
    let offsets = group.offsets();
    let n = group.unknown_orders().len();
    let modulus = e as i64;
    let mut equations: BTreeSet<Vec<i64>> = BTreeSet::new();
    for (c, l) in local.locals().iter().enumerate() {
        let rep = local.rep(c);
        for &x in l.normalizer.members() {
            let (xp, _) = g.p_part(x, p);
            if rep.contains(xp) {
                continue;
            }
            let coset = l.quotient.coset_of(x).expect("x normalizes P");
            let tr = local.transport(c, x);
            let mut row = vec![0i64; n];
            for (i, gen) in group.homs[c].generators.iter().enumerate() {
                row[offsets[c] + i] += gen.value(coset) as i64;
            }
            for (j, gen) in group.homs[tr.class].generators.iter().enumerate() {
                row[offsets[tr.class] + j] -= gen.value(tr.coset) as i64;
            }
            row.iter_mut().for_each(|v| *v = v.rem_euclid(modulus));
            if row.iter().any(|&v| v != 0) {
                equations.insert(row);
            }
        }
    }
    group.equations = equations.into_iter().collect();
    group.structure = group.solve(local, &[])?;
    Ok(group)
}

/// `Hom(G, F^×)` embedded by restriction, and the coherent tuples trivial at `P = 1`.
#[derive(Clone, Debug)]
pub struct HomSplit {
    pub hom_g: AbelianStructure<CoherentHomTuple>,
    pub reduced: AbelianStructure<CoherentHomTuple>,
}

pub fn split_hom_g(local: &PLocalSystem, coh: &CoherentGroup) -> Result<HomSplit> {
    let e = coh.exponent;
    let base = &local.local(0).quotient;
    debug_assert!(local.rep(0).is_trivial());
    let hom_g = coh.homs[0].clone().map(|phi| {
        let components = local
            .locals()
            .iter()
            .map(|l| HomToUnits {
                exponent: e,
                values: l
                    .quotient
                    .coset_reps()
                    .iter()
                    .map(|&x| phi.value(base.coset_of(x).expect("G/1 covers G")))
                    .collect(),
            })
            .collect();
        CoherentHomTuple { components }
    });

    let n = coh.unknown_orders().len();
    let extra: Vec<Vec<i64>> = (0..base.order())
        .map(|k| {
            let mut row = vec![0i64; n];
            for (i, gen) in coh.homs[0].generators.iter().enumerate() {
                row[i] = gen.value(k) as i64;
            }
            row
        })
        .filter(|row| row.iter().any(|&v| v != 0))
        .collect();
    let reduced = coh.solve(local, &extra)?;
    if coh.order() != hom_g.order() * reduced.order() {
        return Err(Error::SplitMismatch {
            coherent: coh.order(),
            hom_g: hom_g.order(),
            reduced: reduced.order(),
        });
    }
    Ok(HomSplit { hom_g, reduced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{group_from_generators, quotient, FiniteGroup, Permutation};

    fn s3() -> FiniteGroup {
        group_from_generators(
            3,
            &[
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hom_groups() {
        let g = s3();
        let q = quotient(&g, &g.whole(), &g.trivial()).unwrap();
        let h = hom_group(&q, 3, 2);
        assert_eq!(h.invariant_factors, vec![2]);
        assert!(h.generators[0].is_homomorphism(&q));
        assert!(hom_group(&q, 2, 3).is_trivial());

        let c2 = group_from_generators(2, &[Permutation::from_cycles(2, &[&[0, 1]]).unwrap()]).unwrap();
        let q = quotient(&c2, &c2.whole(), &c2.trivial()).unwrap();
        assert_eq!(hom_group(&q, 3, 2).generators[0].values, vec![0, 1]);
    }

    #[test]
    fn s3_coherent_groups() {
        let g = s3();
        let local = PLocalSystem::new(&g, 3).unwrap();
        let coh = coherent_tuple_group(&local).unwrap();
        assert_eq!(coh.structure.invariant_factors, vec![2, 2]);
        for t in &coh.structure.generators {
            assert!(coherence_violations(&local, t).is_empty());
        }
        let split = split_hom_g(&local, &coh).unwrap();
        assert_eq!(split.hom_g.order(), 2);
        assert_eq!(split.reduced.order(), 2);

        let local = PLocalSystem::new(&g, 2).unwrap();
        let coh = coherent_tuple_group(&local).unwrap();
        assert!(coh.structure.is_trivial());
        assert!(split_hom_g(&local, &coh).unwrap().reduced.is_trivial());
    }

    #[test]
    fn two_group_has_no_homs() {
        let c2 = group_from_generators(2, &[Permutation::from_cycles(2, &[&[0, 1]]).unwrap()]).unwrap();
        let local = PLocalSystem::new(&c2, 2).unwrap();
        assert!(coherent_tuple_group(&local).unwrap().structure.is_trivial());
    }
}
