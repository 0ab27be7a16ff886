//! The fusion system of a finite group on a Sylow p-subgroup, seen through the
//! G-conjugacy partition of the subgroup classes of S, and the fused Burnside
//! ring `B(F) ⊆ B(S)` with its units.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::burnside::{units_constant_on_blocks, BurnsideElement, MarkMatrix, SubgroupRing};
use crate::error::{Error, Result};
use crate::permgroup::{
    is_prime, p_subgroup_classes, sylow_class, AbelianStructure, FiniteGroup, Subgroup,
};
use crate::zlinalg::{integer_kernel, IntMatrix};

#[derive(Clone, Debug)]
pub struct FusionSystem {
    group: FiniteGroup,
    p: u64,
    ring: SubgroupRing,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    conjugators: Vec<usize>,
}

/// The fusion system of `g` on its canonical Sylow p-subgroup (the smallest in
/// key order).
pub fn fusion_system(g: &FiniteGroup, p: u64) -> Result<FusionSystem> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pclasses = p_subgroup_classes(g, p);
    let sylow = pclasses.rep(sylow_class(&pclasses, g.order(), p)).clone();
    Ok(FusionSystem::on(g, p, &sylow))
}

impl FusionSystem {
    /// Fusion of `g` on the given Sylow subgroup.
    pub fn on(g: &FiniteGroup, p: u64, sylow: &Subgroup) -> Self {
        let ring = SubgroupRing::new(g, sylow);
        let s_classes = ring.marks().classes();
        // canonical G-conjugate of each S-class representative and a conjugator reaching it
        let canon: Vec<(Subgroup, usize)> = s_classes
            .classes()
            .iter()
            .map(|c| {
                let q = ring.to_parent(&c.rep);
                (0..g.order())
                    .map(|x| (g.conjugate(&q, x), x))
                    .min()
                    .expect("nonempty group")
            })
            .collect();
        let mut block_of = vec![usize::MAX; canon.len()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut conjugators = vec![0; canon.len()];
        for c in 0..canon.len() {
            if block_of[c] != usize::MAX {
                continue;
            }
            let b = blocks.len();
            let mut members = Vec::new();
            for d in c..canon.len() {
                if block_of[d] == usize::MAX && canon[d].0 == canon[c].0 {
                    block_of[d] = b;
                    // x_c⁻¹ x_d carries P_d to P_c
                    conjugators[d] = g.mul(g.inv(canon[c].1), canon[d].1);
                    members.push(d);
                }
            }
            blocks.push(members);
        }
        FusionSystem {
            group: g.clone(),
            p,
            ring,
            block_of,
            blocks,
            conjugators,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn sylow(&self) -> &Subgroup {
        self.ring.subgroup()
    }

    /// Burnside ring of the Sylow subgroup.
    pub fn ring(&self) -> &SubgroupRing {
        &self.ring
    }

    pub fn s_marks(&self) -> &MarkMatrix {
        self.ring.marks()
    }

    /// Fused block of each S-class.
    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    /// S-classes grouped by G-conjugacy, each block in increasing class order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// For S-class `c`, an element `g ∈ G` conjugating its representative onto
    /// the representative of the first class in its block.
    pub fn conjugator(&self, c: usize) -> usize {
        self.conjugators[c]
    }

    /// Whether the ghost of `a ∈ B(S)` is constant on fused blocks.
    pub fn is_fused(&self, a: &BurnsideElement) -> bool {
        let ghost = self.s_marks().mark(a);
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&c| ghost.marks[c] == ghost.marks[b[0]]))
    }
}

/// A Z-basis of `B(F)` inside `B(S)`.
#[derive(Clone, Debug, Serialize)]
pub struct FusedBurnsideLattice {
    pub basis: Vec<BurnsideElement>,
}

pub fn fused_lattice(f: &FusionSystem) -> FusedBurnsideLattice {
    let m = f.s_marks();
    let n = m.len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for b in f.blocks() {
        for &c in &b[1..] {
            rows.push((0..n).map(|h| m.entry(h, b[0]) - m.entry(h, c)).collect());
        }
    }
    let constraints = if rows.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(&rows)
    };
    let basis = integer_kernel(&constraints)
        .into_iter()
        .map(|v| BurnsideElement {
            coeffs: v.iter().map(|x| x.to_i64().expect("small coefficient")).collect(),
        })
        .collect();
    FusedBurnsideLattice { basis }
}

/// `B(F)^×` listed in full, with an `F_2`-basis as its group structure.
#[derive(Clone, Debug)]
pub struct FusedUnits {
    pub units: Vec<BurnsideElement>,
    pub structure: AbelianStructure<BurnsideElement>,
}

impl FusedUnits {
    pub fn order(&self) -> usize {
        self.units.len()
    }
}

pub fn fused_units(f: &FusionSystem, cap: usize) -> Result<FusedUnits> {
    let m = f.s_marks();
    let units = units_constant_on_blocks(m, f.block_of(), cap, "fused blocks")?;
    // sign patterns multiply like vectors over F_2
    let mut reduced: Vec<(usize, Vec<bool>)> = Vec::new();
    let mut generators = Vec::new();
    for u in &units {
        let mut v: Vec<bool> = m.mark(u).marks.iter().map(|&x| x < 0).collect();
        for (pivot, r) in &reduced {
            if v[*pivot] {
                v.iter_mut().zip(r).for_each(|(a, b)| *a ^= b);
            }
        }
        if let Some(pivot) = v.iter().position(|&b| b) {
            reduced.push((pivot, v));
            generators.push(u.clone());
        }
    }
    let structure = AbelianStructure {
        invariant_factors: vec![2; generators.len()],
        generators,
    };
    Ok(FusedUnits { units, structure })
}
