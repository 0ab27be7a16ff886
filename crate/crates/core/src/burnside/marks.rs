use serde::Serialize;

use crate::permgroup::{all_subgroup_classes, FiniteGroup, Subgroup, SubgroupClasses};
use crate::zlinalg::IntMatrix;

/// A virtual G-set in the basis `[G/H]`, indexed by subgroup classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BurnsideElement {
    pub coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn zero(n: usize) -> Self {
        BurnsideElement { coeffs: vec![0; n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        BurnsideElement { coeffs }
    }

    /// `[G/G]`, the multiplicative identity; the whole group is the last class.
    pub fn one(n: usize) -> Self {
        Self::basis(n, n - 1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        BurnsideElement {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }
}

/// Mark values `φ_K`, one per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GhostVector {
    pub marks: Vec<i64>,
}

impl GhostVector {
    pub fn ones(n: usize) -> Self {
        GhostVector { marks: vec![1; n] }
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        GhostVector {
            marks: self
                .marks
                .iter()
                .zip(&other.marks)
                .map(|(a, b)| a.checked_mul(*b).expect("ghost product overflows i64"))
                .collect(),
        }
    }

    pub fn is_sign_vector(&self) -> bool {
        self.marks.iter().all(|m| m.abs() == 1)
    }
}

/// Table of marks of a group: `m[H][K] = |(G/H)^K|` over the full subgroup lattice.
#[derive(Clone, Debug)]
pub struct MarkMatrix {
    group: FiniteGroup,
    classes: SubgroupClasses,
    marks: Vec<Vec<i64>>,
}

pub fn table_of_marks(g: &FiniteGroup) -> MarkMatrix {
    MarkMatrix::from_classes(g, all_subgroup_classes(g))
}

impl MarkMatrix {
    pub fn from_classes(g: &FiniteGroup, classes: SubgroupClasses) -> Self {
        let t = g.table();
        let n = classes.len();
        let gens: Vec<Vec<usize>> = classes
            .classes()
            .iter()
            .map(|c| t.greedy_generators(c.rep.members()))
            .collect();
        let mut marks = vec![vec![0i64; n]; n];
        for (h, row) in marks.iter_mut().enumerate() {
            let hrep = classes.rep(h);
            for (k, entry) in row.iter_mut().enumerate().take(h + 1) {
                let krep = classes.rep(k);
                if !hrep.order().is_multiple_of(krep.order()) {
                    continue;
                }
                // cosets yH with y⁻¹ K y ⊆ H
                let count = (0..g.order())
                    .filter(|&y| gens[k].iter().all(|&x| hrep.contains(t.conj(g.inv(y), x))))
                    .count();
                *entry = (count / hrep.order()) as i64;
            }
        }
        MarkMatrix {
            group: g.clone(),
            classes,
            marks,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClasses {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// `|(G/H)^K|` for class indices `h`, `k`.
    pub fn entry(&self, h: usize, k: usize) -> i64 {
        self.marks[h][k]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.marks
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.marks)
    }

    pub fn one(&self) -> BurnsideElement {
        BurnsideElement::one(self.len())
    }

    /// Class index of an arbitrary subgroup of the group.
    pub fn class_of(&self, h: &Subgroup) -> usize {
        self.classes.class_index(h).expect("subgroup of the underlying group")
    }

    pub fn mark(&self, a: &BurnsideElement) -> GhostVector {
        let n = self.len();
        let marks = (0..n)
            .map(|k| (k..n).map(|h| a.coeffs[h] * self.marks[h][k]).sum())
            .collect();
        GhostVector { marks }
    }

    /// The mark of `a` at the class of `k`.
    pub fn mark_at(&self, a: &BurnsideElement, k: usize) -> i64 {
        (k..self.len()).map(|h| a.coeffs[h] * self.marks[h][k]).sum()
    }

    /// Inverts the mark map; `None` if `v` is not the ghost of a virtual G-set.
    pub fn unmark(&self, v: &GhostVector) -> Option<BurnsideElement> {
        let n = self.len();
        if v.marks.len() != n {
            return None;
        }
        let mut coeffs = vec![0i64; n];
        for k in (0..n).rev() {
            let a = self.solve_step(&coeffs, v.marks[k], k)?;
            coeffs[k] = a;
        }
        Some(BurnsideElement { coeffs })
    }

    /// Coefficient at `k` given all coefficients above `k`; `None` if not integral.
    pub(crate) fn solve_step(&self, coeffs: &[i64], target: i64, k: usize) -> Option<i64> {
        let s: i128 = (k + 1..self.len())
            .map(|h| coeffs[h] as i128 * self.marks[h][k] as i128)
            .sum();
        let r = target as i128 - s;
        let d = self.marks[k][k] as i128;
        if r % d != 0 {
            return None;
        }
        i64::try_from(r / d).ok()
    }

    pub fn multiply(&self, a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
        self.unmark(&self.mark(a).pointwise_mul(&self.mark(b)))
            .expect("the Burnside ring is closed under multiplication")
    }
}
