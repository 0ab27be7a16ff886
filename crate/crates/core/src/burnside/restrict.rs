use super::marks::{table_of_marks, BurnsideElement, MarkMatrix};
use crate::permgroup::{FiniteGroup, Subgroup};

/// The Burnside ring of a subgroup `H ≤ G`, with `H` realized as a group of its own.
///
/// Element `i` of the subgroup group is element `embedding[i]` of `G`.
#[derive(Clone, Debug)]
pub struct SubgroupRing {
    subgroup: Subgroup,
    embedding: Vec<usize>,
    marks: MarkMatrix,
}

impl SubgroupRing {
    pub fn new(g: &FiniteGroup, h: &Subgroup) -> Self {
        let local = g.subgroup_as_group(h);
        SubgroupRing {
            subgroup: h.clone(),
            embedding: h.members().to_vec(),
            marks: table_of_marks(&local),
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &FiniteGroup {
        self.marks.group()
    }

    pub fn marks(&self) -> &MarkMatrix {
        &self.marks
    }

    /// Image in `G` of an element of the subgroup group.
    pub fn to_parent_element(&self, x: usize) -> usize {
        self.embedding[x]
    }

    pub fn to_parent(&self, k: &Subgroup) -> Subgroup {
        // embedding is increasing, so the image stays sorted
        let members: Vec<usize> = k.members().iter().map(|&x| self.embedding[x]).collect();
        Subgroup::from_sorted(members)
    }

    /// Preimage of a subgroup of `G` that lies inside `H`.
    pub fn from_parent(&self, k: &Subgroup) -> Option<Subgroup> {
        let members = k
            .members()
            .iter()
            .map(|x| self.embedding.binary_search(x).ok())
            .collect::<Option<Vec<usize>>>()?;
        Some(Subgroup::from_sorted(members))
    }
}

/// `res^G_H(a)`: each `G/K` splits into `H`-orbits on its cosets, the orbit of
/// `yK` being `H/(H ∩ yKy⁻¹)`.
pub fn restrict(g_marks: &MarkMatrix, ring: &SubgroupRing, a: &BurnsideElement) -> BurnsideElement {
    let g = g_marks.group();
    let h = ring.subgroup();
    let mut out = BurnsideElement::zero(ring.marks().len());
    for (k, &coeff) in a.coeffs.iter().enumerate() {
        if coeff == 0 {
            continue;
        }
        let krep = g_marks.classes().rep(k);
        // cosets yK indexed by their smallest member
        let mut coset_id = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for y in 0..g.order() {
            if coset_id[y] != usize::MAX {
                continue;
            }
            for &x in krep.members() {
                coset_id[g.mul(y, x)] = reps.len();
            }
            reps.push(y);
        }
        let mut seen = vec![false; reps.len()];
        for start in 0..reps.len() {
            if seen[start] {
                continue;
            }
            for &x in h.members() {
                seen[coset_id[g.mul(x, reps[start])]] = true;
            }
            let y = reps[start];
            let conj = g.conjugate(krep, y);
            let stab: Vec<usize> = h.members().iter().copied().filter(|&x| conj.contains(x)).collect();
            let stab = Subgroup::from_sorted(stab);
            let local = ring.from_parent(&stab).expect("stabilizer lies in H");
            out.coeffs[ring.marks().class_of(&local)] += coeff;
        }
    }
    out
}
