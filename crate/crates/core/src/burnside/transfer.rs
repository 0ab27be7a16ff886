use super::marks::{BurnsideElement, GhostVector, MarkMatrix};
use super::restrict::SubgroupRing;
use crate::error::{Error, Result};
use crate::permgroup::split_prime_power;

/// Lookup data for `t_S^G : B(F) → B(G)`.
#[derive(Clone, Debug)]
pub struct SylowTransfer {
    /// G-class of each S-class.
    s_to_g: Vec<usize>,
    /// For each G-class `H`, an S-class G-conjugate to a Sylow p-subgroup of `H`.
    sylow_of: Vec<usize>,
}

impl SylowTransfer {
    pub fn new(g_marks: &MarkMatrix, s_ring: &SubgroupRing, p: u64) -> Result<Self> {
        let g = g_marks.group();
        let s = s_ring.subgroup();
        let (pk, _) = split_prime_power(g.order() as u64, p);
        if s.order() as u64 != pk {
            return Err(Error::NotASubgroup(format!(
                "subgroup of order {} is not a Sylow {p}-subgroup of a group of order {}",
                s.order(),
                g.order()
            )));
        }
        let s_classes = s_ring.marks().classes();
        let s_to_g: Vec<usize> = s_classes
            .classes()
            .iter()
            .map(|c| g_marks.class_of(&s_ring.to_parent(&c.rep)))
            .collect();
        let g_classes = g_marks.classes();
        let sylow_of = g_classes
            .classes()
            .iter()
            .map(|h| {
                let (hp, _) = split_prime_power(h.order() as u64, p);
                (0..s_classes.len())
                    .filter(|&c| s_classes.rep(c).order() as u64 == hp)
                    .find(|&c| {
                        g_classes
                            .class(s_to_g[c])
                            .conjugates
                            .iter()
                            .any(|q| q.is_subgroup_of(&h.rep))
                    })
                    .expect("every subgroup has a Sylow subgroup conjugate into S")
            })
            .collect();
        Ok(SylowTransfer { s_to_g, sylow_of })
    }

    /// G-class of each S-class.
    pub fn s_to_g(&self) -> &[usize] {
        &self.s_to_g
    }

    /// Checks that the ghost of `a` over S is constant on G-conjugate subgroups.
    pub fn check_fusion_stable(&self, s_marks: &MarkMatrix, a: &BurnsideElement) -> Result<GhostVector> {
        let ghost = s_marks.mark(a);
        let mut value: Vec<Option<(usize, i64)>> = vec![None; self.sylow_of.len()];
        for (c, &gc) in self.s_to_g.iter().enumerate() {
            match value[gc] {
                None => value[gc] = Some((c, ghost.marks[c])),
                Some((c0, v)) if v != ghost.marks[c] => {
                    return Err(Error::NotFusionStable(format!(
                        "marks {v} and {} at G-conjugate S-classes {c0} and {c}",
                        ghost.marks[c]
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(ghost)
    }

    pub fn transfer(&self, g_marks: &MarkMatrix, s_ring: &SubgroupRing, a: &BurnsideElement) -> Result<BurnsideElement> {
        let ghost = self.check_fusion_stable(s_ring.marks(), a)?;
        let v = GhostVector {
            marks: self.sylow_of.iter().map(|&c| ghost.marks[c]).collect(),
        };
        g_marks.unmark(&v).ok_or_else(|| {
            Error::IntegralityViolation(format!("transferred ghost {:?} is not a mark vector", v.marks))
        })
    }
}

/// `t_S^G(a)` for `a ∈ B(F)`: the element of `B(G)` whose mark at `H` is the mark
/// of `a` at a Sylow p-subgroup of `H` conjugated into S.
pub fn transfer_tsg(
    g_marks: &MarkMatrix,
    s_ring: &SubgroupRing,
    p: u64,
    a: &BurnsideElement,
) -> Result<BurnsideElement> {
    SylowTransfer::new(g_marks, s_ring, p)?.transfer(g_marks, s_ring, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{restrict, table_of_marks};
    use crate::permgroup::{group_from_generators, Permutation};

    #[test]
    fn s3_at_two() {
        let g = group_from_generators(
            3,
            &[
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        let m = table_of_marks(&g);
        let t = g.index_of(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let ring = SubgroupRing::new(&g, &g.subgroup_generated(&[t]));
        let top = BurnsideElement::basis(2, 1);
        assert_eq!(transfer_tsg(&m, &ring, 2, &top).unwrap(), m.one());
        let regular = BurnsideElement::basis(2, 0);
        let image = transfer_tsg(&m, &ring, 2, &regular).unwrap();
        assert_eq!(image, BurnsideElement::basis(4, 2));
        assert_eq!(restrict(&m, &ring, &image), regular);
    }

    #[test]
    fn rejects_non_sylow() {
        let g = group_from_generators(3, &[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        let m = table_of_marks(&g);
        let ring = SubgroupRing::new(&g, &g.trivial());
        assert!(transfer_tsg(&m, &ring, 3, &BurnsideElement::basis(1, 0)).is_err());
    }
}
