use serde::Serialize;

use super::cyclotomic::CyclotomicInt;
use crate::burnside::{BurnsideElement, MarkMatrix};
use crate::error::{Error, Result};
use crate::permgroup::{FiniteGroup, PLocalSystem, QuotientGroup, Subgroup};

/// A class function on `N_G(P)/P`, one value per conjugacy class of cosets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    pub values: Vec<CyclotomicInt>,
}

impl ClassFunction {
    pub fn zero(q: &QuotientGroup, m: u64) -> Self {
        ClassFunction {
            values: vec![CyclotomicInt::zero(m); q.classes().len()],
        }
    }

    pub fn at_coset(&self, q: &QuotientGroup, coset: usize) -> &CyclotomicInt {
        &self.values[q.class_of(coset)]
    }

    pub fn dual(&self) -> Self {
        ClassFunction {
            values: self.values.iter().map(CyclotomicInt::conj).collect(),
        }
    }
}

/// Left coset representatives of `h` (smallest members).
fn coset_reps(g: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for y in 0..g.order() {
        if seen[y] {
            continue;
        }
        for &x in h.members() {
            seen[g.mul(y, x)] = true;
        }
        reps.push(y);
    }
    reps
}

/// `β_G` on the linearization of a virtual G-set: the P-component is the
/// permutation character of `N_G(P)/P` on the fixed points `X^P`, counted
/// coset by coset.
pub fn beta_of_gset(marks: &MarkMatrix, local: &PLocalSystem, a: &BurnsideElement) -> Vec<ClassFunction> {
    let g = marks.group();
    let t = g.table();
    let m = 2 * local.pprime_exponent();
    let mut out: Vec<Vec<i64>> = local
        .locals()
        .iter()
        .map(|l| vec![0; l.quotient.classes().len()])
        .collect();
    for (h, &coeff) in a.coeffs.iter().enumerate() {
        if coeff == 0 {
            continue;
        }
        let hrep = marks.classes().rep(h);
        let reps = coset_reps(g, hrep);
        for (c, l) in local.locals().iter().enumerate() {
            let pgens = t.greedy_generators(local.rep(c).members());
            let fixed: Vec<usize> = reps
                .iter()
                .copied()
                .filter(|&y| pgens.iter().all(|&x| hrep.contains(t.conj(g.inv(y), x))))
                .collect();
            for (k, members) in l.quotient.classes().iter().enumerate() {
                let x = l.quotient.rep(members[0]);
                let count = fixed
                    .iter()
                    .filter(|&&y| hrep.contains(t.conj(g.inv(y), x)))
                    .count() as i64;
                out[c][k] += coeff * count;
            }
        }
    }
    out.into_iter()
        .map(|vals| ClassFunction {
            values: vals.into_iter().map(|v| CyclotomicInt::from_int(m, v)).collect(),
        })
        .collect()
}

/// Whether some conjugate of class `d` lies in the representative of class `c`.
pub fn is_subconjugate(local: &PLocalSystem, d: usize, c: usize) -> bool {
    let rep = local.rep(c);
    local
        .classes()
        .class(d)
        .conjugates
        .iter()
        .any(|q| q.is_subgroup_of(rep))
}

/// A point where the coherence condition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionViolation {
    pub class: usize,
    pub element: usize,
    pub value: CyclotomicInt,
    pub transported_class: usize,
    pub transported_value: CyclotomicInt,
}

/// Checks `χ_P(xP) = χ_{Q'}(g x g⁻¹ Q')` for every class representative `P` and
/// every `x ∈ N_G(P)`, where `Q = P⟨x_p⟩` and `g Q g⁻¹ = Q'`.
///
/// With a vertex set, components outside it count as zero; the set must be
/// closed under taking subgroups up to conjugacy.
pub fn check_condition_c(
    local: &PLocalSystem,
    tuple: &[ClassFunction],
    vertex_set: Option<&[usize]>,
) -> Result<Vec<ConditionViolation>> {
    if tuple.len() != local.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} components for {} p-subgroup classes",
            tuple.len(),
            local.len()
        )));
    }
    for (c, (cf, l)) in tuple.iter().zip(local.locals()).enumerate() {
        if cf.values.len() != l.quotient.classes().len() {
            return Err(Error::DimensionMismatch(format!(
                "component {c} has {} values for {} classes",
                cf.values.len(),
                l.quotient.classes().len()
            )));
        }
    }
    let included: Vec<bool> = match vertex_set {
        None => vec![true; local.len()],
        Some(xs) => {
            let mut inc = vec![false; local.len()];
            for &c in xs {
                if c >= local.len() {
                    return Err(Error::DimensionMismatch(format!("no p-subgroup class {c}")));
                }
                inc[c] = true;
            }
            for c in (0..local.len()).filter(|&c| inc[c]) {
                if let Some(d) = (0..local.len()).find(|&d| !inc[d] && is_subconjugate(local, d, c)) {
                    return Err(Error::NotDownwardClosed(format!(
                        "class {d} lies below class {c} but is missing"
                    )));
                }
            }
            inc
        }
    };
    let m = tuple
        .iter()
        .flat_map(|cf| cf.values.first())
        .map(CyclotomicInt::conductor)
        .next()
        .unwrap_or(2 * local.pprime_exponent());
    let value = |c: usize, coset: usize| -> CyclotomicInt {
        if included[c] {
            tuple[c].at_coset(&local.local(c).quotient, coset).clone()
        } else {
            CyclotomicInt::zero(m)
        }
    };
    let mut out = Vec::new();
    for (c, l) in local.locals().iter().enumerate() {
        for &x in l.normalizer.members() {
            let here = value(c, l.quotient.coset_of(x).expect("x normalizes P"));
            let tr = local.transport(c, x);
            let there = value(tr.class, tr.coset);
            if here != there {
                out.push(ConditionViolation {
                    class: c,
                    element: x,
                    value: here,
                    transported_class: tr.class,
                    transported_value: there,
                });
            }
        }
    }
    Ok(out)
}

/// `ε·χ` is a homomorphism into the roots of unity, `ε = χ(1) = ±1`.
pub fn is_signed_linear_character(q: &QuotientGroup, cf: &ClassFunction) -> bool {
    let one = cf.at_coset(q, 0);
    let eps = match one.as_integer() {
        Some(e @ (1 | -1)) => e,
        _ => return false,
    };
    let psi: Vec<CyclotomicInt> = (0..q.order()).map(|u| cf.at_coset(q, u).scale(eps)).collect();
    if psi.iter().any(|v| v.root_of_unity_exponent().is_none()) {
        return false;
    }
    let t = q.table();
    (0..q.order()).all(|u| (0..q.order()).all(|v| psi[t.mul(u, v)] == psi[u].mul(&psi[v])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::table_of_marks;
    use crate::permgroup::{group_from_generators, Permutation};

    fn ints(cf: &ClassFunction) -> Vec<i64> {
        cf.values.iter().map(|v| v.as_integer().unwrap()).collect()
    }

    #[test]
    fn s3_beta_values() {
        let g = group_from_generators(
            3,
            &[
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        let marks = table_of_marks(&g);
        let local = PLocalSystem::new(&g, 3).unwrap();
        // quotient classes of S3/1 are ordered (id, 3-cycles, transpositions)
        let beta = beta_of_gset(&marks, &local, &BurnsideElement::basis(4, 1));
        assert_eq!(ints(&beta[0]), vec![3, 0, 1]);
        assert_eq!(ints(&beta[1]), vec![0, 0]);
        let beta = beta_of_gset(&marks, &local, &BurnsideElement::basis(4, 2));
        assert_eq!(ints(&beta[1]), vec![2, 0]);
        for h in 0..4 {
            let beta = beta_of_gset(&marks, &local, &BurnsideElement::basis(4, h));
            assert!(check_condition_c(&local, &beta, None).unwrap().is_empty());
        }
    }

    #[test]
    fn c3_trivial_character_alone_fails() {
        let g = group_from_generators(3, &[Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        let local = PLocalSystem::new(&g, 3).unwrap();
        let m = 2;
        let tuple = vec![
            ClassFunction {
                values: vec![CyclotomicInt::one(m); 3],
            },
            ClassFunction {
                values: vec![CyclotomicInt::zero(m)],
            },
        ];
        let report = check_condition_c(&local, &tuple, None).unwrap();
        assert_eq!(report.len(), 2);
        assert!(report.iter().all(|v| v.class == 0 && v.transported_class == 1));

        assert!(matches!(
            check_condition_c(&local, &tuple, Some(&[1])),
            Err(Error::NotDownwardClosed(_))
        ));
        // with only the trivial vertex, χ_{C3} reads as zero anyway
        assert_eq!(check_condition_c(&local, &tuple, Some(&[0])).unwrap().len(), 2);
    }
}
