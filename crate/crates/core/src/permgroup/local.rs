use super::group::{is_prime, split_prime_power, FiniteGroup, Subgroup};
use super::lattice::{p_subgroup_classes, SubgroupClasses};
use super::quotient::{quotient, QuotientGroup};
use crate::error::{Error, Result};

/// `N_G(P)`, `C_G(P)` and `N_G(P)/P` for one p-subgroup class representative `P`.
#[derive(Clone, Debug)]
pub struct LocalQuotient {
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    pub quotient: QuotientGroup,
    generators: Vec<usize>,
}

/// Where the coherence condition sends a pair `(P, x)`: the class of
/// `Q = P⟨x_p⟩` and the coset of `g x g⁻¹` in `N_G(Q')/Q'`, where `g` carries
/// `Q` to its class representative `Q'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transported {
    pub class: usize,
    pub coset: usize,
}

/// The p-subgroup classes of a group with their normalizer quotients.
#[derive(Clone, Debug)]
pub struct PLocalSystem {
    group: FiniteGroup,
    p: u64,
    classes: SubgroupClasses,
    locals: Vec<LocalQuotient>,
}

impl PLocalSystem {
    pub fn new(g: &FiniteGroup, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let classes = p_subgroup_classes(g, p);
        let locals = classes
            .classes()
            .iter()
            .map(|c| {
                let normalizer = g.normalizer(&c.rep);
                let quotient = quotient(g, &normalizer, &c.rep)?;
                Ok(LocalQuotient {
                    centralizer: g.centralizer(&c.rep),
                    generators: g.table().greedy_generators(c.rep.members()),
                    normalizer,
                    quotient,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PLocalSystem {
            group: g.clone(),
            p,
            classes,
            locals,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn classes(&self) -> &SubgroupClasses {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.locals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locals.is_empty()
    }

    pub fn rep(&self, c: usize) -> &Subgroup {
        self.classes.rep(c)
    }

    pub fn local(&self, c: usize) -> &LocalQuotient {
        &self.locals[c]
    }

    pub fn locals(&self) -> &[LocalQuotient] {
        &self.locals
    }

    /// `exp(G)_{p'}`
    pub fn pprime_exponent(&self) -> u64 {
        split_prime_power(self.group.exponent() as u64, self.p).1
    }

    /// Applies `P ↦ P⟨x_p⟩` to the representative of class `c`; `x` must normalize it.
    pub fn transport(&self, c: usize, x: usize) -> Transported {
        let g = &self.group;
        let (xp, _) = g.p_part(x, self.p);
        let local = &self.locals[c];
        if self.rep(c).contains(xp) {
            return Transported {
                class: c,
                coset: local.quotient.coset_of(x).expect("x normalizes P"),
            };
        }
        let mut gens = local.generators.clone();
        gens.push(xp);
        let q = g.subgroup_generated(&gens);
        let (class, to_rep) = self.classes.locate(&q).expect("P<x_p> is a p-subgroup");
        let y = g.table().conj(to_rep, x);
        Transported {
            class,
            coset: self.locals[class]
                .quotient
                .coset_of(y)
                .expect("x normalizes P<x_p>"),
        }
    }
}
