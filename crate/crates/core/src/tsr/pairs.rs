use std::collections::HashMap;

use serde::Serialize;

use crate::permgroup::{split_prime_power, PLocalSystem};

/// A G-orbit representative `(P, sP)`: a p-subgroup class and a p'-conjugacy
/// class of `N_G(P)/P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pair {
    pub class: usize,
    pub quotient_class: usize,
    /// Smallest coset in the quotient class.
    pub coset: usize,
    /// Canonical representative in G of that coset.
    pub element: usize,
}

/// `T_p(G)` up to G-conjugacy. Pairs are grouped by p-subgroup class, and
/// within a class the identity coset comes first.
#[derive(Clone, Debug)]
pub struct PairsTpG {
    pairs: Vec<Pair>,
    index: HashMap<(usize, usize), usize>,
    first: Vec<usize>,
    conductor: u64,
}

pub fn pairs_tpg(local: &PLocalSystem) -> PairsTpG {
    let p = local.p();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    let mut first = Vec::new();
    for (c, l) in local.locals().iter().enumerate() {
        first.push(pairs.len());
        let q = &l.quotient;
        for (k, members) in q.classes().iter().enumerate() {
            let coset = members[0];
            if split_prime_power(q.table().order_of(coset) as u64, p).0 != 1 {
                continue;
            }
            index.insert((c, k), pairs.len());
            pairs.push(Pair {
                class: c,
                quotient_class: k,
                coset,
                element: q.rep(coset),
            });
        }
    }
    PairsTpG {
        pairs,
        index,
        first,
        conductor: 2 * local.pprime_exponent(),
    }
}

impl PairsTpG {
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `m = 2·exp(G)_{p'}`, the conductor of every species value.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Index of the pair `(P, 1P)` for p-subgroup class `c`.
    pub fn identity_pair(&self, c: usize) -> usize {
        self.first[c]
    }

    /// Index of the pair through the given coset of `N_G(P)/P`, if it is p'.
    pub fn lookup(&self, local: &PLocalSystem, c: usize, coset: usize) -> Option<usize> {
        let k = local.local(c).quotient.class_of(coset);
        self.index.get(&(c, k)).copied()
    }
}
