use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::group::{is_prime_power_of, CayleyTable, FiniteGroup, Subgroup};
use super::AbelianStructure;
use crate::error::{Error, Result};
use crate::zlinalg::{smith_normal_form, IntMatrix};

/// `H/N` realized by an explicit coset table.
///
/// Coset `i` has canonical representative `coset_reps[i]`, the smallest member of
/// the coset; coset `0` is `N` itself.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    numerator: Subgroup,
    kernel: Subgroup,
    coset_reps: Vec<usize>,
    coset_of: HashMap<usize, usize>,
    table: CayleyTable,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

pub fn quotient(g: &FiniteGroup, h: &Subgroup, n: &Subgroup) -> Result<QuotientGroup> {
    if !g.is_normal_in(n, h) {
        return Err(Error::NotNormal);
    }
    let mut coset_of_rep: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut rep_of: HashMap<usize, usize> = HashMap::new();
    for &x in h.members() {
        if rep_of.contains_key(&x) {
            continue;
        }
        let coset: Vec<usize> = n.members().iter().map(|&k| g.mul(x, k)).collect();
        let r = *coset.iter().min().expect("nonempty coset");
        for y in coset {
            rep_of.insert(y, r);
        }
        reps.push(r);
    }
    reps.sort_unstable();
    for (i, &r) in reps.iter().enumerate() {
        coset_of_rep.insert(r, i);
    }
    let coset_of: HashMap<usize, usize> = rep_of
        .into_iter()
        .map(|(x, r)| (x, coset_of_rep[&r]))
        .collect();
    let table = CayleyTable::from_fn(reps.len(), |a, b| coset_of[&g.mul(reps[a], reps[b])]);
    let classes = table.conjugacy_classes();
    let mut class_of = vec![0; reps.len()];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = c;
        }
    }
    Ok(QuotientGroup {
        numerator: h.clone(),
        kernel: n.clone(),
        coset_reps: reps,
        coset_of,
        table,
        classes,
        class_of,
    })
}

impl QuotientGroup {
    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.coset_reps[coset]
    }

    /// Coset index of an element of the numerator.
    pub fn coset_of(&self, x: usize) -> Option<usize> {
        self.coset_of.get(&x).copied()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    /// Conjugacy classes of cosets, ordered by `(size, smallest coset index)`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, coset: usize) -> usize {
        self.class_of[coset]
    }

    pub fn pprime_abelianization(&self, p: u64) -> Abelianization {
        pprime_abelianization(&self.table, p)
    }
}

/// Largest abelian quotient of order prime to `p`, with coordinates of every element.
#[derive(Clone, Debug)]
pub struct Abelianization {
    /// Generators are element indices of the source table.
    pub structure: AbelianStructure<usize>,
    /// `coords[x][i]` is the exponent of generator `i` in the image of `x`, reduced mod `d_i`.
    pub coords: Vec<Vec<u64>>,
}

pub fn pprime_abelianization(t: &CayleyTable, p: u64) -> Abelianization {
    let n = t.len();
    let mut kernel_gens: Vec<usize> = Vec::new();
    for a in 0..n {
        for b in 0..a {
            let c = t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b)));
            if c != 0 {
                kernel_gens.push(c);
            }
        }
        if a != 0 && is_prime_power_of(t.order_of(a) as u64, p) {
            kernel_gens.push(a);
        }
    }
    kernel_gens.sort_unstable();
    kernel_gens.dedup();
    let kernel = t.closure(&kernel_gens);

    // cosets of the kernel, indexed by smallest member
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in &kernel {
            coset[t.mul(x, k)] = id;
        }
    }
    let m = reps.len();
    let bmul = |a: usize, b: usize| coset[t.mul(reps[a], reps[b])];

    // greedy generators with a triangular relation lattice
    let mut span: HashMap<usize, Vec<i64>> = HashMap::from([(0usize, Vec::new())]);
    let mut gens: Vec<usize> = Vec::new();
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for c in 0..m {
        if span.contains_key(&c) {
            continue;
        }
        let mut power = c;
        let mut k = 1i64;
        while !span.contains_key(&power) {
            power = bmul(power, c);
            k += 1;
        }
        let mut rel: Vec<i64> = span[&power].iter().map(|&v| -v).collect();
        rel.resize(gens.len(), 0);
        rel.push(k);
        relations.push(rel);
        let old: Vec<(usize, Vec<i64>)> = span.iter().map(|(a, v)| (*a, v.clone())).collect();
        for (a, v) in old {
            let mut x = a;
            for j in 1..k {
                x = bmul(x, c);
                let mut w = v.clone();
                w.resize(gens.len(), 0);
                w.push(j);
                span.insert(x, w);
            }
        }
        for v in span.values_mut() {
            v.resize(gens.len() + 1, 0);
        }
        gens.push(c);
    }
    let r = gens.len();
    if r == 0 {
        return Abelianization {
            structure: AbelianStructure::trivial(),
            coords: vec![Vec::new(); n],
        };
    }
    let mut rel_matrix = IntMatrix::zeros(r, r);
    for (i, rel) in relations.iter().enumerate() {
        for (j, &v) in rel.iter().enumerate() {
            rel_matrix[(i, j)] = BigInt::from(v);
        }
    }
    let snf = smith_normal_form(&rel_matrix);
    let diag = snf.diagonal();
    let kept: Vec<usize> = (0..r).filter(|&k| diag[k] != BigInt::from(1)).collect();
    let factors: Vec<u64> = kept.iter().map(|&k| diag[k].to_u64().expect("finite factor")).collect();

    let bpow = |a: usize, e: &BigInt, ord: u64| {
        let e = e.mod_floor(&BigInt::from(ord)).to_u64().expect("reduced exponent");
        (0..e).fold(0, |x, _| bmul(x, a))
    };
    let gen_orders: Vec<u64> = gens.iter().map(|&c| coset_order(c, &bmul)).collect();
    let mut generators = Vec::new();
    for &k in &kept {
        let mut x = 0;
        for i in 0..r {
            let e = &snf.v_inv[(k, i)];
            if !e.is_zero() {
                x = bmul(x, bpow(gens[i], e, gen_orders[i]));
            }
        }
        generators.push(reps[x]);
    }
    let coords = (0..n)
        .map(|x| {
            let v = &span[&coset[x]];
            kept.iter()
                .zip(&factors)
                .map(|(&k, &d)| {
                    let s: BigInt = (0..r).map(|i| BigInt::from(v[i]) * &snf.v[(i, k)]).sum();
                    s.mod_floor(&BigInt::from(d)).to_u64().expect("reduced coordinate")
                })
                .collect()
        })
        .collect();
    Abelianization {
        structure: AbelianStructure {
            invariant_factors: factors,
            generators,
        },
        coords,
    }
}

fn coset_order(c: usize, bmul: &impl Fn(usize, usize) -> usize) -> u64 {
    let mut x = c;
    let mut k = 1;
    while x != 0 {
        x = bmul(x, c);
        k += 1;
    }
    k
}
