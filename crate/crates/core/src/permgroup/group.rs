use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;

use super::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 2000;

/// Multiplication table of an abstract finite group on `0..n`, identity `0`.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

impl CayleyTable {
    /// `f(a, b)` must return the index of `a * b`; index `0` must be the identity.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(f(a, b) as u32);
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| mul[a * n + b] == 0)
                .expect("group table without inverse");
            inv[a] = b as u32;
        }
        let mut orders = vec![1u32; n];
        for a in 1..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        CayleyTable {
            n,
            mul,
            inv,
            orders,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn order_of(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    /// `g a g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.order_of(a) as i64;
        let e = k.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| acc.lcm(&(o as usize)))
    }

    /// Sorted member list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            i += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// A small generating set of the subgroup with the given members, chosen greedily.
    pub fn greedy_generators(&self, members: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[0] = true;
        for &x in members {
            if !span[x] {
                gens.push(x);
                for y in self.closure(&gens) {
                    span[y] = true;
                }
            }
        }
        gens
    }

    /// Conjugacy classes as sorted member lists, ordered by `(size, smallest member)`.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.n).map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes.sort_by(|a, b| (a.len(), a[0]).cmp(&(b.len(), b[0])));
        classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[derive(Debug)]
struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: CayleyTable,
}

/// A finite permutation group with all elements enumerated in sorted order.
///
/// Element `i` is `elements()[i]`; the identity is always element `0`.
/// Clones share the underlying data.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.data.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.data.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.data.elements[i]
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.data.index.get(x).copied()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.data.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.table.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.data.table.inv(a)
    }

    pub fn exponent(&self) -> usize {
        self.data.table.exponent()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup {
            members: self.table().closure(gens),
        }
    }

    /// Validates closure before wrapping `members` as a subgroup.
    pub fn subgroup_from_members(&self, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        let h = Subgroup { members };
        if !h.contains(0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in h.members() {
            for &b in h.members() {
                if !h.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "not closed: {} * {}",
                        self.element(a),
                        self.element(b)
                    )));
                }
            }
        }
        Ok(h)
    }

    /// `g H g⁻¹`
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let t = self.table();
        let mut members: Vec<usize> = h.members.iter().map(|&x| t.conj(g, x)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let t = self.table();
        let members = (0..self.order())
            .filter(|&g| h.members.iter().all(|&x| h.contains(t.conj(g, x))))
            .collect();
        Subgroup { members }
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .filter(|&g| h.members.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup { members }
    }

    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        let t = self.table();
        n.is_subgroup_of(h)
            && h
                .members
                .iter()
                .all(|&g| n.members.iter().all(|&x| n.contains(t.conj(g, x))))
    }

    /// Splits `x` into its commuting p-part and p'-part, returned as element indices.
    pub fn p_part(&self, x: usize, p: u64) -> (usize, usize) {
        let t = self.table();
        let (pk, q) = split_prime_power(t.order_of(x) as u64, p);
        if pk == 1 {
            return (0, x);
        }
        let q_inv = mod_inverse(q % pk, pk).expect("q coprime to p^k");
        let xp = t.pow(x, (q * q_inv) as i64);
        (xp, self.mul(x, self.inv(xp)))
    }

    pub fn is_p_element(&self, x: usize, p: u64) -> bool {
        is_prime_power_of(self.table().order_of(x) as u64, p)
    }

    /// The subgroup `H` re-realized as a group in its own right.
    ///
    /// Because both element lists are sorted, element `i` of the result is
    /// element `h.members()[i]` of `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in h.members.iter().enumerate() {
            pos[x] = i;
        }
        let table = CayleyTable::from_fn(h.order(), |a, b| {
            pos[self.mul(h.members[a], h.members[b])]
        });
        let elements: Vec<Permutation> = h.members.iter().map(|&x| self.element(x).clone()).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let generators = table
            .greedy_generators(&(0..h.order()).collect::<Vec<_>>())
            .into_iter()
            .map(|i| elements[i].clone())
            .collect();
        FiniteGroup {
            data: Arc::new(GroupData {
                degree: self.degree(),
                generators,
                elements,
                index,
                table,
            }),
        }
    }
}

/// Sorted member list of a subgroup of some [`FiniteGroup`]. The member list is
/// also the canonical key used for deduplication and ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn key(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
    group_from_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
}

pub fn group_from_generators_capped(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for (k, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {k} has degree {}, expected {degree}",
                g.degree()
            )));
        }
    }
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let y = &elements[i] * g;
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    elements.sort_unstable();
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    let table = CayleyTable::from_fn(elements.len(), |a, b| index[&(&elements[a] * &elements[b])]);
    Ok(FiniteGroup {
        data: Arc::new(GroupData {
            degree,
            generators: gens.to_vec(),
            elements,
            index,
            table,
        }),
    })
}

/// `n = p^k · q` with `p ∤ q`; returns `(p^k, q)`.
pub fn split_prime_power(mut n: u64, p: u64) -> (u64, u64) {
    let mut pk = 1;
    while n.is_multiple_of(p) {
        n /= p;
        pk *= p;
    }
    (pk, n)
}

pub fn is_prime_power_of(n: u64, p: u64) -> bool {
    split_prime_power(n, p).1 == 1
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    (g.gcd == 1).then(|| g.x.rem_euclid(m as i64) as u64)
}
