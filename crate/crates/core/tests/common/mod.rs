//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library beyond building inputs.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use tsring::permgroup::{group_from_generators, FiniteGroup, Permutation};

pub struct Named {
    pub name: &'static str,
    pub degree: usize,
    pub gens: Vec<Vec<usize>>,
}

fn cycle_on(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut img: Vec<usize> = (0..degree).collect();
    for c in cycles {
        for i in 0..c.len() {
            img[c[i]] = c[(i + 1) % c.len()];
        }
    }
    img
}

pub fn named(name: &'static str) -> Named {
    let (degree, gens): (usize, Vec<Vec<usize>>) = match name {
        "1" => (1, vec![]),
        "C2" => (2, vec![cycle_on(2, &[&[0, 1]])]),
        "C3" => (3, vec![cycle_on(3, &[&[0, 1, 2]])]),
        "C4" => (4, vec![cycle_on(4, &[&[0, 1, 2, 3]])]),
        "C2xC2" => (4, vec![cycle_on(4, &[&[0, 1], &[2, 3]]), cycle_on(4, &[&[0, 2], &[1, 3]])]),
        "S3" => (3, vec![cycle_on(3, &[&[0, 1]]), cycle_on(3, &[&[0, 1, 2]])]),
        "C6" => (5, vec![cycle_on(5, &[&[0, 1], &[2, 3, 4]])]),
        "D8" => (4, vec![cycle_on(4, &[&[0, 1, 2, 3]]), cycle_on(4, &[&[0, 2]])]),
        "C9" => (9, vec![cycle_on(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]])]),
        "C3xC3" => (6, vec![cycle_on(6, &[&[0, 1, 2]]), cycle_on(6, &[&[3, 4, 5]])]),
        "A4" => (4, vec![cycle_on(4, &[&[0, 1, 2]]), cycle_on(4, &[&[1, 2, 3]])]),
        "C12" => (7, vec![cycle_on(7, &[&[0, 1, 2, 3], &[4, 5, 6]])]),
        "C2xC6" => (7, vec![cycle_on(7, &[&[0, 1]]), cycle_on(7, &[&[2, 3], &[4, 5, 6]])]),
        "C5:C4" => (5, vec![cycle_on(5, &[&[0, 1, 2, 3, 4]]), cycle_on(5, &[&[1, 2, 4, 3]])]),
        "S4" => (4, vec![cycle_on(4, &[&[0, 1]]), cycle_on(4, &[&[0, 1, 2, 3]])]),
        other => panic!("unknown test group {other}"),
    };
    Named { name, degree, gens }
}

impl Named {
    pub fn group(&self) -> FiniteGroup {
        let gens: Vec<Permutation> = self
            .gens
            .iter()
            .map(|g| Permutation::new(g.clone()).unwrap())
            .collect();
        group_from_generators(self.degree, &gens).unwrap()
    }

    pub fn oracle(&self) -> Oracle {
        Oracle::new(self.degree, &self.gens)
    }

    pub fn json(&self) -> String {
        serde_json::json!({"degree": self.degree, "generators": self.gens, "name": self.name}).to_string()
    }
}

/// Groups used across the acceptance criteria.
pub const SUITE: [&str; 11] = ["S3", "A4", "S4", "D8", "C6", "C9", "C3xC3", "C5:C4", "C2", "C3", "C2xC2"];

pub fn primes_dividing(n: usize) -> Vec<u64> {
    (2..=n as u64)
        .filter(|&q| (n as u64).is_multiple_of(q) && (2..q).all(|d| q % d != 0))
        .collect()
}

pub type Sub = Vec<usize>;

/// A group given by its elements in sorted order, with a full multiplication table.
pub struct Oracle {
    pub elems: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Oracle {
    pub fn new(degree: usize, gens: &[Vec<usize>]) -> Self {
        let id: Vec<usize> = (0..degree).collect();
        let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mul: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let inv = (0..elems.len())
            .map(|a| (0..elems.len()).find(|&b| mul[a][b] == 0).unwrap())
            .collect();
        Oracle { elems, mul, inv }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul[self.mul[g][x]][self.inv[g]]
    }

    pub fn conj_sub(&self, g: usize, h: &[usize]) -> Sub {
        let mut out: Sub = h.iter().map(|&x| self.conj(g, x)).collect();
        out.sort_unstable();
        out
    }

    pub fn elem_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul[acc][x])
    }

    pub fn closure(&self, gens: &[usize]) -> Sub {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Every subgroup, found as joins of cyclic subgroups until nothing new appears.
    pub fn all_subgroups(&self) -> BTreeSet<Sub> {
        let mut subs: BTreeSet<Sub> = (0..self.order()).map(|x| self.closure(&[x])).collect();
        loop {
            let list: Vec<Sub> = subs.iter().cloned().collect();
            let mut added = false;
            for a in &list {
                for b in &list {
                    let gens: Vec<usize> = a.iter().chain(b).copied().collect();
                    if subs.insert(self.closure(&gens)) {
                        added = true;
                    }
                }
            }
            if !added {
                return subs;
            }
        }
    }

    /// Conjugacy classes of subgroups sorted by (order, smallest member key);
    /// each class is listed with its smallest member first.
    pub fn subgroup_classes(&self, keep: impl Fn(&Sub) -> bool) -> Vec<Vec<Sub>> {
        let mut left: BTreeSet<Sub> = self.all_subgroups().into_iter().filter(|h| keep(h)).collect();
        let mut classes = Vec::new();
        while let Some(h) = left.iter().next().cloned() {
            let class: BTreeSet<Sub> = (0..self.order()).map(|g| self.conj_sub(g, &h)).collect();
            for c in &class {
                left.remove(c);
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by(|a, b| (a[0].len(), &a[0]).cmp(&(b[0].len(), &b[0])));
        classes
    }

    /// Classes of subgroups of `s` under conjugation by `s`, ordered as above.
    pub fn classes_within(&self, s: &Sub) -> Vec<Vec<Sub>> {
        let mut left: BTreeSet<Sub> = self
            .all_subgroups()
            .into_iter()
            .filter(|h| h.iter().all(|x| s.binary_search(x).is_ok()))
            .collect();
        let mut classes = Vec::new();
        while let Some(h) = left.iter().next().cloned() {
            let class: BTreeSet<Sub> = s.iter().map(|&g| self.conj_sub(g, &h)).collect();
            for c in &class {
                left.remove(c);
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by(|a, b| (a[0].len(), &a[0]).cmp(&(b[0].len(), &b[0])));
        classes
    }

    /// Smallest subgroup of order `|G|_p`.
    pub fn sylow(&self, p: u64) -> Sub {
        let mut pk = 1;
        while self.order().is_multiple_of(pk * p as usize) {
            pk *= p as usize;
        }
        self.all_subgroups().into_iter().find(|h| h.len() == pk).unwrap()
    }

    /// `|B(S)^×|` and `|B(F)^×|` by sign-vector search over the marks of `S`.
    pub fn sylow_unit_counts(&self, p: u64) -> (usize, usize) {
        let s = self.sylow(p);
        let classes = self.classes_within(&s);
        let reps: Vec<Sub> = classes.iter().map(|c| c[0].clone()).collect();
        let marks = self.marks_within(&s, &reps);
        let block: Vec<usize> = reps
            .iter()
            .map(|r| reps.iter().position(|q| (0..self.order()).any(|g| &self.conj_sub(g, q) == r)).unwrap())
            .collect();
        (
            Oracle::unit_ghosts(&marks, None).len(),
            Oracle::unit_ghosts(&marks, Some(&block)).len(),
        )
    }

    /// `|Hom(N_G(P)/P, μ_e)|` for the given subgroup `P`.
    pub fn hom_count(&self, p_sub: &[usize], e: u64) -> usize {
        self.homs_to_cyclic(&self.normalizer(p_sub), p_sub, e).len()
    }

    pub fn p_subgroup_classes(&self, p: u64) -> Vec<Vec<Sub>> {
        self.subgroup_classes(|h| is_power_of(h.len(), p))
    }

    /// `m[H][K] = |{gH : K gH = gH}|` over class representatives of `g` inside `within`.
    pub fn marks_within(&self, within: &[usize], reps: &[Sub]) -> Vec<Vec<i64>> {
        reps.iter()
            .map(|h| {
                reps.iter()
                    .map(|k| {
                        let fixed = within
                            .iter()
                            .filter(|&&y| k.iter().all(|&x| h.binary_search(&self.conj(self.inv[y], x)).is_ok()))
                            .count();
                        (fixed / h.len()) as i64
                    })
                    .collect()
            })
            .collect()
    }

    pub fn table_of_marks(&self) -> Vec<Vec<i64>> {
        let reps: Vec<Sub> = self.subgroup_classes(|_| true).into_iter().map(|c| c[0].clone()).collect();
        let all: Vec<usize> = (0..self.order()).collect();
        self.marks_within(&all, &reps)
    }

    /// `(x_p, x_p')` found by searching pairs of powers of `x`.
    pub fn p_part(&self, x: usize, p: u64) -> (usize, usize) {
        let n = self.elem_order(x);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.power(x, i), self.power(x, j));
                if self.mul[a][b] == x
                    && is_power_of(self.elem_order(a), p)
                    && !(self.elem_order(b) as u64).is_multiple_of(p)
                {
                    return (a, b);
                }
            }
        }
        unreachable!("every element factors")
    }

    pub fn normalizer(&self, h: &[usize]) -> Sub {
        (0..self.order()).filter(|&g| self.conj_sub(g, h) == h).collect()
    }

    /// All homomorphisms `N → Z/e` vanishing on `kill`, as value maps on `N`.
    pub fn homs_to_cyclic(&self, n: &[usize], kill: &[usize], e: u64) -> Vec<BTreeMap<usize, u64>> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = vec![0];
        for &x in n {
            if !span.contains(&x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        let mut out = Vec::new();
        let total = (e as usize).pow(gens.len() as u32);
        'assign: for code in 0..total {
            let vals: Vec<u64> = (0..gens.len())
                .map(|i| (code / (e as usize).pow(i as u32)) as u64 % e)
                .collect();
            let mut f: BTreeMap<usize, u64> = BTreeMap::from([(0, 0)]);
            let mut queue = VecDeque::from([0]);
            while let Some(x) = queue.pop_front() {
                for (gi, &g) in gens.iter().enumerate() {
                    let y = self.mul[x][g];
                    let v = (f[&x] + vals[gi]) % e;
                    match f.get(&y) {
                        Some(&w) if w != v => continue 'assign,
                        Some(_) => {}
                        None => {
                            f.insert(y, v);
                            queue.push_back(y);
                        }
                    }
                }
            }
            let hom = n.iter().all(|&a| n.iter().all(|&b| f[&self.mul[a][b]] == (f[&a] + f[&b]) % e));
            if hom && kill.iter().all(|k| f[k] == 0) {
                out.push(f);
            }
        }
        out
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1u64, |acc, x| lcm(acc, self.elem_order(x) as u64))
    }

    pub fn pprime_exponent(&self, p: u64) -> u64 {
        let mut e = self.exponent();
        while e.is_multiple_of(p) {
            e /= p;
        }
        e
    }

    /// Coherent tuples by exhaustive search, each as `(class, x) ↦ value` over
    /// `x` in the normalizer of the class representative. `None` above `cap` candidates.
    pub fn coherent_tuples(&self, p: u64, cap: usize) -> Option<BTreeSet<Vec<Vec<u64>>>> {
        let e = self.pprime_exponent(p);
        let classes = self.p_subgroup_classes(p);
        let reps: Vec<Sub> = classes.iter().map(|c| c[0].clone()).collect();
        let norms: Vec<Sub> = reps.iter().map(|r| self.normalizer(r)).collect();
        let homs: Vec<Vec<BTreeMap<usize, u64>>> = reps
            .iter()
            .zip(&norms)
            .map(|(r, n)| self.homs_to_cyclic(n, r, e))
            .collect();
        let total: usize = homs.iter().map(Vec::len).product();
        if total > cap {
            return None;
        }
        // (class, x) -> (class', x') with Q = P<x_p> carried to its representative
        let mut links = Vec::new();
        for (c, (r, n)) in reps.iter().zip(&norms).enumerate() {
            for &x in n {
                let (xp, _) = self.p_part(x, p);
                let mut gens = r.clone();
                gens.push(xp);
                let q = self.closure(&gens);
                let d = classes.iter().position(|cl| cl.contains(&q)).unwrap();
                let g = (0..self.order()).find(|&g| self.conj_sub(g, &q) == reps[d]).unwrap();
                links.push((c, x, d, self.conj(g, x)));
            }
        }
        let mut out = BTreeSet::new();
        for code in 0..total {
            let mut rest = code;
            let pick: Vec<&BTreeMap<usize, u64>> = homs
                .iter()
                .map(|h| {
                    let f = &h[rest % h.len()];
                    rest /= h.len();
                    f
                })
                .collect();
            if links.iter().all(|&(c, x, d, y)| pick[c][&x] == pick[d][&y]) {
                out.insert(pick.iter().map(|f| f.values().copied().collect()).collect());
            }
        }
        Some(out)
    }

    /// Sign vectors on the given mark matrix that are marks of integral elements.
    pub fn unit_ghosts(marks: &[Vec<i64>], constant_on: Option<&[usize]>) -> BTreeSet<Vec<i64>> {
        let n = marks.len();
        let mut out = BTreeSet::new();
        for bits in 0u64..(1 << n) {
            let v: Vec<i64> = (0..n).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect();
            if let Some(block) = constant_on {
                if (0..n).any(|i| (0..n).any(|j| block[i] == block[j] && v[i] != v[j])) {
                    continue;
                }
            }
            if unmark(marks, &v).is_some() {
                out.insert(v);
            }
        }
        out
    }
}

/// Integral solution `a` of `Σ_H a_H m[H][K] = v_K`, if one exists.
pub fn unmark(marks: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = marks.len();
    let mut a = vec![0i64; n];
    for k in (0..n).rev() {
        let rest: i64 = (k + 1..n).map(|h| a[h] * marks[h][k]).sum();
        let num = v[k] - rest;
        if num % marks[k][k] != 0 {
            return None;
        }
        a[k] = num / marks[k][k];
    }
    Some(a)
}

pub fn is_power_of(mut n: usize, p: u64) -> bool {
    while n > 1 && (n as u64).is_multiple_of(p) {
        n /= p as usize;
    }
    n == 1
}

pub fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
