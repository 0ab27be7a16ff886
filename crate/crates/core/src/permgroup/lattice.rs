use std::collections::{HashMap, VecDeque};

use super::group::{is_prime_power_of, split_prime_power, FiniteGroup, Subgroup};

/// Orders above which lattice enumeration logs a warning.
pub const LATTICE_WARN_ORDER: usize = 500;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Member with the lexicographically smallest key.
    pub rep: Subgroup,
    /// All conjugates, sorted by key.
    pub conjugates: Vec<Subgroup>,
    /// `to_rep[i]` is an element `g` with `g · conjugates[i] · g⁻¹ = rep`.
    pub to_rep: Vec<usize>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.conjugates.len()
    }

    pub fn order(&self) -> usize {
        self.rep.order()
    }
}

/// Subgroups of a group up to conjugacy, ordered by `(order, representative key)`.
#[derive(Clone, Debug)]
pub struct SubgroupClasses {
    classes: Vec<SubgroupClass>,
    class_of: HashMap<Vec<usize>, (usize, usize)>,
}

impl SubgroupClasses {
    fn from_classes(mut classes: Vec<SubgroupClass>) -> Self {
        classes.sort_by(|a, b| (a.order(), &a.rep).cmp(&(b.order(), &b.rep)));
        let mut class_of = HashMap::new();
        for (c, class) in classes.iter().enumerate() {
            for (i, h) in class.conjugates.iter().enumerate() {
                class_of.insert(h.key().to_vec(), (c, i));
            }
        }
        SubgroupClasses { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &SubgroupClass {
        &self.classes[c]
    }

    pub fn rep(&self, c: usize) -> &Subgroup {
        &self.classes[c].rep
    }

    pub fn class_index(&self, h: &Subgroup) -> Option<usize> {
        self.class_of.get(h.key()).map(|&(c, _)| c)
    }

    /// Class of `h` together with an element `g` such that `g h g⁻¹` is the representative.
    pub fn locate(&self, h: &Subgroup) -> Option<(usize, usize)> {
        self.class_of
            .get(h.key())
            .map(|&(c, i)| (c, self.classes[c].to_rep[i]))
    }

    pub fn total_subgroups(&self) -> usize {
        self.classes.iter().map(SubgroupClass::size).sum()
    }

    pub fn filter(&self, mut keep: impl FnMut(&SubgroupClass) -> bool) -> SubgroupClasses {
        Self::from_classes(self.classes.iter().filter(|c| keep(c)).cloned().collect())
    }
}

/// All subgroups of `g` up to conjugacy.
pub fn all_subgroup_classes(g: &FiniteGroup) -> SubgroupClasses {
    let extenders = cyclic_extenders(g, |n| prime_divisors(n as u64).len() == 1);
    enumerate_classes(g, &extenders, |_| true)
}

/// The p-subgroups of `g` (trivial subgroup included) up to conjugacy.
pub fn p_subgroup_classes(g: &FiniteGroup, p: u64) -> SubgroupClasses {
    let extenders = cyclic_extenders(g, |n| n > 1 && is_prime_power_of(n as u64, p));
    enumerate_classes(g, &extenders, |n| is_prime_power_of(n as u64, p))
}

/// One generator for each nontrivial cyclic subgroup whose order satisfies `keep`.
fn cyclic_extenders(g: &FiniteGroup, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let t = g.table();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for x in 1..g.order() {
        if keep(t.order_of(x)) {
            seen.entry(t.closure(&[x])).or_insert(x);
        }
    }
    let mut gens: Vec<usize> = seen.into_values().collect();
    gens.sort_unstable();
    gens
}

/// Builds up the lattice from the trivial subgroup by adjoining one generator of a
/// prime-power cyclic subgroup at a time. Every subgroup `K > 1` arises as `<K', x>`
/// for a maximal subgroup `K'` and a prime-power element `x ∈ K \ K'`, so extending
/// one representative per class and closing under conjugation reaches every class.
/// Subgroups whose order fails `admit` are discarded, which is sound whenever the
/// admitted orders are closed under taking maximal subgroups (e.g. p-groups).
fn enumerate_classes(
    g: &FiniteGroup,
    extenders: &[usize],
    admit: impl Fn(usize) -> bool,
) -> SubgroupClasses {
    if g.order() > LATTICE_WARN_ORDER {
        log::warn!(
            "enumerating the subgroup lattice of a group of order {}; this may be slow",
            g.order()
        );
    }
    let t = g.table();
    let mut known: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut queue = VecDeque::new();

    let add_class = |h: Subgroup, known: &mut HashMap<Vec<usize>, usize>, classes: &mut Vec<SubgroupClass>| -> Option<usize> {
        if known.contains_key(h.key()) {
            return None;
        }
        let class = conjugacy_class_of(g, &h);
        let c = classes.len();
        for k in &class.conjugates {
            known.insert(k.key().to_vec(), c);
        }
        classes.push(class);
        Some(c)
    };

    if let Some(c) = add_class(g.trivial(), &mut known, &mut classes) {
        queue.push_back(c);
    }
    while let Some(c) = queue.pop_front() {
        let rep = classes[c].rep.clone();
        let gens = t.greedy_generators(rep.members());
        for &x in extenders {
            if rep.contains(x) {
                continue;
            }
            let mut ext = gens.clone();
            ext.push(x);
            let k = Subgroup::from_sorted(t.closure(&ext));
            if !admit(k.order()) {
                continue;
            }
            if let Some(new) = add_class(k, &mut known, &mut classes) {
                queue.push_back(new);
            }
        }
    }
    SubgroupClasses::from_classes(classes)
}

fn conjugacy_class_of(g: &FiniteGroup, h: &Subgroup) -> SubgroupClass {
    let rep = (0..g.order())
        .map(|x| g.conjugate(h, x))
        .min()
        .expect("nonempty group");
    // canonical conjugators: smallest x with x·rep·x⁻¹ = conjugate
    let mut from_rep: HashMap<Subgroup, usize> = HashMap::new();
    for x in 0..g.order() {
        from_rep.entry(g.conjugate(&rep, x)).or_insert(x);
    }
    let mut pairs: Vec<(Subgroup, usize)> = from_rep.into_iter().collect();
    pairs.sort();
    let (conjugates, to_rep) = pairs.into_iter().map(|(k, x)| (k, g.inv(x))).unzip();
    SubgroupClass {
        rep,
        conjugates,
        to_rep,
    }
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Index of the class of Sylow p-subgroups within a p-subgroup class list.
pub fn sylow_class(classes: &SubgroupClasses, group_order: usize, p: u64) -> usize {
    let (pk, _) = split_prime_power(group_order as u64, p);
    classes
        .classes()
        .iter()
        .position(|c| c.order() as u64 == pk)
        .expect("Sylow subgroups exist")
}
