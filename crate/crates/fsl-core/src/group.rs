//! Fully enumerated permutation groups and subgroup values.
//!
//! Groups at this scale are stored as their complete element set in a fixed
//! canonical order (sorted image tables, identity first). Subgroups are
//! bitsets of element indices, so lattice work reduces to word operations
//! plus multiplication-table lookups.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quotient::Quotient;

/// Multiplication tables are materialized only below this order; larger
/// groups multiply permutations directly and look indices up by hash.
const MULT_TABLE_LIMIT: usize = 2048;

/// Configured bounds for closure and lattice enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest group order `closure` will enumerate.
    pub order_cap: usize,
    /// Largest subgroup interval `interval` will enumerate.
    pub interval_bound: usize,
    /// Node budget for the complement backtracking inside `maximal_subgroups`.
    pub complement_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 20_000,
            interval_bound: 100_000,
            complement_budget: 2_000_000,
        }
    }
}

#[derive(Default)]
pub(crate) struct Caches {
    pub small_gens: Mutex<HashMap<ElemSet, Arc<Vec<u32>>>>,
    pub conj_classes: Mutex<HashMap<ElemSet, Arc<Vec<ElemSet>>>>,
    pub normals: Mutex<HashMap<ElemSet, Arc<Vec<ElemSet>>>>,
    pub maximals: Mutex<HashMap<ElemSet, Arc<Vec<ElemSet>>>>,
    pub sylow: Mutex<HashMap<(ElemSet, u64), ElemSet>>,
    pub member: Mutex<HashMap<(String, ElemSet), bool>>,
    pub residual: Mutex<HashMap<(String, ElemSet), ElemSet>>,
    pub quotients: Mutex<HashMap<(ElemSet, ElemSet), Arc<Quotient>>>,
}

pub(crate) struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    mult: Option<Vec<u32>>,
    caps: Caps,
    pub(crate) caches: Caches,
}

/// An immutable, fully enumerated permutation group. Cheap to clone and safe
/// to share across threads; lazy caches are synchronized internally.
#[derive(Clone)]
pub struct PermGroup(pub(crate) Arc<GroupInner>);

impl PermGroup {
    /// Enumerates `<gens>` by breadth-first product expansion.
    pub fn closure(degree: usize, gens: &[Permutation], caps: Caps) -> Result<PermGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut elems = vec![id];
        let mut qi = 0;
        while qi < elems.len() {
            let x = elems[qi].clone();
            qi += 1;
            for g in gens {
                let y = x.compose(g);
                if !seen.contains_key(&y) {
                    if elems.len() >= caps.order_cap {
                        return Err(Error::OrderCapExceeded(format!(
                            "closure exceeded order cap {}",
                            caps.order_cap
                        )));
                    }
                    seen.insert(y.clone(), ());
                    elems.push(y);
                }
            }
        }
        Ok(Self::from_elements(degree, gens.to_vec(), elems, caps))
    }

    /// Builds a group from a complete element set (must be closed; callers are
    /// internal construction paths that guarantee this).
    pub(crate) fn from_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
        caps: Caps,
    ) -> PermGroup {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let index_of: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inv: Vec<u32> = elements.iter().map(|p| index_of[&p.inverse()]).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let mult = if n <= MULT_TABLE_LIMIT {
            let mut t = vec![0u32; n * n];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    t[i * n + j] = index_of[&a.compose(b)];
                }
            }
            Some(t)
        } else {
            None
        };
        PermGroup(Arc::new(GroupInner {
            degree,
            generators,
            elements,
            index_of,
            inv,
            orders,
            mult,
            caps,
            caches: Caches::default(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn caps(&self) -> Caps {
        self.0.caps
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.0.elements
    }

    pub fn element(&self, idx: u32) -> &Permutation {
        &self.0.elements[idx as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.0.index_of.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.mult {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => {
                let p = self.0.elements[a as usize].compose(&self.0.elements[b as usize]);
                self.0.index_of[&p]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inv[a as usize]
    }

    /// `g^-1 * h * g`.
    #[inline]
    pub fn conj(&self, h: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn order_of(&self, idx: u32) -> u32 {
        self.0.orders[idx as usize]
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// The whole group as a subgroup of itself.
    pub fn top(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            set: ElemSet::full(self.order()),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            set: ElemSet::singleton(self.order(), 0),
        }
    }

    pub(crate) fn subgroup_from_set(&self, set: ElemSet) -> Subgroup {
        Subgroup {
            group: self.clone(),
            set,
        }
    }

    /// Closure of a set of element indices inside this group.
    pub(crate) fn generated_set(&self, seed: &[u32]) -> ElemSet {
        let mut set = ElemSet::empty(self.order());
        set.insert(0);
        let mut stack: Vec<u32> = vec![0];
        while let Some(x) = stack.pop() {
            for &g in seed {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    stack.push(y);
                }
            }
        }
        set
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, seed: &[u32]) -> Subgroup {
        self.subgroup_from_set(self.generated_set(seed))
    }

    /// Subgroup generated by explicit permutations; they must lie in the group.
    pub fn subgroup_from_perms(&self, perms: &[Permutation]) -> Result<Subgroup> {
        let mut seed = Vec::with_capacity(perms.len());
        for p in perms {
            match self.index_of(p) {
                Some(i) => seed.push(i),
                None => return Err(Error::SubgroupNotContained),
            }
        }
        Ok(self.subgroup_generated(&seed))
    }

    /// Greedy small generating sequence for a subgroup set (cached).
    pub(crate) fn small_gens(&self, set: &ElemSet) -> Arc<Vec<u32>> {
        if let Some(g) = self.0.caches.small_gens.lock().unwrap().get(set) {
            return g.clone();
        }
        let mut gens: Vec<u32> = Vec::new();
        let mut cur = ElemSet::singleton(self.order(), 0);
        for e in set.iter() {
            if !cur.contains(e) {
                gens.push(e);
                cur = self.generated_set(&gens);
            }
        }
        let gens = Arc::new(gens);
        self.0
            .caches
            .small_gens
            .lock()
            .unwrap()
            .insert(set.clone(), gens.clone());
        gens
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {})",
            self.degree(),
            self.order()
        )
    }
}

/// A subgroup of a fixed parent group, identified by its member set.
#[derive(Clone)]
pub struct Subgroup {
    group: PermGroup,
    set: ElemSet,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.set == other.set
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl Subgroup {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn contains(&self, other: &Subgroup) -> bool {
        other.set.is_subset(&self.set)
    }

    pub fn contains_idx(&self, idx: u32) -> bool {
        self.set.contains(idx)
    }

    pub fn member_indices(&self) -> Vec<u32> {
        self.set.iter().collect()
    }

    pub fn member_perms(&self) -> Vec<Permutation> {
        self.set
            .iter()
            .map(|i| self.group.element(i).clone())
            .collect()
    }

    fn check_same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group.same_group(&other.group) {
            Ok(())
        } else {
            Err(Error::SubgroupNotContained)
        }
    }

    fn check_contains(&self, other: &Subgroup) -> Result<()> {
        self.check_same_parent(other)?;
        if self.contains(other) {
            Ok(())
        } else {
            Err(Error::SubgroupNotContained)
        }
    }

    pub fn small_gens(&self) -> Arc<Vec<u32>> {
        self.group.small_gens(&self.set)
    }

    /// `{g in self : h^g = h}` for a subgroup `h <= self`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_contains(h)?;
        let g = &self.group;
        let hgens = h.small_gens();
        let mut out = ElemSet::empty(g.order());
        for x in self.set.iter() {
            if hgens.iter().all(|&t| h.set.contains(g.conj(t, x))) {
                out.insert(x);
            }
        }
        Ok(g.subgroup_from_set(out))
    }

    /// `{g in self : gs = sg for all s in sub}`.
    pub fn centralizer(&self, sub: &Subgroup) -> Result<Subgroup> {
        self.check_contains(sub)?;
        let g = &self.group;
        let sgens = sub.small_gens();
        let mut out = ElemSet::empty(g.order());
        for x in self.set.iter() {
            if sgens.iter().all(|&t| g.mul(x, t) == g.mul(t, x)) {
                out.insert(x);
            }
        }
        Ok(g.subgroup_from_set(out))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        Ok(self.group.subgroup_from_set(self.set.intersect(&other.set)))
    }

    /// `{ab : a in self, b in other}` together with a closedness flag
    /// (product sets are subgroups exactly when `AB = BA`).
    pub fn product_set(&self, other: &Subgroup) -> Result<(ElemSet, bool)> {
        self.check_same_parent(other)?;
        let g = &self.group;
        let mut ab = ElemSet::empty(g.order());
        let mut ba = ElemSet::empty(g.order());
        for a in self.set.iter() {
            for b in other.set.iter() {
                ab.insert(g.mul(a, b));
                ba.insert(g.mul(b, a));
            }
        }
        let closed = ab == ba;
        Ok((ab, closed))
    }

    /// Subgroup generated by both operands.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let mut seed: Vec<u32> = self.small_gens().to_vec();
        seed.extend(other.small_gens().iter());
        Ok(self.group.subgroup_generated(&seed))
    }

    /// `self^g = {g^-1 x g}`; `g` must be an element index of the parent.
    pub fn conjugate_by(&self, g_idx: u32) -> Subgroup {
        let g = &self.group;
        let mut out = ElemSet::empty(g.order());
        for x in self.set.iter() {
            out.insert(g.conj(x, g_idx));
        }
        g.subgroup_from_set(out)
    }

    /// Whether `h` is invariant under conjugation by all of `self`'s generators.
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        self.check_contains(h)?;
        let g = &self.group;
        let agens = self.small_gens();
        let hgens = h.small_gens();
        Ok(agens
            .iter()
            .all(|&x| hgens.iter().all(|&t| h.set.contains(g.conj(t, x)))))
    }

    /// Commutator subgroup `[self, self]`.
    pub fn derived_subgroup(&self) -> Subgroup {
        let g = &self.group;
        let mut comms: Vec<u32> = Vec::new();
        let mut seen = ElemSet::empty(g.order());
        for a in self.set.iter() {
            for b in self.set.iter() {
                let c = g.mul(
                    g.mul(g.inv(a), g.inv(b)),
                    g.mul(a, b),
                );
                if !seen.contains(c) {
                    seen.insert(c);
                    comms.push(c);
                }
            }
        }
        g.subgroup_generated(&comms)
    }

    /// Normal closure of `h` within `self`.
    pub fn normal_closure(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_contains(h)?;
        let g = &self.group;
        let agens = self.small_gens();
        let mut seed: Vec<u32> = h.small_gens().to_vec();
        loop {
            let cur = g.subgroup_generated(&seed);
            let mut grew = false;
            for &x in agens.iter() {
                for &t in cur.small_gens().iter() {
                    let c = g.conj(t, x);
                    if !cur.set.contains(c) {
                        seed.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(cur);
            }
        }
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {} of {:?})", self.order(), self.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sym(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[1, 2]]).unwrap());
        }
        if n >= 3 {
            let cycle: Vec<usize> = (1..=n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
        }
        PermGroup::closure(n, &gens, Caps::default()).unwrap()
    }

    #[test]
    fn closure_orders() {
        // order 6 from a transposition and a 3-cycle
        let s3 = PermGroup::closure(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
            ],
            Caps::default(),
        )
        .unwrap();
        assert_eq!(s3.order(), 6);

        // empty generating set
        let triv = PermGroup::closure(4, &[], Caps::default()).unwrap();
        assert_eq!(triv.order(), 1);

        let s4 = sym(4);
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn closure_respects_cap() {
        let caps = Caps {
            order_cap: 10,
            ..Caps::default()
        };
        let err = PermGroup::closure(
            4,
            &[
                Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
            ],
            caps,
        )
        .unwrap_err();
        assert!(matches!(err, Error::OrderCapExceeded(_)));
    }

    #[test]
    fn canonical_order_starts_at_identity() {
        let s4 = sym(4);
        assert!(s4.element(0).is_identity());
        // sorted canonical order is strictly increasing
        for w in s4.elements().windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn normalizer_in_s4() {
        let s4 = sym(4);
        let c3 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap()])
            .unwrap();
        assert_eq!(c3.order(), 3);
        let n = s4.top().normalizer(&c3).unwrap();
        assert_eq!(n.order(), 6);
        assert!(n.contains(&c3));
        // the group normalizes itself
        assert_eq!(s4.top().normalizer(&s4.top()).unwrap().order(), 24);
    }

    #[test]
    fn centralizer_examples() {
        let s3 = sym(3);
        let c3 = s3
            .subgroup_from_perms(&[Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()])
            .unwrap();
        assert_eq!(s3.top().centralizer(&c3).unwrap().order(), 3);

        // abelian group centralizes everything
        let c6 = PermGroup::closure(
            6,
            &[Permutation::from_cycles(6, &[&[1, 2, 3, 4, 5, 6]]).unwrap()],
            Caps::default(),
        )
        .unwrap();
        let sub = c6.subgroup_generated(&[1]);
        assert_eq!(c6.top().centralizer(&sub).unwrap().order(), 6);
    }

    #[test]
    fn products_and_normality_in_s4() {
        let s4 = sym(4);
        let v4 = s4
            .subgroup_from_perms(&[
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(s4.top().is_normal(&v4).unwrap());

        let c3 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap()])
            .unwrap();
        let (prod, closed) = v4.product_set(&c3).unwrap();
        assert_eq!(prod.len(), 12);
        assert!(closed);

        let t12 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        let t34 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[3, 4]]).unwrap()])
            .unwrap();
        let (p1, c1) = t12.product_set(&t34).unwrap();
        assert_eq!((p1.len(), c1), (4, true));

        let t23 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[2, 3]]).unwrap()])
            .unwrap();
        let (p2, c2) = t12.product_set(&t23).unwrap();
        assert_eq!((p2.len(), c2), (4, false));

        assert!(!s4.top().is_normal(&t12).unwrap());
        // A = B gives (A, true)
        let (p3, c3flag) = v4.product_set(&v4).unwrap();
        assert_eq!((p3.len(), c3flag), (4, true));
    }

    #[test]
    fn conjugates_and_normal_closure() {
        let s4 = sym(4);
        let t12 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        let g = s4
            .index_of(&Permutation::from_cycles(4, &[&[2, 3]]).unwrap())
            .unwrap();
        let conj = t12.conjugate_by(g);
        assert_eq!(conj.order(), 2);
        assert_ne!(conj, t12);

        // normal closure of a transposition is all of S4
        assert_eq!(s4.top().normal_closure(&t12).unwrap().order(), 24);
        let v4 = s4
            .subgroup_from_perms(&[
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        assert_eq!(s4.top().normal_closure(&v4).unwrap(), v4);
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let s4 = sym(4);
        let d = s4.top().derived_subgroup();
        assert_eq!(d.order(), 12);
        let d2 = d.derived_subgroup();
        assert_eq!(d2.order(), 4);
    }

    #[test]
    fn lagrange_for_generated_subgroups() {
        let s4 = sym(4);
        for i in 0..s4.order() as u32 {
            let h = s4.subgroup_generated(&[i]);
            assert_eq!(s4.order() % h.order(), 0);
            // closure property: literally closed under products and inverses
            for a in h.set().iter() {
                assert!(h.contains_idx(s4.inv(a)));
                for b in h.set().iter() {
                    assert!(h.contains_idx(s4.mul(a, b)));
                }
            }
        }
    }
}
