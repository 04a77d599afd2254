//! Quotient groups via the right-multiplication action on cosets.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Permutation;

/// A quotient `A/N` materialized as a permutation group on the cosets of `N`
/// in `A`, with subgroup transfer in both directions. Cosets are labeled by
/// their minimal element in the parent's canonical order, which makes the
/// construction reproducible.
pub struct Quotient {
    parent: PermGroup,
    ambient: ElemSet,
    kernel: ElemSet,
    group: PermGroup,
    /// parent element index -> quotient element index (only ambient members).
    elem_image: Vec<u32>,
}

impl Quotient {
    pub(crate) fn build(ambient: &Subgroup, kernel: &Subgroup) -> Result<Quotient> {
        if !ambient.is_normal(kernel)? {
            return Err(Error::NotNormal(kernel.order()));
        }
        let g = ambient.group().clone();
        let n_parent = g.order();
        let index = ambient.order() / kernel.order();

        // assign coset ids; processing in ascending order makes the first
        // element of each coset its minimal representative
        let mut coset_of = vec![u32::MAX; n_parent];
        let mut reps: Vec<u32> = Vec::with_capacity(index);
        for a in ambient.set().iter() {
            if coset_of[a as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(a);
            for k in kernel.set().iter() {
                coset_of[g.mul(k, a) as usize] = id;
            }
        }
        debug_assert_eq!(reps.len(), index);

        // induced permutation of each ambient element on the coset points
        let mut induced: Vec<(Permutation, u32)> = Vec::with_capacity(ambient.order());
        for a in ambient.set().iter() {
            let images: Vec<u16> = reps
                .iter()
                .map(|&r| coset_of[g.mul(r, a) as usize] as u16 + 1)
                .collect();
            let images_usize: Vec<usize> = images.iter().map(|&v| v as usize).collect();
            let p = Permutation::from_images_one_based(&images_usize)
                .expect("coset action of a group element is a permutation");
            induced.push((p, a));
        }

        let mut distinct: Vec<Permutation> = induced.iter().map(|(p, _)| p.clone()).collect();
        distinct.sort();
        distinct.dedup();
        debug_assert_eq!(distinct.len(), index);

        let qgens: Vec<Permutation> = ambient
            .small_gens()
            .iter()
            .map(|&gidx| {
                induced
                    .iter()
                    .find(|(_, a)| *a == gidx)
                    .map(|(p, _)| p.clone())
                    .expect("generator is an ambient member")
            })
            .collect();
        let qgroup = PermGroup::from_elements(index, qgens, distinct, g.caps());

        let mut elem_image = vec![u32::MAX; n_parent];
        for (p, a) in &induced {
            elem_image[*a as usize] = qgroup.index_of(p).expect("induced element");
        }

        Ok(Quotient {
            parent: g,
            ambient: ambient.set().clone(),
            kernel: kernel.set().clone(),
            group: qgroup,
            elem_image,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn ambient(&self) -> Subgroup {
        self.parent.subgroup_from_set(self.ambient.clone())
    }

    pub fn kernel(&self) -> Subgroup {
        self.parent.subgroup_from_set(self.kernel.clone())
    }

    /// Image `HN/N` of a subgroup `H` of the ambient group.
    pub fn project(&self, h: &Subgroup) -> Result<Subgroup> {
        if !h.group().same_group(&self.parent) || !h.set().is_subset(&self.ambient) {
            return Err(Error::SubgroupNotContained);
        }
        let mut out = ElemSet::empty(self.group.order());
        for a in h.set().iter() {
            out.insert(self.elem_image[a as usize]);
        }
        Ok(self.group.subgroup_from_set(out))
    }

    /// Preimage in the ambient group of a subgroup of the quotient.
    pub fn lift(&self, k: &Subgroup) -> Result<Subgroup> {
        if !k.group().same_group(&self.group) {
            return Err(Error::SubgroupNotContained);
        }
        let mut out = ElemSet::empty(self.parent.order());
        for a in self.ambient.iter() {
            if k.contains_idx(self.elem_image[a as usize]) {
                out.insert(a);
            }
        }
        Ok(self.parent.subgroup_from_set(out))
    }

    /// Quotient element index of an ambient element.
    pub fn image_of(&self, parent_idx: u32) -> Option<u32> {
        let v = self.elem_image[parent_idx as usize];
        if v == u32::MAX {
            None
        } else {
            Some(v)
        }
    }
}

impl Subgroup {
    /// The quotient of this subgroup by a normal subgroup of it (cached).
    pub fn quotient_by(&self, n: &Subgroup) -> Result<Arc<Quotient>> {
        let key = (self.set().clone(), n.set().clone());
        if let Some(q) = self
            .group()
            .0
            .caches
            .quotients
            .lock()
            .unwrap()
            .get(&key)
        {
            return Ok(q.clone());
        }
        let q = Arc::new(Quotient::build(self, n)?);
        self.group()
            .0
            .caches
            .quotients
            .lock()
            .unwrap()
            .insert(key, q.clone());
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    fn sym4() -> PermGroup {
        PermGroup::closure(
            4,
            &[
                Permutation::from_cycles(4, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap(),
            ],
            Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn s4_mod_v4_has_order_six_on_six_points() {
        let s4 = sym4();
        let v4 = s4
            .subgroup_from_perms(&[
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        let q = s4.top().quotient_by(&v4).unwrap();
        assert_eq!(q.group().order(), 6);
        assert_eq!(q.group().degree(), 6);
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let s4 = sym4();
        let q = s4.top().quotient_by(&s4.top()).unwrap();
        assert_eq!(q.group().order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s4 = sym4();
        let t = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        assert!(matches!(
            s4.top().quotient_by(&t),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn project_then_lift_is_identity_above_kernel() {
        let s4 = sym4();
        let v4 = s4
            .subgroup_from_perms(&[
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        let a4 = s4.top().derived_subgroup();
        let q = s4.top().quotient_by(&v4).unwrap();
        let img = q.project(&a4).unwrap();
        assert_eq!(img.order(), 3);
        let back = q.lift(&img).unwrap();
        assert_eq!(back, a4);
        // projecting a subgroup not containing the kernel gives its image HN/N
        let c2 = s4
            .subgroup_from_perms(&[Permutation::from_cycles(4, &[&[1, 2]]).unwrap()])
            .unwrap();
        let img2 = q.project(&c2).unwrap();
        assert_eq!(img2.order(), 2);
        assert_eq!(q.lift(&img2).unwrap().order(), 8);
    }
}
