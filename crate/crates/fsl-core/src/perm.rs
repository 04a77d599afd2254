//! Permutations on `{1..n}`, stored as 0-based image tables.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{1..n}`. Internally points are 0-based; the public image
/// lists exposed at I/O boundaries are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images, validating bijectivity.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut imgs = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range 1..{n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
            imgs.push((v - 1) as u16);
        }
        Ok(Permutation { images: imgs })
    }

    /// Builds a permutation of the given degree from disjoint cycles (1-based).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        for cycle in cycles {
            for i in 0..cycle.len() {
                let from = cycle[i];
                let to = cycle[(i + 1) % cycle.len()];
                if from == 0 || from > degree || to == 0 || to > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range 1..{degree}"
                    )));
                }
                images[from - 1] = to;
            }
        }
        Permutation::from_images_one_based(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` then `other`: `x -> other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u16 == v)
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord: usize = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// 1-based image list.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation, fixed points omitted
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        assert_eq!(b.compose(&b), Permutation::identity(4));
        // (1 2 3 4) then (1 2): 1->2->1, 2->3, 3->4, 4->1->2
        let ab = a.compose(&b);
        assert_eq!(ab.images_one_based(), vec![1, 3, 4, 2]);
    }

    #[test]
    fn associativity_spot_check() {
        let a = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let b = Permutation::from_cycles(5, &[&[1, 3], &[2, 4]]).unwrap();
        let c = Permutation::from_cycles(5, &[&[2, 5, 3]]).unwrap();
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images_one_based(&[1, 1, 3]).is_err());
        assert!(Permutation::from_images_one_based(&[0, 2]).is_err());
        assert!(Permutation::from_images_one_based(&[4, 2, 3]).is_err());
    }

    #[test]
    fn element_order() {
        let a = Permutation::from_cycles(5, &[&[1, 2], &[3, 4, 5]]).unwrap();
        assert_eq!(a.order(), 6);
        assert_eq!(Permutation::identity(3).order(), 1);
    }
}
