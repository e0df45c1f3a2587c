use crate::cantor::{enumerate_delta, Address};
use crate::element::{Cell, Element};
use crate::error::{Error, Result};

/// A permutation of {0, …, N−1}, acting on the right: `i ↦ images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(size: usize) -> Self {
        Perm { images: (0..size).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotABijection(images.len()));
            }
        }
        Ok(Perm { images })
    }

    /// The cycle `points[0] ↦ points[1] ↦ … ↦ points[0]`.
    pub fn cycle(size: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..size).collect();
        for (k, &p) in points.iter().enumerate() {
            if p >= size {
                return Err(Error::NotABijection(size));
            }
            images[p] = points[(k + 1) % points.len()];
        }
        Perm::from_images(images)
    }

    pub fn swap(size: usize, i: usize, j: usize) -> Result<Self> {
        Perm::cycle(size, &[i, j])
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Number of moved points.
    pub fn support_len(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, j)| i != *j).count()
    }

    /// A permutation extending the partial assignment `pairs` (point ↦ image).
    ///
    /// Unassigned points are matched with unused images in increasing order,
    /// or in decreasing order when `reverse` is set.
    pub fn completing(size: usize, pairs: &[(usize, usize)], reverse: bool) -> Result<Self> {
        let mut images = vec![usize::MAX; size];
        let mut used = vec![false; size];
        for &(i, j) in pairs {
            if i >= size || j >= size || images[i] != usize::MAX && images[i] != j || used[j] && images[i] != j {
                return Err(Error::NotABijection(size));
            }
            images[i] = j;
            used[j] = true;
        }
        let mut free: Vec<usize> = (0..size).filter(|&j| !used[j]).collect();
        if reverse {
            free.reverse();
        }
        let mut it = free.into_iter();
        for img in images.iter_mut().filter(|x| **x == usize::MAX) {
            *img = it.next().expect("counts agree");
        }
        Perm::from_images(images)
    }
}

/// The element of nV permuting the Δ cells: δ^(i) ↦ δ^(σ(i)).
pub fn perm_to_element(sigma: &Perm, n: usize) -> Result<Element> {
    let delta = enumerate_delta(n);
    if sigma.size() != delta.len() {
        return Err(Error::NotABijection(delta.len()));
    }
    let cells =
        (0..delta.len()).map(|i| Cell::new(delta[i].clone(), delta[sigma.apply(i)].clone())).collect::<Vec<_>>();
    Ok(Element::from_cells_unchecked(n, cells))
}

/// Δ addresses of a permutation's cells, for display.
pub fn perm_cycles(sigma: &Perm, delta: &[Address]) -> Vec<Vec<Address>> {
    let mut seen = vec![false; sigma.size()];
    let mut out = Vec::new();
    for start in 0..sigma.size() {
        if seen[start] || sigma.apply(start) == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push(delta[i].clone());
            i = sigma.apply(i);
        }
        out.push(cyc);
    }
    out
}
