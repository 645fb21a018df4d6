use alloc::vec::Vec;

/// Disjoint sets over `0..n` with path halving; tracks the number of classes.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    classes: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            classes: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, x: u32, y: u32) {
        let (x, y) = (self.find(x), self.find(y));
        if x != y {
            self.parent[x as usize] = y;
            self.classes -= 1;
        }
    }

    pub(crate) fn classes(&self) -> usize {
        self.classes
    }

    /// Restores the state of `other`, reusing this allocation.
    pub(crate) fn reset_from(&mut self, other: &UnionFind) {
        self.parent.clear();
        self.parent.extend_from_slice(&other.parent);
        self.classes = other.classes;
    }
}
