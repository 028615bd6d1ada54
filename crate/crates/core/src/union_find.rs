/// Disjoint-set forest with path halving. Roots are always the minimal
/// element of their class, so representatives are canonical.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub(crate) fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }

    /// Class index of every element, classes numbered by their minimal
    /// element in increasing order.
    pub(crate) fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut index_of_root = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        let mut count = 0;
        for i in 0..n {
            let r = self.find(i);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = count;
                count += 1;
            }
            class_of[i] = index_of_root[r];
        }
        (class_of, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_numbered_by_minimal_member() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 1);
        uf.union(3, 2);
        let (class_of, n) = uf.classes();
        assert_eq!(n, 3);
        assert_eq!(class_of, vec![0, 1, 2, 2, 1]);
        assert_eq!(uf.find(4), 1);
    }
}
