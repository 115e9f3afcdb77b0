/// Disjoint-set forest with path halving.
///
/// Unions are directed: the caller decides which root survives, which is what
/// the elder rule needs.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Attaches the root `child` under the root `parent`.
    pub fn attach(&mut self, child: usize, parent: usize) {
        debug_assert_eq!(self.parent[child], child);
        debug_assert_eq!(self.parent[parent], parent);
        self.parent[child] = parent;
    }

    /// Merges the sets of `a` and `b`, returning `false` if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so representatives are deterministic
        if ra < rb {
            self.attach(rb, ra);
        } else {
            self.attach(ra, rb);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_find() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(uf.union(3, 4));
        assert!(!uf.union(1, 0));
        assert_eq!(uf.find(1), 0);
        assert_eq!(uf.find(4), 3);
        assert!(uf.union(4, 1));
        assert_eq!(uf.find(4), 0);
        assert_eq!(uf.find(2), 2);
    }
}
