//! Rooted trees stored as parent arrays.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("no root: every vertex has a parent")]
    NoRoot,
    #[error("vertices {0} and {1} both lack a parent")]
    MultipleRoots(usize, usize),
    #[error("vertex {vertex} has parent {parent}, which does not exist")]
    BadParent { vertex: usize, parent: usize },
    #[error("vertex {0} lies on a cycle or is unreachable from the root")]
    Cycle(usize),
}

/// A rooted tree on vertices `0..len`. The empty tree has no root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: Option<usize>,
}

impl RootedTree {
    pub fn empty() -> Self {
        RootedTree {
            parent: Vec::new(),
            children: Vec::new(),
            root: None,
        }
    }

    pub fn single() -> Self {
        Self::from_parents(vec![None]).unwrap()
    }

    /// Path `0 - 1 - ... - (n-1)` rooted at `0`.
    pub fn path(n: usize) -> Self {
        Self::from_parents((0..n).map(|i| i.checked_sub(1)).collect()).unwrap()
    }

    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self, TreeError> {
        let n = parent.len();
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut root = None;
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match *p {
                None => {
                    if let Some(r) = root {
                        return Err(TreeError::MultipleRoots(r, v));
                    }
                    root = Some(v);
                }
                Some(p) if p >= n => {
                    return Err(TreeError::BadParent {
                        vertex: v,
                        parent: p,
                    })
                }
                Some(p) => children[p].push(v),
            }
        }
        let root = root.ok_or(TreeError::NoRoot)?;
        let tree = RootedTree {
            parent,
            children,
            root: Some(root),
        };
        let order = tree.preorder();
        if order.len() != n {
            let mut seen = vec![false; n];
            for v in order {
                seen[v] = true;
            }
            return Err(TreeError::Cycle(seen.iter().position(|s| !s).unwrap()));
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.parent[v]
            .into_iter()
            .chain(self.children[v].iter().copied())
    }

    /// Vertices in depth-first preorder, children visited in index order.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let Some(r) = self.root else { return out };
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            out.push(v);
            if out.len() > self.len() {
                break;
            }
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        if let Some(r) = self.root {
            out.push(r);
            let mut i = 0;
            while i < out.len() {
                let v = out[i];
                out.extend(self.children[v].iter().copied());
                i += 1;
            }
        }
        out
    }

    /// `v` and all its descendants, in preorder.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }

    pub fn depth(&self, mut v: usize) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            d += 1;
        }
        d
    }

    /// The same undirected tree rooted at `r`.
    pub fn reroot(&self, r: usize) -> RootedTree {
        let n = self.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    stack.push(u);
                }
            }
        }
        RootedTree::from_parents(parent).expect("rerooting preserves tree shape")
    }
}
