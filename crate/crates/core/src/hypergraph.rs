//! Hypergraphs over a shared, name-sorted node universe.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::HypergraphError;
use crate::nodeset::{NodeSet, MAX_NODES};

/// Upper bound on the number of hyperedges a resource construction may emit.
pub const RESOURCE_EDGE_LIMIT: u128 = 1 << 20;

/// Dense indexing of node names. Indices follow lexicographic name order.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Arc<Universe>, HypergraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut sorted: Vec<String> = names.into_iter().map(Into::into).collect();
        if let Some(bad) = sorted.iter().find(|n| !valid_name(n)) {
            return Err(HypergraphError::InvalidName(bad.clone()));
        }
        sorted.sort();
        sorted.dedup();
        if sorted.len() > MAX_NODES {
            return Err(HypergraphError::TooManyNodes(sorted.len()));
        }
        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(Arc::new(Universe {
            names: sorted,
            index,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn all(&self) -> NodeSet {
        NodeSet::prefix(self.names.len())
    }

    pub fn set<I, S>(&self, names: I) -> Result<NodeSet, HypergraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = NodeSet::empty();
        for n in names {
            let n = n.as_ref();
            let i = self
                .index(n)
                .ok_or_else(|| HypergraphError::UnknownNode(n.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn names_of(&self, s: NodeSet) -> Vec<&str> {
        s.iter().map(|i| self.name(i)).collect()
    }

    /// `{A,B,C}`
    pub fn fmt_set(&self, s: NodeSet) -> String {
        format!("{{{}}}", self.names_of(s).join(","))
    }

    /// Translate a set from `other` into this universe. Names missing here are dropped.
    pub fn translate(&self, other: &Universe, s: NodeSet) -> NodeSet {
        s.iter().filter_map(|i| self.index(other.name(i))).collect()
    }
}

/// A maximal `[separator]`-connected node set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub members: NodeSet,
    pub separator: NodeSet,
}

/// A node set together with a set of non-empty hyperedges over it.
///
/// Edges are kept sorted (lexicographically on member names) and free of
/// duplicates; subset edges are retained until [`Hypergraph::reduce`] is
/// called.
#[derive(Clone)]
pub struct Hypergraph {
    universe: Arc<Universe>,
    nodes: NodeSet,
    edges: Vec<NodeSet>,
    names: Vec<String>,
}

impl Hypergraph {
    /// Builds a hypergraph with generated edge names `e1, e2, ...` in edge order.
    pub fn new<I>(
        universe: Arc<Universe>,
        nodes: NodeSet,
        edges: I,
    ) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = NodeSet>,
    {
        Self::from_named(universe, nodes, edges.into_iter().map(|e| (None, e)))
    }

    /// Builds a hypergraph from optionally named edges. When an edge occurs
    /// more than once the first name wins.
    pub fn from_named<I>(
        universe: Arc<Universe>,
        nodes: NodeSet,
        edges: I,
    ) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = (Option<String>, NodeSet)>,
    {
        if !nodes.is_subset(universe.all()) {
            return Err(HypergraphError::EdgeOutsideNodes("<nodes>".into()));
        }
        let mut seen: Vec<(NodeSet, Option<String>)> = Vec::new();
        for (name, e) in edges {
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge(name));
            }
            if !e.is_subset(nodes) {
                return Err(HypergraphError::EdgeOutsideNodes(
                    name.unwrap_or_else(|| universe.fmt_set(e)),
                ));
            }
            if !seen.iter().any(|(f, _)| *f == e) {
                seen.push((e, name));
            }
        }
        seen.sort_by_key(|a| a.0);
        let taken: BTreeSet<String> = seen.iter().filter_map(|(_, n)| n.clone()).collect();
        let mut counter = 0usize;
        let mut edges = Vec::with_capacity(seen.len());
        let mut names = Vec::with_capacity(seen.len());
        for (e, name) in seen {
            let name = match name {
                Some(n) => n,
                None => loop {
                    counter += 1;
                    let candidate = format!("e{counter}");
                    if !taken.contains(&candidate) {
                        break candidate;
                    }
                },
            };
            edges.push(e);
            names.push(name);
        }
        Ok(Hypergraph {
            universe,
            nodes,
            edges,
            names,
        })
    }

    /// Builds a hypergraph from edges given as name lists; the node set is
    /// the union of the edges.
    pub fn from_edges<I, E, S>(edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::from_edges_with_nodes(edges, std::iter::empty::<&str>())
    }

    pub fn from_edges_with_nodes<I, E, S, N, T>(edges: I, extra: N) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
        N: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let lists: Vec<Vec<String>> = edges
            .into_iter()
            .map(|e| e.into_iter().map(|s| s.as_ref().to_string()).collect())
            .collect();
        let extra: Vec<String> = extra.into_iter().map(|s| s.as_ref().to_string()).collect();
        let universe = Universe::new(lists.iter().flatten().cloned().chain(extra.iter().cloned()))?;
        let mut sets = Vec::with_capacity(lists.len());
        for l in &lists {
            sets.push(universe.set(l)?);
        }
        let nodes = universe.all();
        Self::new(universe, nodes, sets)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn nodes(&self) -> NodeSet {
        self.nodes
    }

    pub fn edges(&self) -> &[NodeSet] {
        &self.edges
    }

    pub fn edge_names(&self) -> &[String] {
        &self.names
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, e: NodeSet) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn edge_name(&self, e: NodeSet) -> Option<&str> {
        self.edge_index(e).map(|i| self.names[i].as_str())
    }

    pub fn edge_by_name(&self, name: &str) -> Option<NodeSet> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.edges[i])
    }

    pub fn contains_edge(&self, e: NodeSet) -> bool {
        self.edge_index(e).is_some()
    }

    pub fn fmt_set(&self, s: NodeSet) -> String {
        self.universe.fmt_set(s)
    }

    pub fn set<I, S>(&self, names: I) -> Result<NodeSet, HypergraphError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.universe.set(names)
    }

    /// Union of all hyperedges.
    pub fn covered(&self) -> NodeSet {
        self.edges.iter().fold(NodeSet::empty(), |a, &e| a | e)
    }

    /// Nodes in no hyperedge.
    pub fn isolated(&self) -> NodeSet {
        self.nodes - self.covered()
    }

    /// Same universe and nodes, different edges. Names of retained edges are kept.
    pub fn with_edges<I>(&self, edges: I) -> Result<Hypergraph, HypergraphError>
    where
        I: IntoIterator<Item = NodeSet>,
    {
        let named = edges
            .into_iter()
            .map(|e| (self.edge_name(e).map(str::to_string), e))
            .collect::<Vec<_>>();
        Hypergraph::from_named(self.universe.clone(), self.nodes, named)
    }

    /// Same universe and edges on a different node set.
    pub fn with_nodes(&self, nodes: NodeSet) -> Result<Hypergraph, HypergraphError> {
        Hypergraph::from_named(
            self.universe.clone(),
            nodes,
            self.edges
                .iter()
                .zip(&self.names)
                .map(|(&e, n)| (Some(n.clone()), e)),
        )
    }

    pub fn same_universe(&self, other: &Hypergraph) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe.names == other.universe.names
    }

    /// Re-express this hypergraph over `universe`, which must know every node.
    pub fn reindex(&self, universe: &Arc<Universe>) -> Result<Hypergraph, HypergraphError> {
        if Arc::ptr_eq(&self.universe, universe) {
            return Ok(self.clone());
        }
        let map = |s: NodeSet| -> Result<NodeSet, HypergraphError> {
            universe.set(self.universe.names_of(s))
        };
        let nodes = map(self.nodes)?;
        let mut named = Vec::with_capacity(self.edges.len());
        for (&e, n) in self.edges.iter().zip(&self.names) {
            named.push((Some(n.clone()), map(e)?));
        }
        Hypergraph::from_named(universe.clone(), nodes, named)
    }

    /// Both hypergraphs over one common universe.
    pub fn align(a: &Hypergraph, b: &Hypergraph) -> (Hypergraph, Hypergraph) {
        if a.same_universe(b) {
            return (a.clone(), b.reindex_unchecked(&a.universe));
        }
        let universe = Universe::new(a.universe.names.iter().chain(&b.universe.names).cloned())
            .expect("merged universe of valid universes");
        (
            a.reindex_unchecked(&universe),
            b.reindex_unchecked(&universe),
        )
    }

    fn reindex_unchecked(&self, universe: &Arc<Universe>) -> Hypergraph {
        if self.universe.names == universe.names {
            let mut h = self.clone();
            h.universe = universe.clone();
            return h;
        }
        self.reindex(universe).expect("universe covers all nodes")
    }

    fn pair<'a, T>(
        &'a self,
        other: &'a Hypergraph,
        f: impl FnOnce(&Hypergraph, &Hypergraph) -> T,
    ) -> T {
        if self.same_universe(other) {
            f(self, other)
        } else {
            let (a, b) = Hypergraph::align(self, other);
            f(&a, &b)
        }
    }

    /// `self ≤ other`: every edge of `self` lies inside some edge of `other`.
    pub fn leq(&self, other: &Hypergraph) -> bool {
        self.pair(other, |a, b| {
            a.edges
                .iter()
                .all(|&e| b.edges.iter().any(|&f| e.is_subset(f)))
        })
    }

    /// `self ⊆ other`: every edge of `self` not in `other` is a proper subset
    /// of some edge of `other` not in `self`.
    pub fn contained_in(&self, other: &Hypergraph) -> bool {
        self.pair(other, |a, b| {
            a.edges.iter().filter(|&&e| !b.contains_edge(e)).all(|&e| {
                b.edges
                    .iter()
                    .any(|&f| !a.contains_edge(f) && e.is_proper_subset(f))
            })
        })
    }

    /// `self ⊂ other`.
    pub fn properly_contained(&self, other: &Hypergraph) -> bool {
        self.pair(other, |a, b| a.contained_in(b) && a.edges != b.edges)
    }

    pub fn is_reduced(&self) -> bool {
        self.edges
            .iter()
            .all(|&e| !self.edges.iter().any(|&f| e.is_proper_subset(f)))
    }

    /// Drops every edge that is a proper subset of another edge.
    pub fn reduce(&self) -> Hypergraph {
        let kept: Vec<usize> = (0..self.edges.len())
            .filter(|&i| {
                !self
                    .edges
                    .iter()
                    .any(|&f| self.edges[i].is_proper_subset(f))
            })
            .collect();
        Hypergraph {
            universe: self.universe.clone(),
            nodes: self.nodes,
            edges: kept.iter().map(|&i| self.edges[i]).collect(),
            names: kept.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }

    /// Primal graph: one binary edge per co-occurring pair.
    pub fn gaifman(&self) -> Hypergraph {
        let mut pairs = BTreeSet::new();
        for &e in &self.edges {
            for x in e {
                for y in e {
                    if x < y {
                        pairs.insert(NodeSet::singleton(x) | NodeSet::singleton(y));
                    }
                }
            }
        }
        Hypergraph::new(self.universe.clone(), self.nodes, pairs).expect("pairs within nodes")
    }

    /// Union of all edges meeting `c`.
    pub fn frontier(&self, c: NodeSet) -> NodeSet {
        self.edges
            .iter()
            .filter(|e| e.intersects(c))
            .fold(NodeSet::empty(), |a, &e| a | e)
    }

    pub fn border(&self, c: NodeSet) -> NodeSet {
        self.frontier(c) - c
    }

    pub fn edges_meeting(&self, c: NodeSet) -> impl Iterator<Item = NodeSet> + '_ {
        self.edges.iter().copied().filter(move |e| e.intersects(c))
    }

    /// Nodes reachable from `start` (a set outside `v`) by `[v]`-paths.
    pub fn reach(&self, v: NodeSet, start: NodeSet) -> NodeSet {
        let mut comp = start - v;
        loop {
            let mut grown = comp;
            for &e in &self.edges {
                let e = e - v;
                if e.intersects(grown) {
                    grown |= e;
                }
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    /// The `[v]`-components, ordered by least node.
    pub fn components(&self, v: NodeSet) -> Vec<Component> {
        self.component_sets(v)
            .into_iter()
            .map(|members| Component {
                members,
                separator: v,
            })
            .collect()
    }

    pub fn component_sets(&self, v: NodeSet) -> Vec<NodeSet> {
        let mut rest = self.nodes - v;
        let mut out = Vec::new();
        while let Some(x) = rest.first() {
            let c = self.reach(v, NodeSet::singleton(x));
            out.push(c);
            rest -= c;
        }
        out
    }

    pub fn v_path_exists(&self, v: NodeSet, x: usize, y: usize) -> Result<bool, HypergraphError> {
        for z in [x, y] {
            if v.contains(z) {
                return Err(HypergraphError::NodeInSeparator(
                    self.universe.name(z).to_string(),
                ));
            }
        }
        Ok(x == y || self.reach(v, NodeSet::singleton(x)).contains(y))
    }

    /// Some `[∅]`-neighbour of `x` has a `[v]`-path into `w`.
    pub fn touches(&self, v: NodeSet, x: usize, w: NodeSet) -> bool {
        let around = self
            .edges
            .iter()
            .filter(|e| e.contains(x))
            .fold(NodeSet::empty(), |a, &e| a | e);
        if around.intersects(w) {
            return true;
        }
        (around - v)
            .iter()
            .any(|z| self.reach(v, NodeSet::singleton(z)).intersects(w))
    }

    /// Sub-hypergraph induced on `s`: node set `s`, edges `e ∩ s` when non-empty.
    pub fn induced(&self, s: NodeSet) -> Hypergraph {
        let s = s & self.nodes;
        let edges: BTreeSet<NodeSet> = self
            .edges
            .iter()
            .map(|&e| e & s)
            .filter(|e| !e.is_empty())
            .collect();
        Hypergraph::new(self.universe.clone(), s, edges).expect("induced edges within nodes")
    }

    /// Whether the sub-hypergraph induced on `s` is `[∅]`-connected.
    pub fn induces_connected(&self, s: NodeSet) -> bool {
        let s = s & self.nodes;
        match s.first() {
            None => true,
            Some(x) => {
                let mut comp = NodeSet::singleton(x);
                loop {
                    let mut grown = comp;
                    for &e in &self.edges {
                        let e = e & s;
                        if e.intersects(grown) {
                            grown |= e;
                        }
                    }
                    if grown == comp {
                        return comp == s;
                    }
                    comp = grown;
                }
            }
        }
    }

    /// `H^k`: unions of at most `k` edges.
    pub fn power_k(&self, k: i64) -> Result<Hypergraph, HypergraphError> {
        if k < 1 {
            return Err(HypergraphError::InvalidK { min: 1, got: k });
        }
        let mut all: BTreeSet<NodeSet> = self.edges.iter().copied().collect();
        let mut frontier: Vec<NodeSet> = all.iter().copied().collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for &a in &frontier {
                for &e in &self.edges {
                    let u = a | e;
                    if all.insert(u) {
                        next.push(u);
                    }
                }
            }
            if all.len() as u128 > RESOURCE_EDGE_LIMIT {
                return Err(HypergraphError::TooLarge {
                    count: all.len() as u128,
                    limit: RESOURCE_EDGE_LIMIT,
                });
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Hypergraph::new(self.universe.clone(), self.nodes, all)
    }

    /// `H^tk`: every non-empty node subset of size at most `k + 1`.
    pub fn clusters_tk(&self, k: i64) -> Result<Hypergraph, HypergraphError> {
        if k < 0 {
            return Err(HypergraphError::InvalidK { min: 0, got: k });
        }
        let n = self.nodes.len();
        let size = (k as usize).saturating_add(1).min(n);
        let count = cluster_count(n, size);
        if count > RESOURCE_EDGE_LIMIT {
            return Err(HypergraphError::TooLarge {
                count,
                limit: RESOURCE_EDGE_LIMIT,
            });
        }
        let nodes: Vec<usize> = self.nodes.iter().collect();
        let mut out = Vec::with_capacity(count as usize);
        fn rec(nodes: &[usize], from: usize, cur: NodeSet, left: usize, out: &mut Vec<NodeSet>) {
            if !cur.is_empty() {
                out.push(cur);
            }
            if left == 0 {
                return;
            }
            for i in from..nodes.len() {
                rec(
                    nodes,
                    i + 1,
                    cur | NodeSet::singleton(nodes[i]),
                    left - 1,
                    out,
                );
            }
        }
        rec(&nodes, 0, NodeSet::empty(), size, &mut out);
        Hypergraph::new(self.universe.clone(), self.nodes, out)
    }

    /// Edges as sorted name lists.
    pub fn named_edges(&self) -> Vec<Vec<&str>> {
        self.edges
            .iter()
            .map(|&e| self.universe.names_of(e))
            .collect()
    }

    pub fn named_nodes(&self) -> Vec<&str> {
        self.universe.names_of(self.nodes)
    }
}

fn cluster_count(n: usize, size: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for i in 1..=size {
        binom = binom * (n + 1 - i) as u128 / i as u128;
        total += binom;
    }
    total
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        if self.same_universe(other) {
            self.nodes == other.nodes && self.edges == other.edges
        } else {
            self.named_nodes() == other.named_nodes() && {
                let mut a = self.named_edges();
                let mut b = other.named_edges();
                a.sort();
                b.sort();
                a == b
            }
        }
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("nodes", &self.named_nodes())
            .field("edges", &self.named_edges())
            .finish()
    }
}

/// Text format, one `name(A,B,C)` line per edge, preceded by a `@nodes` line
/// when some node lies in no edge.
impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.isolated().is_empty() {
            writeln!(f, "@nodes {}", self.named_nodes().join(" "))?;
        }
        for (&e, n) in self.edges.iter().zip(&self.names) {
            writeln!(f, "{}({})", n, self.universe.names_of(e).join(","))?;
        }
        Ok(())
    }
}
