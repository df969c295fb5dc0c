//! Dynkin diagrams and their automorphism groups.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Family, SimpleLieType};

/// An edge between simple roots `a < b`. `short_end` names the shorter root when
/// the multiplicity exceeds one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub short_end: Option<usize>,
}

impl Edge {
    fn simple(a: usize, b: usize) -> Edge {
        Edge {
            a: a.min(b),
            b: a.max(b),
            multiplicity: 1,
            short_end: None,
        }
    }

    fn multiple(a: usize, b: usize, multiplicity: u8, short_end: usize) -> Edge {
        Edge {
            a: a.min(b),
            b: a.max(b),
            multiplicity,
            short_end: Some(short_end),
        }
    }

    pub fn other(&self, node: usize) -> Option<usize> {
        if node == self.a {
            Some(self.b)
        } else if node == self.b {
            Some(self.a)
        } else {
            None
        }
    }
}

/// A (possibly partial) Dynkin diagram on 1-based simple-root labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    nodes: Vec<usize>,
    edges: Vec<Edge>,
}

impl DynkinDiagram {
    /// Nodes are sorted and deduplicated; edges touching missing nodes are dropped.
    pub fn new(
        nodes: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .filter(|e| nodes.contains(&e.a) && nodes.contains(&e.b))
            .collect();
        edges.sort();
        edges.dedup();
        DynkinDiagram {
            nodes: nodes.into_iter().collect(),
            edges,
        }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&Edge> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.iter().find(|e| e.a == a && e.b == b)
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |e| e.other(node))
    }

    pub fn degree(&self, node: usize) -> usize {
        self.neighbors(node).count()
    }

    /// The diagram left after deleting `removed` and every edge touching it.
    pub fn delete_nodes(&self, removed: &[usize]) -> DynkinDiagram {
        DynkinDiagram {
            nodes: self
                .nodes
                .iter()
                .copied()
                .filter(|n| !removed.contains(n))
                .collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !removed.contains(&e.a) && !removed.contains(&e.b))
                .collect(),
        }
    }

    /// Union-find labels over node positions: equal labels mean same component.
    fn component_labels(&self) -> Vec<usize> {
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let pos = |v: usize| {
            self.nodes
                .binary_search(&v)
                .expect("edges join existing nodes")
        };
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        for e in &self.edges {
            let (x, y) = (root(&mut parent, pos(e.a)), root(&mut parent, pos(e.b)));
            parent[x.max(y)] = x.min(y);
        }
        (0..parent.len()).map(|x| root(&mut parent, x)).collect()
    }

    /// Connected components, ordered by their smallest node.
    pub fn components(&self) -> Vec<DynkinDiagram> {
        let labels = self.component_labels();
        // labels are the position of each component's smallest node
        let mut slot = vec![usize::MAX; labels.len()];
        let mut out: Vec<DynkinDiagram> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = out.len();
                out.push(DynkinDiagram {
                    nodes: Vec::new(),
                    edges: Vec::new(),
                });
            }
            out[slot[l]].nodes.push(self.nodes[i]);
        }
        for e in &self.edges {
            let i = self
                .nodes
                .binary_search(&e.a)
                .expect("edges join existing nodes");
            out[slot[labels[i]]].edges.push(*e);
        }
        out
    }

    /// Degree of each node, aligned with [`nodes`](Self::nodes).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            for v in [e.a, e.b] {
                if let Ok(i) = self.nodes.binary_search(&v) {
                    deg[i] += 1;
                }
            }
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&l| l == 0)
    }

    /// Cartan matrix `a_ij = <α_i, α_j^∨>`, rows/columns in node order.
    ///
    /// For an edge of multiplicity `m` with long end `l` and short end `s`,
    /// `a_ls = -m` and `a_sl = -1`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.nodes.len();
        let pos = |v: usize| self.nodes.binary_search(&v).expect("edge node in diagram");
        let mut c = vec![vec![0; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in &self.edges {
            let (i, j) = (pos(e.a), pos(e.b));
            match e.short_end {
                None => {
                    c[i][j] = -1;
                    c[j][i] = -1;
                }
                Some(s) => {
                    let (long, short) = if s == e.a { (j, i) } else { (i, j) };
                    c[long][short] = -i32::from(e.multiplicity);
                    c[short][long] = -1;
                }
            }
        }
        c
    }
}

/// The Bourbaki-numbered Dynkin diagram of `ty`.
pub fn dynkin_diagram(ty: SimpleLieType) -> DynkinDiagram {
    let n = ty.rank();
    let path = |last: usize| (1..last).map(|i| Edge::simple(i, i + 1));
    let edges: Vec<Edge> = match ty.family() {
        Family::A => path(n).collect(),
        Family::B => path(n - 1)
            .chain([Edge::multiple(n - 1, n, 2, n)])
            .collect(),
        Family::C => path(n - 1)
            .chain([Edge::multiple(n - 1, n, 2, n - 1)])
            .collect(),
        Family::D => path(n - 1).chain([Edge::simple(n - 2, n)]).collect(),
        Family::E => [Edge::simple(1, 3), Edge::simple(2, 4)]
            .into_iter()
            .chain((3..n).map(|i| Edge::simple(i, i + 1)))
            .collect(),
        Family::F => vec![
            Edge::simple(1, 2),
            Edge::multiple(2, 3, 2, 3),
            Edge::simple(3, 4),
        ],
        Family::G => vec![Edge::multiple(1, 2, 3, 1)],
    };
    DynkinDiagram::new(1..=n, edges)
}

/// A permutation of diagram nodes. `image(v)` for nodes outside the diagram is `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodePermutation {
    map: Vec<usize>,
}

impl NodePermutation {
    pub fn identity(max_node: usize) -> Self {
        NodePermutation {
            map: (1..=max_node).collect(),
        }
    }

    pub fn image(&self, node: usize) -> usize {
        match node.checked_sub(1).and_then(|i| self.map.get(i)) {
            Some(&v) => v,
            None => node,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Images of nodes `1..=max_node` in order.
    pub fn images(&self) -> &[usize] {
        &self.map
    }
}

/// All node permutations preserving adjacency, edge multiplicities and short ends.
///
/// Backtracking over nodes in breadth-first order: once a neighbour of `v` is
/// placed, the image of `v` must be a neighbour of that image, so branching is
/// bounded by the maximum degree.
pub fn diagram_automorphisms(diagram: &DynkinDiagram) -> Vec<NodePermutation> {
    let max_node = diagram.nodes().last().copied().unwrap_or(0);
    let mut order = Vec::with_capacity(diagram.len());
    let mut anchor = Vec::with_capacity(diagram.len());
    for comp in diagram.components() {
        let start = comp.nodes()[0];
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([(start, None)]);
        while let Some((v, parent)) = queue.pop_front() {
            order.push(v);
            anchor.push(parent);
            for w in diagram.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back((w, Some(v)));
                }
            }
        }
    }

    struct Search<'a> {
        diagram: &'a DynkinDiagram,
        order: Vec<usize>,
        anchor: Vec<Option<usize>>,
        image: Vec<usize>,
        used: Vec<bool>,
        found: Vec<NodePermutation>,
    }

    impl Search<'_> {
        fn compatible(&self, v: usize, c: usize, placed: &[usize]) -> bool {
            if self.diagram.degree(v) != self.diagram.degree(c) {
                return false;
            }
            placed.iter().all(|&w| {
                let wc = self.image[w];
                match (
                    self.diagram.edge_between(v, w),
                    self.diagram.edge_between(c, wc),
                ) {
                    (None, None) => true,
                    (Some(e), Some(f)) => {
                        e.multiplicity == f.multiplicity
                            && match (e.short_end, f.short_end) {
                                (None, None) => true,
                                (Some(s), Some(t)) => (s == v) == (t == c),
                                _ => false,
                            }
                    }
                    _ => false,
                }
            })
        }

        fn run(&mut self, pos: usize) {
            if pos == self.order.len() {
                let max = self.image.len() - 1;
                let map = (1..=max)
                    .map(|v| {
                        if self.diagram.contains(v) {
                            self.image[v]
                        } else {
                            v
                        }
                    })
                    .collect();
                self.found.push(NodePermutation { map });
                return;
            }
            let v = self.order[pos];
            let candidates: Vec<usize> = match self.anchor[pos] {
                Some(p) => self.diagram.neighbors(self.image[p]).collect(),
                None => self.diagram.nodes().to_vec(),
            };
            let placed: Vec<usize> = self.order[..pos].to_vec();
            for c in candidates {
                if self.used[c] || !self.compatible(v, c, &placed) {
                    continue;
                }
                self.used[c] = true;
                self.image[v] = c;
                self.run(pos + 1);
                self.used[c] = false;
                self.image[v] = 0;
            }
        }
    }

    let mut search = Search {
        diagram,
        order,
        anchor,
        image: vec![0; max_node + 1],
        used: vec![false; max_node + 1],
        found: Vec::new(),
    };
    search.run(0);
    let mut found = search.found;
    found.sort();
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> DynkinDiagram {
        dynkin_diagram(s.parse().unwrap())
    }

    #[test]
    fn b4_edges() {
        let d = diagram("B4");
        assert_eq!(
            d.edges(),
            &[
                Edge::simple(1, 2),
                Edge::simple(2, 3),
                Edge::multiple(3, 4, 2, 4)
            ]
        );
    }

    #[test]
    fn d4_fork_at_node_two() {
        let d = diagram("D4");
        assert_eq!(d.degree(2), 3);
        assert_eq!(
            d.neighbors(2).collect::<BTreeSet<_>>(),
            BTreeSet::from([1, 3, 4])
        );
    }

    #[test]
    fn f4_double_edge_in_middle() {
        let d = diagram("F4");
        let e = d.edge_between(2, 3).unwrap();
        assert_eq!((e.multiplicity, e.short_end), (2, Some(3)));
    }

    #[test]
    fn e_branch_at_four() {
        for t in ["E6", "E7", "E8"] {
            let d = diagram(t);
            assert_eq!(d.degree(4), 3, "{t}");
            assert_eq!(d.neighbors(2).collect::<Vec<_>>(), vec![4]);
        }
    }

    #[test]
    fn full_diagrams_are_connected_trees() {
        for t in [
            "A1", "A7", "B2", "B6", "C3", "C9", "D4", "D10", "E6", "E7", "E8", "F4", "G2",
        ] {
            let d = diagram(t);
            assert!(d.is_connected(), "{t}");
            assert_eq!(d.edges().len(), d.len() - 1, "{t}");
            assert!(d.edges().iter().filter(|e| e.multiplicity > 1).count() <= 1);
        }
    }

    #[test]
    fn a5_reversal() {
        let autos = diagram_automorphisms(&diagram("A5"));
        assert_eq!(autos.len(), 2);
        assert!(autos[0].is_identity());
        assert_eq!(autos[1].images(), &[5, 4, 3, 2, 1]);
    }

    #[test]
    fn d4_triality() {
        let autos = diagram_automorphisms(&diagram("D4"));
        assert_eq!(autos.len(), 6);
        for p in &autos {
            assert_eq!(p.image(2), 2);
            let moved: BTreeSet<usize> = [1, 3, 4].iter().map(|&v| p.image(v)).collect();
            assert_eq!(moved, BTreeSet::from([1, 3, 4]));
        }
    }

    #[test]
    fn group_orders() {
        let expected = [
            ("A1", 1),
            ("A2", 2),
            ("A12", 2),
            ("B2", 1),
            ("B7", 1),
            ("C5", 1),
            ("D4", 6),
            ("D5", 2),
            ("D12", 2),
            ("E6", 2),
            ("E7", 1),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
        ];
        for (t, order) in expected {
            assert_eq!(diagram_automorphisms(&diagram(t)).len(), order, "{t}");
        }
    }

    #[test]
    fn large_rank_automorphisms_are_fast() {
        assert_eq!(diagram_automorphisms(&diagram("A50")).len(), 2);
        assert_eq!(diagram_automorphisms(&diagram("D50")).len(), 2);
    }

    #[test]
    fn deletion_and_components() {
        let d = diagram("E8").delete_nodes(&[7]);
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].nodes(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(comps[1].nodes(), &[8]);
    }
}
