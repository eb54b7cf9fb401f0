//! Carter diagrams, graph isomorphism, and the rank ≤ 8 diagram catalog.
//!
//! A diagram is an unlabeled simple graph on the roots of an admissible
//! representation, with an edge wherever the pairing of two roots is
//! nonzero. Every diagram arising this way is bipartite (the two orthogonal
//! groups are independent sets) and, for irreducible systems, connected.

use std::collections::BTreeSet;

use crate::linalg::IntMatrix;
use crate::presentation::GrsPresentation;

/// Unlabeled simple graph on the vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarterDiagram {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    name: Option<String>,
}

impl CarterDiagram {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            assert!(a != b, "no loops");
            assert!(a < vertex_count && b < vertex_count, "edge out of range");
            set.insert((a.min(b), a.max(b)));
        }
        CarterDiagram {
            vertex_count,
            edges: set,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count)
            .filter(|&u| u != v && self.has_edge(u, v))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Two-coloring of a connected bipartite graph: the color classes of
    /// vertex 0's side and the other side. `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertex_count;
        let mut color = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if color[u] == usize::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let zero = (0..n).filter(|&v| color[v] == 0).collect();
        let one = (0..n).filter(|&v| color[v] == 1).collect();
        Some((zero, one))
    }

    /// Graph isomorphism by backtracking with degree pruning; returns a
    /// vertex mapping from `self` to `other` when one exists. Intended for
    /// the catalog sizes (≤ 8 vertices).
    pub fn isomorphism_to(&self, other: &CarterDiagram) -> Option<Vec<usize>> {
        if self.vertex_count != other.vertex_count || self.edge_count() != other.edge_count() {
            return None;
        }
        if self.degree_sequence() != other.degree_sequence() {
            return None;
        }
        let n = self.vertex_count;
        // Assign high-degree vertices first; each later vertex is maximally
        // constrained by the already-assigned ones.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut assignment = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.try_assign(other, &order, 0, &mut assignment, &mut used) {
            Some(assignment)
        } else {
            None
        }
    }

    fn try_assign(
        &self,
        other: &CarterDiagram,
        order: &[usize],
        pos: usize,
        assignment: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        'candidates: for cand in 0..other.vertex_count {
            if used[cand] || other.degree(cand) != self.degree(v) {
                continue;
            }
            for &w in &order[..pos] {
                if self.has_edge(v, w) != other.has_edge(cand, assignment[w]) {
                    continue 'candidates;
                }
            }
            assignment[v] = cand;
            used[cand] = true;
            if self.try_assign(other, order, pos + 1, assignment, used) {
                return true;
            }
            assignment[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    pub fn is_isomorphic_to(&self, other: &CarterDiagram) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

/// The ambient classical type forced by a diagram name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl ClassicalType {
    pub fn rank(self) -> usize {
        match self {
            ClassicalType::A(n) | ClassicalType::D(n) => n,
            ClassicalType::E6 => 6,
            ClassicalType::E7 => 7,
            ClassicalType::E8 => 8,
        }
    }

    /// Root count of the classical system of this type.
    pub fn root_count(self) -> usize {
        match self {
            ClassicalType::A(n) => n * (n + 1),
            ClassicalType::D(n) => 2 * n * (n - 1),
            ClassicalType::E6 => 72,
            ClassicalType::E7 => 126,
            ClassicalType::E8 => 240,
        }
    }

    pub fn label(self) -> String {
        match self {
            ClassicalType::A(n) => format!("A_{n}"),
            ClassicalType::D(n) => format!("D_{n}"),
            ClassicalType::E6 => "E_6".into(),
            ClassicalType::E7 => "E_7".into(),
            ClassicalType::E8 => "E_8".into(),
        }
    }

    /// Simple graph of the standard simply-laced simple system.
    pub fn dynkin_graph(self) -> CarterDiagram {
        let n = self.rank();
        match self {
            ClassicalType::A(_) => CarterDiagram::new(n, path_edges(n)),
            ClassicalType::D(_) => {
                assert!(n >= 4, "type D starts at rank 4");
                let mut edges = path_edges(n - 2);
                edges.push((n - 3, n - 2));
                edges.push((n - 3, n - 1));
                CarterDiagram::new(n, edges)
            }
            // Path 0..n-2 with the last vertex attached to vertex 2; arm
            // lengths from vertex 2 give the E series.
            ClassicalType::E6 | ClassicalType::E7 | ClassicalType::E8 => {
                let mut edges = path_edges(n - 1);
                edges.push((2, n - 1));
                CarterDiagram::new(n, edges)
            }
        }
    }

    /// Standard Cartan matrix rows: 2 on the diagonal, -1 on Dynkin edges.
    pub fn cartan_rows(self) -> Vec<Vec<i64>> {
        let g = self.dynkin_graph();
        let n = g.vertex_count();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if g.has_edge(i, j) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn standard_presentation(self) -> GrsPresentation {
        let rows = self.cartan_rows();
        let m = IntMatrix::from_i64_rows(&rows);
        GrsPresentation::new(m).expect("standard Cartan matrices are valid")
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

/// Cycle of length four with two paths attached at opposite corners.
///
/// Vertices: left tail, corner, top, bottom, corner, right tail. This is
/// the shape family the D-series non-Coxeter classes live in.
fn cycle_with_tails(left: usize, right: usize) -> CarterDiagram {
    let n = left + 4 + right;
    let mut edges = Vec::new();
    // left tail ending at corner `left`
    for i in 0..left {
        edges.push((i, i + 1));
    }
    let (corner_a, top, bottom, corner_b) = (left, left + 1, left + 2, left + 3);
    edges.push((corner_a, top));
    edges.push((corner_a, bottom));
    edges.push((top, corner_b));
    edges.push((bottom, corner_b));
    for i in 0..right {
        let from = if i == 0 { corner_b } else { left + 3 + i };
        edges.push((from, left + 4 + i));
    }
    CarterDiagram::new(n, edges)
}

/// One catalog entry: a name, its diagram, and the ambient classical type
/// it forces.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub diagram: CarterDiagram,
    pub ambient: ClassicalType,
}

impl CatalogEntry {
    pub fn rank(&self) -> usize {
        self.diagram.vertex_count()
    }
}

/// The catalog of admissible diagrams of rank ≤ 8.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Number of catalog entries after deduplication; fixed at transcription
/// time and asserted by the catalog self-check.
pub const CATALOG_LEN: usize = 39;

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries_of_rank(&self, rank: usize) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| e.rank() == rank).collect()
    }

    /// First entry isomorphic to the given diagram, if any.
    pub fn classify(&self, d: &CarterDiagram) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.diagram.is_isomorphic_to(d))
    }
}

fn build_catalog() -> Catalog {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let push = |entries: &mut Vec<CatalogEntry>,
                name: String,
                diagram: CarterDiagram,
                ambient: ClassicalType|
     -> bool {
        if entries.iter().any(|e| e.diagram.is_isomorphic_to(&diagram)) {
            return false;
        }
        let named = diagram.with_name(name.clone());
        entries.push(CatalogEntry {
            name,
            diagram: named,
            ambient,
        });
        true
    };

    for n in 1..=8 {
        let t = ClassicalType::A(n);
        push(&mut entries, t.label(), t.dynkin_graph(), t);
    }
    for n in 4..=8 {
        let t = ClassicalType::D(n);
        push(&mut entries, t.label(), t.dynkin_graph(), t);
    }
    // D_n(a_k): the stated index range is k <= floor((n+1)/2); indices
    // whose tails would be negative are not drawable and the rest
    // deduplicate by isomorphism (tails (k-1, n-k-3) and their swap give
    // the same graph), so only the first representative of each shape is
    // kept.
    for n in 4..=8usize {
        for k in 1..=n.div_ceil(2) {
            if k + 3 > n {
                continue;
            }
            let d = cycle_with_tails(k - 1, n - k - 3);
            push(
                &mut entries,
                format!("D_{n}(a_{k})"),
                d,
                ClassicalType::D(n),
            );
        }
    }
    for t in [ClassicalType::E6, ClassicalType::E7, ClassicalType::E8] {
        push(&mut entries, t.label(), t.dynkin_graph(), t);
    }
    // Square: 0-1-2-3-0. Pendants and tails measured from its corners; the
    // two-squares block glues a second square 1-4-5-2 onto edge 1-2.
    let square = [(0, 1), (1, 2), (2, 3), (3, 0)];
    let two_squares = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)];

    let e6a1 = CarterDiagram::new(6, square.iter().copied().chain([(1, 4), (2, 5)]));
    push(&mut entries, "E_6(a_1)".into(), e6a1, ClassicalType::E6);
    let e6a2 = CarterDiagram::new(6, two_squares.iter().copied());
    push(&mut entries, "E_6(a_2)".into(), e6a2, ClassicalType::E6);

    let e7a1 = CarterDiagram::new(7, square.iter().copied().chain([(1, 4), (4, 6), (2, 5)]));
    push(&mut entries, "E_7(a_1)".into(), e7a1, ClassicalType::E7);
    let e7a2 = CarterDiagram::new(7, square.iter().copied().chain([(1, 4), (2, 5), (0, 6)]));
    push(&mut entries, "E_7(a_2)".into(), e7a2, ClassicalType::E7);
    let e7a3 = CarterDiagram::new(7, two_squares.iter().copied().chain([(4, 6)]));
    push(&mut entries, "E_7(a_3)".into(), e7a3, ClassicalType::E7);
    // Three squares sharing a hub: 0-1-4-3-0, 0-2-5-3-0, 3-4-6-5-3.
    let e7a4 = CarterDiagram::new(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    );
    push(&mut entries, "E_7(a_4)".into(), e7a4, ClassicalType::E7);

    let e8a1 = CarterDiagram::new(
        8,
        square
            .iter()
            .copied()
            .chain([(1, 4), (4, 6), (6, 7), (2, 5)]),
    );
    push(&mut entries, "E_8(a_1)".into(), e8a1, ClassicalType::E8);
    let e8a2 = CarterDiagram::new(
        8,
        square
            .iter()
            .copied()
            .chain([(1, 4), (4, 6), (2, 5), (3, 7)]),
    );
    push(&mut entries, "E_8(a_2)".into(), e8a2, ClassicalType::E8);
    let e8a3 = CarterDiagram::new(
        8,
        square
            .iter()
            .copied()
            .chain([(1, 4), (2, 5), (0, 6), (3, 7)]),
    );
    push(&mut entries, "E_8(a_3)".into(), e8a3, ClassicalType::E8);
    let e8a4 = CarterDiagram::new(8, two_squares.iter().copied().chain([(4, 6), (6, 7)]));
    push(&mut entries, "E_8(a_4)".into(), e8a4, ClassicalType::E8);
    let e8a5 = CarterDiagram::new(8, two_squares.iter().copied().chain([(4, 6), (3, 7)]));
    push(&mut entries, "E_8(a_5)".into(), e8a5, ClassicalType::E8);
    // Ladder of three squares.
    let e8a6 = CarterDiagram::new(
        8,
        two_squares.iter().copied().chain([(4, 6), (6, 7), (7, 5)]),
    );
    push(&mut entries, "E_8(a_6)".into(), e8a6, ClassicalType::E8);
    let e8a7 = CarterDiagram::new(
        8,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
            (6, 7),
        ],
    );
    push(&mut entries, "E_8(a_7)".into(), e8a7, ClassicalType::E8);
    // The cube: two squares joined by a perfect matching. Realizability in
    // type E_8 and non-isomorphism to every other entry are verified by the
    // classification tests.
    let e8a8 = CarterDiagram::new(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    );
    push(&mut entries, "E_8(a_8)".into(), e8a8, ClassicalType::E8);

    let catalog = Catalog { entries };
    catalog_self_check(&catalog);
    catalog
}

fn catalog_self_check(catalog: &Catalog) {
    assert_eq!(catalog.len(), CATALOG_LEN, "catalog entry count is pinned");
    for e in catalog.entries() {
        assert_eq!(
            e.rank(),
            parse_rank(&e.name),
            "vertex count equals rank: {}",
            e.name
        );
        assert!(
            e.diagram.is_connected(),
            "catalog diagrams are connected: {}",
            e.name
        );
        assert!(
            e.diagram.bipartition().is_some(),
            "catalog diagrams are bipartite: {}",
            e.name
        );
        assert_eq!(
            e.ambient.rank(),
            e.rank(),
            "ambient rank matches: {}",
            e.name
        );
    }
    for (i, a) in catalog.entries().iter().enumerate() {
        for b in catalog.entries().iter().skip(i + 1) {
            assert!(
                !a.diagram.is_isomorphic_to(&b.diagram),
                "catalog entries are pairwise non-isomorphic: {} vs {}",
                a.name,
                b.name,
            );
        }
    }
}

fn parse_rank(name: &str) -> usize {
    let digits: String = name
        .chars()
        .skip(2)
        .take_while(|c| c.is_ascii_digit())
        .collect();
    digits.parse().expect("catalog names carry their rank")
}

/// The transcribed diagram catalog; built once and cached.
pub fn catalog() -> &'static Catalog {
    use std::sync::OnceLock;
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Name of the unique catalog entry isomorphic to the diagram, if any.
pub fn classify_diagram(d: &CarterDiagram) -> Option<String> {
    catalog().classify(d).map(|e| e.name.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> CarterDiagram {
        CarterDiagram::new(n, path_edges(n))
    }

    fn cycle(n: usize) -> CarterDiagram {
        let mut edges = path_edges(n);
        edges.push((n - 1, 0));
        CarterDiagram::new(n, edges)
    }

    #[test]
    fn isomorphism_examples() {
        let relabeled = CarterDiagram::new(3, [(2, 1), (1, 0)]);
        assert!(path(3).is_isomorphic_to(&relabeled));
        assert!(!path(4).is_isomorphic_to(&cycle(4)));
        let star = CarterDiagram::new(4, [(0, 1), (0, 2), (0, 3)]);
        assert!(!star.is_isomorphic_to(&path(4)));
    }

    #[test]
    fn isomorphism_needs_more_than_degree_sequences() {
        // Same degree sequence [3,3,2,2,1,1]; pendant corners adjacent in
        // one graph, opposite in the other.
        let adjacent = catalog().get("E_6(a_1)").unwrap();
        let opposite = catalog().get("D_6(a_2)").unwrap();
        assert_eq!(
            adjacent.diagram.degree_sequence(),
            opposite.diagram.degree_sequence()
        );
        assert!(!adjacent.diagram.is_isomorphic_to(&opposite.diagram));
    }

    #[test]
    fn isomorphism_returns_a_real_mapping() {
        let a = cycle(4);
        let b = CarterDiagram::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]);
        let map = a.isomorphism_to(&b).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.has_edge(i, j), b.has_edge(map[i], map[j]));
            }
        }
    }

    #[test]
    fn catalog_rank_slices() {
        let names = |rank: usize| -> Vec<String> {
            catalog()
                .entries_of_rank(rank)
                .iter()
                .map(|e| e.name.clone())
                .collect()
        };
        assert_eq!(names(1), vec!["A_1"]);
        assert_eq!(names(2), vec!["A_2"]);
        assert_eq!(names(3), vec!["A_3"]);
        assert_eq!(names(4), vec!["A_4", "D_4", "D_4(a_1)"]);
        assert_eq!(names(5), vec!["A_5", "D_5", "D_5(a_1)"]);
        assert!(names(6).contains(&"E_6".to_string()));
        assert!(names(6).contains(&"E_6(a_1)".to_string()));
        assert!(names(6).contains(&"E_6(a_2)".to_string()));
        assert_eq!(names(7).len(), 9);
        assert_eq!(names(8).len(), 14);
        assert_eq!(catalog().len(), CATALOG_LEN);
    }

    #[test]
    fn d4a1_is_the_four_cycle() {
        assert!(catalog()
            .get("D_4(a_1)")
            .unwrap()
            .diagram
            .is_isomorphic_to(&cycle(4)));
    }

    #[test]
    fn d_series_dedup_keeps_low_indices() {
        // D_6(a_3) collapses onto D_6(a_1) (tails (2,0) vs (0,2)); only two
        // D_6 cycle shapes remain.
        assert!(catalog().get("D_6(a_1)").is_some());
        assert!(catalog().get("D_6(a_2)").is_some());
        assert!(catalog().get("D_6(a_3)").is_none());
        assert!(catalog().get("D_8(a_3)").is_some());
        assert!(catalog().get("D_8(a_4)").is_none());
    }

    #[test]
    fn catalog_edge_counts_are_pinned() {
        let expect = [
            ("A_1", 0),
            ("A_8", 7),
            ("D_4", 3),
            ("D_8", 7),
            ("D_4(a_1)", 4),
            ("D_5(a_1)", 5),
            ("D_6(a_1)", 6),
            ("D_6(a_2)", 6),
            ("D_8(a_3)", 8),
            ("E_6", 5),
            ("E_6(a_1)", 6),
            ("E_6(a_2)", 7),
            ("E_7", 6),
            ("E_7(a_1)", 7),
            ("E_7(a_2)", 7),
            ("E_7(a_3)", 8),
            ("E_7(a_4)", 9),
            ("E_8", 7),
            ("E_8(a_1)", 8),
            ("E_8(a_2)", 8),
            ("E_8(a_3)", 8),
            ("E_8(a_4)", 9),
            ("E_8(a_5)", 9),
            ("E_8(a_6)", 10),
            ("E_8(a_7)", 10),
            ("E_8(a_8)", 12),
        ];
        for (name, edges) in expect {
            assert_eq!(
                catalog().get(name).unwrap().diagram.edge_count(),
                edges,
                "edge count of {name}"
            );
        }
        // The cube is the unique 3-regular entry.
        let cube = &catalog().get("E_8(a_8)").unwrap().diagram;
        assert_eq!(cube.degree_sequence(), vec![3; 8]);
    }

    #[test]
    fn classify_diagram_examples() {
        assert_eq!(classify_diagram(&path(3)).as_deref(), Some("A_3"));
        assert_eq!(classify_diagram(&cycle(4)).as_deref(), Some("D_4(a_1)"));
        assert_eq!(classify_diagram(&cycle(3)), None);
    }

    #[test]
    fn dynkin_data_is_consistent() {
        for t in [
            ClassicalType::A(5),
            ClassicalType::D(5),
            ClassicalType::E6,
            ClassicalType::E7,
            ClassicalType::E8,
        ] {
            let g = t.standard_presentation();
            assert!(g.is_positive_definite(), "{t:?}");
            assert_eq!(g.rank(), t.rank());
        }
    }
}
