//! Finite enumeration: real-root orbits, Weyl groups, conjugacy, axiom
//! checking, irreducible components and subsystem closure.
//!
//! Enumeration is breadth-first from the basis with a lexicographic
//! canonical ordering on the results, so two runs produce identical output.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::presentation::{GrsPresentation, Root, WeylElement};

/// Canonically ordered set of real roots.
///
/// When `complete` the set is the whole (finite) root set: closed under
/// negation and under every reflection in its members, with
/// `|roots| <= 3^rank + rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    roots: Vec<Root>,
    complete: bool,
}

impl RootSet {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.binary_search(root).is_ok()
    }

    /// Roots whose first nonzero coordinate is positive, in order.
    pub fn positive_half(&self) -> Vec<&Root> {
        self.roots.iter().filter(|r| r.is_sign_positive()).collect()
    }
}

/// Applies the reflection in the i-th basis root coordinate-wise; only
/// coordinate i changes, by the pairing with the vector.
fn reflect_basis(grs: &GrsPresentation, v: &Root, i: usize) -> Root {
    let pairing = grs.pairing(v, &grs.basis_root(i));
    let mut coords = v.coords().to_vec();
    coords[i] -= pairing;
    Root::new(coords)
}

fn orbit_of_basis(grs: &GrsPresentation, depth: Option<usize>) -> (Vec<Root>, bool) {
    let n = grs.rank();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<(Root, usize)> = VecDeque::new();
    for i in 0..n {
        let b = grs.basis_root(i);
        if seen.insert(b.clone()) {
            queue.push_back((b, 0));
        }
    }
    let mut complete = true;
    while let Some((v, d)) = queue.pop_front() {
        if let Some(bound) = depth {
            if d >= bound {
                complete = false;
                continue;
            }
        }
        for i in 0..n {
            let w = reflect_basis(grs, &v, i);
            if seen.insert(w.clone()) {
                queue.push_back((w, d + 1));
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort();
    (roots, complete)
}

/// Complete orbit of the basis under the basis reflections.
///
/// Requires a positive-definite Cartan form, which guarantees the orbit is
/// finite.
pub fn enumerate_roots(grs: &GrsPresentation) -> Result<RootSet> {
    if !grs.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let (roots, _) = orbit_of_basis(grs, None);
    debug_assert!(roots.len() <= 3usize.pow(grs.rank() as u32) + grs.rank());
    Ok(RootSet {
        roots,
        complete: true,
    })
}

/// Depth-bounded orbit expansion for systems that are not positive
/// definite. The result is explicitly marked incomplete unless the orbit
/// closed before the bound.
pub fn enumerate_roots_bounded(grs: &GrsPresentation, depth: usize) -> RootSet {
    let (roots, complete) = orbit_of_basis(grs, Some(depth));
    RootSet { roots, complete }
}

/// Deduplicated table of Weyl group elements.
#[derive(Clone, Debug)]
pub struct WeylGroupTable {
    elements: Vec<WeylElement>,
    complete: bool,
    cap: usize,
}

impl WeylGroupTable {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cap(&self) -> usize {
        self.cap
    }
}

/// Breadth-first closure of the group generated by the basis reflections,
/// deduplicated by exact matrix equality. Stops complete at closure or
/// incomplete once `cap` elements have been collected.
pub fn enumerate_weyl_group(grs: &GrsPresentation, cap: usize) -> WeylGroupTable {
    let n = grs.rank();
    let gens: Vec<WeylElement> = (0..n).map(|i| grs.basis_reflection(i)).collect();
    let identity = WeylElement::identity(n);
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut elements: Vec<WeylElement> = Vec::new();
    let mut queue: VecDeque<WeylElement> = VecDeque::new();
    seen.insert(identity.matrix().entries().to_vec());
    elements.push(identity.clone());
    queue.push_back(identity);
    let mut complete = true;
    'bfs: while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = w.compose(g);
            let key = next.matrix().entries().to_vec();
            if seen.insert(key) {
                if elements.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    WeylGroupTable {
        elements,
        complete,
        cap,
    }
}

/// Outcome of a brute-force conjugacy search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    /// A conjugating element `u` with `u w1 u^-1 = w2`.
    Conjugate(Box<WeylElement>),
    NotConjugate,
    /// The group enumeration hit its cap before deciding.
    Unknown {
        cap: usize,
    },
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate(_))
    }
}

/// Tests conjugacy of two elements by exhausting the enumerated group.
pub fn are_conjugate(
    grs: &GrsPresentation,
    w1: &WeylElement,
    w2: &WeylElement,
    cap: usize,
) -> Conjugacy {
    let table = enumerate_weyl_group(grs, cap);
    for u in table.elements() {
        // u w1 u^-1 == w2  <=>  u w1 == w2 u
        if u.compose(w1) == w2.compose(u) {
            return Conjugacy::Conjugate(Box::new(u.clone()));
        }
    }
    if table.is_complete() {
        Conjugacy::NotConjugate
    } else {
        Conjugacy::Unknown { cap }
    }
}

/// Result of checking the defining axioms on an enumerated root set.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub root_count: usize,
    pub complete: bool,
    /// Z-span of the roots is the full lattice.
    pub spans_lattice: bool,
    /// Every root has Cartan norm 2.
    pub norms_two: bool,
    /// Every reflection in a root permutes the root set. `None` when the
    /// enumeration was depth-bounded and closure cannot be decided.
    pub reflections_stabilize: Option<bool>,
    pub closed_under_negation: bool,
    /// Integer multiples of roots in the set are only the root and its
    /// negative.
    pub multiples_only_unit: bool,
    /// All pairings lie in [-2, 2], hitting ±2 exactly on proportional
    /// pairs. Only decidable for complete (positive definite) sets.
    pub pairings_bounded: Option<bool>,
    /// Root count respects the 3^rank + rank bound.
    pub within_count_bound: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.spans_lattice
            && self.norms_two
            && self.reflections_stabilize.unwrap_or(true)
            && self.closed_under_negation
            && self.multiples_only_unit
            && self.pairings_bounded.unwrap_or(true)
            && self.within_count_bound
    }
}

fn axioms_on_set(grs: &GrsPresentation, set: &RootSet) -> AxiomReport {
    let n = grs.rank();
    let two = BigInt::from(2);
    let norms_two = set.roots().iter().all(|r| grs.norm(r) == two);
    let closed_under_negation = set.roots().iter().all(|r| set.contains(&r.neg()));
    let root_matrix = IntMatrix::from_fn(set.len(), n, |i, j| set.roots()[i].coords()[j].clone());
    let (h, _, rank) = linalg::row_hnf_with_transform(&root_matrix);
    let spans_lattice = rank == n
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let expect = if i == j {
                    BigInt::from(1)
                } else {
                    BigInt::zero()
                };
                h.get(i, j) == &expect
            })
        });
    let mut multiples_only_unit = true;
    for r in set.roots() {
        for c in [2i64, 3, -2, -3] {
            let scaled = Root::new(r.coords().iter().map(|v| v * BigInt::from(c)).collect());
            if set.contains(&scaled) {
                multiples_only_unit = false;
            }
        }
    }
    let reflections_stabilize = if set.is_complete() {
        let ok = set.roots().iter().all(|alpha| {
            let refl = match grs.reflection(alpha) {
                Ok(r) => r,
                Err(_) => return false,
            };
            set.roots()
                .iter()
                .all(|beta| set.contains(&refl.apply(beta)))
        });
        Some(ok)
    } else {
        None
    };
    let pairings_bounded = if set.is_complete() {
        let mut ok = true;
        for (i, alpha) in set.roots().iter().enumerate() {
            for beta in set.roots().iter().skip(i) {
                let p = grs.pairing(alpha, beta);
                let proportional_violation =
                    (p == two && alpha != beta) || (p == -two.clone() && *alpha != beta.neg());
                if p.abs() > two || proportional_violation {
                    ok = false;
                }
            }
        }
        Some(ok)
    } else {
        None
    };
    let within_count_bound = set.len() <= 3usize.pow(n as u32) + n;
    AxiomReport {
        root_count: set.len(),
        complete: set.is_complete(),
        spans_lattice,
        norms_two,
        reflections_stabilize,
        closed_under_negation,
        multiples_only_unit,
        pairings_bounded,
        within_count_bound,
    }
}

/// Full axiom check on the complete root set of a positive-definite system.
pub fn check_axioms(grs: &GrsPresentation) -> Result<AxiomReport> {
    let set = enumerate_roots(grs)?;
    Ok(axioms_on_set(grs, &set))
}

/// Partial axiom check on a depth-bounded expansion; closure conditions
/// that are undecidable on a partial set come back as `None`.
pub fn check_axioms_bounded(grs: &GrsPresentation, depth: usize) -> AxiomReport {
    let set = enumerate_roots_bounded(grs, depth);
    axioms_on_set(grs, &set)
}

/// Partition of the basis indices into irreducible components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub groups: Vec<Vec<usize>>,
    /// True when connectivity was judged on the basis graph because the
    /// full root set is not enumerable.
    pub heuristic: bool,
}

impl Components {
    pub fn is_irreducible(&self) -> bool {
        self.groups.len() == 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Connected components of the pairing graph, reported through the basis
/// indices each component contains.
///
/// Positive-definite systems are decomposed on the full enumerated root
/// set; otherwise the basis graph is used and the result flagged heuristic.
pub fn irreducible_components(grs: &GrsPresentation) -> Components {
    let n = grs.rank();
    if grs.is_positive_definite() {
        let set = enumerate_roots(grs).expect("positive definite");
        let mut uf = UnionFind::new(set.len());
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                if !grs.pairing(&set.roots()[i], &set.roots()[j]).is_zero() {
                    uf.union(i, j);
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for b in 0..n {
            let idx = set
                .roots()
                .iter()
                .position(|r| *r == grs.basis_root(b))
                .expect("basis roots are roots");
            groups.entry(uf.find(idx)).or_default().push(b);
        }
        let mut list: Vec<Vec<usize>> = groups.into_values().collect();
        list.sort();
        Components {
            groups: list,
            heuristic: false,
        }
    } else {
        let mut uf = UnionFind::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if !grs.cartan().get(i, j).is_zero() {
                    uf.union(i, j);
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for b in 0..n {
            groups.entry(uf.find(b)).or_default().push(b);
        }
        let mut list: Vec<Vec<usize>> = groups.into_values().collect();
        list.sort();
        Components {
            groups: list,
            heuristic: true,
        }
    }
}

/// Sub-presentation on a subset of basis indices (the restricted Cartan
/// matrix, preserving order).
pub fn restrict_presentation(grs: &GrsPresentation, indices: &[usize]) -> GrsPresentation {
    let k = indices.len();
    let m = IntMatrix::from_fn(k, k, |i, j| {
        grs.cartan().get(indices[i], indices[j]).clone()
    });
    GrsPresentation::new(m).expect("restriction of valid Cartan data is valid")
}

/// Smallest subset of the root set containing `±seeds` and closed under
/// reflections in its own members.
pub fn subsystem_closure(grs: &GrsPresentation, seeds: &[Root]) -> Result<RootSet> {
    let all = enumerate_roots(grs)?;
    for s in seeds {
        if !all.contains(s) {
            return Err(Error::SeedNotRoot(s.to_string()));
        }
    }
    // r_a(b) = b - (b,a) a, computed coordinate-wise; no matrices needed.
    let reflect = |a: &Root, b: &Root| -> Root {
        let p = grs.pairing(b, a);
        Root::new(
            b.coords()
                .iter()
                .zip(a.coords())
                .map(|(bc, ac)| bc - &p * ac)
                .collect(),
        )
    };
    let mut members: Vec<Root> = Vec::new();
    let mut seen: HashSet<Root> = HashSet::new();
    for s in seeds {
        for r in [s.clone(), s.neg()] {
            if seen.insert(r.clone()) {
                members.push(r);
            }
        }
    }
    let mut queue: Vec<Root> = members.clone();
    while let Some(new) = queue.pop() {
        let mut i = 0;
        while i < members.len() {
            let old = members[i].clone();
            i += 1;
            for image in [reflect(&new, &old), reflect(&old, &new)] {
                if seen.insert(image.clone()) {
                    members.push(image.clone());
                    queue.push(image);
                }
            }
        }
    }
    let mut roots: Vec<Root> = members;
    roots.sort();
    Ok(RootSet {
        roots,
        complete: true,
    })
}
