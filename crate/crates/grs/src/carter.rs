//! Admissible representations of Weyl elements, their diagrams, realization
//! of catalog entries inside classical root systems, and the classification
//! of irreducible positive-definite systems by those diagrams.
//!
//! An admissible representation writes an element as a product of two blocks
//! of reflections, each block in mutually orthogonal roots, with all roots
//! linearly independent; the element is admissible when the reflecting roots
//! generate the full Weyl group. The searches here are deterministic: roots
//! are processed in lexicographic coordinate order and the first candidate
//! that verifies wins.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::{catalog, CarterDiagram, ClassicalType};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::presentation::{GrsPresentation, Root, WeylElement};
use crate::weyl;

/// Two ordered groups of roots, each internally orthogonal, whose
/// reflection product is a given Weyl element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleRep {
    group1: Vec<Root>,
    group2: Vec<Root>,
}

impl AdmissibleRep {
    pub fn new(group1: Vec<Root>, group2: Vec<Root>) -> Self {
        AdmissibleRep { group1, group2 }
    }

    pub fn group1(&self) -> &[Root] {
        &self.group1
    }

    pub fn group2(&self) -> &[Root] {
        &self.group2
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.group1.iter().chain(self.group2.iter())
    }

    pub fn total(&self) -> usize {
        self.group1.len() + self.group2.len()
    }
}

/// Root processing order for the representation searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    /// Lexicographic on coordinate vectors.
    Forward,
    /// Reversed lexicographic; used to confirm diagram well-definedness.
    Reverse,
}

/// Per-condition outcome of [`verify_admissible`].
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub orthogonal: bool,
    pub independent: bool,
    pub product_matches: bool,
    pub generates: bool,
    pub reasons: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.orthogonal && self.independent && self.product_matches && self.generates
    }
}

// ---------------------------------------------------------------------------
// Fast machine-word tables for the searches.

fn mat_identity(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0 {
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    out
}

fn mat_apply(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn is_identity(n: usize, m: &[i64]) -> bool {
    m == mat_identity(n).as_slice()
}

/// Rank of a set of integer vectors, fraction-free in i128.
fn rank_of(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank >= nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(p, rank);
        for r in (rank + 1)..nrows {
            for c in (col + 1)..ncols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// Precomputed tables over the full enumerated root set of a
/// positive-definite presentation.
struct Fast {
    n: usize,
    roots: Vec<Vec<i64>>,
    /// Indices of sign-positive roots, ascending (= lexicographic order).
    pos: Vec<usize>,
    pair: Vec<i64>,
    refl: Vec<Vec<i64>>,
    neg: Vec<usize>,
    index: HashMap<Vec<i64>, usize>,
}

impl Fast {
    fn build(grs: &GrsPresentation) -> Result<Fast> {
        let set = weyl::enumerate_roots(grs)?;
        let n = grs.rank();
        let roots: Vec<Vec<i64>> = set
            .roots()
            .iter()
            .map(|r| {
                r.to_i64()
                    .ok_or_else(|| Error::Verification("root exceeds i64".into()))
            })
            .collect::<Result<_>>()?;
        let cartan: Vec<i64> = grs
            .cartan()
            .to_i64()
            .ok_or_else(|| Error::Verification("cartan exceeds i64".into()))?;
        let count = roots.len();
        let mut pair = vec![0i64; count * count];
        for a in 0..count {
            let ca = mat_apply(n, &cartan, &roots[a]);
            for b in 0..count {
                pair[a * count + b] = (0..n).map(|i| ca[i] * roots[b][i]).sum();
            }
        }
        let mut index = HashMap::with_capacity(count);
        for (i, r) in roots.iter().enumerate() {
            index.insert(r.clone(), i);
        }
        let neg: Vec<usize> = roots
            .iter()
            .map(|r| index[&r.iter().map(|&x| -x).collect::<Vec<i64>>()])
            .collect();
        let refl: Vec<Vec<i64>> = (0..count)
            .map(|a| {
                let ca = mat_apply(n, &cartan, &roots[a]);
                let mut m = mat_identity(n);
                for i in 0..n {
                    for j in 0..n {
                        m[i * n + j] -= roots[a][i] * ca[j];
                    }
                }
                m
            })
            .collect();
        let pos: Vec<usize> = (0..count)
            .filter(|&i| roots[i].iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .collect();
        Ok(Fast {
            n,
            roots,
            pos,
            pair,
            refl,
            neg,
            index,
        })
    }

    fn pairing(&self, a: usize, b: usize) -> i64 {
        self.pair[a * self.roots.len() + b]
    }

    /// Index of r_a(b) = b - (b,a) a.
    fn reflect(&self, a: usize, b: usize) -> usize {
        let p = self.pairing(b, a);
        let v: Vec<i64> = (0..self.n)
            .map(|i| self.roots[b][i] - p * self.roots[a][i])
            .collect();
        self.index[&v]
    }

    /// Size of the smallest root subset containing ±seeds and closed under
    /// reflections in its members.
    fn closure_len(&self, seeds: &[usize]) -> usize {
        let mut in_set = vec![false; self.roots.len()];
        let mut members: Vec<usize> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();
        for &s in seeds {
            for t in [s, self.neg[s]] {
                if !in_set[t] {
                    in_set[t] = true;
                    members.push(t);
                    queue.push(t);
                }
            }
        }
        while let Some(x) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                i += 1;
                for (a, b) in [(x, y), (y, x)] {
                    let img = self.reflect(a, b);
                    if !in_set[img] {
                        in_set[img] = true;
                        members.push(img);
                        queue.push(img);
                    }
                }
            }
        }
        members.len()
    }

    fn generates_all(&self, seeds: &[usize]) -> bool {
        self.closure_len(seeds) == self.roots.len()
    }

    fn root_of(&self, i: usize) -> Root {
        Root::from_i64(&self.roots[i])
    }
}

fn to_fast_matrix(w: &WeylElement) -> Result<Vec<i64>> {
    w.matrix()
        .to_i64()
        .ok_or_else(|| Error::Verification("Weyl element exceeds i64".into()))
}

// ---------------------------------------------------------------------------
// Admissible representation search.

struct RepSearch<'a> {
    fast: &'a Fast,
    w: Vec<i64>,
    /// Reflection length of w: rank minus fixed-space dimension.
    l: usize,
    order: Vec<usize>,
    /// Accept only representations whose diagram is a catalog shape.
    ///
    /// A single admissible element can carry representations with
    /// non-isomorphic diagrams (longer even cycles in place of squares);
    /// the classification is stated for the square-cycled catalog shapes,
    /// so the classifier skips the others.
    catalog_only: bool,
}

impl<'a> RepSearch<'a> {
    fn new(fast: &'a Fast, w: Vec<i64>, order: SearchOrder, catalog_only: bool) -> Self {
        let n = fast.n;
        let mut shifted: Vec<Vec<i64>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row: Vec<i64> = (0..n).map(|j| w[i * n + j]).collect();
            row[i] -= 1;
            shifted.push(row);
        }
        let l = rank_of(&shifted);
        let mut positions = fast.pos.clone();
        if order == SearchOrder::Reverse {
            positions.reverse();
        }
        RepSearch {
            fast,
            w,
            l,
            order: positions,
            catalog_only,
        }
    }

    fn run(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        // Prefer the balanced split and walk down; fall back to the larger
        // first groups so every split is eventually covered.
        let start = self.l.div_ceil(2);
        let mut k1_order: Vec<usize> = (0..=start).rev().collect();
        k1_order.extend((start + 1)..=self.l);
        for k1 in k1_order {
            let sigma = mat_identity(self.fast.n);
            let mut chosen = Vec::with_capacity(k1);
            if let Some(result) = self.choose_group1(0, &mut chosen, sigma, k1) {
                return Some(result);
            }
        }
        None
    }

    fn choose_group1(
        &self,
        from: usize,
        chosen: &mut Vec<usize>,
        sigma: Vec<i64>,
        k1: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == k1 {
            return self.complete(chosen, &sigma);
        }
        let needed = k1 - chosen.len();
        for at in from..self.order.len() {
            if self.order.len() - at < needed {
                break;
            }
            let cand = self.order[at];
            if chosen.iter().any(|&c| self.fast.pairing(c, cand) != 0) {
                continue;
            }
            let next_sigma = mat_mul(self.fast.n, &sigma, &self.fast.refl[cand]);
            chosen.push(cand);
            let hit = self.choose_group1(at + 1, chosen, next_sigma, k1);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    /// Group1 is fixed; peel group2 out of the (-1)-eigenspace of
    /// sigma2 = sigma1 * w when that is an involution.
    fn complete(&self, group1: &[usize], sigma1: &[i64]) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.fast.n;
        let sigma2 = mat_mul(n, sigma1, &self.w);
        if !is_identity(n, &mat_mul(n, &sigma2, &sigma2)) {
            return None;
        }
        let want = self.l - group1.len();
        // Roots in the (-1)-eigenspace, in search order.
        let eigen: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|&i| {
                mat_apply(n, &sigma2, &self.fast.roots[i])
                    .iter()
                    .zip(&self.fast.roots[i])
                    .all(|(a, b)| *a == -*b)
            })
            .collect();
        let mut group2: Vec<usize> = Vec::with_capacity(want);
        for &cand in &eigen {
            if group2.len() == want {
                break;
            }
            if group2.iter().all(|&g| self.fast.pairing(g, cand) == 0) {
                group2.push(cand);
            }
        }
        if group2.len() != want {
            return None;
        }
        let mut check = mat_identity(n);
        for &g in &group2 {
            check = mat_mul(n, &check, &self.fast.refl[g]);
        }
        if check != sigma2 {
            return None;
        }
        let all: Vec<Vec<i64>> = group1
            .iter()
            .chain(group2.iter())
            .map(|&i| self.fast.roots[i].clone())
            .collect();
        if rank_of(&all) != self.l {
            return None;
        }
        let seeds: Vec<usize> = group1.iter().chain(group2.iter()).copied().collect();
        if !self.fast.generates_all(&seeds) {
            return None;
        }
        if self.catalog_only {
            let mut edges = Vec::new();
            for (i, &a) in seeds.iter().enumerate() {
                for (j, &b) in seeds.iter().enumerate().skip(i + 1) {
                    if self.fast.pairing(a, b) != 0 {
                        edges.push((i, j));
                    }
                }
            }
            let d = CarterDiagram::new(seeds.len(), edges);
            catalog().classify(&d)?;
        }
        Some((group1.to_vec(), group2))
    }
}

/// Finds the first admissible representation of `w` in lexicographic root
/// order: a block of mutually orthogonal roots whose reflection product
/// `s1` makes `s1·w` an involution, which is then peeled into the second
/// orthogonal block from its (-1)-eigenspace.
pub fn admissible_representation(grs: &GrsPresentation, w: &WeylElement) -> Result<AdmissibleRep> {
    admissible_representation_with_order(grs, w, SearchOrder::Forward)
}

/// Same search with an explicit root processing order.
pub fn admissible_representation_with_order(
    grs: &GrsPresentation,
    w: &WeylElement,
    order: SearchOrder,
) -> Result<AdmissibleRep> {
    representation_search(grs, w, order, false)
}

/// First representation in search order whose diagram is a catalog shape.
/// This is the variant classification relies on: representations with
/// longer even cycles are skipped.
pub fn catalog_representation(
    grs: &GrsPresentation,
    w: &WeylElement,
    order: SearchOrder,
) -> Result<AdmissibleRep> {
    representation_search(grs, w, order, true)
}

fn representation_search(
    grs: &GrsPresentation,
    w: &WeylElement,
    order: SearchOrder,
    catalog_only: bool,
) -> Result<AdmissibleRep> {
    if !grs.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if !grs.preserves_form(w) {
        return Err(Error::Verification(
            "element does not preserve the Cartan form".into(),
        ));
    }
    let fast = Fast::build(grs)?;
    let wm = to_fast_matrix(w)?;
    let search = RepSearch::new(&fast, wm, order, catalog_only);
    let Some((g1, g2)) = search.run() else {
        return Err(Error::SearchExhausted);
    };
    Ok(AdmissibleRep::new(
        g1.into_iter().map(|i| fast.root_of(i)).collect(),
        g2.into_iter().map(|i| fast.root_of(i)).collect(),
    ))
}

/// Checks the four defining conditions of an admissible representation of
/// `w`: intra-group orthogonality, linear independence, reflection product
/// equal to `w`, and generation of the full root set.
pub fn verify_admissible(
    grs: &GrsPresentation,
    w: &WeylElement,
    rep: &AdmissibleRep,
) -> Result<VerifyReport> {
    if !grs.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let mut reasons = Vec::new();
    let mut orthogonal = true;
    for group in [rep.group1(), rep.group2()] {
        for i in 0..group.len() {
            for j in (i + 1)..group.len() {
                let p = grs.pairing(&group[i], &group[j]);
                if !p.is_zero() {
                    orthogonal = false;
                    reasons.push(format!(
                        "pairing of {} and {} is {p}, not 0",
                        group[i], group[j]
                    ));
                }
            }
        }
    }
    let all: Vec<&Root> = rep.roots().collect();
    let matrix = IntMatrix::from_fn(all.len(), grs.rank(), |i, j| all[i].coords()[j].clone());
    let independent = matrix.rank() == all.len();
    if !independent {
        reasons.push("roots are linearly dependent".into());
    }
    let mut product = WeylElement::identity(grs.rank());
    let mut product_matches = true;
    for root in &all {
        match grs.reflection(root) {
            Ok(r) => product = product.compose(&r),
            Err(e) => {
                product_matches = false;
                reasons.push(format!("reflection in {root} invalid: {e}"));
            }
        }
    }
    if product_matches && product != *w {
        product_matches = false;
        reasons.push("reflection product differs from the element".into());
    }
    let owned: Vec<Root> = all.iter().map(|r| (*r).clone()).collect();
    let generates = match weyl::subsystem_closure(grs, &owned) {
        Ok(closure) => {
            let full = weyl::enumerate_roots(grs)?;
            let ok = closure.len() == full.len();
            if !ok {
                reasons.push(format!(
                    "closure spans {} of {} roots",
                    closure.len(),
                    full.len()
                ));
            }
            ok
        }
        Err(e) => {
            reasons.push(format!("closure failed: {e}"));
            false
        }
    };
    Ok(VerifyReport {
        orthogonal,
        independent,
        product_matches,
        generates,
        reasons,
    })
}

/// Graph on the representation's roots (group1 then group2), with an edge
/// wherever the pairing is nonzero.
///
/// Distinct roots of a verified representation pair to -1, 0 or 1; anything
/// else is rejected because the diagram would need edge labels.
pub fn diagram_of(grs: &GrsPresentation, rep: &AdmissibleRep) -> Result<CarterDiagram> {
    let roots: Vec<&Root> = rep.roots().collect();
    let k = roots.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let p = grs.pairing(roots[i], roots[j]);
            if p.abs() > BigInt::one() {
                return Err(Error::Verification(format!(
                    "pairing of distinct representation roots is {p}; |pairing| <= 1 required"
                )));
            }
            if !p.is_zero() {
                edges.push((i, j));
            }
        }
    }
    Ok(CarterDiagram::new(k, edges))
}

/// Name of the catalog entry isomorphic to the diagram, if any.
pub fn classify_diagram(d: &CarterDiagram) -> Option<String> {
    crate::diagram::classify_diagram(d)
}

/// Classification of one irreducible component.
#[derive(Clone, Debug)]
pub struct ComponentClassification {
    /// Basis indices of the component within the input presentation.
    pub basis_indices: Vec<usize>,
    /// Catalog name of the Coxeter element's diagram.
    pub name: String,
    /// Ambient classical type forced by the diagram.
    pub ambient: ClassicalType,
    /// Enumerated root count of the component, cross-checked against the
    /// ambient type's count.
    pub root_count: usize,
}

/// Per-component classification of a positive-definite presentation.
#[derive(Clone, Debug)]
pub struct Classification {
    pub components: Vec<ComponentClassification>,
}

impl Classification {
    pub fn names(&self) -> Vec<String> {
        self.components.iter().map(|c| c.name.clone()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn single_name(&self) -> Option<&str> {
        match self.components.as_slice() {
            [only] => Some(&only.name),
            _ => None,
        }
    }
}

/// Classifies each irreducible component by the admissible diagram of its
/// Coxeter element and cross-checks the ambient type's root count.
pub fn classify_grs(grs: &GrsPresentation) -> Result<Classification> {
    if !grs.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let parts = weyl::irreducible_components(grs);
    let mut components = Vec::new();
    for indices in &parts.groups {
        if indices.len() > 8 {
            return Err(Error::RankAboveCatalog(indices.len()));
        }
        let sub = weyl::restrict_presentation(grs, indices);
        let cox = sub.coxeter_matrix();
        let rep = catalog_representation(&sub, &cox, SearchOrder::Forward)?;
        if rep.total() != sub.rank() {
            return Err(Error::Verification(format!(
                "Coxeter representation has {} roots, expected {}",
                rep.total(),
                sub.rank()
            )));
        }
        let diagram = diagram_of(&sub, &rep)?;
        let Some(entry) = catalog().classify(&diagram) else {
            return Err(Error::Verification(
                "admissible diagram not in the catalog; contradicts the classification".into(),
            ));
        };
        let root_count = weyl::enumerate_roots(&sub)?.len();
        if root_count != entry.ambient.root_count() {
            return Err(Error::Verification(format!(
                "component root count {} does not match ambient {} ({})",
                root_count,
                entry.ambient.label(),
                entry.ambient.root_count()
            )));
        }
        components.push(ComponentClassification {
            basis_indices: indices.clone(),
            name: entry.name.clone(),
            ambient: entry.ambient,
            root_count,
        });
    }
    Ok(Classification { components })
}

/// A catalog entry realized inside its ambient classical root system.
#[derive(Clone, Debug)]
pub struct Realization {
    pub name: String,
    pub ambient_type: ClassicalType,
    /// Standard presentation of the ambient classical system.
    pub ambient: GrsPresentation,
    /// The representation's roots in ambient coordinates, presentation
    /// basis order (group1 then group2).
    pub roots: Vec<Root>,
    /// The admissible element, in ambient coordinates.
    pub element: WeylElement,
    /// The system presented on those roots: Gram matrix as Cartan matrix.
    pub presentation: GrsPresentation,
    pub group1_len: usize,
}

/// Realizes a catalog entry: searches the ambient classical system for an
/// ordered root tuple matching the diagram's adjacency with an orthogonal
/// two-group split, verifies admissibility, and presents the system on
/// those roots. Deterministic first hit in lexicographic order.
pub fn realize(name: &str) -> Result<GrsPresentation> {
    realize_full(name).map(|r| r.presentation)
}

/// [`realize`] with the ambient system, roots and element exposed.
pub fn realize_full(name: &str) -> Result<Realization> {
    let entry = catalog()
        .get(name)
        .ok_or_else(|| Error::NameUnknown(name.into()))?;
    let ambient = entry.ambient.standard_presentation();
    let fast = Fast::build(&ambient)?;
    let diagram = &entry.diagram;
    let k = diagram.vertex_count();
    let (side0, side1) = diagram
        .bipartition()
        .ok_or_else(|| Error::Verification("catalog diagram is not bipartite".into()))?;
    // Group1 is the side containing vertex 0.
    let (group1_vertices, group2_vertices) = if side0.contains(&0) {
        (side0, side1)
    } else {
        (side1, side0)
    };
    // Constraint-driven placement order: repeatedly take the vertex with
    // the most already-placed neighbors.
    let mut placement: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    let start = (0..k)
        .max_by_key(|&v| (diagram.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0);
    placement.push(start);
    placed[start] = true;
    while placement.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let placed_neighbors = diagram.neighbors(v).iter().filter(|&&u| placed[u]).count();
                (placed_neighbors, std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placement.push(next);
        placed[next] = true;
    }
    let mut assignment = vec![usize::MAX; k];
    if !assign_vertices(&fast, diagram, &placement, 0, &mut assignment) {
        return Err(Error::SearchExhausted);
    }
    let basis_order: Vec<usize> = group1_vertices
        .iter()
        .chain(group2_vertices.iter())
        .copied()
        .collect();
    let roots: Vec<Root> = basis_order
        .iter()
        .map(|&v| fast.root_of(assignment[v]))
        .collect();
    let mut element = WeylElement::identity(ambient.rank());
    for root in &roots {
        element = element.compose(&ambient.reflection(root).expect("roots have norm 2"));
    }
    let gram = IntMatrix::from_fn(k, k, |i, j| ambient.pairing(&roots[i], &roots[j]));
    let presentation = GrsPresentation::new(gram)?;
    // The inclusion of the realized presentation must intertwine the two
    // Coxeter matrices; this is the morphism the realization provides.
    let root_matrix = IntMatrix::from_fn(ambient.rank(), k, |i, j| roots[j].coords()[i].clone());
    if root_matrix.mul(presentation.coxeter_matrix().matrix()) != element.matrix().mul(&root_matrix)
    {
        return Err(Error::Verification(
            "realized basis does not intertwine the Coxeter matrices".into(),
        ));
    }
    Ok(Realization {
        name: entry.name.clone(),
        ambient_type: entry.ambient,
        ambient,
        roots,
        element,
        presentation,
        group1_len: group1_vertices.len(),
    })
}

/// Backtracking assignment of positive roots to diagram vertices. A
/// candidate must reproduce the adjacency pattern against all placed roots
/// (nonzero pairing exactly on edges), stay linearly independent, and at
/// the end the tuple must generate the full system.
fn assign_vertices(
    fast: &Fast,
    diagram: &CarterDiagram,
    placement: &[usize],
    pos: usize,
    assignment: &mut [usize],
) -> bool {
    if pos == placement.len() {
        let seeds: Vec<usize> = assignment.to_vec();
        return fast.generates_all(&seeds);
    }
    let vertex = placement[pos];
    'candidates: for &cand in &fast.pos {
        for &prev in &placement[..pos] {
            if assignment[prev] == cand {
                continue 'candidates;
            }
            let want_edge = diagram.has_edge(vertex, prev);
            let p = fast.pairing(cand, assignment[prev]);
            if want_edge == (p == 0) {
                continue 'candidates;
            }
        }
        let mut rows: Vec<Vec<i64>> = placement[..pos]
            .iter()
            .map(|&v| fast.roots[assignment[v]].clone())
            .collect();
        rows.push(fast.roots[cand].clone());
        if rank_of(&rows) != pos + 1 {
            continue;
        }
        assignment[vertex] = cand;
        if assign_vertices(fast, diagram, placement, pos + 1, assignment) {
            return true;
        }
        assignment[vertex] = usize::MAX;
    }
    false
}

/// Isomorphism of irreducible positive-definite systems, decided by
/// comparing catalog names of the Coxeter diagrams.
pub fn are_isomorphic_grs(r1: &GrsPresentation, r2: &GrsPresentation) -> Result<bool> {
    let c1 = classify_irreducible(r1)?;
    let c2 = classify_irreducible(r2)?;
    Ok(c1 == c2)
}

fn classify_irreducible(grs: &GrsPresentation) -> Result<String> {
    if !grs.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let classification = classify_grs(grs)?;
    match classification.single_name() {
        Some(name) => Ok(name.to_string()),
        None => Err(Error::Reducible),
    }
}

/// Brute-force isomorphism oracle: searches directly for a lattice
/// isometry mapping roots onto roots and conjugating the Coxeter matrices.
/// Exponential in the rank; intended for ranks <= 5 as a cross-check of
/// [`are_isomorphic_grs`].
pub fn isomorphism_oracle(r1: &GrsPresentation, r2: &GrsPresentation) -> Result<bool> {
    if !r1.is_positive_definite() || !r2.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if r1.rank() != r2.rank() {
        return Ok(false);
    }
    let set2 = weyl::enumerate_roots(r2)?;
    let set1 = weyl::enumerate_roots(r1)?;
    if set1.len() != set2.len() {
        return Ok(false);
    }
    let n = r1.rank();
    let candidates: Vec<&Root> = set2.roots().iter().collect();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    Ok(search_isometry(r1, r2, &candidates, &mut images))
}

fn search_isometry(
    r1: &GrsPresentation,
    r2: &GrsPresentation,
    candidates: &[&Root],
    images: &mut Vec<usize>,
) -> bool {
    let n = r1.rank();
    if images.len() == n {
        let phi = IntMatrix::from_fn(n, n, |i, j| candidates[images[j]].coords()[i].clone());
        let det = crate::linalg::det_exact(&phi).expect("square");
        if !det.abs().is_one() {
            return false;
        }
        return phi.mul(r1.coxeter_matrix().matrix()) == r2.coxeter_matrix().matrix().mul(&phi);
    }
    let i = images.len();
    'next: for (ci, cand) in candidates.iter().enumerate() {
        for (j, &prev) in images.iter().enumerate() {
            if r2.pairing(candidates[prev], cand) != *r1.cartan().get(j, i) {
                continue 'next;
            }
        }
        images.push(ci);
        if search_isometry(r1, r2, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}
