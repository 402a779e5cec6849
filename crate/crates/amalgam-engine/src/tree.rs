//! Trees of groups and their tree products.  Vertex groups are finite
//! (power-commutator groups, possibly restricted to a subgroup) or, after a
//! contraction, tree products themselves (one level deep).  Edge groups are
//! given by generator image pairs; building the tree verifies each boundary
//! pair extends to an isomorphism between the two image subgroups.
//!
//! Normal forms follow the iterated-amalgam construction along a fixed
//! breadth-first elimination order: attaching vertex B to the product A of
//! the earlier subtree by an edge at u turns every element into
//! `a_0 · b_1 · a_1 · … · b_m · a_m` where the `b_i` are least right-coset
//! representatives of the edge image in B, interior `a_i` are least
//! representatives of the edge image in A, leftovers migrate to the front,
//! and `a_0` is arbitrary.  The representative choices make the form
//! canonical, so equality of tree-product elements is equality of forms.

use std::collections::HashMap;
use std::fmt::Write as _;

use coxeter_core::{CoxeterError, Result};
use roots_galleries::Root;
use ugroup_engine::{Bits, PcGroup, SubgroupHandle};

use crate::elem::{AmalgamElement, Elem};

/// Pair-closure size cap while validating an edge.
const EDGE_CLOSURE_CAP: usize = 1 << 14;

#[derive(Debug, Clone)]
pub enum VertexGroupKind {
    Finite {
        group: PcGroup,
        /// Sorted member set when the vertex is a proper subgroup.
        members: Option<Vec<Bits>>,
    },
    Product {
        tree: Box<TreeOfGroups>,
    },
}

#[derive(Debug, Clone)]
pub struct Vertex {
    name: String,
    kind: VertexGroupKind,
    /// Roots generating the vertex group, for the shared-root edge
    /// convention.  Empty for product vertices.
    roots: Vec<Root>,
}

impl Vertex {
    pub fn finite(name: impl Into<String>, group: PcGroup) -> Vertex {
        let roots = group.gens().to_vec();
        Vertex {
            name: name.into(),
            kind: VertexGroupKind::Finite {
                group,
                members: None,
            },
            roots,
        }
    }

    pub fn subgroup(name: impl Into<String>, group: PcGroup, handle: &SubgroupHandle) -> Vertex {
        Vertex {
            name: name.into(),
            kind: VertexGroupKind::Finite {
                group,
                members: Some(handle.members().to_vec()),
            },
            roots: handle.generator_roots().to_vec(),
        }
    }

    pub(crate) fn product(name: impl Into<String>, tree: TreeOfGroups) -> Vertex {
        Vertex {
            name: name.into(),
            kind: VertexGroupKind::Product {
                tree: Box::new(tree),
            },
            roots: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &VertexGroupKind {
        &self.kind
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn identity(&self) -> Elem {
        match &self.kind {
            VertexGroupKind::Finite { .. } => Elem::Bits(0),
            VertexGroupKind::Product { .. } => Elem::Nested(AmalgamElement::identity()),
        }
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        match (&self.kind, x, y) {
            (VertexGroupKind::Finite { group, .. }, Elem::Bits(a), Elem::Bits(b)) => {
                Elem::Bits(group.multiply(*a, *b))
            }
            (VertexGroupKind::Product { tree }, Elem::Nested(a), Elem::Nested(b)) => {
                Elem::Nested(tree.multiply(a, b))
            }
            _ => panic!("element kind does not match vertex kind"),
        }
    }

    pub fn inv(&self, x: &Elem) -> Elem {
        match (&self.kind, x) {
            (VertexGroupKind::Finite { group, .. }, Elem::Bits(a)) => Elem::Bits(group.inverse(*a)),
            (VertexGroupKind::Product { tree }, Elem::Nested(a)) => Elem::Nested(tree.inverse(a)),
            _ => panic!("element kind does not match vertex kind"),
        }
    }

    pub fn contains(&self, x: &Elem) -> bool {
        match (&self.kind, x) {
            (VertexGroupKind::Finite { group, members }, Elem::Bits(b)) => {
                (*b as u64) < group.order()
                    && members
                        .as_ref()
                        .map_or(true, |m| m.binary_search(b).is_ok())
            }
            (VertexGroupKind::Product { .. }, Elem::Nested(_)) => true,
            _ => false,
        }
    }

    /// All elements, for finite vertices.
    pub fn enumerate(&self) -> Option<Vec<Elem>> {
        match &self.kind {
            VertexGroupKind::Finite { group, members } => Some(match members {
                Some(m) => m.iter().map(|b| Elem::Bits(*b)).collect(),
                None => (0..group.order() as Bits).map(Elem::Bits).collect(),
            }),
            VertexGroupKind::Product { .. } => None,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            VertexGroupKind::Finite { group, members } => Some(match members {
                Some(m) => m.len() as u64,
                None => group.order(),
            }),
            VertexGroupKind::Product { .. } => None,
        }
    }

    pub fn group(&self) -> Option<&PcGroup> {
        match &self.kind {
            VertexGroupKind::Finite { group, .. } => Some(group),
            VertexGroupKind::Product { .. } => None,
        }
    }
}

/// Edge input: two endpoints and generator image pairs (a-side, b-side).
#[derive(Debug, Clone)]
pub struct EdgeSpec {
    pub a: usize,
    pub b: usize,
    pub gens: Vec<(Elem, Elem)>,
}

/// The shared-root convention: the edge group is generated by one
/// generator per root generating both vertex groups.
pub fn shared_root_edge(a: usize, va: &Vertex, b: usize, vb: &Vertex) -> Result<EdgeSpec> {
    let ga = va.group().ok_or_else(|| {
        CoxeterError::invalid("shared-root edges need finite vertex groups")
    })?;
    let gb = vb.group().ok_or_else(|| {
        CoxeterError::invalid("shared-root edges need finite vertex groups")
    })?;
    let mut gens = Vec::new();
    for root in va.roots() {
        if vb.roots().contains(root) {
            let ia = ga.index_of(root).ok_or_else(|| {
                CoxeterError::invalid(format!("root {} missing from vertex {}", root.serial(), va.name()))
            })?;
            let ib = gb.index_of(root).ok_or_else(|| {
                CoxeterError::invalid(format!("root {} missing from vertex {}", root.serial(), vb.name()))
            })?;
            gens.push((Elem::Bits(1 << ia), Elem::Bits(1 << ib)));
        }
    }
    Ok(EdgeSpec { a, b, gens })
}

#[derive(Debug, Clone)]
pub struct EdgeData {
    a: usize,
    b: usize,
    gens: Vec<(Elem, Elem)>,
    map_ab: HashMap<Elem, Elem>,
    map_ba: HashMap<Elem, Elem>,
    image_a: Vec<Elem>,
    image_b: Vec<Elem>,
}

impl EdgeData {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn gens(&self) -> &[(Elem, Elem)] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.map_ab.len()
    }

    /// Image subgroup on the given endpoint.
    pub fn image_at(&self, v: usize) -> &[Elem] {
        if v == self.a {
            &self.image_a
        } else {
            &self.image_b
        }
    }

    /// Transport an image element from endpoint `from` to the other side.
    pub fn transport(&self, from: usize, x: &Elem) -> Option<&Elem> {
        if from == self.a {
            self.map_ab.get(x)
        } else {
            self.map_ba.get(x)
        }
    }
}

/// Per-elimination-level data: the attaching edge, the attachment vertex,
/// and the canonical forms of the edge image inside the earlier subtree
/// product, each mapped to its transport on the new-vertex side.
#[derive(Debug, Clone)]
struct LevelAux {
    edge: usize,
    u: usize,
    /// canonical A-side form of an edge element -> raw b-side element
    ea_canon: HashMap<AmalgamElement, Elem>,
}

#[derive(Debug, Clone)]
pub struct TreeOfGroups {
    vertices: Vec<Vertex>,
    edges: Vec<EdgeData>,
    order: Vec<usize>,
    aux: Vec<Option<LevelAux>>,
    adjacency: Vec<Vec<usize>>,
}

impl TreeOfGroups {
    pub fn build(vertices: Vec<Vertex>, edge_specs: Vec<EdgeSpec>) -> Result<TreeOfGroups> {
        let n = vertices.len();
        if n == 0 {
            return Err(CoxeterError::invalid("a tree of groups needs a vertex"));
        }
        if edge_specs.len() != n - 1 {
            return Err(CoxeterError::invalid(format!(
                "{} vertices need {} edges, got {}",
                n,
                n - 1,
                edge_specs.len()
            )));
        }

        let mut edges = Vec::with_capacity(edge_specs.len());
        for spec in &edge_specs {
            if spec.a >= n || spec.b >= n || spec.a == spec.b {
                return Err(CoxeterError::invalid("edge endpoints out of range"));
            }
            edges.push(close_edge(spec, &vertices)?);
        }

        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adjacency[e.a].push(i);
            adjacency[e.b].push(i);
        }

        // Breadth-first elimination order from vertex 0; a revisit means a
        // cycle, an unreachable vertex a disconnection.
        let mut order = vec![0usize];
        let mut level_of = vec![usize::MAX; n];
        level_of[0] = 0;
        let mut attach: Vec<Option<(usize, usize)>> = vec![None];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &ei in &adjacency[v] {
                let e = &edges[ei];
                let other = if e.a == v { e.b } else { e.a };
                if level_of[other] != usize::MAX {
                    if attach[level_of[v]].map(|(x, _)| x) != Some(ei) {
                        return Err(CoxeterError::invalid("the graph has a cycle"));
                    }
                    continue;
                }
                level_of[other] = order.len();
                order.push(other);
                attach.push(Some((ei, v)));
            }
        }
        if order.len() != n {
            return Err(CoxeterError::invalid("the graph is not connected"));
        }

        let mut tree = TreeOfGroups {
            vertices,
            edges,
            order,
            aux: vec![None; n],
            adjacency,
        };
        // Canonical forms of edge images inside partial products are
        // computable level by level: level k only consults levels below.
        for k in 1..n {
            let (ei, u) = attach[k].unwrap();
            let b = tree.order[k];
            let mut ea_canon = HashMap::new();
            let e = &tree.edges[ei];
            debug_assert_ne!(b, u);
            let u_side: Vec<(Elem, Elem)> = e
                .image_at(u)
                .iter()
                .map(|x| (x.clone(), e.transport(u, x).unwrap().clone()))
                .collect();
            for (u_raw, b_raw) in u_side {
                let form = AmalgamElement {
                    syllables: tree.canon_level(k - 1, vec![(u, u_raw)]),
                };
                ea_canon.insert(form, b_raw);
            }
            tree.aux[k] = Some(LevelAux {
                edge: ei,
                u,
                ea_canon,
            });
        }
        Ok(tree)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name() == name)
    }

    /// Validate a raw word and bring it to canonical form.
    pub fn reduce(&self, word: &[(usize, Elem)]) -> Result<AmalgamElement> {
        let mut w = Vec::with_capacity(word.len());
        for (v, g) in word {
            if *v >= self.vertices.len() {
                return Err(CoxeterError::invalid(format!("no vertex {}", v)));
            }
            let vertex = &self.vertices[*v];
            let g = match (vertex.kind(), g) {
                (VertexGroupKind::Product { tree }, Elem::Nested(x)) => {
                    Elem::Nested(tree.reduce(&x.syllables)?)
                }
                _ => g.clone(),
            };
            if !vertex.contains(&g) {
                return Err(CoxeterError::invalid(format!(
                    "element {} does not belong to vertex {}",
                    g,
                    vertex.name()
                )));
            }
            if g != vertex.identity() {
                w.push((*v, g));
            }
        }
        Ok(AmalgamElement {
            syllables: self.canon_level(self.order.len() - 1, w),
        })
    }

    pub fn identity(&self) -> AmalgamElement {
        AmalgamElement::identity()
    }

    /// Product of two canonical forms.
    pub fn multiply(&self, x: &AmalgamElement, y: &AmalgamElement) -> AmalgamElement {
        let mut word = x.syllables.clone();
        word.extend(y.syllables.iter().cloned());
        AmalgamElement {
            syllables: self.canon_level(self.order.len() - 1, word),
        }
    }

    pub fn inverse(&self, x: &AmalgamElement) -> AmalgamElement {
        let word: Vec<(usize, Elem)> = x
            .syllables
            .iter()
            .rev()
            .map(|(v, g)| (*v, self.vertices[*v].inv(g)))
            .collect();
        AmalgamElement {
            syllables: self.canon_level(self.order.len() - 1, word),
        }
    }

    /// If the element lies in the image of a vertex group, return it as an
    /// element of that group.  Edge-group elements transport along the tree.
    pub fn vertex_membership(&self, x: &AmalgamElement, v: usize) -> Option<Elem> {
        if x.syllables.is_empty() {
            return Some(self.vertices[v].identity());
        }
        if x.syllables.len() > 1 {
            return None;
        }
        let (start, mut g) = (x.syllables[0].0, x.syllables[0].1.clone());
        let mut cur = start;
        for ei in self.path(start, v)? {
            let e = &self.edges[ei];
            g = e.transport(cur, &g)?.clone();
            cur = if e.a == cur { e.b } else { e.a };
        }
        Some(g)
    }

    /// Edge indices along the unique path between two vertices.
    fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(Vec::new());
        }
        let n = self.vertices.len();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &ei in &self.adjacency[v] {
                let e = &self.edges[ei];
                let other = if e.a == v { e.b } else { e.a };
                if !seen[other] {
                    seen[other] = true;
                    prev[other] = Some(ei);
                    queue.push_back(other);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let ei = prev[cur]?;
            path.push(ei);
            let e = &self.edges[ei];
            cur = if e.a == cur { e.b } else { e.a };
        }
        path.reverse();
        Some(path)
    }

    /// Canonical form at elimination level `k`: the word may only mention
    /// vertices of levels `0..=k`.
    fn canon_level(&self, k: usize, word: Vec<(usize, Elem)>) -> Vec<(usize, Elem)> {
        if word.is_empty() {
            return word;
        }
        if k == 0 {
            let v = self.order[0];
            let vx = &self.vertices[v];
            let mut acc = vx.identity();
            for (vv, g) in &word {
                debug_assert_eq!(*vv, v, "syllable above the current level");
                acc = vx.mul(&acc, g);
            }
            return if acc == vx.identity() {
                Vec::new()
            } else {
                vec![(v, acc)]
            };
        }
        let b = self.order[k];
        if !word.iter().any(|(v, _)| *v == b) {
            return self.canon_level(k - 1, word);
        }
        let aux = self.aux[k].as_ref().unwrap();
        let e = &self.edges[aux.edge];
        let u = aux.u;
        let vb = &self.vertices[b];

        // Alternating blocks: a_chunks has one more entry than b_elems.
        let mut a_chunks: Vec<Vec<(usize, Elem)>> = vec![Vec::new()];
        let mut b_elems: Vec<Elem> = Vec::new();
        for (v, g) in word {
            if v == b {
                b_elems.push(g);
                a_chunks.push(Vec::new());
            } else {
                a_chunks.last_mut().unwrap().push((v, g));
            }
        }
        for c in &mut a_chunks {
            let taken = std::mem::take(c);
            *c = self.canon_level(k - 1, taken);
        }

        // Reduction: merge trivial interlayers, absorb edge-group syllables.
        'reduce: loop {
            for i in 0..b_elems.len() {
                // Merge adjacent B-syllables across a trivial or edge-valued
                // interior chunk.
                if b_elems[i] == vb.identity() {
                    b_elems.remove(i);
                    let right = a_chunks.remove(i + 1);
                    let mut merged = std::mem::take(&mut a_chunks[i]);
                    merged.extend(right);
                    a_chunks[i] = self.canon_level(k - 1, merged);
                    continue 'reduce;
                }
                if let Some(t) = e.transport(b, &b_elems[i]) {
                    let t = t.clone();
                    b_elems.remove(i);
                    let right = a_chunks.remove(i + 1);
                    let mut merged = std::mem::take(&mut a_chunks[i]);
                    merged.push((u, t));
                    merged.extend(right);
                    a_chunks[i] = self.canon_level(k - 1, merged);
                    continue 'reduce;
                }
                if i + 1 < b_elems.len() {
                    let interior = AmalgamElement {
                        syllables: a_chunks[i + 1].clone(),
                    };
                    if let Some(t_b) = aux.ea_canon.get(&interior) {
                        let merged_b = vb.mul(&vb.mul(&b_elems[i], t_b), &b_elems[i + 1]);
                        b_elems[i] = merged_b;
                        b_elems.remove(i + 1);
                        a_chunks.remove(i + 1);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if b_elems.is_empty() {
            let mut whole = Vec::new();
            for c in a_chunks {
                whole.extend(c);
            }
            return self.canon_level(k - 1, whole);
        }

        // Right-to-left coset normalization; leftovers migrate to the front.
        let m = b_elems.len();
        let image_u = e.image_at(u).to_vec();
        let image_b = e.image_at(b).to_vec();
        let vu = &self.vertices[u];
        for i in (0..m).rev() {
            // Chunk to the right of b_elems[i]; an empty chunk can only be
            // the trailing one and needs no representative.
            let chunk = std::mem::take(&mut a_chunks[i + 1]);
            if !chunk.is_empty() {
                let mut best = chunk.clone();
                let mut best_eps: Option<&Elem> = None;
                for eps in &image_u {
                    if *eps == vu.identity() {
                        continue;
                    }
                    let mut cand_word = vec![(u, eps.clone())];
                    cand_word.extend(chunk.iter().cloned());
                    let cand = self.canon_level(k - 1, cand_word);
                    if form_less(&cand, &best) {
                        best = cand;
                        best_eps = Some(eps);
                    }
                }
                if let Some(eps) = best_eps {
                    // chunk = eps^{-1} · best; push the transported leftover
                    // into the B-syllable on the left.
                    let inv = vu.inv(eps);
                    let phi = e.transport(u, &inv).expect("image closed under inverse").clone();
                    b_elems[i] = vb.mul(&b_elems[i], &phi);
                }
                a_chunks[i + 1] = best;
            }
            // Now the B-syllable itself.
            let bcur = b_elems[i].clone();
            let mut best = bcur.clone();
            let mut best_eps: Option<&Elem> = None;
            for eps in &image_b {
                if *eps == vb.identity() {
                    continue;
                }
                let cand = vb.mul(eps, &bcur);
                if cand < best {
                    best = cand;
                    best_eps = Some(eps);
                }
            }
            if let Some(eps) = best_eps {
                let inv = vb.inv(eps);
                let psi = e.transport(b, &inv).expect("image closed under inverse").clone();
                a_chunks[i].push((u, psi));
                let taken = std::mem::take(&mut a_chunks[i]);
                a_chunks[i] = self.canon_level(k - 1, taken);
            }
            b_elems[i] = best;
        }

        let mut out = a_chunks.remove(0);
        for (i, b_el) in b_elems.into_iter().enumerate() {
            out.push((b, b_el));
            out.extend(std::mem::take(&mut a_chunks[i]));
        }
        out
    }

    /// DOT rendering: vertex names with orders, edges labeled by edge-group
    /// order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph tree {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let order = v
                .order()
                .map(|o| o.to_string())
                .unwrap_or_else(|| "∞?".into());
            let _ = writeln!(s, "  v{} [label=\"{} (|{}|)\"];", i, v.name(), order);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.a, e.b, e.order());
        }
        s.push_str("}\n");
        s
    }
}

/// Shortest-then-lexicographic comparison used for least representatives.
fn form_less(a: &[(usize, Elem)], b: &[(usize, Elem)]) -> bool {
    (a.len(), a) < (b.len(), b)
}

fn close_edge(spec: &EdgeSpec, vertices: &[Vertex]) -> Result<EdgeData> {
    let va = &vertices[spec.a];
    let vb = &vertices[spec.b];
    for (ga, gb) in &spec.gens {
        if !va.contains(ga) {
            return Err(CoxeterError::invalid(format!(
                "edge generator {} is not an element of vertex {}",
                ga,
                va.name()
            )));
        }
        if !vb.contains(gb) {
            return Err(CoxeterError::invalid(format!(
                "edge generator {} is not an element of vertex {}",
                gb,
                vb.name()
            )));
        }
    }
    let ida = va.identity();
    let idb = vb.identity();
    let mut map_ab: HashMap<Elem, Elem> = HashMap::new();
    map_ab.insert(ida.clone(), idb.clone());
    let mut frontier = vec![(ida, idb)];
    while let Some((xa, xb)) = frontier.pop() {
        for (ga, gb) in &spec.gens {
            let ya = va.mul(&xa, ga);
            let yb = vb.mul(&xb, gb);
            match map_ab.get(&ya) {
                Some(existing) => {
                    if *existing != yb {
                        return Err(CoxeterError::invalid(format!(
                            "boundary maps of edge {}--{} disagree at {}: {} versus {}",
                            va.name(),
                            vb.name(),
                            ya,
                            existing,
                            yb
                        )));
                    }
                }
                None => {
                    map_ab.insert(ya.clone(), yb.clone());
                    if map_ab.len() > EDGE_CLOSURE_CAP {
                        return Err(CoxeterError::limit(
                            "edge group closure",
                            map_ab.len(),
                            EDGE_CLOSURE_CAP,
                        ));
                    }
                    frontier.push((ya, yb));
                }
            }
        }
    }
    let mut map_ba = HashMap::with_capacity(map_ab.len());
    for (a, b) in &map_ab {
        if map_ba.insert(b.clone(), a.clone()).is_some() {
            return Err(CoxeterError::invalid(format!(
                "boundary map of edge {}--{} is not injective at {}",
                va.name(),
                vb.name(),
                b
            )));
        }
    }
    let mut image_a: Vec<Elem> = map_ab.keys().cloned().collect();
    let mut image_b: Vec<Elem> = map_ba.keys().cloned().collect();
    image_a.sort();
    image_b.sort();
    Ok(EdgeData {
        a: spec.a,
        b: spec.b,
        gens: spec.gens.clone(),
        map_ab,
        map_ba,
        image_a,
        image_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use blueprints::Blueprint;
    use coxeter_core::{Gen, GroupElement};
    use ugroup_engine::{closure, subgroup_for};

    fn el(word: &str) -> GroupElement {
        GroupElement::parse(word).unwrap()
    }

    fn ugroup(word: &str) -> PcGroup {
        PcGroup::build(&Blueprint::kac_moody(), &el(word)).unwrap()
    }

    /// Two involutions with a trivial edge group.
    fn dihedral() -> TreeOfGroups {
        let a = Vertex::finite("A", ugroup("s"));
        let b = Vertex::finite("B", ugroup("t"));
        TreeOfGroups::build(
            vec![a, b],
            vec![EdgeSpec {
                a: 0,
                b: 1,
                gens: Vec::new(),
            }],
        )
        .unwrap()
    }

    /// Two octagon wall groups glued over their one shared simple root.
    fn segment() -> TreeOfGroups {
        let a = Vertex::finite("U_stst", ugroup("stst"));
        let b = Vertex::finite("U_rsrs", ugroup("rsrs"));
        let e = shared_root_edge(0, &a, 1, &b).unwrap();
        assert_eq!(e.gens.len(), 1);
        TreeOfGroups::build(vec![a, b], vec![e]).unwrap()
    }

    #[test]
    fn free_product_powers_never_collapse() {
        let tree = dihedral();
        let a = tree.reduce(&[(0, Elem::Bits(1))]).unwrap();
        let b = tree.reduce(&[(1, Elem::Bits(1))]).unwrap();
        assert_eq!(tree.multiply(&a, &a), tree.identity());
        let ab = tree.multiply(&a, &b);
        let mut x = tree.identity();
        for k in 1..=8 {
            x = tree.multiply(&x, &ab);
            assert_eq!(x.syllable_count(), 2 * k);
        }
        let inv = tree.inverse(&x);
        assert_eq!(inv.syllable_count(), 16);
        assert_eq!(tree.multiply(&x, &inv), tree.identity());
        assert_eq!(tree.multiply(&inv, &x), tree.identity());
    }

    #[test]
    fn edge_elements_park_at_the_root_vertex() {
        let tree = segment();
        // The shared root is the first generator on both sides.
        let ia = tree.vertices[0].group().unwrap();
        let ib = tree.vertices[1].group().unwrap();
        let bit_a = 1 << ia.index_of(&tree.vertices[0].roots()[0]).unwrap();
        let shared = tree.vertices[1]
            .roots()
            .iter()
            .find(|r| tree.vertices[0].roots().contains(r))
            .unwrap()
            .clone();
        let bit_b = 1 << ib.index_of(&shared).unwrap();
        let from_b = tree.reduce(&[(1, Elem::Bits(bit_b))]).unwrap();
        let from_a = tree.reduce(&[(0, Elem::Bits(bit_a))]).unwrap();
        assert_eq!(from_a, from_b);
        assert_eq!(from_a.syllable_count(), 1);
        assert_eq!(from_a.syllables()[0].0, 0);
        // Transport back out of the parked form.
        assert_eq!(
            tree.vertex_membership(&from_a, 1),
            Some(Elem::Bits(bit_b))
        );
        assert_eq!(
            tree.vertex_membership(&from_a, 0),
            Some(Elem::Bits(bit_a))
        );
    }

    #[test]
    fn mixed_products_are_associative() {
        let tree = segment();
        let mut sample = vec![tree.identity()];
        for (v, bits) in [(0usize, 0b0101u16), (1, 0b0011), (0, 0b1000), (1, 0b1110)] {
            sample.push(tree.reduce(&[(v, Elem::Bits(bits))]).unwrap());
        }
        let mut longer = Vec::new();
        for x in &sample {
            for y in &sample {
                longer.push(tree.multiply(x, y));
            }
        }
        sample.extend(longer);
        for x in &sample {
            for y in &sample {
                for z in &sample {
                    let xy_z = tree.multiply(&tree.multiply(x, y), z);
                    let x_yz = tree.multiply(x, &tree.multiply(y, z));
                    assert_eq!(xy_z, x_yz, "({})·({})·({})", x, y, z);
                }
            }
        }
        for x in &sample {
            let inv = tree.inverse(x);
            assert_eq!(tree.multiply(x, &inv), tree.identity());
        }
    }

    #[test]
    fn two_syllable_elements_belong_to_no_vertex() {
        let tree = segment();
        let a = tree.reduce(&[(0, Elem::Bits(0b1000))]).unwrap();
        let b = tree.reduce(&[(1, Elem::Bits(0b0001))]).unwrap();
        let ab = tree.multiply(&a, &b);
        assert_eq!(ab.syllable_count(), 2);
        assert_eq!(tree.vertex_membership(&ab, 0), None);
        assert_eq!(tree.vertex_membership(&ab, 1), None);
    }

    #[test]
    fn intersection_of_the_wall_groups_is_the_shared_root_group() {
        let tree = segment();
        let a = tree.vertices[0].group().unwrap().clone();
        let b = tree.vertices[1].group().unwrap().clone();
        let mut in_both = Vec::new();
        for x in 0..a.order() as Bits {
            let fa = tree.reduce(&[(0, Elem::Bits(x))]).unwrap();
            for y in 0..b.order() as Bits {
                let fb = tree.reduce(&[(1, Elem::Bits(y))]).unwrap();
                if fa == fb {
                    in_both.push((x, y));
                }
            }
        }
        // Only the identity and the shared-root generator coincide.
        assert_eq!(in_both.len(), 2);
    }

    #[test]
    fn boundary_maps_that_disagree_are_rejected() {
        let a = Vertex::finite("A", ugroup("stst"));
        let b = Vertex::finite("B", ugroup("rsrs"));
        // A commuting pair cannot map onto the extreme pair, which has a
        // nontrivial commutator.
        let spec = EdgeSpec {
            a: 0,
            b: 1,
            gens: vec![
                (Elem::Bits(0b0001), Elem::Bits(0b0001)),
                (Elem::Bits(0b0010), Elem::Bits(0b1000)),
            ],
        };
        let err = TreeOfGroups::build(vec![a, b], vec![spec]).unwrap_err();
        assert!(err.to_string().contains("disagree"), "{}", err);
    }

    #[test]
    fn non_injective_boundary_maps_are_rejected() {
        let a = Vertex::finite("A", ugroup("st"));
        let b = Vertex::finite("B", ugroup("rs"));
        let spec = EdgeSpec {
            a: 0,
            b: 1,
            gens: vec![
                (Elem::Bits(0b01), Elem::Bits(0b01)),
                (Elem::Bits(0b10), Elem::Bits(0b01)),
            ],
        };
        let err = TreeOfGroups::build(vec![a, b], vec![spec]).unwrap_err();
        assert!(err.to_string().contains("not injective"), "{}", err);
    }

    #[test]
    fn cycles_and_disconnections_are_rejected() {
        let mk = || {
            vec![
                Vertex::finite("A", ugroup("s")),
                Vertex::finite("B", ugroup("s")),
                Vertex::finite("C", ugroup("s")),
            ]
        };
        let gens = vec![(Elem::Bits(1), Elem::Bits(1))];
        let err = TreeOfGroups::build(
            mk(),
            vec![
                EdgeSpec { a: 0, b: 1, gens: gens.clone() },
                EdgeSpec { a: 0, b: 1, gens: gens.clone() },
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("cycle"), "{}", err);
        let err = TreeOfGroups::build(
            mk(),
            vec![
                EdgeSpec { a: 0, b: 1, gens: gens.clone() },
                EdgeSpec { a: 2, b: 2, gens: gens.clone() },
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("out of range"), "{}", err);
    }

    #[test]
    fn subgroup_vertices_restrict_membership() {
        let g = ugroup("stst");
        let v = ugroup_engine::v_subgroup(&g, Gen::S, Gen::T).unwrap();
        let vert = Vertex::subgroup("V", g, &v);
        assert_eq!(vert.order(), Some(8));
        assert!(vert.contains(&Elem::Bits(0b0110)));
        assert!(!vert.contains(&Elem::Bits(0b0010)));
        assert_eq!(vert.enumerate().unwrap().len(), 8);
    }

    #[test]
    fn prefix_subgroups_intersect_across_the_edge() {
        // U_{sts} sits inside U_{stst}; only its part over the shared root
        // survives into U_{rsrs}.
        let tree = segment();
        let a = tree.vertices[0].group().unwrap().clone();
        let u_sts = subgroup_for(&a, &el("sts")).unwrap();
        let b = tree.vertices[1].group().unwrap().clone();
        let shared = tree.vertices[1]
            .roots()
            .iter()
            .position(|r| tree.vertices[0].roots().contains(r))
            .unwrap();
        let u_shared = closure(&b, &[shared]);
        let forms_a: Vec<AmalgamElement> = u_sts
            .members()
            .iter()
            .map(|m| tree.reduce(&[(0, Elem::Bits(*m))]).unwrap())
            .collect();
        let forms_b: Vec<AmalgamElement> = u_shared
            .members()
            .iter()
            .map(|m| tree.reduce(&[(1, Elem::Bits(*m))]).unwrap())
            .collect();
        for f in &forms_b {
            assert!(forms_a.contains(f), "{} should lie in U_sts", f);
        }
    }

    #[test]
    fn dot_output_names_vertices_and_edge_orders() {
        let tree = segment();
        let dot = tree.to_dot();
        assert!(dot.contains("U_stst"));
        assert!(dot.contains("(|16|)"));
        assert!(dot.contains("label=\"2\""));
    }
}
