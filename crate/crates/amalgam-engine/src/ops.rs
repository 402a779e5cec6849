//! Subgroup closures and intersections at bounded syllable length, and the
//! two structural moves on trees of groups: contracting connected parts
//! into product vertices (with the inverse flattening) and folding an edge
//! through an intermediate subgroup.

use std::collections::BTreeSet;

use coxeter_core::{CoxeterError, Result};
use ugroup_engine::Bits;

use crate::elem::{AmalgamElement, Elem};
use crate::tree::{EdgeSpec, TreeOfGroups, Vertex, VertexGroupKind};

/// Breadth-first closure of a generated subset, pruned at the syllable
/// bound.  Within the bound the result is exact for subgroups all of whose
/// elements stay below the bound (the finite-subgroup cases downstream).
pub fn closure_bounded(
    tree: &TreeOfGroups,
    gens: &[AmalgamElement],
    syllable_bound: usize,
    cap: usize,
) -> Result<BTreeSet<AmalgamElement>> {
    let mut all: Vec<AmalgamElement> = Vec::new();
    for g in gens {
        all.push(g.clone());
        all.push(tree.inverse(g));
    }
    let mut seen: BTreeSet<AmalgamElement> = BTreeSet::new();
    seen.insert(AmalgamElement::identity());
    let mut frontier: Vec<AmalgamElement> = vec![AmalgamElement::identity()];
    while let Some(x) = frontier.pop() {
        for g in &all {
            let y = tree.multiply(&x, g);
            if y.syllable_count() > syllable_bound {
                continue;
            }
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(CoxeterError::limit("amalgam closure", seen.len(), cap));
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Elements of ⟨H⟩ ∩ ⟨K⟩ expressible within the syllable bound.
pub fn intersect_subgroups(
    tree: &TreeOfGroups,
    h_gens: &[AmalgamElement],
    k_gens: &[AmalgamElement],
    syllable_bound: usize,
    cap: usize,
) -> Result<Vec<AmalgamElement>> {
    let h = closure_bounded(tree, h_gens, syllable_bound, cap)?;
    let k = closure_bounded(tree, k_gens, syllable_bound, cap)?;
    Ok(h.intersection(&k).cloned().collect())
}

/// How original vertices sit inside a contracted tree.
#[derive(Debug, Clone)]
pub struct ContractMap {
    part_of: Vec<usize>,
    local_of: Vec<usize>,
    singleton: Vec<bool>,
}

impl ContractMap {
    /// Rewrite a word over the original tree as a word over the contracted
    /// tree.
    pub fn lift_word(&self, word: &[(usize, Elem)]) -> Vec<(usize, Elem)> {
        word.iter()
            .map(|(v, g)| {
                let p = self.part_of[*v];
                if self.singleton[*v] {
                    (p, g.clone())
                } else {
                    (
                        p,
                        Elem::Nested(AmalgamElement::single(self.local_of[*v], g.clone())),
                    )
                }
            })
            .collect()
    }
}

/// Contract each part (a connected set of vertices) to a single vertex
/// whose group is the part's tree product.  All vertices must be finite;
/// flatten first when contracting twice.
pub fn contract(tree: &TreeOfGroups, parts: &[Vec<usize>]) -> Result<(TreeOfGroups, ContractMap)> {
    let n = tree.vertices().len();
    for v in tree.vertices() {
        if matches!(v.kind(), VertexGroupKind::Product { .. }) {
            return Err(CoxeterError::invalid(
                "contract expects a flattened tree; call flatten first",
            ));
        }
    }
    let mut part_of = vec![usize::MAX; n];
    let mut local_of = vec![usize::MAX; n];
    for (p, part) in parts.iter().enumerate() {
        for (loc, &v) in part.iter().enumerate() {
            if v >= n || part_of[v] != usize::MAX {
                return Err(CoxeterError::invalid("parts must partition the vertices"));
            }
            part_of[v] = p;
            local_of[v] = loc;
        }
    }
    if part_of.iter().any(|&p| p == usize::MAX) {
        return Err(CoxeterError::invalid("parts must cover every vertex"));
    }
    // Connectivity of each part via the induced edges.
    for (p, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(CoxeterError::invalid("empty part"));
        }
        let mut reached = vec![false; part.len()];
        reached[0] = true;
        let mut frontier = vec![part[0]];
        while let Some(v) = frontier.pop() {
            for e in tree.edges() {
                let (a, b) = e.endpoints();
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && part_of[y] == p {
                        let loc = local_of[y];
                        if !reached[loc] {
                            reached[loc] = true;
                            frontier.push(y);
                        }
                    }
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(CoxeterError::invalid(format!("part {} is not connected", p)));
        }
    }

    let singleton: Vec<bool> = (0..n).map(|v| parts[part_of[v]].len() == 1).collect();

    // Build the part subtrees.
    let mut part_trees: Vec<Option<TreeOfGroups>> = Vec::new();
    let mut new_vertices: Vec<Vertex> = Vec::new();
    for part in parts {
        if part.len() == 1 {
            part_trees.push(None);
            new_vertices.push(tree.vertices()[part[0]].clone());
            continue;
        }
        let vertices: Vec<Vertex> = part.iter().map(|&v| tree.vertices()[v].clone()).collect();
        let mut specs = Vec::new();
        for e in tree.edges() {
            let (a, b) = e.endpoints();
            if part.contains(&a) && part.contains(&b) {
                specs.push(EdgeSpec {
                    a: local_of[a],
                    b: local_of[b],
                    gens: e.gens().to_vec(),
                });
            }
        }
        let sub = TreeOfGroups::build(vertices, specs)?;
        let name = part
            .iter()
            .map(|&v| tree.vertices()[v].name().to_string())
            .collect::<Vec<_>>()
            .join("+");
        new_vertices.push(Vertex::product(name, sub.clone()));
        part_trees.push(Some(sub));
    }

    // Cross edges, with images wrapped into the part products.
    let map = ContractMap {
        part_of,
        local_of,
        singleton,
    };
    let mut new_edges = Vec::new();
    for e in tree.edges() {
        let (a, b) = e.endpoints();
        let (pa, pb) = (map.part_of[a], map.part_of[b]);
        if pa == pb {
            continue;
        }
        let mut gens = Vec::new();
        for (ga, gb) in e.gens() {
            let wrap = |p: usize, v: usize, g: &Elem| -> Result<Elem> {
                Ok(if map.singleton[v] {
                    g.clone()
                } else {
                    let sub = part_trees[p].as_ref().unwrap();
                    Elem::Nested(sub.reduce(&[(map.local_of[v], g.clone())])?)
                })
            };
            gens.push((wrap(pa, a, ga)?, wrap(pb, b, gb)?));
        }
        new_edges.push(EdgeSpec {
            a: pa,
            b: pb,
            gens,
        });
    }
    let contracted = TreeOfGroups::build(new_vertices, new_edges)?;
    Ok((contracted, map))
}

/// Replace every product vertex by its underlying subtree.  Returns the new
/// tree and, per original vertex, the new indices of its constituents.
pub fn flatten(tree: &TreeOfGroups) -> Result<(TreeOfGroups, Vec<Vec<usize>>)> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edge_specs: Vec<EdgeSpec> = Vec::new();
    let mut placement: Vec<Vec<usize>> = Vec::new();
    for v in tree.vertices() {
        match v.kind() {
            VertexGroupKind::Finite { .. } => {
                placement.push(vec![vertices.len()]);
                vertices.push(v.clone());
            }
            VertexGroupKind::Product { tree: sub } => {
                let base = vertices.len();
                placement.push((base..base + sub.vertices().len()).collect());
                for sv in sub.vertices() {
                    vertices.push(sv.clone());
                }
                for e in sub.edges() {
                    let (a, b) = e.endpoints();
                    edge_specs.push(EdgeSpec {
                        a: base + a,
                        b: base + b,
                        gens: e.gens().to_vec(),
                    });
                }
            }
        }
    }
    for e in tree.edges() {
        let (a, b) = e.endpoints();
        let mut gens = Vec::new();
        for (ga, gb) in e.gens() {
            let unwrap = |v: usize, g: &Elem| -> Result<(usize, Elem)> {
                match (tree.vertices()[v].kind(), g) {
                    (VertexGroupKind::Finite { .. }, _) => Ok((placement[v][0], g.clone())),
                    (VertexGroupKind::Product { .. }, Elem::Nested(x)) => {
                        if x.syllable_count() != 1 {
                            return Err(CoxeterError::invalid(
                                "edge image is not a vertex element; cannot flatten",
                            ));
                        }
                        let (local, inner) = (&x.syllables()[0].0, x.syllables()[0].1.clone());
                        Ok((placement[v][*local], inner))
                    }
                    _ => Err(CoxeterError::invalid("element kind mismatch while flattening")),
                }
            };
            gens.push((unwrap(a, ga)?, unwrap(b, gb)?));
        }
        // All generators of one edge must re-anchor at the same vertex pair.
        let mut anchor: Option<(usize, usize)> = None;
        let mut plain = Vec::new();
        for ((va, ga), (vb, gb)) in gens {
            match anchor {
                None => anchor = Some((va, vb)),
                Some((xa, xb)) => {
                    if (xa, xb) != (va, vb) {
                        return Err(CoxeterError::invalid(
                            "edge generators anchor at different vertices; cannot flatten",
                        ));
                    }
                }
            }
            plain.push((ga, gb));
        }
        // A trivial edge group anchors at the first constituents.
        let (va, vb) = anchor.unwrap_or((placement[a][0], placement[b][0]));
        edge_specs.push(EdgeSpec {
            a: va,
            b: vb,
            gens: plain,
        });
    }
    Ok((TreeOfGroups::build(vertices, edge_specs)?, placement))
}

/// Subdivide edge `e` through an intermediate subgroup `H` of the vertex
/// group at `origin`: origin —(H)— new vertex —(old edge group)— target.
pub fn fold(
    tree: &TreeOfGroups,
    edge: usize,
    origin: usize,
    h_members: &[Bits],
) -> Result<TreeOfGroups> {
    let e = tree
        .edges()
        .get(edge)
        .ok_or_else(|| CoxeterError::invalid("no such edge"))?;
    let (a, b) = e.endpoints();
    if origin != a && origin != b {
        return Err(CoxeterError::invalid("origin is not an endpoint of the edge"));
    }
    let target = if origin == a { b } else { a };
    let vo = &tree.vertices()[origin];
    let group = vo
        .group()
        .ok_or_else(|| CoxeterError::invalid("folding needs a finite origin vertex"))?;

    let mut h: Vec<Bits> = h_members.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.binary_search(&0).is_err() {
        return Err(CoxeterError::invalid("H must contain the identity"));
    }
    for &x in &h {
        if !vo.contains(&Elem::Bits(x)) {
            return Err(CoxeterError::invalid("H is not contained in the origin group"));
        }
        for &y in &h {
            if h.binary_search(&group.multiply(x, y)).is_err() {
                return Err(CoxeterError::invalid("H is not closed under multiplication"));
            }
        }
    }
    for img in e.image_at(origin) {
        let bits = img
            .bits()
            .ok_or_else(|| CoxeterError::invalid("folding needs a finite edge image"))?;
        if h.binary_search(&bits).is_err() {
            return Err(CoxeterError::invalid(
                "H does not contain the edge group image",
            ));
        }
    }

    let mut vertices: Vec<Vertex> = tree.vertices().to_vec();
    let handle = ugroup_engine::SubgroupHandle::from_members(h.clone());
    let x_idx = vertices.len();
    vertices.push(Vertex::subgroup(
        format!("{}|fold", vo.name()),
        group.clone(),
        &handle,
    ));

    let mut specs: Vec<EdgeSpec> = Vec::new();
    for (i, old) in tree.edges().iter().enumerate() {
        if i == edge {
            continue;
        }
        let (oa, ob) = old.endpoints();
        specs.push(EdgeSpec {
            a: oa,
            b: ob,
            gens: old.gens().to_vec(),
        });
    }
    // origin —(all of H)— x
    specs.push(EdgeSpec {
        a: origin,
        b: x_idx,
        gens: h
            .iter()
            .filter(|&&m| m != 0)
            .map(|&m| (Elem::Bits(m), Elem::Bits(m)))
            .collect(),
    });
    // x —(old edge group)— target
    let mut through = Vec::new();
    for (ga, gb) in e.gens() {
        let (on_origin, on_target) = if origin == a {
            (ga.clone(), gb.clone())
        } else {
            (gb.clone(), ga.clone())
        };
        through.push((on_origin, on_target));
    }
    specs.push(EdgeSpec {
        a: x_idx,
        b: target,
        gens: through,
    });
    TreeOfGroups::build(vertices, specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use blueprints::Blueprint;
    use coxeter_core::GroupElement;
    use ugroup_engine::{subgroup_for, PcGroup};

    use crate::tree::shared_root_edge;

    fn el(word: &str) -> GroupElement {
        GroupElement::parse(word).unwrap()
    }

    fn ugroup(word: &str) -> PcGroup {
        PcGroup::build(&Blueprint::kac_moody(), &el(word)).unwrap()
    }

    /// U_stst — U_rsrs — U_rtrt, glued over α_s and α_r.
    fn chain() -> TreeOfGroups {
        let a = Vertex::finite("U_stst", ugroup("stst"));
        let b = Vertex::finite("U_rsrs", ugroup("rsrs"));
        let c = Vertex::finite("U_rtrt", ugroup("rtrt"));
        let e0 = shared_root_edge(0, &a, 1, &b).unwrap();
        let e1 = shared_root_edge(1, &b, 2, &c).unwrap();
        assert_eq!((e0.gens.len(), e1.gens.len()), (1, 1));
        TreeOfGroups::build(vec![a, b, c], vec![e0, e1]).unwrap()
    }

    fn sample_words() -> Vec<Vec<(usize, Elem)>> {
        vec![
            vec![],
            vec![(0, Elem::Bits(0b0110))],
            vec![(1, Elem::Bits(0b1010)), (0, Elem::Bits(0b0001))],
            vec![(2, Elem::Bits(0b0111)), (1, Elem::Bits(0b1000))],
            vec![
                (0, Elem::Bits(0b1001)),
                (1, Elem::Bits(0b0100)),
                (2, Elem::Bits(0b1100)),
                (1, Elem::Bits(0b0010)),
            ],
        ]
    }

    #[test]
    fn bounded_closure_of_a_vertex_subgroup_is_the_subgroup() {
        let tree = chain();
        let g = tree.vertices()[0].group().unwrap().clone();
        let u_sts = subgroup_for(&g, &el("sts")).unwrap();
        let gens: Vec<AmalgamElement> = u_sts
            .members()
            .iter()
            .map(|m| tree.reduce(&[(0, Elem::Bits(*m))]).unwrap())
            .collect();
        let closure = closure_bounded(&tree, &gens, 3, 1 << 12).unwrap();
        assert_eq!(closure.len(), 8);
    }

    #[test]
    fn closure_cap_fails_loudly() {
        let tree = chain();
        let gens = vec![
            tree.reduce(&[(0, Elem::Bits(0b1000))]).unwrap(),
            tree.reduce(&[(2, Elem::Bits(0b1000))]).unwrap(),
        ];
        let err = closure_bounded(&tree, &gens, 64, 100).unwrap_err();
        assert!(err.to_string().contains("limit"), "{}", err);
    }

    #[test]
    fn wall_groups_intersect_in_the_shared_root_group() {
        let tree = chain();
        let a: Vec<AmalgamElement> = (0..16)
            .map(|m| tree.reduce(&[(0, Elem::Bits(m))]).unwrap())
            .collect();
        let b: Vec<AmalgamElement> = (0..16)
            .map(|m| tree.reduce(&[(1, Elem::Bits(m))]).unwrap())
            .collect();
        let both = intersect_subgroups(&tree, &a, &b, 2, 1 << 12).unwrap();
        assert_eq!(both.len(), 2);
    }

    #[test]
    fn contraction_preserves_products() {
        let tree = chain();
        let (contracted, map) = contract(&tree, &[vec![0], vec![1, 2]]).unwrap();
        assert_eq!(contracted.vertices().len(), 2);
        assert!(matches!(
            contracted.vertices()[1].kind(),
            VertexGroupKind::Product { .. }
        ));
        let words = sample_words();
        for w1 in &words {
            for w2 in &words {
                let mut joined = w1.clone();
                joined.extend(w2.iter().cloned());
                let product_up = contracted.reduce(&map.lift_word(&joined)).unwrap();
                let x = contracted.reduce(&map.lift_word(w1)).unwrap();
                let y = contracted.reduce(&map.lift_word(w2)).unwrap();
                assert_eq!(contracted.multiply(&x, &y), product_up);
            }
        }
    }

    #[test]
    fn contraction_separates_exactly_the_same_elements() {
        let tree = chain();
        let (contracted, map) = contract(&tree, &[vec![0, 1], vec![2]]).unwrap();
        let words = sample_words();
        for w1 in &words {
            for w2 in &words {
                let down_equal = tree.reduce(w1).unwrap() == tree.reduce(w2).unwrap();
                let up_equal = contracted.reduce(&map.lift_word(w1)).unwrap()
                    == contracted.reduce(&map.lift_word(w2)).unwrap();
                assert_eq!(down_equal, up_equal);
            }
        }
    }

    #[test]
    fn flattening_a_contraction_restores_the_tree() {
        let tree = chain();
        let (contracted, _) = contract(&tree, &[vec![0], vec![1, 2]]).unwrap();
        let (flat, placement) = flatten(&contracted).unwrap();
        assert_eq!(flat.vertices().len(), 3);
        assert_eq!(placement, vec![vec![0], vec![1, 2]]);
        for w in sample_words() {
            assert_eq!(flat.reduce(&w).unwrap(), tree.reduce(&w).unwrap());
        }
    }

    #[test]
    fn disconnected_parts_are_rejected() {
        let tree = chain();
        let err = contract(&tree, &[vec![0, 2], vec![1]]).unwrap_err();
        assert!(err.to_string().contains("not connected"), "{}", err);
        let err = contract(&tree, &[vec![0], vec![1]]).unwrap_err();
        assert!(err.to_string().contains("cover"), "{}", err);
    }

    #[test]
    fn folding_an_edge_through_a_subgroup_preserves_equality() {
        let tree = chain();
        // Fold the U_stst—U_rsrs edge through U_st ≤ U_stst, which
        // contains the shared-root group.
        let g = tree.vertices()[0].group().unwrap().clone();
        let u_st = subgroup_for(&g, &el("st")).unwrap();
        let folded = fold(&tree, 0, 0, u_st.members()).unwrap();
        assert_eq!(folded.vertices().len(), 4);
        assert_eq!(folded.edges().len(), 3);
        let words = sample_words();
        for w1 in &words {
            for w2 in &words {
                let before = tree.reduce(w1).unwrap() == tree.reduce(w2).unwrap();
                let after = folded.reduce(w1).unwrap() == folded.reduce(w2).unwrap();
                assert_eq!(before, after);
            }
        }
        // The folded vertex really sits between the two: its group order.
        assert_eq!(folded.vertices()[3].order(), Some(4));
    }

    #[test]
    fn folding_requires_the_edge_image() {
        let tree = chain();
        let err = fold(&tree, 0, 0, &[0, 0b1000]).unwrap_err();
        assert!(
            err.to_string().contains("does not contain the edge group"),
            "{}",
            err
        );
        let err = fold(&tree, 0, 0, &[0, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("closed"), "{}", err);
    }
}
