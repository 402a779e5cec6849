//! Build chain constructions as trees of finite 2-groups.

use amalgam_engine::{shared_root_edge, TreeOfGroups, Vertex};
use blueprints::Blueprint;
use coxeter_core::Result;
use roots_galleries::Root;
use ugroup_engine::{v_subgroup, PcGroup};

use crate::words::{kind_words, resolve, Anchor, Kind, VertexWord};

/// A built chain construction.
pub struct NamedConstruction {
    pub kind: Kind,
    pub anchor: Anchor,
    pub words: Vec<VertexWord>,
    pub tree: TreeOfGroups,
}

/// Build one chain vertex: a full wall group, or a wall group restricted to
/// the index-2 subgroup generated by its two one-letter-short halves.
pub fn build_vertex(vw: &VertexWord, p: &Blueprint) -> Result<Vertex> {
    match vw {
        VertexWord::U(w) => Ok(Vertex::finite(vw.name(), PcGroup::build(p, w)?)),
        VertexWord::V { a, b, .. } => {
            let wall = PcGroup::build(p, &vw.full_word())?;
            let handle = v_subgroup(&wall, *a, *b)?;
            Ok(Vertex::subgroup(vw.name(), wall, &handle))
        }
    }
}

/// Chain the given vertex words into a path tree; consecutive vertices are
/// joined over their shared root generators.
pub fn build_tree(words: &[VertexWord], p: &Blueprint) -> Result<TreeOfGroups> {
    let mut vertices = Vec::with_capacity(words.len());
    for vw in words {
        vertices.push(build_vertex(vw, p)?);
    }
    let mut edges = Vec::with_capacity(words.len().saturating_sub(1));
    for k in 1..vertices.len() {
        edges.push(shared_root_edge(
            k - 1,
            &vertices[k - 1],
            k,
            &vertices[k],
        )?);
    }
    TreeOfGroups::build(vertices, edges)
}

/// Resolve the anchor, compute the vertex schedule and build the tree.
pub fn build_named(kind: Kind, anchor: &Anchor, p: &Blueprint) -> Result<NamedConstruction> {
    let frame = resolve(kind, anchor)?;
    let words = crate::words::words_from_frame(kind, &frame)?;
    let tree = build_tree(&words, p)?;
    Ok(NamedConstruction {
        kind,
        anchor: anchor.clone(),
        words,
        tree,
    })
}

/// The roots whose generators survive deduplication across all vertex groups.
pub fn generator_support(c: &NamedConstruction) -> Vec<Root> {
    support_of_tree(&c.tree)
}

/// Deduplicated union of the vertex root lists, sorted by serial form.
pub fn support_of_tree(tree: &TreeOfGroups) -> Vec<Root> {
    let mut out: Vec<Root> = Vec::new();
    for v in tree.vertices() {
        for root in v.roots() {
            if !out.contains(root) {
                out.push(root.clone());
            }
        }
    }
    out.sort_by_key(|r| r.serial());
    out
}

/// Convenience wrapper: schedule plus tree in one call without a frame in
/// hand.
pub fn build_words(kind: Kind, anchor: &Anchor) -> Result<Vec<VertexWord>> {
    kind_words(kind, anchor)
}
