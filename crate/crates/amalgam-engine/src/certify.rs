//! Certifying that a compatible family of vertex subgroups embeds into the
//! tree product.  The hypotheses are finite: each prescribed set is a
//! subgroup of its vertex group, and on every edge the two boundary maps
//! pull the endpoint subgroups back to the same subgroup of the edge group,
//! which must be the prescribed edge subgroup.  Under these checks the
//! subtree product of the family maps injectively, with image meeting each
//! vertex group in exactly the prescribed subgroup; the latter is probed
//! separately by a bounded closure.

use std::collections::{BTreeMap, BTreeSet};

use coxeter_core::{CoxeterError, Result};

use crate::elem::{AmalgamElement, Elem};
use crate::ops::closure_bounded;
use crate::tree::TreeOfGroups;

/// A family of subgroups over a connected subtree: `(vertex, members)` and
/// `(edge, members-as-a-side-elements)` pairs, indices into the ambient
/// tree.
#[derive(Debug, Clone)]
pub struct SubtreeSpec {
    pub vertices: Vec<(usize, Vec<Elem>)>,
    pub edges: Vec<(usize, Vec<Elem>)>,
}

#[derive(Debug, Clone)]
pub struct EmbeddingCertificate {
    pub valid: bool,
    /// Per vertex: the prescribed set is a subgroup.
    pub vertex_checks: Vec<(String, bool)>,
    /// Per edge: both pullbacks agree.
    pub preimage_checks: Vec<(String, bool)>,
    /// Per edge: the prescribed edge subgroup is that pullback.
    pub edge_checks: Vec<(String, bool)>,
    pub failures: Vec<String>,
}

fn normalized_set(
    tree: &TreeOfGroups,
    v: usize,
    members: &[Elem],
) -> Result<BTreeSet<Elem>> {
    let vertex = &tree.vertices()[v];
    let id = vertex.identity();
    let mut set = BTreeSet::new();
    for m in members {
        if !vertex.contains(m) {
            return Err(CoxeterError::invalid(format!(
                "{} is not an element of vertex {}",
                m,
                vertex.name()
            )));
        }
        // Multiplying by the identity re-canonicalizes nested forms.
        set.insert(vertex.mul(&id, m));
    }
    set.insert(id);
    Ok(set)
}

fn is_subgroup(tree: &TreeOfGroups, v: usize, set: &BTreeSet<Elem>) -> bool {
    let vertex = &tree.vertices()[v];
    for x in set {
        if !set.contains(&vertex.inv(x)) {
            return false;
        }
        for y in set {
            if !set.contains(&vertex.mul(x, y)) {
                return false;
            }
        }
    }
    true
}

/// Verify the subgroup-family hypotheses over the given subtree.
pub fn certify_embedding(
    tree: &TreeOfGroups,
    spec: &SubtreeSpec,
) -> Result<EmbeddingCertificate> {
    let mut sets: BTreeMap<usize, BTreeSet<Elem>> = BTreeMap::new();
    for (v, members) in &spec.vertices {
        if *v >= tree.vertices().len() {
            return Err(CoxeterError::invalid(format!("no vertex {}", v)));
        }
        if sets.insert(*v, normalized_set(tree, *v, members)?).is_some() {
            return Err(CoxeterError::invalid(format!("vertex {} listed twice", v)));
        }
    }
    if sets.is_empty() {
        return Err(CoxeterError::invalid("the subtree spec has no vertices"));
    }
    if spec.edges.len() + 1 != sets.len() {
        return Err(CoxeterError::invalid(format!(
            "{} subtree vertices need {} edges, got {}",
            sets.len(),
            sets.len() - 1,
            spec.edges.len()
        )));
    }
    // The listed edges must connect the listed vertices into a tree.
    {
        let mut seen_edges = BTreeSet::new();
        for (ei, _) in &spec.edges {
            let e = tree
                .edges()
                .get(*ei)
                .ok_or_else(|| CoxeterError::invalid(format!("no edge {}", ei)))?;
            if !seen_edges.insert(*ei) {
                return Err(CoxeterError::invalid(format!("edge {} listed twice", ei)));
            }
            let (a, b) = e.endpoints();
            if !sets.contains_key(&a) || !sets.contains_key(&b) {
                return Err(CoxeterError::invalid(format!(
                    "edge {} leaves the listed vertex set",
                    ei
                )));
            }
        }
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        reached.insert(spec.vertices[0].0);
        loop {
            let before = reached.len();
            for (ei, _) in &spec.edges {
                let (a, b) = tree.edges()[*ei].endpoints();
                if reached.contains(&a) || reached.contains(&b) {
                    reached.insert(a);
                    reached.insert(b);
                }
            }
            if reached.len() == before {
                break;
            }
        }
        if reached.len() != sets.len() {
            return Err(CoxeterError::invalid(
                "the listed edges do not connect the vertices",
            ));
        }
    }

    let mut cert = EmbeddingCertificate {
        valid: true,
        vertex_checks: Vec::new(),
        preimage_checks: Vec::new(),
        edge_checks: Vec::new(),
        failures: Vec::new(),
    };
    for (v, set) in &sets {
        let ok = is_subgroup(tree, *v, set);
        if !ok {
            cert.valid = false;
            cert.failures.push(format!(
                "the set at vertex {} is not a subgroup",
                tree.vertices()[*v].name()
            ));
        }
        cert.vertex_checks
            .push((tree.vertices()[*v].name().to_string(), ok));
    }

    for (ei, members) in &spec.edges {
        let e = &tree.edges()[*ei];
        let (a, b) = e.endpoints();
        let label = format!(
            "{}—{}",
            tree.vertices()[a].name(),
            tree.vertices()[b].name()
        );
        let ha = &sets[&a];
        let hb = &sets[&b];
        let pull_a: BTreeSet<Elem> = e
            .image_at(a)
            .iter()
            .filter(|x| ha.contains(*x))
            .cloned()
            .collect();
        let pull_b: BTreeSet<Elem> = e
            .image_at(b)
            .iter()
            .filter(|y| hb.contains(*y))
            .map(|y| e.transport(b, y).unwrap().clone())
            .collect();
        let agree = pull_a == pull_b;
        if !agree {
            cert.valid = false;
            cert.failures.push(format!(
                "edge {}: the boundary pullbacks of the vertex subgroups differ",
                label
            ));
        }
        cert.preimage_checks.push((label.clone(), agree));

        let mut he = BTreeSet::new();
        let mut he_ok = true;
        for m in members {
            if e.transport(a, m).is_none() {
                he_ok = false;
                cert.failures.push(format!(
                    "edge {}: {} is not an edge-group element",
                    label, m
                ));
                break;
            }
            he.insert(m.clone());
        }
        he.insert(tree.vertices()[a].identity());
        let matches = he_ok && he == pull_a;
        if !matches && he_ok {
            cert.failures.push(format!(
                "edge {}: the prescribed edge subgroup is not the pullback",
                label
            ));
        }
        if !matches {
            cert.valid = false;
        }
        cert.edge_checks.push((label, matches));
    }
    Ok(cert)
}

/// Bounded probe of the conclusion: the closure of the family inside the
/// tree product must meet each listed vertex group in exactly the listed
/// subgroup.
pub fn check_embedded_intersections(
    tree: &TreeOfGroups,
    spec: &SubtreeSpec,
    syllable_bound: usize,
    cap: usize,
) -> Result<Vec<(String, bool)>> {
    let mut gens: Vec<AmalgamElement> = Vec::new();
    for (v, members) in &spec.vertices {
        for m in members {
            gens.push(tree.reduce(&[(*v, m.clone())])?);
        }
    }
    let closure = closure_bounded(tree, &gens, syllable_bound, cap)?;
    let mut out = Vec::new();
    for (v, members) in &spec.vertices {
        let expected = normalized_set(tree, *v, members)?;
        let mut got: BTreeSet<Elem> = BTreeSet::new();
        for x in &closure {
            if let Some(g) = tree.vertex_membership(x, *v) {
                got.insert(g);
            }
        }
        out.push((tree.vertices()[*v].name().to_string(), got == expected));
    }
    Ok(out)
}
