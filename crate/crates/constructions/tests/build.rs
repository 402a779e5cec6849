use blueprints::Blueprint;
use constructions::{build_named, generator_support, kind_words, Anchor, Kind};
use coxeter_core::{GroupElement, Residue};
use roots_galleries::{phi, roots_to_depth};

fn single(res: &str) -> Anchor {
    Anchor::single(Residue::parse(res).unwrap())
}

fn pair(a: &str, b: &str) -> Anchor {
    Anchor::pair(Residue::parse(a).unwrap(), Residue::parse(b).unwrap())
}

#[test]
fn three_vertex_chain_at_the_base_residue() {
    let p = Blueprint::kac_moody();
    let c = build_named(Kind::VR, &single("st:1"), &p).unwrap();
    let orders: Vec<u64> = c
        .tree
        .vertices()
        .iter()
        .map(|v| v.order().unwrap())
        .collect();
    assert_eq!(orders, [4, 8, 4]);
    for e in c.tree.edges() {
        assert_eq!(e.order(), 2, "edge groups here are generated by one root");
    }
}

#[test]
fn three_vertex_chain_support_is_the_two_outer_inversion_sets() {
    let p = Blueprint::kac_moody();
    let c = build_named(Kind::VR, &single("st:1"), &p).unwrap();
    let support = generator_support(&c);

    let sr = GroupElement::parse("sr").unwrap();
    let tr = GroupElement::parse("tr").unwrap();
    let mut expected: Vec<_> = roots_to_depth(4)
        .unwrap()
        .into_iter()
        .filter(|alpha| !alpha.contains(&sr) || !alpha.contains(&tr))
        .collect();
    expected.sort_by_key(|r| r.serial());
    assert_eq!(support, expected);

    let mut by_phi: Vec<_> = phi(&sr).into_iter().chain(phi(&tr)).collect();
    by_phi.sort_by_key(|r| r.serial());
    by_phi.dedup();
    assert_eq!(support, by_phi);
}

#[test]
fn octagon_centred_chain_support_grows() {
    let p = Blueprint::kac_moody();
    let v = build_named(Kind::VR, &single("st:1"), &p).unwrap();
    let o = build_named(Kind::OR, &single("st:1"), &p).unwrap();
    let sv = generator_support(&v);
    let so = generator_support(&o);
    assert!(sv.iter().all(|r| so.contains(r)), "the wider chain must cover the narrow one");
    assert!(so.len() > sv.len());
}

#[test]
fn five_vertex_chain_orders_and_nesting() {
    let p = Blueprint::kac_moody();
    let h = build_named(Kind::HR, &single("st:1"), &p).unwrap();
    let orders: Vec<u64> = h
        .tree
        .vertices()
        .iter()
        .map(|v| v.order().unwrap())
        .collect();
    assert_eq!(orders, [32, 32, 16, 32, 32]);

    let g = build_named(Kind::GR, &single("st:1"), &p).unwrap();
    let sh = generator_support(&h);
    let sg = generator_support(&g);
    assert!(sh.iter().all(|r| sg.contains(r)), "the long chain extends the short one");
}

#[test]
fn every_kind_builds_at_its_smallest_anchor() {
    let p = Blueprint::kac_moody();
    let anchors = [
        (Kind::VR, single("st:1")),
        (Kind::OR, single("st:1")),
        (Kind::HR, single("st:1")),
        (Kind::JRt, single("st:1")),
        (Kind::GR, single("st:1")),
        (Kind::ERs, single("st:sr")),
        (Kind::URs, single("st:sr")),
        (Kind::XR, single("st:sr")),
        (Kind::HRR, pair("st:rtr", "rs:trt")),
        (Kind::JRR, pair("st:rtr", "rs:trt")),
        (Kind::GRR, pair("st:rtr", "rs:trt")),
        (Kind::C, pair("st:rtr", "rs:trt")),
        (Kind::CRR, pair("st:rtr", "rs:trt")),
    ];
    for (kind, anchor) in anchors {
        let c = build_named(kind, &anchor, &p)
            .unwrap_or_else(|e| panic!("{kind} at {} failed: {e}", anchor.label()));
        assert_eq!(c.tree.vertices().len(), c.words.len());
        assert_eq!(c.tree.edges().len(), c.words.len() - 1);
        for e in c.tree.edges() {
            assert!(e.order() >= 2, "{kind}: trivial edge group between chain links");
        }
    }
}

#[test]
fn chain_words_at_shallow_anchors_stay_within_the_group_length_bound() {
    let anchors = [
        (Kind::GR, single("st:1")),
        (Kind::URs, single("st:sr")),
        (Kind::GRR, pair("st:rtr", "rs:trt")),
        (Kind::CRR, pair("st:rtr", "rs:trt")),
    ];
    for (kind, anchor) in anchors {
        for vw in kind_words(kind, &anchor).unwrap() {
            assert!(
                vw.full_word().length() <= 12,
                "{kind}: {vw} is too deep for the finite-group engine"
            );
        }
    }
}
