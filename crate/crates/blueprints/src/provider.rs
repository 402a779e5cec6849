//! Blueprint providers: the assignment (G, i, j) -> ordered commutation set
//! for the i-th and j-th crossing of a minimal gallery G, built from a base
//! rule, user overrides, and orbit closure under gallery shifts.

use std::collections::{HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

use coxeter_core::{CoxeterError, Gen, GroupElement, Result, GENS};
use roots_galleries::{classify_pair, Gallery, PairKind, Root, RootRelation};
use serde::{Deserialize, Serialize};

/// Answer for pairs without an override.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseRule {
    /// Crossing pairs of order 4 whose open interval is the two middle
    /// crossings of their octagon commute onto that interval; every other
    /// pair commutes outright.
    KacMoody,
    /// Everything commutes.
    Empty,
}

/// How far override entries propagate to other galleries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closure {
    /// Saturate along every gallery shift.
    Weyl,
    /// Saturate only pairs whose reflections generate a finite group.
    Local,
    /// Entries apply verbatim.
    None,
}

/// One override as written in a blueprint file: `i` and `j` are 1-based
/// crossing positions into `gallery`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Override {
    pub gallery: Vec<Gen>,
    pub i: usize,
    pub j: usize,
    #[serde(rename = "M")]
    pub m: Vec<Root>,
}

#[derive(Serialize, Deserialize)]
struct BlueprintFile {
    base: BaseRule,
    closure: Closure,
    #[serde(default)]
    overrides: Vec<Override>,
}

/// Table key: full gallery type with 0-based crossing positions i < j.
type Key = (Vec<Gen>, usize, usize);

/// An immutable provider.  Override entries are matched by gallery-type
/// prefix (longest match wins), so an entry recorded on a short gallery
/// governs all of its extensions.
#[derive(Debug)]
pub struct Blueprint {
    base: BaseRule,
    closure: Closure,
    radius: usize,
    seeds: Vec<Override>,
    table: HashMap<Key, Vec<Root>>,
}

impl Blueprint {
    pub fn kac_moody() -> Blueprint {
        Blueprint {
            base: BaseRule::KacMoody,
            closure: Closure::None,
            radius: 0,
            seeds: Vec::new(),
            table: HashMap::new(),
        }
    }

    pub fn empty() -> Blueprint {
        Blueprint {
            base: BaseRule::Empty,
            ..Blueprint::kac_moody()
        }
    }

    pub fn base(&self) -> BaseRule {
        self.base
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    /// The gallery length up to which override orbits were saturated;
    /// validators should not be run beyond it.
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Build a provider from override seeds, saturating their shift orbits
    /// up to gallery length `radius`.  Seeds are normalised (values ordered
    /// along the interval) and any orbit conflict is an error.
    pub fn with_overrides(
        base: BaseRule,
        closure: Closure,
        seeds: Vec<Override>,
        radius: usize,
    ) -> Result<Blueprint> {
        let mut table: HashMap<Key, Vec<Root>> = HashMap::new();
        let mut sources: HashMap<Key, String> = HashMap::new();
        for (idx, seed) in seeds.iter().enumerate() {
            let (key, m) = normalize_seed(seed)
                .map_err(|e| CoxeterError::invalid(format!("override #{}: {e}", idx + 1)))?;
            insert_entry(
                &mut table,
                &mut sources,
                key,
                m,
                format!("override #{}", idx + 1),
            )?;
        }
        if closure != Closure::None {
            saturate(&mut table, &mut sources, radius, closure == Closure::Local)?;
        }
        Ok(Blueprint {
            base,
            closure,
            radius,
            seeds,
            table,
        })
    }

    pub fn from_json(text: &str, radius: usize) -> Result<Blueprint> {
        let file: BlueprintFile = serde_json::from_str(text)
            .map_err(|e| CoxeterError::invalid(format!("blueprint file: {e}")))?;
        Blueprint::with_overrides(file.base, file.closure, file.overrides, radius)
    }

    pub fn to_json(&self) -> String {
        let file = BlueprintFile {
            base: self.base,
            closure: self.closure,
            overrides: self.seeds.clone(),
        };
        serde_json::to_string_pretty(&file).expect("blueprint serializes")
    }

    /// The full saturated table as 1-based override entries, sorted.
    pub fn saturated_overrides(&self) -> Vec<Override> {
        let mut out: Vec<Override> = self
            .table
            .iter()
            .map(|((typ, i, j), m)| Override {
                gallery: typ.clone(),
                i: i + 1,
                j: j + 1,
                m: m.clone(),
            })
            .collect();
        out.sort_by(|a, b| (&a.gallery, a.i, a.j).cmp(&(&b.gallery, b.i, b.j)));
        out
    }

    /// The commutation set for the crossings at 0-based positions i < j of
    /// `gal`, ordered along the gallery.
    pub fn query(&self, gal: &Gallery, i: usize, j: usize) -> Result<Vec<Root>> {
        if i >= j || j >= gal.len() {
            return Err(CoxeterError::invalid(format!(
                "crossing positions ({i}, {j}) out of range for a gallery of length {}",
                gal.len()
            )));
        }
        let typ = gal.typ();
        for len in (j + 1..=typ.len()).rev() {
            if let Some(m) = self.table.get(&(typ[..len].to_vec(), i, j)) {
                return Ok(m.clone());
            }
        }
        match self.base {
            BaseRule::Empty => Ok(Vec::new()),
            BaseRule::KacMoody => {
                let crossings = gal.crossings();
                kac_moody_rule(&crossings[i], &crossings[j])
            }
        }
    }
}

/// The built-in rule, memoized per root pair: an order-4 crossing pair whose
/// open interval has exactly two roots maps to that interval; anything else
/// commutes.
fn kac_moody_rule(a: &Root, b: &Root) -> Result<Vec<Root>> {
    static CACHE: OnceLock<Mutex<HashMap<(Root, Root), Vec<Root>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&(a.clone(), b.clone())) {
        return Ok(m.clone());
    }
    let cls = classify_pair(a, b)?;
    let m = match cls.kind {
        PairKind::Crossing { order: 4 } => {
            let open = cls
                .open_interval()
                .expect("crossing pairs are prenilpotent");
            if open.len() == 2 {
                open.to_vec()
            } else {
                Vec::new()
            }
        }
        _ => Vec::new(),
    };
    cache
        .lock()
        .unwrap()
        .insert((a.clone(), b.clone()), m.clone());
    Ok(m)
}

/// Validate one seed: reduced gallery, positions in range, value inside the
/// open interval of the pair.  Returns the 0-based key and the value
/// reordered along the interval.
fn normalize_seed(seed: &Override) -> Result<(Key, Vec<Root>)> {
    let gal = Gallery::new(seed.gallery.clone())?;
    if seed.i < 1 || seed.i >= seed.j || seed.j > gal.len() {
        return Err(CoxeterError::invalid(format!(
            "positions ({}, {}) out of range for a gallery of length {}",
            seed.i,
            seed.j,
            gal.len()
        )));
    }
    let (i, j) = (seed.i - 1, seed.j - 1);
    let crossings = gal.crossings();
    let cls = classify_pair(&crossings[i], &crossings[j])?;
    let open = cls.open_interval().ok_or_else(|| {
        CoxeterError::invalid("crossings of one gallery form a prenilpotent pair")
    })?;
    let mut m = Vec::new();
    for gamma in open {
        if seed.m.contains(gamma) {
            m.push(gamma.clone());
        }
    }
    if m.len() != seed.m.len() {
        return Err(CoxeterError::invalid(format!(
            "value must be a duplicate-free subset of the open interval ({}, {})",
            crossings[i], crossings[j]
        )));
    }
    Ok(((seed.gallery.clone(), i, j), m))
}

fn insert_entry(
    table: &mut HashMap<Key, Vec<Root>>,
    sources: &mut HashMap<Key, String>,
    key: Key,
    m: Vec<Root>,
    source: String,
) -> Result<bool> {
    match table.get(&key) {
        Some(existing) if *existing == m => Ok(false),
        Some(_) => Err(CoxeterError::invalid(format!(
            "conflicting assignments for gallery {:?} positions ({}, {}): {} vs {}",
            key.0
                .iter()
                .map(|g| g.letter())
                .collect::<String>(),
            key.1 + 1,
            key.2 + 1,
            sources[&key],
            source
        ))),
        None => {
            sources.insert(key.clone(), source);
            table.insert(key, m);
            Ok(true)
        }
    }
}

/// Orbit saturation: every entry is transported along gallery shifts, down
/// (dropping the first letter when the pair avoids the first crossing) and
/// up (prepending any letter that keeps the type reduced, within `radius`).
fn saturate(
    table: &mut HashMap<Key, Vec<Root>>,
    sources: &mut HashMap<Key, String>,
    radius: usize,
    local: bool,
) -> Result<()> {
    let mut queue: VecDeque<Key> = table.keys().cloned().collect();
    while let Some(key) = queue.pop_front() {
        let m = table[&key].clone();
        let (typ, i, j) = key;
        if local {
            let crossings = Gallery::new(typ.clone())?.crossings();
            let finite = matches!(
                crossings[i].relation(&crossings[j])?,
                RootRelation::Crossing { .. }
            );
            if !finite {
                continue;
            }
        }
        let desc = sources[&(typ.clone(), i, j)].clone();
        let push = |table: &mut HashMap<Key, Vec<Root>>,
                        sources: &mut HashMap<Key, String>,
                        queue: &mut VecDeque<Key>,
                        key: Key,
                        m: Vec<Root>|
         -> Result<()> {
            if insert_entry(table, sources, key.clone(), m, format!("closure of {desc}"))? {
                queue.push_back(key);
            }
            Ok(())
        };
        if i >= 1 {
            let s = GroupElement::gen(typ[0]);
            let down: Vec<Root> = m.iter().map(|g| g.act(&s)).collect();
            push(
                table,
                sources,
                &mut queue,
                (typ[1..].to_vec(), i - 1, j - 1),
                down,
            )?;
        }
        if typ.len() < radius {
            for a in GENS {
                let mut extended = Vec::with_capacity(typ.len() + 1);
                extended.push(a);
                extended.extend_from_slice(&typ);
                if GroupElement::from_word(&extended).length() != extended.len() {
                    continue;
                }
                let s = GroupElement::gen(a);
                let up: Vec<Root> = m.iter().map(|g| g.act(&s)).collect();
                push(table, sources, &mut queue, (extended, i + 1, j + 1), up)?;
            }
        }
    }
    Ok(())
}

/// A provider certifying the nested-commutation dichotomy: the base rule
/// plus one nonempty override on the deepest-available nested crossing pair
/// of a short gallery, saturated to `radius`.
pub fn nested_perturbation(radius: usize) -> Result<Blueprint> {
    let seed = deep_nested_seed()?;
    Blueprint::with_overrides(BaseRule::KacMoody, Closure::Weyl, vec![seed], radius)
}

/// First (in enumeration order) gallery pair of length <= 5 that is nested
/// with the larger root at depth >= 4 and a nonempty open interval.
fn deep_nested_seed() -> Result<Override> {
    for w in coxeter_core::ball(5)? {
        for gal in roots_galleries::min_galleries(&w) {
            let crossings = gal.crossings();
            for i in 0..crossings.len() {
                for j in i + 1..crossings.len() {
                    let a = &crossings[i];
                    let b = &crossings[j];
                    if b.depth()? < 4 {
                        continue;
                    }
                    if a.relation(b)? != RootRelation::FirstInSecond {
                        continue;
                    }
                    let cls = classify_pair(a, b)?;
                    let open = cls.open_interval().unwrap_or(&[]);
                    if open.is_empty() {
                        continue;
                    }
                    return Ok(Override {
                        gallery: gal.typ().to_vec(),
                        i: i + 1,
                        j: j + 1,
                        m: open.to_vec(),
                    });
                }
            }
        }
    }
    Err(CoxeterError::invalid(
        "no deep nested pair with nonempty interval in the radius-5 ball",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octagon() -> Gallery {
        Gallery::new(vec![Gen::S, Gen::T, Gen::S, Gen::T]).unwrap()
    }

    #[test]
    fn base_rule_reproduces_rank2_table() {
        let p = Blueprint::kac_moody();
        let gal = octagon();
        let crossings = gal.crossings();
        for i in 0..4 {
            for j in i + 1..4 {
                let got = p.query(&gal, i, j).unwrap();
                if (i, j) == (0, 3) {
                    assert_eq!(got, vec![crossings[1].clone(), crossings[2].clone()]);
                } else {
                    assert!(got.is_empty(), "({i}, {j}) gave {got:?}");
                }
            }
        }
    }

    #[test]
    fn longest_prefix_override_wins() {
        // Same pair overridden on the octagon and on one extension.
        let crossings = octagon().crossings();
        let extended = vec![Gen::S, Gen::T, Gen::S, Gen::T, Gen::R];
        let seeds = vec![
            Override {
                gallery: octagon().typ().to_vec(),
                i: 1,
                j: 4,
                m: vec![crossings[1].clone(), crossings[2].clone()],
            },
            Override {
                gallery: extended.clone(),
                i: 1,
                j: 4,
                m: vec![crossings[1].clone()],
            },
        ];
        let p =
            Blueprint::with_overrides(BaseRule::KacMoody, Closure::None, seeds, 0).unwrap();
        let long = Gallery::new(extended).unwrap();
        assert_eq!(p.query(&long, 0, 3).unwrap().len(), 1);
        assert_eq!(p.query(&octagon(), 0, 3).unwrap().len(), 2);
    }

    #[test]
    fn seed_outside_interval_is_rejected() {
        let crossings = octagon().crossings();
        // (alpha_2, alpha_3) is an adjacent pair with empty open interval.
        let seed = Override {
            gallery: octagon().typ().to_vec(),
            i: 2,
            j: 3,
            m: vec![crossings[0].clone()],
        };
        assert!(
            Blueprint::with_overrides(BaseRule::KacMoody, Closure::None, vec![seed], 0)
                .is_err()
        );
    }

    #[test]
    fn closure_conflict_is_reported() {
        let crossings = octagon().crossings();
        let r = GroupElement::gen(Gen::R);
        // Seed B sits on the r-shift of seed A's orbit with a smaller value.
        let seeds = vec![
            Override {
                gallery: octagon().typ().to_vec(),
                i: 1,
                j: 4,
                m: vec![crossings[1].clone(), crossings[2].clone()],
            },
            Override {
                gallery: vec![Gen::R, Gen::S, Gen::T, Gen::S, Gen::T],
                i: 2,
                j: 5,
                m: vec![crossings[1].act(&r)],
            },
        ];
        let err = Blueprint::with_overrides(BaseRule::KacMoody, Closure::Weyl, seeds, 6)
            .unwrap_err();
        let text = err.to_string();
        assert!(text.contains("conflicting"), "{text}");
        // Order disagreements cannot conflict: values are normalised along
        // the interval at creation.
        let seeds = vec![
            Override {
                gallery: octagon().typ().to_vec(),
                i: 1,
                j: 4,
                m: vec![crossings[1].clone(), crossings[2].clone()],
            },
            Override {
                gallery: vec![Gen::R, Gen::S, Gen::T, Gen::S, Gen::T],
                i: 2,
                j: 5,
                m: vec![crossings[2].act(&r), crossings[1].act(&r)],
            },
        ];
        assert!(
            Blueprint::with_overrides(BaseRule::KacMoody, Closure::Weyl, seeds, 6).is_ok()
        );
    }

    #[test]
    fn closure_is_idempotent() {
        let p = nested_perturbation(6).unwrap();
        let again = Blueprint::with_overrides(
            BaseRule::KacMoody,
            Closure::Weyl,
            p.saturated_overrides(),
            6,
        )
        .unwrap();
        assert_eq!(p.saturated_overrides(), again.saturated_overrides());
    }

    #[test]
    fn json_round_trip_preserves_answers() {
        let p = nested_perturbation(5).unwrap();
        let q = Blueprint::from_json(&p.to_json(), 5).unwrap();
        for w in coxeter_core::ball(4).unwrap() {
            for gal in roots_galleries::min_galleries(&w) {
                for i in 0..gal.len() {
                    for j in i + 1..gal.len() {
                        assert_eq!(p.query(&gal, i, j).unwrap(), q.query(&gal, i, j).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn answers_stay_inside_the_open_interval() {
        let p = nested_perturbation(4).unwrap();
        for w in coxeter_core::ball(4).unwrap() {
            for gal in roots_galleries::min_galleries(&w) {
                let crossings = gal.crossings();
                for i in 0..gal.len() {
                    for j in i + 1..gal.len() {
                        let m = p.query(&gal, i, j).unwrap();
                        if m.is_empty() {
                            continue;
                        }
                        let cls = classify_pair(&crossings[i], &crossings[j]).unwrap();
                        let open = cls.open_interval().unwrap();
                        assert!(m.iter().all(|g| open.contains(g)));
                    }
                }
            }
        }
    }
}
