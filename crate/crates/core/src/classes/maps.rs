use serde::Serialize;

use crate::hom::{find_retraction, find_section};
use crate::map::ActMap;

/// Which of the basic map classes `f` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub mono: bool,
    pub epi: bool,
    pub split_epi: bool,
    pub split_mono: bool,
    pub unitary: bool,
    pub iso: bool,
}

pub fn classify_map(f: &ActMap) -> MapClassification {
    let mono = f.is_injective();
    let epi = f.is_surjective();
    MapClassification {
        mono,
        epi,
        split_epi: epi && find_section(f).is_some(),
        split_mono: mono && find_retraction(f).is_some(),
        unitary: is_unitary(f),
        iso: mono && epi,
    }
}

/// Mono, and `y ∈ im f` whenever `y·s ∈ im f`: the complement of the image
/// is a subact.
pub fn is_unitary(f: &ActMap) -> bool {
    f.is_injective() && complement_elements(f).is_some_and(|c| f.target().is_closed(&c))
}

fn complement_elements(f: &ActMap) -> Option<Vec<usize>> {
    let hit = f.in_image();
    Some(f.target().elements().filter(|&y| !hit[y]).collect())
}

/// The inclusion of `target \ im f` when `f` is unitary. `None` for a
/// non-unitary `f`; an inclusion of the empty act when `f` is onto.
pub fn complement(f: &ActMap) -> Option<ActMap> {
    if !is_unitary(f) {
        return None;
    }
    let elems = complement_elements(f)?;
    ActMap::inclusion(f.target(), &elems).ok()
}

/// The centred analogue: `f` mono and `(target \ im f) ∪ {base point}` a
/// subact. Returns its inclusion.
pub fn centred_complement(f: &ActMap) -> Option<ActMap> {
    if !f.is_injective() {
        return None;
    }
    let y = f.target();
    let [base] = y.fixed_points()[..] else {
        return None;
    };
    let hit = f.in_image();
    let elems: Vec<usize> = y.elements().filter(|&x| !hit[x] || x == base).collect();
    ActMap::inclusion(y, &elems)
        .ok()
        .map(|i| ActMap::from_parts(&i.source().with_centred(true), y, i.values().to_vec()).expect("same values"))
}
