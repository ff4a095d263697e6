use crate::words::{Alphabet, D0LSystem, Letter, Morphism, Word};

use super::graph::dependency_graph;

/// Letters whose iterates eventually vanish, as a membership mask.
///
/// Least fixpoint of `M₀ = {a : σ(a) = ε}`,
/// `Mᵢ₊₁ = Mᵢ ∪ {a : every letter of σ(a) is in Mᵢ}`.
pub fn mortal_mask(s: &D0LSystem) -> Vec<bool> {
    let images = s.morphism().images();
    let mut mortal = vec![false; images.len()];
    loop {
        let mut changed = false;
        for (a, img) in images.iter().enumerate() {
            if !mortal[a] && img.letters().iter().all(|l| mortal[l.index()]) {
                mortal[a] = true;
                changed = true;
            }
        }
        if !changed {
            return mortal;
        }
    }
}

pub fn mortal_letters(s: &D0LSystem) -> Vec<Letter> {
    mortal_mask(s)
        .into_iter()
        .enumerate()
        .filter_map(|(i, m)| m.then_some(Letter(i as u32)))
        .collect()
}

/// `σⁿ(axiom)` is non-empty for every `n`.
pub fn is_everlasting(s: &D0LSystem) -> bool {
    let mortal = mortal_mask(s);
    s.axiom().letters().iter().any(|l| !mortal[l.index()])
}

/// Restriction to the letters that occur in some iterate of the axiom.
/// Letter order and symbols are preserved; iterates are unchanged.
pub fn reduce(s: &D0LSystem) -> D0LSystem {
    let g = dependency_graph(s);
    let keep = g.reachable_from(s.axiom().letters().iter().copied());
    let mut remap = vec![None; keep.len()];
    let mut symbols = Vec::new();
    for (i, &k) in keep.iter().enumerate() {
        if k {
            remap[i] = Some(Letter(symbols.len() as u32));
            symbols.push(s.alphabet().symbol(Letter(i as u32)).to_string());
        }
    }
    let map_word = |w: &Word| -> Word {
        Word(w.letters().iter().map(|l| remap[l.index()].expect("closed under σ")).collect())
    };
    let images = s
        .morphism()
        .images()
        .iter()
        .enumerate()
        .filter(|(i, _)| keep[*i])
        .map(|(_, img)| map_word(img))
        .collect();
    let alphabet = Alphabet::from_symbols(symbols).expect("subset of a valid alphabet");
    let morphism = Morphism::new(images).expect("closed under σ");
    D0LSystem::new(alphabet, morphism, map_word(s.axiom())).expect("axiom letters are kept")
}

/// Every letter occurs in some iterate of the axiom.
pub fn is_reduced(s: &D0LSystem) -> bool {
    dependency_graph(s)
        .reachable_from(s.axiom().letters().iter().copied())
        .into_iter()
        .all(|x| x)
}
