//! Deliberately naive brute-force ground truth for membership and
//! intersection. Breadth-first closure over left multiplication by
//! generators and their inverses, capped by word length.
//!
//! Cap semantics: an element whose every expression passes through a longer
//! intermediate word can be missed, so callers should quantify only over
//! the ball of radius `cap - max generator length`.

use std::collections::HashSet;

use crate::error::GogError;
use crate::word::Word;

pub const MAX_ORACLE_LEN: usize = 12;

/// All elements of ⟨generators⟩ of length ≤ `max_len` reachable by the
/// capped closure.
pub fn enumerate_elements(
    generators: &[Word],
    max_len: usize,
) -> Result<HashSet<Word>, GogError> {
    Ok(enumerate_elements_bounded(generators, max_len, usize::MAX)?
        .expect("unbounded closure cannot abort"))
}

/// Like [`enumerate_elements`], but gives up and returns `None` as soon as
/// the closure exceeds `limit` elements. Callers use this to pick the
/// largest affordable cap.
pub fn enumerate_elements_bounded(
    generators: &[Word],
    max_len: usize,
    limit: usize,
) -> Result<Option<HashSet<Word>>, GogError> {
    if max_len > MAX_ORACLE_LEN {
        return Err(GogError::OracleCap(max_len, MAX_ORACLE_LEN));
    }
    let mut multipliers = Vec::new();
    for g in generators {
        if !g.is_empty() {
            multipliers.push(g.clone());
            multipliers.push(g.inverse());
        }
    }
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(Word::identity());
    let mut frontier = vec![Word::identity()];
    while let Some(w) = frontier.pop() {
        for m in &multipliers {
            let next = m.concat(&w);
            if next.len() <= max_len && seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Ok(None);
                }
                frontier.push(next);
            }
        }
    }
    Ok(Some(seen))
}

/// enumerate_elements(g1) ∩ enumerate_elements(g2) within the cap.
pub fn brute_intersection(
    g1: &[Word],
    g2: &[Word],
    max_len: usize,
) -> Result<HashSet<Word>, GogError> {
    let s1 = enumerate_elements(g1, max_len)?;
    let s2 = enumerate_elements(g2, max_len)?;
    Ok(s1.intersection(&s2).cloned().collect())
}

/// All freely reduced words of length ≤ `max_len` over `rank` generators.
pub fn all_reduced_words(rank: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..rank {
                for positive in [true, false] {
                    let l = crate::word::Letter::new(g, positive);
                    if w.letters().last().map_or(false, |&last| last.is_inverse_of(l)) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn powers_of_a() {
        let s = enumerate_elements(&[w("a")], 3).unwrap();
        let expect: HashSet<Word> = ["", "a", "A", "aa", "AA", "aaa", "AAA"]
            .iter()
            .map(|t| w(t))
            .collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn empty_generating_set() {
        let s = enumerate_elements(&[], 5).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&Word::identity()));
    }

    #[test]
    fn cap_guard() {
        assert!(enumerate_elements(&[w("a")], 13).is_err());
    }

    #[test]
    fn intersection_of_disjoint_letters_is_trivial() {
        let s = brute_intersection(&[w("a")], &[w("b")], 6).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn intersection_of_identical_inputs() {
        let g = vec![w("aa"), w("b")];
        let s = brute_intersection(&g, &g, 4).unwrap();
        assert_eq!(s, enumerate_elements(&g, 4).unwrap());
    }

    #[test]
    fn conjugate_pair_is_powers_of_a() {
        let s = brute_intersection(&[w("a"), w("baB")], &[w("a"), w("Bab")], 8).unwrap();
        for x in &s {
            assert!(
                x.letters().iter().all(|l| l.gen == 0),
                "unexpected element {x}"
            );
        }
        assert!(s.contains(&w("aaaaaaaa")));
        assert_eq!(s.len(), 17); // a^k for |k| <= 8
    }

    #[test]
    fn bounded_enumeration_aborts() {
        let g = vec![w("a"), w("b")];
        assert!(enumerate_elements_bounded(&g, 8, 10).unwrap().is_none());
        let full = enumerate_elements(&g, 4).unwrap();
        let bounded = enumerate_elements_bounded(&g, 4, full.len()).unwrap();
        assert_eq!(bounded, Some(full));
    }

    #[test]
    fn monotone_in_cap() {
        let g = vec![w("ab"), w("ba")];
        let small = enumerate_elements(&g, 4).unwrap();
        let large = enumerate_elements(&g, 6).unwrap();
        assert!(small.is_subset(&large));
    }

    #[test]
    fn all_reduced_words_count() {
        // rank 2: 1 + 4 + 4*3 + 4*9 words up to length 3
        assert_eq!(all_reduced_words(2, 3).len(), 1 + 4 + 12 + 36);
    }
}
