//! Ultimately periodic infinite words ("lasso words").
//!
//! A lasso word is a finite stem followed by a nonempty cycle repeated
//! forever: `u·v^ω`. Distinct (stem, cycle) pairs can denote the same
//! infinite word; the canonical form makes the denotation unique:
//!
//! * the cycle is primitive (not a proper power of a shorter word), and
//! * the stem does not end with the cycle's last symbol (otherwise that
//!   symbol can be rolled from the stem into a rotation of the cycle).
//!
//! [`LassoWord`] values are always canonical — construction normalizes —
//! so derived equality coincides with equality of the denoted infinite
//! words.
//!
//! The text form is `STEM:CYCLE` with symbol tokens concatenated; parsing
//! segments each side against a given alphabet and rejects ambiguous
//! segmentations (only possible when one symbol is a prefix of another).

use std::fmt;

use crate::automaton::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// A canonical ultimately periodic word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LassoWord {
    stem: Vec<Symbol>,
    cycle: Vec<Symbol>,
}

/// Normalizes a (stem, cycle) pair to canonical form.
///
/// First the cycle is replaced by its primitive root, then trailing stem
/// symbols equal to the cycle's last symbol are absorbed by rotating the
/// cycle. Both steps preserve the denoted infinite word; the result is
/// canonical and the function is idempotent.
pub fn normalize(mut stem: Vec<Symbol>, mut cycle: Vec<Symbol>) -> (Vec<Symbol>, Vec<Symbol>) {
    assert!(!cycle.is_empty(), "cycle must be nonempty");

    // Primitive root: the shortest prefix whose repetition gives the cycle.
    let len = cycle.len();
    for d in 1..=len {
        if len.is_multiple_of(d) && cycle.chunks(d).all(|chunk| chunk == &cycle[..d]) {
            cycle.truncate(d);
            break;
        }
    }

    // Roll matching trailing symbols into the cycle: u·s and rotate.
    while let (Some(s), Some(c)) = (stem.last(), cycle.last()) {
        if s != c {
            break;
        }
        stem.pop();
        cycle.rotate_right(1);
    }

    (stem, cycle)
}

/// Whether a (stem, cycle) pair already is in canonical form.
pub fn is_canonical(stem: &[Symbol], cycle: &[Symbol]) -> bool {
    if cycle.is_empty() {
        return false;
    }
    let len = cycle.len();
    let primitive = !(1..len)
        .any(|d| len.is_multiple_of(d) && cycle.chunks(d).all(|chunk| chunk == &cycle[..d]));
    let rolled = match (stem.last(), cycle.last()) {
        (Some(s), Some(c)) => s != c,
        _ => true,
    };
    primitive && rolled
}

impl LassoWord {
    /// Builds a word from raw parts, normalizing to canonical form.
    ///
    /// Fails if the cycle is empty.
    pub fn new(stem: Vec<Symbol>, cycle: Vec<Symbol>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Word("cycle must be nonempty".into()));
        }
        let (stem, cycle) = normalize(stem, cycle);
        Ok(LassoWord { stem, cycle })
    }

    /// Convenience constructor from string tokens.
    pub fn build(stem: &[&str], cycle: &[&str]) -> Result<Self> {
        LassoWord::new(
            stem.iter().map(|t| Symbol::new(*t)).collect::<Result<_>>()?,
            cycle.iter().map(|t| Symbol::new(*t)).collect::<Result<_>>()?,
        )
    }

    /// The stem.
    pub fn stem(&self) -> &[Symbol] {
        &self.stem
    }

    /// The cycle (nonempty, primitive).
    pub fn cycle(&self) -> &[Symbol] {
        &self.cycle
    }

    /// `|stem| + |cycle|`.
    pub fn total_len(&self) -> usize {
        self.stem.len() + self.cycle.len()
    }

    /// The letter at position `i` of the infinite word (0-based).
    pub fn letter_at(&self, i: usize) -> &Symbol {
        if i < self.stem.len() {
            &self.stem[i]
        } else {
            &self.cycle[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// The first `len` letters of the infinite word.
    pub fn prefix(&self, len: usize) -> Vec<Symbol> {
        (0..len).map(|i| self.letter_at(i).clone()).collect()
    }

    /// Parses `STEM:CYCLE` text against an alphabet.
    ///
    /// Exactly one ':' must be present; each side is segmented into
    /// alphabet symbols. Segmentation failures and ambiguities are errors.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let colons = text.matches(':').count();
        if colons != 1 {
            return Err(Error::Word(format!(
                "expected exactly one ':' separating stem and cycle, found {colons}"
            )));
        }
        let (stem_text, cycle_text) = text.split_once(':').expect("one colon present");
        let stem = segment(stem_text, alphabet)?;
        let cycle = segment(cycle_text, alphabet)?;
        if cycle.is_empty() {
            return Err(Error::Word("cycle part is empty".into()));
        }
        LassoWord::new(stem, cycle)
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stem {
            f.write_str(s.as_str())?;
        }
        f.write_str(":")?;
        for s in &self.cycle {
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

/// Segments `text` into a sequence of alphabet symbols.
///
/// Dynamic program over byte positions; the path count is capped at two,
/// which is enough to distinguish "no segmentation" from "ambiguous".
fn segment(text: &str, alphabet: &Alphabet) -> Result<Vec<Symbol>> {
    let n = text.len();
    let mut ways = vec![0u8; n + 1];
    // (predecessor position, symbol index) for one contributing segmentation.
    let mut back: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    ways[0] = 1;
    for i in 0..n {
        if ways[i] == 0 {
            continue;
        }
        for (k, sym) in alphabet.iter().enumerate() {
            let t = sym.as_str();
            if text[i..].starts_with(t) {
                let j = i + t.len();
                ways[j] = (ways[j] + ways[i]).min(2);
                back[j] = Some((i, k));
            }
        }
    }
    match ways[n] {
        0 => Err(Error::Word(format!(
            "{text:?} cannot be segmented into alphabet symbols"
        ))),
        1 => {
            let mut symbols = Vec::new();
            let mut pos = n;
            while pos > 0 {
                let (prev, k) = back[pos].expect("path exists");
                symbols.push(alphabet.symbol(k).clone());
                pos = prev;
            }
            symbols.reverse();
            Ok(symbols)
        }
        _ => Err(Error::Word(format!(
            "{text:?} has multiple segmentations into alphabet symbols"
        ))),
    }
}

/// Enumerates every canonical lasso word with `|stem| ≤ stem_max` and
/// `|cycle| ≤ cycle_max`.
///
/// Order: ascending total length `|stem|+|cycle|`, then stem length, then
/// stem lexicographically, then cycle lexicographically — "lexicographic"
/// meaning alphabet declaration order. Non-canonical (stem, cycle) pairs
/// are skipped, so each ultimately periodic word in range appears exactly
/// once.
pub fn enumerate(alphabet: &Alphabet, stem_max: usize, cycle_max: usize) -> Vec<LassoWord> {
    let mut out = Vec::new();
    for total in 1..=stem_max + cycle_max {
        for stem_len in 0..=stem_max.min(total - 1) {
            let cycle_len = total - stem_len;
            if cycle_len > cycle_max {
                continue;
            }
            for_each_tuple(alphabet.len(), stem_len, &mut |stem_idx| {
                for_each_tuple(alphabet.len(), cycle_len, &mut |cycle_idx| {
                    let stem: Vec<Symbol> =
                        stem_idx.iter().map(|&k| alphabet.symbol(k).clone()).collect();
                    let cycle: Vec<Symbol> =
                        cycle_idx.iter().map(|&k| alphabet.symbol(k).clone()).collect();
                    if is_canonical(&stem, &cycle) {
                        out.push(LassoWord { stem, cycle });
                    }
                });
            });
        }
    }
    out
}

/// Calls `f` with every length-`len` tuple over `0..k`, in lexicographic
/// order.
fn for_each_tuple(k: usize, len: usize, f: &mut impl FnMut(&[usize])) {
    let mut tuple = vec![0usize; len];
    loop {
        f(&tuple);
        // Odometer increment; finish after the all-(k-1) tuple.
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if tuple[pos] + 1 < k {
                tuple[pos] += 1;
                tuple[pos + 1..].fill(0);
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(t: &str) -> Symbol {
        Symbol::new(t).unwrap()
    }

    fn syms(ts: &[&str]) -> Vec<Symbol> {
        ts.iter().map(|t| sym(t)).collect()
    }

    #[test]
    fn normalization_examples() {
        // Primitive root: (abab) → (ab).
        let (s, c) = normalize(vec![], syms(&["a", "b", "a", "b"]));
        assert!(s.is_empty());
        assert_eq!(c, syms(&["a", "b"]));

        // Rolling: a·(ba)^ω = (ab)^ω.
        let (s, c) = normalize(syms(&["a"]), syms(&["b", "a"]));
        assert!(s.is_empty());
        assert_eq!(c, syms(&["a", "b"]));

        // Both: ba·(aa)^ω = b·(a)^ω.
        let (s, c) = normalize(syms(&["b", "a"]), syms(&["a", "a"]));
        assert_eq!(s, syms(&["b"]));
        assert_eq!(c, syms(&["a"]));
    }

    #[test]
    fn normalize_is_idempotent_and_detected() {
        let cases: [(&[&str], &[&str]); 4] = [
            (&[], &["a"]),
            (&["a", "b"], &["a", "a", "b"]),
            (&["b"], &["a", "b"]),
            (&[], &["a", "b", "b"]),
        ];
        for (s, c) in cases {
            let (s1, c1) = normalize(syms(s), syms(c));
            assert!(is_canonical(&s1, &c1));
            let (s2, c2) = normalize(s1.clone(), c1.clone());
            assert_eq!((s1, c1), (s2, c2));
        }
        assert!(!is_canonical(&syms(&["a"]), &syms(&["b", "a"])));
        assert!(!is_canonical(&[], &syms(&["a", "a"])));
    }

    #[test]
    fn letters_and_display() {
        let w = LassoWord::build(&["a", "b"], &["b", "a"]).unwrap();
        // ab(ba)^ω canonical? last(stem)=b, last(cycle)=a → yes.
        assert_eq!(w.to_string(), "ab:ba");
        let letters: Vec<&str> = (0..6).map(|i| w.letter_at(i).as_str()).collect();
        assert_eq!(letters, vec!["a", "b", "b", "a", "b", "a"]);
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let ab = Alphabet::parse(&["a", "b"]).unwrap();
        let w = LassoWord::parse("ab:ba", &ab).unwrap();
        assert_eq!(w.to_string(), "ab:ba");
        // Parsing normalizes.
        assert_eq!(LassoWord::parse("a:ba", &ab).unwrap().to_string(), ":ab");
        assert_eq!(LassoWord::parse(":abab", &ab).unwrap().to_string(), ":ab");
        assert!(LassoWord::parse("ab", &ab).is_err());
        assert!(LassoWord::parse("a:b:a", &ab).is_err());
        assert!(LassoWord::parse("a:", &ab).is_err());
        assert!(LassoWord::parse("ac:b", &ab).is_err());

        // Ambiguity with prefix symbols.
        let amb = Alphabet::parse(&["a", "aa"]).unwrap();
        assert!(LassoWord::parse(":aa", &amb).is_err());
        // Unambiguous multi-char segmentation still works.
        let ok = Alphabet::parse(&["ab", "c"]).unwrap();
        assert_eq!(
            LassoWord::parse("abc:ab", &ok).unwrap().stem().len(),
            2
        );
    }

    #[test]
    fn enumeration_order_prefix() {
        let ab = Alphabet::parse(&["a", "b"]).unwrap();
        let words = enumerate(&ab, 1, 2);
        let texts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        // Total 1: cycles a, b. Total 2: stem ∅ first (cycles ab/ba; aa,
        // bb are not primitive), then stem-1 pairs with rolled forms
        // (a:ba, b:ab) skipped. Total 3: stem must be 1 (cycle_max is 2).
        assert_eq!(
            texts,
            vec![":a", ":b", ":ab", ":ba", "a:b", "b:a", "a:ab", "b:ba"],
        );
    }

    #[test]
    fn enumeration_is_canonical_and_complete() {
        let ab = Alphabet::parse(&["a", "b"]).unwrap();
        let words = enumerate(&ab, 3, 3);
        for w in &words {
            assert!(is_canonical(w.stem(), w.cycle()));
        }
        // Every raw pair within bounds normalizes into the enumerated set.
        let set: std::collections::HashSet<_> = words.iter().cloned().collect();
        for stem_len in 0..=3usize {
            for cycle_len in 1..=3usize {
                for_each_tuple(2, stem_len, &mut |s| {
                    for_each_tuple(2, cycle_len, &mut |c| {
                        let stem: Vec<Symbol> =
                            s.iter().map(|&k| ["a", "b"][k]).map(sym).collect();
                        let cycle: Vec<Symbol> =
                            c.iter().map(|&k| ["a", "b"][k]).map(sym).collect();
                        let w = LassoWord::new(stem, cycle).unwrap();
                        assert!(set.contains(&w), "missing {w}");
                    });
                });
            }
        }
    }
}
