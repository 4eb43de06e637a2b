//! Strings and bands: reduced walks in the quiver that avoid the relations
//! in both directions.
//!
//! A letter is an arrow `α` (direct) or its formal inverse `α⁻¹`, with
//! `s(α⁻¹) = t(α)` and `t(α⁻¹) = s(α)`. Text syntax: whitespace-separated
//! tokens, `x` for a direct letter, `-x` for an inverse letter, `@v` for
//! the trivial string at `v`, and an optional `band:` prefix for bands.
//!
//! Whenever both ends of a trivial string may be extended, the arrow with
//! the smaller name is assigned to the left end.

use std::cmp::Ordering;

use crate::algebra::{ArrowId, GentleAlgebra, VertexId};
use crate::error::StringError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inverse(arrow: ArrowId) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn is_direct(self) -> bool {
        !self.inverse
    }

    pub fn inv(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, a: &GentleAlgebra) -> VertexId {
        if self.inverse {
            a.target(self.arrow)
        } else {
            a.source(self.arrow)
        }
    }

    pub fn target(self, a: &GentleAlgebra) -> VertexId {
        if self.inverse {
            a.source(self.arrow)
        } else {
            a.target(self.arrow)
        }
    }

    pub fn text(self, a: &GentleAlgebra) -> String {
        let name = a.arrow_name(self.arrow);
        if self.inverse {
            format!("-{name}")
        } else {
            name.to_owned()
        }
    }

    fn cmp_by_name(self, other: Letter, a: &GentleAlgebra) -> Ordering {
        a.arrow_name(self.arrow)
            .cmp(a.arrow_name(other.arrow))
            .then(self.inverse.cmp(&other.inverse))
    }
}

/// Check that `second` may follow `first` in a string.
pub fn check_pair(a: &GentleAlgebra, first: Letter, second: Letter) -> Result<(), StringError> {
    let names = || (first.text(a), second.text(a));
    if first.target(a) != second.source(a) {
        let (first, second) = names();
        return Err(StringError::EndpointMismatch { first, second });
    }
    if second == first.inv() {
        let (first, second) = names();
        return Err(StringError::Backtrack { first, second });
    }
    let blocked = match (first.inverse, second.inverse) {
        (false, false) => a.is_relation(first.arrow, second.arrow),
        // α⁻¹ β⁻¹ is the inverse of the path βα
        (true, true) => a.is_relation(second.arrow, first.arrow),
        _ => false,
    };
    if blocked {
        let (first, second) = names();
        return Err(StringError::RelationViolation { first, second });
    }
    Ok(())
}

pub fn pair_ok(a: &GentleAlgebra, first: Letter, second: Letter) -> bool {
    check_pair(a, first, second).is_ok()
}

fn cmp_words(a: &GentleAlgebra, x: &[Letter], y: &[Letter]) -> Ordering {
    for (l, m) in x.iter().zip(y) {
        match l.cmp_by_name(*m, a) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    x.len().cmp(&y.len())
}

fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inv()).collect()
}

/// A string, possibly trivial. Start and end vertices are stored so that
/// trivial strings `e_v` are representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    letters: Vec<Letter>,
    start: VertexId,
    end: VertexId,
}

impl StringWord {
    pub fn trivial(v: VertexId) -> Self {
        StringWord {
            letters: Vec::new(),
            start: v,
            end: v,
        }
    }

    /// Validate a letter sequence starting at `start`. For a non-empty
    /// sequence `start` must be the source of the first letter.
    pub fn from_parts(
        a: &GentleAlgebra,
        start: VertexId,
        letters: Vec<Letter>,
    ) -> Result<Self, StringError> {
        let Some(first) = letters.first() else {
            return Ok(Self::trivial(start));
        };
        if first.source(a) != start {
            return Err(StringError::EndpointMismatch {
                first: format!("@{}", a.vertex_name(start)),
                second: first.text(a),
            });
        }
        for w in letters.windows(2) {
            check_pair(a, w[0], w[1])?;
        }
        let end = letters.last().unwrap().target(a);
        Ok(StringWord {
            letters,
            start,
            end,
        })
    }

    /// Validate a non-empty letter sequence.
    pub fn new(a: &GentleAlgebra, letters: Vec<Letter>) -> Result<Self, StringError> {
        let start = letters.first().ok_or(StringError::Empty)?.source(a);
        Self::from_parts(a, start, letters)
    }

    /// The direct string `α_1 ⋯ α_k`; trivial at `at` when `path` is empty.
    pub fn direct_path(a: &GentleAlgebra, at: VertexId, path: &[ArrowId]) -> Self {
        let letters = path.iter().map(|&x| Letter::direct(x)).collect();
        Self::from_parts(a, at, letters).expect("path avoids relations")
    }

    pub fn parse(a: &GentleAlgebra, text: &str) -> Result<Self, StringError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(StringError::Empty);
        }
        if let Some(v) = tokens.iter().find_map(|t| t.strip_prefix('@')) {
            if tokens.len() != 1 {
                return Err(StringError::TrivialNotAlone);
            }
            let v = a
                .find_vertex(v)
                .ok_or_else(|| StringError::UnknownVertex(v.to_owned()))?;
            return Ok(Self::trivial(v));
        }
        Self::new(a, parse_letters(a, &tokens)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Same as [`is_trivial`](Self::is_trivial).
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    /// Vertex at each of the `len + 1` positions of the walk.
    pub fn vertices(&self, a: &GentleAlgebra) -> Vec<VertexId> {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(self.start);
        v.extend(self.letters.iter().map(|l| l.target(a)));
        v
    }

    pub fn invert(&self) -> Self {
        StringWord {
            letters: invert_letters(&self.letters),
            start: self.end,
            end: self.start,
        }
    }

    /// The smaller of `w` and `w⁻¹`, letters compared by arrow name and then
    /// direct before inverse.
    pub fn canonical(&self, a: &GentleAlgebra) -> Self {
        let inv = self.invert();
        if cmp_words(a, &inv.letters, &self.letters) == Ordering::Less {
            inv
        } else {
            self.clone()
        }
    }

    pub fn same_module(&self, other: &Self, a: &GentleAlgebra) -> bool {
        self.canonical(a) == other.canonical(a)
    }

    /// Contiguous piece `letters[i..j]`, starting at position `i`.
    pub fn substring(&self, a: &GentleAlgebra, i: usize, j: usize) -> Self {
        let start = if i == 0 {
            self.start
        } else {
            self.letters[i - 1].target(a)
        };
        let end = if j == 0 {
            self.start
        } else {
            self.letters[j - 1].target(a)
        };
        StringWord {
            letters: self.letters[i..j].to_vec(),
            start,
            end,
        }
    }

    pub fn text(&self, a: &GentleAlgebra) -> String {
        if self.is_trivial() {
            return format!("@{}", a.vertex_name(self.start));
        }
        let t: Vec<String> = self.letters.iter().map(|l| l.text(a)).collect();
        t.join(" ")
    }

    /// Positions not hit by either neighbouring letter: the top of `M(w)`.
    pub fn top_positions(&self) -> Vec<usize> {
        let m = self.len();
        (0..=m)
            .filter(|&i| {
                (i == 0 || self.letters[i - 1].inverse) && (i == m || self.letters[i].is_direct())
            })
            .collect()
    }

    /// Positions mapping nowhere: the socle of `M(w)`.
    pub fn socle_positions(&self) -> Vec<usize> {
        let m = self.len();
        (0..=m)
            .filter(|&i| {
                (i == 0 || self.letters[i - 1].is_direct()) && (i == m || self.letters[i].inverse)
            })
            .collect()
    }

    /// Alternating decomposition `w_1 w_2 ⋯ w_{2k}`, odd pieces inverse and
    /// even pieces direct, with trivial pieces inserted at the ends as needed.
    pub fn segments(&self, a: &GentleAlgebra) -> Vec<StringWord> {
        let mut out = Vec::new();
        let mut i = 0;
        let m = self.len();
        let mut want_inverse = true;
        while i < m || out.len() % 2 == 1 || out.is_empty() {
            let mut j = i;
            while j < m && self.letters[j].inverse == want_inverse {
                j += 1;
            }
            out.push(self.substring(a, i, j));
            i = j;
            want_inverse = !want_inverse;
        }
        out
    }

    /// Arrows `δ` such that `δ⁻¹ w` is a string.
    pub fn left_extension_arrows(&self, a: &GentleAlgebra) -> Vec<ArrowId> {
        let cands = a.outgoing(self.start);
        let found: Vec<ArrowId> = match self.letters.first() {
            None => cands.to_vec(),
            Some(&l) => cands
                .iter()
                .copied()
                .filter(|&d| pair_ok(a, Letter::inverse(d), l))
                .collect(),
        };
        a.sorted_by_name(&found)
    }

    /// Arrows `δ` such that `w δ` is a string.
    pub fn right_extension_arrows(&self, a: &GentleAlgebra) -> Vec<ArrowId> {
        let cands = a.outgoing(self.end);
        let found: Vec<ArrowId> = match self.letters.last() {
            None => cands.to_vec(),
            Some(&l) => cands
                .iter()
                .copied()
                .filter(|&d| pair_ok(a, l, Letter::direct(d)))
                .collect(),
        };
        a.sorted_by_name(&found)
    }

    /// Arrows `γ` such that `γ w` is a string.
    pub fn left_coextension_arrows(&self, a: &GentleAlgebra) -> Vec<ArrowId> {
        let cands = a.incoming(self.start);
        let found: Vec<ArrowId> = match self.letters.first() {
            None => cands.to_vec(),
            Some(&l) => cands
                .iter()
                .copied()
                .filter(|&g| pair_ok(a, Letter::direct(g), l))
                .collect(),
        };
        a.sorted_by_name(&found)
    }

    /// Arrows `γ` such that `w γ⁻¹` is a string.
    pub fn right_coextension_arrows(&self, a: &GentleAlgebra) -> Vec<ArrowId> {
        let cands = a.incoming(self.end);
        let found: Vec<ArrowId> = match self.letters.last() {
            None => cands.to_vec(),
            Some(&l) => cands
                .iter()
                .copied()
                .filter(|&g| pair_ok(a, l, Letter::inverse(g)))
                .collect(),
        };
        a.sorted_by_name(&found)
    }

    /// The end arrows used by the syzygy: `(left, right)`. For a trivial
    /// string the outgoing arrows are split, smaller name to the left.
    pub fn syzygy_ends(&self, a: &GentleAlgebra) -> (Option<ArrowId>, Option<ArrowId>) {
        split_ends(
            self.is_trivial(),
            self.left_extension_arrows(a),
            self.right_extension_arrows(a),
        )
    }

    /// The end arrows used by the cosyzygy, split like [`Self::syzygy_ends`].
    pub fn cosyzygy_ends(&self, a: &GentleAlgebra) -> (Option<ArrowId>, Option<ArrowId>) {
        split_ends(
            self.is_trivial(),
            self.left_coextension_arrows(a),
            self.right_coextension_arrows(a),
        )
    }

    /// Syzygy end arrows that lie on a relation cycle.
    ///
    /// This reads "minimally ends in a cycle" as the existence of a
    /// one-letter extension at an end, which is what string validity
    /// allows; it does not insist on the direction of the end segment.
    pub fn minimally_ends_in_cycle(&self, a: &GentleAlgebra) -> (Option<ArrowId>, Option<ArrowId>) {
        let (l, r) = self.syzygy_ends(a);
        let keep = |x: Option<ArrowId>| x.filter(|&x| a.on_relation_cycle(x));
        (keep(l), keep(r))
    }
}

fn split_ends(
    trivial: bool,
    left: Vec<ArrowId>,
    right: Vec<ArrowId>,
) -> (Option<ArrowId>, Option<ArrowId>) {
    if trivial {
        // both lists are the same sorted set of arrows at the vertex
        (left.first().copied(), left.get(1).copied())
    } else {
        debug_assert!(left.len() <= 1 && right.len() <= 1);
        (left.first().copied(), right.first().copied())
    }
}

fn parse_letters(a: &GentleAlgebra, tokens: &[&str]) -> Result<Vec<Letter>, StringError> {
    tokens
        .iter()
        .map(|t| {
            let (name, inverse) = match t.strip_prefix('-') {
                Some(n) => (n, true),
                None => (*t, false),
            };
            let arrow = a
                .find_arrow(name)
                .ok_or_else(|| StringError::UnknownArrow(name.to_owned()))?;
            Ok(Letter { arrow, inverse })
        })
        .collect()
}

/// A primitive cyclic string containing letters of both directions, stored
/// as its canonical representative over rotations and inversion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Band {
    letters: Vec<Letter>,
}

impl Band {
    pub fn new(a: &GentleAlgebra, letters: Vec<Letter>) -> Result<Self, StringError> {
        let n = letters.len();
        if n == 0 {
            return Err(StringError::Empty);
        }
        if letters[n - 1].target(a) != letters[0].source(a) {
            return Err(StringError::NotClosed);
        }
        for i in 0..n {
            check_pair(a, letters[i], letters[(i + 1) % n])?;
        }
        if letters.iter().all(|l| l.inverse) || letters.iter().all(|l| !l.inverse) {
            return Err(StringError::NotMixed);
        }
        let proper_power = (1..n)
            .filter(|d| n.is_multiple_of(*d))
            .any(|d| (0..n).all(|i| letters[i] == letters[(i + d) % n]));
        if proper_power {
            return Err(StringError::ProperPower);
        }
        let inv = invert_letters(&letters);
        let best = (0..n)
            .flat_map(|r| [rotate(&letters, r), rotate(&inv, r)])
            .min_by(|x, y| cmp_words(a, x, y))
            .unwrap();
        Ok(Band { letters: best })
    }

    pub fn parse(a: &GentleAlgebra, text: &str) -> Result<Self, StringError> {
        let body = text.trim_start();
        let body = body.strip_prefix("band:").unwrap_or(body);
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.iter().any(|t| t.starts_with('@')) {
            return Err(StringError::TrivialNotAlone);
        }
        Self::new(a, parse_letters(a, &tokens)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertex at each position; position `i` is the source of letter `i`.
    pub fn vertices(&self, a: &GentleAlgebra) -> Vec<VertexId> {
        self.letters.iter().map(|l| l.source(a)).collect()
    }

    /// Cyclic positions hit by no letter.
    pub fn top_positions(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| self.letters[(i + n - 1) % n].inverse && self.letters[i].is_direct())
            .collect()
    }

    /// Cyclic positions mapping nowhere.
    pub fn socle_positions(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| self.letters[(i + n - 1) % n].is_direct() && self.letters[i].inverse)
            .collect()
    }

    pub fn text(&self, a: &GentleAlgebra) -> String {
        let t: Vec<String> = self.letters.iter().map(|l| l.text(a)).collect();
        format!("band: {}", t.join(" "))
    }
}

fn rotate(letters: &[Letter], r: usize) -> Vec<Letter> {
    letters[r..].iter().chain(&letters[..r]).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(a: &GentleAlgebra, s: &str) -> StringWord {
        StringWord::parse(a, s).unwrap()
    }

    fn names(a: &GentleAlgebra, v: &[ArrowId]) -> Vec<String> {
        v.iter().map(|x| a.arrow_name(*x).to_owned()).collect()
    }

    #[test]
    fn parse_examples() {
        let c4 = fixtures::c4();
        assert_eq!(w(&c4, "f").len(), 1);
        assert!(matches!(
            StringWord::parse(&c4, "b g"),
            Err(StringError::RelationViolation { .. })
        ));
        assert!(matches!(
            StringWord::parse(&c4, "b -b"),
            Err(StringError::Backtrack { .. })
        ));
        assert!(matches!(
            StringWord::parse(&c4, "b d"),
            Err(StringError::EndpointMismatch { .. })
        ));
        assert!(matches!(
            StringWord::parse(&c4, "zz"),
            Err(StringError::UnknownArrow(_))
        ));
        assert!(matches!(
            StringWord::parse(&c4, "@1 b"),
            Err(StringError::TrivialNotAlone)
        ));
        // inverse letters: -g -b would be the inverse of b g
        assert!(StringWord::parse(&c4, "-g -b").is_err());
        assert!(StringWord::parse(&c4, "-e -b").is_ok());
    }

    #[test]
    fn inversion() {
        let c4 = fixtures::c4();
        assert_eq!(w(&c4, "b e").invert().text(&c4), "-e -b");
        assert_eq!(w(&c4, "@3").invert().text(&c4), "@3");
        let x = w(&c4, "-e -b");
        assert_eq!(x.invert().invert(), x);
    }

    #[test]
    fn canonical_forms() {
        let c4 = fixtures::c4();
        assert_eq!(w(&c4, "-e -b").canonical(&c4), w(&c4, "b e").canonical(&c4));
        assert_eq!(w(&c4, "-a").canonical(&c4).text(&c4), "a");
        assert_eq!(w(&c4, "@6").canonical(&c4).text(&c4), "@6");
        let x = w(&c4, "f -d").canonical(&c4);
        assert_eq!(x.canonical(&c4), x);
    }

    #[test]
    fn segment_examples() {
        let c4 = fixtures::c4();
        let seg = |s: &str| -> Vec<String> {
            w(&c4, s)
                .segments(&c4)
                .iter()
                .map(|x| x.text(&c4))
                .collect()
        };
        assert_eq!(seg("b e"), ["@1", "b e"]);
        assert_eq!(seg("-e g"), ["-e", "g"]);
        assert_eq!(seg("f -d"), ["@4", "f", "-d", "@6"]);
        assert_eq!(seg("@2"), ["@2", "@2"]);
    }

    #[test]
    fn extension_arrows() {
        let c4 = fixtures::c4();
        assert_eq!(names(&c4, &w(&c4, "e").left_extension_arrows(&c4)), ["g"]);
        assert!(w(&c4, "f").left_extension_arrows(&c4).is_empty());
        assert_eq!(names(&c4, &w(&c4, "f").right_extension_arrows(&c4)), ["a"]);
        assert!(w(&c4, "e").right_extension_arrows(&c4).is_empty());
        let lin = fixtures::lin();
        assert!(w(&lin, "e").left_extension_arrows(&lin).is_empty());
        let tri = fixtures::tri3();
        assert_eq!(
            names(&tri, &w(&tri, "@x").right_extension_arrows(&tri)),
            ["p"]
        );
    }

    #[test]
    fn ends_in_cycle() {
        let c4 = fixtures::c4();
        let (l, r) = w(&c4, "e").minimally_ends_in_cycle(&c4);
        assert_eq!((l, r), (c4.find_arrow("g"), None));
        let (l, r) = w(&c4, "f").minimally_ends_in_cycle(&c4);
        assert_eq!((l, r), (None, c4.find_arrow("a")));
        let lin = fixtures::lin();
        assert_eq!(w(&lin, "f").minimally_ends_in_cycle(&lin), (None, None));
    }

    #[test]
    fn trivial_ends_split_by_name() {
        let c4 = fixtures::c4();
        let (l, r) = w(&c4, "@2").syzygy_ends(&c4);
        assert_eq!((l, r), (c4.find_arrow("e"), c4.find_arrow("g")));
    }

    #[test]
    fn bands() {
        let k = fixtures::band();
        let b = Band::parse(&k, "band: x -y").unwrap();
        assert_eq!(b, Band::parse(&k, "y -x").unwrap());
        assert_eq!(b, Band::parse(&k, "-y x").unwrap());
        assert!(matches!(
            Band::parse(&k, "x -x"),
            Err(StringError::Backtrack { .. })
        ));
        assert!(matches!(
            Band::parse(&k, "x -y x -y"),
            Err(StringError::ProperPower)
        ));
        assert!(matches!(Band::parse(&k, "x"), Err(StringError::NotClosed)));
        let c4 = fixtures::c4();
        assert!(matches!(
            Band::parse(&c4, "b g d a"),
            Err(StringError::RelationViolation { .. })
        ));
        assert!(matches!(
            Band::parse(&c4, "-a -d -g -b"),
            Err(StringError::RelationViolation { .. })
        ));
    }
}
