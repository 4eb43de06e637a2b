//! String modules `M(w)`, the families `S(v)`, `P_v`, `I_v`, `R(α)`, `U(α)`,
//! and quasi-simple band modules.
//!
//! `R(α) = αΛ` is the uniserial module on the maximal direct path after
//! `α`; `U(α) = D(Λα)` is the uniserial module on the maximal direct path
//! ending just before `α`.

use crate::algebra::{ArrowId, GentleAlgebra, VertexId};
use crate::strings::{Band, Letter, StringWord};

/// The string module of a canonical string, with its dimension vector and
/// top/socle vertices in string order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringModule {
    word: StringWord,
    dims: Vec<usize>,
    top: Vec<VertexId>,
    socle: Vec<VertexId>,
}

impl StringModule {
    pub fn new(a: &GentleAlgebra, w: &StringWord) -> Self {
        let word = w.canonical(a);
        let verts = word.vertices(a);
        let mut dims = vec![0; a.vertex_count()];
        for v in &verts {
            dims[v.0] += 1;
        }
        let top = word.top_positions().into_iter().map(|i| verts[i]).collect();
        let socle = word
            .socle_positions()
            .into_iter()
            .map(|i| verts[i])
            .collect();
        StringModule {
            word,
            dims,
            top,
            socle,
        }
    }

    pub fn parse(a: &GentleAlgebra, text: &str) -> Result<Self, crate::error::StringError> {
        Ok(Self::new(a, &StringWord::parse(a, text)?))
    }

    pub fn simple(a: &GentleAlgebra, v: VertexId) -> Self {
        Self::new(a, &StringWord::trivial(v))
    }

    /// `P_v = M(q_1⁻¹ q_2)` with `q_i` the maximal paths starting with the
    /// arrows leaving `v`.
    pub fn projective(a: &GentleAlgebra, v: VertexId) -> Self {
        Self::new(a, &projective_word(a, v))
    }

    /// `I_v = M(p_1 p_2⁻¹)` with `p_i` the maximal paths ending with the
    /// arrows entering `v`.
    pub fn injective(a: &GentleAlgebra, v: VertexId) -> Self {
        Self::new(a, &injective_word(a, v))
    }

    pub fn r_module(a: &GentleAlgebra, alpha: ArrowId) -> Self {
        let p = a.maximal_path_after(alpha);
        Self::new(a, &StringWord::direct_path(a, a.target(alpha), &p))
    }

    pub fn u_module(a: &GentleAlgebra, alpha: ArrowId) -> Self {
        let q = a.maximal_path_before(alpha);
        let start = q.first().map_or(a.source(alpha), |&x| a.source(x));
        Self::new(a, &StringWord::direct_path(a, start, &q))
    }

    pub fn word(&self) -> &StringWord {
        &self.word
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.word.len() + 1
    }

    pub fn top(&self) -> &[VertexId] {
        &self.top
    }

    pub fn socle(&self) -> &[VertexId] {
        &self.socle
    }

    pub fn is_projective(&self, a: &GentleAlgebra) -> bool {
        match self.top[..] {
            [v] => self.word == projective_word(a, v).canonical(a),
            _ => false,
        }
    }

    pub fn is_injective(&self, a: &GentleAlgebra) -> bool {
        match self.socle[..] {
            [v] => self.word == injective_word(a, v).canonical(a),
            _ => false,
        }
    }

    pub fn text(&self, a: &GentleAlgebra) -> String {
        self.word.text(a)
    }
}

fn projective_word(a: &GentleAlgebra, v: VertexId) -> StringWord {
    let outs = a.sorted_by_name(a.outgoing(v));
    let mut letters: Vec<Letter> = Vec::new();
    if let Some(&q1) = outs.first() {
        letters.extend(
            a.maximal_path_from(q1)
                .iter()
                .rev()
                .map(|&x| Letter::inverse(x)),
        );
    }
    let start = letters.first().map_or(v, |l| l.source(a));
    if let Some(&q2) = outs.get(1) {
        letters.extend(a.maximal_path_from(q2).iter().map(|&x| Letter::direct(x)));
    }
    StringWord::from_parts(a, start, letters).expect("projective string is valid")
}

fn injective_word(a: &GentleAlgebra, v: VertexId) -> StringWord {
    let ins = a.sorted_by_name(a.incoming(v));
    let mut letters: Vec<Letter> = Vec::new();
    if let Some(&p1) = ins.first() {
        letters.extend(a.maximal_path_into(p1).iter().map(|&x| Letter::direct(x)));
    }
    let start = letters.first().map_or(v, |l| l.source(a));
    if let Some(&p2) = ins.get(1) {
        letters.extend(
            a.maximal_path_into(p2)
                .iter()
                .rev()
                .map(|&x| Letter::inverse(x)),
        );
    }
    StringWord::from_parts(a, start, letters).expect("injective string is valid")
}

/// Quasi-simple band module with unit parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandModule {
    band: Band,
    dims: Vec<usize>,
}

impl BandModule {
    pub fn new(a: &GentleAlgebra, band: &Band) -> Self {
        let mut dims = vec![0; a.vertex_count()];
        for v in band.vertices(a) {
            dims[v.0] += 1;
        }
        BandModule {
            band: band.clone(),
            dims,
        }
    }

    pub fn band(&self) -> &Band {
        &self.band
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.band.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(a: &GentleAlgebra, s: &str) -> StringModule {
        StringModule::parse(a, s).unwrap()
    }

    fn v(a: &GentleAlgebra, s: &str) -> VertexId {
        a.find_vertex(s).unwrap()
    }

    fn dims_of(a: &GentleAlgebra, pairs: &[(&str, usize)]) -> Vec<usize> {
        let mut d = vec![0; a.vertex_count()];
        for (n, k) in pairs {
            d[v(a, n).0] = *k;
        }
        d
    }

    #[test]
    fn string_module_examples() {
        let c4 = fixtures::c4();
        let f = m(&c4, "f");
        assert_eq!(f.dims(), dims_of(&c4, &[("4", 1), ("5", 1)]));
        assert_eq!(f.top(), [v(&c4, "4")]);
        assert_eq!(f.socle(), [v(&c4, "5")]);
        let be = m(&c4, "b e");
        assert_eq!(be.dims(), dims_of(&c4, &[("1", 1), ("2", 1), ("3", 1)]));
        assert_eq!(be.top(), [v(&c4, "1")]);
        assert_eq!(be.socle(), [v(&c4, "3")]);
        assert_eq!(m(&c4, "@6"), StringModule::simple(&c4, v(&c4, "6")));
        assert_eq!(m(&c4, "f -d"), m(&c4, "d -f"));
    }

    #[test]
    fn projectives_and_injectives() {
        let c4 = fixtures::c4();
        assert_eq!(StringModule::projective(&c4, v(&c4, "2")), m(&c4, "-e g"));
        assert_eq!(StringModule::projective(&c4, v(&c4, "4")), m(&c4, "f a"));
        assert_eq!(StringModule::injective(&c4, v(&c4, "1")), m(&c4, "f a"));
        let lin = fixtures::lin();
        assert_eq!(StringModule::projective(&lin, v(&lin, "2")), m(&lin, "e"));
        assert_eq!(StringModule::injective(&lin, v(&lin, "3")), m(&lin, "b e"));
        for a in [c4, lin, fixtures::tri3(), fixtures::a3(), fixtures::band()] {
            for x in a.vertices() {
                assert!(StringModule::projective(&a, x).is_projective(&a));
                assert!(StringModule::injective(&a, x).is_injective(&a));
            }
        }
    }

    #[test]
    fn r_and_u_modules() {
        let c4 = fixtures::c4();
        let arr = |n: &str| c4.find_arrow(n).unwrap();
        assert_eq!(StringModule::r_module(&c4, arr("b")), m(&c4, "e"));
        assert_eq!(StringModule::r_module(&c4, arr("a")), m(&c4, "@1"));
        assert_eq!(StringModule::r_module(&c4, arr("g")), m(&c4, "@6"));
        assert_eq!(StringModule::u_module(&c4, arr("a")), m(&c4, "f"));
        assert_eq!(StringModule::u_module(&c4, arr("b")), m(&c4, "@1"));
        let lin = fixtures::lin();
        assert_eq!(
            StringModule::r_module(&lin, lin.find_arrow("f").unwrap()),
            m(&lin, "a")
        );
        let tri = fixtures::tri3();
        assert_eq!(
            StringModule::u_module(&tri, tri.find_arrow("p").unwrap()),
            m(&tri, "@x")
        );
    }

    #[test]
    fn projectivity_tests() {
        let c4 = fixtures::c4();
        assert!(m(&c4, "f a").is_projective(&c4));
        assert!(!m(&c4, "f").is_projective(&c4));
        assert!(m(&fixtures::lin(), "e").is_projective(&fixtures::lin()));
        // Lemma: R(α) is projective exactly when α has no relation successor
        for a in [fixtures::c4(), fixtures::lin(), fixtures::tri3()] {
            for x in a.arrow_ids() {
                assert_eq!(
                    StringModule::r_module(&a, x).is_projective(&a),
                    a.relation_successor(x).is_none()
                );
                assert_eq!(
                    StringModule::u_module(&a, x).is_injective(&a),
                    a.relation_predecessor(x).is_none()
                );
            }
        }
    }

    #[test]
    fn band_module_dims() {
        let k = fixtures::band();
        let b = Band::parse(&k, "x -y").unwrap();
        let bm = BandModule::new(&k, &b);
        assert_eq!(bm.dims(), [1, 1]);
        let b2 = Band::parse(&k, "-y x").unwrap();
        assert_eq!(BandModule::new(&k, &b2), bm);
    }
}
