use thiserror::Error;

/// Reasons a quiver-with-relations presentation is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("relation mentions undeclared arrow `{0}`")]
    UnknownRelationArrow(String),
    #[error("relation `{first} {second}` is not a path: `{first}` ends at `{end}`, `{second}` starts at `{start}`")]
    NonComposableRelation {
        first: String,
        second: String,
        end: String,
        start: String,
    },
    #[error("duplicate relation `{0} {1}`")]
    DuplicateRelation(String, String),
    #[error("valence condition violated at vertex `{vertex}`: {count} {direction} arrows (at most 2 allowed)")]
    Valence {
        vertex: String,
        direction: &'static str,
        count: usize,
    },
    #[error("arrow `{arrow}` has two {side} arrows composing outside the relations: `{first}` and `{second}`")]
    NonUniqueComposable {
        arrow: String,
        side: &'static str,
        first: String,
        second: String,
    },
    #[error(
        "arrow `{arrow}` has two {side} arrows composing into a relation: `{first}` and `{second}`"
    )]
    NonUniqueRelation {
        arrow: String,
        side: &'static str,
        first: String,
        second: String,
    },
    #[error("algebra is infinite dimensional: oriented cycle without relations through {}", .0.join(" "))]
    InfiniteDimensional(Vec<String>),
    #[error("could not sample a gentle algebra within the retry budget")]
    SamplingBudget,
}

/// Reasons a word fails to be a string or band.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("empty word")]
    Empty,
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("a trivial string `@v` must be the only token")]
    TrivialNotAlone,
    #[error("letters `{first}` and `{second}` do not meet at a common vertex")]
    EndpointMismatch { first: String, second: String },
    #[error("backtrack `{first} {second}`")]
    Backtrack { first: String, second: String },
    #[error("letters `{first} {second}` run through a relation")]
    RelationViolation { first: String, second: String },
    #[error("band is not a closed walk")]
    NotClosed,
    #[error("band must contain both direct and inverse letters")]
    NotMixed,
    #[error("band is a proper power of a shorter cyclic word")]
    ProperPower,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("triangle {index} repeats edge `{edge}` (self-folded triangles are not supported)")]
    SelfFolded { index: usize, edge: String },
    #[error("internal edge `{edge}` lies in {count} triangles, expected 2")]
    InternalEdgeCount { edge: String, count: usize },
    #[error("boundary edge `{edge}` lies in {count} triangles, expected 1")]
    BoundaryEdgeCount { edge: String, count: usize },
    #[error("triangle {0} has no internal edge")]
    NoInternalEdge(usize),
    #[error("empty crossing sequence")]
    EmptyArc,
    #[error("crossed edge `{0}` is not an internal edge")]
    NotInternal(String),
    #[error("edges `{0}` and `{1}` share no triangle")]
    NotAdjacent(String, String),
    #[error("edges `{0}` and `{1}` share two triangles; annotate the crossing list")]
    AmbiguousAdjacency(String, String),
    #[error("triangulation does not give a gentle algebra: {0}")]
    NotGentle(#[from] AlgebraError),
    #[error("crossing sequence is not an arc: {0}")]
    InvalidArc(StringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("integer overflow during exact elimination")]
    Overflow,
    #[error("resolution depth budget of {0} exceeded")]
    DepthBudget(usize),
    #[error("cover map is not surjective at vertex {0}")]
    NotSurjective(usize),
}

/// Line-oriented file format errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

/// Failure to load an input file: either its syntax or its content.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}
