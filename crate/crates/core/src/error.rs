use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),

    #[error("generator `{name}` has degree {degree}; degrees must be at least 1")]
    InvalidDegree { name: String, degree: u32 },

    #[error("generator `{name}` has height {height}; heights must be at least 2")]
    InvalidHeight { name: String, height: u32 },

    #[error("degree {degree} is outside 0..={cap}")]
    DegreeOutOfRange { degree: u32, cap: u32 },

    #[error("operands belong to different algebras")]
    MixedAlgebras,

    #[error("element `{0}` is not homogeneous")]
    Inhomogeneous(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("cannot parse monomial `{0}`")]
    ParseMonomial(String),

    #[error("loop generator `{name}` has height {height}; only exterior or polynomial generators have a Koszul dual")]
    NotFree { name: String, height: u32 },

    #[error("differential for page {spec} applied to page {page}")]
    PageMismatch { spec: u32, page: u32 },

    #[error("differential value for `{generator}` has bidegree ({s}, {t}), expected ({expected_s}, {expected_t})")]
    BidegreeShift { generator: String, s: u32, t: i64, expected_s: u32, expected_t: i64 },

    #[error("d∘d is nonzero on `{0}`")]
    DSquaredNonzero(String),

    #[error("differential does not send cycles to cycles at `{0}`")]
    NotACycle(String),

    #[error("page {page} is not exact through degree {cap}; the stored headroom is exhausted")]
    PageNotReachable { page: u32, cap: u32 },

    #[error("pages start at r = 2, got r = {0}")]
    InvalidPage(u32),

    #[error("no differential assignment reproduces the target cohomology")]
    NoConsistentAssignment,

    #[error("{0} differential assignments reproduce the target cohomology")]
    AmbiguousDifferentials(usize),

    #[error("generator `{generator}` has {candidates} candidate differentials, budget is {budget}")]
    SearchBudgetExceeded { generator: String, candidates: u128, budget: u64 },

    #[error("category weight is undefined for `{0}`")]
    WeightUndefined(String),

    #[error("no E-infinity representative for `{0}`")]
    UnresolvedWeight(String),

    #[error("cohomology generator `{0}` has no matching column-1 permanent cycle")]
    NoSuspensionClass(String),

    #[error("class `{0}` fits no module summand")]
    UnclassifiedClass(String),

    #[error("unknown cell label `{0}`")]
    UnknownLabel(String),

    #[error("n must be at least 1, got {0}")]
    InvalidFibreIndex(u32),

    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    InconsistentBounds { lower: String, upper: String },

    #[error("unknown builtin space `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid fixture: {0}")]
    Fixture(String),

    #[error("fixture failed validation:\n{0}")]
    Validation(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
