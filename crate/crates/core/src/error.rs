use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group of order {order} exceeds the order cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("abelian group needs at least one factor")]
    EmptyFactors,
    #[error("cyclic factors must be positive")]
    ZeroFactor,
    #[error("invalid metacyclic parameters m={m}, n={n}, r={r}: need 1 <= r <= m and r^n = 1 (mod m)")]
    InvalidMetacyclic { m: u64, n: u64, r: u64 },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("cannot parse group spec: {0}")]
    Parse(String),
    #[error("cannot read group table: {0}")]
    Io(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    #[error("no working prime below 2^31 for exponent {exponent} and bound {bound}")]
    PrimeSearchExhausted { exponent: u64, bound: u64 },
    #[error("discrete Fourier length must be positive")]
    ZeroLength,
    #[error("length {m} does not divide the group exponent {exponent}")]
    LengthNotDividingExponent { m: u64, exponent: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharTableError {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("class sum algebra is not split over GF({p}): {detail}")]
    NotSplit { p: u64, detail: String },
    #[error("character table consistency failure: {0}")]
    Inconsistent(String),
    #[error("character index {index} out of range ({count} irreducibles)")]
    NoSuchCharacter { index: usize, count: usize },
    #[error("query needs level k={k} genus g={g} but the working prime only covers k<={k_max}, g<={g_max}")]
    BoundExceeded { k: u64, g: u64, k_max: u64, g_max: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("branch entry {index} (element {elem}) has order 1")]
    OrderViolation { index: usize, elem: usize },
    #[error("product of commutators and branch entries is {product}, not the identity")]
    RelationViolation { product: usize },
    #[error("entries generate a proper subgroup of order {subgroup_order}")]
    NotGenerating { subgroup_order: usize },
    #[error("vector has {found} handle entries, expected 2*g_quot = {expected}")]
    HandleCount { expected: usize, found: usize },
    #[error("entry {0} is not an element of the group")]
    UnknownElement(usize),
    #[error("branch order {0} is not the order of an element")]
    BadBranchOrder(u64),
    #[error("Riemann-Hurwitz gives a non-integral genus")]
    NonIntegralGenus,
    #[error("Riemann-Hurwitz gives negative genus {0}")]
    NegativeGenus(i64),
    #[error("enumeration exceeded the cap of {cap} vectors")]
    CapExceeded { cap: usize },
    #[error("cannot parse Hurwitz vector: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CwError {
    #[error(transparent)]
    Table(#[from] CharTableError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error("Chevalley-Weil needs genus >= 2, got {0}")]
    GenusTooSmall(i64),
    #[error("pluricanonical level must be >= {min}, got {k}")]
    BadLevel { k: u64, min: u64 },
    #[error("Chevalley-Weil consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error(transparent)]
    Cw(#[from] CwError),
    #[error("items have different genera ({first} and {other})")]
    MixedGenus { first: i64, other: i64 },
    #[error("decompositions are over different item sequences")]
    ItemMismatch,
    #[error("level range must start at k >= 1")]
    BadRange,
    #[error("periodicity violated: levels {k} and {k_shift} give different partitions")]
    PeriodicityViolated { k: u64, k_shift: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetacyclicError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the group is abelian (r = 1 mod m); the free-action bound needs a nonabelian group")]
    AbelianGroup,
    #[error("no free action on genus {g}: {reason}")]
    NoFreeAction { g: u64, reason: String },
    #[error("Schur multiplier formula is not integral for {0:?}")]
    NonIntegral(crate::group::MetacyclicParams),
}

/// Top-level error carried by the CLI and the C interface.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Cw(#[from] CwError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Metacyclic(#[from] MetacyclicError),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True for bad invocations (unparsable input), as opposed to inputs that
    /// parse but are mathematically inadmissible.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Usage(_)
                | Error::Group(GroupError::Parse(_))
                | Error::Group(GroupError::Io(_))
                | Error::Hurwitz(HurwitzError::Parse(_))
        )
    }
}
