use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic orders must be nonempty")]
    EmptyOrders,

    #[error("cyclic order 0 is not allowed")]
    ZeroOrder,

    #[error("cyclic order {order} is not a power of the prime {prime}")]
    MixedPrimes { order: u64, prime: u64 },

    #[error("order of the top generator must be at least 1")]
    ZeroTopOrder,

    #[error("action matrix has shape {rows}x{cols} but H has {dim} cyclic factors")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        dim: usize,
    },

    #[error(
        "action is not well defined on H: entry ({row}, {col}) times order {col_order} \
         is not divisible by order {row_order}"
    )]
    NotWellDefined {
        row: usize,
        col: usize,
        row_order: u64,
        col_order: u64,
    },

    #[error("action is not invertible on H")]
    NotInvertible,

    #[error("order of the action does not divide m = {m}")]
    ActionOrderMismatch { m: u64 },

    #[error("element has {found} H-coordinates but the group has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("element is not in normal form: coordinate {coordinate} = {value} not below {order}")]
    NotNormalForm {
        coordinate: usize,
        value: u64,
        order: u64,
    },

    #[error("group order overflows 64 bits")]
    OrderOverflow,

    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    CapExceeded { order: u64, cap: u64 },

    #[error("lower central series stabilizes at a nontrivial subgroup of order {order}")]
    NotNilpotent { order: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group order {0} is not a prime power")]
    NotPrimePowerOrder(u64),

    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("r must be at least 1")]
    InvalidR,

    #[error("dihedral parameter n = {0} must be a power of 2 and at least 4")]
    InvalidDihedral(u64),

    #[error("class c must be between 1 and 62 (got {0})")]
    InvalidClass(u64),

    #[error("group is abelian: its central quotient is trivial")]
    TrivialQuotient,

    #[error("writing output: {0}")]
    Io(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// The innermost error, with all context layers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}
