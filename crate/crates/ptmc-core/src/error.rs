use core::fmt;

/// Errors produced by code construction, analysis, and simulation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than two users requested; a single user has no multiple access.
    TooFewUsers { users: u64 },
    /// Code weight below two.
    WeightTooSmall { weight: u64 },
    /// Pascal row index beyond the largest row that is exact in 64 bits.
    RowTooLarge { n: usize, max: usize },
    /// User index outside 1..=N.
    UserOutOfRange { user: usize, users: usize },
    /// Two sequences that must agree in length do not.
    LengthMismatch { expected: usize, actual: usize },
    /// A matrix with zero rows or zero columns where content is required.
    EmptyMatrix,
    /// Matrix rows of differing lengths.
    RaggedRows {
        row: usize,
        expected: usize,
        actual: usize,
    },
    /// Matrix entry other than 0 or 1.
    NonBinaryEntry { row: usize, col: usize },
    /// Transmit bit other than 0 or 1.
    NonBinaryBit { index: usize },
    /// Hadamard order outside the supported range.
    HadamardOrderOutOfRange { order: u32, min: u32, max: u32 },
    /// Family parameter below its documented minimum.
    FamilyParamTooSmall {
        param: &'static str,
        value: u64,
        min: u64,
    },
    /// An exact 64-bit evaluation would overflow.
    ArithmeticOverflow,
    /// Exhaustive simulation enumerates 2^N patterns; N is capped.
    TooManyUsersForExhaustive { users: usize, max: usize },
    /// Simulation needs at least one trial.
    ZeroTrials,
    /// Activity probability outside [0, 1].
    InvalidActivity { activity: f64 },
    /// Negative or non-finite noise deviation.
    InvalidNoiseSigma { sigma: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewUsers { users } => {
                write!(f, "number of users must be at least 2, got {users}")
            }
            Error::WeightTooSmall { weight } => {
                write!(f, "code weight must be at least 2, got {weight}")
            }
            Error::RowTooLarge { n, max } => {
                write!(
                    f,
                    "Pascal row {n} exceeds row {max}, the largest row exact in 64-bit integers"
                )
            }
            Error::UserOutOfRange { user, users } => {
                write!(f, "user {user} out of range 1..={users}")
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::EmptyMatrix => write!(f, "matrix has no rows or no columns"),
            Error::RaggedRows {
                row,
                expected,
                actual,
            } => {
                write!(
                    f,
                    "row {row} has {actual} entries, expected {expected} as in earlier rows"
                )
            }
            Error::NonBinaryEntry { row, col } => {
                write!(f, "entry at row {row}, column {col} is not 0 or 1")
            }
            Error::NonBinaryBit { index } => {
                write!(f, "transmit bit {index} is not 0 or 1")
            }
            Error::HadamardOrderOutOfRange { order, min, max } => {
                write!(f, "Hadamard order {order} outside {min}..={max}")
            }
            Error::FamilyParamTooSmall { param, value, min } => {
                write!(f, "family parameter {param} must be at least {min}, got {value}")
            }
            Error::ArithmeticOverflow => {
                write!(f, "result does not fit in 64-bit integer arithmetic")
            }
            Error::TooManyUsersForExhaustive { users, max } => {
                write!(
                    f,
                    "exhaustive simulation enumerates 2^N patterns; N={users} exceeds the cap of {max}"
                )
            }
            Error::ZeroTrials => write!(f, "simulation needs at least one trial"),
            Error::InvalidActivity { activity } => {
                write!(f, "activity probability {activity} outside [0, 1]")
            }
            Error::InvalidNoiseSigma { sigma } => {
                write!(f, "noise deviation {sigma} must be finite and non-negative")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
