use thiserror::Error;

/// Every failure the library reports. Polynomials inside variants are
/// already rendered in canonical text form so errors stay cheap to clone and
/// print.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("declaration error: {0}")]
    Declaration(String),

    #[error("degree guard: intermediate degree {degree} exceeds cap {cap}")]
    DegreeGuard { degree: u32, cap: u32 },

    #[error("the presentation is the unit ideal")]
    UnitAlgebra,
    #[error("algebra has positive Krull dimension {0}")]
    PositiveDimension(usize),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("linearly dependent basis element at index {0}")]
    DependentBasis(usize),

    #[error("derivation is not well defined: generator {generator} maps to {image}, not 0")]
    NotWellDefined { generator: String, image: String },
    #[error("denominator reduces to zero")]
    ZeroDenominator,
    #[error("operation requires the algebra to be flagged as an integral domain")]
    DomainClaimAbsent,
    #[error("precondition ({condition}) fails for ideal {ideal}")]
    ConstantsPrecondition { condition: String, ideal: String },

    #[error("Jacobi identity fails on ({}, {}, {}): Jacobiator {jacobiator}", triple.0, triple.1, triple.2)]
    JacobiViolation { triple: (String, String, String), jacobiator: String },
    #[error("presentation is not a Poisson ideal: {{{generator}, {variable}}} reduces to {residue}")]
    PresentationNotPoisson { generator: String, variable: String, residue: String },
    #[error("direct and differential Poisson-ideal checks disagree (direct {direct}, differential {differential})")]
    InconsistentPaths { direct: bool, differential: bool },
    #[error("derivations do not commute on generator {generator}: commutator image {residue}")]
    NonCommuting { generator: String, residue: String },
    #[error("derivation is identically zero")]
    TrivialDerivation,
    #[error("dimension precondition violated: {0}")]
    DimensionPrecondition(String),

    #[error("section is invalid: prolongation residue of {generator} is {residue}")]
    InvalidSection { generator: String, residue: String },
    #[error("ideal does not contain the presentation generator {0}")]
    NotContained(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("degree hypothesis violated: generator {generator} has degree {degree} > {bound}")]
    DegreeHypothesis { generator: String, degree: u32, bound: u32 },
    #[error("Kronecker reduction not verified after {retries} retries; {witness} is not in the radical")]
    KroneckerFailed { retries: usize, witness: String },
    #[error("system is not affine-linear in the x-variables: {0}")]
    NotLinearSystem(String),

    #[error("Ore polynomials use different twisting derivations")]
    TwistMismatch,
    #[error("ideal is not differential: {0}")]
    NotDifferential(String),
    #[error("fit window holds {0} points; at least 3 are needed")]
    WindowTooSmall(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures caused by resource caps rather than by the input.
    pub fn is_resource_abort(&self) -> bool {
        matches!(self, Error::DegreeGuard { .. })
    }
}
