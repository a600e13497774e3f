use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} is outside 0..=5")]
    GradeOutOfRange(usize),
    #[error("indefinite element: |m|² = {0} is negative")]
    IndefiniteMagnitude(f64),
    #[error("cannot normalize element with |m|² = {0}")]
    Normalize(f64),
    #[error("not invertible: {0}")]
    NotInvertible(&'static str),
    #[error("exponential series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("point at infinity has no Euclidean position")]
    PointAtInfinity,
    #[error("squared distance {0} is negative")]
    NegativeDistance(f64),
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("flat blade: a line, not a circle")]
    LineNotCircle,
    #[error("flat blade: a plane, not a sphere")]
    PlaneNotSphere,
    #[error("round blade: not a line")]
    NotALine,
    #[error("imaginary {0}: negative squared radius {1}")]
    Imaginary(&'static str, f64),
    #[error("invalid argument: {0}")]
    Domain(&'static str),
    #[error("expected a grade-{expected} blade, found {found}")]
    WrongGrade { expected: usize, found: String },
}
