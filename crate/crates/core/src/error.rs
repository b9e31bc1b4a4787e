use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `(0, 0)` names no line.
    OriginPoint,
    IdenticalPoints,
    SingularTransform,
    /// Two coefficient points collinear with the origin name parallel lines,
    /// which can never be consecutive sides of a cell.
    ParallelPair,
    DegenerateDirection,
    PointOffLine,
    PointNotInSet,
    /// The seed `(P1, P2, D1)` is not a corner of any cell: some other line
    /// of the set passes through the vertex and splits the angle.
    NotACellCorner,
    /// A walk failed to close within `2 * |S|` steps.
    WalkBoundExceeded {
        steps: usize,
    },
    InvalidLattice(&'static str),
    NonConvexPolygon,
    EmptyInput,
    PointOnLine,
    ParseRational,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OriginPoint => f.write_str("(0,0) is not a point of the coefficient plane"),
            Error::IdenticalPoints => f.write_str("the two points must be distinct"),
            Error::SingularTransform => f.write_str("transform is singular"),
            Error::ParallelPair => f.write_str("points are collinear with the origin (their lines are parallel)"),
            Error::DegenerateDirection => f.write_str("direction vector is zero"),
            Error::PointOffLine => f.write_str("point does not lie on the line"),
            Error::PointNotInSet => f.write_str("point is not a member of the set"),
            Error::NotACellCorner => f.write_str("the seed sides do not meet at a cell corner"),
            Error::WalkBoundExceeded { steps } => {
                write!(f, "cell walk did not close after {steps} steps")
            }
            Error::InvalidLattice(why) => write!(f, "invalid lattice: {why}"),
            Error::NonConvexPolygon => f.write_str("polygon is not convex"),
            Error::EmptyInput => f.write_str("input is empty"),
            Error::PointOnLine => f.write_str("point lies on a line of the arrangement"),
            Error::ParseRational => f.write_str("expected an integer or a fraction p/q"),
        }
    }
}

impl core::error::Error for Error {}
