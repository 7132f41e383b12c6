use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong while building or querying a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A table with no rows.
    EmptyTable,
    /// Row `row` has `len` entries instead of `order`.
    NotSquare { row: usize, len: usize, order: usize },
    /// `table[row][col] = value` is not an element index.
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    /// `(a·b)·c ≠ a·(b·c)`.
    NotAssociative { a: usize, b: usize, c: usize },
    /// Labels must be `order` distinct strings.
    BadLabels,
    /// `element` lies in no subgroup.
    NotCompletelyRegular { element: usize },
    /// `a·b` leaves the subset.
    NotClosed { a: usize, b: usize },
    /// `a ≡ b` but `c·a ≢ c·b` (`left = true`) or `a·c ≢ b·c`.
    NotCongruence { a: usize, b: usize, c: usize, left: bool },
    /// Two congruences live on different semigroups.
    HostMismatch,
    /// A partition or relation of the wrong size was supplied.
    SizeMismatch { expected: usize, found: usize },
    /// The operation enumerates structures and refuses this order.
    OrderBoundExceeded { order: usize, bound: usize },
    /// The semigroup handed to a Rees matrix construction is not a group.
    NotAGroup,
    /// A sandwich matrix has the wrong shape or invalid entries.
    InvalidSandwich,
    /// A min-network branch did not stabilize within the depth cap.
    NotStabilized { depth: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyTable => write!(f, "empty Cayley table"),
            Error::NotSquare { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            Error::IndexOutOfRange { row, col, value, order } => write!(
                f,
                "entry ({row},{col}) = {value} is out of range for order {order}"
            ),
            Error::NotAssociative { a, b, c } => {
                write!(f, "not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")
            }
            Error::BadLabels => write!(f, "labels must be distinct and one per element"),
            Error::NotCompletelyRegular { element } => {
                write!(f, "element {element} lies in no subgroup (not completely regular)")
            }
            Error::NotClosed { a, b } => write!(f, "subset not closed: {a}·{b} escapes"),
            Error::NotCongruence { a, b, c, left } => {
                if *left {
                    write!(f, "not a congruence: {a}≡{b} but {c}·{a} ≢ {c}·{b}")
                } else {
                    write!(f, "not a congruence: {a}≡{b} but {a}·{c} ≢ {b}·{c}")
                }
            }
            Error::HostMismatch => write!(f, "congruences belong to different semigroups"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::OrderBoundExceeded { order, bound } => {
                write!(f, "order {order} exceeds the configured bound {bound}")
            }
            Error::NotAGroup => write!(f, "not a group"),
            Error::InvalidSandwich => write!(f, "invalid sandwich matrix"),
            Error::NotStabilized { depth } => {
                write!(f, "min-network did not stabilize within depth {depth}")
            }
        }
    }
}

impl core::error::Error for Error {}
