use std::fmt;

/// Named polynomial variable.
///
/// The derived ordering is the default lexicographic priority: earlier
/// variants (and smaller indices) rank higher.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Chart coordinate `x_{i,j}`, named by its (1-based) matrix position.
    X(u32, u32),
    /// The `x` coordinate of the Pet3 chart (the `(1,2)` entry).
    PetX,
    /// The `y` coordinate of the Pet3 chart (the `(1,1)` entry).
    PetY,
    /// Family parameter `t`.
    T,
    /// Symbolic eigenvalue `g_i`.
    Gamma(u32),
    /// Volume polynomial variable `L_i`.
    L(u32),
}

impl Var {
    pub fn x(i: usize, j: usize) -> Var {
        Var::X(i as u32, j as u32)
    }

    /// The `(row, col)` position of a chart coordinate.
    pub fn position(&self) -> Option<(usize, usize)> {
        match *self {
            Var::X(i, j) => Some((i as usize, j as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i, j) => write!(f, "x_{{{i},{j}}}"),
            Var::PetX => write!(f, "x"),
            Var::PetY => write!(f, "y"),
            Var::T => write!(f, "t"),
            Var::Gamma(i) => write!(f, "g_{i}"),
            Var::L(i) => write!(f, "L_{i}"),
        }
    }
}
