use std::cmp::Ordering;
use std::fmt;

/// Exponent pair `(i, j)` standing for `x^i y^j` on the primal side and
/// `φ^i ε^j` on the dual side.
///
/// Ordered graded-lexicographically: total degree, then `i`, then `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub i: i64,
    pub j: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0 };

    pub const fn new(i: i64, j: i64) -> Self {
        Monomial { i, j }
    }

    pub fn degree(&self) -> i64 {
        self.i + self.j
    }

    pub fn is_nonnegative(&self) -> bool {
        self.i >= 0 && self.j >= 0
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Monomial::new(self.i + di, self.j + dj)
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        Monomial::new(self.i + other.i, self.j + other.j)
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub(crate) fn write_with(&self, f: &mut fmt::Formatter<'_>, vars: (&str, &str)) -> fmt::Result {
        if self.i == 0 && self.j == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (name, e) in [(vars.0, self.i), (vars.1, self.j)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl From<(i64, i64)> for Monomial {
    fn from((i, j): (i64, i64)) -> Self {
        Monomial::new(i, j)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
