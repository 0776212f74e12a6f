use std::fmt;

/// Betti numbers over the two-element field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Betti {
    pub b0: usize,
    pub b1: usize,
    pub b2: usize,
}

impl Betti {
    pub fn new(b0: usize, b1: usize, b2: usize) -> Self {
        Self { b0, b1, b2 }
    }

    pub fn chi(&self) -> i64 {
        self.b0 as i64 - self.b1 as i64 + self.b2 as i64
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.b0, self.b1, self.b2)
    }
}

impl fmt::Display for Betti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.b0, self.b1, self.b2, self.chi())
    }
}
