use std::fmt;

/// The integers `(m, n, p, q, d)` fixing the dual pair `gl_d × gl(m+p|n+q)`
/// acting on `ℂ[x, y, η, ζ]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Context {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub d: usize,
}

impl Context {
    pub const fn new(m: usize, n: usize, p: usize, q: usize, d: usize) -> Self {
        Context { m, n, p, q, d }
    }

    /// Rank of the superalgebra: `m + p + n + q`.
    pub fn super_rank(&self) -> usize {
        self.m + self.n + self.p + self.q
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m,n,p,q,d)=({},{},{},{},{})",
            self.m, self.n, self.p, self.q, self.d
        )
    }
}
