//! Shared helpers for the integration suites: a seed-pinned generator and
//! the common corpus of generator polynomials.

/// xorshift64*: deterministic, seed-pinned randomness for the oracle
/// suites.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Integer-coefficient corpus, degree <= 6, exercising linked roots,
/// contents, repeated factors and irreducible quadratics.
pub const CORPUS: [&str; 22] = [
    "X",
    "7",
    "6X",
    "X(X-1)",
    "2X(X-1)",
    "X(X-4)",
    "X(X-1)(X-2)",
    "5X(X-1)(X-2)",
    "X(X-2)(X-4)",
    "X(X-1)(X-2)(X-3)",
    "X(X-1)(X-2)(X-3)(X-4)",
    "X^2(X-1)",
    "X(X-1)^2(X-2)^3",
    "X^2+X+2",
    "(X^2+X+2)(X-1)",
    "(X^2+1)(X-1)(X+1)",
    "3(X-1)(X+1)",
    "(X-1)(X-3)(X-5)",
    "(2X-1)(X-1)",
    "(3X-2)(X-3)",
    "(X^2-2)(X-1)",
    "(X^2+X+4)(X+2)",
];
