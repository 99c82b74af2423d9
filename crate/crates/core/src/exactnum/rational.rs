use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num / den` as a [`Rational`].
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a [`Rational`].
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Renders as `"p"` or `"p/q"`; never as a decimal.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Deterministic sample with numerator in `[-9, 9]` and denominator in `{1, 2, 3}`.
///
/// Each `(seed, index)` pair maps to its own ChaCha stream, so the value does
/// not depend on how many samples were drawn before it.
pub fn sample_rational(seed: u64, index: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=3);
    q(num, den)
}

/// A cursor over the `sample_rational` stream of one seed.
#[derive(Debug, Clone)]
pub struct Sampler {
    seed: u64,
    index: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed, index: 0 }
    }

    /// An independent sampler derived from this seed and a label.
    ///
    /// Checks running in parallel each fork their own sampler so results do
    /// not depend on scheduling.
    pub fn fork(&self, label: &str) -> Sampler {
        // FNV-1a, stable across platforms and releases.
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in label.bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0100_0000_01b3);
        }
        Sampler::new(self.seed ^ hash.rotate_left(17))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_rational(&mut self) -> Rational {
        let value = sample_rational(self.seed, self.index);
        self.index += 1;
        value
    }

    pub fn next_nonzero(&mut self) -> Rational {
        loop {
            let value = self.next_rational();
            if value != qi(0) {
                return value;
            }
        }
    }

    pub fn next_vec(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.next_rational()).collect()
    }

    /// A small nonnegative integer in `0..bound`, drawn from the same stream.
    pub fn next_index(&mut self, bound: usize) -> usize {
        let value = self.next_rational();
        let folded = (value.numer() + BigInt::from(9)) * BigInt::from(3) + value.denom();
        let folded: usize = folded.to_string().parse().unwrap_or(0);
        folded % bound.max(1)
    }
}
