//! Sequence encoding by position binding.
//!
//! A [`Codebook`] owns one atomic position vector `pos` and one atomic
//! vector per symbol, all derived deterministically from a single seed. A
//! symbol at integer position `i` is encoded as
//!
//! ```text
//! enc(c, i) = e_c (*) (pos^i + pos^(i+1) + ... + pos^(i+R-1))
//! ```
//!
//! where `(*)` is component-wise binding and `R` is the similarity radius:
//! the same symbol placed `j` positions apart keeps expected cosine
//! `max(0, (R - |j|) / R)`. A sequence is the superposition of its per
//! position symbol encodings, so the whole construction commutes with
//! shifts: encoding a string at offset `i + j` equals binding `pos^j` onto
//! the encoding at offset `i`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fhrr::Hypervector;

/// Stream of the position vector within a codebook seed. Symbol streams
/// start at 1 and are offset by code point, so they never collide.
const POS_STREAM: u64 = 0;

fn symbol_stream(c: char) -> u64 {
    1 + c as u64
}

/// ChaCha stream `stream` of the 64-bit `seed`. ChaCha8 is reproducible
/// across platforms, and distinct streams of one seed are independent.
fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Codebook seed for one benchmark realization: a splitmix64 finalizer over
/// the master seed and the realization index. Pure function, so realization
/// k can be recomputed or run concurrently without shared state.
pub fn realization_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Encoder parameters: dimensionality, similarity radius, seed, and whether
/// edge symbols are doubled before encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EncoderConfig {
    dim: usize,
    radius: usize,
    seed: u64,
    db: bool,
}

impl EncoderConfig {
    /// # Errors
    ///
    /// `InvalidDimension` if `dim` is zero; `InvalidArgument` if `radius`
    /// is zero.
    pub fn new(dim: usize, radius: usize, seed: u64, db: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        if radius == 0 {
            return Err(Error::InvalidArgument(
                "radius must be at least 1".into(),
            ));
        }
        Ok(Self { dim, radius, seed, db })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn db(&self) -> bool {
        self.db
    }

    /// Same parameters under a different seed.
    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }
}

/// A string of symbols anchored at an integer offset. Offsets may be
/// negative; positions are `offset, offset + 1, ...` in symbol order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionedSequence {
    symbols: Vec<char>,
    offset: i64,
}

impl PositionedSequence {
    pub fn new(s: &str, offset: i64) -> Self {
        Self {
            symbols: s.chars().collect(),
            offset,
        }
    }

    pub fn from_symbols(symbols: Vec<char>, offset: i64) -> Self {
        Self { symbols, offset }
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The same sequence moved `j` positions to the right.
    pub fn shifted(&self, j: i64) -> Self {
        Self {
            symbols: self.symbols.clone(),
            offset: self.offset + j,
        }
    }

    /// Literal doubling of the first and last symbol: "abc" becomes "aabcc"
    /// and the single-symbol "a" becomes "aaa". The offset is unchanged, so
    /// doubling commutes with shifting. Empty sequences are returned as is.
    pub fn with_doubled_edges(&self) -> Self {
        let Some((&first, &last)) = self.symbols.first().zip(self.symbols.last()) else {
            return self.clone();
        };
        let mut symbols = Vec::with_capacity(self.symbols.len() + 2);
        symbols.push(first);
        symbols.extend_from_slice(&self.symbols);
        symbols.push(last);
        Self {
            symbols,
            offset: self.offset,
        }
    }
}

/// Deterministic store of atomic vectors: one position vector plus one
/// vector per symbol, each derived from the seed alone. Symbol vectors are
/// created lazily on first use; because derivation ignores insertion order,
/// a symbol's vector is identical no matter when or from which thread it is
/// first requested.
pub struct Codebook {
    config: EncoderConfig,
    pos: Hypervector,
    symbols: RwLock<HashMap<char, Arc<Hypervector>>>,
    powers: RwLock<HashMap<i64, Arc<Hypervector>>>,
}

impl Codebook {
    pub fn new(config: EncoderConfig) -> Self {
        let mut rng = stream_rng(config.seed(), POS_STREAM);
        let pos = Hypervector::atomic(&mut rng, config.dim())
            .expect("config guarantees dim >= 1");
        Self {
            config,
            pos,
            symbols: RwLock::new(HashMap::new()),
            powers: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &EncoderConfig {
        &self.config
    }

    pub fn pos(&self) -> &Hypervector {
        &self.pos
    }

    /// The atomic vector of `c`, derived from the codebook seed and the
    /// symbol's code point. Repeated calls return bit-identical vectors.
    pub fn symbol(&self, c: char) -> Hypervector {
        (*self.symbol_arc(c)).clone()
    }

    /// Pre-populates vectors for an alphabet so later encode calls take only
    /// read locks.
    pub fn register<I: IntoIterator<Item = char>>(&self, alphabet: I) {
        for c in alphabet {
            self.symbol_arc(c);
        }
    }

    fn symbol_arc(&self, c: char) -> Arc<Hypervector> {
        if let Some(v) = self.symbols.read().expect("lock poisoned").get(&c) {
            return Arc::clone(v);
        }
        let mut map = self.symbols.write().expect("lock poisoned");
        let v = map.entry(c).or_insert_with(|| {
            let mut rng = stream_rng(self.config.seed(), symbol_stream(c));
            Arc::new(
                Hypervector::atomic(&mut rng, self.config.dim())
                    .expect("config guarantees dim >= 1"),
            )
        });
        Arc::clone(v)
    }

    fn pos_power(&self, t: i64) -> Arc<Hypervector> {
        if let Some(v) = self.powers.read().expect("lock poisoned").get(&t) {
            return Arc::clone(v);
        }
        let mut map = self.powers.write().expect("lock poisoned");
        let v = map.entry(t).or_insert_with(|| {
            Arc::new(self.pos.power(t).expect("pos is atomic"))
        });
        Arc::clone(v)
    }

    /// Superposition of the `radius` consecutive position powers starting
    /// at `i`: the positional part of a symbol encoding.
    pub fn position_window(&self, i: i64) -> Hypervector {
        let r = self.config.radius() as i64;
        let powers: Vec<Arc<Hypervector>> = (i..i + r).map(|t| self.pos_power(t)).collect();
        Hypervector::superpose(powers.iter().map(Arc::as_ref))
            .expect("radius >= 1 guarantees a nonempty window")
    }

    /// Encoding of symbol `c` at position `i`.
    pub fn encode_symbol(&self, c: char, i: i64) -> Hypervector {
        self.symbol_arc(c)
            .bind(&self.position_window(i))
            .expect("codebook vectors share one dimension")
    }

    /// Encoding of a positioned sequence: the superposition of its symbol
    /// encodings. When the codebook was configured with `db`, edge symbols
    /// are doubled first.
    ///
    /// # Errors
    ///
    /// `EmptySequence` if the sequence has no symbols.
    pub fn encode_sequence(&self, seq: &PositionedSequence) -> Result<Hypervector> {
        if seq.is_empty() {
            return Err(Error::EmptySequence);
        }
        let doubled;
        let seq = if self.config.db() {
            doubled = seq.with_doubled_edges();
            &doubled
        } else {
            seq
        };
        let dim = self.config.dim();
        let mut acc = vec![Complex64::new(0.0, 0.0); dim];
        for (k, &c) in seq.symbols().iter().enumerate() {
            let i = seq.offset() + k as i64;
            let sym = self.symbol_arc(c);
            let window = self.position_window(i);
            for ((a, w), s) in acc.iter_mut().zip(window.components()).zip(sym.components()) {
                *a += w * s;
            }
        }
        Ok(Hypervector::from_components(acc))
    }

    /// Encoding of `s` anchored at offset 0.
    pub fn encode_str(&self, s: &str) -> Result<Hypervector> {
        self.encode_sequence(&PositionedSequence::new(s, 0))
    }

    /// Moves an encoded vector `j` positions to the right by binding
    /// `pos^j` onto it. Shifting by `j` then by `-j` returns the original
    /// vector up to rounding.
    ///
    /// # Panics
    ///
    /// If `x` does not have this codebook's dimensionality.
    pub fn shift_hv(&self, x: &Hypervector, j: i64) -> Hypervector {
        assert_eq!(
            x.len(),
            self.config.dim(),
            "hypervector was not produced by this codebook"
        );
        self.pos_power(j)
            .bind(x)
            .expect("dimension checked above")
    }
}
