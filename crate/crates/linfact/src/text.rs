//! Integer-alphabet texts.
//!
//! Every algorithm in this crate works on strings over a dense integer
//! alphabet `{1, .., sigma+1}` where symbol `1` is a unique terminator
//! appended to the input. Encoding re-ranks the distinct bytes of the
//! input in byte order so symbol order equals byte order.

use std::fmt;

/// Internal id of the terminator symbol. It is the smallest symbol, which
/// is what induced sorting requires of the last character.
pub const SENTINEL: u32 = 1;

/// Mapping between internal symbol ids and original bytes.
///
/// Ids are dense: byte ranks start at 2 (1 is the sentinel), assigned in
/// ascending byte order so that symbol comparisons agree with byte
/// comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    byte_for_symbol: Vec<u8>,
}

impl Alphabet {
    /// Build the alphabet of all distinct bytes occurring in `chunks`.
    pub fn from_bytes<'a, I>(chunks: I) -> Alphabet
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let mut seen = [false; 256];
        for chunk in chunks {
            for &b in chunk {
                seen[b as usize] = true;
            }
        }
        let byte_for_symbol = (0..256u16)
            .filter(|&b| seen[b as usize])
            .map(|b| b as u8)
            .collect();
        Alphabet { byte_for_symbol }
    }

    /// Number of distinct input symbols (the sentinel not included).
    pub fn sigma(&self) -> usize {
        self.byte_for_symbol.len()
    }

    /// Internal symbol id for a byte, if the byte is in the alphabet.
    pub fn symbol_of(&self, byte: u8) -> Option<u32> {
        self.byte_for_symbol
            .binary_search(&byte)
            .ok()
            .map(|rank| rank as u32 + 2)
    }

    /// Original byte for a symbol id. `None` for the sentinel or for ids
    /// outside the alphabet.
    pub fn byte_of(&self, symbol: u32) -> Option<u8> {
        if symbol < 2 {
            return None;
        }
        self.byte_for_symbol.get(symbol as usize - 2).copied()
    }

    /// True if the input contained a literal `'$'` byte, in which case
    /// renderers must escape it to keep the sentinel glyph unambiguous.
    pub fn contains_dollar(&self) -> bool {
        self.byte_for_symbol.binary_search(&b'$').is_ok()
    }
}

/// A sentinel-terminated string over the dense integer alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    symbols: Vec<u32>,
    alphabet: Alphabet,
}

/// Error returned when decoding meets a symbol with no byte mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownSymbol(pub u32);

impl fmt::Display for UnknownSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "symbol {} has no byte mapping", self.0)
    }
}

impl std::error::Error for UnknownSymbol {}

impl Text {
    /// Encode a byte string. The sentinel is appended, so the result has
    /// length `bytes.len() + 1`. Empty input yields the sentinel alone.
    pub fn encode(bytes: &[u8]) -> Text {
        let alphabet = Alphabet::from_bytes([bytes]);
        Text::encode_with(bytes, alphabet)
    }

    /// Encode several byte strings over one shared alphabet, so their
    /// symbols are mutually comparable (required by the generalized
    /// suffix tree builder).
    pub fn encode_set(strings: &[&[u8]]) -> Vec<Text> {
        let alphabet = Alphabet::from_bytes(strings.iter().copied());
        strings
            .iter()
            .map(|s| Text::encode_with(s, alphabet.clone()))
            .collect()
    }

    fn encode_with(bytes: &[u8], alphabet: Alphabet) -> Text {
        let mut symbols = Vec::with_capacity(bytes.len() + 1);
        for &b in bytes {
            // Every byte is in the alphabet by construction.
            symbols.push(alphabet.symbol_of(b).unwrap());
        }
        symbols.push(SENTINEL);
        Text { symbols, alphabet }
    }

    /// Decode back to the original bytes, sentinel stripped.
    pub fn decode(&self) -> Result<Vec<u8>, UnknownSymbol> {
        let mut out = Vec::with_capacity(self.symbols.len() - 1);
        for &s in &self.symbols[..self.symbols.len() - 1] {
            out.push(self.alphabet.byte_of(s).ok_or(UnknownSymbol(s))?);
        }
        Ok(out)
    }

    /// Symbols including the trailing sentinel.
    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Total length `n`, sentinel included.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // there is always at least the sentinel
    }

    /// Count of distinct input symbols.
    pub fn sigma(&self) -> usize {
        self.alphabet.sigma()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}
