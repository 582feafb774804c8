use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The eight length-3 signatures, indexed 1..=8 in the conventional order.
pub const TABLE: [&str; 8] = ["+++", "---", "+-+", "-+-", "++-", "+--", "-++", "--+"];

/// A grid-class descriptor: a word over `{+, -}` of length at least 2.
///
/// Segment `i` of a member permutation is increasing when `signs[i]` is `+`
/// and decreasing when it is `-`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    signs: Vec<Sign>,
}

impl Signature {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::Domain(format!(
                "a signature needs at least 2 signs, got {}",
                signs.len()
            )));
        }
        Ok(Signature { signs })
    }

    /// Signature number `index` (1..=8) of the length-3 table.
    pub fn table(index: usize) -> Result<Self> {
        match index.checked_sub(1).and_then(|i| TABLE.get(i)) {
            Some(lit) => lit.parse(),
            None => Err(Error::Parse(format!(
                "unknown signature index s{index}; expected s1..s8"
            ))),
        }
    }

    /// All eight length-3 signatures in table order.
    pub fn table_all() -> Vec<Signature> {
        (1..=8).map(|i| Signature::table(i).unwrap()).collect()
    }

    /// Position of this signature in the length-3 table, if it is one.
    pub fn table_index(&self) -> Option<usize> {
        let lit = self.to_string();
        TABLE.iter().position(|t| *t == lit).map(|i| i + 1)
    }

    /// Every signature of length `k`, in lexicographic order with `+` first.
    pub fn all_of_length(k: usize) -> Vec<Signature> {
        assert!((2..=63).contains(&k), "signature length out of range");
        (0u64..1 << k)
            .map(|bits| {
                let signs = (0..k)
                    .map(|i| {
                        if bits >> (k - 1 - i) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect();
                Signature { signs }
            })
            .collect()
    }

    /// The two alternating signatures of length `k`: `+-+-...` then `-+-+...`.
    pub fn alternating(k: usize) -> Result<[Signature; 2]> {
        let up: Vec<Sign> = (0..k)
            .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
            .collect();
        let up = Signature::new(up)?;
        let down = up.complement();
        Ok([up, down])
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn reverse(&self) -> Signature {
        Signature {
            signs: self.signs.iter().rev().copied().collect(),
        }
    }

    pub fn complement(&self) -> Signature {
        Signature {
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    /// `s3` for table signatures, the literal otherwise.
    pub fn label(&self) -> String {
        match self.table_index() {
            Some(i) => format!("s{i}"),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts a literal such as `+-+` (ASCII or Unicode minus) or a table
    /// index such as `s3`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix(['s', 'S']) {
            let index: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad signature index {text:?}")))?;
            return Signature::table(index);
        }
        let signs = text
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in signature {text:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Signature::new(signs).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
