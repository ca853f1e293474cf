use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::ParseError;

/// Nesting limit for parsed lineage strings.
const MAX_DEPTH: usize = 256;

/// Construction history of a basis element: the index of an input
/// generator, or the pair of lineages of the S-pair whose remainder it is.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Lineage {
    Leaf(usize),
    Pair(Arc<Lineage>, Arc<Lineage>),
}

impl Lineage {
    pub fn leaf(index: usize) -> Self {
        Lineage::Leaf(index)
    }

    pub fn pair(left: Lineage, right: Lineage) -> Self {
        Lineage::Pair(Arc::new(left), Arc::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Lineage::Leaf(_))
    }

    /// The two parents of a pair lineage.
    pub fn parents(&self) -> Option<(&Lineage, &Lineage)> {
        match self {
            Lineage::Leaf(_) => None,
            Lineage::Pair(l, r) => Some((l, r)),
        }
    }

    /// Every leaf index, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(l) = stack.pop() {
            match l {
                Lineage::Leaf(i) => out.push(*i),
                Lineage::Pair(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }

    /// Number of S-pair steps above the input generators.
    pub fn depth(&self) -> usize {
        match self {
            Lineage::Leaf(_) => 0,
            Lineage::Pair(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Display form with a space after each comma, as used in table listings.
    pub fn spaced(&self) -> String {
        self.to_string().replace(',', ", ")
    }

    pub fn parse(s: &str) -> Result<Lineage, ParseError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let l = p.lineage(0)?;
        if p.pos != p.src.len() {
            return Err(p.error("trailing input after lineage"));
        }
        Ok(l)
    }
}

/// Key of the task that reduces the S-pair of `a` and `b`: `(A-B)`.
pub fn task_key(a: &Lineage, b: &Lineage) -> String {
    format!("({a}-{b})")
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lineage::Leaf(i) => write!(f, "{i}"),
            Lineage::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl FromStr for Lineage {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Lineage::parse(s)
    }
}

/// Canonical key order: leaves ascending by index, then pairs ascending by
/// their string form.
impl Ord for Lineage {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Lineage::Leaf(a), Lineage::Leaf(b)) => a.cmp(b),
            (Lineage::Leaf(_), Lineage::Pair(..)) => Ordering::Less,
            (Lineage::Pair(..), Lineage::Leaf(_)) => Ordering::Greater,
            _ => self.to_string().cmp(&other.to_string()),
        }
    }
}

impl PartialOrd for Lineage {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(1, self.pos + 1, msg)
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", byte as char)))
        }
    }

    fn lineage(&mut self, depth: usize) -> Result<Lineage, ParseError> {
        match self.src.get(self.pos) {
            Some(b'(') => {
                if depth >= MAX_DEPTH {
                    return Err(self.error("lineage nested too deeply"));
                }
                self.pos += 1;
                let left = self.lineage(depth + 1)?;
                self.expect(b',')?;
                let right = self.lineage(depth + 1)?;
                self.expect(b')')?;
                Ok(Lineage::pair(left, right))
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = &self.src[start..self.pos];
                if digits.len() > 1 && digits[0] == b'0' {
                    self.pos = start;
                    return Err(self.error("leading zero in lineage index"));
                }
                std::str::from_utf8(digits)
                    .ok()
                    .and_then(|d| d.parse().ok())
                    .map(Lineage::Leaf)
                    .ok_or_else(|| ParseError::new(1, start + 1, "lineage index out of range"))
            }
            _ => Err(self.error("expected a generator index or `(`")),
        }
    }
}
