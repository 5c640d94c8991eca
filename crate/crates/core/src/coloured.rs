//! Coloured partitions: multisets of decorated parts drawn from a fixed
//! alphabet. A part's weight is its level whatever the decoration.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Plain,
    Bar,
    DoubleBar,
}

/// Rendered `2`, `2~` (bar) or `2~~` (double bar).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPart {
    pub level: usize,
    pub decoration: Decoration,
}

impl ColouredPart {
    pub const fn plain(level: usize) -> Self {
        ColouredPart {
            level,
            decoration: Decoration::Plain,
        }
    }

    pub const fn bar(level: usize) -> Self {
        ColouredPart {
            level,
            decoration: Decoration::Bar,
        }
    }

    pub const fn double_bar(level: usize) -> Self {
        ColouredPart {
            level,
            decoration: Decoration::DoubleBar,
        }
    }

    pub fn weight(&self) -> usize {
        self.level
    }
}

impl fmt::Display for ColouredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks = match self.decoration {
            Decoration::Plain => "",
            Decoration::Bar => "~",
            Decoration::DoubleBar => "~~",
        };
        write!(f, "{}{marks}", self.level)
    }
}

impl FromStr for ColouredPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits = s.trim_end_matches('~');
        let decoration = match s.len() - digits.len() {
            0 => Decoration::Plain,
            1 => Decoration::Bar,
            2 => Decoration::DoubleBar,
            _ => return Err(Error::Parse(format!("too many bars in {s:?}"))),
        };
        let level: usize = digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad coloured part {s:?}: {e}")))?;
        if level == 0 {
            return Err(Error::Parse("coloured parts have positive level".into()));
        }
        Ok(ColouredPart { level, decoration })
    }
}

/// Parts kept largest first (by level, then decoration).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPartition {
    parts: Vec<ColouredPart>,
}

impl ColouredPartition {
    pub fn new(mut parts: Vec<ColouredPart>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        ColouredPartition { parts }
    }

    pub fn parts(&self) -> &[ColouredPart] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(ColouredPart::weight).sum()
    }

    pub fn multiplicity(&self, part: ColouredPart) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Fails on the first part outside `alphabet`.
    pub fn check_alphabet(&self, alphabet: &[ColouredPart]) -> Result<()> {
        match self.parts.iter().find(|p| !alphabet.contains(p)) {
            Some(p) => Err(Error::InvalidColouredPartition(format!(
                "part {p} is not in the alphabet {{{}}}",
                alphabet.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for ColouredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ColouredPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(ColouredPartition::default());
        }
        let parts = s.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(ColouredPartition::new(parts))
    }
}

/// `{1̄} ∪ {l, l̄ : 2 ≤ l ≤ a} ∪ {(a+1)̄}`, used by the first two families.
pub fn alphabet_b(a: usize) -> Result<Vec<ColouredPart>> {
    if a == 0 {
        return Err(Error::Unsupported("alphabet B needs a >= 1".into()));
    }
    let mut out = vec![ColouredPart::bar(1)];
    for l in 2..=a {
        out.push(ColouredPart::plain(l));
        out.push(ColouredPart::bar(l));
    }
    out.push(ColouredPart::bar(a + 1));
    Ok(out)
}

/// `{1, 1̄} ∪ {l, l̄, l̿ : 2 ≤ l ≤ a−1} ∪ {a, ā, a+1}`, used by the third family.
pub fn alphabet_c(a: usize) -> Result<Vec<ColouredPart>> {
    if a < 2 {
        return Err(Error::Unsupported("alphabet C needs a >= 2".into()));
    }
    let mut out = vec![ColouredPart::plain(1), ColouredPart::bar(1)];
    for l in 2..a {
        out.push(ColouredPart::plain(l));
        out.push(ColouredPart::bar(l));
        out.push(ColouredPart::double_bar(l));
    }
    out.push(ColouredPart::plain(a));
    out.push(ColouredPart::bar(a));
    out.push(ColouredPart::plain(a + 1));
    Ok(out)
}

/// Every multiset over `alphabet` of total weight `weight`.
pub fn enumerate_coloured(alphabet: &[ColouredPart], weight: usize) -> Vec<ColouredPartition> {
    fn go(
        alphabet: &[ColouredPart],
        left: usize,
        current: &mut Vec<ColouredPart>,
        out: &mut Vec<ColouredPartition>,
    ) {
        let Some((&first, rest)) = alphabet.split_first() else {
            if left == 0 {
                out.push(ColouredPartition::new(current.clone()));
            }
            return;
        };
        let w = first.weight();
        let before = current.len();
        let mut used = 0;
        loop {
            go(rest, left - used, current, out);
            if w == 0 || used + w > left {
                break;
            }
            used += w;
            current.push(first);
        }
        current.truncate(before);
    }
    let mut alphabet = alphabet.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();
    let mut out = Vec::new();
    go(&alphabet, weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}
