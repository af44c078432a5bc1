use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::tableau::Tableau;

/// A two-row array sorted increasingly on the top row and, within equal top letters, strictly
/// decreasingly on the bottom row.
///
/// The word of a filling has the entries on top and their (1-based) column indices at the
/// bottom, so the bottom row is the charge word and `P` has the column heights as content.
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
pub struct BurgeWord {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl BurgeWord {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidBurgeWord(format!("rows of lengths {} and {}", top.len(), bottom.len())));
        }
        if top.contains(&0) || bottom.contains(&0) {
            return Err(Error::InvalidBurgeWord("letters must be positive".into()));
        }
        for k in 1..top.len() {
            let sorted = top[k - 1] < top[k] || (top[k - 1] == top[k] && bottom[k - 1] > bottom[k]);
            if !sorted {
                return Err(Error::InvalidBurgeWord(format!("biletters {} and {} are out of order", k, k + 1)));
            }
        }
        Ok(BurgeWord { top, bottom })
    }

    /// Sort arbitrary distinct biletters into a Burge word.
    pub fn from_biletters(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let (top, bottom) = pairs.into_iter().unzip();
        Self::new(top, bottom)
    }

    /// One biletter (entry, column) per cell.
    pub fn from_filling(f: &Filling) -> Self {
        let pairs = (0..f.shape().ncols())
            .flat_map(|j| f.column(j).into_iter().map(move |v| (v, j as u32 + 1)))
            .collect();
        Self::from_biletters(pairs).expect("column entries are distinct")
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn biletters(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"top": self.top, "bottom": self.bottom})
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Repr {
            top: Vec<u32>,
            bottom: Vec<u32>,
        }
        let r: Repr = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(r.top, r.bottom)
    }
}

fn row_text(row: &[u32], wide: bool) -> String {
    let toks = row.iter().map(u32::to_string);
    if wide {
        toks.collect::<Vec<_>>().join(" ")
    } else {
        toks.collect()
    }
}

impl fmt::Display for BurgeWord {
    /// Two lines, top then bottom; letters concatenated when all are single digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.top.iter().chain(&self.bottom).any(|&x| x >= 10);
        write!(f, "{}\n{}", row_text(&self.top, wide), row_text(&self.bottom, wide))
    }
}

impl fmt::Debug for BurgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BurgeWord({} / {})", row_text(&self.top, true), row_text(&self.bottom, true))
    }
}

impl FromStr for BurgeWord {
    type Err = Error;

    /// JSON `{"top": [...], "bottom": [...]}` or two non-empty lines of letters (digits, or
    /// space/comma separated).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_json(&v);
        }
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        match lines.as_slice() {
            [] => Ok(Self::default()),
            [top, bottom] => Self::new(parse_letters(top)?, parse_letters(bottom)?),
            _ => Err(Error::Parse("a Burge word needs exactly two lines".into())),
        }
    }
}

fn parse_letters(line: &str) -> Result<Vec<u32>> {
    let bad = || Error::Parse(format!("bad letters in {line:?}"));
    if line.contains([' ', ',']) {
        line.split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect()
    } else {
        line.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

/// Row-insert `x`, bumping the leftmost entry strictly greater; returns the row of the new cell.
fn row_insert(p: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    p.push(vec![x]);
    p.len() - 1
}

/// The insertion and recording tableaux after each biletter.
pub fn rsk_steps(w: &BurgeWord) -> Vec<(Tableau, Tableau)> {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    w.biletters()
        .map(|(t, b)| {
            let r = row_insert(&mut p, b);
            if r == q.len() {
                q.push(Vec::new());
            }
            q[r].push(t);
            (
                Tableau::from_rows_unchecked(p.clone(), false).expect("insertion keeps a partition shape"),
                Tableau::from_rows_unchecked(q.clone(), true).expect("insertion keeps a partition shape"),
            )
        })
        .collect()
}

/// RSK: insert the bottom letters, record the top letters. `Q` carries the transposed flag.
pub fn rsk(w: &BurgeWord) -> (Tableau, Tableau) {
    rsk_steps(w).pop().unwrap_or_else(|| (Tableau::empty(), Tableau::empty().transpose()))
}

/// Inverse RSK: repeatedly remove the bottom-most cell holding the largest recording letter and
/// reverse-bump it out of `P`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<BurgeWord> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!("shapes {:?} and {:?} differ", p.shape(), q.shape())));
    }
    if !p.is_semistandard() {
        return Err(Error::InvalidTableau(format!("insertion tableau {p} is not semistandard")));
    }
    if !q.transpose().is_semistandard() {
        return Err(Error::InvalidTableau(format!("recording tableau {q} does not have a semistandard transpose")));
    }
    let mut prow: Vec<Vec<u32>> = p.rows().to_vec();
    let mut qrow: Vec<Vec<u32>> = q.rows().to_vec();
    let mut pairs = Vec::with_capacity(p.shape().size());
    while !qrow.is_empty() {
        let max = qrow.iter().flatten().copied().max().expect("nonempty");
        let r = (0..qrow.len())
            .rev()
            .find(|&r| qrow[r].last() == Some(&max))
            .ok_or_else(|| Error::InvalidTableau("largest recording letter is not at a row end".into()))?;
        if qrow.get(r + 1).is_some_and(|next| next.len() == qrow[r].len()) {
            return Err(Error::InvalidTableau("largest recording letter is not in a corner".into()));
        }
        qrow[r].pop();
        let mut y = prow[r].pop().expect("same shape");
        for row in prow[..r].iter_mut().rev() {
            let k = row
                .iter()
                .rposition(|&v| v < y)
                .ok_or_else(|| Error::InvalidTableau("reverse bump found no smaller entry".into()))?;
            y = std::mem::replace(&mut row[k], y);
        }
        pairs.push((max, y));
        if qrow[r].is_empty() {
            qrow.pop();
            prow.pop();
        }
    }
    pairs.reverse();
    let (top, bottom) = pairs.into_iter().unzip();
    BurgeWord::new(top, bottom)
}
