//! Young tableaux, semistandard tableau enumeration and Kostka numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::base::Partition;
use crate::error::{Error, Result};

/// A tableau of straight shape. With `transposed` set, the transpose is the semistandard one
/// (recording tableaux of the Burge-word RSK have this property).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    transposed: bool,
}

impl Tableau {
    /// Build from rows, checking the semistandard condition on the tableau or on its transpose.
    pub fn new(rows: Vec<Vec<u32>>, transposed: bool) -> Result<Self> {
        let t = Self::from_rows_unchecked(rows, transposed)?;
        let ok = if transposed {
            t.transpose_raw().is_semistandard()
        } else {
            t.is_semistandard()
        };
        if !ok {
            return Err(Error::InvalidTableau(format!("{t} is not semistandard")));
        }
        Ok(t)
    }

    /// Build from rows checking only that the row lengths form a partition.
    pub fn from_rows_unchecked(rows: Vec<Vec<u32>>, transposed: bool) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not a partition".into()))?;
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Tableau { shape, rows, transposed })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
            transposed: false,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_transposed(&self) -> bool {
        self.transposed
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Rows weakly increasing, columns strictly increasing (ignoring the flag).
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    fn transpose_raw(&self) -> Tableau {
        let conj = self.shape.conjugate();
        let rows = (0..conj.len())
            .map(|j| (0..conj.get(j)).map(|i| self.rows[i][j]).collect())
            .collect();
        Tableau {
            shape: conj,
            rows,
            transposed: self.transposed,
        }
    }

    /// The transpose, with the flag flipped.
    pub fn transpose(&self) -> Tableau {
        let mut t = self.transpose_raw();
        t.transposed = !self.transposed;
        t
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `content[v-1]` = number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "outer": self.shape,
            "inner": [],
            "rows": self.rows,
            "transposed": self.transposed,
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rows_text(&self.rows))
    }
}

impl std::str::FromStr for Tableau {
    type Err = Error;

    /// Rows such as `1112/225/33/4`; only the shape is checked.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_rows_unchecked(parse_rows(s)?, false)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

/// Rows separated by `/`; digits are concatenated when every entry is below 10.
pub(crate) fn rows_text(rows: &[Vec<u32>]) -> String {
    let small = rows.iter().flatten().all(|&v| v < 10);
    let sep = if small { "" } else { " " };
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
        .collect::<Vec<_>>()
        .join("/")
}

/// Parse `113/24/35/4` (single digits) or `1 1 13/2 4` (space separated) into rows.
pub(crate) fn parse_rows(s: &str) -> Result<Vec<Vec<u32>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            let row = row.trim();
            let items: Vec<&str> = if row.contains(' ') || row.contains(',') {
                row.split([' ', ',']).filter(|t| !t.is_empty()).collect()
            } else {
                row.char_indices().map(|(i, c)| &row[i..i + c.len_utf8()]).collect()
            };
            items
                .into_iter()
                .map(|t| {
                    t.parse::<u32>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::Parse(format!("bad entry {t:?} in {s:?}")))
                })
                .collect()
        })
        .collect()
}

/// Partitions `next` with `cur ⊆ next ⊆ outer` and `next / cur` a horizontal strip of size `size`.
fn horizontal_strips_up(cur: &[usize], outer: &Partition, size: usize) -> Vec<Vec<usize>> {
    let n = outer.len();
    let mut out = Vec::new();
    let mut next: Vec<usize> = (0..n).map(|i| cur.get(i).copied().unwrap_or(0)).collect();
    fn rec(i: usize, rest: usize, cur: &[usize], outer: &Partition, next: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == next.len() {
            if rest == 0 {
                out.push(next.clone());
            }
            return;
        }
        let base = cur.get(i).copied().unwrap_or(0);
        let mut hi = outer.get(i);
        if i > 0 {
            hi = hi.min(cur.get(i - 1).copied().unwrap_or(0));
        }
        if hi < base {
            rec(i + 1, rest, cur, outer, next, out);
            return;
        }
        for add in 0..=(hi - base).min(rest) {
            next[i] = base + add;
            rec(i + 1, rest - add, cur, outer, next, out);
        }
        next[i] = base;
    }
    rec(0, size, cur, outer, &mut next, &mut out);
    out
}

/// All semistandard tableaux of shape `shape` with content `content` (a weak composition:
/// `content[v-1]` copies of `v`).
pub fn ssyt_with_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    if shape.size() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    fn rec(v: usize, cur: Vec<usize>, shape: &Partition, content: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if v == content.len() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
                transposed: false,
            });
            return;
        }
        for next in horizontal_strips_up(&cur, shape, content[v]) {
            for (i, row) in rows.iter_mut().enumerate() {
                let start = cur.get(i).copied().unwrap_or(0);
                row.extend(std::iter::repeat_n(v as u32 + 1, next[i] - start));
            }
            rec(v + 1, next.clone(), shape, content, rows, out);
            for (i, row) in rows.iter_mut().enumerate() {
                let start = cur.get(i).copied().unwrap_or(0);
                row.truncate(start);
            }
        }
    }
    rec(0, vec![0; shape.len()], shape, content, &mut rows, &mut out);
    out
}

/// All semistandard tableaux of shape `shape` with entries in `1..=m`.
pub fn ssyt_bounded(shape: &Partition, m: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for content in crate::base::Composition::all(shape.size(), m) {
        out.extend(ssyt_with_content(shape, content.parts()));
    }
    out
}

/// Kostka number `K_{shape, content}`: the number of semistandard tableaux of the given shape
/// and content. Counted by peeling horizontal strips, memoized across calls.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    type Memo = HashMap<(Vec<usize>, Vec<usize>), u64>;
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));

    fn count(shape: &[usize], content: &[usize], memo: &Mutex<Memo>) -> u64 {
        let size: usize = shape.iter().sum();
        if size != content.iter().sum::<usize>() {
            return 0;
        }
        if content.is_empty() || size == 0 {
            return 1;
        }
        let key = (shape.to_vec(), content.to_vec());
        if let Some(&v) = memo.lock().expect("kostka memo").get(&key) {
            return v;
        }
        let (&last, rest) = content.split_last().expect("nonempty content");
        let mut total = 0;
        let mut inner = shape.to_vec();
        fn rec(i: usize, left: usize, shape: &[usize], inner: &mut Vec<usize>, rest: &[usize], memo: &Mutex<Memo>, total: &mut u64) {
            if i == shape.len() {
                if left == 0 {
                    let mut k = inner.clone();
                    while k.last() == Some(&0) {
                        k.pop();
                    }
                    *total += count(&k, rest, memo);
                }
                return;
            }
            let lo = shape.get(i + 1).copied().unwrap_or(0);
            for take in 0..=(shape[i] - lo).min(left) {
                inner[i] = shape[i] - take;
                rec(i + 1, left - take, shape, inner, rest, memo, total);
            }
            inner[i] = shape[i];
        }
        rec(0, last, shape, &mut inner, rest, memo, &mut total);
        memo.lock().expect("kostka memo").insert(key, total);
        total
    }
    count(shape.parts(), content, memo)
}
