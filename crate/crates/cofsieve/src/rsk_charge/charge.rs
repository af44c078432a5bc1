use crate::base::Partition;
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Charge of a permutation word: 1 gets index 0, and `k+1` gets the index of `k`, plus one
/// when `k+1` sits to the right of `k`; the charge is the sum of the indices.
pub fn charge_perm(w: &[u32]) -> Result<usize> {
    let k = w.len();
    let mut pos = vec![usize::MAX; k];
    for (p, &v) in w.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > k || pos[v - 1] != usize::MAX {
            return Err(Error::NotAPermutation(format!("{w:?}")));
        }
        pos[v - 1] = p;
    }
    let mut index = 0;
    let mut total = 0;
    for v in 1..k {
        if pos[v] > pos[v - 1] {
            index += 1;
        }
        total += index;
    }
    Ok(total)
}

/// Number of occurrences of each letter, checked to be a partition.
fn partition_content(w: &[u32]) -> Result<Vec<usize>> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; max];
    for &v in w {
        if v == 0 {
            return Err(Error::NonPartitionContent("letters must be positive".into()));
        }
        c[v as usize - 1] += 1;
    }
    if c.windows(2).any(|p| p[0] < p[1]) || c.contains(&0) {
        return Err(Error::NonPartitionContent(format!("content {c:?} of {w:?}")));
    }
    Ok(c)
}

/// Split a word of partition content into standard subwords. Each pass starts at the right
/// end, looks leftwards for 1, then leftwards from there for 2, and so on, wrapping around to
/// the right end when needed.
pub fn standard_subwords(w: &[u32]) -> Result<Vec<Vec<u32>>> {
    partition_content(w)?;
    let n = w.len();
    let mut marked = vec![false; n];
    let mut left = n;
    let mut out = Vec::new();
    while left > 0 {
        let top = (0..n).filter(|&p| !marked[p]).map(|p| w[p]).max().expect("unmarked letters");
        let mut pos = n;
        let mut picked = Vec::with_capacity(top as usize);
        for v in 1..=top {
            let found = (0..pos)
                .rev()
                .chain((pos..n).rev())
                .find(|&p| !marked[p] && w[p] == v)
                .expect("partition content guarantees every letter");
            marked[found] = true;
            picked.push(found);
            pos = found;
        }
        left -= picked.len();
        picked.sort_unstable();
        out.push(picked.into_iter().map(|p| w[p]).collect());
    }
    Ok(out)
}

/// Charge of a word of partition content: the sum over its standard subwords.
pub fn charge_word(w: &[u32]) -> Result<usize> {
    standard_subwords(w)?.iter().map(|s| charge_perm(s)).sum()
}

/// Charge of the reading word.
pub fn charge_tableau(t: &Tableau) -> Result<usize> {
    charge_word(&t.reading_word())
}

/// `charge(w . l^{mu_l} ... 2^{mu_2} 1^{mu_1})`.
pub fn postfix_charge(mu: &Partition, w: &[u32]) -> Result<usize> {
    let mut full = w.to_vec();
    for i in (0..mu.len()).rev() {
        full.extend(std::iter::repeat_n(i as u32 + 1, mu.get(i)));
    }
    match partition_content(&full) {
        Ok(_) => charge_word(&full),
        Err(_) => Err(Error::ContentMismatch(format!("content of {w:?} plus {mu:?} is not a partition"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(s: &str) -> Vec<u32> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    #[test]
    fn permutation_charges() {
        assert_eq!(charge_perm(&letters("198423765")).unwrap(), 20);
        for (w, c) in [("25413", 3), ("2431", 2), ("132", 2), ("12", 1), ("21", 0)] {
            assert_eq!(charge_perm(&letters(w)).unwrap(), c, "{w}");
        }
        assert!(charge_perm(&letters("113")).is_err());
    }

    /// charge = maj(rev(w^{-1})), straight from the definition.
    fn charge_by_inverse(w: &[u32]) -> usize {
        let k = w.len();
        let mut inv = vec![0u32; k];
        for (p, &v) in w.iter().enumerate() {
            inv[v as usize - 1] = p as u32 + 1;
        }
        inv.reverse();
        (1..k).filter(|&i| inv[i - 1] > inv[i]).sum()
    }

    #[test]
    fn charge_matches_inverse_major_index() {
        use itertools::Itertools;
        for k in 0..7u32 {
            for perm in (1..=k).permutations(k as usize) {
                assert_eq!(charge_perm(&perm).unwrap(), charge_by_inverse(&perm));
            }
        }
    }

    #[test]
    fn appendix_word() {
        let w = letters("21123543411223");
        let subs: Vec<String> = standard_subwords(&w)
            .unwrap()
            .iter()
            .map(|s| s.iter().map(u32::to_string).collect())
            .collect();
        assert_eq!(subs, ["25413", "2431", "132", "12"]);
        assert_eq!(charge_word(&w).unwrap(), 8);
        assert_eq!(standard_subwords(&[1, 1]).unwrap(), vec![vec![1], vec![1]]);
        assert_eq!(standard_subwords(&letters("1234")).unwrap(), vec![letters("1234")]);
        assert_eq!(charge_word(&[1, 1, 1]).unwrap(), 0);
        assert!(matches!(charge_word(&[2, 2, 1]), Err(Error::NonPartitionContent(_))));
    }

    #[test]
    fn postfix() {
        let mu = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(postfix_charge(&mu, &letters("12231233")).unwrap(), 2);
        assert_eq!(postfix_charge(&Partition::empty(), &letters("2112")).unwrap(), charge_word(&letters("2112")).unwrap());
        assert!(matches!(postfix_charge(&Partition::empty(), &[2]), Err(Error::ContentMismatch(_))));
    }
}
