//! Permutations in one-line notation, pattern containment, intervals,
//! inflations and the substitution decomposition.
//!
//! Entries are stored as `u8` values `1..=n`, which caps the length at 255;
//! everything in this crate works at lengths far below that.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// The derived ordering is lexicographic on the one-line sequence, so sorting
/// members of one length gives the lexicographic order used by censuses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<u8>);

/// A contiguous window of indices whose values are also contiguous.
/// Indices and values are 1-based and inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    pub min_value: usize,
    pub max_value: usize,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_range(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn value_range(&self) -> RangeInclusive<usize> {
        self.min_value..=self.max_value
    }
}

/// `original = skeleton[blocks...]`, with the skeleton simple or one of
/// `12` / `21`. For `12` (resp. `21`) the first block is sum (resp. skew)
/// indecomposable, which makes the decomposition unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub skeleton: Permutation,
    pub blocks: Vec<Permutation>,
    /// 0-based starting index of each block in the decomposed permutation.
    pub block_starts: Vec<usize>,
}

/// The four simple parallel-alternation shapes of even length `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// `2 4 … 2m 1 3 … 2m-1`
    RisingEvensFirst,
    /// `m+1 1 m+2 2 … 2m m`
    InterleavedRising,
    /// `2m-1 … 3 1 2m … 4 2`
    FallingOddsFirst,
    /// `m 2m m-1 2m-1 … 1 m+1`
    InterleavedFalling,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::RisingEvensFirst,
        Orientation::InterleavedRising,
        Orientation::FallingOddsFirst,
        Orientation::InterleavedFalling,
    ];

    /// The member of this family with `2m` entries.
    pub fn shape(self, m: usize) -> Permutation {
        let m8 = m as u8;
        let mut v = Vec::with_capacity(2 * m);
        match self {
            Orientation::RisingEvensFirst => {
                v.extend((1..=m8).map(|i| 2 * i));
                v.extend((1..=m8).map(|i| 2 * i - 1));
            }
            Orientation::InterleavedRising => {
                for i in 1..=m8 {
                    v.push(m8 + i);
                    v.push(i);
                }
            }
            Orientation::FallingOddsFirst => {
                v.extend((1..=m8).rev().map(|i| 2 * i - 1));
                v.extend((1..=m8).rev().map(|i| 2 * i));
            }
            Orientation::InterleavedFalling => {
                for i in 0..m8 {
                    v.push(m8 - i);
                    v.push(2 * m8 - i);
                }
            }
        }
        Permutation(v)
    }
}

impl Permutation {
    /// Validates that `entries` is a permutation of `1..=n`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{entries:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn from_slice(entries: &[usize]) -> Result<Self> {
        if entries.len() > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!(
                "length {} exceeds {}",
                entries.len(),
                u8::MAX
            )));
        }
        if entries.iter().any(|&v| v > u8::MAX as usize) {
            return Err(Error::InvalidPermutation(format!("{entries:?}")));
        }
        Self::new(entries.iter().map(|&v| v as u8).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// `π(i)` with a 1-based index.
    pub fn value_at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// Order-isomorphic flattening of any sequence of distinct keys.
    pub fn flatten<T: Ord>(values: &[T]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        let mut out = vec![0u8; values.len()];
        for (rank, &idx) in order.iter().enumerate() {
            out[idx] = (rank + 1) as u8;
        }
        Permutation(out)
    }

    /// True iff `pattern` occurs in `self` as an order-isomorphic subsequence.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        let bounds = pattern_bounds(pattern);
        let mut chosen = vec![0u8; k];
        embed(&self.0, &bounds, 0, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// `π(X × Y)`: the pattern formed by entries with 1-based indices in
    /// `indices` and values in `values`.
    pub fn sub_pattern(
        &self,
        indices: RangeInclusive<usize>,
        values: RangeInclusive<usize>,
    ) -> Permutation {
        let picked: Vec<u8> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| indices.contains(&(i + 1)) && values.contains(&(v as usize)))
            .map(|(_, &v)| v)
            .collect();
        Permutation::flatten(&picked)
    }

    /// All intervals of length `2..n-1`, ordered by `(start, length)`.
    pub fn proper_intervals(&self) -> Vec<Interval> {
        let n = self.len();
        let mut out = Vec::new();
        for start in 0..n {
            let mut lo = self.0[start];
            let mut hi = lo;
            for end in start + 1..n {
                lo = lo.min(self.0[end]);
                hi = hi.max(self.0[end]);
                let len = end - start + 1;
                if len == n {
                    break;
                }
                if (hi - lo) as usize + 1 == len {
                    out.push(Interval {
                        start: start + 1,
                        end: end + 1,
                        min_value: lo as usize,
                        max_value: hi as usize,
                    });
                }
            }
        }
        out
    }

    /// No proper intervals. Lengths 0, 1 and 2 are simple under this rule.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        for start in 0..n {
            let mut lo = self.0[start];
            let mut hi = lo;
            for end in start + 1..n {
                if end - start + 1 == n {
                    break;
                }
                lo = lo.min(self.0[end]);
                hi = hi.max(self.0[end]);
                if (hi - lo) as usize == end - start {
                    return false;
                }
            }
        }
        true
    }

    /// `σ[α_1, …, α_m]`.
    pub fn inflate(skeleton: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
        if blocks.len() != skeleton.len() {
            return Err(Error::BlockCountMismatch {
                expected: skeleton.len(),
                got: blocks.len(),
            });
        }
        if let Some(i) = blocks.iter().position(|b| b.is_empty()) {
            return Err(Error::EmptyBlock(i));
        }
        Ok(inflate_unchecked(skeleton, blocks))
    }

    /// `12[a, b]`; an empty operand acts as the identity.
    pub fn direct_sum(a: &Permutation, b: &Permutation) -> Permutation {
        let shift = a.len() as u8;
        let mut v = a.0.clone();
        v.extend(b.0.iter().map(|&x| x + shift));
        Permutation(v)
    }

    /// `21[a, b]`; an empty operand acts as the identity.
    pub fn skew_sum(a: &Permutation, b: &Permutation) -> Permutation {
        let shift = b.len() as u8;
        let mut v: Vec<u8> = a.0.iter().map(|&x| x + shift).collect();
        v.extend_from_slice(&b.0);
        Permutation(v)
    }

    /// Length of the shortest nonempty proper prefix occupying the lowest
    /// values, if any.
    pub fn first_sum_split(&self) -> Option<usize> {
        let mut hi = 0u8;
        for (i, &v) in self.0.iter().enumerate().take(self.len().saturating_sub(1)) {
            hi = hi.max(v);
            if hi as usize == i + 1 {
                return Some(i + 1);
            }
        }
        None
    }

    /// Length of the shortest nonempty proper prefix occupying the highest
    /// values, if any.
    pub fn first_skew_split(&self) -> Option<usize> {
        let n = self.len();
        let mut lo = u8::MAX;
        for (i, &v) in self.0.iter().enumerate().take(n.saturating_sub(1)) {
            lo = lo.min(v);
            if lo as usize == n - i {
                return Some(i + 1);
            }
        }
        None
    }

    pub fn is_sum_decomposable(&self) -> bool {
        self.first_sum_split().is_some()
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.first_skew_split().is_some()
    }

    /// The unique substitution decomposition. Panics on the empty permutation.
    pub fn decompose(&self) -> Decomposition {
        let n = self.len();
        assert!(n > 0, "the empty permutation has no decomposition");
        if n == 1 {
            return Decomposition {
                skeleton: Permutation::identity(1),
                blocks: vec![self.clone()],
                block_starts: vec![0],
            };
        }
        if let Some(k) = self.first_sum_split() {
            return Decomposition {
                skeleton: Permutation(vec![1, 2]),
                blocks: vec![
                    Permutation(self.0[..k].to_vec()),
                    Permutation::flatten(&self.0[k..]),
                ],
                block_starts: vec![0, k],
            };
        }
        if let Some(k) = self.first_skew_split() {
            return Decomposition {
                skeleton: Permutation(vec![2, 1]),
                blocks: vec![
                    Permutation::flatten(&self.0[..k]),
                    Permutation::flatten(&self.0[k..]),
                ],
                block_starts: vec![0, k],
            };
        }
        // Neither sum nor skew decomposable: the maximal proper intervals
        // partition the entries, so a greedy left-to-right scan taking the
        // longest proper interval at each start recovers them.
        let mut longest = vec![1usize; n];
        for iv in self.proper_intervals() {
            let s = iv.start - 1;
            longest[s] = longest[s].max(iv.len());
        }
        let mut starts = Vec::new();
        let mut i = 0;
        while i < n {
            starts.push(i);
            i += longest[i];
        }
        let mut blocks = Vec::with_capacity(starts.len());
        let mut reps = Vec::with_capacity(starts.len());
        for (j, &s) in starts.iter().enumerate() {
            let e = starts.get(j + 1).copied().unwrap_or(n);
            blocks.push(Permutation::flatten(&self.0[s..e]));
            reps.push(self.0[s]);
        }
        Decomposition {
            skeleton: Permutation::flatten(&reps),
            blocks,
            block_starts: starts,
        }
    }

    /// Which of the four concrete simple parallel-alternation shapes this is.
    pub fn parallel_alternation(&self) -> Option<Orientation> {
        let n = self.len();
        if n < 4 || n % 2 == 1 {
            return None;
        }
        Orientation::ALL
            .into_iter()
            .find(|o| o.shape(n / 2) == *self)
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n1 = self.len() as u8 + 1;
        Permutation(self.0.iter().map(|&v| n1 - v).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(out)
    }

    /// Insert the value `n+1` before 0-based position `gap` (`0..=n`).
    pub fn insert_max(&self, gap: usize) -> Permutation {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0[..gap]);
        v.push(self.len() as u8 + 1);
        v.extend_from_slice(&self.0[gap..]);
        Permutation(v)
    }

    /// Delete the entry at 0-based position `index` and flatten.
    pub fn delete(&self, index: usize) -> Permutation {
        let removed = self.0[index];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != index)
                .map(|(_, &v)| if v > removed { v - 1 } else { v })
                .collect(),
        )
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Permutation::identity(n).0;
        loop {
            out.push(Permutation(cur.clone()));
            if !next_lex(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_lex(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn inflate_unchecked(skeleton: &Permutation, blocks: &[Permutation]) -> Permutation {
    let m = skeleton.len();
    // offset[v] = number of entries in blocks whose skeleton value is < v
    let mut size_by_value = vec![0u8; m + 1];
    for (i, &v) in skeleton.0.iter().enumerate() {
        size_by_value[v as usize] = blocks[i].len() as u8;
    }
    let mut offset = vec![0u8; m + 2];
    for v in 1..=m {
        offset[v + 1] = offset[v] + size_by_value[v];
    }
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    let mut out = Vec::with_capacity(total);
    for (i, &v) in skeleton.0.iter().enumerate() {
        let base = offset[v as usize];
        out.extend(blocks[i].0.iter().map(|&x| x + base));
    }
    Permutation(out)
}

/// For each pattern position `j`, the positions among `0..j` holding the
/// nearest smaller and nearest larger values.
pub(crate) type Bounds = Vec<(Option<usize>, Option<usize>)>;

pub(crate) fn pattern_bounds(pattern: &Permutation) -> Bounds {
    let p = &pattern.0;
    (0..p.len())
        .map(|j| {
            let mut below: Option<usize> = None;
            let mut above: Option<usize> = None;
            for i in 0..j {
                if p[i] < p[j] && below.is_none_or(|b| p[i] > p[b]) {
                    below = Some(i);
                }
                if p[i] > p[j] && above.is_none_or(|a| p[i] < p[a]) {
                    above = Some(i);
                }
            }
            (below, above)
        })
        .collect()
}

fn embed(host: &[u8], bounds: &Bounds, j: usize, from: usize, chosen: &mut [u8]) -> bool {
    let k = bounds.len();
    if j == k {
        return true;
    }
    let (below, above) = bounds[j];
    let lo = below.map_or(0, |b| chosen[b]);
    let hi = above.map_or(u8::MAX, |a| chosen[a]);
    let last = host.len() - (k - j);
    for i in from..=last {
        let v = host[i];
        if v > lo && v < hi {
            chosen[j] = v;
            if embed(host, bounds, j + 1, i + 1, chosen) {
                return true;
            }
        }
    }
    false
}

impl fmt::Display for Permutation {
    /// Compact digits up to length 9, comma-separated above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2 4 7 3"`, `"2,4,7,3"` or compact digits `"2473"` (n ≤ 9).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        let values: Vec<usize> = if separated {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidPermutation(format!(
                    "{s}: compact form only for length <= 9"
                )));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(s.to_string()))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_slice(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse a comma- or whitespace-separated list of compact permutations,
/// e.g. `"4231,3124"`.
pub fn parse_basis(s: &str) -> Result<Vec<Permutation>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(p("25314").contains(&p("4213")));
        assert!(p("42513").contains(&p("4213")));
        assert!(p("24153").contains(&p("3142")));
        assert!(!p("123").contains(&p("21")));
        assert!(p("123").contains(&Permutation::empty()));
        assert!(Permutation::empty().contains(&Permutation::empty()));
        assert!(!Permutation::empty().contains(&p("1")));
    }

    #[test]
    fn sub_pattern_examples() {
        let host = p("286435179");
        assert_eq!(host.sub_pattern(4..=9, 5..=9), p("123"));
        assert_eq!(host.sub_pattern(1..=9, 1..=9), host);
        assert_eq!(host.sub_pattern(1..=3, 1..=9), p("132"));
        assert_eq!(host.sub_pattern(1..=1, 3..=9), Permutation::empty());
    }

    #[test]
    fn interval_examples() {
        assert!(p("2413").proper_intervals().is_empty());
        let ivs = p("479832156").proper_intervals();
        assert!(ivs
            .iter()
            .any(|iv| iv.index_range() == (2..=4) && iv.value_range() == (7..=9)));
        let ivs = p("312").proper_intervals();
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].index_range(), 2..=3);
        assert_eq!(ivs[0].value_range(), 1..=2);
    }

    #[test]
    fn simplicity_examples() {
        assert!(p("2473516").is_simple());
        assert!(!p("312").is_simple());
        assert!(p("24153").is_simple());
        for s in ["1", "12", "21"] {
            assert!(p(s).is_simple());
        }
        assert!(Permutation::empty().is_simple());
    }

    #[test]
    fn inflation_examples() {
        let blocks = [p("1"), p("132"), p("321"), p("12")];
        assert_eq!(Permutation::inflate(&p("2413"), &blocks).unwrap(), p("479832156"));
        let pi = p("3142");
        assert_eq!(Permutation::inflate(&p("1"), std::slice::from_ref(&pi)).unwrap(), pi);
        let q = Permutation::inflate(&p("12"), &[p("21"), p("1")]).unwrap();
        assert_eq!(q, p("213"));
        assert_eq!(q.proper_intervals().len(), 1);
    }

    #[test]
    fn inflation_errors() {
        assert_eq!(
            Permutation::inflate(&p("12"), &[p("1")]),
            Err(Error::BlockCountMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Permutation::inflate(&p("12"), &[p("1"), Permutation::empty()]),
            Err(Error::EmptyBlock(1))
        );
    }

    #[test]
    fn decomposition_examples() {
        let d = p("479832156").decompose();
        assert_eq!(d.skeleton, p("2413"));
        assert_eq!(d.blocks, vec![p("1"), p("132"), p("321"), p("12")]);
        assert_eq!(d.block_starts, vec![0, 1, 4, 7]);

        let d = p("2413").decompose();
        assert_eq!(d.skeleton, p("2413"));
        assert_eq!(d.blocks, vec![p("1"); 4]);

        let d = p("123").decompose();
        assert_eq!(d.skeleton, p("12"));
        assert_eq!(d.blocks, vec![p("1"), p("12")]);

        let d = p("321").decompose();
        assert_eq!(d.skeleton, p("21"));
        assert_eq!(d.blocks, vec![p("1"), p("21")]);
    }

    #[test]
    fn sums() {
        assert_eq!(Permutation::direct_sum(&p("1"), &p("1")), p("12"));
        assert_eq!(Permutation::skew_sum(&p("12"), &p("1")), p("231"));
        assert_eq!(Permutation::direct_sum(&p("21"), &p("21")), p("2143"));
        assert_eq!(Permutation::direct_sum(&Permutation::empty(), &p("21")), p("21"));
        assert_eq!(Permutation::skew_sum(&p("21"), &Permutation::empty()), p("21"));
        assert!(p("123").is_sum_decomposable());
        assert!(!p("2413").is_skew_decomposable());
        assert!(!p("2413").is_sum_decomposable());
        assert!(!p("312").is_sum_decomposable());
        assert!(p("312").is_skew_decomposable());
        assert!(!p("1").is_sum_decomposable());
    }

    #[test]
    fn parallel_alternation_examples() {
        assert_eq!(
            p("24681357").parallel_alternation(),
            Some(Orientation::RisingEvensFirst)
        );
        assert!(p("2413").parallel_alternation().is_some());
        assert_eq!(p("123").parallel_alternation(), None);
        assert_eq!(Orientation::InterleavedRising.shape(4), p("51627384"));
        assert_eq!(Orientation::FallingOddsFirst.shape(4), p("75318642"));
        assert_eq!(Orientation::InterleavedFalling.shape(4), p("48372615"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2 4 7 3 5 1 6"), p("2473516"));
        assert_eq!(p("2,4,7,3,5,1,6"), p("2473516"));
        assert!("1234567891".parse::<Permutation>().is_err());
        assert!("112".parse::<Permutation>().is_err());
        assert!("1 3".parse::<Permutation>().is_err());
        let long = p("10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long, Permutation::decreasing(10));
        assert_eq!(parse_basis("4231,3124").unwrap(), vec![p("4231"), p("3124")]);
    }

    #[test]
    fn symmetries_and_edits() {
        let q = p("2413");
        assert_eq!(q.reverse(), p("3142"));
        assert_eq!(q.complement(), p("3142"));
        assert_eq!(q.inverse(), p("3142"));
        assert_eq!(p("231").insert_max(1), p("2431"));
        assert_eq!(p("2431").delete(1), p("231"));
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(0), vec![Permutation::empty()]);
    }
}
