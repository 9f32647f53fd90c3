//! Brute-force enumeration of `Av(B)`, length by length.
//!
//! Members of length `n` are produced by inserting the new maximum into every
//! gap of every member of length `n-1`. A parent already avoids the basis, so
//! only occurrences that use the new maximum need checking: for a basis
//! element `β` with its maximum at position `j`, each occurrence of `β - max`
//! in the parent rules out a contiguous range of gaps.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_basis, pattern_bounds, Bounds, Permutation};
use crate::series::PowerSeries;

pub const CENSUS_FORMAT_VERSION: u32 = 1;
pub const DEFAULT_MEMORY_THRESHOLD: usize = 2_000_000;

/// A finite basis; the class is every permutation avoiding all of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    basis: Vec<Permutation>,
}

impl ClassSpec {
    pub fn new(mut basis: Vec<Permutation>) -> Self {
        basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        basis.dedup();
        ClassSpec { basis }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::new(parse_basis(s)?))
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    /// `Av(4213,3142)`-style label with the basis in its stored order.
    pub fn name(&self) -> String {
        let parts: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        format!("Av({})", parts.join(","))
    }

    /// Whether no basis element contains another.
    pub fn is_antichain(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !b.contains(a))
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.basis.iter().all(|b| !p.contains(b))
    }

    fn gap_filters(&self) -> Vec<GapFilter> {
        self.basis.iter().map(GapFilter::new).collect()
    }

    /// Members of length `n` with one more entry than `parent`, in
    /// lexicographic order of their gap.
    pub fn children(&self, parent: &Permutation) -> Vec<Permutation> {
        let filters = self.gap_filters();
        allowed_gaps(parent, &filters)
            .into_iter()
            .map(|g| parent.insert_max(g))
            .collect()
    }
}

/// Precomputed data for checking occurrences of one basis element through a
/// newly inserted maximum.
struct GapFilter {
    max_pos: usize,
    rest_len: usize,
    rest_bounds: Bounds,
}

impl GapFilter {
    fn new(beta: &Permutation) -> Self {
        let k = beta.len();
        let max_pos = beta
            .entries()
            .iter()
            .position(|&v| v as usize == k)
            .expect("nonempty basis element");
        let rest: Vec<u8> = beta
            .entries()
            .iter()
            .copied()
            .filter(|&v| v as usize != k)
            .collect();
        let rest = Permutation::flatten(&rest);
        GapFilter {
            max_pos,
            rest_len: rest.len(),
            rest_bounds: pattern_bounds(&rest),
        }
    }

    /// Mark every gap (`0..=len`) where inserting the maximum completes an
    /// occurrence.
    fn mark(&self, host: &[u8], forbidden: &mut [bool]) {
        let mut chosen_val = vec![0u8; self.rest_len];
        let mut chosen_idx = vec![0usize; self.rest_len];
        self.walk(host, 0, 0, &mut chosen_val, &mut chosen_idx, forbidden);
    }

    fn walk(
        &self,
        host: &[u8],
        j: usize,
        from: usize,
        vals: &mut [u8],
        idx: &mut [usize],
        forbidden: &mut [bool],
    ) {
        let k = self.rest_len;
        if j == k {
            let lo = if self.max_pos == 0 { 0 } else { idx[self.max_pos - 1] + 1 };
            let hi = if self.max_pos == k { host.len() } else { idx[self.max_pos] };
            for g in forbidden.iter_mut().take(hi + 1).skip(lo) {
                *g = true;
            }
            return;
        }
        let (below, above) = self.rest_bounds[j];
        let lo = below.map_or(0, |b| vals[b]);
        let hi = above.map_or(u8::MAX, |a| vals[a]);
        if host.len() < k - j {
            return;
        }
        let last = host.len() - (k - j);
        for i in from..=last {
            let v = host[i];
            if v > lo && v < hi {
                vals[j] = v;
                idx[j] = i;
                self.walk(host, j + 1, i + 1, vals, idx, forbidden);
            }
        }
    }
}

fn allowed_gaps(parent: &Permutation, filters: &[GapFilter]) -> Vec<usize> {
    let mut forbidden = vec![false; parent.len() + 1];
    for f in filters {
        f.mark(parent.entries(), &mut forbidden);
    }
    forbidden
        .iter()
        .enumerate()
        .filter(|&(_, &bad)| !bad)
        .map(|(g, _)| g)
        .collect()
}

/// Per-length census data. `members` is absent in counts-only mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub n: usize,
    pub count: u64,
    pub simple_count: u64,
    pub sumdec_count: u64,
    pub skewdec_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Permutation>>,
}

impl LevelStats {
    fn empty(n: usize) -> Self {
        LevelStats {
            n,
            count: 0,
            simple_count: 0,
            sumdec_count: 0,
            skewdec_count: 0,
            members: None,
        }
    }

    fn record(&mut self, p: &Permutation) {
        self.count += 1;
        if p.is_simple() {
            self.simple_count += 1;
        }
        if p.is_sum_decomposable() {
            self.sumdec_count += 1;
        }
        if p.is_skew_decomposable() {
            self.skewdec_count += 1;
        }
    }

    fn merge(mut self, other: &LevelStats) -> Self {
        self.count += other.count;
        self.simple_count += other.simple_count;
        self.sumdec_count += other.sumdec_count;
        self.skewdec_count += other.skewdec_count;
        self
    }

    fn from_members(n: usize, members: Vec<Permutation>) -> Self {
        let mut s = members.par_iter().fold(
            || LevelStats::empty(n),
            |mut acc, p| {
                acc.record(p);
                acc
            },
        )
        .reduce(|| LevelStats::empty(n), |a, b| a.merge(&b));
        s.members = Some(members);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCensus {
    pub basis: Vec<String>,
    pub version: u32,
    /// First length whose members were not retained, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts_only_from: Option<usize>,
    pub lengths: Vec<LevelStats>,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Above this many members at one length, switch to counts-only streaming.
    pub memory_threshold: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            memory_threshold: DEFAULT_MEMORY_THRESHOLD,
        }
    }
}

pub fn enumerate(spec: &ClassSpec, n_max: usize) -> ClassCensus {
    enumerate_with(spec, n_max, EnumerateOptions::default())
}

pub fn enumerate_with(spec: &ClassSpec, n_max: usize, opts: EnumerateOptions) -> ClassCensus {
    let filters = spec.gap_filters();
    let mut lengths = Vec::with_capacity(n_max + 1);
    let level0: Vec<Permutation> = if spec.contains(&Permutation::empty()) {
        vec![Permutation::empty()]
    } else {
        Vec::new()
    };
    lengths.push(LevelStats::from_members(0, level0));
    let mut counts_only_from = None;

    for n in 1..=n_max {
        let parents = lengths[n - 1].members.as_ref().expect("previous level retained");
        let upper_bound = parents.len().saturating_mul(n);
        let too_big = upper_bound > opts.memory_threshold && {
            let exact: usize = parents
                .par_iter()
                .map(|p| allowed_gaps(p, &filters).len())
                .sum();
            exact > opts.memory_threshold
        };
        if too_big {
            let streamed = stream_levels(parents, &filters, n, n_max);
            lengths.extend(streamed);
            counts_only_from = Some(n);
            break;
        }
        let mut members: Vec<Permutation> = parents
            .par_iter()
            .flat_map_iter(|p| {
                allowed_gaps(p, &filters)
                    .into_iter()
                    .map(move |g| p.insert_max(g))
            })
            .collect();
        members.par_sort_unstable();
        lengths.push(LevelStats::from_members(n, members));
    }

    ClassCensus {
        basis: spec.basis().iter().map(|b| b.to_string()).collect(),
        version: CENSUS_FORMAT_VERSION,
        counts_only_from,
        lengths,
    }
}

/// Depth-first counting of lengths `from..=to`, starting from the retained
/// members of length `from - 1`.
fn stream_levels(
    parents: &[Permutation],
    filters: &[GapFilter],
    from: usize,
    to: usize,
) -> Vec<LevelStats> {
    let fresh = || (from..=to).map(LevelStats::empty).collect::<Vec<_>>();
    parents
        .par_iter()
        .fold(fresh, |mut acc, p| {
            descend(p, filters, from, to, &mut acc);
            acc
        })
        .reduce(fresh, |a, b| {
            a.into_iter().zip(b.iter()).map(|(x, y)| x.merge(y)).collect()
        })
}

fn descend(p: &Permutation, filters: &[GapFilter], from: usize, to: usize, acc: &mut [LevelStats]) {
    let n = p.len() + 1;
    for g in allowed_gaps(p, filters) {
        let child = p.insert_max(g);
        acc[n - from].record(&child);
        if n < to {
            descend(&child, filters, from, to, acc);
        }
    }
}

impl ClassCensus {
    pub fn n_max(&self) -> usize {
        self.lengths.len() - 1
    }

    pub fn counts(&self) -> Vec<u64> {
        self.lengths.iter().map(|l| l.count).collect()
    }

    fn level(&self, n: usize) -> Result<&LevelStats> {
        self.lengths.get(n).ok_or(Error::CensusTooShort {
            have: self.n_max(),
            want: n,
        })
    }

    pub fn count(&self, n: usize) -> Result<u64> {
        Ok(self.level(n)?.count)
    }

    pub fn members(&self, n: usize) -> Result<&[Permutation]> {
        self.level(n)?
            .members
            .as_deref()
            .ok_or(Error::MembersNotRetained(n))
    }

    /// Simple members of length `n`, lexicographically.
    pub fn simples(&self, n: usize) -> Result<Vec<Permutation>> {
        Ok(self
            .members(n)?
            .iter()
            .filter(|p| p.is_simple())
            .cloned()
            .collect())
    }

    /// `(sum decomposable, skew decomposable)` member counts at length `n`.
    pub fn decomposable_counts(&self, n: usize) -> Result<(u64, u64)> {
        let l = self.level(n)?;
        Ok((l.sumdec_count, l.skewdec_count))
    }

    /// Generating function of the nonempty members, `Σ_{n≥1} |C_n| x^n`,
    /// known through the census horizon.
    pub fn series(&self) -> PowerSeries<BigRational> {
        let mut c: Vec<BigRational> = self
            .counts()
            .into_iter()
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        c[0] = BigRational::from_integer(0.into());
        PowerSeries::from_coeffs(c)
    }

    pub fn member_set(&self, n: usize) -> Result<BTreeSet<Permutation>> {
        Ok(self.members(n)?.iter().cloned().collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("census serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Cache(e.to_string()))
    }

    /// CSV count table: `n,count,simple,sum_decomposable,skew_decomposable`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count,simple,sum_decomposable,skew_decomposable\n");
        for l in &self.lengths {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                l.n, l.count, l.simple_count, l.sumdec_count, l.skewdec_count
            ));
        }
        out
    }
}

pub fn cache_file(dir: &Path, spec: &ClassSpec, n_max: usize) -> PathBuf {
    let key: Vec<String> = spec.basis().iter().map(|b| b.to_string()).collect();
    dir.join(format!("av_{}_n{}.json", key.join("-"), n_max))
}

/// Like [`enumerate_with`], reusing a census file from `dir` when its format
/// version and basis match.
pub fn enumerate_cached(
    spec: &ClassSpec,
    n_max: usize,
    opts: EnumerateOptions,
    dir: &Path,
) -> Result<ClassCensus> {
    let path = cache_file(dir, spec, n_max);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(census) = ClassCensus::from_json(&text) {
            let basis: Vec<String> = spec.basis().iter().map(|b| b.to_string()).collect();
            if census.version == CENSUS_FORMAT_VERSION
                && census.basis == basis
                && census.n_max() == n_max
            {
                return Ok(census);
            }
        }
    }
    let census = enumerate_with(spec, n_max, opts);
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&path, census.to_json()).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> ClassSpec {
        ClassSpec::parse(s).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn published_prefixes() {
        let c = enumerate(&spec("4213,3142"), 7);
        assert_eq!(c.counts()[1..], [1, 2, 6, 22, 89, 379, 1664]);
        let c = enumerate(&spec("4312,3142"), 7);
        assert_eq!(c.counts()[1..], [1, 2, 6, 22, 88, 367, 1568]);
        let c = enumerate(&spec("4231,3124"), 7);
        assert_eq!(c.counts()[1..], [1, 2, 6, 22, 88, 363, 1508]);
    }

    #[test]
    fn trivial_classes() {
        assert_eq!(enumerate(&spec("21"), 5).counts(), vec![1; 6]);
        assert_eq!(enumerate(&spec("1"), 3).counts(), vec![1, 0, 0, 0]);
        assert_eq!(enumerate(&spec(""), 4).counts(), vec![1, 1, 2, 6, 24]);
    }

    #[test]
    fn simples_of_first_class() {
        let c = enumerate(&spec("4213,3142"), 8);
        assert_eq!(c.simples(6).unwrap(), vec![p("246135")]);
        assert!(c.simples(5).unwrap().is_empty());
        assert!(c.simples(7).unwrap().is_empty());
        assert_eq!(c.simples(8).unwrap(), vec![p("24681357")]);
        assert_eq!(c.decomposable_counts(1).unwrap(), (0, 0));
    }

    #[test]
    fn membership() {
        let s = spec("4213,3142");
        assert!(s.contains(&p("246135")));
        assert!(!s.contains(&p("3142")));
        assert!(s.is_antichain());
        assert!(!spec("21,321").is_antichain());
    }

    #[test]
    fn counts_only_mode_matches_materialized() {
        let s = spec("4312,3142");
        let full = enumerate(&s, 8);
        let streamed = enumerate_with(&s, 8, EnumerateOptions { memory_threshold: 50 });
        assert_eq!(streamed.counts_only_from, Some(5));
        assert!(streamed.members(6).is_err());
        for n in 0..=8 {
            let a = &full.lengths[n];
            let b = &streamed.lengths[n];
            assert_eq!(
                (a.count, a.simple_count, a.sumdec_count, a.skewdec_count),
                (b.count, b.simple_count, b.sumdec_count, b.skewdec_count)
            );
        }
    }

    #[test]
    fn members_sorted() {
        let c = enumerate(&spec("4231,3124"), 6);
        for n in 0..=6 {
            let m = c.members(n).unwrap();
            assert!(m.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn csv_export() {
        let c = enumerate(&spec("21"), 2);
        assert_eq!(
            c.to_csv(),
            "n,count,simple,sum_decomposable,skew_decomposable\n0,1,1,0,0\n1,1,1,0,0\n2,1,1,1,0\n"
        );
    }
}
