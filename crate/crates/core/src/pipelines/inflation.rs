//! Inflation rule tables: which blocks may inflate each entry of a simple
//! skeleton, keyed by the letters of the skeleton's encoding word.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::class_enum::{self, ClassCensus, ClassSpec};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::lang::Dfa;
use crate::perm::{parse_basis, Permutation};
use crate::pipelines::{Check, Report, ReportBuilder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockClass {
    /// The class being verified.
    Host,
    Av(Vec<Permutation>),
    Minus(Box<BlockClass>, Box<BlockClass>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Every(char),
    First(char),
    Last(char),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub start: Option<char>,
    pub rows: Vec<(Selector, BlockClass)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    pub cases: Vec<Case>,
}

fn parse_class(s: &str) -> std::result::Result<BlockClass, String> {
    if let Some((a, b)) = s.split_once(" - ") {
        return Ok(BlockClass::Minus(Box::new(parse_class(a)?), Box::new(parse_class(b)?)));
    }
    let s = s.trim();
    if s == "host" {
        return Ok(BlockClass::Host);
    }
    let inner = s
        .strip_prefix("Av(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("expected host or Av(...), got {s:?}"))?;
    parse_basis(inner).map(BlockClass::Av).map_err(|e| e.to_string())
}

impl RuleTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cases: Vec<Case> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |msg: String| Error::RuleTable { line, msg };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix("case") {
                let mut parts = rest.split_whitespace();
                let name = parts.next().ok_or_else(|| err("case needs a name".into()))?;
                let mut start = None;
                for p in parts {
                    let letter = p
                        .strip_prefix("start=")
                        .filter(|l| l.chars().count() == 1)
                        .ok_or_else(|| err(format!("unknown case option {p:?}")))?;
                    start = letter.chars().next();
                }
                cases.push(Case { name: name.into(), start, rows: Vec::new() });
                continue;
            }
            let case = cases.last_mut().ok_or_else(|| err("row before any case".into()))?;
            let (sel, class) = content.split_once('=').ok_or_else(|| err("expected `selector = class`".into()))?;
            let sel = sel.trim();
            let one = |s: &str| {
                let mut cs = s.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(err(format!("bad selector {sel:?}"))),
                }
            };
            let selector = if let Some(l) = sel.strip_prefix("first-") {
                Selector::First(one(l)?)
            } else if let Some(l) = sel.strip_prefix("last-") {
                Selector::Last(one(l)?)
            } else {
                Selector::Every(one(sel)?)
            };
            case.rows.push((selector, parse_class(class).map_err(err)?));
        }
        if cases.is_empty() {
            return Err(Error::RuleTable { line: 0, msg: "no cases".into() });
        }
        Ok(RuleTable { cases })
    }
}

impl Case {
    /// The class allowed at word position `i`; `first-`/`last-` rows take
    /// precedence over plain letter rows.
    fn class_at(&self, w: &[char], i: usize) -> Result<&BlockClass> {
        let l = w[i];
        let first = w.iter().position(|&c| c == l) == Some(i);
        let last = w.iter().rposition(|&c| c == l) == Some(i);
        let pick = |want: &dyn Fn(Selector) -> bool| self.rows.iter().find(|(s, _)| want(*s)).map(|(_, c)| c);
        pick(&|s| first && s == Selector::First(l))
            .or_else(|| pick(&|s| last && s == Selector::Last(l)))
            .or_else(|| pick(&|s| s == Selector::Every(l)))
            .ok_or_else(|| Error::RuleTable { line: 0, msg: format!("case {} has no row for {l}", self.name) })
    }

    fn applies(&self, w: &[char]) -> bool {
        self.start.is_none_or(|s| w.first() == Some(&s))
    }
}

/// Memberships and member lists for the block classes of one table.
struct Blocks<'a> {
    host: &'a ClassCensus,
    host_spec: &'a ClassSpec,
    censuses: HashMap<Vec<Permutation>, ClassCensus>,
}

impl<'a> Blocks<'a> {
    fn new(host_spec: &'a ClassSpec, host: &'a ClassCensus, table: &RuleTable, n_max: usize) -> Self {
        let mut censuses = HashMap::new();
        fn collect(c: &BlockClass, out: &mut Vec<Vec<Permutation>>) {
            match c {
                BlockClass::Host => {}
                BlockClass::Av(b) => out.push(b.clone()),
                BlockClass::Minus(a, b) => {
                    collect(a, out);
                    collect(b, out);
                }
            }
        }
        let mut bases = Vec::new();
        for case in &table.cases {
            for (_, c) in &case.rows {
                collect(c, &mut bases);
            }
        }
        for b in bases {
            censuses
                .entry(b.clone())
                .or_insert_with(|| class_enum::enumerate(&ClassSpec::new(b), n_max));
        }
        Blocks { host, host_spec, censuses }
    }

    fn contains(&self, c: &BlockClass, p: &Permutation) -> bool {
        match c {
            BlockClass::Host => self.host_spec.contains(p),
            BlockClass::Av(b) => b.iter().all(|q| p.avoids(q)),
            BlockClass::Minus(a, b) => self.contains(a, p) && !self.contains(b, p),
        }
    }

    fn members(&self, c: &BlockClass, n: usize) -> Vec<Permutation> {
        match c {
            BlockClass::Host => self.host.members(n).expect("host census covers n").to_vec(),
            BlockClass::Av(b) => self.censuses[b].members(n).expect("census covers n").to_vec(),
            BlockClass::Minus(a, b) => self.members(a, n).into_iter().filter(|p| !self.contains(b, p)).collect(),
        }
    }
}

/// Block class for each skeleton position, given the word and the
/// letter-to-position map.
fn allowed<'c>(case: &'c Case, word: &[char], pos: &[usize]) -> Result<Vec<&'c BlockClass>> {
    let mut by_pos = vec![None; word.len()];
    for (i, &j) in pos.iter().enumerate() {
        by_pos[j] = Some(case.class_at(word, i)?);
    }
    Ok(by_pos.into_iter().map(|c| c.expect("positions are a permutation")).collect())
}

/// All compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if cur.len() + 1 == parts {
        if total >= 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    for k in 1..=total.saturating_sub(parts - cur.len() - 1) {
        cur.push(k);
        compositions(total - k, parts, out, cur);
        cur.pop();
    }
}

/// Check a rule table against brute force, both ways.
///
/// Forward: every class member of length `4..=n_max` whose skeleton is a
/// simple of length ≥ 4 has blocks fitting exactly one applicable case.
/// Converse: every inflation allowed by some case is a member, and the
/// number of allowed inflations of each skeleton at each length equals the
/// number of members with that skeleton.
pub fn verify_inflation_rules(
    class: &ClassSpec,
    grid: &GridSpec,
    simple_lang: &Dfa,
    table: &RuleTable,
    n_max: usize,
) -> Result<Report> {
    let mut rep = ReportBuilder::new(format!("inflation rules {}", class.name()), &["inflation rules"]);
    let census = class_enum::enumerate(class, n_max);
    let blocks = Blocks::new(class, &census, table, n_max);

    // skeleton → encoding word, from the simple-word language
    let mut word_of: HashMap<Permutation, (Vec<char>, Vec<usize>)> = HashMap::new();
    for len in 4..=n_max {
        for w in simple_lang.enumerate_words(len, u128::MAX)? {
            let (p, pos) = grid.decode_with_positions(&w)?;
            let letters: Vec<char> = w.iter().map(|&l| simple_lang.alphabet()[l]).collect();
            if word_of.insert(p.clone(), (letters, pos)).is_some() {
                return Err(Error::Series(format!("two simple words decode to {p}")));
            }
        }
    }
    let mut forward_counts: BTreeMap<(Permutation, usize), u64> = BTreeMap::new();
    for n in 4..=n_max {
        let mut bad: Vec<String> = Vec::new();
        for p in census.members(n)? {
            let d = p.decompose();
            if d.skeleton.len() < 4 {
                continue;
            }
            let Some((word, pos)) = word_of.get(&d.skeleton) else {
                bad.push(format!("{p}: skeleton {} has no word", d.skeleton));
                continue;
            };
            let mut hits = 0;
            for case in table.cases.iter().filter(|c| c.applies(word)) {
                let classes = allowed(case, word, pos)?;
                if d.blocks.iter().zip(&classes).all(|(b, c)| blocks.contains(c, b)) {
                    hits += 1;
                }
            }
            if hits != 1 {
                bad.push(format!("{p} fits {hits} cases"));
            }
            *forward_counts.entry((d.skeleton.clone(), n)).or_default() += 1;
        }
        rep.push(Check::truth("members fit exactly one case", Some(n), bad.is_empty(), bad.iter().take(5).cloned().collect::<Vec<_>>().join("; ")));
    }

    let mut converse_counts: BTreeMap<(Permutation, usize), u64> = BTreeMap::new();
    let mut outsiders: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let member_sets: Vec<HashSet<Permutation>> =
        (0..=n_max).map(|n| census.members(n).map(|m| m.iter().cloned().collect()).unwrap_or_default()).collect();
    for (skel, (word, pos)) in &word_of {
        let k = skel.len();
        for case in table.cases.iter().filter(|c| c.applies(word)) {
            let classes = allowed(case, word, pos)?;
            for total in k..=n_max {
                let mut comps = Vec::new();
                compositions(total, k, &mut comps, &mut Vec::new());
                for comp in comps {
                    let lists: Vec<Vec<Permutation>> =
                        comp.iter().zip(&classes).map(|(&len, c)| blocks.members(c, len)).collect();
                    if lists.iter().any(|l| l.is_empty()) {
                        continue;
                    }
                    let mut idx = vec![0; k];
                    loop {
                        let chosen: Vec<Permutation> = idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect();
                        let q = Permutation::inflate(skel, &chosen)?;
                        if !member_sets[total].contains(&q) {
                            outsiders.entry(total).or_default().push(q.to_string());
                        }
                        *converse_counts.entry((skel.clone(), total)).or_default() += 1;
                        let Some(i) = (0..k).rev().find(|&i| idx[i] + 1 < lists[i].len()) else { break };
                        idx[i] += 1;
                        idx[i + 1..].iter_mut().for_each(|v| *v = 0);
                    }
                }
            }
        }
    }
    for n in 4..=n_max {
        let out = outsiders.get(&n).cloned().unwrap_or_default();
        rep.push(Check::truth("allowed inflations are members", Some(n), out.is_empty(), out.iter().take(5).cloned().collect::<Vec<_>>().join(",")));
        let f: u64 = forward_counts.iter().filter(|((_, l), _)| *l == n).map(|(_, v)| v).sum();
        let c: u64 = converse_counts.iter().filter(|((_, l), _)| *l == n).map(|(_, v)| v).sum();
        let per_skeleton = forward_counts
            .iter()
            .filter(|((_, l), _)| *l == n)
            .all(|(key, v)| converse_counts.get(key) == Some(v))
            && converse_counts.iter().filter(|((_, l), _)| *l == n).all(|(key, v)| forward_counts.get(key) == Some(v));
        let mut chk = Check::new("inflation count matches members", Some(n), f, c);
        chk.pass = chk.pass && per_skeleton;
        rep.push(chk);
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn parse_tables() {
        for name in ["inflate_4213_3142", "inflate_4312_3142", "inflate_4231_3124"] {
            RuleTable::parse(data::table(name).unwrap()).unwrap();
        }
        let t = RuleTable::parse(data::table("inflate_4312_3142").unwrap()).unwrap();
        assert_eq!(t.cases.len(), 3);
        assert_eq!(t.cases[1].start, Some('a'));
        assert!(matches!(t.cases[1].rows[0], (Selector::First('a'), BlockClass::Minus(_, _))));
        assert!(matches!(RuleTable::parse("a = host\n"), Err(Error::RuleTable { line: 1, .. })));
        assert!(matches!(RuleTable::parse("case x\na = Av(\n"), Err(Error::RuleTable { line: 2, .. })));
    }

    #[test]
    fn selector_precedence() {
        let t = RuleTable::parse("case x\nb = Av(21)\nlast-b = Av(213)\na = host\n").unwrap();
        let w: Vec<char> = "baba".chars().collect();
        assert_eq!(t.cases[0].class_at(&w, 0).unwrap(), &BlockClass::Av(parse_basis("21").unwrap()));
        assert_eq!(t.cases[0].class_at(&w, 2).unwrap(), &BlockClass::Av(parse_basis("213").unwrap()));
        assert_eq!(t.cases[0].class_at(&w, 1).unwrap(), &BlockClass::Host);
        assert!(t.cases[0].class_at(&['c'], 0).is_err());
    }

    #[test]
    fn composition_count() {
        let mut out = Vec::new();
        compositions(6, 3, &mut out, &mut Vec::new());
        assert_eq!(out.len(), 10);
    }

    #[test]
    fn alternation_rules_small() {
        let class = ClassSpec::parse("4213,3142").unwrap();
        let grid = data::grid_spec("grid_4213_3142").unwrap();
        let (_, dfa) = crate::lang::shipped("lang_simple_4213_3142").unwrap();
        let table = RuleTable::parse(data::table("inflate_4213_3142").unwrap()).unwrap();
        let rep = verify_inflation_rules(&class, &grid, &dfa, &table, 7).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
