//! Compiling rule sets to minimal complete DFAs, and counting their words.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lang::rules::{Repeat, RuleKind, RuleSet};

/// Default cap on `enumerate_words` output.
pub const DEFAULT_WORD_BOUND: u128 = 5_000_000;

/// Complete deterministic automaton; state 0 is the start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    trans: Vec<Vec<usize>>,
    accept: Vec<bool>,
}

#[derive(Default)]
struct Nfa {
    eps: Vec<Vec<usize>>,
    edges: Vec<Vec<(u32, usize)>>,
    accept: Vec<bool>,
}

impl Nfa {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.edges.push(Vec::new());
        self.accept.push(false);
        self.eps.len() - 1
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
}

/// NFA accepting exactly the words that break some rule.
fn violations(rs: &RuleSet) -> (Nfa, usize) {
    let full = rs.full_mask();
    let mut nfa = Nfa::default();
    let start = nfa.state();
    for rule in rs.rules() {
        let r0 = nfa.state();
        nfa.eps[start].push(r0);
        let mut cur = r0;
        if matches!(rule.kind, RuleKind::Factor | RuleKind::Suffix) {
            nfa.edges[cur].push((full, cur));
            let next = nfa.state();
            nfa.eps[cur].push(next);
            cur = next;
        }
        for atom in &rule.pattern.0 {
            let t = nfa.state();
            match atom.repeat {
                Repeat::Once => nfa.edges[cur].push((atom.letters, t)),
                Repeat::Plus => {
                    nfa.edges[cur].push((atom.letters, t));
                    nfa.edges[t].push((atom.letters, t));
                }
                Repeat::Star => {
                    nfa.eps[cur].push(t);
                    nfa.edges[t].push((atom.letters, t));
                }
            }
            cur = t;
        }
        if matches!(rule.kind, RuleKind::Factor | RuleKind::Prefix) {
            let next = nfa.state();
            nfa.eps[cur].push(next);
            nfa.edges[next].push((full, next));
            cur = next;
        }
        nfa.accept[cur] = true;
    }
    // Too short.
    let mut prev: Option<usize> = None;
    for _ in 0..rs.minlen() {
        let q = nfa.state();
        nfa.accept[q] = true;
        match prev {
            None => nfa.eps[start].push(q),
            Some(p) => nfa.edges[p].push((full, q)),
        }
        prev = Some(q);
    }
    // Wrong first letter.
    if let Some(mask) = rs.startset() {
        let bad = full & !mask;
        if bad != 0 {
            let q = nfa.state();
            nfa.edges[start].push((bad, q));
            nfa.edges[q].push((full, q));
            nfa.accept[q] = true;
        }
    }
    (nfa, start)
}

impl Dfa {
    /// Build from an explicit table; state 0 is the start. The result is
    /// minimized.
    pub fn from_table(alphabet: Vec<char>, trans: Vec<Vec<usize>>, accept: Vec<bool>) -> Result<Self> {
        let n = trans.len();
        let bad = n == 0
            || accept.len() != n
            || trans.iter().any(|row| row.len() != alphabet.len() || row.iter().any(|&t| t >= n));
        if bad {
            return Err(Error::Rule { line: 0, msg: "malformed transition table".into() });
        }
        Ok(Dfa { alphabet, trans, accept }.minimize())
    }

    /// Minimal DFA for the words that break none of the rules.
    pub fn compile(rs: &RuleSet) -> Dfa {
        let (nfa, start) = violations(rs);
        let k = rs.alphabet().len();
        let mut first = BTreeSet::from([start]);
        nfa.closure(&mut first);
        let mut ids: HashMap<BTreeSet<usize>, usize> = HashMap::from([(first.clone(), 0)]);
        let mut sets = vec![first];
        let mut trans: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let mut row = Vec::with_capacity(k);
            for letter in 0..k {
                let mut next = BTreeSet::new();
                for &s in &sets[i] {
                    for &(mask, t) in &nfa.edges[s] {
                        if mask & (1 << letter) != 0 {
                            next.insert(t);
                        }
                    }
                }
                nfa.closure(&mut next);
                let id = *ids.entry(next.clone()).or_insert_with(|| {
                    sets.push(next);
                    sets.len() - 1
                });
                row.push(id);
            }
            trans.push(row);
            i += 1;
        }
        let accept = sets.iter().map(|s| !s.iter().any(|&q| nfa.accept[q])).collect();
        Dfa { alphabet: rs.alphabet().to_vec(), trans, accept }.minimize()
    }

    /// Moore refinement, then states renumbered in breadth-first order
    /// from the start, visiting letters in alphabet order.
    fn minimize(&self) -> Dfa {
        let n = self.trans.len();
        let mut class: Vec<usize> = self.accept.iter().map(|&a| usize::from(a)).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut sig_ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|s| {
                    let sig = (class[s], self.trans[s].iter().map(|&t| class[t]).collect());
                    let len = sig_ids.len();
                    *sig_ids.entry(sig).or_insert(len)
                })
                .collect();
            let new_count = sig_ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut order = vec![usize::MAX; count];
        let mut queue = VecDeque::from([class[0]]);
        let mut rep = vec![usize::MAX; count];
        for s in 0..n {
            if rep[class[s]] == usize::MAX {
                rep[class[s]] = s;
            }
        }
        let mut seen = 0;
        order[class[0]] = 0;
        seen += 1;
        let mut bfs = Vec::new();
        while let Some(c) = queue.pop_front() {
            bfs.push(c);
            for &t in &self.trans[rep[c]] {
                if order[class[t]] == usize::MAX {
                    order[class[t]] = seen;
                    seen += 1;
                    queue.push_back(class[t]);
                }
            }
        }
        let trans = bfs
            .iter()
            .map(|&c| self.trans[rep[c]].iter().map(|&t| order[class[t]]).collect())
            .collect();
        let accept = bfs.iter().map(|&c| self.accept[rep[c]]).collect();
        Dfa { alphabet: self.alphabet.clone(), trans, accept }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn start(&self) -> usize {
        0
    }

    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.trans[state][letter]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accept[state]
    }

    pub fn run(&self, w: &[usize]) -> usize {
        w.iter().fold(0, |s, &l| self.trans[s][l])
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        w.iter().all(|&l| l < self.alphabet.len()) && self.accept[self.run(w)]
    }

    /// Letter indices of a word written with the alphabet's characters.
    pub fn parse_word(&self, w: &str) -> Result<Vec<usize>> {
        w.chars()
            .map(|c| self.alphabet.iter().position(|&a| a == c).ok_or(Error::UnknownLetter(c)))
            .collect()
    }

    pub fn word_to_string(&self, w: &[usize]) -> String {
        w.iter().map(|&l| self.alphabet[l]).collect()
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut live = self.accept.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for s in 0..n {
                if !live[s] && self.trans[s].iter().any(|&t| live[t]) {
                    live[s] = true;
                    changed = true;
                }
            }
        }
        live
    }

    /// Accepted word counts for lengths `0..=n`.
    pub fn counts(&self, n: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.num_states()];
        v[0] = BigUint::from(1u8);
        let mut out = Vec::with_capacity(n + 1);
        for step in 0..=n {
            out.push(
                v.iter()
                    .zip(&self.accept)
                    .filter(|(_, &a)| a)
                    .map(|(c, _)| c)
                    .sum(),
            );
            if step == n {
                break;
            }
            let mut next = vec![BigUint::zero(); self.num_states()];
            for (s, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for &t in &self.trans[s] {
                    next[t] += c;
                }
            }
            v = next;
        }
        out
    }

    pub fn count_words(&self, n: usize) -> BigUint {
        self.counts(n).pop().unwrap()
    }

    /// All accepted words of length `n` in lexicographic (alphabet) order.
    pub fn enumerate_words(&self, n: usize, bound: u128) -> Result<Vec<Vec<usize>>> {
        let total = self.count_words(n);
        let got = total.to_u128().unwrap_or(u128::MAX);
        if got > bound {
            return Err(Error::BoundExceeded { what: "accepted words", got, bound });
        }
        let mut out = Vec::with_capacity(got as usize);
        self.visit_words(n, |w| out.push(w.to_vec()));
        Ok(out)
    }

    /// Call `f` on each accepted word of length `n`, in lexicographic
    /// order, without collecting them.
    pub fn visit_words(&self, n: usize, mut f: impl FnMut(&[usize])) {
        // ok[r][s]: an accepting state is exactly r steps from s.
        let mut ok = vec![self.accept.clone()];
        for r in 1..=n {
            let row = (0..self.num_states())
                .map(|s| self.trans[s].iter().any(|&t| ok[r - 1][t]))
                .collect();
            ok.push(row);
        }
        let mut word = Vec::with_capacity(n);
        self.walk(0, n, &ok, &mut word, &mut f);
    }

    fn walk(&self, s: usize, left: usize, ok: &[Vec<bool>], word: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if left == 0 {
            if self.accept[s] {
                f(word);
            }
            return;
        }
        for (l, &t) in self.trans[s].iter().enumerate() {
            if ok[left - 1][t] {
                word.push(l);
                self.walk(t, left - 1, ok, word, f);
                word.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    fn compile(name: &str) -> (RuleSet, Dfa) {
        let rs = RuleSet::parse(data::rules(name).unwrap()).unwrap();
        let d = Dfa::compile(&rs);
        (rs, d)
    }

    #[test]
    fn all_words() {
        let (_, d) = compile("all");
        assert_eq!(d.num_states(), 1);
        assert_eq!(d.count_words(3), BigUint::from(64u32));
    }

    #[test]
    fn simple_alternations() {
        let (_, d) = compile("lang_simple_4213_3142");
        let counts: Vec<u32> = d.counts(9).iter().map(|c| c.to_u32().unwrap()).collect();
        assert_eq!(counts, vec![0, 0, 0, 0, 1, 0, 1, 0, 1, 0]);
        assert_eq!(d.enumerate_words(6, 10).unwrap(), vec![vec![1, 0, 1, 0, 1, 0]]);
    }

    #[test]
    fn matches_brute_force_on_every_shipped_file() {
        for name in data::names().filter(|n| n.ends_with(".rules")) {
            let rs = RuleSet::parse(data::file(name).unwrap()).unwrap();
            let d = Dfa::compile(&rs);
            let k = rs.alphabet().len();
            for n in 0..=6 {
                let mut brute = 0u64;
                let mut w = vec![0usize; n];
                loop {
                    let expect = rs.accepts(&w);
                    assert_eq!(d.accepts(&w), expect, "{name} {w:?}");
                    brute += u64::from(expect);
                    let Some(i) = (0..n).rev().find(|&i| w[i] + 1 < k) else { break };
                    w[i] += 1;
                    w[i + 1..].iter_mut().for_each(|x| *x = 0);
                }
                assert_eq!(d.count_words(n), BigUint::from(brute), "{name} n={n}");
            }
        }
    }

    #[test]
    fn minimization_is_canonical() {
        // Two copies of the all-words automaton collapse to one state.
        let d = Dfa::from_table(vec!['a'], vec![vec![1], vec![0]], vec![true, true]).unwrap();
        assert_eq!(d.num_states(), 1);
        let (_, a) = compile("lang_grid_4312_3142");
        let (_, b) = compile("lang_grid_4312_3142");
        assert_eq!(a, b);
        assert!(Dfa::from_table(vec!['a'], vec![vec![3]], vec![true]).is_err());
    }

    #[test]
    fn enumeration_bound() {
        let (_, d) = compile("all");
        assert_eq!(
            d.enumerate_words(3, 10),
            Err(Error::BoundExceeded { what: "accepted words", got: 64, bound: 10 })
        );
        let ws = d.enumerate_words(2, 100).unwrap();
        assert_eq!(ws.len(), 16);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
