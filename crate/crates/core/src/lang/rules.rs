//! Rule files: forbidden factors, prefixes, suffixes and whole words over
//! a small pattern vocabulary (letters, letter sets, `*` and `+`).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repeat {
    Once,
    Star,
    Plus,
}

/// One pattern position: a set of letters (bitmask over the alphabet).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Atom {
    pub letters: u32,
    pub repeat: Repeat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern(pub Vec<Atom>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Factor,
    Prefix,
    Suffix,
    Word,
}

impl RuleKind {
    fn keyword(self) -> &'static str {
        match self {
            RuleKind::Factor => "factor",
            RuleKind::Prefix => "prefix",
            RuleKind::Suffix => "suffix",
            RuleKind::Word => "word",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub kind: RuleKind,
    pub pattern: Pattern,
    /// 1-based source line, 0 for rules built in code.
    pub line: usize,
}

/// A language given as "every word over the alphabet that breaks none of
/// the rules", optionally with a minimum length and allowed first letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet {
    alphabet: Vec<char>,
    rules: Vec<Rule>,
    minlen: usize,
    startset: Option<u32>,
}

impl RuleSet {
    pub fn new(alphabet: Vec<char>) -> Result<Self> {
        if alphabet.is_empty() || alphabet.len() > 32 {
            return Err(Error::Rule { line: 0, msg: "alphabet needs 1 to 32 letters".into() });
        }
        for (i, c) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(c) {
                return Err(Error::Rule { line: 0, msg: format!("letter {c} listed twice") });
            }
        }
        Ok(RuleSet { alphabet, rules: Vec::new(), minlen: 0, startset: None })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut set: Option<RuleSet> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Rule { line, msg };
            let (key, value) = content
                .split_once(':')
                .ok_or_else(|| err("expected `keyword: value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "alphabet" {
                if set.is_some() {
                    return Err(err("alphabet given twice".into()));
                }
                let letters = parse_letter_list(value).map_err(err)?;
                set = Some(RuleSet::new(letters).map_err(|e| match e {
                    Error::Rule { msg, .. } => Error::Rule { line, msg },
                    other => other,
                })?);
                continue;
            }
            let rs = set.as_mut().ok_or_else(|| err("alphabet must come first".into()))?;
            match key {
                "factor" | "prefix" | "suffix" | "word" => {
                    let kind = match key {
                        "factor" => RuleKind::Factor,
                        "prefix" => RuleKind::Prefix,
                        "suffix" => RuleKind::Suffix,
                        _ => RuleKind::Word,
                    };
                    let pattern = rs.parse_pattern(value).map_err(err)?;
                    rs.rules.push(Rule { kind, pattern, line });
                }
                "minlen" => {
                    rs.minlen = value.parse().map_err(|_| err(format!("bad length {value:?}")))?;
                }
                "startset" => {
                    let mut mask = 0;
                    for c in parse_letter_list(value).map_err(err)? {
                        mask |= 1 << rs.index(c).map_err(err)?;
                    }
                    rs.startset = Some(mask);
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        set.ok_or(Error::Rule { line: 0, msg: "no alphabet line".into() })
    }

    fn index(&self, c: char) -> std::result::Result<usize, String> {
        self.alphabet
            .iter()
            .position(|&a| a == c)
            .ok_or_else(|| format!("letter {c} is not in the alphabet"))
    }

    /// Parse a pattern such as `{b,d}+ a` or `a*d`.
    pub fn parse_pattern(&self, text: &str) -> std::result::Result<Pattern, String> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut atoms = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let letters = match chars[i] {
                '{' => {
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == '}')
                        .ok_or("unclosed `{`")?
                        + i;
                    let mut mask = 0u32;
                    for c in chars[i + 1..close].iter().filter(|&&c| c != ',') {
                        mask |= 1 << self.index(*c)?;
                    }
                    if mask == 0 {
                        return Err("empty letter set".into());
                    }
                    i = close + 1;
                    mask
                }
                '*' | '+' | '}' | ',' => return Err(format!("unexpected `{}`", chars[i])),
                c => {
                    i += 1;
                    1 << self.index(c)?
                }
            };
            let repeat = match chars.get(i) {
                Some('*') => Repeat::Star,
                Some('+') => Repeat::Plus,
                _ => Repeat::Once,
            };
            if repeat != Repeat::Once {
                i += 1;
            }
            atoms.push(Atom { letters, repeat });
        }
        if atoms.is_empty() {
            return Err("empty pattern".into());
        }
        Ok(Pattern(atoms))
    }

    /// Add a rule written in pattern syntax.
    pub fn forbid(&mut self, kind: RuleKind, pattern: &str) -> Result<()> {
        let pattern = self.parse_pattern(pattern).map_err(|msg| Error::Rule { line: 0, msg })?;
        self.rules.push(Rule { kind, pattern, line: 0 });
        Ok(())
    }

    pub fn set_minlen(&mut self, n: usize) {
        self.minlen = n;
    }

    /// Restrict the first letter; `None` lifts the restriction.
    pub fn set_startset(&mut self, letters: Option<&[char]>) -> Result<()> {
        self.startset = match letters {
            None => None,
            Some(ls) => {
                let mut mask = 0;
                for &c in ls {
                    mask |= 1 << self.index(c).map_err(|msg| Error::Rule { line: 0, msg })?;
                }
                Some(mask)
            }
        };
        Ok(())
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn minlen(&self) -> usize {
        self.minlen
    }

    pub fn startset(&self) -> Option<u32> {
        self.startset
    }

    pub fn full_mask(&self) -> u32 {
        if self.alphabet.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.alphabet.len()) - 1
        }
    }

    /// Direct check of one word (letter indices) against the rules.
    pub fn accepts(&self, w: &[usize]) -> bool {
        if w.len() < self.minlen {
            return false;
        }
        if let (Some(mask), Some(&first)) = (self.startset, w.first()) {
            if mask & (1 << first) == 0 {
                return false;
            }
        }
        !self.rules.iter().any(|r| {
            let n = w.len();
            match r.kind {
                RuleKind::Word => r.pattern.matches(w),
                RuleKind::Prefix => (0..=n).any(|j| r.pattern.matches(&w[..j])),
                RuleKind::Suffix => (0..=n).any(|i| r.pattern.matches(&w[i..])),
                RuleKind::Factor => (0..=n).any(|i| (i..=n).any(|j| r.pattern.matches(&w[i..j]))),
            }
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("alphabet: {}\n", join_letters(&self.alphabet));
        for r in &self.rules {
            out.push_str(&format!("{}: {}\n", r.kind.keyword(), self.pattern_text(&r.pattern)));
        }
        if self.minlen > 0 {
            out.push_str(&format!("minlen: {}\n", self.minlen));
        }
        if let Some(mask) = self.startset {
            out.push_str(&format!("startset: {}\n", join_letters(&self.mask_letters(mask))));
        }
        out
    }

    fn mask_letters(&self, mask: u32) -> Vec<char> {
        self.alphabet
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &c)| c)
            .collect()
    }

    pub fn pattern_text(&self, p: &Pattern) -> String {
        let parts: Vec<String> = p
            .0
            .iter()
            .map(|a| {
                let ls = self.mask_letters(a.letters);
                let body = if ls.len() == 1 {
                    ls[0].to_string()
                } else {
                    format!("{{{}}}", join_letters(&ls).replace(' ', ""))
                };
                match a.repeat {
                    Repeat::Once => body,
                    Repeat::Star => body + "*",
                    Repeat::Plus => body + "+",
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl Pattern {
    /// Whole-string match by backtracking; patterns are tiny.
    pub fn matches(&self, w: &[usize]) -> bool {
        fn go(atoms: &[Atom], w: &[usize]) -> bool {
            let Some((a, rest)) = atoms.split_first() else {
                return w.is_empty();
            };
            let hit = |i: usize| w.get(i).is_some_and(|&l| a.letters & (1 << l) != 0);
            match a.repeat {
                Repeat::Once => hit(0) && go(rest, &w[1..]),
                Repeat::Star | Repeat::Plus => {
                    let min = usize::from(a.repeat == Repeat::Plus);
                    let mut run = 0;
                    while hit(run) {
                        run += 1;
                    }
                    (min..=run).any(|k| go(rest, &w[k..]))
                }
            }
        }
        go(&self.0, w)
    }
}

fn parse_letter_list(value: &str) -> std::result::Result<Vec<char>, String> {
    let mut out = Vec::new();
    for tok in value.split([',', ' ']).map(str::trim).filter(|t| !t.is_empty()) {
        let mut cs = tok.chars();
        match (cs.next(), cs.next()) {
            (Some(c), None) if !"{}*+,#:".contains(c) => out.push(c),
            _ => return Err(format!("bad letter {tok:?}")),
        }
    }
    if out.is_empty() {
        return Err("no letters".into());
    }
    Ok(out)
}

fn join_letters(ls: &[char]) -> String {
    ls.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abcd() -> RuleSet {
        RuleSet::new(vec!['a', 'b', 'c', 'd']).unwrap()
    }

    #[test]
    fn patterns() {
        let rs = abcd();
        let p = rs.parse_pattern("{b,d}+ a").unwrap();
        assert_eq!(p.0.len(), 2);
        assert!(p.matches(&[1, 3, 0]));
        assert!(p.matches(&[3, 0]));
        assert!(!p.matches(&[0]));
        assert!(!p.matches(&[2, 0]));
        let q = rs.parse_pattern("a*d").unwrap();
        assert!(q.matches(&[3]) && q.matches(&[0, 0, 3]) && !q.matches(&[0]));
        assert_eq!(rs.pattern_text(&p), "{b,d}+ a");
        assert!(rs.parse_pattern("{a,x}").is_err());
        assert!(rs.parse_pattern("{a,b").is_err());
        assert!(rs.parse_pattern("*a").is_err());
    }

    #[test]
    fn parse_and_print() {
        let text = "alphabet: a,b,c\n# comment\nfactor: a a\nprefix: {b,c}* a  # trailing\nminlen: 2\nstartset: a,b\n";
        let rs = RuleSet::parse(text).unwrap();
        assert_eq!(rs.rules().len(), 2);
        assert_eq!(rs.rules()[1].line, 4);
        assert_eq!(rs.minlen(), 2);
        assert_eq!(RuleSet::parse(&rs.to_text()).unwrap().to_text(), rs.to_text());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = RuleSet::parse("alphabet: a,b\nfactor: a e\n").unwrap_err();
        assert!(matches!(e, Error::Rule { line: 2, .. }));
        assert!(matches!(RuleSet::parse("factor: a\n"), Err(Error::Rule { line: 1, .. })));
        assert!(matches!(RuleSet::parse("alphabet: a\nbogus: a\n"), Err(Error::Rule { line: 2, .. })));
        assert!(RuleSet::parse("alphabet: a,a\n").is_err());
    }

    #[test]
    fn direct_acceptance() {
        let mut rs = abcd();
        rs.forbid(RuleKind::Factor, "a a").unwrap();
        rs.forbid(RuleKind::Suffix, "b").unwrap();
        assert!(rs.accepts(&[0, 1, 0]));
        assert!(!rs.accepts(&[1, 0, 0, 2]));
        assert!(!rs.accepts(&[0, 1]));
        rs.set_startset(Some(&['c'])).unwrap();
        assert!(!rs.accepts(&[0]));
        assert!(rs.accepts(&[2]));
        assert!(rs.accepts(&[]));
    }
}
