//! Presentation files.
//!
//! ```text
//! # comment
//! group trefoil
//! gens x y
//! rel x y x y^-1 x^-1 y^-1
//! rel (x, y^2)^3
//! ```

use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub name: String,
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(name: impl Into<String>, generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generator_names.len();
        for (i, a) in generator_names.iter().enumerate() {
            if !is_ident(a) {
                return Err(Error::Invalid(format!("`{a}` is not a valid generator name")));
            }
            if generator_names[..i].contains(a) {
                return Err(Error::Invalid(format!("generator `{a}` listed twice")));
            }
        }
        for r in &relators {
            if r.max_generator().is_some_and(|g| g >= n) {
                return Err(Error::Invalid("relator mentions a generator out of range".into()));
            }
        }
        Ok(GroupPresentation {
            name: name.into(),
            generator_names,
            relators: relators.into_iter().map(|r| Word::from_letters(r.letters().iter().copied())).collect(),
        })
    }

    /// Free group on `n` generators `x1..xn`.
    pub fn free(n: usize) -> Self {
        GroupPresentation {
            name: format!("F{n}"),
            generator_names: crate::polyalg::var_names("x", n),
            relators: vec![],
        }
    }

    /// Free abelian group on `n` generators.
    pub fn free_abelian(n: usize) -> Self {
        let mut relators = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                relators.push(Word::commutator(&Word::generator(i), &Word::generator(j)));
            }
        }
        GroupPresentation {
            name: format!("Z{n}"),
            generator_names: crate::polyalg::var_names("x", n),
            relators,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("group {}\ngens {}\n", self.name, self.generator_names.join(" "));
        for r in &self.relators {
            s.push_str("rel ");
            s.push_str(&r.display_with(&self.generator_names));
            s.push('\n');
        }
        s
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut name: Option<String> = None;
    let mut gens: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap();
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed.trim_end(), ""));
        let rest_col = indent + keyword.len() + 2;
        match keyword {
            "group" => {
                if name.is_some() || gens.is_some() {
                    return Err(Error::syntax(line_no, indent + 1, "`group` must come first and only once"));
                }
                let n = rest.trim();
                if n.is_empty() || n.contains(char::is_whitespace) {
                    return Err(Error::syntax(line_no, rest_col, "expected a single group name"));
                }
                name = Some(n.to_string());
            }
            "gens" => {
                if gens.is_some() {
                    return Err(Error::syntax(line_no, indent + 1, "duplicate `gens` line"));
                }
                let mut list: Vec<String> = Vec::new();
                for (start, tok) in tokens(rest) {
                    let col = rest_col + start;
                    if !is_ident(tok) {
                        return Err(Error::syntax(line_no, col, format!("invalid generator name `{tok}`")));
                    }
                    if list.iter().any(|g| g == tok) {
                        return Err(Error::syntax(line_no, col, format!("generator `{tok}` listed twice")));
                    }
                    list.push(tok.to_string());
                }
                if list.is_empty() {
                    return Err(Error::syntax(line_no, rest_col, "expected at least one generator"));
                }
                gens = Some(list);
            }
            "rel" => {
                let Some(g) = gens.as_ref() else {
                    return Err(Error::syntax(line_no, indent + 1, "`rel` before `gens`"));
                };
                let mut p = WordParser {
                    chars: rest.chars().collect(),
                    pos: 0,
                    line: line_no,
                    offset: rest_col,
                    gens: g,
                };
                let w = p.word()?;
                p.skip_ws();
                if p.pos < p.chars.len() {
                    return Err(p.error("unexpected character"));
                }
                rels.push(w);
            }
            other => {
                return Err(Error::syntax(line_no, indent + 1, format!("unknown keyword `{other}`")));
            }
        }
    }
    let Some(gens) = gens else {
        return Err(Error::syntax(1, 1, "missing `gens` line"));
    };
    GroupPresentation::new(name.unwrap_or_else(|| "G".into()), gens, rels)
}

struct WordParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    offset: usize,
    gens: &'a [String],
}

impl WordParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::syntax(self.line, self.offset + self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        let mut any = false;
        while let Some(c) = self.peek() {
            if c == ',' || c == ')' {
                break;
            }
            w = w.mul(&self.term()?);
            any = true;
        }
        if !any {
            // `1` is not in the grammar; an empty relator is an error
            return Err(self.error("expected a generator or `(`"));
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let u = self.word()?;
                if self.peek() != Some(',') {
                    return Err(self.error("expected `,` in commutator"));
                }
                self.pos += 1;
                let v = self.word()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Word::commutator(&u, &v)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric()
                        || self.chars[self.pos] == '_'
                        || self.chars[self.pos] == '.')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.gens.iter().position(|g| *g == name) {
                    Some(i) => Word::generator(i),
                    None => {
                        return Err(Error::UnknownGenerator {
                            name,
                            line: self.line,
                        })
                    }
                }
            }
            _ => return Err(self.error("expected a generator or `(`")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if self.chars.get(self.pos) == Some(&'-') {
                self.pos += 1;
            }
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let e: i32 = s.parse().map_err(|_| self.error("expected an integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_shorthand() {
        let p = parse_presentation("gens x y\nrel (x,y)").unwrap();
        assert_eq!(p.relators[0].letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn free_reduction_on_parse() {
        let p = parse_presentation("gens x\nrel x x^-1").unwrap();
        assert!(p.relators[0].is_empty());
    }

    #[test]
    fn exponents_inside_commutators() {
        let p = parse_presentation("group z\ngens x1 x2 x3 x4\nrel (x1, x3^2 x4)").unwrap();
        assert_eq!(
            p.relators[0].letters(),
            &[(0, 1), (2, 2), (3, 1), (0, -1), (3, -1), (2, -2)]
        );
        assert_eq!(p.name, "z");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_presentation("gens x y\nrel x z") {
            Err(Error::UnknownGenerator { name, line }) => {
                assert_eq!(name, "z");
                assert_eq!(line, 2);
            }
            other => panic!("{other:?}"),
        }
        match parse_presentation("gens x y\nrel (x y") {
            Err(Error::Syntax { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_presentation("rel x").is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = parse_presentation("gens a b\nrel a^2 b^-3 (a,b)").unwrap();
        assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }
}
