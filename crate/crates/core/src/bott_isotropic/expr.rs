//! Affine expressions in `m`, `n`, `r` and the two small languages built on
//! them: value lists such as `m+1,…,m+n+(n-r)+1` and case conditions such as
//! `2<r<n-1, n>=4`.

use std::fmt;

use serde::Serialize;

use crate::error::ParseError;

pub const MAX_EXPR_LEN: usize = 4096;

/// `m·m + n·n + r·r + c`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Affine {
    pub m: i64,
    pub n: i64,
    pub r: i64,
    pub c: i64,
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine { c, ..Default::default() }
    }

    fn var(v: char) -> Self {
        let mut a = Affine::default();
        match v {
            'm' => a.m = 1,
            'n' => a.n = 1,
            'r' => a.r = 1,
            _ => unreachable!("variables are filtered by the tokenizer"),
        }
        a
    }

    fn checked_add(self, o: Affine) -> Option<Affine> {
        Some(Affine {
            m: self.m.checked_add(o.m)?,
            n: self.n.checked_add(o.n)?,
            r: self.r.checked_add(o.r)?,
            c: self.c.checked_add(o.c)?,
        })
    }

    fn checked_scale(self, k: i64) -> Option<Affine> {
        Some(Affine {
            m: self.m.checked_mul(k)?,
            n: self.n.checked_mul(k)?,
            r: self.r.checked_mul(k)?,
            c: self.c.checked_mul(k)?,
        })
    }

    /// Substitutes `n` and `r`, leaving an affine function of `m`.
    pub fn at(&self, n: i64, r: i64) -> Option<LinearM> {
        let c = self.c.checked_add(self.n.checked_mul(n)?)?.checked_add(self.r.checked_mul(r)?)?;
        Some(LinearM { slope: self.m, constant: c })
    }
}

/// `slope·m + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearM {
    pub slope: i64,
    pub constant: i64,
}

impl fmt::Display for LinearM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = match self.slope {
            0 => String::new(),
            1 => "m".to_string(),
            -1 => "-m".to_string(),
            s => format!("{s}m"),
        };
        match (lead.is_empty(), self.constant) {
            (true, c) => write!(f, "{c}"),
            (false, 0) => f.write_str(&lead),
            (false, c) if c > 0 => write!(f, "{lead}+{c}"),
            (false, c) => write!(f, "{lead}{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl Cmp {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
            Cmp::Ge => a >= b,
            Cmp::Gt => a > b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Var(char),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    Ellipsis,
    Cmp(Cmp),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    if input.len() > MAX_EXPR_LEN {
        return Err(ParseError::new(MAX_EXPR_LEN, "input too long"));
    }
    let mut out = Vec::new();
    let mut it = input.char_indices().peekable();
    while let Some((pos, ch)) = it.next() {
        let tok = match ch {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut v: i64 = ch.to_digit(10).unwrap() as i64;
                while let Some(&(_, d)) = it.peek() {
                    let Some(dv) = d.to_digit(10) else { break };
                    v = v
                        .checked_mul(10)
                        .and_then(|x| x.checked_add(dv as i64))
                        .ok_or_else(|| ParseError::new(pos, "integer too large"))?;
                    it.next();
                }
                Tok::Int(v)
            }
            'm' | 'n' | 'r' => Tok::Var(ch),
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '\u{2026}' => Tok::Ellipsis,
            '.' => {
                for _ in 0..2 {
                    match it.next() {
                        Some((_, '.')) => {}
                        _ => return Err(ParseError::new(pos, "expected `...`")),
                    }
                }
                Tok::Ellipsis
            }
            '<' | '>' | '=' | '!' => {
                let eq = matches!(it.peek(), Some(&(_, '=')));
                if eq {
                    it.next();
                }
                match (ch, eq) {
                    ('<', false) => Tok::Cmp(Cmp::Lt),
                    ('<', true) => Tok::Cmp(Cmp::Le),
                    ('>', false) => Tok::Cmp(Cmp::Gt),
                    ('>', true) => Tok::Cmp(Cmp::Ge),
                    ('=', _) => Tok::Cmp(Cmp::Eq),
                    ('!', true) => Tok::Cmp(Cmp::Ne),
                    _ => return Err(ParseError::new(pos, "expected `!=`")),
                }
            }
            '\u{2264}' => Tok::Cmp(Cmp::Le),
            '\u{2265}' => Tok::Cmp(Cmp::Ge),
            '\u{2260}' => Tok::Cmp(Cmp::Ne),
            other => return Err(ParseError::new(pos, format!("unexpected character `{other}`"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    i: usize,
    end: usize,
    depth: usize,
}

const MAX_DEPTH: usize = 64;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn overflow(&self) -> ParseError {
        ParseError::new(self.pos(), "arithmetic overflow")
    }

    fn expr(&mut self) -> Result<Affine, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.pos(), "nesting too deep"));
        }
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Plus) => self.i += 1,
            Some(Tok::Minus) => {
                sign = -1;
                self.i += 1
            }
            _ => {}
        }
        let mut acc = self.term()?.checked_scale(sign).ok_or_else(|| self.overflow())?;
        loop {
            let s = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => break,
            };
            self.i += 1;
            let t = self.term()?.checked_scale(s).ok_or_else(|| self.overflow())?;
            acc = acc.checked_add(t).ok_or_else(|| self.overflow())?;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Affine, ParseError> {
        if let Some(&Tok::Int(k)) = self.peek() {
            self.i += 1;
            if matches!(self.peek(), Some(Tok::Star)) {
                self.i += 1;
                return self.factor()?.checked_scale(k).ok_or_else(|| self.overflow());
            }
            if matches!(self.peek(), Some(Tok::Var(_)) | Some(Tok::LParen)) {
                return self.factor()?.checked_scale(k).ok_or_else(|| self.overflow());
            }
            return Ok(Affine::constant(k));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Affine, ParseError> {
        match self.peek() {
            Some(&Tok::Var(v)) => {
                self.i += 1;
                Ok(Affine::var(v))
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let e = self.expr()?;
                if !matches!(self.peek(), Some(Tok::RParen)) {
                    return Err(ParseError::new(self.pos(), "expected `)`"));
                }
                self.i += 1;
                Ok(e)
            }
            _ => Err(ParseError::new(self.pos(), "expected a number, variable or `(`")),
        }
    }
}

/// One entry of a value list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListItem {
    Value(Affine),
    Ellipsis,
}

/// A parsed value list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueList(pub Vec<ListItem>);

pub fn parse_expr(input: &str) -> Result<Affine, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks: &toks, i: 0, end: input.len(), depth: 0 };
    let e = p.expr()?;
    if p.i != toks.len() {
        return Err(ParseError::new(p.pos(), "trailing input"));
    }
    Ok(e)
}

pub fn parse_value_list(input: &str) -> Result<ValueList, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks: &toks, i: 0, end: input.len(), depth: 0 };
    let mut items = Vec::new();
    loop {
        // `a…b` without commas is accepted as well as `a,…,b`.
        if matches!(p.peek(), Some(Tok::Ellipsis)) {
            p.i += 1;
            items.push(ListItem::Ellipsis);
        } else {
            items.push(ListItem::Value(p.expr()?));
            if matches!(p.peek(), Some(Tok::Ellipsis)) {
                continue;
            }
        }
        match p.peek() {
            None => break,
            Some(Tok::Comma) => p.i += 1,
            Some(_) if matches!(items.last(), Some(ListItem::Ellipsis)) => {}
            Some(_) => return Err(ParseError::new(p.pos(), "expected `,`")),
        }
    }
    for (k, item) in items.iter().enumerate() {
        if *item == ListItem::Ellipsis {
            let ok = k > 0
                && matches!(items[k - 1], ListItem::Value(_))
                && matches!(items.get(k + 1), Some(ListItem::Value(_)));
            if !ok {
                return Err(ParseError::new(0, "`…` must sit between two values"));
            }
        }
    }
    Ok(ValueList(items))
}

/// How the gap hidden by `…` is filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EllipsisStep {
    /// Always step by one.
    Unit,
    /// Use the difference of the two values before `…` when both are present, else one.
    Inferred,
}

/// Maximum number of values one `…` may expand to.
pub const MAX_EXPANSION: i64 = 10_000;

impl ValueList {
    /// Expands the list at the given `n`, `r`. `None` when a gap cannot be
    /// bridged (endpoints with different slopes, or not reachable by the step).
    pub fn expand(&self, n: i64, r: i64, rule: EllipsisStep) -> Option<Vec<LinearM>> {
        let mut out: Vec<LinearM> = Vec::new();
        let items = &self.0;
        for (k, item) in items.iter().enumerate() {
            match item {
                ListItem::Value(a) => out.push(a.at(n, r)?),
                ListItem::Ellipsis => {
                    let ListItem::Value(next) = items[k + 1] else { return None };
                    let next = next.at(n, r)?;
                    let prev = *out.last()?;
                    if prev.slope != next.slope {
                        return None;
                    }
                    let step = match (rule, k >= 2, items.get(k.wrapping_sub(2))) {
                        (EllipsisStep::Inferred, true, Some(ListItem::Value(_))) => {
                            let before = out[out.len() - 2];
                            if before.slope != prev.slope {
                                return None;
                            }
                            prev.constant.checked_sub(before.constant)?
                        }
                        _ => 1,
                    };
                    let gap = next.constant.checked_sub(prev.constant)?;
                    if step <= 0 || gap < 0 || gap % step != 0 || gap / step > MAX_EXPANSION {
                        return None;
                    }
                    // Every filled value lies strictly between the endpoints.
                    for k in 1..gap / step {
                        out.push(LinearM { slope: prev.slope, constant: prev.constant + k * step });
                    }
                }
            }
        }
        Some(out)
    }
}

/// A conjunction of comparison chains over `n` and `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition(Vec<(Vec<Affine>, Vec<Cmp>)>);

pub fn parse_condition(input: &str) -> Result<Condition, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks: &toks, i: 0, end: input.len(), depth: 0 };
    let mut chains = Vec::new();
    loop {
        let start = p.pos();
        let mut exprs = vec![p.expr()?];
        let mut ops = Vec::new();
        while let Some(&Tok::Cmp(c)) = p.peek() {
            p.i += 1;
            ops.push(c);
            exprs.push(p.expr()?);
        }
        if ops.is_empty() {
            return Err(ParseError::new(start, "expected a comparison"));
        }
        if exprs.iter().any(|e| e.m != 0) {
            return Err(ParseError::new(start, "conditions may only mention n and r"));
        }
        chains.push((exprs, ops));
        match p.peek() {
            None => break,
            Some(Tok::Comma) => p.i += 1,
            Some(_) => return Err(ParseError::new(p.pos(), "expected `,` or a comparison")),
        }
    }
    Ok(Condition(chains))
}

impl Condition {
    pub fn holds(&self, n: i64, r: i64) -> bool {
        self.0.iter().all(|(exprs, ops)| {
            let vals: Option<Vec<i64>> = exprs.iter().map(|e| e.at(n, r).map(|v| v.constant)).collect();
            let Some(vals) = vals else { return false };
            ops.iter().enumerate().all(|(k, op)| op.holds(vals[k], vals[k + 1]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(slope: i64, constant: i64) -> LinearM {
        LinearM { slope, constant }
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_expr("m+n+(n-r)+1").unwrap(), Affine { m: 1, n: 2, r: -1, c: 1 });
        assert_eq!(parse_expr("2(m+n+1)").unwrap(), Affine { m: 2, n: 2, r: 0, c: 2 });
        assert_eq!(parse_expr("2m+2n+3").unwrap(), Affine { m: 2, n: 2, r: 0, c: 3 });
        assert_eq!(parse_expr("-3*r").unwrap(), Affine { r: -3, ..Default::default() });
        assert!(parse_expr("m*n").is_err());
        assert!(parse_expr("2(m").is_err());
        assert_eq!(parse_expr("m+x").unwrap_err().position, 2);
    }

    #[test]
    fn lists() {
        let l = parse_value_list("m+1,…,m+n+(n-r)+1").unwrap();
        assert_eq!(l.expand(4, 2, EllipsisStep::Unit).unwrap(), (1..=7).map(|c| lm(1, c)).collect::<Vec<_>>());
        let l = parse_value_list("m+2,m+4,...,m+2n-2,m+2n").unwrap();
        assert_eq!(
            l.expand(4, 1, EllipsisStep::Inferred).unwrap(),
            vec![lm(1, 2), lm(1, 4), lm(1, 6), lm(1, 8)]
        );
        assert_eq!(l.expand(4, 1, EllipsisStep::Unit).unwrap().len(), 5);
        let l = parse_value_list("m+1\u{2026},m+n-2,m+n").unwrap();
        assert_eq!(l.expand(3, 3, EllipsisStep::Unit).unwrap(), vec![lm(1, 1), lm(1, 1), lm(1, 3)]);
        assert!(parse_value_list("…,m").is_err());
        assert!(parse_value_list("m,,m").is_err());
        assert!(parse_value_list("m+3,…,m+1").unwrap().expand(2, 2, EllipsisStep::Unit).is_none());
    }

    #[test]
    fn huge_gaps_do_not_overflow() {
        let l = parse_value_list("m-9000000000000000000,m+9000000000000000000,…,m+9000000000000000001").unwrap();
        assert!(l.expand(0, 0, EllipsisStep::Inferred).is_none());
        let l = parse_value_list("m-9000000000000000000,…,m+9000000000000000000").unwrap();
        assert!(l.expand(0, 0, EllipsisStep::Unit).is_none());
        let top = i64::MAX;
        let l = parse_value_list(&format!("m+{},…,m+{top}", top - 2)).unwrap();
        assert_eq!(l.expand(0, 0, EllipsisStep::Unit).unwrap(), vec![lm(1, top - 2), lm(1, top - 1), lm(1, top)]);
    }

    #[test]
    fn conditions() {
        let c = parse_condition("1<r<n-1").unwrap();
        assert!(c.holds(5, 2) && c.holds(5, 3) && !c.holds(5, 4) && !c.holds(5, 1));
        let c = parse_condition("r>=n-1,n>4").unwrap();
        assert!(c.holds(5, 5) && !c.holds(4, 4));
        let c = parse_condition("3=r=n").unwrap();
        assert!(c.holds(3, 3) && !c.holds(4, 3));
        assert!(parse_condition("r").is_err());
        assert!(parse_condition("m<1").is_err());
        assert!(parse_condition("r ≥ 2, n ≠ 3").unwrap().holds(4, 2));
    }

    #[test]
    fn display() {
        assert_eq!(lm(1, 3).to_string(), "m+3");
        assert_eq!(lm(2, -1).to_string(), "2m-1");
        assert_eq!(lm(0, 5).to_string(), "5");
    }
}
