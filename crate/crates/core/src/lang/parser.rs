use super::lexer::{tokenize, Tok, Token};
use super::{Diagnostic, DiagnosticKind};
use crate::engine::{
    validate, ConstructionScript, Name, ObjectKind, Selector, Step, StepKind, TrisectPart, ValidationErrorKind,
};

/// Location of one statement plus the columns of the names it mentions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
    pub end_column: usize,
    /// Output name first, then references in source order.
    pub names: Vec<(Name, usize)>,
}

/// A parsed script together with the source location of every step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceScript {
    pub script: ConstructionScript,
    pub spans: Vec<Span>,
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_column: usize,
    names: Vec<(Name, usize)>,
}

type PResult<T> = Result<T, Diagnostic>;

impl<'a> Cursor<'a> {
    fn error_at(&self, column: usize, kind: DiagnosticKind) -> Diagnostic {
        Diagnostic { line: self.line, column, kind }
    }

    fn syntax(&self, column: usize, msg: impl Into<String>) -> Diagnostic {
        self.error_at(column, DiagnosticKind::Syntax(msg.into()))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end_column, |t| t.column)
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        match self.peek() {
            Some(t) => self.syntax(t.column, format!("expected {wanted}, found {}", t.tok.describe())),
            None => self.syntax(self.end_column, format!("expected {wanted}, found end of line")),
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn punct(&mut self, c: char) -> PResult<()> {
        match self.peek() {
            Some(Token { tok: Tok::Punct(p), .. }) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{c}`"))),
        }
    }

    fn keyword(&mut self) -> PResult<(String, usize)> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), column }) => {
                let out = (s.clone(), *column);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.unexpected("a keyword")),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), .. }) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn name(&mut self) -> PResult<Name> {
        match self.peek().cloned() {
            Some(Token { tok: Tok::Ident(s), column }) => {
                self.pos += 1;
                self.names.push((s.clone(), column));
                Ok(s)
            }
            Some(Token { tok: Tok::Number(n), column }) => Err(self.error_at(column, DiagnosticKind::BareNumber(n))),
            _ => Err(self.unexpected("a name")),
        }
    }

    fn number(&mut self) -> PResult<String> {
        match self.peek().cloned() {
            Some(Token { tok: Tok::Number(n), column }) => {
                self.pos += 1;
                if crate::numerics::parse_rational(&n).is_none() {
                    return Err(self.error_at(column, DiagnosticKind::Invalid(ValidationErrorKind::Literal(n))));
                }
                Ok(n)
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn pair(&mut self) -> PResult<(Name, Name)> {
        self.punct('(')?;
        let a = self.name()?;
        self.punct(',')?;
        let b = self.name()?;
        self.punct(')')?;
        Ok((a, b))
    }

    fn end(&self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.syntax(t.column, format!("unexpected {} after statement", t.tok.describe()))),
        }
    }

    fn selector(&mut self) -> PResult<Selector> {
        let (word, column) = self.keyword()?;
        Ok(match word.as_str() {
            "upper" => Selector::Upper,
            "lower" => Selector::Lower,
            "left" => Selector::Left,
            "right" => Selector::Right,
            "first" => Selector::First,
            "second" => Selector::Second,
            "near" => Selector::Near(self.name()?),
            "far" => Selector::Far(self.name()?),
            other => return Err(self.syntax(column, format!("unknown selector `{other}`"))),
        })
    }

    fn angle(&mut self) -> PResult<i32> {
        match self.next() {
            Some(Token { tok: Tok::Number(n), column }) => n
                .parse::<i32>()
                .map_err(|_| self.syntax(column, format!("rotation angle `{n}` must be whole degrees"))),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("an angle in degrees"))
            }
        }
    }

    fn expr(&mut self) -> PResult<StepKind> {
        let (word, column) = self.keyword()?;
        let kind = match word.as_str() {
            "given" => return Err(self.syntax(column, "`given` starts a statement")),
            "line" => {
                let (a, b) = self.pair()?;
                StepKind::Line { a, b }
            }
            "perp" => {
                let (point, line) = self.pair()?;
                StepKind::Perp { point, line }
            }
            "circle" => {
                self.punct('(')?;
                let center = self.name()?;
                self.punct(',')?;
                let dist_kw = matches!(self.peek(), Some(Token { tok: Tok::Ident(s), .. }) if s == "dist")
                    && matches!(self.tokens.get(self.pos + 1), Some(Token { tok: Tok::Punct('('), .. }));
                let kind = if dist_kw {
                    self.pos += 1;
                    let (from, to) = self.pair()?;
                    StepKind::CircleDist { center, from, to }
                } else {
                    StepKind::Circle { center, through: self.name()? }
                };
                self.punct(')')?;
                kind
            }
            "intersect" => {
                let (a, b) = self.pair()?;
                let pick = if self.peek().is_some() {
                    self.expect_keyword("pick")?;
                    Some(self.selector()?)
                } else {
                    None
                };
                StepKind::Intersect { a, b, pick }
            }
            "midpoint" => {
                let (a, b) = self.pair()?;
                StepKind::Midpoint { a, b }
            }
            "trisect3" => {
                let (a, b) = self.pair()?;
                self.punct('.')?;
                let part = match self.next() {
                    Some(Token { tok: Tok::Number(n), .. }) if n == "1" => TrisectPart::One,
                    Some(Token { tok: Tok::Number(n), .. }) if n == "2" => TrisectPart::Two,
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected("`1` or `2`"));
                    }
                };
                StepKind::Trisect { a, b, part }
            }
            "perp_foot" => {
                let (point, line) = self.pair()?;
                StepKind::PerpFoot { point, line }
            }
            "rotate" => {
                self.punct('(')?;
                let point = self.name()?;
                self.punct(',')?;
                let degrees = self.angle()?;
                self.punct(',')?;
                let center = self.name()?;
                self.punct(')')?;
                StepKind::Rotate { point, degrees, center }
            }
            other => return Err(self.syntax(column, format!("unknown construction `{other}`"))),
        };
        Ok(kind)
    }

    fn statement(&mut self) -> PResult<Step> {
        let (word, column) = self.keyword()?;
        let declared = match word.as_str() {
            "given" => {
                let output = self.name()?;
                self.punct('=')?;
                self.punct('(')?;
                let x = self.number()?;
                self.punct(',')?;
                let y = self.number()?;
                self.punct(')')?;
                self.end()?;
                return Ok(Step::new(output, StepKind::Given { x, y }));
            }
            "point" => ObjectKind::Point,
            "line" => ObjectKind::Line,
            "circle" => ObjectKind::Circle,
            other => return Err(self.syntax(column, format!("unknown statement `{other}`"))),
        };
        let output = self.name()?;
        self.punct('=')?;
        let expr_column = self.column();
        let kind = self.expr()?;
        self.end()?;
        let produced = kind.output_kind();
        if produced != declared {
            return Err(self.syntax(expr_column, format!("expression yields a {produced}, not a {declared}")));
        }
        Ok(Step::new(output, kind))
    }
}

fn split_comment(line: &str) -> (&str, Option<&str>) {
    match line.find('#') {
        Some(i) => (&line[..i], Some(&line[i + 1..])),
        None => (line, None),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses and validates `.geo` text, keeping statement locations.
pub fn parse_source(text: &str) -> Result<SourceScript, Diagnostic> {
    let mut script = ConstructionScript::default();
    let mut spans = Vec::new();
    let mut polygon_line = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let (code, comment) = split_comment(raw);
        let comment_column = code.chars().count() + 2;
        if code.trim().is_empty() {
            if let Some(pragma) = comment.and_then(|c| c.strip_prefix('!')) {
                let mut words = pragma.split_whitespace();
                match words.next() {
                    Some("rusty") if words.next().is_none() => script.rusty = true,
                    Some("polygon") => {
                        let names: Vec<Name> = words.map(str::to_string).collect();
                        if names.is_empty() || !names.iter().all(|n| is_name(n)) {
                            return Err(Diagnostic {
                                line,
                                column: comment_column,
                                kind: DiagnosticKind::Syntax("`#! polygon` needs a list of point names".into()),
                            });
                        }
                        script.polygon = Some(names);
                        polygon_line = line;
                    }
                    _ => {
                        return Err(Diagnostic {
                            line,
                            column: comment_column - 1,
                            kind: DiagnosticKind::Syntax(format!("unknown pragma `#!{pragma}`")),
                        })
                    }
                }
            }
            continue;
        }
        let tokens = tokenize(code).map_err(|(column, msg)| Diagnostic {
            line,
            column,
            kind: DiagnosticKind::Syntax(msg),
        })?;
        let end_column = code.trim_end().chars().count() + 1;
        let mut cursor = Cursor { tokens: &tokens, pos: 0, line, end_column, names: Vec::new() };
        let mut step = cursor.statement()?;
        if let Some(rest) = comment.and_then(|c| c.trim().strip_prefix("from macro ")) {
            let rest = rest.trim();
            if is_name(rest) {
                step.provenance = Some(rest.to_string());
            }
        }
        spans.push(Span { line, column: tokens[0].column, end_column, names: cursor.names });
        script.steps.push(step);
    }
    if let Err(e) = validate(&script) {
        let (line, column) = match spans.get(e.step) {
            Some(span) => {
                let named = match &e.kind {
                    ValidationErrorKind::Undefined(n)
                    | ValidationErrorKind::NotACurve(n)
                    | ValidationErrorKind::KindMismatch { name: n, .. } => Some(n),
                    _ => None,
                };
                let column = named
                    .and_then(|n| span.names.iter().skip(1).find(|(m, _)| m == n))
                    .or_else(|| span.names.first())
                    .map_or(span.column, |(_, c)| *c);
                (span.line, column)
            }
            None => (polygon_line, 1),
        };
        return Err(Diagnostic { line, column, kind: DiagnosticKind::Invalid(e.kind) });
    }
    Ok(SourceScript { script, spans })
}

/// Parses and validates `.geo` text.
pub fn parse(text: &str) -> Result<ConstructionScript, Diagnostic> {
    parse_source(text).map(|s| s.script)
}
