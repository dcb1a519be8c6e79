#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(String),
    Punct(char),
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    /// 1-based column of the first character.
    pub column: usize,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Punct(c) => format!("`{c}`"),
        }
    }
}

/// Splits one line (comment already removed) into tokens, or reports the
/// column of an unexpected character.
pub fn tokenize(line: &str) -> Result<Vec<Token>, (usize, String)> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), column });
        } else if c.is_ascii_digit() || ((c == '-' || c == '+') && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            let digits = |i: &mut usize| {
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
            };
            digits(&mut i);
            // A '.' only continues the number when digits follow and the number
            // is not a trisect3 suffix like `).1`.
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                digits(&mut i);
            } else if i + 1 < chars.len() && chars[i] == '/' {
                let next = chars[i + 1];
                if next.is_ascii_digit() || (next == '-' && chars.get(i + 2).is_some_and(|d| d.is_ascii_digit())) {
                    i += 2;
                    digits(&mut i);
                }
            }
            out.push(Token { tok: Tok::Number(chars[start..i].iter().collect()), column });
        } else if "(),=.".contains(c) {
            out.push(Token { tok: Tok::Punct(c), column });
            i += 1;
        } else {
            return Err((column, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}
