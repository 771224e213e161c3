use super::{Category, ParseError, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// `$not`, `$or`, `$pi`
    Builtin(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Colon,
    Define,
    Lambda,
    Tilde,
    Bar,
    Amp,
    Imp,
    Iff,
    Bang,
    Quest,
    Eq2,
    Eq3,
    At,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Builtin(s) => format!("`${s}`"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Colon => ":",
            Tok::Define => ":=",
            Tok::Lambda => "\\",
            Tok::Tilde => "~",
            Tok::Bar => "|",
            Tok::Amp => "&",
            Tok::Imp => "=>",
            Tok::Iff => "<=>",
            Tok::Bang => "!",
            Tok::Quest => "?",
            Tok::Eq2 => "==",
            Tok::Eq3 => "===",
            Tok::At => "@",
            Tok::Arrow => "->",
            _ => "",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let rest = |k: usize| chars.get(i + k).copied();
        let (tok, len) = if is_ident_char(c) && c != '\'' {
            let start = i;
            let mut j = i;
            while j < chars.len() && is_ident_char(chars[j]) {
                j += 1;
            }
            (Tok::Ident(chars[start..j].iter().collect()), j - start)
        } else if c == '$' {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_alphabetic() {
                j += 1;
            }
            let word: String = chars[i + 1..j].iter().collect();
            if !matches!(word.as_str(), "not" | "or" | "pi") {
                return Err(ParseError::new(Category::Lexical, pos, format!("unknown builtin `${word}`")));
            }
            (Tok::Builtin(word), j - i)
        } else {
            match (c, rest(1), rest(2)) {
                ('=', Some('='), Some('=')) => (Tok::Eq3, 3),
                ('=', Some('='), _) => (Tok::Eq2, 2),
                ('=', Some('>'), _) => (Tok::Imp, 2),
                ('<', Some('='), Some('>')) => (Tok::Iff, 3),
                ('-', Some('>'), _) => (Tok::Arrow, 2),
                (':', Some('='), _) => (Tok::Define, 2),
                ('(', ..) => (Tok::LParen, 1),
                (')', ..) => (Tok::RParen, 1),
                ('{', ..) => (Tok::LBrace, 1),
                ('}', ..) => (Tok::RBrace, 1),
                ('[', ..) => (Tok::LBrack, 1),
                (']', ..) => (Tok::RBrack, 1),
                (',', ..) => (Tok::Comma, 1),
                ('.', ..) => (Tok::Dot, 1),
                (':', ..) => (Tok::Colon, 1),
                ('\\' | 'λ', ..) => (Tok::Lambda, 1),
                ('~' | '¬', ..) => (Tok::Tilde, 1),
                ('|' | '∨', ..) => (Tok::Bar, 1),
                ('&' | '∧', ..) => (Tok::Amp, 1),
                ('⇒', ..) => (Tok::Imp, 1),
                ('⇔', ..) => (Tok::Iff, 1),
                ('!' | '∀', ..) => (Tok::Bang, 1),
                ('?' | '∃', ..) => (Tok::Quest, 1),
                ('@', ..) => (Tok::At, 1),
                ('→', ..) => (Tok::Arrow, 1),
                _ => return Err(ParseError::new(Category::Lexical, pos, format!("unexpected character `{c}`"))),
            }
        };
        out.push(Token { tok, pos });
        i += len;
        col += len;
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col } });
    Ok(out)
}
