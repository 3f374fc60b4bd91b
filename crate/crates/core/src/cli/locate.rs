//! Source positions for errors raised after serde has buffered the input.
//!
//! Internally tagged documents are deserialized from an in-memory copy, so serde_json
//! cannot attach a line to errors inside them. This recovers the line from the text.

use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seg {
    Key(String),
    Index(usize),
}

/// A located value: its path from the root and the 1-based line it starts on.
#[derive(Debug, Clone, PartialEq)]
struct Span {
    path: Vec<Seg>,
    line: usize,
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    spans: Vec<Span>,
}

impl Scanner<'_> {
    fn ws(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            match b {
                b'\n' => self.line += 1,
                b' ' | b'\t' | b'\r' => {}
                _ => return,
            }
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn string(&mut self) -> Option<String> {
        let start = self.pos;
        self.pos += 1;
        while let Some(b) = self.peek() {
            self.pos += 1;
            match b {
                b'\\' => self.pos += 1,
                b'"' => {
                    let raw = std::str::from_utf8(&self.bytes[start..self.pos]).ok()?;
                    return serde_json::from_str(raw).ok();
                }
                _ => {}
            }
        }
        None
    }

    fn value(&mut self, path: &mut Vec<Seg>) -> Option<()> {
        self.ws();
        self.spans.push(Span {
            path: path.clone(),
            line: self.line,
        });
        match self.peek()? {
            b'{' => {
                self.pos += 1;
                loop {
                    self.ws();
                    match self.peek()? {
                        b'}' => break,
                        b',' => self.pos += 1,
                        b'"' => {
                            let key = self.string()?;
                            self.ws();
                            self.pos += 1; // ':'
                            path.push(Seg::Key(key));
                            self.value(path)?;
                            path.pop();
                        }
                        _ => return None,
                    }
                }
                self.pos += 1;
            }
            b'[' => {
                self.pos += 1;
                let mut index = 0;
                loop {
                    self.ws();
                    match self.peek()? {
                        b']' => break,
                        b',' => self.pos += 1,
                        _ => {
                            path.push(Seg::Index(index));
                            self.value(path)?;
                            path.pop();
                            index += 1;
                        }
                    }
                }
                self.pos += 1;
            }
            b'"' => {
                self.string()?;
            }
            _ => {
                while let Some(b) = self.peek() {
                    if matches!(b, b',' | b'}' | b']') || b.is_ascii_whitespace() {
                        break;
                    }
                    self.pos += 1;
                }
            }
        }
        Some(())
    }
}

fn spans(text: &str) -> Vec<Span> {
    let mut s = Scanner {
        bytes: text.as_bytes(),
        pos: 0,
        line: 1,
        spans: Vec::new(),
    };
    s.value(&mut Vec::new());
    s.spans
}

fn get<'v>(root: &'v Value, path: &[Seg]) -> Option<&'v Value> {
    path.iter().try_fold(root, |v, seg| match seg {
        Seg::Key(k) => v.get(k),
        Seg::Index(i) => v.get(i),
    })
}

/// How serde names an unexpected value in "invalid type" messages.
fn describe(v: &Value) -> Option<String> {
    Some(match v {
        Value::Null => "null".into(),
        Value::Bool(b) => format!("boolean `{b}`"),
        Value::Number(n) if n.is_f64() => format!("floating point `{n}`"),
        Value::Number(n) => format!("integer `{n}`"),
        Value::String(s) => format!("string {s:?}"),
        _ => return None,
    })
}

fn backticked(message: &str) -> Vec<&str> {
    message.split('`').skip(1).step_by(2).collect()
}

/// The deepest path under `base` that the message points at.
fn refine(root: &Value, base: Vec<Seg>, message: &str) -> Vec<Seg> {
    let names = backticked(message);
    let mut stack = vec![base.clone()];
    while let Some(path) = stack.pop() {
        let Some(v) = get(root, &path) else { continue };
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let mut next = path.clone();
                    next.push(Seg::Key(k.clone()));
                    let named = names.contains(&k.as_str());
                    let shown = describe(child).is_some_and(|d| message.contains(&d));
                    if named || shown {
                        return next;
                    }
                    stack.push(next);
                }
            }
            Value::Array(items) => {
                for i in 0..items.len() {
                    let mut next = path.clone();
                    next.push(Seg::Index(i));
                    stack.push(next);
                }
            }
            _ => {}
        }
    }
    base
}

pub fn render(path: &[Seg]) -> String {
    let mut out = String::new();
    for seg in path {
        match seg {
            Seg::Key(k) if out.is_empty() => out.push_str(k),
            Seg::Key(k) => {
                out.push('.');
                out.push_str(k);
            }
            Seg::Index(i) => out.push_str(&format!("[{i}]")),
        }
    }
    out
}

/// Best-known path and line for an error at `base` with the given message.
pub fn locate(text: &str, base: Vec<Seg>, message: &str) -> (Vec<Seg>, Option<usize>) {
    let Ok(root) = serde_json::from_str::<Value>(text) else {
        return (base, None);
    };
    let path = refine(&root, base, message);
    let line = spans(text)
        .into_iter()
        .find(|s| s.path == path)
        .map(|s| s.line);
    (path, line)
}
