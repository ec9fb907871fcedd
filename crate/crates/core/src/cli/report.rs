use std::fmt::{Display, Write as _};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Value(String),
    Block(Block),
}

/// Ordered key-value tree; rendering preserves insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Block {
    pub entries: Vec<(String, Entry)>,
}

impl Block {
    pub fn new() -> Self {
        Block::default()
    }

    pub fn kv(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries.push((key.to_string(), Entry::Value(value.to_string())));
        self
    }

    pub fn block(&mut self, key: &str, block: Block) -> &mut Self {
        self.entries.push((key.to_string(), Entry::Block(block)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, e)| e)
    }

    /// Value at a dotted path such as `resolution.length`.
    pub fn value(&self, path: &str) -> Option<&str> {
        let mut block = self;
        let mut parts = path.split('.').peekable();
        while let Some(p) = parts.next() {
            match block.get(p)? {
                Entry::Value(v) if parts.peek().is_none() => return Some(v),
                Entry::Block(b) => block = b,
                Entry::Value(_) => return None,
            }
        }
        None
    }

    /// `key = value` lines, nested blocks indented by two spaces.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        self.render(&mut out, 0, " = ", ":");
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.render(&mut out, 0, ": ", "");
        out
    }

    fn render(&self, out: &mut String, indent: usize, sep: &str, header: &str) {
        for (k, e) in &self.entries {
            match e {
                Entry::Value(v) => {
                    let _ = writeln!(out, "{:indent$}{k}{sep}{v}", "");
                }
                Entry::Block(b) => {
                    let _ = writeln!(out, "{:indent$}{k}{header}", "");
                    b.render(out, indent + 2, sep, header);
                }
            }
        }
    }
}

/// Outcome of one command: a one-line summary and the detailed block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub summary: String,
    pub body: Block,
    /// The computation succeeded but a construction was rejected.
    pub rejected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => self.body.machine(),
            Format::Text => format!("{}\n{}", self.summary, indent(&self.body.text(), 2)),
        }
    }
}

pub(crate) fn indent(s: &str, by: usize) -> String {
    s.lines().map(|l| format!("{:by$}{l}\n", "")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_rendering() {
        let mut inner = Block::new();
        inner.kv("length", 2);
        let mut b = Block::new();
        b.kv("command", "pd I").block("resolution", inner);
        assert_eq!(b.machine(), "command = pd I\nresolution:\n  length = 2\n");
        assert_eq!(b.text(), "command: pd I\nresolution\n  length: 2\n");
        assert_eq!(b.value("resolution.length"), Some("2"));
        assert_eq!(b.value("resolution"), None);
    }
}
