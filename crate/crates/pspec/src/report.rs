//! Rendered command results. Text mode is the human-readable golden format;
//! structured mode is a flat `key=value` listing with stable insertion order.
//! Both are deterministic byte-for-byte for identical inputs.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    kv: Vec<(String, String)>,
    /// Principal yes/no answer for verbs that have one.
    pub verdict: Option<bool>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.kv.push((key.into(), value.to_string()));
        self
    }

    pub fn verdict(&mut self, v: bool) -> &mut Self {
        self.verdict = Some(v);
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
            }
            Format::Structured => {
                for (k, v) in &self.kv {
                    out.push_str(k);
                    out.push('=');
                    out.push_str(v);
                    out.push('\n');
                }
            }
        }
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
