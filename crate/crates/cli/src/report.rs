use serde_json::{json, Map, Value};

/// Output of one command: text lines for humans and a JSON object that
/// carries the same facts. Field order is insertion order.
pub struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("schema".into(), json!(1));
        fields.insert("command".into(), json!(command));
        Report {
            lines: Vec::new(),
            fields,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    /// A `key: value` text line plus the same JSON field.
    pub fn pair(&mut self, key: &str, text: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.lines.push(format!("{}: {}", key, text.into()));
        self.field(key, value)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone()))
                .expect("JSON values always serialize");
            s.push('\n');
            s
        } else {
            let mut s = self.lines.join("\n");
            if !s.is_empty() {
                s.push('\n');
            }
            s
        }
    }
}
