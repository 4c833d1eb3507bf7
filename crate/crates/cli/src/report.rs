//! Uniform tabular output in text, TSV and JSON.

use serde_json::{Map, Value};

use crate::config::{Format, RunConfig};

/// A table with named columns and a footer of summary values.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub config: RunConfig,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub footer: Vec<(String, Value)>,
}

impl Report {
    pub fn new(config: RunConfig, columns: &[&str]) -> Self {
        Report {
            config,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            footer: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_footer(&mut self, key: &str, value: Value) {
        self.footer.push((key.to_string(), value));
    }

    pub fn footer_value(&self, key: &str) -> Option<&Value> {
        self.footer.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => {
                serde_json::to_string_pretty(&self.to_json()).expect("serializable") + "\n"
            }
            Format::Tsv => self.to_tsv(),
            Format::Text => self.to_text(),
        }
    }

    /// `{"config": …, "columns": […], "rows": [{column: value}], "footer": {…}}`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(object)
            })
            .collect();
        let footer: Map<String, Value> = self.footer.iter().cloned().collect();
        serde_json::json!({
            "config": self.config,
            "columns": self.columns,
            "rows": rows,
            "footer": footer,
        })
    }

    fn config_lines(&self) -> Vec<(String, String)> {
        let config = serde_json::to_value(&self.config).expect("serializable");
        config
            .as_object()
            .expect("object")
            .iter()
            .map(|(k, v)| (k.clone(), cell(v)))
            .collect()
    }

    /// Header and footer as `# key\tvalue` comment lines around the table.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.config_lines() {
            out.push_str(&format!("# {k}\t{v}\n"));
        }
        out.push_str(&self.columns.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(cell).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        for (k, v) in &self.footer {
            out.push_str(&format!("# {k}\t{}\n", cell(v)));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.config_lines() {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push('\n');
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(cell).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                body.iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(self.columns[j].chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(&self.columns));
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&line(&rule));
        for r in &body {
            out.push_str(&line(r));
        }
        if !self.footer.is_empty() {
            out.push('\n');
            for (k, v) in &self.footer {
                out.push_str(&format!("{k}: {}\n", cell(v)));
            }
        }
        out
    }
}

/// Plain rendering of a JSON value. `{"coeff": c, "zeta": d}` becomes
/// `c * zeta(d)`.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Object(o) => match (o.get("coeff"), o.get("zeta")) {
            (Some(c), Some(z)) => format!("{} * zeta({})", cell(c), cell(z)),
            _ => v.to_string(),
        },
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        _ => v.to_string(),
    }
}
