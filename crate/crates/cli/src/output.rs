//! Versioned records and their table, CSV and JSON renderings.

use std::fmt::Write;

use serde::Serialize;
use stabctx_core::invariants::Status;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Real(f64),
    Bool(bool),
    Text(String),
    List(Vec<i64>),
    Null,
}

impl Num {
    fn render(&self) -> String {
        match self {
            Num::Int(v) => v.to_string(),
            Num::Real(v) if *v != 0.0 && v.abs() < 1e-3 => format!("{v:.3e}"),
            Num::Real(v) => format!("{v:.6}"),
            Num::Bool(v) => v.to_string(),
            Num::Text(v) => v.clone(),
            Num::List(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
            Num::Null => "-".to_string(),
        }
    }
}

impl From<usize> for Num {
    fn from(v: usize) -> Self {
        Num::Int(v as i64)
    }
}

impl From<u32> for Num {
    fn from(v: u32) -> Self {
        Num::Int(v as i64)
    }
}

impl From<i64> for Num {
    fn from(v: i64) -> Self {
        Num::Int(v)
    }
}

impl From<f64> for Num {
    fn from(v: f64) -> Self {
        if v.is_finite() {
            Num::Real(v)
        } else {
            Num::Null
        }
    }
}

impl From<bool> for Num {
    fn from(v: bool) -> Self {
        Num::Bool(v)
    }
}

impl From<String> for Num {
    fn from(v: String) -> Self {
        Num::Text(v)
    }
}

impl From<&str> for Num {
    fn from(v: &str) -> Self {
        Num::Text(v.to_string())
    }
}

impl<T: Into<Num>> From<Option<T>> for Num {
    fn from(v: Option<T>) -> Self {
        v.map_or(Num::Null, Into::into)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Field {
    pub name: String,
    pub value: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<Num>,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Field {
    pub fn new(name: &str, value: impl Into<Num>, status: Status) -> Self {
        Field {
            name: name.to_string(),
            value: value.into(),
            lower: None,
            upper: None,
            status: status.name(),
            note: None,
        }
    }

    pub fn exact(name: &str, value: impl Into<Num>) -> Self {
        Self::new(name, value, Status::Exact)
    }

    pub fn skipped(name: &str, why: impl Into<String>) -> Self {
        Self::new(name, Num::Null, Status::Skipped).note(why)
    }

    pub fn bracket(mut self, lower: impl Into<Num>, upper: impl Into<Num>) -> Self {
        self.lower = Some(lower.into());
        self.upper = Some(upper.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub schema_version: u32,
    pub command: String,
    pub params: Vec<(String, Num)>,
    pub fields: Vec<Field>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        Record {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            params: Vec::new(),
            fields: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Num>) -> Self {
        self.params.push((name.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, f: Field) {
        self.fields.push(f);
    }

    pub fn get(&self, name: &str) -> Option<&Field> {
        self.fields.iter().find(|f| f.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&JsonRecord::from(self)).expect("records serialise");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("command,name,value,lower,upper,status,note\n");
        for f in &self.fields {
            let cells = [
                self.command.clone(),
                f.name.clone(),
                f.value.render(),
                f.lower.as_ref().map_or(String::new(), Num::render),
                f.upper.as_ref().map_or(String::new(), Num::render),
                f.status.to_string(),
                f.note.clone().unwrap_or_default(),
            ];
            let cells: Vec<String> = cells.iter().map(|c| csv_cell(c)).collect();
            writeln!(s, "{}", cells.join(",")).unwrap();
        }
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", v.render())).collect();
        writeln!(s, "# {} {}", self.command, params.join(" ")).unwrap();
        let rows: Vec<[String; 4]> = self
            .fields
            .iter()
            .map(|f| {
                let bracket = match (&f.lower, &f.upper) {
                    (Some(l), Some(u)) => format!("[{}, {}]", l.render(), u.render()),
                    _ => String::new(),
                };
                [f.name.clone(), f.value.render(), f.status.to_string(), bracket]
            })
            .collect();
        let mut width = [0usize; 4];
        for r in &rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        for (r, f) in rows.iter().zip(&self.fields) {
            let mut line = format!("{:<w0$}  {:>w1$}  {:<w2$}  {:<w3$}", r[0], r[1], r[2], r[3], w0 = width[0], w1 = width[1], w2 = width[2], w3 = width[3]);
            if let Some(n) = &f.note {
                write!(line, "  {n}").unwrap();
            }
            writeln!(s, "{}", line.trim_end()).unwrap();
        }
        s
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// JSON layout with `params` as an ordered object.
#[derive(Serialize)]
struct JsonRecord<'a> {
    schema_version: u32,
    command: &'a str,
    params: serde_json::Map<String, serde_json::Value>,
    fields: &'a [Field],
}

impl<'a> From<&'a Record> for JsonRecord<'a> {
    fn from(r: &'a Record) -> Self {
        let params = r
            .params
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::to_value(v).expect("num serialises")))
            .collect();
        JsonRecord {
            schema_version: r.schema_version,
            command: &r.command,
            params,
            fields: &r.fields,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        let mut r = Record::new("demo").param("d", 3u32);
        r.push(Field::exact("alpha", 16usize));
        r.push(Field::new("theta", 2.236, Status::Tolerance).bracket(2.2, 2.3));
        r.push(Field::skipped("alpha_star", "too big, really"));
        r
    }

    #[test]
    fn json_has_schema_and_status() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["params"]["d"], 3);
        assert_eq!(v["fields"][0]["value"], 16);
        assert_eq!(v["fields"][1]["status"], "tolerance");
        assert_eq!(v["fields"][2]["value"], serde_json::Value::Null);
    }

    #[test]
    fn csv_quotes() {
        let csv = sample().to_csv();
        assert!(csv.contains("\"too big, really\""));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn table_lines() {
        let t = sample().to_table();
        assert!(t.starts_with("# demo d=3"));
        assert!(t.contains("[2.200000, 2.300000]"));
    }
}
