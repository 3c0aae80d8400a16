use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_pass(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// The single document printed per invocation.
#[derive(Debug)]
pub struct Document {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub status: Status,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Self { command: command.into(), inputs: Map::new(), results: Map::new(), status: Status::Pass }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status.as_str(),
        })
    }

    pub fn emit(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&self.to_json()).expect("valid json"));
            return;
        }
        println!("{} [{}]", self.command, self.status.as_str());
        for (k, v) in &self.inputs {
            println!("  {k}: {}", inline(v));
        }
        for (k, v) in &self.results {
            match v {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    println!("{k}:");
                    for item in items {
                        println!("  {}", inline(item));
                    }
                }
                _ => println!("{k}: {}", inline(v)),
            }
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(", "),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join("  "),
        other => other.to_string(),
    }
}
