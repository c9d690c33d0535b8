use std::fmt::Write as _;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Outcome of an oracle cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    Agree,
    Disagree,
}

/// What a command reports: its inputs, results, verdict and cross-check.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub result: Vec<(String, String)>,
    /// `None` for commands that compute rather than test.
    pub verdict: Option<bool>,
    pub verification: Option<Verification>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.push((key.to_string(), value.to_string()));
        self
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.result.push((key.to_string(), value.to_string()));
        self
    }

    pub fn verdict(&mut self, v: bool) -> &mut Self {
        self.verdict = Some(v);
        self
    }

    /// Records whether the formula side matched the oracle side.
    pub fn check(&mut self, agree: bool) -> &mut Self {
        let v = if agree {
            Verification::Agree
        } else {
            Verification::Disagree
        };
        self.verification = match (self.verification, v) {
            (Some(Verification::Disagree), _) => Some(Verification::Disagree),
            _ => Some(v),
        };
        self
    }

    pub fn exit_code(&self) -> i32 {
        match (self.verification, self.verdict) {
            (Some(Verification::Disagree), _) => 1,
            (_, Some(false)) => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        let verification = self.verification.map(|v| match v {
            Verification::Agree => "agree",
            Verification::Disagree => "disagree",
        });
        match format {
            Format::Machine => {
                let _ = writeln!(s, "command={}", self.command);
                for (k, v) in &self.inputs {
                    let _ = writeln!(s, "input.{k}={}", v.replace('\n', "\\n"));
                }
                for (k, v) in &self.result {
                    let _ = writeln!(s, "result.{k}={}", v.replace('\n', "\\n"));
                }
                if let Some(v) = self.verdict {
                    let _ = writeln!(s, "verdict={v}");
                }
                if let Some(v) = verification {
                    let _ = writeln!(s, "verification={v}");
                }
                let _ = writeln!(s, "elapsed_ms={:.3}", self.elapsed.as_secs_f64() * 1e3);
            }
            Format::Human => {
                let _ = writeln!(s, "{}", self.command);
                let width = self
                    .inputs
                    .iter()
                    .chain(&self.result)
                    .map(|(k, _)| k.len())
                    .max()
                    .unwrap_or(0)
                    .max(12);
                for (k, v) in self.inputs.iter().chain(&self.result) {
                    if v.contains('\n') {
                        let _ = writeln!(s, "  {k}:");
                        for line in v.lines() {
                            let _ = writeln!(s, "    {line}");
                        }
                    } else {
                        let _ = writeln!(s, "  {k:<width$}  {v}");
                    }
                }
                if let Some(v) = self.verdict {
                    let _ = writeln!(s, "  {:<width$}  {v}", "verdict");
                }
                if let Some(v) = verification {
                    let _ = writeln!(s, "  {:<width$}  {v}", "verification");
                }
                let _ = writeln!(s, "  {:<width$}  {:.1?}", "elapsed", self.elapsed);
            }
        }
        s
    }
}
