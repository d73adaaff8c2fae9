//! Command interpreter shared by the REPL and batch mode.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use distalg_core::lang::{eval, print_latex, print_plain, Env, LangError, Parser};
use distalg_core::oracle::{
    default_eps_sequence, epsilon_limit_pair, pair, OracleConfig, PairingResult, ShiftSide, TestFunction,
};
use distalg_core::product::star;
use distalg_core::scalar::parse_rational;
use distalg_core::{ClosedSet, Dist, Interval, MSet, Rational};
use serde_json::{json, Value};

use crate::json::{DistJson, MSetJson};
use crate::mset_expr::parse_mset;

/// Words that start a command and so cannot be bound as names.
pub const COMMANDS: &[&str] = &["let", "setM", "supp", "singsupp", "pair", "oracle", "format", "quit"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected plain, latex or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::Latex => "latex",
            Format::Json => "json",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed command or expression text.
    Syntax,
    /// Well-formed input whose evaluation failed.
    Eval,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandError {
    pub kind: ErrorKind,
    pub message: String,
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn syntax(message: impl Into<String>) -> CommandError {
    CommandError { kind: ErrorKind::Syntax, message: message.into() }
}

fn eval_error(message: impl Into<String>) -> CommandError {
    CommandError { kind: ErrorKind::Eval, message: message.into() }
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq)]
pub enum Output {
    Value(Dist),
    Bound { name: String, value: Dist },
    M(MSet),
    Support(ClosedSet),
    SingSupport(Vec<Rational>),
    Pairing(PairingResult),
    Oracle { symbolic: f64, oracle: PairingResult, discrepancy: f64 },
    FormatSet(Format),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Done(Option<Output>),
    Quit,
}

/// Column of a byte offset, 1-based.
fn col_at(line: &str, offset: usize) -> usize {
    line[..offset].chars().count() + 1
}

/// Moves an error position from a sub-slice of `line` starting at byte
/// `offset` to a position within `line`.
fn relocate(e: LangError, line: &str, offset: usize) -> LangError {
    let shift = col_at(line, offset) - 1;
    match e {
        LangError::Lex { col, found, .. } => LangError::Lex { line: 1, col: col + shift, found },
        LangError::Parse { col, expected, found, .. } => {
            LangError::Parse { line: 1, col: col + shift, expected, found }
        }
        LangError::UnsupportedArgument { col, func, arg, .. } => {
            LangError::UnsupportedArgument { line: 1, col: col + shift, func, arg }
        }
        other => other,
    }
}

fn classify(e: LangError) -> CommandError {
    let kind = match e {
        LangError::Lex { .. } | LangError::Parse { .. } => ErrorKind::Syntax,
        _ => ErrorKind::Eval,
    };
    CommandError { kind, message: e.to_string() }
}

/// Trailing `bump(c, r)` of a command: its byte offset and the test function.
fn split_bump(line: &str, rest_offset: usize) -> Result<(usize, TestFunction), CommandError> {
    let rest = &line[rest_offset..];
    let at = rest
        .rfind("bump")
        .ok_or_else(|| syntax(format!("{}: expected `bump(c,r)` at the end", col_at(line, line.len()))))?;
    let args_at = rest_offset + at;
    let args = line[args_at + 4..].trim();
    let bad = || syntax(format!("{}: expected `bump(c,r)` with rational c and r", col_at(line, args_at)));
    let inner = args.strip_prefix('(').and_then(|a| a.strip_suffix(')')).ok_or_else(bad)?;
    let (c, r) = inner.split_once(',').ok_or_else(bad)?;
    let c = parse_rational(&c.replace(' ', "")).map_err(|_| bad())?;
    let r = parse_rational(&r.replace(' ', "")).map_err(|_| bad())?;
    let t = TestFunction::new(c, r).map_err(|e| eval_error(e.to_string()))?;
    Ok((args_at, t))
}

pub struct Session {
    env: Env,
    format: Format,
    oracle: OracleConfig,
}

impl Default for Session {
    fn default() -> Self {
        Session::new(Format::Plain, OracleConfig::default())
    }
}

impl Session {
    pub fn new(format: Format, oracle: OracleConfig) -> Self {
        Session { env: Env::new(), format, oracle }
    }

    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn format(&self) -> Format {
        self.format
    }

    /// Evaluates the expression in `line[offset..end]`.
    fn expr(&self, line: &str, offset: usize, end: usize) -> Result<Dist, CommandError> {
        let src = &line[offset..end];
        let fix = |e| classify(relocate(e, line, offset));
        if src.trim().is_empty() {
            return Err(syntax(format!("{}: expected an expression", col_at(line, end))));
        }
        let mut p = Parser::new(src).map_err(fix)?;
        let e = p.expr().map_err(fix)?;
        p.expect_end().map_err(fix)?;
        eval(&e, &self.env).map_err(fix)
    }

    /// Runs one line. Blank lines and `#` comments do nothing.
    pub fn execute(&mut self, line: &str) -> Result<Outcome, CommandError> {
        let body = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let trimmed = body.trim_start();
        if trimmed.trim().is_empty() {
            return Ok(Outcome::Done(None));
        }
        let start = body.len() - trimmed.len();
        let word_len = trimmed.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(trimmed.len());
        let word = &trimmed[..word_len];
        let rest = start + word_len;
        let end = body.trim_end().len();
        let out = match word {
            "quit" if body[rest..].trim().is_empty() => return Ok(Outcome::Quit),
            "let" => {
                let eq = body[rest..]
                    .find('=')
                    .map(|i| rest + i)
                    .ok_or_else(|| syntax(format!("{}: expected `let name = expr`", col_at(body, end))))?;
                let name = body[rest..eq].trim();
                if COMMANDS.contains(&name) {
                    return Err(eval_error(LangError::InvalidName(name.into()).to_string()));
                }
                let value = self.expr(body, eq + 1, end)?;
                self.env.bind(name, value.clone()).map_err(classify)?;
                Output::Bound { name: name.into(), value }
            }
            "setM" => {
                let offset = col_at(body, rest) - 1;
                let m =
                    parse_mset(&body[rest..end]).map_err(|e| syntax(format!("{}: {}", e.col + offset, e.message)))?;
                self.env.set_m(m.clone());
                Output::M(m)
            }
            "supp" => Output::Support(self.expr(body, rest, end)?.support()),
            "singsupp" => Output::SingSupport(self.expr(body, rest, end)?.singsupp()),
            "pair" => {
                let (bump_at, t) = split_bump(&body[..end], rest)?;
                let f = self.expr(body, rest, bump_at)?;
                Output::Pairing(pair(&f, &t))
            }
            "oracle" => {
                let (bump_at, t) = split_bump(&body[..end], rest)?;
                let semi = body[rest..bump_at]
                    .find(';')
                    .map(|i| rest + i)
                    .ok_or_else(|| syntax(format!("{}: expected `oracle F ; G bump(c,r)`", col_at(body, bump_at))))?;
                let f = self.expr(body, rest, semi)?;
                let g = self.expr(body, semi + 1, bump_at)?;
                let symbolic = pair(&star(&f, &g), &t).value;
                let eps = default_eps_sequence(self.oracle.eps_depth);
                let oracle = epsilon_limit_pair(&f, &g, &t, &eps, ShiftSide::Right, &self.oracle)
                    .map_err(|e| eval_error(e.to_string()))?;
                let discrepancy = (oracle.value - symbolic).abs();
                let allowed = self.oracle.tolerance * (1.0 + symbolic.abs());
                if discrepancy > allowed {
                    return Err(eval_error(format!(
                        "oracle disagrees with the closed-form product: symbolic {symbolic}, oracle {}, discrepancy {discrepancy:e} > {allowed:e}",
                        oracle.value
                    )));
                }
                Output::Oracle { symbolic, oracle, discrepancy }
            }
            "format" => {
                let f: Format = body[rest..end].trim().parse().map_err(syntax)?;
                self.format = f;
                Output::FormatSet(f)
            }
            _ => Output::Value(self.expr(body, start, end)?),
        };
        Ok(Outcome::Done(Some(out)))
    }

    /// Text for an output in the current format; `None` for silent results.
    pub fn render(&self, out: &Output) -> Option<String> {
        if self.format == Format::Json {
            return render_json(out).map(|v| v.to_string());
        }
        let dist = |f: &Dist| match self.format {
            Format::Latex => print_latex(f),
            _ => print_plain(f),
        };
        Some(match out {
            Output::Value(f) => dist(f),
            Output::Bound { name, value } => format!("{name} = {}", dist(value)),
            Output::M(m) => format!("M = {m}"),
            Output::Support(s) => s.to_string(),
            Output::SingSupport(pts) => points(pts),
            Output::Pairing(p) => format!("{} (error estimate {:e})", p.value, p.error_estimate),
            Output::Oracle { symbolic, oracle, discrepancy } => format!(
                "symbolic {symbolic}, oracle {} (error estimate {:e}), discrepancy {discrepancy:e}",
                oracle.value, oracle.error_estimate
            ),
            Output::FormatSet(_) => return None,
        })
    }

    /// Executes a whole script, writing results to `out` and diagnostics
    /// to `err`. Returns the exit code: 0 if every command succeeded, 1 if
    /// some failed, 2 if `strict` and a syntax error stopped the run.
    pub fn run<R: BufRead, W: Write, E: Write>(
        &mut self,
        input: R,
        out: &mut W,
        err: &mut E,
        strict: bool,
        prompt: bool,
    ) -> io::Result<i32> {
        let mut failed = false;
        let mut lines = input.lines();
        loop {
            if prompt {
                write!(out, "> ")?;
                out.flush()?;
            }
            let Some(line) = lines.next() else { break };
            let line = line?;
            match self.execute(&line) {
                Ok(Outcome::Quit) => break,
                Ok(Outcome::Done(Some(o))) => {
                    if let Some(text) = self.render(&o) {
                        writeln!(out, "{text}")?;
                    }
                }
                Ok(Outcome::Done(None)) => {}
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    failed = true;
                    if strict && e.kind == ErrorKind::Syntax {
                        return Ok(2);
                    }
                }
            }
        }
        Ok(i32::from(failed))
    }
}

fn points(pts: &[Rational]) -> String {
    if pts.is_empty() {
        return "empty".into();
    }
    let parts: Vec<String> = pts.iter().map(Rational::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn interval_json(i: &Interval) -> Value {
    json!({
        "lo": i.lo.to_string(),
        "hi": i.hi.to_string(),
        "lo_closed": i.lo_closed,
        "hi_closed": i.hi_closed,
    })
}

fn render_json(out: &Output) -> Option<Value> {
    let dist = |f: &Dist| serde_json::to_value(DistJson::from(f)).expect("serializable");
    Some(match out {
        Output::Value(f) => json!({ "kind": "value", "value": dist(f), "text": print_plain(f) }),
        Output::Bound { name, value } => {
            json!({ "kind": "let", "name": name, "value": dist(value), "text": print_plain(value) })
        }
        Output::M(m) => json!({
            "kind": "setM",
            "value": serde_json::to_value(MSetJson::from(m)).expect("serializable"),
            "text": m.to_string(),
        }),
        Output::Support(s) => json!({
            "kind": "supp",
            "value": s.components().iter().map(interval_json).collect::<Vec<_>>(),
            "text": s.to_string(),
        }),
        Output::SingSupport(pts) => json!({
            "kind": "singsupp",
            "value": pts.iter().map(Rational::to_string).collect::<Vec<_>>(),
        }),
        Output::Pairing(p) => json!({ "kind": "pair", "value": p.value, "error_estimate": p.error_estimate }),
        Output::Oracle { symbolic, oracle, discrepancy } => json!({
            "kind": "oracle",
            "symbolic": symbolic,
            "oracle": oracle.value,
            "error_estimate": oracle.error_estimate,
            "discrepancy": discrepancy,
        }),
        Output::FormatSet(_) => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_lines(lines: &[&str]) -> Vec<String> {
        let mut s = Session::default();
        lines
            .iter()
            .filter_map(|l| match s.execute(l) {
                Ok(Outcome::Done(Some(o))) => s.render(&o),
                Ok(_) => None,
                Err(e) => Some(format!("error: {e}")),
            })
            .collect()
    }

    #[test]
    fn repl_examples() {
        assert_eq!(run_lines(&["setM [0,1)", "delta(0)*H(x)"]), ["M = [0,1)", "delta(0)"]);
        assert_eq!(run_lines(&["D(H(x)*H(x))"]), ["delta(0)"]);
        assert_eq!(run_lines(&["setM empty", "delta(0)*H(x)"]), ["M = empty", "0"]);
        let out = run_lines(&["oracle abs(x) ; abs(x) bump(0,1)"]);
        assert!(out[0].starts_with("symbolic "), "{out:?}");
    }

    #[test]
    fn bindings_and_queries() {
        let out = run_lines(&[
            "let F = H(x) - H(x-1)  # window",
            "supp F",
            "singsupp F + delta(1/2)",
            "F*F",
            "supp delta(2)",
            "singsupp x^2",
        ]);
        assert_eq!(out, ["F = H(x) - H(x-1)", "[0,1]", "{0,1/2,1}", "H(x) - H(x-1)", "{2}", "empty"]);
    }

    #[test]
    fn diagnostics_carry_columns() {
        let mut s = Session::default();
        let e = s.execute("let F = H(x^2)").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Eval);
        assert!(e.message.starts_with("1:11:") && e.message.contains("x^2"), "{}", e.message);
        let e = s.execute("  H(x").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert!(e.message.starts_with("1:6:"), "{}", e.message);
        let e = s.execute("setM R - [0,1]").unwrap_err();
        assert!(e.message.starts_with("10:"), "{}", e.message);
        assert_eq!(s.execute("let pair = 1").unwrap_err().kind, ErrorKind::Eval);
        assert_eq!(s.execute("let x = 1").unwrap_err().kind, ErrorKind::Eval);
        assert_eq!(s.execute("format tex").unwrap_err().kind, ErrorKind::Syntax);
        assert_eq!(s.execute("F").unwrap_err().kind, ErrorKind::Eval);
        assert_eq!(s.execute("pair H(x) bump(0,0)").unwrap_err().kind, ErrorKind::Eval);
        assert_eq!(s.execute("pair H(x) bump(0)").unwrap_err().kind, ErrorKind::Syntax);
    }

    #[test]
    fn pairing_command() {
        let out = run_lines(&["pair delta(0) bump(0,1)"]);
        assert!(out[0].starts_with("0.3678794411714"), "{out:?}");
    }

    #[test]
    fn json_results() {
        let out = run_lines(&["format json", "delta(0)", "singsupp H(x)"]);
        let v: Value = serde_json::from_str(&out[0]).unwrap();
        assert_eq!(v["kind"], "value");
        assert_eq!(v["value"]["deltas"]["0"], "[1]");
        assert_eq!(out[1], r#"{"kind":"singsupp","value":["0"]}"#);
    }
}
