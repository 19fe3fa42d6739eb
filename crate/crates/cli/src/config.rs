use std::ffi::OsString;
use std::path::Path;

use serde_json::Value;

use crate::CliError;

pub const SUBCOMMANDS: [&str; 7] = ["kp", "bell", "invert", "operator", "bounds", "audit", "sample"];

/// Expands `--config FILE`: every entry of the JSON object becomes a flag
/// placed right after the subcommand, ahead of the command-line flags, so
/// that explicit flags win.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let mut rest = Vec::with_capacity(args.len());
    let mut config = None;
    let mut iter = args.into_iter();
    let program = iter.next().unwrap_or_else(|| "faber".into());
    while let Some(arg) = iter.next() {
        let text = arg.to_string_lossy();
        if text == "--config" {
            let path = iter
                .next()
                .ok_or_else(|| CliError::Usage("--config needs a file path".into()))?;
            config = Some(path);
        } else if let Some(path) = text.strip_prefix("--config=") {
            config = Some(path.into());
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = config else {
        let mut out = vec![program];
        out.extend(rest);
        return Ok(out);
    };

    let injected = config_flags(Path::new(&path))?;
    let position = rest
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()));
    let mut out = vec![program];
    match position {
        Some(i) => {
            out.push(rest.remove(i));
            out.extend(injected);
        }
        None => {
            // no subcommand: let clap report the usage error
        }
    }
    out.extend(rest);
    Ok(out)
}

fn config_flags(path: &Path) -> Result<Vec<OsString>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("config {} is not valid JSON: {e}", path.display())))?;
    let Value::Object(map) = value else {
        return Err(CliError::Usage("config must be a JSON object".into()));
    };
    let mut flags = Vec::new();
    for (key, value) in map {
        let key = key.trim_start_matches('-');
        if key == "config" {
            return Err(CliError::Usage("config files cannot nest --config".into()));
        }
        let flag = format!("--{key}");
        match value {
            Value::Bool(true) => flags.push(flag.into()),
            Value::Bool(false) | Value::Null => {}
            Value::String(s) => flags.push(format!("{flag}={s}").into()),
            Value::Number(n) => flags.push(format!("{flag}={n}").into()),
            Value::Array(_) | Value::Object(_) => {
                return Err(CliError::Usage(format!(
                    "config entry {key:?} must be a string, number or boolean"
                )))
            }
        }
    }
    Ok(flags)
}
