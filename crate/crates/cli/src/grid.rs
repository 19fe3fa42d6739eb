use faber::scalar::{parse_rational, rational};
use faber::Rational;
use num_traits::Signed;

use crate::CliError;

/// Parses a single rational or a grid `start:stop:step`.
///
/// The grid holds `start + k*step` for `k = 0, 1, ...` while the value does
/// not exceed `stop + step/2`, so `stop` is included whenever it lies on the
/// lattice up to half a step.
pub fn parse_grid(flag: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    let bad = |why: String| CliError::Usage(format!("--{flag} {text:?}: {why}"));
    let parse = |s: &str| parse_rational(s).map_err(|e| bad(e.to_string()));
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![parse(single)?]),
        [start, stop, step] => {
            let (start, stop, step) = (parse(start)?, parse(stop)?, parse(step)?);
            if !step.is_positive() {
                return Err(bad("step must be positive".into()));
            }
            if stop < start {
                return Err(bad("stop is below start".into()));
            }
            let limit = &stop + &step * rational(1, 2);
            let mut values = Vec::new();
            let mut value = start;
            while value <= limit {
                if values.len() >= 100_000 {
                    return Err(bad("grid has more than 100000 points".into()));
                }
                values.push(value.clone());
                value += &step;
            }
            Ok(values)
        }
        _ => Err(bad("expected a rational or start:stop:step".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = parse_grid("alpha", "0:0.9:0.3").unwrap();
        assert_eq!(g, vec![rational(0, 1), rational(3, 10), rational(3, 5), rational(9, 10)]);
        assert_eq!(parse_grid("mu", "1/2").unwrap(), vec![rational(1, 2)]);
        // 0.95 is within half a step of the lattice point 0.9
        assert_eq!(parse_grid("a", "0:0.95:0.3").unwrap().len(), 4);
        assert_eq!(parse_grid("a", "0:1:1/3").unwrap().len(), 4);
        assert!(parse_grid("a", "0:1:0").is_err());
        assert!(parse_grid("a", "1:0:1").is_err());
        assert!(parse_grid("a", "1:2").is_err());
        assert!(parse_grid("a", "x").is_err());
    }
}
