//! Design-file and command-line literal parsing.

use ffdesign::design::{DesignSpace, Exponent, Fraction};
use ffdesign::fixtures;

use crate::CliError;

/// Plain-text design file: a `levels:` header, then one point per line with
/// an optional `xR` replicate suffix. `#` starts a comment.
pub fn parse_design_file(text: &str) -> Result<Fraction, CliError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());

    let header = lines
        .next()
        .ok_or_else(|| CliError::validation("empty design file"))?;
    let levels_str = header
        .strip_prefix("levels:")
        .ok_or_else(|| CliError::validation("first line must be `levels: n1 n2 ...`"))?;
    let levels: Vec<usize> = levels_str
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::validation(format!("bad level `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    let space = DesignSpace::new(levels)?;
    let m = space.num_factors();

    let mut counts = vec![0u64; space.size()];
    for line in lines {
        let mut tokens: Vec<&str> = line.split_whitespace().collect();
        let mut replicate = 1u64;
        if let Some(last) = tokens.last() {
            if let Some(r) = last.strip_prefix('x') {
                replicate = r
                    .parse()
                    .map_err(|_| CliError::validation(format!("bad replicate suffix `{last}`")))?;
                if replicate == 0 {
                    return Err(CliError::validation("replicate count must be positive"));
                }
                tokens.pop();
            }
        }
        if tokens.len() != m {
            return Err(CliError::validation(format!(
                "expected {m} entries per row, got {}: `{line}`",
                tokens.len()
            )));
        }
        let entries: Vec<usize> = tokens
            .iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| CliError::validation(format!("bad entry `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        let rank = space.rank(&Exponent::new(entries))?;
        counts[rank] += replicate;
    }
    Ok(Fraction::new(space, counts)?)
}

/// Exponent literal: a digit string when every level is at most 10,
/// comma-separated integers otherwise (commas are accepted in both cases).
pub fn parse_exponent(literal: &str, space: &DesignSpace) -> Result<Exponent, CliError> {
    let compact = space.levels().iter().all(|&n| n <= 10);
    let entries: Vec<usize> = if literal.contains(',') {
        literal
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| CliError::validation(format!("bad exponent entry `{t}`")))
            })
            .collect::<Result<_, _>>()?
    } else if compact {
        literal
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| CliError::validation(format!("bad exponent digit `{c}`")))
            })
            .collect::<Result<_, _>>()?
    } else {
        return Err(CliError::validation(
            "levels above 10 need comma-separated exponents",
        ));
    };
    if entries.len() != space.num_factors() {
        return Err(CliError::validation(format!(
            "exponent `{literal}` has {} entries, expected {}",
            entries.len(),
            space.num_factors()
        )));
    }
    let alpha = Exponent::new(entries);
    space.rank(&alpha)?; // bounds check
    Ok(alpha)
}

/// Defining word `ALPHA=E`, e.g. `1120=0` or `3,3,3=3`.
pub fn parse_word(literal: &str, space: &DesignSpace) -> Result<(Exponent, usize), CliError> {
    let (alpha, e) = literal
        .split_once('=')
        .ok_or_else(|| CliError::validation(format!("word `{literal}` is missing `=`")))?;
    let alpha = parse_exponent(alpha.trim(), space)?;
    let e: usize = e
        .trim()
        .parse()
        .map_err(|_| CliError::validation(format!("bad root exponent in `{literal}`")))?;
    Ok((alpha, e))
}

/// Word arguments; when all levels are at most 10 a single argument may
/// hold several comma-separated words.
pub fn parse_words(
    args: &[String],
    space: &DesignSpace,
) -> Result<Vec<(Exponent, usize)>, CliError> {
    let compact = space.levels().iter().all(|&n| n <= 10);
    let mut words = Vec::new();
    for arg in args {
        if compact {
            for part in arg.split(',') {
                let part = part.trim();
                if !part.is_empty() {
                    words.push(parse_word(part, space)?);
                }
            }
        } else {
            words.push(parse_word(arg.trim(), space)?);
        }
    }
    if words.is_empty() {
        return Err(CliError::validation("no defining words given"));
    }
    Ok(words)
}

/// One-based factor list `1,2,3`.
pub fn parse_factors(literal: &str, space: &DesignSpace) -> Result<Vec<usize>, CliError> {
    let factors: Vec<usize> = literal
        .split(',')
        .map(|t| {
            let j: usize = t
                .trim()
                .parse()
                .map_err(|_| CliError::validation(format!("bad factor index `{t}`")))?;
            if j == 0 || j > space.num_factors() {
                return Err(CliError::validation(format!(
                    "factor index {j} out of range 1..={}",
                    space.num_factors()
                )));
            }
            Ok(j - 1)
        })
        .collect::<Result<_, _>>()?;
    if factors.is_empty() {
        return Err(CliError::validation("empty factor list"));
    }
    Ok(factors)
}

pub fn fixture(name: &str) -> Result<Fraction, CliError> {
    match name {
        "3-4-2" => Ok(fixtures::three_four_two()),
        "6-cube" => Ok(fixtures::six_cube()),
        "l18" => Ok(fixtures::l18()),
        other => Err(CliError::validation(format!(
            "unknown fixture `{other}` (available: 3-4-2, 6-cube, l18)"
        ))),
    }
}

/// Load the input fraction from a file path or a bundled fixture.
pub fn load_input(
    file: Option<&std::path::Path>,
    fixture_name: Option<&str>,
) -> Result<Fraction, CliError> {
    match (file, fixture_name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::validation(format!("cannot read {}: {e}", path.display()))
            })?;
            parse_design_file(&text)
        }
        (None, Some(name)) => fixture(name),
        (None, None) => Err(CliError::validation("give a design file or --fixture")),
        (Some(_), Some(_)) => Err(CliError::validation(
            "give either a design file or --fixture, not both",
        )),
    }
}
