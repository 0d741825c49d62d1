use anyhow::{anyhow, bail, Context, Result};
use tgcheck_core::Family;

/// Builds a family from its name and a parameter string.
///
/// `twist` takes `k=N` and optionally `clasp=true`; `grid` takes `p=N,q=M`;
/// `curl` takes nothing; `sum` takes two summands separated by `;`, each
/// written `name` or `name:params`.
pub fn parse_family(name: &str, params: &str) -> Result<Family> {
    let params = params.trim();
    match name.trim() {
        "twist" => {
            let kv = key_values(params)?;
            let k = required(&kv, "k")?;
            let clasp = match lookup(&kv, "clasp") {
                None => false,
                Some(v) => v.parse().with_context(|| format!("clasp must be true or false, got {v:?}"))?,
            };
            expect_keys(&kv, &["k", "clasp"])?;
            Ok(Family::Twist { k, clasp })
        }
        "grid" => {
            let kv = key_values(params)?;
            expect_keys(&kv, &["p", "q"])?;
            Ok(Family::Grid { p: required(&kv, "p")?, q: required(&kv, "q")? })
        }
        "curl" => {
            if !params.is_empty() {
                bail!("curl takes no parameters");
            }
            Ok(Family::Curl)
        }
        "sum" => {
            let parts: Vec<&str> = params.split(';').collect();
            if parts.len() != 2 {
                bail!("sum needs two summands separated by ';', e.g. twist:k=3;twist:k=3");
            }
            let summand = |s: &str| {
                let (name, rest) = s.split_once(':').unwrap_or((s, ""));
                parse_family(name, rest)
            };
            Ok(Family::Sum(Box::new(summand(parts[0])?), Box::new(summand(parts[1])?)))
        }
        other => bail!("unknown family {other:?} (expected twist, grid, sum or curl)"),
    }
}

fn key_values(params: &str) -> Result<Vec<(String, String)>> {
    params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (k, v) = s.split_once('=').ok_or_else(|| anyhow!("expected key=value, got {s:?}"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn lookup<'a>(kv: &'a [(String, String)], key: &str) -> Option<&'a str> {
    kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
}

fn required(kv: &[(String, String)], key: &str) -> Result<usize> {
    let v = lookup(kv, key).ok_or_else(|| anyhow!("missing parameter {key}"))?;
    v.parse().with_context(|| format!("parameter {key} must be a non-negative integer, got {v:?}"))
}

fn expect_keys(kv: &[(String, String)], allowed: &[&str]) -> Result<()> {
    match kv.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => bail!("unknown parameter {k}"),
        None => Ok(()),
    }
}
