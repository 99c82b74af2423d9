//! Resolution of the run configuration from flags, the environment, a
//! key=value file and defaults, in that order of precedence.

use std::path::Path;

use anyhow::{bail, Context, Result};
use slicelab::slodowy::parse_partition;
use slicelab::suites::Config;

pub const SEED_ENV: &str = "SLICELAB_SEED";

/// Fields set by one source; `None` defers to the next source.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partial {
    pub algebra: Option<String>,
    pub partition: Option<Vec<usize>>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

impl Partial {
    fn or(self, fallback: Partial) -> Partial {
        Partial {
            algebra: self.algebra.or(fallback.algebra),
            partition: self.partition.or(fallback.partition),
            seed: self.seed.or(fallback.seed),
            samples: self.samples.or(fallback.samples),
        }
    }
}

pub fn parse_seed(text: &str) -> Result<u64> {
    text.trim().parse().with_context(|| format!("invalid seed `{}`", text.trim()))
}

pub fn parse_samples(text: &str) -> Result<usize> {
    let n: usize = text.trim().parse().with_context(|| format!("invalid sample count `{}`", text.trim()))?;
    if n == 0 {
        bail!("sample count must be positive");
    }
    Ok(n)
}

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_file(text: &str) -> Result<Partial> {
    let mut out = Partial::default();
    for (number, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .with_context(|| format!("config line {}: expected key=value", number + 1))?;
        let value = value.trim();
        match key.trim() {
            "algebra" => out.algebra = Some(value.to_string()),
            "partition" => out.partition = Some(parse_partition(value)?),
            "seed" => out.seed = Some(parse_seed(value)?),
            "samples" => out.samples = Some(parse_samples(value)?),
            other => bail!("config line {}: unknown key `{other}`", number + 1),
        }
    }
    Ok(out)
}

pub fn resolve(flags: Partial, env_seed: Option<&str>, file: Option<&Path>) -> Result<Config> {
    let env = Partial { seed: env_seed.map(parse_seed).transpose().context(SEED_ENV)?, ..Partial::default() };
    let from_file = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_file(&text)?
        }
        None => Partial::default(),
    };
    let merged = flags.or(env).or(from_file);
    let defaults = Config::default();
    let config = Config {
        algebra: merged.algebra,
        partition: merged.partition,
        seed: merged.seed.unwrap_or(defaults.seed),
        samples: merged.samples.unwrap_or(defaults.samples),
    };
    config.validate()?;
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let parsed = parse_file("# run\nalgebra = a2\n\npartition=2,1\nseed=3 # trailing\nsamples = 5\n").unwrap();
        assert_eq!(
            parsed,
            Partial { algebra: Some("a2".into()), partition: Some(vec![2, 1]), seed: Some(3), samples: Some(5) }
        );
        assert!(parse_file("seed").is_err());
        assert!(parse_file("colour=red").is_err());
        assert!(parse_file("samples=0").is_err());
        assert!(parse_file("seed=-1").is_err());
    }

    #[test]
    fn precedence() {
        let dir = std::env::temp_dir().join(format!("slicelab-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        std::fs::write(&path, "seed=1\nsamples=4\nalgebra=a1\n").unwrap();

        let c = resolve(Partial::default(), None, Some(&path)).unwrap();
        assert_eq!((c.seed, c.samples, c.algebra.as_deref()), (1, 4, Some("a1")));
        let c = resolve(Partial::default(), Some("2"), Some(&path)).unwrap();
        assert_eq!(c.seed, 2);
        let flags = Partial { seed: Some(3), ..Partial::default() };
        let c = resolve(flags, Some("2"), Some(&path)).unwrap();
        assert_eq!((c.seed, c.samples), (3, 4));
        let c = resolve(Partial::default(), None, None).unwrap();
        assert_eq!(c, Config::default());

        assert!(resolve(Partial::default(), Some("x"), None).is_err());
        let bad = Partial { algebra: Some("a1".into()), partition: Some(vec![3]), ..Partial::default() };
        assert!(resolve(bad, None, None).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
