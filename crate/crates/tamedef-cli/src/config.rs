use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// An inclusive range of defect exponents, written `4`, `4..6` or `4..=6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NRange {
    pub lo: u32,
    pub hi: u32,
}

impl NRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("bad exponent {x:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        if !(2..=30).contains(&lo) || hi > 30 {
            return Err(format!("exponents must lie in 2..=30, got {s}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..={}", self.lo, self.hi)
        }
    }
}

/// Everything that determines a run's output. Embedded verbatim in every JSON report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub families: Vec<String>,
    pub defect_type: Option<String>,
    pub n: Option<NRange>,
    pub c: u8,
    pub a: u8,
    pub recipe: Option<String>,
    pub precision: u32,
    pub field_degree: u32,
    pub format: Format,
    pub output: Option<String>,
    pub seed: u64,
    pub jobs: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("4".parse::<NRange>().unwrap(), NRange { lo: 4, hi: 4 });
        assert_eq!("3..5".parse::<NRange>().unwrap(), NRange { lo: 3, hi: 5 });
        assert_eq!("3..=5".parse::<NRange>().unwrap(), NRange { lo: 3, hi: 5 });
        assert!("5..3".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
    }
}
