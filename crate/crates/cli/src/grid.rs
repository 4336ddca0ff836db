//! Grid arguments and rows of the `table` command.

use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use multisat::{build, size_formula, verify_saturated, ConstructionKind, ConstructionSpec, Error};

/// Integers given as `a`, `a..b` (inclusive), or comma-separated mixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let num = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("`{x}`: {e}"))
            };
            if let Some((lo, hi)) = part.split_once("..") {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(lo..=hi);
            } else {
                out.push(num(part)?);
            }
        }
        if out.is_empty() {
            return Err("no values given".into());
        }
        out.sort_unstable();
        out.dedup();
        Ok(IntList(out))
    }
}

#[derive(Debug, Clone)]
pub struct Row {
    pub spec: ConstructionSpec,
    pub formula: Option<u64>,
    pub built: usize,
    /// `(kt_free, is_saturated)` when verified.
    pub verdict: Option<(bool, bool)>,
}

impl Row {
    pub fn to_csv(&self) -> String {
        let s = &self.spec;
        format!(
            "{},{},{},{},{},{},{}",
            s.kind,
            s.k,
            s.n,
            s.t,
            self.formula.map_or(String::new(), |f| f.to_string()),
            self.built,
            self.verdict.map_or(String::new(), |(_, sat)| sat.to_string()),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.spec.kind,
            "k": self.spec.k,
            "n": self.spec.n,
            "t": self.spec.t,
            "formula": self.formula,
            "built": self.built,
            "kt_free": self.verdict.map(|v| v.0),
            "verified": self.verdict.map(|v| v.1),
        })
    }
}

/// Admissible specs in lexicographic (kind, k, n, t) order. Triangle-only
/// kinds appear once per (k, n) with t = 3.
pub fn grid_specs(kinds: &[ConstructionKind], ks: &[usize], ns: &[usize], ts: &[usize]) -> Vec<ConstructionSpec> {
    let mut specs = Vec::new();
    for &kind in kinds {
        for &k in ks {
            for &n in ns {
                let tlist: Vec<usize> = match kind.fixed_t() {
                    Some(t) => vec![t],
                    None => ts.to_vec(),
                };
                for t in tlist {
                    if let Ok(spec) = ConstructionSpec::new(kind, k, n, t) {
                        specs.push(spec);
                    }
                }
            }
        }
    }
    specs
}

pub fn table_rows(
    kinds: &[ConstructionKind],
    ks: &[usize],
    ns: &[usize],
    ts: &[usize],
    verify: bool,
) -> Result<Vec<Row>, Error> {
    grid_specs(kinds, ks, ns, ts)
        .par_iter()
        .map(|spec| {
            let art = build(spec)?;
            let verdict = if verify {
                let r = verify_saturated(&art.graph, spec.t)?;
                Some((r.kt_free, r.is_saturated))
            } else {
                None
            };
            Ok(Row {
                spec: *spec,
                formula: size_formula(spec).ok(),
                built: art.graph.edge_count(),
                verdict,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_list_forms() {
        assert_eq!("3..5".parse::<IntList>().unwrap().0, vec![3, 4, 5]);
        assert_eq!("3..=5".parse::<IntList>().unwrap().0, vec![3, 4, 5]);
        assert_eq!("7,3,5".parse::<IntList>().unwrap().0, vec![3, 5, 7]);
        assert_eq!("2, 4..5".parse::<IntList>().unwrap().0, vec![2, 4, 5]);
        assert!("5..3".parse::<IntList>().is_err());
        assert!("x".parse::<IntList>().is_err());
        assert!("".parse::<IntList>().is_err());
    }

    #[test]
    fn grid_order_and_admissibility() {
        let specs = grid_specs(
            &[ConstructionKind::G1, ConstructionKind::Hknt],
            &[3, 5],
            &[2],
            &[3, 4],
        );
        let keys: Vec<_> = specs.iter().map(|s| (s.kind, s.k, s.t)).collect();
        assert_eq!(
            keys,
            vec![
                (ConstructionKind::G1, 3, 3),
                (ConstructionKind::G1, 5, 3),
                (ConstructionKind::Hknt, 3, 3),
                (ConstructionKind::Hknt, 5, 3),
                (ConstructionKind::Hknt, 5, 4),
            ]
        );
    }
}
