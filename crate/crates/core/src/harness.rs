//! Registry of every verification check and the parallel runner behind `verify`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    a_polys_check, catalan_check, eq6_audit, eq8_series_check, eq9_audit, fib_relation_check, prop2_checks,
    prop3_check, r_via_v_check, syt_check, theorem1_check, theorem4_check, theorem6_check,
};
use crate::conjectures::{
    checkerboard_check, conj10_12_check, conj8_9_check, cor12_audit, d3_closed_audit, sec4_closedforms,
    sec5_check, sec6_check, sec6_symmetry_audit, sec7_checks, SEC7_IDS,
};
use crate::hankel::{base_determinants_check, condensation_b_ratios, condensation_check, det_oracle_check, eq18_check};
use crate::report::CheckReport;
use crate::sequences::{paths_oracle_check, Family, WeightSpec};

/// Seed of the random matrices compared by `oracles/det`.
pub const DET_ORACLE_SEED: u64 = 0x5eed_0d37;

/// Range overrides from the command line; `None` keeps each check's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    pub r_max: Option<usize>,
    pub order: Option<usize>,
    pub periods: Option<usize>,
}

impl Limits {
    fn k(&self, default: usize) -> usize {
        self.k_max.unwrap_or(default)
    }
    fn n(&self, default: usize) -> usize {
        self.n_max.unwrap_or(default)
    }
    fn order(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }
}

type Runner = fn(&Limits) -> Vec<CheckReport>;

/// One registry entry; `ids` lists the reports it produces.
pub struct Entry {
    pub ids: &'static [&'static str],
    run: Runner,
}

macro_rules! single {
    ($id:literal, $l:ident => $body:expr) => {
        Entry { ids: &[$id], run: |$l: &Limits| vec![$body] }
    };
}

fn weights(name: &str) -> WeightSpec {
    WeightSpec::all().into_iter().find(|w| w.name == name).unwrap()
}

/// All checks in report order.
pub fn registry() -> Vec<Entry> {
    vec![
        single!("oracles/paths", l => paths_oracle_check(l.n(12))),
        single!("oracles/det", _l => det_oracle_check(100, DET_ORACLE_SEED)),
        single!("base-determinants", l => base_determinants_check(l.n(12))),
        single!("eq18/mid", l => eq18_check(&weights("mid"), l.n(8))),
        single!("eq18/a", l => eq18_check(&weights("a"), l.n(8))),
        single!("eq18/b", l => eq18_check(&weights("b"), l.n(8))),
        single!("eq18/c", l => eq18_check(&weights("c"), l.n(8))),
        single!("condensation/mid", l => condensation_check(Family::Mid, 0, l.n(10))),
        single!("condensation/a", l => condensation_check(Family::A, 0, l.n(8))),
        single!("condensation/b", l => condensation_check(Family::B, 0, l.n(8))),
        single!("condensation/c", l => condensation_check(Family::C, 0, l.n(8))),
        single!("condensation/b-ratios", l => condensation_b_ratios(0, l.n(5))),
        single!("prop2", l => prop2_checks(l.k(8))),
        single!("theorem1", l => theorem1_check(l.k(8), l.n(12))),
        single!("r-via-v", l => r_via_v_check(l.k(8), l.n(12))),
        single!("prop3", l => prop3_check(l.k(4), l.k(4), l.order(60))),
        single!("theorem4", l => theorem4_check(l.k(4), l.k(4), l.order(60))),
        single!("a-polys", l => a_polys_check(l.k(7), l.order(60))),
        single!("theorem6", l => theorem6_check(l.k(3), l.order(40))),
        single!("syt-descent", l => syt_check(l.n(12), l.order(60))),
        single!("eq8-series", l => eq8_series_check(l.order(24))),
        single!("eq6-audit", l => eq6_audit(l.order(12))),
        single!("eq9-audit", l => eq9_audit(l.order(12))),
        single!("catalan-at-minus-one", l => catalan_check(l.n(10))),
        single!("fibonacci", l => fib_relation_check(l.n(12))),
        single!("sec4-closed-forms", l => sec4_closedforms(l.n(10))),
        single!("d3-closed-audit", l => d3_closed_audit(l.n(10))),
        single!("conj8-9", l => conj8_9_check(l.k(3), l.n(10))),
        single!("conj10-11", l => conj10_12_check(l.k(2), l.order(30))),
        single!("cor12-audit", l => cor12_audit(l.k(2), l.order(30))),
        single!("sec5", l => sec5_check(l.k(2), l.n(10), l.order(30))),
        single!("sec6", l => sec6_check(l.k(2), l.n(10), l.order(30))),
        single!("sec6-symmetry-audit", l => sec6_symmetry_audit(l.k(3), l.order(30))),
        single!("checkerboard", l => checkerboard_check(l.k(3), l.n(4))),
        Entry {
            ids: &SEC7_IDS,
            run: |l| sec7_checks(l.r_max.unwrap_or(4), l.k(4), l.periods.unwrap_or(2)),
        },
    ]
}

/// Every registered report id, in report order.
pub fn all_ids() -> Vec<&'static str> {
    registry().iter().flat_map(|e| e.ids.iter().copied()).collect()
}

/// Whether `id` is selected by `pattern`: an exact id, or a group prefix
/// such as `eq18` for `eq18/*`.
pub fn matches(pattern: &str, id: &str) -> bool {
    id == pattern || id.strip_prefix(pattern).is_some_and(|rest| rest.starts_with('/'))
}

/// Patterns that select no registered id.
pub fn unknown_ids(filter: &[String]) -> Vec<String> {
    let ids = all_ids();
    filter
        .iter()
        .filter(|p| !ids.iter().any(|id| matches(p, id)))
        .cloned()
        .collect()
}

/// Run the selected checks (all when `filter` is empty) on `jobs` threads.
/// Reports come back in registry order whatever the scheduling.
pub fn run_checks(filter: &[String], limits: &Limits, jobs: usize) -> Vec<CheckReport> {
    let selected = |id: &str| filter.is_empty() || filter.iter().any(|p| matches(p, id));
    let entries: Vec<Entry> = registry()
        .into_iter()
        .filter(|e| e.ids.iter().any(|id| selected(id)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let groups: Vec<Vec<CheckReport>> = pool.install(|| entries.par_iter().map(|e| (e.run)(limits)).collect());
    groups.into_iter().flatten().filter(|r| selected(&r.id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique() {
        let ids = all_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn group_selection() {
        assert!(matches("eq18", "eq18/mid"));
        assert!(matches("theorem1", "theorem1"));
        assert!(!matches("theorem", "theorem1"));
        assert_eq!(unknown_ids(&["sec7".into(), "nope".into()]), vec!["nope".to_string()]);
    }

    #[test]
    fn produced_ids_match_registry() {
        let limits = Limits { k_max: Some(1), n_max: Some(3), r_max: Some(1), order: Some(12), periods: Some(1) };
        let reports = run_checks(&["sec7".into(), "eq18".into(), "prop2".into()], &limits, 2);
        let got: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
        let want: Vec<&str> = all_ids()
            .into_iter()
            .filter(|id| id.starts_with("sec7/") || id.starts_with("eq18/") || *id == "prop2")
            .collect();
        assert_eq!(got, want);
    }
}
