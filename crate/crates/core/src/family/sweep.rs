use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{initial_check, kernel_checks, sagbi_report};
use super::delta::{generic_phi_rank, sample_points, verify_orbit};
use super::params::FamilyParams;
use super::q::{
    build_q, displayed_trace_xi21, displayed_trace_xi9, match_cycles, xi_all, xi_names,
};
use crate::lattice::brute_force_cone_equality;
use crate::limits::Limits;
use crate::poly::{expand_trace, telescope_reduce, Telescope, TraceStep};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub orbit_samples: usize,
    pub rank_points: usize,
    pub cone_bound: i64,
    pub limits: Limits,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            orbit_samples: 100,
            rank_points: 3,
            cone_bound: 2,
            limits: Limits::default(),
        }
    }
}

fn render_trace(steps: &[TraceStep]) -> String {
    let names = xi_names();
    steps
        .iter()
        .map(|s| s.render(&names))
        .collect::<Vec<_>>()
        .join(" ")
}

fn sorted(steps: &[TraceStep]) -> Vec<TraceStep> {
    let mut s = steps.to_vec();
    s.sort();
    s
}

/// Telescoping of `ξ_9 … ξ_26` over `ξ_1 … ξ_8`, plus the two displayed
/// identities for `ξ_9` and `ξ_21`.
pub fn ideal_report(params: &FamilyParams) -> Report {
    let mut report = Report::new(format!("ideal {params}"));
    let all = xi_all(params);
    let gens = &all[..8];
    let n = params.narrows();
    let mut traces = Vec::new();
    for i in 9..=26 {
        let target = &all[i - 1];
        let name = format!("xi{i} telescopes over xi1..xi8");
        match telescope_reduce(target, gens) {
            Telescope::Reduced(steps) => {
                if expand_trace(&steps, gens, n) == target.to_polynomial() {
                    report.push(Check::pass(name, render_trace(&steps)));
                } else {
                    report.push(Check::fail(
                        name,
                        format!("expansion differs: {}", render_trace(&steps)),
                    ));
                }
                traces.push(Some(steps));
            }
            Telescope::Irreducible => {
                report.push(Check::fail(name, "irreducible"));
                traces.push(None);
            }
        }
    }
    for (i, shown) in [
        (9, displayed_trace_xi9(params)),
        (21, displayed_trace_xi21(params)),
    ] {
        let name = format!("xi{i} displayed identity");
        let target = all[i - 1].to_polynomial();
        let expansion = expand_trace(&shown, gens, n);
        let found = traces[i - 9].as_deref();
        let check = if expansion != target {
            Check::fail(name, format!("expansion {expansion} differs from {target}"))
        } else if found.map(sorted) != Some(sorted(&shown)) {
            Check::fail(
                name,
                format!(
                    "search found {}, displayed {}",
                    found.map_or("none".into(), render_trace),
                    render_trace(&shown)
                ),
            )
        } else {
            Check::pass(name, render_trace(&shown))
        };
        report.push(check);
    }
    report
}

/// `g(x)·Φ(x) = P` on `samples` seeded points of `U`.
pub fn orbit_report(params: &FamilyParams, seed: u64, samples: usize) -> Check {
    let name = format!("orbit identity on {samples} samples");
    for (k, x) in sample_points(params, seed, samples).iter().enumerate() {
        if let Err(e) = verify_orbit(params, x) {
            return Check::fail(name, format!("sample {k}: {e}"));
        }
    }
    Check::pass(name, "")
}

/// `phi_rank = t + 5` at `points` seeded points.
pub fn rank_report(params: &FamilyParams, seed: u64, points: usize) -> Check {
    let name = "rank of dPhi";
    match generic_phi_rank(params, seed, points) {
        Ok(r) if r == params.nvars() => Check::pass(name, format!("{r}")),
        Ok(r) => Check::fail(name, format!("lhs {r}, rhs {}", params.nvars())),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

fn build_check(params: &FamilyParams) -> Check {
    match build_q(params) {
        Ok(q) => Check::pass(
            "build Q",
            format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count()),
        ),
        Err(e) => Check::fail("build Q", e.to_string()),
    }
}

/// Every certificate for one tuple.
pub fn family_all(params: &FamilyParams, config: &SweepConfig) -> Report {
    let mut report = Report::new(format!("family {params}"));
    report.push(build_check(params));
    if params.is_strict() {
        report.push(match match_cycles(params, &config.limits) {
            Ok(m) => Check::pass("cycle classes = ±v1..v26", format!("{} classes", m.classes)),
            Err(e) => Check::fail("cycle classes = ±v1..v26", e.to_string()),
        });
    }
    report.extend(ideal_report(params));
    report.push(initial_check(params));
    match kernel_checks(params) {
        Ok(checks) => checks.into_iter().for_each(|c| report.push(c)),
        Err(e) => report.push(Check::fail("kernel checks", e.to_string())),
    }
    match sagbi_report(params, &config.limits) {
        Ok(r) => report.extend(r),
        Err(e) => report.push(Check::fail("sagbi certificate", e.to_string())),
    }
    report.push(orbit_report(params, config.seed, config.orbit_samples));
    report.push(rank_report(params, config.seed, config.rank_points));
    report
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRun {
    pub params: FamilyParams,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub max_t: usize,
    pub runs: Vec<FamilyRun>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.runs.iter().all(|r| r.report.passed())
    }
}

fn cone_check(params: &FamilyParams, config: &SweepConfig) -> Check {
    let name = format!("cone equality B={}", config.cone_bound);
    let result = build_q(params).and_then(|q| {
        Ok(brute_force_cone_equality(
            &q,
            config.cone_bound,
            &config.limits,
        )?)
    });
    match result {
        Ok(eq) if eq.is_equal() => Check::pass(name, ""),
        Ok(eq) => Check::fail(name, format!("{eq:?}")),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// [`family_all`] plus the brute-force cone equality for every tuple with
/// `t ≤ max_t`, in tuple order.
pub fn sweep_all(max_t: usize, config: &SweepConfig) -> SweepSummary {
    let runs = FamilyParams::all_up_to(max_t)
        .into_par_iter()
        .map(|params| {
            let mut report = family_all(&params, config);
            report.push(cone_check(&params, config));
            FamilyRun { params, report }
        })
        .collect();
    SweepSummary { max_t, runs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_ideal_matches_display() {
        let f = FamilyParams::new(1, 2, 3, 4, 5).unwrap();
        let r = ideal_report(&f);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn smallest_tuple_passes_everything() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        let config = SweepConfig {
            orbit_samples: 5,
            ..SweepConfig::default()
        };
        let r = family_all(&f, &config);
        assert!(r.passed(), "{r}");
    }
}
