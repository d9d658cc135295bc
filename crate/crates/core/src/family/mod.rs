//! The family `Q(p,q,r,s,t)`, the representation `P` of `Δ`, and the
//! certificates attached to a parameter tuple.

mod algebra;
mod delta;
mod params;
mod q;
mod sweep;

pub use algebra::{
    a_polys, a_power, b_polys, initial_check, kernel_checks, sagbi_certificate, sagbi_report,
    xi_at_a, xi_closed_forms_a, xi_closed_forms_t, QuiverConeOracle, SignedTerms,
};
pub use delta::{
    alpha_label, build_delta, build_delta_p, delta_dims, generic_phi_rank, group_element, in_u,
    ones, phi, phi_jacobian, phi_rank, phi_symbolic, psi, sample_in_u, sample_points, verify_orbit,
    GroupElement, PolyMatrix, RepPoint,
};
pub use params::FamilyParams;
pub use q::{
    beta_label, build_q, displayed_trace_xi21, displayed_trace_xi9, match_cycles, u_sum, u_vectors,
    v_vectors, xi_all, xi_generators, xi_names, CycleMatch, V_TABLE,
};
pub use sweep::{
    family_all, ideal_report, orbit_report, rank_report, sweep_all, FamilyRun, SweepConfig,
    SweepSummary,
};
