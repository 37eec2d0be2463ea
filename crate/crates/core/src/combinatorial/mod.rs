//! Set-theoretical solutions on tuples of naturals and their evaluation on
//! the derived equations.

mod candidate;
mod chains;
mod eval;
mod maps;
mod verify;

pub use candidate::{
    clamped_r_map, register_candidate, register_candidate_y, CandidateMap, CandidateSemantics, CandidateSpec,
    InverseConvention,
};
pub use chains::{format_state, parse_state, reflection_chains, render_chains, Chain, Family};
pub use eval::{apply_operator, eval_expression, Combinatorial, SetSemantics};
pub use maps::{k_map, r_map, tsub};
pub use verify::{sample_states, verify_equation, DomainSpec, Failure, VerificationReport, DEFAULT_MAX_APPLICATIONS};
