//! Relations of the infinite, Hennig–Matucci and finite presentations.

mod conj;
mod families;
mod perm;
mod rebuild;
mod special;
mod sweep;
mod verify;

pub use conj::{classify_conj, conj_cases_brute_force, ConjCase};
pub use families::{
    enumerate_finite_relations, enumerate_hm_relations, enumerate_infinite_relations, enumerate_lemma_relations,
    rebuild_pairs_by_weight, rebuild_relations, RelationInstance, HM_FAMILIES, LEMMA_FAMILIES,
};
pub use perm::{perm_cycles, perm_to_element, Perm};
pub use rebuild::{rebuild_transposition, WitnessPolicy};
pub use special::{generates_symmetric_group, special_elements, two_generator_scheme, SpecialElements, TwoGeneratorScheme};
pub use sweep::{verify_family, Family, SweepLimits};
pub use verify::{check_instance, reports_to_json, summary_table, verify, Bounds, Failure, VerificationReport, FAILURE_CAP};
