#include "hypertrans/errors.hpp"

namespace hypertrans {

const char* error_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidHypergraph: return "invalid_hypergraph";
    case ErrorCode::InvalidFamily: return "invalid_family";
    case ErrorCode::LabelCollision: return "label_collision";
    case ErrorCode::NotDisjoint: return "not_disjoint";
    case ErrorCode::NotComponentSubset: return "not_component_subset";
    case ErrorCode::VerticesNotCovered: return "vertices_not_covered";
    case ErrorCode::UniverseMismatch: return "universe_mismatch";
    case ErrorCode::UniverseTooSmall: return "universe_too_small";
    case ErrorCode::LoopRejected: return "loop_rejected";
    case ErrorCode::NotInDomain: return "not_in_domain";
    case ErrorCode::NotNonredundant: return "invalid_spec.not_nonredundant";
    case ErrorCode::NotComponentMaximal: return "invalid_spec.not_component_maximal";
    case ErrorCode::ImagesNotDisjoint: return "invalid_spec.images_not_disjoint";
    case ErrorCode::ImageCountCollision: return "invalid_spec.image_count_collision";
    case ErrorCode::DecompositionViolation: return "invalid_spec.decomposition_violation";
    case ErrorCode::DistinguishedNotInFamily: return "invalid_spec.distinguished_not_in_family";
    case ErrorCode::NotUpwardClosed: return "not_upward_closed";
    case ErrorCode::TooManyMaps: return "too_many_maps";
    case ErrorCode::TooFewMaps: return "too_few_maps";
    case ErrorCode::NotPairwiseDisjoint: return "not_pairwise_disjoint";
    case ErrorCode::NotInCoincidence: return "not_in_coincidence";
    case ErrorCode::DecompositionMismatch: return "decomposition_mismatch";
    case ErrorCode::NotClosed: return "not_closed";
    case ErrorCode::NullWNotAllowed: return "null_w_not_allowed";
    case ErrorCode::NullNotInFamily: return "null_not_in_family";
    case ErrorCode::WNotDisjointFromFamily: return "w_not_disjoint_from_family";
    case ErrorCode::NotAmenableFamily: return "not_amenable_family";
    case ErrorCode::NotAmenableIllDefinedPi: return "not_amenable.ill_defined_pi";
    case ErrorCode::NotAmenableIllDefinedD: return "not_amenable.ill_defined_d";
    case ErrorCode::NotAmenableFailsConditions: return "not_amenable.fails_conditions";
    case ErrorCode::EquivalentEdgesTooLarge: return "equivalent_edges_too_large";
    case ErrorCode::EdgesConfinedToSummand: return "edges_confined_to_summand";
  }
  return "unknown_error";
}

}  // namespace hypertrans
