#include "flasque/error.hpp"

namespace flasque {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::NotStable: return "NotStable";
    case Errc::NoSolution: return "NoSolution";
    case Errc::InternalDisagreement: return "InternalDisagreement";
    case Errc::SurjectivityFailure: return "SurjectivityFailure";
    case Errc::CoflasquenessFailure: return "CoflasquenessFailure";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::KernelNotPermutation: return "KernelNotPermutation";
    case Errc::LiftNotLanding: return "LiftNotLanding";
    case Errc::NotOnTorus: return "NotOnTorus";
    case Errc::NotFixed: return "NotFixed";
    case Errc::InvalidPlace: return "InvalidPlace";
    case Errc::InvalidResidueDegree: return "InvalidResidueDegree";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace flasque
