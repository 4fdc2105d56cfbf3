#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flasque {

enum class Errc {
  // groups
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  DuplicateLabel,
  OrderTooLarge,
  NotASubgroup,
  UnknownElement,
  // lattices and modules
  DimensionMismatch,
  GroupMismatch,
  NotAHomomorphism,
  NotUnimodular,
  NotEquivariant,
  CompositionMismatch,
  NotStable,
  NoSolution,
  // cohomology / resolutions
  InternalDisagreement,
  SurjectivityFailure,
  CoflasquenessFailure,
  NotSurjective,
  TargetMismatch,
  KernelNotPermutation,
  LiftNotLanding,
  // fields and ideles
  NotOnTorus,
  NotFixed,
  InvalidPlace,
  InvalidResidueDegree,
  // io
  ParseError,
  UnknownName,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flasque
