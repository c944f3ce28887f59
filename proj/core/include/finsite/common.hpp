#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace finsite {

// Error categories surfaced by the library.  The command line tool maps any
// of these to exit code 2 (bad input / violated precondition); failed checks
// are ordinary verdicts, never exceptions.
enum class errc {
  not_a_lattice,
  non_distributive,
  bounds_mismatch,
  too_many_generators,
  precondition_violated,
  hypothesis_failed,
  not_a_ring,
  not_unimodular,
  shape_mismatch,
  enumeration_too_large,
  matrix_too_large,
  not_surjective,
  bad_input,
};

class Error : public std::runtime_error {
public:
  Error(errc code, std::string what)
      : std::runtime_error(std::move(what)), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_lattice: return "NotALattice";
    case errc::non_distributive: return "NonDistributive";
    case errc::bounds_mismatch: return "BoundsMismatch";
    case errc::too_many_generators: return "TooManyGenerators";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::hypothesis_failed: return "HypothesisFailed";
    case errc::not_a_ring: return "NotARing";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::matrix_too_large: return "MatrixTooLarge";
    case errc::not_surjective: return "NotSurjective";
    case errc::bad_input: return "BadInput";
  }
  return "Error";
}

}  // namespace finsite
