#pragma once

#include <stdexcept>
#include <string>

namespace pidc {

enum class errc {
  negative_mass,
  mass_not_normalized,
  duplicate_key,
  invalid_variable_selection,
  zero_mass_event,
  empty_alphabet,
  invalid_partition,
  target_not_tuple,
  not_coarsening,
  repeated_level,
  bad_endpoints,
  not_between,
  alphabet_too_large,
  empty_collection,
  too_many_sources,
  node_not_in_lattice,
  descriptor_alphabet_mismatch,
  not_two_sources,
  unknown_example,
  parse_error,
};

const char* errc_name(errc code) noexcept;

/// All library failures are reported through this exception. The code
/// distinguishes input errors from resource-cap errors at the CLI boundary.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::negative_mass: return "NegativeMass";
    case errc::mass_not_normalized: return "MassNotNormalized";
    case errc::duplicate_key: return "DuplicateKey";
    case errc::invalid_variable_selection: return "InvalidVariableSelection";
    case errc::zero_mass_event: return "ZeroMassEvent";
    case errc::empty_alphabet: return "EmptyAlphabet";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::target_not_tuple: return "TargetNotTuple";
    case errc::not_coarsening: return "NotCoarsening";
    case errc::repeated_level: return "RepeatedLevel";
    case errc::bad_endpoints: return "BadEndpoints";
    case errc::not_between: return "NotBetween";
    case errc::alphabet_too_large: return "AlphabetTooLarge";
    case errc::empty_collection: return "EmptyCollection";
    case errc::too_many_sources: return "TooManySources";
    case errc::node_not_in_lattice: return "NodeNotInLattice";
    case errc::descriptor_alphabet_mismatch: return "DescriptorAlphabetMismatch";
    case errc::not_two_sources: return "NotTwoSources";
    case errc::unknown_example: return "UnknownExample";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace pidc
