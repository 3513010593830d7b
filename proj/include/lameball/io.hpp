#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lameball/decomposition.hpp"

namespace lameball {

/// Basis-convention tag carried by every coefficient file; files with any
/// other tag are rejected rather than reinterpreted.
inline constexpr const char* kConventionTag = "real-orthonormal-4pi";

/// JSON coefficient document:
///   { "band_limit": L, "convention": "real-orthonormal-4pi",
///     "kind": "vector" | "scalar",
///     "coefficients": [ {"family": "+", "l": .., "m": .., "value": ..}, ... ] }
/// (scalar records omit "family").  Writes are deterministic: records sorted
/// by (family, l, m), values at 17 significant digits.
void write_coefficients(std::ostream& os, const VshExpansion& e);
void write_coefficients(std::ostream& os, const ScalarExpansion& g);
void write_coefficients_file(const std::string& path, const VshExpansion& e);

VshExpansion read_vector_coefficients(std::istream& is);
ScalarExpansion read_scalar_coefficients(std::istream& is);
VshExpansion read_vector_coefficients_file(const std::string& path);

/// Delimited sample rows: eta1 eta2 eta3 weight [f1 f2 f3].  Nodes must be
/// unit within 1e-9 and weights positive.  '#' starts a comment line.
struct SampleSet {
    SphereGrid grid;
    std::optional<FieldSamples> field;
};

SampleSet read_samples(std::istream& is);
SampleSet read_samples_file(const std::string& path);
void write_samples(std::ostream& os, const SphereGrid& grid, const FieldSamples* field);

/// Built-in boundary fields for self-contained runs: "identity" (f = eta),
/// "constant-e3", and "vsh:<family>:<l>:<m>" for a single basis field.
FieldSamples builtin_field(const std::string& name, const SphereGrid& grid);

} // namespace lameball
