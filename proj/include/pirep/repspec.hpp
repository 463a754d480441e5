#pragma once

#include <string>
#include <vector>

#include "pirep/linrep.hpp"
#include "pirep/matrix.hpp"

namespace pirep {

/// Parsed representation spec: name, ambient dimension, generator matrices
/// with exact rational entries.
struct RepSpec {
    std::string name;
    std::size_t dim_v = 0;
    std::vector<RatMatrix> generators;
    std::string source_path;
};

/// Parses the TOML subset used for representation files:
///   name = "..."
///   dim_v = k
///   generators = [ [["0","1"],["0","0"]], ... ]
/// Entries are integers or "p/q" strings; floats are rejected. Errors carry
/// line:column diagnostics.
RepSpec parse_spec_text(const std::string &text, const std::string &filename);
RepSpec parse_spec(const std::string &path);

/// Canonical serialization used for cache keys (name excluded: two specs with
/// the same matrices share cached results).
std::string canonical_content(const RepSpec &spec);

LinearRep make_rep(const RepSpec &spec);

} // namespace pirep
