#pragma once

#include <optional>
#include <string>

#include "pirep/envelope.hpp"
#include "pirep/exponent.hpp"
#include "pirep/growth.hpp"
#include "pirep/liestruct.hpp"
#include "pirep/repspec.hpp"

namespace pirep {

inline constexpr int CACHE_FORMAT_VERSION = 1;

struct PipelineOptions {
    std::uint64_t envelope_seed = 1;
    std::optional<std::string> cache_dir; // nullopt disables caching
};

/// Everything downstream commands consume: the closed representation, its
/// envelope with chain, and the Levi data. Built cold or restored from the
/// cache (restored runs must match cold runs bit for bit).
struct Analysis {
    RepSpec spec;
    LinearRep rep;
    Envelope env;
    LeviData levi;
    bool from_cache = false;
};

Analysis build_analysis(const RepSpec &spec, const PipelineOptions &opts);

std::string cache_key(const RepSpec &spec, std::uint64_t envelope_seed);

/// Report renderers (byte-deterministic for fixed inputs).
std::string analyze_report_json(const Analysis &a, const LemmaReport &lemmas);
std::string codim_report_csv(const std::vector<CodimResult> &results);
std::string cochar_report_csv(const CocharTable &table);
std::string exponent_report_json(const ExponentResult &r, const Analysis &a);
std::string growth_report_json(const GrowthReport &r);
std::string verify_report_text(const LemmaReport &lemmas);

} // namespace pirep
