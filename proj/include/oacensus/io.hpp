#pragma once

#include <optional>
#include <string>

#include "oacensus/census.hpp"
#include "oacensus/coloring.hpp"
#include "oacensus/extremal.hpp"
#include "oacensus/ground.hpp"
#include "oacensus/identities.hpp"
#include "oacensus/oa.hpp"

namespace oac {

/// A loaded ground structure: exactly one of the alternatives is set,
/// matching the file's "kind" ("abelian" | "table" | "quasigroup").
struct GroundStructure {
    std::string kind;
    std::optional<AbelianGroup> abelian;
    std::optional<FiniteGroup> group;
    std::optional<Quasigroup> quasigroup;

    /// Cayley-table view usable by the group-based constructors; abelian
    /// groups are expanded on demand.
    FiniteGroup as_group() const;
    Quasigroup as_quasigroup_table() const;
};

GroundStructure load_ground(const std::string& path);
std::string ground_to_json(const GroundStructure& g);

/// OA files: JSON {"d","k","n","rows","provenance"} or the compact text form
/// "d k n" header plus one whitespace-separated row per line. Loading sniffs
/// the format from the first non-space byte.
OrthogonalArray load_oa(const std::string& path);
std::string oa_to_json(const OrthogonalArray& oa);
std::string oa_to_text(const OrthogonalArray& oa);
void save_oa(const OrthogonalArray& oa, const std::string& path, const std::string& format);

Coloring load_coloring(const std::string& path);
std::string coloring_to_json(const Coloring& c);

std::string census_to_json(const PatternCensus& pc);
std::string report_to_json(const IdentityReport& rep);
std::string reports_to_json(const std::vector<IdentityReport>& reps);

/// JSON omits elapsed time so identical runs are byte-identical; the CSV row
/// (n, r, mode, min, argmin, seed, elapsed-ms) carries it.
std::string search_result_to_json(const SearchResult& sr);
std::string search_result_to_csv(const SearchResult& sr);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace oac
