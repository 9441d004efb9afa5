#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "quadcover/bounds.hpp"
#include "quadcover/fourgraph.hpp"
#include "quadcover/gk.hpp"
#include "quadcover/quads.hpp"

namespace quadcover::io {

/// Version stamp for the JSON payloads and CSV layouts this tool emits.
/// The matrix and quad-system file formats are unversioned on purpose:
/// their schemas are frozen.
inline constexpr int kSchemaVersion = 1;

// Matrix file: {"k": int, "rows": int, "cols": int, "entries": [int, ...]}
nlohmann::json matrix_to_json(const ZkMatrix& m);
ZkMatrix matrix_from_json(const nlohmann::json& j);

// Quad system file: {"n": int, "m": int, "quads": [[i,j,p,q], ...]}
// quads in canonical lexicographic order.
nlohmann::json quads_to_json(const QuadSystem& q);
QuadSystem quads_from_json(const nlohmann::json& j);

struct ProfileSpec {
    ProfileSet set;
    /// Set when the spec named a family ("k2:<k>" or "k3:<k>").
    std::optional<std::pair<Family, unsigned>> family;
};

/// "2,5;5,2" -> {(2,5),(5,2)}; "k2:4" and "k3:4" name the built-in families.
ProfileSpec parse_profile_spec(const std::string& spec);

/// Comma-separated value vector, e.g. "0,1,2" for the identity on Z_3.
std::string fnvec_to_string(const gk::FnVec& f);
gk::FnVec fnvec_from_string(unsigned k, const std::string& text);

nlohmann::json witness_to_json(const CoverWitness& w);
nlohmann::json verify_report_to_json(const VerifyReport& r);

// {n, m, e22_count, e40_count, e04_count, density_num, density_den, covered}
nlohmann::json fourgraph_summary(const caen::FourGraph& h, bool covered);

nlohmann::json bounds_to_json(const solver::BoundsReport& r);
std::string bounds_csv_header();
std::string bounds_csv_row(const solver::BoundsReport& r);

nlohmann::json clique_result_to_json(const gk::CliqueResult& r);

// Clique search checkpoint blob (versioned).
nlohmann::json clique_state_to_json(const gk::CliqueSearchState& s);
gk::CliqueSearchState clique_state_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& data);

}  // namespace quadcover::io
