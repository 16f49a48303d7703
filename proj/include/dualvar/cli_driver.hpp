#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualvar/multipoly.hpp"

namespace dualvar {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string poly_spec;  // catalog name, file path, or inline polynomial text
    int nvars = 0;          // ambient variable count override (0 = infer)
    int k = -1;             // flag parameter (check-eqn)
    int n = 0;              // size parameter (characters, gct)
    std::string lambda;     // partition, e.g. "2,1"
    std::string cycle;      // cycle type, e.g. "3"
    bool classify = false;
    bool cfs_dim = false;
    std::string check;      // curve | stabilizer | kernel | tangent | dcbound
    std::size_t trials = 8;
    std::vector<std::uint64_t> primes = {10007, 32003};
    std::uint64_t seed = 0;
};

struct Report {
    bool pass = true;
    nlohmann::ordered_json doc;
    std::string text() const { return doc.dump(2); }
};

struct LoadedPoly {
    MultiPoly poly;
    std::string name;
};
LoadedPoly load_poly(const std::string& spec, int nvars = 0);

Report run_dual_dim(const RunConfig& cfg);
Report run_check_eqn(const RunConfig& cfg);
Report run_characters(const RunConfig& cfg);
Report run_gct(const RunConfig& cfg);

} // namespace dualvar
