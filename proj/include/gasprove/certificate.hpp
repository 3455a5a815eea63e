#ifndef GASPROVE_CERTIFICATE_HPP
#define GASPROVE_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gasprove/positivity.hpp"

namespace gasprove {

/// Rationals are written as "p/q" strings.
nlohmann::json to_json(const ProofCertificate& cert);

struct ReplayReport {
    bool ok = true;
    std::size_t nodes_checked = 0;
    std::vector<std::string> problems;
};

/// Re-derives every node polynomial from the input, compares digests,
/// re-runs each node's tests and checks the verdict against the tree.
ReplayReport replay(const nlohmann::json& cert);

} // namespace gasprove

#endif // GASPROVE_CERTIFICATE_HPP
