#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "spectral.hpp"

namespace hyperalpha {

inline constexpr const char* kSchemaTag = "hyperalpha/1";

inline void to_json(nlohmann::json& j, const VertexSubset& s) {
    j = nlohmann::json{{"members", s.members}, {"kind", to_string(s.kind)}};
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{{"bound", r.bound},
                       {"alpha", r.alpha},
                       {"subset", nullptr},
                       {"params", r.params},
                       {"value", r.value},
                       {"rho_lower", r.rho_lower},
                       {"rho_upper", r.rho_upper},
                       {"slack", r.slack},
                       {"holds", r.holds}};
    if (r.subset) j["subset"] = *r.subset;
}

inline void to_json(nlohmann::json& j, const SpectralResult& r) {
    j = nlohmann::json{{"rho", r.rho},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"eigvec", r.eigvec.entries()},
                       {"residual", r.residual},
                       {"iterations", r.iterations},
                       {"converged", r.converged}};
}

inline void to_json(nlohmann::json& j, const ProductRhoReport& r) {
    j = nlohmann::json{{"degree_h", r.degree_h},
                       {"rho_g", r.rho_g},
                       {"rho_product", r.rho_product},
                       {"expected", r.expected},
                       {"diff", r.diff},
                       {"evec_residual", r.evec_residual},
                       {"scale", r.scale},
                       {"tol", r.tol},
                       {"rho_ok", r.rho_ok},
                       {"evec_ok", r.evec_ok},
                       {"passed", r.passed}};
}

inline void to_json(nlohmann::json& j, const LaplacianTransportReport& r) {
    j = nlohmann::json{{"degree_h", r.degree_h},
                       {"lambda_in", r.lambda_in},
                       {"residual_in", r.residual_in},
                       {"lambda_out", r.lambda_out},
                       {"residual_out", r.residual_out},
                       {"tol", r.tol},
                       {"passed", r.passed}};
}

}  // namespace hyperalpha
