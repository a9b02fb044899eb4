#pragma once

#include <json.hpp>

#include "bidisc/oracle.hpp"
#include "bidisc/regions.hpp"
#include "bidisc/solver.hpp"

namespace bidisc {

inline constexpr const char* kCertificateSchema = "bidisc-certificate/1";
inline constexpr const char* kSandwichSchema = "bidisc-sandwich/1";

/// Complex numbers are [re, im]; bidisc points are [[re, im], [re, im]].
nlohmann::json to_json(cplx z);
nlohmann::json to_json(const BidiscPoint& x);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Sandwich& s);
nlohmann::json to_json(const Classification& c);

std::string_view to_string(CertificateStatus s) noexcept;

}  // namespace bidisc
