#include "bidisc/serialize.hpp"

namespace bidisc {

using nlohmann::json;

namespace {

// NaN and infinities have no JSON encoding; they become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string_view to_string(CertificateStatus s) noexcept {
  return s == CertificateStatus::Valid ? "VALID" : "FALLBACK";
}

json to_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json to_json(const BidiscPoint& x) { return json::array({to_json(x.x1), to_json(x.x2)}); }

json to_json(const Classification& c) {
  return {{"region", std::string(to_string(c.region))}, {"margin", num(c.margin)}};
}

json to_json(const Certificate& cert) {
  json j;
  j["schema"] = kCertificateSchema;
  j["region"] = std::string(to_string(cert.region));
  j["status"] = std::string(to_string(cert.status));
  j["valid"] = cert.valid();
  j["value_log"] = num(cert.value);
  j["value_modulus"] = num(std::exp(cert.value));
  j["base_point"] = to_json(cert.base);
  j["normalized_poles"] = {{"p", to_json(cert.poles.p)}, {"q", to_json(cert.poles.q)}};
  j["orientation"] = {{"swap_coordinates", cert.orientation.swap_coordinates},
                      {"swap_poles", cert.orientation.swap_poles}};

  if (const auto* g = std::get_if<GeodesicDisc>(&cert.disc)) {
    j["disc"] = {{"family", "two_geodesic"},
                 {"arg_p", to_json(g->arg_p)},
                 {"arg_q", to_json(g->arg_q)},
                 {"interpolant",
                  {{"node1", to_json(g->psi.node1())}, {"target1", to_json(g->psi.target1())},
                   {"eta", to_json(g->psi.eta())}}}};
  } else if (const auto* e = std::get_if<ExtremalDisc>(&cert.disc)) {
    const ExtremalParams& P = e->params;
    j["disc"] = {{"family", "three_extremal"},
                 {"alpha", to_json(P.alpha)},
                 {"beta", to_json(P.beta)},
                 {"c", to_json(P.c)},
                 {"omega", to_json(P.omega)},
                 {"t", num(P.t)},
                 {"gamma", to_json(P.gamma())},
                 {"arg_p", to_json(e->arg_p)},
                 {"arg_q", to_json(e->arg_q)}};
  } else {
    j["disc"] = nullptr;
  }

  if (const auto* f = std::get_if<CoordinateLeftInverse>(&cert.left_inverse)) {
    j["left_inverse"] = {{"family", "coordinate_blaschke"}, {"zeros", json::array({to_json(f->a), to_json(f->b)})}};
  } else if (const auto* L = std::get_if<LeftInverse>(&cert.left_inverse)) {
    j["left_inverse"] = {{"family", "rational_inner"},
                         {"t", num(L->t)},
                         {"omega", to_json(L->omega)},
                         {"tau", to_json(L->tau)},
                         {"shift", to_json(L->shift)}};
  } else {
    j["left_inverse"] = nullptr;
  }

  const Residuals& r = cert.residuals;
  j["residuals"] = {{"interp_p", num(r.interp_p)}, {"interp_q", num(r.interp_q)}, {"vanish_p", num(r.vanish_p)},
                    {"vanish_q", num(r.vanish_q)}, {"value_gap", num(r.value_gap)}, {"max", num(r.max())}};

  if (cert.fallback) {
    const FallbackRecord& f = *cert.fallback;
    json regions = json::array();
    for (const Region reg : f.regions) regions.push_back(std::string(to_string(reg)));
    j["fallback"] = {{"delta", num(f.delta)},
                     {"values", json::array({num(f.values[0]), num(f.values[1]), num(f.values[2]), num(f.values[3])})},
                     {"regions", regions},
                     {"extrapolated", num(f.extrapolated)},
                     {"spread", num(f.spread)}};
  } else {
    j["fallback"] = nullptr;
  }

  j["stats"] = {{"seed", cert.stats.seed},
                {"orientation_tries", cert.stats.orientation_tries},
                {"starts_run", cert.stats.starts_run},
                {"iterations", cert.stats.iterations}};
  return j;
}

json to_json(const Sandwich& s) {
  auto bound = [](const Bound& b) {
    return json{{"value", num(b.value)}, {"family", b.family}, {"params", b.params}, {"residual", num(b.residual)}};
  };
  return {{"schema", kSandwichSchema},
          {"c_lower", num(s.c_lower())},
          {"l_upper", num(s.l_upper())},
          {"width", num(s.width())},
          {"lower", bound(s.lower)},
          {"upper", bound(s.upper)}};
}

}  // namespace bidisc
