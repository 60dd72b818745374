#include "repstrata/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace repstrata {

namespace {

using nlohmann::json;

// json's default object storage is a sorted map, so iteration order is
// already canonical; only the float format needs pinning.
void canonical_dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        canonical_dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        canonical_dump(v, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

std::string canonical(const json& j) {
  std::string out;
  canonical_dump(j, out);
  out += '\n';
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string representation_to_json(const Representation& rep) {
  json j;
  j["genus"] = rep.genus;
  json images = json::array();
  for (const auto& g : rep.images) images.push_back({g.w, g.x, g.y, g.z});
  j["images"] = images;
  j["residual"] = relator_residual(rep);
  j["stratum"] = to_string(orbit_type(rep));
  return canonical(j);
}

Representation representation_from_json(const std::string& text) {
  const json j = json::parse(text);
  Representation rep;
  rep.genus = j.at("genus").get<int>();
  if (rep.genus < 1) throw std::invalid_argument("genus must be >= 1");
  const auto& images = j.at("images");
  if (static_cast<int>(images.size()) != 2 * rep.genus)
    throw std::invalid_argument("expected 2*genus images");
  for (const auto& q : images) {
    if (q.size() != 4) throw std::invalid_argument("image is not a quaternion");
    rep.images.push_back(Quaternion{q[0].get<double>(), q[1].get<double>(),
                                    q[2].get<double>(), q[3].get<double>()});
  }
  return rep;
}

std::string cohomology_to_json(const Representation& rep,
                               const CohomologyData& data,
                               const LambdaAnalysis& lambda, int pairing_rank) {
  json j;
  j["genus"] = rep.genus;
  j["stratum"] = to_string(data.stratum);
  j["h0"] = data.h0_dim;
  j["h1"] = data.h1_dim;
  j["h2"] = data.h2_dim;
  j["pairing_rank"] = pairing_rank;
  j["lambda"] = {{"kernel", lambda.kernel_dim},
                 {"image", lambda.image_dim},
                 {"isomorphism", lambda.is_isomorphism}};
  j["spectral_gaps"] = {{"h0", data.h0_report.gap},
                        {"z1", data.z1_report.gap},
                        {"b1", data.b1_report.gap}};
  return canonical(j);
}

std::string bracket_table_to_json(const BracketTable& table) {
  json j;
  j["generators"] = table.names;
  json entries = json::array();
  const int n = static_cast<int>(table.names.size());
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      json e;
      e["lhs"] = table.names[i];
      e["rhs"] = table.names[k];
      e["ambient"] = table.ambient[i][k].to_string();
      if (table.in_generators[i][k])
        e["in_generators"] = table.in_generators[i][k]->to_string();
      else
        e["in_generators"] = nullptr;
      entries.push_back(e);
    }
  }
  j["entries"] = entries;
  return canonical(j);
}

std::string bracket_table_to_text(const BracketTable& table) {
  std::ostringstream out;
  const int n = static_cast<int>(table.names.size());
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      out << "{" << table.names[i] << "," << table.names[k] << "} = ";
      if (table.in_generators[i][k])
        out << table.in_generators[i][k]->to_string();
      else
        out << table.ambient[i][k].to_string();
      out << "\n";
    }
  }
  return out.str();
}

std::string structure_constants_to_json(const StructureConstants& sc) {
  json j;
  j["names"] = sc.names;
  json nz = json::array();
  const int n = sc.dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (sc.c[i][k][l] != 0)
          nz.push_back({i, k, l, to_string(sc.c[i][k][l])});
  j["nonzero"] = nz;
  const auto sig = sc.killing_signature();
  j["killing_signature"] = {{"positive", sig.first}, {"negative", sig.second}};
  return canonical(j);
}

std::string stratum_rows_to_json(const std::vector<StratumRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["genus"] = r.genus;
    j["stratum"] = to_string(r.stratum);
    j["h0"] = r.h0;
    j["h1"] = r.h1;
    j["h2"] = r.h2;
    j["lambda_kernel"] = r.lambda_kernel;
    j["lambda_image"] = r.lambda_image;
    j["poisson_rank"] = r.poisson_rank;
    j["tangent_dim"] = r.tangent_dim;
    arr.push_back(j);
  }
  return canonical(arr);
}

std::string stratum_rows_to_csv(const std::vector<StratumRow>& rows) {
  std::ostringstream out;
  out << "genus,stratum,h0,h1,h2,lambda_kernel,lambda_image,poisson_rank,"
         "tangent_dim\n";
  for (const auto& r : rows)
    out << r.genus << "," << to_string(r.stratum) << "," << r.h0 << "," << r.h1
        << "," << r.h2 << "," << r.lambda_kernel << "," << r.lambda_image
        << "," << r.poisson_rank << "," << r.tangent_dim << "\n";
  return out.str();
}

}  // namespace repstrata
