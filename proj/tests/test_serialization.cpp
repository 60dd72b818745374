#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repstrata/serialization.hpp"
#include "repstrata/verify.hpp"

using namespace repstrata;

TEST_CASE("representation JSON round trip") {
  const Representation rep = solve_flat(2, Stratum::Z, 42);
  const std::string text = representation_to_json(rep);
  const Representation back = representation_from_json(text);
  CHECK(back.genus == rep.genus);
  REQUIRE(back.images.size() == rep.images.size());
  for (std::size_t i = 0; i < rep.images.size(); ++i)
    CHECK(quat_distance(back.images[i], rep.images[i]) == 0.0);
  // serialization is deterministic
  CHECK(representation_to_json(back) == text);
}

TEST_CASE("representation JSON validation") {
  CHECK_THROWS(representation_from_json("{\"genus\":2,\"images\":[]}"));
  CHECK_THROWS(representation_from_json("not json"));
}

TEST_CASE("float formatting has 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(5.1660829248775086e-11) == "5.1660829248775086e-11");
}

TEST_CASE("cohomology JSON schema") {
  const Representation rep = solve_flat(2, Stratum::T, 1);
  const CohomologyData data = compute_cohomology(rep);
  const LambdaAnalysis lam = lambda_analysis(rep, data);
  const int rank = numeric_rank(pairing_matrix(rep, data)).rank;
  const std::string j = cohomology_to_json(rep, data, lam, rank);
  CHECK(j.find("\"genus\":2") != std::string::npos);
  CHECK(j.find("\"h1\":8") != std::string::npos);
  CHECK(j.find("\"stratum\":\"T\"") != std::string::npos);
  CHECK(j.find("\"pairing_rank\":8") != std::string::npos);
  CHECK(j.find("\"kernel\":4") != std::string::npos);
}

TEST_CASE("bracket table serializations") {
  const BracketTable t = bracket_table(planar_invariants(1));
  const std::string text = bracket_table_to_text(t);
  CHECK(text.find("{x1,x2} = -4*rho") != std::string::npos);
  const std::string j = bracket_table_to_json(t);
  CHECK(j.find("\"in_generators\":\"-4*rho\"") != std::string::npos);

  const StructureConstants sc = closure_to_lie_algebra(spatial_invariants(2));
  const std::string sj = structure_constants_to_json(sc);
  CHECK(sj.find("\"killing_signature\":{\"negative\":4,\"positive\":6}") !=
        std::string::npos);
}

TEST_CASE("verification manifest is stable") {
  VerifyOptions opts;
  opts.only = "cone-relation";
  const auto r1 = run_verification(opts);
  const auto r2 = run_verification(opts);
  CHECK(manifest_json(r1) == manifest_json(r2));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].pass);
}
