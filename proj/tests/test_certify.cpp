#include <doctest.h>

#include <algorithm>
#include <random>

#include "gamma4/certify.hpp"
#include "test_support.hpp"

using namespace gamma4;

namespace {

InvariantRecord rec(const std::string& name, bool slice = false) {
  return {name, 0, 0, slice ? 9 : 17, slice, true, {}};
}

Certificate slice(const std::string& k) { return {SliceFact{k}, "test"}; }
Certificate known(const std::string& k, int v) { return {KnownGamma4{k, v}, "test"}; }
Certificate band(const std::string& s, int f, const std::string& t) { return {BandMove{s, f, t}, "test"}; }

ErrorCode code_of_ingest(const std::vector<Certificate>& certs, const std::vector<InvariantRecord>& census,
                         const std::vector<KnownValue>& kn = {}) {
  try {
    ingest(certs, census, kn);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;  // no error
}

}  // namespace

TEST_SUITE("certify") {
  TEST_CASE("names") {
    CHECK(normalize_name("-10_9") == "10_9");
    CHECK(normalize_name("+10_33") == "10_33");
    CHECK(normalize_name("3_1#-3_1") == "3_1#-3_1");
    CHECK(crossing_number("10_9") == 10);
    CHECK(crossing_number("11n_83") == 11);
    CHECK(crossing_number("3_1#-3_1") == 6);
    CHECK(crossing_number("0_1") == 0);
    CHECK_THROWS_AS(crossing_number("knot"), Error);
  }

  TEST_CASE("a slice knot resolves to 1") {
    const std::vector<InvariantRecord> census{rec("10_3", true)};
    const auto s = propagate(ingest(std::vector{slice("10_3")}, census, {}), {});
    const auto& b = s.knots.at("10_3");
    CHECK(b.lower == 1);
    CHECK(b.upper == std::optional<int>(1));
    CHECK(b.resolved());
  }

  TEST_CASE("band move to a slice knot gives upper bound 1") {
    const std::vector<InvariantRecord> census{rec("10_1")};
    const auto g = ingest(std::vector{band("10_1", 1, "6_1"), slice("6_1")}, census, {});
    const auto s = propagate(g, {});
    CHECK(s.knots.at("10_1").upper == std::optional<int>(1));
    CHECK(s.knots.at("10_1").resolved());
  }

  TEST_CASE("a weaker band move does not loosen a bound") {
    const std::vector<InvariantRecord> census{rec("10_1")};
    const std::vector<KnownValue> kn{{"9_1", 2}};
    const auto g1 = ingest(std::vector{band("10_1", 1, "9_1")}, census, kn);
    CHECK(propagate(g1, {}).knots.at("10_1").upper == std::optional<int>(3));
    const auto g2 = ingest(std::vector{band("10_1", 1, "9_1"), band("10_1", 1, "6_1"), slice("6_1")}, census, kn);
    CHECK(propagate(g2, {}).knots.at("10_1").upper == std::optional<int>(1));
  }

  TEST_CASE("obstruction plus band move to a gamma4-1 knot resolves to 2") {
    const std::vector<InvariantRecord> census{rec("10_9")};
    const std::vector<KnownValue> kn{{"6_2", 1}};
    const auto g = ingest(std::vector{band("-10_9", 1, "6_2")}, census, kn);
    const auto s = propagate(g, {{"10_9", {2, {"lattice"}}}});
    const auto& b = s.knots.at("10_9");
    CHECK(b.lower == 2);
    CHECK(b.upper == std::optional<int>(2));
    CHECK(b.resolved());
    CHECK(derivation(s, "10_9") == std::vector<std::string>{"10_9 --band(+1)--> 6_2", "6_2: known gamma4 = 1"});
  }

  TEST_CASE("a knot without certificates stays unresolved") {
    const std::vector<InvariantRecord> census{rec("10_2")};
    const auto s = propagate(ingest({}, census, {}), {});
    CHECK_FALSE(s.knots.at("10_2").resolved());
    CHECK_FALSE(s.knots.at("10_2").upper.has_value());
    const auto r = resolve_census(s);
    CHECK(r.unresolved == std::vector<std::string>{"10_2"});
  }

  TEST_CASE("planted band move to the unknot contradicts an obstruction") {
    const std::vector<InvariantRecord> census{rec("10_2"), rec("10_3", true)};
    const auto g = ingest(std::vector{band("10_2", 0, "0_1"), slice("10_3")}, census, {});
    try {
      propagate(g, {{"10_2", {2, {"lattice"}}}});
      FAIL("expected Inconsistent");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Inconsistent);
      CHECK(std::string(e.what()).find("10_2") != std::string::npos);
    }
  }

  TEST_CASE("ingestion errors") {
    const std::vector<InvariantRecord> census{rec("10_1"), rec("10_3", true)};
    CHECK(code_of_ingest({band("10_1", 1, "7_7")}, census) == ErrorCode::UnknownKnot);
    CHECK(code_of_ingest({band("10_99", 1, "0_1")}, census) == ErrorCode::UnknownKnot);
    CHECK(code_of_ingest({band("10_1", 2, "0_1")}, census) == ErrorCode::InvalidCertificate);
    CHECK(code_of_ingest({band("10_1", 1, "10_1")}, census) == ErrorCode::InvalidCertificate);
    CHECK(code_of_ingest({known("6_2", 1), known("6_2", 2)}, census) == ErrorCode::ConflictingKnownValue);
    CHECK(code_of_ingest({slice("6_1"), known("6_1", 2)}, census) == ErrorCode::ConflictingKnownValue);
    CHECK(code_of_ingest({slice("10_1")}, census) == ErrorCode::ConflictingKnownValue);
    CHECK(code_of_ingest({slice("6_1"), known("6_1", 1)}, census) == ErrorCode::ParseError);
  }

  TEST_CASE("crossing-number screen") {
    const std::vector<InvariantRecord> census{rec("10_1"), rec("10_2")};
    // A target with more crossings must be in the known table.
    CHECK(code_of_ingest({slice("12a_1"), band("10_1", 1, "12a_1")}, census) == ErrorCode::ParseError);
    CHECK(code_of_ingest({band("10_1", 1, "11n_83")}, census, {{"11n_83", 1}}) == ErrorCode::ParseError);
    CHECK(code_of_ingest({band("10_1", 1, "10_2")}, census) == ErrorCode::ParseError);
  }

  TEST_CASE("propagation is idempotent and independent of certificate order") {
    const auto entries = testing_support::bundled_knots();
    std::vector<InvariantRecord> census;
    for (const auto& e : entries) census.push_back(e.record);
    auto certs = read_certificates(testing_support::data_dir / "certs.json");
    const auto kn = read_known(testing_support::data_dir / "known.csv");
    std::map<std::string, LowerBound> lower{{"10_9", {2, {"x"}}}, {"10_2", {2, {"y"}}}};

    const auto g = ingest(certs, census, kn);
    const auto ref = propagate(g, lower);
    CHECK(propagate(g, lower) == ref);

    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
      std::shuffle(certs.begin(), certs.end(), rng);
      CHECK(propagate(ingest(certs, census, kn), lower) == ref);
    }
  }

  TEST_CASE("every resolved upper bound has a replayable chain") {
    std::vector<InvariantRecord> census;
    for (const auto& e : testing_support::bundled_knots()) census.push_back(e.record);
    const auto certs = read_certificates(testing_support::data_dir / "certs.json");
    const auto kn = read_known(testing_support::data_dir / "known.csv");
    const auto s = propagate(ingest(certs, census, kn), {});
    for (const auto& [name, b] : s.knots) {
      REQUIRE(b.upper);
      const auto chain = derivation(s, name);
      REQUIRE(!chain.empty());
      // Replay: each band step adds one to the seed at the end of the chain.
      const std::string& last = chain.back();
      const std::string seed = last.substr(0, last.find(':'));
      const int steps = static_cast<int>(chain.size()) - 1;
      CHECK(std::max(1, s.surface.at(seed) + steps) == *b.upper);
    }
  }

  TEST_CASE("resolve_census compares with expected values") {
    const std::vector<InvariantRecord> census{rec("10_1"), rec("10_3", true)};
    const auto s = propagate(ingest(std::vector{slice("10_3")}, census, {}), {});
    const auto r = resolve_census(s, std::map<std::string, int>{{"10_1", 2}, {"10_3", 1}, {"10_5", 1}});
    CHECK(r.by_value.at(1) == std::vector<std::string>{"10_3"});
    CHECK(r.unresolved == std::vector<std::string>{"10_1"});
    CHECK(r.mismatches == std::vector<std::string>{"10_1", "10_5"});
  }
}
