#include <doctest.h>

#include <random>

#include "rhomax/catalog.hpp"
#include "rhomax/parser.hpp"

using namespace rhomax;
using namespace rhomax::catalog;
using nlohmann::json;

namespace {

const std::vector<Entry>& builtin() {
  static const std::vector<Entry> e = load_catalog_file(RHOMAX_CATALOG_PATH);
  return e;
}

json minimal_entry() {
  return json::parse(R"({
    "id": "E",
    "model": {"kind": "hyperelliptic", "f": "x^3-1", "vars": ["x", "y"]},
    "claim": {"factors": [{"disc": -3, "mult": 1}]},
    "bad_primes": [2, 3]
  })");
}

std::string load_error(const json& doc) {
  try {
    load_catalog(doc);
  } catch (const CatalogError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("built-in catalog") {
  const auto& es = builtin();
  std::vector<std::string> ids;
  for (const auto& e : es) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{"Ex1[t=0]", "Ex1[t=1]", "Ex1[t=3]", "Ex2", "Ex3[t=0]", "Ex3[t=1]", "Ex4", "C6",
                                        "C6/alpha", "C6/beta", "C6/gamma", "C6/delta", "X8", "S6", "S4"});
  std::size_t symbolic = 0;
  for (const auto& e : es) symbolic += e.symbolic_only();
  CHECK(symbolic == 2);
  const auto& ex1 = find_entry(es, "Ex1[t=3]");
  CHECK(ex1.params.at("t") == 3);
  CHECK(ex1.bad_primes == std::set<std::uint64_t>{2, 3, 5});
  CHECK(ex1.claim->exact);
  CHECK_FALSE(ex1.claim->factors[0].disc.has_value());
  CHECK(find_entry(es, "Ex1[t=0]").claim->factors[0].disc == -12);
  CHECK(find_entry(es, "Ex4").find_map("f")->expect_pass == false);
  CHECK(find_entry(es, "C6").summands.size() == 3);
  CHECK_THROWS_AS(find_entry(es, "Ex9"), CatalogError);
}

TEST_CASE("load_catalog edge cases") {
  CHECK(load_catalog(json::object()).empty());
  CHECK(load_catalog(json::parse(R"({"entries": []})")).empty());
  json doc{{"entries", json::array({minimal_entry()})}};
  REQUIRE(load_catalog(doc).size() == 1);

  auto bad = minimal_entry();
  bad["claim"]["factors"][0]["mult"] = 2;
  CHECK(load_error({{"entries", json::array({bad})}}).find("genus is 1") != std::string::npos);

  bad = minimal_entry();
  bad["model"]["f"] = "x^3+";
  CHECK(load_error({{"entries", json::array({bad})}}).find("$.entries[0].model.f") != std::string::npos);

  bad = minimal_entry();
  bad["maps"] = json::parse(R"([{"name": "m", "target": "nowhere", "components": ["x", "y"]}])");
  CHECK(load_error({{"entries", json::array({bad})}}).find("chart") != std::string::npos);

  bad = minimal_entry();
  bad["chart"] = json::parse(R"({"basis": "hyperelliptic", "f": "x^3-1", "vars": ["x", "y"]})");
  bad["maps"] = json::parse(R"([{"name": "m", "target": "nowhere", "components": ["x", "y"]}])");
  CHECK(load_error({{"entries", json::array({bad})}}).find("unknown target 'nowhere'") != std::string::npos);

  bad = minimal_entry();
  bad["bad_primes"] = json::array({4});
  CHECK(load_error({{"entries", json::array({bad})}}).find("not prime") != std::string::npos);

  bad = minimal_entry();
  bad.erase("bad_primes");
  CHECK(load_error({{"entries", json::array({bad})}}).find("bad primes") != std::string::npos);

  bad = minimal_entry();
  bad["claim"]["factors"][0]["disc"] = -5;
  CHECK(load_error({{"entries", json::array({bad})}}).find("discriminant") != std::string::npos);

  CHECK(load_error({{"entries", json::array({minimal_entry(), minimal_entry()})}}).find("duplicate") != std::string::npos);
  CHECK_FALSE(load_error(json::array()).empty());
}

TEST_CASE("property: built-in multiplicities sum to the genus") {
  for (const auto& e : builtin()) {
    if (!e.claim) continue;
    unsigned total = 0;
    for (const auto& f : e.claim->factors) total += f.mult;
    CHECK(total == curves::genus(*e.model));
  }
}
