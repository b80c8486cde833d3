#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sct/verify.hpp"

using namespace sct;

TEST_CASE("verification run covers the recorded claims and passes") {
  Session s;
  auto claims = run_paper_verification(s, 15);

  std::set<std::string> seen;
  for (const auto& c : claims) seen.insert(c.id);
  for (const auto& id : claim_manifest()) {
    INFO(id);
    CHECK(seen.count(id) == 1);
  }
  for (const auto& id : seen) {
    INFO(id);
    CHECK(std::find(claim_manifest().begin(), claim_manifest().end(), id) !=
          claim_manifest().end());
  }

  std::set<std::tuple<int, std::string, std::string>> keys;
  for (const auto& c : claims) {
    CHECK(keys.insert({c.n, c.id, c.params}).second);
    INFO(c.id << " n=" << c.n << " " << c.params << ": " << c.detail);
    CHECK(c.pass);
  }

  // sorted by (n, id, params)
  for (std::size_t i = 1; i < claims.size(); ++i) {
    auto ka = std::tie(claims[i - 1].n, claims[i - 1].id,
                       claims[i - 1].params);
    auto kb = std::tie(claims[i].n, claims[i].id, claims[i].params);
    CHECK(ka < kb);
  }
}

TEST_CASE("reports are deterministic") {
  Session s1;
  Session s2;
  auto a = run_paper_verification(s1, 10);
  auto b = run_paper_verification(s2, 10);
  CHECK(render_text_report(a, 10) == render_text_report(b, 10));
  CHECK(render_json_report(a, 10).dump(1) ==
        render_json_report(b, 10).dump(1));
  auto j = render_json_report(a, 10);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"] == static_cast<int>(a.size()));
}

TEST_CASE("range guard") {
  Session s;
  CHECK_THROWS_AS(run_paper_verification(s, 5), Error);
  CHECK_THROWS_AS(run_paper_verification(s, 31), Error);
}

TEST_CASE("session memoizes and prefetch is equivalent") {
  Session seq;
  const Lattice& a = seq.lattice(8);
  const Lattice& b = seq.lattice(8);
  CHECK(&a == &b);

  Session par;
  par.prefetch(8, 3);
  CHECK(par.lattice(8).size() == seq.lattice(8).size());
}
