#include "ultralen/acceptance.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/lab.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace ul;
using namespace ul::lab;

namespace {

Errc code_of(const std::string& name, const Config& c) {
  try {
    run(name, c);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Ok;
}

}  // namespace

TEST_CASE("config parsing and merging") {
  auto c = Config::parse("# header\nn = 3..9\nseed=0x10  # trailing\n\nmode=random\nmode=exhaustive\n");
  CHECK(c.range("n", {0, 0}) == std::pair{3, 9});
  CHECK(c.seed(5) == 16);
  CHECK(c.str("mode", "") == "exhaustive");
  CHECK(c.integer("missing", 42) == 42);
  auto o = Config::parse("n=7\nflag=yes\n");
  c.merge(o);
  CHECK(c.range("n", {0, 0}) == std::pair{7, 7});
  CHECK(c.flag("flag", false));
  CHECK(c.seed(5) == 16);
  CHECK_THROWS_AS(Config::parse("novalue\n"), Error);
  CHECK_THROWS_AS(Config::parse("x=abc").integer("x", 0), Error);
  CHECK_THROWS_AS(Config::parse("x=maybe").flag("x", false), Error);
  CHECK_THROWS_AS(Config::parse("seed=-").seed(1), Error);
}

TEST_CASE("unknown keys and experiments") {
  CHECK(code_of("width", Config::parse("group=A5\nbogus=1")) == Errc::ConfigInvalid);
  CHECK(code_of("no-such-experiment", Config{}) == Errc::ConfigInvalid);
  CHECK(code_of("sym-lengths", Config::parse("format=xml")) == Errc::ConfigInvalid);
  CHECK(code_of("strong-color", Config::parse("mode=exhaustive\nn=10")) == Errc::ConfigInvalid);
  auto names = experiment_names();
  CHECK(names.size() == 14);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("same seed gives identical reports") {
  auto c = Config::parse("n=30\nsamples=5\nseed=77");
  auto a = run("strong-color", c), b = run("strong-color", c);
  CHECK(a.text == b.text);
  CHECK(a.ok);
  CHECK(a.format == "csv");
  CHECK(a.text.find("schema_version=1") != std::string::npos);
  auto d = run("strong-color", Config::parse("n=30\nsamples=5\nseed=78"));
  CHECK(d.text != a.text);

  auto l = Config::parse("q=4\nn=3\nsamples=20\nseed=3");
  CHECK(run("linear-lengths", l).text == run("linear-lengths", l).text);

  auto j = Config::parse("n=4..9\nformat=json");
  auto ja = run("sym-lengths", j), jb = run("sym-lengths", j);
  CHECK(ja.text == jb.text);
  CHECK(ja.format == "json");
  auto parsed = nlohmann::json::parse(ja.text);
  CHECK(parsed["schema_version"] == kSchemaVersion);
  auto csv = run("sym-lengths", Config::parse("n=4..9"));
  long long lines = std::count(csv.text.begin(), csv.text.end(), '\n') - 2;
  CHECK(parsed["rows"].get<long long>() == lines);
  CHECK(lines > 6);
}

TEST_CASE("acceptance filters") {
  CHECK(acc::select("") .size() == static_cast<size_t>(acc::kCriteria));
  auto k = acc::select("kyfan");
  REQUIRE(k.size() == 1);
  CHECK(acc::criterion_name(k[0]).find("kyfan") != std::string::npos);
  CHECK(acc::select("3,5") == std::vector<int>{3, 5});
  CHECK(acc::select("nothing-matches-this").empty());
  auto r = run("acceptance", Config::parse("filter=nothing-matches-this"));
  CHECK(r.ok);
  CHECK(r.text.find("criterion") == std::string::npos);
}
