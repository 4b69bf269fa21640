#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "deer_cli.hpp"
#include "support/oracles.hpp"

using namespace deer;

namespace {
  struct result {
    int         code;
    std::string out;
    std::string err;
  };

  result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // Compares against tests/golden/<name>.json; DEER_UPDATE_GOLDEN=1 rewrites.
  void check_golden(std::string const& name, std::vector<std::string> const& args,
                    int expected_code = 0) {
    auto r = run(args);
    INFO(name << ": " << r.err);
    CHECK(r.code == expected_code);
    auto const path = std::filesystem::path(DEER_GOLDEN_DIR) / (name + ".json");
    if (std::getenv("DEER_UPDATE_GOLDEN") != nullptr) {
      std::ofstream(path) << r.out;
      return;
    }
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    auto const want = nlohmann::json::parse(ss.str());
    auto const got  = nlohmann::json::parse(r.out);
    CHECK(got == want);
  }

  std::size_t error_offset(std::function<void()> const& f) {
    try {
      f();
    } catch (parse_error const& e) {
      return e.offset();
    }
    return std::string::npos;
  }
}  // namespace

TEST_CASE("word syntax", "[cli]") {
  deer_params p{2, 2, 3};
  CHECK(parse_deer("t[1] t[0]", p).letters == word{T(1), T(0)});
  CHECK(parse_deer("z^-2 t[-3]^2 s3^-1", p).letters
        == word{Z(-1), Z(-1), T(-3), T(-3), S(3, -1)});
  CHECK(parse_deer("", p).letters.empty());
  CHECK(parse_deer(" 1 ", p).letters.empty());
  CHECK(parse_deer("t[1]*t[0].s3", p).letters == word{T(1), T(0), S(3)});
  CHECK(parse_artin("a1^-1 a2 a1", 4) == braid_word(4, {{1, -1}, {2, 1}, {1, 1}}));
  CHECK(parse_atilde("s1 z s3^-1", p).letters == word{S(1), Z(), S(3, -1)});

  CHECK(error_offset([&] { (void)parse_deer("t[x]", p); }) == 2);
  CHECK(error_offset([&] { (void)parse_deer("t[1", p); }) == 3);
  CHECK(error_offset([&] { (void)parse_deer("s3 q", p); }) == 3);
  CHECK(error_offset([&] { (void)parse_deer("s3 s9", p); }) == 3);
  CHECK(error_offset([&] { (void)parse_deer("s2", p); }) == 0);
  CHECK(error_offset([&] { (void)parse_deer("t[0]^", p); }) == 5);
  CHECK(error_offset([&] { (void)parse_artin("a1 a4", 4); }) == 3);
  CHECK(error_offset([&] { (void)parse_artin("b1", 4); }) == 0);
  CHECK(error_offset([&] { (void)parse_atilde("s0", p); }) == 0);
}

TEST_CASE("print and parse round-trip", "[cli]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    deer_params p{2, 1 + trial % 3, 3 + trial % 3};
    auto        w = oracle::random_deer_word(rng, p, 10, 20);
    CHECK(parse_deer(print(w.letters), p).letters == w.letters);
    auto b = oracle::random_braid(rng, p.r + 1, 12);
    CHECK(parse_artin(to_string(b), p.r + 1) == b);
    word a;
    for (int k = 0; k < trial % 7; ++k) {
      a.push_back(k % 3 == 0 ? Z(k % 2 ? -1 : 1) : S(1 + k % p.r, k % 2 ? 1 : -1));
    }
    CHECK(parse_atilde(print(a), p).letters == a);
  }
}

TEST_CASE("presentation files", "[cli]") {
  auto const text = "# two strands of B+(oo,oo,2)\n"
                    "generators t[-2..2]\n"
                    "boundary t[-2]\n"
                    "t[0] t[-1] = t[1] t[0]   # Q1\n"
                    "t[1] t[0] = t[2] t[1]\n"
                    "t[0] t[-1] = t[2] t[1]\n"
                    "t[-1] t[-2] = t[0] t[-1]\n"
                    "t[-1] t[-2] = t[1] t[0]\n"
                    "t[-1] t[-2] = t[2] t[1]\n";
  auto p = parse_presentation(text);
  CHECK(p.generators().size() == 5);
  CHECK(p.relations().size() == 6);
  CHECK(p.is_boundary(T(-2)));
  CHECK(p.is_right_complemented());
  CHECK(monoid_equal<letter>({T(2), T(1)}, {T(0), T(-1)}, p) == verdict::equal);
  auto again = parse_presentation(print_presentation(p));
  CHECK(again.generators() == p.generators());
  CHECK(again.relations() == p.relations());
  CHECK(again.boundary() == p.boundary());
  CHECK(parse_presentation("generators s3..s5 z\ns3 s5 = s5 s3\n").generators()
        == std::vector<letter>{S(3), S(4), S(5), Z()});

  std::size_t off = 0;
  try {
    (void)parse_presentation("generators t[0..1]\nt[1] t[x] = t[0] t[1]\n");
  } catch (parse_error const& e) {
    off = e.offset();
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(off == 7);
  CHECK_THROWS_AS(parse_presentation("t[0] = t[1]\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation("generators t[0..1]\nt[0]^-1 = t[1]\n"), parse_error);

  auto path = std::filesystem::temp_directory_path() / "deer_cli_pres.txt";
  std::ofstream(path) << text;
  auto r = run({"reverse", "--pres-file", path.string(), "t[1]", "t[0]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("completed") != std::string::npos);
  // Words leaving the window make some triples inconclusive, never failing.
  r = run({"cube", "--json", "--pres-file", path.string()});
  CHECK(nlohmann::json::parse(r.out)["failures"].empty());
  std::filesystem::remove(path);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"eq", "--e", "2", "--r", "3", "t[1] t[0]", "t[2] t[1]"}).code == 0);
  CHECK(run({"eq", "--r", "3", "t[0]", "t[1]"}).code == 1);
  CHECK(run({"eq", "--r", "3", "t[0]"}).code == 2);
  CHECK(run({"embed", "--r", "3", "t[x]"}).code == 2);
  CHECK(run({"embed", "--r", "3", "t[x]"}).err.find("offset 2") != std::string::npos);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"order", "--d", "1"}).code == 2);
  CHECK(run({"verify", "--pres", "nope"}).code == 2);
  CHECK(run({"member", "--e", "2", "a1^2"}).code == 1);
  CHECK(run({"member", "--e", "2", "a1^4"}).code == 0);
  CHECK(run({"rewrite", "--e", "2", "a1^2"}).code == 1);
  CHECK(run({"wd", "a2"}).code == 0);
  CHECK(run({"wd", "a1"}).code == 1);
  CHECK(run({"central", "--e", "2", "--r", "2", "z^2 t[1] t[0] t[1] t[0]"}).code == 0);
  CHECK(run({"central", "--e", "2", "--r", "2", "z"}).code == 1);
  CHECK(run({"lemma", "--name", "twist", "--r", "4"}).code == 0);
  CHECK(run({"lemma", "--name", "prefix_power", "--k", "0"}).code == 2);
  CHECK(run({"divisors", "t[0]^-1"}).code == 2);
  // Fuel from the flag and from the environment.
  CHECK(run({"reverse", "--fuel", "1", "t[1] t[2]", "t[0] t[3]"}).code == 1);
  setenv("DEER_FUEL", "1", 1);
  auto r = run({"reverse", "--json", "t[1] t[2]", "t[0] t[3]"});
  unsetenv("DEER_FUEL");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["status"] == "fuel_exhausted");
  CHECK(run({"reverse", "t[1] t[2]", "t[0] t[3]"}).code == 0);
}

TEST_CASE("parameter prefix", "[cli]") {
  auto a = run({"order", "--json", "2:2:3"});
  auto b = run({"order", "--json", "--d", "2", "--e", "2", "--r", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["order"] == 192);
}

TEST_CASE("golden JSON output", "[cli]") {
  check_golden("eq", {"eq", "--json", "--e", "2", "--r", "3", "t[1] t[0]", "t[2] t[1]"});
  check_golden("nf", {"nf", "--json", "--r", "3", "s3 t[1] t[0]"});
  check_golden("embed", {"embed", "--json", "--e", "2", "--r", "3", "z t[1] s3^-1"});
  check_golden("rewrite", {"rewrite", "--json", "--e", "2", "--r", "3", "a1^4 a2 a1^-2 a2 a1^2"});
  check_golden("semidirect", {"semidirect", "--json", "--e", "2", "t[1] z t[0] z^-1 s3"});
  check_golden("periodic_lambda", {"periodic", "--json", "--e", "2", "--r", "3",
                                   "z s3 t[2] s3 t[1]"});
  check_golden("periodic_t0", {"periodic", "--json", "--e", "2", "--r", "3", "t[0]"});
  check_golden("center", {"center", "--json", "2:2:3"});
  check_golden("verify_new_deer", {"verify", "--json", "--pres", "new_deer", "--e", "2",
                                   "--r", "3", "--window", "4"});
  check_golden("verify_cp_eer", {"verify", "--json", "--pres", "cp_eer", "2:3:3"});
  check_golden("catalog_type_b", {"catalog", "--json", "--pres", "type_b", "--r", "3"});
  check_golden("divisors_lambda", {"divisors", "--json", "--r", "2", "--window", "2",
                                   "t[1] t[0]"});
  check_golden("reverse", {"reverse", "--json", "--r", "3", "--trace", "s3 t[1]", "t[0]"});
  check_golden("lcm", {"lcm", "--json", "--r", "4", "s3", "s4"});
  check_golden("cube_cyclic", {"cube", "--json", "--cyclic", "--e", "3", "--r", "3"});
  check_golden("order", {"order", "--json", "2:3:2"});
  check_golden("degrees", {"degrees", "--json", "2:2:4"});
  check_golden("regular", {"regular", "--json", "--e", "2", "--r", "4"});
  check_golden("lemma_shifted", {"lemma", "--json", "--name", "shifted", "--r", "3", "--k",
                                 "-2"});
}
