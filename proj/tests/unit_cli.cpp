#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "lbw/cli.hpp"
#include "lbw/json_io.hpp"
#include "support.hpp"

using namespace lbw;

namespace {

int call(std::initializer_list<const char*> args, std::string* err = nullptr,
         std::string* out = nullptr) {
  std::vector<const char*> argv{"lbw"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream errbuf, outbuf;
  auto* old_err = std::cerr.rdbuf(errbuf.rdbuf());
  auto* old_out = std::cout.rdbuf(outbuf.rdbuf());
  int code = cli::dispatch(static_cast<int>(argv.size()), argv.data());
  std::cerr.rdbuf(old_err);
  std::cout.rdbuf(old_out);
  if (err) *err = errbuf.str();
  if (out) *out = outbuf.str();
  return code;
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("gadget subcommand writes a loadable instance") {
  std::string path = tmp_path("lbw_test_gadget.json");
  CHECK(call({"gadget", "ipmod3", "--x", "101", "--y", "110", "--out", path.c_str()}) == 0);
  auto pg = partitioned_from_json(Json::parse(read_text_file(path)));
  CHECK(pg.node_count == 36);
  CHECK(pg.matching_required);
  pg.validate();
  std::remove(path.c_str());
}

TEST_CASE("round-trip: gadget output feeds simulate-3party") {
  // A 12-node ipmod3 instance is a perfect-matching pair over U = 12;
  // Gamma = 12 - k for L = 9 gives exactly that universe.
  std::string path = tmp_path("lbw_test_matchings.json");
  CHECK(call({"gadget", "ipmod3", "--x", "1", "--y", "1", "--out", path.c_str()}) == 0);
  std::string out;
  CHECK(call({"simulate-3party", "--gamma", "9", "--L", "9", "--B", "4", "--rounds",
              "2", "--matchings", path.c_str()},
             nullptr, &out) == 0);
  auto j = Json::parse(out);
  CHECK(j.at("equivalent_to_direct").get<bool>());
  CHECK(j.at("within_budgets").get<bool>());
  std::remove(path.c_str());
}

TEST_CASE("domain errors exit 1 with a machine-readable payload") {
  std::string err;
  CHECK(call({"simulate-3party", "--rounds", "999", "--L", "9"}, &err) == 1);
  auto j = Json::parse(err);
  CHECK(j.at("error").get<std::string>() == "RoundOutOfRange");
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({"no-such-command"}) == 2);
  CHECK(call({"gadget", "ipmod3"}) == 2);  // missing required --x/--y
}

TEST_CASE("help exits 0") {
  std::string out;
  CHECK(call({"--help"}, nullptr, &out) == 0);
  CHECK(out.find("gadget") != std::string::npos);
}

TEST_CASE("deterministic outputs for identical argv and seed") {
  std::string a = tmp_path("lbw_det_a.jsonl");
  std::string b = tmp_path("lbw_det_b.jsonl");
  for (const auto& p : {a, b})
    CHECK(call({"simulate", "--gamma", "5", "--L", "9", "--B", "4", "--program",
                "flood_min_id", "--rounds", "2", "--seed", "7", "--out", p.c_str()}) == 0);
  CHECK(read_text_file(a) == read_text_file(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("parity bump note: odd Gamma+k requests still run") {
  std::string out;
  CHECK(call({"simulate-3party", "--gamma", "4", "--L", "9", "--B", "4", "--rounds",
              "1", "--seed", "3"},
             nullptr, &out) == 0);
  CHECK(Json::parse(out).at("within_budgets").get<bool>());
}

TEST_CASE("network stats and verify-gadget and bound subcommands") {
  std::string out;
  CHECK(call({"network", "--params", "4,5,8", "--stats"}, nullptr, &out) == 0);
  auto j = Json::parse(out);
  CHECK(j.at("n").get<int>() == 25);
  CHECK(j.at("stats").at("diameter_exact").get<bool>());

  CHECK(call({"verify-gadget", "ipmod3"}, nullptr, &out) == 0);
  CHECK(Json::parse(out).at("ok").get<bool>());

  CHECK(call({"bound", "verify", "--n", "1024", "--B", "1"}, nullptr, &out) == 0);
  CHECK(Json::parse(out).at("L").get<int>() == 17);

  CHECK(call({"gv-code", "--n", "8", "--d", "3"}, nullptr, &out) == 0);
  CHECK(Json::parse(out).at("min_distance").get<int>() >= 3);

  CHECK(call({"fooling-set", "--n", "8", "--d", "5"}, nullptr, &out) == 0);
  CHECK(Json::parse(out).at("verified").get<bool>());

  CHECK(call({"game-lift", "--kind", "and", "--rounds", "1", "--x", "10", "--y", "10",
              "--trials", "2000"},
             nullptr, &out) == 0);
  CHECK(Json::parse(out).at("expected_non_abort").get<double>() ==
        doctest::Approx(1.0 / 16));
}

TEST_CASE("reduce subcommands run on a fixture") {
  Graph host = test::complete_graph(6);
  EdgeMask mask(host.edges().size(), 0);
  for (int i = 0; i < 6; ++i) mask[host.edge_index(i, (i + 1) % 6)] = 1;
  Json fixture{{"host", graph_to_json(host)}, {"mask", mask}};
  std::string path = tmp_path("lbw_fixture.json");
  write_text_file(path, fixture.dump());

  std::string out;
  CHECK(call({"reduce", "st-from-ham", "--fixture", path.c_str()}, nullptr, &out) == 0);
  auto j = Json::parse(out);
  CHECK(j.at("st_from_ham").get<bool>());
  CHECK(j.at("direct_oracle").get<bool>());

  CHECK(call({"reduce", "mst-gap", "--fixture", path.c_str(), "--W", "100", "--alpha",
              "2", "--factors", "1.0,2.0"},
             nullptr, &out) == 0);
  CHECK(Json::parse(out).at("one_sided_ok").get<bool>());
  std::remove(path.c_str());
}

TEST_CASE("pipeline subcommand") {
  std::string out;
  CHECK(call({"pipeline", "--problem", "ipmod3", "--x", "1", "--y", "1", "--B", "8",
              "--seed", "5"},
             nullptr, &out) == 0);
  auto j = Json::parse(out);
  CHECK(j.at("ok").get<bool>());
  CHECK(j.at("expected").get<bool>());
}
