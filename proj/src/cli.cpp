#include "lbw/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbw/games.hpp"
#include "lbw/json_io.hpp"
#include "lbw/reductions.hpp"
#include "lbw/workloads.hpp"

namespace lbw::cli {

namespace {

constexpr uint64_t kDefaultSeed = 20240915;

std::string resolve_out(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  const char* base = std::getenv("LBW_OUT_DIR");
  if (base && p.is_relative()) return (std::filesystem::path(base) / p).string();
  return path;
}

// Writes to --out when given, else stdout.
void deliver(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
  } else {
    write_text_file(resolve_out(out_path), content);
  }
}

Matching matching_from_edges(const std::vector<Edge>& edges) { return edges; }

struct SimArgs {
  int gamma = 4;
  int L = 9;
  int B = 4;
  int rounds = 1;
  uint64_t seed = kDefaultSeed;
  std::string program = "flood_min_id";
  std::string matchings_path;
  std::string out;
};

// Requested Gamma with Gamma+k odd cannot carry perfect matchings; the CLI
// applies the same parity bump the bound calculators use.
HardNetwork build_from_args(const SimArgs& a, bool* bumped = nullptr) {
  int g = normalize_gamma(a.gamma, a.L);
  if (bumped) *bumped = g != a.gamma;
  return build_network(g, a.L, a.B);
}

std::pair<Matching, Matching> load_or_draw_matchings(const HardNetwork& net,
                                                     const std::string& path,
                                                     uint64_t seed) {
  const int U = net.params().universe();
  if (path.empty()) {
    Stream s(seed);
    return {random_perfect_matching(U, s.fork(1).next()),
            random_perfect_matching(U, s.fork(2).next())};
  }
  PartitionedGraph pg = partitioned_from_json(Json::parse(read_text_file(path)));
  require(static_cast<int>(pg.node_count) == U, Err::ShapeMismatch,
          "matchings file is over " + std::to_string(pg.node_count) +
              " nodes but U = " + std::to_string(U));
  return {matching_from_edges(pg.carol_edges), matching_from_edges(pg.david_edges)};
}

int run_dispatch(int argc, const char* const* argv) {
  CLI::App app{"lower-bound workbench for CONGEST simulation and Server-model reductions"};
  app.require_subcommand(1);

  // ---- gadget ----
  auto* gadget = app.add_subcommand("gadget", "build an IPmod3 or Gap-Eq instance");
  std::string g_kind, g_x, g_y, g_out, g_format = "json";
  gadget->add_option("kind", g_kind, "ipmod3|gapeq")->required();
  gadget->add_option("--x", g_x, "Carol's bit string")->required();
  gadget->add_option("--y", g_y, "David's bit string")->required();
  gadget->add_option("--out", g_out, "output path");
  gadget->add_option("--format", g_format, "json|dot");
  gadget->callback([&] {
    auto pair = make_bit_pair(g_x, g_y);
    PartitionedGraph pg =
        g_kind == "gapeq" ? build_gapeq_instance(pair) : build_ipmod3_instance(pair);
    pg.validate();
    if (g_kind == "gapeq") {
      auto promise = gap_promise_check(pair, 1);
      if (promise == GapPromise::Violated)
        std::cerr << "{\"warning\":\"gap promise violated: distance 1 instance is "
                     "Hamiltonian\"}\n";
    }
    deliver(g_out, g_format == "dot" ? partitioned_to_dot(pg)
                                     : partitioned_to_json(pg).dump(2));
  });

  // ---- verify-gadget ----
  auto* vg = app.add_subcommand("verify-gadget", "check a shipped gadget layout");
  std::string vg_kind;
  vg->add_option("kind", vg_kind, "ipmod3|gapeq")->required();
  vg->callback([&] {
    GadgetReport rep =
        verify_gadget_contract(vg_kind == "gapeq" ? gapeq_layout() : ipmod3_layout());
    Json j;
    j["layout"] = vg_kind;
    j["ok"] = rep.ok;
    j["cases"] = Json::array();
    for (const auto& c : rep.cases)
      j["cases"].push_back({{"x", c.x}, {"y", c.y}, {"behavior", c.detail}});
    deliver("", j.dump(2));
  });

  // ---- network ----
  auto* nw = app.add_subcommand("network", "build the hard network family");
  std::string nw_params = "4,5,8", nw_out, nw_format = "json";
  bool nw_stats = false;
  nw->add_option("--params", nw_params, "Gamma,L,B");
  nw->add_option("--out", nw_out, "output path");
  nw->add_option("--format", nw_format, "json|dot");
  nw->add_flag("--stats", nw_stats, "append node count and BFS diameter");
  nw->callback([&] {
    int g, L, B;
    require(std::sscanf(nw_params.c_str(), "%d,%d,%d", &g, &L, &B) == 3, Err::BadInput,
            "--params wants Gamma,L,B");
    HardNetwork net = build_network(g, L, B);
    if (nw_format == "dot") {
      deliver(nw_out, network_to_dot(net, nullptr));
      return;
    }
    Json j = network_to_json(net);
    if (nw_stats) {
      auto s = network_stats(net);
      j["stats"] = {{"n", s.node_count},
                    {"diameter", s.diameter},
                    {"diameter_exact", s.diameter_exact}};
    }
    deliver(nw_out, j.dump(2));
  });

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "run a workload on the hard network");
  SimArgs sa;
  sim->add_option("--gamma", sa.gamma);
  sim->add_option("--L", sa.L);
  sim->add_option("--B", sa.B);
  sim->add_option("--program", sa.program);
  sim->add_option("--rounds", sa.rounds);
  sim->add_option("--seed", sa.seed);
  sim->add_option("--matchings", sa.matchings_path, "PartitionedGraph JSON over U");
  sim->add_option("--out", sa.out, "transcript JSONL path");
  sim->callback([&] {
    HardNetwork net = build_from_args(sa);
    auto [ec, ed] = load_or_draw_matchings(net, sa.matchings_path, sa.seed);
    EdgeMask mask = embed_matchings(net, ec, ed);
    Workload wl = make_named_workload(sa.program, net, sa.B);
    RunSpec spec;
    spec.net = &net.graph();
    spec.mask = &mask;
    spec.bandwidth_bits = sa.B;
    spec.rounds = sa.rounds;
    spec.seed = sa.seed;
    spec.node_inputs = wl.node_inputs.empty() ? nullptr : &wl.node_inputs;
    spec.record_transcript = true;
    RunResult r = run(spec, wl.factory);
    deliver(sa.out, transcript_to_jsonl(r.transcript, net.graph(), r.outputs));
  });

  // ---- simulate-3party ----
  auto* s3 = app.add_subcommand("simulate-3party",
                                "replay a workload through Carol, David and the server");
  SimArgs ta;
  std::string t_format = "json";
  std::string t_program = "flood_min_id";
  s3->add_option("--gamma", ta.gamma);
  s3->add_option("--L", ta.L);
  s3->add_option("--B", ta.B);
  s3->add_option("--rounds", ta.rounds);
  s3->add_option("--seed", ta.seed);
  s3->add_option("--program", t_program);
  s3->add_option("--matchings", ta.matchings_path, "PartitionedGraph JSON over U");
  s3->add_option("--format", t_format, "json|csv");
  s3->add_option("--out", ta.out, "ledger path");
  s3->callback([&] {
    HardNetwork net = build_from_args(ta);
    auto [ec, ed] = load_or_draw_matchings(net, ta.matchings_path, ta.seed);
    Workload wl = make_named_workload(t_program, net, ta.B);
    auto res = simulate_via_server_model(net, ec, ed, wl, ta.rounds, ta.seed);
    // Cross-check against the direct simulator before reporting.
    EdgeMask mask = embed_matchings(net, ec, ed);
    RunSpec spec;
    spec.net = &net.graph();
    spec.mask = &mask;
    spec.bandwidth_bits = ta.B;
    spec.rounds = ta.rounds;
    spec.seed = ta.seed;
    spec.node_inputs = wl.node_inputs.empty() ? nullptr : &wl.node_inputs;
    auto direct = run(spec, wl.factory);
    auto eq = check_equivalence(direct.outputs, res.outputs);
    if (t_format == "csv") {
      deliver(ta.out, ledger_to_csv(res.ledger));
    } else {
      Json j = ledger_to_json(res.ledger);
      j["equivalent_to_direct"] = eq.equal;
      deliver(ta.out, j.dump(2));
    }
  });

  // ---- game-lift ----
  auto* gl = app.add_subcommand("game-lift", "lift an Eq protocol to a nonlocal game");
  std::string gl_kind = "xor", gl_x, gl_y;
  int gl_rounds = 1;
  int64_t gl_trials = 100000;
  uint64_t gl_seed = kDefaultSeed;
  int gl_threads = 1;
  gl->add_option("--kind", gl_kind, "xor|and");
  gl->add_option("--rounds", gl_rounds, "charged rounds c (inputs are 2c bits)");
  gl->add_option("--x", gl_x)->required();
  gl->add_option("--y", gl_y)->required();
  gl->add_option("--trials", gl_trials);
  gl->add_option("--seed", gl_seed);
  gl->add_option("--threads", gl_threads);
  gl->callback([&] {
    auto pair = make_bit_pair(gl_x, gl_y);
    require(static_cast<int>(pair.n()) <= 2 * gl_rounds, Err::BadInput,
            "inputs longer than 2*rounds bits");
    auto strategy = lift_to_game(eq_xfer(2 * gl_rounds),
                                 gl_kind == "and" ? GameStrategy::Kind::AND
                                                  : GameStrategy::Kind::XOR);
    BitString x = pair.x, y = pair.y;
    x.resize(2 * gl_rounds, 0);
    y.resize(2 * gl_rounds, 0);
    GameStats st = estimate_stats(strategy, x, y, gl_trials, gl_seed, gl_threads);
    Json j{{"kind", gl_kind},
           {"charged_rounds", gl_rounds},
           {"trials", st.trials},
           {"non_abort_rate", st.non_abort_rate},
           {"expected_non_abort", strategy.non_abort_probability()},
           {"accept_rate", static_cast<double>(st.accepts) / st.trials},
           {"correct_given_no_abort", st.correct_rate_given_no_abort}};
    deliver("", j.dump(2));
  });

  // ---- gv-code ----
  auto* gv = app.add_subcommand("gv-code", "greedy Gilbert-Varshamov code");
  int gv_n = 8, gv_d = 3;
  std::string gv_out;
  gv->add_option("--n", gv_n)->required();
  gv->add_option("--d", gv_d)->required();
  gv->add_option("--out", gv_out);
  gv->callback([&] {
    Code c = gv_greedy_code(gv_n, gv_d);
    Json j{{"n", c.n},
           {"d", c.d},
           {"size", c.words.size()},
           {"gv_bound", gv_size_bound(gv_n, gv_d)},
           {"min_distance", code_min_distance(c)},
           {"words", c.words}};
    deliver(gv_out, j.dump(2));
  });

  // ---- fooling-set ----
  auto* fs = app.add_subcommand("fooling-set", "code-based fooling set for gap-Eq");
  int fs_n = 8, fs_d = 4, fs_delta = 1;
  fs->add_option("--n", fs_n)->required();
  fs->add_option("--d", fs_d)->required();
  fs->add_option("--delta", fs_delta, "gap parameter (default (d-1)/2)");
  fs->callback([&] {
    Code c = gv_greedy_code(fs_n, fs_d);
    int delta = fs->count("--delta") ? fs_delta : (fs_d - 1) / 2;
    FoolingSet f = build_fooling_set_eq(c, delta);
    bool ok = verify_fooling_set(f);
    Json j{{"n", f.n},
           {"delta", f.delta},
           {"size", f.pairs.size()},
           {"verified", ok},
           {"bound_main", fooling_lower_bound(f.pairs.size())},
           {"bound_appendix",
            fooling_lower_bound(f.pairs.size(), FoolingBoundVariant::Appendix)}};
    deliver("", j.dump(2));
  });

  // ---- reduce ----
  auto* rd = app.add_subcommand("reduce", "spanning-tree and MST reductions");
  rd->require_subcommand(1);
  auto* rd_st = rd->add_subcommand("st-from-ham");
  std::string st_fixture;
  rd_st->add_option("--fixture", st_fixture, "JSON {host, mask}")->required();
  rd_st->callback([&] {
    Json j = Json::parse(read_text_file(st_fixture));
    Graph host = graph_from_json(j.at("host"));
    EdgeMask mask = j.at("mask").get<EdgeMask>();
    bool via_st = st_from_ham(host, mask);
    bool direct = is_hamiltonian_cycle(subgraph_from_mask(host, mask));
    deliver("", Json{{"st_from_ham", via_st}, {"direct_oracle", direct}}.dump(2));
  });
  auto* rd_mst = rd->add_subcommand("mst-gap");
  std::string mst_fixture;
  double mst_W = 100.0, mst_alpha = 2.0;
  std::string mst_factors = "1.0";
  rd_mst->add_option("--fixture", mst_fixture, "JSON {host, mask}")->required();
  rd_mst->add_option("--W", mst_W);
  rd_mst->add_option("--alpha", mst_alpha);
  rd_mst->add_option("--factors", mst_factors, "comma list in [1, alpha]");
  rd_mst->callback([&] {
    Json j = Json::parse(read_text_file(mst_fixture));
    Graph host = graph_from_json(j.at("host"));
    EdgeMask mask = j.at("mask").get<EdgeMask>();
    std::vector<double> factors;
    std::stringstream ss(mst_factors);
    for (std::string tok; std::getline(ss, tok, ',');) factors.push_back(std::stod(tok));
    auto rep = end_to_end_soundness(host, mask, mst_W, mst_alpha, factors);
    Json out{{"n", rep.n},
             {"delta", rep.delta},
             {"exact_mst", rep.exact_weight},
             {"weight_lower_bound", rep.bound},
             {"separation", rep.separation},
             {"one_sided_ok", rep.one_sided_ok}};
    out["verdicts"] = Json::array();
    for (size_t i = 0; i < factors.size(); ++i)
      out["verdicts"].push_back(
          {{"factor", factors[i]}, {"verdict", mst_verdict_name(rep.verdicts[i])}});
    deliver("", out.dump(2));
  });

  // ---- bound ----
  auto* bd = app.add_subcommand("bound", "lower-bound parameter calculators");
  bd->require_subcommand(1);
  double b_n = 1024, b_B = 1, b_c = 1, b_cp = 1, b_W = 100, b_alpha = 2, b_beta = 1;
  std::string b_format = "json";
  auto* bd_v = bd->add_subcommand("verify");
  bd_v->add_option("--n", b_n);
  bd_v->add_option("--B", b_B);
  bd_v->add_option("--c", b_c);
  bd_v->add_option("--cprime", b_cp);
  bd_v->add_option("--format", b_format, "json|md|csv");
  bd_v->callback([&] {
    auto r = verification_params(b_n, b_B, b_c, b_cp);
    deliver("", b_format == "md" ? bound_report_markdown(r)
                                 : (b_format == "csv" ? bound_report_csv(r)
                                                      : bound_report_to_json(r).dump(2)));
  });
  auto* bd_o = bd->add_subcommand("optimize");
  bd_o->add_option("--n", b_n);
  bd_o->add_option("--B", b_B);
  bd_o->add_option("--W", b_W);
  bd_o->add_option("--alpha", b_alpha);
  bd_o->add_option("--beta", b_beta);
  bd_o->add_option("--c", b_c);
  bd_o->add_option("--cprime", b_cp);
  bd_o->add_option("--format", b_format, "json|md|csv");
  bd_o->callback([&] {
    auto r = optimization_params(b_n, b_B, b_W, b_alpha, b_c, b_cp, b_beta);
    deliver("", b_format == "md" ? bound_report_markdown(r)
                                 : (b_format == "csv" ? bound_report_csv(r)
                                                      : bound_report_to_json(r).dump(2)));
  });

  // ---- pipeline ----
  auto* pl = app.add_subcommand("pipeline", "gadget -> network -> both simulations");
  std::string pl_problem = "ipmod3", pl_x, pl_y;
  int pl_L = 0, pl_B = 8;
  uint64_t pl_seed = kDefaultSeed;
  pl->add_option("--problem", pl_problem, "ipmod3|gapeq");
  pl->add_option("--x", pl_x)->required();
  pl->add_option("--y", pl_y)->required();
  pl->add_option("--L", pl_L, "0 = choose the smallest workable L");
  pl->add_option("--B", pl_B);
  pl->add_option("--seed", pl_seed);
  pl->callback([&] {
    auto pair = make_bit_pair(pl_x, pl_y);
    auto problem =
        pl_problem == "gapeq" ? PipelineProblem::GapEq : PipelineProblem::IPmod3;
    int L = pl_L > 0 ? pl_L
                     : pipeline_min_L(problem, static_cast<int>(pair.n()), pl_B);
    auto rep = pipeline(pair, problem, L, pl_B, pl_seed);
    deliver("", pipeline_report_to_json(rep).dump(2));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  try {
    return run_dispatch(argc, argv);
  } catch (const DomainError& e) {
    Json err{{"error", e.code_name()}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    Json err{{"error", "BadInput"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}

}  // namespace lbw::cli
