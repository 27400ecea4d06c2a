#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sw/analysis.hpp"
#include "sw/chisel.hpp"
#include "sw/counting.hpp"
#include "sw/embed.hpp"
#include "sw/errors.hpp"
#include "sw/experiments.hpp"
#include "sw/samplers.hpp"
#include "sw/schnyder.hpp"
#include "sw/segment.hpp"

using namespace sw;
using json = nlohmann::json;

namespace {

constexpr int kVerifyFailed = 1;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::BadInput, "cannot write " + path);
  out << text;
}

// "# swood <version> <cmd> k=v ..." header carried by every table
std::string header(const std::string& cmd, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string h = "# swood " SW_VERSION " " + cmd;
  for (auto& [k, v] : kv) h += " " + k + "=" + v;
  return h + "\n";
}

template <class T>
std::string S(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schnyder woods of random planar triangulations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SW_VERSION);

  // count
  int c_m = 1, c_n = 0, c_table_m = -1, c_table_n = -1;
  auto* count = app.add_subcommand("count", "number of triangulations in T_n^m");
  count->add_option("--m", c_m, "boundary length minus 2");
  count->add_option("--n", c_n, "interior vertices");
  count->add_option("--table-m", c_table_m, "CSV table for m = 1..M");
  count->add_option("--table-n", c_table_n, "CSV table for n = 0..N");

  // law
  std::string l_what = "step";
  int l_kmax = 5, l_msmax = 5, l_m = 1, l_nmax = 10;
  auto* law = app.add_subcommand("law", "exact probability tables as CSV");
  law->add_option("--what", l_what, "step | free | coverage | normalization")
      ->check(CLI::IsMember({"step", "free", "coverage", "normalization"}));
  law->add_option("--kmax", l_kmax);
  law->add_option("--msmax", l_msmax);
  law->add_option("--m", l_m, "boundary parameter for --what free");
  law->add_option("--nmax", l_nmax, "largest size for --what free");

  // sample
  std::string s_mode = "uniform", s_out;
  int s_m = 1, s_n = 10, s_steps = 100;
  std::uint64_t s_seed = 0;
  auto* sample = app.add_subcommand("sample", "draw a triangulation (TRI v1) or a half-plane step ledger (CSV)");
  sample->add_option("--mode", s_mode)->check(CLI::IsMember({"uniform", "free", "uihpt"}));
  sample->add_option("--m", s_m);
  sample->add_option("--n", s_n);
  sample->add_option("--steps", s_steps, "peeling steps for --mode uihpt");
  sample->add_option("--seed", s_seed)->required();
  sample->add_option("--out", s_out);

  // wood
  std::string w_in, w_out, w_wood;
  bool w_verify = false, w_oracle = false;
  int w_paths = -1;
  auto* wood = app.add_subcommand("wood", "build the maximal Schnyder wood of a TRI file");
  wood->add_option("--in", w_in)->required();
  wood->add_option("--out", w_out, "WOOD v1 output");
  wood->add_option("--wood", w_wood, "use this WOOD file instead of building one");
  wood->add_flag("--verify", w_verify, "check the Schnyder conditions and maximality");
  wood->add_flag("--oracle", w_oracle, "compare against the brute-force maximal wood");
  wood->add_option("--paths", w_paths, "print the three monochromatic paths from this vertex");

  // verify
  std::string v_in, v_wood;
  auto* verify = app.add_subcommand("verify", "verify a WOOD file against a TRI file");
  verify->add_option("--in", v_in)->required();
  verify->add_option("--wood", v_wood)->required();

  // oracle
  std::string o_in;
  auto* oracle = app.add_subcommand("oracle", "brute-force maximal wood (small inputs)");
  oracle->add_option("--in", o_in)->required();

  // segment
  std::uint64_t g_seed = 0;
  long long g_x = 0;
  int g_steps = 200, g_check = 0;
  std::string g_out;
  auto* segment = app.add_subcommand("segment", "Schnyder peeling process P_x on a half-plane triangulation");
  segment->add_option("--seed", g_seed)->required();
  segment->add_option("--x", g_x);
  segment->add_option("--steps", g_steps);
  segment->add_option("--check-every", g_check, "0: check once at the end, < 0: never");
  segment->add_option("--out", g_out);

  // striptest
  std::uint64_t t_seed = 0;
  StripConfig t_cfg;
  int t_replicas = 100, t_jobs = 1;
  std::string t_out;
  auto* strip = app.add_subcommand("striptest", "agreement of P_x and P_y near b_0");
  strip->add_option("--seed", t_seed)->required();
  strip->add_option("--x", t_cfg.x);
  strip->add_option("--y", t_cfg.y);
  strip->add_option("--rho", t_cfg.rho);
  strip->add_option("--budget", t_cfg.budget);
  strip->add_option("--settle", t_cfg.settle);
  strip->add_option("--replicas", t_replicas);
  strip->add_option("--jobs", t_jobs);
  strip->add_option("--out", t_out);

  // chisel
  std::uint64_t h_seed = 0;
  ChiselConfig h_cfg;
  std::string h_wood, h_out;
  auto* chis = app.add_subcommand("chisel", "layered Schnyder wood on a half-plane window");
  chis->add_option("--seed", h_seed)->required();
  chis->add_option("--x", h_cfg.x);
  chis->add_option("--layers", h_cfg.layers);
  chis->add_option("--window", h_cfg.window);
  chis->add_option("--margin", h_cfg.margin);
  chis->add_option("--budget", h_cfg.budget);
  chis->add_option("--walks", h_cfg.walks);
  chis->add_option("--wood-out", h_wood, "WOOD v1 dump of the materialised window");
  chis->add_option("--out", h_out, "JSON report");

  // uiptprobe
  std::uint64_t u_seed = 0;
  int u_m = 1, u_rho = 1, u_replicas = 200, u_jobs = 1;
  std::vector<int> u_sizes{25, 50};
  std::string u_out;
  auto* probe = app.add_subcommand("uiptprobe", "coloured-ball TV distance between sizes");
  probe->add_option("--seed", u_seed)->required();
  probe->add_option("--m", u_m);
  probe->add_option("--rho", u_rho);
  probe->add_option("--sizes", u_sizes)->delimiter(',');
  probe->add_option("--replicas", u_replicas);
  probe->add_option("--jobs", u_jobs);
  probe->add_option("--out", u_out);

  // embed
  std::string e_in, e_kind = "schnyder", e_svg, e_wood;
  std::vector<int> e_high;
  double e_tol = 1e-10;
  auto* embed = app.add_subcommand("embed", "straight-line drawing as SVG");
  embed->add_option("--in", e_in)->required();
  embed->add_option("--kind", e_kind)->check(CLI::IsMember({"schnyder", "tutte"}));
  embed->add_option("--svg", e_svg)->required();
  embed->add_option("--wood", e_wood);
  embed->add_option("--highlight", e_high, "overlay P_r, P_y, P_b and a geodesic from these vertices");
  embed->add_option("--tol", e_tol);

  // winding
  std::uint64_t n_seed = 0;
  int n_n = 200, n_samples = 20;
  std::string n_out;
  auto* winding = app.add_subcommand("winding", "winding numbers of monochromatic paths around leftmost walks");
  winding->add_option("--seed", n_seed)->required();
  winding->add_option("--n", n_n);
  winding->add_option("--samples", n_samples);
  winding->add_option("--out", n_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) {
      if (c_table_m >= 1 && c_table_n >= 0) {
        std::ostringstream os;
        os << header("count", {{"table-m", S(c_table_m)}, {"table-n", S(c_table_n)}}) << "m,n,count\n";
        for (int m = 1; m <= c_table_m; ++m)
          for (int n = 0; n <= c_table_n; ++n) os << m << ',' << n << ',' << count_triangulations(m, n) << '\n';
        std::cout << os.str();
      } else {
        std::cout << count_triangulations(c_m, c_n) << '\n';
      }
      return 0;
    }

    if (*law) {
      std::ostringstream os;
      if (l_what == "step") {
        os << header("law", {{"what", l_what}, {"kmax", S(l_kmax)}, {"msmax", S(l_msmax)}}) << "side,k,ms,p\n";
        for (int ms = 0; ms <= l_msmax; ++ms)
          for (int k = 0; k <= l_kmax; ++k)
            for (Side s : {Side::Left, Side::Right}) {
              if (s == Side::Right && ms < k) continue;
              Rational p = step_probability(s, k, ms);
              os << side_name(s) << ',' << k << ',' << ms << ',' << rat_str(p) << '\n';
            }
      } else if (l_what == "free") {
        os << header("law", {{"what", l_what}, {"m", S(l_m)}, {"nmax", S(l_nmax)}}) << "n,p\n";
        for (int n = 0; n <= l_nmax; ++n) os << n << ',' << rat_str(free_size_probability(l_m, n)) << '\n';
      } else if (l_what == "coverage") {
        auto L = coverage_walk_law(l_kmax, l_kmax);
        os << header("law", {{"what", l_what}, {"kmax", S(l_kmax)}}) << "quantity,value\n";
        os << "p_left," << rat_str(L.p_left) << "\np_right," << rat_str(L.p_right) << "\nE_J," << rat_str(L.EJ)
           << "\nE_K," << rat_str(L.EK) << "\nE_xi," << rat_str(L.Exi) << '\n';
      } else {
        auto N = normalization_bracket(l_kmax, l_msmax);
        os << header("law", {{"what", l_what}, {"kmax", S(l_kmax)}, {"msmax", S(l_msmax)}}) << "mass,lo,hi\n";
        os << "left," << rat_str(N.left.lo) << ',' << rat_str(N.left.hi) << "\nright," << rat_str(N.right.lo) << ','
           << rat_str(N.right.hi) << "\ntotal," << rat_str(N.total.lo) << ',' << rat_str(N.total.hi) << '\n';
      }
      std::cout << os.str();
      return 0;
    }

    if (*sample) {
      if (s_mode == "uihpt") {
        LazyHalfPlane H(Rng(s_seed).split("sample").key());
        SegmentProcess P(H, BaseBoundary::initial(H), 0);
        std::ostringstream os;
        os << header("sample", {{"mode", s_mode}, {"seed", S(s_seed)}, {"steps", S(s_steps)}, {"split", "sample"}})
           << "step,side,k,ms,xi,head_pos,cov_lo,cov_hi\n";
        for (int i = 0; i < s_steps; ++i) {
          const auto& r = P.step();
          os << r.step << ',' << side_name(r.side) << ',' << r.k << ',' << r.ms << ',' << r.xi << ',' << r.head_pos
             << ',' << r.cov_lo << ',' << r.cov_hi << '\n';
        }
        emit(s_out, os.str());
      } else {
        Rng r = Rng(s_seed).split("sample");
        Triangulation t = s_mode == "uniform" ? sample_uniform(s_m, s_n, r) : sample_free(s_m, r);
        emit(s_out, "# swood " SW_VERSION " sample mode=" + s_mode + " seed=" + S(s_seed) + " split=sample\n" +
                        to_tri(t));
      }
      return 0;
    }

    if (*wood) {
      Triangulation t = parse_tri(slurp(w_in));
      Wood w = w_wood.empty() ? peel_finite(t) : parse_wood(t, slurp(w_wood));
      if (!w_out.empty()) emit(w_out, to_wood(t, w));
      int status = 0;
      if (w_verify) {
        auto rep = verify_wood(t, w);
        bool acw = find_anticlockwise_triangle(t, w).has_value();
        std::cout << (rep.ok ? "schnyder: ok" : "schnyder: " + rep.str()) << '\n'
                  << "anticlockwise triangle: " << (acw ? "present" : "none") << '\n';
        if (!rep.ok || acw) status = kVerifyFailed;
      }
      if (w_oracle) {
        Wood o = brute_force_maximal(t);
        bool same = o.color == w.color && o.out == w.out;
        std::cout << "oracle: " << (same ? "equal" : "different") << '\n';
        if (!same) status = kVerifyFailed;
      }
      if (w_paths >= 0) {
        for (int c : {kRed, kYellow, kBlue}) {
          std::cout << color_name(c) << ':';
          for (int v : path_from(t, w, w_paths, c)) std::cout << ' ' << v;
          std::cout << '\n';
        }
      }
      if (w_out.empty() && !w_verify && !w_oracle && w_paths < 0) std::cout << to_wood(t, w);
      return status;
    }

    if (*verify) {
      Triangulation t = parse_tri(slurp(v_in));
      Wood w = parse_wood(t, slurp(v_wood));
      auto rep = verify_wood(t, w);
      bool acw = rep.ok && find_anticlockwise_triangle(t, w).has_value();
      std::cout << (rep.ok ? "schnyder: ok" : "schnyder: " + rep.str()) << '\n';
      if (rep.ok) std::cout << "maximal: " << (acw ? "no" : "yes") << '\n';
      return rep.ok && !acw ? 0 : kVerifyFailed;
    }

    if (*oracle) {
      Triangulation t = parse_tri(slurp(o_in));
      int survivors = 0;
      Wood o = brute_force_maximal(t, &survivors);
      std::cout << "# anticlockwise-free 3-orientations: " << survivors << '\n' << to_wood(t, o);
      return survivors == 1 ? 0 : kVerifyFailed;
    }

    if (*segment) {
      LazyHalfPlane H(Rng(g_seed).split("segment").key());
      SegmentRunConfig cfg;
      cfg.budget = g_steps;
      cfg.check_every = g_check;
      auto rep = run_segment(H, g_x, cfg);
      std::ostringstream os;
      os << header("segment", {{"seed", S(g_seed)}, {"x", S(g_x)}, {"steps", S(g_steps)}, {"split", "segment"}})
         << "# structure checks=" << rep.structure.checks << " violations=" << rep.structure.violations
         << " deferred=" << rep.structure.deferred << " leftward_coverage=" << rep.leftward_coverage << '\n'
         << "step,side,k,ms,xi,cov_lo,cov_hi,head_pos\n";
      for (auto& r : rep.history)
        os << r.step << ',' << side_name(r.side) << ',' << r.k << ',' << r.ms << ',' << r.xi << ',' << r.cov_lo << ','
           << r.cov_hi << ',' << r.head_pos << '\n';
      emit(g_out, os.str());
      for (auto& m : rep.structure.messages) std::cerr << m << '\n';
      return rep.structure.ok() ? 0 : kVerifyFailed;
    }

    if (*strip) {
      std::vector<StripReplica> rows;
      auto sum = strip_consistency(t_seed, t_cfg, t_replicas, t_jobs, &rows);
      std::ostringstream os;
      os << header("striptest", {{"seed", S(t_seed)},
                                  {"x", S(t_cfg.x)},
                                  {"y", S(t_cfg.y)},
                                  {"rho", S(t_cfg.rho)},
                                  {"budget", S(t_cfg.budget)},
                                  {"settle", S(t_cfg.settle)},
                                  {"replicas", S(t_replicas)},
                                  {"split", "strip/x/y/r"}})
         << "# agree=" << sum.agree << " disagree=" << sum.disagree << " exhausted=" << sum.exhausted
         << " opaque=" << sum.opaque << " frequency=" << sum.frequency() << '\n'
         << "replica,synced,exhausted,opaque,common_edges,disagreements,disagreements_left,steps_x,steps_y,sync_x,"
            "sync_y\n";
      for (size_t r = 0; r < rows.size(); ++r) {
        auto& x = rows[r];
        os << r << ',' << x.synced << ',' << x.exhausted << ',' << x.opaque << ',' << x.common_edges << ','
           << x.disagreements << ',' << x.disagreements_left << ',' << x.steps_x << ',' << x.steps_y << ','
           << x.sync_x << ',' << x.sync_y << '\n';
      }
      emit(t_out, os.str());
      return 0;
    }

    if (*chis) {
      auto R = chisel(h_seed, h_cfg);
      json j;
      j["version"] = SW_VERSION;
      j["seed"] = h_seed;
      j["layers"] = h_cfg.layers;
      j["window"] = {R.window_lo, R.window_hi};
      j["ok"] = R.ok();
      j["exhausted"] = R.exhausted;
      j["blocked"] = R.blocked;
      auto rep = [](const StructureReport& s) {
        return json{{"checks", s.checks}, {"violations", s.violations}, {"deferred", s.deferred},
                    {"messages", s.messages}};
      };
      for (auto& L : R.layers)
        j["per_layer"].push_back({{"steps", L.steps},
                                  {"yellow", L.yellow.size()},
                                  {"red", L.red.size()},
                                  {"blue", L.blue.size()},
                                  {"upper", L.upper.size()},
                                  {"segment", rep(L.structure)}});
      j["overlap"] = rep(R.overlap);
      j["triangles"] = rep(R.triangles);
      j["order"] = rep(R.order);
      j["upper"] = rep(R.upper);
      j["interface"] = rep(R.interface);
      j["walks"] = rep(R.walks);
      j["walks_anchored"] = R.walks_anchored;
      emit(h_out, j.dump() + "\n");
      if (!h_wood.empty()) emit(h_wood, to_wood(R.map, R.wood));
      return R.ok() ? 0 : kVerifyFailed;
    }

    if (*probe) {
      auto rows = uipt_convergence_probe(u_m, u_rho, u_sizes, u_replicas, u_seed, u_jobs);
      std::ostringstream os;
      os << header("uiptprobe", {{"seed", S(u_seed)},
                                  {"m", S(u_m)},
                                  {"rho", S(u_rho)},
                                  {"replicas", S(u_replicas)},
                                  {"split", "uiptprobe/n/r"}})
         << "n,classes,tv_prev\n";
      for (auto& r : rows) os << r.n << ',' << r.classes << ',' << r.tv_prev << '\n';
      emit(u_out, os.str());
      return 0;
    }

    if (*embed) {
      Triangulation t = parse_tri(slurp(e_in));
      Wood w = e_wood.empty() ? peel_finite(t) : parse_wood(t, slurp(e_wood));
      Embedding E = e_kind == "schnyder" ? schnyder_grid_embedding(t, w) : tutte_embedding(t, {}, e_tol);
      std::vector<Highlight> hl;
      static const char* col[3] = {"#8b0000", "#b8860b", "#00008b"};
      for (int v : e_high) {
        for (int c : {kRed, kYellow, kBlue}) hl.push_back({path_from(t, w, v, c), col[c]});
        hl.push_back({geodesic(t, v), "#2ca02c"});
      }
      emit(e_svg, render_svg(t, E, &w, hl));
      long long x = count_crossings(t, E);
      std::cout << "crossings: " << x << '\n';
      if (E.kind == Embedding::Kind::Tutte) std::cout << "residual: " << E.residual << " sweeps: " << E.iterations << '\n';
      return x == 0 || E.kind == Embedding::Kind::Tutte ? 0 : kVerifyFailed;
    }

    if (*winding) {
      std::ostringstream os;
      os << header("winding", {{"seed", S(n_seed)}, {"n", S(n_n)}, {"samples", S(n_samples)}, {"split", "winding/i"}})
         << "sample,v,first_color,walk_len,geodesic_len,w_red,w_yellow,w_blue\n";
      int status = 0;
      for (int i = 0; i < n_samples; ++i) {
        Rng r = Rng(n_seed).split("winding").split(i);
        Triangulation t = sample_uniform(1, n_n, r);
        Wood w = peel_finite(t);
        int v;
        do v = static_cast<int>(r.below(t.nv()));
        while (t.on_boundary(v));
        std::vector<int> outs;
        for (int d : t.darts_ccw(v))
          if (w.is_out(d)) outs.push_back(d);
        int e = outs[r.below(outs.size())];
        Walk L = leftmost_walk(t, w, e, t.nv() + 1, [&](int u) { return t.on_boundary(u); });
        auto Lv = L.vertices(t);
        os << i << ',' << v << ',' << color_name(w.color_of(e)) << ',' << L.length() << ','
           << geodesic(t, v).size() - 1;
        for (int c : {kRed, kYellow, kBlue}) {
          int wn = winding_number(t, Lv, path_from(t, w, v, c));
          if (3 * std::abs(wn * 3 - L.length()) > 9) status = kVerifyFailed;
          os << ',' << wn;
        }
        os << '\n';
      }
      emit(n_out, os.str());
      return status;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kVerifyFailed;
  }
  return 0;
}
