#include "rigged_cli/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rigged/bijection.hpp"
#include "rigged/characters.hpp"
#include "rigged/error.hpp"
#include "rigged/identities.hpp"
#include "rigged/moves.hpp"
#include "rigged/serialize.hpp"

namespace rigged::cli {

namespace {

std::string sighting_label(const std::optional<ParticleSighting>& s) {
  if (!s) return "-";
  return std::string(s->kind == Saturation::S ? "S_" : "L_") + std::to_string(s->position);
}

struct TraceOptions {
  int k = 1;
  int l = 1;
  std::string config;
  std::optional<int> right;
  std::optional<int> left;
  bool pass = false;
};

int run_trace(const TraceOptions& o, bool json, std::ostream& out) {
  if (!o.right && !o.left && !o.pass) throw InputError("trace needs one of --right, --left or --pass");
  const Configuration a = parse_configuration(o.config);
  const Level level{o.k, o.l};
  nlohmann::json steps = nlohmann::json::array();

  auto emit = [&](const std::string& label, const Configuration& c) {
    if (json) {
      steps.push_back({{"particle", label}, {"configuration", to_json(c)}});
    } else {
      out << to_text(c) << "  " << label << '\n';
    }
  };

  if (o.pass) {
    for (const auto& node : pass_history(a, o.k, o.l)) {
      const std::string label =
          std::string(node.s_saturated ? "S_" : "L_") + std::to_string(node.position);
      emit(label, node.configuration);
    }
    const Configuration result = pass_particle(a, o.k, o.l);
    if (json) {
      out << nlohmann::json{{"nodes", steps}, {"result", to_json(result)}}.dump() << '\n';
    } else {
      out << "result " << to_text(result) << '\n';
    }
    return kExitOk;
  }

  const Side side = o.left ? Side::Left : Side::Right;
  const int count = o.left ? *o.left : o.right.value_or(0);
  Configuration cur = a;
  require_member(cur, level);
  for (int step = 0;; ++step) {
    const auto s = side == Side::Right ? highest_particle(cur, level) : lowest_particle(cur, level);
    emit(sighting_label(s), cur);
    if (step == count) break;
    cur = side == Side::Right ? right_move(cur, level) : left_move(cur, level);
  }
  if (json) out << nlohmann::json{{"steps", steps}}.dump() << '\n';
  return kExitOk;
}

int report_results(const std::vector<VerifyReport>& reports, bool json, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed;
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    out << (reports.size() == 1 ? arr[0] : nlohmann::json{{"passed", ok}, {"reports", arr}}).dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.parameters.dump();
      if (r.first_mismatch) out << "  " << *r.first_mismatch;
      out << '\n';
    }
    if (!ok) {
      for (const auto& r : reports) {
        if (!r.passed) out << r.to_json().dump() << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigged partitions for (k,3)-admissible configurations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable JSON");

  int k = 1;
  std::string config;
  std::string partition;

  auto* map = app.add_subcommand("map", "Rigged partition iota(a) of a configuration");
  map->add_option("--k", k, "Admissibility level")->required();
  map->add_option("--config", config, "Configuration as offset:c0,c1,...")->required();
  bool map_text = false;
  map->add_flag("--text", map_text, "Print ((weights),(riggings)) instead of JSON");

  auto* unmap = app.add_subcommand("unmap", "Configuration kappa(lambda,rho) of a rigged partition");
  unmap->add_option("--k", k, "Admissibility level")->required();
  unmap->add_option("--partition", partition, "JSON object or ((weights),(riggings))")->required();

  TraceOptions trace_opts;
  auto* trace = app.add_subcommand("trace", "Print a chain of particle moves or a passing history");
  trace->add_option("--k", trace_opts.k, "Admissibility level")->required();
  trace->add_option("--l", trace_opts.l, "Particle weight")->required();
  trace->add_option("--config", trace_opts.config, "Configuration as offset:c0,c1,...")->required();
  auto* right_opt = trace->add_option("--right", trace_opts.right, "Number of right moves");
  auto* left_opt = trace->add_option("--left", trace_opts.left, "Number of left moves");
  auto* pass_opt = trace->add_flag("--pass", trace_opts.pass, "Pass a weight-l particle through");
  right_opt->excludes(left_opt)->excludes(pass_opt);
  left_opt->excludes(pass_opt);

  int l = 1, a = 0, b = 0;
  std::int64_t N = 0;
  auto* chi = app.add_subcommand("chi", "Fermionic character chi^{(k,l)}_{a,b}[N]");
  chi->add_option("--k", k)->required();
  chi->add_option("--l", l)->required();
  chi->add_option("--a", a)->required();
  chi->add_option("--b", b)->required();
  chi->add_option("--N", N)->required();

  SumConstraints sc;
  std::optional<int> a0, a1, max_weight;
  std::optional<std::int64_t> sum_N, max_degree;
  auto* sum = app.add_subcommand("sum", "Configuration sum of q^E(a)");
  sum->add_option("--k", k)->required();
  sum->add_option("--r", sc.r)->check(CLI::IsMember({2, 3}));
  sum->add_option("--a0", a0);
  sum->add_option("--a1", a1);
  sum->add_option("--N", sum_N);
  sum->add_option("--max-degree", max_degree);
  sum->add_option("--max-weight", max_weight);

  auto* verify = app.add_subcommand("verify", "Run finite verifications");
  verify->require_subcommand(1);
  std::int64_t vdeg = 20;
  std::optional<int> va, vb, cap_k;
  std::optional<std::int64_t> cap_N;
  std::vector<std::string> sample_configs;
  std::int64_t width = 6;

  auto* v_round = verify->add_subcommand("roundtrip", "kappa o iota = id on configurations in [0,N]");
  v_round->add_option("--k", k)->required();
  v_round->add_option("--N", N)->required();
  auto* v_gordon = verify->add_subcommand("gordon", "Sum side against the fermionic side");
  v_gordon->add_option("--k", k)->required();
  v_gordon->add_option("--max-degree", vdeg);
  auto* v_r2 = verify->add_subcommand("gordon-r2", "The r=2 identity");
  v_r2->add_option("--k", k)->required();
  v_r2->add_option("--max-degree", vdeg);
  auto* v_poly = verify->add_subcommand("polynomial", "Finite-N polynomial identity");
  for (auto* s : {v_poly}) {
    s->add_option("--k", k)->required();
    s->add_option("--l", l)->required();
    s->add_option("--a", a)->required();
    s->add_option("--b", b)->required();
    s->add_option("--N", N)->required();
  }
  auto* v_init = verify->add_subcommand("init", "Images of the initial-condition classes");
  v_init->add_option("--k", k)->required();
  v_init->add_option("--l", l)->required();
  v_init->add_option("--N", N)->required();
  v_init->add_option("--a", va);
  v_init->add_option("--b", vb);
  auto* v_boundary = verify->add_subcommand("boundary", "Boundary-N ceilings");
  v_boundary->add_option("--k", k)->required();
  v_boundary->add_option("--l", l)->required();
  v_boundary->add_option("--N", N)->required();
  auto* v_rec = verify->add_subcommand("recursion", "Recursion for [a,b]_l");
  v_rec->add_option("--k", k)->required();
  v_rec->add_option("--l", l)->required();
  v_rec->add_option("--N", N)->required();
  auto* v_shift = verify->add_subcommand("shift", "Rigging shift and commutation of passing");
  v_shift->add_option("--k", k)->required();
  v_shift->add_option("--l", l)->required();
  v_shift->add_option("--config", sample_configs, "Sample configurations (default: all of width --width)");
  v_shift->add_option("--width", width, "Support width of the default sample");
  auto* v_all = verify->add_subcommand("all", "The full fixed grid");
  v_all->add_option("--k", cap_k, "Only levels up to this k");
  v_all->add_option("--N", cap_N, "Only boundaries up to this N");

  std::vector<std::string> tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(tail.begin(), tail.end());
  try {
    app.parse(tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*map) {
      const RiggedPartition rp = iota(parse_configuration(config), k);
      out << (map_text ? to_text(rp) : to_json(rp).dump()) << '\n';
    } else if (*unmap) {
      const Configuration c = kappa(parse_rigged_partition(partition), k);
      out << (json ? to_json(c).dump() : to_text(c)) << '\n';
    } else if (*trace) {
      return run_trace(trace_opts, json, out);
    } else if (*chi) {
      const QPolynomial p = chi_closed(k, l, a, b, N);
      out << (json ? to_json(p).dump() : p.to_string()) << '\n';
    } else if (*sum) {
      sc.a0 = a0;
      sc.a1 = a1;
      sc.N = sum_N;
      sc.max_degree = max_degree;
      sc.max_weight = max_weight;
      const QPolynomial p = config_sum(k, sc);
      out << (json ? to_json(p).dump() : p.to_string()) << '\n';
    } else if (*verify) {
      std::vector<VerifyReport> reports;
      if (*v_round) reports.push_back(verify_roundtrip(k, N));
      if (*v_gordon) reports.push_back(verify_gordon(k, vdeg));
      if (*v_r2) reports.push_back(verify_gordon_r2(k, vdeg));
      if (*v_poly) reports.push_back(verify_polynomial_identity(k, l, a, b, N));
      if (*v_init) {
        if (va.has_value() != vb.has_value()) throw InputError("--a and --b go together");
        std::optional<std::pair<int, int>> pair;
        if (va) pair = std::make_pair(*va, *vb);
        reports.push_back(verify_init(k, l, N, pair));
      }
      if (*v_boundary) reports.push_back(verify_boundary(k, l, N));
      if (*v_rec) reports.push_back(verify_recursion(l, k, N));
      if (*v_shift) {
        std::vector<Configuration> sample;
        for (const auto& s : sample_configs) sample.push_back(parse_configuration(s));
        if (sample_configs.empty()) sample = shift_sample(k, l, width);
        reports.push_back(verify_shift(k, l, sample));
      }
      if (*v_all) reports = verify_all(GridLimits{cap_k, cap_N});
      return report_results(reports, json, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rigged::cli
