#include "bsgkit/cli.hpp"

#include "bsgkit/bounds.hpp"
#include "bsgkit/error.hpp"
#include "bsgkit/generate.hpp"
#include "bsgkit/json_io.hpp"
#include "bsgkit/octopus.hpp"
#include "bsgkit/sumsets.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace bsg {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Rational> rational_opt(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Usage(std::string(flag) + ": " + e.what());
  }
}

Rational rational_req(const std::string& text, const char* flag) {
  auto q = rational_opt(text, flag);
  if (!q) throw Usage(std::string(flag) + " is required");
  return *q;
}

std::vector<GroupElem> elems_from_text(const GroupSpec& spec, const std::string& text, const char* flag) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Usage(std::string(flag) + ": expected a JSON array of elements");
  }
  if (!j.is_array()) throw Usage(std::string(flag) + ": expected a JSON array of elements");
  std::vector<GroupElem> elems;
  for (const auto& e : j) elems.push_back(elem_from_json(spec, e));
  return elems;
}

Json elems_to_json(const ElemSet& s) {
  Json out = Json::array();
  for (const auto& e : s.elems()) out.push_back(elem_to_json(e));
  return out;
}

Caps caps_from_env(unsigned workers) {
  Caps caps;
  if (const char* env = std::getenv("BSGKIT_CAPS")) caps = apply_caps_overrides(caps, env);
  caps.workers = workers;
  return caps;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text_file(path, text);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructive Balog-Szemeredi-Gowers toolkit", "bsgkit"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 1;
  std::string out_path;
  app.add_option("--workers", workers, "Threads for counting sweeps")->check(CLI::Range(1u, 256u));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string family = "complete";
  std::uint32_t r = 2, n = 0;
  std::vector<std::uint32_t> sizes;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> moduli{0};
  std::string gen_K, ap_fraction, target_C, gen_delta;
  gen->add_option("--family", family)->check(CLI::IsMember({"complete", "random-density", "planted", "dense"}));
  gen->add_option("--r", r)->check(CLI::Range(2u, 16u));
  gen->add_option("--n", n, "Size of every part");
  gen->add_option("--sizes", sizes, "Per-part sizes")->delimiter(',');
  gen->add_option("--seed", seed);
  gen->add_option("--moduli", moduli, "Group moduli, 0 for Z")->delimiter(',');
  gen->add_option("--K", gen_K);
  gen->add_option("--ap-fraction", ap_fraction);
  gen->add_option("--target-C", target_C);
  gen->add_option("--delta", gen_delta);
  gen->add_option("--out", out_path);

  // measure
  auto* measure = app.add_subcommand("measure", "Measure K, C and sumset sizes");
  std::string instance_path;
  measure->add_option("--instance", instance_path)->required();
  measure->add_option("--out", out_path);

  // count
  auto* count = app.add_subcommand("count", "Count octopuses on one support");
  std::vector<std::uint32_t> support;
  count->add_option("--instance", instance_path)->required();
  count->add_option("--support", support)->required()->delimiter(',');
  std::string exact_mode;
  count->add_option("--exact", exact_mode, "Also enumerate exactly")->check(CLI::IsMember({"full", "named-only"}));
  count->add_option("--out", out_path);

  // extract
  auto* extract = app.add_subcommand("extract", "Run an extraction pipeline and check its bounds");
  std::string mode_text = "general", K_text, C_text, eps_text, delta_text;
  std::optional<std::uint64_t> random_pivots;
  extract->add_option("--instance", instance_path)->required();
  extract->add_option("--mode", mode_text)->check(CLI::IsMember({"general", "dense", "almost-all"}));
  extract->add_option("--K", K_text);
  extract->add_option("--C", C_text);
  extract->add_option("--eps", eps_text);
  extract->add_option("--delta", delta_text, "p/q or auto");
  extract->add_option("--random-pivots", random_pivots, "Seed for a shuffled pivot order");
  extract->add_option("--out", out_path);

  // verify
  auto* verify = app.add_subcommand("verify", "Recheck a stored result against its instance");
  std::string result_path, verify_mode;
  bool representations = false;
  verify->add_option("--instance", instance_path)->required();
  verify->add_option("--result", result_path)->required();
  verify->add_option("--mode", verify_mode)->check(CLI::IsMember({"general", "dense", "almost-all"}));
  verify->add_flag("--representations", representations, "Also check representation counts");
  verify->add_option("--out", out_path);

  // report
  auto* report = app.add_subcommand("report", "Render a stored bound report");
  bool csv = false;
  report->add_option("--result", result_path)->required();
  report->add_flag("--csv", csv);
  report->add_option("--out", out_path);

  // energy / sumset
  auto* energy = app.add_subcommand("energy", "Additive energy and doubling of a set");
  std::string set_a, set_b;
  energy->add_option("--moduli", moduli)->delimiter(',');
  energy->add_option("--set", set_a, "JSON array of elements")->required();
  energy->add_option("--out", out_path);
  auto* sum = app.add_subcommand("sumset", "Sumset of two sets");
  sum->add_option("--moduli", moduli)->delimiter(',');
  sum->add_option("--a", set_a)->required();
  sum->add_option("--b", set_b);
  sum->add_option("--out", out_path);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bsgkit: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const Caps caps = caps_from_env(workers);

    if (*gen) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.group = make_group(moduli);
      if (!sizes.empty()) {
        cfg.sizes = sizes;
      } else if (n > 0) {
        cfg.sizes.assign(r, n);
      } else {
        throw Usage("gen needs --n or --sizes");
      }
      if (family == "complete") {
        cfg.family = family::Complete{};
      } else if (family == "random-density") {
        family::RandomDensity f;
        if (auto k = rational_opt(gen_K, "--K")) f.K = *k;
        cfg.family = f;
      } else if (family == "planted") {
        family::Planted f;
        if (auto q = rational_opt(ap_fraction, "--ap-fraction")) f.ap_fraction = *q;
        if (auto q = rational_opt(target_C, "--target-C")) f.target_C = *q;
        if (auto k = rational_opt(gen_K, "--K")) f.K = *k;
        cfg.family = f;
      } else {
        family::Dense f;
        if (auto d = rational_opt(gen_delta, "--delta")) f.delta = *d;
        cfg.family = f;
      }
      emit(dump(instance_to_json(gen_instance(cfg), cfg)), out_path, out);
      return kExitOk;
    }

    if (*measure) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const InstanceMeasure m = measure_instance(inst);
      Json j{{"K", to_string(m.K)},
             {"density", to_string(m.density)},
             {"restricted_sumset_size", m.restricted_sumset_size},
             {"C_pow_r", to_string(m.c_pow_r)},
             {"C_approx", m.c_approx},
             {"full_sumset_size", m.full_sumset_size},
             {"r", inst.arity()},
             {"part_sizes", inst.part_sizes()},
             {"edges", inst.graph.edge_count()}};
      emit(dump(j), out_path, out);
      return kExitOk;
    }

    if (*count) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const OctopusCounter counter(inst.graph);
      const Tuple t(support.begin(), support.end());
      Json j{{"support", support}, {"relaxed", to_string(counter.relaxed(t))}};
      if (!exact_mode.empty()) {
        const auto mode = exact_mode == "full" ? Disjointness::Full : Disjointness::NamedOnly;
        j["exact"] = to_string(counter.exact(t, mode, caps.enumeration_budget));
        j["exact_mode"] = exact_mode;
      }
      emit(dump(j), out_path, out);
      return kExitOk;
    }

    if (*extract) {
      const Mode mode = parse_mode(mode_text);
      const auto K = rational_opt(K_text, "--K");
      const auto C = rational_opt(C_text, "--C");
      std::optional<Rational> delta;
      if (!delta_text.empty() && delta_text != "auto") delta = rational_req(delta_text, "--delta");
      const Instance inst = instance_from_json(read_json_file(instance_path));

      BsgRun run;
      if (mode == Mode::General) {
        if (!eps_text.empty() || !delta_text.empty()) throw Usage("--eps/--delta apply to the dense modes");
        DrcOptions opts;
        opts.random_pivots = random_pivots;
        run = bsg_extract(inst, BsgParams{K, C}, caps, opts);
      } else {
        if (K) throw Usage("--K applies to the general mode");
        const Rational eps = rational_req(eps_text, "--eps");
        if (mode == Mode::Dense) {
          if (C) throw Usage("--C applies to the general and almost-all modes");
          run.result = dense_extract(inst, eps, delta, caps);
          run.report = check_bounds(run.result, inst, Mode::Dense, caps);
        } else {
          run = almost_all_extract(inst, C, eps, delta, caps);
        }
      }
      Json j = result_to_json(run.result);
      j["report"] = report_to_json(run.report);
      emit(dump(j), out_path, out);
      return run.report.overall() ? kExitOk : kExitFail;
    }

    if (*verify) {
      const Instance inst = instance_from_json(read_json_file(instance_path));
      const ExtractionResult result = result_from_json(read_json_file(result_path));
      const Mode mode = verify_mode.empty() ? result.mode : parse_mode(verify_mode);
      BoundReport rep = check_bounds(result, inst, mode, caps);
      Json j{{"mode", std::string(mode_name(mode))}};
      if (representations) {
        const Rational L = measured_octopus_L(result, inst, caps);
        rep.append(check_representations(result, inst, L, caps));
        j["L"] = to_string(L);
      }
      j["report"] = report_to_json(rep);
      emit(dump(j), out_path, out);
      return rep.overall() ? kExitOk : kExitFail;
    }

    if (*report) {
      const Json doc = read_json_file(result_path);
      const Json& rep = doc.contains("report") ? doc.at("report") : doc;
      std::ostringstream text;
      if (csv) text << "name,relation,lhs,rhs,pass,anchor\n";
      for (const auto& q : rep.at("inequalities")) {
        const std::string name = q.at("name"), rel = q.at("relation"), lhs = q.at("lhs"), rhs = q.at("rhs");
        const bool pass = q.at("pass");
        if (csv)
          text << csv_field(name) << ',' << csv_field(rel) << ',' << lhs << ',' << rhs << ','
               << (pass ? "PASS" : "FAIL") << ',' << csv_field(q.at("anchor").get<std::string>()) << '\n';
        else
          text << (pass ? "PASS " : "FAIL ") << name << ": " << lhs << ' ' << rel << ' ' << rhs << '\n';
      }
      const bool overall = rep.at("overall");
      if (!csv) text << "overall: " << (overall ? "PASS" : "FAIL") << '\n';
      emit(text.str(), out_path, out);
      return overall ? kExitOk : kExitFail;
    }

    const GroupSpec spec = make_group(moduli);
    if (*energy) {
      const ElemSet a(spec, elems_from_text(spec, set_a, "--set"));
      const SumStats s = sum_stats(a);
      Json j{{"size", a.size()},
             {"energy", to_string(s.energy)},
             {"sumset_size", s.sumset_size},
             {"doubling", to_string(s.doubling)}};
      emit(dump(j), out_path, out);
      return kExitOk;
    }

    if (*sum) {
      const ElemSet a(spec, elems_from_text(spec, set_a, "--a"));
      const ElemSet b = set_b.empty() ? a : ElemSet(spec, elems_from_text(spec, set_b, "--b"));
      const ElemSet s = sumset(a, b);
      emit(dump(Json{{"size", s.size()}, {"elems", elems_to_json(s)}}), out_path, out);
      return kExitOk;
    }
  } catch (const Usage& e) {
    err << "bsgkit: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "bsgkit: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "bsgkit: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace bsg
