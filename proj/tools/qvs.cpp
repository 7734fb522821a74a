// Workbench entry point: file validation, enumeration, law checking, demos.
// Exit codes: 0 all checks pass, 1 some check failed, 2 structural or parse
// error, 3 capacity cap exceeded, 4 unsupported capability.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qvs/axioms.hpp"
#include "qvs/demo.hpp"
#include "qvs/io.hpp"
#include "qvs/monad.hpp"
#include "qvs/monadicity.hpp"
#include "qvs/parallel.hpp"
#include "qvs/presheaf.hpp"
#include "qvs/quantale.hpp"
#include "qvs/quantaloid.hpp"
#include "qvs/report.hpp"

namespace {

using namespace qvs;

struct Options {
  std::string format = "table";
  bool serial = false;
  std::int64_t max_presheaves = 100000;
  std::int64_t max_maps = 1000000;

  EnumCaps caps() const { return EnumCaps{max_presheaves, max_maps}; }
  bool json_out() const { return format == "json"; }
};

// Single sink for every subcommand: canonical report order comes from the
// formatters, the exit code from the reports.
int emit(const Options& opt, const std::string& command, const Reports& rs,
         const json& payload, const std::string& text) {
  if (opt.json_out()) {
    json doc{{"command", command},
             {"passed", all_passed(rs)},
             {"report", reports_to_json(rs)}};
    if (payload.is_object())
      for (const auto& [k, v] : payload.items()) doc[k] = v;
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!text.empty()) std::cout << text;
    std::cout << reports_to_table(rs);
  }
  return all_passed(rs) ? 0 : 1;
}

LawReport named(std::string prefix, LawReport r) {
  r.check = std::move(prefix) + "." + r.check;
  return r;
}

int run_validate_quantale(const Options& opt, const std::string& path) {
  set_parallel_kernels(!opt.serial);
  FiniteQuantale Q = load_quantale(parse_json_file(path), path);
  Reports rs = validate_quantale(Q);
  std::ostringstream os;
  os << "carrier (" << Q.size() << "):";
  for (const std::string& n : Q.names()) os << " " << n;
  os << "\n";
  return emit(opt, "validate-quantale", rs,
              {{"input", path}, {"carrier", Q.names()}}, os.str());
}

int run_dstar(const Options& opt, const std::string& path) {
  set_parallel_kernels(!opt.serial);
  auto Q = std::make_shared<const FiniteQuantale>(load_quantale(parse_json_file(path), path));
  Reports rs = scoped("quantale", validate_quantale(*Q));
  if (!all_passed(rs)) return emit(opt, "dstar", rs, {{"input", path}}, "");
  Quantaloid K = build_dstar(Q);
  append(rs, scoped("arrows", validate_quantaloid(K)));

  std::ostringstream os;
  os << "objects (" << K.objects() << "):";
  json names = json::array();
  for (int o = 0; o < K.objects(); ++o) {
    os << " " << K.obj_name(o);
    names.push_back(K.obj_name(o));
  }
  os << "\n";
  json homs = json::array();
  for (int p = 0; p < K.objects(); ++p)
    for (int q = 0; q < K.objects(); ++q) {
      const HomSet& h = K.hom(p, q);
      os << "hom(" << K.obj_name(p) << "," << K.obj_name(q) << ") = {";
      json els = json::array();
      for (std::size_t i = 0; i < h.elems.size(); ++i) {
        if (i) os << ", ";
        os << K.base().name(h.elems[i]);
        els.push_back(K.base().name(h.elems[i]));
      }
      os << "}\n";
      homs.push_back({{"from", K.obj_name(p)}, {"to", K.obj_name(q)}, {"elements", els}});
    }
  return emit(opt, "dstar", rs,
              {{"input", path}, {"objects", names}, {"homs", homs}}, os.str());
}

// Structure first (category laws over the arrow quantaloid), then the same
// data read as a valued set (bound, divisibility, triangle, symmetry).
int run_validate_qset(const Options& opt, const std::string& path, bool thorough) {
  set_parallel_kernels(!opt.serial);
  LoadedQSet L = load_qset(parse_json_file(path), path);
  Reports rs = scoped("category", validate_category(L.cat));
  rs.push_back(named("category", check_symmetric(L.cat)));

  FiniteBackend B{L.base.get()};
  auto alpha = [&](int x, int y) { return L.cat.hom(x, y); };
  auto label = [&](int x) { return L.cat.label(x); };
  append(rs, scoped("axioms",
                    check_valued_set_axioms<FiniteBackend>(B, L.cat.size(), alpha, label)));

  json payload{{"input", path}};
  std::ostringstream os;
  os << "elements (" << L.cat.size() << "):";
  for (int x = 0; x < L.cat.size(); ++x) os << " " << L.cat.label(x);
  os << "\n";
  if (thorough) {
    CompletenessInfo info = check_complete(L.cat, opt.caps());
    append(rs, scoped("complete", info.reports));
    payload["completeness"] = json{{"tensored", info.tensored},
                                   {"cotensored", info.cotensored},
                                   {"order_complete", info.order_complete},
                                   {"complete", info.complete}};
    os << "completeness: tensored=" << info.tensored << " cotensored=" << info.cotensored
       << " order_complete=" << info.order_complete << " complete=" << info.complete << "\n";
  }
  return emit(opt, "validate-qset", rs, payload, os.str());
}

int run_enumerate_powerset(const Options& opt, const std::string& path, bool with_hom) {
  set_parallel_kernels(!opt.serial);
  LoadedQSet L = load_qset(parse_json_file(path), path);
  Reports rs = scoped("category", validate_category(L.cat));
  rs.push_back(named("category", check_symmetric(L.cat)));
  if (!all_passed(rs)) return emit(opt, "enumerate-powerset", rs, {{"input", path}}, "");

  const Quantaloid& K = L.cat.quantaloid();
  std::vector<Presheaf> subsets = enumerate_potential_subsets(L.cat, opt.caps());
  rs.push_back(LawReport{.check = "powerset.enumerated", .method = "exhaustive",
                         .cases = static_cast<std::int64_t>(subsets.size())});
  rs.push_back(check_power_paths_agree(L.cat, opt.caps()));

  std::ostringstream os;
  os << "potential subsets (" << subsets.size() << "):\n";
  json weights = json::array();
  for (const Presheaf& mu : subsets) {
    os << "  (type " << K.obj_name(mu.type_obj) << ") [";
    json values = json::object();
    for (int x = 0; x < L.cat.size(); ++x) {
      if (x) os << ", ";
      const std::string v = L.base->name(mu.values[static_cast<std::size_t>(x)]);
      os << L.cat.label(x) << ":" << v;
      values[L.cat.label(x)] = v;
    }
    os << "]\n";
    weights.push_back({{"type", K.obj_name(mu.type_obj)}, {"values", values}});
  }
  json payload{{"input", path}, {"weights", weights}};

  if (with_hom) {
    PowerObject PX = power_object(L.cat, opt.caps());
    os << "power object hom matrix (" << PX.cat.size() << " x " << PX.cat.size() << "):\n";
    json rows = json::array(), carrier = json::array();
    for (int i = 0; i < PX.cat.size(); ++i) carrier.push_back(PX.cat.label(i));
    for (int i = 0; i < PX.cat.size(); ++i) {
      os << "  " << PX.cat.label(i) << ":";
      json row = json::array();
      for (int j = 0; j < PX.cat.size(); ++j) {
        os << " " << L.base->name(PX.cat.hom(i, j));
        row.push_back(L.base->name(PX.cat.hom(i, j)));
      }
      os << "\n";
      rows.push_back(row);
    }
    payload["power_carrier"] = carrier;
    payload["power_hom"] = rows;
  }
  return emit(opt, "enumerate-powerset", rs, payload, os.str());
}

int run_check_monad_laws(const Options& opt, const std::string& path, const std::string& mode,
                         std::uint64_t seed, std::int64_t samples, int max_size) {
  set_parallel_kernels(!opt.serial);
  LoadedQSet L = load_qset(parse_json_file(path), path);
  if (L.cat.size() > max_size)
    throw CapacityError("carrier exceeds --max-size", L.cat.size(), max_size);

  Reports rs = scoped("category", validate_category(L.cat));
  rs.push_back(named("category", check_symmetric(L.cat)));
  if (!all_passed(rs)) return emit(opt, "check-monad-laws", rs, {{"input", path}}, "");

  SampleSpec spec{mode == "sampled", seed, samples};
  append(rs, check_monad_laws(L.cat, opt.caps(), spec));

  json payload{{"input", path}, {"mode", mode}};
  if (spec.sampled) {
    payload["seed"] = seed;
    payload["samples"] = samples;
  }
  return emit(opt, "check-monad-laws", rs, payload, "");
}

int run_check_monadicity(const Options& opt, const std::string& inst_path,
                         const std::string& builtin) {
  set_parallel_kernels(!opt.serial);
  LoadedInstance inst =
      builtin.empty()
          ? load_instance(parse_json_file(inst_path), inst_path)
          : load_instance(json{{"schema", "monadicity/1"}, {"builtin", builtin}},
                          "--builtin " + builtin);
  const std::string name = builtin.empty() ? inst_path : builtin;
  SplitLiftResult res = verify_split_lift(inst.fork, inst.cocones, opt.caps());

  std::ostringstream os;
  os << "instance: " << name << "\n";
  os << (res.ok ? "monadic descent verified\n" : "MONADICITY CHECK FAILED\n");
  os << "detail: " << res.detail.dump() << "\n";
  return emit(opt, "check-monadicity", res.reports,
              {{"instance", name}, {"verified", res.ok}, {"detail", res.detail}}, os.str());
}

int run_demo_crisp(const Options& opt, int n) {
  set_parallel_kernels(!opt.serial);
  if (opt.json_out()) {
    std::ostringstream sink;
    Reports rs = demo_crisp(n, sink);
    return emit(opt, "demo crisp", rs, {{"n", n}}, "");
  }
  // prints its own walkthrough and report table
  return all_passed(demo_crisp(n, std::cout)) ? 0 : 1;
}

int run_demo_partial_metric(const Options& opt) {
  set_parallel_kernels(!opt.serial);
  if (opt.json_out()) {
    std::ostringstream sink;
    Reports rs = demo_partial_metric(sink);
    return emit(opt, "demo partial-metric", rs, json::object(), "");
  }
  return all_passed(demo_partial_metric(std::cout)) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for quantale-valued sets: validation, enumeration, law checks"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_flag("--serial", opt.serial, "use the serial reference kernels");
  app.add_option("--max-presheaves", opt.max_presheaves, "presheaf enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-maps", opt.max_maps, "map enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string q_path, d_path, qs_path, pw_path, ml_path, inst_path, builtin;
  bool thorough = false, with_hom = false;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::int64_t samples = 1000;
  int max_size = 6, demo_n = 3;
  int rc = 0;

  auto* vq = app.add_subcommand("validate-quantale", "check every quantale axiom of a file");
  vq->add_option("file", q_path, "quantale json file")->required();
  vq->fallthrough();
  vq->callback([&] { rc = run_validate_quantale(opt, q_path); });

  auto* ds = app.add_subcommand("dstar", "build and print the arrow quantaloid of a quantale");
  ds->add_option("file", d_path, "quantale json file")->required();
  ds->fallthrough();
  ds->callback([&] { rc = run_dstar(opt, d_path); });

  auto* vs = app.add_subcommand("validate-qset", "validate a valued-set file");
  vs->add_option("file", qs_path, "valued-set json file")->required();
  vs->add_flag("--thorough", thorough, "also cross-check completeness directly");
  vs->fallthrough();
  vs->callback([&] { rc = run_validate_qset(opt, qs_path, thorough); });

  auto* pw = app.add_subcommand("enumerate-powerset", "enumerate the potential subsets of a valued set");
  pw->add_option("file", pw_path, "valued-set json file")->required();
  pw->add_flag("--hom", with_hom, "also print the power object hom matrix");
  pw->fallthrough();
  pw->callback([&] { rc = run_enumerate_powerset(opt, pw_path, with_hom); });

  auto* ml = app.add_subcommand("check-monad-laws", "unit and flattening laws on a valued set");
  ml->add_option("file", ml_path, "valued-set json file")->required();
  ml->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  ml->add_option("--seed", seed, "rng seed (required when sampled)");
  ml->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber)->capture_default_str();
  ml->add_option("--max-size", max_size, "largest accepted carrier")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ml->fallthrough();
  ml->callback([&] {
    if (mode == "sampled" && ml->count("--seed") == 0)
      throw CLI::RequiredError("--seed (required when --mode sampled)");
    rc = run_check_monad_laws(opt, ml_path, mode, seed, samples, max_size);
  });

  auto* mo = app.add_subcommand("check-monadicity", "verify a split descent instance step by step");
  auto* oi = mo->add_option("--instance", inst_path, "monadicity instance file");
  auto* ob = mo->add_option("--builtin", builtin, "worked instance name")
                 ->check(CLI::IsMember(builtin_split_fork_names()));
  oi->excludes(ob);
  mo->fallthrough();
  mo->callback([&] {
    if (inst_path.empty() && builtin.empty())
      throw CLI::RequiredError("--instance or --builtin");
    rc = run_check_monadicity(opt, inst_path, builtin);
  });

  auto* dm = app.add_subcommand("demo", "built-in walkthroughs, no input files needed");
  dm->require_subcommand(1);
  auto* dc = dm->add_subcommand("crisp", "crisp n-point set over the two-element base");
  dc->add_option("--n", demo_n, "number of points")->check(CLI::Range(1, 4))->capture_default_str();
  dc->fallthrough();
  dc->callback([&] { rc = run_demo_crisp(opt, demo_n); });
  auto* dp = dm->add_subcommand("partial-metric", "rational intervals over the extended-cost base");
  dp->fallthrough();
  dp->callback([&] { rc = run_demo_partial_metric(opt); });
  dm->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 4;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.detail.is_object() && !e.detail.empty())
      std::cerr << e.detail.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
