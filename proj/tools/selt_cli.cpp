// selt: command-line front end for the shifted edge labeled tableau library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "selt/error.hpp"
#include "selt/eyd.hpp"
#include "selt/harness.hpp"
#include "selt/jdt.hpp"
#include "selt/json_io.hpp"
#include "selt/parallel.hpp"
#include "selt/render.hpp"
#include "selt/ring.hpp"
#include "selt/slide_calc.hpp"

namespace {

using namespace selt;

enum Exit : int {
  kOk = 0,
  kInputError = 2,
  kCapacity = 3,
  kRingForm = 4,
  kTheoremFailure = 5,
  kNotSlidable = 6,
};

StrictPartition parse_partition(const std::string& text) {
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InvalidArgument("cannot parse partition \"" + text + "\"");
    }
    parts.push_back(v);
  }
  return StrictPartition(std::move(parts));
}

Json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

struct Options {
  std::string format = "json";
  std::string outer, inner = "-", lambda = "-", mu = "-", nu = "-";
  int labels = 0;
  std::string kind, suite, input, tableau_file, method = "auto";
  int n = 0, m = 0;
  int max_n = 4, max_weight = 7, excess = 2;
  int jobs = default_jobs();
};

int cmd_enumerate(const Options& o) {
  const SkewShape shape(parse_partition(o.outer), parse_partition(o.inner));
  std::uint64_t index = 0;
  for_each_selt(shape, o.labels, [&](const EdgeTableau& t) {
    if (o.format == "ascii") {
      if (index) std::cout << '\n';
      std::cout << "# " << index << '\n' << render_ascii(t);
    } else {
      std::cout << to_json(t).dump() << '\n';
    }
    ++index;
  });
  std::cerr << index << " tableaux\n";
  return kOk;
}

int cmd_rectify(const Options& o) {
  const EdgeTableau t = tableau_from_json(read_json(o.input));
  const auto violations = validate(t);
  if (!violations.empty()) {
    Json list = Json::array();
    for (const Violation& v : violations) list.push_back(to_json(v));
    std::cout << Json{{"error", "invalid tableau"}, {"violations", list}}.dump(2) << '\n';
    return kInputError;
  }
  const RectificationTrace trace = rectify(t);
  if (o.format == "ascii") {
    for (size_t i = 0; i < trace.states.size(); ++i) {
      if (i) std::cout << "-- slide at (" << trace.corners[i - 1].row << ','
                       << trace.corners[i - 1].col << ")\n";
      std::cout << render_ascii(trace.states[i]);
    }
  } else {
    std::cout << to_json(trace).dump(2) << '\n';
  }
  return kOk;
}

SolveMethod parse_method(const std::string& s) {
  if (s == "auto") return SolveMethod::kAuto;
  if (s == "linear") return SolveMethod::kLinearSystem;
  if (s == "normal-form") return SolveMethod::kNormalForm;
  throw InvalidArgument("unknown method \"" + s + "\"");
}

int cmd_coeff(const Options& o) {
  const StrictPartition lambda = parse_partition(o.lambda);
  const StrictPartition mu = parse_partition(o.mu);
  const StrictPartition nu = parse_partition(o.nu);
  const SolveMethod method = parse_method(o.method);
  Json value;
  std::string text;
  if (o.kind == "d") {
    const std::uint64_t v = count_d(lambda, mu, nu, o.jobs);
    value = v;
    text = std::to_string(v);
  } else if (o.kind == "frakd-ring") {
    const Integer v = frak_d(lambda, mu, nu, method);
    value = to_json(v);
    text = v.str();
  } else if (o.kind == "frakd-eyd") {
    const std::uint64_t v = frakd_localization(lambda, mu);
    value = v;
    text = std::to_string(v);
  } else if (o.kind == "frakD") {
    const ZPolynomial p = frak_D(lambda, mu, nu, method);
    text = p.to_string();
    value = text;
  } else {
    throw InvalidArgument("unknown coefficient kind \"" + o.kind + "\"");
  }
  if (o.format == "ascii") {
    std::cout << text << '\n';
  } else {
    Json out = {{"kind", o.kind}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
    if (o.kind != "frakd-eyd") out["nu"] = to_json(nu);
    out["value"] = value;
    std::cout << out.dump() << '\n';
  }
  return kOk;
}

int cmd_expand(const Options& o) {
  const SigmaExpansion& e =
      product_expansion(parse_partition(o.lambda), parse_partition(o.mu), parse_method(o.method));
  if (o.format == "ascii") {
    for (const auto& [nu, poly] : e.terms) {
      std::cout << "sigma_" << nu.to_string() << ": " << poly.to_string() << '\n';
    }
  } else {
    std::cout << to_json(e).dump() << '\n';
  }
  return kOk;
}

int cmd_check(const Options& o) {
  SuiteOptions so;
  so.max_n = o.max_n;
  so.max_weight = o.max_weight;
  so.excess = o.excess;
  so.jobs = o.jobs;
  const RunReport r = run_suite(o.suite, so);
  if (o.format == "ascii") {
    for (const CaseResult& c : r.results) {
      std::cout << status_name(c.status) << ' ' << c.input.dump() << " expected "
                << c.expected.dump() << " actual " << c.actual.dump();
      if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << r.count(CaseStatus::kPass) << " pass, " << r.count(CaseStatus::kFail)
              << " fail, " << r.count(CaseStatus::kReported) << " reported in "
              << r.elapsed_seconds << " s\n";
  } else {
    std::cout << r.to_json().dump(2) << '\n';
  }
  return r.has_failures() ? kTheoremFailure : kOk;
}

int cmd_bijection(const Options& o) {
  if (!o.tableau_file.empty()) {
    const EdgeTableau t = tableau_from_json(read_json(o.tableau_file));
    require_valid(t);
    const Shading s = tableau_to_shading(t);
    std::cout << (o.format == "ascii" ? render_ascii(s) : to_json(s).dump() + "\n");
    return kOk;
  }
  Shading s{o.n, o.m, {}};
  if (!o.input.empty()) {
    s = shading_from_json(read_json(o.input));
    if (s.n != o.n || s.m != o.m) {
      throw InvalidArgument("shading is for (n,m)=(" + std::to_string(s.n) + "," +
                            std::to_string(s.m) + "), not (" + std::to_string(o.n) + "," +
                            std::to_string(o.m) + ")");
    }
  }
  const EdgeTableau t = shading_to_tableau(s);
  std::cout << (o.format == "ascii" ? render_ascii(t) : to_json(t).dump() + "\n");
  return kOk;
}

int cmd_eyd(const Options& o) {
  const auto diagrams = enumerate_eyd(parse_partition(o.lambda), parse_partition(o.mu));
  if (o.format == "ascii") {
    for (size_t i = 0; i < diagrams.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << render_ascii(diagrams[i]);
    }
    std::cout << diagrams.size() << " diagrams\n";
  } else {
    Json list = Json::array();
    for (const auto& d : diagrams) list.push_back(to_json(d));
    std::cout << Json{{"count", diagrams.size()}, {"diagrams", list}}.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted edge labeled tableaux: enumeration, jeu de taquin, slide calculus, "
               "excited diagrams and the Pfaffian ring."};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "ascii"}))
        ->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads (default: $SSL_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List SELT(outer/inner, labels)");
  enumerate->add_option("--outer", o.outer, "Outer strict partition, e.g. 3,2")->required();
  enumerate->add_option("--inner", o.inner, "Inner strict partition ('-' for empty)");
  enumerate->add_option("--labels", o.labels, "Number of labels")->required();
  add_format(enumerate);

  auto* rectify_cmd = app.add_subcommand("rectify", "Row-rectify a tableau given as JSON");
  rectify_cmd->add_option("input", o.input, "Tableau JSON file ('-' or omitted: stdin)");
  add_format(rectify_cmd);

  auto* coeff = app.add_subcommand("coeff", "Compute a structure coefficient");
  coeff->add_option("kind", o.kind, "d | frakd-ring | frakd-eyd | frakD")
      ->required()
      ->check(CLI::IsMember({"d", "frakd-ring", "frakd-eyd", "frakD"}));
  coeff->add_option("--lambda", o.lambda, "lambda");
  coeff->add_option("--mu", o.mu, "mu");
  coeff->add_option("--nu", o.nu, "nu");
  coeff->add_option("--method", o.method, "Ring solver: auto | linear | normal-form");
  add_format(coeff);
  add_jobs(coeff);

  auto* expand = app.add_subcommand("expand", "Expand sigma_lambda * sigma_mu in the sigma basis");
  expand->add_option("--lambda", o.lambda, "lambda");
  expand->add_option("--mu", o.mu, "mu");
  expand->add_option("--method", o.method, "Ring solver: auto | linear | normal-form");
  add_format(expand);

  auto* check = app.add_subcommand("check", "Run a verification sweep");
  check->add_option("suite", o.suite,
                    "pieri | staircase | vanishing | equivalence | lemma-loc | conjecture")
      ->required()
      ->check(CLI::IsMember(
          {"pieri", "staircase", "vanishing", "equivalence", "lemma-loc", "conjecture"}));
  check->add_option("--max-n", o.max_n, "Largest staircase size")->capture_default_str();
  check->add_option("--max-weight", o.max_weight, "Largest |lambda|+|mu|")->capture_default_str();
  check->add_option("--excess", o.excess, "Vanishing sweep: largest |mu| - |rho_{n,m}|")
      ->capture_default_str();
  add_format(check);
  add_jobs(check);

  auto* bijection = app.add_subcommand("bijection", "Map shadings to tableaux and back");
  bijection->add_option("--n", o.n, "n");
  bijection->add_option("--m", o.m, "m");
  bijection->add_option("shading", o.input, "Shading JSON file ('-' for stdin; omit for none)");
  bijection->add_option("--tableau", o.tableau_file, "Tableau JSON file to map back to a shading");
  add_format(bijection);

  auto* eyd = app.add_subcommand("eyd", "List the excited diagrams of lambda in mu");
  eyd->add_option("--lambda", o.lambda, "lambda");
  eyd->add_option("--mu", o.mu, "ambient shape mu");
  add_format(eyd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*rectify_cmd) return cmd_rectify(o);
    if (*coeff) return cmd_coeff(o);
    if (*expand) return cmd_expand(o);
    if (*check) return cmd_check(o);
    if (*bijection) return cmd_bijection(o);
    if (*eyd) return cmd_eyd(o);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const FormError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRingForm;
  } catch (const DivisibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRingForm;
  } catch (const HomogeneityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRingForm;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRingForm;
  } catch (const NotSlidable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotSlidable;
  } catch (const BadTableau& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotSlidable;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
