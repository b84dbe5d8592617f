#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "ztau/decimal.hpp"
#include "ztau/division.hpp"
#include "ztau/errors.hpp"
#include "ztau/fermat_search.hpp"
#include "ztau/model_set.hpp"
#include "ztau/render.hpp"
#include "ztau/roots.hpp"
#include "ztau/serialize.hpp"
#include "ztau/triples.hpp"
#include "ztau/window_shift.hpp"

namespace ztau::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// CLI11 reads any argument starting with '-' as an option. Elements such as
// "-t" or "-3+2*t" are shielded with a leading space, which the element
// parser skips.
std::vector<std::string> shield_negative_elements(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  out.reserve(args.size());
  bool passthrough = false;
  for (const auto& a : args) {
    if (a == "--") passthrough = true;
    const bool element_like =
        a.size() >= 2 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == 't');
    out.push_back(!passthrough && element_like ? " " + a : a);
  }
  return out;
}

std::string sigma_text(const RingElement& x) {
  return format_element(conj(x)) + " ~ " + to_decimal(embed_conj(x));
}

Json triple_json(const PowerTriple& t) { return triple_to_json(t); }

std::string triple_text(const PowerTriple& t) {
  return format_element(t.x) + " " + format_element(t.y) + " " + format_element(t.z);
}

PowerTriple parse_triple(const std::vector<std::string>& parts, unsigned k) {
  if (parts.size() != 3) throw UsageError("expected three elements x y z");
  return {parse_element(parts[0]), parse_element(parts[1]), parse_element(parts[2]), k};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("write to " + path + " failed");
}

// ---- ring ------------------------------------------------------------------

struct RingArgs {
  std::string op;
  std::vector<std::string> elements;
  unsigned k = 2;
  bool json = false;
};

int cmd_ring(const RingArgs& a, std::ostream& out) {
  static const std::vector<std::string> unary = {"norm", "conj", "root", "embed", "canonical"};
  static const std::vector<std::string> binary = {"add", "sub", "mul", "div", "gcd", "divides"};
  const bool is_unary = std::find(unary.begin(), unary.end(), a.op) != unary.end();
  const bool is_binary = std::find(binary.begin(), binary.end(), a.op) != binary.end();
  if (!is_unary && !is_binary) throw UsageError("unknown ring operation '" + a.op + "'");
  const std::size_t arity = is_unary ? 1 : 2;
  if (a.elements.size() != arity) {
    throw UsageError("ring " + a.op + " takes " + std::to_string(arity) + " element(s)");
  }
  const RingElement x = parse_element(a.elements[0]);
  const RingElement y = arity == 2 ? parse_element(a.elements[1]) : RingElement::zero();

  Json j;
  std::string text;
  if (a.op == "norm") {
    const Integer n = norm(x);
    j = {{"norm", integer_to_json(n)}};
    text = n.get_str();
  } else if (a.op == "conj") {
    j = {{"conj", element_to_json(conj(x))}};
    text = format_element(conj(x));
  } else if (a.op == "root") {
    const auto r = is_kth_power(x, a.k);
    j = {{"k", a.k}, {"root", r ? element_to_json(*r) : Json(nullptr)}};
    text = r ? format_element(*r) : "none";
  } else if (a.op == "embed") {
    const std::string real = to_decimal(embed(x));
    const std::string sigma = to_decimal(embed_conj(x));
    j = {{"real", real}, {"conj", sigma}};
    text = "real ~ " + real + "\nconj ~ " + sigma;
  } else if (a.op == "canonical") {
    const auto [c, u] = canonical_associate(x);
    j = {{"associate", element_to_json(c)}, {"unit_sign", u.sign}, {"unit_exponent", u.exponent}};
    text = format_element(c) + " (unit " + (u.sign < 0 ? "-" : "") + "t^" + std::to_string(u.exponent) + ")";
  } else if (a.op == "add" || a.op == "sub" || a.op == "mul" || a.op == "gcd") {
    const RingElement r = a.op == "add"   ? x + y
                          : a.op == "sub" ? x - y
                          : a.op == "mul" ? x * y
                                          : gcd(x, y);
    j = {{a.op, element_to_json(r)}};
    text = format_element(r);
  } else if (a.op == "div") {
    const DivResult d = euclid_div(x, y);
    j = {{"quotient", element_to_json(d.quotient)}, {"remainder", element_to_json(d.remainder)}};
    text = "quotient " + format_element(d.quotient) + "\nremainder " + format_element(d.remainder);
  } else {
    const auto q = divides(x, y);
    j = {{"quotient", q ? element_to_json(*q) : Json(nullptr)}};
    text = q ? format_element(*q) : "none";
  }
  out << (a.json ? j.dump() : text) << '\n';
  return kOk;
}

// ---- modelset --------------------------------------------------------------

struct ModelSetArgs {
  int iterations = 0;
  int cap = kDefaultPatchCap;
  std::string element;
  std::string from;
  std::string to;
  bool json = false;
};

void print_points(const std::vector<RingElement>& points, Json meta, bool json, std::ostream& out) {
  if (json) {
    meta["points"] = elements_to_json(points);
    out << meta.dump() << '\n';
    return;
  }
  for (const auto& p : points) out << format_element(p) << '\n';
}

int cmd_patch(const ModelSetArgs& a, std::ostream& out) {
  const Patch p = patch(a.iterations, a.cap);
  print_points(p.points, {{"iterations", a.iterations}}, a.json, out);
  return kOk;
}

int cmd_contains(const ModelSetArgs& a, std::ostream& out) {
  const RingElement x = parse_element(a.element);
  const bool member = contains(x);
  if (a.json) {
    out << Json{{"element", element_to_json(x)},
                {"member", member},
                {"sigma", element_to_json(conj(x))},
                {"sigma_decimal", to_decimal(embed_conj(x))}}
               .dump()
        << '\n';
  } else {
    out << (member ? "true" : "false") << "  sigma = " << sigma_text(x) << '\n';
  }
  return kOk;
}

int cmd_interval(const ModelSetArgs& a, std::ostream& out) {
  const RingElement lo = parse_element(a.from);
  const RingElement hi = parse_element(a.to);
  print_points(members_in_interval(embed(lo), embed(hi)),
               {{"from", element_to_json(lo)}, {"to", element_to_json(hi)}}, a.json, out);
  return kOk;
}

// ---- triples ---------------------------------------------------------------

struct TriplesArgs {
  std::string l = "1";
  std::string m;
  std::string n;
  int sign = 1;
  bool swapped = false;
  int bound = 1;
  std::size_t limit = 1000;
  unsigned k = 2;
  std::vector<std::string> elements;
  bool json = false;
};

int cmd_gen(const TriplesArgs& a, std::ostream& out) {
  if (a.sign != 1 && a.sign != -1) throw UsageError("--sign must be 1 or -1");
  const Parametrization p{parse_element(a.l), parse_element(a.m), parse_element(a.n), a.sign, a.swapped};
  const PowerTriple t = from_params(p);
  out << (a.json ? triple_json(t).dump() : triple_text(t)) << '\n';
  return kOk;
}

int cmd_enum(const TriplesArgs& a, std::ostream& out) {
  enumerate(a.bound, a.limit, [&](const PowerTriple& t) {
    out << (a.json ? triple_json(t).dump() : triple_text(t)) << '\n';
  });
  return kOk;
}

int cmd_decompose(const TriplesArgs& a, std::ostream& out) {
  const PowerTriple t = parse_triple(a.elements, 2);
  const Parametrization p = decompose(t);
  if (a.json) {
    out << Json{{"triple", triple_json(t)}, {"params", params_to_json(p)}}.dump() << '\n';
  } else {
    out << "l = " << format_element(p.l) << "\nm = " << format_element(p.m) << "\nn = " << format_element(p.n)
        << "\nsign = " << (p.sign < 0 ? "-1" : "+1") << "\nswapped = " << (p.swapped ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_verify(const TriplesArgs& a, std::ostream& out) {
  const PowerTriple t = parse_triple(a.elements, a.k);
  const bool holds = verify(t);
  if (a.json) {
    out << Json{{"triple", triple_json(t)}, {"holds", holds}}.dump() << '\n';
  } else {
    out << (holds ? "true" : "false") << '\n';
  }
  return kOk;
}

// ---- shift -----------------------------------------------------------------

struct ShiftArgs {
  unsigned k = 2;
  std::vector<std::string> elements;
  std::size_t family = 0;
  bool json = false;
};

int cmd_shift(const ShiftArgs& a, std::ostream& out) {
  const PowerTriple t = parse_triple(a.elements, a.k);
  const ShiftResult r = min_shift(t);
  const auto family = a.family > 0 ? solution_family(t, a.family) : std::vector<PowerTriple>{};
  if (a.json) {
    Json j = shift_to_json(r);
    if (a.family > 0) {
      Json fam = Json::array();
      for (const auto& f : family) fam.push_back(triple_json(f));
      j["family"] = fam;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "N = " << r.exponent << '\n';
  const RingElement* comps[] = {&r.shifted.x, &r.shifted.y, &r.shifted.z};
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    out << names[i] << " = " << format_element(*comps[i]) << "  sigma = " << sigma_text(*comps[i]) << '\n';
  }
  for (const auto& f : family) out << "family " << triple_text(f) << '\n';
  return kOk;
}

// ---- fermat ----------------------------------------------------------------

struct FermatArgs {
  unsigned k = 3;
  int bound = 1;
  unsigned workers = 0;
  bool long_run = false;
  bool no_dedup = false;
  std::string checkpoint;
  std::string report;
};

int cmd_fermat(const FermatArgs& a, std::ostream& out, std::ostream& err) {
  if (a.bound > kDeskScaleBound && !a.long_run) {
    throw UsageError("--bound above " + std::to_string(kDeskScaleBound) + " requires --long-run");
  }
  SearchConfig cfg;
  cfg.k = a.k;
  cfg.bound = a.bound;
  cfg.workers = a.workers > 0 ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  cfg.dedup = !a.no_dedup;
  cfg.checkpoint = a.checkpoint;
  cfg.validate();

  const std::size_t shards = shard_count(a.bound);
  SearchReport r;
  try {
    r = search(cfg, [&](std::size_t shard, const std::vector<PowerTriple>& sols) {
      for (const auto& t : sols) out << Json{{"solution", triple_json(t)}}.dump() << '\n';
      out.flush();
      if (a.long_run) err << "shard " << shard + 1 << "/" << shards << " done\n";
    });
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  const Json report = report_to_json(r);
  if (!a.report.empty()) write_file(a.report, report.dump(2) + "\n");
  out << Json{{"report", report}}.dump() << '\n';
  return kOk;
}

// ---- render ----------------------------------------------------------------

struct RenderArgs {
  std::optional<int> iterations;
  std::string from;
  std::string to;
  std::vector<std::string> marks;
  double pixels_per_unit = 40.0;
  std::optional<int> width;
  std::optional<int> height;
  std::string output;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  RenderSpec spec;
  spec.iterations = a.iterations;
  if (!a.from.empty() || !a.to.empty()) {
    if (a.from.empty() || a.to.empty()) throw UsageError("--from and --to go together");
    spec.interval = std::make_pair(parse_element(a.from), parse_element(a.to));
  }
  if (spec.iterations.has_value() == spec.interval.has_value()) {
    throw UsageError("give either --iterations or --from/--to");
  }
  if (spec.iterations) patch(*spec.iterations);  // cap check before drawing
  for (const auto& m : a.marks) {
    const auto eq = m.find('=');
    RenderMarker marker{parse_element(m.substr(0, eq)), eq == std::string::npos ? "" : m.substr(eq + 1)};
    spec.markers.push_back(std::move(marker));
  }
  spec.pixels_per_unit = a.pixels_per_unit;
  spec.width = a.width;
  spec.height = a.height;
  const std::string svg = render_svg(spec);
  if (a.output.empty() || a.output == "-") {
    out << svg;
  } else {
    write_file(a.output, svg);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in Z[t], t = (1 + sqrt5)/2, and its Fibonacci model set", "ztau"};
  app.require_subcommand(1);

  RingArgs ring_args;
  auto* ring = app.add_subcommand("ring", "Ring arithmetic: norm conj root embed canonical add sub mul div gcd divides");
  ring->add_option("op", ring_args.op, "Operation")->required();
  ring->add_option("elements", ring_args.elements, "One or two elements")->required();
  ring->add_option("--k", ring_args.k, "Root degree for 'root'")->check(CLI::Range(2u, 1000u));
  ring->add_flag("--json", ring_args.json, "JSON output");

  ModelSetArgs ms_args;
  auto* modelset = app.add_subcommand("modelset", "Fibonacci model set");
  modelset->require_subcommand(1);
  auto* ms_patch = modelset->add_subcommand("patch", "Points of a substitution patch");
  ms_patch->add_option("--iterations", ms_args.iterations, "Substitution rounds")->required();
  ms_patch->add_option("--cap", ms_args.cap, "Largest allowed iteration count");
  ms_patch->add_flag("--json", ms_args.json, "JSON output");
  auto* ms_contains = modelset->add_subcommand("contains", "Window membership");
  ms_contains->add_option("element", ms_args.element, "Element")->required();
  ms_contains->add_flag("--json", ms_args.json, "JSON output");
  auto* ms_interval = modelset->add_subcommand("interval", "Members between two elements");
  ms_interval->add_option("--from", ms_args.from, "Lower end")->required();
  ms_interval->add_option("--to", ms_args.to, "Upper end")->required();
  ms_interval->add_flag("--json", ms_args.json, "JSON output");

  TriplesArgs tr_args;
  auto* triples = app.add_subcommand("triples", "Pythagorean triples");
  triples->require_subcommand(1);
  auto* tr_gen = triples->add_subcommand("gen", "Triple from parameters l, m, n");
  tr_gen->add_option("--l", tr_args.l, "Scale (default 1)");
  tr_gen->add_option("--m", tr_args.m, "Parameter m")->required();
  tr_gen->add_option("--n", tr_args.n, "Parameter n")->required();
  tr_gen->add_option("--sign", tr_args.sign, "Sign of x, 1 or -1");
  tr_gen->add_flag("--swapped", tr_args.swapped, "Exchange x and y");
  tr_gen->add_flag("--json", tr_args.json, "JSON output");
  auto* tr_enum = triples->add_subcommand("enum", "Enumerate triples from a parameter box");
  tr_enum->add_option("--bound", tr_args.bound, "Coefficient bound")->check(CLI::NonNegativeNumber);
  tr_enum->add_option("--limit", tr_args.limit, "Maximum number of triples");
  tr_enum->add_flag("--json", tr_args.json, "JSONL output");
  auto* tr_decompose = triples->add_subcommand("decompose", "Recover parameters of a triple");
  tr_decompose->add_option("elements", tr_args.elements, "x y z")->required();
  tr_decompose->add_flag("--json", tr_args.json, "JSON output");
  auto* tr_verify = triples->add_subcommand("verify", "Check x^k + y^k = z^k");
  tr_verify->add_option("--k", tr_args.k, "Exponent")->check(CLI::Range(1u, 1000u));
  tr_verify->add_option("elements", tr_args.elements, "x y z")->required();
  tr_verify->add_flag("--json", tr_args.json, "JSON output");

  ShiftArgs sh_args;
  auto* shift_cmd = app.add_subcommand("shift", "Least t-power moving a solution into the model set");
  shift_cmd->add_option("--k", sh_args.k, "Exponent")->required()->check(CLI::Range(1u, 1000u));
  shift_cmd->add_option("elements", sh_args.elements, "x y z")->required();
  shift_cmd->add_option("--family", sh_args.family, "Also list this many shifted solutions");
  shift_cmd->add_flag("--json", sh_args.json, "JSON output");

  FermatArgs fe_args;
  auto* fermat = app.add_subcommand("fermat", "Search x^k + y^k = z^k over a coefficient box (JSONL)");
  fermat->add_option("--k", fe_args.k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
  fermat->add_option("--bound", fe_args.bound, "Coefficient bound")->required()->check(CLI::PositiveNumber);
  fermat->add_option("--workers", fe_args.workers, "Worker threads (default: all cores)")->envname("ZTAU_WORKERS");
  fermat->add_flag("--long-run", fe_args.long_run, "Allow bounds above the desk-scale limit");
  fermat->add_flag("--no-dedup", fe_args.no_dedup, "Report every ordered solution");
  fermat->add_option("--checkpoint", fe_args.checkpoint, "Resumable state file");
  fermat->add_option("--report", fe_args.report, "Also write the final report to this file");

  RenderArgs re_args;
  auto* render = app.add_subcommand("render", "SVG of the tiling");
  render->add_option("--iterations", re_args.iterations, "Substitution patch");
  render->add_option("--from", re_args.from, "Interval lower end");
  render->add_option("--to", re_args.to, "Interval upper end");
  render->add_option("--mark", re_args.marks, "ELEMENT or ELEMENT=LABEL, repeatable");
  render->add_option("--pixels-per-unit", re_args.pixels_per_unit, "Scale")->check(CLI::PositiveNumber);
  render->add_option("--width", re_args.width, "Width in pixels");
  render->add_option("--height", re_args.height, "Height in pixels");
  render->add_option("-o,--output", re_args.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed = shield_negative_elements(args);
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ring->parsed()) return cmd_ring(ring_args, out);
    if (ms_patch->parsed()) return cmd_patch(ms_args, out);
    if (ms_contains->parsed()) return cmd_contains(ms_args, out);
    if (ms_interval->parsed()) return cmd_interval(ms_args, out);
    if (tr_gen->parsed()) return cmd_gen(tr_args, out);
    if (tr_enum->parsed()) return cmd_enum(tr_args, out);
    if (tr_decompose->parsed()) return cmd_decompose(tr_args, out);
    if (tr_verify->parsed()) return cmd_verify(tr_args, out);
    if (shift_cmd->parsed()) return cmd_shift(sh_args, out);
    if (fermat->parsed()) return cmd_fermat(fe_args, out, err);
    if (render->parsed()) return cmd_render(re_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace ztau::cli
