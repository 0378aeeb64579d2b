#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratalg/bilift.hpp"
#include "ratalg/classify.hpp"
#include "ratalg/decompose.hpp"
#include "ratalg/geometry.hpp"
#include "ratalg/groebner.hpp"
#include "ratalg/growth.hpp"
#include "ratalg/lift.hpp"
#include "ratalg/parse.hpp"

using namespace ratalg;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rat parse_rat(const std::string& s) {
  detail::Scanner sc(s);
  return detail::parse_rat_text(s, sc);
}

EvalSet parse_set(const std::string& s) {
  std::vector<Scalar> vals;
  for (const std::string& p : split(s, ',')) vals.emplace_back(parse_rat(p));
  return EvalSet(vals);
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  for (const std::string& p : split(s, ',')) {
    try {
      out.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw input_error("malformed size " + p);
    }
  }
  return out;
}

const char* kind_name(FormKind k) {
  switch (k) {
    case FormKind::additive:
      return "additive";
    case FormKind::multiplicative:
      return "multiplicative";
    default:
      return "tangent";
  }
}

void cmd_classify(const std::string& ftext, const std::string& mode, const std::string& bounds_text) {
  ClassifyBounds bounds;
  if (!bounds_text.empty()) {
    std::vector<std::string> parts = split(bounds_text, ',');
    if (parts.size() != 3) throw input_error("--bounds wants three values: degree,outer,inner");
    std::vector<int> v = parse_sizes(bounds_text);
    bounds = {v[0], v[1], v[2]};
  }
  BiRat f = parse_birat(ftext);
  auto form = classify_full(f, bounds, mode == "complex" ? ClassifyMode::complex : ClassifyMode::real);
  if (!form) {
    std::cout << "kind: none (no special form within bounds)\n";
    return;
  }
  std::cout << "kind: " << kind_name(form->kind) << "\n";
  std::cout << "g: " << print_unirat(form->g) << "\n";
  std::cout << "l1: " << print_unirat(form->l1) << "\n";
  std::cout << "l2: " << print_unirat(form->l2) << "\n";
  std::cout << "verify: " << (verify_form(f, *form) ? "ok" : "failed") << "\n";
}

void cmd_decompose(const std::string& ftext) {
  std::vector<Decomposition> ds = enumerate_decompositions(parse_unirat(ftext));
  std::cout << "decompositions: " << ds.size() << "\n";
  for (size_t i = 0; i < ds.size(); ++i)
    std::cout << "[" << i + 1 << "] left: " << print_unirat(ds[i].left)
              << "   right: " << print_unirat(ds[i].right) << "\n";
}

void cmd_dominate(const std::string& f1text, const std::string& f2text) {
  DominatingTriple t = dominating_function(parse_unirat(f1text), parse_unirat(f2text));
  std::cout << "g: " << print_unirat(t.g) << "\n";
  std::cout << "h1: " << print_unirat(t.h1) << "\n";
  std::cout << "h2: " << print_unirat(t.h2) << "\n";
}

void cmd_lift(const std::string& ftext, const std::string& outer_text, const std::string& inner_text) {
  if (outer_text.empty() == inner_text.empty())
    throw input_error("exactly one of --outer-g and --inner-g is required");
  BiRat f = parse_birat(ftext);
  bool outer = !outer_text.empty();
  UniRat g = parse_unirat(outer ? outer_text : inner_text);
  auto found = solve_bivariate_lift(f, g, outer ? LiftSide::outer : LiftSide::inner);
  if (!found) {
    std::cout << "no lift of the requested shape\n";
    return;
  }
  if (outer) {
    std::cout << "B: " << print_birat(*found) << "\n";
    std::cout << "identity: f = g(B)\n";
  } else {
    std::cout << "h: " << print_birat(*found) << "\n";
    std::cout << "identity: f = h(g(x1), x2)\n";
  }
}

void cmd_curves(const std::string& ftext, const std::string& variant_text, const std::string& pairs_text) {
  BiRat f = parse_birat(ftext);
  CurveVariant variant = variant_text == "c1" ? CurveVariant::C1 : CurveVariant::C2;
  int shown = 0, skipped = 0;
  std::ostringstream rows;
  for (const std::string& pt : split(pairs_text, ';')) {
    std::vector<std::string> ab = split(pt, ',');
    if (ab.size() != 2) throw input_error("pair wants two values: " + pt);
    std::pair<Scalar, Scalar> at{Scalar(parse_rat(ab[0])), Scalar(parse_rat(ab[1]))};
    std::string where = "(" + ab[0] + ", " + ab[1] + ")";
    try {
      CurveSpec c = curve(f, variant, at);
      rows << "[" << ++shown << "] at " << where << ": " << print_bipoly(c.defining) << "\n";
    } catch (const input_error& e) {
      ++skipped;
      rows << "    at " << where << ": skipped (" << e.what() << ")\n";
    }
  }
  std::cout << "curves: " << shown << "   skipped: " << skipped << "\n" << rows.str();
}

void cmd_count(const std::string& htext, const std::string& set1, const std::string& set2) {
  BiRat h = parse_birat(htext);
  EvalSet A1 = parse_set(set1), A2 = parse_set(set2);
  long long image = image_count(h, A1, A2);
  long long q = quadruple_count(h, A1, A2);
  Rat cs = cs_lower_bound(h, A1, A2);
  std::cout << "image: " << image << "\n";
  std::cout << "Q: " << q << "\n";
  std::cout << "cs_bound: " << detail::rat_text(cs) << "\n";
}

void cmd_grow(const std::string& ftext, const std::string& fam1, const std::string& fam2,
              const std::string& sizes_text, std::uint64_t seed, const std::string& emit,
              int workers) {
  BiRat f = parse_birat(ftext);
  GrowthReport report =
      run_growth(f, parse_family(fam1), parse_family(fam2), parse_sizes(sizes_text), seed, workers);
  if (emit == "csv") {
    std::cout << to_csv(report);
    return;
  }
  if (emit == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const GrowthRow& r : report.rows)
      rows.push_back({{"family1", r.family1},
                      {"family2", r.family2},
                      {"f", r.ftext},
                      {"n", r.n},
                      {"image", r.image},
                      {"Q", r.quadruples},
                      {"cs_bound", detail::rat_text(r.cs_bound)},
                      {"skipped", r.skipped},
                      {"seed", r.seed}});
    nlohmann::json out = {{"rows", rows}, {"slope_approx", report.slope}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (!report.rows.empty()) {
    const GrowthRow& r0 = report.rows.front();
    std::cout << "f: " << r0.ftext << "   family1: " << r0.family1 << "   family2: " << r0.family2
              << "   seed: " << r0.seed << "\n";
  }
  std::printf("%8s %10s %12s %14s %8s\n", "n", "image", "Q", "cs_bound", "skipped");
  for (const GrowthRow& r : report.rows)
    std::printf("%8d %10lld %12lld %14s %8lld\n", r.n, r.image, r.quadruples,
                detail::rat_text(r.cs_bound).c_str(), r.skipped);
  std::printf("slope (approximate): %.3f\n", report.slope);
}

void cmd_groebner(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::stringstream whole;
  whole << in.rdbuf();
  std::string text = whole.str();
  int arity = scan_arity(text);
  if (arity == 0) throw input_error("no variables found in " + path);
  std::vector<MultiPoly> gens;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (blank) continue;
    gens.push_back(parse_multipoly(line, arity));
  }
  if (gens.empty()) throw input_error("no generators in " + path);
  GroebnerBasis gb = buchberger(gens, MonomialOrder{MonomialOrder::lex});
  std::cout << "variables: " << arity << "\n";
  std::cout << "basis: " << gb.gens.size() << "\n";
  for (const MultiPoly& p : gb.gens) std::cout << print_multipoly(p) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-function structure toolkit"};
  app.require_subcommand(1);

  std::string ftext, f2text, mode = "real", bounds_text, outer_text, inner_text;
  std::string variant_text, pairs_text, set1, set2, fam1, fam2, sizes_text, emit, path;
  std::uint64_t seed = 1;
  int workers = 0;

  auto* classify = app.add_subcommand("classify", "detect additive, multiplicative, or tangent structure");
  classify->add_option("f", ftext, "rational function in x1, x2")->required();
  classify->add_option("--mode", mode, "scalar field for the eigenvalue split")
      ->check(CLI::IsMember({"real", "complex"}));
  classify->add_option("--bounds", bounds_text, "search caps as degree,outer,inner");

  auto* decompose = app.add_subcommand("decompose", "list one-variable composition classes");
  decompose->add_option("f", ftext, "rational function in x")->required();

  auto* dominate = app.add_subcommand("dominate", "common outer factor of two one-variable functions");
  dominate->add_option("f1", ftext)->required();
  dominate->add_option("f2", f2text)->required();

  auto* lift = app.add_subcommand("lift", "solve a two-variable composition for the missing factor");
  lift->add_option("f", ftext, "rational function in x1, x2")->required();
  lift->add_option("--outer-g", outer_text, "given outer factor g; solve f = g(B)");
  lift->add_option("--inner-g", inner_text, "given inner factor g; solve f = h(g(x1), x2)");

  auto* curves = app.add_subcommand("curves", "defining polynomials of slice-cross curves");
  curves->add_option("f", ftext, "rational function in x1, x2")->required();
  curves->add_option("--variant", variant_text, "which argument is sliced")
      ->required()
      ->check(CLI::IsMember({"c1", "c2"}));
  curves->add_option("--pairs", pairs_text, "value pairs, e.g. 0,1;2,3")->required();

  auto* count = app.add_subcommand("count", "image size, collision count, and lower bound on a grid");
  count->add_option("f", ftext, "rational function in x1, x2")->required();
  count->add_option("--set1", set1, "comma-separated values")->required();
  count->add_option("--set2", set2, "comma-separated values")->required();

  auto* grow = app.add_subcommand("grow", "image-size sweep over structured set families");
  grow->add_option("f", ftext, "rational function in x1, x2")->required();
  grow->add_option("--family1", fam1, "ap:s,d | gp:s,r | random[:bound] | tan:t")->required();
  grow->add_option("--family2", fam2)->required();
  grow->add_option("--sizes", sizes_text, "comma-separated set sizes")->required();
  grow->add_option("--seed", seed, "base seed for the random family");
  grow->add_option("--emit", emit, "machine-readable output")->check(CLI::IsMember({"csv", "json"}));
  grow->add_option("--workers", workers, "worker threads, 0 = available parallelism");

  auto* groebner = app.add_subcommand("groebner", "reduced lexicographic basis of an ideal file");
  groebner->add_option("file", path, "one generator per line, # comments")->required();

  classify->callback([&] { cmd_classify(ftext, mode, bounds_text); });
  decompose->callback([&] { cmd_decompose(ftext); });
  dominate->callback([&] { cmd_dominate(ftext, f2text); });
  lift->callback([&] { cmd_lift(ftext, outer_text, inner_text); });
  curves->callback([&] { cmd_curves(ftext, variant_text, pairs_text); });
  count->callback([&] { cmd_count(ftext, set1, set2); });
  grow->callback([&] { cmd_grow(ftext, fam1, fam2, sizes_text, seed, emit, workers); });
  groebner->callback([&] { cmd_groebner(path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
