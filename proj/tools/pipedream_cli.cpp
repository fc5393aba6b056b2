// Command-line front end: pipe dream enumeration, polynomial computation by
// independent routes, complex analysis with DOT export, and the verification
// suites. JSON output is byte-stable for identical inputs.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pipedreams/complex.hpp"
#include "pipedreams/coxeter.hpp"
#include "pipedreams/pipedream.hpp"
#include "pipedreams/polynomial.hpp"
#include "pipedreams/serialize.hpp"
#include "pipedreams/verify.hpp"

namespace {

using pipedreams::Json;

constexpr int kCliRankCap = 6;

void emit(const Json& payload, const std::vector<std::string>& diagnostics,
          bool ok) {
  Json out;
  out["status"] = ok ? "ok" : "error";
  out["payload"] = payload;
  out["diagnostics"] = diagnostics;
  std::cout << out.dump(2) << "\n";
}

int emit_error(const std::string& message, int code) {
  emit(nullptr, {message}, false);
  return code;
}

void check_rank_cap(int n) {
  if (n > kCliRankCap)
    throw pipedreams::ParseError("rank " + std::to_string(n) +
                                 " exceeds the CLI cap of " +
                                 std::to_string(kCliRankCap));
}

struct EnumerateArgs {
  std::string perm;
  bool reduced = false;
  bool quasi_yamanouchi = false;
  std::string format = "json";
};

int run_enumerate(const EnumerateArgs& args) {
  const pipedreams::Permutation w = pipedreams::parse_permutation(args.perm);
  check_rank_cap(w.rank());
  std::vector<pipedreams::PipeDream> dreams =
      pipedreams::enumerate_pipe_dreams(w, args.reduced);
  if (args.quasi_yamanouchi) {
    std::erase_if(dreams, [](const pipedreams::PipeDream& p) {
      return !pipedreams::is_quasi_yamanouchi(p);
    });
  }
  if (args.format == "ascii") {
    for (const auto& p : dreams)
      std::cout << pipedreams::ascii_art(p) << "\n";
    std::cout << dreams.size() << " pipe dream(s)\n";
    return 0;
  }
  Json payload;
  payload["perm"] = pipedreams::to_text(w);
  payload["reduced"] = args.reduced;
  payload["quasi_yamanouchi"] = args.quasi_yamanouchi;
  Json list = Json::array();
  for (const auto& p : dreams) list.push_back(pipedreams::json_of(p, true));
  payload["pipe_dreams"] = std::move(list);
  payload["count"] = dreams.size();
  emit(payload, {}, true);
  return 0;
}

struct PolyArgs {
  std::string perm;
  std::string kind;
  std::string word;
  std::string crosses;
  int n = 0;
  std::string source = "pipedreams";
  std::string format = "json";
};

/// The unique quasi-Yamanouchi dream whose word is `s`: the rightmost
/// occurrence of `s` in the staircase word.
pipedreams::PipeDream dream_from_word(const pipedreams::Word& s) {
  const pipedreams::Word q0 = pipedreams::staircase_word(s.n);
  std::uint32_t mask = 0;
  int p = q0.size() - 1;
  for (int i = s.size() - 1; i >= 0; --i) {
    while (p >= 0 && q0.letters[p] != s.letters[i]) --p;
    if (p < 0)
      throw pipedreams::ParseError(
          "word does not occur in the staircase word of its rank");
    mask |= std::uint32_t{1} << p;
    --p;
  }
  return pipedreams::PipeDream(s.n, mask);
}

pipedreams::PipeDream parse_dream_crosses(const std::string& text, int n) {
  std::vector<std::pair<int, int>> cells;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ';')) {
    const auto comma = piece.find(',');
    if (comma == std::string::npos)
      throw pipedreams::ParseError("crosses must look like \"i,j;i,j\"");
    try {
      cells.emplace_back(std::stoi(piece.substr(0, comma)),
                         std::stoi(piece.substr(comma + 1)));
    } catch (const std::exception&) {
      throw pipedreams::ParseError("bad cross cell: " + piece);
    }
  }
  try {
    return pipedreams::PipeDream::from_crosses(n, cells);
  } catch (const std::invalid_argument& e) {
    throw pipedreams::ParseError(e.what());
  }
}

int run_poly(const PolyArgs& args) {
  using namespace pipedreams;
  Polynomial result;
  Json payload;
  payload["kind"] = args.kind;
  payload["source"] = args.source;

  if (args.kind == "schubert" || args.kind == "grothendieck") {
    if (args.perm.empty())
      throw ParseError("kind " + args.kind + " needs a permutation");
    const Permutation w = parse_permutation(args.perm);
    check_rank_cap(w.rank());
    payload["perm"] = to_text(w);
    const bool beta = args.kind == "grothendieck";
    if (args.source == "operators") {
      result = beta ? grothendieck_by_operators(w) : schubert_by_operators(w);
    } else if (args.source == "pipedreams") {
      result = beta ? grothendieck_from_pipedreams(w) : schubert_from_pipedreams(w);
    } else if (args.source == "complex") {
      const Complex c = build_complex(staircase_word(w.rank()), w);
      result = Polynomial::zero(w.rank() - 1);
      const Polynomial bvar = Polynomial::beta(w.rank() - 1);
      if (beta) {
        for (const Face& f : faces(c, FaceSelect::interior)) {
          Polynomial term = monomial(PipeDream(w.rank(), c.full_mask() ^ f.deleted));
          for (int t = 0; t < c.facet_size() - f.size(); ++t) term = term * bvar;
          result = result + term;
        }
      } else {
        for (const Face& f : c.facets)
          result = result + monomial(PipeDream(w.rank(), c.full_mask() ^ f.deleted));
      }
    } else {
      throw ParseError("unknown source: " + args.source);
    }
  } else if (args.kind == "slide" || args.kind == "glide") {
    if (args.n <= 0) throw ParseError("slide/glide need --n");
    check_rank_cap(args.n);
    PipeDream q = [&] {
      if (!args.word.empty()) return dream_from_word(parse_word(args.word, args.n));
      if (!args.crosses.empty()) return parse_dream_crosses(args.crosses, args.n);
      throw ParseError("slide/glide need --word or --crosses");
    }();
    if (!is_quasi_yamanouchi(q))
      throw NotQuasiYamanouchi("input dream is not quasi-Yamanouchi");
    payload["word"] = to_text(word_of(q));
    payload["n"] = args.n;
    const bool beta = args.kind == "glide";
    if (args.source == "pipedreams") {
      result = beta ? glide_polynomial(q) : slide_polynomial(q);
    } else if (args.source == "complex") {
      const Complex c = build_complex(staircase_word(args.n), word_of(q));
      result = Polynomial::zero(args.n - 1);
      const Polynomial bvar = Polynomial::beta(args.n - 1);
      if (beta) {
        for (const Face& f : faces(c, FaceSelect::interior)) {
          Polynomial term = monomial(PipeDream(args.n, c.full_mask() ^ f.deleted));
          for (int t = 0; t < c.facet_size() - f.size(); ++t) term = term * bvar;
          result = result + term;
        }
      } else {
        if (excess(q) != 0) throw NotReduced("slide polynomial needs a reduced dream");
        for (const Face& f : c.facets)
          result = result + monomial(PipeDream(args.n, c.full_mask() ^ f.deleted));
      }
    } else if (args.source == "operators") {
      throw ParseError("slide/glide have no operator route");
    } else {
      throw ParseError("unknown source: " + args.source);
    }
  } else {
    throw ParseError("unknown polynomial kind: " + args.kind);
  }

  if (args.format == "ascii") {
    std::cout << to_text(result) << "\n";
    return 0;
  }
  payload["text"] = to_text(result);
  payload["terms"] = json_of(result);
  emit(payload, {}, true);
  return 0;
}

struct ComplexArgs {
  std::string word;
  std::string perm_target;
  std::string word_target;
  bool word_target_set = false;
  int n = 0;
  bool with_faces = false;
  std::string dot;
  std::string format = "json";
};

int run_complex(const ComplexArgs& args) {
  using namespace pipedreams;
  // Infer the rank when not given: smallest rank admitting every letter.
  int n = args.n;
  if (n == 0) {
    int max_letter = 0;
    auto scan = [&max_letter](const std::string& text) {
      std::istringstream in(text);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        try {
          max_letter = std::max(max_letter, std::stoi(piece));
        } catch (const std::exception&) {
          throw ParseError("bad letter: " + piece);
        }
      }
    };
    scan(args.word);
    if (args.word_target_set && !args.word_target.empty()) scan(args.word_target);
    n = max_letter + 1;
    if (!args.perm_target.empty())
      n = std::max(n, parse_permutation(args.perm_target).rank());
    n = std::max(n, 2);
  }
  check_rank_cap(n);

  const Word q = parse_word(args.word, n);
  std::vector<std::string> diagnostics;
  Complex c;
  if (!args.perm_target.empty()) {
    c = build_complex(q, parse_permutation(args.perm_target));
  } else if (args.word_target_set) {
    const Word s = parse_word(args.word_target, n);
    if (!(tilde_delta(s) == s))
      diagnostics.push_back(
          "target has equal consecutive letters; the complex is valid but "
          "not classifiable as a ball or sphere");
    c = build_complex(q, s);
  } else {
    throw ParseError("complex needs --perm or --word target");
  }

  std::optional<std::string> dot_text;
  if (!args.dot.empty()) {
    dot_text = to_dot(flip_graph(c));
    if (args.dot != "-") {
      std::ofstream out(args.dot);
      if (!out) throw ParseError("cannot write DOT file: " + args.dot);
      out << *dot_text;
    }
  }

  if (args.format == "ascii") {
    const Json j = json_of(c, false);
    std::cout << "word:           " << j["word"].get<std::string>() << "\n"
              << "kind:           " << j["kind"].get<std::string>() << "\n"
              << "target:         " << j["target"].get<std::string>() << "\n"
              << "facets:         " << c.facets.size() << "\n"
              << "interior faces: " << j["interior_count"] << "\n"
              << "boundary faces: " << j["boundary_count"] << "\n"
              << "euler:          " << j["euler"] << "\n"
              << "classification: " << j["classification"].get<std::string>()
              << "\n";
    if (dot_text && args.dot == "-") std::cout << *dot_text;
    return 0;
  }
  Json payload = json_of(c, args.with_faces);
  if (dot_text && args.dot == "-") payload["dot"] = *dot_text;
  emit(payload, diagnostics, true);
  return 0;
}

struct VerifyArgs {
  int max_rank = 4;
  std::string suite = "all";
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  using namespace pipedreams;
  if (args.max_rank < 2 || args.max_rank > kCliRankCap)
    throw ParseError("--max-rank must be between 2 and 6");
  const std::vector<CheckResult> results = run_suite(args.suite, args.max_rank);
  if (results.empty()) throw ParseError("unknown suite: " + args.suite);
  int failed = 0;
  Json checks = Json::array();
  for (const CheckResult& r : results) {
    if (!r.pass) ++failed;
    Json item;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["details"] = r.details;
    checks.push_back(std::move(item));
    if (args.format == "ascii")
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.details
                << ")\n";
  }
  if (args.format != "ascii") {
    Json payload;
    payload["max_rank"] = args.max_rank;
    payload["suite"] = args.suite;
    payload["checks"] = std::move(checks);
    payload["passed"] = static_cast<int>(results.size()) - failed;
    payload["failed"] = failed;
    emit(payload, {}, failed == 0);
  } else if (failed > 0) {
    std::cout << failed << " check(s) failed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pipe dreams, Schubert/Grothendieck/slide/glide polynomials, "
               "and subword/slide complexes"};
  app.require_subcommand(1);

  EnumerateArgs en;
  CLI::App* cmd_enum = app.add_subcommand("enumerate",
                                          "list the pipe dreams of a shape");
  cmd_enum->add_option("perm", en.perm, "permutation in one-line notation")
      ->required();
  cmd_enum->add_flag("--reduced", en.reduced, "reduced dreams only");
  cmd_enum->add_flag("--quasi-yamanouchi", en.quasi_yamanouchi,
                     "quasi-Yamanouchi dreams only");
  cmd_enum->add_option("--format", en.format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  PolyArgs po;
  std::vector<std::string> poly_positionals;
  CLI::App* cmd_poly = app.add_subcommand("poly", "compute a polynomial");
  cmd_poly
      ->add_option("args", poly_positionals,
                   "[perm] kind — kind is schubert|grothendieck|slide|glide")
      ->expected(1, 2);
  cmd_poly->add_option("--word", po.word,
                       "quasi-Yamanouchi dream word (slide/glide kinds)");
  cmd_poly->add_option("--crosses", po.crosses,
                       "dream cross cells \"i,j;i,j\" (slide/glide kinds)");
  cmd_poly->add_option("--n", po.n, "rank for --word/--crosses");
  cmd_poly->add_option("--source", po.source, "pipedreams|operators|complex")
      ->check(CLI::IsMember({"pipedreams", "operators", "complex"}));
  cmd_poly->add_option("--format", po.format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  ComplexArgs co;
  CLI::App* cmd_complex =
      app.add_subcommand("complex", "analyze a subword or slide complex");
  cmd_complex->add_option("ambient", co.word, "ambient word, comma-separated")
      ->required();
  cmd_complex->add_option("--perm", co.perm_target,
                          "subword-complex target permutation");
  CLI::Option* word_target_opt = cmd_complex->add_option(
      "--word", co.word_target, "slide-complex target word");
  cmd_complex->add_option("--n", co.n, "rank (default: inferred)");
  cmd_complex->add_flag("--faces", co.with_faces,
                        "include interior/boundary face lists");
  cmd_complex->add_option("--dot", co.dot,
                          "write the flip graph in DOT form (\"-\" = payload)");
  cmd_complex->add_option("--format", co.format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  VerifyArgs ve;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the verification suites");
  cmd_verify->add_option("--max-rank", ve.max_rank, "largest rank to cover")
      ->check(CLI::Range(2, kCliRankCap));
  cmd_verify->add_option("--suite", ve.suite,
                         "all|polynomials|topology|flips")
      ->check(CLI::IsMember({"all", "polynomials", "topology", "flips"}));
  cmd_verify->add_option("--format", ve.format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  co.word_target_set = word_target_opt->count() > 0;
  if (poly_positionals.size() == 1) {
    po.kind = poly_positionals[0];
  } else if (poly_positionals.size() == 2) {
    po.perm = poly_positionals[0];
    po.kind = poly_positionals[1];
  }

  try {
    if (cmd_poly->parsed() && po.kind.empty())
      throw pipedreams::ParseError("poly needs a polynomial kind");
    if (cmd_enum->parsed()) return run_enumerate(en);
    if (cmd_poly->parsed()) return run_poly(po);
    if (cmd_complex->parsed()) return run_complex(co);
    if (cmd_verify->parsed()) return run_verify(ve);
  } catch (const pipedreams::ParseError& e) {
    return emit_error(std::string("parse error: ") + e.what(), 2);
  } catch (const pipedreams::NotABijection& e) {
    return emit_error(std::string("parse error: ") + e.what(), 2);
  } catch (const pipedreams::NotQuasiYamanouchi& e) {
    return emit_error(e.what(), 2);
  } catch (const pipedreams::NotReduced& e) {
    return emit_error(e.what(), 2);
  } catch (const pipedreams::UnclassifiableSlideTarget& e) {
    return emit_error(e.what(), 2);
  } catch (const pipedreams::RankMismatch& e) {
    return emit_error(e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return emit_error(std::string("invalid input: ") + e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error(std::string("internal failure: ") + e.what(), 1);
  }
  return 0;
}
