#pragma once

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "pipedreams/complex.hpp"
#include "pipedreams/coxeter.hpp"
#include "pipedreams/pipedream.hpp"
#include "pipedreams/polynomial.hpp"

namespace pipedreams {

using Json = nlohmann::ordered_json;

inline std::string to_text(const Permutation& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

inline std::string to_text(const Word& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

/// Parse one-line notation: a digit string ("1432") for small ranks or the
/// comma-separated form ("15,4,2,3,1"), which is mandatory from rank 10 on.
inline Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> img;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(piece, &used);
        if (used != piece.size()) throw ParseError("bad number: " + piece);
        img.push_back(v);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad number in permutation: " + piece);
      } catch (const std::out_of_range&) {
        throw ParseError("number out of range in permutation: " + piece);
      }
    }
    if (!text.empty() && text.back() == ',')
      throw ParseError("trailing comma in permutation");
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw ParseError(std::string("bad character in permutation: ") + ch);
      img.push_back(ch - '0');
    }
  }
  return Permutation(std::move(img));  // NotABijection on bad image sets
}

/// Parse a comma-separated word ("3,2,1,3,2,3"); "" is the empty word.
inline Word parse_word(const std::string& text, int rank) {
  std::vector<int> letters;
  if (!text.empty()) {
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(piece, &used);
        if (used != piece.size()) throw ParseError("bad letter: " + piece);
        letters.push_back(v);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad letter in word: " + piece);
      } catch (const std::out_of_range&) {
        throw ParseError("letter out of range in word: " + piece);
      }
    }
  }
  for (int l : letters)
    if (l < 1 || l >= rank)
      throw ParseError("letter " + std::to_string(l) +
                       " out of range for rank " + std::to_string(rank));
  return Word(rank, std::move(letters));
}

inline Json json_of(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["coeff"] = c.convert_to<long long>();
    t["beta"] = e[0];
    t["exps"] = std::vector<int>(e.begin() + 1, e.end());
    terms.push_back(std::move(t));
  }
  return terms;
}

inline Json json_of(const PipeDream& p, bool derived = false) {
  Json out;
  out["n"] = p.n();
  Json crosses = Json::array();
  for (auto [i, j] : p.crosses()) crosses.push_back(Json::array({i, j}));
  out["crosses"] = std::move(crosses);
  if (derived) {
    out["shape"] = to_text(shape(p));
    out["excess"] = excess(p);
    out["word"] = to_text(word_of(p));
    out["monomial"] = to_text(monomial(p));
  }
  return out;
}

/// Grid rendering: '+' for a cross, '.' for an elbow; the antidiagonal row
/// of elbows is included, one staircase row per line.
inline std::string ascii_art(const PipeDream& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n() + 1 - i; ++j)
      out += p.has_cross(i, j) ? '+' : '.';
    out += '\n';
  }
  return out;
}

inline std::vector<int> one_based(const Face& f) {
  std::vector<int> out = f.positions();
  for (int& p : out) ++p;
  return out;
}

inline std::string to_text(const Face& f) {
  std::ostringstream os;
  bool first = true;
  for (int p : one_based(f)) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  return os.str();
}

inline std::string classification_name(const Complex& c) {
  try {
    return classify(c) == Topology::sphere ? "sphere" : "ball";
  } catch (const UnclassifiableSlideTarget&) {
    return "unclassifiable";
  }
}

inline Json json_of(const Complex& c, bool with_faces = false) {
  Json out;
  out["word"] = to_text(c.word);
  out["n"] = c.word.n;
  out["kind"] = c.kind == ComplexKind::subword ? "subword" : "slide";
  out["target"] = c.kind == ComplexKind::subword ? to_text(c.target_perm())
                                                 : to_text(c.target_word());
  Json facets = Json::array();
  for (const Face& f : c.facets) facets.push_back(one_based(f));
  out["facets"] = std::move(facets);
  const auto interior = faces(c, FaceSelect::interior);
  const auto boundary = faces(c, FaceSelect::boundary);
  out["interior_count"] = interior.size();
  out["boundary_count"] = boundary.size();
  out["euler"] = euler_characteristic(c);
  out["classification"] = classification_name(c);
  if (with_faces) {
    Json fi = Json::array(), fb = Json::array();
    for (const Face& f : interior) fi.push_back(one_based(f));
    for (const Face& f : boundary) fb.push_back(one_based(f));
    out["interior_faces"] = std::move(fi);
    out["boundary_faces"] = std::move(fb);
  }
  return out;
}

/// Graphviz rendering of the increasing flip orientation, with the greedy
/// facets annotated.
inline std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "digraph flip_graph {\n";
  for (int i = 0; i < static_cast<int>(g.facets.size()); ++i) {
    const std::string label = to_text(g.facets[i]);
    os << "  \"" << label << "\"";
    if (i == g.positive_greedy && i == g.negative_greedy)
      os << " [label=\"" << label << "\\n(positive+negative greedy)\"]";
    else if (i == g.positive_greedy)
      os << " [label=\"" << label << "\\n(positive greedy)\"]";
    else if (i == g.negative_greedy)
      os << " [label=\"" << label << "\\n(negative greedy)\"]";
    os << ";\n";
  }
  for (auto [from, to] : g.increasing)
    os << "  \"" << to_text(g.facets[from]) << "\" -> \""
       << to_text(g.facets[to]) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pipedreams
