#include "prelie/io.hpp"

#include <cctype>
#include <vector>

namespace prelie {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Term {
  Rational coeff;
  std::string_view atom;
};

// Splits at top-level '+'/'-' and peels an optional "coeff*" prefix.
std::vector<Term> split_terms(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty linear combination");
  std::vector<Term> out;
  if (text == "0") return out;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  auto flush = [&](std::size_t end) {
    std::string_view piece = trim(text.substr(start, end - start));
    if (piece.empty()) throw ParseError("missing term in linear combination");
    Rational c = negative ? -1 : 1;
    int d = 0;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      char ch = piece[i];
      if (ch == '(' || ch == '[') ++d;
      if (ch == ')' || ch == ']') --d;
      if (ch == '*' && d == 0) {
        try {
          c *= parse_rational(trim(piece.substr(0, i)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("bad coefficient: ") + e.what());
        }
        piece = trim(piece.substr(i + 1));
        break;
      }
    }
    if (piece.empty()) throw ParseError("missing term after coefficient");
    out.push_back(Term{c, piece});
  };
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = start = 1;
  }
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') {
      if (--depth < 0) throw ParseError("unbalanced brackets");
    }
    if ((ch == '+' || ch == '-') && depth == 0) {
      flush(i);
      negative = ch == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets");
  flush(text.size());
  return out;
}

template <class Key, class F>
LinComb<Key> parse_lincomb(std::string_view text, F&& atom) {
  LinComb<Key> out;
  for (const auto& t : split_terms(text)) out.add(atom(t.atom), t.coeff);
  return out;
}

template <class V, class F>
std::string format_lincomb(const V& v, F&& atom) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    Rational a = abs(c);
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    if (a != 1) out += to_string(a) + "*";
    out += atom(k);
    first = false;
  }
  return out;
}

}  // namespace

TreeVector parse_tree_vector(std::string_view text) {
  return parse_lincomb<RootedTree>(text, [](std::string_view a) { return parse_tree(a); });
}

WedgeVector parse_wedge_vector(std::string_view text) {
  WedgeVector out;
  for (const auto& t : split_terms(text)) {
    int depth = 0;
    std::size_t caret = std::string_view::npos;
    for (std::size_t i = 0; i < t.atom.size(); ++i) {
      char ch = t.atom[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == '^' && depth == 0) {
        if (caret != std::string_view::npos) throw ParseError("wedge term with more than one '^'");
        caret = i;
      }
    }
    if (caret == std::string_view::npos) throw ParseError("wedge term without '^'");
    RootedTree l = parse_tree(trim(t.atom.substr(0, caret)));
    RootedTree r = parse_tree(trim(t.atom.substr(caret + 1)));
    if (!disjoint(l.labels(), r.labels())) throw ParseError("wedge factors share a label");
    add_wedge(out, l, r, t.coeff);
  }
  return out;
}

CycPreLieElem parse_cycprelie(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("CycPreLie element needs 'basepoint | body'");
  std::string_view base = trim(text.substr(0, bar));
  if (!is_valid_label(base)) throw ParseError("bad basepoint label '" + std::string(base) + "'");
  TreeVector body = parse_tree_vector(text.substr(bar + 1));
  if (body.is_zero()) throw ParseError("CycPreLie body must be nonzero to fix the label set");
  LabelSet rest = labels_of(body);
  for (const auto& [t, c] : body)
    if (t.labels() != rest) throw ParseError("CycPreLie body terms use different label sets");
  const Label a(base);
  if (std::binary_search(rest.begin(), rest.end(), a)) throw ParseError("basepoint also occurs in the body");
  LabelSet all = set_union(rest, {a});
  return cyc_normal(wedge(tv(a), body), all);
}

LieVector parse_lie_vector(std::string_view text) {
  LieVector out;
  for (const auto& t : split_terms(text)) out.axpy(t.coeff, lie_normal_form(parse_lie_word(t.atom)));
  return out;
}

std::string format_tree_vector(const TreeVector& v) {
  return format_lincomb(v, [](const RootedTree& t) { return t.key(); });
}

std::string format_wedge_vector(const WedgeVector& v) {
  return format_lincomb(v, [](const Wedge& w) { return w.left.key() + " ^ " + w.right.key(); });
}

std::string format_cycprelie(const CycPreLieElem& x) {
  return x.basepoint + " | " + format_tree_vector(x.body);
}

std::string format_lie_vector(const LieVector& v) {
  return format_lincomb(v, [](const LeftNormed& w) { return format_left_normed(w); });
}

std::string format_perm_cyc(const PermCycElem& p) {
  if (p.terms.is_zero()) return "0";
  std::string out;
  Label last;
  bool first = true;
  for (const auto& [k, c] : p.terms) {
    if (!first && k.slot == last) continue;
    if (!first) out += " + ";
    out += k.slot + " (x) <" + format_cycprelie(p.component(k.slot)) + ">";
    last = k.slot;
    first = false;
  }
  return out;
}

nlohmann::json to_json(const TreeVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : v) out.push_back({{"tree", t.key()}, {"coeff", to_string(c)}});
  return out;
}

nlohmann::json to_json(const WedgeVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : v)
    out.push_back({{"left", w.left.key()}, {"right", w.right.key()}, {"coeff", to_string(c)}});
  return out;
}

nlohmann::json to_json(const CycPreLieElem& x) {
  return {{"labels", x.labels}, {"basepoint", x.basepoint}, {"body", to_json(x.body)}};
}

nlohmann::json to_json(const LieVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : v) out.push_back({{"word", format_left_normed(w)}, {"coeff", to_string(c)}});
  return out;
}

nlohmann::json to_json(const PermCycElem& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& slot : p.labels) {
    CycPreLieElem e = p.component(slot);
    if (e.body.is_zero()) continue;
    out.push_back({{"slot", slot}, {"elem", to_json(e)}});
  }
  return out;
}

TreeVector tree_vector_from_json(const nlohmann::json& j) {
  TreeVector out;
  try {
    for (const auto& e : j) out.add(parse_tree(e.at("tree").get<std::string>()), parse_rational(e.at("coeff").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

WedgeVector wedge_vector_from_json(const nlohmann::json& j) {
  WedgeVector out;
  try {
    for (const auto& e : j)
      add_wedge(out, parse_tree(e.at("left").get<std::string>()), parse_tree(e.at("right").get<std::string>()),
                parse_rational(e.at("coeff").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace prelie
