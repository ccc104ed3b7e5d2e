#include "prelie/lie.hpp"

#include <algorithm>
#include <cctype>

namespace prelie {

LieWord LieWord::bracket(LieWord a, LieWord b) {
  if (!disjoint(a.labels(), b.labels())) throw LabelError("Lie bracket of words sharing a label");
  LieWord w;
  w.children.push_back(std::move(a));
  w.children.push_back(std::move(b));
  return w;
}

namespace {

void collect(const LieWord& w, std::vector<Label>& out) {
  if (w.is_leaf()) {
    out.push_back(w.label);
    return;
  }
  for (const auto& c : w.children) collect(c, out);
}

bool word_contains(const LieWord& w, const Label& l) {
  if (w.is_leaf()) return w.label == l;
  return word_contains(w.children[0], l) || word_contains(w.children[1], l);
}

class LieParser {
 public:
  explicit LieParser(std::string_view s) : s_(s) {}
  LieWord parse() {
    LieWord w = node();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing input in Lie word at offset " + std::to_string(pos_));
    try {
      (void)w.labels();
    } catch (const LabelError& e) {
      throw ParseError(e.what());
    }
    return w;
  }

 private:
  LieWord node() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of Lie word");
    if (s_[pos_] == '[') {
      ++pos_;
      LieWord a = node();
      expect(',');
      LieWord b = node();
      expect(']');
      LieWord w;
      w.children = {std::move(a), std::move(b)};
      return w;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) throw ParseError("expected a label in Lie word at offset " + std::to_string(start));
    return LieWord::leaf(Label(s_.substr(start, pos_ - start)));
  }
  void expect(char c) {
    skip();
    if (pos_ == s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "' in Lie word");
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

// [X, Y] for left-normed X, Y, expanded into left-normed words starting with X[0].
LieVector bracket_ln(const std::vector<Label>& x, const std::vector<Label>& y) {
  if (y.size() == 1) {
    auto w = x;
    w.push_back(y[0]);
    return LieVector(LeftNormed{std::move(w)});
  }
  std::vector<Label> yp(y.begin(), y.end() - 1);
  const Label& last = y.back();
  LieVector out;
  for (const auto& [w, c] : bracket_ln(x, yp)) {
    auto ext = w.letters;
    ext.push_back(last);
    out.add(LeftNormed{std::move(ext)}, c);
  }
  auto xy = x;
  xy.push_back(last);
  out -= bracket_ln(xy, yp);
  return out;
}

LieVector nf(const LieWord& w) {
  if (w.is_leaf()) return LieVector(LeftNormed{{w.label}});
  const LieWord& a = w.children[0];
  const LieWord& b = w.children[1];
  const Label lo = w.labels().front();
  if (word_contains(b, lo)) return -nf(LieWord{{}, {b, a}});
  LieVector na = nf(a), nb = nf(b), out;
  for (const auto& [x, cx] : na)
    for (const auto& [y, cy] : nb) out.axpy(cx * cy, bracket_ln(x.letters, y.letters));
  return out;
}

LieWord substitute(const LieWord& w, const Label& i, const LieWord& v) {
  if (w.is_leaf()) return w.label == i ? v : w;
  LieWord out;
  out.children = {substitute(w.children[0], i, v), substitute(w.children[1], i, v)};
  return out;
}

// <a, b> = <i, result>, using symmetry and <[x, y], z> = <x, [y, z]>.
LieVector rotate(const Label& i, const LieWord& a, const LieWord& b) {
  if (!word_contains(a, i)) return rotate(i, b, a);
  if (a.is_leaf()) return nf(b);
  const LieWord& a1 = a.children[0];
  const LieWord& a2 = a.children[1];
  if (word_contains(a1, i)) return rotate(i, a1, LieWord{{}, {a2, b}});
  return -rotate(i, a2, LieWord{{}, {a1, b}});
}

}  // namespace

LabelSet LieWord::labels() const {
  std::vector<Label> out;
  collect(*this, out);
  return make_label_set(std::move(out));
}

LieWord parse_lie_word(std::string_view text) { return LieParser(text).parse(); }

std::string format_lie_word(const LieWord& w) {
  if (w.is_leaf()) return w.label;
  return "[" + format_lie_word(w.children[0]) + "," + format_lie_word(w.children[1]) + "]";
}

LieWord to_word(const LeftNormed& w) {
  LieWord out = LieWord::leaf(w.letters.at(0));
  for (std::size_t k = 1; k < w.letters.size(); ++k) {
    LieWord next;
    next.children = {std::move(out), LieWord::leaf(w.letters[k])};
    out = std::move(next);
  }
  return out;
}

std::string format_left_normed(const LeftNormed& w) { return format_lie_word(to_word(w)); }

std::vector<LeftNormed> lie_basis(const LabelSet& labels) {
  if (labels.empty()) throw LabelError("Lie(empty) is not used");
  std::vector<Label> rest(labels.begin() + 1, labels.end());
  std::vector<LeftNormed> out;
  do {
    std::vector<Label> w{labels.front()};
    w.insert(w.end(), rest.begin(), rest.end());
    out.push_back(LeftNormed{std::move(w)});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

LieVector lie_normal_form(const LieWord& w) {
  (void)w.labels();  // validates
  return nf(w);
}

LieVector lie_bracket(const LieVector& a, const LieVector& b) {
  LieVector out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      if (x.letters.front() < y.letters.front())
        out.axpy(cx * cy, bracket_ln(x.letters, y.letters));
      else
        out.axpy(-cx * cy, bracket_ln(y.letters, x.letters));
    }
  return out;
}

LieVector lie_compose(const LieVector& u, const Label& i, const LieVector& v) {
  LieVector out;
  for (const auto& [x, cx] : u) {
    LieWord wx = to_word(x);
    if (!word_contains(wx, i)) throw LabelError("lie_compose: '" + i + "' is not an input");
    for (const auto& [y, cy] : v) out.axpy(cx * cy, lie_normal_form(substitute(wx, i, to_word(y))));
  }
  return out;
}

TreeVector phi(const LieWord& w) {
  if (w.is_leaf()) return tv(w.label);
  return bracket(phi(w.children[0]), phi(w.children[1]));
}

TreeVector phi(const LieVector& v) {
  TreeVector out;
  for (const auto& [w, c] : v) {
    TreeVector p = tv(w.letters.front());
    for (std::size_t k = 1; k < w.letters.size(); ++k) p = bracket(p, tv(w.letters[k]));
    out.axpy(c, p);
  }
  return out;
}

CycLieElem cyclie_pair(const LieWord& a, const LieWord& b) {
  LabelSet all = set_union(a.labels(), b.labels());
  Label i0 = all.front();
  return CycLieElem{all, i0, rotate(i0, a, b)};
}

std::vector<CycLieElem> cyclie_basis(const LabelSet& labels) {
  if (labels.size() < 2) throw LabelError("CycLie(I) needs |I| >= 2");
  std::vector<CycLieElem> out;
  for (auto& w : lie_basis(set_minus(labels, labels.front())))
    out.push_back(CycLieElem{labels, labels.front(), LieVector(w)});
  return out;
}

LieVector cyclie_rotate(const CycLieElem& e, const Label& i) {
  if (!std::binary_search(e.labels.begin(), e.labels.end(), i))
    throw LabelError("cyclie_rotate: '" + i + "' is not in the label set");
  LieVector out;
  for (const auto& [w, c] : e.body) out.axpy(c, rotate(i, LieWord::leaf(e.basepoint), to_word(w)));
  return out;
}

}  // namespace prelie
