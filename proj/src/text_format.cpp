#include "pwitness/text_format.hpp"

#include <cctype>
#include <vector>

#include "pwitness/errors.hpp"

namespace pw::text {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({l, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline does not start a new line.
  if (!lines.empty() && lines.back().text.empty() && !text.empty() && text.back() == '\n') lines.pop_back();
  return lines;
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool is_blank(std::string_view s) { return tokenize(s).empty(); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines, std::size_t pos = 0) : lines_(std::move(lines)), pos_(pos) {}

  const Line& next(const char* what) {
    if (pos_ >= lines_.size()) {
      const std::size_t l = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(l, 1, std::string("unexpected end of input, expected ") + what);
    }
    return lines_[pos_++];
  }

  void expect_end() {
    for (; pos_ < lines_.size(); ++pos_)
      if (!is_blank(lines_[pos_].text)) throw ParseError(lines_[pos_].number, 1, "unexpected trailing content");
  }

  // A missing last line reads as blank, so a trailing empty subset survives
  // editors that strip the final newline.
  Line next_or_blank() {
    if (pos_ >= lines_.size()) return {std::string_view(), lines_.empty() ? 1 : lines_.back().number + 1};
    return lines_[pos_++];
  }

  std::size_t position() const { return pos_; }
  const std::vector<Line>& lines() const { return lines_; }
  void seek(std::size_t p) { pos_ = p; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_;
};

std::size_t parse_dimension(Cursor& cur) {
  const Line& l = cur.next("dimension");
  const auto toks = tokenize(l.text);
  if (toks.size() != 1) throw ParseError(l.number, toks.empty() ? 1 : toks[1 % toks.size()].column, "expected a single dimension");
  if (!all_digits(toks[0].text)) throw ParseError(l.number, toks[0].column, "dimension must be a non-negative integer");
  if (toks[0].text.size() > 3) throw ParseError(l.number, toks[0].column, "dimension too large");
  const std::size_t n = std::stoul(std::string(toks[0].text));
  if (n == 0 || n >= kMaxDimension) throw ParseError(l.number, toks[0].column, "dimension must be in 1..63");
  return n;
}

RatVector parse_row(const Line& l, std::size_t n) {
  const auto toks = tokenize(l.text);
  if (toks.size() != n)
    throw ParseError(l.number, toks.size() > n ? toks[n].column : l.text.size() + 1,
                     "expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
  RatVector row;
  row.reserve(n);
  for (const auto& t : toks) row.push_back(parse_rational(t.text, l.number, t.column));
  return row;
}

IndexSet parse_subset(const Line& l, std::size_t n) {
  IndexSet s(n);
  for (const auto& t : tokenize(l.text)) {
    if (!all_digits(t.text) || t.text.size() > 3) throw ParseError(l.number, t.column, "expected a 1-based index");
    const std::size_t i = std::stoul(std::string(t.text));
    if (i < 1 || i > n) throw ParseError(l.number, t.column, "index out of range 1.." + std::to_string(n));
    if (s.contains(i - 1)) throw ParseError(l.number, t.column, "duplicate index");
    s = s.with(i - 1);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view s, std::size_t line, std::size_t column) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError(line, column, "malformed rational '" + std::string(s) + "'");
  if (!all_digits(den)) throw ParseError(line, column + (slash == std::string_view::npos ? 0 : slash + 1 + (s.size() - body.size())),
                                         "malformed denominator in '" + std::string(s) + "'");
  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw ParseError(line, column, "zero denominator in '" + std::string(s) + "'");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

RatMatrix parse_matrix(std::string_view text) {
  Cursor cur(split_lines(text));
  const std::size_t n = parse_dimension(cur);
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector row = parse_row(cur.next("matrix row"), n);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  cur.expect_end();
  return m;
}

RatVector parse_vector(std::string_view text) {
  Cursor cur(split_lines(text));
  const std::size_t n = parse_dimension(cur);
  RatVector v = parse_row(cur.next("vector entries"), n);
  cur.expect_end();
  return v;
}

Witness parse_witness(std::string_view text, std::size_t n) {
  Cursor cur(split_lines(text));
  std::string tag;
  while (cur.position() < cur.lines().size()) {
    const auto toks = tokenize(cur.next("witness tag").text);
    if (toks.size() == 1 && (toks[0].text == "PV1" || toks[0].text == "PV2" || toks[0].text == "PV3SING" ||
                             toks[0].text == "PV3SINKS")) {
      tag = std::string(toks[0].text);
      break;
    }
  }
  if (tag.empty()) throw ParseError(1, 1, "no witness tag (PV1, PV2, PV3SING, PV3SINKS) found");

  Witness w;
  if (tag == "PV1") {
    w = PV1{parse_subset(cur.next_or_blank(), n)};
  } else if (tag == "PV3SING") {
    w = PV3Singular{parse_subset(cur.next_or_blank(), n)};
  } else if (tag == "PV2") {
    const Line& dl = cur.lines()[std::min(cur.position(), cur.lines().size() - 1)];
    const std::size_t k = parse_dimension(cur);
    if (k != n) throw ParseError(dl.number, 1, "vector dimension " + std::to_string(k) + " does not match matrix dimension " + std::to_string(n));
    w = PV2{parse_row(cur.next("vector entries"), n)};
  } else {
    PV3TwoSinks t;
    t.q = parse_row(cur.next("q"), n);
    t.alpha = parse_subset(cur.next_or_blank(), n);
    t.beta = parse_subset(cur.next_or_blank(), n);
    w = std::move(t);
  }
  cur.expect_end();
  return w;
}

std::string format_matrix(const RatMatrix& m) {
  std::string s = std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) s += ' ';
      Rational v = m(i, j);
      v.canonicalize();
      s += v.get_str();
    }
    s += '\n';
  }
  return s;
}

std::string format_vector(const RatVector& x) { return std::to_string(x.size()) + "\n" + to_string(x) + "\n"; }

std::string format_subset(const IndexSet& a) {
  std::string s;
  for (auto i : a.members()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i + 1);
  }
  return s;
}

std::string format_witness(const Witness& w) {
  std::string s = tag_of(w) + "\n";
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PV1> || std::is_same_v<T, PV3Singular>) {
          s += format_subset(v.alpha) + "\n";
        } else if constexpr (std::is_same_v<T, PV2>) {
          s += format_vector(v.x);
        } else {
          s += to_string(v.q) + "\n" + format_subset(v.alpha) + "\n" + format_subset(v.beta) + "\n";
        }
      },
      w);
  return s;
}

}  // namespace pw::text
