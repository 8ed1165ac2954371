#include "qbsa/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "qbsa/error.hpp"

namespace qbsa {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::string where(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column);
}

[[noreturn]] void fail_at(ErrorCode code, const Token& t, const std::string& message) {
  fail(code, where(t) + ": " + message);
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '/' ||
         c == '+' || c == '-';
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'')) return false;
  return true;
}

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", line_no, col});
      i += 2;
      continue;
    }
    if (c == ':' || c == '=' || c == '*') {
      out.push_back({std::string(1, c), line_no, col});
      ++i;
      continue;
    }
    if (!is_word_char(c)) {
      fail_at(ErrorCode::ParseError, {std::string(1, c), line_no, col},
              std::string("unexpected character '") + c + "'");
    }
    std::size_t j = i;
    while (j < line.size() && is_word_char(line[j]) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
      ++j;
    out.push_back({std::string(line.substr(i, j - i)), line_no, col});
    i = j;
  }
  return out;
}

struct PendingArrow {
  ArrowSpec spec;
  Token name, source, target;
};

struct PendingRelation {
  std::vector<Token> u;
  std::vector<Token> v;            // empty for a monomial
  std::optional<Token> scalar;
  Token keyword;
};

const Token& expect_identifier(const std::vector<Token>& toks, std::size_t i, const Token& keyword,
                               const char* what) {
  if (i >= toks.size()) fail_at(ErrorCode::ParseError, keyword, std::string("expected ") + what);
  if (!is_identifier(toks[i].text))
    fail_at(ErrorCode::ParseError, toks[i], std::string("expected ") + what + ", got '" + toks[i].text + "'");
  return toks[i];
}

Path resolve_path(const Quiver& q, const std::vector<Token>& toks, const Token& keyword) {
  std::vector<ArrowId> arrows;
  for (const Token& t : toks) {
    auto a = q.find_arrow(t.text);
    if (!a) fail_at(ErrorCode::UnknownSymbol, t, "undeclared arrow '" + t.text + "'");
    if (!arrows.empty() && q.target(arrows.back()) != q.source(*a))
      fail_at(ErrorCode::NonComposablePath, t,
              "arrow '" + t.text + "' does not start where '" + q.arrow(arrows.back()).name + "' ends");
    arrows.push_back(*a);
  }
  if (arrows.empty()) fail_at(ErrorCode::ParseError, keyword, "empty path");
  return Path::of(q, std::move(arrows));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> points;
  std::vector<Token> point_tokens;
  std::vector<PendingArrow> arrows;
  std::vector<PendingRelation> relations;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    const auto toks = lex_line(line, line_no);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const Token& kw = toks.front();
    if (kw.text == "point") {
      if (toks.size() == 1) fail_at(ErrorCode::ParseError, kw, "point declaration without identifiers");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const Token& id = expect_identifier(toks, i, kw, "point identifier");
        for (const Token& prev : point_tokens)
          if (prev.text == id.text) fail_at(ErrorCode::ParseError, id, "duplicate point '" + id.text + "'");
        points.push_back(id.text);
        point_tokens.push_back(id);
      }
    } else if (kw.text == "arrow") {
      // arrow <id> : <point> -> <point>
      if (toks.size() != 6 || toks[2].text != ":" || toks[4].text != "->")
        fail_at(ErrorCode::ParseError, kw, "expected 'arrow <id> : <point> -> <point>'");
      const Token& name = expect_identifier(toks, 1, kw, "arrow identifier");
      const Token& src = expect_identifier(toks, 3, kw, "source point");
      const Token& tgt = expect_identifier(toks, 5, kw, "target point");
      for (const PendingArrow& prev : arrows)
        if (prev.spec.name == name.text) fail_at(ErrorCode::ParseError, name, "duplicate arrow '" + name.text + "'");
      arrows.push_back({{name.text, src.text, tgt.text}, name, src, tgt});
    } else if (kw.text == "zero") {
      PendingRelation rel{{}, {}, std::nullopt, kw};
      for (std::size_t i = 1; i < toks.size(); ++i) rel.u.push_back(expect_identifier(toks, i, kw, "arrow"));
      if (rel.u.empty()) fail_at(ErrorCode::ParseError, kw, "empty monomial relation");
      relations.push_back(std::move(rel));
    } else if (kw.text == "comm") {
      PendingRelation rel{{}, {}, std::nullopt, kw};
      std::size_t i = 1;
      while (i < toks.size() && toks[i].text != "=") rel.u.push_back(expect_identifier(toks, i++, kw, "arrow"));
      if (i >= toks.size()) fail_at(ErrorCode::ParseError, kw, "expected '=' in binomial relation");
      const Token& eq = toks[i++];
      if (i + 1 < toks.size() && toks[i + 1].text == "*") {
        rel.scalar = toks[i];
        i += 2;
      }
      while (i < toks.size()) rel.v.push_back(expect_identifier(toks, i++, kw, "arrow"));
      if (rel.u.empty()) fail_at(ErrorCode::ParseError, kw, "empty left-hand path");
      if (rel.v.empty()) fail_at(ErrorCode::ParseError, eq, "empty right-hand path");
      relations.push_back(std::move(rel));
    } else {
      fail_at(ErrorCode::ParseError, kw, "unknown declaration '" + kw.text + "'");
    }
    if (end == text.size()) break;
  }

  for (const PendingArrow& a : arrows) {
    auto known = [&](const Token& t) {
      for (const auto& p : points)
        if (p == t.text) return true;
      return false;
    };
    if (!known(a.source)) fail_at(ErrorCode::UnknownSymbol, a.source, "undeclared point '" + a.source.text + "'");
    if (!known(a.target)) fail_at(ErrorCode::UnknownSymbol, a.target, "undeclared point '" + a.target.text + "'");
  }
  std::vector<ArrowSpec> specs;
  specs.reserve(arrows.size());
  for (const PendingArrow& a : arrows) specs.push_back(a.spec);
  Quiver q = Quiver::make(std::move(points), std::move(specs));

  std::vector<Path> monomials;
  std::vector<Binomial> binomials;
  for (const PendingRelation& rel : relations) {
    Path u = resolve_path(q, rel.u, rel.keyword);
    if (u.length() < 2)
      fail_at(ErrorCode::RelationTooShort, rel.u.front(), "relation path '" + format_path(q, u) + "' has length 1");
    if (rel.v.empty()) {
      monomials.push_back(std::move(u));
      continue;
    }
    Path v = resolve_path(q, rel.v, rel.keyword);
    if (v.length() < 2)
      fail_at(ErrorCode::RelationTooShort, rel.v.front(), "relation path '" + format_path(q, v) + "' has length 1");
    if (!u.is_parallel_to(v))
      fail_at(ErrorCode::NotParallel, rel.keyword,
              "'" + format_path(q, u) + "' and '" + format_path(q, v) + "' are not parallel");
    if (u == v) fail_at(ErrorCode::NotParallel, rel.keyword, "both sides equal '" + format_path(q, u) + "'");
    Scalar lambda;
    if (rel.scalar) {
      auto s = Scalar::parse(rel.scalar->text);
      if (!s) fail_at(ErrorCode::ParseError, *rel.scalar, "malformed scalar '" + rel.scalar->text + "'");
      if (s->is_zero()) fail_at(ErrorCode::ZeroScalar, *rel.scalar, "binomial scalar must be nonzero");
      lambda = *s;
    }
    binomials.push_back({std::move(u), std::move(v), lambda});
  }
  return Presentation::make(std::move(q), std::move(monomials), std::move(binomials));
}

std::string serialize(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::ostringstream out;
  if (q.num_points() > 0) {
    out << "point";
    for (const auto& name : q.point_names()) out << ' ' << name;
    out << '\n';
  }
  for (const Arrow& a : q.arrows())
    out << "arrow " << a.name << " : " << q.point_name(a.source) << " -> " << q.point_name(a.target) << '\n';
  for (const Path& m : p.monomials()) out << "zero " << format_path(q, m) << '\n';
  for (const Binomial& b : p.binomials()) {
    out << "comm " << format_path(q, b.u) << " = ";
    if (!b.lambda.is_one()) out << b.lambda.to_string() << " * ";
    out << format_path(q, b.v) << '\n';
  }
  return out.str();
}

Presentation load_presentation(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace qbsa
