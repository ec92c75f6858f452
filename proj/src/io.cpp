#include "pplateau/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pplateau {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  std::string rest_after(std::size_t k) const;  // raw text after token k
  std::string raw;
};

std::string Line::rest_after(std::size_t k) const {
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    pos = raw.find_first_not_of(" \t", pos);
    pos = raw.find_first_of(" \t", pos);
    if (pos == std::string::npos) return {};
  }
  const auto start = raw.find_first_not_of(" \t", pos);
  if (start == std::string::npos) return {};
  const auto end = raw.find_last_not_of(" \t\r");
  return raw.substr(start, end - start + 1);
}

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string raw(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream is(raw);
    Line line;
    line.number = number;
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    line.raw = std::move(raw);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

Scalar number(std::string_view source, const Line& line, std::size_t k) {
  if (k >= line.tokens.size()) fail(source, line.number, "missing number");
  auto v = Scalar::parse(line.tokens[k]);
  if (!v) fail(source, line.number, "malformed number '" + line.tokens[k] + "'");
  return *v;
}

std::int64_t integer(std::string_view source, const Line& line, std::size_t k) {
  if (k >= line.tokens.size()) fail(source, line.number, "missing integer");
  const std::string& tok = line.tokens[k];
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(source, line.number, "malformed integer '" + tok + "'");
  }
  if (used != tok.size()) fail(source, line.number, "malformed integer '" + tok + "'");
  return v;
}

void expect_tokens(std::string_view source, const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(source, line.number, "expected " + std::to_string(n) + " fields, found " + std::to_string(line.tokens.size()));
}

template <class F>
auto with_line(std::string_view source, std::size_t line, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    fail(source, line, e.what());
  }
}

int header_dim(std::string_view source, const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) fail(source, 1, "empty input, expected '" + keyword + " <dim>'");
  const Line& h = lines.front();
  if (h.tokens[0] != keyword) fail(source, h.number, "expected '" + keyword + " <dim>' header");
  expect_tokens(source, h, 2);
  return static_cast<int>(integer(source, h, 1));
}

}  // namespace

ComplexPtr parse_complex(std::string_view text, std::string_view source) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "pplateau-complex" ||
      lines[0].tokens[1] != "v1")
    fail(source, lines.empty() ? 1 : lines[0].number, "expected header 'pplateau-complex v1'");
  if (lines.size() < 2 || lines[1].tokens[0] != "dim") fail(source, lines.size() < 2 ? 1 : lines[1].number, "expected 'dim <n>'");
  expect_tokens(source, lines[1], 2);
  const auto n = integer(source, lines[1], 1);
  if (n < 1 || n > 16) fail(source, lines[1].number, "dimension must lie in 1..16");
  ComplexBuilder builder(static_cast<int>(n));
  int block = -1;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& kw = line.tokens[0];
    if (kw == "cells") {
      expect_tokens(source, line, 2);
      const auto d = integer(source, line, 1);
      if (d < 0 || d > n) fail(source, line.number, "block dimension out of range");
      block = static_cast<int>(d);
    } else if (kw == "cell") {
      if (block < 0) fail(source, line.number, "'cell' outside a 'cells <d>' block");
      if (line.tokens.size() < 4 || line.tokens[2] != "measure")
        fail(source, line.number, "expected 'cell <id> measure <number> [label]'");
      const Scalar mu = number(source, line, 3);
      with_line(source, line.number, [&] {
        return builder.add_cell(block, line.tokens[1], mu, line.rest_after(3));
      });
    } else if (kw == "face") {
      if (block < 1) fail(source, line.number, "'face' needs a block of dimension >= 1");
      expect_tokens(source, line, 4);
      const auto sign = integer(source, line, 3);
      with_line(source, line.number, [&] {
        builder.add_face(block, line.tokens[1], line.tokens[2], sign);
        return 0;
      });
    } else if (kw == "coord") {
      if (line.tokens.size() < 3) fail(source, line.number, "expected 'coord <vertex-id> <number>...'");
      auto v = builder.find(0, line.tokens[1]);
      if (!v) fail(source, line.number, "unknown vertex '" + line.tokens[1] + "'");
      std::vector<Rational> xs;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) xs.push_back(number(source, line, i).to_rational());
      with_line(source, line.number, [&] {
        builder.set_coordinates(*v, std::move(xs));
        return 0;
      });
    } else {
      fail(source, line.number, "unknown keyword '" + kw + "'");
    }
  }
  return with_line(source, lines.back().number, [&] { return builder.build(); });
}

std::string write_complex(const CellComplex& cx) {
  std::ostringstream os;
  os << "pplateau-complex v1\n";
  os << "dim " << cx.top_dim() << "\n";
  for (int d = 0; d <= cx.top_dim(); ++d) {
    os << "cells " << d << "\n";
    for (std::size_t i = 0; i < cx.cell_count(d); ++i) {
      const Cell& c = cx.cell(d, i);
      os << "cell " << c.id << " measure " << c.measure.str();
      if (!c.label.empty()) os << " " << c.label;
      os << "\n";
    }
    for (std::size_t i = 0; i < cx.cell_count(d); ++i)
      for (const Incidence& f : cx.faces(d, i))
        os << "face " << cx.cell(d, i).id << " " << cx.cell(d - 1, f.cell).id << " " << f.coefficient << "\n";
  }
  if (cx.has_coordinates())
    for (std::size_t v = 0; v < cx.cell_count(0); ++v) {
      os << "coord " << cx.cell(0, v).id;
      for (const Rational& x : cx.coordinates(v)) os << " " << to_string(x);
      os << "\n";
    }
  return os.str();
}

Chain parse_chain(std::string_view text, const ComplexPtr& cx, std::string_view source) {
  const auto lines = lines_of(text);
  const int dim = header_dim(source, lines, "chain");
  Chain c = with_line(source, lines[0].number, [&] { return Chain(cx, dim); });
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    expect_tokens(source, line, 2);
    auto idx = cx->find(dim, line.tokens[0]);
    if (!idx) fail(source, line.number, "unknown " + std::to_string(dim) + "-cell '" + line.tokens[0] + "'");
    if (c[*idx] != 0) fail(source, line.number, "duplicate entry for '" + line.tokens[0] + "'");
    c.set(*idx, integer(source, line, 1));
  }
  return c;
}

std::string write_chain(const Chain& c) {
  std::ostringstream os;
  os << "chain " << c.dim() << "\n";
  for (const auto& [i, v] : c.terms()) os << c.complex()->cell(c.dim(), i).id << " " << v << "\n";
  return os.str();
}

Cochain parse_cochain(std::string_view text, const ComplexPtr& cx, std::string_view source) {
  const auto lines = lines_of(text);
  const int dim = header_dim(source, lines, "cochain");
  Cochain c = with_line(source, lines[0].number, [&] { return Cochain(cx, dim); });
  std::vector<bool> seen(cx->cell_count(dim), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    expect_tokens(source, line, 2);
    auto idx = cx->find(dim, line.tokens[0]);
    if (!idx) fail(source, line.number, "unknown " + std::to_string(dim) + "-cell '" + line.tokens[0] + "'");
    if (seen[*idx]) fail(source, line.number, "duplicate entry for '" + line.tokens[0] + "'");
    seen[*idx] = true;
    c.set(*idx, number(source, line, 1));
  }
  return c;
}

std::string write_cochain(const Cochain& c) {
  std::ostringstream os;
  os << "cochain " << c.dim() << "\n";
  for (const auto& [i, v] : c.values()) os << c.complex()->cell(c.dim(), i).id << " " << v.str() << "\n";
  return os.str();
}

Integrand parse_integrand(std::string_view text, std::string_view source) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0].tokens[0] != "integrand" || lines[0].tokens.size() < 2)
    fail(source, lines.empty() ? 1 : lines[0].number, "expected 'integrand identity|alpha <value>|table'");
  const Line& h = lines[0];
  const std::string& kind = h.tokens[1];
  if (kind == "identity") {
    expect_tokens(source, h, 2);
    if (lines.size() > 1) fail(source, lines[1].number, "unexpected data after identity integrand");
    return Integrand::identity();
  }
  if (kind == "alpha") {
    expect_tokens(source, h, 3);
    if (lines.size() > 1) fail(source, lines[1].number, "unexpected data after alpha integrand");
    const Scalar a = number(source, h, 2);
    return with_line(source, h.number, [&] { return Integrand::alpha(a.to_rational()); });
  }
  if (kind == "table") {
    expect_tokens(source, h, 2);
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      expect_tokens(source, lines[k], 2);
      pts.emplace_back(number(source, lines[k], 0).to_rational(), number(source, lines[k], 1).to_rational());
    }
    return with_line(source, h.number, [&] { return Integrand::table(std::move(pts)); });
  }
  fail(source, h.number, "unknown integrand kind '" + kind + "'");
}

std::string write_integrand(const Integrand& h) {
  switch (h.kind()) {
    case Integrand::Kind::identity:
      return "integrand identity\n";
    case Integrand::Kind::alpha:
      return "integrand alpha " + to_string(h.exponent()) + "\n";
    case Integrand::Kind::table: {
      std::string out = "integrand table\n";
      for (const auto& [x, y] : h.points()) out += to_string(x) + " " + to_string(y) + "\n";
      return out;
    }
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << contents;
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace pplateau
