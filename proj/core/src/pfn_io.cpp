#include "planeflow/pfn_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace planeflow {

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of whitespace-separated tokens, '#' comments
// stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = lineno;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start)
        line.tokens.push_back(Token{raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

std::int64_t parse_int(const Line &line, std::size_t idx, const char *what) {
  if (idx >= line.tokens.size())
    throw ParseError(line.number, 1, std::string("missing ") + what);
  const Token &t = line.tokens[idx];
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(line.number, t.column, std::string("bad integer for ") + what);
  return value;
}

}  // namespace

PlaneGraph parse_pfn(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  std::size_t li = 0;
  auto need_line = [&](const char *what) -> const Line & {
    if (li >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                       std::string("unexpected end of document, expected ") + what);
    return lines[li];
  };

  {
    const Line &hdr = need_line("header 'pfn 1'");
    if (hdr.tokens.size() != 2 || hdr.tokens[0].text != "pfn" || hdr.tokens[1].text != "1")
      throw ParseError(hdr.number, hdr.tokens[0].column, "expected header 'pfn 1'");
    ++li;
  }
  const Line &sizes = need_line("'n m' line");
  std::int64_t n = parse_int(sizes, 0, "vertex count");
  std::int64_t m = parse_int(sizes, 1, "arc count");
  if (n < 0 || m < 0) throw ParseError(sizes.number, 1, "negative counts");
  ++li;
  const Line &terms = need_line("'s t' line");
  std::int64_t s = parse_int(terms, 0, "source");
  std::int64_t t = parse_int(terms, 1, "sink");
  ++li;

  std::vector<ArcRecord> arcs(static_cast<std::size_t>(m));
  std::vector<char> have_arc(static_cast<std::size_t>(m), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    const Line &line = need_line("arc line");
    if (line.tokens[0].text != "arc")
      throw ParseError(line.number, line.tokens[0].column, "expected 'arc'");
    std::int64_t id = parse_int(line, 1, "arc id");
    if (id < 0 || id >= m)
      throw ParseError(line.number, line.tokens[1].column, "arc id out of range");
    if (have_arc[static_cast<std::size_t>(id)])
      throw ParseError(line.number, line.tokens[1].column, "duplicate arc id");
    have_arc[static_cast<std::size_t>(id)] = 1;
    ArcRecord rec;
    rec.tail = static_cast<VertexId>(parse_int(line, 2, "arc tail"));
    rec.head = static_cast<VertexId>(parse_int(line, 3, "arc head"));
    rec.capacity = line.tokens.size() > 4 ? parse_int(line, 4, "capacity") : 1;
    if (line.tokens.size() > 5)
      throw ParseError(line.number, line.tokens[5].column, "trailing tokens on arc line");
    arcs[static_cast<std::size_t>(id)] = rec;
    ++li;
  }

  std::vector<std::vector<RotationEntry>> rot(static_cast<std::size_t>(n));
  std::vector<char> have_rot(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const Line &line = need_line("rot line");
    if (line.tokens[0].text != "rot")
      throw ParseError(line.number, line.tokens[0].column, "expected 'rot'");
    std::int64_t v = parse_int(line, 1, "rot vertex");
    if (v < 0 || v >= n)
      throw ParseError(line.number, line.tokens[1].column, "rot vertex out of range");
    if (have_rot[static_cast<std::size_t>(v)])
      throw ParseError(line.number, line.tokens[1].column, "duplicate rot line");
    have_rot[static_cast<std::size_t>(v)] = 1;
    for (std::size_t k = 2; k < line.tokens.size(); ++k) {
      const Token &tok = line.tokens[k];
      if (tok.text.size() < 2)
        throw ParseError(line.number, tok.column, "bad arc end token");
      char kind = tok.text.back();
      if (kind != 'T' && kind != 'H')
        throw ParseError(line.number, tok.column, "arc end must end in T or H");
      std::int64_t arc_id = 0;
      std::string_view num = tok.text.substr(0, tok.text.size() - 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), arc_id);
      if (ec != std::errc{} || ptr != num.data() + num.size())
        throw ParseError(line.number, tok.column, "bad arc id in end token");
      rot[static_cast<std::size_t>(v)].push_back(RotationEntry{
          static_cast<ArcId>(arc_id), kind == 'T' ? ArcEndKind::Tail : ArcEndKind::Head});
    }
    ++li;
  }

  OuterFaceRef outer;
  if (m > 0) {
    const Line &line = need_line("outer line");
    if (line.tokens[0].text != "outer")
      throw ParseError(line.number, line.tokens[0].column, "expected 'outer'");
    outer.arc = static_cast<ArcId>(parse_int(line, 1, "outer arc"));
    if (line.tokens.size() < 3)
      throw ParseError(line.number, 1, "missing outer side");
    std::string_view side = line.tokens[2].text;
    if (side == "L")
      outer.side = FaceSide::Left;
    else if (side == "R")
      outer.side = FaceSide::Right;
    else
      throw ParseError(line.number, line.tokens[2].column, "outer side must be L or R");
    ++li;
  }
  if (li < lines.size())
    throw ParseError(lines[li].number, lines[li].tokens[0].column, "trailing content");

  return PlaneGraph::build(static_cast<VertexId>(n), std::move(arcs), std::move(rot),
                           static_cast<VertexId>(s), static_cast<VertexId>(t), outer);
}

std::string serialize_pfn(const PlaneGraph &g) {
  std::ostringstream out;
  out << "pfn 1\n";
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  out << g.source() << ' ' << g.sink() << '\n';
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const ArcRecord &r = g.arc(a);
    out << "arc " << a << ' ' << r.tail << ' ' << r.head;
    if (r.capacity != 1) out << ' ' << r.capacity;
    out << '\n';
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v;
    for (const RotationEntry &re : g.rotation_of(v))
      out << ' ' << re.arc << (re.kind == ArcEndKind::Tail ? 'T' : 'H');
    out << '\n';
  }
  if (g.arc_count() > 0) {
    out << "outer " << g.outer_face().arc << ' '
        << (g.outer_face().side == FaceSide::Left ? 'L' : 'R') << '\n';
  }
  return out.str();
}

bool graphs_equal(const PlaneGraph &a, const PlaneGraph &b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
  if (a.source() != b.source() || a.sink() != b.sink()) return false;
  for (ArcId i = 0; i < a.arc_count(); ++i) {
    const ArcRecord &x = a.arc(i);
    const ArcRecord &y = b.arc(i);
    if (x.tail != y.tail || x.head != y.head || x.capacity != y.capacity) return false;
  }
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    auto ra = a.rotation_of(v);
    auto rb = b.rotation_of(v);
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (ra[i].arc != rb[i].arc || ra[i].kind != rb[i].kind) return false;
  }
  if (a.arc_count() > 0) {
    if (a.outer_face().arc != b.outer_face().arc || a.outer_face().side != b.outer_face().side)
      return false;
  }
  return true;
}

}  // namespace planeflow
