#include "cyclelab/digraph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "cyclelab/errors.hpp"

namespace cyclelab {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::uint64_t parse_count(std::istringstream& fields, std::size_t line_no, const char* name) {
  long long value = -1;
  if (!(fields >> value) || value < 0) fail(line_no, std::string("expected non-negative ") + name);
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) break;
  }
  if (line_no == 0 || blank(line)) throw ParseError("empty input: expected header `n m`");

  std::istringstream header(line);
  const auto n = parse_count(header, line_no, "vertex count");
  const auto m = parse_count(header, line_no, "arc count");
  std::string extra;
  if (header >> extra) fail(line_no, "trailing data in header");

  Digraph d(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw ParseError("unexpected end of input: expected " + std::to_string(m) + " arcs");
    ++line_no;
    std::istringstream fields(line);
    const auto u = parse_count(fields, line_no, "tail");
    const auto v = parse_count(fields, line_no, "head");
    if (fields >> extra) fail(line_no, "trailing data after arc");
    if (u >= n || v >= n) fail(line_no, "arc endpoint out of range");
    if (u == v) fail(line_no, "loop arc");
    if (!d.add_arc_if_absent(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail(line_no, "parallel arc");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    constexpr std::string_view kPrefix = "# label ";
    if (line.rfind(kPrefix, 0) != 0) fail(line_no, "expected `# label v text` trailer");
    std::string_view rest(line);
    rest.remove_prefix(kPrefix.size());
    const auto space = rest.find(' ');
    const std::string id(rest.substr(0, space));
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(id, &used);
    } catch (const std::exception&) {
      fail(line_no, "bad vertex id in label line");
    }
    if (used != id.size() || v >= n) fail(line_no, "bad vertex id in label line");
    const std::string text = space == std::string_view::npos ? std::string() : std::string(rest.substr(space + 1));
    d.set_label(static_cast<Vertex>(v), text);
  }
  return d;
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  if (d.has_labels()) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (!d.label(v).empty()) out << "# label " << v << ' ' << d.label(v) << '\n';
    }
  }
}

std::string to_text(const Digraph& d) {
  std::ostringstream os;
  write_digraph(os, d);
  return os.str();
}

Digraph from_text(const std::string& text) {
  std::istringstream is(text);
  return read_digraph(is);
}

Digraph load_digraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_digraph(in);
}

void save_digraph(const std::filesystem::path& path, const Digraph& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_digraph(out, d);
}

void write_dot(std::ostream& out, const Digraph& d, const std::string& name) {
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + '"';
  };
  out << "digraph " << quoted(name) << " {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    out << "  " << v;
    if (d.has_labels() && !d.label(v).empty()) out << " [label=" << quoted(d.label(v)) << ']';
    out << ";\n";
  }
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
}

}  // namespace cyclelab
