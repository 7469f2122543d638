#include "drlab/pointset_io.hpp"

#include <fstream>
#include <sstream>

#include "drlab/errors.hpp"

namespace drlab {

namespace {

std::string expect_kv(std::istringstream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0)
    throw IoError("point-set header: expected '" + key + "=<value>'");
  return token.substr(key.size() + 1);
}

}  // namespace

PointSet read_pointset(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw IoError("point-set file: missing header line");
  std::istringstream hs(header);
  PointSet ps;
  try {
    ps.n = std::stoi(expect_kv(hs, "n"));
  } catch (const std::logic_error&) {
    throw IoError("point-set header: bad dimension");
  }
  ps.surface = surface_from_name(expect_kv(hs, "surface"));
  const std::string delta_text = expect_kv(hs, "delta");
  if (delta_text != "none") ps.delta = parse_rational(delta_text);

  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    FrequencyPoint p;
    while (ls >> tok) p.coords.push_back(parse_rational(tok));
    if (p.coords.empty()) continue;  // blank line
    if (static_cast<int>(p.coords.size()) != ps.n)
      throw IoError("point-set file line " + std::to_string(lineno) + ": expected " +
                    std::to_string(ps.n) + " coordinates");
    ps.points.push_back(std::move(p));
  }
  ps.validate();
  return ps;
}

PointSet read_pointset_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open point-set file: " + path);
  try {
    return read_pointset(f);
  } catch (const ParameterError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_pointset(std::ostream& out, const PointSet& ps) {
  out << "n=" << ps.n << " surface=" << surface_name(ps.surface) << " delta=";
  if (ps.delta)
    out << format_rational(*ps.delta);
  else
    out << "none";
  out << "\n";
  for (const FrequencyPoint& p : ps.points) {
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      if (i) out << ' ';
      out << format_rational(p.coords[i]);
    }
    out << "\n";
  }
}

void write_pointset_file(const std::string& path, const PointSet& ps) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open point-set file for writing: " + path);
  write_pointset(f, ps);
  if (!f.good()) throw IoError("write failed: " + path);
}

std::vector<LineCoeffs> read_lines_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open line file: " + path);
  std::vector<LineCoeffs> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;  // blank line
    if (!(ls >> b >> c))
      throw IoError(path + " line " + std::to_string(lineno) + ": expected 'a b c'");
    try {
      lines.push_back({Int(a), Int(b), Int(c)});
    } catch (const std::invalid_argument&) {
      throw IoError(path + " line " + std::to_string(lineno) + ": bad integer");
    }
  }
  return lines;
}

void write_lines_file(const std::string& path, const std::vector<LineCoeffs>& lines) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open line file for writing: " + path);
  for (const LineCoeffs& l : lines)
    f << l.a.get_str() << ' ' << l.b.get_str() << ' ' << l.c.get_str() << "\n";
  if (!f.good()) throw IoError("write failed: " + path);
}

}  // namespace drlab
