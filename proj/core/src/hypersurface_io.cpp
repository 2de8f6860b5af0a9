#include "tsplit/hypersurface_io.hpp"

#include <fstream>
#include <sstream>

#include "tsplit/errors.hpp"

namespace tsplit {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("hypersurface file line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

HypersurfaceFile parse_hypersurface_text(std::string_view text) {
  HypersurfaceFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (auto eq = line.find('='); eq != std::string::npos && line.find(':') == std::string::npos) {
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key == "d") {
        out.d = parse_int(value, line_no);
      } else if (key == "e") {
        out.e = parse_int(value, line_no);
      } else if (key == "n") {
        out.n = parse_int(value, line_no);
      } else if (key == "field") {
        try {
          out.field = FieldSpec::parse(value);
        } catch (const PreconditionError& err) {
          fail(line_no, err.what());
        }
      } else {
        fail(line_no, "unknown header '" + key + "'");
      }
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string::npos) fail(line_no, "expected 'Q i j : poly', 'X k : poly' or 'F : poly'");
    std::istringstream head(line.substr(0, colon));
    std::string tag;
    head >> tag;
    HypersurfaceFile::Entry entry;
    entry.line = line_no;
    entry.poly = trim(line.substr(colon + 1));
    std::string a, b, extra;
    if (tag == "Q") {
      entry.kind = HypersurfaceFile::Entry::Kind::Quadric;
      if (!(head >> a >> b) || (head >> extra)) fail(line_no, "quadric line needs two indices");
      entry.i = parse_int(a, line_no);
      entry.j = parse_int(b, line_no);
    } else if (tag == "X") {
      entry.kind = HypersurfaceFile::Entry::Kind::Linear;
      if (!(head >> a) || (head >> extra)) fail(line_no, "linear line needs one index");
      entry.k = parse_int(a, line_no);
    } else if (tag == "F") {
      entry.kind = HypersurfaceFile::Entry::Kind::Full;
      if (head >> extra) fail(line_no, "full polynomial line takes no indices");
    } else {
      fail(line_no, "unknown entry tag '" + tag + "'");
    }
    if (entry.poly.empty()) fail(line_no, "missing polynomial");
    out.entries.push_back(std::move(entry));
  }
  return out;
}

HypersurfaceFile read_hypersurface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open hypersurface file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypersurface_text(buf.str());
}

template <class K>
IdealCombination<K> build_ideal_combination(const HypersurfaceFile& file, const CurveContext& ctx, const K& field) {
  IdealCombination<K> out(ctx, field);
  for (const auto& entry : file.entries) {
    try {
      switch (entry.kind) {
        case HypersurfaceFile::Entry::Kind::Quadric:
          if (!(1 <= entry.i && entry.i < entry.j && entry.j <= ctx.e))
            fail(entry.line, "quadric index out of range 1 <= i < j <= e");
          out.add_quadric(entry.i, entry.j, parse_poly(entry.poly, ctx, field, ctx.d - 2));
          break;
        case HypersurfaceFile::Entry::Kind::Linear:
          if (!(ctx.e < entry.k && entry.k <= ctx.n)) fail(entry.line, "linear index out of range e < k <= n");
          out.add_linear(entry.k, parse_poly(entry.poly, ctx, field, ctx.d - 1));
          break;
        case HypersurfaceFile::Entry::Kind::Full: {
          auto parts = decompose_into_ideal(parse_poly(entry.poly, ctx, field, ctx.d));
          for (const auto& [ij, c] : parts.quadric_coeffs) out.add_quadric(ij.first, ij.second, c);
          for (const auto& [k, g] : parts.linear_coeffs) out.add_linear(k, g);
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError& err) {
      fail(entry.line, err.what());
    }
  }
  out.validate();
  return out;
}

template <class K>
std::string format_hypersurface(const IdealCombination<K>& f) {
  std::string out = "d = " + std::to_string(f.context.d) + "\n";
  out += "e = " + std::to_string(f.context.e) + "\n";
  out += "n = " + std::to_string(f.context.n) + "\n";
  out += "field = " + f.context.field.to_string() + "\n";
  out += f.to_string();
  return out;
}

template IdealCombination<RationalField> build_ideal_combination(const HypersurfaceFile&, const CurveContext&,
                                                                 const RationalField&);
template IdealCombination<PrimeField> build_ideal_combination(const HypersurfaceFile&, const CurveContext&,
                                                              const PrimeField&);
template std::string format_hypersurface(const IdealCombination<RationalField>&);
template std::string format_hypersurface(const IdealCombination<PrimeField>&);

}  // namespace tsplit
