#ifndef TSPLIT_HYPERSURFACE_IO_HPP
#define TSPLIT_HYPERSURFACE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsplit/multipoly.hpp"

namespace tsplit {

// Parsed but not yet typed contents of a hypersurface file:
//   d = 3
//   e = 3
//   n = 4
//   field = rational          (optional; or prime:<p>)
//   Q 1 2 : x0
//   X 4 : x0*x3
//   F : <full polynomial>     (decomposed into the curve ideal)
// '#' starts a comment.
struct HypersurfaceFile {
  struct Entry {
    enum class Kind { Quadric, Linear, Full };
    Kind kind = Kind::Quadric;
    int i = 0, j = 0, k = 0;
    std::string poly;
    int line = 0;
  };

  std::optional<int> d, e, n;
  std::optional<FieldSpec> field;
  std::vector<Entry> entries;
};

HypersurfaceFile parse_hypersurface_text(std::string_view text);
HypersurfaceFile read_hypersurface_file(const std::string& path);

template <class K>
IdealCombination<K> build_ideal_combination(const HypersurfaceFile& file, const CurveContext& ctx, const K& field);

template <class K>
std::string format_hypersurface(const IdealCombination<K>& f);

}  // namespace tsplit

#endif
