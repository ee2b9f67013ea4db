#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsg/errors.hpp"
#include "dsg/ring.hpp"

namespace dsg {

/// Malformed ring file. `position()` is the 1-based line; `column()` the
/// 1-based column within it (0 when the whole line is at fault).
class RingFileError : public ParseError {
 public:
  RingFileError(const std::string& what, std::size_t line, std::size_t column = 0)
      : ParseError(what, line), column_(column) {}
  std::size_t line() const noexcept { return position(); }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Ring file:
///
///   # comment
///   field QQ | field GF <prime>
///   vars <ident> ...
///   weights <posint> ...        (optional)
///   relations
///   <polynomial>                (one per line)
///   end
struct RingFile {
  RingPtr ring;
  std::string source;
  std::vector<std::size_t> relation_lines;  // source line of each relation
};

RingFile parse_ring_file(const std::string& text, const GroebnerOptions& opts = {});
RingFile load_ring_file(const std::string& path, const GroebnerOptions& opts = {});

/// Canonical text for a presentation; parsing it back yields the same
/// field, variables, weights and relations.
std::string emit_ring_file(const RingPresentation& R);

/// "QQ[x, y]/(x^2 - y^3)"
std::string describe_ring(const RingPresentation& R);

}  // namespace dsg
