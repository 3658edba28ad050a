#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qbundle/algebra.hpp"
#include "qbundle/errors.hpp"

namespace qb {

/// Malformed or inconsistent instance document. `line` is 1-based, 0 when
/// no position is known.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string pointer, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  /// JSON pointer of the offending value, empty for syntax errors.
  const std::string& pointer() const { return pointer_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string pointer_;
};

/// One comodule algebra over a Hopf algebra, plus optional calculus data.
struct InstanceFile {
  std::string name;
  ComoduleAlgebraData comodule;
  /// Vectors in P⊗P, lexicographic coordinates.
  std::vector<Vector> n_p_generators;
  /// Vectors in H, each annihilated by the counit.
  std::vector<Vector> v_generators;
};

InstanceFile parse_instance(std::string_view text, const std::string& source = "<input>");
InstanceFile load_instance(const std::filesystem::path& path);

/// Canonical text form: fixed key order, one matrix row per line, scalars
/// as reduced "a" or "a/b" strings.
std::string dump_instance(const InstanceFile& inst);

}  // namespace qb
