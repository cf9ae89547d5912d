#pragma once

#include "gbs/exact/polynomial.hpp"
#include "gbs/gog/graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gbs {

/// Schema or syntax problem in an input document. Each message is prefixed
/// with "line L: <field path>:" when the location is known.
class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

struct InputDocument {
  GraphOfGroups graph;
  bool shorthand = false;  // given as {"rank", "ascending_hnn"}
};

/// Accepts {rank, vertices, edges[{id, from, to, incl_from, incl_to}]} or
/// {rank, ascending_hnn}; the shorthand becomes vertex "v" with loop "t",
/// incl_from = I and incl_to = phi. Also runs graph validation.
InputDocument parse_document(const std::string& text);
InputDocument read_document(const std::string& path);

/// "[-5,-5,-1,1]" (ascending coefficients).
IntPolynomial parse_polynomial(const std::string& text);
/// "[2,0]"
IntVector parse_vector(const std::string& text);

}  // namespace gbs
