#ifndef SENTREE_ERROR_HPP
#define SENTREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sentree {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad column counts, non-numeric fields, ...).
struct ParseError : Error {
  using Error::Error;
};

// A structurally broken tree (multi-root, cycle, head range, id gaps).
struct ValidationError : Error {
  using Error::Error;
};

// Gold/predicted treebanks that do not line up token-wise.
struct AlignmentError : Error {
  using Error::Error;
};

// Bad lexicon/config/label data, unwritable outputs, empty documents.
struct DataError : Error {
  using Error::Error;
};

// A 2x2 contingency table with an expected cell count of zero.
struct DegenerateTableError : Error {
  using Error::Error;
};

}  // namespace sentree

#endif
