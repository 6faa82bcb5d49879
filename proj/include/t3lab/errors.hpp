#pragma once

#include <stdexcept>
#include <string>

namespace t3lab {

// Malformed input or a violated precondition. CLI exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size or dimension cap was exceeded, or an extended-order
// comparison could not be resolved within the cap. CLI exit status 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object contradicts a theorem whose hypotheses were checked.
// Either the hypotheses were not actually met or there is a bug.
class TheoryDiscrepancy : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by the explosion-sequence driver when a reduced, nonempty line
// subgraph with finite eta has no typed explodable pair.
class NoTypedPair : public TheoryDiscrepancy {
 public:
  using TheoryDiscrepancy::TheoryDiscrepancy;
};

}  // namespace t3lab
