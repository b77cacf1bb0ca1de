#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A table document has the wrong dimensions or an out-of-range entry.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// No element acts as a two-sided identity.
class NoIdentity : public Error {
 public:
  using Error::Error;
};

/// The table is not associative; carries a witness triple (i, j, k) with
/// (x_i x_j) x_k != x_i (x_j x_k).
class NotAssociative : public Error {
 public:
  NotAssociative(std::size_t i, std::size_t j, std::size_t k, const std::string& what)
      : Error(what), i(i), j(j), k(k) {}
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

/// A symbolic generator set has no closed form in the backend catalog.
class NotInCatalog : public Error {
 public:
  using Error::Error;
};

/// A handle passed to restrict() is not product-closed (cannot occur for
/// handles produced by the library itself).
class NotClosed : public Error {
 public:
  using Error::Error;
};

class BackendUnsupported : public Error {
 public:
  using Error::Error;
};

/// A lattice join fell outside the node set.  Signals an engine bug: the
/// functor image families are join-closed by construction.
class JoinClosureViolation : public Error {
 public:
  using Error::Error;
};

/// Multiple functors match a derived composition cell (corpus too weak).
class AmbiguousComposition : public Error {
 public:
  using Error::Error;
};

/// No functor matches a derived composition cell.
class NoMatchingComposition : public Error {
 public:
  using Error::Error;
};

class UnknownFormat : public Error {
 public:
  using Error::Error;
};

}  // namespace mlat
