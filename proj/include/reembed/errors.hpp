#ifndef REEMBED_ERRORS_HPP
#define REEMBED_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reembed {

// Malformed graph6 input. byte_offset points at the offending byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

class NotPlanar : public std::runtime_error {
 public:
  NotPlanar() : std::runtime_error("graph is not planar") {}
};

class NotCubic : public std::runtime_error {
 public:
  NotCubic() : std::runtime_error("graph is not cubic") {}
};

class Not3Connected : public std::runtime_error {
 public:
  Not3Connected() : std::runtime_error("graph is not 3-connected") {}
};

// Some pair of faces shares two or more edges; signals a violated
// precondition of dual construction.
class DualNotSimple : public std::runtime_error {
 public:
  DualNotSimple() : std::runtime_error("dual graph is not simple") {}
};

class SweepTooLarge : public std::runtime_error {
 public:
  explicit SweepTooLarge(int edges)
      : std::runtime_error("exhaustive twist-set sweep over 2^" +
                           std::to_string(edges) +
                           " sets exceeds the default cap") {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg)
      : std::logic_error("internal error: " + msg) {}
};

}  // namespace reembed

#endif
