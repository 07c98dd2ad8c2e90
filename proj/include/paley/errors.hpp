#ifndef PALEY_ERRORS_HPP
#define PALEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paley {

// Raised when a construction or search would exceed a configured size limit.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by srg_parameters when common-neighbour counts are not constant.
struct NotStronglyRegular : std::runtime_error {
  NotStronglyRegular(const std::string& what, int u_, int v_)
      : std::runtime_error(what), u(u_), v(v_) {}
  int u;
  int v;
};

}  // namespace paley

#endif  // PALEY_ERRORS_HPP
