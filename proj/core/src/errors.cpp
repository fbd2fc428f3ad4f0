#include "cstates/errors.hpp"

namespace cstates {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::rejected: return "rejected";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::integration: return "integration";
  }
  return "unknown";
}

void throw_domain(const std::string& what) { throw Error(ErrorKind::domain, what); }

}  // namespace cstates
