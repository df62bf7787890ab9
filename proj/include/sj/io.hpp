#ifndef SJ_IO_HPP
#define SJ_IO_HPP

#include "sj/generation.hpp"
#include "sj/superalgebra.hpp"

#include <string>

namespace sj {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// Canonical JSON text for an algebra: sorted keys, rationals as lowest-terms
// strings, dense constants array. Byte-identical across write/read/write.
std::string algebra_to_json(const Superalgebra<Rational>& J);
Superalgebra<Rational> algebra_from_json(const std::string& text);

void write_algebra_file(const Superalgebra<Rational>& J,
                        const std::string& path);
Superalgebra<Rational> read_algebra_file(const std::string& path);

// Machine-readable maximality report (claim id, mode, verdict, dims,
// witnesses, seed/prime for replay).
std::string report_to_json(const MaximalityReport& rep,
                           const MaximalityOptions& opt, double seconds);

}  // namespace sj

#endif
