#include "tfcdr/grid.hpp"

#include "tfcdr/error.hpp"

#include <sstream>

namespace tfcdr {

GridSpec::GridSpec(std::size_t M, std::size_t N, double L1, double T)
    : M_(M), N_(N), L1_(L1), T_(T), h_(L1 / static_cast<double>(M)),
      k_(T / static_cast<double>(N)) {
    if (M < 4) {
        std::ostringstream os;
        os << "five-point stencils need M >= 4 space intervals, got " << M;
        throw ContractError(os.str());
    }
    if (N < 1) throw ContractError("need at least one time step");
    if (!(L1 > 0.0) || !(T > 0.0)) throw ContractError("domain length and final time must be positive");
}

} // namespace tfcdr
