#include "dualvar/flag.hpp"

namespace dualvar {

Flag::Flag(const ExactMatrix& basis) : basis_(basis) {
    if (basis.cols() < 3)
        throw invalid_input_error("flag needs at least 3 basis columns (D, L, F prefix)");
    if (basis.cols() > basis.rows())
        throw invalid_input_error("flag dimension exceeds ambient dimension");
    if (rank(basis) != basis.cols())
        throw invalid_input_error("flag basis columns are linearly dependent");
}

Flag Flag::random(std::size_t ambient, std::size_t dim_f, const Field& f, Prng& rng) {
    if (dim_f > ambient)
        throw invalid_input_error("flag dimension exceeds ambient dimension");
    return Flag(random_full_rank_columns(ambient, dim_f, f, rng));
}

} // namespace dualvar
