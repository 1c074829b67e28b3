#include "onedep/run_seq.hpp"

#include "onedep/errors.hpp"

namespace onedep {

RunSeq RunSeq::checked(RunKind kind, USeries series) {
    RunSeq r(kind, std::move(series));
    if (auto why = r.violation()) throw ValidationError(std::string(to_string(kind)) + " sequence: " + *why);
    return r;
}

std::optional<std::string> RunSeq::violation() const {
    if (series_[0] != 1) return "coefficient 0 must be 1";
    for (std::size_t n = 1; n <= series_.order(); ++n) {
        const Rational& c = series_[n];
        if (c < 0 || c > 1)
            return "coefficient " + std::to_string(n) + " = " + onedep::to_string(c) + " outside [0, 1]";
        if (c > series_[n - 1])
            return "coefficient " + std::to_string(n) + " exceeds coefficient " + std::to_string(n - 1);
    }
    return std::nullopt;
}

}  // namespace onedep
