#pragma once

#include <json.hpp>

#include "gkpft/analysis.hpp"
#include "gkpft/ledger.hpp"
#include "gkpft/montecarlo.hpp"
#include "gkpft/quadratic_surd.hpp"
#include "gkpft/variance_vector.hpp"

namespace gkpft {

using Json = nlohmann::ordered_json;

// Exact rendering (p, q as reduced fractions of p + q*sqrt5) next to the
// float value.
inline Json to_json(const QuadraticSurd& s) {
    return Json{{"p", s.rational_part().to_string()},
                {"q", s.surd_part().to_string()},
                {"value", s.to_double()}};
}

inline Json to_json(const VarianceVector& v) {
    return Json{{"x", to_json(v.x_coeff)}, {"y", to_json(v.y_coeff)}};
}

inline Json to_json(const LedgerTrace& t) {
    return Json{{"input", to_json(t.input)},
                {"after_sum_x", to_json(t.after_sum_x)},
                {"peak_x", to_json(t.peak_x)},
                {"after_correct_x", to_json(t.after_correct_x)},
                {"after_sum_y", to_json(t.after_sum_y)},
                {"peak_y", to_json(t.peak_y)},
                {"final", to_json(t.final)}};
}

inline Json to_json(const ThresholdResult& r) {
    return Json{{"gate", gate_kind_name(r.gate_kind)},
                {"target_error", r.target_error},
                {"variance_threshold", r.variance_threshold},
                {"db_threshold", r.db_threshold}};
}

inline Json to_json(const McResult& r) {
    return Json{{"samples", r.samples},
                {"success_count", r.success_count},
                {"p_hat", r.p_hat},
                {"std_err", r.std_err},
                {"analytic_p", r.analytic_p},
                {"four_sigma_pass", mc_verdict_four_sigma(r)}};
}

}  // namespace gkpft
