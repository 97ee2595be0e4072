#pragma once

#include "spherelift/rational.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slift {

enum class Mode { Exact, Float };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

/// A single checked quantity: |value| <= tolerance is a pass. Exact-mode
/// residuals carry the rational value when the quantity lies in Q; the
/// verdict in exact mode is always decided exactly (tolerance 0).
struct ResidualItem {
    std::string label;                 // e.g. "l=3" or "m=2 probe=5"
    double value = 0.0;                // numeric view of the residual
    std::optional<Rational> exact;     // set when the residual is rational
    bool exact_zero = false;           // exact-mode verdict for this item

    [[nodiscard]] bool passes(Mode mode, double tol) const {
        if (mode == Mode::Exact) return exact_zero;
        return std::abs(value) <= tol;
    }
};

/// Machine-readable verdict for one verification criterion.
struct Certificate {
    std::string criterion;
    Mode mode = Mode::Float;
    double tolerance = 0.0;       // 0 in exact mode
    std::vector<int> degrees;     // degrees/orders covered by the items
    std::vector<ResidualItem> items;
    std::vector<ResidualItem> diagnostics;  // informational, never gate
    bool pass = false;
    std::string note;             // optional context for failures

    void finalize() {
        pass = true;
        for (const auto& it : items)
            if (!it.passes(mode, tolerance)) pass = false;
    }

    [[nodiscard]] double max_abs_residual() const {
        double m = 0.0;
        for (const auto& it : items) m = std::max(m, std::abs(it.value));
        return m;
    }
};

inline ResidualItem exact_residual(std::string label, const Rational& r) {
    ResidualItem item;
    item.label = std::move(label);
    item.value = r.to_double();
    item.exact = r;
    item.exact_zero = r.is_zero();
    return item;
}

inline ResidualItem float_residual(std::string label, double v) {
    ResidualItem item;
    item.label = std::move(label);
    item.value = v;
    return item;
}

}  // namespace slift
