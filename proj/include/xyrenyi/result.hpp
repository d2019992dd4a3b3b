#ifndef XYRENYI_RESULT_HPP
#define XYRENYI_RESULT_HPP

#include <xyrenyi/elliptic_core.hpp>

#include <string_view>

namespace xyrenyi {

enum class Method {
    ClosedForm,
    Series,
    AsymptoticLargeAlpha,
    AsymptoticSmallAlpha,
    CriticalEstimate,
    XXEstimate,
    Factorizing,
    VonNeumann,
    LandenLadder,
    AlphaInversion,
};

constexpr std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::ClosedForm: return "ClosedForm";
    case Method::Series: return "Series";
    case Method::AsymptoticLargeAlpha: return "AsymptoticLargeAlpha";
    case Method::AsymptoticSmallAlpha: return "AsymptoticSmallAlpha";
    case Method::CriticalEstimate: return "CriticalEstimate";
    case Method::XXEstimate: return "XXEstimate";
    case Method::Factorizing: return "Factorizing";
    case Method::VonNeumann: return "VonNeumann";
    case Method::LandenLadder: return "LandenLadder";
    case Method::AlphaInversion: return "AlphaInversion";
    }
    return "?";
}

/// Entropy value in nats together with how it was obtained.
struct RenyiResult {
    double value = 0.0;
    Method method = Method::ClosedForm;
    double alpha = 1.0;
    PhasePoint point{};
    double tol_attained = 0.0;
};

} // namespace xyrenyi

#endif
