#pragma once

namespace quenchcrit {

/// Sudden-quench increment of the work parameter (gamma for the cavity
/// model, chi for the collective-spin model). The closed-form work laws
/// assume |delta| is small against the work-parameter scale; callers are
/// warned, not blocked, outside that regime.
struct QuenchSpec {
    double delta = 0.0;
};

} // namespace quenchcrit
