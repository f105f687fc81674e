#pragma once

namespace cohann {

/// Deliberate defects for exercising the verification suite.
enum class Fault { None, JacobianOffset };

void inject_fault(Fault f);
Fault active_fault();

}  // namespace cohann
