#include "prelie/kernels.hpp"
#include "prelie/operad.hpp"

namespace prelie {

namespace {
Exec g_exec = Exec::parallel;
}

Exec default_exec() { return g_exec; }
void set_default_exec(Exec ex) { g_exec = ex; }

IndecSpace::IndecSpace(const LabelSet& labels)
    : labels_(labels), ambient_(0) {
  if (labels.empty()) throw LabelError("IndecSpace needs a nonempty label set");
  ambient_ = ipow(static_cast<long>(labels.size()), static_cast<unsigned>(labels.size() - 1)).get_ui();
  auto images = map_kernel(wedge_basis(labels), [](const Wedge& w) { return delta2(WedgeVector(w)); });
  for (const auto& v : images) image_.insert(v);
}

}  // namespace prelie
