#include "gsf/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsf {

PipelineReport run_deletion_pipeline(const Stream& al, const FamilySpec& fam, Containment mode, std::size_t K,
                                     std::size_t k) {
  if (k > K) throw std::invalid_argument("pipeline needs k <= K");
  const std::size_t d = std::max<std::size_t>(1, fam.max_degree());
  PipelineReport r;
  r.config = structural_config(std::max(K, d), d);
  r.sketch = run_common_neighbor(al, r.config);
  r.space = cn_space_report(r.sketch, r.config);
  r.solution = mode == Containment::Subgraph ? solve_subgraph_deletion(r.sketch.h, fam, k)
                                             : solve_minor_deletion(r.sketch.h, fam, k);
  return r;
}

}  // namespace gsf
