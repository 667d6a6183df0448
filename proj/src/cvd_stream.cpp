#include "gsf/cvd_stream.hpp"

#include <stdexcept>
#include <type_traits>
#include <variant>

#include "gsf/solvers.hpp"

namespace gsf {

void CvdParams::check() const {
  if (k > K || K > n) throw std::invalid_argument("cvd parameters need k <= K <= n");
  if (alpha == 0 || beta == 0) throw std::invalid_argument("cvd parameters need alpha, beta >= 1");
}

namespace {

template <class Sampler>
CvdReport run_with(const Stream& s, const CvdParams& params) {
  BasicSamplerGrid<Sampler> grid(params.grid());
  for (const StreamEvent& ev : s.events) {
    std::visit(
        [&grid](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, EdgeInsert> || std::is_same_v<T, EdgeArrive>) {
            grid.feed(e.u, e.v, +1);
          } else if constexpr (std::is_same_v<T, EdgeDelete>) {
            grid.feed(e.u, e.v, -1);
          }
        },
        ev);
  }
  CvdReport r;
  r.sketch = grid.extract();
  r.extraction_failures = grid.extraction_failures();
  r.sketch_edges = r.sketch.num_edges();
  r.space_words = grid.space_words();
  r.materialized_words = grid.materialized_words();
  Solution sol = solve_cvd(r.sketch, params.k);
  r.yes = sol.yes;
  r.solution = std::move(sol.x);
  return r;
}

}  // namespace

CvdReport run_cvd(const Stream& s, const CvdParams& params) {
  params.check();
  if (s.model != StreamModel::DEA && s.model != StreamModel::EA) {
    throw std::invalid_argument("cvd needs a DEA (or EA) stream");
  }
  if (s.n != params.n) throw std::invalid_argument("stream vertex count differs from params.n");
  require_valid(s);
  return params.exact_samplers ? run_with<ExactSampler>(s, params) : run_with<L0Sampler>(s, params);
}

std::size_t cvd_space_report(const CvdParams& params) { return grid_space(params.grid()).total_words; }

}  // namespace gsf
